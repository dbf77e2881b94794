//! Powered key equations for interleaved RS decoding.
//!
//! From a received word `r` we interpolate `R_t` through row `t` and form the
//! vanishing polynomial `G` of the evaluation points. For the error locator
//! `Lambda`, the message `f` and the error evaluators
//! `Omega = Lambda (f - R) / G`, every `j` with `1 <= |j| <= ell` satisfies
//!
//! ```text
//! Lambda^s f^j = sum_{i <= j} Lambda^{s-|i|} Omega^i * binom(j,i) R^{j-i} G^{|i|}
//! ```
//!
//! exactly when `|j| < s`, and modulo `G^s` (summing over `|i| < s`) when
//! `|j| >= s`. Relaxing the unknown products to independent polynomials
//! `lambda_i`, `psi_j` yields the Padé problem built by [`build_pade_problem`].

use crate::code::{CodeSpec, MessageVector, WordMatrix};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::multiindex::{enumerate_indices, vector_binomial, vector_power, MultiIndex};
use crate::pade::{PadeProblem, PadeSolution};
use crate::poly::{lagrange_interpolate, vanishing_poly, Poly};

#[derive(Clone, Debug)]
pub struct KeyEqContext {
    code: CodeSpec,
    interpolants: Vec<Poly>,
    g: Poly,
    g_pow_s: Poly,
    ell: u32,
    s: u32,
    tau: usize,
}

pub fn build_context(r: &WordMatrix, code: &CodeSpec, ell: u32, s: u32, tau: usize) -> Result<KeyEqContext> {
    if s == 0 || s > ell {
        return Err(Error::InvalidParams(format!("need 1 <= s <= ell, got s={s}, ell={ell}")));
    }
    r.check_shape(code)?;
    let f = code.field();
    let interpolants = (0..code.m())
        .map(|t| lagrange_interpolate(code.alphas(), r.row(t), f))
        .collect::<Result<Vec<_>>>()?;
    let g = vanishing_poly(code.alphas(), f)?;
    let g_pow_s = g.pow(s, f);
    Ok(KeyEqContext {
        code: code.clone(),
        interpolants,
        g,
        g_pow_s,
        ell,
        s,
        tau,
    })
}

impl KeyEqContext {
    pub fn code(&self) -> &CodeSpec {
        &self.code
    }

    fn field(&self) -> &Field {
        self.code.field()
    }

    /// `R = (R_1, ..., R_m)`.
    pub fn interpolants(&self) -> &[Poly] {
        &self.interpolants
    }

    /// `G = prod (x - alpha_i)`.
    pub fn vanishing(&self) -> &Poly {
        &self.g
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    /// Exponent of the power-of-x modulus used for `|j| < s`.
    pub fn low_modulus_degree(&self, j_size: u32) -> usize {
        self.tau * self.s as usize + j_size as usize * (self.code.n() - 1) + 1
    }

    fn reduce_for(&self, j_size: u32, p: Poly) -> Poly {
        if j_size >= self.s {
            p.rem(&self.g_pow_s, self.field()).expect("nonzero modulus")
        } else {
            p.truncate(self.low_modulus_degree(j_size))
        }
    }

    /// The modulus `G_j` of the Padé problem.
    pub fn modulus_for(&self, j_size: u32) -> Poly {
        if j_size >= self.s {
            self.g_pow_s.clone()
        } else {
            Poly::monomial(self.low_modulus_degree(j_size))
        }
    }
}

/// `Lambda = prod_{c in E} (x - alpha_c)`. Test oracle only.
pub fn true_locator(e: &WordMatrix, code: &CodeSpec) -> Poly {
    let f = code.field();
    e.nonzero_columns()
        .into_iter()
        .fold(Poly::one(), |acc, c| acc.mul(&Poly::linear_root(code.alphas()[c], f), f))
}

/// `Omega_t = Lambda (f_t - R_t) / G`, each division exact.
pub fn true_evaluators(ctx: &KeyEqContext, msg: &MessageVector, lambda: &Poly) -> Result<Vec<Poly>> {
    let f = ctx.field();
    msg.polys
        .iter()
        .zip(&ctx.interpolants)
        .map(|(ft, rt)| lambda.mul(&ft.sub(rt, f), f).exact_div(&ctx.g, f))
        .collect()
}

/// `A_{i,j} = binom(j,i) R^{j-i} G^{|i|}`, reduced modulo `G^s` when
/// `|j| >= s` and modulo `x^(tau s + |j|(n-1) + 1)` otherwise.
pub fn coefficient_a(i: &MultiIndex, j: &MultiIndex, ctx: &KeyEqContext) -> Result<Poly> {
    let diff = j.checked_sub(i).ok_or_else(|| Error::NotDominated {
        i: i.entries().to_vec(),
        j: j.entries().to_vec(),
    })?;
    let f = ctx.field();
    let b = vector_binomial(j, i, f);
    if b == 0 {
        return Ok(Poly::zero());
    }
    let modulus = (j.size() >= ctx.s).then_some(&ctx.g_pow_s);
    let r_pow = vector_power(&ctx.interpolants, &diff, modulus, f);
    let prod = r_pow.mul(&ctx.g.pow(i.size(), f), f).scale(b, f);
    Ok(ctx.reduce_for(j.size(), prod))
}

/// Powers `R^h mod G^s` for every `|h| <= ell`, in graded order, each
/// obtained from an earlier one by a single multiplication.
fn interpolant_powers(ctx: &KeyEqContext, all: &[MultiIndex]) -> Vec<Poly> {
    let f = ctx.field();
    let mut out: Vec<Poly> = Vec::with_capacity(all.len());
    for h in all {
        if h.size() == 0 {
            out.push(Poly::one());
            continue;
        }
        let t = h.entries().iter().position(|&v| v > 0).unwrap();
        let mut prev = h.entries().to_vec();
        prev[t] -= 1;
        let prev = MultiIndex::from(prev);
        let at = all.iter().position(|x| *x == prev).expect("graded order");
        let p = out[at]
            .mul(&ctx.interpolants[t], f)
            .rem(&ctx.g_pow_s, f)
            .expect("nonzero modulus");
        out.push(p);
    }
    out
}

/// Builds the Padé problem: rows `|i| < s`, columns `1 <= |j| <= ell`,
/// leader the zero index.
///
/// The `j = 0` column is left out; its congruence `lambda_0 = psi_0 mod x^(tau s + 1)`
/// with `T_0 = tau s + 1` imposes nothing. When `tau s + |j|(k-1) + 1`
/// exceeds `deg G_j`, `T_j` is capped at `deg G_j`: every remainder already
/// has degree below it, so the set of `lambda` solutions is unchanged.
pub fn build_pade_problem(ctx: &KeyEqContext) -> PadeProblem {
    let m = ctx.code.m();
    let f = ctx.field();
    let all = enumerate_indices(m, ctx.ell, false);
    let powers = interpolant_powers(ctx, &all);
    let rows = enumerate_indices(m, ctx.s, true);
    let cols: Vec<MultiIndex> = all.iter().filter(|j| j.size() >= 1).cloned().collect();
    let g_pows: Vec<Poly> = (0..ctx.s).map(|e| ctx.g.pow(e, f)).collect();
    let position = |h: &MultiIndex| all.iter().position(|x| x == h).expect("enumerated");

    let ts = ctx.tau * ctx.s as usize;
    let k = ctx.code.k();
    let moduli: Vec<Poly> = cols.iter().map(|j| ctx.modulus_for(j.size())).collect();
    let psi_bounds = cols
        .iter()
        .zip(&moduli)
        .map(|(j, g)| (ts + j.size() as usize * (k - 1) + 1).min(g.len() - 1))
        .collect();
    let lambda_bounds = rows
        .iter()
        .map(|i| (ts + 1).saturating_sub(i.size() as usize))
        .collect();

    let inputs = rows
        .iter()
        .map(|i| {
            cols.iter()
                .map(|j| match j.checked_sub(i) {
                    None => Poly::zero(),
                    Some(diff) => {
                        let b = vector_binomial(j, i, f);
                        if b == 0 {
                            return Poly::zero();
                        }
                        let prod = powers[position(&diff)]
                            .mul(&g_pows[i.size() as usize], f)
                            .scale(b, f);
                        ctx.reduce_for(j.size(), prod)
                    }
                })
                .collect()
        })
        .collect();

    PadeProblem::new(
        f.clone(),
        rows,
        cols,
        inputs,
        moduli,
        lambda_bounds,
        psi_bounds,
        0,
    )
    .expect("key equation problems are well formed")
}

/// The structured solution `Lambda_i = Lambda^{s-|i|} Omega^i`,
/// `Psi_j = Lambda^s f^j` (reduced modulo `G_j`).
pub fn structured_solution(
    problem: &PadeProblem,
    ctx: &KeyEqContext,
    lambda: &Poly,
    msg: &MessageVector,
    omega: &[Poly],
) -> PadeSolution {
    let f = ctx.field();
    let lam = problem
        .row_indices()
        .iter()
        .map(|i| lambda.pow(ctx.s - i.size(), f).mul(&vector_power(omega, i, None, f), f))
        .collect();
    let psi = problem
        .col_indices()
        .iter()
        .zip(problem.moduli())
        .map(|(j, g)| {
            lambda
                .pow(ctx.s, f)
                .mul(&vector_power(&msg.polys, j, None, f), f)
                .rem(g, f)
                .expect("nonzero modulus")
        })
        .collect();
    PadeSolution { lambda: lam, psi }
}

/// Checks every key equation with exact, unreduced arithmetic.
pub fn verify_key_equations(lambda: &Poly, msg: &MessageVector, omega: &[Poly], ctx: &KeyEqContext) -> bool {
    let f = ctx.field();
    let m = ctx.code.m();
    let s = ctx.s;
    for j in enumerate_indices(m, ctx.ell, false).into_iter().filter(|j| j.size() >= 1) {
        let lhs = lambda.pow(s, f).mul(&vector_power(&msg.polys, &j, None, f), f);
        let mut rhs = Poly::zero();
        for i in enumerate_indices(m, j.size(), false) {
            let Some(diff) = j.checked_sub(&i) else { continue };
            if i.size() >= s {
                continue;
            }
            let term = lambda
                .pow(s - i.size(), f)
                .mul(&vector_power(omega, &i, None, f), f)
                .mul(&vector_power(&ctx.interpolants, &diff, None, f), f)
                .mul(&ctx.g.pow(i.size(), f), f)
                .scale(vector_binomial(&j, &i, f), f);
            rhs = rhs.add(&term, f);
        }
        let holds = if j.size() < s {
            lhs == rhs
        } else {
            lhs.sub(&rhs, f).rem(&ctx.g_pow_s, f).expect("nonzero").is_zero()
        };
        if !holds {
            return false;
        }
    }
    true
}
