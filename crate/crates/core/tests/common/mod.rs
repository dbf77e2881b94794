//! Checks shared by the property tests and the acceptance runner. Each suite
//! returns a [`Tally`] instead of panicking so the runner can report counts.

#![allow(dead_code)]

use irs_power::code::{encode, random_instance, sample_error, MessageVector};
use irs_power::keyeq::{
    build_context, build_pade_problem, structured_solution, true_evaluators, true_locator, verify_key_equations,
};
use irs_power::multiindex::{enumerate_indices, vector_binomial, vector_power};
use irs_power::pade::{
    brute_force_dim, brute_force_minimal, existence_bound_holds, solution_space_dim, solve_minimal, verify_solution,
};
use irs_power::radius::radius_new;
use irs_power::rng::stream;
use irs_power::{decode, CodeSpec, DecodeOutcome, DecoderParams, Field, MultiIndex, PadeProblem, Poly};
use rand::Rng;

#[derive(Clone, Copy, Debug, Default)]
pub struct Tally {
    pub passed: usize,
    pub total: usize,
}

impl Tally {
    pub fn record(&mut self, ok: bool) {
        self.total += 1;
        self.passed += ok as usize;
    }

    pub fn all(&self) -> bool {
        self.total > 0 && self.passed == self.total
    }
}

/// `(q, n, k, m, ell, s)` for the algebraic suites.
pub const SUITE_CODES: [(u32, usize, usize, usize, u32, u32); 3] =
    [(16, 16, 3, 3, 2, 1), (17, 17, 3, 2, 3, 2), (43, 43, 18, 2, 4, 3)];

pub fn code(q: u32, n: usize, k: usize, m: usize) -> CodeSpec {
    CodeSpec::new(Field::with_order(q).unwrap(), n, k, m).unwrap()
}

/// A seeded instance with a random error weight up to the radius.
pub struct Sample {
    pub code: CodeSpec,
    pub ell: u32,
    pub s: u32,
    pub radius: usize,
    pub inst: irs_power::code::Instance,
}

pub fn sample(idx: u64) -> Sample {
    let (q, n, k, m, ell, s) = SUITE_CODES[idx as usize % SUITE_CODES.len()];
    let code = code(q, n, k, m);
    let radius = radius_new(n, k, m, ell, s).unwrap() as usize;
    let mut rng = stream(0x5eed_0000 + idx);
    let eps = rng.random_range(0..=radius);
    let inst = random_instance(&code, eps, &mut rng).unwrap();
    Sample {
        code,
        ell,
        s,
        radius,
        inst,
    }
}

pub fn key_equations(count: u64) -> Tally {
    let mut t = Tally::default();
    for idx in 0..count {
        let sm = sample(idx);
        let ctx = build_context(&sm.inst.received, &sm.code, sm.ell, sm.s, sm.radius).unwrap();
        let lambda = true_locator(&sm.inst.error, &sm.code);
        let ok = true_evaluators(&ctx, &sm.inst.message, &lambda)
            .map(|omega| verify_key_equations(&lambda, &sm.inst.message, &omega, &ctx))
            .unwrap_or(false);
        t.record(ok);
    }
    t
}

pub fn vanishing_divides(count: u64) -> Tally {
    let mut t = Tally::default();
    for idx in 0..count {
        let sm = sample(idx);
        let f = sm.code.field();
        let ctx = build_context(&sm.inst.received, &sm.code, sm.ell, sm.s, sm.radius).unwrap();
        let lambda = true_locator(&sm.inst.error, &sm.code);
        let ok = sm.inst.message.polys.iter().zip(ctx.interpolants()).all(|(ft, rt)| {
            lambda
                .mul(&ft.sub(rt, f), f)
                .rem(ctx.vanishing(), f)
                .unwrap()
                .is_zero()
        });
        t.record(ok);
    }
    t
}

pub fn evaluator_degrees(count: u64) -> Tally {
    let mut t = Tally::default();
    for idx in 0..count {
        let sm = sample(idx);
        let ctx = build_context(&sm.inst.received, &sm.code, sm.ell, sm.s, sm.radius).unwrap();
        let lambda = true_locator(&sm.inst.error, &sm.code);
        let weight = lambda.degree().unwrap();
        let ok = true_evaluators(&ctx, &sm.inst.message, &lambda)
            .map(|omega| omega.iter().all(|o| o.degree_below(weight)))
            .unwrap_or(false);
        t.record(ok);
    }
    t
}

pub fn structured_solutions(count: u64) -> Tally {
    let mut t = Tally::default();
    for idx in 0..count {
        let sm = sample(idx);
        let lambda = true_locator(&sm.inst.error, &sm.code);
        let tau = lambda.degree().unwrap();
        let ctx = build_context(&sm.inst.received, &sm.code, sm.ell, sm.s, tau).unwrap();
        let problem = build_pade_problem(&ctx);
        let ok = true_evaluators(&ctx, &sm.inst.message, &lambda)
            .map(|omega| {
                let sol = structured_solution(&problem, &ctx, &lambda, &sm.inst.message, &omega);
                verify_solution(&problem, &sol)
            })
            .unwrap_or(false);
        t.record(ok);
    }
    t
}

/// Returns the tally and how many instances met the existence bound.
pub fn existence_implies_dimension(count: u64) -> (Tally, usize) {
    let mut t = Tally::default();
    let mut triggered = 0;
    for idx in 0..count {
        let sm = sample(idx);
        // push tau past the radius on most instances so the bound can fire
        let tau = sm.radius + (idx % 4) as usize;
        let ctx = build_context(&sm.inst.received, &sm.code, sm.ell, sm.s, tau).unwrap();
        let problem = build_pade_problem(&ctx);
        if existence_bound_holds(&problem) {
            triggered += 1;
            t.record(solution_space_dim(&problem) >= 2);
        } else {
            t.record(true);
        }
    }
    (t, triggered)
}

fn random_poly(f: &Field, max_len: usize, rng: &mut impl Rng) -> Poly {
    let len = rng.random_range(0..=max_len);
    Poly::from_coeffs((0..len).map(|_| rng.random_range(0..f.order())).collect())
}

pub fn binomial_theorem(count: u64) -> Tally {
    let fields: Vec<Field> = [2, 16, 17, 43].into_iter().map(|q| Field::with_order(q).unwrap()).collect();
    let mut t = Tally::default();
    for idx in 0..count {
        let mut rng = stream(0xb1_0000 + idx);
        let f = &fields[idx as usize % fields.len()];
        let m = rng.random_range(1..=3);
        let a: Vec<Poly> = (0..m).map(|_| random_poly(f, 4, &mut rng)).collect();
        let b: Vec<Poly> = (0..m).map(|_| random_poly(f, 4, &mut rng)).collect();
        let j = MultiIndex::from((0..m).map(|_| rng.random_range(0..=3)).collect::<Vec<u32>>());
        let sum: Vec<Poly> = a.iter().zip(&b).map(|(x, y)| x.add(y, f)).collect();
        let lhs = vector_power(&sum, &j, None, f);
        let mut rhs = Poly::zero();
        for i in enumerate_indices(m, j.size(), false) {
            let Some(diff) = j.checked_sub(&i) else { continue };
            let term = vector_power(&a, &i, None, f)
                .mul(&vector_power(&b, &diff, None, f), f)
                .scale(vector_binomial(&j, &i, f), f);
            rhs = rhs.add(&term, f);
        }
        t.record(lhs == rhs);
    }
    t
}

/// A random Padé problem small enough for exhaustive search.
pub fn tiny_problem(idx: u64) -> PadeProblem {
    let mut rng = stream(0x7a_0000 + idx);
    let f = Field::prime(if idx % 2 == 0 { 2 } else { 3 }).unwrap();
    let budget = if f.order() == 2 { 14 } else { 9 };
    let rows = rng.random_range(1..=3usize);
    let cols = rng.random_range(1..=3usize);
    let leader = rng.random_range(0..rows);
    let mut lambda_bounds: Vec<usize> = (0..rows).map(|_| rng.random_range(0..=4)).collect();
    lambda_bounds[leader] = lambda_bounds[leader].max(1);
    while lambda_bounds.iter().sum::<usize>() > budget {
        let r = lambda_bounds.iter().enumerate().max_by_key(|(_, &v)| v).unwrap().0;
        lambda_bounds[r] -= 1;
    }
    lambda_bounds[leader] = lambda_bounds[leader].max(1);
    let mut moduli = Vec::new();
    let mut psi_bounds = Vec::new();
    for _ in 0..cols {
        let d = rng.random_range(1..=5usize);
        let g = if rng.random_bool(0.5) {
            Poly::monomial(d)
        } else {
            let mut c: Vec<u32> = (0..d).map(|_| rng.random_range(0..f.order())).collect();
            c.push(1);
            Poly::from_coeffs(c)
        };
        moduli.push(g);
        psi_bounds.push(rng.random_range(0..=d));
    }
    let inputs = (0..rows)
        .map(|_| {
            moduli
                .iter()
                .map(|g| random_poly(&f, g.degree().unwrap(), &mut rng))
                .collect()
        })
        .collect();
    let idx_of = |k: usize| MultiIndex::from(vec![k as u32]);
    PadeProblem::new(
        f,
        (0..rows).map(idx_of).collect(),
        (0..cols).map(idx_of).collect(),
        inputs,
        moduli,
        lambda_bounds,
        psi_bounds,
        leader,
    )
    .unwrap()
}

/// Solver against exhaustive search: verdict, leader degree, validity and
/// solution-space dimension. Returns the tally and the number of `None`
/// verdicts seen.
pub fn oracle_equivalence(count: u64) -> (Tally, usize) {
    let mut t = Tally::default();
    let mut nones = 0;
    for idx in 0..count {
        let p = tiny_problem(idx);
        let fast = solve_minimal(&p);
        let slow = brute_force_minimal(&p).unwrap();
        let leader_deg = |s: &Option<irs_power::PadeSolution>| s.as_ref().map(|s| s.lambda[p.leader()].degree());
        let mut ok = leader_deg(&fast) == leader_deg(&slow);
        if let Some(sol) = &fast {
            ok &= verify_solution(&p, sol);
            ok &= sol.lambda[p.leader()].leading() == Some(1);
        }
        ok &= solution_space_dim(&p) == brute_force_dim(&p).unwrap();
        nones += fast.is_none() as usize;
        t.record(ok);
    }
    (t, nones)
}

/// Rebuilds `p` with row `i` of the inputs multiplied by `scales[i]`.
pub fn scale_rows(p: &PadeProblem, scales: &[u32]) -> PadeProblem {
    let f = p.field();
    let inputs = (0..p.row_indices().len())
        .map(|i| {
            (0..p.col_indices().len())
                .map(|j| p.input(i, j).scale(scales[i], f))
                .collect()
        })
        .collect();
    PadeProblem::new(
        f.clone(),
        p.row_indices().to_vec(),
        p.col_indices().to_vec(),
        inputs,
        p.moduli().to_vec(),
        p.lambda_bounds().to_vec(),
        p.psi_bounds().to_vec(),
        p.leader(),
    )
    .unwrap()
}

pub fn scaling_invariance(count: u64) -> Tally {
    let mut t = Tally::default();
    for idx in 0..count {
        let p = if idx % 2 == 0 {
            tiny_problem(idx)
        } else {
            let sm = sample(idx);
            let ctx = build_context(&sm.inst.received, &sm.code, sm.ell, sm.s, sm.radius).unwrap();
            build_pade_problem(&ctx)
        };
        let mut rng = stream(0x5ca1e + idx);
        let q = p.field().order();
        let scales: Vec<u32> = (0..p.row_indices().len()).map(|_| rng.random_range(1..q)).collect();
        let deg = |p: &PadeProblem| solve_minimal(p).map(|s| s.lambda[p.leader()].degree());
        t.record(deg(&p) == deg(&scale_rows(&p, &scales)));
    }
    t
}

/// Code and parameters for the paired-decode check; about 40% of decodes
/// fail at this weight, so both verdicts are exercised.
pub const PAIRED: (u32, usize, usize, usize, u32, u32, usize) = (7, 7, 2, 2, 3, 2, 4);

/// Same error, two independent codewords. Returns the tally and the number
/// of pairs where both decodes failed.
pub fn failure_independence(count: u64) -> (Tally, usize) {
    let (q, n, k, m, ell, s, eps) = PAIRED;
    let c = code(q, n, k, m);
    let params = DecoderParams::new(&c, ell, s).unwrap();
    let f = c.field();
    let mut t = Tally::default();
    let mut both_failed = 0;
    for idx in 0..count {
        let mut rng = stream(0xfa11_0000 + idx);
        let e = sample_error(&c, eps, &mut rng).unwrap();
        let outcome = |rng: &mut irs_power::rng::TrialRng| {
            let cw = encode(&MessageVector::random(&c, rng), &c).unwrap();
            let r = cw.add(&e, f).unwrap();
            (cw, decode(&r, &c, &params).unwrap())
        };
        let (c1, o1) = outcome(&mut rng);
        let (c2, o2) = outcome(&mut rng);
        let ok = match (&o1, &o2) {
            (DecodeOutcome::Success { codeword: a, .. }, DecodeOutcome::Success { codeword: b, .. }) => {
                *a == c1 && *b == c2
            }
            (DecodeOutcome::Fail(_), DecodeOutcome::Fail(_)) => {
                both_failed += 1;
                true
            }
            _ => false,
        };
        t.record(ok);
    }
    (t, both_failed)
}
