//! Simultaneous Hermite Padé approximation.
//!
//! Given inputs `S[i][j]`, moduli `G[j]` and degree bounds `N[i]`, `T[j]`,
//! find polynomials `lambda[i]` with `deg lambda[i] < N[i]` such that every
//! `psi[j] := sum_i lambda[i] * S[i][j] mod G[j]` has `deg psi[j] < T[j]`.
//!
//! The solver linearises the problem over the base field. The unknowns are
//! the coefficients of all `lambda[i]`, ordered with the leader's
//! coefficients last and ascending in degree; the constraints say that the
//! coefficients of `x^T[j] .. x^(deg G[j] - 1)` in each remainder vanish.
//! With that column order, forward elimination finds the smallest degree `d`
//! at which the leader's coefficient column is free, and the kernel vector
//! with that column set to one (all other free columns and all later columns
//! zero) is a minimal solution with monic leader.
//!
//! The decoder uses [`solve_shifted_minimal`], which repeats that search on
//! uniformly tightened bounds to find the solution with the most room under
//! every bound at once.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::linalg::Matrix;
use crate::multiindex::MultiIndex;
use crate::poly::Poly;

/// Exhaustive search refuses more candidates than this.
pub const BRUTE_FORCE_LIMIT: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeProblem {
    field: Field,
    rows: Vec<MultiIndex>,
    cols: Vec<MultiIndex>,
    inputs: Vec<Vec<Poly>>,
    moduli: Vec<Poly>,
    lambda_bounds: Vec<usize>,
    psi_bounds: Vec<usize>,
    leader: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeSolution {
    pub lambda: Vec<Poly>,
    pub psi: Vec<Poly>,
}

impl PadeSolution {
    pub fn is_zero(&self) -> bool {
        self.lambda.iter().chain(&self.psi).all(Poly::is_zero)
    }
}

impl PadeProblem {
    /// Validates and builds a problem. `inputs[i][j]` is `S_{i,j}`; use the
    /// zero polynomial for absent pairs.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: Field,
        rows: Vec<MultiIndex>,
        cols: Vec<MultiIndex>,
        inputs: Vec<Vec<Poly>>,
        moduli: Vec<Poly>,
        lambda_bounds: Vec<usize>,
        psi_bounds: Vec<usize>,
        leader: usize,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidProblem(msg));
        if rows.is_empty() {
            return bad("empty row index set".into());
        }
        if leader >= rows.len() {
            return bad(format!("leader {leader} outside the row index set"));
        }
        if inputs.len() != rows.len() || lambda_bounds.len() != rows.len() {
            return bad("row data does not match the row index set".into());
        }
        if moduli.len() != cols.len() || psi_bounds.len() != cols.len() {
            return bad("column data does not match the column index set".into());
        }
        for (j, g) in moduli.iter().enumerate() {
            let Some(dg) = g.degree() else {
                return bad(format!("modulus {j} is zero"));
            };
            if psi_bounds[j] > dg {
                return bad(format!("T[{j}] = {} exceeds deg G[{j}] = {dg}", psi_bounds[j]));
            }
        }
        for (i, row) in inputs.iter().enumerate() {
            if row.len() != cols.len() {
                return bad(format!("input row {i} has {} entries", row.len()));
            }
            for (j, s) in row.iter().enumerate() {
                if s.coeffs().iter().any(|&c| !field.contains(c as u64)) {
                    return bad(format!("S[{i}][{j}] has coefficients outside the field"));
                }
                if !s.degree_below(moduli[j].len() - 1) {
                    return bad(format!("deg S[{i}][{j}] is not below deg G[{j}]"));
                }
            }
        }
        Ok(PadeProblem {
            field,
            rows,
            cols,
            inputs,
            moduli,
            lambda_bounds,
            psi_bounds,
            leader,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn row_indices(&self) -> &[MultiIndex] {
        &self.rows
    }

    pub fn col_indices(&self) -> &[MultiIndex] {
        &self.cols
    }

    pub fn input(&self, i: usize, j: usize) -> &Poly {
        &self.inputs[i][j]
    }

    pub fn moduli(&self) -> &[Poly] {
        &self.moduli
    }

    pub fn lambda_bounds(&self) -> &[usize] {
        &self.lambda_bounds
    }

    pub fn psi_bounds(&self) -> &[usize] {
        &self.psi_bounds
    }

    pub fn leader(&self) -> usize {
        self.leader
    }

    fn modulus_degree(&self, j: usize) -> usize {
        self.moduli[j].len() - 1
    }

    /// Number of scalar unknowns, `sum N_i`.
    pub fn unknowns(&self) -> usize {
        self.lambda_bounds.iter().sum()
    }

    /// Number of scalar constraints, `sum (deg G_j - T_j)`.
    pub fn constraints(&self) -> usize {
        (0..self.cols.len())
            .map(|j| self.modulus_degree(j) - self.psi_bounds[j])
            .sum()
    }

    /// `sum_i lambda_i S_{i,j} mod G_j`.
    pub fn remainder(&self, lambda: &[Poly], j: usize) -> Poly {
        let f = &self.field;
        let sum = lambda
            .iter()
            .zip(&self.inputs)
            .fold(Poly::zero(), |acc, (l, row)| acc.add(&l.mul(&row[j], f), f));
        sum.rem(&self.moduli[j], f).expect("nonzero modulus")
    }

    /// Column of the coefficient of `x^d` in `lambda_i`, leader block last.
    fn column_of(&self, i: usize, d: usize) -> usize {
        let mut offset = 0;
        for (r, &nb) in self.lambda_bounds.iter().enumerate() {
            if r != self.leader {
                if r == i {
                    return offset + d;
                }
                offset += nb;
            }
        }
        offset + d
    }

    fn leader_offset(&self) -> usize {
        self.unknowns() - self.lambda_bounds[self.leader]
    }

    /// The homogeneous system whose kernel is the set of solutions.
    pub fn constraint_matrix(&self) -> Matrix {
        let f = &self.field;
        let mut mat = Matrix::zeros(self.constraints(), self.unknowns());
        let mut row0 = 0;
        for j in 0..self.cols.len() {
            let dg = self.modulus_degree(j);
            let t = self.psi_bounds[j];
            let g = &self.moduli[j];
            let power_of_x = g.coeffs()[..dg].iter().all(|&c| c == 0);
            for (i, row) in self.inputs.iter().enumerate() {
                let s = &row[j];
                if s.is_zero() {
                    continue;
                }
                if power_of_x {
                    // coefficient of x^r in x^d * S is S[r - d]
                    for d in 0..self.lambda_bounds[i] {
                        let col = self.column_of(i, d);
                        for r in t.max(d)..dg {
                            let v = s.coeff(r - d);
                            if v != 0 {
                                mat.set(row0 + r - t, col, v);
                            }
                        }
                    }
                } else {
                    let g_monic = g.monic(f);
                    let mut cur = vec![0u32; dg];
                    cur[..s.len()].copy_from_slice(s.coeffs());
                    for d in 0..self.lambda_bounds[i] {
                        if d > 0 {
                            // cur <- x * cur mod G
                            let top = cur[dg - 1];
                            cur.rotate_right(1);
                            cur[0] = 0;
                            if top != 0 {
                                for (k, c) in cur.iter_mut().enumerate() {
                                    *c = f.sub(*c, f.mul(top, g_monic.coeff(k)));
                                }
                            }
                        }
                        let col = self.column_of(i, d);
                        for r in t..dg {
                            if cur[r] != 0 {
                                mat.set(row0 + r - t, col, cur[r]);
                            }
                        }
                    }
                }
            }
            row0 += dg - t;
        }
        mat
    }

    fn solution_from_vector(&self, x: &[u32]) -> PadeSolution {
        let lambda: Vec<Poly> = (0..self.rows.len())
            .map(|i| {
                let start = self.column_of(i, 0);
                Poly::from_coeffs(x[start..start + self.lambda_bounds[i]].to_vec())
            })
            .collect();
        let psi = (0..self.cols.len()).map(|j| self.remainder(&lambda, j)).collect();
        PadeSolution { lambda, psi }
    }

    /// Flattens the lambda part of a candidate into the solver's unknown order.
    pub fn coefficient_vector(&self, lambda: &[Poly]) -> Option<Vec<u32>> {
        let mut x = vec![0u32; self.unknowns()];
        for (i, l) in lambda.iter().enumerate() {
            if !l.degree_below(self.lambda_bounds[i]) {
                return None;
            }
            let start = self.column_of(i, 0);
            x[start..start + l.len()].copy_from_slice(l.coeffs());
        }
        Some(x)
    }
}

/// True iff the candidate meets every degree bound and congruence and is not
/// identically zero.
pub fn verify_solution(p: &PadeProblem, cand: &PadeSolution) -> bool {
    let f = p.field();
    if cand.lambda.len() != p.rows.len() || cand.psi.len() != p.cols.len() {
        return false;
    }
    if cand.is_zero() {
        return false;
    }
    let lambda_ok = cand
        .lambda
        .iter()
        .zip(&p.lambda_bounds)
        .all(|(l, &nb)| l.degree_below(nb));
    let psi_ok = cand
        .psi
        .iter()
        .zip(&p.psi_bounds)
        .all(|(s, &tb)| s.degree_below(tb));
    if !lambda_ok || !psi_ok {
        return false;
    }
    (0..p.cols.len()).all(|j| {
        let lhs = p.remainder(&cand.lambda, j);
        let rhs = cand.psi[j].rem(&p.moduli[j], f).expect("nonzero modulus");
        lhs == rhs
    })
}

/// A solution with nonzero, monic leader of minimal degree, or `None` when
/// every solution has a zero leader. Free variables other than the leader's
/// are set to zero.
pub fn solve_minimal(p: &PadeProblem) -> Option<PadeSolution> {
    solve_first_free(p)
}

/// Minimal solution in the shifted sense: the largest uniform slack `sigma`
/// such that some solution with nonzero leader meets every bound lowered by
/// `sigma`, then the monic leader of least degree under those bounds.
///
/// This is the solution an order-basis solver returns as the leader's pivot
/// row. It differs from [`solve_minimal`] when a solution with a smaller
/// leader crowds some other bound. Bounds equal to `deg G_j` never
/// constrain and are left alone.
pub fn solve_shifted_minimal(p: &PadeProblem) -> Option<PadeSolution> {
    let first = solve_first_free(p)?;
    let d = first.lambda[p.leader].degree().expect("nonzero leader");
    let mut lo = p.slack(&first);
    let mut hi = p.lambda_bounds[p.leader] - 1 - d;
    let mut best = first;
    if lo < hi {
        if let Some(sol) = solve_first_free(&p.tightened(lo)) {
            best = sol;
        }
    }
    // invariant: `lo` is feasible and `best` solves the problem tightened by `lo`
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match solve_first_free(&p.tightened(mid)) {
            Some(sol) => {
                lo = mid;
                best = sol;
            }
            None => hi = mid - 1,
        }
    }
    let psi = (0..p.cols.len()).map(|j| p.remainder(&best.lambda, j)).collect();
    Some(PadeSolution {
        lambda: best.lambda,
        psi,
    })
}

impl PadeProblem {
    fn constrains(&self, j: usize) -> bool {
        self.psi_bounds[j] < self.modulus_degree(j)
    }

    /// Every bound lowered by `slack`, except bounds that never constrain.
    fn tightened(&self, slack: usize) -> PadeProblem {
        let mut t = self.clone();
        for nb in &mut t.lambda_bounds {
            *nb = nb.saturating_sub(slack);
        }
        for j in 0..self.cols.len() {
            if self.constrains(j) {
                t.psi_bounds[j] = self.psi_bounds[j].saturating_sub(slack);
            }
        }
        t
    }

    /// Largest `sigma` with `sol` still within the bounds lowered by `sigma`.
    fn slack(&self, sol: &PadeSolution) -> usize {
        let lam = sol.lambda.iter().zip(&self.lambda_bounds).map(|(l, &b)| b - l.len());
        let psi = (0..self.cols.len())
            .filter(|&j| self.constrains(j))
            .map(|j| self.psi_bounds[j] - sol.psi[j].len());
        lam.chain(psi).min().expect("nonempty row set")
    }
}

/// Minimal solution with every free variable other than the leader's zero.
fn solve_first_free(p: &PadeProblem) -> Option<PadeSolution> {
    let f = p.field();
    let mut mat = p.constraint_matrix();
    let ech = mat.eliminate(f, p.leader_offset());
    let free = ech.free?;
    let x = mat.back_substitute(&ech, free, f);
    Some(p.solution_from_vector(&x))
}

/// Dimension of the solution space (all-zero solution included).
pub fn solution_space_dim(p: &PadeProblem) -> usize {
    p.unknowns() - p.constraint_matrix().rank(p.field())
}

/// `sum N_i > 1 + sum (deg G_j - T_j)`.
pub fn existence_bound_holds(p: &PadeProblem) -> bool {
    p.unknowns() > 1 + p.constraints()
}

fn for_each_assignment(p: &PadeProblem, mut visit: impl FnMut(&[Poly])) -> Result<()> {
    let q = p.field().order() as u64;
    let total = (q as u128)
        .checked_pow(p.unknowns() as u32)
        .unwrap_or(u128::MAX);
    if total > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(total));
    }
    let n = p.unknowns();
    let mut digits = vec![0u32; n];
    loop {
        let mut lambda = Vec::with_capacity(p.rows.len());
        let mut pos = 0;
        for &nb in &p.lambda_bounds {
            lambda.push(Poly::from_coeffs(digits[pos..pos + nb].to_vec()));
            pos += nb;
        }
        visit(&lambda);
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                return Ok(());
            }
            digits[k] += 1;
            if digits[k] as u64 == q {
                digits[k] = 0;
                k += 1;
            } else {
                break;
            }
        }
    }
}

fn accepted(p: &PadeProblem, lambda: &[Poly]) -> Option<Vec<Poly>> {
    let psi: Vec<Poly> = (0..p.cols.len()).map(|j| p.remainder(lambda, j)).collect();
    psi.iter()
        .zip(&p.psi_bounds)
        .all(|(s, &tb)| s.degree_below(tb))
        .then_some(psi)
}

/// Exhaustive minimal solution over all `q^(sum N_i)` coefficient choices.
/// Test oracle; independent of the linearised solver.
pub fn brute_force_minimal(p: &PadeProblem) -> Result<Option<PadeSolution>> {
    let f = p.field().clone();
    let mut best: Option<PadeSolution> = None;
    for_each_assignment(p, |lambda| {
        let Some(d) = lambda[p.leader].degree() else {
            return;
        };
        if best
            .as_ref()
            .is_some_and(|b| b.lambda[p.leader].degree().unwrap() <= d)
        {
            return;
        }
        if let Some(psi) = accepted(p, lambda) {
            let scale = f.inv(lambda[p.leader].leading().unwrap()).unwrap();
            best = Some(PadeSolution {
                lambda: lambda.iter().map(|l| l.scale(scale, &f)).collect(),
                psi: psi.iter().map(|s| s.scale(scale, &f)).collect(),
            });
        }
    })?;
    Ok(best)
}

/// Exhaustive count of solutions (zero included), as a power of `q`.
pub fn brute_force_dim(p: &PadeProblem) -> Result<usize> {
    let mut count = 0u64;
    for_each_assignment(p, |lambda| {
        if accepted(p, lambda).is_some() {
            count += 1;
        }
    })?;
    let q = p.field().order() as u64;
    let mut dim = 0;
    while count > 1 {
        assert_eq!(count % q, 0, "solution count is a power of q");
        count /= q;
        dim += 1;
    }
    Ok(dim)
}

/// Field description inside problem files.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldFile {
    pub p: u32,
    #[serde(default = "default_degree")]
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn default_degree() -> u32 {
    1
}

impl FieldFile {
    pub fn of(f: &Field) -> Self {
        FieldFile {
            p: f.characteristic(),
            e: f.degree(),
            modulus: (f.degree() > 1).then(|| f.modulus().to_vec()),
        }
    }
}

/// Text dump of a problem. Polynomials are coefficient lists of canonical
/// integers, constant term first.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PadeProblemFile {
    pub field: FieldFile,
    pub rows: Vec<MultiIndex>,
    pub cols: Vec<MultiIndex>,
    pub inputs: Vec<Vec<Vec<u64>>>,
    pub moduli: Vec<Vec<u64>>,
    pub lambda_bounds: Vec<usize>,
    pub psi_bounds: Vec<usize>,
    #[serde(default)]
    pub leader: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PadeSolutionFile {
    pub lambda: Vec<Vec<u32>>,
    pub psi: Vec<Vec<u32>>,
}

impl From<&PadeSolution> for PadeSolutionFile {
    fn from(s: &PadeSolution) -> Self {
        PadeSolutionFile {
            lambda: s.lambda.iter().map(|p| p.coeffs().to_vec()).collect(),
            psi: s.psi.iter().map(|p| p.coeffs().to_vec()).collect(),
        }
    }
}

impl PadeProblem {
    pub fn to_file(&self) -> PadeProblemFile {
        let coeffs = |p: &Poly| p.coeffs().iter().map(|&c| c as u64).collect::<Vec<_>>();
        PadeProblemFile {
            field: FieldFile::of(&self.field),
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            inputs: self
                .inputs
                .iter()
                .map(|row| row.iter().map(coeffs).collect())
                .collect(),
            moduli: self.moduli.iter().map(coeffs).collect(),
            lambda_bounds: self.lambda_bounds.clone(),
            psi_bounds: self.psi_bounds.clone(),
            leader: self.leader,
        }
    }

    pub fn from_file(file: &PadeProblemFile) -> Result<Self> {
        let f = Field::new(file.field.p, file.field.e, file.field.modulus.as_deref())?;
        let inputs = file
            .inputs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| Poly::try_from_coeffs(c, &f))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let moduli = file
            .moduli
            .iter()
            .map(|c| Poly::try_from_coeffs(c, &f))
            .collect::<Result<Vec<_>>>()?;
        PadeProblem::new(
            f,
            file.rows.clone(),
            file.cols.clone(),
            inputs,
            moduli,
            file.lambda_bounds.clone(),
            file.psi_bounds.clone(),
            file.leader,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PadeProblemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: usize) -> Vec<MultiIndex> {
        (0..n).map(|k| MultiIndex::from(vec![k as u32])).collect()
    }

    fn zero_problem(f: Field) -> PadeProblem {
        PadeProblem::new(
            f,
            idx(2),
            idx(2),
            vec![vec![Poly::zero(); 2]; 2],
            vec![Poly::monomial(3), Poly::from_coeffs(vec![1, 1, 1])],
            vec![2, 3],
            vec![1, 2],
            0,
        )
        .unwrap()
    }

    #[test]
    fn verify_examples() {
        let p = zero_problem(Field::prime(3).unwrap());
        let zero = PadeSolution {
            lambda: vec![Poly::zero(); 2],
            psi: vec![Poly::zero(); 2],
        };
        assert!(!verify_solution(&p, &zero));
        let unit = PadeSolution {
            lambda: vec![Poly::one(), Poly::zero()],
            psi: vec![Poly::zero(); 2],
        };
        assert!(verify_solution(&p, &unit));
        // degree bound violated
        let big = PadeSolution {
            lambda: vec![Poly::monomial(2), Poly::zero()],
            psi: vec![Poly::zero(); 2],
        };
        assert!(!verify_solution(&p, &big));
    }

    #[test]
    fn shifted_minimal_balances_slack() {
        // psi = (1 + x + x^2) lambda_0 + x lambda_1 mod x^4 over GF(5)
        let f = Field::prime(5).unwrap();
        let p = PadeProblem::new(
            f.clone(),
            idx(2),
            idx(1),
            vec![vec![Poly::from_coeffs(vec![1, 1, 1])], vec![Poly::monomial(1)]],
            vec![Poly::monomial(4)],
            vec![3, 3],
            vec![3],
            0,
        )
        .unwrap();
        let plain = solve_minimal(&p).unwrap();
        assert_eq!(plain.lambda[0], Poly::one());
        assert_eq!(p.slack(&plain), 0);
        let shifted = solve_shifted_minimal(&p).unwrap();
        assert!(verify_solution(&p, &shifted));
        assert_eq!(shifted.lambda[0], Poly::one());
        assert_eq!(shifted.lambda[1], Poly::from_coeffs(vec![0, 4]));
        assert_eq!(shifted.psi[0], Poly::from_coeffs(vec![1, 1]));
        assert_eq!(p.slack(&shifted), 1);
    }

    #[test]
    fn zero_inputs_give_constant_leader() {
        let p = zero_problem(Field::prime(3).unwrap());
        let sol = solve_minimal(&p).unwrap();
        assert_eq!(sol.lambda[0], Poly::one());
        assert!(sol.psi.iter().all(Poly::is_zero));
        assert_eq!(solution_space_dim(&p), 5);
        assert_eq!(brute_force_dim(&p).unwrap(), 5);
        let bf = brute_force_minimal(&p).unwrap().unwrap();
        assert_eq!(bf.lambda[0], Poly::one());
    }

    #[test]
    fn adversarial_gf2() {
        // m = 1, |I| = 2, N = (2, 2), one modulus x^3
        let f = Field::prime(2).unwrap();
        let p = PadeProblem::new(
            f,
            idx(2),
            idx(1),
            vec![
                vec![Poly::from_coeffs(vec![1, 1, 1])],
                vec![Poly::from_coeffs(vec![0, 1, 1])],
            ],
            vec![Poly::monomial(3)],
            vec![2, 2],
            vec![1],
            0,
        )
        .unwrap();
        let bf = brute_force_minimal(&p).unwrap();
        let fast = solve_minimal(&p);
        assert_eq!(
            bf.as_ref().map(|s| s.lambda[0].degree()),
            fast.as_ref().map(|s| s.lambda[0].degree())
        );
        if let Some(s) = fast {
            assert!(verify_solution(&p, &s));
        }
    }

    #[test]
    fn existence_bound_is_strict() {
        let f = Field::prime(5).unwrap();
        // sum N = 5, constraints = 3
        let mk = |t: usize| {
            PadeProblem::new(
                f.clone(),
                idx(2),
                idx(1),
                vec![vec![Poly::one()], vec![Poly::monomial(1)]],
                vec![Poly::monomial(4)],
                vec![3, 2],
                vec![t],
                0,
            )
            .unwrap()
        };
        assert!(existence_bound_holds(&mk(1)));
        // sum N = 5, constraints = 4: equality case
        assert!(!existence_bound_holds(&mk(0)));
    }

    #[test]
    fn validation() {
        let f = Field::prime(5).unwrap();
        let base = |moduli: Vec<Poly>, t: usize, leader: usize, s: Poly| {
            PadeProblem::new(
                f.clone(),
                idx(1),
                idx(1),
                vec![vec![s]],
                moduli,
                vec![1],
                vec![t],
                leader,
            )
        };
        assert!(base(vec![Poly::monomial(2)], 1, 0, Poly::one()).is_ok());
        assert!(base(vec![Poly::zero()], 0, 0, Poly::zero()).is_err());
        assert!(base(vec![Poly::monomial(2)], 3, 0, Poly::one()).is_err());
        assert!(base(vec![Poly::monomial(2)], 1, 1, Poly::one()).is_err());
        assert!(base(vec![Poly::monomial(2)], 1, 0, Poly::monomial(2)).is_err());
    }

    #[test]
    fn brute_force_guard() {
        let f = Field::prime(17).unwrap();
        let p = PadeProblem::new(
            f,
            idx(1),
            idx(1),
            vec![vec![Poly::one()]],
            vec![Poly::monomial(8)],
            vec![8],
            vec![4],
            0,
        )
        .unwrap();
        assert!(matches!(brute_force_minimal(&p), Err(Error::TooLarge(_))));
    }

    #[test]
    fn json_round_trip() {
        let p = zero_problem(Field::with_order(9).unwrap());
        let back = PadeProblem::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }
}
