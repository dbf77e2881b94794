//! Multi-indices in `Z_{>=0}^m` and the counting sums built on them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::galois::Field;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl MultiIndex {
    pub fn zero(m: usize) -> Self {
        MultiIndex(vec![0; m])
    }

    /// The unit vector `u_t` (0-based `t`).
    pub fn unit(m: usize, t: usize) -> Self {
        let mut v = vec![0; m];
        v[t] = 1;
        MultiIndex(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `|i|`, the sum of entries.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Product partial order: `self <= other` entrywise.
    pub fn precedes(&self, other: &MultiIndex) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Entrywise difference; `None` unless `rhs` precedes `self`.
    pub fn checked_sub(&self, rhs: &MultiIndex) -> Option<MultiIndex> {
        if !rhs.precedes(self) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn add(&self, rhs: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

fn compositions(m: usize, size: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if prefix.len() + 1 == m {
        prefix.push(size);
        out.push(MultiIndex(prefix.clone()));
        prefix.pop();
        return;
    }
    for first in (0..=size).rev() {
        prefix.push(first);
        compositions(m, size - first, prefix, out);
        prefix.pop();
    }
}

/// All indices of a given size, first coordinate descending.
pub fn indices_of_size(m: usize, size: u32) -> Vec<MultiIndex> {
    assert!(m >= 1, "dimension must be positive");
    let mut out = Vec::new();
    compositions(m, size, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Indices with `|i| <= bound` (or `< bound` when `strict`), graded by size
/// and, within a size, with the first coordinate descending:
/// `(0,0), (1,0), (0,1), (2,0), ...`.
pub fn enumerate_indices(m: usize, bound: u32, strict: bool) -> Vec<MultiIndex> {
    let top = if strict {
        match bound.checked_sub(1) {
            Some(t) => t,
            None => return Vec::new(),
        }
    } else {
        bound
    };
    (0..=top).flat_map(|s| indices_of_size(m, s)).collect()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// `binom(j, i) = prod_t binom(j_t, i_t)` reduced into the field's prime
/// subfield. Zero whenever `i` does not precede `j`.
pub fn vector_binomial(j: &MultiIndex, i: &MultiIndex, f: &Field) -> u32 {
    assert_eq!(j.dim(), i.dim(), "dimension mismatch");
    let prod = j
        .entries()
        .iter()
        .zip(i.entries())
        .fold(BigUint::one(), |acc, (&jt, &it)| {
            acc * binomial(jt as u64, it as u64)
        });
    let r = prod % BigUint::from(f.characteristic());
    r.to_u32().expect("residue fits")
}

/// `a^i = prod_t a_t^{i_t}`, optionally reduced modulo `modulus`.
pub fn vector_power(a: &[Poly], i: &MultiIndex, modulus: Option<&Poly>, f: &Field) -> Poly {
    assert_eq!(a.len(), i.dim(), "dimension mismatch");
    let reduce = |p: Poly| match modulus {
        Some(m) => p.rem(m, f).expect("nonzero modulus"),
        None => p,
    };
    let mut acc = reduce(Poly::one());
    for (at, &e) in a.iter().zip(i.entries()) {
        for _ in 0..e {
            acc = reduce(acc.mul(at, f));
        }
    }
    acc
}

/// `#{i : |i| <= t} = binom(m + t, m)`.
pub fn count_leq(m: u32, t: u32) -> BigUint {
    binomial((m + t) as u64, m as u64)
}

/// `sum_{|i| < s} |i|`, by direct summation over sizes.
///
/// The closed form is `m * binom(m + s - 1, m + 1)`; see [`weight_sum_lt_closed`].
pub fn weight_sum_lt(m: u32, s: u32) -> BigUint {
    (0..s).fold(BigUint::zero(), |acc, mu| {
        acc + binomial((m + mu) as u64 - 1, mu as u64) * mu
    })
}

pub fn weight_sum_lt_closed(m: u32, s: u32) -> BigUint {
    if s == 0 {
        return BigUint::zero();
    }
    binomial((m + s - 1) as u64, (m + 1) as u64) * m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_indices(2, 1, false),
            vec![mi(&[0, 0]), mi(&[1, 0]), mi(&[0, 1])]
        );
        assert_eq!(enumerate_indices(2, 3, false).len(), 10);
        assert_eq!(enumerate_indices(4, 3, true).len(), 15);
        assert!(enumerate_indices(3, 0, true).is_empty());
        assert_eq!(enumerate_indices(3, 0, false), vec![mi(&[0, 0, 0])]);
    }

    #[test]
    fn strict_count_matches_brute_force() {
        // brute force over the box [0, bound)^m
        for m in 1..=4usize {
            for bound in 0..=4u32 {
                let mut count = 0;
                let total = (bound as usize + 1).pow(m as u32);
                for code in 0..total {
                    let mut c = code;
                    let mut sum = 0;
                    for _ in 0..m {
                        sum += c % (bound as usize + 1);
                        c /= bound as usize + 1;
                    }
                    if sum < bound as usize {
                        count += 1;
                    }
                }
                assert_eq!(enumerate_indices(m, bound, true).len(), count);
            }
        }
    }

    #[test]
    fn binomial_examples() {
        let f17 = Field::prime(17).unwrap();
        assert_eq!(vector_binomial(&mi(&[2, 1]), &mi(&[1, 1]), &f17), 2);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(vector_binomial(&mi(&[2, 0]), &mi(&[1, 0]), &f2), 0);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(vector_binomial(&mi(&[3, 2]), &mi(&[1, 1]), &f5), 1);
        assert_eq!(vector_binomial(&mi(&[1, 2]), &mi(&[2, 0]), &f17), 0);
        // extension field: reduction happens in the prime subfield
        let f16 = Field::with_order(16).unwrap();
        assert_eq!(vector_binomial(&mi(&[3, 0]), &mi(&[1, 0]), &f16), 1);
    }

    #[test]
    fn power_examples() {
        let f2 = Field::prime(2).unwrap();
        let x = Poly::monomial(1);
        let x1 = Poly::from_coeffs(vec![1, 1]);
        assert_eq!(
            vector_power(&[x.clone(), x1.clone()], &mi(&[0, 0]), None, &f2),
            Poly::one()
        );
        assert_eq!(
            vector_power(&[x.clone(), x1], &mi(&[1, 1]), None, &f2),
            Poly::from_coeffs(vec![0, 1, 1])
        );
        assert_eq!(
            vector_power(&[x.clone(), x], &mi(&[2, 1]), Some(&Poly::monomial(2)), &f2),
            Poly::zero()
        );
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_leq(2, 3), BigUint::from(10u32));
        assert_eq!(weight_sum_lt(4, 3), BigUint::from(24u32));
        for m in 1..=8 {
            assert!(weight_sum_lt(m, 1).is_zero());
        }
    }

    #[test]
    fn counting_identities_small_grid() {
        for m in 1..=8u32 {
            for t in 0..=8u32 {
                let listed = enumerate_indices(m as usize, t, false);
                assert_eq!(BigUint::from(listed.len()), count_leq(m, t));
                let set: HashSet<_> = listed.iter().collect();
                assert_eq!(set.len(), listed.len());
                assert!(listed.windows(2).all(|w| w[0].size() <= w[1].size()));
                assert_eq!(listed, enumerate_indices(m as usize, t, false));
            }
            for s in 1..=8u32 {
                let direct: u64 = enumerate_indices(m as usize, s, true)
                    .iter()
                    .map(|i| i.size() as u64)
                    .sum();
                assert_eq!(weight_sum_lt(m, s), BigUint::from(direct));
                assert_eq!(weight_sum_lt_closed(m, s), BigUint::from(direct));
            }
        }
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(2).unwrap()),
            Just(Field::prime(3).unwrap()),
            Just(Field::with_order(16).unwrap()),
            Just(Field::prime(17).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn vectorised_binomial_theorem(
            (f, a, b, j) in field_strategy().prop_flat_map(|f| {
                let m = 1..=3usize;
                (Just(f), m)
            }).prop_flat_map(|(f, m)| {
                let q = f.order();
                let polys = proptest::collection::vec(
                    proptest::collection::vec(0..q, 0..4).prop_map(Poly::from_coeffs), m);
                let j = proptest::collection::vec(0..=4u32, m)
                    .prop_filter("|j| <= 4", |v| v.iter().sum::<u32>() <= 4)
                    .prop_map(MultiIndex);
                (Just(f), polys.clone(), polys, j)
            })
        ) {
            let sum: Vec<Poly> = a.iter().zip(&b).map(|(x, y)| x.add(y, &f)).collect();
            let lhs = vector_power(&sum, &j, None, &f);
            let mut rhs = Poly::zero();
            for i in enumerate_indices(j.dim(), j.size(), false) {
                if let Some(rest) = j.checked_sub(&i) {
                    let term = vector_power(&a, &i, None, &f)
                        .mul(&vector_power(&b, &rest, None, &f), &f)
                        .scale(vector_binomial(&j, &i, &f), &f);
                    rhs = rhs.add(&term, &f);
                }
            }
            prop_assert_eq!(lhs, rhs);
        }
    }
}
