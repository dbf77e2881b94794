//! Dense univariate polynomials over a [`Field`].
//!
//! A `Poly` owns only its coefficients; every operation takes the field
//! explicitly. Coefficients are canonical field values, constant term first,
//! and never carry trailing zeros, so equality is structural.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::Field;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: u32) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Poly { coeffs }
    }

    /// `x - a`.
    pub fn linear_root(a: u32, f: &Field) -> Self {
        Self::from_coeffs(vec![f.neg(a), 1])
    }

    /// Builds a polynomial from canonical coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Like [`Poly::from_coeffs`] but validates every coefficient against the field.
    pub fn try_from_coeffs(coeffs: &[u64], f: &Field) -> Result<Self> {
        let c = coeffs
            .iter()
            .map(|&c| f.check(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(c))
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// True when `deg self < bound` (the zero polynomial satisfies every bound).
    pub fn degree_below(&self, bound: usize) -> bool {
        self.coeffs.len() <= bound
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, rhs: &Poly, f: &Field) -> Poly {
        let (long, short) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (a, &b) in c.iter_mut().zip(&short.coeffs) {
            *a = f.add(*a, b);
        }
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, rhs: &Poly, f: &Field) -> Poly {
        let n = self.len().max(rhs.len());
        let c = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        Poly::from_coeffs(c)
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: u32, f: &Field) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Reduction modulo `x^k`.
    pub fn truncate(&self, k: usize) -> Poly {
        Poly::from_coeffs(self.coeffs[..k.min(self.len())].to_vec())
    }

    pub fn mul(&self, rhs: &Poly, f: &Field) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let len = self.len() + rhs.len() - 1;
        if f.degree() == 1 {
            // products stay below p^2 <= 2^40, so sums fit in u64 without reduction
            let p = f.characteristic() as u64;
            let mut acc = vec![0u64; len];
            for (i, &a) in self.coeffs.iter().enumerate() {
                let a = a as u64;
                for (o, &b) in acc[i..].iter_mut().zip(&rhs.coeffs) {
                    *o += a * b as u64;
                }
            }
            return Poly::from_coeffs(acc.into_iter().map(|v| (v % p) as u32).collect());
        }
        let mut out = vec![0u32; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Product truncated modulo `x^k`.
    pub fn mul_trunc(&self, rhs: &Poly, k: usize, f: &Field) -> Poly {
        if self.is_zero() || rhs.is_zero() || k == 0 {
            return Poly::zero();
        }
        let n = (self.len() + rhs.len() - 1).min(k);
        let mut out = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate().take(n) {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, k: u32, f: &Field) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self, f);
        }
        acc
    }

    /// Quotient and remainder with `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd]).expect("leading coefficient is nonzero");
        if self.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; self.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            let shift = top - dd;
            quot[shift] = factor;
            for (k, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = f.sub(rem[shift + k], f.mul(factor, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        Ok(self.divmod(divisor, f)?.1)
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        let (q, r) = self.divmod(divisor, f)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: u32, f: &Field) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Scales to a monic polynomial; the zero polynomial is returned unchanged.
    pub fn monic(&self, f: &Field) -> Poly {
        match self.leading() {
            Some(l) => self.scale(f.inv(l).expect("nonzero"), f),
            None => Poly::zero(),
        }
    }
}

fn check_distinct(points: &[u32], f: &Field) -> Result<()> {
    let mut seen = vec![false; f.order() as usize];
    for &a in points {
        let slot = seen
            .get_mut(a as usize)
            .ok_or(Error::ElementOutOfRange {
                value: a as u64,
                q: f.order(),
            })?;
        if *slot {
            return Err(Error::RepeatedPoints);
        }
        *slot = true;
    }
    Ok(())
}

/// `prod (x - a)` over the given points.
pub fn vanishing_poly(points: &[u32], f: &Field) -> Result<Poly> {
    check_distinct(points, f)?;
    Ok(points
        .iter()
        .fold(Poly::one(), |acc, &a| acc.mul(&Poly::linear_root(a, f), f)))
}

/// The unique polynomial of degree `< n` through `n` pairs, via the Newton
/// divided-difference form.
pub fn lagrange_interpolate(points: &[u32], values: &[u32], f: &Field) -> Result<Poly> {
    if points.len() != values.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            got: values.len(),
        });
    }
    if points.is_empty() {
        return Err(Error::LengthMismatch {
            expected: 1,
            got: 0,
        });
    }
    check_distinct(points, f)?;
    for &v in values {
        f.check(v as u64)?;
    }
    let n = points.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = f.sub(dd[i], dd[i - 1]);
            let den = f.sub(points[i], points[i - level]);
            dd[i] = f.div(num, den).expect("points are distinct");
        }
    }
    // Horner on the Newton basis
    let mut acc = Poly::constant(dd[n - 1]);
    for i in (0..n - 1).rev() {
        acc = acc
            .mul(&Poly::linear_root(points[i], f), f)
            .add(&Poly::constant(dd[i]), f);
    }
    Ok(acc)
}
