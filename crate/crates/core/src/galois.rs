//! Finite fields GF(p^e) with a canonical integer encoding.
//!
//! Elements are plain `u32` values in `[0, q)`. For prime fields the value is
//! the residue itself; for extension fields the base-`p` digits of the value
//! are the coefficients (constant term first) of the representative
//! polynomial modulo the field's irreducible modulus. This encoding is what
//! every file format and CLI command uses.
//!
//! Hot loops call the `Field` methods on raw `u32`s. [`FieldElement`] wraps a
//! value together with its field for callers that want operator syntax and
//! mixed-field checks.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// A validated finite field GF(p^e).
#[derive(Clone)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    /// e + 1 base-p digits of the monic modulus, constant term first; empty for prime fields.
    modulus: Vec<u32>,
    /// exp[i] = g^i for i in [0, 2(q-1)).
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Small helpers for polynomials over GF(p) as digit vectors, constant first.
mod base {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        // a is nonzero mod p
        let (mut r0, mut r1) = (p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let qt = r0 / r1;
            (r0, r1) = (r1, r0 - qt * r1);
            (t0, t1) = (t1, t0 - qt * t1);
        }
        t0.rem_euclid(p as i64) as u32
    }

    /// Remainder of `a` modulo a nonzero `b`.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
            for (k, &bk) in b.iter().enumerate() {
                let sub = (c as u64 * bk as u64 % p as u64) as u32;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut v: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
        trim(&mut v);
        v
    }

    pub fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
        let mut d = Vec::with_capacity(len);
        for _ in 0..len {
            d.push((v % p as u64) as u32);
            v /= p as u64;
        }
        d
    }

    pub fn undigits(d: &[u32], p: u32) -> u64 {
        d.iter().rev().fold(0u64, |acc, &c| acc * p as u64 + c as u64)
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        if deg <= 1 {
            return deg == 1;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for low in 0..count {
                let mut g = digits(low, p, d);
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    /// Builds GF(p^e). When `e > 1` and no modulus is supplied, the monic
    /// irreducible polynomial of degree `e` with the smallest canonical
    /// encoding of its lower coefficients is used (for GF(16): x^4 + x + 1).
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let q64 = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge { p, e })?;
        let q = q64 as u32;

        let modulus = if e == 1 {
            if let Some(m) = modulus {
                // accept only the trivial modulus x (or x - c) for a prime field
                if m.len() != 2 || m[1] != 1 {
                    return Err(Error::BadModulus(
                        "a prime field takes no modulus of degree other than 1".into(),
                    ));
                }
            }
            Vec::new()
        } else {
            match modulus {
                Some(m) => {
                    if m.len() != e as usize + 1 {
                        return Err(Error::BadModulus(format!(
                            "modulus has degree {} but the extension degree is {e}",
                            m.len() as i64 - 1
                        )));
                    }
                    if m.iter().any(|&c| c >= p) {
                        return Err(Error::BadModulus("digit out of range".into()));
                    }
                    if m[e as usize] != 1 {
                        return Err(Error::BadModulus("modulus is not monic".into()));
                    }
                    if !base::is_irreducible(m, p) {
                        return Err(Error::BadModulus("modulus is reducible".into()));
                    }
                    m.to_vec()
                }
                None => Self::default_modulus(p, e),
            }
        };

        let mut field = Field {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    /// Prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Builds GF(q) for a prime power `q` with the default modulus.
    pub fn with_order(q: u32) -> Result<Self> {
        let factors = prime_factors(q);
        if factors.len() != 1 {
            return Err(Error::NotPrime(q));
        }
        let p = factors[0];
        let mut e = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            e += 1;
        }
        Self::new(p, e, None)
    }

    fn default_modulus(p: u32, e: u32) -> Vec<u32> {
        let count = (p as u64).pow(e);
        // constant term must be nonzero, so start the search at 1
        for low in 1..count {
            let mut m = base::digits(low, p, e as usize);
            m.push(1);
            if base::is_irreducible(&m, p) {
                return m;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (a as u64 * b as u64 % self.p as u64) as u32;
        }
        let n = self.e as usize;
        let prod = base::mul(
            &base::digits(a as u64, self.p, n),
            &base::digits(b as u64, self.p, n),
            self.p,
        );
        let r = base::rem(&prod, &self.modulus, self.p);
        base::undigits(&r, self.p) as u32
    }

    fn build_tables(&mut self) {
        let order = self.q - 1;
        if order == 0 {
            return;
        }
        let factors = prime_factors(order);
        let slow_pow = |f: &Field, mut b: u32, mut k: u32| {
            let mut acc = 1u32;
            while k > 0 {
                if k & 1 == 1 {
                    acc = f.slow_mul(acc, b);
                }
                b = f.slow_mul(b, b);
                k >>= 1;
            }
            acc
        };
        let generator = (1..self.q)
            .find(|&g| factors.iter().all(|&r| slow_pow(self, g, order / r) != 1))
            .expect("the multiplicative group is cyclic");

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = self.slow_mul(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus digits, constant term first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// All elements in canonical order 0, 1, ..., q - 1.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.q as u64
    }

    pub fn check(&self, a: u64) -> Result<u32> {
        if self.contains(a) {
            Ok(a as u32)
        } else {
            Err(Error::ElementOutOfRange {
                value: a,
                q: self.q,
            })
        }
    }

    /// Reduces an integer into the prime subfield.
    #[inline]
    pub fn from_int(&self, n: u64) -> u32 {
        (n % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if self.p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y, p| (x + y) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            if a >= b {
                a - b
            } else {
                a + self.p - b
            }
        } else if self.p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y, p| (x + p - y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32, u32) -> u32) -> u32 {
        let p = self.p;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.e {
            out += op(a % p, b % p, p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            (a as u64 * b as u64 % self.p as u64) as u32
        } else if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else if self.e == 1 {
            Some(base::inv_mod(a, self.p))
        } else {
            let order = self.q - 1;
            Some(self.exp[((order - self.log[a as usize]) % order) as usize])
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^k`; negative exponents require a nonzero base.
    pub fn pow(&self, a: u32, k: i64) -> Option<u32> {
        let base = if k < 0 { self.inv(a)? } else { a };
        let mut k = k.unsigned_abs();
        let mut b = base;
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        Some(acc)
    }

    /// Wraps a canonical value as a checked element.
    pub fn element(&self, value: u64) -> Result<FieldElement<'_>> {
        Ok(FieldElement {
            field: self,
            value: self.check(value)?,
        })
    }
}

/// A field element bound to its field, with operator overloads.
///
/// Operators panic on mixed fields in debug builds; use the `try_*` methods
/// for a recoverable check.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f Field,
    value: u32,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.same_field(other)
    }
}

impl Eq for FieldElement<'_> {}

impl<'f> FieldElement<'f> {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> &'f Field {
        self.field
    }

    fn same_field(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) || self.field == other.field
    }

    fn with(self, value: u32) -> Self {
        FieldElement {
            field: self.field,
            value,
        }
    }

    fn guard(&self, other: &Self) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        self.guard(&rhs)?;
        Ok(self.with(self.field.add(self.value, rhs.value)))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        self.guard(&rhs)?;
        Ok(self.with(self.field.sub(self.value, rhs.value)))
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self> {
        self.guard(&rhs)?;
        Ok(self.with(self.field.mul(self.value, rhs.value)))
    }

    pub fn try_div(self, rhs: Self) -> Result<Self> {
        self.guard(&rhs)?;
        self.field
            .div(self.value, rhs.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn inv(self) -> Result<Self> {
        self.field
            .inv(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(self, k: i64) -> Result<Self> {
        self.field
            .pow(self.value, k)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:ident) => {
        impl<'f> $tr for FieldElement<'f> {
            type Output = FieldElement<'f>;

            fn $method(self, rhs: Self) -> Self::Output {
                debug_assert!(self.same_field(&rhs), "operands from different fields");
                self.with(self.field.$op(self.value, rhs.value))
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl<'f> Div for FieldElement<'f> {
    type Output = FieldElement<'f>;

    fn div(self, rhs: Self) -> Self::Output {
        self.try_div(rhs).expect("division by zero or mixed fields")
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;

    fn neg(self) -> Self::Output {
        self.with(self.field.neg(self.value))
    }
}
