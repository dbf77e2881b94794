//! Decoding radii and parameter selection.
//!
//! The radius formula is generic over the scalar type: instantiate it with
//! [`Rational`](crate::Rational) for the exact value the decoder uses, or with
//! `f64`/`f32` for plotting and asymptotic comparisons.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

use crate::error::{Error, Result};
use crate::multiindex::{binomial, count_leq, weight_sum_lt};

fn scalar<T: FromPrimitive>(v: &BigUint) -> T {
    v.to_u128()
        .and_then(T::from_u128)
        .expect("count representable in the scalar type")
}

fn check(n: usize, k: usize, m: usize, ell: u32, s: u32) -> Result<()> {
    if s == 0 || s > ell {
        return Err(Error::InvalidParams(format!("need 1 <= s <= ell, got s={s}, ell={ell}")));
    }
    if k >= n || k == 0 {
        return Err(Error::InvalidParams(format!("need 0 < k < n, got k={k}, n={n}")));
    }
    if m == 0 {
        return Err(Error::InvalidParams("m must be positive".into()));
    }
    Ok(())
}

/// Largest error count for which spurious Padé solutions are not forced by
/// counting:
///
/// ```text
/// n [1 - (s C_< - W_<) / (s C_<=)] - m/(m+1) (ell/s) (k-1) - (1/s) [1 - 1/C_<=]
/// ```
///
/// with `C_<= = #{|j| <= ell}`, `C_< = #{|i| < s}` and `W_< = sum_{|i|<s} |i|`.
pub fn tau_new<T>(n: usize, k: usize, m: usize, ell: u32, s: u32) -> Result<T>
where
    T: Num + Clone + FromPrimitive,
{
    check(n, k, m, ell, s)?;
    let mu = m as u32;
    let c_leq: T = scalar(&count_leq(mu, ell));
    let c_lt: T = scalar(&count_leq(mu, s - 1));
    let w_lt: T = scalar(&weight_sum_lt(mu, s));
    let int = |v: usize| T::from_usize(v).expect("small integer");
    let (n, k, m, ell, s) = (int(n), int(k), int(m), int(ell as usize), int(s as usize));
    let one = T::one();

    let ratio = (s.clone() * c_lt - w_lt) / (s.clone() * c_leq.clone());
    let main = n * (one.clone() - ratio);
    let powers = m.clone() / (m + one.clone()) * (ell / s.clone()) * (k - one.clone());
    let tail = one.clone() / s * (one.clone() - one / c_leq);
    Ok(main - powers - tail)
}

/// `floor(tau_new)` in exact rational arithmetic.
pub fn radius_new(n: usize, k: usize, m: usize, ell: u32, s: u32) -> Result<i64> {
    let t: BigRational = tau_new(n, k, m, ell, s)?;
    Ok(t.floor().to_integer().to_i64().expect("radius fits in i64"))
}

/// `floor(m (n - k) / (m + 1))`.
pub fn radius_kl(n: usize, k: usize, m: usize) -> i64 {
    let num = m as i64 * (n as i64 - k as i64);
    Integer::div_floor(&num, &(m as i64 + 1))
}

/// Best radius with `s = 1` over `1 <= ell <= ell_max`.
pub fn radius_wzb(n: usize, k: usize, m: usize, ell_max: u32) -> Result<i64> {
    (1..=ell_max.max(1))
        .map(|ell| radius_new(n, k, m, ell, 1))
        .try_fold(i64::MIN, |best, r| r.map(|r| best.max(r)))
}

/// Exhaustive search over `1 <= s <= ell <= ell_max` for the largest radius;
/// ties go to the smaller `ell`, then the smaller `s`.
pub fn choose_parameters(n: usize, k: usize, m: usize, ell_max: u32) -> Result<(u32, u32, i64)> {
    let mut best: Option<(u32, u32, i64)> = None;
    for ell in 1..=ell_max.max(1) {
        for s in 1..=ell {
            let r = radius_new(n, k, m, ell, s)?;
            if best.is_none_or(|(_, _, b)| r > b) {
                best = Some((ell, s, r));
            }
        }
    }
    Ok(best.expect("at least one candidate"))
}

/// `gamma = ((k - 1) / n)^(1/(m+1))`.
pub fn gamma<T: Float>(n: usize, k: usize, m: usize) -> T {
    let ratio = T::from(k - 1).unwrap() / T::from(n).unwrap();
    ratio.powf(T::one() / T::from(m + 1).unwrap())
}

/// The schedule `(ell_i, s_i) = (i, round(gamma i) + 1)`, rounding half away
/// from zero.
pub fn asymptotic_schedule<T: Float>(n: usize, k: usize, m: usize, i: u32) -> (u32, u32, T) {
    let g: T = gamma(n, k, m);
    let s = (g * T::from(i).unwrap()).round().to_u32().unwrap() + 1;
    (i, s, g)
}

/// Limit of the relative radius, `1 - ((k-1)/n)^(m/(m+1))`.
pub fn relative_limit<T: Float>(n: usize, k: usize, m: usize) -> T {
    let ratio = T::from(k - 1).unwrap() / T::from(n).unwrap();
    T::one() - ratio.powf(T::from(m).unwrap() / T::from(m + 1).unwrap())
}

/// Relative KL radius `m/(m+1) (1 - R)` for a real rate.
pub fn relative_kl<T: Float>(rate: T, m: usize) -> T {
    let m = T::from(m).unwrap();
    m / (m + T::one()) * (T::one() - rate)
}

/// Relative Power-IRS target `1 - R^(m/(m+1))` for a real rate.
pub fn relative_target<T: Float>(rate: T, m: usize) -> T {
    let mf = T::from(m).unwrap();
    T::one() - rate.powf(mf / (mf + T::one()))
}

/// `binom(m + round(gamma i), m) / binom(m + i, m)` from exact integers.
pub fn binomial_ratio(m: u32, gamma: f64, i: u64) -> f64 {
    let r = (gamma * i as f64).round() as u64;
    let num = BigInt::from(binomial(m as u64 + r, m as u64));
    let den = BigInt::from(binomial(m as u64 + i, m as u64));
    BigRational::new(num, den).to_f64().expect("finite ratio")
}
