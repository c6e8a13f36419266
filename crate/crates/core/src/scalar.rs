//! Exact rational scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{GeometryError, Result};

/// Arbitrary-precision rational; every projective and squared-metric quantity
/// in this crate is one of these.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn checked_div(n: &Scalar, d: &Scalar) -> Result<Scalar> {
    if d.is_zero() {
        Err(GeometryError::DivisionByZero)
    } else {
        Ok(n / d)
    }
}

/// Parses `"p"` or `"p/q"` (optional sign, surrounding whitespace ignored).
pub fn parse(text: &str) -> Result<Scalar> {
    let bad = || GeometryError::Parse(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// `"p"` for integers, `"p/q"` otherwise, always in lowest terms.
pub fn format(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        // huge numerator or denominator: shift both down before dividing
        _ => {
            let bits = x.numer().bits().max(x.denom().bits()) as i64 - 900;
            let shift = bits.max(0) as usize;
            let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (x.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Scales a rational triple to coprime integers, keeping the overall sign.
pub fn clear_denominators(v: &[Scalar; 3]) -> [BigInt; 3] {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    [&ints[0] / &g, &ints[1] / &g, &ints[2] / &g]
}

/// Lowest-terms integer triple with positive leading nonzero entry.
pub fn canonical_triple(v: &[Scalar; 3]) -> [BigInt; 3] {
    let mut t = clear_denominators(v);
    if let Some(lead) = t.iter().find(|x| !x.is_zero()) {
        if lead.is_negative() {
            for x in t.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    t
}

pub fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

pub fn cross(p: &[Scalar; 3], q: &[Scalar; 3]) -> [Scalar; 3] {
    [&p[1] * &q[2] - &p[2] * &q[1], &p[2] * &q[0] - &p[0] * &q[2], &p[0] * &q[1] - &p[1] * &q[0]]
}

pub fn dot(p: &[Scalar; 3], q: &[Scalar; 3]) -> Scalar {
    &p[0] * &q[0] + &p[1] * &q[1] + &p[2] * &q[2]
}
