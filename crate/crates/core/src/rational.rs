//! Exact rational scalars and small vector helpers.
//!
//! Every geometric quantity in this crate is a [`Rational`]; floating point
//! only appears when SVG coordinates are emitted.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_i64(a: &[i64], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (&x, y)| acc + y * BigInt::from(x))
}

pub fn dot_int(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn scale(v: &[Rational], k: &Rational) -> Vec<Rational> {
    v.iter().map(|x| x * k).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn neg(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Combination `Σ coeffs[i] * vectors[i]`.
pub fn combine(coeffs: &[Rational], vectors: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Gcd of a list of rationals: the largest rational `g` with every entry an
/// integer multiple of `g`. Zero for an all-zero list.
pub fn rational_content(values: &[Rational]) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for v in values.iter().filter(|v| !v.is_zero()) {
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        Rational::zero()
    } else {
        Rational::new(num, den)
    }
}

/// Positive rescaling of `v` to a primitive integer vector. Returns the
/// integer vector and the (positive) factor it was multiplied by.
pub fn primitive_positive(v: &[Rational]) -> (Vec<BigInt>, Rational) {
    let content = rational_content(v);
    if content.is_zero() {
        return (vec![BigInt::zero(); v.len()], Rational::one());
    }
    let factor = content.recip();
    let out = v.iter().map(|x| (x * &factor).to_integer()).collect();
    (out, factor)
}

/// Primitive integer vector whose first nonzero entry is positive, together
/// with the sign (+1/-1) relating it to the input direction.
pub fn primitive_canonical(v: &[Rational]) -> (Vec<BigInt>, i8) {
    let (mut p, _) = primitive_positive(v);
    let sign = match p.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => -1,
        _ => 1,
    };
    if sign < 0 {
        for x in &mut p {
            *x = -&*x;
        }
    }
    (p, sign)
}

pub fn big_to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Integer vector as `i64`s, `None` on overflow.
pub fn big_to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(ToPrimitive::to_i64).collect()
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// `p/q` or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering rounded half away from zero; only used for SVG output.
pub fn fmt_decimal(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let abs = rounded.abs();
    let (whole, part) = abs.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        let part = part.to_string();
        out.push('.');
        for _ in part.len()..digits as usize {
            out.push('0');
        }
        out.push_str(&part);
    }
    out
}

/// Display adapter for a rational tuple, `(a, b, c)`.
pub struct Tuple<'a>(pub &'a [Rational]);

impl fmt::Display for Tuple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&fmt_rational(x))?;
        }
        f.write_str(")")
    }
}

pub fn fmt_int_tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_canonical_flips_sign() {
        let (p, s) = primitive_canonical(&[frac(-2, 3), frac(4, 3), int(0)]);
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(-2), BigInt::from(0)]);
        assert_eq!(s, -1);
    }

    #[test]
    fn content_of_mixed_rationals() {
        assert_eq!(rational_content(&[frac(1, 2), frac(1, 3)]), frac(1, 6));
        assert_eq!(rational_content(&[int(0), int(0)]), int(0));
        assert_eq!(rational_content(&[int(4), int(-6)]), int(2));
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(fmt_decimal(&frac(1, 3), 6), "0.333333");
        assert_eq!(fmt_decimal(&frac(-2, 3), 6), "-0.666667");
        assert_eq!(fmt_decimal(&int(5), 2), "5.00");
        assert_eq!(fmt_decimal(&frac(-1, 200), 2), "-0.01");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/-6"), Some(frac(-1, 2)));
        assert_eq!(parse_rational(" -7 "), Some(int(-7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
