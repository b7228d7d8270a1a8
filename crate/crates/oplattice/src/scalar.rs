//! Exact rational scalars.
//!
//! Every number in this crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere; equality checks are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Scalar = BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num/den` as a scalar. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Exact integer power, valid for negative exponents when `base != 0`.
pub fn pow_i(base: &Scalar, exp: i64) -> Scalar {
    if exp == 0 {
        return Scalar::one();
    }
    let e = u32::try_from(exp.unsigned_abs()).expect("exponent out of range");
    let mut acc = Scalar::one();
    let mut b = base.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        k >>= 1;
    }
    if exp < 0 {
        acc = acc.recip();
    }
    acc
}

/// True iff `2s` is an integer.
pub fn is_half_integer(s: &Scalar) -> bool {
    (s + s).is_integer()
}

/// `2s` as a plain integer; caller must have checked [`is_half_integer`].
pub fn twice_as_int(s: &Scalar) -> i64 {
    let t = s + s;
    debug_assert!(t.is_integer());
    i64::try_from(t.to_integer()).expect("half-integer argument out of i64 range")
}

/// Renders exactly as `p/q`, or `p` when the denominator is one.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p`, `-p`, `p/q`, `-p/q`. Returns `None` on anything else
/// (including a zero denominator).
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let t = text.trim();
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num_str.parse().ok()?;
    let den: BigInt = den_str.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

/// True iff `s > 0`.
pub fn is_positive(s: &Scalar) -> bool {
    s.is_positive()
}

/// True iff `s = 0`.
pub fn is_zero(s: &Scalar) -> bool {
    Zero::is_zero(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert!(x.denom() > &BigInt::from(0));
        assert_eq!(format_scalar(&x), "-3/2");
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_i(&int(2), 10), int(1024));
        assert_eq!(pow_i(&int(2), -2), rat(1, 4));
        assert_eq!(pow_i(&rat(3, 2), 0), int(1));
        assert_eq!(pow_i(&rat(2, 3), -3), rat(27, 8));
    }

    #[test]
    fn half_integers() {
        assert!(is_half_integer(&rat(3, 2)));
        assert!(is_half_integer(&int(-7)));
        assert!(!is_half_integer(&rat(1, 3)));
        assert_eq!(twice_as_int(&rat(-5, 2)), -5);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-17", "3/4", "-22/7", "100000000000000000001/3"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(format_scalar(&v), s);
        }
        assert_eq!(parse_scalar("5/0"), None);
        assert_eq!(parse_scalar("a/b"), None);
        assert_eq!(parse_scalar("1.5"), None);
        // reduction on input
        assert_eq!(parse_scalar("4/8").unwrap(), rat(1, 2));
    }
}
