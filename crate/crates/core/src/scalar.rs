//! Exact rational scalars.
//!
//! Coordinates are arbitrary-precision rationals, always in lowest terms with
//! a positive denominator. Nothing in the crate ever rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-3/2"` or a decimal like `"0.25"`.
pub fn parse(text: &str) -> Result<Scalar, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty number".into());
    }
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in `{text}`"))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in `{text}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{text}`"));
        }
        return Ok(Scalar::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !whole_digits.chars().all(|c| c.is_ascii_digit())
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return Err(format!("bad decimal `{text}`"));
        }
        let digits = format!("{whole_digits}{frac}");
        let mut num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits
                .parse()
                .map_err(|_| format!("bad decimal `{text}`"))?
        };
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Scalar::new(num, den));
    }
    text.parse::<BigInt>()
        .map(Scalar::from_integer)
        .map_err(|_| format!("bad number `{text}`"))
}

/// Formats as `n` or `n/d`.
pub fn format(v: &Scalar) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Scales a rational vector to the primitive integer vector on the same ray
/// (common denominator cleared, gcd removed, sign preserved).
pub fn primitive_integers(v: &[Scalar]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn is_at_least_one(v: &Scalar) -> bool {
    !v.is_negative() && *v >= Scalar::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert_eq!(parse("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let v = parse("4/-6").unwrap();
        assert_eq!(format(&v), "-2/3");
        assert!(v.denom().is_positive());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![ratio(1, 2), ratio(-3, 4), int(0)];
        let p = primitive_integers(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
