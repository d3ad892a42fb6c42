//! Arbitrary-precision rationals shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Result, TciError};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Parses `"p/q"` or `"p"`. A zero denominator is rejected instead of panicking.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n
        .parse()
        .map_err(|_| TciError::Parse(format!("bad rational numerator {n:?}")))?;
    let den: BigInt = d
        .parse()
        .map_err(|_| TciError::Parse(format!("bad rational denominator {d:?}")))?;
    if den.is_zero() {
        return Err(TciError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Renders in lowest terms as `"p/q"`, or `"p"` for integers.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(one(), |acc, i| acc * int(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["0", "3", "-7/2", "12345678901234567890/7"] {
            assert_eq!(render(&parse(s).unwrap()), s);
        }
        assert_eq!(render(&parse("4/6").unwrap()), "2/3");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
