use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator, and zero as `0/1`.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"num/den"` or `"num"`. Leading `+` and surrounding whitespace are accepted.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim().trim_start_matches('+');
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

/// `"num/den"`, with the denominator omitted when it is 1.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn sign_of(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Bit length of `n`: `bit(0) = 0`, `bit(1) = 1`, `bit(2) = bit(3) = 2`, ...
pub fn bit(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()) as usize
}

/// Exact element of `Q[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        ComplexRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Zero for ComplexRational {
    fn zero() -> Self {
        Self::from_real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        ComplexRational::is_zero(self)
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: ComplexRational) -> ComplexRational {
        ComplexRational {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: ComplexRational) -> ComplexRational {
        ComplexRational {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for ComplexRational {
    type Output = ComplexRational;
    fn mul(self, o: ComplexRational) -> ComplexRational {
        &self * &o
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_lengths() {
        let got: Vec<usize> = (0..9).map(bit).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 3, 3, 4]);
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "7", "-3/4", "10/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn conjugation_negates_imaginary_part_only() {
        let z = ComplexRational::new(ratio(1, 2), rat(-3));
        assert_eq!(z.conj(), ComplexRational::new(ratio(1, 2), rat(3)));
        let i = ComplexRational::new(rat(0), rat(1));
        assert_eq!(&i * &i, ComplexRational::from_real(rat(-1)));
    }
}
