use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, sign_of, ComplexRational, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. Never carries a trailing zero coefficient; the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `X - a`
    pub fn linear_root(a: &Rational) -> Self {
        Self::new(vec![-a, Rational::one()])
    }

    /// Product of `X - a` over the given values.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, a| &acc * &Self::linear_root(a))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }

    pub fn eval_complex(&self, z: &ComplexRational) -> ComplexRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ComplexRational::zero(), |acc, a| {
                &acc * z + ComplexRational::from_real(a.clone())
            })
    }

    /// Euclidean division `self = q * b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let inv_lc = b.coeffs[db].recip();
        let mut q = vec![Rational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let factor = top * &inv_lc;
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    r[k + j] -= &factor * bj;
                }
            }
            q[k] = factor;
        }
        r.truncate(db);
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    pub fn rem(&self, b: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(b)?.1)
    }

    pub fn quo(&self, b: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(b)?.0)
    }

    /// `(self * other) mod m`
    pub fn mul_mod(&self, other: &UniPoly, m: &UniPoly) -> Result<UniPoly> {
        (self * other).rem(m)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }
}

/// Monic gcd.
pub fn gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = y;
        // keep intermediate coefficients small; only the monic result matters
        y = r.monic();
    }
    Ok(x.monic())
}

/// `s0 = a, s1 = b, s_{k+1} = -rem(s_{k-1}, s_k)`, stopping at the last
/// nonzero element. Scaling is left untouched.
pub fn signed_remainder_sequence(a: &UniPoly, b: &UniPoly) -> Result<Vec<UniPoly>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq = vec![a.clone()];
    if b.is_zero() {
        return Ok(seq);
    }
    seq.push(b.clone());
    loop {
        let n = seq.len();
        let next = -seq[n - 2].rem(&seq[n - 1])?;
        if next.is_zero() {
            return Ok(seq);
        }
        seq.push(next);
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sign variations of the sequence at `-inf` and at `+inf`.
pub fn sign_variations_at_infinity(seq: &[UniPoly]) -> (usize, usize) {
    let at_pos = seq.iter().map(|p| p.leading_coeff().map_or(0, sign_of));
    let at_neg = seq.iter().map(|p| match (p.leading_coeff(), p.degree()) {
        (Some(lc), Some(d)) if d % 2 == 1 => -sign_of(lc),
        (Some(lc), _) => sign_of(lc),
        _ => 0,
    });
    (variations(at_neg), variations(at_pos))
}

/// Sign changes in a plain sequence of rationals, zeros dropped.
pub fn coefficient_variations(values: &[Rational]) -> usize {
    variations(values.iter().map(sign_of))
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if a.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::ratio;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn exact_division_leaves_zero_remainder() {
        let (q, r) = p(&[0, 0, 0, 1]).div_rem(&p(&[0, 0, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::x());
    }

    #[test]
    fn division_identity_holds() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        let b = p(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            p(&[1, 1]).div_rem(&UniPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn derivative_of_cubic() {
        // X(X-1)(X-2) = X^3 - 3X^2 + 2X
        assert_eq!(p(&[0, 2, -3, 1]).derivative(), p(&[2, -6, 3]));
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let a = p(&[5, 0, -2]);
        assert_eq!(&a * &UniPoly::one(), a);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(
            gcd(&p(&[0, 2, -3, 1]), &p(&[2, -6, 3])).unwrap(),
            UniPoly::one()
        );
        assert_eq!(gcd(&p(&[4, 2]), &UniPoly::zero()).unwrap(), p(&[2, 1]));
        assert_eq!(
            gcd(&UniPoly::zero(), &UniPoly::zero()),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn remainder_sequence_examples() {
        let seq = signed_remainder_sequence(&p(&[-1, 0, 1]), &p(&[0, 2])).unwrap();
        assert_eq!(seq, vec![p(&[-1, 0, 1]), p(&[0, 2]), p(&[1])]);
        let seq = signed_remainder_sequence(&UniPoly::x(), &UniPoly::one()).unwrap();
        assert_eq!(seq, vec![UniPoly::x(), UniPoly::one()]);
        assert!(signed_remainder_sequence(&UniPoly::zero(), &UniPoly::one()).is_err());
    }

    #[test]
    fn remainder_sequence_ends_at_gcd() {
        // (X-1)^2 (X+2)
        let a = p(&[2, -3, 0, 1]);
        let seq = signed_remainder_sequence(&a, &a.derivative()).unwrap();
        let last = seq.last().unwrap();
        assert_eq!(last.monic(), gcd(&a, &a.derivative()).unwrap());
        assert_eq!(last.monic(), p(&[-1, 1]));
    }

    #[test]
    fn variations_at_infinity() {
        let seq = vec![p(&[-1, 0, 1]), p(&[0, 2]), p(&[1])];
        assert_eq!(sign_variations_at_infinity(&seq), (2, 0));
        assert_eq!(sign_variations_at_infinity(&[UniPoly::one()]), (0, 0));
        assert_eq!(sign_variations_at_infinity(&[UniPoly::x()]), (0, 0));
        assert_eq!(sign_variations_at_infinity(&[]), (0, 0));
    }

    #[test]
    fn evaluation() {
        let a = p(&[0, 2, -3, 1]);
        for x in [0, 1, 2] {
            assert!(a.eval(&rat(x)).is_zero());
        }
        assert_eq!(a.eval(&ratio(1, 2)), ratio(3, 8));
        let i = ComplexRational::new(rat(0), rat(1));
        assert!(p(&[1, 0, 1]).eval_complex(&i).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 2, -3, 1]).to_string(), "X^3 - 3X^2 + 2X");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
