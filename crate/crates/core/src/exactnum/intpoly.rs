//! Integer remainder sequences.
//!
//! Euclid over the rationals spends most of its time normalizing fractions.
//! Here every remainder is replaced by its primitive integer part, scaled by
//! a positive factor only, so degrees and the signs of leading coefficients
//! (all that Sturm counting and gcd degrees need) are unchanged.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;

/// Dense ascending integer coefficients with no trailing zero.
pub type IntPoly = Vec<BigInt>;

/// Positive rational multiple of `p` with coprime integer coefficients.
pub fn primitive_part(p: &UniPoly) -> IntPoly {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: IntPoly = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    make_primitive(scaled)
}

fn make_primitive(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in &mut p {
            *c /= &content;
        }
    }
    p
}

/// `c * (a mod b)` for some integer `c > 0`.
fn positive_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let lc = &b[db];
    let lc_abs = lc.abs();
    let negative = lc.sign() == Sign::Minus;
    while r.len() > db {
        // |lc| r - sign(lc) top b X^shift cancels the top coefficient
        let mut top = r.pop().expect("len > db");
        if !negative {
            top = -top;
        }
        let shift = r.len() - db;
        for c in r.iter_mut() {
            *c *= &lc_abs;
        }
        for (k, bk) in b[..db].iter().enumerate() {
            r[shift + k] += &top * bk;
        }
        while r.len() > db && r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Signed remainder sequence of `(a, b)` up to positive factors, stopping at
/// the last nonzero element. `a` must be nonzero.
pub fn primitive_remainder_sequence(a: &UniPoly, b: &UniPoly) -> Vec<IntPoly> {
    let mut seq = vec![primitive_part(a)];
    let b = primitive_part(b);
    if b.is_empty() {
        return seq;
    }
    seq.push(b);
    loop {
        let n = seq.len();
        let r = make_primitive(positive_pseudo_rem(&seq[n - 2], &seq[n - 1]));
        if r.is_empty() {
            return seq;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
}

/// Degree of `gcd(a, b)` for `a` nonzero.
pub fn gcd_degree(a: &UniPoly, b: &UniPoly) -> usize {
    primitive_remainder_sequence(a, b)
        .last()
        .map_or(0, |g| g.len() - 1)
}

/// Sign variations of an integer sequence at `-inf` and `+inf`.
pub fn int_sign_variations_at_infinity(seq: &[IntPoly]) -> (usize, usize) {
    let count = |signs: Vec<i8>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let lead = |p: &IntPoly| {
        if p.last().is_some_and(Signed::is_negative) {
            -1i8
        } else {
            1
        }
    };
    let at_pos: Vec<i8> = seq.iter().filter(|p| !p.is_empty()).map(lead).collect();
    let at_neg: Vec<i8> = seq
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| {
            if (p.len() - 1) % 2 == 1 {
                -lead(p)
            } else {
                lead(p)
            }
        })
        .collect();
    (count(at_neg), count(at_pos))
}
