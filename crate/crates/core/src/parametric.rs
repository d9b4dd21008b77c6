//! Parametric Hermite matrices and the HElim family.
//!
//! `P` is monic in `X` with coefficients in `Q[Y_1, ..., Y_m]`. Its Newton
//! sums stay polynomial in the parameters, hence so do the Hermite matrices
//! `Her(P, Q)` for every product `Q` of the system, and so do their leading
//! principal minors. Fixing the signs of those minors fixes the output of
//! real-nonreal determination on the specialized instance.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{bit, format_rational, rat, sign_of, Rational, UniPoly};
use crate::queries::{Backend, ZeroSetHandle};
use crate::realnonreal::{real_nonreal_determination, RealNonrealResult};

/// Polynomial in the parameters `Y_1..Y_m`, stored as monomial exponent
/// vectors mapped to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ParamPoly {
    pub fn zero(nvars: usize) -> Self {
        ParamPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = ParamPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        ParamPoly::constant(nvars, Rational::one())
    }

    /// The parameter `Y_{k+1}`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut mono = vec![0; nvars];
        mono[k] = 1;
        ParamPoly::from_terms(nvars, [(mono, Rational::one())])
    }

    /// Sums the coefficients of repeated monomials and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = ParamPoly::zero(nvars);
        for (mono, c) in terms {
            assert_eq!(
                mono.len(),
                nvars,
                "monomial length must equal the parameter count"
            );
            p.add_term(mono, c);
        }
        p
    }

    fn add_term(&mut self, mono: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(mono.clone())
            .or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.iter().all(|&e| e == 0) && c.is_one())
    }

    /// Constant value when no parameter occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .find(|(m, _)| m.iter().all(|&e| e == 0))
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero(self.nvars);
        }
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn eval(&self, y: &[Rational]) -> Rational {
        assert_eq!(
            y.len(),
            self.nvars,
            "point dimension must equal the parameter count"
        );
        self.terms
            .iter()
            .map(|(mono, c)| {
                mono.iter().zip(y).fold(c.clone(), |acc, (&e, v)| {
                    acc * num_traits::pow(v.clone(), e as usize)
                })
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero(self.nvars.max(rhs.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(mono, ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            let negative = sign_of(c) < 0;
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = mono
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("Y{}", i + 1)
                    } else {
                        format!("Y{}^{e}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() || !abs.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            }
            write!(f, "{}", vars.join("*"))?;
        }
        Ok(())
    }
}

/// Polynomial in `X` whose coefficients (ascending) are parameter
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamUniPoly {
    nvars: usize,
    coeffs: Vec<ParamPoly>,
}

impl ParamUniPoly {
    pub fn new(nvars: usize, mut coeffs: Vec<ParamPoly>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.nvars == nvars),
            "mixed parameter counts"
        );
        while coeffs.last().is_some_and(ParamPoly::is_zero) {
            coeffs.pop();
        }
        ParamUniPoly { nvars, coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        ParamUniPoly {
            nvars,
            coeffs: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        ParamUniPoly::new(nvars, vec![ParamPoly::one(nvars)])
    }

    /// Lifts a polynomial with constant coefficients.
    pub fn from_unipoly(nvars: usize, p: &UniPoly) -> Self {
        ParamUniPoly::new(
            nvars,
            p.coeffs()
                .iter()
                .map(|c| ParamPoly::constant(nvars, c.clone()))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(ParamPoly::is_one)
    }

    pub fn mul(&self, other: &ParamUniPoly) -> ParamUniPoly {
        if self.is_zero() || other.is_zero() {
            return ParamUniPoly::zero(self.nvars);
        }
        let mut out = vec![ParamPoly::zero(self.nvars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ParamUniPoly::new(self.nvars, out)
    }

    /// Remainder by a monic divisor; no division in the coefficient ring.
    pub fn rem_monic(&self, m: &ParamUniPoly) -> Result<ParamUniPoly> {
        if !m.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = m.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let lead = r.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let shift = r.len() - d;
            for (k, c) in m.coeffs[..d].iter().enumerate() {
                r[shift + k] = &r[shift + k] - &(&lead * c);
            }
        }
        Ok(ParamUniPoly::new(self.nvars, r))
    }

    pub fn specialize(&self, y: &[Rational]) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(y)).collect())
    }
}

/// All exponent vectors in `{0,1,2}^s` with at most `bit(p)` nonzero
/// entries, in lexicographic order.
pub fn prod_family(s: usize, p: usize) -> Vec<Vec<u8>> {
    let limit = bit(p);
    let mut out = Vec::new();
    let mut alpha = vec![0u8; s];
    fn walk(pos: usize, used: usize, limit: usize, alpha: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == alpha.len() {
            out.push(alpha.clone());
            return;
        }
        for e in 0..3u8 {
            if e > 0 && used == limit {
                break;
            }
            alpha[pos] = e;
            walk(pos + 1, used + usize::from(e > 0), limit, alpha, out);
        }
        alpha[pos] = 0;
    }
    walk(0, 0, limit, &mut alpha, &mut out);
    out
}

fn newton_sums(p: &ParamUniPoly, count: usize) -> Vec<ParamPoly> {
    let m = p.nvars;
    let d = p.coeffs.len() - 1;
    let a = |k: usize| &p.coeffs[k];
    let mut s: Vec<ParamPoly> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            s.push(ParamPoly::constant(m, rat(d as i64)));
            continue;
        }
        let mut acc = if k <= d {
            a(d - k).scale(&rat(k as i64))
        } else {
            ParamPoly::zero(m)
        };
        for j in 1..=(k - 1).min(d) {
            acc = &acc + &(a(d - j) * &s[k - j]);
        }
        s.push(-&acc);
    }
    s
}

/// Hermite matrix of `(p, q)` with parameter-polynomial entries.
pub fn parametric_hermite(p: &ParamUniPoly, q: &ParamUniPoly) -> Result<Vec<Vec<ParamPoly>>> {
    let d = match p.degree() {
        Some(d) if d >= 1 && p.is_monic() => d,
        _ => return Err(Error::NotMonic),
    };
    let q = q.rem_monic(p)?;
    let m = p.nvars;
    if q.is_zero() {
        return Ok(vec![vec![ParamPoly::zero(m); d]; d]);
    }
    let s = newton_sums(p, 3 * d - 2);
    let traces: Vec<ParamPoly> = (0..2 * d - 1)
        .map(|k| {
            q.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(ParamPoly::zero(m), |acc, (j, c)| &acc + &(c * &s[k + j]))
        })
        .collect();
    Ok((0..d)
        .map(|i| (0..d).map(|j| traces[i + j].clone()).collect())
        .collect())
}

/// Leading principal minors of sizes `1..=n`.
///
/// `f(S)` is the determinant of the first `|S|` rows restricted to the
/// column set `S`, expanded along the last row; the leading minor of size
/// `k` is `f({0..k})`.
pub fn leading_principal_minors(a: &[Vec<ParamPoly>]) -> Vec<ParamPoly> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    assert!(n < usize::BITS as usize, "matrix too large");
    let m = a[0][0].nvars;
    let mut f: Vec<Option<ParamPoly>> = vec![None; 1 << n];
    f[0] = Some(ParamPoly::one(m));
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|s| s.count_ones());
    for mask in masks {
        let row = mask.count_ones() as usize - 1;
        let mut acc = ParamPoly::zero(m);
        let mut after = 0;
        for col in (0..n).rev() {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &a[row][col];
            let sub = f[mask & !(1 << col)]
                .as_ref()
                .expect("smaller subsets come first");
            if !entry.is_zero() && !sub.is_zero() {
                let term = entry * sub;
                acc = if after % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            after += 1;
        }
        f[mask] = Some(acc);
    }
    (1..=n)
        .map(|k| f[(1 << k) - 1].take().expect("computed"))
        .collect()
}

/// Union over `Q` in the product family `Prod_{bit(p)}` of the leading
/// principal minors of `Her(P, Q)`, deduplicated and sorted. `p` defaults
/// to `deg_X P`.
pub fn helim(
    p: &ParamUniPoly,
    plist: &[ParamUniPoly],
    bound: Option<usize>,
) -> Result<Vec<ParamPoly>> {
    let d = match p.degree() {
        Some(d) if d >= 1 && p.is_monic() => d,
        _ => return Err(Error::NotMonic),
    };
    if plist.iter().any(|q| q.nvars != p.nvars) {
        return Err(Error::DimensionMismatch("parameter counts differ".into()));
    }
    let reduced: Vec<ParamUniPoly> = plist
        .iter()
        .map(|q| q.rem_monic(p))
        .collect::<Result<_>>()?;
    let family = prod_family(plist.len(), bound.unwrap_or(d));
    let minors: Vec<Vec<ParamPoly>> = family
        .par_iter()
        .map(|alpha| {
            let mut q = ParamUniPoly::one(p.nvars);
            for (pi, &e) in reduced.iter().zip(alpha) {
                for _ in 0..e {
                    q = q.mul(pi).rem_monic(p)?;
                }
            }
            Ok(leading_principal_minors(&parametric_hermite(p, &q)?))
        })
        .collect::<Result<_>>()?;
    let set: BTreeSet<ParamPoly> = minors.into_iter().flatten().collect();
    Ok(set.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceGroup {
    /// Signs of the HElim family at the group's samples.
    pub signs: Vec<i8>,
    /// Indices into the sample list.
    pub samples: Vec<usize>,
    /// Output at the group's first sample.
    pub output: RealNonrealResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceViolation {
    pub group: usize,
    pub sample: usize,
    pub output: RealNonrealResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub family: Vec<ParamPoly>,
    pub groups: Vec<InvarianceGroup>,
    pub violations: Vec<InvarianceViolation>,
}

impl InvarianceReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Groups the samples by the sign vector they give HElim and checks that
/// real-nonreal determination returns the same answer across each group.
pub fn invariance_check(
    p: &ParamUniPoly,
    plist: &[ParamUniPoly],
    samples: &[Vec<Rational>],
) -> Result<InvarianceReport> {
    let family = helim(p, plist, None)?;
    let mut groups: Vec<InvarianceGroup> = Vec::new();
    let mut violations = Vec::new();
    for (k, y) in samples.iter().enumerate() {
        if y.len() != p.nvars {
            return Err(Error::DimensionMismatch(format!(
                "sample {k} has {} coordinates, expected {}",
                y.len(),
                p.nvars
            )));
        }
        let signs: Vec<i8> = family.iter().map(|f| sign_of(&f.eval(y))).collect();
        let special: Vec<UniPoly> = plist.iter().map(|q| q.specialize(y)).collect();
        let mut h = ZeroSetHandle::new(&p.specialize(y), Backend::Sturm)?;
        let output = real_nonreal_determination(&mut h, &special)?;
        match groups.iter().position(|g| g.signs == signs) {
            Some(g) => {
                groups[g].samples.push(k);
                if groups[g].output != output {
                    violations.push(InvarianceViolation {
                        group: g,
                        sample: k,
                        output,
                    });
                }
            }
            None => groups.push(InvarianceGroup {
                signs,
                samples: vec![k],
                output,
            }),
        }
    }
    Ok(InvarianceReport {
        family,
        groups,
        violations,
    })
}
