//! Brute-force ground truth on instances built from known roots.
//!
//! `P` is assembled from explicit real roots and conjugate pairs, so every
//! condition can be checked by evaluating the system at each distinct root.
//! Multiplicities only make `P` non-squarefree; the counts are over the
//! set of distinct roots.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, ratio, sign_of, ComplexRational, Rational, UniPoly};
use crate::queries::{Backend, LedgerStats, ZeroSetHandle};
use crate::realnonreal::real_nonreal_determination;
use crate::signdet::sign_determination;
use crate::znz::{compare_conditions, zero_nonzero_determination, ConditionList};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSpec {
    /// `(root, multiplicity)`.
    pub real_roots: Vec<(Rational, u32)>,
    /// `(re, im, multiplicity)` standing for the pair `re +- i im`.
    pub complex_pairs: Vec<(Rational, Rational, u32)>,
}

impl RootSpec {
    pub fn validate(&self) -> Result<()> {
        let mut reals = BTreeSet::new();
        for (a, m) in &self.real_roots {
            if *m == 0 {
                return Err(Error::InvalidRootSpec(format!(
                    "root {} has multiplicity 0",
                    format_rational(a)
                )));
            }
            if !reals.insert(a) {
                return Err(Error::InvalidRootSpec(format!(
                    "duplicate real root {}",
                    format_rational(a)
                )));
            }
        }
        let mut pairs = BTreeSet::new();
        for (re, im, m) in &self.complex_pairs {
            let pair = format!("{} +- {}i", format_rational(re), format_rational(im));
            if *m == 0 {
                return Err(Error::InvalidRootSpec(format!(
                    "pair {pair} has multiplicity 0"
                )));
            }
            if sign_of(im) == 0 {
                return Err(Error::InvalidRootSpec(format!("pair {pair} is real")));
            }
            let abs = if sign_of(im) < 0 {
                -im.clone()
            } else {
                im.clone()
            };
            if !pairs.insert((re, abs)) {
                return Err(Error::InvalidRootSpec(format!("duplicate pair {pair}")));
            }
        }
        Ok(())
    }

    /// Number of distinct complex roots.
    pub fn distinct_roots(&self) -> usize {
        self.real_roots.len() + 2 * self.complex_pairs.len()
    }
}

/// `prod (X - a)^m * prod ((X - re)^2 + im^2)^m`.
pub fn build_instance(spec: &RootSpec) -> Result<UniPoly> {
    spec.validate()?;
    let mut p = UniPoly::one();
    for (a, m) in &spec.real_roots {
        p = &p * &UniPoly::linear_root(a).pow(*m);
    }
    for (re, im, m) in &spec.complex_pairs {
        let quad = UniPoly::new(vec![
            re * re + im * im,
            -(re + re),
            Rational::from_integer(1.into()),
        ]);
        p = &p * &quad.pow(*m);
    }
    Ok(p)
}

/// Conditions with their cardinals, sorted in the library's condition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counted {
    pub feas: ConditionList,
    pub counts: Vec<usize>,
}

impl Counted {
    fn from_map(s: usize, map: BTreeMap<Vec<i8>, usize>) -> Result<Self> {
        let mut pairs: Vec<(Vec<i8>, usize)> = map.into_iter().filter(|(_, c)| *c > 0).collect();
        pairs.sort_by(|a, b| compare_conditions(&a.0, &b.0));
        let (rows, counts) = pairs.into_iter().unzip();
        Ok(Counted {
            feas: ConditionList::new((1..=s).collect(), rows)?,
            counts,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectTruth {
    pub all: Counted,
    pub real: Counted,
    pub nonreal: Counted,
    pub real_signs: Counted,
}

/// Evaluates every polynomial at every distinct root.
pub fn direct_feasible(spec: &RootSpec, plist: &[UniPoly]) -> Result<DirectTruth> {
    spec.validate()?;
    let s = plist.len();
    let mut all = BTreeMap::new();
    let mut real = BTreeMap::new();
    let mut nonreal = BTreeMap::new();
    let mut real_signs = BTreeMap::new();
    for (a, _) in &spec.real_roots {
        let signs: Vec<i8> = plist.iter().map(|q| sign_of(&q.eval(a))).collect();
        let bits: Vec<i8> = signs.iter().map(|&v| i8::from(v != 0)).collect();
        *all.entry(bits.clone()).or_default() += 1;
        *real.entry(bits).or_default() += 1;
        *real_signs.entry(signs).or_default() += 1;
    }
    for (re, im, _) in &spec.complex_pairs {
        let z = ComplexRational::new(re.clone(), im.clone());
        let bits: Vec<i8> = plist
            .iter()
            .map(|q| i8::from(!q.eval_complex(&z).is_zero()))
            .collect();
        *all.entry(bits.clone()).or_default() += 2;
        *nonreal.entry(bits).or_default() += 2;
    }
    Ok(DirectTruth {
        all: Counted::from_map(s, all)?,
        real: Counted::from_map(s, real)?,
        nonreal: Counted::from_map(s, nonreal)?,
        real_signs: Counted::from_map(s, real_signs)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCase {
    pub spec: RootSpec,
    pub system: Vec<UniPoly>,
}

fn small_rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn random_poly(rng: &mut impl Rng, degree: usize) -> UniPoly {
    loop {
        let coeffs: Vec<Rational> = (0..=degree)
            .map(|_| small_rational(rng, 1000, 10))
            .collect();
        let p = UniPoly::new(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// One random instance: at most 8 distinct roots (a conjugate pair counts
/// twice), multiplicities at most 3, at most 8 polynomials of degree at
/// most 6. Many polynomials are built from factors of `P` so that they
/// vanish on part of the zero set.
pub fn random_case(rng: &mut impl Rng) -> OracleCase {
    let budget = rng.gen_range(1..=8usize);
    let mut spec = RootSpec::default();
    let mut used = 0;
    let mut reals = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    while used < budget {
        if budget - used >= 2 && rng.gen_bool(0.35) {
            let re = small_rational(rng, 6, 3);
            let im = loop {
                let v = small_rational(rng, 6, 3);
                if sign_of(&v) > 0 {
                    break v;
                }
            };
            if pairs.insert((re.clone(), im.clone())) {
                spec.complex_pairs.push((re, im, rng.gen_range(1..=3)));
                used += 2;
            }
        } else {
            let a = small_rational(rng, 10, 4);
            if reals.insert(a.clone()) {
                spec.real_roots.push((a, rng.gen_range(1..=3)));
                used += 1;
            }
        }
    }

    let factors: Vec<UniPoly> = spec
        .real_roots
        .iter()
        .map(|(a, _)| UniPoly::linear_root(a))
        .chain(spec.complex_pairs.iter().map(|(re, im, _)| {
            UniPoly::new(vec![
                re * re + im * im,
                -(re + re),
                Rational::from_integer(1.into()),
            ])
        }))
        .collect();
    let s = rng.gen_range(0..=8usize);
    let system = (0..s)
        .map(|_| match rng.gen_range(0..10) {
            0..=4 => {
                let mut q = UniPoly::one();
                for _ in 0..rng.gen_range(1..=2) {
                    let f = &factors[rng.gen_range(0..factors.len())];
                    if q.degree().unwrap_or(0) + f.degree().unwrap_or(0) <= 6 {
                        q = &q * f;
                    }
                }
                let room = 6 - q.degree().unwrap_or(0);
                let degree = rng.gen_range(0..=room.min(2));
                let extra = random_poly(rng, degree);
                &q * &extra
            }
            5 => UniPoly::constant(small_rational(rng, 1000, 10)),
            _ => {
                let degree = rng.gen_range(1..=6);
                random_poly(rng, degree)
            }
        })
        .collect();
    OracleCase { spec, system }
}

/// `count` instances from a ChaCha8 stream seeded with `seed`.
pub fn seeded_cases(seed: u64, count: usize) -> Vec<OracleCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_case(&mut rng)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub passed: bool,
    pub mismatches: Vec<String>,
    pub stats: LedgerStats,
}

fn compare(
    label: &str,
    got_feas: &ConditionList,
    got: &[usize],
    want: &Counted,
    out: &mut Vec<String>,
) {
    if got_feas.rows() != want.feas.rows() || got != want.counts.as_slice() {
        out.push(format!(
            "{label}: got {:?} {:?}, expected {:?} {:?}",
            got_feas.to_sign_strings(),
            got,
            want.feas.to_sign_strings(),
            want.counts
        ));
    }
}

/// Runs all three determinations on one shared handle and compares them
/// with direct evaluation.
pub fn check_case(case: &OracleCase, backend: Backend) -> Result<CaseReport> {
    let truth = direct_feasible(&case.spec, &case.system)?;
    let p = build_instance(&case.spec)?;
    let mut h = ZeroSetHandle::new(&p, backend)?;
    let mut mismatches = Vec::new();

    let znz = zero_nonzero_determination(&mut h, &case.system)?;
    compare(
        "zero-nonzero",
        &znz.feas,
        &znz.counts,
        &truth.all,
        &mut mismatches,
    );
    let sign = sign_determination(&mut h, &case.system)?;
    compare(
        "sign",
        &sign.feas,
        &sign.counts,
        &truth.real_signs,
        &mut mismatches,
    );
    match real_nonreal_determination(&mut h, &case.system) {
        Ok(rn) => {
            compare(
                "real",
                &rn.feas_real,
                &rn.c_real,
                &truth.real_signs,
                &mut mismatches,
            );
            compare(
                "nonreal",
                &rn.feas_nonreal,
                &rn.c_nonreal,
                &truth.nonreal,
                &mut mismatches,
            );
        }
        Err(e) => mismatches.push(format!("real-nonreal: {e}")),
    }
    Ok(CaseReport {
        passed: mismatches.is_empty(),
        mismatches,
        stats: h.ledger().stats(),
    })
}
