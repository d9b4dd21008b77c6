#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use signcond::exactnum::{rat, Rational, UniPoly};
use signcond::znz::{compare_conditions, ConditionList};

/// Plain Gauss-Jordan elimination over the rationals, written out here so
/// the structured solver is compared with something it does not share
/// code with. `None` when singular.
pub fn gaussian_solve(a: &[Vec<i64>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            row.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .chain(std::iter::once(bi.clone()))
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(piv, col);
        let inv = BigRational::one() / m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

pub fn is_invertible(a: &[Vec<i64>]) -> bool {
    let zeros = vec![BigRational::zero(); a.len()];
    gaussian_solve(a, &zeros).is_some()
}

pub fn widen(m: &[Vec<i8>]) -> Vec<Vec<i64>> {
    m.iter()
        .map(|r| r.iter().map(|&x| i64::from(x)).collect())
        .collect()
}

/// Random list of distinct conditions over a random increasing index set
/// drawn from `1..=20`, values from `alphabet`.
pub fn random_condition_list(
    rng: &mut impl Rng,
    max_width: usize,
    max_card: usize,
    alphabet: &[i8],
) -> ConditionList {
    let width = rng.gen_range(0..=max_width);
    let mut pool: Vec<usize> = (1..=20).collect();
    pool.shuffle(rng);
    let mut indices: Vec<usize> = pool[..width].to_vec();
    indices.sort_unstable();
    let space = (alphabet.len() as f64).powi(width as i32);
    let card = rng.gen_range(1..=max_card.min(space as usize).max(1));
    let mut rows: Vec<Vec<i8>> = Vec::new();
    while rows.len() < card {
        let row: Vec<i8> = (0..width)
            .map(|_| *alphabet.choose(rng).expect("nonempty"))
            .collect();
        if !rows.contains(&row) {
            rows.push(row);
        }
    }
    rows.sort_by(|a, b| compare_conditions(a, b));
    ConditionList::new(indices, rows).expect("valid list")
}

pub fn random_poly(rng: &mut impl Rng, max_degree: usize, bound: i64) -> UniPoly {
    let degree = rng.gen_range(0..=max_degree);
    UniPoly::new(
        (0..=degree)
            .map(|_| rat(rng.gen_range(-bound..=bound)))
            .collect(),
    )
}

pub fn random_monic(rng: &mut impl Rng, degree: usize, bound: i64) -> UniPoly {
    let mut c: Vec<Rational> = (0..degree)
        .map(|_| rat(rng.gen_range(-bound..=bound)))
        .collect();
    c.push(rat(1));
    UniPoly::new(c)
}

pub fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
