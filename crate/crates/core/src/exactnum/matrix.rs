#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rational::{rat, sign_of, Rational};
use crate::error::{Error, Result};

/// Square symmetric matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        let m = SymMatrix { dim, entries };
        for i in 0..dim {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::DimensionMismatch(format!(
                        "entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn zero(dim: usize) -> Self {
        SymMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(<[_]>::to_vec)
            .collect()
    }

    /// `det(lambda * Id - M)` as a polynomial in lambda.
    pub fn characteristic_polynomial(&self) -> UniPoly {
        characteristic_polynomial(self.rows())
    }
}

/// Power sums `s_0, ..., s_{count-1}` of the roots of a monic `p`, counted
/// with multiplicity.
pub fn newton_sums(p: &UniPoly, count: usize) -> Result<Vec<Rational>> {
    let d = match p.degree() {
        Some(d) if d >= 1 && p.is_monic() => d,
        _ => return Err(Error::NotMonic),
    };
    let a = |k: usize| p.coeff(k);
    let mut s: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            s.push(rat(d as i64));
            continue;
        }
        let mut acc = if k <= d {
            a(d - k) * rat(k as i64)
        } else {
            Rational::zero()
        };
        for j in 1..=(k - 1).min(d) {
            acc += a(d - j) * &s[k - j];
        }
        s.push(-acc);
    }
    Ok(s)
}

/// Hermite matrix of `(p, q)`: entry `(i, j)` is the trace of multiplication
/// by `X^(i+j) q` on `K[X]/(p)`.
pub fn hermite_matrix(p: &UniPoly, q: &UniPoly) -> Result<SymMatrix> {
    let d = match p.degree() {
        Some(d) if d >= 1 && p.is_monic() => d,
        _ => return Err(Error::NotMonic),
    };
    let q = q.rem(p)?;
    if q.is_zero() {
        return Ok(SymMatrix::zero(d));
    }
    let s = newton_sums(p, 3 * d - 2)?;
    let traces: Vec<Rational> = (0..2 * d - 1)
        .map(|k| {
            q.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(Rational::zero(), |acc, (m, c)| acc + c * &s[k + m])
        })
        .collect();
    let entries = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| traces[i + j].clone())
        .collect();
    Ok(SymMatrix { dim: d, entries })
}

/// Characteristic polynomial by reduction to Hessenberg form.
pub fn characteristic_polynomial(mut h: Vec<Vec<Rational>>) -> UniPoly {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let col = m - 1;
        let Some(piv) = (m..n).find(|&i| !h[i][col].is_zero()) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let pivot_inv = h[m][col].recip();
        for j in m + 1..n {
            if h[j][col].is_zero() {
                continue;
            }
            let u = &h[j][col] * &pivot_inv;
            for k in 0..n {
                let t = &u * &h[m][k];
                h[j][k] -= t;
            }
            for row in h.iter_mut() {
                let t = &u * &row[j];
                row[m] += t;
            }
        }
    }
    let mut chars: Vec<UniPoly> = vec![UniPoly::one()];
    for m in 1..=n {
        let lin = UniPoly::new(vec![-h[m - 1][m - 1].clone(), Rational::one()]);
        let mut pm = &lin * &chars[m - 1];
        let mut t = Rational::one();
        for i in (1..m).rev() {
            t *= &h[i][i - 1];
            if t.is_zero() {
                break;
            }
            let coef = &t * &h[i - 1][m - 1];
            if !coef.is_zero() {
                pm = &pm - &chars[i - 1].scale(&coef);
            }
        }
        chars.push(pm);
    }
    chars.pop().unwrap_or_else(UniPoly::one)
}

/// Rank and signature of a symmetric matrix by congruence diagonalization
/// (Sylvester's law of inertia).
pub fn rank_and_signature(m: &SymMatrix) -> (usize, i64) {
    let n = m.dim();
    let mut a = m.rows();
    let (mut rank, mut signature) = (0usize, 0i64);
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                // e_i <- e_i + e_j makes the diagonal entry 2 a_ij
                for t in 0..n {
                    let v = a[j][t].clone();
                    a[i][t] += v;
                }
                for t in 0..n {
                    let v = a[t][j].clone();
                    a[t][i] += v;
                }
                i
            }
        };
        a.swap(k, pivot);
        for row in a.iter_mut() {
            row.swap(k, pivot);
        }
        let d = a[k][k].clone();
        rank += 1;
        signature += i64::from(sign_of(&d));
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for j in k + 1..n {
                if !a[k][j].is_zero() {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
        }
        for i in k + 1..n {
            a[i][k] = Rational::zero();
            a[k][i] = Rational::zero();
        }
    }
    (rank, signature)
}

/// Solves the square system `a x = b` by Gaussian elimination over the
/// rationals. Errors when `a` is singular.
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "{}x? system with right-hand side of length {}",
            n,
            b.len()
        )));
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&i| !m[i][col].is_zero())
            .ok_or_else(|| Error::Inconsistent("singular linear system".into()))?;
        m.swap(piv, col);
        let inv = m[col][col].recip();
        for k in col..=n {
            m[col][k] *= &inv;
        }
        for i in 0..n {
            if i == col || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for k in col..=n {
                let t = &f * &m[col][k];
                m[i][k] -= t;
            }
        }
    }
    Ok(m.into_iter()
        .map(|mut r| r.pop().unwrap_or_else(Rational::zero))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::ratio;

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn newton_sums_examples() {
        let s = newton_sums(&UniPoly::from_i64(&[-1, 0, 1]), 4).unwrap();
        assert_eq!(s, vec![rat(2), rat(0), rat(2), rat(0)]);
        let a = ratio(3, 2);
        let s = newton_sums(&UniPoly::linear_root(&a), 5).unwrap();
        for (k, sk) in s.iter().enumerate() {
            assert_eq!(*sk, num_traits::pow(a.clone(), k));
        }
        let s = newton_sums(&UniPoly::from_i64(&[0, 0, 1]), 3).unwrap();
        assert_eq!(s, vec![rat(2), rat(0), rat(0)]);
    }

    #[test]
    fn newton_sums_reject_non_monic() {
        assert_eq!(
            newton_sums(&UniPoly::from_i64(&[1, 2]), 3),
            Err(Error::NotMonic)
        );
        assert_eq!(newton_sums(&UniPoly::one(), 3), Err(Error::NotMonic));
    }

    #[test]
    fn hermite_examples() {
        let p = UniPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(
            hermite_matrix(&p, &UniPoly::one()).unwrap(),
            sym(&[&[2, 0], &[0, 2]])
        );
        assert_eq!(
            hermite_matrix(&p, &UniPoly::x()).unwrap(),
            sym(&[&[0, 2], &[2, 0]])
        );
        assert_eq!(
            hermite_matrix(&p, &UniPoly::zero()).unwrap(),
            SymMatrix::zero(2)
        );
        // q is reduced mod p first: X^2 = 1 on the roots
        assert_eq!(
            hermite_matrix(&p, &UniPoly::from_i64(&[0, 0, 1])).unwrap(),
            sym(&[&[2, 0], &[0, 2]])
        );
    }

    #[test]
    fn rank_signature_examples() {
        assert_eq!(rank_and_signature(&sym(&[&[2, 0], &[0, 2]])), (2, 2));
        assert_eq!(rank_and_signature(&sym(&[&[0, 2], &[2, 0]])), (2, 0));
        assert_eq!(rank_and_signature(&SymMatrix::zero(3)), (0, 0));
        assert_eq!(rank_and_signature(&sym(&[&[1, 1], &[1, 1]])), (1, 1));
        assert_eq!(
            rank_and_signature(&sym(&[&[0, 0, 1], &[0, -3, 0], &[1, 0, 0]])),
            (3, -1)
        );
    }

    #[test]
    fn characteristic_polynomial_of_triangular_block() {
        let chi = characteristic_polynomial(vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(0), rat(3), rat(4)],
            vec![rat(0), rat(0), rat(5)],
        ]);
        assert_eq!(chi, UniPoly::from_roots(&[rat(2), rat(3), rat(5)]));
    }

    #[test]
    fn asymmetric_rows_rejected() {
        let rows = vec![vec![rat(1), rat(2)], vec![rat(3), rat(1)]];
        assert!(SymMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn gaussian_solve() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]];
        let x = solve_linear(&a, &[rat(5), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(3), rat(2)]);
        let singular = vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]];
        assert!(solve_linear(&singular, &[rat(1), rat(1)]).is_err());
    }
}
