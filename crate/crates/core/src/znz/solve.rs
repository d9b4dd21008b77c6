use super::adapted::{InfoEntry, InfoMatrix};
use super::conditions::ConditionList;
use crate::error::{Error, Result};

/// Solves `mat * c = v` where `mat = Mat(Ada(sigma), sigma)` for a list of
/// zero-nonzero conditions, using the block structure recorded in `info`.
///
/// Rows of `info`, `sigma` and `Ada(sigma)` share one ordering, so the last
/// Info column splits row and column indices at once into `l0`, `l1` and
/// `lstar`. With `l = l0 u lstar`:
///
/// ```text
/// t(l)   = Mat(Ada(Xi), Xi)^-1 v(l)
/// t(l1)  = v(l1) - mat(l1, lstar) t(lstar)
/// c(l1)  = Mat(Ada(Xi'), Xi')^-1 t(l1)
/// c(l0)  = t(l0) - c(l1)
/// c(lstar) = t(lstar)
/// ```
///
/// The solution is integral whenever `v` is.
pub fn linear_solve(
    sigma: &ConditionList,
    info: &InfoMatrix,
    mat: &[Vec<i8>],
    v: &[i64],
) -> Result<Vec<i64>> {
    let n = sigma.len();
    if info.len() != n
        || info.width() != sigma.width()
        || mat.len() != n
        || mat.iter().any(|r| r.len() != n)
        || v.len() != n
    {
        return Err(Error::DimensionMismatch(format!(
            "{n} conditions, Info {}x{}, matrix {}x{}, vector {}",
            info.len(),
            info.width(),
            mat.len(),
            mat.first().map_or(0, Vec::len),
            v.len()
        )));
    }
    if info
        .rows()
        .iter()
        .flatten()
        .any(|e| matches!(e, InfoEntry::Ext(k) if *k > 1))
    {
        return Err(Error::DimensionMismatch(
            "block solver handles zero-nonzero conditions only".into(),
        ));
    }
    let rows: Vec<usize> = (0..n).collect();
    Ok(solve_block(info, mat, &rows, info.width(), v))
}

fn solve_block(
    info: &InfoMatrix,
    mat: &[Vec<i8>],
    rows: &[usize],
    width: usize,
    v: &[i64],
) -> Vec<i64> {
    if width == 0 || rows.len() <= 1 {
        return v.to_vec();
    }
    let col = width - 1;
    let (mut l0, mut l1, mut lstar, mut ell) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (pos, &row) in rows.iter().enumerate() {
        match info.get(row, col) {
            InfoEntry::Ext(0) => {
                l0.push(pos);
                ell.push(pos);
            }
            InfoEntry::Star => {
                lstar.push(pos);
                ell.push(pos);
            }
            _ => l1.push(pos),
        }
    }
    let ell_rows: Vec<usize> = ell.iter().map(|&p| rows[p]).collect();
    let ell_v: Vec<i64> = ell.iter().map(|&p| v[p]).collect();
    let t_ell = solve_block(info, mat, &ell_rows, width - 1, &ell_v);

    let mut c = vec![0i64; rows.len()];
    for (&p, t) in ell.iter().zip(&t_ell) {
        c[p] = *t;
    }
    if l0.is_empty() {
        return c;
    }

    let t1: Vec<i64> = l1
        .iter()
        .map(|&p1| {
            let correction: i64 = lstar
                .iter()
                .filter(|&&ps| mat[rows[p1]][rows[ps]] != 0)
                .map(|&ps| i64::from(mat[rows[p1]][rows[ps]]) * c[ps])
                .sum();
            v[p1] - correction
        })
        .collect();
    let l1_rows: Vec<usize> = l1.iter().map(|&p| rows[p]).collect();
    let c1 = solve_block(info, mat, &l1_rows, width - 1, &t1);
    for ((&p0, &p1), x1) in l0.iter().zip(&l1).zip(c1) {
        c[p0] -= x1;
        c[p1] = x1;
    }
    c
}
