//! Info matrices, adapted families and compression of condition lists.
//!
//! Let `i` be the last index of `Sigma`, `Xi` the restrictions of `Sigma` to the
//! other indices and `Xi'` (resp. `Xi''`) the elements of `Xi` with at least
//! two (resp. three) extensions in `Sigma`. Then
//!
//! ```text
//! Ada(Sigma) = Ada(Xi) u (Ada(Xi'), i) u (Ada(Xi''), i^2)
//! ```
//!
//! where `(A, i^e)` raises the exponent of index `i` to `e` in every member of
//! `A`. For zero-nonzero conditions `Xi''` is always empty and the family is
//! a list of subsets. The Info matrix records, row by row, which extension of
//! its restriction each condition is, so that `Ada(Sigma)` can be read off it
//! and the block solver can recover the recursive structure without
//! recomputing it.

use std::fmt;

use super::conditions::ConditionList;
use crate::error::{Error, Result};

/// One entry of an Info matrix: `Star` when the restriction has a single
/// extension, otherwise the rank of this extension among its siblings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfoEntry {
    Star,
    Ext(u8),
}

impl fmt::Display for InfoEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfoEntry::Star => write!(f, "*"),
            InfoEntry::Ext(k) => write!(f, "{k}"),
        }
    }
}

/// Info matrix with one row per condition and one column per index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfoMatrix {
    width: usize,
    rows: Vec<Vec<InfoEntry>>,
}

impl InfoMatrix {
    pub fn new(width: usize, rows: Vec<Vec<InfoEntry>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch("ragged Info matrix".into()));
        }
        Ok(InfoMatrix { width, rows })
    }

    /// Parses rows such as `"*0**1"`.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .chars()
                    .map(|c| match c {
                        '*' | '\u{22c6}' => Ok(InfoEntry::Star),
                        d if d.is_ascii_digit() => Ok(InfoEntry::Ext(d as u8 - b'0')),
                        _ => Err(Error::Parse(format!("invalid Info entry {c:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let width = parsed.first().map_or(0, Vec::len);
        Self::new(width, parsed)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<InfoEntry>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> InfoEntry {
        self.rows[row][col]
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    pub(crate) fn push_row(&mut self, row: Vec<InfoEntry>) {
        debug_assert_eq!(row.len(), self.width);
        self.rows.push(row);
    }

    pub(crate) fn with_width(width: usize) -> Self {
        InfoMatrix {
            width,
            rows: Vec::new(),
        }
    }
}

/// List of exponent vectors over an index set. With exponents in `{0, 1}`
/// each row is a subset of the index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentList {
    indices: Vec<usize>,
    rows: Vec<Vec<u8>>,
}

/// Subset lists are exponent lists with exponents in `{0, 1}`.
pub type SubsetList = ExponentList;

impl ExponentList {
    pub fn new(indices: Vec<usize>, rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != indices.len()) {
            return Err(Error::DimensionMismatch("exponent row length".into()));
        }
        Ok(ExponentList { indices, rows })
    }

    /// Builds a subset list from 1-based index sets.
    pub fn from_subsets(indices: Vec<usize>, subsets: &[Vec<usize>]) -> Result<Self> {
        let rows = subsets
            .iter()
            .map(|sub| {
                let mut row = vec![0u8; indices.len()];
                for j in sub {
                    let pos = indices.iter().position(|x| x == j).ok_or_else(|| {
                        Error::DimensionMismatch(format!("index {j} not in {indices:?}"))
                    })?;
                    row[pos] = 1;
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(indices, rows)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `k` as a set of 1-based indices.
    pub fn subset(&self, k: usize) -> Vec<usize> {
        self.rows[k]
            .iter()
            .zip(&self.indices)
            .filter(|(&e, _)| e != 0)
            .map(|(_, &i)| i)
            .collect()
    }

    pub fn subsets(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|k| self.subset(k)).collect()
    }

    /// Row `k` as a full exponent vector over `1..=s`.
    pub fn full_exponents(&self, k: usize, s: usize) -> Vec<u8> {
        let mut out = vec![0u8; s];
        for (&e, &i) in self.rows[k].iter().zip(&self.indices) {
            out[i - 1] = e;
        }
        out
    }

    pub(crate) fn push_row(&mut self, row: Vec<u8>) {
        debug_assert_eq!(row.len(), self.indices.len());
        self.rows.push(row);
    }
}

/// Info matrix of a canonical condition list.
pub fn get_info(sigma: &ConditionList) -> InfoMatrix {
    let rows: Vec<&[i8]> = sigma.rows().iter().map(Vec::as_slice).collect();
    InfoMatrix {
        width: sigma.width(),
        rows: info_rows(&rows, sigma.width()),
    }
}

fn info_rows(rows: &[&[i8]], width: usize) -> Vec<Vec<InfoEntry>> {
    if width == 0 {
        return vec![Vec::new(); rows.len()];
    }
    let last = width - 1;
    let mut labels = Vec::with_capacity(rows.len());
    // levels[t] = row positions that are the t-th extension of their
    // restriction (level 0 also holds the single extensions)
    let mut levels: Vec<Vec<usize>> = vec![Vec::new()];
    let mut start = 0;
    while start < rows.len() {
        let mut end = start + 1;
        while end < rows.len() && rows[end][..last] == rows[start][..last] {
            end += 1;
        }
        let group = end - start;
        for (t, pos) in (start..end).enumerate() {
            if levels.len() <= t {
                levels.push(Vec::new());
            }
            levels[t].push(pos);
            labels.push(if group == 1 {
                InfoEntry::Star
            } else {
                InfoEntry::Ext(t as u8)
            });
        }
        start = end;
    }
    let mut out: Vec<Vec<InfoEntry>> = vec![Vec::with_capacity(width); rows.len()];
    for level in &levels {
        let restricted: Vec<&[i8]> = level.iter().map(|&p| &rows[p][..last]).collect();
        for (&p, prefix_info) in level.iter().zip(info_rows(&restricted, last)) {
            out[p] = prefix_info;
        }
    }
    for (row, label) in out.iter_mut().zip(labels) {
        row.push(label);
    }
    out
}

/// Reads the adapted family off an Info matrix: row `j` gets, in each column,
/// the extension rank recorded there (0 for `Star`).
pub fn adapted_family(sigma: &ConditionList, info: &InfoMatrix) -> Result<ExponentList> {
    if info.len() != sigma.len() || info.width() != sigma.width() {
        return Err(Error::DimensionMismatch(format!(
            "Info matrix {}x{} for {} conditions over {} indices",
            info.len(),
            info.width(),
            sigma.len(),
            sigma.width()
        )));
    }
    let rows = info
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    InfoEntry::Ext(k) => *k,
                    InfoEntry::Star => 0,
                })
                .collect()
        })
        .collect();
    Ok(ExponentList {
        indices: sigma.indices().to_vec(),
        rows,
    })
}

/// `Ada(Sigma)` in Info row order.
pub fn ada(sigma: &ConditionList) -> ExponentList {
    adapted_family(sigma, &get_info(sigma)).expect("Info built from the same list")
}

/// Compressed index set and the restriction of `sigma` to it.
///
/// An index belongs to the compressed set when restricting to the indices up
/// to it gives strictly more distinct conditions than restricting to the
/// indices before it.
pub fn compress(sigma: &ConditionList) -> Result<(Vec<usize>, ConditionList)> {
    if sigma.is_empty() {
        return Err(Error::EmptyConditionList);
    }
    let mut columns = Vec::new();
    let mut previous = 1;
    for col in 0..sigma.width() {
        let distinct = 1 + sigma
            .rows()
            .windows(2)
            .filter(|w| w[0][..=col] != w[1][..=col])
            .count();
        if distinct > previous {
            columns.push(col);
        }
        previous = distinct;
    }
    let comp: Vec<usize> = columns.iter().map(|&c| sigma.indices()[c]).collect();
    // restriction to the compressed columns keeps the order and is injective
    let rows = sigma.restrict_columns(&columns);
    Ok((comp.clone(), ConditionList::new(comp, rows)?))
}

/// Matrix of `a` on `sigma`: entry `(i, j)` is the product over the indices
/// of `sigma_j(index)^(exponent of a_i)`, with `0^0 = 1`.
pub fn mat_of(a: &ExponentList, sigma: &ConditionList) -> Result<Vec<Vec<i8>>> {
    let positions = a
        .indices()
        .iter()
        .map(|i| {
            sigma.indices().iter().position(|j| j == i).ok_or_else(|| {
                Error::DimensionMismatch(format!("index {i} not in {:?}", sigma.indices()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(a.rows()
        .iter()
        .map(|exps| {
            sigma
                .rows()
                .iter()
                .map(|cond| evaluate_monomial(exps, &positions, cond))
                .collect()
        })
        .collect())
}

pub(crate) fn evaluate_monomial(exps: &[u8], positions: &[usize], cond: &[i8]) -> i8 {
    let mut v = 1i8;
    for (&e, &p) in exps.iter().zip(positions) {
        if e == 0 {
            continue;
        }
        let x = cond[p];
        v *= if e % 2 == 0 { x * x } else { x };
        if v == 0 {
            break;
        }
    }
    v
}
