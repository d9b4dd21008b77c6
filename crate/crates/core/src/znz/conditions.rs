use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Position of a condition value in the lexicographic alphabet order
/// `0 < 1 < -1`. On zero-nonzero conditions this is the usual `0 < 1`.
pub fn value_rank(v: i8) -> u8 {
    match v {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

pub fn compare_conditions(a: &[i8], b: &[i8]) -> Ordering {
    a.iter()
        .map(|&x| value_rank(x))
        .cmp(b.iter().map(|&x| value_rank(x)))
}

/// Ordered, duplicate-free list of conditions over an index set.
///
/// Zero-nonzero conditions use the values `{0, 1}`; sign conditions use
/// `{0, 1, -1}`. Index sets hold 1-based polynomial indices in increasing
/// order, one per column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConditionList {
    indices: Vec<usize>,
    rows: Vec<Vec<i8>>,
}

impl ConditionList {
    pub fn new(indices: Vec<usize>, rows: Vec<Vec<i8>>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::DimensionMismatch(
                "index set must be increasing".into(),
            ));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != indices.len()) {
            return Err(Error::DimensionMismatch(format!(
                "condition of length {} over {} indices",
                r.len(),
                indices.len()
            )));
        }
        if rows.iter().flatten().any(|v| !(-1..=1).contains(v)) {
            return Err(Error::DimensionMismatch(
                "condition values lie in {0, 1, -1}".into(),
            ));
        }
        if rows
            .windows(2)
            .any(|w| compare_conditions(&w[0], &w[1]) != Ordering::Less)
        {
            return Err(Error::DimensionMismatch(
                "conditions must be strictly increasing in lexicographic order".into(),
            ));
        }
        Ok(ConditionList { indices, rows })
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(indices: Vec<usize>, mut rows: Vec<Vec<i8>>) -> Result<Self> {
        rows.sort_by(|a, b| compare_conditions(a, b));
        rows.dedup();
        Self::new(indices, rows)
    }

    /// The list `[()]` holding only the empty condition.
    pub fn empty_condition() -> Self {
        ConditionList {
            indices: Vec::new(),
            rows: vec![Vec::new()],
        }
    }

    /// Zero-nonzero conditions from strings such as `"10110"`, over `1..=len`.
    pub fn from_bit_strings<S: AsRef<str>>(strings: &[S]) -> Result<Self> {
        let rows = strings
            .iter()
            .map(|s| parse_condition(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let width = rows.first().map_or(0, Vec::len);
        Self::new((1..=width).collect(), rows)
    }

    pub(crate) fn from_parts_unchecked(indices: Vec<usize>, rows: Vec<Vec<i8>>) -> Self {
        debug_assert!(Self::new(indices.clone(), rows.clone()).is_ok());
        ConditionList { indices, rows }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn width(&self) -> usize {
        self.indices.len()
    }

    /// Restriction of every condition to the given columns (positions, not
    /// indices). Duplicates are kept, order is preserved.
    pub fn restrict_columns(&self, columns: &[usize]) -> Vec<Vec<i8>> {
        self.rows
            .iter()
            .map(|r| columns.iter().map(|&c| r[c]).collect())
            .collect()
    }

    pub fn to_bit_strings(&self) -> Vec<String> {
        self.rows.iter().map(|r| format_bits(r)).collect()
    }

    pub fn to_sign_strings(&self) -> Vec<String> {
        self.rows.iter().map(|r| format_signs(r)).collect()
    }
}

impl fmt::Display for ConditionList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                if r.contains(&-1) {
                    format_signs(r)
                } else {
                    format_bits(r)
                }
            })
            .map(|s| if s.is_empty() { "()".to_string() } else { s })
            .collect();
        write!(f, "[{}]", strings.join(", "))
    }
}

/// `0`/`1` string.
pub fn format_bits(row: &[i8]) -> String {
    row.iter()
        .map(|&v| if v == 0 { '0' } else { '1' })
        .collect()
}

/// `0`/`+`/`-` string.
pub fn format_signs(row: &[i8]) -> String {
    row.iter()
        .map(|&v| match v {
            0 => '0',
            1 => '+',
            _ => '-',
        })
        .collect()
}

/// Accepts `0`, `1`, `+`, `-` and the typographic minus `\u{2212}`.
pub fn parse_condition(text: &str) -> Result<Vec<i8>> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' | '+' => Ok(1),
            '-' | '\u{2212}' => Ok(-1),
            _ => Err(Error::Parse(format!(
                "invalid condition character {c:?} in {text:?}"
            ))),
        })
        .collect()
}
