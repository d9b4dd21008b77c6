//! Sign determination on the real zero set with Tarski queries.
//!
//! Same skeleton as zero-nonzero determination over the alphabet
//! `{0, 1, -1}` (ordered `0 < 1 < -1`): polynomials are added one at a time,
//! the base system
//!
//! ```text
//! | 1 1  1 |   | c(P = 0) |   | TaQu(1)   |
//! | 0 1 -1 | . | c(P > 0) | = | TaQu(P)   |
//! | 0 1  1 |   | c(P < 0) |   | TaQu(P^2) |
//! ```
//!
//! tells which signs of `P_i` occur, and when more than one does, the
//! candidate list `Sigma_{i-1} x S_i` is resolved with the queries
//! `P^(Ada_{i-1}, i^e)`. Adapted families carry exponents in `{0, 1, 2}`.
//! The systems are small (at most the number of real roots) and are solved
//! by plain exact elimination.

use crate::error::{Error, Result};
use crate::exactnum::{rat, solve_linear, Rational, UniPoly};
use crate::queries::ZeroSetHandle;
use crate::znz::{ada, mat_of, ConditionList, ExponentList};

/// Unique solution `(c_zero, c_pos, c_neg)` of the base system.
pub fn base_sign_solve(taqu_one: i64, taqu_p: i64, taqu_p2: i64) -> Result<(usize, usize, usize)> {
    let zero = taqu_one - taqu_p2;
    let (pos2, neg2) = (taqu_p2 + taqu_p, taqu_p2 - taqu_p);
    if zero < 0 || pos2 < 0 || neg2 < 0 || pos2 % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "Tarski queries ({taqu_one}, {taqu_p}, {taqu_p2}) admit no sign counts"
        )));
    }
    Ok((zero as usize, (pos2 / 2) as usize, (neg2 / 2) as usize))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignStep {
    pub index: usize,
    /// `(c(P_i = 0), c(P_i > 0), c(P_i < 0))` on the real zero set.
    pub base_counts: (usize, usize, usize),
    /// Full exponent vectors whose Tarski query the step needed.
    pub queried: Vec<Vec<u8>>,
    /// Number of realizable sign conditions before the step.
    pub card_before: usize,
}

#[derive(Clone, Debug)]
pub struct SignOutcome {
    pub feas: ConditionList,
    pub counts: Vec<usize>,
    /// Adapted family of `feas`.
    pub ada: ExponentList,
    pub trace: Vec<SignStep>,
}

/// Realizable sign conditions of `plist` on the real zero set of the
/// handle's polynomial, with their cardinals.
pub fn sign_determination(h: &mut ZeroSetHandle, plist: &[UniPoly]) -> Result<SignOutcome> {
    let s = plist.len();
    let r = h.tarski_query_product(plist, &vec![0; s])?;
    let r = usize::try_from(r)
        .map_err(|_| Error::Inconsistent(format!("TaQu(1) = {r} is negative")))?;
    if r == 0 {
        return Ok(SignOutcome {
            feas: ConditionList::new((1..=s).collect(), Vec::new())?,
            counts: Vec::new(),
            ada: ExponentList::new((1..=s).collect(), Vec::new())?,
            trace: Vec::new(),
        });
    }

    let mut feas = ConditionList::empty_condition();
    let mut counts = vec![r];
    let mut family = ExponentList::new(Vec::new(), vec![Vec::new()])?;
    let mut trace = Vec::with_capacity(s);
    for i in 1..=s {
        let mut single = vec![0u8; s];
        single[i - 1] = 1;
        let mut square = vec![0u8; s];
        square[i - 1] = 2;
        let t1 = h.tarski_query_product(plist, &single)?;
        let t2 = h.tarski_query_product(plist, &square)?;
        let (c0, cp, cn) = base_sign_solve(r as i64, t1, t2)?;
        let signs: Vec<i8> = [(0i8, c0), (1, cp), (-1, cn)]
            .into_iter()
            .filter(|&(_, c)| c > 0)
            .map(|(v, _)| v)
            .collect();
        let card_before = feas.len();
        let mut queried = vec![single, square];

        let mut indices = feas.indices().to_vec();
        indices.push(i);
        if signs.len() == 1 {
            let rows = feas
                .rows()
                .iter()
                .map(|row| extended(row, signs[0]))
                .collect();
            feas = ConditionList::new(indices, rows)?;
        } else {
            let candidates = ConditionList::new(
                indices.clone(),
                feas.rows()
                    .iter()
                    .flat_map(|row| signs.iter().map(move |&v| extended(row, v)))
                    .collect(),
            )?;
            let mut plan_rows = Vec::with_capacity(candidates.len());
            let mut values = Vec::with_capacity(candidates.len());
            for k in 0..family.len() {
                let base = family.full_exponents(k, s);
                if h.ledger().cached_tarski(&base).is_none() {
                    return Err(Error::CacheMiss(base));
                }
                for e in 0..signs.len() as u8 {
                    let mut alpha = base.clone();
                    alpha[i - 1] = e;
                    values.push(rat(h.tarski_query_product(plist, &alpha)?));
                    if e > 0 && !queried.contains(&alpha) {
                        queried.push(alpha);
                    }
                    plan_rows.push(extended_exponents(&family.rows()[k], e));
                }
            }
            let plan = ExponentList::new(indices.clone(), plan_rows)?;
            let matrix: Vec<Vec<Rational>> = mat_of(&plan, &candidates)?
                .into_iter()
                .map(|row| row.into_iter().map(|x| rat(i64::from(x))).collect())
                .collect();
            let solution = solve_linear(&matrix, &values)?;

            let mut rows = Vec::new();
            let mut new_counts = Vec::new();
            for (row, c) in candidates.rows().iter().zip(solution) {
                if !c.is_integer() || c < Rational::from_integer(0.into()) {
                    return Err(Error::Inconsistent(format!(
                        "non-natural count {c} for sign condition {row:?}"
                    )));
                }
                let c = usize::try_from(c.to_integer())
                    .map_err(|_| Error::Inconsistent("count overflow".into()))?;
                if c > 0 {
                    rows.push(row.clone());
                    new_counts.push(c);
                }
            }
            feas = ConditionList::new(indices, rows)?;
            counts = new_counts;
        }
        family = ada(&feas);
        trace.push(SignStep {
            index: i,
            base_counts: (c0, cp, cn),
            queried,
            card_before,
        });
    }
    Ok(SignOutcome {
        feas,
        counts,
        ada: family,
        trace,
    })
}

fn extended(row: &[i8], v: i8) -> Vec<i8> {
    let mut r = row.to_vec();
    r.push(v);
    r
}

fn extended_exponents(row: &[u8], e: u8) -> Vec<u8> {
    let mut r = row.to_vec();
    r.push(e);
    r
}
