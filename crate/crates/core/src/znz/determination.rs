use super::adapted::{
    adapted_family, evaluate_monomial, get_info, mat_of, ExponentList, InfoEntry, InfoMatrix,
};
use super::conditions::ConditionList;
use super::solve::linear_solve;
use crate::error::{Error, Result};
use crate::exactnum::UniPoly;
use crate::queries::{subset_key, ZeroSetHandle};

/// State carried from one polynomial to the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZnzState {
    /// Realizable conditions of the polynomials seen so far.
    pub feas: ConditionList,
    pub counts: Vec<usize>,
    /// Indices at which `feas` branches.
    pub comp: Vec<usize>,
    /// `Info(Comp(feas))`
    pub info: InfoMatrix,
    /// `Ada(feas)`, over `comp`, in Info row order.
    pub ada: ExponentList,
    /// `Mat(ada, Comp(feas))`
    pub mat: Vec<Vec<i8>>,
}

impl ZnzState {
    fn initial(r: usize) -> Self {
        ZnzState {
            feas: ConditionList::empty_condition(),
            counts: vec![r],
            comp: Vec::new(),
            info: InfoMatrix::new(0, vec![Vec::new()]).expect("1x0 matrix"),
            ada: ExponentList::new(Vec::new(), vec![Vec::new()]).expect("[()]"),
            mat: vec![vec![1]],
        }
    }

    fn empty(s: usize) -> Self {
        ZnzState {
            feas: ConditionList::new((1..=s).collect(), Vec::new()).expect("empty list"),
            counts: Vec::new(),
            comp: Vec::new(),
            info: InfoMatrix::new(0, Vec::new()).expect("0x0 matrix"),
            ada: ExponentList::new(Vec::new(), Vec::new()).expect("empty family"),
            mat: Vec::new(),
        }
    }

    /// Restriction of `feas` to the compressed indices.
    pub fn compressed(&self) -> ConditionList {
        let columns: Vec<usize> = self
            .comp
            .iter()
            .map(|i| {
                self.feas
                    .indices()
                    .iter()
                    .position(|j| j == i)
                    .expect("comp within indices")
            })
            .collect();
        ConditionList::from_parts_unchecked(self.comp.clone(), self.feas.restrict_columns(&columns))
    }

    /// Recomputes `comp`, Info, Ada and Mat from `feas` and compares them
    /// with the incrementally maintained values.
    pub fn check_consistency(&self) -> Result<()> {
        if self.feas.is_empty() {
            return Ok(());
        }
        let (comp, compressed) = super::adapted::compress(&self.feas)?;
        let info = get_info(&compressed);
        let ada = adapted_family(&compressed, &info)?;
        let mat = mat_of(&ada, &compressed)?;
        let mismatch = |what: &str| Err(Error::Inconsistent(format!("{what} out of sync")));
        if comp != self.comp {
            return mismatch("compressed indices");
        }
        if info != self.info {
            return mismatch("Info matrix");
        }
        if ada != self.ada {
            return mismatch("adapted family");
        }
        if mat != self.mat {
            return mismatch("adapted matrix");
        }
        Ok(())
    }
}

/// What happened while processing one polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZnzStep {
    /// 1-based index of the polynomial.
    pub index: usize,
    pub zero_count: usize,
    pub nonzero_count: usize,
    /// Subsets whose invertibility query this step needed, including `{index}`.
    pub queried: Vec<Vec<usize>>,
    /// Number of realizable conditions after the step.
    pub card: usize,
}

#[derive(Clone, Debug)]
pub struct ZnzOutcome {
    pub feas: ConditionList,
    pub counts: Vec<usize>,
    pub state: ZnzState,
    pub trace: Vec<ZnzStep>,
}

/// Realizable zero-nonzero conditions of `plist` on the complex zero set of
/// the handle's polynomial, with their cardinals.
pub fn zero_nonzero_determination(h: &mut ZeroSetHandle, plist: &[UniPoly]) -> Result<ZnzOutcome> {
    let s = plist.len();
    let r = h.invertibility_query_product(plist, &[])?;
    if r == 0 {
        let state = ZnzState::empty(s);
        return Ok(ZnzOutcome {
            feas: state.feas.clone(),
            counts: Vec::new(),
            state,
            trace: Vec::new(),
        });
    }

    let mut state = ZnzState::initial(r);
    let mut trace = Vec::with_capacity(s);
    for i in 1..=s {
        let nonzero = h.invertibility_query_product(plist, &[i])?;
        let zero = r.checked_sub(nonzero).ok_or_else(|| {
            Error::Inconsistent(format!("Qu(P_{i}) = {nonzero} exceeds Qu(1) = {r}"))
        })?;
        if zero == 0 || nonzero == 0 {
            let value = if zero == 0 { 1 } else { 0 };
            extend_uniformly(&mut state, i, value);
            trace.push(ZnzStep {
                index: i,
                zero_count: zero,
                nonzero_count: nonzero,
                queried: vec![vec![i]],
                card: state.feas.len(),
            });
        } else {
            let queried = branch_step(h, plist, &mut state, i)?;
            trace.push(ZnzStep {
                index: i,
                zero_count: zero,
                nonzero_count: nonzero,
                queried,
                card: state.feas.len(),
            });
        }
        debug_assert!(state.check_consistency().is_ok());
    }
    Ok(ZnzOutcome {
        feas: state.feas.clone(),
        counts: state.counts.clone(),
        state,
        trace,
    })
}

fn extend_uniformly(state: &mut ZnzState, i: usize, value: i8) {
    let mut indices = state.feas.indices().to_vec();
    indices.push(i);
    let rows = state
        .feas
        .rows()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(value);
            r
        })
        .collect();
    state.feas = ConditionList::from_parts_unchecked(indices, rows);
}

/// Both `P_i = 0` and `P_i != 0` occur: solve the doubled system and update
/// the compressed structures. Returns the subsets queried.
fn branch_step(
    h: &mut ZeroSetHandle,
    plist: &[UniPoly],
    state: &mut ZnzState,
    i: usize,
) -> Result<Vec<Vec<usize>>> {
    let s = plist.len();
    let prev_len = state.feas.len();
    let compressed = state.compressed();

    // v' = Qu(P^(Ada_{i-1}, i)); odd entries come from earlier steps
    let mut queried = Vec::with_capacity(prev_len);
    let mut v = Vec::with_capacity(2 * prev_len);
    for k in 0..state.ada.len() {
        let subset = state.ada.subset(k);
        let key = subset_key(s, &subset)?;
        let cached = h
            .ledger()
            .cached_invertibility(&key)
            .ok_or(Error::CacheMiss(key))?;
        let mut extended = subset;
        extended.push(i);
        let fresh = h.invertibility_query_product(plist, &extended)?;
        v.push(cached as i64);
        v.push(fresh as i64);
        queried.push(extended);
    }

    // auxiliary list Comp(Sigma_{i-1}) ^ {0,1}^{i} with its Info, Ada and Mat
    let mut aux_indices = state.comp.clone();
    aux_indices.push(i);
    let mut aux_rows = Vec::with_capacity(2 * prev_len);
    let mut aux_info = InfoMatrix::with_width(aux_indices.len());
    for (row, info_row) in compressed.rows().iter().zip(state.info.rows()) {
        for bit in [0i8, 1] {
            let mut r = row.clone();
            r.push(bit);
            aux_rows.push(r);
            let mut ir = info_row.clone();
            ir.push(InfoEntry::Ext(bit as u8));
            aux_info.push_row(ir);
        }
    }
    let aux = ConditionList::from_parts_unchecked(aux_indices, aux_rows);
    let aux_mat: Vec<Vec<i8>> = (0..2 * prev_len)
        .map(|row| {
            (0..2 * prev_len)
                .map(|col| {
                    let base = state.mat[row / 2][col / 2];
                    if row % 2 == 1 {
                        base * (col % 2) as i8
                    } else {
                        base
                    }
                })
                .collect()
        })
        .collect();
    let c = linear_solve(&aux, &aux_info, &aux_mat, &v)?;

    // prune empty conditions, remembering parents and the l0/l1/lstar split
    let mut indices = state.feas.indices().to_vec();
    indices.push(i);
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    let mut parents = Vec::new();
    let mut labels = Vec::new();
    for (k, parent) in state.feas.rows().iter().enumerate() {
        let (c0, c1) = (c[2 * k], c[2 * k + 1]);
        if c0 < 0 || c1 < 0 || (c0 + c1) as usize != state.counts[k] {
            return Err(Error::Inconsistent(format!(
                "counts ({c0}, {c1}) for a condition of cardinal {}",
                state.counts[k]
            )));
        }
        let branches = c0 > 0 && c1 > 0;
        for (bit, count) in [(0i8, c0), (1i8, c1)] {
            if count > 0 {
                let mut r = parent.clone();
                r.push(bit);
                rows.push(r);
                counts.push(count as usize);
                parents.push(k);
                labels.push(if branches {
                    InfoEntry::Ext(bit as u8)
                } else {
                    InfoEntry::Star
                });
            }
        }
    }
    let new_feas = ConditionList::from_parts_unchecked(indices, rows);

    if new_feas.len() > prev_len {
        grow_structures(state, &new_feas, &parents, &labels, &compressed, i)?;
    }
    state.feas = new_feas;
    state.counts = counts;
    Ok(queried)
}

fn grow_structures(
    state: &mut ZnzState,
    new_feas: &ConditionList,
    parents: &[usize],
    labels: &[InfoEntry],
    compressed_prev: &ConditionList,
    i: usize,
) -> Result<()> {
    // Xi'_i: branching conditions restricted to comp_{i-1}
    let xi_prime_rows: Vec<Vec<i8>> = parents
        .iter()
        .zip(labels)
        .filter(|(_, l)| **l == InfoEntry::Ext(1))
        .map(|(&p, _)| compressed_prev.rows()[p].clone())
        .collect();
    let xi_prime = ConditionList::from_parts_unchecked(state.comp.clone(), xi_prime_rows);
    let xi_info = get_info(&xi_prime);
    let xi_ada = adapted_family(&xi_prime, &xi_info)?;

    let mut comp = state.comp.clone();
    comp.push(i);
    let mut info = InfoMatrix::with_width(comp.len());
    let mut ada = ExponentList::new(comp.clone(), Vec::new())?;
    let mut next_l1 = 0;
    for (&p, &label) in parents.iter().zip(labels) {
        let (mut info_row, mut ada_row) = if label == InfoEntry::Ext(1) {
            let rows = (
                xi_info.rows()[next_l1].clone(),
                xi_ada.rows()[next_l1].clone(),
            );
            next_l1 += 1;
            rows
        } else {
            (state.info.rows()[p].clone(), state.ada.rows()[p].clone())
        };
        info_row.push(label);
        ada_row.push(u8::from(label == InfoEntry::Ext(1)));
        info.push_row(info_row);
        ada.push_row(ada_row);
    }

    // Comp(Sigma_i): parent's compressed row plus the new value
    let last = new_feas.width() - 1;
    let comp_rows: Vec<Vec<i8>> = parents
        .iter()
        .zip(new_feas.rows())
        .map(|(&p, row)| {
            let mut r = compressed_prev.rows()[p].clone();
            r.push(row[last]);
            r
        })
        .collect();

    // top rows reuse Mat_{i-1} through the parent map; rows (Ada(Xi'_i), i)
    // are evaluated on Comp(Sigma_i)
    let positions: Vec<usize> = (0..comp.len()).collect();
    let mat: Vec<Vec<i8>> = (0..parents.len())
        .map(|row| {
            if labels[row] == InfoEntry::Ext(1) {
                comp_rows
                    .iter()
                    .map(|cond| evaluate_monomial(&ada.rows()[row], &positions, cond))
                    .collect()
            } else {
                parents
                    .iter()
                    .map(|&pc| state.mat[parents[row]][pc])
                    .collect()
            }
        })
        .collect();

    state.comp = comp;
    state.info = info;
    state.ada = ada;
    state.mat = mat;
    Ok(())
}

/// Subsets whose invertibility query a run evaluated, rebuilt from its trace:
/// the empty subset, then `{i}` for a step where `P_i` never or always
/// vanishes, otherwise `(Ada_{i-1}, i)`.
pub fn used_sets(trace: &[ZnzStep]) -> Vec<Vec<usize>> {
    let mut used = vec![Vec::new()];
    for step in trace {
        for subset in &step.queried {
            if !used.contains(subset) {
                used.push(subset.clone());
            }
        }
    }
    used
}
