//! Tarski-query and invertibility-query blackboxes for the zero set of a
//! univariate polynomial, with a ledger that caches results and counts
//! distinct evaluations.
//!
//! For a monic `p` with distinct complex roots `Z` and real roots `Z_R`:
//!
//! * `Qu(q, Z)` is the number of points of `Z` where `q` does not vanish,
//!   computed as `deg p - deg gcd(p, p' q)` (Sturm backend) or as the rank of
//!   the Hermite matrix (Hermite backend);
//! * `TaQu(q, Z_R)` is `sum sign(q(x))` over `Z_R`, computed from the sign
//!   variations at infinity of the signed remainder sequence of `(p, p' q)`
//!   or as the signature of the Hermite matrix.
//!
//! Multiplicities of `p` are never counted: both formulas already see `Z` as
//! a set.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{
    gcd_degree, hermite_matrix, int_sign_variations_at_infinity, primitive_remainder_sequence,
    rank_and_signature, UniPoly,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Backend {
    #[default]
    Sturm,
    Hermite,
}

/// Cache and call counter for blackbox evaluations, keyed by exponent vector.
#[derive(Clone, Debug, Default)]
pub struct QueryLedger {
    invertibility_cache: BTreeMap<Vec<u8>, usize>,
    tarski_cache: BTreeMap<Vec<u8>, i64>,
    invertibility_order: Vec<Vec<u8>>,
    tarski_order: Vec<Vec<u8>>,
}

impl QueryLedger {
    pub fn inv_calls(&self) -> usize {
        self.invertibility_order.len()
    }

    pub fn taqu_calls(&self) -> usize {
        self.tarski_order.len()
    }

    pub fn cached_invertibility(&self, key: &[u8]) -> Option<usize> {
        self.invertibility_cache.get(key).copied()
    }

    pub fn cached_tarski(&self, key: &[u8]) -> Option<i64> {
        self.tarski_cache.get(key).copied()
    }

    /// Exponent vectors of the invertibility queries, in evaluation order.
    pub fn invertibility_keys(&self) -> &[Vec<u8>] {
        &self.invertibility_order
    }

    /// Exponent vectors of the Tarski queries, in evaluation order.
    pub fn tarski_keys(&self) -> &[Vec<u8>] {
        &self.tarski_order
    }

    /// Subsets (1-based indices) whose product had its invertibility query
    /// evaluated, in evaluation order.
    pub fn used_subsets(&self) -> Vec<Vec<usize>> {
        self.invertibility_order
            .iter()
            .map(|k| support(k))
            .collect()
    }

    pub fn stats(&self) -> LedgerStats {
        LedgerStats {
            inv_calls: self.inv_calls(),
            taqu_calls: self.taqu_calls(),
            used_subsets: self.used_subsets(),
        }
    }
}

/// JSON view of the ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerStats {
    pub inv_calls: usize,
    pub taqu_calls: usize,
    pub used_subsets: Vec<Vec<usize>>,
}

/// 1-based indices where the exponent vector is nonzero.
pub fn support(exponents: &[u8]) -> Vec<usize> {
    exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(k, _)| k + 1)
        .collect()
}

/// The zero set of a monic polynomial together with its query ledger.
#[derive(Clone, Debug)]
pub struct ZeroSetHandle {
    p: UniPoly,
    dp: UniPoly,
    backend: Backend,
    ledger: QueryLedger,
}

impl ZeroSetHandle {
    /// Non-monic input is divided by its leading coefficient.
    pub fn new(p: &UniPoly, backend: Backend) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = p.monic();
        let dp = p.derivative();
        Ok(ZeroSetHandle {
            p,
            dp,
            backend,
            ledger: QueryLedger::default(),
        })
    }

    pub fn polynomial(&self) -> &UniPoly {
        &self.p
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn ledger(&self) -> &QueryLedger {
        &self.ledger
    }

    pub fn take_ledger(&mut self) -> QueryLedger {
        std::mem::take(&mut self.ledger)
    }

    fn degree(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    /// Number of distinct roots of `p` where `q` does not vanish. Uncached.
    pub fn invertibility_query(&self, q: &UniPoly) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let q = self.reduce(q);
        match self.backend {
            Backend::Sturm => {
                let pq = self.reduce(&(&self.dp * &q));
                self.degree() - gcd_degree(&self.p, &pq)
            }
            Backend::Hermite => {
                let her = hermite_matrix(&self.p, &q).expect("handle polynomial is monic");
                rank_and_signature(&her).0
            }
        }
    }

    /// Sum of the signs of `q` over the distinct real roots of `p`. Uncached.
    pub fn tarski_query(&self, q: &UniPoly) -> i64 {
        if self.degree() == 0 {
            return 0;
        }
        let q = self.reduce(q);
        if q.is_zero() {
            return 0;
        }
        match self.backend {
            Backend::Sturm => {
                let b = self.reduce(&(&self.dp * &q));
                let seq = primitive_remainder_sequence(&self.p, &b);
                let (at_neg, at_pos) = int_sign_variations_at_infinity(&seq);
                at_neg as i64 - at_pos as i64
            }
            Backend::Hermite => {
                let her = hermite_matrix(&self.p, &q).expect("handle polynomial is monic");
                rank_and_signature(&her).1
            }
        }
    }

    fn reduce(&self, q: &UniPoly) -> UniPoly {
        q.rem(&self.p).expect("p is nonzero")
    }

    /// `prod plist[i]^exponents[i]`, reduced modulo `p` factor by factor.
    pub fn product_mod_p(&self, plist: &[UniPoly], exponents: &[u8]) -> Result<UniPoly> {
        if exponents.len() != plist.len() {
            return Err(Error::DimensionMismatch(format!(
                "exponent vector of length {} for {} polynomials",
                exponents.len(),
                plist.len()
            )));
        }
        let mut acc = UniPoly::one().rem(&self.p)?;
        for (poly, &e) in plist.iter().zip(exponents) {
            if e == 0 {
                continue;
            }
            let reduced = poly.rem(&self.p)?;
            for _ in 0..e {
                acc = acc.mul_mod(&reduced, &self.p)?;
            }
        }
        Ok(acc)
    }

    /// Invertibility query of the product of `plist` over `subset`
    /// (1-based indices; the empty subset is the constant 1). Cached by the
    /// 0/1 exponent vector.
    pub fn invertibility_query_product(
        &mut self,
        plist: &[UniPoly],
        subset: &[usize],
    ) -> Result<usize> {
        let key = subset_key(plist.len(), subset)?;
        if let Some(v) = self.ledger.cached_invertibility(&key) {
            return Ok(v);
        }
        let q = self.product_mod_p(plist, &key)?;
        let v = self.invertibility_query(&q);
        self.ledger.invertibility_cache.insert(key.clone(), v);
        self.ledger.invertibility_order.push(key);
        Ok(v)
    }

    /// Tarski query of `prod plist[i]^exponents[i]`, exponents in `{0,1,2}`.
    /// Cached by the exponent vector.
    pub fn tarski_query_product(&mut self, plist: &[UniPoly], exponents: &[u8]) -> Result<i64> {
        if exponents.len() != plist.len() || exponents.iter().any(|&e| e > 2) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} exponents in {{0,1,2}}, got {exponents:?}",
                plist.len()
            )));
        }
        if let Some(v) = self.ledger.cached_tarski(exponents) {
            return Ok(v);
        }
        let q = self.product_mod_p(plist, exponents)?;
        let v = self.tarski_query(&q);
        self.ledger.tarski_cache.insert(exponents.to_vec(), v);
        self.ledger.tarski_order.push(exponents.to_vec());
        Ok(v)
    }
}

/// 0/1 exponent vector of length `s` for a set of 1-based indices.
pub fn subset_key(s: usize, subset: &[usize]) -> Result<Vec<u8>> {
    let mut key = vec![0u8; s];
    for &i in subset {
        if i == 0 || i > s {
            return Err(Error::DimensionMismatch(format!(
                "index {i} outside 1..={s}"
            )));
        }
        key[i - 1] = 1;
    }
    Ok(key)
}
