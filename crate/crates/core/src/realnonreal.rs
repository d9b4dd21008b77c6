//! Real-nonreal sign determination: sign conditions on the real roots and
//! zero-nonzero conditions on the nonreal roots.
//!
//! For a zero-nonzero condition `sigma` realized on `Z`, the real roots
//! realizing it are exactly those realizing a sign condition `tau` with the
//! same zero pattern, so
//!
//! ```text
//! c(sigma, Z \ R) = c(sigma, Z) - sum_{tau in Gamma(sigma)} c_sign(tau, Z_R)
//! ```

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactnum::UniPoly;
use crate::queries::ZeroSetHandle;
use crate::signdet::sign_determination;
use crate::znz::{zero_nonzero_determination, ConditionList};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealNonrealResult {
    pub feas_real: ConditionList,
    pub c_real: Vec<usize>,
    pub feas_nonreal: ConditionList,
    pub c_nonreal: Vec<usize>,
}

/// Runs sign determination and zero-nonzero determination on the same
/// handle, so both sets of queries land in one ledger, then splits the
/// complex counts into real and nonreal parts.
pub fn real_nonreal_determination(
    h: &mut ZeroSetHandle,
    plist: &[UniPoly],
) -> Result<RealNonrealResult> {
    let signs = sign_determination(h, plist)?;
    let znz = zero_nonzero_determination(h, plist)?;

    let mut real_by_pattern: HashMap<Vec<i8>, usize> = HashMap::new();
    for (tau, &c) in signs.feas.rows().iter().zip(&signs.counts) {
        *real_by_pattern.entry(zero_pattern(tau)).or_default() += c;
    }

    let mut rows = Vec::new();
    let mut counts = Vec::new();
    for (sigma, &c) in znz.feas.rows().iter().zip(&znz.counts) {
        let real = real_by_pattern.remove(sigma).unwrap_or(0);
        let nonreal = c.checked_sub(real).ok_or_else(|| {
            Error::Inconsistent(format!(
                "{real} real roots but only {c} roots realize condition {sigma:?}"
            ))
        })?;
        if nonreal > 0 {
            rows.push(sigma.clone());
            counts.push(nonreal);
        }
    }
    if let Some(pattern) = real_by_pattern.keys().next() {
        return Err(Error::Inconsistent(format!(
            "zero pattern {pattern:?} is realized by real roots but not on Z"
        )));
    }

    Ok(RealNonrealResult {
        feas_real: signs.feas,
        c_real: signs.counts,
        feas_nonreal: ConditionList::new(znz.feas.indices().to_vec(), rows)?,
        c_nonreal: counts,
    })
}

/// Zero-nonzero condition satisfied wherever the sign condition holds.
pub fn zero_pattern(tau: &[i8]) -> Vec<i8> {
    tau.iter().map(|&v| i8::from(v != 0)).collect()
}
