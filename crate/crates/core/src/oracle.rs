//! Brute-force verification that does not rely on the finiteness theorem:
//! every index up to a total-degree bound is checked directly.

use serde::Serialize;

use crate::certifier::{certify_full, indices_up_to, Failure, Verdict};
use crate::error::{Error, Inconsistency, Result};
use crate::invariants::spread_of_product;
use crate::monomial::{common_dim, MonomialIdeal};
use crate::polyhedra::{is_integrally_closed, ClosureCheck};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub max_total_degree: u32,
    /// Sorted by `(|n|, lex)`.
    pub violations: Vec<Failure>,
    pub scanned_count: u64,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Extra total degrees the oracle scans past `λ` by default.
pub const DEFAULT_MARGIN: u32 = 3;

pub fn default_bound(lambda: u32) -> u32 {
    lambda + DEFAULT_MARGIN
}

/// Check `I^n` for every `n` with `|n| <= max_total`.
pub fn brute_force_check(ideals: &[MonomialIdeal], max_total: u32) -> Result<OracleReport> {
    common_dim(ideals)?;
    let mut violations = Vec::new();
    let mut scanned = 0u64;
    for n in indices_up_to(ideals.len(), max_total) {
        scanned += 1;
        if let ClosureCheck::NotClosed { witness } = is_integrally_closed(ideals, &n)? {
            violations.push(Failure { index: n, witness });
        }
    }
    Ok(OracleReport {
        max_total_degree: max_total,
        violations,
        scanned_count: scanned,
    })
}

/// Compare the full-mode certificate with a brute-force scan up to
/// `max_total`. Returns `Ok(true)` on agreement and
/// [`Error::InconsistencyDetected`] otherwise.
pub fn cross_validate(ideals: &[MonomialIdeal], max_total: u32) -> Result<bool> {
    let lambda = spread_of_product(ideals)?.lambda;
    if max_total < lambda + 2 {
        return Err(Error::InvalidArgument(format!(
            "cross-validation bound {max_total} is below lambda + 2 = {}",
            lambda + 2
        )));
    }
    let certificate = certify_full(ideals)?;
    let oracle = brute_force_check(ideals, max_total)?;
    let consistent = match certificate.verdict {
        Verdict::AllClosed => oracle.is_clean(),
        Verdict::Counterexample => oracle.violations.iter().any(|v| {
            Some(&v.index) == certificate.witness_index.as_ref()
                && Some(&v.witness) == certificate.witness_monomial.as_ref()
        }),
    };
    if consistent {
        Ok(true)
    } else {
        Err(Error::InconsistencyDetected(Box::new(Inconsistency {
            certificate,
            oracle,
        })))
    }
}
