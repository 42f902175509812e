//! Finite normality certificates.
//!
//! For monomial ideals `I_1, ..., I_r` the normalized multi-Rees algebra is a
//! normal semigroup ring, hence Cohen-Macaulay, and its `a`-invariant is
//! `-e`. The finiteness threshold `|a| + s + r - 1` therefore collapses to
//! `λ(I_1 ... I_r) - 1`, which is all this module needs:
//!
//! * **full** mode: if `I^n` is integrally closed for every `|n| <= λ - 1`,
//!   every power product is integrally closed;
//! * **frontier** mode: for `ℓ >= λ - 1`, closedness on the slice `|n| = ℓ`
//!   propagates to every `|n| >= ℓ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::spread_of_product;
use crate::monomial::{validate_inputs, ExponentVector, MonomialIdeal, MultiIndex};
use crate::polyhedra::{is_integrally_closed, ClosureCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Mode {
    Full,
    Frontier,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Verdict {
    AllClosed,
    Counterexample,
}

/// A failing index together with its witness monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Failure {
    pub index: MultiIndex,
    pub witness: ExponentVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub mode: Mode,
    pub r: usize,
    pub lambda: u32,
    pub ell: u32,
    /// Indices examined, in `(|n|, lex)` order. Covers the whole quantifier
    /// set unless the scan stopped at the first failure.
    pub checked: Vec<MultiIndex>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_index: Option<MultiIndex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_monomial: Option<ExponentVector>,
    /// Every failure found; only filled by exhaustive scans.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
    pub conclusion: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Keep scanning after the first failure.
    pub exhaustive: bool,
}

/// All `n in N^r` with `|n| = s`, in lexicographic order.
pub fn enumerate_multi_indices(r: usize, s: u32) -> Vec<MultiIndex> {
    fn rec(r: usize, s: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == r {
            prefix.push(s);
            out.push(MultiIndex::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=s {
            prefix.push(first);
            rec(r, s - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    rec(r, s, &mut Vec::with_capacity(r), &mut out);
    out
}

/// All `n` with `|n| <= max_total`, in `(|n|, lex)` order.
pub fn indices_up_to(r: usize, max_total: u32) -> Vec<MultiIndex> {
    (0..=max_total)
        .flat_map(|s| enumerate_multi_indices(r, s))
        .collect()
}

pub fn certify_full(ideals: &[MonomialIdeal]) -> Result<Certificate> {
    certify_full_with(ideals, CertifyOptions::default())
}

pub fn certify_full_with(ideals: &[MonomialIdeal], opts: CertifyOptions) -> Result<Certificate> {
    validate_inputs(ideals)?;
    let lambda = spread_of_product(ideals)?.lambda;
    let ell = lambda - 1;
    let indices = indices_up_to(ideals.len(), ell);
    let (checked, failures) = scan(ideals, &indices, opts)?;
    let conclusion = match failures.first() {
        None if lambda == 1 => format!(
            "lambda = 1: only n = 0 needs checking, so every power product I^n (n in N^{}) is integrally closed unconditionally",
            ideals.len()
        ),
        None => format!(
            "I^n is integrally closed for all |n| <= {ell}, hence every power product I^n (n in N^{}) is integrally closed",
            ideals.len()
        ),
        Some(f) => not_closed_text(f),
    };
    Ok(assemble(
        Mode::Full,
        ideals.len(),
        lambda,
        ell,
        checked,
        failures,
        conclusion,
        opts.exhaustive,
    ))
}

pub fn certify_frontier(ideals: &[MonomialIdeal], ell: u32) -> Result<Certificate> {
    certify_frontier_with(ideals, ell, CertifyOptions::default())
}

pub fn certify_frontier_with(
    ideals: &[MonomialIdeal],
    ell: u32,
    opts: CertifyOptions,
) -> Result<Certificate> {
    validate_inputs(ideals)?;
    let lambda = spread_of_product(ideals)?.lambda;
    if ell + 1 < lambda {
        return Err(Error::EllBelowThreshold { ell, lambda });
    }
    let indices = enumerate_multi_indices(ideals.len(), ell);
    let (checked, failures) = scan(ideals, &indices, opts)?;
    let conclusion = match failures.first() {
        None => format!(
            "I^n is integrally closed for every n in N^{} with |n| >= {ell}",
            ideals.len()
        ),
        Some(f) => not_closed_text(f),
    };
    Ok(assemble(
        Mode::Frontier,
        ideals.len(),
        lambda,
        ell,
        checked,
        failures,
        conclusion,
        opts.exhaustive,
    ))
}

fn not_closed_text(f: &Failure) -> String {
    format!(
        "I^{} is not integrally closed: the monomial with exponent {} is integral over it but not a member",
        f.index, f.witness
    )
}

fn scan(
    ideals: &[MonomialIdeal],
    indices: &[MultiIndex],
    opts: CertifyOptions,
) -> Result<(Vec<MultiIndex>, Vec<Failure>)> {
    let mut checked = Vec::with_capacity(indices.len());
    let mut failures = Vec::new();
    for n in indices {
        checked.push(n.clone());
        if let ClosureCheck::NotClosed { witness } = is_integrally_closed(ideals, n)? {
            failures.push(Failure {
                index: n.clone(),
                witness,
            });
            if !opts.exhaustive {
                break;
            }
        }
    }
    Ok((checked, failures))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    mode: Mode,
    r: usize,
    lambda: u32,
    ell: u32,
    checked: Vec<MultiIndex>,
    mut failures: Vec<Failure>,
    conclusion: String,
    exhaustive: bool,
) -> Certificate {
    let first = failures.first().cloned();
    if !exhaustive {
        failures.clear();
    }
    Certificate {
        mode,
        r,
        lambda,
        ell,
        checked,
        verdict: if first.is_some() {
            Verdict::Counterexample
        } else {
            Verdict::AllClosed
        },
        witness_index: first.as_ref().map(|f| f.index.clone()),
        witness_monomial: first.map(|f| f.witness),
        failures,
        conclusion,
    }
}
