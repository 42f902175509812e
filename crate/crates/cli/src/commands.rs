use normality_core::certifier::{certify_frontier_with, certify_full_with, CertifyOptions};
use normality_core::invariants::{analytic_spread, spread_of_product};
use normality_core::oracle::{brute_force_check, cross_validate, default_bound};
use normality_core::polyhedra::{closure_generators, is_integrally_closed};
use normality_core::reductions::{
    default_partition, extract_joint_candidate, filter_regular_window_test,
    random_complete_candidate, verify_complete_reduction, verify_joint_reduction,
};
use normality_core::{Error, MonomialIdeal, MultiIndex};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_INCONSISTENT, EXIT_OK};
use crate::problem::Problem;
use crate::{Command, ModeArg};

pub struct Outcome {
    pub result: Value,
    pub exit_code: i32,
}

fn ok<T: Serialize>(v: T) -> Result<Outcome, CliError> {
    Ok(Outcome {
        result: serde_json::to_value(v).expect("report values serialize"),
        exit_code: EXIT_OK,
    })
}

pub fn execute(cmd: &Command, problem: &Problem) -> Result<Outcome, CliError> {
    let ideals = &problem.ideals;
    match cmd {
        Command::Spread { .. } => {
            let product = spread_of_product(ideals)?;
            let each = ideals
                .iter()
                .map(analytic_spread)
                .collect::<Result<Vec<_>, _>>()?;
            ok(json!({ "product": product, "ideals": each }))
        }
        Command::Closure { index, .. } => {
            let n = index_or_ones(index.as_deref(), ideals)?;
            let gens = closure_generators(ideals, &n)?;
            ok(json!({ "index": n, "generators": gens.gens(), "count": gens.len() }))
        }
        Command::Check { index, .. } => {
            let n = index_or_ones(index.as_deref(), ideals)?;
            ok(json!({ "index": n, "check": is_integrally_closed(ideals, &n)? }))
        }
        Command::Certify {
            mode,
            ell,
            exhaustive,
            ..
        } => {
            let opts = CertifyOptions {
                exhaustive: *exhaustive,
            };
            let cert = match mode {
                ModeArg::Full => {
                    if ell.is_some() {
                        return Err(CliError::Usage(
                            "--ell only applies to --mode frontier".into(),
                        ));
                    }
                    certify_full_with(ideals, opts)?
                }
                ModeArg::Frontier => {
                    let l = match ell {
                        Some(l) => *l,
                        None => spread_of_product(ideals)?.lambda - 1,
                    };
                    certify_frontier_with(ideals, l, opts)?
                }
            };
            ok(cert)
        }
        Command::Oracle { max_total, .. } => {
            let lambda = spread_of_product(ideals)?.lambda;
            let bound = max_total.unwrap_or_else(|| default_bound(lambda));
            match cross_validate(ideals, bound) {
                Ok(_) => ok(json!({
                    "lambda": lambda,
                    "maxTotal": bound,
                    "consistent": true,
                    "certificate": certify_full_with(ideals, CertifyOptions::default())?,
                    "oracle": brute_force_check(ideals, bound)?,
                })),
                Err(Error::InconsistencyDetected(found)) => Ok(Outcome {
                    result: json!({
                        "lambda": lambda,
                        "maxTotal": bound,
                        "consistent": false,
                        "certificate": found.certificate,
                        "oracle": found.oracle,
                    }),
                    exit_code: EXIT_INCONSISTENT,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Reductions {
            length,
            joint_type,
            window,
            trunc,
            seed,
            coeff_bound,
            ..
        } => reductions(
            ideals,
            *length,
            joint_type.as_deref(),
            window.as_deref(),
            *trunc,
            *seed,
            *coeff_bound,
        ),
    }
}

fn reductions(
    ideals: &[MonomialIdeal],
    length: Option<usize>,
    joint_type: Option<&str>,
    window: Option<&str>,
    trunc: Option<u32>,
    seed: u64,
    coeff_bound: u32,
) -> Result<Outcome, CliError> {
    let lambda = spread_of_product(ideals)?.lambda;
    let s = length.unwrap_or(lambda as usize);
    let (lo, hi) = match window {
        Some(w) => parse_window(w)?,
        None => (lambda, lambda + 3),
    };
    let max_deg = ideals
        .iter()
        .map(|i| i.max_degree() as u32)
        .max()
        .unwrap_or(1);
    let cap = trunc.unwrap_or(2 * max_deg * (hi + ideals.len() as u32));

    let cand = random_complete_candidate(ideals, s, seed, coeff_bound)?;
    let complete = verify_complete_reduction(ideals, &cand, lo, hi, cap)?;
    let sequences = cand
        .column_sequences()?
        .iter()
        .map(|seq| filter_regular_window_test(ideals, seq, lo, hi, cap))
        .collect::<Result<Vec<_>, _>>()?;
    let joint = match joint_type {
        Some(t) => {
            let q = parse_index(t, ideals.len())?;
            let part = default_partition(&q);
            let j = extract_joint_candidate(&cand, &q, &part)?;
            let rep = verify_joint_reduction(ideals, &j, lo, hi, cap)?;
            Some(json!({ "type": q, "partition": part, "report": rep }))
        }
        None => None,
    };
    let passed = complete.passed
        && sequences.iter().all(|r| r.passed)
        && joint
            .as_ref()
            .is_none_or(|j| j["report"]["passed"] == Value::Bool(true));
    ok(json!({
        "length": s,
        "window": [lo, hi],
        "trunc": cap,
        "seed": seed,
        "coeffBound": coeff_bound,
        "candidate": cand,
        "complete": complete,
        "columnSequences": sequences,
        "joint": joint,
        "passed": passed,
    }))
}

fn index_or_ones(text: Option<&str>, ideals: &[MonomialIdeal]) -> Result<MultiIndex, CliError> {
    match text {
        Some(t) => parse_index(t, ideals.len()),
        None => Ok(MultiIndex::ones(ideals.len())),
    }
}

/// `"1,2"` as a multi-index of length `r`.
pub fn parse_index(text: &str, r: usize) -> Result<MultiIndex, CliError> {
    let entries = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad multi-index entry {p:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            found: entries.len(),
        }
        .into());
    }
    Ok(MultiIndex::new(entries))
}

/// `"LO..HI"`.
pub fn parse_window(text: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("window must look like LO..HI, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}
