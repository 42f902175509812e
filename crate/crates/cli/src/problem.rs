//! Problem files.
//!
//! A problem is a JSON object with a variable list and a list of ideals. Each
//! generator is either an exponent tuple or a monomial written in the
//! variables, e.g. `"x^2*y"`:
//!
//! ```json
//! { "vars": ["x", "y"], "ideals": [[[3, 0], [0, 3]], ["x^2", "x*y", "y^2"]] }
//! ```

use std::collections::HashSet;

use normality_core::{ExponentVector, MonomialIdeal};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    vars: Vec<String>,
    ideals: Vec<Vec<RawGenerator>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawGenerator {
    Tuple(Vec<u32>),
    Monomial(String),
}

/// A parsed problem: variable names and canonical ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Problem {
    pub vars: Vec<String>,
    pub ideals: Vec<MonomialIdeal>,
}

impl Problem {
    /// Canonical text: exponent tuples, one ideal per line.
    pub fn to_json(&self) -> String {
        let vars = serde_json::to_string(&self.vars).expect("strings serialize");
        let ideals: Vec<String> = self
            .ideals
            .iter()
            .map(|i| serde_json::to_string(i.gens()).expect("vectors serialize"))
            .collect();
        format!(
            "{{\n  \"vars\": {vars},\n  \"ideals\": [\n    {}\n  ]\n}}\n",
            ideals.join(",\n    ")
        )
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let vars_at = locate(text, 0, "\"vars\"");
    check_vars(&raw.vars, vars_at)?;
    let d = raw.vars.len();

    // strings are located in document order, starting after the key
    let mut cursor = text.find("\"ideals\"").unwrap_or(0);
    let mut ideals = Vec::with_capacity(raw.ideals.len());
    for gens in raw.ideals {
        let mut exps = Vec::with_capacity(gens.len());
        for g in gens {
            let v = match g {
                RawGenerator::Tuple(v) => v,
                RawGenerator::Monomial(s) => {
                    let quoted = serde_json::to_string(&s).expect("string serializes");
                    let start = text[cursor..].find(&quoted).map_or(cursor, |p| cursor + p);
                    cursor = start + quoted.len();
                    parse_monomial(&s, &raw.vars).map_err(|(offset, message)| {
                        let (line, column) = locate(text, start + 1 + offset, "");
                        CliError::Parse {
                            line,
                            column,
                            message,
                        }
                    })?
                }
            };
            exps.push(ExponentVector::new(v));
        }
        let ideal = normality_core::monomial::minimalize(exps, d)?;
        ideal.ensure_proper()?;
        ideals.push(ideal);
    }
    Ok(Problem {
        vars: raw.vars,
        ideals,
    })
}

fn check_vars(vars: &[String], (line, column): (usize, usize)) -> Result<(), CliError> {
    let err = |message: String| CliError::Parse {
        line,
        column,
        message,
    };
    if vars.is_empty() {
        return Err(err("at least one variable is required".into()));
    }
    let mut seen = HashSet::new();
    for v in vars {
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return Err(err(format!("invalid variable name {v:?}")));
        }
        if !seen.insert(v.as_str()) {
            return Err(err(format!("variable {v:?} listed twice")));
        }
    }
    Ok(())
}

/// Line and column (both 1-based) of byte `offset + position of needle`.
fn locate(text: &str, offset: usize, needle: &str) -> (usize, usize) {
    let at = if needle.is_empty() {
        offset
    } else {
        text[offset..].find(needle).map_or(offset, |p| offset + p)
    };
    let before = &text[..at.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Parse `x^2*y` style monomials. Errors carry a byte offset into `s`.
pub fn parse_monomial(s: &str, vars: &[String]) -> Result<Vec<u32>, (usize, String)> {
    let mut exps = vec![0u32; vars.len()];
    if s.trim() == "1" {
        return Ok(exps);
    }
    let mut offset = 0;
    for factor in s.split('*') {
        let lead = factor.len() - factor.trim_start().len();
        let f = factor.trim();
        let at = offset + lead;
        if f.is_empty() {
            return Err((at, "empty factor".into()));
        }
        let (name, power) = match f.split_once('^') {
            Some((n, p)) => {
                let p = p.trim();
                let k = p.parse::<u32>().map_err(|_| {
                    (
                        at + f.find('^').unwrap() + 1,
                        format!("invalid exponent {p:?}"),
                    )
                })?;
                (n.trim(), k)
            }
            None => (f, 1),
        };
        let Some(k) = vars.iter().position(|v| v == name) else {
            return Err((at, format!("unknown variable {name:?}")));
        };
        exps[k] = exps[k]
            .checked_add(power)
            .ok_or((at, "exponent overflow".to_string()))?;
        offset += factor.len() + 1;
    }
    Ok(exps)
}
