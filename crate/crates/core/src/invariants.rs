//! Analytic spread of monomial ideals.
//!
//! For a monomial ideal `J`, `λ(J) = 1 + max dim of a compact face of NP(J)`;
//! that is the primary route. An independent estimate comes from the growth
//! of `μ(bar(J^n))`, the number of minimal generators of the closed powers,
//! which is eventually a quasi-polynomial of degree `λ(J) - 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{multi_power, validate_inputs, MonomialIdeal, MultiIndex};
use crate::polyhedra::{closure_generators, max_compact_face_dim, NewtonPolyhedron};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum SpreadMethod {
    CompactFace,
    GrowthOracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpreadReport {
    pub lambda: u32,
    pub method: SpreadMethod,
    pub product_generators: usize,
}

pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<u32> {
    ideal.ensure_proper()?;
    let face = max_compact_face_dim(&NewtonPolyhedron::of_ideal(ideal))?;
    Ok(face as u32 + 1)
}

/// `λ(I_1 ... I_r)`.
pub fn spread_of_product(ideals: &[MonomialIdeal]) -> Result<SpreadReport> {
    validate_inputs(ideals)?;
    let product = multi_power(ideals, &MultiIndex::ones(ideals.len()))?;
    Ok(SpreadReport {
        lambda: analytic_spread(&product)?,
        method: SpreadMethod::CompactFace,
        product_generators: product.len(),
    })
}

/// Growth-based estimate of `λ(I)` from `g(n) = μ(bar(I^n))`, `n = 1..=window`.
///
/// Only the upper half of the window is used: for each `m` with
/// `window/4 <= m <= window/2` the exponent `q_m` is the least `q` with
/// `g(2m) <= 2^q g(m)`, and the estimate is `1 + max q_m`. The ratio test
/// never rounds: it is the smallest `q` for which `g(n) <= c n^q` is
/// consistent across the pair.
pub fn growth_exponent(ideal: &MonomialIdeal, window: u32) -> Result<u32> {
    if window < 4 {
        return Err(Error::WindowTooSmall(window));
    }
    ideal.ensure_proper()?;
    let counts = generator_counts(ideal, window)?;
    let g = |n: u32| counts[(n - 1) as usize] as u128;
    let lo = window.div_ceil(4).max(1);
    let hi = window / 2;
    let mut q = 0;
    for m in lo..=hi {
        let (num, den) = (g(2 * m), g(m));
        let mut k = 0;
        while num > den << k {
            k += 1;
        }
        q = q.max(k);
    }
    Ok(q + 1)
}

/// `μ(bar(I^n))` for `n = 1..=window`.
pub fn generator_counts(ideal: &MonomialIdeal, window: u32) -> Result<Vec<usize>> {
    let ideals = std::slice::from_ref(ideal);
    (1..=window)
        .map(|n| Ok(closure_generators(ideals, &MultiIndex::new(vec![n]))?.len()))
        .collect()
}

/// The product's spread computed through [`growth_exponent`].
pub fn spread_of_product_by_growth(ideals: &[MonomialIdeal], window: u32) -> Result<SpreadReport> {
    validate_inputs(ideals)?;
    let product = multi_power(ideals, &MultiIndex::ones(ideals.len()))?;
    Ok(SpreadReport {
        lambda: growth_exponent(&product, window)?,
        method: SpreadMethod::GrowthOracle,
        product_generators: product.len(),
    })
}
