//! Monomial ideals as antichains of exponent vectors.
//!
//! A monomial `x^b` of `k[x_1, ..., x_d]` is identified with its exponent
//! vector `b`, and a monomial ideal with the finite antichain of its minimal
//! generators. Generators are kept in the canonical order used everywhere in
//! the crate: leading monomial first under lex with `x_1 > x_2 > ... > x_d`,
//! i.e. descending tuple order, so `(x^3, y^3)` lists as `(3,0), (0,3)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// Exponent vector of a monomial, one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The `k`-th standard basis vector of `N^dim`.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = vec![0; dim];
        v[k] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    /// Total degree of the monomial.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.dim(), other.dim());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other` divides `self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if self.dim() != other.dim() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn scale(&self, factor: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| c * factor).collect())
    }

    /// Canonical comparison: larger tuples first.
    pub fn canonical_cmp(&self, other: &ExponentVector) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A multi-degree `n in N^r` indexing the power product `I_1^{n_1} ... I_r^{n_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(r: usize) -> Self {
        MultiIndex(vec![0; r])
    }

    /// `e = (1, ..., 1)`.
    pub fn ones(r: usize) -> Self {
        MultiIndex(vec![1; r])
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `|n| = n_1 + ... + n_r`.
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Order by total degree, then lexicographically.
    pub fn graded_cmp(&self, other: &MultiIndex) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        ExponentVector(self.0.clone()).fmt(f)
    }
}

/// A nonzero monomial ideal of `k[x_1, ..., x_dim]`, stored by its minimal
/// generators in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

/// Reduce `raw` to its antichain of componentwise-minimal elements.
pub fn minimalize<I>(raw: I, dim: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut pts: Vec<ExponentVector> = Vec::new();
    for v in raw {
        check_dim(dim, v.dim())?;
        pts.push(v);
    }
    if pts.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    // a divisor has degree <= the multiple, so scanning by degree means a
    // candidate only needs checking against already kept elements
    pts.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    pts.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(pts.len());
    for p in pts {
        if !kept.iter().any(|g| g.divides(&p)) {
            kept.push(p);
        }
    }
    kept.sort_by(ExponentVector::canonical_cmp);
    Ok(MonomialIdeal { dim, gens: kept })
}

impl MonomialIdeal {
    /// Build an ideal from raw generator exponents (minimalized).
    pub fn from_exponents(dim: usize, raw: Vec<Vec<u32>>) -> Result<MonomialIdeal> {
        minimalize(raw.into_iter().map(ExponentVector::new), dim)
    }

    /// The unit ideal `(1)`.
    pub fn unit(dim: usize) -> MonomialIdeal {
        MonomialIdeal {
            dim,
            gens: vec![ExponentVector::zero(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(ExponentVector::is_zero)
    }

    /// Reject the unit ideal, which is never a valid input ideal.
    pub fn ensure_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdealInput)
        } else {
            Ok(())
        }
    }

    pub fn contains_monomial(&self, b: &ExponentVector) -> Result<bool> {
        check_dim(self.dim, b.dim())?;
        Ok(self.gens.iter().any(|g| g.divides(b)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let sums = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.add(h)));
        minimalize(sums, self.dim)
    }

    /// `I ⊆ J` for monomial ideals: every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    pub fn equals_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(self.gens == other.gens)
    }

    /// Largest exponent of each variable over the minimal generators.
    pub fn max_coords(&self) -> Vec<u32> {
        (0..self.dim)
            .map(|k| self.gens.iter().map(|g| g.coords()[k]).max().unwrap_or(0))
            .collect()
    }

    pub fn max_degree(&self) -> u64 {
        self.gens
            .iter()
            .map(ExponentVector::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> u64 {
        self.gens
            .iter()
            .map(ExponentVector::degree)
            .min()
            .unwrap_or(0)
    }
}

/// `I_1^{n_1} ... I_r^{n_r}`; the unit ideal when `|n| = 0`.
pub fn multi_power(ideals: &[MonomialIdeal], n: &MultiIndex) -> Result<MonomialIdeal> {
    let dim = common_dim(ideals)?;
    check_dim(ideals.len(), n.len())?;
    let mut acc = MonomialIdeal::unit(dim);
    for (ideal, &e) in ideals.iter().zip(n.entries()) {
        for _ in 0..e {
            acc = acc.product(ideal)?;
        }
    }
    Ok(acc)
}

/// Ambient dimension shared by a non-empty list of ideals.
pub fn common_dim(ideals: &[MonomialIdeal]) -> Result<usize> {
    let first = ideals
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty list of ideals".into()))?;
    for ideal in &ideals[1..] {
        check_dim(first.dim, ideal.dim)?;
    }
    Ok(first.dim)
}

/// Check the standing hypotheses on input ideals: non-empty list, equal
/// dimensions, every ideal proper. Returns the dimension.
pub fn validate_inputs(ideals: &[MonomialIdeal]) -> Result<usize> {
    let dim = common_dim(ideals)?;
    if dim == 0 {
        return Err(Error::InvalidArgument(
            "ambient dimension must be positive".into(),
        ));
    }
    for ideal in ideals {
        ideal.ensure_proper()?;
    }
    Ok(dim)
}
