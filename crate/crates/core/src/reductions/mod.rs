//! Random complete and joint reductions of the normalized multi-Rees algebra
//! `M = R̄(I)`, checked on truncated graded components.
//!
//! The component `M_n` is the span of the monomials of `bar(I^n)`, an element
//! of degree `e_i` is a combination of generators of `I_i`, and multiplying by
//! it maps `M_n` into `M_{n+e_i}`. Components are infinite dimensional, so
//! each one is cut at a total-degree cap and inclusions are tested a margin
//! below the cap. A pass is evidence, not proof.
//!
//! Only indices `n >= (1, ..., 1)` are tested; smaller ones in the window are
//! listed as skipped.

pub mod poly;

use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::certifier::enumerate_multi_indices;
use crate::corpus::rng_from_seed;
use crate::error::{check_dim, Error, Result};
use crate::lp::{rat, Rational};
use crate::monomial::{multi_power, validate_inputs, ExponentVector, MonomialIdeal, MultiIndex};
use crate::polyhedra::NewtonPolyhedron;

pub use poly::{EchelonSpan, Polynomial, Term};

/// Monomial basis of `M_n` truncated at total degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedSlice {
    pub n: MultiIndex,
    pub cap: u32,
    /// Canonical order.
    pub basis: Vec<ExponentVector>,
}

pub fn graded_slice(ideals: &[MonomialIdeal], n: &MultiIndex, cap: u32) -> Result<GradedSlice> {
    validate_inputs(ideals)?;
    check_dim(ideals.len(), n.len())?;
    let required = multi_power(ideals, n)?.max_degree() as u32;
    if cap < required {
        return Err(Error::CapTooSmall { cap, required });
    }
    Ok(GradedSlice {
        n: n.clone(),
        cap,
        basis: slice_basis(ideals, n, cap as i64)?,
    })
}

fn slice_basis(ideals: &[MonomialIdeal], n: &MultiIndex, cap: i64) -> Result<Vec<ExponentVector>> {
    if cap < 0 {
        return Ok(Vec::new());
    }
    let dim = ideals[0].dim();
    let np = if n.total_degree() == 0 {
        NewtonPolyhedron::from_points(dim, vec![ExponentVector::zero(dim)])?
    } else {
        NewtonPolyhedron::of_power(ideals, n)?
    };
    np.lattice_points_up_to_degree(cap as u64)
}

/// An element of `R_{e_i}`: integer combination of the generators of `I_i`.
///
/// Coefficients are integers rather than rationals; clearing a denominator
/// changes no span the lab looks at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Element {
    /// Zero-based `i`.
    pub direction: usize,
    /// One entry per generator of `I_i`, in canonical generator order.
    pub coefficients: Vec<i64>,
}

impl Element {
    pub fn new(ideals: &[MonomialIdeal], direction: usize, coefficients: Vec<i64>) -> Result<Self> {
        let e = Element {
            direction,
            coefficients,
        };
        e.validate(ideals)?;
        Ok(e)
    }

    fn validate(&self, ideals: &[MonomialIdeal]) -> Result<()> {
        let Some(ideal) = ideals.get(self.direction) else {
            return Err(Error::DimensionMismatch {
                expected: ideals.len(),
                found: self.direction + 1,
            });
        };
        check_dim(ideal.len(), self.coefficients.len())?;
        if self.coefficients.iter().all(|&c| c == 0) {
            return Err(Error::InvalidCandidate(format!(
                "element in direction {} has only zero coefficients",
                self.direction + 1
            )));
        }
        Ok(())
    }

    pub fn polynomial(&self, ideals: &[MonomialIdeal]) -> Polynomial {
        Polynomial::from_terms(
            ideals[self.direction]
                .gens()
                .iter()
                .zip(&self.coefficients)
                .map(|(g, &c)| (g.clone(), rat(c))),
        )
    }

    pub fn degree(&self, r: usize) -> MultiIndex {
        MultiIndex::unit(r, self.direction)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Shape {
    Complete { length: usize },
    Joint { q: MultiIndex },
}

/// Elements `a_ij`, grouped by direction: `elements[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionCandidate {
    pub shape: Shape,
    pub elements: Vec<Vec<Element>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff_bound: Option<u32>,
}

impl ReductionCandidate {
    /// Complete candidate from `coefficients[i][j]`, every row of equal length.
    pub fn complete(ideals: &[MonomialIdeal], coefficients: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        check_dim(ideals.len(), coefficients.len())?;
        let s = coefficients.first().map_or(0, Vec::len);
        if s == 0 {
            return Err(Error::InvalidCandidate("length must be at least 1".into()));
        }
        if coefficients.iter().any(|row| row.len() != s) {
            return Err(Error::InvalidCandidate(
                "every direction needs the same number of elements".into(),
            ));
        }
        Ok(ReductionCandidate {
            shape: Shape::Complete { length: s },
            elements: build_elements(ideals, coefficients)?,
            seed: None,
            coeff_bound: None,
        })
    }

    /// Joint candidate whose type is read off the row lengths.
    pub fn joint(ideals: &[MonomialIdeal], coefficients: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        check_dim(ideals.len(), coefficients.len())?;
        let q = MultiIndex::new(coefficients.iter().map(|row| row.len() as u32).collect());
        Ok(ReductionCandidate {
            shape: Shape::Joint { q },
            elements: build_elements(ideals, coefficients)?,
            seed: None,
            coeff_bound: None,
        })
    }

    pub fn r(&self) -> usize {
        self.elements.len()
    }

    fn check_against(&self, ideals: &[MonomialIdeal]) -> Result<()> {
        check_dim(ideals.len(), self.r())?;
        for row in &self.elements {
            for e in row {
                e.validate(ideals)?;
            }
        }
        Ok(())
    }

    /// `b_j = a_1j ... a_rj` for a complete candidate.
    pub fn products(&self, ideals: &[MonomialIdeal]) -> Result<Vec<Polynomial>> {
        let Shape::Complete { length } = self.shape else {
            return Err(Error::InvalidCandidate(
                "expected a complete candidate".into(),
            ));
        };
        Ok((0..length)
            .map(|j| {
                self.elements.iter().fold(
                    Polynomial::monomial(ExponentVector::zero(ideals[0].dim())),
                    |acc, row| acc.mul(&row[j].polynomial(ideals)),
                )
            })
            .collect())
    }

    /// Every sequence `a_{i_1 1}, ..., a_{i_s s}` with `i_j` ranging over all
    /// directions, in lexicographic order of `(i_1, ..., i_s)`.
    pub fn column_sequences(&self) -> Result<Vec<Vec<Element>>> {
        let Shape::Complete { length } = self.shape else {
            return Err(Error::InvalidCandidate(
                "expected a complete candidate".into(),
            ));
        };
        let r = self.r();
        let mut out = Vec::new();
        let mut choice = vec![0usize; length];
        loop {
            out.push(
                choice
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| self.elements[i][j].clone())
                    .collect(),
            );
            let Some(pos) = (0..length).rev().find(|&p| choice[p] + 1 < r) else {
                break;
            };
            choice[pos] += 1;
            for c in &mut choice[pos + 1..] {
                *c = 0;
            }
        }
        Ok(out)
    }
}

fn build_elements(
    ideals: &[MonomialIdeal],
    coefficients: Vec<Vec<Vec<i64>>>,
) -> Result<Vec<Vec<Element>>> {
    validate_inputs(ideals)?;
    coefficients
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .map(|c| Element::new(ideals, i, c))
                .collect()
        })
        .collect()
}

/// Complete candidate of length `s` with coefficients drawn uniformly from
/// `[-coeff_bound, coeff_bound]`, redrawing an element that comes out zero.
pub fn random_complete_candidate(
    ideals: &[MonomialIdeal],
    s: usize,
    seed: u64,
    coeff_bound: u32,
) -> Result<ReductionCandidate> {
    validate_inputs(ideals)?;
    if s == 0 {
        return Err(Error::InvalidArgument("length must be at least 1".into()));
    }
    if coeff_bound == 0 {
        return Err(Error::InvalidArgument(
            "coefficient bound must be positive".into(),
        ));
    }
    let bound = coeff_bound as i64;
    let mut rng = rng_from_seed(seed);
    let coefficients = ideals
        .iter()
        .map(|ideal| {
            (0..s)
                .map(|_| loop {
                    let c: Vec<i64> = (0..ideal.len())
                        .map(|_| rng.gen_range(-bound..=bound))
                        .collect();
                    if c.iter().any(|&x| x != 0) {
                        break c;
                    }
                })
                .collect()
        })
        .collect();
    let mut cand = ReductionCandidate::complete(ideals, coefficients)?;
    cand.seed = Some(seed);
    cand.coeff_bound = Some(coeff_bound);
    Ok(cand)
}

/// `σ_1 = {1..q_1}`, `σ_2 = {q_1+1 .. q_1+q_2}`, and so on.
pub fn default_partition(q: &MultiIndex) -> Vec<Vec<usize>> {
    let mut next = 1;
    q.entries()
        .iter()
        .map(|&qi| {
            let part: Vec<usize> = (next..next + qi as usize).collect();
            next += qi as usize;
            part
        })
        .collect()
}

/// Joint candidate `{a_{i,s} : s in σ_i}` taken from a complete one. The
/// sets `σ_i` hold one-based column numbers.
pub fn extract_joint_candidate(
    cand: &ReductionCandidate,
    q: &MultiIndex,
    partition: &[Vec<usize>],
) -> Result<ReductionCandidate> {
    let Shape::Complete { length } = cand.shape else {
        return Err(Error::BadPartition(
            "source candidate is not complete".into(),
        ));
    };
    let r = cand.r();
    if q.len() != r || partition.len() != r {
        return Err(Error::BadPartition(format!(
            "expected {r} parts, got type of length {} and {} sets",
            q.len(),
            partition.len()
        )));
    }
    if q.total_degree() as usize != length {
        return Err(Error::BadPartition(format!(
            "type sums to {} but the candidate has length {length}",
            q.total_degree()
        )));
    }
    let mut seen = vec![false; length];
    for (i, part) in partition.iter().enumerate() {
        if part.len() != q.entries()[i] as usize {
            return Err(Error::BadPartition(format!(
                "set {} has {} columns, type asks for {}",
                i + 1,
                part.len(),
                q.entries()[i]
            )));
        }
        for &col in part {
            if col == 0 || col > length || seen[col - 1] {
                return Err(Error::BadPartition(format!(
                    "column {col} is out of range or repeated"
                )));
            }
            seen[col - 1] = true;
        }
    }
    let elements = partition
        .iter()
        .enumerate()
        .map(|(i, part)| {
            let mut cols = part.clone();
            cols.sort_unstable();
            cols.iter()
                .map(|&c| cand.elements[i][c - 1].clone())
                .collect()
        })
        .collect();
    Ok(ReductionCandidate {
        shape: Shape::Joint { q: q.clone() },
        elements,
        seed: cand.seed,
        coeff_bound: cand.coeff_bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum LabTest {
    CompleteReduction,
    JointReduction,
    FilterRegular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Outcome {
    pub index: MultiIndex,
    /// One-based position in the sequence, filter-regular tests only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    pub passed: bool,
    /// Cap the recorded result was computed at.
    pub cap: u32,
    /// Set when a failure at the requested cap was recomputed at twice it.
    pub rechecked: bool,
    /// Monomial of `M_n` outside the generated subspace.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<ExponentVector>,
    /// Element of the colon that is not in the prefix span.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub kernel_element: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LabReport {
    pub test: LabTest,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<Shape>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff_bound: Option<u32>,
    pub elements: Vec<Element>,
    pub window: [u32; 2],
    pub trunc: u32,
    pub margin: u32,
    pub skipped: Vec<MultiIndex>,
    pub outcomes: Vec<Outcome>,
    pub passed: bool,
    pub note: String,
}

impl LabReport {
    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

const TRUNCATION_NOTE: &str =
    "components are truncated by total degree; a pass is evidence for the window, not a proof";

/// Slices are recomputed many times per index, so they are memoised.
struct Lab<'a> {
    ideals: &'a [MonomialIdeal],
    slices: HashMap<(MultiIndex, i64), Vec<ExponentVector>>,
}

impl<'a> Lab<'a> {
    fn new(ideals: &'a [MonomialIdeal]) -> Self {
        Lab {
            ideals,
            slices: HashMap::new(),
        }
    }

    fn slice(&mut self, n: &MultiIndex, cap: i64) -> Result<&[ExponentVector]> {
        let key = (n.clone(), cap.max(-1));
        if !self.slices.contains_key(&key) {
            let basis = slice_basis(self.ideals, n, cap)?;
            self.slices.insert(key.clone(), basis);
        }
        Ok(&self.slices[&key])
    }

    /// Span of `g * M_{target - deg g}` over the given generators, each
    /// source slice capped so products stay within `cap`.
    fn generated_span(
        &mut self,
        gens: &[(Polynomial, MultiIndex)],
        target: &MultiIndex,
        cap: u32,
    ) -> Result<EchelonSpan> {
        let mut span = EchelonSpan::new();
        for (g, deg) in gens {
            let Some(src) = target.checked_sub(deg) else {
                continue;
            };
            let src_cap = cap as i64 - g.min_degree().unwrap_or(0) as i64;
            for m in self.slice(&src, src_cap)?.to_vec() {
                span.insert(&g.shift(&m));
            }
        }
        Ok(span)
    }

    /// Lowest-degree monomial of `M_n` up to `cap - delta` outside the span
    /// generated by `gens`.
    fn first_unreached(
        &mut self,
        gens: &[(Polynomial, MultiIndex)],
        n: &MultiIndex,
        cap: u32,
        delta: u32,
    ) -> Result<Option<ExponentVector>> {
        let span = self.generated_span(gens, n, cap)?;
        let tests = self.slice(n, cap as i64 - delta as i64)?;
        let mut ordered: Vec<&ExponentVector> = tests.iter().collect();
        ordered.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.canonical_cmp(b)));
        Ok(ordered
            .into_iter()
            .find(|b| !span.contains(&Polynomial::monomial((*b).clone())))
            .cloned())
    }

    /// An element `v` of `M_n` with `a v` in the span of `prefix` in degree
    /// `n + deg a` but `v` outside the span of `prefix` in degree `n`.
    fn colon_excess(
        &mut self,
        prefix: &[(Polynomial, MultiIndex)],
        a: &(Polynomial, MultiIndex),
        n: &MultiIndex,
        cap: u32,
        delta: u32,
    ) -> Result<Option<Polynomial>> {
        let (a_poly, a_deg) = a;
        let target = n.add(a_deg);
        let image = self.generated_span(prefix, &target, cap)?;
        let inner = self.generated_span(prefix, n, cap)?;
        let src_cap = cap as i64 - a_poly.max_degree().unwrap_or(0) as i64 - delta as i64;
        let mut kernel = EchelonSpan::new();
        for b in self.slice(n, src_cap)?.to_vec() {
            let v = image.reduce(&a_poly.shift(&b));
            if let Some(dep) = kernel.insert_tagged(v, Polynomial::monomial(b)) {
                if !inner.contains(&dep) {
                    return Ok(Some(dep));
                }
            }
        }
        Ok(None)
    }
}

struct Window {
    lo: u32,
    hi: u32,
    tested: Vec<MultiIndex>,
    skipped: Vec<MultiIndex>,
}

fn window(r: usize, lo: u32, hi: u32) -> Result<Window> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty window {lo}..{hi}")));
    }
    let ones = MultiIndex::ones(r);
    let (tested, skipped) = (lo..=hi)
        .flat_map(|s| enumerate_multi_indices(r, s))
        .partition(|n| n.checked_sub(&ones).is_some());
    Ok(Window {
        lo,
        hi,
        tested,
        skipped,
    })
}

fn max_generator_degree(ideals: &[MonomialIdeal], indices: &[MultiIndex]) -> Result<u32> {
    let mut best = 0;
    for n in indices {
        best = best.max(multi_power(ideals, n)?.max_degree() as u32);
    }
    Ok(best)
}

fn input_generator_degree(ideals: &[MonomialIdeal]) -> u32 {
    ideals
        .iter()
        .map(|i| i.max_degree() as u32)
        .max()
        .unwrap_or(0)
}

fn spread(p: &Polynomial) -> u32 {
    (p.max_degree().unwrap_or(0) - p.min_degree().unwrap_or(0)) as u32
}

fn margin_for(ideals: &[MonomialIdeal], polys: &[&Polynomial]) -> u32 {
    polys.iter().map(|p| spread(p)).max().unwrap_or(0) + input_generator_degree(ideals)
}

pub fn verify_complete_reduction(
    ideals: &[MonomialIdeal],
    cand: &ReductionCandidate,
    lo: u32,
    hi: u32,
    cap: u32,
) -> Result<LabReport> {
    validate_inputs(ideals)?;
    if !matches!(cand.shape, Shape::Complete { .. }) {
        return Err(Error::InvalidCandidate(
            "expected a complete candidate".into(),
        ));
    }
    cand.check_against(ideals)?;
    let ones = MultiIndex::ones(ideals.len());
    let gens: Vec<(Polynomial, MultiIndex)> = cand
        .products(ideals)?
        .into_iter()
        .map(|b| (b, ones.clone()))
        .collect();
    verify_generated(ideals, LabTest::CompleteReduction, cand, gens, lo, hi, cap)
}

pub fn verify_joint_reduction(
    ideals: &[MonomialIdeal],
    cand: &ReductionCandidate,
    lo: u32,
    hi: u32,
    cap: u32,
) -> Result<LabReport> {
    validate_inputs(ideals)?;
    if !matches!(cand.shape, Shape::Joint { .. }) {
        return Err(Error::InvalidCandidate("expected a joint candidate".into()));
    }
    cand.check_against(ideals)?;
    let r = ideals.len();
    let gens = cand
        .elements
        .iter()
        .flatten()
        .map(|e| (e.polynomial(ideals), e.degree(r)))
        .collect();
    verify_generated(ideals, LabTest::JointReduction, cand, gens, lo, hi, cap)
}

fn verify_generated(
    ideals: &[MonomialIdeal],
    test: LabTest,
    cand: &ReductionCandidate,
    gens: Vec<(Polynomial, MultiIndex)>,
    lo: u32,
    hi: u32,
    cap: u32,
) -> Result<LabReport> {
    let win = window(ideals.len(), lo, hi)?;
    let polys: Vec<&Polynomial> = gens.iter().map(|(g, _)| g).collect();
    let delta = margin_for(ideals, &polys);
    let top = max_generator_degree(ideals, &win.tested)?;
    let gen_deg = polys
        .iter()
        .map(|p| p.max_degree().unwrap_or(0) as u32)
        .max()
        .unwrap_or(0);
    let required = (gen_deg + top + 1).max(delta + top);
    if cap < required {
        return Err(Error::CapTooSmall { cap, required });
    }

    let mut lab = Lab::new(ideals);
    let mut outcomes = Vec::with_capacity(win.tested.len());
    for n in &win.tested {
        let mut used = cap;
        let mut missing = lab.first_unreached(&gens, n, cap, delta)?;
        let rechecked = missing.is_some();
        if rechecked {
            used = 2 * cap;
            missing = lab.first_unreached(&gens, n, used, delta)?;
        }
        outcomes.push(Outcome {
            index: n.clone(),
            step: None,
            passed: missing.is_none(),
            cap: used,
            rechecked,
            missing,
            kernel_element: Vec::new(),
        });
    }
    Ok(finish(
        test,
        Some(cand),
        cand.elements.iter().flatten().cloned().collect(),
        &win,
        cap,
        delta,
        outcomes,
    ))
}

/// Check that `[(a_1..a_{i-1})M :_M a_i]_n = [(a_1..a_{i-1})M]_n` for every
/// step `i` and every tested window index `n`.
pub fn filter_regular_window_test(
    ideals: &[MonomialIdeal],
    sequence: &[Element],
    lo: u32,
    hi: u32,
    cap: u32,
) -> Result<LabReport> {
    validate_inputs(ideals)?;
    if sequence.is_empty() {
        return Err(Error::InvalidArgument("empty sequence".into()));
    }
    for e in sequence {
        e.validate(ideals)?;
    }
    let r = ideals.len();
    let items: Vec<(Polynomial, MultiIndex)> = sequence
        .iter()
        .map(|e| (e.polynomial(ideals), e.degree(r)))
        .collect();
    let win = window(r, lo, hi)?;
    let polys: Vec<&Polynomial> = items.iter().map(|(p, _)| p).collect();
    let delta = margin_for(ideals, &polys);
    let top = max_generator_degree(ideals, &win.tested)?;
    let elem_deg = polys
        .iter()
        .map(|p| p.max_degree().unwrap_or(0) as u32)
        .max()
        .unwrap_or(0);
    let required = top + elem_deg + delta;
    if cap < required {
        return Err(Error::CapTooSmall { cap, required });
    }

    let mut lab = Lab::new(ideals);
    let mut outcomes = Vec::new();
    for n in &win.tested {
        for step in 0..items.len() {
            let prefix = &items[..step];
            let mut used = cap;
            let mut excess = lab.colon_excess(prefix, &items[step], n, cap, delta)?;
            let rechecked = excess.is_some();
            if rechecked {
                used = 2 * cap;
                excess = lab.colon_excess(prefix, &items[step], n, used, delta)?;
            }
            outcomes.push(Outcome {
                index: n.clone(),
                step: Some(step + 1),
                passed: excess.is_none(),
                cap: used,
                rechecked,
                missing: None,
                kernel_element: excess.map(|v| v.to_report_terms()).unwrap_or_default(),
            });
        }
    }
    Ok(finish(
        LabTest::FilterRegular,
        None,
        sequence.to_vec(),
        &win,
        cap,
        delta,
        outcomes,
    ))
}

fn finish(
    test: LabTest,
    cand: Option<&ReductionCandidate>,
    elements: Vec<Element>,
    win: &Window,
    cap: u32,
    delta: u32,
    outcomes: Vec<Outcome>,
) -> LabReport {
    LabReport {
        test,
        shape: cand.map(|c| c.shape.clone()),
        seed: cand.and_then(|c| c.seed),
        coeff_bound: cand.and_then(|c| c.coeff_bound),
        elements,
        window: [win.lo, win.hi],
        trunc: cap,
        margin: delta,
        skipped: win.skipped.clone(),
        passed: outcomes.iter().all(|o| o.passed),
        outcomes,
        note: TRUNCATION_NOTE.to_string(),
    }
}

/// Evaluate a polynomial at a rational point; used to sanity-check products.
pub fn evaluate(p: &Polynomial, point: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (e, c) in p.terms() {
        let mut term = c.clone();
        for (&k, x) in e.coords().iter().zip(point) {
            for _ in 0..k {
                term *= x;
            }
        }
        total += term;
    }
    total
}
