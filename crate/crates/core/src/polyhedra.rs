//! Newton polyhedra and integral closures of monomial ideals.
//!
//! Two standard facts about monomial ideals carry this module:
//!
//! * `x^b` is integral over a monomial ideal `J` iff `b` lies in the Newton
//!   polyhedron `NP(J) = conv(exponents of J) + R^d_{>=0}`, so `bar(J)` is the
//!   monomial ideal spanned by the lattice points of `NP(J)`.
//! * Newton polyhedra are additive: `NP(I_1^{n_1} ... I_r^{n_r})` is the
//!   Minkowski sum `n_1 NP(I_1) + ... + n_r NP(I_r)`.
//!
//! Membership in the weighted Minkowski sum is the existence of weights
//! `λ_ij >= 0` with `Σ_j λ_ij = n_i` and `Σ λ_ij a_ij <= b`, decided exactly by
//! [`lp_feasible`](crate::lp::lp_feasible). Minimal lattice points of the
//! closure lie in the box spanned by the maximal generator coordinates of the
//! power: if `b` is in the polyhedron and `b_k` exceeds every generator's
//! `k`-th coordinate, `b - e_k` is in it as well.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::linalg::affine_dimension;
use crate::lp::{lp_feasible, lp_minimize, rat, LinearSystem, Optimum, Rational, Relation};
use crate::monomial::{
    common_dim, minimalize, multi_power, ExponentVector, MonomialIdeal, MultiIndex,
};

/// `Σ_i w_i · (conv(points_i) + R^d_{>=0})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    summands: Vec<(Vec<ExponentVector>, u32)>,
}

impl NewtonPolyhedron {
    pub fn from_points(dim: usize, points: Vec<ExponentVector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        for p in &points {
            check_dim(dim, p.dim())?;
        }
        Ok(NewtonPolyhedron {
            dim,
            summands: vec![(points, 1)],
        })
    }

    pub fn of_ideal(ideal: &MonomialIdeal) -> Self {
        NewtonPolyhedron {
            dim: ideal.dim(),
            summands: vec![(ideal.gens().to_vec(), 1)],
        }
    }

    /// `NP(I^n)` as the weighted Minkowski sum of the `NP(I_i)`.
    pub fn of_power(ideals: &[MonomialIdeal], n: &MultiIndex) -> Result<Self> {
        let dim = common_dim(ideals)?;
        check_dim(ideals.len(), n.len())?;
        if n.total_degree() == 0 {
            return Err(Error::ZeroTotalDegree);
        }
        let summands = ideals
            .iter()
            .zip(n.entries())
            .filter(|(_, &w)| w > 0)
            .map(|(ideal, &w)| (ideal.gens().to_vec(), w))
            .collect();
        Ok(NewtonPolyhedron { dim, summands })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Minimal points of the Minkowski sum of the (scaled) point sets; every
    /// vertex of the polyhedron is among them.
    pub fn points(&self) -> Vec<ExponentVector> {
        let mut acc = vec![ExponentVector::zero(self.dim)];
        for (pts, w) in &self.summands {
            for _ in 0..*w {
                let sums = acc.iter().flat_map(|a| pts.iter().map(move |p| a.add(p)));
                acc = minimalize(sums, self.dim)
                    .expect("non-empty summands")
                    .gens()
                    .to_vec();
            }
        }
        acc
    }

    fn num_weights(&self) -> usize {
        self.summands.iter().map(|(p, _)| p.len()).sum()
    }

    /// Weight variables with their convexity rows; coordinate rows are added
    /// by the caller through `coord_row`.
    fn weight_system(&self) -> LinearSystem {
        let nv = self.num_weights();
        let mut sys = LinearSystem::nonnegative(nv);
        let mut off = 0;
        for (pts, w) in &self.summands {
            let mut row = vec![Rational::zero(); nv];
            for x in &mut row[off..off + pts.len()] {
                *x = rat(1);
            }
            sys.push(row, Relation::Eq, rat(*w as i64));
            off += pts.len();
        }
        sys
    }

    /// `Σ λ_ij a_ij[k]` as a coefficient row.
    fn coord_row(&self, k: usize) -> Vec<Rational> {
        self.summands
            .iter()
            .flat_map(|(pts, _)| pts.iter().map(move |p| rat(p.coords()[k] as i64)))
            .collect()
    }

    /// The exact LP whose feasibility is `b ∈ NP`.
    pub fn membership_system(&self, b: &ExponentVector) -> Result<LinearSystem> {
        check_dim(self.dim, b.dim())?;
        let mut sys = self.weight_system();
        for k in 0..self.dim {
            sys.push(self.coord_row(k), Relation::Le, rat(b.coords()[k] as i64));
        }
        Ok(sys)
    }

    pub fn contains(&self, b: &ExponentVector) -> Result<bool> {
        let sys = self.membership_system(b)?;
        Ok(lp_feasible(&sys)?.is_some())
    }

    /// Smallest integer `t` with `(prefix, t)` in the polyhedron, where
    /// `prefix` fixes all but the last coordinate; `None` if no such `t`.
    pub fn column_floor(&self, prefix: &[u32]) -> Result<Option<u64>> {
        check_dim(self.dim, prefix.len() + 1)?;
        let last = self.dim - 1;
        let mut sys = self.weight_system();
        for (k, &bk) in prefix.iter().enumerate() {
            sys.push(self.coord_row(k), Relation::Le, rat(bk as i64));
        }
        match lp_minimize(&sys, &self.coord_row(last))? {
            Optimum::Optimal { value, .. } => Ok(Some(ceil_nonneg(&value))),
            Optimum::Infeasible => Ok(None),
            Optimum::Unbounded => unreachable!("objective is bounded below by zero"),
        }
    }

    /// Minimal lattice points of the polyhedron inside `[0, bounds]`.
    pub fn minimal_lattice_points(&self, bounds: &[u32]) -> Result<Vec<ExponentVector>> {
        check_dim(self.dim, bounds.len())?;
        let (prefix_bounds, last_bound) = bounds.split_at(self.dim - 1);
        let last_bound = last_bound[0] as u64;
        let mut floors: HashMap<Vec<u32>, u64> = HashMap::new();
        let prefixes = box_points(prefix_bounds);
        for p in &prefixes {
            if let Some(t) = self.column_floor(p)? {
                if t <= last_bound {
                    floors.insert(p.clone(), t);
                }
            }
        }
        // (p, t) is minimal iff no column one step below reaches height <= t
        let mut out = Vec::new();
        for p in &prefixes {
            let Some(&t) = floors.get(p) else { continue };
            let dominated = (0..p.len()).any(|k| {
                if p[k] == 0 {
                    return false;
                }
                let mut q = p.clone();
                q[k] -= 1;
                floors.get(&q).is_some_and(|&s| s <= t)
            });
            if !dominated {
                let mut v = p.clone();
                v.push(t as u32);
                out.push(ExponentVector::new(v));
            }
        }
        out.sort_by(ExponentVector::canonical_cmp);
        Ok(out)
    }

    /// All lattice points of the polyhedron of total degree at most `cap`.
    pub fn lattice_points_up_to_degree(&self, cap: u64) -> Result<Vec<ExponentVector>> {
        let mut out = Vec::new();
        let prefix_bounds = vec![cap.min(u32::MAX as u64) as u32; self.dim - 1];
        for p in box_points(&prefix_bounds) {
            let used: u64 = p.iter().map(|&c| c as u64).sum();
            if used > cap {
                continue;
            }
            if let Some(t) = self.column_floor(&p)? {
                for last in t..=(cap - used) {
                    let mut v = p.clone();
                    v.push(last as u32);
                    out.push(ExponentVector::new(v));
                }
            }
        }
        out.sort_by(ExponentVector::canonical_cmp);
        Ok(out)
    }
}

fn ceil_nonneg(v: &Rational) -> u64 {
    debug_assert!(!v.is_negative());
    let (q, r) = v.numer().div_rem(v.denom());
    let q = q.to_u64().expect("column height fits in u64");
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Every point of `[0, b_1] x ... x [0, b_k]` in lexicographic order.
pub(crate) fn box_points(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Whether `x^b` lies in the integral closure of `I^n`.
pub fn np_membership(ideals: &[MonomialIdeal], n: &MultiIndex, b: &ExponentVector) -> Result<bool> {
    let dim = common_dim(ideals)?;
    check_dim(ideals.len(), n.len())?;
    check_dim(dim, b.dim())?;
    if n.total_degree() == 0 {
        return Ok(true);
    }
    NewtonPolyhedron::of_power(ideals, n)?.contains(b)
}

/// Box used for the closure scan: maximal coordinates of the power's
/// generators, widened by `margin`.
pub fn closure_box(ideals: &[MonomialIdeal], n: &MultiIndex, margin: u32) -> Result<Vec<u32>> {
    let power = multi_power(ideals, n)?;
    Ok(power.max_coords().into_iter().map(|m| m + margin).collect())
}

/// Minimal generators of `bar(I^n)`.
pub fn closure_generators(ideals: &[MonomialIdeal], n: &MultiIndex) -> Result<MonomialIdeal> {
    closure_generators_with_margin(ideals, n, 0)
}

/// As [`closure_generators`], scanning a box widened by `margin` in every
/// direction. The result must not depend on the margin.
pub fn closure_generators_with_margin(
    ideals: &[MonomialIdeal],
    n: &MultiIndex,
    margin: u32,
) -> Result<MonomialIdeal> {
    let np = NewtonPolyhedron::of_power(ideals, n)?;
    let bounds = closure_box(ideals, n, margin)?;
    let pts = np.minimal_lattice_points(&bounds)?;
    minimalize(pts, np.dim())
}

/// Outcome of a single integral-closedness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "camelCase")]
pub enum ClosureCheck {
    Closed,
    NotClosed { witness: ExponentVector },
}

impl ClosureCheck {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosureCheck::Closed)
    }
}

/// Is `I^n` integrally closed? The witness is the first minimal generator of
/// the closure (canonical order) missing from the power.
pub fn is_integrally_closed(ideals: &[MonomialIdeal], n: &MultiIndex) -> Result<ClosureCheck> {
    common_dim(ideals)?;
    check_dim(ideals.len(), n.len())?;
    if n.total_degree() == 0 {
        return Ok(ClosureCheck::Closed);
    }
    let power = multi_power(ideals, n)?;
    let closure = closure_generators(ideals, n)?;
    for g in closure.gens() {
        if !power.contains_monomial(g)? {
            return Ok(ClosureCheck::NotClosed { witness: g.clone() });
        }
    }
    Ok(ClosureCheck::Closed)
}

/// Largest dimension of a compact face of the polyhedron.
///
/// A face is compact iff it minimises a strictly positive weight `w`. A
/// compact face of dimension `k` contains `k + 1` affinely independent
/// points of the generating set, and conversely such a set `T` lies on a
/// common compact face iff some `w >= (1, ..., 1)` and `c` satisfy
/// `<w, a> = c` on `T` and `<w, a> >= c` on every point (the scaling of `w`
/// absorbs strict positivity). Candidate sets are searched from the largest
/// admissible size down.
pub fn max_compact_face_dim(np: &NewtonPolyhedron) -> Result<usize> {
    let points = np.points();
    if points.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let d = np.dim();
    let coords: Vec<&[u32]> = points.iter().map(|p| p.coords()).collect();
    let upper = (affine_dimension(&coords) as usize).min(d.saturating_sub(1));
    for k in (1..=upper).rev() {
        let mut found = false;
        for_each_subset(points.len(), k + 1, &mut |subset| {
            let sub: Vec<&[u32]> = subset.iter().map(|&i| coords[i]).collect();
            if affine_dimension(&sub) as usize != k {
                return false;
            }
            found = face_system_feasible(&coords, subset, d);
            found
        });
        if found {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Does some `w >= 1` and `c` put `subset` on the `w`-minimal face?
fn face_system_feasible(coords: &[&[u32]], subset: &[usize], d: usize) -> bool {
    // variables: w_0..w_{d-1}, c
    let mut sys = LinearSystem::new(d + 1);
    for k in 0..d {
        let mut row = vec![0i64; d + 1];
        row[k] = 1;
        sys.push_int(&row, Relation::Ge, 1);
    }
    for (i, a) in coords.iter().enumerate() {
        let mut row: Vec<i64> = a.iter().map(|&x| x as i64).collect();
        row.push(-1);
        let rel = if subset.contains(&i) {
            Relation::Eq
        } else {
            Relation::Ge
        };
        sys.push_int(&row, rel, 0);
    }
    lp_feasible(&sys)
        .expect("well-formed face system")
        .is_some()
}

/// Visit the `size`-subsets of `0..n` in lexicographic order until the
/// visitor returns true.
fn for_each_subset(n: usize, size: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
