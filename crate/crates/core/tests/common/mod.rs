//! Strategies and independent oracles shared by the integration tests. None
//! of the oracles here touch the simplex code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use normality_core::{ExponentVector, MonomialIdeal, MultiIndex};
use proptest::prelude::*;

pub fn ideal(d: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(d, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

/// A proper monomial ideal in `d` variables.
pub fn arb_ideal(d: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(
        prop::collection::vec(0..=max_exp, d).prop_filter("non-unit", |v| v.iter().any(|&c| c > 0)),
        1..=max_gens,
    )
    .prop_map(move |gens| MonomialIdeal::from_exponents(d, gens).unwrap())
}

/// `r` proper ideals in a common dimension `d`.
pub fn arb_instance(d: usize, r: usize) -> impl Strategy<Value = Vec<MonomialIdeal>> {
    prop::collection::vec(arb_ideal(d, 3, 4), r)
}

pub fn arb_any_instance() -> impl Strategy<Value = Vec<MonomialIdeal>> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(d, r)| arb_instance(d, r))
}

pub fn divides_some(gens: &[Vec<u32>], b: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(b).all(|(x, y)| x <= y))
}

pub fn coords(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.gens().iter().map(|g| g.coords().to_vec()).collect()
}

/// Exponents of all products `g_1 ... g_k` with repetition; not minimalised.
pub fn naive_power(gens: &[Vec<u32>], k: u32) -> Vec<Vec<u32>> {
    let d = gens.first().map_or(0, Vec::len);
    let mut acc: BTreeSet<Vec<u32>> = BTreeSet::new();
    acc.insert(vec![0; d]);
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for a in &acc {
            for g in gens {
                next.insert(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        acc = next;
    }
    acc.into_iter().collect()
}

/// Exponents of `I_1^{n_1} ... I_r^{n_r}` by naive expansion.
pub fn naive_multi_power(ideals: &[MonomialIdeal], n: &[u32]) -> Vec<Vec<u32>> {
    let d = ideals[0].dim();
    let mut acc = vec![vec![0; d]];
    for (ideal, &k) in ideals.iter().zip(n) {
        let part = naive_power(&coords(ideal), k);
        let mut next = BTreeSet::new();
        for a in &acc {
            for p in &part {
                next.insert(a.iter().zip(p).map(|(x, y)| x + y).collect::<Vec<u32>>());
            }
        }
        acc = next.into_iter().collect();
    }
    acc
}

/// `b` lies in `conv(pts) + R^2_+` iff some point of a segment `[p, q]` with
/// `p, q in pts` is below it. Exact integer arithmetic only.
pub fn np2_contains(pts: &[Vec<u32>], b: &[u32]) -> bool {
    for p in pts {
        for q in pts {
            if segment_below(p, q, b) {
                return true;
            }
        }
    }
    false
}

/// Is there `t in [0, 1]` with `q + t (p - q) <= b` coordinatewise?
fn segment_below(p: &[u32], q: &[u32], b: &[u32]) -> bool {
    // feasible t form an interval [lo, hi], kept as fractions num/den, den > 0
    let (mut lo_n, mut lo_d) = (0i64, 1i64);
    let (mut hi_n, mut hi_d) = (1i64, 1i64);
    for k in 0..2 {
        let a = p[k] as i64 - q[k] as i64;
        let c = b[k] as i64 - q[k] as i64;
        // constraint: t * a <= c
        if a == 0 {
            if c < 0 {
                return false;
            }
        } else if a > 0 {
            // t <= c / a
            if c * hi_d < hi_n * a {
                hi_n = c;
                hi_d = a;
            }
        } else {
            // t >= c / a = (-c) / (-a)
            let (n, d) = (-c, -a);
            if n * lo_d > lo_n * d {
                lo_n = n;
                lo_d = d;
            }
        }
    }
    lo_n * hi_d <= hi_n * lo_d
}

/// Some nonzero `w in {0..=bound}^d` strictly separates `b` from every point:
/// a certificate that `b` is outside `conv(pts) + R^d_+`.
pub fn separated(pts: &[Vec<u32>], b: &[u32], bound: u32) -> bool {
    let d = b.len();
    let mut w = vec![0u32; d];
    loop {
        let mut k = 0;
        while k < d && w[k] == bound {
            w[k] = 0;
            k += 1;
        }
        if k == d {
            return false;
        }
        w[k] += 1;
        let dot = |v: &[u32]| -> u64 { v.iter().zip(&w).map(|(&x, &y)| x as u64 * y as u64).sum() };
        let wb = dot(b);
        if pts.iter().all(|p| dot(p) > wb) {
            return true;
        }
    }
}

/// `x^{kb}` lies in `J^k` for some `k <= max_k`: a certificate that `b` is in
/// the closure of `J`.
pub fn power_certified(gens: &[Vec<u32>], b: &[u32], max_k: u32) -> bool {
    (1..=max_k).any(|k| {
        let kb: Vec<u32> = b.iter().map(|&x| x * k).collect();
        divides_some(&naive_power(gens, k), &kb)
    })
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank_i128(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let (a, b) = (rows[rank][c], rows[i][c]);
                let pivot = rows[rank].clone();
                for (x, &y) in rows[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = rows[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    for x in &mut rows[i] {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every point of `[0, b_1] x ... x [0, b_d]`.
pub fn box_iter(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}
