//! Small exact linear algebra over the rationals.

use num_traits::Zero;

use crate::lp::Rational;

/// Rank of a dense rational matrix given by rows.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Dimension of the affine hull of integer points (-1 for no points).
pub fn affine_dimension(points: &[&[u32]]) -> i64 {
    let Some((base, rest)) = points.split_first() else {
        return -1;
    };
    let rows: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| {
            p.iter()
                .zip(base.iter())
                .map(|(&a, &b)| Rational::from_integer((a as i64 - b as i64).into()))
                .collect()
        })
        .collect();
    rank(rows) as i64
}
