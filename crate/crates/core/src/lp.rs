//! Exact rational linear programming.
//!
//! A dense two-phase simplex over arbitrary-precision rationals with Bland's
//! anti-cycling rule. The systems met in this crate are tiny (a few dozen
//! columns), so a dense tableau is the right tool; nothing is ever rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Numerator and denominator are arbitrary precision
/// and always kept reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// A system of linear equations and inequalities. Variables are free unless
/// marked non-negative; sign constraints may equally be given as rows.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    num_vars: usize,
    nonnegative: Vec<bool>,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    /// `num_vars` free variables, no constraints.
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            nonnegative: vec![false; num_vars],
            constraints: Vec::new(),
        }
    }

    /// `num_vars` variables, all constrained to be non-negative.
    pub fn nonnegative(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            nonnegative: vec![true; num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonnegative[var] = true;
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn push_int(&mut self, coeffs: &[i64], relation: Relation, rhs: i64) {
        self.push(coeffs.iter().map(|&c| rat(c)).collect(), relation, rat(rhs));
    }

    fn validate(&self) -> Result<()> {
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::MalformedSystem(format!(
                    "constraint {i} has {} coefficients for {} variables",
                    c.coeffs.len(),
                    self.num_vars
                )));
            }
        }
        Ok(())
    }

    /// Check that `point` satisfies every constraint exactly.
    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        if point.len() != self.num_vars {
            return false;
        }
        let signs_ok = self
            .nonnegative
            .iter()
            .zip(point)
            .all(|(&nn, x)| !nn || !x.is_negative());
        signs_ok
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coeffs.iter().zip(point).map(|(a, x)| a * x).sum();
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }
}

/// Result of a minimization.
#[derive(Clone, Debug, PartialEq)]
pub enum Optimum {
    Infeasible,
    Unbounded,
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
}

/// Decide feasibility; on success return a witness point.
pub fn lp_feasible(system: &LinearSystem) -> Result<Option<Vec<Rational>>> {
    system.validate()?;
    let mut tab = Tableau::build(system);
    if !tab.phase_one() {
        return Ok(None);
    }
    Ok(Some(tab.extract(system)))
}

/// Minimize `objective . x` over the system.
pub fn lp_minimize(system: &LinearSystem, objective: &[Rational]) -> Result<Optimum> {
    system.validate()?;
    if objective.len() != system.num_vars {
        return Err(Error::MalformedSystem(format!(
            "objective has {} coefficients for {} variables",
            objective.len(),
            system.num_vars
        )));
    }
    let mut tab = Tableau::build(system);
    if !tab.phase_one() {
        return Ok(Optimum::Infeasible);
    }
    let cost = tab.column_costs(objective);
    if !tab.phase_two(&cost) {
        return Ok(Optimum::Unbounded);
    }
    let point = tab.extract(system);
    let value = objective.iter().zip(&point).map(|(c, x)| c * x).sum();
    Ok(Optimum::Optimal { value, point })
}

/// Dense simplex tableau in standard form `A y = b, y >= 0, b >= 0`.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Column index of `(var, negated part)` for every original variable.
    var_cols: Vec<(usize, Option<usize>)>,
    /// First artificial column; columns `>= art_start` are artificial.
    art_start: usize,
    width: usize,
}

impl Tableau {
    fn build(system: &LinearSystem) -> Tableau {
        let mut var_cols = Vec::with_capacity(system.num_vars);
        let mut ncols = 0;
        for &nn in &system.nonnegative {
            if nn {
                var_cols.push((ncols, None));
                ncols += 1;
            } else {
                var_cols.push((ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
        // normalise every row to a non-negative right-hand side
        let normalised: Vec<(Vec<Rational>, Relation, Rational)> = system
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), rel, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        let n_slack = normalised
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Eq)
            .count();
        let n_art = normalised
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Le)
            .count();
        let art_start = ncols + n_slack;
        let width = art_start + n_art;

        let mut rows = Vec::with_capacity(normalised.len());
        let mut basis = Vec::with_capacity(normalised.len());
        let mut slack = ncols;
        let mut art = art_start;
        for (coeffs, rel, rhs) in normalised {
            let mut row = vec![Rational::zero(); width + 1];
            for (a, &(pos, neg)) in coeffs.iter().zip(&var_cols) {
                if a.is_zero() {
                    continue;
                }
                row[pos] = a.clone();
                if let Some(neg) = neg {
                    row[neg] = -a;
                }
            }
            row[width] = rhs;
            match rel {
                Relation::Le => {
                    row[slack] = Rational::one();
                    basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                    row[art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
                Relation::Eq => {
                    row[art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
            }
            rows.push(row);
        }
        Tableau {
            rows,
            basis,
            var_cols,
            art_start,
            width,
        }
    }

    fn pivot(&mut self, r: usize, c: usize, z: &mut [Rational]) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            eliminate(row, &pivot_row, &f);
        }
        if !z[c].is_zero() {
            let f = z[c].clone();
            eliminate(z, &pivot_row, &f);
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Run the simplex loop on reduced-cost row `z` over columns `< limit`.
    /// Returns false when the objective is unbounded below.
    fn optimise(&mut self, z: &mut [Rational], limit: usize) -> bool {
        loop {
            // Bland: lowest-index improving column
            let Some(c) = (0..limit).find(|&j| z[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[c];
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c, z);
        }
    }

    /// Minimise the sum of artificials; true iff the system is feasible.
    /// On success all artificials are out of the basis (redundant rows dropped).
    fn phase_one(&mut self) -> bool {
        if self.art_start == self.width {
            return true;
        }
        let mut z = vec![Rational::zero(); self.width + 1];
        for zj in &mut z[self.art_start..self.width] {
            *zj = Rational::one();
        }
        for (i, row) in self.rows.iter().enumerate() {
            if self.basis[i] >= self.art_start {
                for (zj, a) in z.iter_mut().zip(row) {
                    if !a.is_zero() {
                        *zj -= a;
                    }
                }
            }
        }
        let bounded = self.optimise(&mut z, self.width);
        debug_assert!(bounded);
        if !z[self.width].is_zero() {
            return false;
        }
        // drive zero-level artificials out of the basis
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.art_start {
                match (0..self.art_start).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => {
                        self.pivot(i, j, &mut z);
                        i += 1;
                    }
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        true
    }

    /// Objective over original variables mapped onto tableau columns.
    fn column_costs(&self, objective: &[Rational]) -> Vec<Rational> {
        let mut cost = vec![Rational::zero(); self.art_start];
        for (c, &(pos, neg)) in objective.iter().zip(&self.var_cols) {
            cost[pos] = c.clone();
            if let Some(neg) = neg {
                cost[neg] = -c;
            }
        }
        cost
    }

    fn phase_two(&mut self, cost: &[Rational]) -> bool {
        let mut z = vec![Rational::zero(); self.width + 1];
        z[..cost.len()].clone_from_slice(cost);
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            let cb = cb.clone();
            eliminate(&mut z, row, &cb);
        }
        self.optimise(&mut z, self.art_start)
    }

    fn extract(&self, system: &LinearSystem) -> Vec<Rational> {
        let mut col_val = vec![Rational::zero(); self.width];
        for (i, &b) in self.basis.iter().enumerate() {
            col_val[b] = self.rows[i][self.width].clone();
        }
        (0..system.num_vars)
            .map(|v| {
                let (pos, neg) = self.var_cols[v];
                match neg {
                    Some(neg) => &col_val[pos] - &col_val[neg],
                    None => col_val[pos].clone(),
                }
            })
            .collect()
    }
}

/// `row -= f * pivot_row`.
fn eliminate(row: &mut [Rational], pivot_row: &[Rational], f: &Rational) {
    for (x, p) in row.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *x -= f * p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infeasible_bounds() {
        // λ >= 0, λ = 1, 3λ <= 2
        let mut s = LinearSystem::new(1);
        s.push_int(&[1], Relation::Ge, 0);
        s.push_int(&[1], Relation::Eq, 1);
        s.push_int(&[3], Relation::Le, 2);
        assert_eq!(lp_feasible(&s).unwrap(), None);
    }

    #[test]
    fn feasible_two_variables() {
        let mut s = LinearSystem::new(2);
        s.push_int(&[1, 1], Relation::Eq, 1);
        s.push_int(&[1, 0], Relation::Ge, 0);
        s.push_int(&[0, 1], Relation::Ge, 0);
        s.push_int(&[3, 0], Relation::Le, 2);
        s.push_int(&[0, 3], Relation::Le, 1);
        let w = lp_feasible(&s).unwrap().expect("feasible");
        assert!(s.is_satisfied_by(&w));
        // the system pins the point down uniquely
        assert_eq!(w, vec![rat_frac(2, 3), rat_frac(1, 3)]);
    }

    #[test]
    fn empty_system_is_feasible() {
        let s = LinearSystem::new(3);
        let w = lp_feasible(&s).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        assert!(lp_feasible(&LinearSystem::new(0)).unwrap().is_some());
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let mut s = LinearSystem::new(2);
        s.push_int(&[1], Relation::Le, 0);
        assert!(matches!(lp_feasible(&s), Err(Error::MalformedSystem(_))));
        let s = LinearSystem::new(2);
        assert!(matches!(
            lp_minimize(&s, &[rat(1)]),
            Err(Error::MalformedSystem(_))
        ));
    }

    #[test]
    fn negative_rhs_and_free_variables() {
        // x free, x <= -3, x >= -5: feasible with x in [-5, -3]
        let mut s = LinearSystem::new(1);
        s.push_int(&[1], Relation::Le, -3);
        s.push_int(&[1], Relation::Ge, -5);
        let w = lp_feasible(&s).unwrap().unwrap();
        assert!(s.is_satisfied_by(&w));
        match lp_minimize(&s, &[rat(1)]).unwrap() {
            Optimum::Optimal { value, .. } => assert_eq!(value, rat(-5)),
            other => panic!("{other:?}"),
        }
        match lp_minimize(&s, &[rat(-1)]).unwrap() {
            Optimum::Optimal { value, .. } => assert_eq!(value, rat(3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded_and_infeasible_minimisation() {
        let mut s = LinearSystem::nonnegative(2);
        s.push_int(&[1, -1], Relation::Le, 1);
        assert_eq!(
            lp_minimize(&s, &[rat(0), rat(-1)]).unwrap(),
            Optimum::Unbounded
        );

        let mut s = LinearSystem::nonnegative(1);
        s.push_int(&[1], Relation::Le, -1);
        assert_eq!(lp_minimize(&s, &[rat(1)]).unwrap(), Optimum::Infeasible);
    }

    #[test]
    fn redundant_equalities() {
        // x + y = 2 twice, 2x + 2y = 4, minimise x - y over x, y >= 0
        let mut s = LinearSystem::nonnegative(2);
        s.push_int(&[1, 1], Relation::Eq, 2);
        s.push_int(&[1, 1], Relation::Eq, 2);
        s.push_int(&[2, 2], Relation::Eq, 4);
        match lp_minimize(&s, &[rat(1), rat(-1)]).unwrap() {
            Optimum::Optimal { value, point } => {
                assert_eq!(value, rat(-2));
                assert_eq!(point, vec![rat(0), rat(2)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_candidate() {
        // Beale's classic cycling example; Bland's rule must terminate.
        let mut s = LinearSystem::nonnegative(4);
        s.push(
            vec![rat_frac(1, 4), rat(-8), rat(-1), rat(9)],
            Relation::Le,
            rat(0),
        );
        s.push(
            vec![rat_frac(1, 2), rat(-12), rat_frac(-1, 2), rat(3)],
            Relation::Le,
            rat(0),
        );
        s.push_int(&[0, 0, 1, 0], Relation::Le, 1);
        let obj = vec![rat_frac(-3, 4), rat(20), rat_frac(-1, 2), rat(6)];
        match lp_minimize(&s, &obj).unwrap() {
            Optimum::Optimal { value, point } => {
                assert_eq!(value, rat_frac(-5, 4));
                assert!(s.is_satisfied_by(&point));
            }
            other => panic!("{other:?}"),
        }
    }
}
