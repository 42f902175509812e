//! Sparse polynomials with exact coefficients and an incremental echelon
//! basis over them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::lp::Rational;
use crate::monomial::ExponentVector;

/// A polynomial as a map from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(exp: ExponentVector) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(exp, Rational::one());
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, Rational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: ExponentVector, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// `self -= f * other`.
    pub fn sub_scaled(&mut self, other: &Polynomial, f: &Rational) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), &-(f * c));
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        out
    }

    pub fn shift(&self, by: &ExponentVector) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(by), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&mut self, f: &Rational) {
        for c in self.terms.values_mut() {
            *c *= f;
        }
    }

    /// Smallest total degree in the support.
    pub fn min_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).min()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    pub fn leading(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    fn pop_leading(&mut self) -> Option<(ExponentVector, Rational)> {
        self.terms.pop_last()
    }

    /// Terms as `(exponent, "p/q")` pairs, leading term first.
    pub fn to_report_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| Term {
                exponent: e.clone(),
                coefficient: c.to_string(),
            })
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e}")?;
        }
        Ok(())
    }
}

/// One term of a reported polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub exponent: ExponentVector,
    pub coefficient: String,
}

/// Row echelon basis of a span of polynomials, keyed by pivot monomial.
///
/// Rows are normalised to pivot coefficient 1 and every other term of a row
/// is smaller than its pivot, so reduction can consume a vector from its
/// largest term downwards. Each row optionally carries a tag recording the
/// combination of inserted vectors it came from.
#[derive(Clone, Debug, Default)]
pub struct EchelonSpan {
    rows: BTreeMap<ExponentVector, (Polynomial, Polynomial)>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        EchelonSpan::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot, together with the
    /// matching update of `tag`.
    fn reduce_tagged(&self, mut v: Polynomial, mut tag: Polynomial) -> (Polynomial, Polynomial) {
        let mut rest = Polynomial::zero();
        while let Some((m, c)) = v.pop_leading() {
            match self.rows.get(&m) {
                Some((row, row_tag)) => {
                    for (e, a) in row.terms.iter().rev().skip(1) {
                        v.add_term(e.clone(), &-(&c * a));
                    }
                    tag.sub_scaled(row_tag, &c);
                }
                None => {
                    rest.terms.insert(m, c);
                }
            }
        }
        (rest, tag)
    }

    pub fn reduce(&self, v: &Polynomial) -> Polynomial {
        self.reduce_tagged(v.clone(), Polynomial::zero()).0
    }

    pub fn contains(&self, v: &Polynomial) -> bool {
        self.reduce(v).is_zero()
    }

    /// Add `v` to the span; false when it was already inside.
    pub fn insert(&mut self, v: &Polynomial) -> bool {
        self.insert_tagged(v.clone(), Polynomial::zero()).is_none()
    }

    /// Insert `v` carrying `tag`. If `v` reduces to zero the reduced tag is
    /// returned: a combination of earlier tags and `tag` mapping to zero.
    pub fn insert_tagged(&mut self, v: Polynomial, tag: Polynomial) -> Option<Polynomial> {
        let (mut r, mut t) = self.reduce_tagged(v, tag);
        let Some((lead, c)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) else {
            return Some(t);
        };
        let inv = c.recip();
        r.scale(&inv);
        t.scale(&inv);
        self.rows.insert(lead, (r, t));
        None
    }
}
