use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::{Coeff, Grading};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Sparse polynomial over the rationals. Terms are kept in decreasing
/// degrevlex order (variables in index order), without zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

/// The canonical term order used for storage and display.
pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let da: u64 = ea.iter().map(|&e| e as u64).sum();
    let db: u64 = eb.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in ea.iter().rev().zip(eb.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::monomial(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(Coeff::one(), Monomial::var_power(nvars, var, 1))
    }

    pub fn monomial(coeff: Coeff, mono: Monomial) -> Self {
        let nvars = mono.nvars();
        if coeff.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![Term { coeff, mono }],
        }
    }

    /// `m1 - m2` from exponent vectors.
    pub fn binomial(plus: &[u32], minus: &[u32]) -> Self {
        let n = plus.len();
        Self::from_terms(
            n,
            vec![
                Term::new(Coeff::one(), Monomial::from_exponents(plus)),
                Term::new(-Coeff::one(), Monomial::from_exponents(minus)),
            ],
        )
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for t in terms {
            assert_eq!(t.mono.nvars(), nvars, "term lives in a different ring");
            *map.entry(t.mono).or_insert_with(Coeff::zero) += t.coeff;
        }
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| canonical_cmp(&b.mono, &a.mono));
        Polynomial { nvars, terms }
    }

    /// Builds from terms already sorted by a (possibly different) order.
    pub(crate) fn from_unsorted_distinct(nvars: usize, mut terms: Vec<Term>) -> Self {
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| canonical_cmp(&b.mono, &a.mono));
        debug_assert!(terms.windows(2).all(|w| w[0].mono != w[1].mono));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn ring_of(&self, other: &Polynomial) -> Result<usize> {
        // a zero polynomial read back from JSON has no ring attached
        if self.nvars == other.nvars || (other.is_zero() && other.nvars == 0) {
            Ok(self.nvars)
        } else if self.is_zero() && self.nvars == 0 {
            Ok(other.nvars)
        } else {
            Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Result<Polynomial> {
        let nvars = self.ring_of(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Coeff| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match canonical_cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term::new(sign(&b[j].coeff), b[j].mono.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term::new(c, a[i].mono.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|t| Term::new(sign(&t.coeff), t.mono.clone())),
        );
        Ok(Polynomial { nvars, terms: out })
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.merge(other, false)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.merge(other, true)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let nvars = self.ring_of(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(nvars));
        }
        let mut acc = Polynomial::zero(nvars);
        // multiply the shorter operand term by term
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for t in &short.terms {
            acc = acc.merge(&long.mul_term(&t.coeff, &t.mono), false)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// `c * m * self`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.mul(m)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        self.mul_term(&Coeff::one(), m)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<&Term> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.mono, &b.mono))
            .ok_or(Error::ZeroPolynomial("leading term"))
    }

    /// Terms in decreasing order under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<Term> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        t
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn make_monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Ok(lt) => {
                let inv = lt.coeff.recip();
                self.scale(&inv)
            }
            Err(_) => self.clone(),
        }
    }

    /// Normalizes sign so that the canonically-first term is positive.
    pub fn normalize_sign(&self) -> Polynomial {
        match self.terms.first() {
            Some(t) if t.coeff.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Total degree if standard homogeneous.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.first().map(|t| t.mono.degree())
    }

    /// Lowest-degree homogeneous component and its degree.
    pub fn initial_form(&self) -> Result<(Polynomial, u64)> {
        let nu = self
            .terms
            .iter()
            .map(|t| t.mono.degree())
            .min()
            .ok_or(Error::ZeroPolynomial("initial form"))?;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.degree() == nu)
            .cloned()
            .collect();
        Ok((
            Polynomial {
                nvars: self.nvars,
                terms,
            },
            nu,
        ))
    }

    /// Common weighted degree of all terms, or `None` if not homogeneous.
    pub fn weighted_degree(&self, grading: &Grading) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("weighted degree"));
        }
        if grading.nvars() != self.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: grading.nvars(),
            });
        }
        let w = grading.weights();
        let d = self.terms[0].mono.weighted_degree(w);
        Ok(self
            .terms
            .iter()
            .all(|t| t.mono.weighted_degree(w) == d)
            .then_some(d))
    }

    pub fn is_homogeneous(&self, grading: &Grading) -> bool {
        self.is_zero() || matches!(self.weighted_degree(grading), Ok(Some(_)))
    }

    /// Pads every term with powers of `svar` up to the maximal total degree.
    pub fn homogenize(&self, svar: usize) -> Result<Polynomial> {
        if self.terms.iter().any(|t| t.mono.exp(svar) > 0) {
            return Err(Error::VariableOccurs(svar));
        }
        let top = match self.terms.iter().map(|t| t.mono.degree()).max() {
            Some(d) => d,
            None => return Ok(self.clone()),
        };
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut m = t.mono.clone();
                let pad = u32::try_from(top - t.mono.degree()).expect("degree overflow");
                m.set_exp(svar, pad);
                Term::new(t.coeff.clone(), m)
            })
            .collect();
        Ok(Polynomial::from_unsorted_distinct(self.nvars, terms))
    }

    /// Sets `svar := 1`.
    pub fn dehomogenize(&self, svar: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|t| {
                let mut m = t.mono.clone();
                m.set_exp(svar, 0);
                Term::new(t.coeff.clone(), m)
            }),
        )
    }

    /// Largest `e` such that `x_var^e` divides every term.
    pub fn var_power_dividing(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.exp(var))
            .min()
            .unwrap_or(0)
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms: Option<Vec<Term>> = self
            .terms
            .iter()
            .map(|t| t.mono.div(m).map(|q| Term::new(t.coeff.clone(), q)))
            .collect();
        terms.map(|terms| Polynomial::from_unsorted_distinct(self.nvars, terms))
    }

    pub fn involves_var(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exp(var) > 0)
    }

    /// Embeds into a ring with `extra` more variables appended.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.mono.extend(extra)))
            .collect();
        Polynomial::from_unsorted_distinct(self.nvars + extra, terms)
    }

    /// Restricts to the listed variables; every other variable must be absent.
    pub fn restrict_vars(&self, vars: &[usize]) -> Result<Polynomial> {
        for v in 0..self.nvars {
            if !vars.contains(&v) && self.involves_var(v) {
                return Err(Error::VariableOccurs(v));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.mono.project(vars)))
            .collect();
        Ok(Polynomial::from_unsorted_distinct(vars.len(), terms))
    }

    /// Image under `x_i -> t^{weights[i]}`, as exponent/coefficient pairs.
    pub fn substitute_univariate(&self, weights: &[u64]) -> BTreeMap<u64, Coeff> {
        let mut out: BTreeMap<u64, Coeff> = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.mono.weighted_degree(weights))
                .or_insert_with(Coeff::zero) += &t.coeff;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Substitutes `x_var := 0`.
    pub fn set_var_zero(&self, var: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|t| t.mono.exp(var) == 0)
                .cloned()
                .collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-t.coeff.clone(), t.mono.clone()))
                .collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
