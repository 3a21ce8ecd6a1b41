use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The monomial `x_var^exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[var] = exp;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn set_exp(&mut self, var: usize, e: u32) {
        self.0[var] = e;
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if b > a {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` is set when variable `i` (mod 64) occurs. Divisibility of
    /// monomials implies containment of masks.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    /// Appends `extra` variables with exponent zero.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        Monomial(v)
    }

    /// Keeps only the listed variables, in the given order.
    pub fn project(&self, vars: &[usize]) -> Monomial {
        Monomial(vars.iter().map(|&v| self.0[v]).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
