//! Sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod polynomial;
mod text;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Term};
pub use text::Ring;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field.
pub type Coeff = num_rational::BigRational;

/// Positive integer weights, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    weights: Vec<u64>,
}

impl Grading {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::invalid("grading weights must be positive"));
        }
        Ok(Grading { weights })
    }

    pub fn standard(nvars: usize) -> Self {
        Grading {
            weights: vec![1; nvars],
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.weights)
    }

    /// Grading with `extra` weight-one variables appended.
    pub fn extend(&self, extra: usize) -> Grading {
        let mut w = self.weights.clone();
        w.extend(std::iter::repeat_n(1, extra));
        Grading { weights: w }
    }
}

/// Integer coefficient helper.
pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}
