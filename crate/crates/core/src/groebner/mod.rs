//! Gröbner bases and the ideal-theoretic services built on them.

mod buchberger;
mod hilbert;
mod ideal;

pub use buchberger::Budget;
pub use hilbert::{hilbert_function, monomial_hilbert_function, monomial_hilbert_numerator};
pub use ideal::{
    divide_exact, eliminate, eliminate_with_order, ideal_equal, ideal_quotient, intersect,
    membership, minimal_generators, saturate_by_variable, Saturation,
};

pub(crate) use buchberger::{full_reduce, Reducers, Row};

use serde::Serialize;

use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Settings for one Gröbner basis computation.
#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    pub budget: Budget,
    /// Grading used by the sugar selection strategy (all ones when absent).
    pub sugar_weights: Option<Vec<u64>>,
}

impl GbOptions {
    pub fn with_budget(budget: Budget) -> Self {
        GbOptions {
            budget,
            sugar_weights: None,
        }
    }

    pub fn weighted(budget: Budget, weights: Vec<u64>) -> Self {
        GbOptions {
            budget,
            sugar_weights: Some(weights),
        }
    }
}

/// Reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, Serialize)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    reduced: bool,
    #[serde(skip)]
    nvars: usize,
    #[serde(skip)]
    rows: Vec<Row>,
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of `gens` under `ord` with the default budget.
    pub fn compute(gens: &[Polynomial], ord: &MonomialOrder) -> Result<Self> {
        Self::compute_with(gens, ord, &GbOptions::default())
    }

    pub fn compute_with(
        gens: &[Polynomial],
        ord: &MonomialOrder,
        opts: &GbOptions,
    ) -> Result<Self> {
        let nvars = gens
            .iter()
            .map(|g| g.nvars())
            .max()
            .unwrap_or_else(|| ord.vars().len());
        let ones;
        let weights: &[u64] = match &opts.sugar_weights {
            Some(w) => w,
            None => {
                ones = vec![1; nvars];
                &ones
            }
        };
        let rows = buchberger::reduced_basis(gens, nvars, ord, weights, &opts.budget)?;
        let elements = rows.iter().map(|r| r.to_poly(nvars)).collect();
        Ok(GroebnerBasis {
            order: ord.clone(),
            elements,
            reduced: true,
            nvars,
            rows,
        })
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Elements sorted by increasing leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|e| e.is_unit())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.rows.iter().map(|r| r.lead().mono.clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let reducers = Reducers::new(self.rows.iter());
        full_reduce(Row::from_poly(f, &self.order), &reducers, &self.order).to_poly(f.nvars())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Remainder of `f` on division by `g` (terms not divisible by any leading
/// monomial of `g` under `ord`).
pub fn normal_form(f: &Polynomial, g: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let rows: Vec<Row> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Row::from_poly(p, ord))
        .collect();
    let reducers = Reducers::new(rows.iter());
    full_reduce(Row::from_poly(f, ord), &reducers, ord).to_poly(f.nvars())
}

/// Reduced Gröbner basis with the default budget.
pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(gens, ord)
}

/// S-polynomial of two nonzero polynomials under `ord`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    let lf = f.leading_term(ord)?;
    let lg = g.leading_term(ord)?;
    let lcm = lf.mono.lcm(&lg.mono);
    let a = f.mul_term(&lf.coeff.recip(), &lcm.div(&lf.mono).unwrap());
    let b = g.mul_term(&lg.coeff.recip(), &lcm.div(&lg.mono).unwrap());
    a.checked_sub(&b)
}

/// Buchberger's criterion: every S-polynomial of `g` reduces to zero modulo `g`.
pub fn is_groebner_basis(g: &[Polynomial], ord: &MonomialOrder) -> Result<bool> {
    let nz: Vec<&Polynomial> = g.iter().filter(|p| !p.is_zero()).collect();
    let owned: Vec<Polynomial> = nz.iter().map(|p| (*p).clone()).collect();
    for i in 0..nz.len() {
        for j in i + 1..nz.len() {
            let li = &nz[i].leading_term(ord)?.mono;
            let lj = &nz[j].leading_term(ord)?.mono;
            if li.is_coprime(lj) {
                continue;
            }
            let s = s_polynomial(nz[i], nz[j], ord)?;
            if !normal_form(&s, &owned, ord).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
