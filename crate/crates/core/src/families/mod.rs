//! The explicit families with closed-form tangent-cone data, behind a
//! common trait and selected by name.

mod arithmetic;
mod bresinsky;
mod frobenius;
mod sally;
mod shibuta;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

pub use arithmetic::{
    interval_equality_family, is_interval_equality_family, patil_generators, Arithmetic,
};
pub use bresinsky::{bresinsky_basis, Bresinsky, BresinskyBasis};
pub use frobenius::Frobenius;
pub use sally::Sally;
pub use shibuta::{shibuta_basis, Shibuta, ShibutaBasis};

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, Budget};
use crate::poly::{coeff, Grading, Monomial, Polynomial};
use crate::resolution::minimal_free_resolution;
use crate::semigroup::NumericalSemigroup;
use crate::tangentcone::{is_standard_basis, tangent_cone, TangentConeOptions};
use crate::toric::h_grading;

/// Named integer parameters of a family instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params(pub BTreeMap<String, u64>);

impl Params {
    pub fn new<'a>(items: impl IntoIterator<Item = (&'a str, u64)>) -> Self {
        Params(items.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    pub fn get(&self, name: &str) -> Result<u64> {
        self.0
            .get(name)
            .copied()
            .ok_or_else(|| Error::invalid(format!("missing parameter --{name}")))
    }
}

/// Description of one parameter.
#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub help: &'static str,
}

/// Closed-form predictions for one family member.
#[derive(Clone, Debug, Default)]
pub struct FamilyExpectation {
    pub family: String,
    pub params: Params,
    pub semigroup: Option<NumericalSemigroup>,
    pub expected_mu_h: Option<usize>,
    pub expected_mu_i: Option<usize>,
    pub expected_mu_star: usize,
    pub expected_star_gens: Option<Vec<Polynomial>>,
    /// Sorted degrees of a minimal generating set of `I*`.
    pub expected_star_degrees: Option<Vec<u64>>,
    pub expected_cm: Option<bool>,
    pub expected_symmetric: Option<bool>,
    pub expected_frobenius: Option<i64>,
    /// Total Betti numbers of `S/I` and of `S/I*`.
    pub expected_betti: Option<Vec<usize>>,
    /// Explicit generators of `I_H`, compared as ideals.
    pub ideal_gens: Option<Vec<Polynomial>>,
    /// An explicit standard basis of `I_H`.
    pub standard_basis: Option<Vec<Polynomial>>,
    /// Parameter-only identities checked at construction time.
    pub identities: Vec<(String, bool)>,
}

impl FamilyExpectation {
    pub fn semigroup(&self) -> &NumericalSemigroup {
        self.semigroup
            .as_ref()
            .expect("family constructors always set the semigroup")
    }
}

/// A family of semigroups with predicted invariants.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn params(&self) -> &'static [ParamSpec];
    fn build(&self, params: &Params) -> Result<FamilyExpectation>;
}

/// All families, in a fixed order.
pub fn registry() -> Vec<Box<dyn Family>> {
    vec![
        Box::new(Sally),
        Box::new(Bresinsky),
        Box::new(Shibuta),
        Box::new(Frobenius),
        Box::new(Arithmetic),
    ]
}

pub fn family(name: &str) -> Result<Box<dyn Family>> {
    registry()
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| {
            let names: Vec<&str> = registry().iter().map(|f| f.name()).collect();
            Error::invalid(format!(
                "unknown family {name:?}; known: {}",
                names.join(", ")
            ))
        })
}

/// One expected-versus-observed comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub params: Params,
    pub semigroup: Vec<u64>,
    pub mu_i: usize,
    pub mu_i_star: usize,
    pub cm: bool,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ValidateOptions {
    pub budget: Budget,
    /// Compute resolutions when the family predicts Betti numbers.
    pub betti: bool,
}

fn check(checks: &mut Vec<Check>, name: &str, expected: Value, observed: Value) {
    let pass = expected == observed;
    checks.push(Check {
        name: name.to_string(),
        expected,
        observed,
        pass,
    });
}

/// Runs the generic pipeline on the family member and compares every
/// predicted field.
pub fn validate(exp: &FamilyExpectation, opts: &ValidateOptions) -> Result<FamilyReport> {
    let h = exp.semigroup();
    let tc = tangent_cone(h, &TangentConeOptions::with_budget(opts.budget))?;
    let mut checks = Vec::new();
    for (name, ok) in &exp.identities {
        check(&mut checks, name, json!(true), json!(ok));
    }
    if let Some(m) = exp.expected_mu_h {
        check(&mut checks, "mu_H", json!(m), json!(h.mu()));
    }
    if let Some(m) = exp.expected_mu_i {
        check(&mut checks, "mu_I", json!(m), json!(tc.mu_i()));
    }
    check(
        &mut checks,
        "mu_I_star",
        json!(exp.expected_mu_star),
        json!(tc.mu_star()),
    );
    if let Some(gens) = &exp.expected_star_gens {
        let eq = ideal_equal(gens, tc.star(), &opts.budget)?;
        check(&mut checks, "I_star_equal", json!(true), json!(eq));
    }
    if let Some(degs) = &exp.expected_star_degrees {
        let mut obs: Vec<u64> = tc.star().iter().filter_map(|p| p.total_degree()).collect();
        obs.sort_unstable();
        check(&mut checks, "I_star_degrees", json!(degs), json!(obs));
    }
    if let Some(cm) = exp.expected_cm {
        check(&mut checks, "cm", json!(cm), json!(tc.cm));
    }
    if let Some(s) = exp.expected_symmetric {
        check(
            &mut checks,
            "symmetric",
            json!(s),
            json!(h.normalized().is_symmetric()?),
        );
    }
    if let Some(f) = exp.expected_frobenius {
        check(
            &mut checks,
            "frobenius",
            json!(f),
            json!(h.normalized().frobenius_number()?),
        );
    }
    if let Some(gens) = &exp.ideal_gens {
        let eq = ideal_equal(gens, &tc.ideal, &opts.budget)?;
        check(&mut checks, "I_equal", json!(true), json!(eq));
    }
    if let Some(sb) = &exp.standard_basis {
        let ok = is_standard_basis(sb, &tc.ideal, &opts.budget)?;
        check(&mut checks, "standard_basis", json!(true), json!(ok));
    }
    if let (Some(betti), true) = (&exp.expected_betti, opts.betti) {
        let bi = minimal_free_resolution(&tc.ideal, &h_grading(h), &opts.budget)?;
        let bs = minimal_free_resolution(tc.star(), &Grading::standard(h.mu()), &opts.budget)?;
        check(&mut checks, "betti_I", json!(betti), json!(bi.betti.total));
        check(
            &mut checks,
            "betti_I_star",
            json!(betti),
            json!(bs.betti.total),
        );
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(FamilyReport {
        family: exp.family.clone(),
        params: exp.params.clone(),
        semigroup: h.generators().to_vec(),
        mu_i: tc.mu_i(),
        mu_i_star: tc.mu_star(),
        cm: tc.cm,
        checks,
        pass,
    })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Monomial `x^e` with exponents `e` (helper for closed forms).
fn mono(e: &[u32]) -> Polynomial {
    Polynomial::monomial(coeff(1), Monomial::from_exponents(e))
}
