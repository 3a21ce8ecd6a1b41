use super::{binom, Family, FamilyExpectation, ParamSpec, Params};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `S_e = <i : e <= i <= 2e-1, i != e+2, e+3>`, symmetric with `mu(I*) = C(e-2, 2)`.
pub struct Sally;

impl Sally {
    pub fn semigroup(e: u64) -> Result<NumericalSemigroup> {
        if e < 5 {
            return Err(Error::invalid(format!("sally needs e >= 5, got {e}")));
        }
        let gens: Vec<u64> = (e..2 * e).filter(|&i| i != e + 2 && i != e + 3).collect();
        NumericalSemigroup::from_generators(&gens)
    }
}

impl Family for Sally {
    fn name(&self) -> &'static str {
        "sally"
    }

    fn description(&self) -> &'static str {
        "S_e = <e..2e-1 without e+2, e+3>, e >= 5"
    }

    fn params(&self) -> &'static [ParamSpec] {
        &[ParamSpec {
            name: "e",
            help: "multiplicity, at least 5",
        }]
    }

    fn build(&self, params: &Params) -> Result<FamilyExpectation> {
        let e = params.get("e")?;
        let h = Sally::semigroup(e)?;
        let c = binom(e - 2, 2);
        let mut degrees = vec![2; c as usize - 1];
        degrees.push(4);
        let width = h.width();
        Ok(FamilyExpectation {
            family: self.name().into(),
            params: Params::new([("e", e)]),
            expected_mu_h: Some(e as usize - 2),
            expected_mu_star: c as usize,
            expected_star_degrees: Some(degrees),
            expected_symmetric: Some(true),
            expected_frobenius: Some(2 * e as i64 + 3),
            identities: vec![("bound_slack".into(), c <= binom(width + 1, 2))],
            semigroup: Some(h),
            ..Default::default()
        })
    }
}
