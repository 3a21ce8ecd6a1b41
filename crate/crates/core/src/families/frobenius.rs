use num_integer::Integer;

use super::{mono, Family, FamilyExpectation, ParamSpec, Params};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::semigroup::NumericalSemigroup;

/// `H = <a, b, ab - a - b>` for coprime `3 < a < b`.
pub struct Frobenius;

impl Family for Frobenius {
    fn name(&self) -> &'static str {
        "frobenius"
    }

    fn description(&self) -> &'static str {
        "<a, b, ab-a-b> for coprime a, b > 3"
    }

    fn params(&self) -> &'static [ParamSpec] {
        &[
            ParamSpec {
                name: "a",
                help: "first generator, > 3",
            },
            ParamSpec {
                name: "b",
                help: "second generator, > 3, coprime to a",
            },
        ]
    }

    fn build(&self, params: &Params) -> Result<FamilyExpectation> {
        let (mut a, mut b) = (params.get("a")?, params.get("b")?);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        if a <= 3 || a == b || a.gcd(&b) != 1 {
            return Err(Error::invalid(format!(
                "frobenius needs coprime a, b > 3, got ({a}, {b})"
            )));
        }
        let h = NumericalSemigroup::from_generators(&[a, b, a * b - a - b])?;
        let (a32, b32) = (a as u32, b as u32);
        let f1 = Polynomial::binomial(&[b32 - 1, 0, 0], &[0, 1, 1]);
        let f2 = Polynomial::binomial(&[0, a32 - 1, 0], &[1, 0, 1]);
        let f3 = Polynomial::binomial(&[0, 0, 2], &[b32 - 2, a32 - 2, 0]);
        let f4 = Polynomial::binomial(&[b32, 0, 0], &[0, a32, 0]);
        let star = vec![
            mono(&[0, 1, 1]),
            mono(&[1, 0, 1]),
            mono(&[0, 0, 2]),
            mono(&[0, a32, 0]),
        ];
        Ok(FamilyExpectation {
            family: self.name().into(),
            params: Params::new([("a", a), ("b", b)]),
            expected_mu_h: Some(3),
            expected_mu_i: Some(3),
            expected_mu_star: 4,
            expected_star_gens: Some(star),
            expected_cm: Some(false),
            ideal_gens: Some(vec![f1.clone(), f2.clone(), f3.clone()]),
            standard_basis: Some(vec![f1, f2, f3, f4]),
            semigroup: Some(h),
            ..Default::default()
        })
    }
}
