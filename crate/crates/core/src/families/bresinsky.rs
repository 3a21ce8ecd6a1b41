use super::{mono, Family, FamilyExpectation, ParamSpec, Params};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::semigroup::NumericalSemigroup;

/// `B_h = <(2h-1)2h, (2h-1)(2h+1), 2h(2h+1), 2h(2h+1)+2h-1>` in variables
/// `x, y, z, t`.
pub struct Bresinsky;

/// The explicit binomials of `I_{B_h}`.
#[derive(Clone, Debug)]
pub struct BresinskyBasis {
    /// `f_i = z^{i-1} t^{2h-i} - y^{2h-i} x^{i+1}`, `i = 1..2h`.
    pub f: Vec<Polynomial>,
    pub g1: Polynomial,
    pub g2: Polynomial,
    /// `u_j = x^{2h+1-j} z^j - y^{2h-j} t^j`, `j = 0..2h-2`.
    pub u: Vec<Polynomial>,
}

impl BresinskyBasis {
    /// The `4h` elements `f_i, g_2, u_j`.
    pub fn standard_basis(&self) -> Vec<Polynomial> {
        let mut out = self.f.clone();
        out.push(self.g2.clone());
        out.extend(self.u.iter().cloned());
        out
    }
}

pub fn bresinsky_basis(h: u64) -> Result<BresinskyBasis> {
    if h < 2 {
        return Err(Error::invalid(format!("bresinsky needs h >= 2, got {h}")));
    }
    let n = 2 * h as u32;
    let f = (1..=n)
        .map(|i| Polynomial::binomial(&[0, 0, i - 1, n - i], &[i + 1, n - i, 0, 0]))
        .collect();
    let u = (0..=n - 2)
        .map(|j| Polynomial::binomial(&[n + 1 - j, 0, j, 0], &[0, n - j, 0, j]))
        .collect();
    Ok(BresinskyBasis {
        f,
        g1: Polynomial::binomial(&[0, 0, n - 1, 0], &[0, n, 0, 0]),
        g2: Polynomial::binomial(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        u,
    })
}

impl Bresinsky {
    pub fn semigroup(h: u64) -> Result<NumericalSemigroup> {
        if h < 2 {
            return Err(Error::invalid(format!("bresinsky needs h >= 2, got {h}")));
        }
        let (p, q) = (2 * h - 1, 2 * h);
        NumericalSemigroup::from_generators(&[p * q, p * (q + 1), q * (q + 1), q * (q + 1) + p])
    }

    /// The displayed minimal generators of `I*`.
    pub fn star(h: u64) -> Vec<Polynomial> {
        let n = 2 * h as u32;
        let mut out: Vec<Polynomial> = (0..n).map(|i| mono(&[0, 0, i, n - 1 - i])).collect();
        out.push(Polynomial::binomial(&[1, 0, 0, 1], &[0, 1, 1, 0]));
        out.extend((0..=n - 2).map(|j| mono(&[0, n - j, 0, j])));
        out
    }
}

impl Family for Bresinsky {
    fn name(&self) -> &'static str {
        "bresinsky"
    }

    fn description(&self) -> &'static str {
        "B_h, four generators with mu(I) = mu(I*) = 4h, h >= 2"
    }

    fn params(&self) -> &'static [ParamSpec] {
        &[ParamSpec {
            name: "h",
            help: "index, at least 2",
        }]
    }

    fn build(&self, params: &Params) -> Result<FamilyExpectation> {
        let h = params.get("h")?;
        let sg = Bresinsky::semigroup(h)?;
        let basis = bresinsky_basis(h)?;
        let n = 2 * h as usize;
        let identity = &basis.f[n - 1] + &basis.u[0] == basis.g1;
        let sb = basis.standard_basis();
        Ok(FamilyExpectation {
            family: self.name().into(),
            params: Params::new([("h", h)]),
            expected_mu_h: Some(4),
            expected_mu_i: Some(2 * n),
            expected_mu_star: 2 * n,
            expected_star_gens: Some(Bresinsky::star(h)),
            expected_cm: Some(true),
            ideal_gens: Some(sb.clone()),
            standard_basis: Some(sb),
            identities: vec![("f_2h_plus_u_0_is_g_1".into(), identity)],
            semigroup: Some(sg),
            ..Default::default()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::vanishes_on_curve;

    #[test]
    fn b2_data() {
        let h = Bresinsky::semigroup(2).unwrap();
        assert_eq!(h.generators(), [12, 15, 20, 23]);
        let b = bresinsky_basis(2).unwrap();
        assert_eq!(b.standard_basis().len(), 8);
        assert_eq!(Bresinsky::star(2).len(), 8);
        for p in b.standard_basis().iter().chain([&b.g1]) {
            assert!(vanishes_on_curve(p, h.generators()), "{p:?}");
        }
        assert_eq!(&b.f[3] + &b.u[0], b.g1);
    }
}
