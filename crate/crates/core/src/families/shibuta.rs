use super::{mono, Family, FamilyExpectation, ParamSpec, Params};
use crate::error::{Error, Result};
use crate::poly::{Grading, MonomialOrder, Polynomial};
use crate::semigroup::NumericalSemigroup;

/// `H_a = <a, a+1, 2a+3>` in variables `x, y, z`, for `a > 3`.
pub struct Shibuta;

/// Generators and the recursive standard-basis elements of `I_{H_a}`.
#[derive(Clone, Debug)]
pub struct ShibutaBasis {
    pub k: u32,
    /// `a mod 3`.
    pub residue: u32,
    /// `xz - y^3`.
    pub g: Polynomial,
    /// `z^{k+1} - ...`, absent when `a = 3k`.
    pub p: Option<Polynomial>,
    /// `f_0..f_k` built by the recursion `f_i = x f_{i-1} - y^{3(i-1)+e} z^{k-i} g`.
    pub f: Vec<Polynomial>,
    /// The closed forms `y^{3i+e} z^{k-i} - x^{...}` of the same elements.
    pub f_closed: Vec<Polynomial>,
    /// `xz f_k - y^{3k+e} g`, homogeneous.
    pub f_top: Polynomial,
}

impl ShibutaBasis {
    pub fn ideal_gens(&self) -> Vec<Polynomial> {
        let mut out = vec![self.f[0].clone(), self.g.clone()];
        out.extend(self.p.clone());
        out
    }

    pub fn standard_basis(&self) -> Vec<Polynomial> {
        let mut out = vec![self.g.clone()];
        out.extend(self.p.clone());
        out.extend(self.f.iter().cloned());
        out
    }

    /// Homogenizations (with `s` as variable 3) of the standard basis plus
    /// `f_top`: a Gröbner basis for lex with `s > x > y > z`.
    pub fn homogenized(&self) -> Result<Vec<Polynomial>> {
        let mut out = self
            .standard_basis()
            .iter()
            .map(|q| q.extend_vars(1).homogenize(3))
            .collect::<Result<Vec<_>>>()?;
        out.push(self.f_top.extend_vars(1));
        Ok(out)
    }

    /// Lex with `s > x > y > z`.
    pub fn homogenized_order() -> MonomialOrder {
        MonomialOrder::Lex {
            vars: vec![3, 0, 1, 2],
        }
    }

    /// The closed-form minimal generators of `I*`.
    pub fn star(&self) -> Vec<Polynomial> {
        let (k, e) = (self.k, self.residue);
        let mut out = vec![mono(&[1, 0, 1])];
        let zk = if self.residue == 0 { k } else { k + 1 };
        out.push(mono(&[0, 0, zk]));
        let start = if self.residue == 0 { 1 } else { 0 };
        out.extend((start..=k).map(|i| mono(&[0, 3 * i + e, k - i])));
        out
    }
}

pub fn shibuta_basis(a: u64) -> Result<ShibutaBasis> {
    if a <= 3 {
        return Err(Error::invalid(format!("shibuta needs a > 3, got {a}")));
    }
    let residue = (a % 3) as u32;
    let k = (a / 3) as u32;
    // y-exponent of f_0
    let e = residue;
    let g = Polynomial::binomial(&[1, 0, 1], &[0, 3, 0]);
    let (f0, p) = match residue {
        1 => (
            Polynomial::binomial(&[0, 1, k], &[2 * k + 2, 0, 0]),
            Some(Polynomial::binomial(&[0, 0, k + 1], &[2 * k + 1, 2, 0])),
        ),
        2 => (
            Polynomial::binomial(&[0, 2, k], &[2 * k + 3, 0, 0]),
            Some(Polynomial::binomial(&[0, 0, k + 1], &[2 * k + 2, 1, 0])),
        ),
        _ => (Polynomial::binomial(&[0, 0, k], &[2 * k + 1, 0, 0]), None),
    };
    let x = mono(&[1, 0, 0]);
    let mut f = vec![f0];
    for i in 1..=k {
        let m = mono(&[0, 3 * (i - 1) + e, k - i]);
        let next = &(&x * &f[i as usize - 1]) - &(&m * &g);
        f.push(next);
    }
    let f_closed = (0..=k)
        .map(|i| Polynomial::binomial(&[0, 3 * i + e, k - i], &[2 * k + i + 1 + e, 0, 0]))
        .collect();
    let f_top = &(&mono(&[1, 0, 1]) * &f[k as usize]) - &(&mono(&[0, 3 * k + e, 0]) * &g);
    Ok(ShibutaBasis {
        k,
        residue,
        g,
        p,
        f,
        f_closed,
        f_top,
    })
}

impl Shibuta {
    pub fn semigroup(a: u64) -> Result<NumericalSemigroup> {
        if a <= 3 {
            return Err(Error::invalid(format!("shibuta needs a > 3, got {a}")));
        }
        NumericalSemigroup::from_generators(&[a, a + 1, 2 * a + 3])
    }
}

impl Family for Shibuta {
    fn name(&self) -> &'static str {
        "shibuta"
    }

    fn description(&self) -> &'static str {
        "H_a = <a, a+1, 2a+3>, a > 3, with mu(I*) = floor((a-1)/3) + 3"
    }

    fn params(&self) -> &'static [ParamSpec] {
        &[ParamSpec {
            name: "a",
            help: "multiplicity, > 3",
        }]
    }

    fn build(&self, params: &Params) -> Result<FamilyExpectation> {
        let a = params.get("a")?;
        let h = Shibuta::semigroup(a)?;
        let b = shibuta_basis(a)?;
        let mut identities: Vec<(String, bool)> =
            b.f.iter()
                .zip(&b.f_closed)
                .enumerate()
                .map(|(i, (r, c))| (format!("recursion_f_{i}"), r == c))
                .collect();
        identities.push((
            "f_top_homogeneous".into(),
            b.f_top.is_homogeneous(&Grading::standard(3)),
        ));
        Ok(FamilyExpectation {
            family: self.name().into(),
            params: Params::new([("a", a)]),
            expected_mu_h: Some(3),
            expected_mu_i: Some(if b.residue == 0 { 2 } else { 3 }),
            expected_mu_star: ((a - 1) / 3 + 3) as usize,
            expected_star_gens: Some(b.star()),
            expected_cm: Some(false),
            ideal_gens: Some(b.ideal_gens()),
            standard_basis: Some(b.standard_basis()),
            identities,
            semigroup: Some(h),
            ..Default::default()
        })
    }
}
