//! Initial ideals `I*`, standard bases and the Cohen–Macaulay test for
//! tangent cones of monomial curves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    hilbert_function, ideal_equal, ideal_quotient, membership, minimal_generators,
    saturate_by_variable, Budget, GbOptions, GroebnerBasis,
};
use crate::poly::{Grading, Monomial, MonomialOrder, Polynomial, Ring};
use crate::semigroup::NumericalSemigroup;
use crate::toric::toric_ideal_with;

/// Settings for the standard-basis pipeline.
#[derive(Clone, Debug, Default)]
pub struct TangentConeOptions {
    pub budget: Budget,
    /// Use pure lex with `s` greatest instead of `s` followed by degrevlex.
    pub strict_lex: bool,
    /// Lower bound on the degree range of the Hilbert cross-check.
    pub dmax: usize,
}

impl TangentConeOptions {
    pub fn with_budget(budget: Budget) -> Self {
        TangentConeOptions {
            budget,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StandardBasisResult {
    /// Elements of `I` whose initial forms generate `I*`.
    pub standard_basis: Vec<Polynomial>,
    /// Initial forms of `standard_basis`.
    pub initial_ideal_gens: Vec<Polynomial>,
    pub mu_star: usize,
    /// A minimal homogeneous generating set of `I*`.
    pub minimal_star_gens: Vec<Polynomial>,
    /// Whether saturating the homogenized ideal by `s` enlarged it.
    pub saturation_changed: bool,
}

/// Order on `K[x1..xn, s]` (s has index `n`): `s`-degree first, then
/// degrevlex (or lex) on the x-variables.
fn s_first_order(n: usize, strict_lex: bool) -> MonomialOrder {
    let xs: Vec<usize> = (0..n).collect();
    if strict_lex {
        let mut vars = vec![n];
        vars.extend(xs);
        return MonomialOrder::Lex { vars };
    }
    MonomialOrder::Block {
        front: Box::new(MonomialOrder::Lex { vars: vec![n] }),
        back: Box::new(MonomialOrder::DegRevLex { vars: xs }),
    }
}

/// Standard basis of `I` by homogenization: homogenize with `s`, saturate
/// by `s`, take a Gröbner basis with `s` greatest, dehomogenize.
pub fn standard_basis(
    gens: &[Polynomial],
    opts: &TangentConeOptions,
) -> Result<StandardBasisResult> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    if gens.is_empty() {
        return Ok(StandardBasisResult {
            standard_basis: Vec::new(),
            initial_ideal_gens: Vec::new(),
            mu_star: 0,
            minimal_star_gens: Vec::new(),
            saturation_changed: false,
        });
    }
    for g in &gens {
        if g.nvars() != n {
            return Err(Error::RingMismatch {
                left: n,
                right: g.nvars(),
            });
        }
        if g.terms().iter().any(|t| t.mono.is_one()) {
            return Err(Error::invalid(format!("{g} is not in the maximal ideal")));
        }
    }
    let s = n;
    let homog: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.extend_vars(1).homogenize(s))
        .collect::<Result<_>>()?;
    let sat = saturate_by_variable(&homog, s, &opts.budget)?;
    let gb = GroebnerBasis::compute_with(
        &sat.generators,
        &s_first_order(n, opts.strict_lex),
        &GbOptions::with_budget(opts.budget),
    )?;
    let keep: Vec<usize> = (0..n).collect();
    let standard_basis: Vec<Polynomial> = gb
        .elements()
        .iter()
        .map(|g| g.dehomogenize(s).restrict_vars(&keep))
        .collect::<Result<_>>()?;
    let initial_ideal_gens: Vec<Polynomial> = standard_basis
        .iter()
        .map(|f| f.initial_form().map(|(f, _)| f))
        .collect::<Result<_>>()?;
    let minimal_star_gens =
        minimal_generators(&initial_ideal_gens, &Grading::standard(n), &opts.budget)?;
    Ok(StandardBasisResult {
        standard_basis,
        initial_ideal_gens,
        mu_star: minimal_star_gens.len(),
        minimal_star_gens,
        saturation_changed: sat.changed,
    })
}

/// Generators of `I*` (not necessarily minimal).
pub fn initial_ideal(gens: &[Polynomial], opts: &TangentConeOptions) -> Result<Vec<Polynomial>> {
    Ok(standard_basis(gens, opts)?.minimal_star_gens)
}

/// Do the initial forms of `cands` generate `I*`? Errors when some
/// candidate is not in `I`.
pub fn is_standard_basis(
    cands: &[Polynomial],
    gens: &[Polynomial],
    budget: &Budget,
) -> Result<bool> {
    let n = gens.iter().map(|g| g.nvars()).max().unwrap_or(0);
    let ord = MonomialOrder::degrevlex(n);
    for c in cands {
        if !membership(c, gens, &ord, budget)? {
            return Err(Error::invalid(format!("{c} is not in the ideal")));
        }
    }
    let star: Vec<Polynomial> = cands
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.initial_form().map(|(f, _)| f))
        .collect::<Result<_>>()?;
    let target = initial_ideal(gens, &TangentConeOptions::with_budget(*budget))?;
    ideal_equal(&star, &target, budget)
}

/// Is `x1` a nonzerodivisor on `S/I*`, i.e. `(I* : x1) = I*`?
pub fn is_x1_regular(star: &[Polynomial], budget: &Budget) -> Result<bool> {
    let n = star.iter().map(|g| g.nvars()).max().unwrap_or(0);
    if n == 0 {
        return Ok(true);
    }
    let quot = ideal_quotient(star, &Polynomial::var(n, 0), budget)?;
    ideal_equal(&quot, star, budget)
}

/// Independent test of the same property: `x1` is regular on `S/I*` iff no
/// minimal generator of the revlex initial ideal (with `x1` last) involves
/// `x1`.
pub fn is_x1_regular_revlex(star: &[Polynomial], budget: &Budget) -> Result<bool> {
    let n = star.iter().map(|g| g.nvars()).max().unwrap_or(0);
    if n == 0 {
        return Ok(true);
    }
    let mut vars: Vec<usize> = (1..n).collect();
    vars.push(0);
    let gb = GroebnerBasis::compute_with(
        star,
        &MonomialOrder::DegRevLex { vars },
        &GbOptions::with_budget(*budget),
    )?;
    Ok(gb.leading_monomials().iter().all(|m| m.exp(0) == 0))
}

/// Cohen–Macaulayness of the tangent cone of `K[H]`.
pub fn tangent_cone_is_cm(h: &NumericalSemigroup, budget: &Budget) -> Result<bool> {
    if h.mu() < 2 {
        return Err(Error::invalid("CM test needs at least two generators"));
    }
    let i = toric_ideal_with(h, budget)?;
    let star = initial_ideal(&i, &TangentConeOptions::with_budget(*budget))?;
    is_x1_regular(&star, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MuPair {
    pub mu_i: usize,
    pub mu_i_star: usize,
    /// Whether a resolution is within the variable cap.
    pub betti_available: bool,
}

pub fn mu_and_mu_star(h: &NumericalSemigroup, budget: &Budget) -> Result<MuPair> {
    let i = toric_ideal_with(h, budget)?;
    let star = initial_ideal(&i, &TangentConeOptions::with_budget(*budget))?;
    Ok(MuPair {
        mu_i: i.len(),
        mu_i_star: star.len(),
        betti_available: h.mu() <= crate::resolution::MAX_VARS,
    })
}

/// Everything computed for one semigroup.
#[derive(Clone, Debug)]
pub struct TangentCone {
    pub semigroup: NumericalSemigroup,
    pub ideal: Vec<Polynomial>,
    pub basis: StandardBasisResult,
    pub cm: bool,
    /// Hilbert function of `S/I*` in degrees `0..=dmax`, equal to the
    /// factorization-length oracle.
    pub hilbert: Vec<u64>,
}

impl TangentCone {
    pub fn mu_i(&self) -> usize {
        self.ideal.len()
    }

    pub fn mu_star(&self) -> usize {
        self.basis.mu_star
    }

    pub fn star(&self) -> &[Polynomial] {
        &self.basis.minimal_star_gens
    }

    pub fn record(&self) -> TangentConeRecord {
        let ring = Ring::short(self.semigroup.mu());
        let fmt = |v: &[Polynomial]| v.iter().map(|p| ring.format(p)).collect();
        TangentConeRecord {
            semigroup: self.semigroup.generators().to_vec(),
            mu_i: self.mu_i(),
            mu_i_star: self.mu_star(),
            cm: self.cm,
            i_gens: fmt(&self.ideal),
            i_star_gens: fmt(self.star()),
            standard_basis: fmt(&self.basis.standard_basis),
            saturation_changed: self.basis.saturation_changed,
            hilbert: self.hilbert.clone(),
        }
    }
}

/// JSON form of a [`TangentCone`].
#[derive(Clone, Debug, Serialize)]
pub struct TangentConeRecord {
    pub semigroup: Vec<u64>,
    #[serde(rename = "mu_I")]
    pub mu_i: usize,
    #[serde(rename = "mu_I_star")]
    pub mu_i_star: usize,
    pub cm: bool,
    #[serde(rename = "I_gens")]
    pub i_gens: Vec<String>,
    #[serde(rename = "I_star_gens")]
    pub i_star_gens: Vec<String>,
    pub standard_basis: Vec<String>,
    pub saturation_changed: bool,
    pub hilbert: Vec<u64>,
}

/// Runs the whole pipeline on `H`, including the Hilbert cross-check
/// against the factorization-length oracle.
pub fn tangent_cone(h: &NumericalSemigroup, opts: &TangentConeOptions) -> Result<TangentCone> {
    let ideal = toric_ideal_with(h, &opts.budget)?;
    let n = h.mu();
    let basis = if ideal.is_empty() {
        StandardBasisResult {
            standard_basis: Vec::new(),
            initial_ideal_gens: Vec::new(),
            mu_star: 0,
            minimal_star_gens: Vec::new(),
            saturation_changed: false,
        }
    } else {
        standard_basis(&ideal, opts)?
    };
    let star = &basis.minimal_star_gens;
    let maxdeg = star
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(1) as usize;
    let dmax = opts.dmax.max(2 * maxdeg);
    let hilbert = hilbert_function(n, star, dmax)?;
    let oracle = h.normalized().tangent_hilbert_oracle(dmax)?;
    if hilbert != oracle {
        return Err(Error::Consistency(format!(
            "Hilbert function of S/I* for {h} is {hilbert:?}, oracle gives {oracle:?}"
        )));
    }
    let cm = n < 2 || is_x1_regular(star, &opts.budget)?;
    Ok(TangentCone {
        semigroup: h.clone(),
        ideal,
        basis,
        cm,
        hilbert,
    })
}

/// Leading monomials of `I*` under degrevlex (used by tests and reports).
pub fn star_leading_monomials(star: &[Polynomial], budget: &Budget) -> Result<Vec<Monomial>> {
    let n = star.iter().map(|g| g.nvars()).max().unwrap_or(0);
    Ok(GroebnerBasis::compute_with(
        star,
        &MonomialOrder::degrevlex(n),
        &GbOptions::with_budget(*budget),
    )?
    .leading_monomials())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::toric_ideal;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn frobenius_example() {
        let r = Ring::xyz();
        let tc = tangent_cone(&sg(&[4, 5, 11]), &TangentConeOptions::default()).unwrap();
        assert_eq!(tc.mu_i(), 3);
        assert_eq!(tc.mu_star(), 4);
        assert!(ideal_equal(
            tc.star(),
            &r.parse_list(["y*z", "x*z", "z^2", "y^4"]).unwrap(),
            &b()
        )
        .unwrap());
        assert!(!tc.basis.saturation_changed);
        assert_eq!(&tc.hilbert[..7], &[1, 3, 3, 4, 4, 4, 4]);
    }

    #[test]
    fn shibuta_seven() {
        let r = Ring::xyz();
        let h = sg(&[7, 8, 17]);
        let tc = tangent_cone(&h, &TangentConeOptions::default()).unwrap();
        assert_eq!(tc.mu_star(), 5);
        let expected = r
            .parse_list(["x*z", "z^3", "y*z^2", "y^4*z", "y^7"])
            .unwrap();
        assert!(ideal_equal(tc.star(), &expected, &b()).unwrap());
        assert!(!tc.cm);
        // z is in (I* : x) but not in I*
        let q = ideal_quotient(tc.star(), &r.parse("x").unwrap(), &b()).unwrap();
        let z = r.parse("z").unwrap();
        assert!(membership(&z, &q, &MonomialOrder::degrevlex(3), &b()).unwrap());
        assert!(!membership(&z, tc.star(), &MonomialOrder::degrevlex(3), &b()).unwrap());
    }

    #[test]
    fn strict_lex_agrees() {
        for g in [[4u64, 5, 11], [7, 8, 17], [3, 5, 7]] {
            let i = toric_ideal(&sg(&g)).unwrap();
            let a = standard_basis(&i, &TangentConeOptions::default()).unwrap();
            let lex = TangentConeOptions {
                strict_lex: true,
                ..Default::default()
            };
            let c = standard_basis(&i, &lex).unwrap();
            assert_eq!(a.mu_star, c.mu_star);
            assert!(ideal_equal(&a.minimal_star_gens, &c.minimal_star_gens, &b()).unwrap());
        }
    }

    #[test]
    fn homogeneous_input_is_its_own_cone() {
        let r = Ring::new(&["x", "y", "z", "w"]);
        let cubic = r
            .parse_list(["x*z - y^2", "y*w - z^2", "x*w - y*z"])
            .unwrap();
        let res = standard_basis(&cubic, &TangentConeOptions::default()).unwrap();
        assert_eq!(res.mu_star, 3);
        assert!(ideal_equal(&res.minimal_star_gens, &cubic, &b()).unwrap());
    }

    #[test]
    fn standard_basis_checks() {
        let r = Ring::xyz();
        let i = toric_ideal(&sg(&[4, 5, 11])).unwrap();
        let single = r.parse_list(["x^4 - y*z"]).unwrap();
        assert!(!is_standard_basis(&single, &i, &b()).unwrap());
        let full = r
            .parse_list(["x^4 - y*z", "y^3 - x*z", "z^2 - x^3*y^2", "x^5 - y^4"])
            .unwrap();
        assert!(is_standard_basis(&full, &i, &b()).unwrap());
        let outside = r.parse_list(["x - y"]).unwrap();
        assert!(is_standard_basis(&outside, &i, &b()).is_err());
    }

    #[test]
    fn mu_pairs() {
        assert_eq!(
            mu_and_mu_star(&sg(&[4, 5, 11]), &b()).unwrap(),
            MuPair {
                mu_i: 3,
                mu_i_star: 4,
                betti_available: true
            }
        );
        let m = mu_and_mu_star(&sg(&[2, 3]), &b()).unwrap();
        assert_eq!((m.mu_i, m.mu_i_star), (1, 1));
        let m = mu_and_mu_star(&sg(&[3, 4, 5]), &b()).unwrap();
        assert_eq!((m.mu_i, m.mu_i_star), (3, 3));
    }

    #[test]
    fn cm_criteria_agree() {
        for g in [
            vec![4u64, 5, 11],
            vec![7, 8, 17],
            vec![3, 5, 7],
            vec![12, 15, 20, 23],
            vec![5, 6, 9],
            vec![6, 7, 15],
        ] {
            let h = sg(&g);
            let tc = tangent_cone(&h, &TangentConeOptions::default()).unwrap();
            assert_eq!(tc.cm, is_x1_regular_revlex(tc.star(), &b()).unwrap(), "{h}");
            if tc.cm {
                // Artinian reduction has length a_1
                let mut red = tc.star().to_vec();
                red.push(Polynomial::var(h.mu(), 0));
                let hf = hilbert_function(h.mu(), &red, 40).unwrap();
                assert_eq!(*hf.last().unwrap(), 0);
                assert_eq!(hf.iter().sum::<u64>(), h.multiplicity());
            }
        }
        assert!(tangent_cone_is_cm(&sg(&[12, 15, 20, 23]), &b()).unwrap());
    }

    #[test]
    fn record_json() {
        let tc = tangent_cone(&sg(&[4, 5, 11]), &TangentConeOptions::default()).unwrap();
        let v = serde_json::to_value(tc.record()).unwrap();
        assert_eq!(v["mu_I_star"], 4);
        assert_eq!(v["semigroup"], serde_json::json!([4, 5, 11]));
        assert_eq!(v["I_star_gens"].as_array().unwrap().len(), 4);
    }
}
