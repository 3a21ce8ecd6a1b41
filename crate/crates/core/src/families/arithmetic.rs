use num_integer::Integer;

use super::{binom, Family, FamilyExpectation, ParamSpec, Params};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::resolution::gss_betti_sequence;
use crate::semigroup::NumericalSemigroup;

/// `<a1, a1+d, ..., a1+(r-1)d>` with the explicit minimal generators of its
/// toric ideal.
pub struct Arithmetic;

fn check_sequence(a1: u64, d: u64, r: u64) -> Result<NumericalSemigroup> {
    if r < 3 || d == 0 || a1 == 0 {
        return Err(Error::invalid(format!(
            "arithmetic needs r >= 3, d >= 1, a1 >= 1, got ({a1}, {d}, {r})"
        )));
    }
    if a1.gcd(&d) != 1 {
        return Err(Error::invalid(format!("gcd({a1}, {d}) != 1")));
    }
    let seq: Vec<u64> = (0..r).map(|i| a1 + i * d).collect();
    let h = NumericalSemigroup::from_generators(&seq)?;
    if h.mu() as u64 != r {
        return Err(Error::invalid(format!(
            "{seq:?} is not a minimal generating sequence"
        )));
    }
    Ok(h)
}

/// `(a, b)` with `a1 = a(r-1) + b`, `1 <= b <= r-1`.
fn split(a1: u64, r: u64) -> (u64, u64) {
    let b = (a1 - 1) % (r - 1) + 1;
    ((a1 - b) / (r - 1), b)
}

/// `xi_ij = x_i x_{j+1} - x_{i+1} x_j` for `1 <= i < j <= r-1` and
/// `Delta_i = x_r^a x_{b+i} - x_1^{a+d} x_i` for `1 <= i <= r-b` (1-based).
pub fn patil_generators(a1: u64, d: u64, r: u64) -> Result<Vec<Polynomial>> {
    check_sequence(a1, d, r)?;
    let n = r as usize;
    let (a, b) = split(a1, r);
    let e = |pairs: &[(usize, u32)]| {
        let mut v = vec![0u32; n];
        for &(i, k) in pairs {
            v[i - 1] += k;
        }
        v
    };
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            out.push(Polynomial::binomial(
                &e(&[(i, 1), (j + 1, 1)]),
                &e(&[(i + 1, 1), (j, 1)]),
            ));
        }
    }
    for i in 1..=(r - b) as usize {
        let plus = e(&[(n, a as u32), (b as usize + i, 1)]);
        let minus = e(&[(1, (a + d) as u32), (i, 1)]);
        out.push(Polynomial::binomial(&plus, &minus));
    }
    Ok(out)
}

/// `<kw+1, kw+2, ..., (k+1)w+1>`.
pub fn interval_equality_family(w: u64, k: u64) -> Result<NumericalSemigroup> {
    if w == 0 || k == 0 {
        return Err(Error::invalid("w and k must be positive"));
    }
    let gens: Vec<u64> = (k * w + 1..=(k + 1) * w + 1).collect();
    NumericalSemigroup::from_generators(&gens)
}

/// Is `h` exactly `<kw+1, ..., (k+1)w+1>` for some `w, k >= 1`?
pub fn is_interval_equality_family(h: &NumericalSemigroup) -> bool {
    let w = h.width();
    h.mu() >= 2 && h.is_interval() && h.multiplicity() > w && h.multiplicity() % w == 1 % w
}

fn pad(v: &[u64], n: usize) -> Vec<u64> {
    let mut v = v.to_vec();
    v.resize(n.max(v.len()), 0);
    v
}

impl Family for Arithmetic {
    fn name(&self) -> &'static str {
        "arithmetic"
    }

    fn description(&self) -> &'static str {
        "<a1, a1+d, ..., a1+(r-1)d>, gcd(a1, d) = 1, minimal"
    }

    fn params(&self) -> &'static [ParamSpec] {
        &[
            ParamSpec {
                name: "a1",
                help: "first term",
            },
            ParamSpec {
                name: "d",
                help: "common difference, coprime to a1",
            },
            ParamSpec {
                name: "r",
                help: "number of terms, at least 3",
            },
        ]
    }

    fn build(&self, params: &Params) -> Result<FamilyExpectation> {
        let (a1, d, r) = (params.get("a1")?, params.get("d")?, params.get("r")?);
        let h = check_sequence(a1, d, r)?;
        let gens = patil_generators(a1, d, r)?;
        let (_, b) = split(a1, r);
        let betti = gss_betti_sequence(a1, d, r)?;
        let mu = binom(r - 1, 2) + r - b;

        // comparison with the interval completion, an arithmetic sequence with d = 1
        let tilde = h.interval_completion();
        let tb = gss_betti_sequence(tilde.multiplicity(), 1, tilde.mu() as u64)?;
        let n = betti.len().max(tb.len());
        let (hb, tb) = (pad(&betti, n), pad(&tb, n));
        let bounded = hb.iter().zip(&tb).all(|(x, y)| x <= y);
        let tilde_equal = (hb == tb) == (d == 1 || a1 == r);

        let w = h.width();
        let width_bound = (1..r).all(|i| betti[i as usize] <= i * binom(w + 1, i + 1));
        let width_equal = (1..r).any(|i| betti[i as usize] == i * binom(w + 1, i + 1));
        let width_class = width_equal == is_interval_equality_family(&h);

        Ok(FamilyExpectation {
            family: self.name().into(),
            params: Params::new([("a1", a1), ("d", d), ("r", r)]),
            expected_mu_h: Some(r as usize),
            expected_mu_i: Some(mu as usize),
            expected_mu_star: mu as usize,
            expected_betti: Some(betti.iter().map(|&x| x as usize).collect()),
            ideal_gens: Some(gens.clone()),
            identities: vec![
                (
                    "patil_count_is_gss_beta_1".into(),
                    gens.len() as u64 == betti[1] && betti[1] == mu,
                ),
                ("betti_below_interval_completion".into(), bounded),
                ("interval_completion_equality_class".into(), tilde_equal),
                ("betti_width_bound".into(), width_bound),
                ("betti_width_equality_class".into(), width_class),
            ],
            semigroup: Some(h),
            ..Default::default()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::toric::vanishes_on_curve;

    #[test]
    fn patil_examples() {
        let ring = Ring::standard(4);
        let expected = ring
            .parse_list([
                "x1*x3 - x2^2",
                "x1*x4 - x2*x3",
                "x2*x4 - x3^2",
                "x3*x4 - x1^3",
                "x4^2 - x1^2*x2",
            ])
            .unwrap();
        assert_eq!(patil_generators(5, 1, 4).unwrap(), expected);
        assert_eq!(patil_generators(4, 1, 4).unwrap().len(), 6);
        for (a1, d, r) in [(5, 1, 4), (7, 2, 3), (7, 3, 5), (11, 2, 4)] {
            let seq: Vec<u64> = (0..r).map(|i| a1 + i * d).collect();
            for p in patil_generators(a1, d, r).unwrap() {
                assert!(vanishes_on_curve(&p, &seq));
            }
        }
        assert!(patil_generators(4, 2, 3).is_err());
        assert!(patil_generators(3, 1, 5).is_err());
    }

    #[test]
    fn equality_family() {
        assert_eq!(
            interval_equality_family(2, 1).unwrap().generators(),
            [3, 4, 5]
        );
        assert_eq!(
            interval_equality_family(3, 1).unwrap().generators(),
            [4, 5, 6, 7]
        );
        assert!(is_interval_equality_family(
            &interval_equality_family(3, 2).unwrap()
        ));
        let no = |g: &[u64]| {
            !is_interval_equality_family(&NumericalSemigroup::from_generators(g).unwrap())
        };
        assert!(no(&[4, 5, 11]));
        assert!(no(&[5, 6, 7, 8]));
        assert!(no(&[3, 5, 7]));
    }

    #[test]
    fn identities_hold_on_a_grid() {
        for r in 3..=6u64 {
            for a1 in r..r + 10 {
                for d in 1..=4u64 {
                    let p = Params::new([("a1", a1), ("d", d), ("r", r)]);
                    if let Ok(exp) = Arithmetic.build(&p) {
                        for (name, ok) in &exp.identities {
                            assert!(ok, "{name} fails at ({a1}, {d}, {r})");
                        }
                    }
                }
            }
        }
    }
}
