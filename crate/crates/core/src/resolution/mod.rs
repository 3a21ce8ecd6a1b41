//! Graded minimal free resolutions and Betti numbers.

mod minimize;
mod schreyer;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{Budget, GbOptions, GroebnerBasis};
use crate::poly::{Grading, MonomialOrder, Polynomial};
use minimize::Complex;

/// Largest number of variables accepted by resolution calls.
pub const MAX_VARS: usize = 8;

/// Betti numbers of `S/I`: `total[i] = β_i`, `graded[i][d] = β_{i,d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub total: Vec<usize>,
    pub graded: BTreeMap<usize, BTreeMap<u64, usize>>,
}

impl BettiTable {
    fn from_degrees(degrees: &[Vec<u64>]) -> Self {
        let mut total = Vec::new();
        let mut graded = BTreeMap::new();
        for (i, ds) in degrees.iter().enumerate() {
            if ds.is_empty() {
                break;
            }
            total.push(ds.len());
            let mut m: BTreeMap<u64, usize> = BTreeMap::new();
            for &d in ds {
                *m.entry(d).or_default() += 1;
            }
            graded.insert(i, m);
        }
        BettiTable { total, graded }
    }

    /// `β_i`, zero beyond the projective dimension.
    pub fn beta(&self, i: usize) -> usize {
        self.total.get(i).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.total.len().saturating_sub(1)
    }

    /// `Σ (-1)^i β_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.total
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.total.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A map of graded free modules; `entries[j][i]` is the entry in row `i`,
/// column `j`.
#[derive(Clone, Debug, Serialize)]
pub struct FreeModuleMap {
    pub source_degrees: Vec<u64>,
    pub target_degrees: Vec<u64>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl FreeModuleMap {
    pub fn nrows(&self) -> usize {
        self.target_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.source_degrees.len()
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &FreeModuleMap, nvars: usize) -> Vec<Vec<Polynomial>> {
        other
            .entries
            .iter()
            .map(|col| {
                (0..self.nrows())
                    .map(|i| {
                        col.iter()
                            .enumerate()
                            .fold(Polynomial::zero(nvars), |acc, (j, b)| {
                                acc + &self.entries[j][i] * b
                            })
                    })
                    .collect()
            })
            .collect()
    }
}

/// Outcome of a resolution, with the built-in self-checks.
#[derive(Clone, Debug, Serialize)]
pub struct Resolution {
    pub betti: BettiTable,
    /// Ranks of the non-minimal Schreyer frame.
    pub frame_ranks: Vec<usize>,
    /// Consecutive maps compose to zero (before and after pruning).
    pub composition_zero: bool,
    /// No unit entry survives pruning.
    pub minimal: bool,
    #[serde(skip)]
    maps: Vec<FreeModuleMap>,
}

impl Resolution {
    /// Differentials of the minimal resolution, `maps()[k] = d_{k+1}`.
    pub fn maps(&self) -> &[FreeModuleMap] {
        &self.maps
    }
}

fn build(
    gens: &[Polynomial],
    grading: &Grading,
    budget: &Budget,
) -> Result<(Complex, Vec<usize>, bool)> {
    let n = grading.nvars();
    if n > MAX_VARS {
        return Err(Error::invalid(format!(
            "resolutions are limited to {MAX_VARS} variables, got {n}"
        )));
    }
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for g in &gens {
        if g.nvars() != n {
            return Err(Error::RingMismatch {
                left: n,
                right: g.nvars(),
            });
        }
        if g.weighted_degree(grading)?.is_none() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    let ord = if grading.is_standard() {
        MonomialOrder::degrevlex(n)
    } else {
        MonomialOrder::weighted_degrevlex(grading.weights())
    };
    let basis = if gens.is_empty() {
        Vec::new()
    } else {
        let gb = GroebnerBasis::compute_with(
            &gens,
            &ord,
            &GbOptions::weighted(*budget, grading.weights().to_vec()),
        )?;
        if gb.is_unit_ideal() {
            return Err(Error::invalid("the ideal is the whole ring"));
        }
        gb.into_elements()
    };
    let frame = schreyer::schreyer_frame(&basis, n, &ord, grading, budget)?;
    let ranks = frame.degrees.iter().map(|d| d.len()).collect();
    let mut complex = Complex::new(frame.maps, frame.degrees);
    let frame_ok = complex.composition_is_zero();
    complex.minimize();
    Ok((complex, ranks, frame_ok))
}

/// Minimal graded free resolution of `S/I`, `I = (gens)`, under `grading`.
pub fn minimal_free_resolution(
    gens: &[Polynomial],
    grading: &Grading,
    budget: &Budget,
) -> Result<Resolution> {
    let n = grading.nvars();
    let (complex, frame_ranks, frame_ok) = build(gens, grading, budget)?;
    let composition_zero = frame_ok && complex.composition_is_zero();
    let minimal = !complex.has_units();
    let degrees = complex.surviving_degrees();
    let betti = BettiTable::from_degrees(&degrees);
    if !composition_zero {
        return Err(Error::Consistency(
            "resolution maps do not compose to zero".into(),
        ));
    }
    if !minimal {
        return Err(Error::Consistency(
            "unit entry survived minimalization".into(),
        ));
    }
    if betti.total.len() > 1 && betti.euler_characteristic() != 0 {
        return Err(Error::Consistency(format!(
            "Betti numbers {betti} have nonzero alternating sum"
        )));
    }
    if betti.projective_dimension() > n {
        return Err(Error::Consistency(format!(
            "resolution {betti} longer than {n}"
        )));
    }
    let maps = (0..complex.maps.len())
        .map(|k| {
            let rows: Vec<usize> = (0..complex.degrees[k].len())
                .filter(|&i| complex.alive[k][i])
                .collect();
            let cols: Vec<usize> = (0..complex.degrees[k + 1].len())
                .filter(|&j| complex.alive[k + 1][j])
                .collect();
            FreeModuleMap {
                source_degrees: cols.iter().map(|&j| complex.degrees[k + 1][j]).collect(),
                target_degrees: rows.iter().map(|&i| complex.degrees[k][i]).collect(),
                entries: cols
                    .iter()
                    .map(|&j| {
                        rows.iter()
                            .map(|i| {
                                complex.maps[k].cols[j]
                                    .get(i)
                                    .cloned()
                                    .unwrap_or_else(|| Polynomial::zero(n))
                            })
                            .collect()
                    })
                    .collect(),
            }
        })
        .filter(|m| m.ncols() > 0)
        .collect();
    Ok(Resolution {
        betti,
        frame_ranks,
        composition_zero,
        minimal,
        maps,
    })
}

/// Betti numbers of `S/I`.
pub fn betti_numbers(
    gens: &[Polynomial],
    grading: &Grading,
    budget: &Budget,
) -> Result<BettiTable> {
    Ok(minimal_free_resolution(gens, grading, budget)?.betti)
}

/// First two maps of the minimal resolution: a minimal generating set of
/// `I` (as a one-row map) and the minimal syzygies among it.
pub fn syzygies(
    gens: &[Polynomial],
    grading: &Grading,
    budget: &Budget,
) -> Result<(FreeModuleMap, FreeModuleMap)> {
    let res = minimal_free_resolution(gens, grading, budget)?;
    let mut maps = res.maps.into_iter();
    let d1 = maps
        .next()
        .ok_or_else(|| Error::invalid("the zero ideal has no generators"))?;
    let d2 = maps.next().unwrap_or(FreeModuleMap {
        source_degrees: Vec::new(),
        target_degrees: d1.source_degrees.clone(),
        entries: Vec::new(),
    });
    Ok((d1, d2))
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Closed form for `β_i(K[H])`, `H` generated minimally by an arithmetic
/// sequence of length `r` starting at `a1` (any coprime step).
pub fn gss_betti(r: u64, a1: u64, i: u64) -> Result<u64> {
    if r < 2 {
        return Err(Error::invalid("need r >= 2"));
    }
    if i < 1 || i > r - 1 {
        return Err(Error::invalid(format!("index {i} outside 1..={}", r - 1)));
    }
    if a1 == 0 {
        return Err(Error::invalid("a1 must be positive"));
    }
    let b = (a1 - 1) % (r - 1) + 1;
    Ok(if i <= r - b {
        i * binom(r - 1, i + 1) + (r - b - i + 1) * binom(r - 1, i - 1)
    } else {
        i * binom(r - 1, i + 1) + (i + b - r) * binom(r - 1, i)
    })
}

/// `(1, β_1, ..., β_{r-1})` for the sequence `a1, a1 + d, ..., a1 + (r-1)d`,
/// after dividing out `gcd(a1, d)`.
pub fn gss_betti_sequence(a1: u64, d: u64, r: u64) -> Result<Vec<u64>> {
    let g = num_integer::gcd(a1, d).max(1);
    let a1 = a1 / g;
    let mut out = vec![1];
    for i in 1..r {
        out.push(gss_betti(r, a1, i)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::semigroup::NumericalSemigroup;
    use crate::toric::{h_grading, toric_ideal};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn koszul() {
        let r = Ring::new(&["x", "y"]);
        let gens = r.parse_list(["x", "y"]).unwrap();
        let (d1, d2) = syzygies(&gens, &Grading::standard(2), &b()).unwrap();
        assert_eq!(d1.ncols(), 2);
        assert_eq!(d2.ncols(), 1);
        let comp = d1.compose(&d2, 2);
        assert!(comp.iter().flatten().all(|p| p.is_zero()));
        let res = minimal_free_resolution(&gens, &Grading::standard(2), &b()).unwrap();
        assert_eq!(res.betti.total, vec![1, 2, 1]);
        assert_eq!(res.betti.graded[&2], BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn frobenius_cone_syzygies() {
        let r = Ring::xyz();
        let gens = r.parse_list(["y*z", "x*z", "z^2", "y^4"]).unwrap();
        let (_, d2) = syzygies(&gens, &Grading::standard(3), &b()).unwrap();
        assert_eq!(d2.ncols(), 4);
        let res = minimal_free_resolution(&gens, &Grading::standard(3), &b()).unwrap();
        assert_eq!(res.betti.total, vec![1, 4, 4, 1]);
    }

    #[test]
    fn hypersurface() {
        let r = Ring::new(&["x", "y"]);
        let g = Grading::new(vec![2, 3]).unwrap();
        let res = minimal_free_resolution(&r.parse_list(["x^3 - y^2"]).unwrap(), &g, &b()).unwrap();
        assert_eq!(res.betti.total, vec![1, 1]);
        assert_eq!(res.betti.graded[&1], BTreeMap::from([(6, 1)]));
    }

    #[test]
    fn arithmetic_sequences() {
        for (gens, want) in [
            (vec![4u64, 5, 6, 7], vec![1, 6, 8, 3]),
            (vec![5, 6, 7, 8], vec![1, 5, 5, 1]),
        ] {
            let h = NumericalSemigroup::from_generators(&gens).unwrap();
            let i = toric_ideal(&h).unwrap();
            let res = minimal_free_resolution(&i, &h_grading(&h), &b()).unwrap();
            assert_eq!(res.betti.total, want, "{h}");
            assert!(res.composition_zero && res.minimal);
        }
    }

    #[test]
    fn gss_values() {
        assert_eq!(
            (1..4)
                .map(|i| gss_betti(4, 4, i).unwrap())
                .collect::<Vec<_>>(),
            vec![6, 8, 3]
        );
        assert_eq!(
            (1..4)
                .map(|i| gss_betti(4, 5, i).unwrap())
                .collect::<Vec<_>>(),
            vec![5, 5, 1]
        );
        assert!(gss_betti(4, 5, 0).is_err());
        assert!(gss_betti(4, 5, 4).is_err());
        for r in 3..8u64 {
            for a1 in r + 1..r + 20 {
                for i in 1..r {
                    let v = gss_betti(r, a1, i).unwrap();
                    assert!(
                        i * binom(r - 1, i + 1) < v && v <= i * binom(r, i + 1),
                        "r={r} a1={a1} i={i}"
                    );
                }
            }
        }
        assert_eq!(gss_betti_sequence(10, 2, 4).unwrap(), vec![1, 5, 5, 1]);
    }

    #[test]
    fn betti_json() {
        let t = BettiTable::from_degrees(&[vec![0], vec![2, 2], vec![4]]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"total":[1,2,1],"graded":{"0":{"0":1},"1":{"2":2},"2":{"4":1}}}"#
        );
        let back: BettiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn variable_cap() {
        let g = Grading::standard(9);
        assert!(minimal_free_resolution(&[Polynomial::var(9, 0)], &g, &b()).is_err());
    }
}
