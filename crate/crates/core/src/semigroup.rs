//! Numerical semigroups given by a finite set of generators.
//!
//! The gcd of the generators is not required to be 1. Operations that only
//! make sense for gcd-1 semigroups (Frobenius number, Apéry sets, symmetry,
//! the tangent-cone Hilbert oracle) return [`Error::GcdNotOne`] otherwise.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup stored through its minimal system of generators.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "SemigroupRepr", into = "SemigroupRepr")]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gcd: u64,
    /// Apéry set of the gcd-normalized semigroup with respect to its
    /// multiplicity, built on first use.
    apery: OnceLock<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct SemigroupRepr {
    generators: Vec<u64>,
}

impl TryFrom<SemigroupRepr> for NumericalSemigroup {
    type Error = Error;

    fn try_from(r: SemigroupRepr) -> Result<Self> {
        NumericalSemigroup::from_generators(&r.generators)
    }
}

impl From<NumericalSemigroup> for SemigroupRepr {
    fn from(h: NumericalSemigroup) -> Self {
        SemigroupRepr {
            generators: h.generators,
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

/// Number of minimal generators, width and multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub mu: usize,
    pub width: u64,
    pub multiplicity: u64,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing to the minimal system.
    pub fn from_generators(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::invalid("semigroup needs at least one generator"));
        }
        if raw.contains(&0) {
            return Err(Error::invalid("generators must be positive"));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let top = *sorted.last().unwrap() as usize;

        // reachable[n]: n is a combination of the generators kept so far
        let mut reachable = vec![false; top + 1];
        reachable[0] = true;
        let mut generators = Vec::new();
        for &g in &sorted {
            if reachable[g as usize] {
                continue;
            }
            generators.push(g);
            let g = g as usize;
            for n in g..=top {
                if reachable[n - g] {
                    reachable[n] = true;
                }
            }
        }
        let gcd = generators.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        Ok(NumericalSemigroup {
            generators,
            gcd,
            apery: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn width(&self) -> u64 {
        self.generators[self.generators.len() - 1] - self.generators[0]
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            mu: self.mu(),
            width: self.width(),
            multiplicity: self.multiplicity(),
        }
    }

    /// The isomorphic semigroup obtained by dividing every generator by the gcd.
    pub fn normalized(&self) -> NumericalSemigroup {
        if self.gcd == 1 {
            return self.clone();
        }
        let gens: Vec<u64> = self.generators.iter().map(|g| g / self.gcd).collect();
        NumericalSemigroup::from_generators(&gens).expect("normalized generators are positive")
    }

    fn normalized_apery(&self) -> &[u64] {
        self.apery.get_or_init(|| {
            let gens: Vec<u64> = self.generators.iter().map(|g| g / self.gcd).collect();
            apery_by_shortest_paths(&gens, gens[0])
        })
    }

    /// Membership test.
    pub fn contains(&self, n: u64) -> bool {
        if !n.is_multiple_of(self.gcd) {
            return false;
        }
        let m = n / self.gcd;
        let apery = self.normalized_apery();
        let modulus = apery.len() as u64;
        m >= apery[(m % modulus) as usize]
    }

    fn require_gcd_one(&self) -> Result<()> {
        if self.gcd != 1 {
            return Err(Error::GcdNotOne(self.gcd));
        }
        Ok(())
    }

    /// Least element of the semigroup in every residue class modulo `m`,
    /// indexed by residue.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        self.require_gcd_one()?;
        if m == 0 || !self.contains(m) {
            return Err(Error::NotInSemigroup(m));
        }
        if m == self.multiplicity() {
            return Ok(self.normalized_apery().to_vec());
        }
        Ok(apery_by_shortest_paths(&self.generators, m))
    }

    /// Largest integer outside the semigroup; `-1` for the semigroup `<1>`.
    pub fn frobenius_number(&self) -> Result<i64> {
        self.require_gcd_one()?;
        let apery = self.normalized_apery();
        let max = *apery.iter().max().unwrap();
        Ok(max as i64 - self.multiplicity() as i64)
    }

    pub fn shift(&self, k: u64) -> NumericalSemigroup {
        if k == 0 {
            return self.clone();
        }
        let gens: Vec<u64> = self.generators.iter().map(|g| g + k).collect();
        NumericalSemigroup::from_generators(&gens).expect("shifted generators are positive")
    }

    /// The semigroup generated by every integer between the smallest and the
    /// largest minimal generator.
    pub fn interval_completion(&self) -> NumericalSemigroup {
        let lo = self.multiplicity();
        let hi = *self.generators.last().unwrap();
        let gens: Vec<u64> = (lo..=hi).collect();
        let completed =
            NumericalSemigroup::from_generators(&gens).expect("interval generators are positive");
        debug_assert_eq!(
            completed.mu() as u64,
            (lo - 1).min(self.width()) + 1,
            "interval completion size"
        );
        debug_assert!(self.mu() <= completed.mu());
        completed
    }

    /// True iff the minimal generators are consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.generators.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        let f = self.frobenius_number()?;
        if f < 0 {
            return Ok(true);
        }
        let f = f as u64;
        Ok((0..=f).all(|s| self.contains(s) != self.contains(f - s)))
    }

    /// Maximal length of a factorization of `h` into generators.
    pub fn max_factorization_length(&self, h: u64) -> Result<u32> {
        if h == 0 || !self.contains(h) {
            return Err(Error::NotInSemigroup(h));
        }
        let table = self.order_table(h);
        Ok(table[h as usize].expect("member has a factorization"))
    }

    /// `table[n]` is the maximal factorization length of `n`, or `None` when
    /// `n` is not in the semigroup.
    pub fn order_table(&self, limit: u64) -> Vec<Option<u32>> {
        let limit = limit as usize;
        let mut table: Vec<Option<u32>> = vec![None; limit + 1];
        table[0] = Some(0);
        for n in 1..=limit {
            let mut best: Option<u32> = None;
            for &g in &self.generators {
                let g = g as usize;
                if g > n {
                    break;
                }
                if let Some(o) = table[n - g] {
                    best = Some(best.map_or(o + 1, |b| b.max(o + 1)));
                }
            }
            table[n] = best;
        }
        table
    }

    /// Hilbert function of the tangent cone computed from the semigroup alone:
    /// entry `n` counts the elements whose maximal factorization length is `n`.
    pub fn tangent_hilbert_oracle(&self, dmax: usize) -> Result<Vec<u64>> {
        self.require_gcd_one()?;
        let top = *self.generators.last().unwrap();
        // an element of order n is at most n times the largest generator
        let limit = dmax as u64 * top;
        let table = self.order_table(limit);
        let mut counts = vec![0u64; dmax + 1];
        for o in table.into_iter().flatten() {
            if (o as usize) <= dmax {
                counts[o as usize] += 1;
            }
        }
        Ok(counts)
    }
}

/// Dijkstra over residues modulo `m`: least combination of `gens` in each class.
fn apery_by_shortest_paths(gens: &[u64], m: u64) -> Vec<u64> {
    let m_us = m as usize;
    let mut dist = vec![u64::MAX; m_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nr = (r + (g % m) as usize) % m_us;
            let nd = d + g;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a comma separated list of nonnegative integers, with or without
/// angle brackets: `"<3,5,7>"`, `"3, 5, 7"`, `"⟨3,5,7⟩"`.
pub fn parse_integer_list(s: &str) -> Result<Vec<u64>> {
    let trimmed = s
        .trim()
        .trim_start_matches(['<', '⟨', '(', '['])
        .trim_end_matches(['>', '⟩', ')', ']']);
    if trimmed.trim().is_empty() {
        return Err(Error::Parse(format!("empty generator list in {s:?}")));
    }
    trimmed
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumericalSemigroup::from_generators(&parse_integer_list(s)?)
    }
}
