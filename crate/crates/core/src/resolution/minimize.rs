//! Pruning a graded free resolution to the minimal one by cancelling unit
//! entries.

use std::collections::BTreeMap;

use super::schreyer::SparseMap;
use crate::poly::{Coeff, Polynomial};

/// A chain of maps `maps[k]: F_{k+1} -> F_k` with liveness flags per basis
/// element of every `F_k`.
pub(crate) struct Complex {
    pub maps: Vec<SparseMap>,
    pub degrees: Vec<Vec<u64>>,
    pub alive: Vec<Vec<bool>>,
}

fn unit(p: &Polynomial) -> Option<Coeff> {
    (p.len() == 1 && p.terms()[0].mono.is_one()).then(|| p.terms()[0].coeff.clone())
}

impl Complex {
    pub fn new(maps: Vec<SparseMap>, degrees: Vec<Vec<u64>>) -> Self {
        let alive = degrees.iter().map(|d| vec![true; d.len()]).collect();
        Complex {
            maps,
            degrees,
            alive,
        }
    }

    /// Finds a unit entry `(row, col)` in `maps[k]`.
    fn find_unit(&self, k: usize) -> Option<(usize, usize, Coeff)> {
        let map = &self.maps[k];
        for (q, col) in map.cols.iter().enumerate() {
            if !self.alive[k + 1][q] {
                continue;
            }
            for (&p, e) in col {
                if self.degrees[k][p] != self.degrees[k + 1][q] || !self.alive[k][p] {
                    continue;
                }
                if let Some(c) = unit(e) {
                    return Some((p, q, c));
                }
            }
        }
        None
    }

    /// Splits off `F_{k+1}[q] -> F_k[p]` through the unit `c`.
    fn cancel(&mut self, k: usize, p: usize, q: usize, c: &Coeff) {
        let pivot = self.maps[k].cols[q].clone();
        let inv = c.recip();
        for j in 0..self.maps[k].cols.len() {
            if j == q || !self.alive[k + 1][j] {
                continue;
            }
            let Some(e) = self.maps[k].cols[j].get(&p).cloned() else {
                continue;
            };
            let lambda = e.scale(&inv);
            let col = &mut self.maps[k].cols[j];
            for (&i, v) in &pivot {
                let upd = &lambda * v;
                let cur = col
                    .remove(&i)
                    .unwrap_or_else(|| Polynomial::zero(upd.nvars()));
                let new = cur - upd;
                if !new.is_zero() {
                    col.insert(i, new);
                }
            }
            debug_assert!(!col.contains_key(&p));
        }
        self.alive[k + 1][q] = false;
        self.alive[k][p] = false;
        self.maps[k].cols[q].clear();
        for col in self.maps[k].cols.iter_mut() {
            col.remove(&p);
        }
        if k + 1 < self.maps.len() {
            for col in self.maps[k + 1].cols.iter_mut() {
                col.remove(&q);
            }
        }
        if k > 0 {
            self.maps[k - 1].cols[p].clear();
        }
    }

    pub fn minimize(&mut self) {
        for k in 0..self.maps.len() {
            while let Some((p, q, c)) = self.find_unit(k) {
                self.cancel(k, p, q, &c);
            }
        }
    }

    pub fn has_units(&self) -> bool {
        (0..self.maps.len()).any(|k| {
            self.maps[k].cols.iter().enumerate().any(|(q, col)| {
                self.alive[k + 1][q]
                    && col
                        .iter()
                        .any(|(&p, e)| self.alive[k][p] && e.total_degree() == Some(0))
            })
        })
    }

    /// Is `maps[k] * maps[k+1]` zero for every `k`?
    pub fn composition_is_zero(&self) -> bool {
        for k in 0..self.maps.len().saturating_sub(1) {
            let (lower, upper) = (&self.maps[k], &self.maps[k + 1]);
            for (l, col) in upper.cols.iter().enumerate() {
                if !self.alive[k + 2][l] {
                    continue;
                }
                let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
                for (&j, a) in col {
                    if !self.alive[k + 1][j] {
                        continue;
                    }
                    for (&i, b) in &lower.cols[j] {
                        if !self.alive[k][i] {
                            continue;
                        }
                        let prod = b * a;
                        let e = acc
                            .remove(&i)
                            .unwrap_or_else(|| Polynomial::zero(prod.nvars()));
                        acc.insert(i, e + prod);
                    }
                }
                if acc.values().any(|p| !p.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Surviving graded degrees of each `F_k`.
    pub fn surviving_degrees(&self) -> Vec<Vec<u64>> {
        self.degrees
            .iter()
            .zip(&self.alive)
            .map(|(d, a)| {
                d.iter()
                    .zip(a)
                    .filter(|(_, &l)| l)
                    .map(|(&d, _)| d)
                    .collect()
            })
            .collect()
    }
}
