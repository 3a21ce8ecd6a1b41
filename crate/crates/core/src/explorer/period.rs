use serde::{Deserialize, Serialize};

/// An eventually periodic tail: `seq[i] == seq[i + period]` for all
/// `i >= onset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Periodicity {
    pub period: usize,
    pub onset: usize,
}

impl Periodicity {
    /// Number of full periods covered by the tail of a sequence of length `len`.
    pub fn periods_observed(&self, len: usize) -> usize {
        (len - self.onset) / self.period
    }
}

/// Earliest index from which `seq` is `p`-periodic.
fn onset<T: PartialEq>(seq: &[T], p: usize) -> usize {
    let mut s = seq.len().saturating_sub(p);
    while s > 0 && seq[s - 1] == seq[s - 1 + p] {
        s -= 1;
    }
    s
}

/// Finds the periodic tail of `seq` with the earliest onset, among periods
/// `p <= max_period` whose tail spans at least `2p` terms; ties go to the
/// smaller period.
///
/// Preferring the earliest onset stops a coincidental repetition at the end
/// of the window (say `.., 4, 4`) from masquerading as period 1.
pub fn periodicity<T: PartialEq>(seq: &[T], max_period: usize) -> Option<Periodicity> {
    let mut best: Option<Periodicity> = None;
    for p in 1..=max_period.min(seq.len() / 2) {
        let s = onset(seq, p);
        if seq.len() - s < 2 * p {
            continue;
        }
        if best.is_none_or(|b| s < b.onset) {
            best = Some(Periodicity {
                period: p,
                onset: s,
            });
        }
    }
    best
}

/// The period of [`periodicity`], or `None` when inconclusive.
pub fn detect_period<T: PartialEq>(seq: &[T], max_period: usize) -> Option<usize> {
    periodicity(seq, max_period).map(|p| p.period)
}
