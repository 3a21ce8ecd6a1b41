//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! normal (sugar) selection strategy.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial, Term};

/// Guard rails for a Gröbner basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest total degree allowed for any basis element.
    pub max_degree: u64,
    /// Largest number of S-pairs that may be reduced.
    pub max_pairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_degree: 5_000,
            max_pairs: 2_000_000,
        }
    }
}

/// A polynomial with its terms sorted decreasingly under the working order.
#[derive(Clone, Debug)]
pub(crate) struct Row {
    pub terms: Vec<Term>,
}

impl Row {
    pub fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Row {
        Row {
            terms: p.sorted_terms(ord),
        }
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn make_monic(&mut self) {
        if let Some(lt) = self.terms.first() {
            if !lt.coeff.is_one() {
                let inv = lt.coeff.recip();
                for t in &mut self.terms {
                    t.coeff *= &inv;
                }
            }
        }
    }

    pub fn max_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }

    /// `self - c * m * other`.
    pub fn sub_mul(&self, c: &Coeff, m: &Monomial, other: &Row, ord: &MonomialOrder) -> Row {
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let next_b = |j: usize| Term::new(-(&b[j].coeff * c), b[j].mono.mul(m));
        let mut pending: Option<Term> = if j < b.len() { Some(next_b(j)) } else { None };
        while i < a.len() {
            let Some(bt) = pending.as_ref() else { break };
            match ord.cmp(&a[i].mono, &bt.mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = if j < b.len() { Some(next_b(j)) } else { None };
                }
                Ordering::Equal => {
                    let sum = &a[i].coeff + &bt.coeff;
                    if !sum.is_zero() {
                        out.push(Term::new(sum, a[i].mono.clone()));
                    }
                    i += 1;
                    j += 1;
                    pending = if j < b.len() { Some(next_b(j)) } else { None };
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if let Some(t) = pending {
            out.push(t);
            for jj in j + 1..b.len() {
                out.push(next_b(jj));
            }
        }
        Row { terms: out }
    }
}

/// Leading-monomial index for divisor lookups.
pub(crate) struct Reducers<'a> {
    rows: Vec<&'a Row>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    pub fn new(rows: impl IntoIterator<Item = &'a Row>) -> Self {
        let rows: Vec<&Row> = rows.into_iter().filter(|r| !r.is_zero()).collect();
        let masks = rows.iter().map(|r| r.lead().mono.support_mask()).collect();
        Reducers { rows, masks }
    }

    pub fn find(&self, m: &Monomial) -> Option<&'a Row> {
        let mask = m.support_mask();
        self.rows
            .iter()
            .zip(&self.masks)
            .find(|(r, &rm)| rm & !mask == 0 && r.lead().mono.divides(m))
            .map(|(r, _)| *r)
    }
}

/// Reduces until the leading term is irreducible (or the row vanishes).
pub(crate) fn top_reduce(mut f: Row, reducers: &Reducers<'_>, ord: &MonomialOrder) -> Row {
    while let Some(lt) = f.terms.first() {
        let Some(g) = reducers.find(&lt.mono) else {
            break;
        };
        let glt = g.lead();
        let q = lt.mono.div(&glt.mono).unwrap();
        let c = &lt.coeff / &glt.coeff;
        f = f.sub_mul(&c, &q, g, ord);
    }
    f
}

/// Full reduction: no term of the result is divisible by a leading monomial.
pub(crate) fn full_reduce(f: Row, reducers: &Reducers<'_>, ord: &MonomialOrder) -> Row {
    let mut rest = f;
    let mut done: Vec<Term> = Vec::new();
    loop {
        rest = top_reduce(rest, reducers, ord);
        if rest.is_zero() {
            break;
        }
        done.push(rest.terms.remove(0));
    }
    Row { terms: done }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// `sugar_weights` is the grading used by the selection strategy; pass the
/// all-ones vector unless the input is homogeneous for another grading.
pub(crate) fn reduced_basis(
    gens: &[Polynomial],
    nvars: usize,
    ord: &MonomialOrder,
    sugar_weights: &[u64],
    budget: &Budget,
) -> Result<Vec<Row>> {
    ord.validate(nvars)?;
    let mut basis: Vec<Row> = Vec::new();
    let mut sugar: Vec<u64> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let wdeg = |m: &Monomial| m.weighted_degree(sugar_weights);

    // interreduce the input a little: insert generators one at a time
    let mut inputs: Vec<Row> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            Ok(Row::from_poly(g, ord))
        })
        .collect::<Result<_>>()?;
    inputs.sort_by(|a, b| ord.cmp(&a.lead().mono, &b.lead().mono));

    let mut processed = 0usize;
    let mut queue: Vec<(Row, u64)> = inputs
        .into_iter()
        .map(|r| {
            let s = r.terms.iter().map(|t| wdeg(&t.mono)).max().unwrap();
            (r, s)
        })
        .collect();
    queue.reverse();

    loop {
        let (h, h_sugar) = if let Some(item) = queue.pop() {
            item
        } else {
            // pick the pair with the least sugar, ties by the smaller lcm
            let Some(best) = (0..pairs.len()).min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| ord.cmp(&pairs[a].lcm, &pairs[b].lcm))
            }) else {
                break;
            };
            let p = pairs.swap_remove(best);
            processed += 1;
            if processed > budget.max_pairs {
                return Err(Error::Budget(format!(
                    "more than {} S-pairs reduced",
                    budget.max_pairs
                )));
            }
            let (gi, gj) = (&basis[p.i], &basis[p.j]);
            let mi = p.lcm.div(&gi.lead().mono).unwrap();
            let mj = p.lcm.div(&gj.lead().mono).unwrap();
            let spoly = Row {
                terms: gi.terms[1..]
                    .iter()
                    .map(|t| Term::new(t.coeff.clone(), t.mono.mul(&mi)))
                    .collect(),
            }
            .sub_mul(
                &Coeff::one(),
                &mj,
                &Row {
                    terms: gj.terms[1..].to_vec(),
                },
                ord,
            );
            (spoly, p.sugar)
        };

        let reducers = Reducers::new(
            basis
                .iter()
                .zip(&active)
                .filter(|(_, &a)| a)
                .map(|(r, _)| r),
        );
        let mut h = top_reduce(h, &reducers, ord);
        drop(reducers);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        let deg = h.max_degree();
        if deg > budget.max_degree {
            return Err(Error::Budget(format!(
                "basis element of degree {deg} exceeds the limit {}",
                budget.max_degree
            )));
        }
        if h.lead().mono.is_one() {
            return Ok(vec![h]);
        }
        update(
            &mut basis,
            &mut sugar,
            &mut active,
            &mut pairs,
            h,
            h_sugar,
            sugar_weights,
        );
    }

    Ok(interreduce(basis, active, ord))
}

/// Gebauer–Möller installation of a new basis element.
fn update(
    basis: &mut Vec<Row>,
    sugar: &mut Vec<u64>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Row,
    h_sugar: u64,
    weights: &[u64],
) {
    let hn = basis.len();
    let hlm = h.lead().mono.clone();
    let cand: Vec<(usize, Monomial, bool)> = (0..hn)
        .filter(|&g| active[g])
        .map(|g| {
            let glm = &basis[g].lead().mono;
            (g, hlm.lcm(glm), hlm.is_coprime(glm))
        })
        .collect();

    // chain criterion among the new pairs; coprime pairs stay long enough to
    // discard pairs whose lcm they divide
    let mut kept: Vec<usize> = Vec::new();
    for a in 0..cand.len() {
        let (_, lcm_a, coprime_a) = &cand[a];
        let dominated = cand[a + 1..]
            .iter()
            .chain(kept.iter().map(|&k| &cand[k]))
            .any(|(_, l, _)| l.divides(lcm_a));
        if *coprime_a || !dominated {
            kept.push(a);
        }
    }
    let new_pairs: Vec<(usize, Monomial)> = kept
        .into_iter()
        .filter(|&a| !cand[a].2)
        .map(|a| (cand[a].0, cand[a].1.clone()))
        .collect();

    // old pairs made redundant by h
    pairs.retain(|p| {
        if !hlm.divides(&p.lcm) {
            return true;
        }
        let li = hlm.lcm(&basis[p.i].lead().mono);
        let lj = hlm.lcm(&basis[p.j].lead().mono);
        li == p.lcm || lj == p.lcm
    });

    for (g, lcm) in new_pairs {
        let sg =
            sugar[g] + lcm.weighted_degree(weights) - basis[g].lead().mono.weighted_degree(weights);
        let sh = h_sugar + lcm.weighted_degree(weights) - hlm.weighted_degree(weights);
        pairs.push(Pair {
            i: g,
            j: hn,
            lcm,
            sugar: sg.max(sh),
        });
    }

    for g in 0..hn {
        if active[g] && hlm.divides(&basis[g].lead().mono) {
            active[g] = false;
        }
    }
    basis.push(h);
    sugar.push(h_sugar);
    active.push(true);
}

/// Turns a Gröbner basis into the reduced one, sorted by leading monomial.
pub(crate) fn interreduce(basis: Vec<Row>, active: Vec<bool>, ord: &MonomialOrder) -> Vec<Row> {
    let mut rows: Vec<Row> = basis
        .into_iter()
        .zip(active)
        .filter(|(r, a)| *a && !r.is_zero())
        .map(|(r, _)| r)
        .collect();
    rows.sort_by(|a, b| ord.cmp(&a.lead().mono, &b.lead().mono));
    // minimal: drop rows whose leading monomial is divisible by an earlier one
    let mut minimal: Vec<Row> = Vec::new();
    for r in rows {
        if minimal
            .iter()
            .all(|m| !m.lead().mono.divides(&r.lead().mono))
        {
            minimal.push(r);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let lead = minimal[k].terms[0].clone();
        let tail = Row {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let others = Reducers::new(
            minimal
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, r)| r),
        );
        let tail = full_reduce(tail, &others, ord);
        let mut terms = vec![lead];
        terms.extend(tail.terms);
        let mut row = Row { terms };
        row.make_monic();
        out.push(row);
    }
    out
}
