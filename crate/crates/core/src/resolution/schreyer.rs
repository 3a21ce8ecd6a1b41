//! Schreyer frames: a (generally non-minimal) graded free resolution whose
//! levels are Gröbner bases for the induced Schreyer orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::poly::{Coeff, Grading, Monomial, MonomialOrder, Polynomial, Term};

/// Term `coeff * mono * e_comp` of a free-module element, together with its
/// total monomial `mono * T_comp`.
#[derive(Clone, Debug)]
struct MTerm {
    coeff: Coeff,
    mono: Monomial,
    comp: usize,
    total: Monomial,
}

/// Ordering data of a free module `F` with basis `e_0..e_{n-1}`.
struct Frame {
    totals: Vec<Monomial>,
    /// Smaller rank means greater basis element on ties.
    ranks: Vec<usize>,
}

impl Frame {
    fn cmp(&self, ord: &MonomialOrder, a: &MTerm, b: &MTerm) -> Ordering {
        ord.cmp(&a.total, &b.total)
            .then_with(|| self.ranks[b.comp].cmp(&self.ranks[a.comp]))
    }

    fn term(&self, coeff: Coeff, mono: Monomial, comp: usize) -> MTerm {
        let total = mono.mul(&self.totals[comp]);
        MTerm {
            coeff,
            mono,
            comp,
            total,
        }
    }
}

type Vector = Vec<MTerm>;

fn sub_mul(
    f: &[MTerm],
    c: &Coeff,
    m: &Monomial,
    g: &[MTerm],
    frame: &Frame,
    ord: &MonomialOrder,
) -> Vector {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let scaled = g.iter().map(|t| MTerm {
        coeff: -(c * &t.coeff),
        mono: t.mono.mul(m),
        comp: t.comp,
        total: t.total.mul(m),
    });
    let mut scaled = scaled.peekable();
    let mut fi = f.iter().peekable();
    loop {
        match (fi.peek(), scaled.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(fi.next().unwrap().clone()),
            (None, Some(_)) => out.push(scaled.next().unwrap()),
            (Some(a), Some(b)) => match frame.cmp(ord, a, b) {
                Ordering::Greater => out.push(fi.next().unwrap().clone()),
                Ordering::Less => out.push(scaled.next().unwrap()),
                Ordering::Equal => {
                    let a = fi.next().unwrap();
                    let b = scaled.next().unwrap();
                    let s = &a.coeff + &b.coeff;
                    if !s.is_zero() {
                        out.push(MTerm { coeff: s, ..b });
                    }
                }
            },
        }
    }
    out
}

fn lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    b.exponents().cmp(a.exponents())
}

/// Matrix of a map `F_k -> F_{k-1}`, stored by columns as sparse rows.
#[derive(Clone, Debug)]
pub(crate) struct SparseMap {
    pub cols: Vec<BTreeMap<usize, Polynomial>>,
}

/// Output of the Schreyer construction.
pub(crate) struct FrameResult {
    /// `maps[k]` is `d_{k+1}: F_{k+1} -> F_k`.
    pub maps: Vec<SparseMap>,
    /// Graded degrees of the basis of `F_k`.
    pub degrees: Vec<Vec<u64>>,
}

fn to_column(v: &[MTerm], nvars: usize) -> BTreeMap<usize, Polynomial> {
    let mut by: BTreeMap<usize, Vec<Term>> = BTreeMap::new();
    for t in v {
        by.entry(t.comp)
            .or_default()
            .push(Term::new(t.coeff.clone(), t.mono.clone()));
    }
    by.into_iter()
        .map(|(c, ts)| (c, Polynomial::from_terms(nvars, ts)))
        .collect()
}

/// Builds the Schreyer frame of `S / (basis)` where `basis` is a Gröbner
/// basis under `ord` whose elements are homogeneous for `grading`.
pub(crate) fn schreyer_frame(
    basis: &[Polynomial],
    nvars: usize,
    ord: &MonomialOrder,
    grading: &Grading,
    budget: &Budget,
) -> Result<FrameResult> {
    let mut prev = Frame {
        totals: vec![Monomial::one(nvars)],
        ranks: vec![0],
    };
    let mut degrees: Vec<Vec<u64>> = vec![vec![0]];
    let mut maps: Vec<SparseMap> = Vec::new();
    let mut elems: Vec<Vector> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            p.sorted_terms(ord)
                .into_iter()
                .map(|t| prev.term(t.coeff, t.mono, 0))
                .collect()
        })
        .collect();
    let mut pairs_used = 0usize;

    while !elems.is_empty() {
        elems.sort_by(|a, b| {
            a[0].comp
                .cmp(&b[0].comp)
                .then_with(|| lex_desc(&a[0].mono, &b[0].mono))
        });
        maps.push(SparseMap {
            cols: elems.iter().map(|v| to_column(v, nvars)).collect(),
        });
        let n = elems.len();
        let totals: Vec<Monomial> = elems.iter().map(|v| v[0].total.clone()).collect();
        degrees.push(totals.iter().map(|t| grading.degree(t)).collect());
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (prev.ranks[elems[a][0].comp], a));
        let mut ranks = vec![0; n];
        for (r, &a) in order.iter().enumerate() {
            ranks[a] = r;
        }
        let cur = Frame { totals, ranks };

        // reducers indexed by lead component
        let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (a, v) in elems.iter().enumerate() {
            by_comp.entry(v[0].comp).or_default().push(a);
        }

        let mut next: Vec<Vector> = Vec::new();
        for group in by_comp.values() {
            for (ia, &a) in group.iter().enumerate() {
                let na = &elems[a][0].mono;
                // minimal multipliers m_ab over b > a
                let mut cands: Vec<(Monomial, usize)> = group[ia + 1..]
                    .iter()
                    .map(|&b| (na.lcm(&elems[b][0].mono).div(na).unwrap(), b))
                    .collect();
                cands.sort_by_key(|(m, b)| (m.degree(), *b));
                let mut kept: Vec<(Monomial, usize)> = Vec::new();
                for (m, b) in cands {
                    if !kept.iter().any(|(k, _)| k.divides(&m)) {
                        kept.push((m, b));
                    }
                }
                for (m_ab, b) in kept {
                    pairs_used += 1;
                    if pairs_used > budget.max_pairs {
                        return Err(Error::Budget(format!(
                            "more than {} syzygy pairs",
                            budget.max_pairs
                        )));
                    }
                    next.push(syzygy(a, b, &m_ab, &elems, &by_comp, &prev, &cur, ord)?);
                }
            }
        }
        prev = cur;
        elems = next;
    }
    Ok(FrameResult { maps, degrees })
}

/// `lc_b m_ab e_a - lc_a m_ba e_b - sum q_c e_c`, from reducing the
/// S-vector of `u_a, u_b` to zero.
#[allow(clippy::too_many_arguments)]
fn syzygy(
    a: usize,
    b: usize,
    m_ab: &Monomial,
    elems: &[Vector],
    by_comp: &BTreeMap<usize, Vec<usize>>,
    prev: &Frame,
    cur: &Frame,
    ord: &MonomialOrder,
) -> Result<Vector> {
    let (ua, ub) = (&elems[a], &elems[b]);
    let lcm = ua[0].mono.mul(m_ab);
    let m_ba = lcm.div(&ub[0].mono).unwrap();
    let (lca, lcb) = (ua[0].coeff.clone(), ub[0].coeff.clone());

    let mut rec: BTreeMap<(usize, Monomial), Coeff> = BTreeMap::new();
    let mut add = |c: usize, m: Monomial, k: Coeff| {
        let e = rec.entry((c, m)).or_insert_with(Coeff::zero);
        *e += k;
    };
    add(a, m_ab.clone(), lcb.clone());
    add(b, m_ba.clone(), -lca.clone());

    // s = lcb m_ab u_a - lca m_ba u_b, computed without the cancelling leads
    let scaled_a = sub_mul(&[], &(-lcb.clone()), m_ab, &ua[1..], prev, ord);
    let mut s = sub_mul(&scaled_a, &lca, &m_ba, &ub[1..], prev, ord);
    while let Some(lead) = s.first() {
        let reducer = by_comp
            .get(&lead.comp)
            .and_then(|cands| {
                cands
                    .iter()
                    .find(|&&c| elems[c][0].mono.divides(&lead.mono))
            })
            .copied()
            .ok_or_else(|| Error::Consistency("Schreyer level is not a Gröbner basis".into()))?;
        let u = &elems[reducer];
        let q = &lead.coeff / &u[0].coeff;
        let m = lead.mono.div(&u[0].mono).unwrap();
        s = sub_mul(&s[1..], &q, &m, &u[1..], prev, ord);
        add(reducer, m, -q);
    }
    let mut out: Vector = rec
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((c, m), k)| cur.term(k, m, c))
        .collect();
    out.sort_by(|x, y| cur.cmp(ord, y, x));
    debug_assert!(out[0].comp == a && out[0].mono == *m_ab);
    Ok(out)
}
