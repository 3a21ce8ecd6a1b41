use num_traits::{One, Zero};

use super::{Budget, GbOptions, GroebnerBasis};
use crate::error::{Error, Result};
use crate::poly::{Coeff, Grading, Monomial, MonomialOrder, Polynomial, Term};

fn ring_size(gens: &[Polynomial]) -> Result<usize> {
    let n = gens.iter().map(|g| g.nvars()).max().unwrap_or(0);
    for g in gens {
        if g.nvars() != n && !(g.is_zero() && g.nvars() == 0) {
            return Err(Error::RingMismatch {
                left: n,
                right: g.nvars(),
            });
        }
    }
    Ok(n)
}

fn degrevlex_basis(gens: &[Polynomial], nvars: usize, budget: &Budget) -> Result<GroebnerBasis> {
    GroebnerBasis::compute_with(
        gens,
        &MonomialOrder::degrevlex(nvars),
        &GbOptions::with_budget(*budget),
    )
}

/// Is `f` in the ideal generated by `gens`?
pub fn membership(
    f: &Polynomial,
    gens: &[Polynomial],
    ord: &MonomialOrder,
    budget: &Budget,
) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let gb = GroebnerBasis::compute_with(gens, ord, &GbOptions::with_budget(*budget))?;
    Ok(gb.contains(f))
}

/// Equality of ideals by mutual membership of generators.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], budget: &Budget) -> Result<bool> {
    let n = ring_size(a).and_then(|na| {
        let nb = ring_size(b)?;
        match (a.iter().all(|p| p.is_zero()), b.iter().all(|p| p.is_zero())) {
            (true, _) => Ok(nb.max(na)),
            (_, true) => Ok(na.max(nb)),
            _ if na == nb => Ok(na),
            _ => Err(Error::RingMismatch {
                left: na,
                right: nb,
            }),
        }
    })?;
    let ga = degrevlex_basis(a, n, budget)?;
    if !b.iter().all(|f| f.is_zero() || ga.contains(f)) {
        return Ok(false);
    }
    let gb = degrevlex_basis(b, n, budget)?;
    Ok(a.iter().all(|f| f.is_zero() || gb.contains(f)))
}

/// Generators of `I ∩ K[other vars]`, computed with a block order that
/// eliminates `front` (degrevlex inside both blocks).
pub fn eliminate(gens: &[Polynomial], front: &[usize], budget: &Budget) -> Result<Vec<Polynomial>> {
    let n = ring_size(gens)?;
    eliminate_with_order(
        gens,
        front,
        &MonomialOrder::elimination(front, n),
        &GbOptions::with_budget(*budget),
    )
}

/// Elimination under a caller-supplied block order whose front block is `front`.
pub fn eliminate_with_order(
    gens: &[Polynomial],
    front: &[usize],
    ord: &MonomialOrder,
    opts: &GbOptions,
) -> Result<Vec<Polynomial>> {
    let gb = GroebnerBasis::compute_with(gens, ord, opts)?;
    Ok(gb
        .into_elements()
        .into_iter()
        .filter(|g| front.iter().all(|&v| !g.involves_var(v)))
        .collect())
}

/// Result of a saturation.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub generators: Vec<Polynomial>,
    /// True when the saturated ideal is strictly larger than the input.
    pub changed: bool,
    pub passes: usize,
}

/// `I : v^∞`.
///
/// Homogeneous input: repeatedly take a degrevlex basis with `v` the
/// smallest variable and strip powers of `v` until nothing divides.
/// Otherwise: eliminate a tag variable `w` from `I + (1 - w v)`.
pub fn saturate_by_variable(gens: &[Polynomial], v: usize, budget: &Budget) -> Result<Saturation> {
    let n = ring_size(gens)?;
    if v >= n {
        return Err(Error::invalid(format!(
            "variable index {v} outside the ring"
        )));
    }
    let standard = Grading::standard(n);
    if gens.iter().all(|g| g.is_homogeneous(&standard)) {
        let mut vars: Vec<usize> = (0..n).filter(|&x| x != v).collect();
        vars.push(v);
        let ord = MonomialOrder::DegRevLex { vars };
        let mut current: Vec<Polynomial> = gens.to_vec();
        let mut changed = false;
        let mut passes = 0;
        loop {
            passes += 1;
            let gb = GroebnerBasis::compute_with(&current, &ord, &GbOptions::with_budget(*budget))?;
            let mut divided = false;
            let next: Vec<Polynomial> = gb
                .into_elements()
                .into_iter()
                .map(|g| {
                    let e = g.var_power_dividing(v);
                    if e > 0 {
                        divided = true;
                        g.div_monomial(&Monomial::var_power(n, v, e)).unwrap()
                    } else {
                        g
                    }
                })
                .collect();
            current = next;
            if !divided {
                break;
            }
            changed = true;
        }
        return Ok(Saturation {
            generators: current,
            changed,
            passes,
        });
    }

    let w = n;
    let mut ext: Vec<Polynomial> = gens.iter().map(|g| g.extend_vars(1)).collect();
    let tag = Polynomial::one(n + 1)
        - Polynomial::monomial(
            Coeff::one(),
            Monomial::var_power(n + 1, w, 1).mul(&Monomial::var_power(n + 1, v, 1)),
        );
    ext.push(tag);
    let keep: Vec<usize> = (0..n).collect();
    let sat: Vec<Polynomial> = eliminate(&ext, &[w], budget)?
        .into_iter()
        .map(|g| g.restrict_vars(&keep))
        .collect::<Result<_>>()?;
    let gb = degrevlex_basis(gens, n, budget)?;
    let changed = !sat.iter().all(|g| gb.contains(g));
    Ok(Saturation {
        generators: sat,
        changed,
        passes: 1,
    })
}

/// `A ∩ B` via `w A + (1 - w) B`, eliminating the tag variable `w`.
pub fn intersect(a: &[Polynomial], b: &[Polynomial], budget: &Budget) -> Result<Vec<Polynomial>> {
    let n = ring_size(a)?.max(ring_size(b)?);
    let w = n;
    let wpoly = Polynomial::var(n + 1, w);
    let one_minus_w = Polynomial::one(n + 1) - wpoly.clone();
    let mut ext: Vec<Polynomial> = Vec::new();
    for f in a.iter().filter(|f| !f.is_zero()) {
        ext.push(&wpoly * &f.extend_vars(1));
    }
    for f in b.iter().filter(|f| !f.is_zero()) {
        ext.push(&one_minus_w * &f.extend_vars(1));
    }
    let keep: Vec<usize> = (0..n).collect();
    eliminate(&ext, &[w], budget)?
        .into_iter()
        .map(|g| g.restrict_vars(&keep))
        .collect()
}

/// Exact quotient `h / f`, or `None` when `f` does not divide `h`.
pub fn divide_exact(h: &Polynomial, f: &Polynomial) -> Result<Option<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("quotient"));
    }
    let ord = MonomialOrder::lex(h.nvars());
    let lf = f.leading_term(&ord)?.clone();
    let mut rem = h.clone();
    let mut quot: Vec<Term> = Vec::new();
    while !rem.is_zero() {
        let lr = rem.leading_term(&ord)?.clone();
        let Some(m) = lr.mono.div(&lf.mono) else {
            return Ok(None);
        };
        let c = &lr.coeff / &lf.coeff;
        rem = rem.checked_sub(&f.mul_term(&c, &m))?;
        quot.push(Term::new(c, m));
    }
    Ok(Some(Polynomial::from_terms(h.nvars(), quot)))
}

/// `I : f`.
pub fn ideal_quotient(
    gens: &[Polynomial],
    f: &Polynomial,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("ideal quotient"));
    }
    if f.is_unit() {
        return Ok(gens.to_vec());
    }
    let inter = intersect(gens, std::slice::from_ref(f), budget)?;
    inter
        .iter()
        .map(|g| {
            divide_exact(g, f)?
                .ok_or_else(|| Error::Consistency("element of I ∩ (f) not divisible by f".into()))
        })
        .collect()
}

/// A minimal homogeneous generating set extracted from `gens`.
///
/// Candidates are scanned by increasing degree; one is kept iff it is not
/// in the ideal of those already kept. By graded Nakayama the result has
/// exactly μ(I) elements.
pub fn minimal_generators(
    gens: &[Polynomial],
    grading: &Grading,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let mut cands: Vec<(u64, &Polynomial)> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        match g.weighted_degree(grading)? {
            Some(d) => cands.push((d, g)),
            None => return Err(Error::NotHomogeneous(g.to_string())),
        }
    }
    cands.sort_by_key(|(d, _)| *d);
    let n = grading.nvars();
    let ord = MonomialOrder::degrevlex(n);
    let opts = GbOptions::weighted(*budget, grading.weights().to_vec());
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut gb: Option<GroebnerBasis> = None;
    for (_, g) in cands {
        let redundant = gb.as_ref().is_some_and(|b| b.contains(g));
        if redundant {
            continue;
        }
        kept.push(g.clone());
        let mut input: Vec<Polynomial> = gb.map(|b| b.into_elements()).unwrap_or_default();
        input.push(g.clone());
        gb = Some(GroebnerBasis::compute_with(&input, &ord, &opts)?);
    }
    Ok(kept)
}

/// Convenience: is `f` zero in `K[x] / (gens)` modulo nothing but exact zero.
#[allow(dead_code)]
pub(crate) fn is_zero_poly(f: &Polynomial) -> bool {
    f.terms().iter().all(|t| t.coeff.is_zero())
}
