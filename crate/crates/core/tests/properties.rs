use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;

use tancone::groebner::{hilbert_function, membership, Budget, GroebnerBasis};
use tancone::poly::{coeff, Coeff, Monomial, MonomialOrder, Polynomial, Ring, Term};
use tancone::tangentcone::{tangent_cone, TangentConeOptions};
use tancone::NumericalSemigroup;

const N: usize = 3;

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::lex(N),
        MonomialOrder::degrevlex(N),
        MonomialOrder::weighted_degrevlex(&[3, 5, 7]),
        MonomialOrder::elimination(&[2], N),
        MonomialOrder::Lex {
            vars: vec![2, 0, 1],
        },
    ]
}

fn monomial(max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, N).prop_map(|e| Monomial::from_exponents(&e))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-9i64..=9, monomial(4)), 0..6).prop_map(|ts| {
        Polynomial::from_terms(N, ts.into_iter().map(|(c, m)| Term::new(coeff(c), m)))
    })
}

fn nonzero_polynomial() -> impl Strategy<Value = Polynomial> {
    polynomial().prop_filter("nonzero", |p| !p.is_zero())
}

/// Exponent vectors of total degree `d` in `N` variables.
fn exps_of_degree(d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            out.push(vec![a, b, d - a - b]);
        }
    }
    out
}

fn homogeneous_binomial(d: u32) -> impl Strategy<Value = Polynomial> {
    let all = exps_of_degree(d);
    let n = all.len();
    (0..n, 0..n)
        .prop_filter("distinct terms", |(i, j)| i != j)
        .prop_map(move |(i, j)| Polynomial::binomial(&all[i], &all[j]))
}

fn binomial_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec((2u32..=3).prop_flat_map(homogeneous_binomial), 1..4)
}

fn sorted_strings(ps: &[Polynomial]) -> Vec<String> {
    let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

/// Is `f` (homogeneous of degree `d`) in the span of all `m * g` of degree
/// `d`?  Exact for homogeneous ideals.
fn in_span(f: &Polynomial, gens: &[Polynomial], d: u32) -> bool {
    type Row = BTreeMap<Vec<u32>, Coeff>;
    let to_row = |p: &Polynomial| -> Row {
        p.terms()
            .iter()
            .map(|t| (t.mono.exponents().to_vec(), t.coeff.clone()))
            .collect()
    };
    let mut pivots: BTreeMap<Vec<u32>, Row> = BTreeMap::new();
    let reduce = |mut row: Row, pivots: &BTreeMap<Vec<u32>, Row>| -> Row {
        loop {
            let hit = row
                .iter()
                .find(|(k, _)| pivots.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = hit else { return row };
            for (kk, cc) in &pivots[&k] {
                let e = row.entry(kk.clone()).or_insert_with(Coeff::zero);
                *e -= &c * cc;
                if e.is_zero() {
                    row.remove(kk);
                }
            }
        }
    };
    for g in gens {
        let dg = g.total_degree().unwrap() as u32;
        if dg > d {
            continue;
        }
        for e in exps_of_degree(d - dg) {
            let row = reduce(
                to_row(&g.mul_monomial(&Monomial::from_exponents(&e))),
                &pivots,
            );
            if let Some((k, c)) = row.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
                let inv = c.recip();
                let row: Row = row.into_iter().map(|(kk, cc)| (kk, cc * &inv)).collect();
                // keep pivots fully reduced against each other
                for p in pivots.values_mut() {
                    if let Some(a) = p.get(&k).cloned() {
                        for (kk, cc) in &row {
                            let e = p.entry(kk.clone()).or_insert_with(Coeff::zero);
                            *e -= &a * cc;
                            if e.is_zero() {
                                p.remove(kk);
                            }
                        }
                    }
                }
                pivots.insert(k, row);
            }
        }
    }
    reduce(to_row(f), &pivots).is_empty()
}

fn random_homogeneous(d: u32, coeffs: &[i64]) -> Polynomial {
    let terms = exps_of_degree(d)
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(e, &c)| Term::new(coeff(c), Monomial::from_exponents(&e)));
    Polynomial::from_terms(N, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orders_are_total_multiplicative_well_orders(a in monomial(5), b in monomial(5), c in monomial(5)) {
        let one = Monomial::one(N);
        for ord in orders() {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ord.cmp(&a, &b));
            prop_assert_ne!(ord.cmp(&a, &one), Ordering::Less);
            if ord.cmp(&a, &b) == Ordering::Less && ord.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(ord.cmp(&a, &c), Ordering::Less);
            }
        }
    }

    #[test]
    fn print_parse_round_trip(p in polynomial()) {
        for ring in [Ring::short(N), Ring::standard(N)] {
            let back = ring.parse(&ring.format(&p)).unwrap();
            prop_assert_eq!(&back, &p);
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in binomial_ideal(), seed in any::<u64>()) {
        let mut shuffled = gens.clone();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        if seed % 2 == 0 {
            shuffled.reverse();
        }
        // redundant generators do not change the ideal either
        shuffled.push(&gens[0] * &gens[0]);
        for ord in orders() {
            let a = GroebnerBasis::compute(&gens, &ord).unwrap();
            let b = GroebnerBasis::compute(&shuffled, &ord).unwrap();
            prop_assert!(a.is_reduced() && b.is_reduced());
            prop_assert_eq!(sorted_strings(a.elements()), sorted_strings(b.elements()));
        }
    }

    #[test]
    fn membership_agrees_with_linear_algebra(
        gens in binomial_ideal(),
        d in 2u32..=5,
        coeffs in prop::collection::vec(-3i64..=3, 1..8),
        member in any::<bool>(),
    ) {
        let f = if member {
            let mut acc = Polynomial::zero(N);
            for (i, g) in gens.iter().enumerate() {
                let dg = g.total_degree().unwrap() as u32;
                if dg <= d {
                    for (j, e) in exps_of_degree(d - dg).into_iter().enumerate() {
                        let c = coeffs[(i + j) % coeffs.len()];
                        acc = acc + g.mul_term(&coeff(c), &Monomial::from_exponents(&e));
                    }
                }
            }
            acc
        } else {
            random_homogeneous(d, &coeffs)
        };
        let oracle = in_span(&f, &gens, d);
        if member {
            prop_assert!(oracle);
        }
        for ord in [MonomialOrder::degrevlex(N), MonomialOrder::lex(N)] {
            let got = membership(&f, &gens, &ord, &Budget::default()).unwrap();
            prop_assert_eq!(got, oracle);
        }
    }

    #[test]
    fn initial_forms_multiply(f in nonzero_polynomial(), g in nonzero_polynomial()) {
        let (ff, nf) = f.initial_form().unwrap();
        let (fg_init, nfg) = (&f * &g).initial_form().unwrap();
        let (gg, ng) = g.initial_form().unwrap();
        prop_assert_eq!(nfg, nf + ng);
        prop_assert_eq!(fg_init, &ff * &gg);
    }

    #[test]
    fn homogenize_round_trip(p in polynomial()) {
        let q = p.extend_vars(1);
        let h = q.homogenize(N).unwrap();
        prop_assert_eq!(h.dehomogenize(N), q.clone());
        if let Some(top) = q.terms().iter().map(|t| t.mono.degree()).max() {
            prop_assert!(h.terms().iter().all(|t| t.mono.degree() == top));
            // the initial form is the part with the largest power of s
            let (init, nu) = q.initial_form().unwrap();
            let s_top = (top - nu) as u32;
            let part = Polynomial::from_terms(
                N + 1,
                h.terms().iter().filter(|t| t.mono.exp(N) == s_top).cloned(),
            );
            prop_assert_eq!(part.dehomogenize(N), init);
        }
    }

    #[test]
    fn apery_set_and_frobenius(gens in prop::collection::vec(2u64..30, 2..5)) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap().normalized();
        let m = h.multiplicity();
        let ap = h.apery_set(m).unwrap();
        prop_assert_eq!(ap.len() as u64, m);
        let mut residues: Vec<u64> = ap.iter().map(|w| w % m).collect();
        residues.sort_unstable();
        prop_assert_eq!(residues, (0..m).collect::<Vec<_>>());
        for &w in &ap {
            prop_assert!(h.contains(w));
            prop_assert!(w < m || !h.contains(w - m));
        }
        let f = h.frobenius_number().unwrap();
        prop_assert_eq!(f, *ap.iter().max().unwrap() as i64 - m as i64);
        if f > 0 {
            prop_assert!(!h.contains(f as u64));
        }
        prop_assert!(((f + 1)..(f + 1 + m as i64)).all(|n| h.contains(n as u64)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tangent_cone_hilbert_matches_semigroup(gens in prop::collection::vec(3u64..20, 3..5)) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(h.gcd() == 1 && h.mu() >= 2);
        let tc = tangent_cone(&h, &TangentConeOptions::default()).unwrap();
        let got = hilbert_function(h.mu(), tc.star(), 30).unwrap();
        prop_assert_eq!(got, h.tangent_hilbert_oracle(30).unwrap());
        prop_assert!(tc.mu_i() <= tc.mu_star());
    }

    #[test]
    fn shifted_rows_have_base_length_past_threshold(base in prop::collection::btree_set(0u64..10, 2..4), extra in 1u64..6) {
        let base: Vec<u64> = base.into_iter().collect();
        let (a1, ar) = (base[0], *base.last().unwrap());
        let k = (ar + 1).saturating_sub(2 * a1) + extra;
        let raw: Vec<u64> = base.iter().map(|a| a + k).collect();
        let h = NumericalSemigroup::from_generators(&raw).unwrap();
        prop_assert_eq!(h.mu(), base.len());
    }
}
