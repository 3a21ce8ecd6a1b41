use super::{GbOptions, GroebnerBasis};
use crate::error::{Error, Result};
use crate::poly::{Grading, Monomial, MonomialOrder, Polynomial};

/// Hilbert function of `S/I`, `S = K[x1..xn]` standard graded, degrees `0..=dmax`.
///
/// Computed from the monomial ideal of leading terms of a degrevlex basis.
pub fn hilbert_function(nvars: usize, gens: &[Polynomial], dmax: usize) -> Result<Vec<u64>> {
    let grading = Grading::standard(nvars);
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for g in &gens {
        if g.nvars() != nvars {
            return Err(Error::RingMismatch {
                left: nvars,
                right: g.nvars(),
            });
        }
        if !g.is_homogeneous(&grading) {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    if gens.is_empty() {
        return Ok(monomial_hilbert_function(nvars, &[], dmax));
    }
    let gb = GroebnerBasis::compute_with(
        &gens,
        &MonomialOrder::degrevlex(nvars),
        &GbOptions::default(),
    )?;
    Ok(monomial_hilbert_function(
        nvars,
        &gb.leading_monomials(),
        dmax,
    ))
}

/// Hilbert function of `S/M` for a monomial ideal `M`.
pub fn monomial_hilbert_function(nvars: usize, gens: &[Monomial], dmax: usize) -> Vec<u64> {
    let num = monomial_hilbert_numerator(nvars, gens);
    // coefficient of t^d in N(t) / (1 - t)^n
    let binom = |top: i128, k: usize| -> i128 {
        if top < 0 {
            return 0;
        }
        let mut r: i128 = 1;
        for i in 0..k as i128 {
            r = r * (top - i) / (i + 1);
        }
        r
    };
    (0..=dmax)
        .map(|d| {
            let mut s: i128 = 0;
            for (j, &c) in num.iter().enumerate() {
                if j > d || c == 0 {
                    continue;
                }
                let m = (d - j) as i128;
                s += c * if nvars == 0 {
                    i128::from(m == 0)
                } else {
                    binom(m + nvars as i128 - 1, nvars - 1)
                };
            }
            debug_assert!(s >= 0);
            s as u64
        })
        .collect()
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `S/M`,
/// as a coefficient vector.
pub fn monomial_hilbert_numerator(nvars: usize, gens: &[Monomial]) -> Vec<i128> {
    let gens: Vec<Vec<u32>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    let mut out = numerator(minimalize(gens), nvars);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u64).sum::<u64>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|k| divides(k, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(d: usize) -> Vec<i128> {
    let mut v = vec![0; d + 1];
    v[0] += 1;
    v[d] -= 1;
    v
}

/// Pivot recursion: `N(M) = N(M + (p)) + t^deg(p) N(M : p)` with `p` a
/// pure power of the most frequent variable.
fn numerator(gens: Vec<Vec<u32>>, nvars: usize) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    let supp: Vec<u64> = gens
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .collect();
    let coprime = (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| supp[i] & supp[j] == 0));
    if coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let d: u32 = g.iter().sum();
            poly_mul(&acc, &one_minus_t_pow(d as usize))
        });
    }
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 && g.iter().filter(|&&x| x > 0).count() > 1 {
                count[i] += 1;
            }
        }
    }
    let v = (0..nvars)
        .max_by_key(|&i| (count[i], std::cmp::Reverse(i)))
        .unwrap();
    // smallest exponent of x_v among mixed generators: x_v^e is not in M by
    // minimality, and M : x_v^e strictly drops x_v from that generator
    let e = gens
        .iter()
        .filter(|g| g[v] > 0 && g.iter().filter(|&&x| x > 0).count() > 1)
        .map(|g| g[v])
        .min()
        .unwrap();

    // M : x_v^e
    let quot: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut q = g.clone();
            q[v] = q[v].saturating_sub(e);
            q
        })
        .collect();
    // M + (x_v^e)
    let mut plus = gens.clone();
    let mut p = vec![0u32; nvars];
    p[v] = e;
    plus.push(p);

    let a = numerator(minimalize(plus), nvars);
    let b = numerator(minimalize(quot), nvars);
    let mut out = vec![0i128; a.len().max(b.len() + e as usize)];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i + e as usize] += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn brute(nvars: usize, gens: &[Monomial], dmax: usize) -> Vec<u64> {
        // enumerate all monomials of each degree
        fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == n - 1 {
                cur.push(d);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for e in 0..=d {
                cur.push(e);
                rec(n, d - e, cur, out);
                cur.pop();
            }
        }
        (0..=dmax)
            .map(|d| {
                let mut all = Vec::new();
                rec(nvars, d as u32, &mut Vec::new(), &mut all);
                all.iter()
                    .filter(|m| !gens.iter().any(|g| divides(g.exponents(), m)))
                    .count() as u64
            })
            .collect()
    }

    #[test]
    fn frobenius_tangent_cone() {
        let r = Ring::xyz();
        let gens = r.parse_list(["y*z", "x*z", "z^2", "y^4"]).unwrap();
        assert_eq!(
            hilbert_function(3, &gens, 6).unwrap(),
            vec![1, 3, 3, 4, 4, 4, 4]
        );
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(hilbert_function(2, &[], 3).unwrap(), vec![1, 2, 3, 4]);
        let r = Ring::new(&["x", "y"]);
        assert_eq!(
            hilbert_function(2, &r.parse_list(["y^2"]).unwrap(), 3).unwrap(),
            vec![1, 2, 2, 2]
        );
        assert!(hilbert_function(2, &r.parse_list(["x + y^2"]).unwrap(), 3).is_err());
        assert_eq!(
            hilbert_function(2, &r.parse_list(["1"]).unwrap(), 2).unwrap(),
            vec![0, 0, 0]
        );
    }

    #[test]
    fn non_monomial_input() {
        let r = Ring::new(&["x", "y", "z", "w"]);
        let cubic = r
            .parse_list(["x*z - y^2", "y*w - z^2", "x*w - y*z"])
            .unwrap();
        // twisted cubic: 3d + 1
        assert_eq!(
            hilbert_function(4, &cubic, 5).unwrap(),
            vec![1, 4, 7, 10, 13, 16]
        );
    }

    #[test]
    fn matches_brute_force() {
        let cases: Vec<Vec<Vec<u32>>> = vec![
            vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 3], vec![1, 1, 1]],
            vec![
                vec![3, 0, 0, 0],
                vec![1, 1, 0, 1],
                vec![0, 2, 2, 0],
                vec![0, 0, 1, 1],
            ],
            vec![vec![1, 1], vec![2, 0]],
            vec![vec![0, 0, 4], vec![2, 2, 0], vec![1, 0, 1]],
        ];
        for c in cases {
            let n = c[0].len();
            let gens: Vec<Monomial> = c.iter().map(|e| Monomial::from_exponents(e)).collect();
            assert_eq!(
                monomial_hilbert_function(n, &gens, 10),
                brute(n, &gens, 10),
                "{c:?}"
            );
        }
    }
}
