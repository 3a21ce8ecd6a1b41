//! Defining ideals of numerical semigroup rings and the structure data of
//! 3-generated semigroups.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{eliminate_with_order, minimal_generators, Budget, GbOptions};
use crate::poly::{Grading, MonomialOrder, Polynomial};
use crate::semigroup::NumericalSemigroup;

/// Order used to eliminate `t` (index `r`) from `x_i - t^{a_i}`: `t` in its
/// own front block, weighted degrevlex with weights `a_i` on the x-block.
fn elimination_order(weights: &[u64]) -> MonomialOrder {
    let r = weights.len();
    let vars: Vec<usize> = (0..r).collect();
    MonomialOrder::Block {
        front: Box::new(MonomialOrder::DegRevLex { vars: vec![r] }),
        back: Box::new(MonomialOrder::Weighted {
            vars: vars.clone(),
            weights: weights.to_vec(),
            tie: Box::new(MonomialOrder::DegRevLex { vars }),
        }),
    }
}

/// Reduced Gröbner basis of `I_H` in `x1..xr`, under the `H`-weighted
/// degrevlex order.
pub fn toric_groebner_basis(h: &NumericalSemigroup, budget: &Budget) -> Result<Vec<Polynomial>> {
    let a = h.normalized().generators().to_vec();
    let r = a.len();
    if r == 1 {
        return Ok(Vec::new());
    }
    let n = r + 1;
    let gens: Vec<Polynomial> = a
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            let mut plus = vec![0u32; n];
            plus[i] = 1;
            let mut minus = vec![0u32; n];
            minus[r] = exp(ai)?;
            Ok(Polynomial::binomial(&plus, &minus))
        })
        .collect::<Result<_>>()?;
    let mut weights = a.clone();
    weights.push(1);
    let opts = GbOptions::weighted(*budget, weights);
    let keep: Vec<usize> = (0..r).collect();
    let out: Vec<Polynomial> = eliminate_with_order(&gens, &[r], &elimination_order(&a), &opts)?
        .into_iter()
        .map(|g| g.restrict_vars(&keep))
        .collect::<Result<_>>()?;
    for g in &out {
        if !vanishes_on_curve(g, &a) {
            return Err(Error::Consistency(format!(
                "toric generator {g} does not vanish on the curve"
            )));
        }
    }
    Ok(out)
}

/// Minimal generators of `I_H = ker(x_i -> t^{a_i})`, sorted by `H`-degree.
pub fn toric_ideal(h: &NumericalSemigroup) -> Result<Vec<Polynomial>> {
    toric_ideal_with(h, &Budget::default())
}

pub fn toric_ideal_with(h: &NumericalSemigroup, budget: &Budget) -> Result<Vec<Polynomial>> {
    let gb = toric_groebner_basis(h, budget)?;
    if gb.is_empty() {
        return Ok(gb);
    }
    let grading = h_grading(h);
    Ok(minimal_generators(&gb, &grading, budget)?
        .into_iter()
        .map(|g| g.normalize_sign())
        .collect())
}

/// The grading `deg x_i = a_i / gcd`.
pub fn h_grading(h: &NumericalSemigroup) -> Grading {
    Grading::new(h.normalized().generators().to_vec()).expect("generators are positive")
}

/// Does `f(t^{a_1}, ..., t^{a_r})` vanish identically?
pub fn vanishes_on_curve(f: &Polynomial, a: &[u64]) -> bool {
    f.substitute_univariate(a).values().all(|c| c.is_zero())
}

fn exp(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::invalid(format!("exponent {v} too large")))
}

/// Structure data of a 3-generated semigroup: `c_i n_i = sum_j r_ij n_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HerzogData {
    pub n: [u64; 3],
    pub c: [u64; 3],
    /// `r[i][j]`, diagonal unused (zero).
    pub r: [[u64; 3]; 3],
}

impl HerzogData {
    /// Checks `c_i n_i = sum_j r_ij n_j` and, when all `r_ij > 0`, the
    /// column-sum identities `c_j = sum_{i != j} r_ij`.
    pub fn check(&self) -> bool {
        let rows = (0..3).all(|i| {
            self.c[i] * self.n[i]
                == (0..3)
                    .filter(|&j| j != i)
                    .map(|j| self.r[i][j] * self.n[j])
                    .sum::<u64>()
        });
        let all_positive = (0..3).all(|i| (0..3).all(|j| i == j || self.r[i][j] > 0));
        let sums = !all_positive
            || (0..3).all(|j| {
                self.c[j]
                    == (0..3)
                        .filter(|&i| i != j)
                        .map(|i| self.r[i][j])
                        .sum::<u64>()
            });
        rows && sums
    }
}

/// `c_i` and a witness decomposition `r_ij` for each row. When several
/// decompositions exist the one with the smallest coefficient on the
/// lower-indexed variable is chosen.
pub fn herzog_data(h: &NumericalSemigroup) -> Result<HerzogData> {
    if h.mu() != 3 {
        return Err(Error::invalid(format!("{h} is not 3-generated")));
    }
    let g = h.generators();
    let n = [g[0], g[1], g[2]];
    let mut c = [0u64; 3];
    let mut r = [[0u64; 3]; 3];
    for i in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
        let (j, k) = (others[0], others[1]);
        let mut ci = 1u64;
        loop {
            let target = ci * n[i];
            let hit = (0..=target / n[j]).find(|&a| (target - a * n[j]).is_multiple_of(n[k]));
            if let Some(a) = hit {
                c[i] = ci;
                r[i][j] = a;
                r[i][k] = (target - a * n[j]) / n[k];
                break;
            }
            ci += 1;
        }
    }
    let d = HerzogData { n, c, r };
    debug_assert!(d.check());
    Ok(d)
}

/// `f_1 = x^{c_1} - y^{r_12} z^{r_13}`, `f_2 = y^{c_2} - x^{r_21} z^{r_23}`,
/// `f_3 = z^{c_3} - x^{r_31} y^{r_32}`.
pub fn herzog_generators(d: &HerzogData) -> Result<[Polynomial; 3]> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(3);
    for i in 0..3 {
        let mut plus = [0u32; 3];
        plus[i] = exp(d.c[i])?;
        let mut minus = [0u32; 3];
        for j in (0..3).filter(|&j| j != i) {
            minus[j] = exp(d.r[i][j])?;
        }
        out.push(Polynomial::binomial(&plus, &minus));
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::poly::Ring;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn same(a: &[Polynomial], b: &[Polynomial]) -> bool {
        ideal_equal(a, b, &Budget::default()).unwrap()
    }

    #[test]
    fn small_toric_ideals() {
        let r2 = Ring::new(&["x", "y"]);
        let i = toric_ideal(&sg(&[2, 3])).unwrap();
        assert_eq!(i, vec![r2.parse("x^3 - y^2").unwrap().normalize_sign()]);

        let r = Ring::xyz();
        let i = toric_ideal(&sg(&[4, 5, 11])).unwrap();
        assert_eq!(i.len(), 3);
        assert!(same(
            &i,
            &r.parse_list(["x^4 - y*z", "y^3 - x*z", "z^2 - x^3*y^2"])
                .unwrap()
        ));

        let i = toric_ideal(&sg(&[3, 5, 7])).unwrap();
        assert_eq!(i.len(), 3);
        assert!(same(
            &i,
            &r.parse_list(["x^4 - y*z", "y^2 - x*z", "z^2 - x^3*y"])
                .unwrap()
        ));

        assert!(toric_ideal(&sg(&[5])).unwrap().is_empty());
    }

    #[test]
    fn gcd_is_divided_out() {
        let a = toric_ideal(&sg(&[8, 10, 22])).unwrap();
        let b = toric_ideal(&sg(&[4, 5, 11])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn herzog() {
        let d = herzog_data(&sg(&[4, 5, 11])).unwrap();
        assert_eq!(d.c, [4, 3, 2]);
        assert_eq!(d.r[0], [0, 1, 1]);
        assert_eq!(d.r[1], [1, 0, 1]);
        assert_eq!(d.r[2], [3, 2, 0]);
        assert!(d.check());

        let d = herzog_data(&sg(&[3, 5, 7])).unwrap();
        assert_eq!(d.c, [4, 2, 2]);
        assert_eq!(d.r, [[0, 1, 1], [1, 0, 1], [3, 1, 0]]);
        let f = herzog_generators(&d).unwrap();
        let r = Ring::xyz();
        assert_eq!(f[0], r.parse("x^4 - y*z").unwrap());
        assert_eq!(f[1], r.parse("y^2 - x*z").unwrap());
        assert_eq!(f[2], r.parse("z^2 - x^3*y").unwrap());
        assert!(same(&f, &toric_ideal(&sg(&[3, 5, 7])).unwrap()));

        assert!(herzog_data(&sg(&[2, 3])).is_err());
    }

    #[test]
    fn degenerate_herzog_case() {
        // 2*6 = 12 = 3*4, so r_13 = 0
        let h = sg(&[4, 6, 7]);
        let d = herzog_data(&h).unwrap();
        assert!(d.check());
        let f = herzog_generators(&d).unwrap();
        assert!(same(&f, &toric_ideal(&h).unwrap()));
    }
}
