use crate::poly::Polynomial;

/// Does every inhomogeneous generator have the shape `x_1^α u - v x_r^β`
/// with `α, β > 0`, `u, v` monomials in the middle variables, and the
/// `x_1`-side of larger degree? Homogeneous generators are ignored.
pub fn vu_shape_check(gens: &[Polynomial]) -> bool {
    gens.iter().all(|g| {
        let degs: Vec<u64> = g.terms().iter().map(|t| t.mono.degree()).collect();
        if degs.windows(2).all(|w| w[0] == w[1]) {
            return true;
        }
        if g.len() != 2 {
            return false;
        }
        let last = g.nvars() - 1;
        let (p, q) = (&g.terms()[0].mono, &g.terms()[1].mono);
        let shaped = |a: &crate::poly::Monomial, b: &crate::poly::Monomial| {
            a.exp(0) > 0
                && a.exp(last) == 0
                && b.exp(last) > 0
                && b.exp(0) == 0
                && a.degree() > b.degree()
        };
        last > 0 && (shaped(p, q) || shaped(q, p))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn shapes() {
        let r2 = Ring::xyz();
        let p = |s: &str| Ring::new(&["x", "y"]).parse(s).unwrap();
        assert!(vu_shape_check(&[p("x^3 - y^2")]));
        assert!(!vu_shape_check(&[p("x^2 - y^3")]));
        let q = |s: &str| r2.parse(s).unwrap();
        assert!(vu_shape_check(&[q("x*z - y^2")]));
        assert!(vu_shape_check(&[q("x^4*y - z^2")]));
        assert!(!vu_shape_check(&[q("y^4 - x*z")]));
        assert!(!vu_shape_check(&[q("x^3*z - y^3")]));
    }
}
