use num_bigint::BigInt;
use num_traits::One;

use super::diamond::{serre_dual_transform, validate_symmetries, HodgeDiamond};
use crate::exactalg::{BiPoly, Rational};
use crate::symfun::{Partition, SymFun};
use crate::{Error, Result};

fn half_e2() -> SymFun {
    // uv = (p₁² − p₂)/2 in two variables
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    &SymFun::p_lambda(Partition::from_unsorted(alloc::vec![1, 1])).scale(&half) - &SymFun::p(2).scale(&half)
}

/// Writes a `u ↔ v` symmetric polynomial in the two-variable power sums
/// `p_r = uʳ + vʳ`.
///
/// Uses `uᵃvᵇ + uᵇvᵃ = p_a p_b − p_{a+b}` for `a > b ≥ 1`, `uᵃ + vᵃ = p_a`,
/// and `(uv)ᵃ = ((p₁² − p₂)/2)ᵃ`.
pub fn two_var_power_sum_expand(f: &BiPoly) -> Result<SymFun> {
    if !f.is_uv_symmetric() {
        return Err(Error::AsymmetricPolynomial);
    }
    let mut out = SymFun::zero();
    for (m, c) in f.terms() {
        let (a, b) = (m.u, m.v);
        let piece = if a == b {
            half_e2().pow(a)
        } else if a > b {
            if b == 0 {
                SymFun::p(a)
            } else {
                &SymFun::p_lambda(Partition::from_unsorted(alloc::vec![a, b])) - &SymFun::p(a + b)
            }
        } else {
            // the mirror term carries the same coefficient
            continue;
        };
        out = &out + &piece.scale(c);
    }
    Ok(out)
}

/// Evaluates a symmetric function at two variables: `p_r ↦ uʳ + vʳ`.
pub fn two_var_eval(f: &SymFun) -> BiPoly {
    let mut out = BiPoly::zero();
    for (lambda, c) in f.terms() {
        let mut term = BiPoly::constant(c.clone());
        for &r in lambda.parts() {
            term = term * (BiPoly::monomial(r, 0) + BiPoly::monomial(0, r));
        }
        out += &term;
    }
    out
}

/// Both sides of `(uv)ⁿ ē(u⁻¹, v⁻¹) = ē(u, v)` in two-variable power sums,
/// where `ē(u, v) = e(−u, −v)` is the Hodge-Deligne polynomial.
pub fn serre_duality_power_sum_relation(d: &HodgeDiamond) -> Result<(SymFun, SymFun)> {
    let report = validate_symmetries(d);
    if !report.hodge_symmetric {
        return Err(Error::AsymmetricDiamond("Hodge symmetry"));
    }
    if !report.serre_dual {
        return Err(Error::AsymmetricDiamond("Serre duality"));
    }
    let e = d.e_polynomial(false);
    let lhs = two_var_power_sum_expand(&serre_dual_transform(&e, d.dim())?)?;
    let rhs = two_var_power_sum_expand(&e)?;
    Ok((lhs, rhs))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use alloc::string::ToString;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(two_var_power_sum_expand(&p("u*v^2 + u^2*v")).unwrap().to_string(), "p2*p1 - p3");
        assert_eq!(two_var_power_sum_expand(&p("u*v")).unwrap().to_string(), "1/2*p1^2 - 1/2*p2");
        let sq = two_var_power_sum_expand(&p("u^2*v^2")).unwrap();
        assert_eq!(sq.coeff(&Partition::from_unsorted(alloc::vec![1, 1, 1, 1])), rat(1, 4));
        assert_eq!(sq.coeff(&Partition::from_unsorted(alloc::vec![2, 1, 1])), rat(-1, 2));
        assert_eq!(sq.coeff(&Partition::from_unsorted(alloc::vec![2, 2])), rat(1, 4));
        assert_eq!(sq.num_terms(), 3);
        assert!(matches!(two_var_power_sum_expand(&p("u")), Err(Error::AsymmetricPolynomial)));
    }

    #[test]
    fn round_trip_all_low_degree_symmetric_monomials() {
        for a in 0..=8u32 {
            for b in 0..=a {
                if a + b > 8 {
                    continue;
                }
                let f = if a == b { BiPoly::monomial(a, a) } else { BiPoly::monomial(a, b) + BiPoly::monomial(b, a) };
                assert_eq!(two_var_eval(&two_var_power_sum_expand(&f).unwrap()), f, "({a}, {b})");
            }
        }
    }

    #[test]
    fn serre_relation() {
        let (l, r) = serre_duality_power_sum_relation(&HodgeDiamond::p1()).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.to_string(), "1 + 1/2*p1^2 - 1/2*p2");
        let (l, r) = serre_duality_power_sum_relation(&HodgeDiamond::elliptic_curve()).unwrap();
        assert_eq!(l, r);
        let bad = HodgeDiamond::new(1, [(0, 0, 1), (1, 1, 2)]).unwrap();
        assert!(matches!(serre_duality_power_sum_relation(&bad), Err(Error::AsymmetricDiamond(_))));
    }
}
