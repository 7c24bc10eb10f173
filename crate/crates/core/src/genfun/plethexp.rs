use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::chromgraph::{cs_coloring_sum, WeightedGraph};
use crate::exactalg::{expand_product_of_powers, BiPoly, PowerFactor, Rational, TSeries};
use crate::hodge::{abc_decompose, HodgeDiamond};
use crate::symfun::{e_to_p, h_to_p, pleth_concrete, HSeq};
use crate::{Error, Limits, Result};

/// Möbius function by trial division.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn recip(m: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(m))
}

/// `PE[f] = exp(Σ_{m≥1} f(uᵐ, vᵐ, tᵐ)/m)`.
pub fn pe(f: &TSeries) -> Result<TSeries> {
    if !f.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = f.order();
    let mut psi = TSeries::zero(order);
    for m in 1..=order {
        psi = &psi + &f.substitute_powers(m).scale(&recip(m));
    }
    psi.exp()
}

/// Inverse of [`pe`]: `Σ_{m≥1} μ(m)/m · log g(uᵐ, vᵐ, tᵐ)`.
pub fn pl(g: &TSeries) -> Result<TSeries> {
    if !g.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let order = g.order();
    let log = g.log()?;
    let mut out = TSeries::zero(order);
    for m in 1..=order {
        let mu = mobius(m as u64);
        if mu != 0 {
            out = &out + &log.substitute_powers(m).scale(&(recip(m) * Rational::from_integer(BigInt::from(mu))));
        }
    }
    Ok(out)
}

/// `Π_{p,q} (1 − uᵖv^q t)^{−h^{p,q}}`.
pub fn pe_product_formula(d: &HodgeDiamond, order: usize) -> TSeries {
    let factors: alloc::vec::Vec<PowerFactor> = d
        .entries()
        .map(|((p, q), h)| PowerFactor::new(BiPoly::monomial(p, q), 1, -i64::from(h)))
        .collect();
    expand_product_of_powers(&factors, order).expect("diamond factors are monomials with t-power 1")
}

/// `Σ_{n≤N} hₙ ⊙ (f·t)`.
pub fn pe_via_hn(f: &BiPoly, order: usize) -> Result<TSeries> {
    let mut out = TSeries::zero(order);
    for n in 0..=order as u32 {
        out = &out + &pleth_concrete(&h_to_p(n), f, 1, order)?;
    }
    Ok(out)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `Σ_{n≤N} (−1)ⁿ/n! · X_{Kₙ} ⊙ (−f·t)`, each term a signed coloring sum over
/// acyclic orientations of `Kₙ`.
pub fn pe_via_coloring(f: &BiPoly, order: usize, limits: &Limits) -> Result<TSeries> {
    let neg = -f;
    let mut out = TSeries::one(order);
    for n in 1..=order {
        let x = cs_coloring_sum(&WeightedGraph::complete(n), &neg, 1, order, limits)?;
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out = &out + &x.scale(&Rational::new(sign, factorial(n)));
    }
    Ok(out)
}

/// `Σ_{n≤N} eₙ ⊙ (f·t) = Π (1 + m·t)` over the monomials of `f` with multiplicity.
pub fn sign_series_via_en(f: &BiPoly, order: usize) -> Result<TSeries> {
    let mut out = TSeries::zero(order);
    for n in 0..=order as u32 {
        out = &out + &pleth_concrete(&e_to_p(n), f, 1, order)?;
    }
    Ok(out)
}

/// `Σ_{n≤N} (1/n!) · X_{Kₙ} ⊙ (f·t)`: the coloring expansion of [`pe_via_coloring`]
/// with the signs of the variables reversed.
pub fn sign_series_via_coloring(f: &BiPoly, order: usize, limits: &Limits) -> Result<TSeries> {
    let mut out = TSeries::one(order);
    for n in 1..=order {
        let x = cs_coloring_sum(&WeightedGraph::complete(n), f, 1, order, limits)?;
        out = &out + &x.scale(&Rational::new(BigInt::one(), factorial(n)));
    }
    Ok(out)
}

/// `PE[HD(X)·tⁿ]` assembled only from the h-sequences of the generators
/// `A = (1+uv)t`, `B = (u+v)t` and `C = uv·t²`, combined with the sum,
/// integer-multiple and product rules of plethysm.
pub fn pe_via_generators(d: &HodgeDiamond, order: usize) -> Result<TSeries> {
    if d.dim() == 0 {
        return Err(Error::NonzeroConstantTerm);
    }
    let abc = abc_decompose(d)?;
    let gens = [
        HSeq::of_concrete(&"1 + u*v".parse().expect("literal"), 1, order)?,
        HSeq::of_concrete(&"u + v".parse().expect("literal"), 1, order)?,
        HSeq::of_concrete(&BiPoly::monomial(1, 1), 2, order)?,
    ];
    let mut acc = HSeq::unit(order);
    for ((alpha, beta, gamma), c) in abc.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient(alloc::string::ToString::to_string(c)));
        }
        let m = c
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::NonIntegerCoefficient(alloc::string::ToString::to_string(c)))?;
        let mut term: Option<HSeq> = None;
        for (g, e) in gens.iter().zip([alpha, beta, gamma]) {
            for _ in 0..e {
                term = Some(match term {
                    None => g.clone(),
                    Some(t) => t.product(g),
                });
            }
        }
        let term = term.ok_or(Error::NonzeroConstantTerm)?;
        acc = acc.sum(&term.multiple(m));
    }
    Ok(acc.total())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn geometric_uv(order: usize) -> TSeries {
        // Σ_k (Σ_{j≤k} (uv)^j) t^k
        let coeffs = (0..=order)
            .map(|k| (0..=k as u32).fold(BiPoly::zero(), |acc, j| acc + BiPoly::monomial(j, j)))
            .collect();
        TSeries::from_coeffs(order, coeffs)
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(got, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn pe_examples() {
        assert_eq!(pe(&TSeries::zero(3)).unwrap(), TSeries::one(3));
        assert_eq!(pe(&TSeries::monomial(2, p("1+u*v"), 1)).unwrap(), geometric_uv(2));
        let ones = TSeries::from_coeffs(3, alloc::vec![BiPoly::one(); 4]);
        assert_eq!(pe(&TSeries::monomial(3, BiPoly::one(), 1)).unwrap(), ones);
        assert_eq!(pe(&TSeries::one(2)), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn pl_examples() {
        assert!(pl(&TSeries::one(4)).unwrap().is_zero());
        let ones = TSeries::from_coeffs(4, alloc::vec![BiPoly::one(); 5]);
        assert_eq!(pl(&ones).unwrap(), TSeries::monomial(4, BiPoly::one(), 1));
        assert_eq!(pl(&TSeries::zero(2)), Err(Error::ConstantTermNotOne));
        let f = TSeries::from_coeffs(4, alloc::vec![BiPoly::zero(), p("2-u"), p("u*v"), BiPoly::zero(), p("-3*v^2")]);
        assert_eq!(pl(&pe(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn three_routes_agree() {
        let lim = Limits::default();
        for d in [HodgeDiamond::p1(), HodgeDiamond::p2(), HodgeDiamond::elliptic_curve()] {
            let f = d.e_polynomial(false);
            let product = pe_product_formula(&d, 3);
            assert_eq!(pe_via_hn(&f, 3).unwrap(), product);
            assert_eq!(pe_via_coloring(&f, 3, &lim).unwrap(), product);
            assert_eq!(pe(&TSeries::monomial(3, f, 1)).unwrap(), product);
        }
        assert_eq!(pe_product_formula(&HodgeDiamond::p1(), 5), geometric_uv(5));
        assert_eq!(pe_product_formula(&HodgeDiamond::new(0, []).unwrap(), 3), TSeries::one(3));
        assert_eq!(pe_via_hn(&BiPoly::zero(), 3).unwrap(), TSeries::one(3));
        assert_eq!(pe_via_coloring(&BiPoly::zero(), 3, &lim).unwrap(), TSeries::one(3));
    }

    #[test]
    fn p2_second_coefficient_is_h2() {
        // h₂(1, uv, u²v²)
        let got = pe_product_formula(&HodgeDiamond::p2(), 2);
        assert_eq!(got.coeff(2), &p("1 + u*v + 2*u^2*v^2 + u^3*v^3 + u^4*v^4"));
    }

    #[test]
    fn sign_routes_agree() {
        let lim = Limits::default();
        for f in [p("1+u*v"), p("1+u+v+u*v"), p("1 + 2*u*v")] {
            let en = sign_series_via_en(&f, 4).unwrap();
            assert_eq!(sign_series_via_coloring(&f, 4, &lim).unwrap(), en);
        }
    }

    #[test]
    fn generators_rebuild_pe() {
        let k3 = HodgeDiamond::new(2, [(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 20), (2, 2, 1)]).unwrap();
        for d in [HodgeDiamond::p1(), HodgeDiamond::p2(), HodgeDiamond::elliptic_curve(), k3] {
            let n = d.dim() as usize;
            let direct = pe(&TSeries::monomial(4, d.e_polynomial(false), n)).unwrap();
            assert_eq!(pe_via_generators(&d, 4).unwrap(), direct, "{d:?}");
        }
    }
}
