use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::rational::Rational;
use super::ring::CommRing;
use crate::{Error, Result};

/// Power series in `t` with [`BiPoly`] coefficients, truncated after `tᴺ`.
///
/// Binary operations require both sides to carry the same order; the
/// `std::ops` impls panic on a mismatch, the `try_*` methods return
/// [`Error::OrderMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TSeries {
    coeffs: Vec<BiPoly>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries {
            coeffs: vec![BiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TSeries::zero(order);
        s.coeffs[0] = BiPoly::one();
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn from_coeffs(order: usize, coeffs: Vec<BiPoly>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BiPoly::zero());
        TSeries { coeffs }
    }

    /// `poly · t^t_power`, zero if `t_power > order`.
    pub fn monomial(order: usize, poly: BiPoly, t_power: usize) -> Self {
        let mut s = TSeries::zero(order);
        if t_power <= order {
            s.coeffs[t_power] = poly;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, poly: BiPoly) {
        self.coeffs[k] = poly;
    }

    pub fn add_to_coeff(&mut self, k: usize, poly: &BiPoly) {
        self.coeffs[k] += poly;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BiPoly::is_zero)
    }

    /// Lowers the truncation order; orders above the current one are clamped.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &TSeries) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &TSeries) -> Result<TSeries> {
        self.check_order(other)?;
        Ok(TSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &TSeries) -> Result<TSeries> {
        self.check_order(other)?;
        Ok(TSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &TSeries) -> Result<TSeries> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = TSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &BiPoly) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|q| q * p).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> TSeries {
        let mut acc = TSeries::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `s(uᵐ, vᵐ, tᵐ)`.
    pub fn substitute_powers(&self, m: usize) -> TSeries {
        assert!(m >= 1, "substitute_powers needs m >= 1");
        let n = self.order();
        let mut out = TSeries::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * m > n {
                break;
            }
            out.coeffs[k * m] = c.substitute_powers(m as u32);
        }
        out
    }

    /// `s(u, v, −t)`.
    pub fn negate_t(&self) -> TSeries {
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `Σ sᵏ/k!`; requires a zero `t⁰` coefficient.
    pub fn exp(&self) -> Result<TSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut g = TSeries::one(n);
        // k·g_k = Σ_{j=1..k} j·f_j·g_{k−j}
        for k in 1..=n {
            let mut acc = BiPoly::zero();
            for j in 1..=k {
                let f = &self.coeffs[j];
                if f.is_zero() || g.coeffs[k - j].is_zero() {
                    continue;
                }
                acc += &(f * &g.coeffs[k - j]).scale(&Rational::from_integer(BigInt::from(j)));
            }
            g.coeffs[k] = acc.scale(&Rational::new(BigInt::one(), BigInt::from(k)));
        }
        Ok(g)
    }

    /// Inverse of [`TSeries::exp`]; requires `t⁰` coefficient exactly 1.
    pub fn log(&self) -> Result<TSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut f = TSeries::zero(n);
        // k·f_k = k·g_k − Σ_{j=1..k−1} j·f_j·g_{k−j}
        for k in 1..=n {
            let mut acc = self.coeffs[k].scale(&Rational::from_integer(BigInt::from(k)));
            for j in 1..k {
                if f.coeffs[j].is_zero() || self.coeffs[k - j].is_zero() {
                    continue;
                }
                acc -= &(&f.coeffs[j] * &self.coeffs[k - j])
                    .scale(&Rational::from_integer(BigInt::from(j)));
            }
            f.coeffs[k] = acc.scale(&Rational::new(BigInt::one(), BigInt::from(k)));
        }
        Ok(f)
    }
}

impl CommRing for TSeries {
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Add<&TSeries> for &TSeries {
    type Output = TSeries;
    fn add(self, rhs: &TSeries) -> TSeries {
        self.try_add(rhs).expect("series truncation orders differ")
    }
}

impl Sub<&TSeries> for &TSeries {
    type Output = TSeries;
    fn sub(self, rhs: &TSeries) -> TSeries {
        self.try_sub(rhs).expect("series truncation orders differ")
    }
}

impl Mul<&TSeries> for &TSeries {
    type Output = TSeries;
    fn mul(self, rhs: &TSeries) -> TSeries {
        self.try_mul(rhs).expect("series truncation orders differ")
    }
}

impl Neg for &TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Text form: `c0 + (c1)*t + (c2)*t^2 ...`, zero coefficients skipped.
impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// One factor `(1 − monomial·t^t_power)^exponent` of a product expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerFactor {
    /// Single term, coefficient included (`−u` encodes the factor `1 + u·t`).
    pub monomial: BiPoly,
    pub t_power: usize,
    pub exponent: i64,
}

impl PowerFactor {
    pub fn new(monomial: BiPoly, t_power: usize, exponent: i64) -> Self {
        PowerFactor {
            monomial,
            t_power,
            exponent,
        }
    }
}

/// Generalized binomial coefficient `C(e, k)` for integer `e`.
fn binomial(e: i64, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= Rational::new(BigInt::from(e) - BigInt::from(i), BigInt::from(i + 1));
    }
    acc
}

/// Expands `Π (1 − mᵢ·t^{pᵢ})^{eᵢ}` to order `order` in `t`.
pub fn expand_product_of_powers(factors: &[PowerFactor], order: usize) -> Result<TSeries> {
    let mut acc = TSeries::one(order);
    for factor in factors {
        let Some((m, c)) = factor.monomial.as_single_term() else {
            return Err(Error::NotAMonomial);
        };
        if factor.t_power == 0 {
            return Err(Error::ZeroArgument("factor t-power"));
        }
        if factor.exponent == 0 {
            continue;
        }
        let neg_c = -c;
        let mut s = TSeries::zero(order);
        let mut k = 0usize;
        while k * factor.t_power <= order {
            let coeff = binomial(factor.exponent, k);
            if coeff.is_zero() {
                break;
            }
            let term = BiPoly::term(
                coeff * num_traits::pow(neg_c.clone(), k),
                m.u * k as u32,
                m.v * k as u32,
            );
            s.coeffs[k * factor.t_power] = term;
            k += 1;
        }
        acc = &acc * &s;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use alloc::vec;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn t(order: usize) -> TSeries {
        TSeries::monomial(order, BiPoly::one(), 1)
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TSeries::zero(3).exp().unwrap(), TSeries::one(3));
        let e = t(3).exp().unwrap();
        let expected = TSeries::from_coeffs(
            3,
            vec![BiPoly::one(), BiPoly::one(), BiPoly::constant(rat(1, 2)), BiPoly::constant(rat(1, 6))],
        );
        assert_eq!(e, expected);
        assert_eq!(TSeries::one(2).exp(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn log_examples() {
        assert_eq!(TSeries::one(4).log().unwrap(), TSeries::zero(4));
        let one_plus_t = &TSeries::one(2) + &t(2);
        let expected = TSeries::from_coeffs(2, vec![BiPoly::zero(), BiPoly::one(), BiPoly::constant(rat(-1, 2))]);
        assert_eq!(one_plus_t.log().unwrap(), expected);
        assert_eq!(one_plus_t.exp(), Err(Error::NonzeroConstantTerm));
        assert_eq!(TSeries::zero(2).log(), Err(Error::ConstantTermNotOne));
        assert_eq!(one_plus_t.log().unwrap().exp().unwrap(), one_plus_t);
        let s = TSeries::monomial(5, p("1+u*v"), 1);
        assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn product_of_powers_examples() {
        let geo = expand_product_of_powers(&[PowerFactor::new(BiPoly::one(), 1, -1)], 2).unwrap();
        assert_eq!(geo, TSeries::from_coeffs(2, vec![BiPoly::one(); 3]));

        let two = expand_product_of_powers(
            &[
                PowerFactor::new(BiPoly::one(), 1, -1),
                PowerFactor::new(p("u*v"), 1, -1),
            ],
            2,
        )
        .unwrap();
        assert_eq!(two, TSeries::from_coeffs(2, vec![BiPoly::one(), p("1+u*v"), p("1+u*v+u^2*v^2")]));

        let lin = expand_product_of_powers(&[PowerFactor::new(-BiPoly::u(), 1, 1)], 3).unwrap();
        assert_eq!(lin, TSeries::from_coeffs(3, vec![BiPoly::one(), BiPoly::u()]));

        assert_eq!(
            expand_product_of_powers(&[PowerFactor::new(p("1+u"), 1, 1)], 3),
            Err(Error::NotAMonomial)
        );
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        assert_eq!(
            TSeries::one(2).try_add(&TSeries::one(3)),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
        assert!(TSeries::one(2).try_mul(&TSeries::one(3)).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(-2, 2), int(3));
        assert_eq!(binomial(3, 4), int(0));
    }

    #[test]
    fn substitute_and_negate() {
        let s = TSeries::from_coeffs(4, vec![BiPoly::one(), p("u"), p("v")]);
        assert_eq!(
            s.substitute_powers(2),
            TSeries::from_coeffs(4, vec![BiPoly::one(), BiPoly::zero(), p("u^2"), BiPoly::zero(), p("v^2")])
        );
        assert_eq!(s.negate_t(), TSeries::from_coeffs(4, vec![BiPoly::one(), p("-u"), p("v")]));
    }
}
