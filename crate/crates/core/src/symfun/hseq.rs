use alloc::vec::Vec;

use super::bases::{h_to_p, jt_index};
use super::partition::{partitions_of, Partition};
use super::plethysm::pleth_series;
use crate::exactalg::{determinant, BiPoly, TSeries};
use crate::{Error, Result};

/// The sequence `(h_k ⊙ F)_{k=0..N}` for a series `F` with zero `t⁰`
/// coefficient, truncated at order `N`.
///
/// Because `F` has `t`-valuation at least 1, `h_k ⊙ F` vanishes to order
/// `N` for `k > N`, so the sequence determines every `hₙ ⊙ F` and every
/// `s_λ ⊙ F`. The combinators implement the sum, multiple, negation and
/// product rules of plethysm without going back to `F` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeq {
    terms: Vec<TSeries>,
}

impl HSeq {
    pub fn of_series(arg: &TSeries) -> Result<HSeq> {
        if !arg.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let terms = (0..=arg.order() as u32)
            .map(|k| pleth_series(&h_to_p(k), arg))
            .collect::<Result<Vec<_>>>()?;
        Ok(HSeq { terms })
    }

    /// `h_k ⊙ (g · t^t_power)` for `t_power ≥ 1`.
    pub fn of_concrete(g: &BiPoly, t_power: usize, order: usize) -> Result<HSeq> {
        if t_power == 0 {
            return Err(Error::ZeroArgument("t-power of an h-sequence argument"));
        }
        HSeq::of_series(&TSeries::monomial(order, g.clone(), t_power))
    }

    /// The sequence of the zero argument: `h₀ = 1`, all others 0.
    pub fn unit(order: usize) -> HSeq {
        let mut terms = alloc::vec![TSeries::zero(order); order + 1];
        terms[0] = TSeries::one(order);
        HSeq { terms }
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[TSeries] {
        &self.terms
    }

    pub fn get(&self, k: usize) -> TSeries {
        self.terms.get(k).cloned().unwrap_or_else(|| TSeries::zero(self.order()))
    }

    /// `hₙ ⊙ (F + G) = Σ_k (h_k ⊙ F)(h_{n−k} ⊙ G)`.
    pub fn sum(&self, other: &HSeq) -> HSeq {
        let order = self.order();
        let terms = (0..=order)
            .map(|n| {
                let mut acc = TSeries::zero(order);
                for k in 0..=n {
                    acc = &acc + &(&self.terms[k] * &other.terms[n - k]);
                }
                acc
            })
            .collect();
        HSeq { terms }
    }

    /// `hₙ ⊙ (m·F)` for any integer `m`: repeated sum rule, with a negation
    /// for `m < 0`.
    pub fn multiple(&self, m: i64) -> HSeq {
        let mut acc = HSeq::unit(self.order());
        for _ in 0..m.unsigned_abs() {
            acc = acc.sum(self);
        }
        if m < 0 {
            acc.negated()
        } else {
            acc
        }
    }

    /// `hₙ ⊙ (−F) = (−1)ⁿ eₙ ⊙ F`, with `eₙ ⊙ F` the column Schur determinant.
    pub fn negated(&self) -> HSeq {
        let terms = (0..=self.order() as u32)
            .map(|n| {
                let e = self.schur(&Partition::column(n));
                if n % 2 == 1 {
                    -&e
                } else {
                    e
                }
            })
            .collect();
        HSeq { terms }
    }

    /// `s_λ ⊙ F = det(h_{λᵢ−i+j} ⊙ F)`.
    pub fn schur(&self, lambda: &Partition) -> TSeries {
        let l = lambda.len();
        let order = self.order();
        let matrix: Vec<Vec<TSeries>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| jt_index(lambda, i, j).map_or_else(|| TSeries::zero(order), |k| self.get(k as usize)))
                    .collect()
            })
            .collect();
        determinant(&matrix, &TSeries::one(order))
    }

    /// `hₙ ⊙ (F·G) = Σ_{|λ|=n} (s_λ ⊙ F)(s_λ ⊙ G)`.
    pub fn product(&self, other: &HSeq) -> HSeq {
        let order = self.order();
        let terms = (0..=order as u32)
            .map(|n| {
                let mut acc = TSeries::zero(order);
                for lambda in partitions_of(n) {
                    let a = self.schur(&lambda);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&a * &other.schur(&lambda));
                }
                acc
            })
            .collect();
        HSeq { terms }
    }

    /// `Σₙ hₙ ⊙ F`, i.e. the plethystic exponential of `F`.
    pub fn total(&self) -> TSeries {
        self.terms
            .iter()
            .fold(TSeries::zero(self.order()), |acc, s| &acc + s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::pleth_concrete;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn sum_rule_matches_direct() {
        let f = p("1+u*v");
        let g = p("u+v");
        let lhs = HSeq::of_concrete(&(&f + &g), 1, 6).unwrap();
        let rhs = HSeq::of_concrete(&f, 1, 6).unwrap().sum(&HSeq::of_concrete(&g, 1, 6).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn negation_matches_direct() {
        let g = p("1 - u + 2*u*v");
        let neg = HSeq::of_concrete(&g, 1, 5).unwrap().negated();
        for n in 0..=5 {
            assert_eq!(neg.get(n), pleth_concrete(&h_to_p(n as u32), &-&g, 1, 5).unwrap());
        }
    }

    #[test]
    fn multiples() {
        let g = p("u + v^2");
        let base = HSeq::of_concrete(&g, 1, 5).unwrap();
        for m in -2..=3i64 {
            let direct = HSeq::of_concrete(&g.scale(&crate::exactalg::int(m)), 1, 5).unwrap();
            assert_eq!(base.multiple(m), direct, "m = {m}");
        }
    }

    #[test]
    fn product_rule_matches_direct() {
        let f = p("1+u*v");
        let g = p("u+v");
        let lhs = HSeq::of_concrete(&(&f * &g), 2, 8).unwrap();
        let rhs = HSeq::of_concrete(&f, 1, 8).unwrap().product(&HSeq::of_concrete(&g, 1, 8).unwrap());
        assert_eq!(lhs, rhs);
    }
}
