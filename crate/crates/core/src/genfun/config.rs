use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::plethexp::mobius;
use crate::exactalg::{expand_product_of_powers, BiPoly, PowerFactor, Rational, TSeries};
use crate::hodge::HodgeDiamond;
use crate::symfun::{partitions_of, z_of, Partition};
use crate::{Error, Result};

/// Cycle type of a permutation in `Sₙ`: `n_j` cycles of length `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    partition: Partition,
}

impl CycleType {
    pub fn from_partition(partition: Partition) -> Self {
        CycleType { partition }
    }

    /// Builds the cycle type from `(j, n_j)` pairs; `n` must equal `Σ j·n_j`.
    pub fn from_counts(n: u32, counts: &[(u32, u32)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(j, nj) in counts {
            if j == 0 {
                return Err(Error::InvalidCycleType("cycle length 0".into()));
            }
            parts.extend(core::iter::repeat_n(j, nj as usize));
        }
        let partition = Partition::from_unsorted(parts);
        if partition.size() != n {
            return Err(Error::InvalidCycleType(format!(
                "cycle lengths sum to {}, expected {n}",
                partition.size()
            )));
        }
        Ok(CycleType { partition })
    }

    pub fn identity(n: u32) -> Self {
        CycleType {
            partition: Partition::from_unsorted(alloc::vec![1; n as usize]),
        }
    }

    /// All cycle types of `Sₙ`.
    pub fn all(n: u32) -> Vec<CycleType> {
        partitions_of(n).into_iter().map(CycleType::from_partition).collect()
    }

    pub fn n(&self) -> u32 {
        self.partition.size()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// `n_j`.
    pub fn count(&self, j: u32) -> u32 {
        self.partition.parts().iter().filter(|&&p| p == j).count() as u32
    }

    /// Number of permutations with this cycle type, `n!/z_λ`.
    pub fn class_size(&self) -> BigInt {
        let fact = (1..=self.n()).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
        let size = Rational::from_integer(fact) / z_of(&self.partition);
        size.to_integer()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

/// `e(e − 1)⋯(e − (n − 1))`.
pub fn conf_ordered_epoly(e: &BiPoly, n: u32) -> BiPoly {
    let mut out = BiPoly::one();
    for k in 0..n {
        out = out * (e - &BiPoly::from_int(i64::from(k)));
    }
    out
}

/// `α_j = Σ_{d | j} μ(j/d) · e(uᵈ, vᵈ)`.
pub fn alpha_j(e: &BiPoly, j: u32) -> Result<BiPoly> {
    if j == 0 {
        return Err(Error::ZeroArgument("alpha index j"));
    }
    let mut out = BiPoly::zero();
    for d in (1..=j).filter(|d| j.is_multiple_of(*d)) {
        let mu = mobius(u64::from(j / d));
        if mu != 0 {
            out += &e.substitute_powers(d).scale(&Rational::from_integer(BigInt::from(mu)));
        }
    }
    Ok(out)
}

/// `Π_j α_j(α_j − j)⋯(α_j − (n_j − 1)j)`.
pub fn equiv_config_epoly(e: &BiPoly, sigma: &CycleType) -> BiPoly {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &j in sigma.partition.parts() {
        *counts.entry(j).or_insert(0) += 1;
    }
    let mut out = BiPoly::one();
    for (j, nj) in counts {
        let alpha = alpha_j(e, j).expect("cycle lengths are positive");
        for k in 0..nj {
            out = out * (&alpha - &BiPoly::from_int(i64::from(k * j)));
        }
    }
    out
}

/// `(1/n!) Σ_{σ∈Sₙ} e_σ(F(X, n))`, the E-polynomial of the unordered
/// configuration space.
pub fn symmetrized_config_epoly(e: &BiPoly, n: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for sigma in CycleType::all(n) {
        let weight = z_of(&sigma.partition).recip();
        out += &equiv_config_epoly(e, &sigma).scale(&weight);
    }
    out
}

/// `Π_{p,q} (1 + uᵖv^q t)^{h^{p,q}}`.
pub fn ordered_sign_series(d: &HodgeDiamond, order: usize) -> TSeries {
    let factors: Vec<PowerFactor> = d
        .entries()
        .map(|((p, q), h)| PowerFactor::new(-BiPoly::monomial(p, q), 1, i64::from(h)))
        .collect();
    expand_product_of_powers(&factors, order).expect("diamond factors are monomials with t-power 1")
}

/// `Σₙ ē(F(X, n)/Sₙ) tⁿ`.
///
/// Over the signed E-polynomial `e = Σ e_{p,q} uᵖv^q`, `e_{p,q} = (−1)^{p+q} h^{p,q}`,
/// the series is `Π_{p,q} ((1 − t²uᵖv^q)/(1 − t uᵖv^q))^{e_{p,q}}`; it is reported
/// after `u, v ↦ −u, −v`. For diamonds supported in even total degree this is
/// the same quotient with exponent `h^{p,q}`.
pub fn unordered_config_series(d: &HodgeDiamond, order: usize) -> TSeries {
    let mut factors = Vec::new();
    for ((p, q), h) in d.entries() {
        let (m, e) = if (p + q) % 2 == 0 {
            (BiPoly::monomial(p, q), i64::from(h))
        } else {
            (-BiPoly::monomial(p, q), -i64::from(h))
        };
        factors.push(PowerFactor::new(m.clone(), 2, e));
        factors.push(PowerFactor::new(m, 1, -e));
    }
    expand_product_of_powers(&factors, order).expect("diamond factors are monomials with positive t-power")
}
