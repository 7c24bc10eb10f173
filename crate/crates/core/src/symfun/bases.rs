use alloc::vec::Vec;

use num_traits::One;

use super::partition::{partitions_of, z_of, Partition};
use super::symfun::SymFun;
use crate::exactalg::{determinant, Rational};

/// `hₙ = Σ_{λ⊢n} z_λ⁻¹ p_λ`.
pub fn h_to_p(n: u32) -> SymFun {
    SymFun::from_terms(partitions_of(n).into_iter().map(|l| {
        let c = Rational::one() / z_of(&l);
        (l, c)
    }))
}

/// `eₙ = Σ_{λ⊢n} (−1)^{m₂+m₄+…} z_λ⁻¹ p_λ`.
pub fn e_to_p(n: u32) -> SymFun {
    SymFun::from_terms(partitions_of(n).into_iter().map(|l| {
        let even_parts: u32 = l
            .multiplicities()
            .iter()
            .filter(|(part, _)| *part % 2 == 0)
            .map(|(_, m)| m)
            .sum();
        let mut c = Rational::one() / z_of(&l);
        if even_parts % 2 == 1 {
            c = -c;
        }
        (l, c)
    }))
}

/// Jacobi–Trudi index `λᵢ − i + j` for a 0-based matrix position, `None`
/// when negative (`h_k = 0` for `k < 0`).
pub(crate) fn jt_index(lambda: &Partition, i: usize, j: usize) -> Option<u32> {
    let k = lambda.parts()[i] as i64 - i as i64 + j as i64;
    (k >= 0).then_some(k as u32)
}

/// Schur function `s_λ = det(h_{λᵢ−i+j})`.
pub fn s_to_p(lambda: &Partition) -> SymFun {
    let l = lambda.len();
    let max = lambda.parts().first().copied().unwrap_or(0) + l as u32;
    let hs: Vec<SymFun> = (0..=max).map(h_to_p).collect();
    let matrix: Vec<Vec<SymFun>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| jt_index(lambda, i, j).map_or_else(SymFun::zero, |k| hs[k as usize].clone()))
                .collect()
        })
        .collect();
    determinant(&matrix, &SymFun::one())
}
