use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::bases::{h_to_p, jt_index};
use super::partition::Partition;
use super::symfun::SymFun;
use crate::exactalg::{determinant, BiPoly, TSeries};
use crate::{Error, Result};

/// `p_n ⊙ g`: every part of every `p_μ` scaled by `n`, constants fixed.
fn power_sum_pleth(n: u32, g: &SymFun) -> SymFun {
    SymFun::from_terms(g.terms().map(|(mu, c)| (mu.scaled(n), c.clone())))
}

/// Plethysm `f ⊙ g` of abstract symmetric functions.
///
/// Uses `c ⊙ g = c`, `p_n ⊙ p_m = p_{nm}`, `p_n ⊙ c = c`, and extends
/// linearly and multiplicatively in both arguments.
pub fn pleth_abstract(f: &SymFun, g: &SymFun) -> SymFun {
    let mut cache: BTreeMap<u32, SymFun> = BTreeMap::new();
    let mut out = SymFun::zero();
    for (lambda, c) in f.terms() {
        let mut prod = SymFun::constant(c.clone());
        for &part in lambda.parts() {
            let pg = cache.entry(part).or_insert_with(|| power_sum_pleth(part, g));
            prod = &prod * pg;
        }
        out = &out + &prod;
    }
    out
}

/// `f ⊙ A` for a concrete series argument `A` in `u, v, t`, where `p_k`
/// acts by `A(uᵏ, vᵏ, tᵏ)`.
///
/// The `t⁰` coefficient of `A` must have zero constant term.
pub fn pleth_series(f: &SymFun, arg: &TSeries) -> Result<TSeries> {
    if !arg.coeff(0).constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = arg.order();
    let valuation = arg.coeffs().iter().position(|c| !c.is_zero());
    let mut powers: BTreeMap<u32, TSeries> = BTreeMap::new();
    let mut out = TSeries::zero(order);
    for (lambda, c) in f.terms() {
        if let Some(v) = valuation {
            if v > 0 && v * lambda.size() as usize > order {
                continue;
            }
        }
        let mut prod = TSeries::one(order).scale(c);
        for &part in lambda.parts() {
            let pk = powers
                .entry(part)
                .or_insert_with(|| arg.substitute_powers(part as usize));
            prod = &prod * pk;
            if prod.is_zero() {
                break;
            }
        }
        out = &out + &prod;
    }
    Ok(out)
}

/// `f ⊙ (g · t^t_power)` truncated at `order`.
pub fn pleth_concrete(f: &SymFun, g: &BiPoly, t_power: usize, order: usize) -> Result<TSeries> {
    if t_power == 0 && !g.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    pleth_series(f, &TSeries::monomial(order, g.clone(), t_power))
}

/// `s_λ ⊙ (g · t^t_power)` as the determinant `det(h_{λᵢ−i+j} ⊙ F)`.
pub fn pleth_schur_via_jt(lambda: &Partition, g: &BiPoly, t_power: usize, order: usize) -> Result<TSeries> {
    let l = lambda.len();
    let max = lambda.parts().first().copied().unwrap_or(0) + l as u32;
    let hs = (0..=max)
        .map(|k| pleth_concrete(&h_to_p(k), g, t_power, order))
        .collect::<Result<Vec<_>>>()?;
    let matrix: Vec<Vec<TSeries>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| jt_index(lambda, i, j).map_or_else(|| TSeries::zero(order), |k| hs[k as usize].clone()))
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, &TSeries::one(order)))
}
