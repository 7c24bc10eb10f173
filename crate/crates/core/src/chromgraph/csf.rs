use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::graph::WeightedGraph;
use crate::exactalg::Rational;
use crate::symfun::{Partition, SymFun};
use crate::{Error, Limits, Result};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Chromatic symmetric function `X_(G,w)` in the power-sum basis.
///
/// Computed by the edge-subset expansion `Σ_{S⊆E} (−1)^|S| p_λ(S)`, where
/// `λ(S)` lists the total weights of the connected components of `(V, S)`.
pub fn csf(g: &WeightedGraph, limits: &Limits) -> Result<SymFun> {
    let m = g.edges().len();
    if m > limits.max_edges {
        return Err(Error::GuardExceeded {
            what: "edge-subset expansion",
            states: 1u128 << m.min(127),
            limit: 1u64 << limits.max_edges.min(63),
        });
    }
    let n = g.n_vertices();
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut parent = vec![0usize; n];
    let mut comp_weight = vec![0u32; n];
    for mask in 0u64..(1u64 << m) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        for (idx, &(a, b)) in g.edges().iter().enumerate() {
            if mask & (1 << idx) != 0 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        comp_weight.iter_mut().for_each(|w| *w = 0);
        for v in 0..n {
            let r = find(&mut parent, v);
            comp_weight[r] += g.weights()[v];
        }
        let lambda = Partition::from_unsorted(comp_weight.clone());
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *counts.entry(lambda).or_insert(0) += sign;
    }
    Ok(SymFun::from_terms(
        counts
            .into_iter()
            .map(|(l, c)| (l, Rational::from_integer(BigInt::from(c)))),
    ))
}

/// Sparse polynomial in `x₁ … x_k` (exponent vectors of length `k`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ColorPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ColorPoly {
    pub fn zero(nvars: usize) -> Self {
        ColorPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &ColorPoly) -> ColorPoly {
        let mut out = ColorPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// `x₁ʳ + … + x_kʳ` (`r = 0` gives the constant 1, as `p_0` never occurs
    /// in a partition).
    fn power_sum(nvars: usize, r: u32) -> ColorPoly {
        let mut out = ColorPoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = r;
            out.add_term(e, Rational::one());
        }
        out
    }

    /// Specializes `f` to `x₁ … x_k` (all other variables zero).
    pub fn from_symfun(f: &SymFun, nvars: usize) -> ColorPoly {
        let mut out = ColorPoly::zero(nvars);
        for (lambda, c) in f.terms() {
            let mut prod = ColorPoly::zero(nvars);
            prod.add_term(vec![0; nvars], c.clone());
            for &part in lambda.parts() {
                prod = prod.mul(&ColorPoly::power_sum(nvars, part));
            }
            for (e, c) in prod.terms {
                out.add_term(e, c);
            }
        }
        out
    }

    /// Value at `x₁ = … = x_k = 1`.
    pub fn eval_ones(&self) -> Rational {
        self.terms.values().cloned().sum()
    }
}

/// `Σ_κ Π_v x_{κ(v)}^{w(v)}` over proper colorings `κ: V → {1..k}`, by
/// direct enumeration of all `kⁿ` maps.
pub fn csf_bruteforce(g: &WeightedGraph, k: usize, limits: &Limits) -> Result<ColorPoly> {
    let n = g.n_vertices();
    let states = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    limits.check_states("brute-force coloring enumeration", states)?;
    let mut out = ColorPoly::zero(k);
    if k == 0 {
        return Ok(out);
    }
    let mut kappa = vec![0usize; n];
    let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    loop {
        if g.edges().iter().all(|&(a, b)| kappa[a] != kappa[b]) {
            let mut e = vec![0u32; k];
            for v in 0..n {
                e[kappa[v]] += g.weights()[v];
            }
            *counts.entry(e).or_insert(0) += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                for (e, c) in counts {
                    out.add_term(e, Rational::from_integer(BigInt::from(c)));
                }
                return Ok(out);
            }
            kappa[i] += 1;
            if kappa[i] < k {
                break;
            }
            kappa[i] = 0;
            i += 1;
        }
    }
}

/// Number of proper `k`-colorings, read off `X_G` at `x₁ = … = x_k = 1`:
/// `Σ c_λ k^{ℓ(λ)}`. Negative `k` evaluates the chromatic polynomial formally.
pub fn chromatic_polynomial(g: &WeightedGraph, k: i64, limits: &Limits) -> Result<BigInt> {
    let x = csf(g, limits)?;
    let k = BigInt::from(k);
    let mut acc = Rational::zero();
    for (lambda, c) in x.terms() {
        acc += c * Rational::from_integer(num_traits::pow(k.clone(), lambda.len()));
    }
    Ok(acc.to_integer())
}
