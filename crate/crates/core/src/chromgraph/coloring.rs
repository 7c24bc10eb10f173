use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::graph::WeightedGraph;
use super::orientation::acyclic_orientations;
use crate::exactalg::{BiPoly, Monomial, Rational, TSeries};
use crate::{Error, Limits, Result};

/// One element of `Var(f)`: a signed monomial `±uᵃvᵇ·t^t_power`.
///
/// Copies of the same signed monomial are distinct elements; `copy`
/// numbers them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedVar {
    pub monomial: Monomial,
    pub t_power: usize,
    pub positive: bool,
    pub copy: u32,
}

/// `Var(f)` in a fixed total order: position in the list is the order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedVarList {
    vars: Vec<SignedVar>,
}

impl SignedVarList {
    /// Any ordering of the variables is a valid total order.
    pub fn from_vars(vars: Vec<SignedVar>) -> Self {
        SignedVarList { vars }
    }

    pub fn vars(&self) -> &[SignedVar] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

impl fmt::Display for SignedVarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, var) in self.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let sign = if var.positive { '+' } else { '-' };
            write!(f, "({sign},{})", BiPoly::monomial(var.monomial.u, var.monomial.v))?;
        }
        f.write_str("]")
    }
}

/// Builds `Var(f · t^t_power)`: `|c|` copies of each monomial with the sign
/// of `c`, in graded lex order with copies adjacent.
pub fn var_multiset(f: &BiPoly, t_power: usize) -> Result<SignedVarList> {
    let mut vars = Vec::new();
    for (m, c) in f.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient(c.to_string()));
        }
        let mult = c
            .to_integer()
            .abs()
            .to_u32()
            .ok_or_else(|| Error::NonIntegerCoefficient(c.to_string()))?;
        let positive = c.is_positive();
        for copy in 0..mult {
            vars.push(SignedVar {
                monomial: m,
                t_power,
                positive,
                copy,
            });
        }
    }
    Ok(SignedVarList { vars })
}

/// `X_(G,w) ⊙ (f · t^t_power)` as the signed sum over pairs `(γ, κ)` of an
/// acyclic orientation and an order-compatible coloring by `Var(f)`:
/// `u → v` forces `κ(u) ≤ κ(v)`, and adjacent vertices may share a variable
/// only when its sign is negative.
pub fn cs_coloring_sum(
    g: &WeightedGraph,
    f: &BiPoly,
    t_power: usize,
    order: usize,
    limits: &Limits,
) -> Result<TSeries> {
    let vars = var_multiset(f, t_power)?;
    cs_coloring_sum_with_vars(g, &vars, order, limits)
}

/// [`cs_coloring_sum`] with an explicit ordered variable list.
pub fn cs_coloring_sum_with_vars(
    g: &WeightedGraph,
    vars: &SignedVarList,
    order: usize,
    limits: &Limits,
) -> Result<TSeries> {
    let n = g.n_vertices();
    let mut out = TSeries::zero(order);
    if vars.is_empty() {
        return Ok(out);
    }
    let min_t = vars.vars.iter().map(|v| v.t_power).min().unwrap_or(0);
    if min_t * g.total_weight() as usize > order {
        return Ok(out);
    }
    let colorings = (vars.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let orientation_bound = (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k)).unwrap_or(u128::MAX);
    limits.check_states("orientation x coloring enumeration", orientation_bound.saturating_mul(colorings))?;

    let mut counts: BTreeMap<(usize, Monomial), i64> = BTreeMap::new();
    for gamma in acyclic_orientations(g, limits)? {
        let mut in_nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in gamma.arcs(g) {
            in_nbrs[b].push(a);
        }
        let mut kappa = vec![usize::MAX; n];
        let mut search = Search {
            g,
            vars: &vars.vars,
            topo: gamma.topological_order(),
            in_nbrs: &in_nbrs,
            order,
            kappa: &mut kappa,
            counts: &mut counts,
        };
        search.run(0, 0, Monomial::ONE, true);
    }
    for ((deg, m), c) in counts {
        out.add_to_coeff(deg, &BiPoly::term(Rational::from_integer(BigInt::from(c)), m.u, m.v));
    }
    Ok(out)
}

struct Search<'a> {
    g: &'a WeightedGraph,
    vars: &'a [SignedVar],
    topo: &'a [usize],
    in_nbrs: &'a [Vec<usize>],
    order: usize,
    kappa: &'a mut [usize],
    counts: &'a mut BTreeMap<(usize, Monomial), i64>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, t_deg: usize, mono: Monomial, positive: bool) {
        if depth == self.topo.len() {
            *self.counts.entry((t_deg, mono)).or_insert(0) += if positive { 1 } else { -1 };
            return;
        }
        let v = self.topo[depth];
        let floor = self.in_nbrs[v].iter().map(|&u| self.kappa[u]).max().unwrap_or(0);
        let w = self.g.weights()[v];
        for c in floor..self.vars.len() {
            let var = self.vars[c];
            if var.positive && self.in_nbrs[v].iter().any(|&u| self.kappa[u] == c) {
                continue;
            }
            let deg = t_deg + var.t_power * w as usize;
            if deg > self.order {
                continue;
            }
            self.kappa[v] = c;
            // sgn(κ(v)) enters once per vertex; the variable is raised to w(v)
            let sign = positive == var.positive;
            self.run(depth + 1, deg, mono.mul(var.monomial.pow(w)), sign);
        }
        self.kappa[v] = usize::MAX;
    }
}
