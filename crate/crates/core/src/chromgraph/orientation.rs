use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::WeightedGraph;
use crate::{Limits, Result};

/// Acyclic orientation of a [`WeightedGraph`].
///
/// `forward[e]` is true when edge `e = (i, j)`, `i < j`, points `i → j`.
/// `order` is a topological order witnessing acyclicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AcyclicOrientation {
    forward: Vec<bool>,
    order: Vec<usize>,
}

impl AcyclicOrientation {
    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    /// Directed arcs `(from, to)` in the graph's edge order.
    pub fn arcs(&self, g: &WeightedGraph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(a, b), &f)| if f { (a, b) } else { (b, a) })
            .collect()
    }

    /// Checks that every arc goes forward in the witness order.
    pub fn is_consistent(&self, g: &WeightedGraph) -> bool {
        let mut pos = vec![usize::MAX; g.n_vertices()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        self.arcs(g).iter().all(|&(a, b)| pos[a] < pos[b])
    }
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX)
}

/// All acyclic orientations, obtained by orienting along every vertex order
/// and deduplicating. Sorted by their `forward` bit pattern.
pub fn acyclic_orientations(g: &WeightedGraph, limits: &Limits) -> Result<Vec<AcyclicOrientation>> {
    let n = g.n_vertices();
    limits.check_states("acyclic orientation enumeration", factorial_u128(n))?;
    let mut found: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    let mut order = Vec::with_capacity(n);
    let mut pos = vec![usize::MAX; n];
    fn rec(
        g: &WeightedGraph,
        order: &mut Vec<usize>,
        pos: &mut [usize],
        found: &mut BTreeMap<Vec<bool>, Vec<usize>>,
    ) {
        let n = g.n_vertices();
        if order.len() == n {
            let forward = g.edges().iter().map(|&(a, b)| pos[a] < pos[b]).collect();
            found.entry(forward).or_insert_with(|| order.clone());
            return;
        }
        for v in 0..n {
            if pos[v] == usize::MAX {
                pos[v] = order.len();
                order.push(v);
                rec(g, order, pos, found);
                order.pop();
                pos[v] = usize::MAX;
            }
        }
    }
    rec(g, &mut order, &mut pos, &mut found);
    Ok(found
        .into_iter()
        .map(|(forward, order)| AcyclicOrientation { forward, order })
        .collect())
}
