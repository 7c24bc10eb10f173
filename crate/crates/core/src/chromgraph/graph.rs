use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Finite simple graph on vertices `0..n` with positive vertex weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl WeightedGraph {
    /// Edges are normalized to `(min, max)` and sorted. `weights` defaults to
    /// all ones.
    pub fn new<I>(n: usize, edges: I, weights: Option<Vec<u32>>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidGraph(format!("edge ({i}, {j}) leaves vertex range 0..{n}")));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i}, {j})")));
            }
        }
        let weights = weights.unwrap_or_else(|| vec![1; n]);
        if weights.len() != n {
            return Err(Error::InvalidGraph(format!("{} weights for {n} vertices", weights.len())));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidGraph("vertex weights must be positive".into()));
        }
        Ok(WeightedGraph {
            n,
            edges: set.into_iter().collect(),
            weights,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        WeightedGraph::new(n, edges, None).expect("complete graph")
    }

    pub fn path(n: usize) -> Self {
        WeightedGraph::new(n, (1..n).map(|i| (i - 1, i)), None).expect("path graph")
    }

    /// Cycle `Cₙ`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        WeightedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)), None).expect("cycle graph")
    }

    pub fn edgeless(n: usize) -> Self {
        WeightedGraph::new(n, core::iter::empty(), None).expect("edgeless graph")
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != self.n || weights.contains(&0) {
            return Err(Error::InvalidGraph("weights must be positive, one per vertex".into()));
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `G ⊔ H` with `H`'s vertices shifted past `G`'s.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> WeightedGraph {
        let shift = self.n;
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        WeightedGraph::new(self.n + other.n, edges, Some(weights)).expect("disjoint union")
    }
}
