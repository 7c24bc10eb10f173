use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::csf::csf;
use super::graph::WeightedGraph;
use crate::exactalg::{solve, Rational};
use crate::symfun::{h_to_p, partitions_of, Partition};
use crate::{Error, Limits, Result};

/// Transition matrix from `{X_(G_λ)}_{λ⊢d}` to `{p_μ}_{μ⊢d}`.
///
/// `entries[i][j]` is the coefficient of `p_{cols[j]}` in `X_(G_{rows[i]})`.
/// Rows follow [`partitions_of`]; columns follow partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsfBasisMatrix {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<Rational>>,
}

fn family_graph(family: &[WeightedGraph], lambda: &Partition) -> WeightedGraph {
    let mut parts = lambda.parts().iter();
    let first = *parts.next().expect("nonempty partition");
    let mut g = family[first as usize - 1].clone();
    for &k in parts {
        g = g.disjoint_union(&family[k as usize - 1]);
    }
    g
}

fn check_family(family: &[WeightedGraph], d: usize) -> Result<()> {
    if family.len() < d {
        return Err(Error::InvalidFamily(format!(
            "family has {} graphs, degree {d} needs one for each size 1..={d}",
            family.len()
        )));
    }
    for (i, g) in family.iter().take(d).enumerate() {
        if g.n_vertices() != i + 1 {
            return Err(Error::InvalidFamily(format!(
                "member {} has {} vertices, expected {}",
                i + 1,
                g.n_vertices(),
                i + 1
            )));
        }
        if !g.is_connected() {
            return Err(Error::InvalidFamily(format!("member {} is not connected", i + 1)));
        }
    }
    Ok(())
}

/// `family[k-1]` must be a connected graph on `k` vertices for each `k ≤ d`.
pub fn csf_basis_matrix(family: &[WeightedGraph], d: usize, limits: &Limits) -> Result<CsfBasisMatrix> {
    if d == 0 {
        return Err(Error::InvalidFamily("degree must be positive".into()));
    }
    check_family(family, d)?;
    let rows = partitions_of(d as u32);
    let mut cols = rows.clone();
    cols.sort();
    let mut entries = Vec::with_capacity(rows.len());
    for lambda in &rows {
        let x = csf(&family_graph(family, lambda), limits)?;
        entries.push(cols.iter().map(|mu| x.coeff(mu)).collect());
    }
    Ok(CsfBasisMatrix { rows, cols, entries })
}

/// Coefficients `c_λ` with `h_n = Σ c_λ X_(G_λ)`.
pub fn h_in_csf_basis(
    n: usize,
    family: &[WeightedGraph],
    limits: &Limits,
) -> Result<BTreeMap<Partition, Rational>> {
    let m = csf_basis_matrix(family, n, limits)?;
    let h = h_to_p(n as u32);
    let size = m.rows.len();
    let transposed: Vec<Vec<Rational>> = (0..size)
        .map(|j| (0..size).map(|i| m.entries[i][j].clone()).collect())
        .collect();
    let rhs: Vec<Rational> = m.cols.iter().map(|mu| h.coeff(mu)).collect();
    let c = solve(&transposed, &rhs)?;
    Ok(m.rows.into_iter().zip(c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use crate::symfun::SymFun;
    use alloc::vec;

    fn paths(d: usize) -> Vec<WeightedGraph> {
        (1..=d).map(WeightedGraph::path).collect()
    }

    fn completes(d: usize) -> Vec<WeightedGraph> {
        (1..=d).map(WeightedGraph::complete).collect()
    }

    #[test]
    fn paths_degree_two() {
        let m = csf_basis_matrix(&paths(2), 2, &Limits::default()).unwrap();
        assert_eq!(m.cols, vec![Partition::new(vec![1, 1]).unwrap(), Partition::single(2)]);
        assert_eq!(m.rows, vec![Partition::single(2), Partition::new(vec![1, 1]).unwrap()]);
        assert_eq!(m.entries, vec![vec![int(1), int(-1)], vec![int(1), int(0)]]);
    }

    #[test]
    fn h2_in_complete_family() {
        let c = h_in_csf_basis(2, &completes(2), &Limits::default()).unwrap();
        assert_eq!(c[&Partition::new(vec![1, 1]).unwrap()], int(1));
        assert_eq!(c[&Partition::single(2)], rat(-1, 2));
    }

    #[test]
    fn h1_is_single_vertex() {
        let c = h_in_csf_basis(1, &paths(1), &Limits::default()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&Partition::single(1)], int(1));
    }

    #[test]
    fn round_trip_and_invertibility() {
        let lim = Limits::default();
        for d in 1..=5 {
            for family in [paths(d), completes(d)] {
                let c = h_in_csf_basis(d, &family, &lim).unwrap();
                let mut back = SymFun::zero();
                for (lambda, coef) in &c {
                    back = back + csf(&family_graph(&family, lambda), &lim).unwrap().scale(coef);
                }
                assert_eq!(back, h_to_p(d as u32), "d = {d}");
            }
        }
    }

    #[test]
    fn rejects_bad_families() {
        let lim = Limits::default();
        let mut fam = paths(3);
        fam[2] = WeightedGraph::edgeless(3);
        assert!(matches!(csf_basis_matrix(&fam, 3, &lim), Err(Error::InvalidFamily(_))));
        let fam = vec![WeightedGraph::path(1), WeightedGraph::path(3)];
        assert!(matches!(csf_basis_matrix(&fam, 2, &lim), Err(Error::InvalidFamily(_))));
        assert!(matches!(csf_basis_matrix(&paths(2), 3, &lim), Err(Error::InvalidFamily(_))));
    }
}
