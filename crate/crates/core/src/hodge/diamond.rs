use alloc::collections::BTreeMap;
use alloc::format;

use num_bigint::BigInt;

use crate::exactalg::{BiPoly, Monomial, Rational};
use crate::{Error, Result};

/// Hodge numbers `h^{p,q}` of an `n`-dimensional variety.
///
/// Only nonzero multiplicities are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeDiamond {
    dim: u32,
    h: BTreeMap<(u32, u32), u32>,
}

/// Which of the two diamond symmetries hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// `h^{p,q} = h^{q,p}`
    pub hodge_symmetric: bool,
    /// `h^{p,q} = h^{n-p,n-q}`
    pub serre_dual: bool,
}

impl SymmetryReport {
    pub fn both(&self) -> bool {
        self.hodge_symmetric && self.serre_dual
    }
}

impl HodgeDiamond {
    /// Entries with multiplicity 0 are dropped; repeated `(p, q)` are rejected.
    pub fn new<I>(dim: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, u32)>,
    {
        let mut h = BTreeMap::new();
        for (p, q, mult) in entries {
            if p > dim || q > dim {
                return Err(Error::InvalidDiamond(format!("h^({p},{q}) lies outside [0, {dim}]^2")));
            }
            if h.contains_key(&(p, q)) {
                return Err(Error::InvalidDiamond(format!("h^({p},{q}) given twice")));
            }
            if mult > 0 {
                h.insert((p, q), mult);
            }
        }
        Ok(HodgeDiamond { dim, h })
    }

    pub fn point() -> Self {
        Self::projective_space(0)
    }

    /// `ℂPⁿ`: `h^{k,k} = 1` for `0 ≤ k ≤ n`.
    pub fn projective_space(n: u32) -> Self {
        HodgeDiamond {
            dim: n,
            h: (0..=n).map(|k| ((k, k), 1)).collect(),
        }
    }

    pub fn p1() -> Self {
        Self::projective_space(1)
    }

    pub fn p2() -> Self {
        Self::projective_space(2)
    }

    pub fn elliptic_curve() -> Self {
        HodgeDiamond {
            dim: 1,
            h: [((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)].into_iter().collect(),
        }
    }

    /// Curve of genus `g`.
    pub fn curve(genus: u32) -> Self {
        let mut h = BTreeMap::new();
        h.insert((0, 0), 1);
        h.insert((1, 1), 1);
        if genus > 0 {
            h.insert((1, 0), genus);
            h.insert((0, 1), genus);
        }
        HodgeDiamond { dim: 1, h }
    }

    /// Looks up `"P1"`, `"P2"` or `"elliptic"`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "P1" => Some(Self::p1()),
            "P2" => Some(Self::p2()),
            "elliptic" => Some(Self::elliptic_curve()),
            _ => None,
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, p: u32, q: u32) -> u32 {
        self.h.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((p, q), h^{p,q})` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.h.iter().map(|(&k, &m)| (k, m))
    }

    /// `Σ h^{p,q} (−u)^p (−v)^q` when `signed`, otherwise `Σ h^{p,q} u^p v^q`.
    pub fn e_polynomial(&self, signed: bool) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(p, q), &m) in &self.h {
            let mut c = Rational::from_integer(BigInt::from(m));
            if signed && (p + q) % 2 == 1 {
                c = -c;
            }
            out.add_term(Monomial::new(p, q), c);
        }
        out
    }

    pub fn validate_symmetries(&self) -> SymmetryReport {
        validate_symmetries(self)
    }
}

pub fn validate_symmetries(d: &HodgeDiamond) -> SymmetryReport {
    let n = d.dim;
    SymmetryReport {
        hodge_symmetric: d.h.iter().all(|(&(p, q), &m)| d.get(q, p) == m),
        serre_dual: d.h.iter().all(|(&(p, q), &m)| d.get(n - p, n - q) == m),
    }
}

/// `e(X) = e(X \ Z) + e(Z)` at the polynomial level.
pub fn scissor_sum(e1: &BiPoly, e2: &BiPoly) -> BiPoly {
    e1 + e2
}

/// `(uv)ⁿ f(u⁻¹, v⁻¹)`.
pub fn serre_dual_transform(f: &BiPoly, n: u32) -> Result<BiPoly> {
    let mut out = BiPoly::zero();
    for (m, c) in f.terms() {
        if m.u > n || m.v > n {
            return Err(Error::ExponentAboveDimension { a: m.u, b: m.v, n });
        }
        out.add_term(Monomial::new(n - m.u, n - m.v), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn e_polynomials() {
        assert_eq!(HodgeDiamond::p1().e_polynomial(false), p("1+u*v"));
        assert_eq!(HodgeDiamond::elliptic_curve().e_polynomial(false), p("1+u+v+u*v"));
        assert_eq!(HodgeDiamond::elliptic_curve().e_polynomial(true), p("1-u-v+u*v"));
        assert_eq!(HodgeDiamond::curve(1), HodgeDiamond::elliptic_curve());
    }

    #[test]
    fn scissor_examples() {
        assert_eq!(scissor_sum(&p("u*v"), &p("1")), p("1+u*v"));
        assert_eq!(scissor_sum(&p("1+u*v"), &p("u^2*v^2")), HodgeDiamond::p2().e_polynomial(false));
        assert_eq!(scissor_sum(&p("2*u - v"), &BiPoly::zero()), p("2*u - v"));
    }

    #[test]
    fn symmetry_flags() {
        assert!(validate_symmetries(&HodgeDiamond::p2()).both());
        let d = HodgeDiamond::new(1, [(0, 0, 1), (1, 0, 1)]).unwrap();
        assert!(!validate_symmetries(&d).hodge_symmetric);
        let d = HodgeDiamond::new(1, [(0, 0, 1), (1, 1, 2)]).unwrap();
        let r = validate_symmetries(&d);
        assert!(r.hodge_symmetric && !r.serre_dual);
    }

    #[test]
    fn diamond_validation() {
        assert!(matches!(HodgeDiamond::new(1, [(2, 0, 1)]), Err(Error::InvalidDiamond(_))));
        assert!(matches!(HodgeDiamond::new(1, [(0, 0, 1), (0, 0, 2)]), Err(Error::InvalidDiamond(_))));
        assert_eq!(HodgeDiamond::new(1, [(0, 0, 1), (1, 0, 0)]).unwrap().entries().count(), 1);
    }

    #[test]
    fn serre_dual_examples() {
        assert_eq!(serre_dual_transform(&p("1+u*v"), 1).unwrap(), p("1+u*v"));
        assert_eq!(serre_dual_transform(&p("1+u"), 1).unwrap(), p("u*v+v"));
        for d in [HodgeDiamond::p1(), HodgeDiamond::p2(), HodgeDiamond::elliptic_curve()] {
            let e = d.e_polynomial(false);
            assert_eq!(serre_dual_transform(&e, d.dim()).unwrap(), e);
        }
        assert!(matches!(
            serre_dual_transform(&p("u^2"), 1),
            Err(Error::ExponentAboveDimension { a: 2, b: 0, n: 1 })
        ));
    }
}
