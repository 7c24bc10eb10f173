use alloc::collections::{BTreeMap, BTreeSet};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::diamond::{validate_symmetries, HodgeDiamond};
use crate::exactalg::{BiPoly, Monomial, Rational};
use crate::{Error, Result};

/// Polynomial in the `(u, v, z)`-graded world, keyed by `z`-degree.
pub type ZGraded = BTreeMap<u32, BiPoly>;

/// Polynomial in `A = (1+uv)z`, `B = (u+v)z` and `C = uv·z²`.
///
/// Keys are exponent triples `(α, β, γ)` of `A^α B^β C^γ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbcPoly {
    terms: BTreeMap<(u32, u32, u32), Rational>,
}

/// Selects one of the two recursive families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbcSequence {
    /// `A_s`, expanding to `(uˢ + vˢ)zˢ`.
    A,
    /// `T_s`, expanding to `(1 + uˢvˢ)zˢ`.
    T,
}

impl AbcPoly {
    pub fn zero() -> Self {
        AbcPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut out = AbcPoly::zero();
        out.add_term((0, 0, 0), c);
        out
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(alpha: u32, beta: u32, gamma: u32) -> Self {
        let mut out = AbcPoly::zero();
        out.add_term((alpha, beta, gamma), Rational::one());
        out
    }

    pub fn a() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn b() -> Self {
        Self::monomial(0, 1, 0)
    }

    pub fn c() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn add_term(&mut self, key: (u32, u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, alpha: u32, beta: u32, gamma: u32) -> Rational {
        self.terms.get(&(alpha, beta, gamma)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> AbcPoly {
        let mut out = AbcPoly::zero();
        for (&k, x) in &self.terms {
            out.add_term(k, x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> AbcPoly {
        let mut out = AbcPoly::from_int(1);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Expands into `(u, v)` polynomials grouped by `z`-degree `α + β + 2γ`.
    pub fn expand(&self) -> ZGraded {
        let a = BiPoly::from_terms([(Monomial::ONE, Rational::one()), (Monomial::new(1, 1), Rational::one())]);
        let b = BiPoly::u() + BiPoly::v();
        let mut out = ZGraded::new();
        for (&(alpha, beta, gamma), c) in &self.terms {
            let poly = (a.pow(alpha) * b.pow(beta)).mul_monomial(Monomial::new(gamma, gamma)).scale(c);
            let slot = out.entry(alpha + beta + 2 * gamma).or_insert_with(BiPoly::zero);
            *slot += &poly;
            if slot.is_zero() {
                out.remove(&(alpha + beta + 2 * gamma));
            }
        }
        out
    }
}

impl Add for &AbcPoly {
    type Output = AbcPoly;
    fn add(self, rhs: &AbcPoly) -> AbcPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &AbcPoly {
    type Output = AbcPoly;
    fn sub(self, rhs: &AbcPoly) -> AbcPoly {
        self + &(-rhs)
    }
}

impl Neg for &AbcPoly {
    type Output = AbcPoly;
    fn neg(self) -> AbcPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &AbcPoly {
    type Output = AbcPoly;
    fn mul(self, rhs: &AbcPoly) -> AbcPoly {
        let mut out = AbcPoly::zero();
        for (&(a1, b1, c1), x) in &self.terms {
            for (&(a2, b2, c2), y) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2, c1 + c2), x * y);
            }
        }
        out
    }
}

impl fmt::Display for AbcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(alpha, beta, gamma), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors = alloc::vec::Vec::new();
            for (name, e) in [("A", alpha), ("B", beta), ("C", gamma)] {
                match e {
                    0 => {}
                    1 => factors.push(alloc::string::String::from(name)),
                    _ => factors.push(alloc::format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `A_s` or `T_s` from the three-term recursions, seeded with `X₀ = 2`.
pub fn abc_sequences(s: u32, which: AbcSequence) -> AbcPoly {
    let step = match which {
        AbcSequence::A => AbcPoly::b(),
        AbcSequence::T => AbcPoly::a(),
    };
    let c = AbcPoly::c();
    let mut prev = AbcPoly::from_int(2);
    if s == 0 {
        return prev;
    }
    let mut cur = step.clone();
    for _ in 1..s {
        let next = &(&step * &cur) - &(&c * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

fn check_index(p: u32, q: u32, n: u32) -> Result<()> {
    if q <= p && p <= n && p + q <= n {
        Ok(())
    } else {
        Err(Error::InvalidGeneratorIndex { p, q, n })
    }
}

/// `uᵖv^q + u^q vᵖ + u^{n−p}v^{n−q} + u^{n−q}v^{n−p}`, the coefficient of `zⁿ`.
pub fn r_generator(p: u32, q: u32, n: u32) -> Result<BiPoly> {
    check_index(p, q, n)?;
    let mut out = BiPoly::zero();
    for (a, b) in [(p, q), (q, p), (n - p, n - q), (n - q, n - p)] {
        out.add_term(Monomial::new(a, b), Rational::one());
    }
    Ok(out)
}

/// `A_{p−q} · C^{min(q, n−p)} · T_{|n−p−q|}`, whose expansion is `R_{p,q,n}·zⁿ`.
pub fn r_generator_abc(p: u32, q: u32, n: u32) -> Result<AbcPoly> {
    check_index(p, q, n)?;
    let a = abc_sequences(p - q, AbcSequence::A);
    let c = AbcPoly::c().pow(q.min(n - p));
    let t = abc_sequences(n.abs_diff(p + q), AbcSequence::T);
    Ok(&(&a * &c) * &t)
}

/// Writes `HD(X)·zⁿ` in the `A`/`B`/`C` coordinates.
///
/// Each orbit `O` of `(p, q)` under `(p,q) ↦ (q,p)` and `(p,q) ↦ (n−p,n−q)`
/// contributes `h_O·|O|/4 · R_rep` for its least valid representative.
pub fn abc_decompose(d: &HodgeDiamond) -> Result<AbcPoly> {
    let report = validate_symmetries(d);
    if !report.hodge_symmetric {
        return Err(Error::AsymmetricDiamond("Hodge symmetry"));
    }
    if !report.serre_dual {
        return Err(Error::AsymmetricDiamond("Serre duality"));
    }
    let n = d.dim();
    let mut seen = BTreeSet::new();
    let mut out = AbcPoly::zero();
    for ((p, q), h) in d.entries() {
        if seen.contains(&(p, q)) {
            continue;
        }
        let orbit: BTreeSet<(u32, u32)> = [(p, q), (q, p), (n - p, n - q), (n - q, n - p)].into_iter().collect();
        seen.extend(orbit.iter().copied());
        let &(rp, rq) = orbit
            .iter()
            .find(|&&(a, b)| b <= a && a + b <= n)
            .expect("every orbit has a representative with q <= p and p + q <= n");
        let weight = Rational::new(BigInt::from(h) * BigInt::from(orbit.len()), BigInt::from(4));
        out = &out + &r_generator_abc(rp, rq, n)?.scale(&weight);
    }
    Ok(out)
}

/// Sets `C = 0`.
pub fn birational_reduce(f: &AbcPoly) -> AbcPoly {
    AbcPoly {
        terms: f.terms.iter().filter(|(k, _)| k.2 == 0).map(|(&k, c)| (k, c.clone())).collect(),
    }
}
