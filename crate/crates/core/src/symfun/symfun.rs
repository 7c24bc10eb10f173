use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::partition::Partition;
use crate::exactalg::{CommRing, Rational};

/// Symmetric function `Σ c_λ p_λ` in the power-sum basis.
///
/// The empty partition carries the constant term. Degrees may be mixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymFun {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFun {
    pub fn zero() -> Self {
        SymFun::default()
    }

    pub fn one() -> Self {
        SymFun::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SymFun::term(c, Partition::empty())
    }

    /// The power sum `p_n` (`p_0` is read as the constant 1).
    pub fn p(n: u32) -> Self {
        SymFun::term(Rational::one(), Partition::single(n))
    }

    pub fn p_lambda(lambda: Partition) -> Self {
        SymFun::term(Rational::one(), lambda)
    }

    pub fn term(c: Rational, lambda: Partition) -> Self {
        let mut f = SymFun::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFun::zero();
        for (l, c) in terms {
            f.add_term(l, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree present, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> SymFun {
        SymFun {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFun {
        if c.is_zero() {
            return SymFun::zero();
        }
        SymFun {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> SymFun {
        let mut acc = SymFun::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&SymFun> for &SymFun {
    type Output = SymFun;
    fn add(self, rhs: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SymFun> for &SymFun {
    type Output = SymFun;
    fn sub(self, rhs: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }
}

impl Mul<&SymFun> for &SymFun {
    type Output = SymFun;
    fn mul(self, rhs: &SymFun) -> SymFun {
        let mut out = SymFun::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }
}

impl Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        SymFun {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Add for SymFun {
    type Output = SymFun;
    fn add(self, rhs: SymFun) -> SymFun {
        &self + &rhs
    }
}

impl Sub for SymFun {
    type Output = SymFun;
    fn sub(self, rhs: SymFun) -> SymFun {
        &self - &rhs
    }
}

impl Mul for SymFun {
    type Output = SymFun;
    fn mul(self, rhs: SymFun) -> SymFun {
        &self * &rhs
    }
}

impl CommRing for SymFun {
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

fn write_p_lambda(f: &mut fmt::Formatter<'_>, lambda: &Partition) -> fmt::Result {
    let mut first = true;
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match j - i {
            1 => write!(f, "p{}", parts[i])?,
            e => write!(f, "p{}^{}", parts[i], e)?,
        }
        i = j;
    }
    Ok(())
}

/// Text form such as `p1^3 - 3*p2*p1 + 2*p3`.
impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if l.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_p_lambda(f, l)?;
            } else {
                write!(f, "{mag}*")?;
                write_p_lambda(f, l)?;
            }
        }
        Ok(())
    }
}
