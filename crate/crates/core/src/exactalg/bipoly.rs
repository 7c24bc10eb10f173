use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Exponent pair of the monomial `uᵃvᵇ`.
///
/// Ordered graded-lexicographically on `(a + b, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub u: u32,
    pub v: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, v: 0 };

    pub const fn new(u: u32, v: u32) -> Self {
        Monomial { u, v }
    }

    pub fn degree(self) -> u32 {
        self.u + self.v
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.u + other.u, self.v + other.v)
    }

    pub fn pow(self, k: u32) -> Monomial {
        Monomial::new(self.u * k, self.v * k)
    }

    pub fn swapped(self) -> Monomial {
        Monomial::new(self.v, self.u)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.u).cmp(&(other.degree(), other.u))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact polynomial in `u` and `v` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::term(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        BiPoly::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `c·uᵃvᵇ`.
    pub fn term(c: Rational, a: u32, b: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::new(a, b), c);
        p
    }

    /// `uᵃvᵇ` with coefficient 1.
    pub fn monomial(a: u32, b: u32) -> Self {
        BiPoly::term(Rational::one(), a, b)
    }

    pub fn u() -> Self {
        BiPoly::monomial(1, 0)
    }

    pub fn v() -> Self {
        BiPoly::monomial(0, 1)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// Terms in canonical (graded lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&Monomial::new(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// The single term of a monomial polynomial.
    pub fn as_single_term(&self) -> Option<(Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `f(uᵐ, vᵐ)`.
    pub fn substitute_powers(&self, m: u32) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.pow(m), c.clone())).collect(),
        }
    }

    /// `f(v, u)`.
    pub fn swap_uv(&self) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(k, c)| (k.swapped(), c.clone())))
    }

    /// `f(−u, −v)`.
    pub fn negate_vars(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, if k.degree() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn is_uv_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| self.terms.get(&k.swapped()) == Some(c))
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * num_traits::pow(u.clone(), m.u as usize) * num_traits::pow(v.clone(), m.v as usize);
        }
        acc
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(mut self, rhs: BiPoly) -> BiPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(*b), x * y);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("u", m.u), ("v", m.v)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text form: `c*u^a*v^b` terms in graded lex order, unit
/// coefficients and unit exponents omitted.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_factors(f, *m)?;
            } else {
                write!(f, "{mag}*")?;
                write_factors(f, *m)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial near {near:?}: {reason}")]
pub struct ParsePolyError {
    pub near: String,
    pub reason: &'static str,
}

fn parse_err(near: &str, reason: &'static str) -> ParsePolyError {
    ParsePolyError {
        near: near.to_string(),
        reason,
    }
}

fn parse_rational(tok: &str) -> Result<Rational, ParsePolyError> {
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| parse_err(tok, "bad number"))?;
    let d: BigInt = d.parse().map_err(|_| parse_err(tok, "bad number"))?;
    if d.is_zero() {
        return Err(parse_err(tok, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn parse_term(src: &str) -> Result<(Monomial, Rational), ParsePolyError> {
    let mut coeff = Rational::one();
    let mut mono = Monomial::ONE;
    for factor in src.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(parse_err(src, "empty factor"));
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| parse_err(factor, "bad exponent"))?;
                (b.trim(), e)
            }
            None => (factor, 1),
        };
        match base {
            "u" => mono.u += exp,
            "v" => mono.v += exp,
            _ => {
                let c = parse_rational(base)?;
                coeff *= num_traits::pow(c, exp as usize);
            }
        }
    }
    Ok((mono, coeff))
}

/// Parses the canonical text form; terms may appear in any order and
/// repeated monomials are summed.
impl FromStr for BiPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_err(s, "empty input"));
        }
        let mut out = BiPoly::zero();
        let mut negative = false;
        let mut start = 0;
        let mut leading_sign_allowed = true;
        for (i, b) in s.bytes().enumerate() {
            if b != b'+' && b != b'-' {
                continue;
            }
            // a sign right after '^', '/' or '*' belongs to a number
            if matches!(s[..i].trim_end().as_bytes().last(), Some(b'^' | b'/' | b'*')) {
                continue;
            }
            let chunk = s[start..i].trim();
            if chunk.is_empty() {
                if !leading_sign_allowed {
                    return Err(parse_err(&s[start..], "missing term"));
                }
            } else {
                let (m, c) = parse_term(chunk)?;
                out.add_term(m, if negative { -c } else { c });
            }
            leading_sign_allowed = false;
            negative = b == b'-';
            start = i + 1;
        }
        let chunk = s[start..].trim();
        if chunk.is_empty() {
            return Err(parse_err(s, "dangling operator"));
        }
        let (m, c) = parse_term(chunk)?;
        out.add_term(m, if negative { -c } else { c });
        Ok(out)
    }
}
