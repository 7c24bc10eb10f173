//! Named verification suites over the identity web. Each suite stops at the
//! first counterexample.

use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use plethora_core::chromgraph::{csf, cs_coloring_sum, h_in_csf_basis, WeightedGraph};
use plethora_core::exactalg::{BiPoly, TSeries};
use plethora_core::genfun::{
    conf_ordered_epoly, equiv_config_epoly, ordered_sign_series, pe, pe_product_formula, pe_via_coloring,
    pe_via_generators, pe_via_hn, pl, sign_series_via_coloring, sign_series_via_en, symmetrized_config_epoly,
    unordered_config_series, CycleType,
};
use plethora_core::hodge::{
    abc_decompose, abc_sequences, birational_reduce, r_generator, r_generator_abc, serre_duality_power_sum_relation,
    two_var_eval, two_var_power_sum_expand, AbcPoly, AbcSequence, HodgeDiamond, ZGraded,
};
use plethora_core::symfun::{
    e_to_p, h_to_p, partitions_of, pleth_abstract, pleth_concrete, pleth_schur_via_jt, s_to_p, SymFun,
};
use plethora_core::{Error, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITES: &[&str] = &[
    "three-way",
    "geometric",
    "coloring-sum",
    "complete-graph",
    "plethysm",
    "configuration",
    "charvar",
    "abc",
    "basis",
    "serre-duality",
];

#[derive(Debug)]
pub enum SuiteError {
    Counterexample(String),
    Input(Error),
    UnknownSuite(String),
}

impl From<Error> for SuiteError {
    fn from(e: Error) -> Self {
        SuiteError::Input(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Default)]
struct Checker {
    checks: usize,
}

type Step<T = ()> = Result<T, SuiteError>;

impl Checker {
    fn eq<T: PartialEq + Display>(&mut self, got: &T, want: &T, what: impl FnOnce() -> String) -> Step {
        self.checks += 1;
        if got == want {
            Ok(())
        } else {
            Err(SuiteError::Counterexample(format!("{}: got {got}, expected {want}", what())))
        }
    }

    fn graded(&mut self, got: &ZGraded, want: &ZGraded, what: impl FnOnce() -> String) -> Step {
        let show = |z: &ZGraded| {
            if z.is_empty() {
                "0".to_string()
            } else {
                z.iter().map(|(k, p)| format!("({p})*z^{k}")).collect::<Vec<_>>().join(" + ")
            }
        };
        self.eq(&show(got), &show(want), what)
    }
}

fn builtins() -> Vec<(&'static str, HodgeDiamond)> {
    vec![
        ("P1", HodgeDiamond::p1()),
        ("P2", HodgeDiamond::p2()),
        ("elliptic", HodgeDiamond::elliptic_curve()),
    ]
}

fn poly(s: &str) -> BiPoly {
    s.parse().expect("suite literal")
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn graded(n: u32, f: BiPoly) -> ZGraded {
    if f.is_zero() {
        ZGraded::new()
    } else {
        [(n, f)].into_iter().collect()
    }
}

fn three_way(c: &mut Checker, order: usize, lim: &Limits) -> Step {
    for (name, d) in builtins() {
        let f = d.e_polynomial(false);
        let product = pe_product_formula(&d, order);
        c.eq(&pe_via_hn(&f, order)?, &product, || format!("{name}: h-route vs product formula"))?;
        c.eq(&pe_via_coloring(&f, order, lim)?, &product, || format!("{name}: coloring route vs product formula"))?;
        c.eq(&pe(&TSeries::monomial(order, f, 1))?, &product, || format!("{name}: definition vs product formula"))?;
    }
    Ok(())
}

fn geometric(c: &mut Checker, order: usize) -> Step {
    let series = pe(&TSeries::monomial(order, poly("1 + u*v"), 1))?;
    for k in 0..=order as u32 {
        let want = (0..=k).fold(BiPoly::zero(), |acc, j| acc + BiPoly::monomial(j, j));
        c.eq(series.coeff(k as usize), &want, || format!("PE[(1 + u*v)t] at t^{k}"))?;
    }
    Ok(())
}

fn coloring_sum(c: &mut Checker, order: usize, lim: &Limits) -> Step {
    let graphs = [
        ("P3", WeightedGraph::path(3)),
        ("K3", WeightedGraph::complete(3)),
        ("C4", WeightedGraph::cycle(4)),
        ("K4", WeightedGraph::complete(4)),
        ("P2 weighted (1,2)", WeightedGraph::path(2).with_weights(vec![1, 2])?),
    ];
    for (gname, g) in &graphs {
        let x = csf(g, lim)?;
        for f in ["1 + u*v", "-1 - u*v", "1 - u + 2*u*v"] {
            let f = poly(f);
            c.eq(&cs_coloring_sum(g, &f, 1, order, lim)?, &pleth_concrete(&x, &f, 1, order)?, || {
                format!("{gname}, f = {f}")
            })?;
        }
    }
    Ok(())
}

fn complete_graph(c: &mut Checker, order: usize, lim: &Limits) -> Step {
    let mut fact = int(1);
    for n in 1..=6u32 {
        fact *= int(n.into());
        c.eq(&csf(&WeightedGraph::complete(n as usize), lim)?, &e_to_p(n).scale(&fact), || {
            format!("X_K{n} vs {n}! e_{n}")
        })?;
    }
    let f = poly("1 + u + v + u*v");
    let mut fact = BigInt::from(1);
    for n in 1..=order.min(4) {
        fact *= n;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let via = cs_coloring_sum(&WeightedGraph::complete(n), &(-&f), 1, order, lim)?
            .scale(&BigRational::new(sign.into(), fact.clone()));
        c.eq(&via, &pleth_concrete(&h_to_p(n as u32), &f, 1, order)?, || {
            format!("h_{n} of {f} via signed colorings of K{n}")
        })?;
    }
    Ok(())
}

fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn plethysm(c: &mut Checker) -> Step {
    for n in 1..=8u32 {
        let mut rhs = SymFun::zero();
        for i in 1..=n {
            rhs = &rhs + &(&h_to_p(n - i) * &SymFun::p(i));
        }
        c.eq(&h_to_p(n).scale(&int(n.into())), &rhs, || format!("Newton identity at n = {n}"))?;
    }
    for r in 0..=8u32 {
        c.eq(&pleth_abstract(&h_to_p(r), &SymFun::constant(int(2))), &SymFun::constant(int(i64::from(r) + 1)), || {
            format!("h_{r} of 2")
        })?;
    }
    for n in 1..=6u32 {
        let lhs = pleth_abstract(&h_to_p(n), &(&SymFun::p(n) + &SymFun::constant(int(2))));
        let mut rhs = SymFun::zero();
        for a in 0..=n {
            rhs = &rhs + &pleth_abstract(&h_to_p(a), &SymFun::p(n)).scale(&int((n - a + 1).into()));
        }
        c.eq(&lhs, &rhs, || format!("h_{n} of (p_{n} + 2)"))?;
    }
    let (f, g) = (poly("1 + u*v"), poly("u + v"));
    for n in 0..=6u32 {
        let lhs = pleth_concrete(&h_to_p(n), &(&f + &g), 1, 6)?;
        let mut rhs = TSeries::zero(6);
        for k in 0..=n {
            rhs = &rhs + &(&pleth_concrete(&h_to_p(k), &f, 1, 6)? * &pleth_concrete(&h_to_p(n - k), &g, 1, 6)?);
        }
        c.eq(&lhs, &rhs, || format!("sum rule at n = {n}"))?;
    }
    for n in 0..=4u32 {
        let lhs = pleth_concrete(&h_to_p(n), &(&f * &g), 2, 8)?;
        let mut rhs = TSeries::zero(8);
        for lambda in partitions_of(n) {
            rhs = &rhs + &(&pleth_schur_via_jt(&lambda, &f, 1, 8)? * &pleth_schur_via_jt(&lambda, &g, 1, 8)?);
        }
        c.eq(&lhs, &rhs, || format!("product rule at n = {n}"))?;
        for lambda in partitions_of(n) {
            c.eq(&pleth_schur_via_jt(&lambda, &f, 1, 6)?, &pleth_concrete(&s_to_p(&lambda), &f, 1, 6)?, || {
                format!("Jacobi-Trudi determinant vs power sums for s_{lambda}")
            })?;
        }
    }
    let base = poly("1 - u + u*v");
    for m in 1..=3u32 {
        for r in 0..=5u32 {
            let lhs = pleth_concrete(&h_to_p(r), &base.scale(&int(m.into())), 1, 5)?;
            let mut rhs = TSeries::zero(5);
            for comp in compositions(r, m) {
                let mut prod = TSeries::one(5);
                for i in comp {
                    prod = &prod * &pleth_concrete(&h_to_p(i), &base, 1, 5)?;
                }
                rhs = &rhs + &prod;
            }
            c.eq(&lhs, &rhs, || format!("multinomial rule at m = {m}, r = {r}"))?;
        }
    }
    Ok(())
}

fn configuration(c: &mut Checker, order: usize, lim: &Limits) -> Step {
    let mut diamonds = builtins();
    diamonds.push(("genus 2 curve", HodgeDiamond::curve(2)));
    for (name, d) in &diamonds {
        let e = d.e_polynomial(true);
        for n in 0..=4u32 {
            c.eq(&equiv_config_epoly(&e, &CycleType::identity(n)), &conf_ordered_epoly(&e, n), || {
                format!("{name}: identity cycle type at n = {n}")
            })?;
        }
        let hd = d.e_polynomial(false);
        let sign = ordered_sign_series(d, order);
        c.eq(&sign_series_via_en(&hd, order)?, &sign, || format!("{name}: sign series vs e_n route"))?;
        c.eq(&sign_series_via_coloring(&hd, order, lim)?, &sign, || {
            format!("{name}: sign series vs unsigned colorings")
        })?;
        let unordered = unordered_config_series(d, order);
        for n in 0..=order.min(3) as u32 {
            c.eq(unordered.coeff(n as usize), &symmetrized_config_epoly(&e, n).negate_vars(), || {
                format!("{name}: unordered series vs symmetrization at n = {n}")
            })?;
        }
    }
    Ok(())
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    for _ in 0..rng.random_range(1..=3) {
        let k = rng.random_range(1..=order);
        let coeff = BigRational::new(rng.random_range(-3i64..=3).into(), rng.random_range(1i64..=2).into());
        s.add_to_coeff(k, &BiPoly::term(coeff, rng.random_range(0..=2), rng.random_range(0..=2)));
    }
    s
}

fn charvar(c: &mut Checker, order: usize) -> Step {
    let order = order.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(0x00c0_ffee);
    for i in 0..20 {
        let f = random_series(&mut rng, order);
        c.eq(&pl(&pe(&f)?)?, &f, || format!("pl(pe(f)) for sample {i}, f = {f}"))?;
        let g = &TSeries::one(order) + &random_series(&mut rng, order);
        c.eq(&pe(&pl(&g)?)?, &g, || format!("pe(pl(g)) for sample {i}, g = {g}"))?;
    }
    Ok(())
}

fn abc(c: &mut Checker, order: usize) -> Step {
    for s in 1..=8u32 {
        c.graded(
            &abc_sequences(s, AbcSequence::A).expand(),
            &graded(s, BiPoly::monomial(s, 0) + BiPoly::monomial(0, s)),
            || format!("A_{s}"),
        )?;
        c.graded(
            &abc_sequences(s, AbcSequence::T).expand(),
            &graded(s, BiPoly::one() + BiPoly::monomial(s, s)),
            || format!("T_{s}"),
        )?;
    }
    for n in 0..=5u32 {
        for p in 0..=n {
            for q in 0..=p.min(n - p) {
                c.graded(&r_generator_abc(p, q, n)?.expand(), &graded(n, r_generator(p, q, n)?), || {
                    format!("R_({p},{q},{n}) factorization")
                })?;
            }
        }
    }
    let mut diamonds = builtins();
    diamonds.push(("K3 surface", HodgeDiamond::new(2, [(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 20), (2, 2, 1)])?));
    for (name, d) in &diamonds {
        let dec = abc_decompose(d)?;
        c.graded(&dec.expand(), &graded(d.dim(), d.e_polynomial(false)), || format!("{name} decomposition"))?;
        let direct = pe(&TSeries::monomial(order, d.e_polynomial(false), d.dim() as usize))?;
        c.eq(&pe_via_generators(d, order)?, &direct, || format!("{name}: PE rebuilt from generators"))?;
    }
    c.eq(&birational_reduce(&abc_decompose(&HodgeDiamond::p2())?), &AbcPoly::a().pow(2), || {
        "birational reduction of P2".to_string()
    })?;
    Ok(())
}

fn basis(c: &mut Checker, lim: &Limits) -> Step {
    for d in 1..=5usize {
        for (fname, family) in [
            ("paths", (1..=d).map(WeightedGraph::path).collect::<Vec<_>>()),
            ("complete", (1..=d).map(WeightedGraph::complete).collect::<Vec<_>>()),
        ] {
            let coeffs = h_in_csf_basis(d, &family, lim)?;
            let mut back = SymFun::zero();
            for (lambda, x) in &coeffs {
                let mut g = family[lambda.parts()[0] as usize - 1].clone();
                for &k in &lambda.parts()[1..] {
                    g = g.disjoint_union(&family[k as usize - 1]);
                }
                back = &back + &csf(&g, lim)?.scale(x);
            }
            c.eq(&back, &h_to_p(d as u32), || format!("h_{d} in the {fname} basis"))?;
        }
    }
    Ok(())
}

fn serre_duality(c: &mut Checker) -> Step {
    for (name, d) in builtins() {
        let (lhs, rhs) = serre_duality_power_sum_relation(&d)?;
        c.eq(&lhs, &rhs, || format!("{name}: both sides"))?;
        c.eq(&two_var_eval(&lhs), &d.e_polynomial(false), || format!("{name}: evaluation"))?;
    }
    let f = poly("u*v^2 + u^2*v");
    let got = two_var_power_sum_expand(&f)?;
    c.eq(&got.to_string(), &"p2*p1 - p3".to_string(), || "u*v^2 + u^2*v".to_string())?;
    c.eq(&two_var_eval(&got), &f, || "u*v^2 + u^2*v evaluation".to_string())
}

/// Runs one suite. `Err` is an input problem: unknown suite name or a
/// precondition/guard failure inside the suite.
pub fn run_suite(name: &str, order: usize, lim: &Limits) -> Result<SuiteReport, SuiteError> {
    let mut c = Checker::default();
    let outcome = match name {
        "three-way" => three_way(&mut c, order, lim),
        "geometric" => geometric(&mut c, order),
        "coloring-sum" => coloring_sum(&mut c, order, lim),
        "complete-graph" => complete_graph(&mut c, order, lim),
        "plethysm" => plethysm(&mut c),
        "configuration" => configuration(&mut c, order, lim),
        "charvar" => charvar(&mut c, order),
        "abc" => abc(&mut c, order),
        "basis" => basis(&mut c, lim),
        "serre-duality" => serre_duality(&mut c),
        _ => return Err(SuiteError::UnknownSuite(name.to_string())),
    };
    let counterexample = match outcome {
        Ok(()) => None,
        Err(SuiteError::Counterexample(msg)) => Some(msg),
        Err(e) => return Err(e),
    };
    Ok(SuiteReport {
        name: name.to_string(),
        checks: c.checks,
        counterexample,
    })
}
