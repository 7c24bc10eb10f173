//! Exit criteria. Each test prints one `PASS`/`FAIL` line and fails on any
//! mismatch. All comparisons are structural equality of exact rationals.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use plethora_core::chromgraph::{csf, csf_basis_matrix, cs_coloring_sum, h_in_csf_basis, WeightedGraph};
use plethora_core::exactalg::{solve, BiPoly, TSeries};
use plethora_core::genfun::{
    conf_ordered_epoly, equiv_config_epoly, ordered_sign_series, pe, pe_product_formula, pe_via_coloring, pe_via_hn,
    pl, symmetrized_config_epoly, unordered_config_series, CycleType,
};
use plethora_core::hodge::{
    abc_decompose, abc_sequences, birational_reduce, r_generator, r_generator_abc, serre_duality_power_sum_relation,
    two_var_eval, two_var_power_sum_expand, AbcPoly, AbcSequence, HodgeDiamond, ZGraded,
};
use plethora_core::symfun::{
    e_to_p, h_to_p, partitions_of, pleth_abstract, pleth_concrete, pleth_schur_via_jt, Partition, SymFun,
};
use plethora_core::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn report(id: u32, name: &str, check: impl FnOnce() -> Check) {
    let start = Instant::now();
    let outcome = check();
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(()) => println!("criterion {id:>2} PASS  {name} ({secs:.2}s)"),
        Err(why) => println!("criterion {id:>2} FAIL  {name} ({secs:.2}s): {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {id} failed: {why}");
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Display>(got: &T, want: &T, what: impl FnOnce() -> String) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: got {got}, expected {want}", what()))
    }
}

fn poly(s: &str) -> BiPoly {
    s.parse().unwrap()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn builtins() -> [(&'static str, HodgeDiamond); 3] {
    [
        ("P1", HodgeDiamond::p1()),
        ("P2", HodgeDiamond::p2()),
        ("elliptic", HodgeDiamond::elliptic_curve()),
    ]
}

#[test]
fn criterion_01_three_way_pe() {
    report(1, "three-way PE agreement at order 3", || {
        let lim = Limits::default();
        for (name, d) in builtins() {
            let f = d.e_polynomial(false);
            let product = pe_product_formula(&d, 3);
            let hn = pe_via_hn(&f, 3).map_err(|e| e.to_string())?;
            let coloring = pe_via_coloring(&f, 3, &lim).map_err(|e| e.to_string())?;
            ensure_eq(&hn, &product, || format!("{name}: h-route vs product"))?;
            ensure_eq(&coloring, &product, || format!("{name}: coloring route vs product"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_02_geometric_golden_value() {
    report(2, "PE[(1+uv)t] has t^k coefficient sum_j (uv)^j, k <= 5", || {
        let series = pe(&TSeries::monomial(5, poly("1 + u*v"), 1)).map_err(|e| e.to_string())?;
        for k in 0..=5u32 {
            let want = (0..=k).fold(BiPoly::zero(), |acc, j| acc + BiPoly::monomial(j, j));
            ensure_eq(series.coeff(k as usize), &want, || format!("t^{k}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_03_coloring_sum_matches_plethysm() {
    report(3, "signed coloring sum equals X_G plethysm", || {
        let lim = Limits::default();
        let graphs = [
            ("P3", WeightedGraph::path(3)),
            ("K3", WeightedGraph::complete(3)),
            ("C4", WeightedGraph::cycle(4)),
            ("K4", WeightedGraph::complete(4)),
            ("P2(1,2)", WeightedGraph::path(2).with_weights(vec![1, 2]).unwrap()),
        ];
        let order = 4;
        for (gname, g) in &graphs {
            let x = csf(g, &lim).map_err(|e| e.to_string())?;
            for f in ["1 + u*v", "-1 - u*v", "1 - u + 2*u*v"] {
                let f = poly(f);
                let lhs = cs_coloring_sum(g, &f, 1, order, &lim).map_err(|e| e.to_string())?;
                let rhs = pleth_concrete(&x, &f, 1, order).map_err(|e| e.to_string())?;
                ensure_eq(&lhs, &rhs, || format!("{gname}, f = {f}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_complete_graph_csf() {
    report(4, "X_{K_n} = n! e_n for n <= 6", || {
        let lim = Limits::default();
        let mut fact = int(1);
        for n in 1..=6u32 {
            fact *= int(n as i64);
            let x = csf(&WeightedGraph::complete(n as usize), &lim).map_err(|e| e.to_string())?;
            ensure_eq(&x, &e_to_p(n).scale(&fact), || format!("K{n}"))?;
        }
        Ok(())
    });
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

#[test]
fn criterion_05_newton_and_plethysm_axioms() {
    report(5, "Newton identity and plethysm rules", || {
        let e = |x: plethora_core::Error| x.to_string();
        // n h_n = sum_{i=1}^n h_{n-i} p_i
        for n in 1..=8u32 {
            let mut rhs = SymFun::zero();
            for i in 1..=n {
                rhs = &rhs + &(&h_to_p(n - i) * &SymFun::p(i));
            }
            ensure_eq(&h_to_p(n).scale(&int(n as i64)), &rhs, || format!("Newton at n = {n}"))?;
        }

        let order = 6;
        let f = TSeries::monomial(order, poly("1 + u*v"), 1);
        let g = TSeries::monomial(order, poly("u + v"), 1);
        let fg_sum = &f + &g;
        let h_of = |k: u32, s: &TSeries| plethora_core::symfun::pleth_series(&h_to_p(k), s);

        // sum rule
        for n in 0..=6u32 {
            let lhs = h_of(n, &fg_sum).map_err(e)?;
            let mut rhs = TSeries::zero(order);
            for k in 0..=n {
                rhs = &rhs + &(&h_of(k, &f).map_err(e)? * &h_of(n - k, &g).map_err(e)?);
            }
            ensure_eq(&lhs, &rhs, || format!("sum rule at n = {n}"))?;
        }

        // product rule over Schur functions, monomial sums f = 1 + uv, g = u + v
        let (fp, gp) = (poly("1 + u*v"), poly("u + v"));
        for n in 0..=4u32 {
            let lhs = pleth_concrete(&h_to_p(n), &(&fp * &gp), 2, 8).map_err(e)?;
            let mut rhs = TSeries::zero(8);
            for lambda in partitions_of(n) {
                let a = pleth_schur_via_jt(&lambda, &fp, 1, 8).map_err(e)?;
                let b = pleth_schur_via_jt(&lambda, &gp, 1, 8).map_err(e)?;
                rhs = &rhs + &(&a * &b);
            }
            ensure_eq(&lhs, &rhs, || format!("product rule at n = {n}"))?;
        }

        // multinomial rule h_r(mF) = sum over compositions of prod h_i(F)
        let base = poly("1 - u + u*v");
        for m in 1..=3u32 {
            let scaled = base.scale(&int(m as i64));
            for r in 0..=5u32 {
                let lhs = pleth_concrete(&h_to_p(r), &scaled, 1, 5).map_err(e)?;
                let mut rhs = TSeries::zero(5);
                for comp in compositions(r, m) {
                    let mut prod = TSeries::one(5);
                    for i in comp {
                        prod = &prod * &pleth_concrete(&h_to_p(i), &base, 1, 5).map_err(e)?;
                    }
                    rhs = &rhs + &prod;
                }
                ensure_eq(&lhs, &rhs, || format!("multinomial rule at m = {m}, r = {r}"))?;
            }
        }

        // h_r(2) = r + 1
        for r in 0..=8u32 {
            let got = pleth_abstract(&h_to_p(r), &SymFun::constant(int(2)));
            ensure_eq(&got, &SymFun::constant(int(r as i64 + 1)), || format!("h_{r}(2)"))?;
        }

        // h_n(p_n + 2) = sum_a (n - a + 1) h_a(p_n)
        for n in 1..=6u32 {
            let arg = &SymFun::p(n) + &SymFun::constant(int(2));
            let lhs = pleth_abstract(&h_to_p(n), &arg);
            let mut rhs = SymFun::zero();
            for a in 0..=n {
                rhs = &rhs + &pleth_abstract(&h_to_p(a), &SymFun::p(n)).scale(&int((n - a + 1) as i64));
            }
            ensure_eq(&lhs, &rhs, || format!("h_{n}(p_{n} + 2)"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_configuration_spaces() {
    report(6, "configuration-space series", || {
        let mut failures = Vec::new();
        let mut sub = |name: &str, check: Check| match check {
            Ok(()) => println!("    ok    {name}"),
            Err(why) => {
                println!("    FAIL  {name}: {why}");
                failures.push(format!("{name}: {why}"));
            }
        };

        sub("identity cycle type gives the falling factorial, n <= 4", {
            let mut out = Ok(());
            for (name, d) in builtins() {
                for signed in [false, true] {
                    let e = d.e_polynomial(signed);
                    for n in 0..=4u32 {
                        let mut falling = BiPoly::one();
                        for k in 0..n {
                            falling = falling * (&e - &BiPoly::from_int(k as i64));
                        }
                        let got = equiv_config_epoly(&e, &CycleType::identity(n));
                        if let Err(why) = ensure_eq(&got, &falling, || format!("{name}, n = {n}")) {
                            out = Err(why);
                        }
                        if conf_ordered_epoly(&e, n) != falling {
                            out = Err(format!("conf_ordered_epoly disagrees for {name}, n = {n}"));
                        }
                    }
                }
            }
            out
        });

        sub("elliptic sign series equals the expanded product, order 3", {
            let got = ordered_sign_series(&HodgeDiamond::elliptic_curve(), 3);
            let mut want = TSeries::one(3);
            for m in ["1", "u", "v", "u*v"] {
                let factor = &TSeries::one(3) + &TSeries::monomial(3, poly(m), 1);
                want = &want * &factor;
            }
            ensure_eq(&got, &want, || "elliptic".to_string())
        });

        sub("P1 unordered series has t^2 coefficient 1 + uv + u^2v^2", {
            let got = unordered_config_series(&HodgeDiamond::p1(), 2);
            ensure_eq(got.coeff(2), &poly("1 + u*v + u^2*v^2"), || "t^2".to_string())
        });

        sub("P1 unordered series matches the symmetrization average, n <= 3", {
            let got = unordered_config_series(&HodgeDiamond::p1(), 3);
            let e = HodgeDiamond::p1().e_polynomial(true);
            let mut out = Ok(());
            for n in 0..=3u32 {
                let avg = symmetrized_config_epoly(&e, n).negate_vars();
                if let Err(why) = ensure_eq(got.coeff(n as usize), &avg, || format!("t^{n}")) {
                    out = Err(why);
                    break;
                }
            }
            out
        });

        if failures.is_empty() {
            Ok(())
        } else {
            Err(failures.join("; "))
        }
    });
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    for _ in 0..rng.random_range(1..=3) {
        let k = rng.random_range(1..=order);
        let c = BigRational::new(BigInt::from(rng.random_range(-3i64..=3)), BigInt::from(rng.random_range(1i64..=2)));
        let m = BiPoly::term(c, rng.random_range(0..=2), rng.random_range(0..=2));
        s.add_to_coeff(k, &m);
    }
    s
}

#[test]
fn criterion_07_charvar_round_trip() {
    report(7, "pl(pe(f)) = f and pe(pl(g)) = g on 20 random inputs, order 6", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
        let e = |x: plethora_core::Error| x.to_string();
        for i in 0..20 {
            let f = random_series(&mut rng, 6);
            ensure_eq(&pl(&pe(&f).map_err(e)?).map_err(e)?, &f, || format!("pl(pe(f)), sample {i}"))?;
            let g = &TSeries::one(6) + &random_series(&mut rng, 6);
            ensure_eq(&pe(&pl(&g).map_err(e)?).map_err(e)?, &g, || format!("pe(pl(g)), sample {i}"))?;
        }
        Ok(())
    });
}

fn graded(n: u32, f: BiPoly) -> ZGraded {
    if f.is_zero() {
        ZGraded::new()
    } else {
        [(n, f)].into_iter().collect()
    }
}

fn show(z: &ZGraded) -> String {
    z.iter().map(|(k, p)| format!("({p})z^{k}")).collect::<Vec<_>>().join(" + ")
}

fn random_symmetric_diamond(rng: &mut ChaCha8Rng, n: u32) -> HodgeDiamond {
    let mut h = std::collections::BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n {
            if h.contains_key(&(p, q)) {
                continue;
            }
            let mult = rng.random_range(0..=3u32);
            for key in [(p, q), (q, p), (n - p, n - q), (n - q, n - p)] {
                h.insert(key, mult);
            }
        }
    }
    HodgeDiamond::new(n, h.into_iter().map(|((p, q), m)| (p, q, m))).unwrap()
}

#[test]
fn criterion_08_abc_coordinates() {
    report(8, "A/B/C recursions, generator factorization, decomposition", || {
        let e = |x: plethora_core::Error| x.to_string();
        for s in 1..=8u32 {
            let a = abc_sequences(s, AbcSequence::A).expand();
            let want = graded(s, BiPoly::monomial(s, 0) + BiPoly::monomial(0, s));
            if a != want {
                return Err(format!("A_{s} expands to {}", show(&a)));
            }
            let t = abc_sequences(s, AbcSequence::T).expand();
            let want = graded(s, BiPoly::one() + BiPoly::monomial(s, s));
            if t != want {
                return Err(format!("T_{s} expands to {}", show(&t)));
            }
        }
        for n in 0..=5u32 {
            for p in 0..=n {
                for q in 0..=p.min(n - p) {
                    let via = r_generator_abc(p, q, n).map_err(e)?.expand();
                    if via != graded(n, r_generator(p, q, n).map_err(e)?) {
                        return Err(format!("R_({p},{q},{n}) factorization gives {}", show(&via)));
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
        let mut diamonds: Vec<(String, HodgeDiamond)> =
            builtins().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
        diamonds.push(("random n = 3".to_string(), random_symmetric_diamond(&mut rng, 3)));
        for (name, d) in &diamonds {
            let back = abc_decompose(d).map_err(e)?.expand();
            if back != graded(d.dim(), d.e_polynomial(false)) {
                return Err(format!("{name}: decomposition expands to {}", show(&back)));
            }
        }
        let reduced = birational_reduce(&abc_decompose(&HodgeDiamond::p2()).map_err(e)?);
        ensure_eq(&reduced, &AbcPoly::a().pow(2), || "birational P2".to_string())
    });
}

#[test]
fn criterion_09_csf_bases() {
    report(9, "chromatic bases invertible and h_n round-trips, d <= 5", || {
        let lim = Limits::default();
        let e = |x: plethora_core::Error| x.to_string();
        for d in 1..=5usize {
            let families = [
                ("paths", (1..=d).map(WeightedGraph::path).collect::<Vec<_>>()),
                ("complete", (1..=d).map(WeightedGraph::complete).collect::<Vec<_>>()),
            ];
            for (fname, family) in &families {
                let m = csf_basis_matrix(family, d, &lim).map_err(e)?;
                // invertible iff every unit vector is solvable
                for j in 0..m.rows.len() {
                    let rhs: Vec<BigRational> = (0..m.rows.len()).map(|i| int((i == j) as i64)).collect();
                    solve(&m.entries, &rhs).map_err(|x| format!("{fname}, d = {d}: {x}"))?;
                }
                let coeffs = h_in_csf_basis(d, family, &lim).map_err(e)?;
                let mut back = SymFun::zero();
                for (lambda, c) in &coeffs {
                    let mut g = family[lambda.parts()[0] as usize - 1].clone();
                    for &k in &lambda.parts()[1..] {
                        g = g.disjoint_union(&family[k as usize - 1]);
                    }
                    back = &back + &csf(&g, &lim).map_err(e)?.scale(c);
                }
                ensure_eq(&back, &h_to_p(d as u32), || format!("{fname}, d = {d}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_serre_duality_power_sums() {
    report(10, "Serre duality in two-variable power sums", || {
        let e = |x: plethora_core::Error| x.to_string();
        for (name, d) in builtins() {
            let (lhs, rhs) = serre_duality_power_sum_relation(&d).map_err(e)?;
            ensure_eq(&lhs, &rhs, || name.to_string())?;
            ensure_eq(&two_var_eval(&lhs), &d.e_polynomial(false), || format!("{name} evaluation"))?;
        }
        let got = two_var_power_sum_expand(&poly("u*v^2 + u^2*v")).map_err(e)?;
        let want = &SymFun::p_lambda(Partition::new(vec![2, 1]).unwrap()) - &SymFun::p(3);
        ensure_eq(&got, &want, || "uv^2 + u^2v".to_string())?;
        ensure_eq(&two_var_eval(&got), &poly("u*v^2 + u^2*v"), || "expansion".to_string())?;
        Ok(())
    });
}
