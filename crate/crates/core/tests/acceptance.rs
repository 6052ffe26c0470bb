//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines are
//! always visible in `cargo test` output.

mod common;

use biregular::exact::{ExactMatrix, RatPolynomial};
use biregular::graph::{classify, make_named, Graph, Kind};
use biregular::harness::{enumerate_connected, enumerate_connected_filtered, run_scan, Check, Dedup, ScanJob, Shard};
use biregular::relations::{
    eigen_transport_check, find_relation, j_relation, solve_polynomial_for_j, verify_polynomial_identity, MatrixId,
};
use biregular::spectral::{build_matrices, q_charpoly_from_a, verify_biregular_identity};
use biregular::trees::{
    spanning_trees_biregular_spectral, spanning_trees_matrixtree, trees_cube_layer, trees_subspace_layer,
};
use common::{brute_force_spanning_trees, from_roots, oracle_charpoly, signless};
use num_bigint::BigInt;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn named(name: &str, params: &[u64]) -> Graph {
    make_named(name, params).expect("fixture family")
}

fn poly(c: &[i64]) -> RatPolynomial {
    RatPolynomial::from_i64s(c)
}

fn c1_p4_identity() -> Outcome {
    let p4 = named("path", &[4]);
    let f = poly(&[0, -2, 0, 1]);
    let g = poly(&[-1, 6, -5, 1]);
    ensure(verify_polynomial_identity(&p4, &f, MatrixId::A, &g, MatrixId::Q).map_err(|e| e.to_string())?, "A(A^2-2I) != Q^3-5Q^2+6Q-I")?;
    let report = find_relation(&p4, MatrixId::A, MatrixId::Q).map_err(|e| e.to_string())?;
    ensure(report.nontrivial, "kernel empty")?;
    ensure(report.contains(&f, &g), "pair not in kernel span")?;
    Ok(format!("identity holds; kernel dim {} contains the pair", report.kernel.len()))
}

fn c2_ag_negative() -> Outcome {
    let ag = named("a_g", &[]);
    let report = find_relation(&ag, MatrixId::A, MatrixId::Q).map_err(|e| e.to_string())?;
    ensure(report.columns == 7, format!("expected 7 columns, got {}", report.columns))?;
    ensure(report.kernel.is_empty() && report.rank == 7, "found a relation")?;
    Ok("I, A, A^2, A^3, Q, Q^2, Q^3 independent (rank 7)".into())
}

fn c3_g_prime() -> Outcome {
    let gp = named("g_prime", &[]);
    let al = verify_polynomial_identity(&gp, &poly(&[0, -3, 3]), MatrixId::A, &poly(&[12, -20, 9, -1]), MatrixId::L);
    let ql = verify_polynomial_identity(&gp, &poly(&[0, -21, 3]), MatrixId::Q, &poly(&[-24, -25, 15, -2]), MatrixId::L);
    ensure(al == Ok(true), "3A^2-3A = -L^3+9L^2-20L+12I fails")?;
    ensure(ql == Ok(true), "3Q^2-21Q = -2L^3+15L^2-25L-24I fails")?;
    ensure(classify(&gp).kind == Kind::Neither, "G' should be neither regular nor biregular")?;
    Ok("both identities exact; G' is neither regular nor biregular".into())
}

/// Connected biregular graphs up to isomorphism with `2 <= n <= 7`, plus the
/// named fixtures.
fn biregular_sweep() -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=7)
        .flat_map(|n| {
            enumerate_connected_filtered(n, Shard::ALL, true, |g| classify(g).is_biregular())
                .expect("n within cap")
                .collect::<Vec<_>>()
        })
        .collect();
    out.extend([
        named("complete_bipartite", &[1, 3]),
        named("complete_bipartite", &[2, 3]),
        named("complete_bipartite", &[3, 3]),
        named("cube", &[4, 2]),
        named("subspace", &[2, 1, 2]),
    ]);
    out
}

fn c4_biregular_identities(sweep: &[Graph]) -> Outcome {
    for g in sweep {
        let r = verify_biregular_identity(g).map_err(|e| format!("{}: {e}", g.to_graph6().unwrap()))?;
        ensure(r.all(), format!("{}: {r:?}", g.to_graph6().unwrap()))?;
    }
    Ok(format!("{} graphs, all three identities exact", sweep.len()))
}

fn c5_transport(sweep: &[Graph]) -> Outcome {
    for g in sweep {
        let name = g.to_graph6().unwrap();
        let via_a = q_charpoly_from_a(g).map_err(|e| format!("{name}: {e}"))?;
        let direct = build_matrices(g).q.charpoly_int().unwrap();
        ensure(via_a == direct, format!("{name}: {via_a} != {direct}"))?;
        ensure(via_a.to_rational().coeffs() == oracle_charpoly(&signless(g)).as_slice(), format!("{name}: oracle disagrees"))?;
    }
    let star = q_charpoly_from_a(&named("complete_bipartite", &[1, 3])).unwrap();
    ensure(star.to_rational().coeffs() == from_roots(&[0, 4, 1, 1]).as_slice(), "K_{1,3} value")?;
    let k23 = q_charpoly_from_a(&named("complete_bipartite", &[2, 3])).unwrap();
    ensure(k23.to_rational().coeffs() == from_roots(&[0, 5, 2, 2, 3]).as_slice(), "K_{2,3} value")?;
    Ok(format!("{} graphs; K13 -> {star}; K23 -> {k23}", sweep.len()))
}

fn c6_trees() -> Outcome {
    let mut checked = 0;
    for n in 2..=6u64 {
        for k in 1..=n / 2 {
            let g = named("cube", &[n, k]);
            let mt = spanning_trees_matrixtree(&g);
            let sp = spanning_trees_biregular_spectral(&g).map_err(|e| e.to_string())?;
            let cf = trees_cube_layer(n, k).map_err(|e| e.to_string())?;
            ensure(mt == sp && sp == cf, format!("C_({n},{k}): {mt} / {sp} / {cf}"))?;
            checked += 1;
        }
    }
    ensure(trees_cube_layer(4, 2) == Ok(BigInt::from(128)), "C_(4,2) != 128")?;
    for (n, k) in [(2, 1), (3, 1), (4, 1), (4, 2)] {
        let g = named("subspace", &[n, k, 2]);
        let mt = spanning_trees_matrixtree(&g);
        let sp = spanning_trees_biregular_spectral(&g).map_err(|e| e.to_string())?;
        let cf = trees_subspace_layer(n, k, 2).map_err(|e| e.to_string())?;
        ensure(mt == sp && sp == cf, format!("C_({n},{k})(2): {mt} / {sp} / {cf}"))?;
        checked += 1;
    }
    let k23 = named("complete_bipartite", &[2, 3]);
    let brute = brute_force_spanning_trees(&k23);
    ensure(brute == 12 && spanning_trees_matrixtree(&k23) == BigInt::from(12), format!("K23 brute force {brute}"))?;
    Ok(format!("{checked} layer graphs agree three ways; K23 = 12 by brute force"))
}

fn scan(job: ScanJob, what: &str) -> Outcome {
    let r = run_scan(&job).map_err(|e| e.to_string())?;
    ensure(r.mismatches.is_empty(), format!("{what}: mismatches {:?}", r.mismatches))?;
    ensure(r.counterexamples.is_empty(), format!("{what}: counterexamples {:?}", r.counterexamples))?;
    Ok(format!(
        "{what}: {} graphs examined ({} labeled connected), none found",
        r.counters.examined, r.counters.connected_count
    ))
}

fn c7_theorem_table() -> Outcome {
    let mut job = ScanJob::new(6, [Check::TheoremTable]);
    job.r_max = 3;
    scan(job, "theorem_table n<=6 r<=3")
}

fn c8_conjectures() -> Outcome {
    let mut square = ScanJob::new(7, [Check::ConSquare]);
    square.dedup = Dedup::Auto;
    let a = scan(square, "con_square n<=7")?;
    let mut full = ScanJob::new(6, [Check::ConFull]);
    full.r_max = 4;
    let b = scan(full, "con_full n<=6 r<=4")?;
    Ok(format!("{a}; {b}"))
}

fn c9_j_theory() -> Outcome {
    let mut regular = 0;
    for n in 1..=7 {
        let graphs = enumerate_connected_filtered(n, Shard::ALL, true, |g| classify(g).is_regular()).unwrap();
        for g in graphs {
            let name = g.to_graph6().unwrap();
            let rep = j_relation(&g).map_err(|e| format!("{name}: {e}"))?;
            let m = build_matrices(&g).a.eval_int_poly(&rep.m_prime);
            ensure(m == ExactMatrix::ones(g.n()).scale(&rep.c), format!("{name}: m'(A) != cJ"))?;
            let deg = rep.m_prime.degree().unwrap_or(0);
            if deg > 0 {
                ensure(solve_polynomial_for_j(&g, deg - 1).is_none(), format!("{name}: lower-degree solution"))?;
            }
            regular += 1;
        }
    }
    let mut others = 0;
    for n in 2..=6 {
        for g in enumerate_connected(n, Shard::ALL, true).unwrap().filter(|g| !classify(g).is_regular()) {
            let deg = build_matrices(&g).a.minpoly().degree().unwrap();
            ensure(solve_polynomial_for_j(&g, deg - 1).is_none(), format!("{}: f(A) = J solvable", g.to_graph6().unwrap()))?;
            others += 1;
        }
    }
    let petersen = j_relation(&named("petersen", &[])).map_err(|e| e.to_string())?;
    ensure(petersen.srg_params == Some((10, 3, 0, 1)), format!("Petersen srg {:?}", petersen.srg_params))?;
    Ok(format!("{regular} regular graphs minimal; {others} non-regular graphs unsolvable; Petersen srg (10,3,0,1)"))
}

fn c10_eigen_transport() -> Outcome {
    let p4 = named("path", &[4]);
    ensure(
        eigen_transport_check(&p4, &poly(&[0, -2, 0, 1]), MatrixId::A, &poly(&[-1, 6, -5, 1]), MatrixId::Q) == Ok(true),
        "P4 pair",
    )?;
    let mut relations = 0;
    for n in 2..=5 {
        for g in enumerate_connected(n, Shard::ALL, false).unwrap() {
            for x in [MatrixId::A, MatrixId::Q, MatrixId::L] {
                for y in [MatrixId::A, MatrixId::Q, MatrixId::L] {
                    if x == y {
                        continue;
                    }
                    let report = find_relation(&g, x, y).map_err(|e| e.to_string())?;
                    for (f, h) in &report.kernel {
                        let ok = eigen_transport_check(&g, &f.to_rational(), x, &h.to_rational(), y);
                        ensure(ok == Ok(true), format!("{} {x}/{y}: {ok:?}", g.to_graph6().unwrap()))?;
                        relations += 1;
                    }
                }
            }
        }
    }
    Ok(format!("P4 pair and {relations} emitted relations transport spectra exactly"))
}

fn main() {
    let mut failures = 0;
    let mut report = |id: u32, title: &str, budget: Duration, run: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let within = took <= budget;
        let (status, detail) = match (&outcome, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; exceeded budget {budget:?}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {id:>2} {status} [{:>8.2}s] {title}: {detail}", took.as_secs_f64());
    };

    let sweep = biregular_sweep();
    let secs = Duration::from_secs;
    report(1, "P4 golden identity", secs(1), &c1_p4_identity);
    report(2, "A_G negative control", secs(1), &c2_ag_negative);
    report(3, "G' counterexample pair", secs(1), &c3_g_prime);
    report(4, "biregular identity sweep", secs(300), &|| c4_biregular_identities(&sweep));
    report(5, "A-to-Q transport", secs(300), &|| c5_transport(&sweep));
    report(6, "spanning trees three ways", secs(120), &c6_trees);
    report(7, "classification scan", secs(600), &c7_theorem_table);
    report(8, "conjecture scans", secs(3600), &c8_conjectures);
    report(9, "J-theory", secs(600), &c9_j_theory);
    report(10, "eigen-transport", secs(300), &c10_eigen_transport);

    if failures > 0 {
        println!("acceptance: {failures} criterion(s) failed");
        std::process::exit(1);
    }
    println!("acceptance: all 10 criteria passed");
}
