//! Command-line front end. [`run`] does all the work and returns the exit
//! code with captured output so tests can drive it without a subprocess.
//!
//! Exit codes: 0 on success, 2 when the command ran but the property it
//! checks failed, 1 on usage or input errors.

pub mod report;

use biregular::exact::{parse_rat_polynomial, ExactMatrix};
use biregular::graph::{classify, parse_edge_list, parse_graph6, Family, Graph, Kind};
use biregular::harness::{run_scan, run_scan_with_checkpoint, Check, Dedup, ScanJob, Shard};
use biregular::relations::{
    eigen_transport_check, find_relation, j_relation, power_relation_exists, verify_polynomial_identity,
    verify_power_relation, MatrixId, PowerRelation,
};
use biregular::spectral::{build_matrices, charpoly_nl, transport, verify_biregular_identity};
use biregular::trees::{
    spanning_trees_biregular_spectral, spanning_trees_matrixtree, trees_cube_layer, trees_subspace_layer,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{poly, poly_fields, radical, Format, Report};
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "biregular", version, about = "Exact spectral computations on small graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file (`u-v` tokens, optional `n=<count>`).
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// Named family, e.g. `path:4`, `cube:4,2`, `subspace:3,1,2`, `petersen`.
    #[arg(long, value_name = "NAME:PARAMS")]
    family: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TreeMethod {
    Matrixtree,
    Spectral,
    Cube,
    Subspace,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Vertex count, degrees, connectivity and degree class.
    Info {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Characteristic and minimal polynomial of A, Q, L or NL.
    Charpoly {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_matrix)]
        matrix: MatrixId,
    },
    /// Check the Q, L and NL identities of a biregular graph.
    VerifyBiregular {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Compute charpoly(Q) from charpoly(A) and compare with the direct one.
    Transport {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Count spanning trees.
    Trees {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = TreeMethod::Matrixtree)]
        method: TreeMethod,
    },
    /// Find all f(X) = g(Y), or with --power/--rmax solve X^r = f(Y).
    Relate {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_matrix)]
        x: MatrixId,
        #[arg(long, value_parser = parse_matrix)]
        y: MatrixId,
        /// Solve X^r = f(Y) for this r only.
        #[arg(long, conflicts_with = "rmax")]
        power: Option<u32>,
        /// Solve X^r = f(Y) for the smallest r in 1..=RMAX.
        #[arg(long)]
        rmax: Option<u32>,
    },
    /// Check a given pair f(X) = g(Y), then compare the spectra of both sides.
    Identity {
        #[command(flatten)]
        graph: GraphInput,
        /// Polynomial such as `x^3 - 2x` or a coefficient list `0,-2,0,1`.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_parser = parse_matrix, default_value = "A")]
        x: MatrixId,
        #[arg(long, value_parser = parse_matrix, default_value = "Q")]
        y: MatrixId,
    },
    /// The polynomial m'(A) = cJ of a connected regular graph.
    Jpoly {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Exhaustive scan over connected graphs on 2..=NMAX vertices.
    Scan {
        #[arg(long)]
        nmax: usize,
        /// Checks to run: con_square, con_full, theorem_table, lemma_conditions.
        #[arg(long, required = true, value_delimiter = ',', value_parser = parse_check)]
        check: Vec<Check>,
        /// Worker threads (0 picks a default).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_parser = parse_shard, default_value = "0/1")]
        shard: Shard,
        /// Isomorphism deduplication: auto, always or never.
        #[arg(long, value_parser = parse_dedup, default_value = "auto")]
        dedup: Dedup,
        #[arg(long, value_name = "FILE")]
        checkpoint: Option<PathBuf>,
        /// Run every A^r = f(NL) solve instead of skipping hopeless ones.
        #[arg(long)]
        no_prune: bool,
        #[arg(long, default_value_t = 4)]
        rmax: u32,
    },
}

fn parse_matrix(s: &str) -> Result<MatrixId, String> {
    s.parse().map_err(|e: biregular::Error| e.to_string())
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: biregular::Error| e.to_string())
}

fn parse_shard(s: &str) -> Result<Shard, String> {
    s.parse().map_err(|e: biregular::Error| e.to_string())
}

fn parse_dedup(s: &str) -> Result<Dedup, String> {
    s.parse().map_err(|e: biregular::Error| e.to_string())
}

pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// The report plus whether the checked property held.
type Ran = (Report, bool);

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 1, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(cli.command) {
        Ok((report, held)) => Outcome {
            code: if held { 0 } else { 2 },
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err(msg) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn load(input: &GraphInput) -> Result<(Graph, String, Option<Family>), String> {
    let err = |e: biregular::Error| e.to_string();
    if let Some(s) = &input.graph6 {
        return Ok((parse_graph6(s).map_err(err)?, s.trim().to_string(), None));
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let g = parse_edge_list(&text).map_err(err)?;
        let label = g.to_graph6().unwrap_or_else(|_| format!("edges:{}", path.display()));
        return Ok((g, label, None));
    }
    let spec = input.family.as_deref().expect("clap enforces one input");
    let family: Family = spec.parse().map_err(err)?;
    Ok((family.build().map_err(err)?, family.to_string(), Some(family)))
}

fn execute(command: Command) -> Result<Ran, String> {
    let e = |e: biregular::Error| e.to_string();
    let done = |command, input: String, payload: Map<String, Value>, held| {
        Ok((Report { command, input: Some(input), payload: Value::Object(payload) }, held))
    };
    match command {
        Command::Info { graph } => {
            let (g, input, _) = load(&graph)?;
            done("info", input, info_payload(&g), true)
        }
        Command::Charpoly { graph, matrix } => {
            let (g, input, _) = load(&graph)?;
            let mut p = Map::new();
            p.insert("matrix".into(), json!(matrix.name()));
            if matrix == MatrixId::NL {
                poly_fields(&mut p, "charpoly", &charpoly_nl(&g).map_err(e)?);
                let walk = build_matrices(&g).random_walk().map_err(e)?;
                poly_fields(&mut p, "minpoly", &walk.minpoly());
            } else {
                let m = rational_matrix(&g, matrix);
                poly_fields(&mut p, "charpoly", &m.charpoly());
                poly_fields(&mut p, "minpoly", &m.minpoly());
            }
            done("charpoly", input, p, true)
        }
        Command::VerifyBiregular { graph } => {
            let (g, input, _) = load(&graph)?;
            let r = verify_biregular_identity(&g).map_err(e)?;
            let p = json!({
                "d1": r.d1,
                "d2": r.d2,
                "q_identity": r.q_identity,
                "l_identity": r.l_identity,
                "nl_identity": r.nl_identity,
                "all_hold": r.all(),
            });
            done("verify-biregular", input, into_map(p), r.all())
        }
        Command::Transport { graph } => {
            let (g, input, _) = load(&graph)?;
            let t = transport(&g).map_err(e)?;
            let direct = build_matrices(&g).q.charpoly_int().expect("Q is integral");
            let agrees = direct == t.q_charpoly;
            let mut p = into_map(json!({ "d1": t.d1, "d2": t.d2, "n1": t.n1, "n2": t.n2, "agrees": agrees }));
            poly_fields(&mut p, "a_charpoly", &t.a_charpoly);
            poly_fields(&mut p, "psi", &t.psi);
            poly_fields(&mut p, "q_charpoly", &t.q_charpoly);
            poly_fields(&mut p, "q_charpoly_direct", &direct);
            done("transport", input, p, agrees)
        }
        Command::Trees { graph, method } => {
            let (g, input, family) = load(&graph)?;
            let (name, count) = match method {
                TreeMethod::Matrixtree => ("matrixtree", spanning_trees_matrixtree(&g)),
                TreeMethod::Spectral => ("spectral", spanning_trees_biregular_spectral(&g).map_err(e)?),
                TreeMethod::Cube => match family {
                    Some(Family::CubeLayer { n, k }) => ("cube", trees_cube_layer(n as u64, k as u64).map_err(e)?),
                    _ => return Err("--method cube needs --family cube:n,k".into()),
                },
                TreeMethod::Subspace => match family {
                    Some(Family::SubspaceLayer { n, k, q }) => {
                        ("subspace", trees_subspace_layer(n as u64, k as u64, q as u64).map_err(e)?)
                    }
                    _ => return Err("--method subspace needs --family subspace:n,k,q".into()),
                },
            };
            done("trees", input, into_map(json!({ "method": name, "count": count.to_string() })), true)
        }
        Command::Relate { graph, x, y, power, rmax } => {
            let (g, input, _) = load(&graph)?;
            let p = match (power, rmax) {
                (None, None) => relate_kernel(&g, x, y)?,
                (Some(r), _) => relate_power(&g, x, y, r..=r)?,
                (None, Some(r)) => relate_power(&g, x, y, 1..=r)?,
            };
            done("relate", input, p, true)
        }
        Command::Identity { graph, f, g: gtext, x, y } => {
            let (g, input, _) = load(&graph)?;
            let f = parse_rat_polynomial(&f).map_err(e)?;
            let h = parse_rat_polynomial(&gtext).map_err(e)?;
            let holds = verify_polynomial_identity(&g, &f, x, &h, y).map_err(e)?;
            let mut p = into_map(json!({ "x": x.name(), "y": y.name(), "holds": holds }));
            poly_fields(&mut p, "f", &f);
            poly_fields(&mut p, "g", &h);
            let spectra = if holds { Some(eigen_transport_check(&g, &f, x, &h, y).map_err(e)?) } else { None };
            p.insert("spectra_agree".into(), json!(spectra));
            done("identity", input, p, holds && spectra == Some(true))
        }
        Command::Jpoly { graph } => {
            let (g, input, _) = load(&graph)?;
            let r = j_relation(&g).map_err(e)?;
            let mut p = into_map(json!({
                "k": r.k,
                "c": r.c.to_string(),
                "distinct_eigenvalues": r.distinct_eigenvalue_count,
                "srg": r.srg_params.map(|(n, k, l, m)| json!({ "n": n, "k": k, "lambda": l, "mu": m })),
            }));
            poly_fields(&mut p, "minpoly", &r.minpoly);
            poly_fields(&mut p, "m_prime", &r.m_prime);
            done("jpoly", input, p, true)
        }
        Command::Scan { nmax, check, jobs, shard, dedup, checkpoint, no_prune, rmax } => {
            let mut job = ScanJob::new(nmax, check);
            job.workers = jobs;
            job.shard = shard;
            job.dedup = dedup;
            job.prune = !no_prune;
            job.r_max = rmax;
            let result = match &checkpoint {
                Some(path) => run_scan_with_checkpoint(&job, path),
                None => run_scan(&job),
            }
            .map_err(e)?;
            let c = &result.counters;
            let findings = |list: &[biregular::harness::Finding]| -> Value {
                list.iter()
                    .map(|f| json!({ "n": f.n, "graph6": f.graph6, "check": f.check, "witness": f.witness }))
                    .collect()
            };
            let passed = result.passed();
            let conclusion = if passed {
                format!("no counterexamples or mismatches for 2 <= n <= {nmax} (evidence in range, not a proof)")
            } else {
                "findings reported".to_string()
            };
            let p = json!({
                "job": {
                    "n_max": nmax,
                    "checks": job.checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
                    "r_max": rmax,
                    "shard": shard.to_string(),
                    "dedup": dedup.name(),
                    "prune": job.prune,
                },
                "counters": {
                    "graphs_visited": c.graphs_visited,
                    "connected": c.connected_count,
                    "examined": c.examined,
                    "regular": c.regular,
                    "biregular": c.biregular,
                    "neither": c.neither,
                    "pruned": c.pruned,
                    "solves": c.solves,
                },
                "counterexamples": findings(&result.counterexamples),
                "mismatches": findings(&result.mismatches),
                "passed": passed,
                "conclusion": conclusion,
                "elapsed_ms": result.elapsed.as_millis() as u64,
            });
            Ok((Report { command: "scan", input: None, payload: p }, passed))
        }
    }
}

fn into_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("payloads are objects"),
    }
}

fn rational_matrix(g: &Graph, id: MatrixId) -> ExactMatrix {
    let m = build_matrices(g);
    match id {
        MatrixId::A => m.a,
        MatrixId::Q => m.q,
        MatrixId::L => m.l,
        MatrixId::NL => unreachable!("NL is handled through the random walk"),
    }
}

fn info_payload(g: &Graph) -> Map<String, Value> {
    let c = classify(g);
    let mut p = into_map(json!({
        "n": g.n(),
        "edge_count": g.edge_count(),
        "edges": g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>(),
        "degrees": g.degrees(),
        "connected": c.connected,
        "bipartite": c.bipartition.is_some(),
    }));
    let (kind, class) = match &c.kind {
        Kind::Regular(d) => {
            p.insert("degree".into(), json!(d));
            ("regular", format!("Regular({d})"))
        }
        Kind::Biregular { d1, d2, part1, part2 } => {
            p.insert("d1".into(), json!(d1));
            p.insert("d2".into(), json!(d2));
            p.insert("part1".into(), json!(part1));
            p.insert("part2".into(), json!(part2));
            ("biregular", format!("Biregular({d1},{d2})"))
        }
        Kind::Neither => ("neither", "Neither".to_string()),
    };
    p.insert("kind".into(), json!(kind));
    p.insert("classification".into(), json!(class));
    if let Ok(s) = g.to_graph6() {
        p.insert("graph6".into(), json!(s));
    }
    p
}

fn relate_kernel(g: &Graph, x: MatrixId, y: MatrixId) -> Result<Map<String, Value>, String> {
    let r = find_relation(g, x, y).map_err(|e| format!("{e} (use --power or --rmax for NL)"))?;
    let relations: Vec<Value> = r
        .kernel
        .iter()
        .map(|(f, h)| json!({ "f": poly(f), "f_text": f.to_string(), "g": poly(h), "g_text": h.to_string() }))
        .collect();
    let mut p = into_map(json!({
        "mode": "kernel",
        "x": x.name(),
        "y": y.name(),
        "columns": r.columns,
        "rank": r.rank,
        "nontrivial": r.nontrivial,
        "relations": relations,
    }));
    poly_fields(&mut p, "minpoly_x", &r.minpoly_x);
    poly_fields(&mut p, "minpoly_y", &r.minpoly_y);
    Ok(p)
}

fn power_json(g: &Graph, rel: &PowerRelation) -> Result<Value, String> {
    Ok(json!({
        "r": rel.r,
        "coeffs": rel.coeffs.iter().map(radical).collect::<Vec<_>>(),
        "f_text": rel.f_display(),
        "rational": rel.is_rational(),
        "verified": verify_power_relation(g, rel).map_err(|e| e.to_string())?,
    }))
}

fn relate_power(
    g: &Graph,
    x: MatrixId,
    y: MatrixId,
    range: std::ops::RangeInclusive<u32>,
) -> Result<Map<String, Value>, String> {
    if *range.start() == 0 {
        return Err("the power must be at least 1".into());
    }
    let mut found = None;
    let mut tried = Vec::new();
    for r in range {
        tried.push(r);
        if let Some(rel) = power_relation_exists(g, x, y, r).map_err(|e| e.to_string())? {
            found = Some(power_json(g, &rel)?);
            break;
        }
    }
    Ok(into_map(json!({
        "mode": "power",
        "x": x.name(),
        "y": y.name(),
        "tried": tried,
        "found": found.is_some(),
        "relation": found,
    })))
}
