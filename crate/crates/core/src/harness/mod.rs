//! Exhaustive scans over small connected graphs: counterexample searches
//! for the two open conjectures, the classification-theorem comparator and
//! the eigenvector lemmas.
//!
//! Work is split into blocks of consecutive masks. Blocks run in parallel
//! and are merged back in mask order, so results do not depend on the
//! number of workers. A checkpoint, if requested, is rewritten after every
//! batch of blocks.

mod checkpoint;
mod enumerate;

pub use checkpoint::{load_checkpoint, Checkpoint, CHECKPOINT_VERSION};
pub use enumerate::{enumerate_connected, enumerate_connected_filtered, Enumerator, Shard, SCAN_CAP};

use crate::error::{Error, Result};
use crate::graph::{classify, Graph, Kind};
use crate::radical::{check_eigen_condition, Condition};
use crate::relations::{classify_vs_theorem, power_relation_exists, MatrixId};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    ConSquare,
    ConFull,
    TheoremTable,
    LemmaConditions,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::ConSquare, Check::ConFull, Check::TheoremTable, Check::LemmaConditions];

    pub fn name(self) -> &'static str {
        match self {
            Check::ConSquare => "con_square",
            Check::ConFull => "con_full",
            Check::TheoremTable => "theorem_table",
            Check::LemmaConditions => "lemma_conditions",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Check> {
        let norm = s.replace('-', "_");
        Check::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::BadParams(format!("unknown check {s:?}")))
    }
}

/// Canonical-representative filtering policy.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum Dedup {
    /// Deduplicate for `n <= 6`, where the permutation test is cheap.
    #[default]
    Auto,
    Always,
    Never,
}

impl Dedup {
    pub fn applies(self, n: usize) -> bool {
        match self {
            Dedup::Auto => n <= 6,
            Dedup::Always => true,
            Dedup::Never => false,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Dedup::Auto => "auto",
            Dedup::Always => "always",
            Dedup::Never => "never",
        }
    }
}

impl FromStr for Dedup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Dedup> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(Dedup::Auto),
            "always" | "on" | "true" => Ok(Dedup::Always),
            "never" | "off" | "false" => Ok(Dedup::Never),
            _ => Err(Error::BadParams(format!("unknown dedup policy {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanJob {
    pub n_max: usize,
    pub checks: BTreeSet<Check>,
    pub r_max: u32,
    pub shard: Shard,
    pub dedup: Dedup,
    /// Skip the `A^r = f(NL)` solve when `D^{1/2} 1` is not an eigenvector
    /// of `A^2`, which every solution forces.
    pub prune: bool,
    /// Worker threads; 0 lets the thread pool decide.
    pub workers: usize,
}

impl ScanJob {
    pub fn new(n_max: usize, checks: impl IntoIterator<Item = Check>) -> ScanJob {
        ScanJob {
            n_max,
            checks: checks.into_iter().collect(),
            r_max: 4,
            shard: Shard::ALL,
            dedup: Dedup::Auto,
            prune: true,
            workers: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max > SCAN_CAP {
            return Err(Error::CapExceeded { n: self.n_max, cap: SCAN_CAP });
        }
        if self.n_max < 1 {
            return Err(Error::BadParams("n_max must be at least 1".into()));
        }
        if self.r_max < 1 {
            return Err(Error::BadParams("r_max must be at least 1".into()));
        }
        Shard::new(self.shard.index, self.shard.count)?;
        Ok(())
    }

    /// Everything that influences results, as one line (workers excluded).
    pub fn fingerprint(&self) -> String {
        let checks: Vec<&str> = self.checks.iter().map(|c| c.name()).collect();
        format!(
            "n_max={} checks={} r_max={} shard={} dedup={} prune={}",
            self.n_max,
            checks.join(","),
            self.r_max,
            self.shard,
            self.dedup.name(),
            self.prune
        )
    }
}

/// One recorded failure: a conjecture counterexample, a lemma violation or a
/// disagreement with the predicted existence table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Finding {
    pub n: usize,
    pub graph6: String,
    pub check: String,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanCounters {
    /// Labeled masks in the shard, over `2 <= n <= n_max`.
    pub graphs_visited: u64,
    pub connected_count: u64,
    /// Connected graphs that survived deduplication and were checked.
    pub examined: u64,
    pub regular: u64,
    pub biregular: u64,
    pub neither: u64,
    /// `A^r = f(NL)` solves skipped by the `A^2` eigenvector test.
    pub pruned: u64,
    /// `A^r = f(NL)` solves actually run.
    pub solves: u64,
}

impl ScanCounters {
    fn add(&mut self, o: &ScanCounters) {
        self.graphs_visited += o.graphs_visited;
        self.connected_count += o.connected_count;
        self.examined += o.examined;
        self.regular += o.regular;
        self.biregular += o.biregular;
        self.neither += o.neither;
        self.pruned += o.pruned;
        self.solves += o.solves;
    }
}

#[derive(Clone, Debug, Default)]
pub struct ScanResult {
    pub counters: ScanCounters,
    pub counterexamples: Vec<Finding>,
    pub mismatches: Vec<Finding>,
    pub elapsed: Duration,
}

impl PartialEq for ScanResult {
    /// Ignores `elapsed`.
    fn eq(&self, other: &Self) -> bool {
        self.counters == other.counters
            && self.counterexamples == other.counterexamples
            && self.mismatches == other.mismatches
    }
}

impl ScanResult {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.mismatches.is_empty()
    }

    /// Associative, commutative merge; findings are kept sorted.
    pub fn merge(&mut self, other: &ScanResult) {
        self.counters.add(&other.counters);
        self.counterexamples.extend(other.counterexamples.iter().cloned());
        self.mismatches.extend(other.mismatches.iter().cloned());
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.mismatches.sort();
        self.mismatches.dedup();
        self.elapsed = self.elapsed.max(other.elapsed);
    }
}

const BLOCK: u64 = 1 << 12;
const BATCH_BLOCKS: u64 = 64;

pub fn run_scan(job: &ScanJob) -> Result<ScanResult> {
    run_scan_inner(job, None)
}

/// Like [`run_scan`], resuming from `path` if it holds a checkpoint for the
/// same job and rewriting it after each batch.
pub fn run_scan_with_checkpoint(job: &ScanJob, path: &Path) -> Result<ScanResult> {
    run_scan_inner(job, Some(path))
}

fn run_scan_inner(job: &ScanJob, path: Option<&Path>) -> Result<ScanResult> {
    job.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.workers)
        .build()
        .map_err(|e| Error::BadParams(format!("thread pool: {e}")))?;

    let mut state = match path.filter(|p| p.exists()) {
        Some(p) => {
            let cp = load_checkpoint(p)?;
            if cp.fingerprint != job.fingerprint() {
                return Err(Error::Checkpoint(format!(
                    "checkpoint is for job `{}`, not `{}`",
                    cp.fingerprint,
                    job.fingerprint()
                )));
            }
            cp
        }
        None => Checkpoint::fresh(job),
    };
    let prior_elapsed = state.result.elapsed;

    while state.next_n <= job.n_max {
        let n = state.next_n;
        let e = if job.dedup.applies(n) { Enumerator::new(n)? } else { Enumerator::labeled(n)? };
        let dedup = job.dedup.applies(n);
        let total = e.mask_count();
        while state.next_mask < total {
            let first = state.next_mask;
            let blocks: Vec<u64> = (0..BATCH_BLOCKS).map(|b| first + b * BLOCK).take_while(|&s| s < total).collect();
            let parts: Vec<ScanResult> = pool.install(|| {
                blocks
                    .par_iter()
                    .map(|&s| scan_block(job, &e, dedup, s, (s + BLOCK).min(total)))
                    .collect()
            });
            for part in &parts {
                state.result.merge(part);
            }
            state.next_mask = (first + BATCH_BLOCKS * BLOCK).min(total);
            state.result.elapsed = prior_elapsed + start.elapsed();
            if let Some(p) = path {
                state.save(p)?;
            }
        }
        state.next_n += 1;
        state.next_mask = 0;
    }
    state.result.elapsed = prior_elapsed + start.elapsed();
    if let Some(p) = path {
        state.save(p)?;
    }
    Ok(state.result)
}

fn scan_block(job: &ScanJob, e: &Enumerator, dedup: bool, start: u64, end: u64) -> ScanResult {
    let mut out = ScanResult::default();
    for mask in (start..end).filter(|&m| job.shard.contains(m)) {
        out.counters.graphs_visited += 1;
        if !e.is_connected_mask(mask) {
            continue;
        }
        out.counters.connected_count += 1;
        if dedup && !e.is_canonical(mask) {
            continue;
        }
        out.counters.examined += 1;
        check_graph(job, &e.graph(mask), &mut out);
    }
    out
}

fn finding(g: &Graph, check: &str, witness: String) -> Finding {
    Finding {
        n: g.n(),
        graph6: g.to_graph6().expect("scan graphs are small"),
        check: check.to_string(),
        witness,
    }
}

/// Runs the job's checks on one connected graph with `n >= 2`.
pub fn check_graph(job: &ScanJob, g: &Graph, out: &mut ScanResult) {
    let class = classify(g);
    match class.kind {
        Kind::Regular(_) => out.counters.regular += 1,
        Kind::Biregular { .. } => out.counters.biregular += 1,
        Kind::Neither => out.counters.neither += 1,
    }
    let neither = class.kind == Kind::Neither;
    let cond = |c| check_eigen_condition(g, c).expect("connected graphs on 2+ vertices have no isolated vertex");

    // Computed lazily: most graphs fail it, and then every A^r = f(NL) solve
    // can be skipped.
    let mut a2_condition = None;
    let mut a2 = || a2_condition.get_or_insert_with(|| cond(Condition::Dsqrt1A2)).clone();

    if job.checks.contains(&Check::ConSquare) && neither {
        if let Some(lambda) = a2() {
            out.counterexamples.push(finding(g, "con_square", format!("A^2 D^(1/2)1 = ({lambda}) D^(1/2)1")));
        }
    }

    if job.checks.contains(&Check::ConFull) && neither {
        if job.prune && a2().is_none() {
            out.counters.pruned += 1;
        } else {
            out.counters.solves += 1;
            for r in 1..=job.r_max {
                let rel = power_relation_exists(g, MatrixId::A, MatrixId::NL, r).expect("no isolated vertices");
                if let Some(rel) = rel {
                    out.counterexamples.push(finding(g, "con_full", rel.to_string()));
                    break;
                }
            }
        }
    }

    if job.checks.contains(&Check::TheoremTable) {
        let cmp = classify_vs_theorem(g, job.r_max).expect("scan graphs are connected");
        for p in &cmp.mismatches {
            let witness = format!("{}^r = f({}): predicted {:?}, found r = {:?}", p.x, p.y, p.predicted, p.found_r);
            out.mismatches.push(finding(g, "theorem_table", witness));
        }
        for p in &cmp.con_full_candidates {
            out.counterexamples.push(finding(g, "con_full", format!("A^{} = f(NL) found by theorem_table", p.found_r.unwrap())));
        }
    }

    if job.checks.contains(&Check::LemmaConditions) {
        let mut violate = |name: &str, detail: &str| {
            out.counterexamples.push(finding(g, "lemma_conditions", format!("{name}: {detail}")));
        };
        let reg_or_bireg = class.is_regular_or_biregular();
        let regular = class.is_regular();
        let a = cond(Condition::Dsqrt1A);
        if a.is_some() && !reg_or_bireg {
            violate("L-NL", "D^(1/2)1 is an eigenvector of A");
        }
        if a.is_none() && reg_or_bireg {
            violate("L-NL converse", "regular or biregular but D^(1/2)1 is not an eigenvector of A");
        }
        if cond(Condition::Dsqrt1Q).is_some() && !regular {
            violate("L-NLQ", "D^(1/2)1 is an eigenvector of Q");
        }
        if cond(Condition::OneNl).is_some() && !regular {
            violate("L-NLL", "1 is an eigenvector of NL");
        }
        if let Some(coloring) = &class.bipartition {
            if (ones_eigen_a2(g, None) || ones_eigen_a2(g, Some(coloring))) && !reg_or_bireg {
                violate("L-1", "1 or 1' is an eigenvector of A^2");
            }
        }
    }
}

/// Whether `1` (or the signed vector `1'` from a 2-coloring) is an
/// eigenvector of `A^2`, by direct integer evaluation.
pub fn ones_eigen_a2(g: &Graph, coloring: Option<&[u8]>) -> bool {
    let n = g.n();
    let x: Vec<i64> = (0..n).map(|v| coloring.map_or(1, |c| if c[v] == 0 { 1 } else { -1 })).collect();
    let apply = |x: &[i64]| -> Vec<i64> { (0..n).map(|v| g.neighbors(v).map(|u| x[u]).sum()).collect() };
    let y = apply(&apply(&x));
    // y = lambda x with x_v = +-1, so lambda = y_v x_v for every v.
    let lambda = y[0] * x[0];
    (0..n).all(|v| y[v] == lambda * x[v])
}
