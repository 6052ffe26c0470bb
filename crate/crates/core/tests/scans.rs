use biregular::harness::{
    check_graph, run_scan, run_scan_with_checkpoint, Check, Checkpoint, Dedup, Enumerator, ScanJob, ScanResult, Shard,
};
use biregular::Error;

fn job(n_max: usize, checks: &[Check]) -> ScanJob {
    ScanJob::new(n_max, checks.iter().copied())
}

#[test]
fn lemma_conditions_hold_through_six_vertices() {
    let r = run_scan(&job(6, &[Check::LemmaConditions])).unwrap();
    assert!(r.passed(), "{:?}", r.counterexamples);
    assert_eq!(r.counters.examined, 1 + 2 + 6 + 21 + 112);
}

#[test]
fn con_square_labeled_and_deduplicated_agree() {
    let mut labeled = job(5, &[Check::ConSquare]);
    labeled.dedup = Dedup::Never;
    let mut canonical = labeled.clone();
    canonical.dedup = Dedup::Always;
    let (a, b) = (run_scan(&labeled).unwrap(), run_scan(&canonical).unwrap());
    assert!(a.passed() && b.passed());
    assert_eq!(a.counters.connected_count, b.counters.connected_count);
    assert_eq!(a.counters.examined, a.counters.connected_count);
    assert_eq!(b.counters.examined, 1 + 2 + 6 + 21);
}

#[test]
fn shards_partition_the_scan() {
    let base = job(5, &[Check::ConSquare, Check::TheoremTable]);
    let whole = run_scan(&base).unwrap();
    let mut merged = ScanResult::default();
    for i in 0..3 {
        let mut j = base.clone();
        j.shard = Shard::new(i, 3).unwrap();
        merged.merge(&run_scan(&j).unwrap());
    }
    assert_eq!(merged, whole);
}

#[test]
fn worker_count_does_not_change_results() {
    let mut one = job(6, &[Check::ConFull, Check::LemmaConditions]);
    one.workers = 1;
    let mut four = one.clone();
    four.workers = 4;
    assert_eq!(run_scan(&one).unwrap(), run_scan(&four).unwrap());
}

#[test]
fn pruning_only_skips_solves() {
    let pruned = job(6, &[Check::ConFull]);
    let mut full = pruned.clone();
    full.prune = false;
    let (a, b) = (run_scan(&pruned).unwrap(), run_scan(&full).unwrap());
    assert_eq!(a.counterexamples, b.counterexamples);
    assert_eq!(b.counters.pruned, 0);
    assert_eq!(a.counters.pruned + a.counters.solves, b.counters.solves);
    assert!(a.counters.pruned > 0);
}

#[test]
fn scan_cap_is_enforced() {
    assert!(matches!(run_scan(&job(9, &[Check::ConSquare])), Err(Error::CapExceeded { n: 9, cap: 8 })));
}

/// A checkpoint taken part-way through `n = 6` resumes to the same result
/// as an uninterrupted run.
#[test]
fn checkpoint_resume_matches_uninterrupted_run() {
    let j = job(6, &[Check::ConSquare, Check::TheoremTable]);
    let expected = run_scan(&j).unwrap();

    let mut cp = Checkpoint::fresh(&j);
    let mut before = j.clone();
    before.n_max = 5;
    cp.result = run_scan(&before).unwrap();
    let cut = 20_000;
    let e = Enumerator::new(6).unwrap();
    for mask in 0..cut {
        cp.result.counters.graphs_visited += 1;
        if !e.is_connected_mask(mask) {
            continue;
        }
        cp.result.counters.connected_count += 1;
        if e.is_canonical(mask) {
            cp.result.counters.examined += 1;
            check_graph(&j, &e.graph(mask), &mut cp.result);
        }
    }
    cp.next_n = 6;
    cp.next_mask = cut;

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.ckpt");
    cp.save(&path).unwrap();
    let resumed = run_scan_with_checkpoint(&j, &path).unwrap();
    assert_eq!(resumed, expected);

    // A finished checkpoint resumes to the same result without rescanning.
    assert_eq!(run_scan_with_checkpoint(&j, &path).unwrap(), expected);
}

#[test]
fn checkpoint_for_a_different_job_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.ckpt");
    run_scan_with_checkpoint(&job(4, &[Check::ConSquare]), &path).unwrap();
    let err = run_scan_with_checkpoint(&job(5, &[Check::ConSquare]), &path).unwrap_err();
    assert!(matches!(err, Error::Checkpoint(_)));
}
