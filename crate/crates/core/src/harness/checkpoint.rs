//! Line-oriented checkpoint files for resumable scans.
//!
//! ```text
//! biregular-scan-checkpoint 1
//! job n_max=7 checks=con_square r_max=4 shard=0/1 dedup=auto prune=true
//! next 7 262144
//! counters 2097150 1866256 ...
//! elapsed_ms 5123
//! counterexample<TAB>n<TAB>graph6<TAB>check<TAB>witness
//! mismatch<TAB>n<TAB>graph6<TAB>check<TAB>witness
//! ```

use super::{Finding, ScanCounters, ScanJob, ScanResult};
use crate::error::{Error, Result};
use std::path::Path;
use std::time::Duration;

pub const CHECKPOINT_VERSION: u32 = 1;
const MAGIC: &str = "biregular-scan-checkpoint";

#[derive(Clone, Debug, PartialEq)]
pub struct Checkpoint {
    pub fingerprint: String,
    /// Vertex count and first mask not yet scanned.
    pub next_n: usize,
    pub next_mask: u64,
    pub result: ScanResult,
}

impl Checkpoint {
    pub fn fresh(job: &ScanJob) -> Checkpoint {
        Checkpoint { fingerprint: job.fingerprint(), next_n: 2, next_mask: 0, result: ScanResult::default() }
    }

    pub fn render(&self) -> String {
        let c = &self.result.counters;
        let mut out = format!(
            "{MAGIC} {CHECKPOINT_VERSION}\njob {}\nnext {} {}\ncounters {} {} {} {} {} {} {} {}\nelapsed_ms {}\n",
            self.fingerprint,
            self.next_n,
            self.next_mask,
            c.graphs_visited,
            c.connected_count,
            c.examined,
            c.regular,
            c.biregular,
            c.neither,
            c.pruned,
            c.solves,
            self.result.elapsed.as_millis()
        );
        for (tag, list) in [("counterexample", &self.result.counterexamples), ("mismatch", &self.result.mismatches)] {
            for f in list {
                out.push_str(&format!("{tag}\t{}\t{}\t{}\t{}\n", f.n, f.graph6, f.check, f.witness));
            }
        }
        out
    }

    /// Writes atomically through a sibling temporary file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, self.render()).map_err(|e| Error::Checkpoint(format!("{}: {e}", tmp.display())))?;
        std::fs::rename(&tmp, path).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Checkpoint> {
        let bad = |what: &str| Error::Checkpoint(format!("malformed checkpoint: {what}"));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty file"))?;
        match header.split_once(' ') {
            Some((MAGIC, v)) if v.trim().parse::<u32>() == Ok(CHECKPOINT_VERSION) => {}
            Some((MAGIC, v)) => return Err(Error::Checkpoint(format!("unsupported checkpoint version {v}"))),
            _ => return Err(bad("missing header")),
        }
        let mut field = |key: &str| -> Result<String> {
            let line = lines.next().ok_or_else(|| bad(key))?;
            line.strip_prefix(key).and_then(|r| r.strip_prefix(' ')).map(str::to_string).ok_or_else(|| bad(key))
        };
        let fingerprint = field("job")?;
        let nums = |s: String, want: usize, what: &str| -> Result<Vec<u64>> {
            let v: Vec<u64> = s.split_whitespace().map(str::parse).collect::<std::result::Result<_, _>>().map_err(|_| bad(what))?;
            if v.len() == want {
                Ok(v)
            } else {
                Err(bad(what))
            }
        };
        let next = nums(field("next")?, 2, "next")?;
        let c = nums(field("counters")?, 8, "counters")?;
        let elapsed = nums(field("elapsed_ms")?, 1, "elapsed_ms")?[0];
        let mut result = ScanResult {
            counters: ScanCounters {
                graphs_visited: c[0],
                connected_count: c[1],
                examined: c[2],
                regular: c[3],
                biregular: c[4],
                neither: c[5],
                pruned: c[6],
                solves: c[7],
            },
            elapsed: Duration::from_millis(elapsed),
            ..ScanResult::default()
        };
        for line in lines.filter(|l| !l.is_empty()) {
            let parts: Vec<&str> = line.splitn(5, '\t').collect();
            let [tag, n, graph6, check, witness] = parts[..] else {
                return Err(bad("finding line"));
            };
            let f = Finding {
                n: n.parse().map_err(|_| bad("finding n"))?,
                graph6: graph6.into(),
                check: check.into(),
                witness: witness.into(),
            };
            match tag {
                "counterexample" => result.counterexamples.push(f),
                "mismatch" => result.mismatches.push(f),
                _ => return Err(bad("finding tag")),
            }
        }
        Ok(Checkpoint { fingerprint, next_n: next[0] as usize, next_mask: next[1], result })
    }
}

pub fn load_checkpoint(path: &Path) -> Result<Checkpoint> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
    Checkpoint::parse(&text)
}
