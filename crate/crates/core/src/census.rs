//! Census records: one line of JSON per isomorphism class of toric trinity.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::{build_graph, classify_components, ComponentSummary};
use crate::trinity::{canonical_form, save_trinity, Trinity};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusFlags {
    pub has_cyclic: bool,
    pub has_acyclic_nontrivial: bool,
    pub has_isolated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    pub genus: u32,
    pub canonical_digest: String,
    pub states: usize,
    pub components: ComponentSummary,
    pub flags: CensusFlags,
    /// The canonical trinity in the line format.
    pub trinity: String,
}

impl CensusRecord {
    pub fn of(t: &Trinity) -> CensusRecord {
        let c = crate::trinity::canonical_trinity(t);
        let g = build_graph(&c);
        let components = classify_components(&g);
        let flags = CensusFlags {
            has_cyclic: !components.cyclic_sizes.is_empty(),
            has_acyclic_nontrivial: components.acyclic_sizes.iter().any(|&s| s > 1),
            has_isolated: components.isolated > 0,
        };
        CensusRecord {
            n: c.n(),
            genus: c.genus(),
            canonical_digest: canonical_form(&c).digest(),
            states: g.node_count(),
            components,
            flags,
            trinity: save_trinity(&c),
        }
    }

    /// Component sizes add up to the number of states.
    pub fn is_consistent(&self) -> bool {
        self.components.total() == self.states
    }
}

/// Records keyed by digest. Loading tolerates a torn last line so an
/// interrupted run can be resumed.
#[derive(Clone, Debug, Default)]
pub struct CensusStore {
    pub records: BTreeMap<String, CensusRecord>,
}

impl CensusStore {
    pub fn load(path: &Path) -> io::Result<CensusStore> {
        let mut store = CensusStore::default();
        let file = match std::fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(store),
            Err(e) => return Err(e),
        };
        for line in io::BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CensusRecord>(&line) {
                Ok(r) => {
                    store.records.insert(r.canonical_digest.clone(), r);
                }
                Err(_) => break,
            }
        }
        Ok(store)
    }

    pub fn contains(&self, digest: &str) -> bool {
        self.records.contains_key(digest)
    }

    pub fn append(&mut self, out: &mut impl Write, r: CensusRecord) -> io::Result<()> {
        writeln!(out, "{}", serde_json::to_string(&r).expect("record serializes"))?;
        self.records.insert(r.canonical_digest.clone(), r);
        Ok(())
    }

    /// Records ordered by size, then digest.
    pub fn sorted(&self) -> Vec<&CensusRecord> {
        let mut v: Vec<&CensusRecord> = self.records.values().collect();
        v.sort_by(|a, b| (a.n, &a.canonical_digest).cmp(&(b.n, &b.canonical_digest)));
        v
    }

    /// Rewrites `path` with every record in sorted order.
    pub fn write_sorted(&self, path: &Path) -> io::Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = io::BufWriter::new(std::fs::File::create(&tmp)?);
            for r in self.sorted() {
                writeln!(f, "{}", serde_json::to_string(r).expect("record serializes"))?;
            }
            f.flush()?;
        }
        std::fs::rename(tmp, path)
    }

    pub fn summary(&self) -> CensusSummary {
        let mut s = CensusSummary::default();
        for r in self.records.values() {
            let row = s.by_n.entry(r.n).or_default();
            row.classes += 1;
            let acyclic = !r.components.acyclic_sizes.is_empty();
            match (r.flags.has_cyclic, acyclic) {
                (true, true) => row.both += 1,
                (true, false) => row.only_cyclic += 1,
                (false, _) => row.only_acyclic += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub classes: usize,
    pub only_cyclic: usize,
    pub only_acyclic: usize,
    pub both: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub by_n: BTreeMap<usize, CensusRow>,
}

impl fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>3} {:>8} {:>12} {:>13} {:>6}", "n", "classes", "only cyclic", "only acyclic", "both")?;
        for (n, r) in &self.by_n {
            writeln!(f, "{n:>3} {:>8} {:>12} {:>13} {:>6}", r.classes, r.only_cyclic, r.only_acyclic, r.both)?;
        }
        Ok(())
    }
}
