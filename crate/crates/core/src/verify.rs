//! Theorem checks on a single trinity, reported by name.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::build::decompose;
use crate::clockwork::{empty_black_triangles, Clockwork, Direction, SiteLabel};
use crate::graph::{build_graph_with, lattice_view, recurrence_order, ComponentClass, TransitionGraph};
use crate::spanning::{clocked_arborescence_from, clocked_state, count_arborescences, StartSide};
use crate::states::{enumerate_states_naive, extend_wreath, find_wreath, is_state};
use crate::trinity::{dual_digraph, Color, Trinity};

/// Components above this size skip the all-triples distributivity check.
pub const DISTRIBUTIVE_LIMIT: usize = 200;
/// The naive enumerator is only run up to this many black triangles.
pub const NAIVE_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub genus: u32,
    pub n: usize,
    pub states: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, result: Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check { name, passed, detail });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Runs every check that applies to the trinity's genus.
pub fn verify(t: &Trinity) -> Report {
    let clock = Clockwork::new(t);
    let g = build_graph_with(t, &clock);
    let mut r = Report { genus: t.genus(), n: t.n(), states: g.node_count(), checks: Vec::new() };
    r.push("state-oracle", check_oracle(t, &g));
    if t.is_planar() {
        r.push("tree-trinity", check_tree_trinity(t, &g));
        r.push("planar-connected", match g.components.len() {
            1 => Ok("one component".into()),
            k => Err(format!("{k} components")),
        });
        r.push("lattice", check_lattices(&g));
        r.push("clocked-maximum", check_clocked(t, &g));
    } else {
        r.push("cyclic-no-extrema", check_no_extrema(&g));
        r.push("lattice", check_lattices(&g));
        r.push("cyclic-recurrent", check_recurrent(&g));
        // turn counts need irreducibility; sums are judged by their core
        let core = if clock.is_irreducible() { None } else { decompose(t).ok().map(|tree| tree.core) };
        let (ct, cclock, cg) = match &core {
            Some(c) => {
                let cc = Clockwork::new(c);
                let cg = build_graph_with(c, &cc);
                (c, cc, cg)
            }
            None => (t, clock.clone(), g.clone()),
        };
        let on_core = |res: Result<String, String>| match (&core, res) {
            (Some(c), Ok(d)) => Ok(format!("{d} (irreducible core, n = {})", c.n())),
            (_, res) => res,
        };
        if !cclock.is_irreducible() {
            r.push("decompose", Err("core still has disk sites".into()));
        }
        r.push("one-turn", on_core(check_one_turn(ct, &cclock, &cg)));
        r.push("same-turns", on_core(check_same_turns(ct, &cclock, &cg)));
        r.push("wreath-extension", check_wreaths(t));
    }
    r
}

fn check_oracle(t: &Trinity, g: &TransitionGraph) -> Result<String, String> {
    if let Some(s) = g.states.iter().find(|s| !is_state(t, s)) {
        return Err(format!("{s} is not a state"));
    }
    if t.n() > NAIVE_LIMIT {
        return Ok(format!("{} states valid; naive comparison skipped above n = {NAIVE_LIMIT}", g.node_count()));
    }
    let naive = enumerate_states_naive(t);
    if naive == g.states {
        Ok(format!("{} states, both enumerators agree", naive.len()))
    } else {
        Err(format!("backtracking found {}, naive found {}", g.node_count(), naive.len()))
    }
}

fn check_tree_trinity(t: &Trinity, g: &TransitionGraph) -> Result<String, String> {
    let counts = Color::ALL.map(|x| count_arborescences(&dual_digraph(t, x), t.root_of_color(x).expect("planar")));
    let want = g.node_count() as i128;
    if counts.iter().all(|&c| c == want) {
        Ok(format!("rho = {want} for red, green and blue"))
    } else {
        Err(format!("arborescence counts {counts:?} against {want} states"))
    }
}

fn check_lattices(g: &TransitionGraph) -> Result<String, String> {
    let mut checked = 0;
    let mut large = 0;
    for c in g.components.iter().filter(|c| c.class == ComponentClass::Acyclic) {
        let lv = lattice_view(g, c.id).map_err(|e| e.to_string())?;
        if c.size() <= DISTRIBUTIVE_LIMIT {
            lv.check_distributive().map_err(|e| e.to_string())?;
            checked += 1;
        } else {
            large += 1;
        }
    }
    let mut d = format!("{checked} acyclic components are distributive lattices");
    if large > 0 {
        d.push_str(&format!("; {large} larger than {DISTRIBUTIVE_LIMIT} checked for extrema only"));
    }
    Ok(d)
}

fn check_clocked(t: &Trinity, g: &TransitionGraph) -> Result<String, String> {
    let s = clocked_state(t).map_err(|e| e.to_string())?;
    for x in Color::ALL {
        let a = clocked_arborescence_from(t, x, StartSide::Outer).map_err(|e| e.to_string())?;
        let b = clocked_arborescence_from(t, x, StartSide::Beyond).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{} walk depends on its starting side", x.name()));
        }
    }
    if empty_black_triangles(t, &s).iter().any(|&(_, d)| d == Direction::Cw) {
        return Err(format!("clocked state {s} admits a clockwise move"));
    }
    let lv = lattice_view(g, 0).map_err(|e| e.to_string())?;
    if g.states[lv.max] == s {
        Ok(format!("clocked state is the maximum {s}"))
    } else {
        Err(format!("clocked state {s}, maximum {}", g.states[lv.max]))
    }
}

fn cyclic(g: &TransitionGraph) -> impl Iterator<Item = &crate::graph::Component> {
    g.components.iter().filter(|c| c.class == ComponentClass::Cyclic)
}

/// Every state of a cyclic component returns to itself by clockwise moves.
fn check_recurrent(g: &TransitionGraph) -> Result<String, String> {
    let mut count = 0;
    for c in cyclic(g) {
        for &s in &c.states {
            let mut seen = vec![false; g.node_count()];
            let mut stack: Vec<usize> = g.out_edges(s).map(|e| e.to).collect();
            while let Some(v) = stack.pop() {
                if !std::mem::replace(&mut seen[v], true) {
                    stack.extend(g.out_edges(v).map(|e| e.to));
                }
            }
            if !seen[s] {
                return Err(format!("state {s} of component {} is not recurrent", c.id));
            }
        }
        count += c.size();
    }
    Ok(format!("{count} cyclic states recurrent"))
}

fn check_no_extrema(g: &TransitionGraph) -> Result<String, String> {
    for c in cyclic(g) {
        if !c.local_minima.is_empty() || !c.local_maxima.is_empty() {
            return Err(format!("component {} has local extrema", c.id));
        }
    }
    Ok("no local extrema in cyclic components".into())
}

fn check_one_turn(t: &Trinity, clock: &Clockwork, g: &TransitionGraph) -> Result<String, String> {
    if !clock.is_irreducible() {
        return Ok("skipped: the trinity has disk sites".into());
    }
    let mut count = 0;
    for c in cyclic(g) {
        for &s in &c.states {
            let order = recurrence_order(t, clock, &g.states[s]).map_err(|e| format!("state {s}: {e}"))?;
            let mut sorted = order.clone();
            sorted.sort();
            if sorted != t.blacks() {
                return Err(format!("state {s}: order {order:?} does not use each black triangle once"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} states recur after one turn of each black triangle"))
}

/// Follows clockwise moves from the least state of each cyclic component
/// until a state repeats, and counts how often each site turned on that
/// cycle.
fn check_same_turns(t: &Trinity, clock: &Clockwork, g: &TransitionGraph) -> Result<String, String> {
    if !clock.is_irreducible() {
        return Ok("skipped: the trinity has disk sites".into());
    }
    let mut lengths = Vec::new();
    for c in cyclic(g) {
        let mut pos = BTreeMap::new();
        let mut walk = Vec::new();
        let mut v = c.states[0];
        while !pos.contains_key(&v) {
            pos.insert(v, walk.len());
            let e = g.out_edges(v).next().ok_or_else(|| format!("state {v} has no clockwise move"))?;
            walk.push(e.site);
            v = e.to;
        }
        let cycle = &walk[pos[&v]..];
        let mut turns: BTreeMap<SiteLabel, usize> = BTreeMap::new();
        for &site in cycle {
            *turns.entry(site).or_default() += 1;
        }
        let counts: Vec<usize> = t.blacks().iter().map(|&b| turns.get(&SiteLabel::Triangle(b)).copied().unwrap_or(0)).collect();
        if counts.iter().any(|&k| k != counts[0]) || turns.len() != t.n() {
            return Err(format!("component {}: turns per black triangle {counts:?}", c.id));
        }
        lengths.push(cycle.len());
    }
    Ok(format!("cycles of lengths {lengths:?} turn every black triangle equally"))
}

fn check_wreaths(t: &Trinity) -> Result<String, String> {
    let mut ks = Vec::new();
    for x in Color::ALL {
        let w = find_wreath(t, x).map_err(|e| format!("{}: {e}", x.name()))?;
        let states = extend_wreath(t, &w).map_err(|e| format!("{}: {e}", x.name()))?;
        let mut distinct = states.clone();
        distinct.sort();
        distinct.dedup();
        if states.len() != 1 << w.k() || distinct.len() != states.len() || !states.iter().all(|s| is_state(t, s)) {
            return Err(format!("{} wreath with {} cycles gave {} states", x.name(), w.k(), distinct.len()));
        }
        ks.push(w.k());
    }
    Ok(format!("wreath cycle counts {ks:?}, each extending to 2^k states"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{mixed_toric, planar_fixtures, smallest_toric};

    #[test]
    fn bundled_fixtures_pass() {
        for (name, t) in planar_fixtures() {
            let r = verify(&t);
            assert!(r.passed(), "{name}:\n{r}");
        }
        for t in [smallest_toric(), mixed_toric()] {
            let r = verify(&t);
            assert!(r.passed(), "{r}");
            assert!(r.checks.iter().any(|c| c.name == "wreath-extension"));
        }
    }
}
