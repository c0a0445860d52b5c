use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{is_state, State};
use crate::trinity::{bounds_mod_two, dual_digraph, Color, DualArc, DualDigraph, EdgeId, Shade, Trinity, VertexId};

/// Arcs of a toric `G_X*` giving every `X`-vertex exactly one incoming arc,
/// with no separating cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wreath {
    pub color: Color,
    /// Sorted.
    pub arcs: Vec<EdgeId>,
    /// Each cycle starts at its least arc; cycles sorted by that arc.
    pub cycles: Vec<Vec<EdgeId>>,
}

impl Wreath {
    pub fn k(&self) -> usize {
        self.cycles.len()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WreathError {
    #[error("wreaths live on the torus")]
    NotToric,
    #[error("edge {0} is not an arc of this color")]
    UnknownArc(EdgeId),
    #[error("vertex {0} has {1} incoming arcs")]
    InDegree(VertexId, usize),
    #[error("cycle through arc {0} separates the torus")]
    SeparatingCycle(EdgeId),
    #[error("the complementary graph has no perfect orientation at vertex {0}")]
    NoExtension(VertexId),
    #[error("no non-separating directed cycle found")]
    NoCycle,
}

/// Homology test for a directed cycle of `G_X*`: each arc is pushed into
/// the skeleton as the two-edge path tail, one endpoint of its crossed edge,
/// head.
fn cycle_separates(t: &Trinity, cycle: &[EdgeId]) -> bool {
    let mut chain = Vec::with_capacity(2 * cycle.len());
    for &e in cycle {
        let [_, q] = t.edge_endpoints(e);
        let via = t.vertex_color(q);
        chain.push(t.edge_of_color(t.edge_triangle(e, Shade::Black), via));
        chain.push(t.edge_of_color(t.edge_triangle(e, Shade::White), via));
    }
    bounds_mod_two(t, chain)
}

/// Validate `arcs` as a wreath of color `x` and find its cycles.
pub fn is_wreath(t: &Trinity, x: Color, arcs: &[EdgeId]) -> Result<Wreath, WreathError> {
    if t.genus() != 1 {
        return Err(WreathError::NotToric);
    }
    let d = dual_digraph(t, x);
    let mut incoming: Vec<Vec<DualArc>> = vec![Vec::new(); d.nodes.len()];
    for &e in arcs {
        let a = *d.arc(e).ok_or(WreathError::UnknownArc(e))?;
        incoming[d.node_index(a.head).expect("head is a node")].push(a);
    }
    for (i, inc) in incoming.iter().enumerate() {
        if inc.len() != 1 {
            return Err(WreathError::InDegree(d.nodes[i], inc.len()));
        }
    }
    // walk parents; a node is on a cycle iff walking from it returns to it
    let parent = |i: usize| d.node_index(incoming[i][0].tail).expect("tail is a node");
    let mut on_cycle = vec![false; d.nodes.len()];
    let mut cycles = Vec::new();
    for start in 0..d.nodes.len() {
        let mut cur = start;
        for _ in 0..d.nodes.len() {
            cur = parent(cur);
        }
        // `cur` is now on a cycle
        if on_cycle[cur] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = cur;
        loop {
            on_cycle[v] = true;
            cyc.push(incoming[v][0].edge);
            v = parent(v);
            if v == cur {
                break;
            }
        }
        // parents run against arc direction
        cyc.reverse();
        let m = (0..cyc.len()).min_by_key(|&i| cyc[i]).expect("nonempty");
        cyc.rotate_left(m);
        cycles.push(cyc);
    }
    cycles.sort();
    for c in &cycles {
        if cycle_separates(t, c) {
            return Err(WreathError::SeparatingCycle(c[0]));
        }
    }
    let mut arcs = arcs.to_vec();
    arcs.sort();
    Ok(Wreath { color: x, arcs, cycles })
}

/// Least simple directed cycle of `d`, by length and then by arc sequence
/// read from its least arc, accepted by `ok`.
fn least_cycle(d: &DualDigraph, ok: impl Fn(&[EdgeId]) -> bool) -> Option<Vec<EdgeId>> {
    fn extend(
        d: &DualDigraph,
        start: &DualArc,
        len: usize,
        path: &mut Vec<EdgeId>,
        visited: &mut Vec<bool>,
        at: VertexId,
        ok: &dyn Fn(&[EdgeId]) -> bool,
    ) -> bool {
        if path.len() == len {
            return at == start.tail && ok(path);
        }
        for a in d.arcs.iter().filter(|a| a.tail == at && a.edge > start.edge) {
            let closes = a.head == start.tail;
            if closes != (path.len() + 1 == len) {
                continue;
            }
            let h = d.node_index(a.head).expect("node");
            if !closes && visited[h] {
                continue;
            }
            visited[h] = true;
            path.push(a.edge);
            if extend(d, start, len, path, visited, a.head, ok) {
                return true;
            }
            path.pop();
            visited[h] = false;
        }
        false
    }

    for len in 1..=d.nodes.len() {
        for start in &d.arcs {
            let mut visited = vec![false; d.nodes.len()];
            visited[d.node_index(start.tail).expect("node")] = true;
            let mut path = vec![start.edge];
            let at = start.head;
            if len == 1 {
                if at == start.tail && ok(&path) {
                    return Some(path);
                }
                continue;
            }
            if at == start.tail {
                continue;
            }
            visited[d.node_index(at).expect("node")] = true;
            if extend(d, start, len, &mut path, &mut visited, at, &ok) {
                return Some(path);
            }
        }
    }
    None
}

/// A wreath with one cycle: the least non-separating directed cycle, with
/// trees hung off it by scanning arcs in increasing id.
pub fn find_wreath(t: &Trinity, x: Color) -> Result<Wreath, WreathError> {
    if t.genus() != 1 {
        return Err(WreathError::NotToric);
    }
    let d = dual_digraph(t, x);
    let cycle = least_cycle(&d, |c| !cycle_separates(t, c)).ok_or(WreathError::NoCycle)?;
    let mut reached = vec![false; d.nodes.len()];
    let mut arcs = cycle.clone();
    for &e in &cycle {
        reached[d.node_index(d.arc(e).expect("arc").head).expect("node")] = true;
    }
    loop {
        let mut grew = false;
        for a in &d.arcs {
            let (ti, hi) = (d.node_index(a.tail).expect("node"), d.node_index(a.head).expect("node"));
            if reached[ti] && !reached[hi] {
                reached[hi] = true;
                arcs.push(a.edge);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    is_wreath(t, x, &arcs)
}

/// Every state whose `X`-arrows are exactly the wreath: the other vertices
/// are matched along the uncrossed `X`-edges, forced from the leaves inward
/// and then in one of two directions around each remaining cycle. States
/// are listed by the bitmask of cycle directions, cycles ordered by least
/// edge id.
pub fn extend_wreath(t: &Trinity, w: &Wreath) -> Result<Vec<State>, WreathError> {
    let x = w.color;
    let mut fixed = Vec::with_capacity(t.n());
    let mut crossed = vec![false; t.edge_count()];
    for &e in &w.arcs {
        crossed[e.0] = true;
        let white = t.edge_triangle(e, Shade::White);
        fixed.push((white, t.vertex_of_color(white, x)));
    }
    let gamma: Vec<EdgeId> = t.edges_of_color(x).into_iter().filter(|e| !crossed[e.0]).collect();
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); t.vertex_count()];
    for &e in &gamma {
        for v in t.edge_endpoints(e) {
            incident[v.0].push(e);
        }
    }
    let mut alive = vec![false; t.edge_count()];
    for &e in &gamma {
        alive[e.0] = true;
    }
    let mut degree: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut done = vec![false; t.vertex_count()];
    let mut queue: VecDeque<VertexId> = VecDeque::new();
    for v in t.vertices() {
        if t.vertex_color(v) == x {
            done[v.0] = true;
        } else if degree[v.0] == 0 {
            return Err(WreathError::NoExtension(v));
        } else if degree[v.0] == 1 {
            queue.push_back(v);
        }
    }
    let white_of = |e: EdgeId| t.edge_triangle(e, Shade::White);
    while let Some(v) = queue.pop_front() {
        if done[v.0] {
            continue;
        }
        let e = *incident[v.0].iter().find(|e| alive[e.0]).ok_or(WreathError::NoExtension(v))?;
        alive[e.0] = false;
        done[v.0] = true;
        fixed.push((white_of(e), v));
        let [a, b] = t.edge_endpoints(e);
        let u = if a == v { b } else { a };
        degree[u.0] -= 1;
        if !done[u.0] {
            match degree[u.0] {
                0 => return Err(WreathError::NoExtension(u)),
                1 => queue.push_back(u),
                _ => {}
            }
        }
    }
    // what is left must be disjoint cycles
    let mut cycles: Vec<Vec<(VertexId, EdgeId)>> = Vec::new();
    for &e0 in &gamma {
        if !alive[e0.0] {
            continue;
        }
        let mut cyc = Vec::new();
        let [start, mut v] = t.edge_endpoints(e0);
        alive[e0.0] = false;
        cyc.push((start, e0));
        while v != start {
            if degree[v.0] != 2 {
                return Err(WreathError::NoExtension(v));
            }
            let e = *incident[v.0].iter().find(|e| alive[e.0]).ok_or(WreathError::NoExtension(v))?;
            alive[e.0] = false;
            cyc.push((v, e));
            let [a, b] = t.edge_endpoints(e);
            v = if a == v { b } else { a };
        }
        cycles.push(cyc);
    }
    for v in t.vertices() {
        if !done[v.0] && !cycles.iter().any(|c| c.iter().any(|p| p.0 == v)) {
            return Err(WreathError::NoExtension(v));
        }
    }
    let mut out = Vec::with_capacity(1 << cycles.len());
    for mask in 0..(1usize << cycles.len()) {
        let mut pairs = fixed.clone();
        for (i, cyc) in cycles.iter().enumerate() {
            let m = cyc.len();
            for j in 0..m {
                // forward: each vertex takes the edge leaving it; backward:
                // the edge arriving at it
                let e = if mask >> i & 1 == 0 { cyc[j].1 } else { cyc[(j + m - 1) % m].1 };
                pairs.push((white_of(e), cyc[j].0));
            }
        }
        let s = State::from_pairs(pairs);
        if !is_state(t, &s) {
            return Err(WreathError::NoExtension(cycles[0][0].0));
        }
        out.push(s);
    }
    Ok(out)
}
