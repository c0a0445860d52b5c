use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{arrows, is_state, State};
use crate::trinity::{Color, DualDigraph, EdgeId, Shade, Trinity, VertexId};

/// A set of arcs of `G_X*`, named by the `X`-colored edges they cross.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arborescence {
    pub color: Color,
    /// Sorted.
    pub arcs: Vec<EdgeId>,
}

impl Arborescence {
    pub fn new(color: Color, mut arcs: Vec<EdgeId>) -> Arborescence {
        arcs.sort();
        Arborescence { color, arcs }
    }

    /// The arrows of `s` pointing to vertices of color `x`.
    pub fn of_state(t: &Trinity, s: &State, x: Color) -> Arborescence {
        Arborescence::new(x, arrows(t, s)[x.index()].iter().map(|a| a.edge).collect())
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.arcs.binary_search(&e).is_ok()
    }

    /// Spanning arborescence of `d` directed away from `root`: every other
    /// node has exactly one incoming arc, the root none, and every node is
    /// reachable from the root.
    pub fn is_spanning(&self, d: &DualDigraph, root: VertexId) -> bool {
        if self.color != d.color || self.arcs.len() + 1 != d.nodes.len() {
            return false;
        }
        let mut parent: Vec<Option<VertexId>> = vec![None; d.nodes.len()];
        for &e in &self.arcs {
            let Some(a) = d.arc(e) else { return false };
            let Some(h) = d.node_index(a.head) else { return false };
            if a.head == root || parent[h].is_some() {
                return false;
            }
            parent[h] = Some(a.tail);
        }
        // follow parents; a path longer than the node count is a cycle
        d.nodes.iter().all(|&v| {
            let mut cur = v;
            for _ in 0..=d.nodes.len() {
                if cur == root {
                    return true;
                }
                match d.node_index(cur).and_then(|i| parent[i]) {
                    Some(p) => cur = p,
                    None => return false,
                }
            }
            false
        })
    }
}

/// The spanning tree `Γ` of `G_X` left over by an arborescence of `G_X*`,
/// recorded as the first edge of each vertex's path toward `κ`, the
/// `X`-colored edge of the outer triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePaths {
    pub kappa: EdgeId,
    /// Indexed by vertex id; `None` for `X`-vertices and for the endpoints
    /// of `κ`.
    pub first_edge: Vec<Option<EdgeId>>,
}

/// `None` unless the uncrossed `X`-edges form a spanning tree of the
/// non-`X` vertices (planar trinities only).
pub fn tree_paths(t: &Trinity, x: Color, crossed: &[EdgeId]) -> Option<TreePaths> {
    let outer = t.outer()?;
    let kappa = t.edge_of_color(outer, x);
    let mut in_gamma = vec![false; t.edge_count()];
    for e in t.edges_of_color(x) {
        in_gamma[e.0] = true;
    }
    for e in crossed {
        in_gamma[e.0] = false;
    }
    let others = t.vertex_count() - t.vertices_of_color(x).len();
    let gamma_size = in_gamma.iter().filter(|&&b| b).count();
    if !in_gamma[kappa.0] || gamma_size + 1 != others {
        return None;
    }
    let mut adj: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); t.vertex_count()];
    for e in t.edges_of_color(x) {
        if in_gamma[e.0] && e != kappa {
            let [a, b] = t.edge_endpoints(e);
            adj[a.0].push((e, b));
            adj[b.0].push((e, a));
        }
    }
    let mut first_edge = vec![None; t.vertex_count()];
    let mut reached = vec![false; t.vertex_count()];
    let mut queue = VecDeque::new();
    for r in t.edge_endpoints(kappa) {
        reached[r.0] = true;
        queue.push_back(r);
    }
    let mut count = 2;
    while let Some(v) = queue.pop_front() {
        for &(e, u) in &adj[v.0] {
            if !reached[u.0] {
                reached[u.0] = true;
                first_edge[u.0] = Some(e);
                count += 1;
                queue.push_back(u);
            }
        }
    }
    (count == others).then_some(TreePaths { kappa, first_edge })
}

/// The unique state whose `X`-arrows are `a`, if there is one: `X`-vertices
/// follow their incoming arc, every other vertex takes the white triangle
/// on the first edge of its path to `κ` in the complementary tree.
pub fn extend_arborescence(t: &Trinity, a: &Arborescence) -> Option<State> {
    let x = a.color;
    let paths = tree_paths(t, x, &a.arcs)?;
    let mut pairs = Vec::with_capacity(t.n());
    for &e in &a.arcs {
        let w = t.edge_triangle(e, Shade::White);
        pairs.push((w, t.vertex_of_color(w, x)));
    }
    for v in t.vertices() {
        if t.vertex_color(v) == x || t.is_root(v) {
            continue;
        }
        let e = paths.first_edge[v.0]?;
        pairs.push((t.edge_triangle(e, Shade::White), v));
    }
    let s = State::from_pairs(pairs);
    is_state(t, &s).then_some(s)
}
