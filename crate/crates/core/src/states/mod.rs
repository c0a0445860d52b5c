//! Tutte matchings (states) and the two structured ways of building them.

mod arborescence;
mod wreath;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::trinity::{Color, DualArc, Shade, TriangleId, Trinity, VertexId};

pub use arborescence::{extend_arborescence, tree_paths, Arborescence, TreePaths};
pub use wreath::{extend_wreath, find_wreath, is_wreath, Wreath, WreathError};

/// A matching of the non-outer white triangles with the non-root vertices,
/// stored as `(white, vertex)` pairs sorted by triangle id.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    pairs: Vec<(TriangleId, VertexId)>,
}

impl State {
    /// Pairs may come in any order; duplicates of a triangle are kept so that
    /// [`check_state`] can report them.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (TriangleId, VertexId)>) -> State {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort();
        State { pairs }
    }

    pub fn pairs(&self) -> &[(TriangleId, VertexId)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The vertex matched to white triangle `w`.
    pub fn vertex_of(&self, w: TriangleId) -> Option<VertexId> {
        self.pairs.binary_search_by_key(&w, |p| p.0).ok().map(|i| self.pairs[i].1)
    }

    /// Inverse lookup table indexed by vertex id.
    pub fn owners(&self, vertex_count: usize) -> Vec<Option<TriangleId>> {
        let mut out = vec![None; vertex_count];
        for &(w, v) in &self.pairs {
            if let Some(slot) = out.get_mut(v.0) {
                *slot = Some(w);
            }
        }
        out
    }

    /// Rematch the given whites; every `w` must already be present.
    pub(crate) fn rematch(&mut self, changes: &[(TriangleId, VertexId)]) {
        for &(w, v) in changes {
            let i = self.pairs.binary_search_by_key(&w, |p| p.0).expect("white is matched");
            self.pairs[i].1 = v;
        }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("state")?;
        for (w, v) in &self.pairs {
            write!(f, " {w}:{v}")?;
        }
        Ok(())
    }
}

impl FromStr for State {
    type Err = String;

    /// Accepts `state 1:0 3:2` or just the pairs.
    fn from_str(s: &str) -> Result<State, String> {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "state" {
                continue;
            }
            let (w, v) = tok.split_once(':').ok_or_else(|| format!("expected triangle:vertex, got `{tok}`"))?;
            let w = w.parse().map_err(|_| format!("bad triangle id in `{tok}`"))?;
            let v = v.parse().map_err(|_| format!("bad vertex id in `{tok}`"))?;
            pairs.push((TriangleId(w), VertexId(v)));
        }
        Ok(State::from_pairs(pairs))
    }
}

impl Serialize for State {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for State {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateViolation {
    #[error("triangle {0} is not a matchable white triangle")]
    NotMatchable(TriangleId),
    #[error("triangle {0} is matched twice")]
    TriangleTwice(TriangleId),
    #[error("vertex {vertex} is not a corner of triangle {triangle}")]
    NotACorner { triangle: TriangleId, vertex: VertexId },
    #[error("vertex {0} is a root or does not exist")]
    NotMatchableVertex(VertexId),
    #[error("vertex {0} is matched twice")]
    VertexTwice(VertexId),
    #[error("white triangle {0} is unmatched")]
    Unmatched(TriangleId),
}

/// Reports the first broken matching condition.
pub fn check_state(t: &Trinity, s: &State) -> Result<(), StateViolation> {
    let mut vertex_used = vec![false; t.vertex_count()];
    let mut last: Option<TriangleId> = None;
    for &(w, v) in s.pairs() {
        if last == Some(w) {
            return Err(StateViolation::TriangleTwice(w));
        }
        last = Some(w);
        if w.0 >= t.triangle_count() || t.shade(w) != Shade::White || Some(w) == t.outer() {
            return Err(StateViolation::NotMatchable(w));
        }
        if v.0 >= t.vertex_count() || t.is_root(v) {
            return Err(StateViolation::NotMatchableVertex(v));
        }
        if !t.contains_vertex(w, v) {
            return Err(StateViolation::NotACorner { triangle: w, vertex: v });
        }
        if std::mem::replace(&mut vertex_used[v.0], true) {
            return Err(StateViolation::VertexTwice(v));
        }
    }
    if let Some(w) = t.matchable_whites().into_iter().find(|&w| s.vertex_of(w).is_none()) {
        return Err(StateViolation::Unmatched(w));
    }
    Ok(())
}

pub fn is_state(t: &Trinity, s: &State) -> bool {
    check_state(t, s).is_ok()
}

/// Matchable corner vertices of `w`, increasing and without repeats.
fn candidates(t: &Trinity, w: TriangleId) -> Vec<VertexId> {
    let mut vs: Vec<VertexId> = t.triangle_vertices(w).into_iter().filter(|&v| !t.is_root(v)).collect();
    vs.sort();
    vs.dedup();
    vs
}

/// All states by backtracking over white triangles in increasing id, trying
/// vertices in increasing id. A branch is cut as soon as some unmatched
/// vertex has no unmatched white triangle left around it.
pub fn enumerate_states(t: &Trinity) -> Vec<State> {
    let whites = t.matchable_whites();
    if whites.len() != t.matchable_vertices().len() {
        return Vec::new();
    }
    let cands: Vec<Vec<VertexId>> = whites.iter().map(|&w| candidates(t, w)).collect();
    // open[v]: unassigned whites still able to take v
    let mut open = vec![0usize; t.vertex_count()];
    for c in &cands {
        for v in c {
            open[v.0] += 1;
        }
    }
    let mut used = vec![false; t.vertex_count()];
    let mut current = Vec::with_capacity(whites.len());
    let mut out = Vec::new();

    struct Search<'a> {
        whites: &'a [TriangleId],
        cands: &'a [Vec<VertexId>],
    }

    fn recurse(
        s: &Search,
        i: usize,
        open: &mut [usize],
        used: &mut [bool],
        current: &mut Vec<(TriangleId, VertexId)>,
        out: &mut Vec<State>,
    ) {
        if i == s.whites.len() {
            out.push(State { pairs: current.clone() });
            return;
        }
        for v in &s.cands[i] {
            open[v.0] -= 1;
        }
        let starved = |open: &[usize], used: &[bool], skip: VertexId| {
            s.cands[i].iter().any(|&u| u != skip && !used[u.0] && open[u.0] == 0)
        };
        for &v in &s.cands[i] {
            if used[v.0] || starved(open, used, v) {
                continue;
            }
            used[v.0] = true;
            current.push((s.whites[i], v));
            recurse(s, i + 1, open, used, current, out);
            current.pop();
            used[v.0] = false;
        }
        for v in &s.cands[i] {
            open[v.0] += 1;
        }
    }

    let search = Search { whites: &whites, cands: &cands };
    recurse(&search, 0, &mut open, &mut used, &mut current, &mut out);
    out
}

/// Reference enumerator: recursion over the rows (vertices) of the
/// vertex/white incidence matrix, choosing any free incident column.
/// Returned sorted.
pub fn enumerate_states_naive(t: &Trinity) -> Vec<State> {
    let whites = t.matchable_whites();
    let vertices = t.matchable_vertices();
    if whites.len() != vertices.len() {
        return Vec::new();
    }
    let matrix: Vec<Vec<bool>> =
        vertices.iter().map(|&v| whites.iter().map(|&w| t.contains_vertex(w, v)).collect()).collect();
    let mut taken = vec![false; whites.len()];
    let mut choice = vec![0usize; vertices.len()];
    let mut out = Vec::new();

    fn rows(
        r: usize,
        matrix: &[Vec<bool>],
        taken: &mut [bool],
        choice: &mut [usize],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if r == matrix.len() {
            emit(choice);
            return;
        }
        for c in 0..taken.len() {
            if matrix[r][c] && !taken[c] {
                taken[c] = true;
                choice[r] = c;
                rows(r + 1, matrix, taken, choice, emit);
                taken[c] = false;
            }
        }
    }

    rows(0, &matrix, &mut taken, &mut choice, &mut |choice| {
        out.push(State::from_pairs(choice.iter().enumerate().map(|(r, &c)| (whites[c], vertices[r]))));
    });
    out.sort();
    out
}

/// The arrows of a state, grouped by color (index [`Color::index`]) and
/// sorted by the edge they cross.
pub fn arrows(t: &Trinity, s: &State) -> [Vec<DualArc>; 3] {
    let mut out: [Vec<DualArc>; 3] = Default::default();
    for &(w, v) in s.pairs() {
        let x = t.vertex_color(v);
        let e = t.edge_of_color(w, x);
        let b = t.edge_triangle(e, Shade::Black);
        out[x.index()].push(DualArc { edge: e, tail: t.vertex_of_color(b, x), head: v });
    }
    for arcs in &mut out {
        arcs.sort_by_key(|a| a.edge);
    }
    out
}

/// Whether `s1` and `s2` match every vertex of color `x` to the same white
/// triangle. A diagnostic relation only.
pub fn agree_on_color(t: &Trinity, s1: &State, s2: &State, x: Color) -> bool {
    let (o1, o2) = (s1.owners(t.vertex_count()), s2.owners(t.vertex_count()));
    t.vertices_of_color(x).into_iter().all(|v| o1[v.0] == o2[v.0])
}
