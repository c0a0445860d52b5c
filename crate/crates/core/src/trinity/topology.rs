use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Color, EdgeId, Shade, SignedEdge, TriangleId, Trinity, VertexId};

/// Genus from the Euler characteristic `V - E + F = 2 - 2g`.
pub fn genus(t: &Trinity) -> u32 {
    let chi = t.vertex_count() as i64 - t.edge_count() as i64 + t.triangle_count() as i64;
    ((2 - chi) / 2) as u32
}

/// Counter-clockwise (triangle, edge) pairs around `v`. Each corner
/// contributes its outgoing edge and then its incoming edge, so the sequence
/// has length twice the degree.
pub fn rotation(t: &Trinity, v: VertexId) -> Vec<(TriangleId, EdgeId)> {
    t.corners_at(v)
        .iter()
        .flat_map(|c| {
            let bd = t.boundary(c.triangle);
            [(c.triangle, bd[c.slot].edge), (c.triangle, bd[(c.slot + 2) % 3].edge)]
        })
        .collect()
}

/// One arrow slot of `G_X*`: it crosses the `X`-colored `edge`, starting at
/// the `X`-vertex of the black triangle on that edge and ending at the
/// `X`-vertex of the white one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualArc {
    pub edge: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualDigraph {
    pub color: Color,
    pub nodes: Vec<VertexId>,
    /// Sorted by edge id.
    pub arcs: Vec<DualArc>,
}

impl DualDigraph {
    pub fn arc(&self, e: EdgeId) -> Option<&DualArc> {
        self.arcs.binary_search_by_key(&e, |a| a.edge).ok().map(|i| &self.arcs[i])
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.tail == v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.head == v).count()
    }

    pub fn node_index(&self, v: VertexId) -> Option<usize> {
        self.nodes.binary_search(&v).ok()
    }
}

pub fn dual_digraph(t: &Trinity, x: Color) -> DualDigraph {
    let arcs = t
        .edges_of_color(x)
        .into_iter()
        .map(|e| DualArc {
            edge: e,
            tail: t.vertex_of_color(t.edge_triangle(e, Shade::Black), x),
            head: t.vertex_of_color(t.edge_triangle(e, Shade::White), x),
        })
        .collect();
    DualDigraph { color: x, nodes: t.vertices_of_color(x), arcs }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("empty edge cycle")]
    Empty,
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("edges {0} and {1} do not share their middle vertex")]
    Broken(SignedEdge, SignedEdge),
    #[error("cycle revisits vertex {0}")]
    RepeatedVertex(VertexId),
}

/// A closed walk in the 1-skeleton, as signed edges (`+e` runs from the
/// edge's first endpoint to its second).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCycle {
    pub edges: Vec<SignedEdge>,
}

impl EdgeCycle {
    pub fn new(edges: Vec<SignedEdge>) -> EdgeCycle {
        EdgeCycle { edges }
    }

    /// The boundary of a triangle, read counter-clockwise.
    pub fn triangle_boundary(t: &Trinity, tri: TriangleId) -> EdgeCycle {
        EdgeCycle { edges: t.boundary(tri).to_vec() }
    }

    fn ends(t: &Trinity, s: SignedEdge) -> (VertexId, VertexId) {
        let [a, b] = t.edge_endpoints(s.edge);
        if s.forward {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Check that the walk closes; returns the visited vertices in order.
    pub fn vertices(&self, t: &Trinity) -> Result<Vec<VertexId>, CycleError> {
        if self.edges.is_empty() {
            return Err(CycleError::Empty);
        }
        if let Some(s) = self.edges.iter().find(|s| s.edge.0 >= t.edge_count()) {
            return Err(CycleError::UnknownEdge(s.edge));
        }
        let k = self.edges.len();
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let (a, b) = (self.edges[i], self.edges[(i + 1) % k]);
            if Self::ends(t, a).1 != Self::ends(t, b).0 {
                return Err(CycleError::Broken(a, b));
            }
            out.push(Self::ends(t, a).0);
        }
        Ok(out)
    }
}

/// Whether cutting along an embedded cycle disconnects the surface.
pub fn is_separating(t: &Trinity, c: &EdgeCycle) -> Result<bool, CycleError> {
    let verts = c.vertices(t)?;
    let mut seen = vec![false; t.vertex_count()];
    for &v in &verts {
        if std::mem::replace(&mut seen[v.0], true) {
            return Err(CycleError::RepeatedVertex(v));
        }
    }
    Ok(bounds_mod_two(t, c.edges.iter().map(|s| s.edge)))
}

/// Whether the mod-2 chain given by `edges` (with multiplicity) bounds a set
/// of triangles. Triangles are 2-colored across the surface, switching color
/// exactly when an odd-multiplicity edge is crossed.
pub fn bounds_mod_two(t: &Trinity, edges: impl IntoIterator<Item = EdgeId>) -> bool {
    let mut cut = vec![false; t.edge_count()];
    for e in edges {
        cut[e.0] ^= true;
    }
    let mut side: Vec<Option<bool>> = vec![None; t.triangle_count()];
    let mut queue = VecDeque::new();
    side[0] = Some(false);
    queue.push_back(TriangleId(0));
    while let Some(tri) = queue.pop_front() {
        let s = side[tri.0].expect("queued triangles are colored");
        for slot in 0..3 {
            let e = t.boundary(tri)[slot].edge;
            let other = t.across(tri, slot).triangle;
            let want = s ^ cut[e.0];
            match side[other.0] {
                None => {
                    side[other.0] = Some(want);
                    queue.push_back(other);
                }
                Some(have) if have != want => return false,
                Some(_) => {}
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{smallest_toric, trivial_trinity};

    /// Independent check: `z` bounds iff adding it to the span of triangle
    /// boundaries does not raise the GF(2) rank.
    fn homology_bounds(t: &Trinity, z: &[EdgeId]) -> bool {
        let words = t.edge_count().div_ceil(64);
        let to_bits = |es: &mut dyn Iterator<Item = EdgeId>| {
            let mut v = vec![0u64; words];
            for e in es {
                v[e.0 / 64] ^= 1 << (e.0 % 64);
            }
            v
        };
        let rank = |rows: &[Vec<u64>]| {
            let mut rows = rows.to_vec();
            let mut r = 0;
            for bit in 0..t.edge_count() {
                let (w, m) = (bit / 64, 1u64 << (bit % 64));
                let Some(p) = (r..rows.len()).find(|&i| rows[i][w] & m != 0) else { continue };
                rows.swap(r, p);
                for i in 0..rows.len() {
                    if i != r && rows[i][w] & m != 0 {
                        let pivot = rows[r].clone();
                        rows[i].iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
                    }
                }
                r += 1;
            }
            r
        };
        let mut rows: Vec<Vec<u64>> = (0..t.triangle_count())
            .map(|i| to_bits(&mut t.boundary(TriangleId(i)).iter().map(|s| s.edge)))
            .collect();
        let base = rank(&rows);
        rows.push(to_bits(&mut z.iter().copied()));
        rank(&rows) == base
    }

    #[test]
    fn genus_of_fixtures() {
        assert_eq!(genus(&trivial_trinity()), 0);
        assert_eq!(genus(&smallest_toric()), 1);
    }

    #[test]
    fn rotation_lengths() {
        let f = trivial_trinity();
        for v in f.vertices() {
            let r = rotation(&f, v);
            assert_eq!(r.len(), 4);
            assert_ne!(f.shade(r[0].0), f.shade(r[2].0));
        }
        let t3 = smallest_toric();
        let red = t3.vertices_of_color(Color::Red)[0];
        assert_eq!(rotation(&t3, red).len(), 12);
    }

    #[test]
    fn dual_digraphs_of_fixtures() {
        let f = trivial_trinity();
        let d = dual_digraph(&f, Color::Red);
        assert_eq!((d.nodes.len(), d.arcs.len()), (1, 1));
        assert_eq!(d.arcs[0].tail, d.arcs[0].head);
        let t3 = smallest_toric();
        for x in Color::ALL {
            let d = dual_digraph(&t3, x);
            assert_eq!(d.nodes.len(), 1);
            assert_eq!(d.arcs.len(), 3);
            assert!(d.arcs.iter().all(|a| a.tail == a.head));
        }
    }

    #[test]
    fn triangle_boundaries_separate() {
        for t in [trivial_trinity(), smallest_toric()] {
            for i in 0..t.triangle_count() {
                let c = EdgeCycle::triangle_boundary(&t, TriangleId(i));
                assert_eq!(is_separating(&t, &c), Ok(true));
            }
        }
    }

    #[test]
    fn essential_cycles_of_t3() {
        // each red loop arc of T3 pushed into the skeleton: red, other endpoint, red
        let t3 = smallest_toric();
        let d = dual_digraph(&t3, Color::Red);
        for arc in &d.arcs {
            let [p, q] = t3.edge_endpoints(arc.edge);
            let b = t3.edge_triangle(arc.edge, Shade::Black);
            let w = t3.edge_triangle(arc.edge, Shade::White);
            let spoke = |tri: TriangleId, other: VertexId| {
                t3.boundary(tri)
                    .iter()
                    .map(|s| s.edge)
                    .find(|&e| {
                        let ends = t3.edge_endpoints(e);
                        ends.contains(&arc.tail) && ends.contains(&other)
                    })
                    .unwrap()
            };
            let z = [spoke(b, p), spoke(w, p)];
            assert!(!bounds_mod_two(&t3, z));
            assert!(!homology_bounds(&t3, &z));
            let z = [spoke(b, q), spoke(w, q)];
            assert!(!homology_bounds(&t3, &z));
        }
    }

    #[test]
    fn two_coloring_matches_homology_rank_on_t3() {
        let t3 = smallest_toric();
        let m = t3.edge_count();
        for mask in 0u32..(1 << m) {
            let z: Vec<EdgeId> = (0..m).filter(|i| mask >> i & 1 == 1).map(EdgeId).collect();
            assert_eq!(bounds_mod_two(&t3, z.iter().copied()), homology_bounds(&t3, &z), "{z:?}");
        }
    }

    #[test]
    fn broken_walks_rejected() {
        let t3 = smallest_toric();
        let c = EdgeCycle::new(vec![SignedEdge::new(0, true), SignedEdge::new(0, true)]);
        assert!(matches!(is_separating(&t3, &c), Err(CycleError::Broken(..))));
        assert_eq!(is_separating(&t3, &EdgeCycle::new(vec![])), Err(CycleError::Empty));
    }
}
