//! Trinities as oriented combinatorial maps.
//!
//! A trinity is stored as signed-edge triangle boundaries, each listed
//! counter-clockwise. Everything else (shades, corner vertices, edge sides,
//! rotations) is derived once at construction; a [`Trinity`] value is always
//! valid and immutable.

mod canonical;
mod color;
mod format;
mod gluing;
mod topology;
mod validate;

use thiserror::Error;

pub use canonical::{canonical_form, canonical_trinity, CanonicalForm};
pub use color::{Color, EdgeId, Shade, SignedEdge, TriangleId, VertexId};
pub use format::{load_trinity, parse_trinity_data, save_trinity, save_trinity_json};
pub use gluing::Gluing;
pub use topology::{
    bounds_mod_two, dual_digraph, genus, is_separating, rotation, CycleError, DualArc, DualDigraph, EdgeCycle,
};
pub use validate::{validate, IdKind, TrinityData, Violation};

#[derive(Debug, Error)]
pub enum TrinityError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed JSON trinity: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid trinity: {0}")]
    Invalid(Violation),
}

/// Position of a corner: triangle plus boundary slot. The corner's vertex is
/// the start of the slot's edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub triangle: TriangleId,
    pub slot: usize,
}

#[derive(Clone, Debug)]
pub struct Trinity {
    genus: u32,
    outer: Option<TriangleId>,
    colors: Vec<Color>,
    edges: Vec<[VertexId; 2]>,
    triangles: Vec<[SignedEdge; 3]>,

    edge_colors: Vec<Color>,
    shades: Vec<Shade>,
    corners: Vec<[VertexId; 3]>,
    // [side traversing forward, side traversing backward]
    sides: Vec<[Corner; 2]>,
    rotations: Vec<Vec<Corner>>,
    blacks: Vec<TriangleId>,
    whites: Vec<TriangleId>,
}

impl PartialEq for Trinity {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus
            && self.outer == other.outer
            && self.colors == other.colors
            && self.edges == other.edges
            && self.triangles == other.triangles
    }
}

impl Eq for Trinity {}

impl Trinity {
    pub fn from_data(data: &TrinityData) -> Result<Trinity, TrinityError> {
        let derived = validate::check(data).map_err(|mut v| TrinityError::Invalid(v.swap_remove(0)))?;
        Ok(Trinity::assemble(derived))
    }

    fn assemble(d: validate::Derived) -> Trinity {
        let validate::Derived { colors, edges, triangles, genus, outer } = d;
        let start = |s: SignedEdge| if s.forward { edges[s.edge.0][0] } else { edges[s.edge.0][1] };
        let edge_colors: Vec<Color> = edges
            .iter()
            .map(|&[a, b]| Color::third(colors[a.0], colors[b.0]).expect("proper edge"))
            .collect();
        let corners: Vec<[VertexId; 3]> =
            triangles.iter().map(|bd| [start(bd[0]), start(bd[1]), start(bd[2])]).collect();
        let shades: Vec<Shade> = corners
            .iter()
            .map(|c| Shade::of_ccw_corners([colors[c[0].0], colors[c[1].0], colors[c[2].0]]).expect("proper"))
            .collect();
        let mut sides = vec![[Corner { triangle: TriangleId(0), slot: 0 }; 2]; edges.len()];
        for (t, bd) in triangles.iter().enumerate() {
            for (k, s) in bd.iter().enumerate() {
                sides[s.edge.0][usize::from(!s.forward)] = Corner { triangle: TriangleId(t), slot: k };
            }
        }
        let mut trinity = Trinity {
            genus,
            outer,
            colors,
            edges,
            triangles,
            edge_colors,
            shades,
            corners,
            sides,
            rotations: Vec::new(),
            blacks: Vec::new(),
            whites: Vec::new(),
        };
        let mut rotations = vec![Vec::new(); trinity.colors.len()];
        let mut seen = vec![false; trinity.triangles.len() * 3];
        for t in 0..trinity.triangles.len() {
            for k in 0..3 {
                if seen[t * 3 + k] {
                    continue;
                }
                let v = trinity.corners[t][k];
                let mut c = Corner { triangle: TriangleId(t), slot: k };
                while !seen[c.triangle.0 * 3 + c.slot] {
                    seen[c.triangle.0 * 3 + c.slot] = true;
                    rotations[v.0].push(c);
                    c = trinity.ccw_next(c);
                }
            }
        }
        trinity.rotations = rotations;
        for (t, &s) in trinity.shades.iter().enumerate() {
            match s {
                Shade::Black => trinity.blacks.push(TriangleId(t)),
                Shade::White => trinity.whites.push(TriangleId(t)),
            }
        }
        trinity
    }

    /// Plain description with the same ids.
    pub fn to_data(&self) -> TrinityData {
        TrinityData {
            genus: Some(self.genus),
            outer: self.outer,
            vertices: self.colors.iter().enumerate().map(|(i, &c)| (VertexId(i), c)).collect(),
            edges: self.edges.iter().enumerate().map(|(i, &[a, b])| (EdgeId(i), a, b)).collect(),
            triangles: self.triangles.iter().enumerate().map(|(i, &bd)| (TriangleId(i), bd)).collect(),
        }
    }

    /// Number of black triangles (equally white triangles, or edges of one color).
    pub fn n(&self) -> usize {
        self.blacks.len()
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_planar(&self) -> bool {
        self.genus == 0
    }

    pub fn outer(&self) -> Option<TriangleId> {
        self.outer
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.colors.len()).map(VertexId)
    }

    pub fn vertex_color(&self, v: VertexId) -> Color {
        self.colors[v.0]
    }

    pub fn vertices_of_color(&self, x: Color) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.colors[v.0] == x).collect()
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e.0]
    }

    pub fn edge_color(&self, e: EdgeId) -> Color {
        self.edge_colors[e.0]
    }

    pub fn edges_of_color(&self, x: Color) -> Vec<EdgeId> {
        (0..self.edges.len()).map(EdgeId).filter(|&e| self.edge_colors[e.0] == x).collect()
    }

    pub fn boundary(&self, t: TriangleId) -> [SignedEdge; 3] {
        self.triangles[t.0]
    }

    pub fn shade(&self, t: TriangleId) -> Shade {
        self.shades[t.0]
    }

    /// Corner vertices in counter-clockwise order; vertex `k` starts slot `k`.
    pub fn triangle_vertices(&self, t: TriangleId) -> [VertexId; 3] {
        self.corners[t.0]
    }

    pub fn blacks(&self) -> &[TriangleId] {
        &self.blacks
    }

    pub fn whites(&self) -> &[TriangleId] {
        &self.whites
    }

    /// White triangles that take part in states (all but the outer one).
    pub fn matchable_whites(&self) -> Vec<TriangleId> {
        self.whites.iter().copied().filter(|&w| Some(w) != self.outer).collect()
    }

    /// Vertices of the outer triangle, or nothing on the torus.
    pub fn roots(&self) -> Option<[VertexId; 3]> {
        self.outer.map(|o| self.corners[o.0])
    }

    pub fn is_root(&self, v: VertexId) -> bool {
        self.roots().is_some_and(|r| r.contains(&v))
    }

    /// Vertices that take part in states (all but the roots).
    pub fn matchable_vertices(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| !self.is_root(v)).collect()
    }

    /// The root of color `x` (planar only).
    pub fn root_of_color(&self, x: Color) -> Option<VertexId> {
        self.roots().and_then(|r| r.into_iter().find(|&v| self.colors[v.0] == x))
    }

    pub fn corner_vertex(&self, c: Corner) -> VertexId {
        self.corners[c.triangle.0][c.slot]
    }

    /// Slot whose edge has color `x` (the edge opposite the `x`-colored corner).
    pub fn slot_of_color(&self, t: TriangleId, x: Color) -> usize {
        (0..3).find(|&k| self.edge_colors[self.triangles[t.0][k].edge.0] == x).expect("one edge per color")
    }

    pub fn edge_of_color(&self, t: TriangleId, x: Color) -> EdgeId {
        self.triangles[t.0][self.slot_of_color(t, x)].edge
    }

    /// Slot of the corner with color `x`.
    pub fn corner_slot_of_color(&self, t: TriangleId, x: Color) -> usize {
        (0..3).find(|&k| self.colors[self.corners[t.0][k].0] == x).expect("one corner per color")
    }

    pub fn vertex_of_color(&self, t: TriangleId, x: Color) -> VertexId {
        self.corners[t.0][self.corner_slot_of_color(t, x)]
    }

    /// The corner on the other side of slot `slot`'s edge, i.e. the same edge
    /// seen from the neighboring triangle.
    pub fn across(&self, t: TriangleId, slot: usize) -> Corner {
        let s = self.triangles[t.0][slot];
        self.sides[s.edge.0][usize::from(s.forward)]
    }

    /// Both triangles on an edge: `[forward side, backward side]`.
    pub fn edge_sides(&self, e: EdgeId) -> [Corner; 2] {
        self.sides[e.0]
    }

    /// The triangle of the given shade on edge `e`.
    pub fn edge_triangle(&self, e: EdgeId, shade: Shade) -> TriangleId {
        let [a, b] = self.sides[e.0];
        if self.shades[a.triangle.0] == shade {
            a.triangle
        } else {
            b.triangle
        }
    }

    pub fn contains_vertex(&self, t: TriangleId, v: VertexId) -> bool {
        self.corners[t.0].contains(&v)
    }

    /// Counter-clockwise successor of a corner around its vertex, crossing the
    /// corner's incoming edge.
    pub fn ccw_next(&self, c: Corner) -> Corner {
        self.across(c.triangle, (c.slot + 2) % 3)
    }

    /// Clockwise successor of a corner around its vertex, crossing the corner's
    /// outgoing edge.
    pub fn cw_next(&self, c: Corner) -> Corner {
        let o = self.across(c.triangle, c.slot);
        Corner { triangle: o.triangle, slot: (o.slot + 1) % 3 }
    }

    /// Corners around `v` in counter-clockwise order.
    pub fn corners_at(&self, v: VertexId) -> &[Corner] {
        &self.rotations[v.0]
    }

    /// Degree of a vertex (number of incident edge-ends).
    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v.0].len()
    }
}
