use std::fmt;

use serde::{Deserialize, Serialize};

use super::color::{Color, EdgeId, Shade, SignedEdge, TriangleId, VertexId};

/// Unvalidated trinity description, as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrinityData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<TriangleId>,
    pub vertices: Vec<(VertexId, Color)>,
    pub edges: Vec<(EdgeId, VertexId, VertexId)>,
    pub triangles: Vec<(TriangleId, [SignedEdge; 3])>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdKind {
    Vertex,
    Edge,
    Triangle,
}

impl fmt::Display for IdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdKind::Vertex => "vertex",
            IdKind::Edge => "edge",
            IdKind::Triangle => "triangle",
        })
    }
}

/// One failed trinity invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    IdNotDense { kind: IdKind, id: usize, expected: usize },
    UnknownVertex { edge: EdgeId, vertex: VertexId },
    UnknownEdge { triangle: TriangleId, edge: EdgeId },
    MonochromaticEdge { edge: EdgeId, color: Color },
    EdgeSigns { edge: EdgeId, forward: usize, backward: usize },
    BrokenBoundary { triangle: TriangleId },
    VertexWithoutCorners { vertex: VertexId },
    VertexLink { vertex: VertexId, cycles: usize },
    Disconnected { components: usize },
    Genus { euler: i64 },
    DeclaredGenus { declared: u32, computed: u32 },
    ColorCounts { black: usize, white: usize, red: usize, green: usize, blue: usize },
    MissingOuter,
    OuterNotWhite { triangle: TriangleId },
    UnknownOuter { triangle: TriangleId },
    OuterOnTorus { triangle: TriangleId },
}

impl Violation {
    /// Short invariant name.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::IdNotDense { .. } => "dense-ids",
            Violation::UnknownVertex { .. } => "edge-endpoints",
            Violation::UnknownEdge { .. } => "triangle-edges",
            Violation::MonochromaticEdge { .. } => "proper-coloring",
            Violation::EdgeSigns { .. } => "edge-signs",
            Violation::BrokenBoundary { .. } => "closed-boundary",
            Violation::VertexWithoutCorners { .. } => "vertex-corners",
            Violation::VertexLink { .. } => "vertex-link",
            Violation::Disconnected { .. } => "connected",
            Violation::Genus { .. } => "genus",
            Violation::DeclaredGenus { .. } => "declared-genus",
            Violation::ColorCounts { .. } => "equal-counts",
            Violation::MissingOuter => "outer-required",
            Violation::OuterNotWhite { .. } => "outer-white",
            Violation::UnknownOuter { .. } => "outer-exists",
            Violation::OuterOnTorus { .. } => "outer-planar-only",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.name())?;
        match self {
            Violation::IdNotDense { kind, id, expected } => {
                write!(f, "{kind} id {id} found where {expected} was expected")
            }
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "edge {edge} references unknown vertex {vertex}")
            }
            Violation::UnknownEdge { triangle, edge } => {
                write!(f, "triangle {triangle} references unknown edge {edge}")
            }
            Violation::MonochromaticEdge { edge, color } => {
                write!(f, "edge {edge} joins two {} vertices", color.name())
            }
            Violation::EdgeSigns { edge, forward, backward } => write!(
                f,
                "edge {edge} used {forward} times forward and {backward} times backward (need 1 and 1)"
            ),
            Violation::BrokenBoundary { triangle } => {
                write!(f, "boundary of triangle {triangle} is not a closed walk")
            }
            Violation::VertexWithoutCorners { vertex } => {
                write!(f, "vertex {vertex} lies on no triangle")
            }
            Violation::VertexLink { vertex, cycles } => {
                write!(f, "triangles around vertex {vertex} form {cycles} cycles")
            }
            Violation::Disconnected { components } => {
                write!(f, "surface has {components} components")
            }
            Violation::Genus { euler } => {
                write!(f, "Euler characteristic {euler} is neither 2 nor 0")
            }
            Violation::DeclaredGenus { declared, computed } => {
                write!(f, "declared genus {declared} but computed {computed}")
            }
            Violation::ColorCounts { black, white, red, green, blue } => write!(
                f,
                "black {black}, white {white}, red edges {red}, green edges {green}, blue edges {blue}"
            ),
            Violation::MissingOuter => write!(f, "genus 0 requires an outer white triangle"),
            Violation::OuterNotWhite { triangle } => {
                write!(f, "outer triangle {triangle} is black")
            }
            Violation::UnknownOuter { triangle } => {
                write!(f, "outer triangle {triangle} does not exist")
            }
            Violation::OuterOnTorus { triangle } => {
                write!(f, "outer triangle {triangle} given for a torus")
            }
        }
    }
}

/// Structure derived from a description that passed every check.
pub(crate) struct Derived {
    pub colors: Vec<Color>,
    pub edges: Vec<[VertexId; 2]>,
    pub triangles: Vec<[SignedEdge; 3]>,
    pub genus: u32,
    pub outer: Option<TriangleId>,
}

fn check_dense<T>(kind: IdKind, items: &[T], id: impl Fn(&T) -> usize, out: &mut Vec<Violation>) -> bool {
    let mut ids: Vec<usize> = items.iter().map(id).collect();
    ids.sort_unstable();
    for (expected, &got) in ids.iter().enumerate() {
        if got != expected {
            out.push(Violation::IdNotDense { kind, id: got, expected });
            return false;
        }
    }
    true
}

/// Every violated invariant, in checking order. Later stages are skipped when
/// an earlier structural stage fails.
pub fn validate(data: &TrinityData) -> Vec<Violation> {
    match check(data) {
        Ok(_) => Vec::new(),
        Err(v) => v,
    }
}

pub(crate) fn check(data: &TrinityData) -> Result<Derived, Vec<Violation>> {
    let mut out = Vec::new();

    let dense = check_dense(IdKind::Vertex, &data.vertices, |v| v.0 .0, &mut out)
        & check_dense(IdKind::Edge, &data.edges, |e| e.0 .0, &mut out)
        & check_dense(IdKind::Triangle, &data.triangles, |t| t.0 .0, &mut out);
    if !dense {
        return Err(out);
    }

    let mut colors = vec![Color::Red; data.vertices.len()];
    for &(v, c) in &data.vertices {
        colors[v.0] = c;
    }
    let mut edges = vec![[VertexId(0); 2]; data.edges.len()];
    for &(e, a, b) in &data.edges {
        for v in [a, b] {
            if v.0 >= colors.len() {
                out.push(Violation::UnknownVertex { edge: e, vertex: v });
            }
        }
        edges[e.0] = [a, b];
    }
    let mut triangles = vec![[SignedEdge::new(0, true); 3]; data.triangles.len()];
    for &(t, bd) in &data.triangles {
        for s in bd {
            if s.edge.0 >= edges.len() {
                out.push(Violation::UnknownEdge { triangle: t, edge: s.edge });
            }
        }
        triangles[t.0] = bd;
    }
    if !out.is_empty() {
        return Err(out);
    }

    for (e, &[a, b]) in edges.iter().enumerate() {
        if colors[a.0] == colors[b.0] {
            out.push(Violation::MonochromaticEdge { edge: EdgeId(e), color: colors[a.0] });
        }
    }

    let mut uses = vec![(0usize, 0usize); edges.len()];
    for bd in &triangles {
        for s in bd {
            if s.forward {
                uses[s.edge.0].0 += 1;
            } else {
                uses[s.edge.0].1 += 1;
            }
        }
    }
    for (e, &(f, b)) in uses.iter().enumerate() {
        if (f, b) != (1, 1) {
            out.push(Violation::EdgeSigns { edge: EdgeId(e), forward: f, backward: b });
        }
    }

    let start = |s: SignedEdge| if s.forward { edges[s.edge.0][0] } else { edges[s.edge.0][1] };
    let end = |s: SignedEdge| if s.forward { edges[s.edge.0][1] } else { edges[s.edge.0][0] };
    for (t, bd) in triangles.iter().enumerate() {
        if (0..3).any(|k| end(bd[k]) != start(bd[(k + 1) % 3])) {
            out.push(Violation::BrokenBoundary { triangle: TriangleId(t) });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }

    // Vertex links: follow the counter-clockwise successor of each corner.
    let mut side = vec![[usize::MAX; 2]; edges.len()];
    for (t, bd) in triangles.iter().enumerate() {
        for (k, s) in bd.iter().enumerate() {
            side[s.edge.0][usize::from(!s.forward)] = t * 3 + k;
        }
    }
    let ccw_next = |corner: usize| {
        let (t, k) = (corner / 3, corner % 3);
        let incoming = triangles[t][(k + 2) % 3];
        side[incoming.edge.0][usize::from(incoming.forward)]
    };
    let mut corner_vertex = vec![VertexId(0); triangles.len() * 3];
    let mut seen = vec![false; triangles.len() * 3];
    let mut cycles = vec![0usize; colors.len()];
    for (t, bd) in triangles.iter().enumerate() {
        for (k, &s) in bd.iter().enumerate() {
            corner_vertex[t * 3 + k] = start(s);
        }
    }
    for c in 0..corner_vertex.len() {
        if seen[c] {
            continue;
        }
        cycles[corner_vertex[c].0] += 1;
        let mut x = c;
        while !seen[x] {
            seen[x] = true;
            x = ccw_next(x);
        }
    }
    for (v, &k) in cycles.iter().enumerate() {
        if k == 0 {
            out.push(Violation::VertexWithoutCorners { vertex: VertexId(v) });
        } else if k > 1 {
            out.push(Violation::VertexLink { vertex: VertexId(v), cycles: k });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }

    // Connectivity of the triangle adjacency graph.
    let components = {
        let mut comp = vec![usize::MAX; triangles.len()];
        let mut count = 0;
        for root in 0..triangles.len() {
            if comp[root] != usize::MAX {
                continue;
            }
            let mut stack = vec![root];
            comp[root] = count;
            while let Some(t) = stack.pop() {
                for s in &triangles[t] {
                    let other = side[s.edge.0][usize::from(s.forward)] / 3;
                    if comp[other] == usize::MAX {
                        comp[other] = count;
                        stack.push(other);
                    }
                }
            }
            count += 1;
        }
        count
    };
    if components != 1 {
        out.push(Violation::Disconnected { components });
        return Err(out);
    }

    let euler = colors.len() as i64 - edges.len() as i64 + triangles.len() as i64;
    let genus = match euler {
        2 => 0,
        0 => 1,
        _ => {
            out.push(Violation::Genus { euler });
            return Err(out);
        }
    };
    if let Some(declared) = data.genus {
        if declared != genus {
            out.push(Violation::DeclaredGenus { declared, computed: genus });
        }
    }

    let mut shades = Vec::with_capacity(triangles.len());
    for bd in &triangles {
        let cs = [colors[start(bd[0]).0], colors[start(bd[1]).0], colors[start(bd[2]).0]];
        // proper coloring already guarantees three distinct corner colors
        shades.push(Shade::of_ccw_corners(cs).expect("distinct corner colors"));
    }
    let black = shades.iter().filter(|&&s| s == Shade::Black).count();
    let white = shades.len() - black;
    let mut by_color = [0usize; 3];
    for &[a, b] in &edges {
        if let Some(c) = Color::third(colors[a.0], colors[b.0]) {
            by_color[c.index()] += 1;
        }
    }
    if !(black == white && by_color.iter().all(|&c| c == black)) {
        out.push(Violation::ColorCounts {
            black,
            white,
            red: by_color[0],
            green: by_color[1],
            blue: by_color[2],
        });
    }

    match (genus, data.outer) {
        (0, None) => out.push(Violation::MissingOuter),
        (_, Some(o)) if o.0 >= triangles.len() => out.push(Violation::UnknownOuter { triangle: o }),
        (1, Some(o)) => out.push(Violation::OuterOnTorus { triangle: o }),
        (_, Some(o)) if shades[o.0] != Shade::White => out.push(Violation::OuterNotWhite { triangle: o }),
        _ => {}
    }

    if out.is_empty() {
        Ok(Derived { colors, edges, triangles, genus, outer: data.outer })
    } else {
        Err(out)
    }
}
