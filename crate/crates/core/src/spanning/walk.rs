use std::collections::HashSet;

use serde::Serialize;

use super::SpanningError;
use crate::states::Arborescence;
use crate::trinity::{dual_digraph, Color, Corner, EdgeId, Shade, Trinity, VertexId};

/// Where the walk around the root begins. `Outer` starts at the outer
/// triangle's corner, so the arc crossing the outer edge is met first;
/// `Beyond` starts one corner further counter-clockwise, meeting it last.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum StartSide {
    #[default]
    Outer,
    Beyond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EventKind {
    /// First passage along an arc of the tree.
    TreeTraversal,
    /// First time the walk touches a non-tree arc, at its tail or its head.
    FirstCrossing { tail_first: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TimelineEvent {
    pub arc: EdgeId,
    pub kind: EventKind,
}

/// Every arc of the dual digraph, in the order a counter-clockwise walk
/// around a fixed arborescence first meets it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderTimeline {
    pub color: Color,
    pub events: Vec<TimelineEvent>,
}

impl OrderTimeline {
    pub fn position(&self, arc: EdgeId) -> Option<usize> {
        self.events.iter().position(|e| e.arc == arc)
    }

    pub fn order(&self) -> Vec<EdgeId> {
        self.events.iter().map(|e| e.arc).collect()
    }

    /// Whether every tree arc comes before every other arc with the same head.
    pub fn is_clocked(&self, t: &Trinity, a: &Arborescence) -> bool {
        let d = dual_digraph(t, self.color);
        d.arcs.iter().filter(|arc| a.contains(arc.edge)).all(|tree_arc| {
            let p = self.position(tree_arc.edge);
            d.arcs
                .iter()
                .filter(|o| o.head == tree_arc.head && o.edge != tree_arc.edge)
                .all(|o| p < self.position(o.edge))
        })
    }
}

struct Darts<'a> {
    t: &'a Trinity,
    x: Color,
}

impl Darts<'_> {
    fn at(&self, tri: crate::trinity::TriangleId) -> Corner {
        Corner { triangle: tri, slot: self.t.corner_slot_of_color(tri, self.x) }
    }

    fn arc(&self, d: Corner) -> EdgeId {
        self.t.edge_of_color(d.triangle, self.x)
    }

    fn is_tail(&self, d: Corner) -> bool {
        self.t.shade(d.triangle) == Shade::Black
    }

    /// The dart on the other end of `d`'s arc.
    fn opp(&self, d: Corner) -> Corner {
        let o = self.t.across(d.triangle, self.t.slot_of_color(d.triangle, self.x));
        self.at(o.triangle)
    }

    fn vertex(&self, d: Corner) -> VertexId {
        self.t.corner_vertex(d)
    }

    fn start(&self, side: StartSide) -> Option<Corner> {
        let d = self.at(self.t.outer()?);
        Some(match side {
            StartSide::Outer => d,
            StartSide::Beyond => self.t.ccw_next(d),
        })
    }
}

pub fn clocked_arborescence(t: &Trinity, x: Color) -> Result<Arborescence, SpanningError> {
    clocked_arborescence_from(t, x, StartSide::Outer)
}

/// Grows the clocked arborescence of color `x` by walking counter-clockwise
/// from the root: a tree arc is followed, an unseen head is claimed through
/// its tail, anything else is passed by turning.
pub fn clocked_arborescence_from(t: &Trinity, x: Color, side: StartSide) -> Result<Arborescence, SpanningError> {
    if !t.is_planar() {
        return Err(SpanningError::NotPlanar);
    }
    let darts = Darts { t, x };
    let root = t.root_of_color(x).ok_or(SpanningError::NotPlanar)?;
    let mut d = darts.start(side).ok_or(SpanningError::NotPlanar)?;
    let mut visited = vec![false; t.vertex_count()];
    visited[root.0] = true;
    let mut in_tree = vec![false; t.edge_count()];
    let mut arcs = Vec::new();
    let need = t.vertices_of_color(x).len() - 1;
    let limit = 4 * t.triangle_count() + 8;
    let mut steps = 0;
    while arcs.len() < need {
        steps += 1;
        if steps > limit {
            return Err(SpanningError::Inconsistent(format!("{} walk stopped after {} arcs", x.name(), arcs.len())));
        }
        let e = darts.arc(d);
        if in_tree[e.0] {
            d = t.ccw_next(darts.opp(d));
        } else if darts.is_tail(d) && !visited[darts.vertex(darts.opp(d)).0] {
            in_tree[e.0] = true;
            arcs.push(e);
            visited[darts.vertex(darts.opp(d)).0] = true;
            d = t.ccw_next(darts.opp(d));
        } else {
            d = t.ccw_next(d);
        }
    }
    Ok(Arborescence::new(x, arcs))
}

/// Walks around the fixed arborescence `a` and records when each arc is
/// first met.
pub fn order_timeline(t: &Trinity, a: &Arborescence, side: StartSide) -> Result<OrderTimeline, SpanningError> {
    if !t.is_planar() {
        return Err(SpanningError::NotPlanar);
    }
    let darts = Darts { t, x: a.color };
    let start = darts.start(side).ok_or(SpanningError::NotPlanar)?;
    let mut seen = HashSet::new();
    let mut events = Vec::new();
    let mut d = start;
    for _ in 0..3 * t.triangle_count() + 3 {
        let e = darts.arc(d);
        let tree = a.contains(e);
        if seen.insert(e) {
            let kind =
                if tree { EventKind::TreeTraversal } else { EventKind::FirstCrossing { tail_first: darts.is_tail(d) } };
            events.push(TimelineEvent { arc: e, kind });
        }
        d = if tree { t.ccw_next(darts.opp(d)) } else { t.ccw_next(d) };
        if d == start {
            break;
        }
    }
    if events.len() != t.edges_of_color(a.color).len() {
        return Err(SpanningError::Inconsistent(format!("{} walk met {} arcs", a.color.name(), events.len())));
    }
    Ok(OrderTimeline { color: a.color, events })
}
