use std::collections::BTreeSet;

use super::{Site, SiteLabel};
use crate::trinity::{Color, EdgeId, Shade, TriangleId, Trinity, VertexId};

/// The triangles on the black side of a three-edge cycle, when that side is
/// a disk of more than one triangle not containing the outer triangle. The
/// boundary of the outer triangle itself does not count.
/// `edges` are the red, green and blue cycle edges.
pub fn disk_interior(t: &Trinity, edges: [EdgeId; 3]) -> Option<Vec<TriangleId>> {
    let blacks = edges.map(|e| t.edge_triangle(e, Shade::Black));
    let whites = edges.map(|e| t.edge_triangle(e, Shade::White));
    let mut inside = vec![false; t.triangle_count()];
    inside[blacks[0].0] = true;
    let mut stack = vec![blacks[0]];
    let mut disk = Vec::new();
    while let Some(tri) = stack.pop() {
        disk.push(tri);
        for (k, s) in t.boundary(tri).iter().enumerate() {
            if edges.contains(&s.edge) {
                continue;
            }
            let next = t.across(tri, k).triangle;
            if !inside[next.0] {
                inside[next.0] = true;
                stack.push(next);
            }
        }
    }
    if disk.len() < 2
        || disk.len() + 1 == t.triangle_count()
        || whites.iter().any(|w| inside[w.0])
        || blacks.iter().any(|b| !inside[b.0])
        || t.outer().is_some_and(|o| inside[o.0])
    {
        return None;
    }
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    for &tri in &disk {
        vs.extend(t.triangle_vertices(tri));
        es.extend(t.boundary(tri).iter().map(|s| s.edge));
    }
    let chi = vs.len() as i64 - es.len() as i64 + disk.len() as i64;
    if chi != 1 {
        return None;
    }
    disk.sort();
    Some(disk)
}

/// Orient a disk's boundary edges as its inner black triangles traverse
/// them, chained into a counter-clockwise cycle starting at the red edge.
pub(crate) fn disk_site(t: &Trinity, edges: [EdgeId; 3]) -> Site {
    let dir = |e: EdgeId| -> (VertexId, VertexId) {
        let b = t.edge_triangle(e, Shade::Black);
        let k = t.boundary(b).iter().position(|s| s.edge == e).expect("edge on its black side");
        (t.triangle_vertices(b)[k], t.triangle_vertices(b)[(k + 1) % 3])
    };
    let mut order = [edges[0]; 3];
    for i in 1..3 {
        let end = dir(order[i - 1]).1;
        order[i] = *edges.iter().find(|&&e| dir(e).0 == end).expect("cycle closes");
    }
    Site {
        label: SiteLabel::Disk(edges),
        vertices: order.map(|e| dir(e).0),
        edges: order,
        whites: order.map(|e| t.edge_triangle(e, Shade::White)),
    }
}

/// All disk sites, sorted by edge triple.
pub fn find_sites(t: &Trinity) -> Vec<Site> {
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); t.vertex_count()];
    for e in (0..t.edge_count()).map(EdgeId) {
        for v in t.edge_endpoints(e) {
            at[v.0].push(e);
        }
    }
    let other = |e: EdgeId, v: VertexId| {
        let [a, b] = t.edge_endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    };
    let mut out = Vec::new();
    for er in t.edges_of_color(Color::Red) {
        let [p, q] = t.edge_endpoints(er);
        let (g, b) = if t.vertex_color(p) == Color::Green { (p, q) } else { (q, p) };
        for &eg in at[b.0].iter().filter(|&&e| t.edge_color(e) == Color::Green) {
            let r = other(eg, b);
            for &eb in at[r.0].iter().filter(|&&e| t.edge_color(e) == Color::Blue && other(e, r) == g) {
                let edges = [er, eg, eb];
                if disk_interior(t, edges).is_some() {
                    out.push(disk_site(t, edges));
                }
            }
        }
    }
    out.sort_by_key(|s| s.label);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{smallest_toric, trivial_trinity};

    #[test]
    fn fixtures_have_no_disk_sites() {
        assert!(find_sites(&trivial_trinity()).is_empty());
        assert!(find_sites(&smallest_toric()).is_empty());
    }

    #[test]
    fn black_triangle_boundary_is_not_a_disk_site() {
        let t3 = smallest_toric();
        for &b in t3.blacks() {
            let bd = t3.boundary(b).map(|s| s.edge);
            let mut edges = [bd[0]; 3];
            for e in bd {
                edges[t3.edge_color(e).index()] = e;
            }
            assert_eq!(disk_interior(&t3, edges), None);
        }
    }
}
