use thiserror::Error;

use crate::clockwork::{Clockwork, Direction, SiteLabel};
use crate::states::State;
use crate::trinity::{TriangleId, Trinity, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("the trinity has moves about disks; recurrence orders need an irreducible trinity")]
    NotIrreducible,
    /// Each blocked triangle is listed with a corner whose arrow is not yet
    /// in clockwise position.
    #[error("no unused black triangle is clockwise after {applied:?}; blocked: {blocked:?}")]
    Stalled { applied: Vec<TriangleId>, blocked: Vec<(TriangleId, VertexId)> },
    #[error("after one move per black triangle the state did not recur")]
    NoReturn,
}

/// One move about every black triangle, least available id first, each
/// applied clockwise. Succeeds when the walk returns to `s`.
pub fn recurrence_order(t: &Trinity, clock: &Clockwork, s: &State) -> Result<Vec<TriangleId>, RecurrenceError> {
    if !clock.is_irreducible() {
        return Err(RecurrenceError::NotIrreducible);
    }
    let mut used = vec![false; t.triangle_count()];
    let mut order = Vec::with_capacity(t.n());
    let mut cur = s.clone();
    for _ in 0..t.n() {
        let owners = cur.owners(t.vertex_count());
        let next = clock.sites().iter().find(|site| {
            let b = site.label.triangle().expect("irreducible");
            !used[b.0] && site.class(&owners) == Some(Direction::Cw)
        });
        let Some(site) = next else {
            let blocked = t
                .blacks()
                .iter()
                .filter(|b| !used[b.0])
                .filter_map(|&b| {
                    let site = clock.site(SiteLabel::Triangle(b)).expect("black triangle site");
                    (0..3)
                        .find(|&i| owners[site.vertices[i].0] != Some(site.whites[i]))
                        .map(|i| (b, site.vertices[i]))
                })
                .collect();
            return Err(RecurrenceError::Stalled { applied: order, blocked });
        };
        let b = site.label.triangle().expect("irreducible");
        used[b.0] = true;
        order.push(b);
        cur.rematch(&site.moved_pairs(Direction::Cw));
    }
    if cur == *s {
        Ok(order)
    } else {
        Err(RecurrenceError::NoReturn)
    }
}
