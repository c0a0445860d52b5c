//! Spanning arborescences of the dual digraphs of planar trinities.

mod walk;

use thiserror::Error;

use crate::states::{check_state, Arborescence, State};
use crate::trinity::{Color, DualDigraph, Shade, Trinity, VertexId};

pub use walk::{clocked_arborescence, clocked_arborescence_from, order_timeline, EventKind, OrderTimeline, StartSide, TimelineEvent};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpanningError {
    #[error("spanning constructions need a planar trinity")]
    NotPlanar,
    #[error("the three clocked arborescences do not form a state: {0}")]
    Inconsistent(String),
}

/// Number of spanning arborescences of `d` directed away from `root`, by
/// fraction-free elimination of the reduced in-degree Laplacian.
pub fn count_arborescences(d: &DualDigraph, root: VertexId) -> i128 {
    let idx: Vec<usize> = (0..d.nodes.len()).filter(|&i| d.nodes[i] != root).collect();
    let k = idx.len();
    if k == 0 {
        return 1;
    }
    let mut pos = vec![usize::MAX; d.nodes.len()];
    for (p, &i) in idx.iter().enumerate() {
        pos[i] = p;
    }
    let mut m = vec![vec![0i128; k]; k];
    for a in d.arcs.iter().filter(|a| a.tail != a.head) {
        let h = d.node_index(a.head).expect("node");
        let tl = d.node_index(a.tail).expect("node");
        if pos[h] == usize::MAX {
            continue;
        }
        m[pos[h]][pos[h]] += 1;
        if pos[tl] != usize::MAX {
            m[pos[tl]][pos[h]] -= 1;
        }
    }
    bareiss_det(m)
}

fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else { return 0 };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// Every spanning arborescence of `d` rooted at `root`, sorted. Each
/// non-root node picks an incoming non-loop arc; choices closing a cycle
/// are abandoned at once.
pub fn enumerate_arborescences(d: &DualDigraph, root: VertexId) -> Vec<Arborescence> {
    let others: Vec<VertexId> = d.nodes.iter().copied().filter(|&v| v != root).collect();
    let incoming: Vec<Vec<(usize, usize)>> = others
        .iter()
        .map(|&v| {
            d.arcs
                .iter()
                .filter(|a| a.head == v && a.tail != v)
                .map(|a| (a.edge.0, d.node_index(a.tail).expect("node")))
                .collect()
        })
        .collect();
    let mut parent: Vec<Option<usize>> = vec![None; d.nodes.len()];
    let mut chosen = Vec::with_capacity(others.len());
    let mut out = Vec::new();

    struct Ctx<'a> {
        d: &'a DualDigraph,
        others: &'a [VertexId],
        incoming: &'a [Vec<(usize, usize)>],
    }

    fn closes_cycle(parent: &[Option<usize>], start: usize) -> bool {
        let mut cur = start;
        for _ in 0..parent.len() {
            match parent[cur] {
                Some(p) if p == start => return true,
                Some(p) => cur = p,
                None => return false,
            }
        }
        true
    }

    fn go(c: &Ctx, i: usize, parent: &mut Vec<Option<usize>>, chosen: &mut Vec<usize>, out: &mut Vec<Arborescence>) {
        if i == c.others.len() {
            let arcs = chosen.iter().map(|&e| crate::trinity::EdgeId(e)).collect();
            out.push(Arborescence::new(c.d.color, arcs));
            return;
        }
        let me = c.d.node_index(c.others[i]).expect("node");
        for &(e, tail) in &c.incoming[i] {
            parent[me] = Some(tail);
            if !closes_cycle(parent, me) {
                chosen.push(e);
                go(c, i + 1, parent, chosen, out);
                chosen.pop();
            }
            parent[me] = None;
        }
    }

    let ctx = Ctx { d, others: &others, incoming: &incoming };
    go(&ctx, 0, &mut parent, &mut chosen, &mut out);
    out.sort();
    out
}

/// The three clocked arborescences read as one matching: each arc's head
/// takes the white triangle on the far side of the edge it crosses.
pub fn clocked_state(t: &Trinity) -> Result<State, SpanningError> {
    if !t.is_planar() {
        return Err(SpanningError::NotPlanar);
    }
    let mut pairs = Vec::with_capacity(t.n());
    for x in Color::ALL {
        for e in clocked_arborescence(t, x)?.arcs {
            let w = t.edge_triangle(e, Shade::White);
            pairs.push((w, t.vertex_of_color(w, x)));
        }
    }
    let s = State::from_pairs(pairs);
    check_state(t, &s).map_err(|v| SpanningError::Inconsistent(v.to_string()))?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::trivial_trinity;
    use crate::trinity::dual_digraph;

    #[test]
    fn single_node_counts_one() {
        let f = trivial_trinity();
        for x in Color::ALL {
            let d = dual_digraph(&f, x);
            let root = f.root_of_color(x).unwrap();
            assert_eq!(count_arborescences(&d, root), 1);
            assert_eq!(enumerate_arborescences(&d, root), vec![Arborescence::new(x, vec![])]);
        }
        assert_eq!(clocked_state(&f).unwrap(), State::default());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        fn cofactor(m: &[Vec<i128>]) -> i128 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i128>> =
                        m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let m = vec![vec![2, -1, 0, 3], vec![-1, 3, -1, 0], vec![0, -1, 2, 5], vec![4, 0, -2, 1]];
        assert_eq!(bareiss_det(m.clone()), cofactor(&m));
        let singular = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(bareiss_det(singular), 0);
        let swap = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(bareiss_det(swap), -1);
    }
}
