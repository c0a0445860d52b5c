use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::TransitionGraph;
use crate::clockwork::SiteLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ProductLabel {
    Left(SiteLabel),
    Right(SiteLabel),
}

/// Cartesian product of two transition graphs: node `(i, j)` has id
/// `i * right + j`, and moves act in exactly one coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    pub left: usize,
    pub right: usize,
    /// `(from, to, label)`, sorted.
    pub edges: Vec<(usize, usize, ProductLabel)>,
}

impl ProductGraph {
    pub fn node_count(&self) -> usize {
        self.left * self.right
    }

    pub fn node(&self, i: usize, j: usize) -> usize {
        i * self.right + j
    }

    pub fn split(&self, id: usize) -> (usize, usize) {
        (id / self.right, id % self.right)
    }

    /// Whether `g` is this product under a node bijection and a label
    /// translation: `node_map[s]` is the product node of state `s`.
    pub fn matches(
        &self,
        g: &TransitionGraph,
        node_map: &[usize],
        label_map: impl Fn(SiteLabel) -> Option<ProductLabel>,
    ) -> bool {
        if g.node_count() != self.node_count() || node_map.len() != g.node_count() {
            return false;
        }
        let mut hit = vec![false; self.node_count()];
        for &p in node_map {
            if p >= hit.len() || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        let mut mapped = BTreeSet::new();
        for e in &g.edges {
            let Some(label) = label_map(e.site) else { return false };
            mapped.insert((node_map[e.from], node_map[e.to], label));
        }
        mapped.len() == g.edges.len() && mapped.into_iter().eq(self.edges.iter().copied())
    }
}

pub fn graph_product(g1: &TransitionGraph, g2: &TransitionGraph) -> ProductGraph {
    let (a, b) = (g1.node_count(), g2.node_count());
    let mut edges = Vec::with_capacity(g1.edges.len() * b + g2.edges.len() * a);
    for e in &g1.edges {
        for j in 0..b {
            edges.push((e.from * b + j, e.to * b + j, ProductLabel::Left(e.site)));
        }
    }
    for e in &g2.edges {
        for i in 0..a {
            edges.push((i * b + e.from, i * b + e.to, ProductLabel::Right(e.site)));
        }
    }
    edges.sort();
    ProductGraph { left: a, right: b, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{smallest_toric, trivial_trinity};
    use crate::graph::build_graph;

    #[test]
    fn unit_factor() {
        let g = build_graph(&smallest_toric());
        let unit = build_graph(&trivial_trinity());
        let p = graph_product(&g, &unit);
        assert_eq!(p.node_count(), g.node_count());
        let ids: Vec<usize> = (0..g.node_count()).collect();
        assert!(p.matches(&g, &ids, |s| Some(ProductLabel::Left(s))));
        assert!(!p.matches(&g, &ids, |s| Some(ProductLabel::Right(s))));
    }

    #[test]
    fn square_of_t3() {
        let g = build_graph(&smallest_toric());
        let p = graph_product(&g, &g);
        assert_eq!(p.node_count(), 36);
        assert_eq!(p.edges.len(), 2 * 3 * 6);
    }
}
