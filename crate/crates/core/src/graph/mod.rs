//! State transition graphs: states as nodes, clockwise moves as edges.

mod export;
mod lattice;
mod product;
mod recurrence;

use std::collections::HashMap;
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clockwork::{Clockwork, Direction, SiteLabel};
use crate::states::{enumerate_states, State};
use crate::trinity::Trinity;

pub use export::{graph_json, graph_dot};
pub use lattice::{lattice_view, LatticeError, LatticeTables, LatticeView};
pub use product::{graph_product, ProductGraph, ProductLabel};
pub use recurrence::{recurrence_order, RecurrenceError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub site: SiteLabel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentClass {
    Cyclic,
    Acyclic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: usize,
    pub class: ComponentClass,
    /// State ids, increasing.
    pub states: Vec<usize>,
    /// States without incoming clockwise moves.
    pub local_minima: Vec<usize>,
    /// States without outgoing clockwise moves.
    pub local_maxima: Vec<usize>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.states.len()
    }
}

/// Nodes are the states in enumeration order; there is an edge `s -> t`
/// labeled by a site whenever the clockwise move about that site takes `s`
/// to `t`.
#[derive(Clone, Debug)]
pub struct TransitionGraph {
    pub states: Vec<State>,
    /// Sorted by `(from, to, site)`.
    pub edges: Vec<GraphEdge>,
    pub components: Vec<Component>,
    pub component_of: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    index: HashMap<State, usize>,
}

impl TransitionGraph {
    pub fn state_id(&self, s: &State) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn node_count(&self) -> usize {
        self.states.len()
    }

    pub fn out_edges(&self, s: usize) -> impl Iterator<Item = &GraphEdge> + '_ {
        self.out_edges[s].iter().map(|&i| &self.edges[i])
    }

    pub fn in_edges(&self, s: usize) -> impl Iterator<Item = &GraphEdge> + '_ {
        self.in_edges[s].iter().map(|&i| &self.edges[i])
    }

    /// Assemble from states and clockwise edges; computes components.
    pub fn from_parts(states: Vec<State>, mut edges: Vec<GraphEdge>) -> TransitionGraph {
        edges.sort();
        let n = states.len();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.from].push(i);
            in_edges[e.to].push(i);
        }
        let index = states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut g = TransitionGraph {
            states,
            edges,
            components: Vec::new(),
            component_of: vec![usize::MAX; n],
            out_edges,
            in_edges,
            index,
        };
        g.find_components();
        g
    }

    fn find_components(&mut self) {
        let n = self.states.len();
        let mut digraph = DiGraph::<(), ()>::with_capacity(n, self.edges.len());
        let nodes: Vec<_> = (0..n).map(|_| digraph.add_node(())).collect();
        for e in &self.edges {
            digraph.add_edge(nodes[e.from], nodes[e.to], ());
        }
        let mut on_cycle = vec![false; n];
        for scc in tarjan_scc(&digraph) {
            if scc.len() > 1 {
                for v in scc {
                    on_cycle[v.index()] = true;
                }
            }
        }
        for start in 0..n {
            if self.component_of[start] != usize::MAX {
                continue;
            }
            let id = self.components.len();
            let mut members = vec![start];
            self.component_of[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                let nbrs: Vec<usize> = self.out_edges(v).map(|e| e.to).chain(self.in_edges(v).map(|e| e.from)).collect();
                for u in nbrs {
                    if self.component_of[u] == usize::MAX {
                        self.component_of[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort();
            let class =
                if members.iter().any(|&v| on_cycle[v]) { ComponentClass::Cyclic } else { ComponentClass::Acyclic };
            let local_minima = members.iter().copied().filter(|&v| self.in_edges[v].is_empty()).collect();
            let local_maxima = members.iter().copied().filter(|&v| self.out_edges[v].is_empty()).collect();
            self.components.push(Component { id, class, states: members, local_minima, local_maxima });
        }
    }
}

/// All states and all clockwise moves between them. Moves are found in
/// parallel over states; the result does not depend on scheduling.
pub fn build_graph(t: &Trinity) -> TransitionGraph {
    build_graph_with(t, &Clockwork::new(t))
}

pub fn build_graph_with(t: &Trinity, clock: &Clockwork) -> TransitionGraph {
    let states = enumerate_states(t);
    let index: HashMap<&State, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let edges: Vec<GraphEdge> = states
        .par_iter()
        .enumerate()
        .flat_map_iter(|(from, s)| {
            let owners = s.owners(t.vertex_count());
            let index = &index;
            clock.sites().iter().filter(move |site| site.class(&owners) == Some(Direction::Cw)).map(move |site| {
                let mut next = s.clone();
                next.rematch(&site.moved_pairs(Direction::Cw));
                let to = *index.get(&next).expect("a move yields a state");
                GraphEdge { from, to, site: site.label }
            })
        })
        .collect();
    TransitionGraph::from_parts(states, edges)
}

/// Component counts in the form `1 cyclic (14), 6 acyclic (4 isolated)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub cyclic_sizes: Vec<usize>,
    pub acyclic_sizes: Vec<usize>,
    pub isolated: usize,
}

impl ComponentSummary {
    pub fn total(&self) -> usize {
        self.cyclic_sizes.iter().sum::<usize>() + self.acyclic_sizes.iter().sum::<usize>()
    }
}

impl fmt::Display for ComponentSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cyclic", self.cyclic_sizes.len())?;
        if !self.cyclic_sizes.is_empty() {
            let sizes: Vec<String> = self.cyclic_sizes.iter().map(usize::to_string).collect();
            write!(f, " ({})", sizes.join(", "))?;
        }
        write!(f, ", {} acyclic ({} isolated)", self.acyclic_sizes.len(), self.isolated)
    }
}

/// Sizes sorted decreasing within each class.
pub fn classify_components(g: &TransitionGraph) -> ComponentSummary {
    let mut cyclic_sizes = Vec::new();
    let mut acyclic_sizes = Vec::new();
    for c in &g.components {
        match c.class {
            ComponentClass::Cyclic => cyclic_sizes.push(c.size()),
            ComponentClass::Acyclic => acyclic_sizes.push(c.size()),
        }
    }
    cyclic_sizes.sort_unstable_by(|a, b| b.cmp(a));
    acyclic_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let isolated = acyclic_sizes.iter().filter(|&&s| s == 1).count();
    ComponentSummary { cyclic_sizes, acyclic_sizes, isolated }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{smallest_toric, trivial_trinity};

    #[test]
    fn t3_graph() {
        let g = build_graph(&smallest_toric());
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edges.len(), 3);
        let summary = classify_components(&g);
        assert_eq!(summary.to_string(), "1 cyclic (3), 3 acyclic (3 isolated)");
        let cyc = g.components.iter().find(|c| c.class == ComponentClass::Cyclic).unwrap();
        assert!(cyc.local_minima.is_empty() && cyc.local_maxima.is_empty());
        let labels: std::collections::BTreeSet<SiteLabel> = g.edges.iter().map(|e| e.site).collect();
        assert_eq!(labels.len(), 3);
    }

    #[test]
    fn trivial_graph() {
        let g = build_graph(&trivial_trinity());
        assert_eq!((g.node_count(), g.edges.len(), g.components.len()), (1, 0, 1));
        assert_eq!(g.components[0].class, ComponentClass::Acyclic);
    }
}
