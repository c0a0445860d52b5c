mod common;

use rand::Rng;
use trinity_core::build::{
    connected_sum, connected_sum_with_maps, decompose, random_planar, smallest_toric, trivial_trinity,
};
use trinity_core::graph::{build_graph, graph_product};
use trinity_core::trinity::{canonical_form, Trinity};

fn product_holds(t: &Trinity, b: trinity_core::trinity::TriangleId, p: &Trinity) -> Result<(), String> {
    let (sum, maps) = connected_sum_with_maps(t, b, p).map_err(|e| e.to_string())?;
    let g = build_graph(&sum);
    let (gl, gr) = (build_graph(t), build_graph(p));
    let prod = graph_product(&gl, &gr);
    let mut node_map = Vec::with_capacity(g.node_count());
    for s in &g.states {
        let (l, r) = maps.split_state(s).ok_or("state does not split")?;
        let i = gl.state_id(&l).ok_or_else(|| format!("left part {l} is not a state"))?;
        let j = gr.state_id(&r).ok_or_else(|| format!("right part {r} is not a state"))?;
        node_map.push(prod.node(i, j));
    }
    if prod.matches(&g, &node_map, |l| maps.product_label(l)) {
        Ok(())
    } else {
        Err(format!("graph of the sum ({} nodes, {} edges) differs from the product ({} nodes, {} edges)",
            g.node_count(), g.edges.len(), prod.node_count(), prod.edges.len()))
    }
}

#[test]
fn summing_the_trivial_trinity_changes_nothing() {
    let t3 = smallest_toric();
    for &b in t3.blacks() {
        let s = connected_sum(&t3, b, &trivial_trinity()).unwrap();
        assert_eq!(canonical_form(&s), canonical_form(&t3));
    }
}

#[test]
fn sums_have_the_expected_size_and_genus() {
    let mut r = common::rng(5);
    let t3 = smallest_toric();
    for n in 1..=5 {
        let p = random_planar(n, &mut r);
        let s = connected_sum(&t3, t3.blacks()[0], &p).unwrap();
        assert_eq!((s.genus(), s.n()), (1, 3 + n - 1));
    }
}

#[test]
fn product_theorem_on_random_pairs() {
    let mut r = common::rng(9);
    for i in 0..30 {
        let left = if i % 2 == 0 { smallest_toric() } else { random_planar(r.gen_range(1..=5), &mut r) };
        let p = random_planar(r.gen_range(1..=5), &mut r);
        let b = left.blacks()[r.gen_range(0..left.n())];
        product_holds(&left, b, &p).unwrap_or_else(|e| panic!("pair {i}: {e}"));
    }
}

#[test]
fn decompose_round_trips() {
    let mut r = common::rng(13);
    let t3 = smallest_toric();
    let core = decompose(&t3).unwrap();
    assert!(core.attachments.is_empty());
    for _ in 0..20 {
        let p = random_planar(r.gen_range(2..=5), &mut r);
        let s = connected_sum(&t3, t3.blacks()[1], &p).unwrap();
        let tree = decompose(&s).unwrap();
        assert_eq!(canonical_form(&tree.core), canonical_form(&t3));
        assert_eq!(canonical_form(&tree.reglue().unwrap()), canonical_form(&s));
    }
}

#[test]
fn random_planar_decomposes_and_reglues() {
    for t in common::generated_planar(17, 40, 8) {
        let tree = decompose(&t).unwrap();
        assert_eq!(canonical_form(&tree.reglue().unwrap()), canonical_form(&t));
    }
}
