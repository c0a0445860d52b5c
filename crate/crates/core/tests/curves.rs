use std::collections::BTreeSet;

use trinity_core::build::{
    curve_layout, enumerate_kauffman_states, from_curve, kauffman_to_matching, CurvePresentation, KauffmanState,
};
use trinity_core::graph::build_graph;
use trinity_core::states::enumerate_states;
use trinity_core::trinity::Color;

const FIGURE_EIGHT: &str = "\
# one double point, two loops
crossing x a b c d
strand a b
strand d c
";

#[test]
fn figure_eight() {
    let c = CurvePresentation::parse(FIGURE_EIGHT).unwrap();
    let t = from_curve(&c).unwrap();
    assert_eq!((t.n(), t.genus(), t.vertex_count()), (2, 0, 4));
    let greens = t.vertices_of_color(Color::Green);
    assert_eq!(greens.len(), 1);
    assert_eq!(t.degree(greens[0]), 4);
    assert_eq!(enumerate_states(&t).len(), 1);
    assert_eq!(CurvePresentation::parse(&c.to_string()).unwrap(), c);
}

#[test]
fn green_vertices_are_double_points_of_degree_four() {
    for m in 1..=6 {
        let t = from_curve(&CurvePresentation::two_bridge_twist(m)).unwrap();
        let greens = t.vertices_of_color(Color::Green);
        assert_eq!(greens.len(), m);
        assert!(greens.iter().all(|&g| t.degree(g) == 4));
        assert_eq!(t.genus(), 0);
    }
}

#[test]
fn kauffman_states_biject_with_tutte_states() {
    for m in 1..=5 {
        let layout = curve_layout(&CurvePresentation::two_bridge_twist(m)).unwrap();
        let t = &layout.trinity;
        let ks = enumerate_kauffman_states(&layout);
        let images: BTreeSet<_> = ks.iter().map(|k| kauffman_to_matching(&layout, k).unwrap()).collect();
        assert_eq!(images.len(), ks.len());
        let states: BTreeSet<_> = enumerate_states(t).into_iter().collect();
        assert_eq!(images, states, "twist {m}");

        let preimage = |s: &_| ks.iter().find(|k| &kauffman_to_matching(&layout, k).unwrap() == s).unwrap();
        let g = build_graph(t);
        for e in &g.edges {
            let (a, b) = (preimage(&g.states[e.from]), preimage(&g.states[e.to]));
            let moved = a.markers.iter().zip(&b.markers).filter(|(x, y)| x != y).count();
            assert_eq!(moved, 2, "a clock move swaps two markers");
        }
    }
}

#[test]
fn bad_curves_are_rejected() {
    assert!(from_curve(&CurvePresentation::default()).is_err());
    let loose = CurvePresentation::parse("crossing x a b c d\nstrand a b\n").unwrap();
    assert!(from_curve(&loose).is_err());
    assert!(CurvePresentation::parse("bogus line").is_err());
    let layout = curve_layout(&CurvePresentation::two_bridge_twist(2)).unwrap();
    assert!(kauffman_to_matching(&layout, &KauffmanState { markers: vec![0] }).is_err());
}
