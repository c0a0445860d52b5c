//! Acceptance run: one line per criterion with its time budget. Exits
//! non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trinity_core::build::{
    connected_sum, connected_sum_with_maps, decompose, enumerate_toric_trinities, mixed_toric, planar_fixtures, random_planar,
    smallest_toric, toric_fixtures,
};
use trinity_core::clockwork::{empty_black_triangles, Clockwork, Direction, SiteLabel};
use trinity_core::graph::{
    build_graph, build_graph_with, classify_components, graph_product, lattice_view, recurrence_order, ComponentClass,
    TransitionGraph,
};
use trinity_core::spanning::{clocked_state, count_arborescences};
use trinity_core::states::{enumerate_states, enumerate_states_naive, extend_wreath, find_wreath, is_state};
use trinity_core::trinity::{dual_digraph, Color, TriangleId, Trinity};

const SEED: u64 = 0x7417;
const GENERATED_PLANAR: usize = 100;
const PLANAR_N_MAX: usize = 8;
/// Each generated planar trinity is the one with most states among this
/// many uniform samples of its size.
const PLANAR_DRAWS: usize = 24;
/// Extra planar trinities beyond the required corpus: connected sums of
/// the bundled twist fixtures, whose graphs are products of chains.
const SUMMED: [&[&str]; 4] =
    [&["trefoil", "twist-4"], &["twist-4", "twist-5"], &["trefoil", "twist-4", "twist-5"], &["figure-eight", "trefoil", "twist-5"]];
const PRODUCT_PAIRS: usize = 24;
const DISTRIBUTIVE_LIMIT: usize = 200;
const CENSUS_N_MAX: usize = 5;
const ORACLE_N_MAX: usize = 6;

type Outcome = Result<String, String>;
type Criterion<'a> = (u32, &'static str, u64, Box<dyn Fn() -> Outcome + 'a>);

struct Corpus {
    planar: Vec<(String, Trinity)>,
    toric: Vec<(String, Trinity)>,
}

impl Corpus {
    fn build() -> Corpus {
        let mut planar: Vec<(String, Trinity)> =
            planar_fixtures().into_iter().map(|(name, t)| (name.to_string(), t)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for i in 0..GENERATED_PLANAR {
            let n = 1 + i % PLANAR_N_MAX;
            let t = (0..PLANAR_DRAWS)
                .map(|_| random_planar(n, &mut rng))
                .max_by_key(|t| enumerate_states(t).len())
                .expect("at least one draw");
            planar.push((format!("generated-{i} (n = {n})"), t));
        }
        let bundled: BTreeMap<&str, Trinity> = planar_fixtures().into_iter().collect();
        for names in SUMMED {
            let mut t = bundled[names[0]].clone();
            for name in &names[1..] {
                let b = t.blacks()[t.n() / 2];
                t = connected_sum(&t, b, &bundled[name]).expect("planar summand");
            }
            planar.push((names.join(" # "), t));
        }
        let mut toric: Vec<(String, Trinity)> =
            toric_fixtures().into_iter().map(|(name, t)| (name.to_string(), t)).collect();
        for (i, t) in enumerate_toric_trinities(CENSUS_N_MAX).into_iter().enumerate() {
            toric.push((format!("census-{i} (n = {})", t.n()), t));
        }
        Corpus { planar, toric }
    }

    fn bundled_planar(&self) -> usize {
        planar_fixtures().len()
    }
}

fn c1_smallest_torus() -> Outcome {
    let t = smallest_toric();
    let g = build_graph(&t);
    if g.node_count() != 6 {
        return Err(format!("{} states", g.node_count()));
    }
    let isolated = (0..6).filter(|&s| g.out_edges(s).next().is_none() && g.in_edges(s).next().is_none()).count();
    if isolated != 3 {
        return Err(format!("{isolated} isolated states"));
    }
    if g.edges.len() != 3 {
        return Err(format!("{} edges", g.edges.len()));
    }
    // walk the cycle from a non-isolated state
    let start = (0..6).find(|&s| g.out_edges(s).next().is_some()).expect("three moving states");
    let mut labels = BTreeSet::new();
    let mut v = start;
    for _ in 0..3 {
        let out: Vec<_> = g.out_edges(v).collect();
        if out.len() != 1 {
            return Err(format!("state {v} has {} moves", out.len()));
        }
        match out[0].site {
            SiteLabel::Triangle(b) if t.blacks().contains(&b) => labels.insert(b),
            other => return Err(format!("edge label {other} is not a black triangle")),
        };
        v = out[0].to;
    }
    if v != start || labels.len() != 3 {
        return Err(format!("walk does not close into a 3-cycle with distinct labels ({labels:?})"));
    }
    Ok("6 states, 3 isolated, one 3-cycle labelled by all three black triangles".into())
}

fn c2_mixed_torus() -> Outcome {
    let g = build_graph(&mixed_toric());
    let s = classify_components(&g);
    let ok = g.node_count() == 28
        && s.cyclic_sizes == [14]
        && s.acyclic_sizes.len() == 6
        && s.isolated == 4
        && s.acyclic_sizes.contains(&5)
        && s.total() == 28;
    if ok {
        Ok(format!("28 states: {s}, acyclic sizes {:?}", s.acyclic_sizes))
    } else {
        Err(format!("{} states: {s}, acyclic sizes {:?}", g.node_count(), s.acyclic_sizes))
    }
}

fn c3_tree_trinity(c: &Corpus) -> Outcome {
    for (name, t) in &c.planar {
        let states = enumerate_states(t).len() as i128;
        for x in Color::ALL {
            let rho = count_arborescences(&dual_digraph(t, x), t.root_of_color(x).expect("planar"));
            if rho != states {
                return Err(format!("{name}: {} count {rho}, {states} states", x.name()));
            }
        }
    }
    Ok(format!(
        "{} bundled, {GENERATED_PLANAR} generated with n <= {PLANAR_N_MAX}, {} sums of fixtures",
        c.bundled_planar(),
        SUMMED.len()
    ))
}

fn distributive(meet: &[Vec<usize>], join: &[Vec<usize>]) -> bool {
    let k = meet.len();
    (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]])))
}

fn c4_planar_clock(c: &Corpus) -> Outcome {
    let mut checked = 0;
    let mut largest = 0;
    for (name, t) in &c.planar {
        let g = build_graph(t);
        if g.components.len() != 1 {
            return Err(format!("{name}: {} components", g.components.len()));
        }
        let top = (0..g.node_count()).filter(|&s| g.out_edges(s).next().is_none()).count();
        let bottom = (0..g.node_count()).filter(|&s| g.in_edges(s).next().is_none()).count();
        if top != 1 || bottom != 1 {
            return Err(format!("{name}: {top} maximal and {bottom} minimal states"));
        }
        let lv = lattice_view(&g, 0).map_err(|e| format!("{name}: {e}"))?;
        let tables = lv.tables().map_err(|e| format!("{name}: phi closure: {e}"))?;
        if g.node_count() <= DISTRIBUTIVE_LIMIT {
            if !distributive(&tables.meet, &tables.join) {
                return Err(format!("{name}: not distributive"));
            }
            checked += 1;
        }
        largest = largest.max(g.node_count());
    }
    Ok(format!(
        "{} trinities connected with one maximum and one minimum, phi-closed; {checked} distributive (largest graph {largest})",
        c.planar.len()
    ))
}

fn c5_clocked(c: &Corpus) -> Outcome {
    for (name, t) in &c.planar {
        let s = clocked_state(t).map_err(|e| format!("{name}: {e}"))?;
        if empty_black_triangles(t, &s).iter().any(|&(_, d)| d == Direction::Cw) {
            return Err(format!("{name}: clocked state admits a clockwise move"));
        }
        let g = build_graph(t);
        let lv = lattice_view(&g, 0).map_err(|e| format!("{name}: {e}"))?;
        if g.states[lv.max] != s {
            return Err(format!("{name}: clocked {s}, maximum {}", g.states[lv.max]));
        }
    }
    Ok(format!("{} planar trinities", c.planar.len()))
}

fn product_holds(t: &Trinity, b: TriangleId, p: &Trinity) -> Result<(), String> {
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
        Err(format!("sum graph {}/{} against product {}/{}", g.node_count(), g.edges.len(), prod.node_count(), prod.edges.len()))
    }
}

fn c6_product(c: &Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let lefts: Vec<&Trinity> = c.toric.iter().take(2).chain(c.planar.iter().take(c.bundled_planar())).map(|(_, t)| t).collect();
    let mut toric = 0;
    for i in 0..PRODUCT_PAIRS {
        let t = lefts[i % lefts.len()];
        let p = random_planar(rng.gen_range(1..=5), &mut rng);
        let b = t.blacks()[rng.gen_range(0..t.n())];
        product_holds(t, b, &p).map_err(|e| format!("pair {i}: {e}"))?;
        toric += usize::from(t.genus() == 1);
    }
    Ok(format!("{PRODUCT_PAIRS} pairs ({toric} with a toric left factor)"))
}

/// The irreducible core of a toric trinity: itself, or what remains after
/// splitting off every planar summand.
fn irreducible_core(t: &Trinity) -> Result<(Trinity, bool), String> {
    if Clockwork::new(t).is_irreducible() {
        return Ok((t.clone(), false));
    }
    let core = decompose(t).map_err(|e| e.to_string())?.core;
    if !Clockwork::new(&core).is_irreducible() {
        return Err("core still reducible".into());
    }
    Ok((core, true))
}

fn cyclic_components(g: &TransitionGraph) -> impl Iterator<Item = &trinity_core::graph::Component> {
    g.components.iter().filter(|c| c.class == ComponentClass::Cyclic)
}

/// No extrema, and every state returns to itself without leaving its
/// component.
fn check_recurrent(g: &TransitionGraph) -> Result<usize, String> {
    let mut components = 0;
    for comp in cyclic_components(g) {
        components += 1;
        let members: BTreeSet<usize> = comp.states.iter().copied().collect();
        for &s in &comp.states {
            if g.out_edges(s).next().is_none() || g.in_edges(s).next().is_none() {
                return Err(format!("state {s} is a local extremum"));
            }
            let mut seen = BTreeSet::new();
            let mut stack: Vec<usize> = g.out_edges(s).map(|e| e.to).collect();
            while let Some(v) = stack.pop() {
                if seen.insert(v) {
                    stack.extend(g.out_edges(v).map(|e| e.to));
                }
            }
            if !seen.contains(&s) || !seen.is_subset(&members) {
                return Err(format!("state {s} is not recurrent within its component"));
            }
        }
    }
    Ok(components)
}

/// One turn of each black triangle from every cyclic state, and equal turns
/// along the cycle reached by following first moves. Needs an irreducible
/// trinity.
fn check_turns(t: &Trinity, clock: &Clockwork, g: &TransitionGraph) -> Result<(), String> {
    for comp in cyclic_components(g) {
        for &s in &comp.states {
            let order = recurrence_order(t, clock, &g.states[s]).map_err(|e| format!("state {s}: {e}"))?;
            let used: BTreeSet<TriangleId> = order.iter().copied().collect();
            if order.len() != t.n() || used.len() != t.n() {
                return Err(format!("state {s}: recurrence order {order:?}"));
            }
        }
        let mut pos = BTreeMap::new();
        let mut walk = Vec::new();
        let mut v = comp.states[0];
        while !pos.contains_key(&v) {
            pos.insert(v, walk.len());
            let e = g.out_edges(v).next().ok_or_else(|| format!("state {v} has no move"))?;
            walk.push(e.site);
            v = e.to;
        }
        let mut turns: BTreeMap<SiteLabel, usize> = BTreeMap::new();
        for &site in &walk[pos[&v]..] {
            *turns.entry(site).or_default() += 1;
        }
        let counts: BTreeSet<usize> =
            t.blacks().iter().map(|&b| turns.get(&SiteLabel::Triangle(b)).copied().unwrap_or(0)).collect();
        if counts.len() != 1 || turns.len() != t.n() {
            return Err(format!("cycle turns {turns:?}"));
        }
    }
    Ok(())
}

fn c7_cyclic(c: &Corpus) -> Outcome {
    let mut components = 0;
    let mut reducible = 0;
    for (name, t) in &c.toric {
        components += check_recurrent(&build_graph(t)).map_err(|e| format!("{name}: {e}"))?;
        let (core, split) = irreducible_core(t).map_err(|e| format!("{name}: {e}"))?;
        reducible += usize::from(split);
        let clock = Clockwork::new(&core);
        let g = build_graph_with(&core, &clock);
        if split {
            check_recurrent(&g).map_err(|e| format!("{name} core: {e}"))?;
        }
        check_turns(&core, &clock, &g).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!(
        "{} toric trinities, {components} cyclic components; turn counts on the irreducible core of the {reducible} reducible ones",
        c.toric.len()
    ))
}

fn c8_wreath(c: &Corpus) -> Outcome {
    let mut total = 0;
    for (name, t) in &c.toric {
        for x in Color::ALL {
            let w = find_wreath(t, x).map_err(|e| format!("{name} {}: {e}", x.name()))?;
            let states = extend_wreath(t, &w).map_err(|e| format!("{name} {}: {e}", x.name()))?;
            let distinct: BTreeSet<_> = states.iter().collect();
            if states.len() != 1 << w.k() || distinct.len() != states.len() || !states.iter().all(|s| is_state(t, s)) {
                return Err(format!("{name} {}: k = {}, {} states, {} distinct", x.name(), w.k(), states.len(), distinct.len()));
            }
            total += states.len();
        }
    }
    Ok(format!("{} toric trinities, three colors each, {total} extended states", c.toric.len()))
}

fn c9_oracle(c: &Corpus) -> Outcome {
    let mut instances: Vec<(String, Trinity)> =
        c.planar.iter().chain(&c.toric).filter(|(_, t)| t.n() <= ORACLE_N_MAX).cloned().collect();
    for (i, t) in enumerate_toric_trinities(ORACLE_N_MAX).into_iter().filter(|t| t.n() > CENSUS_N_MAX).enumerate() {
        instances.push((format!("census-6-{i}"), t));
    }
    for (name, t) in &instances {
        let fast = enumerate_states(t);
        let naive = enumerate_states_naive(t);
        if fast != naive {
            return Err(format!("{name}: backtracking {} states, naive {}", fast.len(), naive.len()));
        }
    }
    Ok(format!("{} instances with n <= {ORACLE_N_MAX}", instances.len()))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let corpus = Corpus::build();
    println!("corpus: {} planar, {} toric ({:.2?})", corpus.planar.len(), corpus.toric.len(), started.elapsed());

    let criteria: [Criterion; 9] = [
        (1, "smallest torus", 1, Box::new(c1_smallest_torus)),
        (2, "mixed torus components", 10, Box::new(c2_mixed_torus)),
        (3, "tree trinity counts", 60, Box::new(|| c3_tree_trinity(&corpus))),
        (4, "planar clock lattice", 120, Box::new(|| c4_planar_clock(&corpus))),
        (5, "clocked state is maximal", 60, Box::new(|| c5_clocked(&corpus))),
        (6, "product theorem", 60, Box::new(|| c6_product(&corpus))),
        (7, "cyclic components", 120, Box::new(|| c7_cyclic(&corpus))),
        (8, "wreath extension", 60, Box::new(|| c8_wreath(&corpus))),
        (9, "enumerator agreement", 120, Box::new(|| c9_oracle(&corpus))),
    ];
    let mut failures = 0;
    for (id, name, budget, run) in &criteria {
        let t0 = Instant::now();
        let result = run();
        let elapsed = t0.elapsed();
        let budget = Duration::from_secs(*budget);
        let (ok, detail) = match result {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(d) => (false, d),
        };
        failures += usize::from(!ok);
        println!(
            "{} criterion {id} ({name}): {detail} [{:.3}s / {}s]",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
