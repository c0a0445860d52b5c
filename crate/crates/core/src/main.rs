use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use trinity_core::build::{
    curve_layout, decompose, enumerate_kauffman_states, from_curve, toric_classes, CurvePresentation, Shard, SumTree,
};
use trinity_core::census::{CensusRecord, CensusStore};
use trinity_core::graph::{build_graph, classify_components, graph_dot, graph_json};
use trinity_core::spanning::{clocked_arborescence, clocked_state, count_arborescences};
use trinity_core::states::{check_state, enumerate_states, extend_wreath, find_wreath, State};
use trinity_core::trinity::{
    canonical_form, canonical_trinity, dual_digraph, parse_trinity_data, save_trinity, save_trinity_json, validate,
    Color, Trinity, TrinityError,
};
use trinity_core::verify::verify;

const WORKERS_ENV: &str = "TRINITY_WORKERS";

#[derive(Parser)]
#[command(name = "trinity", version, about = "Inspect 3-colored triangulations and their Tutte matchings")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit Graphviz where a graph is produced.
    #[arg(long, global = true)]
    dot: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads; overrides the TRINITY_WORKERS variable.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a trinity file and report every broken invariant.
    Validate { input: PathBuf },
    /// List all states.
    States { input: PathBuf },
    /// The transition graph of clock moves.
    Graph { input: PathBuf },
    /// Cyclic and acyclic components of the transition graph.
    Components { input: PathBuf },
    /// Clocked arborescences and the clocked state of a planar trinity.
    Clocked { input: PathBuf },
    /// Spanning arborescence counts per color of a planar trinity.
    Rho { input: PathBuf },
    /// A wreath of each color of a toric trinity and the states it extends to.
    Wreath { input: PathBuf },
    /// Split along separating triangles into irreducible pieces.
    Decompose { input: PathBuf },
    /// Run every applicable theorem check.
    Verify {
        input: PathBuf,
        /// Also check each line of this file as a state.
        #[arg(long, value_name = "PATH")]
        states: Option<PathBuf>,
    },
    /// Enumerate toric trinities up to isomorphism as JSON lines.
    Census {
        #[arg(long, value_name = "N")]
        n_max: usize,
        /// Only the part of the search owned by shard i of k.
        #[arg(long, value_name = "i/k")]
        shard: Option<Shard>,
    },
    /// Canonical form and digest.
    Canonical { input: PathBuf },
    /// Convert a curve description to a trinity.
    Curve { input: PathBuf },
}

enum Failure {
    /// Bad input or arguments.
    Usage(String),
    /// The input was read but a check failed.
    Check(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers.or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(n) = workers {
        // a second initialization only happens in tests and is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn is_curve(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "curve")
}

fn load(path: &Path) -> Result<Trinity, Failure> {
    let text = read(path)?;
    let at = |e: &dyn std::fmt::Display| format!("{}: {e}", path.display());
    if is_curve(path) {
        let c = CurvePresentation::parse(&text).map_err(|e| Failure::Usage(at(&e)))?;
        return from_curve(&c).map_err(|e| Failure::Usage(at(&e)));
    }
    let data = parse_trinity_data(&text).map_err(|e| Failure::Usage(at(&e)))?;
    Trinity::from_data(&data).map_err(|e| match e {
        TrinityError::Invalid(v) => Failure::Check(at(&v)),
        e => Failure::Usage(at(&e)),
    })
}

fn require_planar(t: &Trinity, what: &str) -> Result<(), Failure> {
    if t.is_planar() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{what} needs a planar trinity; this one has genus {}", t.genus())))
    }
}

struct Output {
    sink: Box<dyn Write>,
}

impl Output {
    fn open(path: Option<&Path>) -> io::Result<Output> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
            None => Box::new(io::stdout().lock()),
        };
        Ok(Output { sink })
    }

    fn line(&mut self, s: impl std::fmt::Display) -> io::Result<()> {
        writeln!(self.sink, "{s}")
    }

    fn json(&mut self, v: &serde_json::Value) -> io::Result<()> {
        writeln!(self.sink, "{}", serde_json::to_string_pretty(v).expect("JSON value serializes"))
    }
}

fn run(cli: &Cli) -> Outcome {
    if let Command::Census { n_max, shard } = &cli.command {
        return census(cli, *n_max, shard.unwrap_or(Shard::ALL));
    }
    let mut out = Output::open(cli.out.as_deref())?;
    let ok = match &cli.command {
        Command::Validate { input } => validate_cmd(cli, &mut out, input)?,
        Command::States { input } => {
            let t = load(input)?;
            let states = enumerate_states(&t);
            if cli.json {
                out.json(&json!({ "count": states.len(), "states": states }))?;
            } else {
                out.line(format_args!("{} states", states.len()))?;
                for s in &states {
                    out.line(s)?;
                }
            }
            true
        }
        Command::Graph { input } => {
            let g = build_graph(&load(input)?);
            if cli.dot {
                write!(out.sink, "{}", graph_dot(&g))?;
            } else if cli.json {
                out.json(&graph_json(&g))?;
            } else {
                out.line(format_args!("{} states, {} moves", g.node_count(), g.edges.len()))?;
                for e in &g.edges {
                    out.line(format_args!("{} -> {} cw {}", e.from, e.to, e.site))?;
                }
            }
            true
        }
        Command::Components { input } => {
            let g = build_graph(&load(input)?);
            let summary = classify_components(&g);
            if cli.json {
                out.json(&json!({ "summary": summary.to_string(), "components": summary }))?;
            } else {
                out.line(&summary)?;
            }
            true
        }
        Command::Clocked { input } => {
            let t = load(input)?;
            require_planar(&t, "clocked")?;
            let state = clocked_state(&t).map_err(|e| Failure::Check(e.to_string()))?;
            let mut arbs = Vec::new();
            for x in Color::ALL {
                arbs.push(clocked_arborescence(&t, x).map_err(|e| Failure::Check(e.to_string()))?);
            }
            if cli.json {
                out.json(&json!({ "arborescences": arbs, "state": state }))?;
            } else {
                for a in &arbs {
                    out.line(format_args!("{} {}", a.color.name(), join(&a.arcs)))?;
                }
                out.line(&state)?;
            }
            true
        }
        Command::Rho { input } => {
            let t = load(input)?;
            require_planar(&t, "rho")?;
            let counts = Color::ALL.map(|x| count_arborescences(&dual_digraph(&t, x), t.root_of_color(x).expect("planar")));
            let states = enumerate_states(&t).len();
            if cli.json {
                out.json(&json!({ "red": counts[0], "green": counts[1], "blue": counts[2], "states": states }))?;
            } else {
                for (x, c) in Color::ALL.iter().zip(counts) {
                    out.line(format_args!("{} {c}", x.name()))?;
                }
                out.line(format_args!("states {states}"))?;
            }
            counts.iter().all(|&c| c == states as i128)
        }
        Command::Wreath { input } => {
            let t = load(input)?;
            if t.genus() != 1 {
                return Err(Failure::Check(format!("wreaths need a toric trinity; this one has genus {}", t.genus())));
            }
            let mut rows = Vec::new();
            for x in Color::ALL {
                let w = find_wreath(&t, x).map_err(|e| Failure::Check(format!("{}: {e}", x.name())))?;
                let states = extend_wreath(&t, &w).map_err(|e| Failure::Check(format!("{}: {e}", x.name())))?;
                rows.push((w, states));
            }
            if cli.json {
                let v: Vec<_> = rows.iter().map(|(w, s)| json!({ "wreath": w, "states": s })).collect();
                out.json(&serde_json::Value::Array(v))?;
            } else {
                for (w, states) in &rows {
                    out.line(format_args!("{} wreath {} ({} cycles, {} states)", w.color.name(), join(&w.arcs), w.k(), states.len()))?;
                    for s in states {
                        out.line(format_args!("  {s}"))?;
                    }
                }
            }
            true
        }
        Command::Decompose { input } => {
            let tree = decompose(&load(input)?).map_err(|e| Failure::Check(e.to_string()))?;
            if cli.json {
                out.json(&tree_json(&tree))?;
            } else {
                out.line(format_args!("{} pieces, depth {}", tree.summand_count() + 1, tree.depth()))?;
                write_tree(&mut out, &tree, 0)?;
            }
            true
        }
        Command::Verify { input, states } => verify_cmd(cli, &mut out, input, states.as_deref())?,
        Command::Canonical { input } => {
            let t = load(input)?;
            let form = canonical_form(&t);
            let c = canonical_trinity(&t);
            if cli.json {
                out.json(&json!({ "digest": form.digest(), "form": form.text(), "trinity": save_trinity(&c) }))?;
            } else {
                out.line(format_args!("digest {}", form.digest()))?;
                write!(out.sink, "{}", save_trinity(&c))?;
            }
            true
        }
        Command::Curve { input } => {
            let c = CurvePresentation::parse(&read(input)?).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let layout = curve_layout(&c).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            if cli.json {
                write!(out.sink, "{}", save_trinity_json(&layout.trinity))?;
            } else {
                write!(out.sink, "{}", save_trinity(&layout.trinity))?;
                out.line(format_args!("# {} Kauffman states", enumerate_kauffman_states(&layout).len()))?;
            }
            true
        }
        Command::Census { .. } => unreachable!("handled above"),
    };
    out.sink.flush()?;
    Ok(ok)
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn validate_cmd(cli: &Cli, out: &mut Output, input: &Path) -> Outcome {
    let text = read(input)?;
    let t = if is_curve(input) {
        let c = CurvePresentation::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
        from_curve(&c).map_err(|e| Failure::Check(format!("{}: {e}", input.display())))?
    } else {
        let data = parse_trinity_data(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
        let violations = validate(&data);
        if !violations.is_empty() {
            if cli.json {
                out.json(&json!({ "valid": false, "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>() }))?;
            } else {
                for v in &violations {
                    out.line(v)?;
                }
            }
            out.sink.flush()?;
            return Ok(false);
        }
        Trinity::from_data(&data).map_err(|e| Failure::Check(e.to_string()))?
    };
    if cli.json {
        out.json(&json!({
            "valid": true, "genus": t.genus(), "n": t.n(),
            "vertices": t.vertex_count(), "edges": t.edge_count(), "triangles": t.triangle_count(),
        }))?;
    } else {
        out.line(format_args!(
            "valid: genus {}, n {}, {} vertices, {} edges, {} triangles",
            t.genus(),
            t.n(),
            t.vertex_count(),
            t.edge_count(),
            t.triangle_count()
        ))?;
    }
    Ok(true)
}

fn verify_cmd(cli: &Cli, out: &mut Output, input: &Path, states: Option<&Path>) -> Outcome {
    let t = load(input)?;
    let mut report = verify(&t);
    if let Some(path) = states {
        let text = read(path)?;
        let mut bad = Vec::new();
        let mut count = 0;
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            count += 1;
            let s: State = line.parse().map_err(|e| Failure::Usage(format!("{}:{}: {e}", path.display(), i + 1)))?;
            if let Err(e) = check_state(&t, &s) {
                bad.push(format!("line {}: {e}", i + 1));
            }
        }
        report.checks.push(trinity_core::verify::Check {
            name: "is-state",
            passed: bad.is_empty(),
            detail: if bad.is_empty() { format!("{count} listed states valid") } else { bad.join("; ") },
        });
    }
    if cli.json {
        out.json(&json!({ "passed": report.passed(), "report": report }))?;
    } else {
        write!(out.sink, "{report}")?;
    }
    Ok(report.passed())
}

fn tree_json(tree: &SumTree) -> serde_json::Value {
    json!({
        "n": tree.core.n(),
        "genus": tree.core.genus(),
        "digest": canonical_form(&tree.core).digest(),
        "attachments": tree.attachments.iter().map(|(b, sub)| json!({ "at": b.0, "summand": tree_json(sub) })).collect::<Vec<_>>(),
    })
}

fn write_tree(out: &mut Output, tree: &SumTree, depth: usize) -> io::Result<()> {
    let pad = "  ".repeat(depth);
    out.line(format_args!("{pad}core: genus {}, n {}, digest {}", tree.core.genus(), tree.core.n(), &canonical_form(&tree.core).digest()[..12]))?;
    for (b, sub) in &tree.attachments {
        out.line(format_args!("{pad}at black {b}:"))?;
        write_tree(out, sub, depth + 1)?;
    }
    Ok(())
}

/// Appends new classes to the JSON-lines file, skipping digests already
/// present, then rewrites it sorted.
fn census(cli: &Cli, n_max: usize, shard: Shard) -> Outcome {
    let Some(path) = cli.out.as_deref() else {
        return Err(Failure::Usage("census needs --out PATH for its records".into()));
    };
    let mut store = CensusStore::load(path)?;
    let resumed = store.records.len();
    {
        let mut file = io::BufWriter::new(fs::OpenOptions::new().create(true).append(true).open(path)?);
        for n in 3..=n_max {
            for (form, t) in toric_classes(n, shard) {
                if store.contains(&form.digest()) {
                    continue;
                }
                let r = CensusRecord::of(&t);
                if !r.is_consistent() {
                    return Err(Failure::Check(format!("class {} has inconsistent component sizes", r.canonical_digest)));
                }
                store.append(&mut file, r)?;
            }
            file.flush()?;
        }
    }
    store.write_sorted(path)?;
    let summary = store.summary();
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&json!({ "resumed": resumed, "summary": summary })).expect("serializes"));
    } else {
        if resumed > 0 {
            println!("resumed with {resumed} records");
        }
        print!("{summary}");
    }
    Ok(true)
}
