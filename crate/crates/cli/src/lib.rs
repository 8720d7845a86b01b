//! Command-line front end: parses diagram and tree files, runs the
//! analyses, and emits deterministic JSON reports.
//!
//! Exit codes: 0 for success or true verdicts, 1 for false verdicts,
//! 2 for input or usage errors, 3 for budget exhaustion.

use clap::{Args, Parser, Subcommand};
use redlink::awtree::{
    apply_tree_op, build_matrix, determinant, enumerate_trees, expansion_signatures,
    h1_and_strong_check, is_effective, permanent_abs, sample_trees, AWTree, Effectiveness, TreeOp,
    H1, SIGNATURE_LIMIT,
};
use redlink::diagram::{canonical_code, code_hex, parse_diagram, parse_diagram_json, Diagram};
use redlink::minor::{contains_borromean, theorem_crosscheck, Containment, MinorError};
use redlink::montesinos::{
    diagram_to_tree, induced_diagram_of_tree, realize_tree, roundtrip_verify,
};
use redlink::reduce::{decide_b_reducible, verify_certificate, Certificate, Reducibility};
use serde_json::{json, Value};

pub const DEFAULT_CORPUS: &str = include_str!("../corpus/links.pd");

#[derive(Parser, Debug)]
#[command(
    name = "redlink",
    version,
    about = "Alternating link diagram and surgery tree toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Common {
    /// Pretty-print the JSON report.
    #[arg(long)]
    pretty: bool,
    /// Node limit for reducibility searches.
    #[arg(long, default_value_t = redlink::reduce::DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Diagram analyses.
    Diagram {
        #[command(subcommand)]
        cmd: DiagramCmd,
    },
    /// Weighted tree analyses.
    Tree {
        #[command(subcommand)]
        cmd: TreeCmd,
    },
    /// Translations between trees and diagrams.
    Convert {
        #[command(subcommand)]
        cmd: ConvertCmd,
    },
    /// Batch verification suites.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand, Debug)]
enum DiagramCmd {
    /// Validation, face census and determinant of one diagram.
    Info {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decide B-reducibility and emit a replayable certificate.
    Reduce {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Test containment of the Borromean diagram under smoothing.
    Brm {
        file: String,
        /// Compare diagrams without allowing mirror images.
        #[arg(long)]
        no_reflection: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Face census and the triangle-count identity.
    Census {
        file: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum TreeCmd {
    /// Validation report for a weighted forest.
    Info {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Surgery matrix, determinant, permanent and signatures.
    Mat {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// First homology order and the strong L-space verdict.
    Strong {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Apply one of the four tree operations.
    Ops {
        file: String,
        /// Operation number 1-4.
        #[arg(long)]
        op: u8,
        /// Vertex id the operation acts at.
        #[arg(long)]
        site: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate or sample weighted forests.
    Enumerate {
        /// Largest vertex count.
        #[arg(long)]
        max: usize,
        /// Sample this many random trees instead of enumerating.
        #[arg(long)]
        sample: Option<usize>,
        /// Random seed for sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum ConvertCmd {
    /// Tree to induced alternating diagram.
    T2d {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Diagram (plus reduction certificate) to tree.
    D2t {
        file: String,
        /// Certificate JSON; computed by a reducibility search when absent.
        #[arg(long)]
        cert: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Tree -> diagram -> tree round trips.
    Roundtrip {
        /// Tree file; alternatively sweep the exhaustive enumeration.
        file: Option<String>,
        /// Sweep every weighted forest with up to this many vertices.
        #[arg(long)]
        max_vertices: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// The reducibility/Borromean bi-implication over diagrams.
    Theorem {
        /// Diagram files to check.
        files: Vec<String>,
        /// Corpus file of named PD codes (defaults to the embedded corpus).
        #[arg(long)]
        corpus: Option<String>,
        /// Also sweep diagrams induced from trees up to this size.
        #[arg(long)]
        trees: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

/// A finished report: exit code plus rendered JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub exit: i32,
    pub text: String,
}

fn render(command: &[String], inputs: Value, result: Value, exit: i32, pretty: bool) -> Report {
    // Echo the arguments without the program-name element.
    let echoed = if command.is_empty() {
        command
    } else {
        &command[1..]
    };
    let envelope = json!({
        "command": echoed.join(" "),
        "inputs": inputs,
        "result": result,
        "exit": exit,
    });
    let text = if pretty {
        serde_json::to_string_pretty(&envelope).expect("serializable")
    } else {
        serde_json::to_string(&envelope).expect("serializable")
    };
    Report { exit, text }
}

fn error_report(command: &[String], message: String, exit: i32, pretty: bool) -> Report {
    render(
        command,
        json!([]),
        json!({ "error": message }),
        exit,
        pretty,
    )
}

fn load_diagram(path: &str) -> Result<Diagram, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let parsed = if path.ends_with(".json") || text.trim_start().starts_with('{') {
        parse_diagram_json(&text)
    } else {
        parse_diagram(&text)
    };
    parsed.map_err(|e| format!("{path}: {e}"))
}

fn load_tree(path: &str) -> Result<AWTree, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let parsed = if path.ends_with(".json") || text.trim_start().starts_with('{') {
        AWTree::parse_json(&text)
    } else {
        AWTree::parse(&text)
    };
    parsed.map_err(|e| format!("{path}: {e}"))
}

fn diagram_input(path: &str, d: &Diagram) -> Value {
    json!([{ "path": path, "digest": code_hex(&canonical_code(d, false)) }])
}

fn tree_input(path: &str, t: &AWTree) -> Value {
    json!([{ "path": path, "digest": t.canonical_text() }])
}

fn census_value(d: &Diagram) -> Value {
    let census = d.face_census();
    let map: serde_json::Map<String, Value> = census
        .total
        .iter()
        .map(|(k, n)| (k.to_string(), json!(n)))
        .collect();
    Value::Object(map)
}

/// Parses named `name: PD` corpus lines.
pub fn parse_corpus(text: &str) -> Result<Vec<(String, Diagram)>, String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, pd) = line
            .split_once(':')
            .ok_or_else(|| format!("corpus line without name: {line}"))?;
        let d = parse_diagram(pd).map_err(|e| format!("corpus entry {name}: {e}"))?;
        out.push((name.trim().to_string(), d));
    }
    Ok(out)
}

/// Entry point shared by the binary and the test suites.
pub fn run(argv: &[String]) -> Report {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            use clap::error::ErrorKind;
            let exit = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return Report {
                exit,
                text: e.to_string(),
            };
        }
    };
    match cli.command {
        Command::Diagram { cmd } => run_diagram(argv, cmd),
        Command::Tree { cmd } => run_tree(argv, cmd),
        Command::Convert { cmd } => run_convert(argv, cmd),
        Command::Verify { cmd } => run_verify(argv, cmd),
    }
}

fn run_diagram(argv: &[String], cmd: DiagramCmd) -> Report {
    match cmd {
        DiagramCmd::Info { file, common } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let v = d.validate();
            let result = json!({
                "crossings": d.n_crossings(),
                "free_loops": d.free_loops(),
                "connected": v.connected,
                "alternating": v.alternating,
                "components": v.components,
                "faces": census_value(&d),
                "det": redlink::diagram::link_determinant(&d),
            });
            render(argv, diagram_input(&file, &d), result, 0, common.pretty)
        }
        DiagramCmd::Reduce { file, common } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            if !d.is_alternating() {
                return error_report(
                    argv,
                    format!("{file}: diagram is not alternating"),
                    2,
                    common.pretty,
                );
            }
            let (result, exit) = match decide_b_reducible(&d, common.budget) {
                Reducibility::Found(cert) => {
                    debug_assert_eq!(verify_certificate(&d, &cert), Ok(true));
                    (
                        json!({
                            "result": "Found",
                            "certificate": serde_json::to_value(&cert).expect("serializable"),
                        }),
                        0,
                    )
                }
                Reducibility::NotReducible => (json!({ "result": "NotReducible" }), 1),
                Reducibility::BudgetExhausted => (json!({ "result": "BudgetExhausted" }), 3),
            };
            render(argv, diagram_input(&file, &d), result, exit, common.pretty)
        }
        DiagramCmd::Brm {
            file,
            no_reflection,
            common,
        } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let outcome = if no_reflection {
                redlink::minor::contains_pattern(&d, &redlink::diagram::library::borromean(), false)
            } else {
                contains_borromean(&d)
            };
            let (result, exit) = match outcome {
                Ok(Containment::Found(w)) => (
                    json!({
                        "result": "Found",
                        "witness": serde_json::to_value(&w).expect("serializable"),
                    }),
                    0,
                ),
                Ok(Containment::NotContained) => (json!({ "result": "NotContained" }), 1),
                Ok(Containment::PatternLargerThanHost) => (
                    json!({ "result": "NotContained", "reason": "PatternLargerThanHost" }),
                    1,
                ),
                Err(e) => return error_report(argv, e.to_string(), 2, common.pretty),
            };
            render(argv, diagram_input(&file, &d), result, exit, common.pretty)
        }
        DiagramCmd::Census { file, common } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let residual = d.euler_identity_residual().ok();
            let per_component: Vec<Value> = d
                .face_census()
                .per_component
                .iter()
                .map(|m| {
                    let map: serde_json::Map<String, Value> =
                        m.iter().map(|(k, n)| (k.to_string(), json!(n))).collect();
                    Value::Object(map)
                })
                .collect();
            let result = json!({
                "faces": census_value(&d),
                "per_component": per_component,
                "euler_residual": residual,
            });
            render(argv, diagram_input(&file, &d), result, 0, common.pretty)
        }
    }
}

fn run_tree(argv: &[String], cmd: TreeCmd) -> Report {
    match cmd {
        TreeCmd::Info { file, common } => {
            let t = match load_tree(&file) {
                Ok(t) => t,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let result = json!({
                "vertices": t.n_vertices(),
                "edges": t.edges().len(),
                "components": t.components().len(),
                "valid": true,
            });
            render(argv, tree_input(&file, &t), result, 0, common.pretty)
        }
        TreeCmd::Mat { file, common } => {
            let t = match load_tree(&file) {
                Ok(t) => t,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let m = build_matrix(&t, None);
            let det = determinant(&m);
            let perm = permanent_abs(&m).ok();
            let signatures = if m.size <= SIGNATURE_LIMIT {
                let s = expansion_signatures(&m).expect("within limit");
                json!({ "positives": s.positives, "negatives": s.negatives, "zeros": s.zeros })
            } else {
                Value::Null
            };
            let effective = match is_effective(&m) {
                Effectiveness::Effective => json!(true),
                Effectiveness::NotEffective => json!(false),
                Effectiveness::Indeterminate => json!("indeterminate"),
            };
            let result = json!({
                "size": m.size,
                "matrix": m.rows(),
                "det": det,
                "perm": perm,
                "signatures": signatures,
                "effective": effective,
            });
            render(argv, tree_input(&file, &t), result, 0, common.pretty)
        }
        TreeCmd::Strong { file, common } => {
            let t = match load_tree(&file) {
                Ok(t) => t,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let check = h1_and_strong_check(&t);
            let m = build_matrix(&t, None);
            let effective = matches!(is_effective(&m), Effectiveness::Effective);
            let (h1, rhs) = match check.h1 {
                H1::Order(n) => (json!(n), true),
                H1::NotRationalHomologySphere => (Value::Null, false),
            };
            let exit = if check.strong_lspace { 0 } else { 1 };
            let result = json!({
                "h1": h1,
                "rational_homology_sphere": rhs,
                "effective": effective,
                "strong_lspace": check.strong_lspace,
            });
            render(argv, tree_input(&file, &t), result, exit, common.pretty)
        }
        TreeCmd::Ops {
            file,
            op,
            site,
            common,
        } => {
            let t = match load_tree(&file) {
                Ok(t) => t,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let Some(op) = TreeOp::from_number(op) else {
                return error_report(argv, format!("no tree operation {op}"), 2, common.pretty);
            };
            match apply_tree_op(&t, op, site) {
                Ok(r) => {
                    let result = json!({
                        "tree": r.to_text(),
                        "det_before": determinant(&build_matrix(&t, None)),
                        "det_after": determinant(&build_matrix(&r, None)),
                    });
                    render(argv, tree_input(&file, &t), result, 0, common.pretty)
                }
                Err(e) => error_report(argv, e.to_string(), 2, common.pretty),
            }
        }
        TreeCmd::Enumerate {
            max,
            sample,
            seed,
            common,
        } => {
            let trees = match sample {
                Some(k) => sample_trees(max, k, seed),
                None => match enumerate_trees(max) {
                    Ok(t) => t,
                    Err(e) => return error_report(argv, e.to_string(), 2, common.pretty),
                },
            };
            let listing: Vec<String> = trees.iter().map(|t| t.canonical_text()).collect();
            let result = json!({ "count": trees.len(), "trees": listing });
            render(argv, json!([]), result, 0, common.pretty)
        }
    }
}

fn run_convert(argv: &[String], cmd: ConvertCmd) -> Report {
    match cmd {
        ConvertCmd::T2d { file, common } => {
            let t = match load_tree(&file) {
                Ok(t) => t,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let realization = realize_tree(&t);
            let d = match redlink::montesinos::m_induced_diagram(&realization) {
                Ok(d) => d,
                Err(e) => return error_report(argv, e.to_string(), 2, common.pretty),
            };
            let result = json!({
                "pd": d.to_pd(),
                "realization": realization.to_text(),
                "det": redlink::diagram::link_determinant(&d),
                "tree_det": determinant(&build_matrix(&t, None)).unsigned_abs(),
            });
            render(argv, tree_input(&file, &t), result, 0, common.pretty)
        }
        ConvertCmd::D2t { file, cert, common } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(e) => return error_report(argv, e, 2, common.pretty),
            };
            let certificate: Certificate = match cert {
                Some(path) => {
                    let text = match std::fs::read_to_string(&path) {
                        Ok(t) => t,
                        Err(e) => {
                            return error_report(argv, format!("{path}: {e}"), 2, common.pretty)
                        }
                    };
                    match serde_json::from_str(&text) {
                        Ok(c) => c,
                        Err(e) => {
                            return error_report(argv, format!("{path}: {e}"), 2, common.pretty)
                        }
                    }
                }
                None => match decide_b_reducible(&d, common.budget) {
                    Reducibility::Found(c) => c,
                    Reducibility::NotReducible => {
                        return render(
                            argv,
                            diagram_input(&file, &d),
                            json!({ "result": "NotReducible" }),
                            1,
                            common.pretty,
                        )
                    }
                    Reducibility::BudgetExhausted => {
                        return render(
                            argv,
                            diagram_input(&file, &d),
                            json!({ "result": "BudgetExhausted" }),
                            3,
                            common.pretty,
                        )
                    }
                },
            };
            match diagram_to_tree(&d, &certificate) {
                Ok((tree, realization)) => {
                    let result = json!({
                        "tree": tree.to_text(),
                        "realization": realization.to_text(),
                        "det": determinant(&build_matrix(&tree, None)).unsigned_abs(),
                        "certificate_moves": certificate.moves.len(),
                    });
                    render(argv, diagram_input(&file, &d), result, 0, common.pretty)
                }
                Err(e) => error_report(argv, e.to_string(), 2, common.pretty),
            }
        }
    }
}

fn run_verify(argv: &[String], cmd: VerifyCmd) -> Report {
    match cmd {
        VerifyCmd::Roundtrip {
            file,
            max_vertices,
            common,
        } => match (file, max_vertices) {
            (Some(path), None) => {
                let t = match load_tree(&path) {
                    Ok(t) => t,
                    Err(e) => return error_report(argv, e, 2, common.pretty),
                };
                match roundtrip_verify(&t, common.budget) {
                    Ok(r) => {
                        let exit = if r.passed() { 0 } else { 1 };
                        let result = json!({
                            "crossings": r.crossings,
                            "alternating": r.alternating,
                            "b_reducible": r.b_reducible,
                            "tree_det": r.tree_det,
                            "diagram_det": r.diagram_det,
                            "det_match": r.det_match,
                            "reverse_det": r.reverse_det,
                            "reverse_det_match": r.reverse_det_match,
                            "passed": r.passed(),
                        });
                        render(argv, tree_input(&path, &t), result, exit, common.pretty)
                    }
                    Err(e) => error_report(argv, e.to_string(), 2, common.pretty),
                }
            }
            (None, Some(max)) => {
                let trees = match enumerate_trees(max) {
                    Ok(t) => t,
                    Err(e) => return error_report(argv, e.to_string(), 2, common.pretty),
                };
                let mut failed: Vec<String> = Vec::new();
                for t in &trees {
                    match roundtrip_verify(t, common.budget) {
                        Ok(r) if r.passed() => {}
                        _ => failed.push(t.canonical_text()),
                    }
                }
                let exit = if failed.is_empty() { 0 } else { 1 };
                let result = json!({
                    "trees": trees.len(),
                    "passed": trees.len() - failed.len(),
                    "failed": failed,
                });
                render(argv, json!([]), result, exit, common.pretty)
            }
            _ => error_report(
                argv,
                "provide either a tree file or --max-vertices".into(),
                2,
                common.pretty,
            ),
        },
        VerifyCmd::Theorem {
            files,
            corpus,
            trees,
            common,
        } => {
            let mut entries: Vec<(String, Diagram)> = Vec::new();
            if files.is_empty() && trees.is_none() {
                let text = match &corpus {
                    Some(path) => match std::fs::read_to_string(path) {
                        Ok(t) => t,
                        Err(e) => {
                            return error_report(argv, format!("{path}: {e}"), 2, common.pretty)
                        }
                    },
                    None => DEFAULT_CORPUS.to_string(),
                };
                match parse_corpus(&text) {
                    Ok(list) => entries.extend(list),
                    Err(e) => return error_report(argv, e, 2, common.pretty),
                }
            }
            for path in &files {
                match load_diagram(path) {
                    Ok(d) => entries.push((path.clone(), d)),
                    Err(e) => return error_report(argv, e, 2, common.pretty),
                }
            }
            if let Some(max) = trees {
                let list = match enumerate_trees(max) {
                    Ok(t) => t,
                    Err(e) => return error_report(argv, e.to_string(), 2, common.pretty),
                };
                for (i, t) in list.iter().enumerate() {
                    let d = match induced_diagram_of_tree(t) {
                        Ok(d) => d,
                        Err(e) => return error_report(argv, e.to_string(), 2, common.pretty),
                    };
                    let (parts, _) = d.split_components();
                    for (j, part) in parts.into_iter().enumerate() {
                        entries.push((format!("tree[{i}].component[{j}]"), part));
                    }
                }
            }
            let mut rows = Vec::new();
            let mut all = true;
            for (name, d) in &entries {
                if d.n_crossings() == 0 {
                    continue;
                }
                match theorem_crosscheck(d, common.budget) {
                    Ok(r) => {
                        all &= r.passed();
                        rows.push(json!({
                            "name": name,
                            "crossings": r.crossings,
                            "has_reducible_site": r.has_reducible_site,
                            "b_reducible": r.b_reducible,
                            "borromean_contained": r.borromean_contained,
                            "irreducible_implies_contained": r.irreducible_implies_contained,
                            "reducible_implies_free": r.reducible_implies_free,
                            "passed": r.passed(),
                        }));
                    }
                    Err(MinorError::Inconclusive) => {
                        return error_report(
                            argv,
                            "Inconclusive: budget exhausted".into(),
                            3,
                            common.pretty,
                        )
                    }
                    Err(e) => return error_report(argv, e.to_string(), 2, common.pretty),
                }
            }
            let exit = if all { 0 } else { 1 };
            let result = json!({ "entries": rows, "all_passed": all });
            render(argv, json!([]), result, exit, common.pretty)
        }
    }
}
