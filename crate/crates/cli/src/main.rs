use clap::{Args, Parser, Subcommand, ValueEnum};
use contact_core::classify::{
    enumerate_tight_decorations, lens_count_formula, solid_torus_count_formula,
};
use contact_core::dividing::{disk_bypass_move, DiskDiagram, Side};
use contact_core::farey::{bypass_slope, cf_expand, is_farey_edge, peel_path, ContinuedFraction, Slope};
use contact_core::legendrian::{bennequin_check, unknot_from_invariants, FrontCounts, UnknotForm};
use contact_core::traversal::{build_state_graph, tight_count_traversal, SolidTorusProblem};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "contact",
    version,
    about = "Slope calculus, Legendrian invariants, and tight contact structure counts"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Farey tessellation predicates and slope calculus
    Farey(FareyCmd),
    /// Negative continued fractions
    Cf(CfCmd),
    /// Lens space invariants
    Lens(LensCmd),
    /// Solid torus invariants and the state graph
    Solidtorus(SolidTorusCmd),
    /// Front projection invariants
    Front(FrontCmd),
    /// Legendrian unknots and their classification
    Unknot(UnknotCmd),
    /// Check the Bennequin inequality tb ± r <= -chi
    Bennequin {
        #[arg(allow_hyphen_values = true)]
        tb: i64,
        #[arg(allow_hyphen_values = true)]
        r: i64,
        #[arg(allow_hyphen_values = true)]
        chi: i64,
    },
    /// Non-crossing chord diagrams of the disk
    Chords(ChordsCmd),
    /// Compare traversal and formula counts for all coprime pairs up to p_max
    Verify {
        #[arg(value_parser = clap::value_parser!(u32).range(2..))]
        p_max: u32,
    },
}

#[derive(Args)]
struct FareyCmd {
    #[command(subcommand)]
    command: FareySub,
}

#[derive(Subcommand)]
enum FareySub {
    /// Whether two slopes span an edge of the Farey tessellation
    Edge {
        #[arg(allow_hyphen_values = true)]
        a: Slope,
        #[arg(allow_hyphen_values = true)]
        b: Slope,
    },
    /// Slope produced by a bypass attachment
    Bypass {
        #[arg(long, allow_hyphen_values = true)]
        slope: Slope,
        #[arg(long, allow_hyphen_values = true)]
        attach: Slope,
    },
    /// Peeling path from -p/q down to -1
    Path { p: i64, q: i64 },
}

#[derive(Args)]
struct CfCmd {
    #[command(subcommand)]
    command: CfSub,
}

#[derive(Subcommand)]
enum CfSub {
    /// Expand -p/q with all coefficients <= -2
    Expand { p: i64, q: i64 },
    /// Evaluate a coefficient list back to a slope
    Eval {
        #[arg(allow_hyphen_values = true, num_args = 1..)]
        coefficients: Vec<i64>,
    },
}

#[derive(Args)]
struct LensCmd {
    #[command(subcommand)]
    command: LensSub,
}

#[derive(Subcommand)]
enum LensSub {
    /// Number of tight contact structures on L(p, q)
    Count { p: i64, q: i64 },
}

#[derive(Args)]
struct SolidTorusCmd {
    #[command(subcommand)]
    command: SolidTorusSub,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Formula,
    Traversal,
}

#[derive(Subcommand)]
enum SolidTorusSub {
    /// Number of tight contact structures with boundary slope -p/q
    Count {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t = CountMethod::Formula)]
        method: CountMethod,
    },
    /// The bypass transition graph over disk configurations
    Graph { p: i64, q: i64 },
    /// Per-block positive slice counts, one tight structure each
    Decorations { p: i64, q: i64 },
}

#[derive(Args)]
struct FrontCmd {
    #[command(subcommand)]
    command: FrontSub,
}

#[derive(Subcommand)]
enum FrontSub {
    /// Thurston-Bennequin invariant from front counts
    Tb {
        up_cusps: u32,
        down_cusps: u32,
        pos_crossings: u32,
        neg_crossings: u32,
    },
    /// Rotation number from front counts
    R {
        up_cusps: u32,
        down_cusps: u32,
        pos_crossings: u32,
        neg_crossings: u32,
    },
}

#[derive(Args)]
struct UnknotCmd {
    #[command(subcommand)]
    command: UnknotSub,
}

#[derive(Subcommand)]
enum UnknotSub {
    /// Invariants of the stabilization S_+^k_plus S_-^k_minus of the
    /// maximal unknot
    Classify { k_plus: u32, k_minus: u32 },
    /// The unique stabilization form with the given invariants, if any
    FromInvariants {
        #[arg(allow_hyphen_values = true)]
        tb: i64,
        #[arg(allow_hyphen_values = true)]
        r: i64,
    },
}

#[derive(Args)]
struct ChordsCmd {
    #[command(subcommand)]
    command: ChordsSub,
}

#[derive(Subcommand)]
enum ChordsSub {
    /// All non-crossing diagrams on 2n points, canonically ordered
    Enumerate { n: usize },
    /// Apply a bypass move to an encoded diagram
    Bypass {
        encoding: String,
        triple: usize,
        side: Side,
    },
}

/// A rendered command result: plain text plus a JSON payload.
struct Rendered {
    text: String,
    payload: Value,
    /// DOT output when the subcommand supports it.
    dot: Option<String>,
}

impl Rendered {
    fn plain(text: impl Into<String>, payload: Value) -> Rendered {
        Rendered {
            text: text.into(),
            payload,
            dot: None,
        }
    }
}

fn slope_str(s: Slope) -> String {
    s.to_string()
}

fn run(command: Command) -> contact_core::Result<Rendered> {
    match command {
        Command::Farey(cmd) => match cmd.command {
            FareySub::Edge { a, b } => {
                let edge = is_farey_edge(a, b);
                Ok(Rendered::plain(
                    edge.to_string(),
                    json!({"a": slope_str(a), "b": slope_str(b), "edge": edge}),
                ))
            }
            FareySub::Bypass { slope, attach } => {
                let out = bypass_slope(slope, attach)?;
                Ok(Rendered::plain(
                    slope_str(out),
                    json!({
                        "slope": slope_str(slope),
                        "attach": slope_str(attach),
                        "result": slope_str(out),
                    }),
                ))
            }
            FareySub::Path { p, q } => {
                let path = peel_path(p, q)?;
                let text = path
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                let json_path: Vec<String> = path.iter().map(|s| s.to_string()).collect();
                Ok(Rendered::plain(text, json!({"p": p, "q": q, "path": json_path})))
            }
        },
        Command::Cf(cmd) => match cmd.command {
            CfSub::Expand { p, q } => {
                let cf = cf_expand(p, q)?;
                let text = cf
                    .coefficients()
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                Ok(Rendered::plain(
                    text,
                    json!({"p": p, "q": q, "coefficients": cf.coefficients()}),
                ))
            }
            CfSub::Eval { coefficients } => {
                let cf = ContinuedFraction::new(coefficients.clone())?;
                let slope = cf.to_slope();
                Ok(Rendered::plain(
                    slope_str(slope),
                    json!({"coefficients": coefficients, "slope": slope_str(slope)}),
                ))
            }
        },
        Command::Lens(cmd) => match cmd.command {
            LensSub::Count { p, q } => {
                let count = lens_count_formula(p, q)?;
                Ok(Rendered::plain(
                    count.to_string(),
                    json!({"p": p, "q": q, "count": count}),
                ))
            }
        },
        Command::Solidtorus(cmd) => match cmd.command {
            SolidTorusSub::Count { p, q, method } => {
                let (count, method_name) = match method {
                    CountMethod::Formula => (solid_torus_count_formula(p, q)?, "formula"),
                    CountMethod::Traversal => {
                        let prob = SolidTorusProblem::new(p, q)?;
                        (tight_count_traversal(&prob), "traversal")
                    }
                };
                Ok(Rendered::plain(
                    count.to_string(),
                    json!({"p": p, "q": q, "method": method_name, "count": count}),
                ))
            }
            SolidTorusSub::Graph { p, q } => {
                let prob = SolidTorusProblem::new(p, q)?;
                let graph = build_state_graph(&prob);
                let payload: Value =
                    serde_json::from_str(&graph.to_json()).expect("graph serializes");
                Ok(Rendered {
                    text: graph.to_json(),
                    payload,
                    dot: Some(graph.to_dot()),
                })
            }
            SolidTorusSub::Decorations { p, q } => {
                let decorations = enumerate_tight_decorations(p, q)?;
                let lines: Vec<String> = decorations
                    .iter()
                    .map(|d| {
                        d.plus_counts()
                            .iter()
                            .map(|m| m.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                let counts: Vec<&[usize]> =
                    decorations.iter().map(|d| d.plus_counts()).collect();
                Ok(Rendered::plain(
                    lines.join("\n"),
                    json!({"p": p, "q": q, "decorations": counts}),
                ))
            }
        },
        Command::Front(cmd) => match cmd.command {
            FrontSub::Tb {
                up_cusps,
                down_cusps,
                pos_crossings,
                neg_crossings,
            } => {
                let front = FrontCounts::new(up_cusps, down_cusps, pos_crossings, neg_crossings)?;
                Ok(Rendered::plain(
                    front.tb().to_string(),
                    json!({"tb": front.tb()}),
                ))
            }
            FrontSub::R {
                up_cusps,
                down_cusps,
                pos_crossings,
                neg_crossings,
            } => {
                let front = FrontCounts::new(up_cusps, down_cusps, pos_crossings, neg_crossings)?;
                Ok(Rendered::plain(
                    front.rotation().to_string(),
                    json!({"r": front.rotation()}),
                ))
            }
        },
        Command::Unknot(cmd) => match cmd.command {
            UnknotSub::Classify { k_plus, k_minus } => {
                let u = UnknotForm::new(k_plus, k_minus);
                Ok(Rendered::plain(
                    format!("tb={} r={}", u.tb(), u.rotation()),
                    json!({
                        "k_plus": k_plus,
                        "k_minus": k_minus,
                        "tb": u.tb(),
                        "r": u.rotation(),
                    }),
                ))
            }
            UnknotSub::FromInvariants { tb, r } => match unknot_from_invariants(tb, r) {
                Some(u) => Ok(Rendered::plain(
                    format!("k_plus={} k_minus={}", u.k_plus(), u.k_minus()),
                    json!({
                        "tb": tb,
                        "r": r,
                        "form": {"k_plus": u.k_plus(), "k_minus": u.k_minus()},
                    }),
                )),
                None => Ok(Rendered::plain(
                    "none",
                    json!({"tb": tb, "r": r, "form": Value::Null}),
                )),
            },
        },
        Command::Bennequin { tb, r, chi } => {
            let ok = bennequin_check(tb, r, chi)?;
            Ok(Rendered::plain(
                ok.to_string(),
                json!({"tb": tb, "r": r, "chi": chi, "satisfied": ok}),
            ))
        }
        Command::Chords(cmd) => match cmd.command {
            ChordsSub::Enumerate { n } => {
                if n == 0 {
                    return Err(contact_core::Error::NotPositive(0));
                }
                let diagrams = DiskDiagram::enumerate(n);
                let encodings: Vec<String> =
                    diagrams.iter().map(|d| d.encoding()).collect();
                Ok(Rendered::plain(
                    encodings.join("\n"),
                    json!({"n": n, "count": diagrams.len(), "diagrams": encodings}),
                ))
            }
            ChordsSub::Bypass {
                encoding,
                triple,
                side,
            } => {
                let d = DiskDiagram::from_encoding(&encoding)?;
                let moved = disk_bypass_move(&d, triple, side)?;
                Ok(Rendered::plain(
                    moved.encoding(),
                    json!({
                        "input": d.encoding(),
                        "triple": triple,
                        "side": side.to_string(),
                        "result": moved.encoding(),
                    }),
                ))
            }
        },
        Command::Verify { p_max } => verify(p_max),
    }
}

fn verify(p_max: u32) -> contact_core::Result<Rendered> {
    let pairs: Vec<(i64, i64)> = (2..=i64::from(p_max))
        .flat_map(|p| (1..p).map(move |q| (p, q)))
        .filter(|&(p, q)| contact_core::farey::gcd(p, q) == 1)
        .collect();
    let results: Vec<(i64, i64, u64, u64)> = pairs
        .par_iter()
        .map(|&(p, q)| {
            let prob = SolidTorusProblem::new(p, q).expect("coprime pair");
            let traversal = tight_count_traversal(&prob);
            let formula = solid_torus_count_formula(p, q).expect("coprime pair");
            log::debug!("verified p={p} q={q}: traversal={traversal} formula={formula}");
            (p, q, traversal, formula)
        })
        .collect();

    let mut lines = Vec::new();
    let mut entries = Vec::new();
    let mut all_pass = true;
    for &(p, q, traversal, formula) in &results {
        let pass = traversal == formula;
        all_pass &= pass;
        lines.push(format!(
            "p={p} q={q} traversal={traversal} formula={formula} {}",
            if pass { "PASS" } else { "FAIL" }
        ));
        entries.push(json!({
            "p": p,
            "q": q,
            "traversal": traversal,
            "formula": formula,
            "pass": pass,
        }));
    }
    lines.push(format!(
        "{} pairs, {}",
        results.len(),
        if all_pass { "all PASS" } else { "FAILURES" }
    ));
    Ok(Rendered::plain(
        lines.join("\n"),
        json!({"p_max": p_max, "pairs": entries, "all_pass": all_pass}),
    ))
}

fn emit(cli_format: Format, output: Option<PathBuf>, rendered: &Rendered) -> std::io::Result<bool> {
    let body = match cli_format {
        Format::Text => {
            let mut t = rendered.text.clone();
            t.push('\n');
            t
        }
        Format::Json => {
            let envelope = json!({
                "schema_version": SCHEMA_VERSION,
                "status": "ok",
                "payload": rendered.payload,
                "message": "",
            });
            let mut t = serde_json::to_string_pretty(&envelope).expect("serializable");
            t.push('\n');
            t
        }
        Format::Dot => match &rendered.dot {
            Some(dot) => dot.clone(),
            None => return Ok(false),
        },
    };
    match output {
        Some(path) => std::fs::write(path, body)?,
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();

    // `verify` reports failure through its exit code
    let verify_gate = |payload: &Value| {
        payload
            .get("all_pass")
            .is_none_or(|v| v.as_bool().unwrap_or(false))
    };

    match run(cli.command) {
        Ok(rendered) => {
            match emit(cli.format, cli.output, &rendered) {
                Ok(true) => {}
                Ok(false) => {
                    eprintln!("error: this subcommand has no dot output");
                    return ExitCode::from(2);
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(1);
                }
            }
            if verify_gate(&rendered.payload) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            if cli.format == Format::Json {
                let envelope = json!({
                    "schema_version": SCHEMA_VERSION,
                    "status": "error",
                    "payload": Value::Null,
                    "message": err.to_string(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope).expect("serializable")
                );
            }
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
