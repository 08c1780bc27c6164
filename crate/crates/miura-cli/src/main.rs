//! `miura` — forcing sets for Miura-ori folding patterns.
//!
//! Exit codes: 0 for success and positive answers, 1 for verified
//! negative answers (not forcing / infeasible / not controlling, with a
//! JSON certificate on stdout), 2 for input or usage errors.

mod instance;
mod render;

use clap::{Args, Parser, Subcommand};
use miura::complete::Completion;
use miura::coloring::{coloring_to_mv, diagonal_coloring, mv_to_coloring};
use miura::construct::{domino_forcing_standard, greedy_forcing};
use miura::control::controlling_check;
use miura::digraph::is_forcing;
use miura::fas::min_forcing_set;
use miura::oracle::enumerate_colorings;
use miura::{standard_assignment, GridSize, PartialMVAssignment};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "miura", version, about = "Forcing sets for Miura-ori folding patterns")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct SizeArgs {
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
}

#[derive(Args)]
struct IoArgs {
    /// Instance JSON file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance (standard, diagonal-stripe, or seeded random).
    Gen {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, conflicts_with_all = ["diagonal", "random"])]
        standard: bool,
        #[arg(long, conflicts_with = "random")]
        diagonal: bool,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact minimum forcing set of the instance's pattern.
    MinForcing {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Check whether a crease set forces the instance's pattern.
    Verify {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        forcing_set: PathBuf,
    },
    /// Greedy forcing set of ceil(mn/2) creases.
    Greedy {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Domino-tiling forcing set for the standard pattern.
    Domino {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extend a partial assignment to a locally flat-foldable one.
    Complete {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Check whether a crease set is controlling (forces every pattern).
    Controlling {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        forcing_set: PathBuf,
    },
    /// List every locally flat-foldable pattern of a grid, one JSON
    /// coloring per line.
    Enumerate {
        #[command(flatten)]
        size: SizeArgs,
        /// Override the cell-count guard on this exponential listing.
        #[arg(long)]
        allow_large: bool,
    },
    /// Draw the instance as ASCII, SVG, or canonical JSON.
    Render {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value = "ascii", value_parser = ["ascii", "svg", "json"])]
        format: String,
        /// Acute cell angle in degrees (SVG only).
        #[arg(long, default_value_t = 80.0)]
        alpha: f64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_instance(io: &IoArgs) -> Result<instance::InstanceDocument, String> {
    instance::parse_instance(&read_input(&io.input)?)
}

fn load_forcing_set(path: &PathBuf, size: GridSize) -> Result<miura::ForcingSet, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    instance::parse_forcing_set(&text, size)
}

fn json_line(value: &serde_json::Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Gen { size, standard, diagonal, random, seed, output } => {
            let size = GridSize::new(size.rows.max(1), size.cols.max(1));
            let k = if diagonal {
                diagonal_coloring(size)
            } else if random {
                miura::sample_coloring(size, seed)
            } else if standard {
                mv_to_coloring(&standard_assignment(size)).map_err(|e| e.to_string())?
            } else {
                return Err("choose one of --standard, --diagonal, --random".into());
            };
            let a = coloring_to_mv(&k).map_err(|e| e.to_string())?;
            let doc = instance::from_assignment(&a, Some(&k));
            write_output(&output, &instance::serialize_instance(&doc))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::MinForcing { io } => {
            let doc = load_instance(&io)?;
            let k = instance::coloring_of(&doc)?;
            let f = min_forcing_set(&k).map_err(|e| e.to_string())?;
            write_output(&io.output, &json_line(&instance::forcing_set_json(&f)))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Greedy { io } => {
            let doc = load_instance(&io)?;
            let k = instance::coloring_of(&doc)?;
            let f = greedy_forcing(&k).map_err(|e| e.to_string())?;
            write_output(&io.output, &json_line(&instance::forcing_set_json(&f)))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Domino { size, output } => {
            let size = GridSize::new(size.rows, size.cols);
            if size.rows == 0 || size.cols == 0 {
                return Err("rows and cols must be at least 1".into());
            }
            let f = domino_forcing_standard(size);
            write_output(&output, &json_line(&instance::forcing_set_json(&f)))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { io, forcing_set } => {
            let doc = load_instance(&io)?;
            let k = instance::coloring_of(&doc)?;
            let f = load_forcing_set(&forcing_set, k.size())?;
            let check = is_forcing(&k, &f).map_err(|e| e.to_string())?;
            if check.forcing {
                write_output(&io.output, &json_line(&serde_json::json!({ "forcing": true })))?;
                Ok(ExitCode::SUCCESS)
            } else {
                let cycle: Vec<_> =
                    check.witness.unwrap().arcs.iter().map(|&id| instance::crease_ref(id)).collect();
                let cert = serde_json::json!({ "forcing": false, "witness": { "cycle": cycle } });
                write_output(&io.output, &json_line(&cert))?;
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Complete { io } => {
            let doc = load_instance(&io)?;
            let s = instance::to_partial(&doc);
            match miura::complete_partial(&s) {
                Completion::Foldable(a) => {
                    let k = mv_to_coloring(&a).map_err(|e| e.to_string())?;
                    let out = instance::from_assignment(&a, Some(&k));
                    write_output(&io.output, &instance::serialize_instance(&out))?;
                    Ok(ExitCode::SUCCESS)
                }
                Completion::Infeasible { overloaded } => {
                    let node = overloaded.map(|n| serde_json::json!({ "r": n.r, "c": n.c }));
                    let cert = serde_json::json!({
                        "feasible": false,
                        "violating_node": node,
                    });
                    write_output(&io.output, &json_line(&cert))?;
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Controlling { size, forcing_set } => {
            let size = GridSize::new(size.rows, size.cols);
            if size.rows == 0 || size.cols == 0 {
                return Err("rows and cols must be at least 1".into());
            }
            let f = load_forcing_set(&forcing_set, size)?;
            let check = controlling_check(size, &f).map_err(|e| e.to_string())?;
            if check.controlling {
                println!("{}", serde_json::json!({ "controlling": true }));
                Ok(ExitCode::SUCCESS)
            } else {
                let component: Vec<_> =
                    check.component.unwrap().iter().map(|&(r, c)| vec![r, c]).collect();
                println!("{}", serde_json::json!({ "controlling": false, "component": component }));
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Enumerate { size, allow_large } => {
            let size = GridSize::new(size.rows, size.cols);
            if size.rows == 0 || size.cols == 0 {
                return Err("rows and cols must be at least 1".into());
            }
            let iter = enumerate_colorings(size, allow_large).map_err(|e| e.to_string())?;
            for k in iter {
                let rows: Vec<Vec<u8>> = (0..size.rows)
                    .map(|r| (0..size.cols).map(|c| k.color(r, c)).collect())
                    .collect();
                println!("{}", serde_json::to_string(&rows).expect("serializable"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Render { io, format, alpha } => {
            let doc = load_instance(&io)?;
            let s: PartialMVAssignment = instance::to_partial(&doc);
            let text = match format.as_str() {
                "ascii" => render::render_ascii(&s),
                "svg" => {
                    let cfg = render::RenderConfig { alpha_deg: alpha, ..Default::default() };
                    cfg.validate()?;
                    render::render_svg(&s, &cfg)
                }
                "json" => instance::serialize_instance(&doc),
                _ => unreachable!("clap validates the format"),
            };
            write_output(&io.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
