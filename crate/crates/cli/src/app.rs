//! Argument parsing and subcommand dispatch.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubkit::bpd::{droop_closure, enumerate_bpds_bounded, reduced_droop_closure, rothe_bpd, Bpd};
use schubkit::bubbling::{build_a, enumerate_sbd_bounded, AVariant, DeadSquareDiagram};
use schubkit::diagram::rothe;
use schubkit::orthodontia::{eval_orthodontia, eval_orthodontia_flat, orthodontic_sequence};
use schubkit::weyl::{chi_support, dual_character_bounded, schubitope_lattice_points};
use schubkit::{Cell, Diagram, Permutation};
use serde_json::json;

use crate::compute::{compute, Kind};
use crate::config::{Config, OutputFormat};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::report::{exit_code, EXIT_PASS};
use crate::search::{search_a, DEFAULT_SEARCH_BOUND};
use crate::suites::{run_suite, Suite, SuiteParams};

#[derive(Debug, Parser)]
#[command(name = "schubkit", version, about = "Grothendieck, Lascoux and dual character computations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Permutation size or composition length for sweeps.
    #[arg(long, global = true, env = "SCHUBKIT_N")]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum, env = "SCHUBKIT_FORMAT", default_value = "text")]
    pub format: OutputFormat,
    #[arg(long, global = true, env = "SCHUBKIT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, global = true, env = "SCHUBKIT_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Seed for randomized suites.
    #[arg(long, global = true, env = "SCHUBKIT_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, env = "SCHUBKIT_MAX_N", default_value_t = Config::default().max_n)]
    pub max_n: usize,
    #[arg(long, global = true, env = "SCHUBKIT_SBD_STATE_BOUND", default_value_t = Config::default().sbd_state_bound)]
    pub sbd_state_bound: usize,
    #[arg(long, global = true, env = "SCHUBKIT_WEYL_SIZE_BOUND", default_value_t = Config::default().weyl_size_bound)]
    pub weyl_size_bound: usize,
}

impl GlobalArgs {
    pub fn config(&self) -> Config {
        Config {
            max_n: self.max_n,
            sbd_state_bound: self.sbd_state_bound,
            weyl_size_bound: self.weyl_size_bound,
            cache_dir: self.cache_dir.clone(),
            output_format: self.format,
            thread_count: self.threads,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a polynomial.
    Compute {
        #[arg(value_enum)]
        kind: Kind,
        /// Permutation (`132`, `1,3,2`), composition (`2,1`) or diagram for `chi`.
        input: String,
    },
    /// Permutation properties and chain decomposition.
    Classify { permutation: String },
    /// Show a diagram or one of its derived diagrams.
    Diagram {
        /// `rothe:<perm>`, `skyline:<comp>`, a bare permutation, or `RxC:r,c;r,c`.
        spec: String,
        #[arg(long, value_enum, default_value = "plain")]
        view: View,
    },
    /// Orthodontic sequence and the polynomial it evaluates to.
    Ortho {
        spec: String,
        /// Gather every omega factor innermost.
        #[arg(long)]
        flat: bool,
    },
    /// Streamlined bubbling diagrams of a Rothe diagram.
    Sbd {
        permutation: String,
        #[arg(long, value_enum, default_value = "left")]
        a: AChoice,
        /// Explicit distinguished cells `r,c;r,c`, overriding `--a`.
        #[arg(long)]
        cells: Option<String>,
        /// Print every diagram.
        #[arg(long)]
        list: bool,
    },
    /// Bumpless pipe dreams of a permutation.
    Bpd {
        permutation: String,
        #[arg(long, value_enum, default_value = "enumerate")]
        method: BpdMethod,
        #[arg(long)]
        list: bool,
    },
    /// Dual character of a diagram with its support and schubitope points.
    Chi { spec: String },
    /// Run verification suites.
    Verify {
        #[arg(value_enum, required = true)]
        suites: Vec<Suite>,
        /// Bound on the size of compositions.
        #[arg(long, default_value_t = 6)]
        max_total: usize,
        /// Sample count for randomized suites; suite default if absent.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Search for a distinguished set whose bubbling weights give the support.
    SearchA {
        permutation: String,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// ASCII pictures.
    Render {
        #[command(subcommand)]
        object: RenderObject,
    },
}

#[derive(Debug, Subcommand)]
pub enum RenderObject {
    Diagram { spec: String },
    Bpd {
        #[arg(value_enum)]
        which: BpdWhich,
        permutation: String,
    },
    /// The starting bubbling state of a Rothe diagram.
    SbdState {
        permutation: String,
        #[arg(long, value_enum, default_value = "left")]
        a: AChoice,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BpdWhich {
    Rothe,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum View {
    Plain,
    Snow,
    DarkCloud,
    UpwardClosure,
    Stripped,
    /// Filled above the left distinguished set of a Rothe diagram.
    Top,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AChoice {
    Left,
    Right,
    New,
    RightPrime,
    Southmost,
    Chain,
    Empty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BpdMethod {
    Enumerate,
    Droop,
    ReducedDroop,
}

fn distinguished(w: &Permutation, a: AChoice) -> CliResult<BTreeSet<Cell>> {
    let variant = match a {
        AChoice::Empty => return Ok(BTreeSet::new()),
        AChoice::Chain => {
            let chain = w
                .chain_decomposition()
                .ok_or_else(|| CliError::Usage(format!("{w} is not a dominant fireworks-vexillary chain")))?;
            return Ok(schubkit::bubbling::build_a_chain(w, &chain)?);
        }
        AChoice::Left => AVariant::Left,
        AChoice::Right => AVariant::Right,
        AChoice::New => AVariant::New,
        AChoice::RightPrime => AVariant::RightPrime,
        AChoice::Southmost => AVariant::Southmost,
    };
    Ok(build_a(w, variant)?)
}

fn diagram_spec(s: &str) -> CliResult<Diagram> {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
        return Ok(rothe(&input::permutation(s)?));
    }
    input::diagram(s)
}

struct Out {
    json: serde_json::Value,
    text: String,
}

fn emit(cfg: &Config, out: Out) -> CliResult<()> {
    match cfg.output_format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&out.json)?),
        OutputFormat::Text => print!("{}", ensure_newline(out.text)),
    }
    Ok(())
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn cells_json(d: &Diagram) -> serde_json::Value {
    json!({"n_rows": d.n_rows, "n_cols": d.n_cols, "cells": d.cells()})
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> CliResult<i32> {
    let cfg = cli.global.config();
    cfg.validate()?;
    match cli.command {
        Command::Compute { kind, input } => {
            let c = compute(&cfg, kind, &input)?;
            emit(&cfg, Out { json: serde_json::to_value(&c)?, text: c.to_text() })?;
        }
        Command::Classify { permutation } => {
            let w = input::permutation(&permutation)?;
            let chain = w.chain_decomposition();
            let json = json!({
                "permutation": w.to_string(),
                "length": w.length(),
                "lehmer_code": w.lehmer_code().entries(),
                "dominant": w.is_dominant(),
                "vexillary": w.is_vexillary(),
                "fireworks": w.is_fireworks(),
                "almost_vexillary": w.is_almost_vexillary()?,
                "chain": chain,
            });
            let mut text = String::new();
            for key in ["permutation", "length", "lehmer_code", "dominant", "vexillary", "fireworks", "almost_vexillary", "chain"] {
                text.push_str(&format!("{key}: {}\n", json[key]));
            }
            emit(&cfg, Out { json, text })?;
        }
        Command::Diagram { spec, view } => {
            let d = diagram_spec(&spec)?;
            let shown = match view {
                View::Plain => d.clone(),
                View::Snow => d.snow(),
                View::DarkCloud => d.dark_cloud(),
                View::UpwardClosure => d.upward_closure(),
                View::Stripped => d.strip_packed(),
                View::Top => {
                    let w = input::permutation(spec.trim_start_matches("rothe:"))?;
                    d.d_top(&build_a(&w, AVariant::Left)?)?
                }
            };
            let skyline = shown.column_perm_of_skyline();
            let json = json!({
                "diagram": cells_json(&shown),
                "weight": shown.weight(),
                "percent_avoiding": shown.is_percent_avoiding(),
                "packed_columns": shown.packed_columns(),
                "skyline_witness": skyline.as_ref().map(|a| a.entries().to_vec()),
            });
            let mut text = shown.render();
            text.push_str(&format!("weight: {:?}\n", shown.weight()));
            text.push_str(&format!("%-avoiding: {}\n", shown.is_percent_avoiding()));
            if let Some(a) = skyline {
                text.push_str(&format!("column permutation of skyline {a}\n"));
            }
            emit(&cfg, Out { json, text })?;
        }
        Command::Ortho { spec, flat } => {
            let d = diagram_spec(&spec)?;
            let seq = orthodontic_sequence(&d)?;
            let poly = if flat { eval_orthodontia_flat(&d)? } else { eval_orthodontia(&d)? };
            let text = format!(
                "i: {:?}\nk: {:?}\nm: {:?}\npolynomial: {}\n",
                seq.i_seq, seq.k_vec, seq.m_seq, poly
            );
            emit(&cfg, Out { json: json!({"sequence": seq, "polynomial": poly}), text })?;
        }
        Command::Sbd { permutation, a, cells, list } => {
            let w = input::permutation(&permutation)?;
            cfg.check_n(w.size())?;
            let a = match cells {
                Some(c) => c.split(';').filter(|t| !t.trim().is_empty()).map(input::cell).collect::<CliResult<_>>()?,
                None => distinguished(&w, a)?,
            };
            let sbds = enumerate_sbd_bounded(&rothe(&w), &a, cfg.sbd_state_bound)?;
            let weights: BTreeSet<Vec<usize>> = sbds.iter().map(|s| s.weight()).collect();
            let mut text = format!("A = {a:?}\n{} diagrams, {} weights\n", sbds.len(), weights.len());
            for wt in &weights {
                text.push_str(&format!("{wt:?}\n"));
            }
            if list {
                for s in &sbds {
                    text.push('\n');
                    text.push_str(&s.render());
                }
            }
            let mut json = json!({"a": a, "count": sbds.len(), "weights": weights});
            if list {
                json["diagrams"] = serde_json::to_value(&sbds)?;
            }
            emit(&cfg, Out { json, text })?;
        }
        Command::Bpd { permutation, method, list } => {
            let w = input::permutation(&permutation)?;
            cfg.check_n(w.size())?;
            let bpds: BTreeSet<Bpd> = match method {
                BpdMethod::Enumerate => enumerate_bpds_bounded(&w, cfg.max_n)?,
                BpdMethod::Droop => droop_closure(&w)?,
                BpdMethod::ReducedDroop => reduced_droop_closure(&w)?,
            };
            let reduced = bpds.iter().filter(|b| b.is_reduced()).count();
            let mut text = format!("{} pipe dreams, {} reduced\n", bpds.len(), reduced);
            if list {
                for b in &bpds {
                    text.push('\n');
                    text.push_str(&b.render());
                }
            }
            let mut json = json!({"count": bpds.len(), "reduced": reduced});
            if list {
                json["bpds"] = serde_json::to_value(&bpds)?;
            }
            emit(&cfg, Out { json, text })?;
        }
        Command::Chi { spec } => {
            let d = diagram_spec(&spec)?;
            let chi = dual_character_bounded(&d, cfg.weyl_size_bound)?;
            let support = chi_support(&d);
            let hull = schubitope_lattice_points(&d)?;
            let saturated = support == hull;
            let text = format!("{chi}\nsupport: {} points\nschubitope points: {}\nsaturated: {saturated}\n", support.len(), hull.len());
            let json = json!({"character": chi, "support": support, "schubitope_points": hull, "saturated": saturated});
            emit(&cfg, Out { json, text })?;
        }
        Command::Verify { suites, max_total, samples } => {
            let mut results = Vec::new();
            for suite in suites {
                let mut p = SuiteParams::defaults(suite);
                if let Some(n) = cli.global.n {
                    p.n = n;
                }
                p.max_total = max_total;
                if let Some(s) = samples {
                    p.samples = s;
                }
                log::info!("running {} with n = {}", suite.id(), p.n);
                let r = run_suite(&cfg, suite, &p);
                match &r {
                    Ok(report) => emit(&cfg, Out { json: serde_json::to_value(report)?, text: report.to_text() })?,
                    Err(e) => eprintln!("error: {} failed to run: {e}", suite.id()),
                }
                results.push(r);
            }
            return Ok(exit_code(&results));
        }
        Command::SearchA { permutation, bound } => {
            let w = input::permutation(&permutation)?;
            cfg.check_n(w.size())?;
            let out = search_a(&w, cfg.sbd_state_bound, bound)?;
            let text = match &out.witness {
                Some(a) => format!("witness {a:?} ({} of {} candidates tried)\n", out.candidates_tried, out.candidates),
                None => format!("no witness among {} candidates\n", out.candidates),
            };
            emit(&cfg, Out { json: serde_json::to_value(&out)?, text })?;
        }
        Command::Render { object } => {
            let text = match object {
                RenderObject::Diagram { spec } => diagram_spec(&spec)?.render(),
                RenderObject::Bpd { which: BpdWhich::Rothe, permutation } => rothe_bpd(&input::permutation(&permutation)?).render(),
                RenderObject::Bpd { which: BpdWhich::All, permutation } => {
                    let w = input::permutation(&permutation)?;
                    enumerate_bpds_bounded(&w, cfg.max_n)?.iter().map(|b| b.render()).collect::<Vec<_>>().join("\n")
                }
                RenderObject::SbdState { permutation, a } => {
                    let w = input::permutation(&permutation)?;
                    DeadSquareDiagram::new(&rothe(&w), BTreeSet::new(), distinguished(&w, a)?).render()
                }
            };
            emit(&cfg, Out { json: json!({"render": text}), text })?;
        }
    }
    Ok(EXIT_PASS)
}
