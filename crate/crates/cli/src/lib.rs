//! Command-line front end: argument grammar, dispatch and output.

pub mod commands;
pub mod error;
pub mod report;
pub mod scene;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyguard::oracle::{DEFAULT_SAMPLES, DEFAULT_SEED};

use crate::error::CliError;

/// Guarding, conflict-free colouring and visibility tools for polygons.
#[derive(Debug, Parser)]
#[command(name = "polyguard", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Seed of the sampled verifiers.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Sample budget of the sampled verifiers.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Distance threshold of unit disk visibility graphs (decimal string).
    #[arg(long, global = true, default_value = "1")]
    pub threshold: String,
    /// Write the result (or SVG, for `render`) here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also render the scene and result as SVG to this file.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex visibility graph of a polygon (holes allowed).
    Visgraph { scene: PathBuf },
    /// Vertex guards.
    Guard {
        #[command(subcommand)]
        target: GuardTarget,
    },
    /// Conflict-free chromatic guarding.
    Cfcolor {
        kind: CfKind,
        scene: PathBuf,
        /// Check the colouring with the conflict-free verifier.
        #[arg(long)]
        verify: bool,
        /// Force the sampled verifier even for small polygons.
        #[arg(long)]
        sampled: bool,
    },
    /// Proper colourings of visibility graphs and the ruler sequence.
    Color {
        #[command(subcommand)]
        which: ColorCmd,
    },
    /// Unit disk visibility graphs.
    Udvg { kind: UdvgKind, scene: PathBuf },
    /// Brute-force oracles and verifiers.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
    /// Draw a scene, optionally with a result on top.
    Render {
        scene: PathBuf,
        #[arg(long)]
        result: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GuardTarget {
    /// Guard a funnel: `guard funnel [simple|optimal] SCENE`.
    Funnel {
        /// Optional algorithm followed by the scene file.
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        #[arg(long)]
        algo: Option<Algo>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Simple,
    Optimal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CfKind {
    Funnel,
    Weakvis,
    Polygon,
}

#[derive(Debug, Subcommand)]
pub enum ColorCmd {
    /// Decide proper 3-colourability of a simple polygon's visibility graph.
    #[command(name = "3")]
    Three { scene: PathBuf },
    /// Decide proper 4-colourability of a simple polygon's visibility graph.
    #[command(name = "4")]
    Four { scene: PathBuf },
    /// Print the first T terms of the ruler sequence.
    Ruler {
        #[arg(long = "t")]
        t: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum UdvgKind {
    Points,
    Segments,
    Polygon,
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    /// Minimum vertex guard set.
    MinGuards {
        scene: PathBuf,
        #[arg(long, default_value_t = polyguard::oracle::MIN_GUARD_LIMIT)]
        limit: usize,
    },
    /// Conflict-free chromatic number over vertex guards.
    CfNumber {
        scene: PathBuf,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Chromatic number of the visibility graph.
    Chromatic {
        scene: PathBuf,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Vertex-to-vertex conflict-free chromatic number.
    V2vcf {
        scene: PathBuf,
        #[arg(long, default_value_t = 3)]
        cmax: u32,
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Check that vertex guards cover the polygon.
    Coverage {
        scene: PathBuf,
        /// Comma-separated guard vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        guards: Vec<usize>,
        #[arg(long)]
        sampled: bool,
    },
}

/// What a command produced: a result document, or raw text.
pub enum Output {
    Result(report::ResultDocument, Option<scene::SceneDocument>),
    Text(String, Option<report::ResultDocument>),
}

fn dispatch(cli: Cli) -> Result<Output, CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Visgraph { scene } => commands::visgraph(&scene),
        Command::Guard { target: GuardTarget::Funnel { args, algo } } => {
            let (algo, scene) = match &args[..] {
                [scene] => (algo.unwrap_or(Algo::Optimal), scene),
                [a, scene] => {
                    let pos = Algo::from_str(a, true).map_err(|_| CliError::input(format!("unknown algorithm {a:?}")))?;
                    if algo.is_some_and(|f| f != pos) {
                        return Err(CliError::input("conflicting algorithms"));
                    }
                    (pos, scene)
                }
                _ => unreachable!("clap limits the argument count"),
            };
            commands::guard_funnel(algo, &PathBuf::from(scene))
        }
        Command::Cfcolor { kind, scene, verify, sampled } => commands::cfcolor(kind, &scene, verify, sampled, g),
        Command::Color { which } => match which {
            ColorCmd::Three { scene } => commands::proper_color(3, &scene),
            ColorCmd::Four { scene } => commands::proper_color(4, &scene),
            ColorCmd::Ruler { t } => Ok(commands::ruler(t)),
        },
        Command::Udvg { kind, scene } => commands::udvg(kind, &scene, g),
        Command::Oracle { which } => match which {
            OracleCmd::MinGuards { scene, limit } => commands::min_guards(&scene, limit),
            OracleCmd::CfNumber { scene, kmax, limit } => commands::cf_number(&scene, kmax, limit),
            OracleCmd::Chromatic { scene, kmax } => commands::chromatic(&scene, kmax),
            OracleCmd::V2vcf { scene, cmax, limit } => commands::v2vcf(&scene, cmax, limit),
            OracleCmd::Coverage { scene, guards, sampled } => commands::coverage(&scene, &guards, sampled, g),
        },
        Command::Render { scene, result } => commands::render(&scene, result.as_deref()),
    }
}

fn write_to(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::internal(format!("stdout: {e}"))),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let out = cli.global.out.clone();
    let svg_path = cli.global.svg.clone();
    match dispatch(cli)? {
        Output::Result(doc, scene) => {
            if let Some(p) = &svg_path {
                let scene = scene.ok_or_else(|| CliError::input("this command has no scene to render"))?;
                write_to(&Some(p.clone()), &svg::render(&scene, Some(&doc))?)?;
            }
            write_to(&out, &doc.to_json())?;
            if doc.verdict == "conflicts" {
                return Err(CliError::internal("the computed colouring failed verification"));
            }
        }
        // Commands with a plain-text answer write their document only on request.
        Output::Text(text, doc) => match (&out, doc) {
            (Some(_), Some(doc)) => write_to(&out, &doc.to_json())?,
            _ => write_to(&out, &text)?,
        },
    }
    Ok(())
}
