//! Command-line front end. `run` returns the process exit status: 0 on
//! success, 1 on domain errors, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::diagram::{parse_tld, serialize_tld, validate, PlanarDiagram};
use crate::group::Level;
use crate::moves::{
    apply_sequence, equiv_search, find_moves, format_sequence, parse_sequence, random_walk_steps, realize, MoveSite,
    MoveTag, WalkCaps,
};
use crate::report::{group_report, invariant_report};

#[derive(Parser, Debug)]
#[command(name = "twistlink", version, about = "Twisted link diagrams: moves and invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Upper,
    Lower,
    Twisted,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check structure and planarity.
    Validate { file: PathBuf },
    /// Polynomials, faces and carrier surface.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Group presentation, abelianization and hom counts.
    Group {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "twisted")]
        level: LevelArg,
        #[arg(long, default_value_t = 10_000)]
        simplify_budget: usize,
        /// Symmetric group degrees, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "3,4")]
        homs: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List move sites, one per line.
    MovesList {
        file: PathBuf,
        /// Move tags, comma separated.
        #[arg(long, value_delimiter = ',')]
        tags: Option<Vec<String>>,
    },
    /// Apply move sites in order.
    MovesApply {
        file: PathBuf,
        /// A move site such as "R2 reduce e4 e7"; may be repeated.
        #[arg(long)]
        site: Vec<String>,
        /// File of move sites, one per line.
        #[arg(long)]
        sequence: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random walk; prints the sites as comments, then the diagram.
    Walk {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        max_crossings: Option<usize>,
    },
    /// Redraw a diagram from its abstract link.
    Realize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a move sequence from one diagram to another.
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        depth: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Out<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Out<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Parse and validate a diagram file.
fn load(path: &Path) -> Out<PlanarDiagram> {
    let d = parse_tld(&read(path)?).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let rep = validate(&d);
    if !rep.valid {
        let msgs: Vec<String> = rep.violations.iter().map(|v| format!("{}: {}", v.code, v.message)).collect();
        return Err(Failure::Domain(format!("{}: invalid diagram\n{}", path.display(), msgs.join("\n"))));
    }
    Ok(d)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Out<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Domain(e.to_string())),
    }
}

fn json(v: &impl serde::Serialize) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("report serializes"))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Out<()> {
    match cmd {
        Command::Validate { file } => {
            let d = parse_tld(&read(&file)?).map_err(|e| Failure::Domain(e.to_string()))?;
            let rep = validate(&d);
            if !rep.valid {
                let msgs: Vec<String> = rep.violations.iter().map(|v| format!("{}: {}", v.code, v.message)).collect();
                return Err(Failure::Domain(msgs.join("\n")));
            }
            emit(out, None, "valid\n")
        }
        Command::Invariants { file, json: as_json } => {
            let r = invariant_report(&load(&file)?.project()?)?;
            emit(out, None, &if as_json { json(&r) } else { r.to_text() })
        }
        Command::Group { file, level, simplify_budget, homs, json: as_json } => {
            let level = match level {
                LevelArg::Upper => Some(Level::Upper),
                LevelArg::Lower => Some(Level::Lower),
                LevelArg::Twisted => None,
            };
            let r = group_report(&load(&file)?.project()?, level, simplify_budget, &homs)?;
            emit(out, None, &if as_json { json(&r) } else { r.to_text() })
        }
        Command::MovesList { file, tags } => {
            let d = load(&file)?;
            let tags = tags
                .map(|ts| ts.iter().map(|t| t.parse::<MoveTag>()).collect::<crate::Result<Vec<_>>>())
                .transpose()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            emit(out, None, &format_sequence(&find_moves(&d, tags.as_deref())))
        }
        Command::MovesApply { file, site, sequence, out: dest } => {
            let d = load(&file)?;
            let mut seq: Vec<MoveSite> = Vec::new();
            if let Some(p) = sequence {
                seq.extend(parse_sequence(&read(&p)?).map_err(|e| Failure::Usage(e.to_string()))?);
            }
            for s in &site {
                seq.push(s.parse().map_err(|e: crate::Error| Failure::Usage(e.to_string()))?);
            }
            let r = apply_sequence(&d, &seq)?;
            emit(out, dest.as_deref(), &serialize_tld(&r))
        }
        Command::Walk { file, seed, steps, max_crossings } => {
            let d = load(&file)?;
            let base = WalkCaps::default();
            let caps = WalkCaps {
                max_classical: max_crossings.unwrap_or(base.max_classical.max(d.classical.len() + 2)),
                max_virtual: base.max_virtual.max(d.virtuals.len() + 4),
                max_bars: base.max_bars.max(d.total_bars() + 4),
            };
            let walk = random_walk_steps(&d, seed, steps, caps)?;
            let mut text = String::new();
            for (s, _) in &walk {
                text.push_str(&format!("# {s}\n"));
            }
            text.push_str(&serialize_tld(walk.last().map_or(&d, |w| &w.1)));
            emit(out, None, &text)
        }
        Command::Realize { file, out: dest } => {
            let r = realize(&load(&file)?.project()?)?;
            emit(out, dest.as_deref(), &serialize_tld(&r))
        }
        Command::Equiv { file1, file2, depth } => {
            let (d1, d2) = (load(&file1)?, load(&file2)?);
            match equiv_search(&d1, &d2, depth)? {
                Some(path) => emit(out, None, &format!("found {} moves\n{}", path.len(), format_sequence(&path))),
                None => emit(out, None, &format!("no sequence of at most {depth} moves\n")),
            }
        }
    }
}

/// Run the tool on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}
