//! Command-line front end. `run` parses arguments, executes one command and
//! returns the exit code with everything that should be printed.

mod format;

pub use format::{
    parse_construction, parse_diagram, parse_document, parse_sadic, write_construction, write_diagram, write_document,
    write_sadic, Document, FormatError,
};

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::bratteli::{self, min_path, tower_coding_from, tower_position, vershik_orbit, OrderedBratteliDiagram};
use crate::construction::{
    check_good, check_proper, language_profile, minimality_verdict, rank_bounds, spacer_stats, AffixMode, ExpandMode,
    Expansion, Minimality, RankConstruction, DEFAULT_BUDGET,
};
use crate::error::Error;
use crate::parsing::{expected_occurrence, parse_window, unique_readability_probe, ProbeOutcome, WindowContext};
use crate::sadic::{self, DirectiveSequence};
use crate::transforms::{
    factor_construction, gallery, good_cover, mef_construction, mef_digits, CoverOptions, FactorOptions, MefParams,
    SlidingBlockCode, GALLERY_NAMES,
};
use crate::words::{d_l, Word};

const DEFAULT_DEPTH: usize = 8;
const DEFAULT_LANGUAGE_DEPTH: usize = 12;
const DEFAULT_MAX_N: usize = 20;
const DEFAULT_CAP: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "symrank",
    version,
    about = "Finite symbolic rank constructions and conversions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Levels to inspect (clamped to the construction's last level when omitted).
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Longest word length for language comparisons.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Largest expansion, in symbols, that may be materialized.
    #[arg(long, global = true)]
    budget_bytes: Option<u64>,
    /// Cap on enumerated readings.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Partial blocks in goodness checks must be proper prefixes/suffixes.
    #[arg(long, global = true)]
    strict_good: bool,
    /// Multiplier in the MEF edge-count bound a_i > slack·(p_i+q_i).
    #[arg(long, global = true)]
    mef_slack: Option<u64>,
    /// Print long words in full.
    #[arg(long, global = true)]
    full: bool,
}

/// Input sources accept a path, `gallery:NAME`, or `mef:a1,a2,…`.
#[derive(Subcommand, Debug)]
enum Command {
    /// Expand level words.
    Generate {
        /// JSON file, gallery:NAME or mef:a1,a2,...
        #[arg(long)]
        file: String,
        #[arg(long)]
        level: usize,
        /// One word instead of the whole level.
        #[arg(long)]
        index: Option<usize>,
        /// Report lengths without materializing words
        #[arg(long)]
        length_only: bool,
    },
    /// Verdicts on a construction (or any file kind for `validate`).
    Check {
        /// JSON file, gallery:NAME or mef:a1,a2,...
        #[arg(long)]
        file: String,
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Readings of finite windows.
    Parse {
        /// JSON file, gallery:NAME or mef:a1,a2,...
        #[arg(long)]
        file: String,
        #[command(subcommand)]
        what: ParseKind,
    },
    /// Conversions producing a rank construction (JSON on stdout unless --out).
    Convert {
        /// JSON file, gallery:NAME or mef:a1,a2,...
        #[arg(long)]
        file: String,
        /// Write the construction here and print the report instead.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(subcommand)]
        what: ConvertKind,
    },
    /// Language distance d_L between two constructions.
    Distance { a: String, b: String },
    /// Vershik map on an ordered Bratteli diagram.
    Vershik {
        /// JSON file, gallery:NAME or mef:a1,a2,...
        #[arg(long)]
        file: String,
        #[command(subcommand)]
        what: VershikKind,
    },
    /// Named example constructions; lists the names when none is given.
    Gallery { name: Option<String> },
    /// Symbolic and topological rank bounds.
    Bounds {
        /// JSON file, gallery:NAME or mef:a1,a2,...
        #[arg(long)]
        file: String,
    },
    /// Odometer digit of position k at level i for MEF parameters.
    MefDigit {
        #[arg(long, value_delimiter = ',')]
        a: Vec<u64>,
        #[arg(long)]
        level: usize,
        #[arg(long, allow_hyphen_values = true)]
        at: i64,
    },
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    Proper,
    Good {
        #[arg(long, default_value_t = 1)]
        level: usize,
    },
    Spacer,
    Minimal,
    Validate,
}

#[derive(Subcommand, Debug)]
enum ParseKind {
    /// Complete readings of a window through a level.
    Window {
        #[arg(long)]
        window: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        origin: i64,
        #[arg(long)]
        level: usize,
    },
    /// Whether v_{level,index} has an expected occurrence at a position.
    Occurrence {
        #[arg(long)]
        window: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        origin: i64,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        index: usize,
        #[arg(long, allow_hyphen_values = true)]
        at: i64,
    },
    /// Search for a window with two readings.
    Probe {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        window_len: usize,
        #[arg(long)]
        source_level: Option<usize>,
        /// Most windows to parse.
        #[arg(long, default_value_t = 100_000)]
        windows: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ConvertKind {
    Bratteli {
        #[arg(long)]
        rank: usize,
    },
    Sadic {
        #[arg(long)]
        rank: usize,
        /// Declare the directive sequence recognizable (not checked).
        #[arg(long)]
        recognizable: bool,
    },
    GoodCover {
        #[arg(long, default_value_t = 3)]
        levels: usize,
    },
    FactorCode {
        /// identity, bit-flip, majority3, or RADIUS:TABLE with TABLE a 0/1 string.
        #[arg(long)]
        code: String,
        #[arg(long, default_value_t = 4)]
        levels: usize,
    },
}

#[derive(Subcommand, Debug)]
enum VershikKind {
    /// Successor orbit of the minimal path into a top vertex.
    Orbit {
        #[arg(long, default_value_t = 1)]
        vertex: usize,
        #[arg(long, default_value_t = 64)]
        steps: usize,
    },
    /// Level vertices visited along the orbit.
    Coding {
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 1)]
        vertex: usize,
        #[arg(long, default_value_t = 32)]
        steps: usize,
    },
}

/// Exit code and printed text of one invocation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Usage(String),
    Checked(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyPattern
            | Error::InvalidWord(_)
            | Error::InvalidArgument(_)
            | Error::Unreachable { .. }
            | Error::IndexOutOfRange { .. }
            | Error::InvalidConstruction(_)
            | Error::InvalidDiagram(_)
            | Error::InvalidDirective(_)
            | Error::UnknownGallery(_) => Failure::Usage(e.to_string()),
            _ => Failure::Checked(e.to_string()),
        }
    }
}

struct Report {
    out: String,
    failed: bool,
}

impl Report {
    fn new(echo: &str) -> Report {
        Report {
            out: format!("command: {echo}\n"),
            failed: false,
        }
    }

    fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{key}: {value}");
    }

    fn raw(&mut self, text: &str) {
        self.out.push_str(text);
    }
}

/// Runs one command; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(r) => Outcome {
            code: if r.failed { EXIT_FAILED } else { EXIT_OK },
            stdout: r.out,
            stderr: String::new(),
        },
        Err(Failure::Usage(m)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Checked(m)) => Outcome {
            code: EXIT_FAILED,
            stdout: String::new(),
            stderr: format!("failed: {m}\n"),
        },
    }
}

fn read_source(cli: &Cli, src: &str) -> Result<Document, Failure> {
    if let Some(name) = src.strip_prefix("gallery:") {
        return Ok(Document::Construction(gallery(name)?));
    }
    if let Some(list) = src.strip_prefix("mef:") {
        let a = list
            .split(',')
            .map(|x| x.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::Usage(format!("{src}: {e}")))?;
        let depth = a.len();
        return Ok(Document::Construction(mef_construction(
            &MefParams::new(a),
            depth,
            cli.mef_slack.unwrap_or(1),
        )?));
    }
    let text = std::fs::read_to_string(src).map_err(|e| Failure::Usage(format!("cannot read {src}: {e}")))?;
    parse_document(&text).map_err(|e| Failure::Usage(format!("{src}: {e}")))
}

fn construction(cli: &Cli, src: &str) -> Result<RankConstruction, Failure> {
    match read_source(cli, src)? {
        Document::Construction(c) => Ok(c),
        _ => Err(Failure::Usage(format!("{src}: expected a rank_construction file"))),
    }
}

fn diagram(cli: &Cli, src: &str) -> Result<OrderedBratteliDiagram, Failure> {
    match read_source(cli, src)? {
        Document::Diagram(d) => Ok(d),
        _ => Err(Failure::Usage(format!("{src}: expected a bratteli file"))),
    }
}

fn directive(cli: &Cli, src: &str) -> Result<DirectiveSequence, Failure> {
    match read_source(cli, src)? {
        Document::Sadic(s) => Ok(s),
        _ => Err(Failure::Usage(format!("{src}: expected a sadic file"))),
    }
}

/// `--depth`, or the default clamped to the construction's last level.
fn depth_for(cli: &Cli, c: &RankConstruction, default: usize) -> usize {
    cli.depth
        .unwrap_or_else(|| c.max_level().map_or(default, |m| m.min(default)))
        .max(1)
}

fn window(text: &str, origin: i64) -> Result<WindowContext, Failure> {
    Ok(WindowContext::new(text.parse::<Word>()?, origin)?)
}

fn parse_code(text: &str) -> Result<SlidingBlockCode, Failure> {
    match text {
        "identity" => Ok(SlidingBlockCode::identity()),
        "bit-flip" => Ok(SlidingBlockCode::bit_flip()),
        "majority3" => Ok(SlidingBlockCode::majority3()),
        _ => {
            let (r, table) = text
                .split_once(':')
                .ok_or_else(|| Failure::Usage(format!("unknown code {text:?}")))?;
            let r = r
                .parse::<usize>()
                .map_err(|e| Failure::Usage(format!("code radius: {e}")))?;
            let bits = table.parse::<Word>()?.bits().to_vec();
            Ok(SlidingBlockCode::new(r, bits)?)
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let budget = cli.budget_bytes.unwrap_or(DEFAULT_BUDGET);
    let mode = if cli.strict_good {
        AffixMode::ProperOnly
    } else {
        AffixMode::AllowFull
    };
    match &cli.command {
        Command::Generate {
            file,
            level,
            index,
            length_only,
        } => {
            let c = construction(cli, file)?;
            let mut r = Report::new("generate");
            let mut e = c.expander(budget);
            let arity = c.arity(*level);
            c.check_index(*level, index.unwrap_or(1))?;
            let js: Vec<usize> = index.map_or_else(|| (1..=arity).collect(), |j| vec![j]);
            for j in js {
                let m = if *length_only {
                    ExpandMode::LengthOnly
                } else {
                    ExpandMode::Materialize
                };
                match e.expand(*level, j, m)? {
                    Expansion::Length(n) => r.line(&format!("|v_{{{level},{j}}}|"), n),
                    Expansion::Word(w) => r.line(&format!("v_{{{level},{j}}}"), w.render(cli.full)),
                }
            }
            Ok(r)
        }
        Command::Check { file, what } => check(cli, file, what, mode),
        Command::Parse { file, what } => {
            let c = construction(cli, file)?;
            match what {
                ParseKind::Window {
                    window: w,
                    origin,
                    level,
                } => {
                    let ctx = window(w, *origin)?;
                    let res = parse_window(&ctx, &c, *level, cli.cap.unwrap_or(DEFAULT_CAP))?;
                    let mut r = Report::new("parse window");
                    r.line("candidates", res.candidates.len());
                    r.line("overflow", res.overflow);
                    for (t, cand) in res.candidates.iter().enumerate() {
                        r.raw(&format!("candidate {}:\n", t + 1));
                        for layer in &cand.layers {
                            let marks: Vec<String> = layer.marks.iter().map(|(p, q)| format!("{p}:{q}")).collect();
                            r.raw(&format!("  level {}: {}\n", layer.level, marks.join(" ")));
                        }
                    }
                    Ok(r)
                }
                ParseKind::Occurrence {
                    window: w,
                    origin,
                    level,
                    index,
                    at,
                } => {
                    let ctx = window(w, *origin)?;
                    let occ = expected_occurrence(&ctx, &c, *level, *index, *at)?;
                    let mut r = Report::new("parse occurrence");
                    r.line("expected", occ);
                    Ok(r)
                }
                ParseKind::Probe {
                    level,
                    window_len,
                    source_level,
                    windows,
                } => {
                    let res = unique_readability_probe(&c, *level, *window_len, *windows, *source_level)?;
                    let mut r = Report::new("parse probe");
                    match res {
                        ProbeOutcome::NoViolation {
                            windows_checked,
                            complete,
                        } => {
                            r.line("probe", "NO_VIOLATION");
                            r.line("windows", windows_checked);
                            r.line("complete", complete);
                        }
                        ProbeOutcome::Counterexample { window, candidates } => {
                            r.line("probe", "COUNTEREXAMPLE");
                            r.line("window", window.render(cli.full));
                            r.line("readings", candidates);
                            r.failed = true;
                        }
                    }
                    Ok(r)
                }
            }
        }
        Command::Convert { file, out, what } => convert(cli, file, out.as_ref(), what),
        Command::Distance { a, b } => {
            let (ca, cb) = (construction(cli, a)?, construction(cli, b)?);
            let max_n = cli.max_n.unwrap_or(DEFAULT_MAX_N);
            let depth = cli.depth.unwrap_or(DEFAULT_LANGUAGE_DEPTH);
            let pa = language_profile(&ca, max_n, depth)?;
            let pb = language_profile(&cb, max_n, depth)?;
            let d = d_l(&pa, &pb, max_n)?;
            let mut r = Report::new("distance");
            r.line("distance", d);
            r.line("exact", d.is_exact());
            r.line("max_n", max_n);
            Ok(r)
        }
        Command::Vershik { file, what } => {
            let d = diagram(cli, file)?;
            let depth = cli.depth.unwrap_or(d.depth());
            match what {
                VershikKind::Orbit { vertex, steps } => {
                    let start = min_path(&d, depth, *vertex)?;
                    let orbit = vershik_orbit(&d, &start, *steps)?;
                    let mut r = Report::new("vershik orbit");
                    let closed =
                        orbit.len() < *steps || bratteli::vershik_successor(&d, orbit.last().unwrap())?.0 == start;
                    r.line(
                        "period",
                        if closed {
                            orbit.len().to_string()
                        } else {
                            format!("> {}", orbit.len())
                        },
                    );
                    for p in &orbit {
                        let picks: Vec<String> = p.picks.iter().map(|(v, e)| format!("({v},{e})")).collect();
                        r.raw(&format!("{} pos {}\n", picks.join(""), tower_position(&d, p)?));
                    }
                    Ok(r)
                }
                VershikKind::Coding { level, vertex, steps } => {
                    let code = tower_coding_from(&d, depth, *level, *steps, *vertex)?;
                    let mut r = Report::new("vershik coding");
                    let s: Vec<String> = code.iter().map(usize::to_string).collect();
                    r.line("coding", s.join(" "));
                    Ok(r)
                }
            }
        }
        Command::Gallery { name } => {
            let mut r = Report {
                out: String::new(),
                failed: false,
            };
            match name {
                None => GALLERY_NAMES.iter().for_each(|n| r.raw(&format!("{n}\n"))),
                Some(n) => r.raw(&write_construction(&gallery(n)?)),
            }
            Ok(r)
        }
        Command::Bounds { file } => {
            let c = construction(cli, file)?;
            let depth = depth_for(cli, &c, DEFAULT_DEPTH);
            let b = rank_bounds(&c, depth)?;
            let mut r = Report::new("bounds");
            r.line("symbolic rank", b.symbolic_rank);
            r.line("spacer bound M", b.spacer_bound);
            r.line("spacer bound certified", b.spacer_bound_certified);
            r.line("one-run bound l", b.one_run_bound);
            r.line("topological rank <= n^2 l", b.upper_a);
            r.line("topological rank <= 4(M+1)n^2", b.upper_b);
            r.line("depth", b.depth);
            Ok(r)
        }
        Command::MefDigit { a, level, at } => {
            let digit = mef_digits(&MefParams::new(a.clone()), &BigInt::from(*at), *level)?;
            let mut r = Report::new("mef-digit");
            r.line("digit", digit);
            Ok(r)
        }
    }
}

fn check(cli: &Cli, file: &str, what: &CheckKind, mode: AffixMode) -> Result<Report, Failure> {
    if let CheckKind::Validate = what {
        let mut r = Report::new("check validate");
        match read_source(cli, file) {
            Ok(doc) => {
                r.line("valid", true);
                r.line(
                    "kind",
                    match doc {
                        Document::Construction(_) => "rank_construction",
                        Document::Diagram(_) => "bratteli",
                        Document::Sadic(_) => "sadic",
                    },
                );
            }
            Err(Failure::Usage(m)) if m.contains(": ") && !m.starts_with("cannot read") => {
                r.line("valid", false);
                r.line("reason", m);
                r.failed = true;
            }
            Err(f) => return Err(f),
        }
        return Ok(r);
    }
    let c = construction(cli, file)?;
    let depth = depth_for(cli, &c, DEFAULT_DEPTH);
    let mut r;
    match what {
        CheckKind::Proper => {
            let p = check_proper(&c, depth)?;
            r = Report::new("check proper");
            r.line("proper", p.proper);
            r.line("depth", depth);
            if let Some(w) = p.witness {
                r.line("witness", w);
            }
            r.failed = !p.proper;
        }
        CheckKind::Good { level } => {
            let g = check_good(&c, *level, mode)?;
            r = Report::new("check good");
            r.line("good", g.good);
            r.line("level", level);
            r.line("mode", if cli.strict_good { "strict" } else { "allow-full" });
            if let Some(w) = g.witness {
                r.line("witness", w);
            }
            r.failed = !g.good;
        }
        CheckKind::Spacer => {
            let s = spacer_stats(&c, depth)?;
            r = Report::new("check spacer");
            let per: Vec<String> = s.per_step.iter().map(u64::to_string).collect();
            r.line("per-step maxima", per.join(" "));
            r.line("bound", s.bound);
            r.line("certified", s.certified);
            r.line("unbounded evidence", s.unbounded_evidence);
        }
        CheckKind::Minimal => {
            let m = minimality_verdict(&c, depth)?;
            r = Report::new("check minimal");
            r.line("verdict", m.verdict);
            for reason in &m.reasons {
                r.line("reason", reason);
            }
            r.failed = m.verdict == Minimality::NotMinimalEvidence;
        }
        CheckKind::Validate => unreachable!(),
    }
    Ok(r)
}

fn convert(cli: &Cli, file: &str, out: Option<&PathBuf>, what: &ConvertKind) -> Result<Report, Failure> {
    let mut r = Report::new(match what {
        ConvertKind::Bratteli { .. } => "convert bratteli",
        ConvertKind::Sadic { .. } => "convert sadic",
        ConvertKind::GoodCover { .. } => "convert good-cover",
        ConvertKind::FactorCode { .. } => "convert factor-code",
    });
    let built = match what {
        ConvertKind::Bratteli { rank } => {
            let d = diagram(cli, file)?;
            let d = match cli.depth {
                Some(k) => d.truncate(k)?,
                None => d,
            };
            let conv = bratteli::to_rank_construction(&d, *rank)?;
            for (i, order) in conv.vertex_order.iter().enumerate().skip(1) {
                r.line(&format!("vertex order V_{i}"), format!("{order:?}"));
            }
            conv.construction
        }
        ConvertKind::Sadic { rank, recognizable } => {
            let ds = directive(cli, file)?;
            let depth = cli.depth.unwrap_or(ds.morphisms.len());
            let conv = sadic::to_rank_construction(&ds, *rank, depth, *recognizable)?;
            r.line(
                "recognizability",
                if conv.recognizable_declared {
                    "declared"
                } else {
                    "not declared"
                },
            );
            for (i, order) in conv.letter_order.iter().enumerate().skip(1) {
                r.line(&format!("letter order A_{i}"), format!("{order:?}"));
            }
            conv.construction
        }
        ConvertKind::GoodCover { levels } => {
            let c = construction(cli, file)?;
            let g = good_cover(
                &c,
                CoverOptions {
                    levels: *levels,
                    ..CoverOptions::default()
                },
            )?;
            r.line("k0", g.trace.k0);
            r.line("indices", format!("{:?}", g.trace.indices));
            r.line("m", format!("{:?}", g.trace.m));
            for (q, (src, dst)) in g.table.entries.iter().enumerate() {
                r.line(
                    &format!("table {}", q + 1),
                    format!("{} -> {}", src.render(cli.full), dst.render(cli.full)),
                );
            }
            g.cover
        }
        ConvertKind::FactorCode { code, levels } => {
            let c = construction(cli, file)?;
            let code = parse_code(code)?;
            let f = factor_construction(
                &c,
                &code,
                FactorOptions {
                    levels: *levels,
                    ..FactorOptions::default()
                },
            )?;
            r.line("start level", f.start_level);
            r.line("k1", f.k1);
            r.line("level sizes", format!("{:?}", f.sizes));
            r.line("rank bound n^2 k1", f.rank_bound);
            f.construction
        }
    };
    let json = write_construction(&built);
    match out {
        Some(path) => {
            std::fs::write(path, &json).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            r.line("written", path.display());
            Ok(r)
        }
        None => Ok(Report {
            out: json,
            failed: false,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("symrank").chain(args.iter().copied()))
    }

    #[test]
    fn proper_check_on_gallery() {
        let o = run_args(&["check", "--file", "gallery:chacon", "proper", "--depth", "5"]);
        assert_eq!(o.code, 0, "{o:?}");
        assert!(o.stdout.contains("proper: true"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["generate"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["gallery", "nope"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn distance_to_itself() {
        let o = run_args(&["distance", "gallery:chacon", "gallery:chacon", "--max-n", "20"]);
        assert_eq!(o.code, 0, "{o:?}");
        assert!(o.stdout.contains("d_L ≤ 2^-20"));
    }
}
