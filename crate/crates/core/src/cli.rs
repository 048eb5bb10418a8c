//! Command-line interface.
//!
//! Exit codes: `0` success (and, for `verify`, a valid instance); `1`
//! instance fails verification; `2` usage errors (bad arguments,
//! construction parameters out of range, search limits exceeded, unmet
//! preconditions); `3` input/output failures (unreadable files,
//! malformed instance files).

use crate::constructions::{generate, ConstructionName};
use crate::diagram::{
    check_leftie_lemmas, extract_underlying_linear, nonleftie_weight_at, BoundaryDiagram,
    DiagramError,
};
use crate::format::{parse_instance, serialize_instance, ParseError};
use crate::model::{verify, Instance, VariantFlags};
use crate::render::{render_svg, RenderOptions};
use crate::search::{max_thrackle, max_through_point, SearchLimits, SearchResult};
use clap::{Args, Parser, Subcommand};
use std::io::{Read, Write};

#[derive(Parser)]
#[command(
    name = "thrackle",
    about = "Verify, construct, analyze, and search families of pairwise-intersecting convex hulls",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy, Default)]
struct FlagArgs {
    /// Permit one hull of the family to contain another.
    #[arg(long)]
    allow_containment: bool,
    /// Permit three hulls to share more than a single point.
    #[arg(long)]
    allow_triple_interior: bool,
    /// Permit repeated hulls (implies --allow-containment).
    #[arg(long)]
    allow_multiset: bool,
    /// Skip the check that no three points are collinear.
    #[arg(long)]
    allow_collinear: bool,
}

impl FlagArgs {
    fn flags(self) -> VariantFlags {
        VariantFlags {
            allow_containment: self.allow_containment,
            allow_triple_interior: self.allow_triple_interior,
            allow_multiset: self.allow_multiset,
            allow_collinear: self.allow_collinear,
        }
        .normalized()
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an instance file against the family conditions.
    Verify {
        /// Instance file, or `-` for standard input.
        file: String,
        #[command(flatten)]
        flags: FlagArgs,
    },
    /// Emit a named construction as an instance file.
    Gen {
        /// One of: counterexample, odd-circle, star-neighbors, gossett,
        /// triple-blocks, double-star, parabola-points.
        name: String,
        /// Number of points.
        #[arg(long)]
        n: usize,
        /// Output file, or `-` for standard output.
        #[arg(short, long, default_value = "-")]
        out: String,
    },
    /// Exhaustively compute a maximum family on a point set.
    Search {
        /// Instance file whose points are searched, or `-` for stdin.
        #[arg(long, conflicts_with = "parabola")]
        file: Option<String>,
        /// Use N points on the standard parabola instead of a file.
        #[arg(long, value_name = "N")]
        parabola: Option<usize>,
        /// Restrict to families whose every hull has this vertex.
        #[arg(long, value_name = "POINT")]
        through: Option<usize>,
        /// Raise or lower the point-count guard (default 9, or 12 for
        /// points in convex position).
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        flags: FlagArgs,
    },
    /// Report the boundary diagram, per-vertex weights, and structural
    /// checks of a valid instance.
    Analyze {
        /// Instance file, or `-` for standard input.
        file: String,
        #[command(flatten)]
        flags: FlagArgs,
    },
    /// Assign each hull one of its two-point subsets so the chosen
    /// segments form a valid family of their own.
    ExtractLinear {
        /// Instance file, or `-` for standard input.
        file: String,
    },
    /// Render an instance to SVG.
    Render {
        /// Instance file, or `-` for standard input.
        file: String,
        /// Output file, or `-` for standard output.
        #[arg(short, long, default_value = "-")]
        out: String,
        /// Skip the point index labels.
        #[arg(long)]
        no_labels: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::io(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        // A closed pipe downstream (`... | head`) is normal termination,
        // not an error worth reporting.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Failure { code: 0, message: String::new() }
        } else {
            Failure::io(e.to_string())
        }
    }
}

impl From<crate::constructions::ConstructError> for Failure {
    fn from(e: crate::constructions::ConstructError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<crate::search::SearchError> for Failure {
    fn from(e: crate::search::SearchError) -> Failure {
        Failure::usage(e.to_string())
    }
}

fn read_input(file: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if file == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(file)
            .map_err(|e| Failure::io(format!("cannot read {file}: {e}")))
    }
}

fn load_instance(file: &str, stdin: &mut dyn Read) -> Result<Instance, Failure> {
    Ok(parse_instance(&read_input(file, stdin)?)?)
}

fn write_output(out: &str, stdout: &mut dyn Write, content: &str) -> Result<(), Failure> {
    if out == "-" {
        stdout.write_all(content.as_bytes())?;
        Ok(())
    } else {
        std::fs::write(out, content)
            .map_err(|e| Failure::io(format!("cannot write {out}: {e}")))
    }
}

/// Runs the CLI against explicit streams and returns the exit code.
/// `args` includes the program name.
pub fn run(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(rendered.as_bytes());
                0
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
                2
            };
        }
    };
    match dispatch(cli.cmd, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(stderr, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(cmd: Cmd, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Cmd::Verify { file, flags } => {
            let inst = load_instance(&file, stdin)?.with_flags(flags.flags());
            let report = verify(&inst);
            write!(stdout, "{report}")?;
            Ok(if report.valid { 0 } else { 1 })
        }
        Cmd::Gen { name, n, out } => {
            let name: ConstructionName = name
                .parse()
                .map_err(|e: crate::constructions::ConstructError| Failure::usage(e.to_string()))?;
            let inst = generate(name, n)?;
            write_output(&out, stdout, &serialize_instance(&inst))?;
            Ok(0)
        }
        Cmd::Search { file, parabola, through, limit, flags } => {
            let points = match (file, parabola) {
                (Some(f), None) => load_instance(&f, stdin)?.point_set().clone(),
                (None, Some(n)) => crate::constructions::parabola_points(n)?,
                _ => {
                    return Err(Failure::usage(
                        "search needs a point source: --file FILE or --parabola N",
                    ))
                }
            };
            let limits = SearchLimits { max_points: limit };
            let result = match through {
                None => max_thrackle(&points, flags.flags(), limits)?,
                Some(p) => max_through_point(&points, p, flags.flags(), limits)?,
            };
            print_search_result(stdout, &result)?;
            Ok(0)
        }
        Cmd::Analyze { file, flags } => {
            let inst = load_instance(&file, stdin)?.with_flags(flags.flags());
            analyze(stdout, &inst)
        }
        Cmd::ExtractLinear { file } => {
            let inst = load_instance(&file, stdin)?;
            match extract_underlying_linear(&inst) {
                Ok(Some(map)) => {
                    for (hull, (a, b)) in &map {
                        let ids: Vec<String> =
                            inst.hull(*hull).indices().iter().map(|i| i.to_string()).collect();
                        writeln!(stdout, "hull {hull} ({}) -> {a} {b}", ids.join(" "))?;
                    }
                    Ok(0)
                }
                Ok(None) => {
                    writeln!(stdout, "NONE")?;
                    Ok(0)
                }
                Err(DiagramError::InvalidInstance) => {
                    writeln!(stdout, "{}", verify(&inst))?;
                    Ok(1)
                }
                Err(e) => Err(Failure::usage(e.to_string())),
            }
        }
        Cmd::Render { file, out, no_labels } => {
            let inst = load_instance(&file, stdin)?;
            let opts = RenderOptions { labels: !no_labels, ..Default::default() };
            write_output(&out, stdout, &render_svg(&inst, &opts))?;
            Ok(0)
        }
    }
}

fn print_search_result(stdout: &mut dyn Write, result: &SearchResult) -> Result<(), Failure> {
    writeln!(stdout, "max={}", result.max_size)?;
    writeln!(stdout, "nodes={}", result.nodes_explored)?;
    writeln!(stdout, "exhaustive={}", result.exhaustive)?;
    writeln!(stdout, "witness:")?;
    for hull in &result.witness {
        let ids: Vec<String> = hull.indices().iter().map(|i| i.to_string()).collect();
        writeln!(stdout, "{}", ids.join(" "))?;
    }
    Ok(())
}

fn analyze(stdout: &mut dyn Write, inst: &Instance) -> Result<i32, Failure> {
    let report = verify(inst);
    write!(stdout, "{report}")?;
    if !report.valid {
        return Ok(1);
    }
    let diagram = match BoundaryDiagram::build(inst) {
        Ok(d) => d,
        Err(e) => return Err(Failure::usage(e.to_string())),
    };
    writeln!(
        stdout,
        "boundary diagram: {} segments, total weight {}",
        diagram.segments().len(),
        diagram.total_weight()
    )?;
    for seg in diagram.segments() {
        let hulls: Vec<String> = seg.contributors.iter().map(|h| h.to_string()).collect();
        writeln!(
            stdout,
            "segment {}-{}: weight {}, hulls [{}]{}",
            seg.endpoints.0,
            seg.endpoints.1,
            seg.weight,
            hulls.join(", "),
            if seg.is_mixed(inst) { ", mixed" } else { "" }
        )?;
    }
    let mut max_weight = 0;
    for p in 0..inst.n() {
        let w = nonleftie_weight_at(inst, &diagram, p);
        max_weight = max_weight.max(w);
        writeln!(stdout, "vertex {p}: non-leftie weight {w}")?;
    }
    writeln!(stdout, "max non-leftie weight: {max_weight}")?;
    let lemmas = check_leftie_lemmas(inst, &diagram);
    if lemmas.leftie_from_both.is_empty() {
        writeln!(stdout, "leftie-from-both segments: none")?;
    } else {
        for (u, v) in &lemmas.leftie_from_both {
            writeln!(stdout, "leftie-from-both segment: {u}-{v}")?;
        }
    }
    if lemmas.nonleftie_wedge_pairs.is_empty() {
        writeln!(stdout, "non-leftie disjoint wedge pairs: none")?;
    } else {
        for (p, a, b) in &lemmas.nonleftie_wedge_pairs {
            writeln!(stdout, "non-leftie disjoint wedge pair: apex {p}, hulls {a} and {b}")?;
        }
    }
    let all_segments = inst.family().iter().all(|h| h.len() == 2);
    if all_segments {
        writeln!(
            stdout,
            "all-segment family: yes (m={} {} n={})",
            inst.m(),
            if inst.m() <= inst.n() { "<=" } else { ">" },
            inst.n()
        )?;
    } else {
        writeln!(stdout, "all-segment family: no")?;
    }
    Ok(0)
}
