//! Command-line front end: enumeration, boundary counts, compression,
//! exhaustive verification, and SVG rendering.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 falsification detected,
//! 3 search budget exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use isoperim::compress::{centralize, compress_coordinate, Compression};
use isoperim::formula::{boundary_via_projections, initial_segment_boundary_size};
use isoperim::oracle::{verify_segment_minimality, OracleOptions, SearchBox, SearchMode};
use isoperim::ordering::enumerate;
use isoperim::render::{render_svg, RenderStyle};
use isoperim::textio::{parse_point_set, write_point_set};
use isoperim::{DomainSignature, Error, PointSet};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_FALSIFIED: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "isoperim",
    version,
    about = "Vertex isoperimetry on the l-infinity graph over Z^k x N^d",
    after_help = "Exit codes: 0 ok, 1 usage/input error, 2 falsification, 3 budget exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first points of the well-ordering, numbered from 1.
    Order(OrderArgs),
    /// Count (and optionally write) the vertex boundary of a set.
    Boundary(BoundaryArgs),
    /// Apply a compression operator, or centralize fully.
    Compress(CompressArgs),
    /// Exhaustively check that initial segments minimize the boundary.
    Verify(VerifyArgs),
    /// Render a 2-D set and its boundary as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct DomainArgs {
    /// Number of Z-type (unrestricted) coordinates.
    #[arg(long = "z", default_value_t = 0)]
    z: usize,
    /// Number of N-type (nonnegative) coordinates.
    #[arg(long = "n", default_value_t = 0)]
    n: usize,
}

impl DomainArgs {
    fn sig(&self) -> Result<DomainSignature, String> {
        if self.z + self.n == 0 {
            return Err("domain needs at least one coordinate (--z and/or --n)".to_string());
        }
        Ok(DomainSignature::new(self.z, self.n))
    }
}

#[derive(Args)]
struct OrderArgs {
    #[command(flatten)]
    domain: DomainArgs,
    /// How many points to list.
    #[arg(long)]
    count: u64,
    #[arg(long, value_enum, default_value = "listing")]
    format: OrderFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderFormat {
    /// Numbered lines, one point per line.
    Listing,
    /// A point-set document usable as --input elsewhere.
    Points,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundaryMethod {
    /// Direct union of unit balls.
    Direct,
    /// Projection-sum count (requires a fully compressed set).
    Formula,
}

#[derive(Args)]
struct BoundaryArgs {
    /// Point-set file to read.
    #[arg(
        long,
        conflicts_with = "segment_size",
        required_unless_present = "segment_size"
    )]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "direct")]
    method: BoundaryMethod,
    /// Instead of a file: boundary size of the initial segment with this many
    /// points (needs --z/--n), computed from the increment rule.
    #[arg(long)]
    segment_size: Option<u64>,
    #[command(flatten)]
    domain: DomainArgs,
    /// Write the boundary set here (point-set format). Ignored with --segment-size.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CompressKind {
    /// Centered fibers along a Z-type coordinate.
    Central,
    /// Zero-anchored fibers along an N-type coordinate.
    Downward,
    /// Initial-segment sections (pure Z sets only).
    Sections,
}

#[derive(Args)]
struct CompressArgs {
    #[arg(long)]
    input: PathBuf,
    /// Operator to apply; requires --coordinate.
    #[arg(long, value_enum, conflicts_with = "all", requires = "coordinate")]
    kind: Option<CompressKind>,
    /// 1-based coordinate the operator acts on.
    #[arg(long)]
    coordinate: Option<usize>,
    /// Compress in every coordinate (fixpoint).
    #[arg(long, conflicts_with = "coordinate")]
    all: bool,
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Compressed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    domain: DomainArgs,
    /// Check every size from 1 up to this.
    #[arg(long)]
    max_size: u64,
    #[arg(long, value_enum, default_value = "full")]
    mode: ModeArg,
    /// Box half-width: Z coordinates span [-R, R], N coordinates [0, R]
    /// (full mode only; default derives from each size).
    #[arg(long)]
    box_radius: Option<i64>,
    /// Enumeration budget per size (subsets or compositions).
    #[arg(long, default_value_t = OracleOptions::default().budget)]
    budget: u64,
    /// Keep at most this many minimizing witnesses per size.
    #[arg(long, default_value_t = OracleOptions::default().witness_cap)]
    witness_cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Also write each minimizing witness as a point-set file into this
    /// directory (created if needed); text records reference them by name.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    input: PathBuf,
    /// Write the SVG here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Grid pitch in pixels.
    #[arg(long, default_value_t = 24)]
    cell_size: u32,
    #[arg(long, default_value = "blue")]
    set_color: String,
    #[arg(long, default_value = "red")]
    boundary_color: String,
}

fn emit(output: Option<&Path>, content: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

fn read_set(path: &Path) -> Result<PointSet, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_point_set(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_order(args: &OrderArgs) -> Result<u8, String> {
    let sig = args.domain.sig()?;
    let points = enumerate(sig, args.count).map_err(|e| e.to_string())?;
    let out = match args.format {
        OrderFormat::Listing => {
            let mut out = String::new();
            for (i, p) in points.iter().enumerate() {
                out.push_str(&format!("{} {p}\n", i + 1));
            }
            out
        }
        OrderFormat::Points => {
            let set = PointSet::new(sig, points).map_err(|e| e.to_string())?;
            write_point_set(&set).map_err(|e| e.to_string())?
        }
    };
    emit(args.output.as_deref(), &out).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn cmd_boundary(args: &BoundaryArgs) -> Result<u8, String> {
    if let Some(n) = args.segment_size {
        let sig = args.domain.sig()?;
        let size = initial_segment_boundary_size(sig, n).map_err(|e| e.to_string())?;
        println!("{size}");
        return Ok(EXIT_OK);
    }
    let input = args
        .input
        .as_deref()
        .expect("clap enforces input xor segment-size");
    let set = read_set(input)?;
    let size = match args.method {
        BoundaryMethod::Direct => set.vertex_boundary().len() as u64,
        BoundaryMethod::Formula => boundary_via_projections(&set).map_err(|e| e.to_string())?,
    };
    println!("{size}");
    if let Some(path) = &args.output {
        let boundary = set.vertex_boundary();
        let text = write_point_set(&boundary).map_err(|e| e.to_string())?;
        emit(Some(path), &text).map_err(|e| e.to_string())?;
    }
    Ok(EXIT_OK)
}

fn cmd_compress(args: &CompressArgs) -> Result<u8, String> {
    let set = read_set(&args.input)?;
    let result = if args.all {
        centralize(&set)
    } else {
        let coordinate = args
            .coordinate
            .ok_or_else(|| "--coordinate (or --all) is required".to_string())?;
        if coordinate == 0 {
            return Err("coordinates are numbered from 1".to_string());
        }
        let index = coordinate - 1;
        let op = match args.kind {
            Some(CompressKind::Central) => Compression::Central(index),
            Some(CompressKind::Downward) => Compression::Downward(index),
            Some(CompressKind::Sections) => Compression::InitialSections(index),
            None => return compress_default(&set, index, args),
        };
        op.apply(&set).map_err(|e| e.to_string())?
    };
    finish_compress(&set, result, args)
}

/// No --kind given: apply the coordinate's type-appropriate operator.
fn compress_default(set: &PointSet, index: usize, args: &CompressArgs) -> Result<u8, String> {
    let result = compress_coordinate(set, index).map_err(|e| e.to_string())?;
    finish_compress(set, result, args)
}

fn finish_compress(before: &PointSet, after: PointSet, args: &CompressArgs) -> Result<u8, String> {
    eprintln!(
        "boundary before={} after={}",
        before.vertex_boundary().len(),
        after.vertex_boundary().len()
    );
    let text = write_point_set(&after).map_err(|e| e.to_string())?;
    emit(args.output.as_deref(), &text).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, String> {
    let sig = args.domain.sig()?;
    let opts = OracleOptions {
        budget: args.budget,
        witness_cap: args.witness_cap,
    };
    let mode = match args.mode {
        ModeArg::Full => SearchMode::Full,
        ModeArg::Compressed => SearchMode::CompressedOnly,
    };
    let box_override = args.box_radius.map(|r| SearchBox::symmetric(sig, r));
    let entries = verify_segment_minimality(sig, args.max_size, mode, box_override.as_ref(), &opts)
        .map_err(|e| e.to_string())?;

    let mut out = String::new();
    let mut falsified = false;
    let mut budget_hit = false;
    for entry in &entries {
        match &entry.outcome {
            Ok(report) => {
                falsified |= report.is_falsification();
                let witness_files = match &args.witness_dir {
                    Some(dir) => Some(write_witnesses(dir, report).map_err(|e| e.to_string())?),
                    None => None,
                };
                match args.format {
                    FormatArg::Text => {
                        out.push_str(&report.to_text_line());
                        if let Some(files) = witness_files {
                            out.push_str(&format!(" witness_files={}", files.join(",")));
                        }
                        out.push('\n');
                    }
                    FormatArg::Structured => {
                        out.push_str(&report.to_json().to_string());
                        out.push('\n');
                    }
                }
            }
            Err(err) => {
                if matches!(err, Error::BudgetExceeded { .. }) {
                    budget_hit = true;
                }
                match args.format {
                    FormatArg::Text => {
                        out.push_str(&format!("n={} status=ERROR message={err}\n", entry.n));
                    }
                    FormatArg::Structured => {
                        out.push_str(&serde_json_line(entry.n, &err.to_string()));
                        out.push('\n');
                    }
                }
            }
        }
    }
    emit(args.output.as_deref(), &out).map_err(|e| e.to_string())?;
    if falsified {
        Ok(EXIT_FALSIFIED)
    } else if budget_hit {
        Ok(EXIT_BUDGET)
    } else {
        Ok(EXIT_OK)
    }
}

fn write_witnesses(
    dir: &Path,
    report: &isoperim::VerificationReport,
) -> std::io::Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let mut names = Vec::with_capacity(report.witnesses.len());
    for (i, witness) in report.witnesses.iter().enumerate() {
        let name = format!(
            "z{}n{}-size{}-w{}.txt",
            report.sig.z(),
            report.sig.n(),
            report.n,
            i
        );
        let text = write_point_set(witness)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e.to_string()))?;
        fs::write(dir.join(&name), text)?;
        names.push(name);
    }
    Ok(names)
}

fn serde_json_line(n: u64, message: &str) -> String {
    // Hand-rolled to keep serde_json out of this crate's dependencies.
    format!(
        "{{\"n\":{n},\"status\":\"ERROR\",\"message\":\"{}\"}}",
        message.replace('\\', "\\\\").replace('"', "\\\"")
    )
}

fn cmd_render(args: &RenderArgs) -> Result<u8, String> {
    let set = read_set(&args.input)?;
    let style = RenderStyle {
        cell_px: args.cell_size,
        set_color: args.set_color.clone(),
        boundary_color: args.boundary_color.clone(),
    };
    let svg = render_svg(&set, &style).map_err(|e| e.to_string())?;
    emit(args.output.as_deref(), &svg).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help/--version land here too; they are not failures.
            let failure = err.use_stderr();
            let _ = err.print();
            return ExitCode::from(if failure { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let result = match &cli.command {
        Command::Order(args) => cmd_order(args),
        Command::Boundary(args) => cmd_boundary(args),
        Command::Compress(args) => cmd_compress(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Render(args) => cmd_render(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
