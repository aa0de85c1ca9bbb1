//! Command-line surface: kernel dumps, operator application, discrete
//! Poisson solves, heat evolution, convergence studies, and the named
//! figure presets.
//!
//! Exit codes: 0 success (all pass flags set), 1 usage or I/O, 2 domain
//! error, 3 convergence-study failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::convergence::{rate_study, rate_study_2d, restrict_1d, restrict_2d, StudyConfig};
use crate::error::{Error, Result};
use crate::gridops::{
    apply_frint_1d, apply_frint_2d, apply_frlap_1d, apply_frlap_2d, heat_apply_1d, heat_apply_2d,
    Grid1d, Grid2d, HeatConfig, OperatorConfig, Sampler1d, Sampler2d, SupportHint, TailMode,
    Window1d, Window2d,
};
use crate::kernels1d::{KernelSource, KernelTable};
use crate::kernels2d::{EntrySource, Kernel2DTable};
use crate::order::FracOrder;
use crate::reference::{pair_by_name, RefDomain, SolutionPair};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "FRACLAP_OUT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "fraclap",
    version,
    about = "Fractional powers of the discrete Laplacian on 1D/2D lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct OutputOpts {
    /// Output file; stdout when omitted. Relative paths resolve against
    /// $FRACLAP_OUT_DIR when that is set.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Suppress the timestamp header line (byte-reproducible output).
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Args, Debug)]
struct OperatorOpts {
    /// Catalogued pair name: gaussian | algebraic | ball-1s | ball-2s | riesz2d.
    #[arg(long)]
    pair: Option<String>,
    /// Input grid CSV (header block may declare `# hint: ...`).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    s: f64,
    #[arg(long)]
    h: f64,
    /// Truncation radius of the exact-kernel sum.
    #[arg(long, default_value_t = 1000)]
    n: i64,
    /// Index range `a:b` per axis.
    #[arg(long, default_value = "-20:20", allow_hyphen_values = true)]
    range: String,
    #[arg(long, default_value_t = 1)]
    dim: u8,
    /// Riesz exponent (riesz2d only).
    #[arg(long)]
    alpha: Option<f64>,
    /// `half` shifts the mesh by h/2 along every axis.
    #[arg(long)]
    offset: Option<String>,
    /// zero | ignore | sampled:M
    #[arg(long, default_value = "ignore")]
    tail: String,
    /// closed | quadrature | asymptotic | hybrid:C
    #[arg(long)]
    kernel: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump a kernel table.
    Kernel {
        /// Signed order: positive = Laplacian power, negative = integral power.
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, default_value_t = 1)]
        dim: u8,
        /// 1D table radius.
        #[arg(long)]
        n: Option<i64>,
        /// 2D table radius.
        #[arg(long)]
        radius: Option<i64>,
        #[arg(long)]
        crossover: Option<i64>,
        /// closed | quadrature | asymptotic | hybrid:C
        #[arg(long, default_value = "closed")]
        source: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Apply `(-Δ_h)^s` to a pair's `u` (or an input grid); reference and
    /// error columns are attached when the pair supplies them.
    Apply {
        #[command(flatten)]
        op: OperatorOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Solve the discrete Poisson problem: apply `(-Δ_h)^{-s}` to `f`.
    Solve {
        #[command(flatten)]
        op: OperatorOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Evolve the semidiscrete heat semigroup.
    Heat {
        #[arg(long)]
        t: f64,
        /// Kernel truncation; chosen automatically when omitted.
        #[arg(long)]
        k: Option<i64>,
        #[command(flatten)]
        op: OperatorOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Refinement study with a fitted log-log rate.
    Converge {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        s: f64,
        /// Comma-separated strictly decreasing mesh sizes.
        #[arg(long, default_value = "0.2,0.1,0.05,0.025")]
        h_list: String,
        #[arg(long, default_value_t = 0)]
        level: u8,
        #[arg(long, default_value_t = 1)]
        dim: u8,
        #[arg(long)]
        alpha: Option<f64>,
        /// Theoretical exponent; defaults to 1-2s.
        #[arg(long)]
        exponent: Option<f64>,
        #[arg(long, default_value_t = 2.5)]
        window: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Emit one of the named figure presets (1-13).
    Figure {
        #[arg(long)]
        id: u8,
        /// Output directory; defaults to $FRACLAP_OUT_DIR or the cwd.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        no_timestamp: bool,
    },
}

/// Runs the CLI against parsed arguments; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fraclap: {e}");
            match e {
                Error::Domain(_)
                | Error::Parameter(_)
                | Error::Convergence(_)
                | Error::Quadrature { .. }
                | Error::Truncation(_)
                | Error::Config(_) => 2,
                Error::Degenerate(_) => 3,
                Error::Io(_) | Error::Parse(_) => 1,
            }
        }
    }
}

/// Convenience entry point for `main`.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            // Help/version requests are successes, not usage errors.
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            if benign {
                0
            } else {
                1
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Kernel {
            s,
            dim,
            n,
            radius,
            crossover,
            source,
            output,
        } => cmd_kernel(s, dim, n, radius, crossover, &source, &output),
        Command::Apply { op, output } => cmd_apply_or_solve(&op, &output, false),
        Command::Solve { op, output } => cmd_apply_or_solve(&op, &output, true),
        Command::Heat { t, k, op, output } => cmd_heat(t, k, &op, &output),
        Command::Converge {
            pair,
            s,
            h_list,
            level,
            dim,
            alpha,
            exponent,
            window,
            output,
        } => cmd_converge(
            &pair, s, &h_list, level, dim, alpha, exponent, window, &output,
        ),
        Command::Figure {
            id,
            out_dir,
            no_timestamp,
        } => cmd_figure(id, out_dir, no_timestamp),
    }
}

fn parse_range(spec: &str) -> Result<(i64, i64)> {
    let (a, b) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("range must look like a:b, got '{spec}'")))?;
    let lo: i64 = a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad range bound '{a}'")))?;
    let hi: i64 = b
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad range bound '{b}'")))?;
    Ok((lo, hi))
}

fn parse_tail(spec: &str) -> Result<TailMode> {
    match spec {
        "zero" => Ok(TailMode::Zero),
        "ignore" => Ok(TailMode::Ignore),
        other => {
            if let Some(m) = other.strip_prefix("sampled:") {
                let m: i64 = m
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad sampled radius '{m}'")))?;
                Ok(TailMode::Sampled(m))
            } else {
                Err(Error::Parse(format!(
                    "unknown tail mode '{other}' (zero | ignore | sampled:M)"
                )))
            }
        }
    }
}

fn parse_kernel_source(spec: &str) -> Result<KernelSource> {
    match spec {
        "closed" => Ok(KernelSource::ClosedForm),
        "quadrature" => Ok(KernelSource::Quadrature),
        "asymptotic" => Ok(KernelSource::Asymptotic),
        other => {
            if let Some(c) = other.strip_prefix("hybrid:") {
                let c: i64 = c
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad crossover '{c}'")))?;
                Ok(KernelSource::Hybrid(c))
            } else {
                Err(Error::Parse(format!(
                    "unknown kernel source '{other}' (closed | quadrature | asymptotic | hybrid:C)"
                )))
            }
        }
    }
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match path {
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
        Some(p) => {
            let p = resolve_out_path(p);
            Ok(Box::new(BufWriter::new(File::create(p)?)))
        }
    }
}

fn resolve_out_path(p: &Path) -> PathBuf {
    if p.is_relative() {
        if let Ok(dir) = std::env::var(OUT_DIR_ENV) {
            return PathBuf::from(dir).join(p);
        }
    }
    p.to_path_buf()
}

fn write_stamp(out: &mut dyn Write, opts: &OutputOpts) -> Result<()> {
    if opts.format == Format::Csv && !opts.no_timestamp {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        writeln!(
            out,
            "# fraclap {} generated-unix {now}",
            env!("CARGO_PKG_VERSION")
        )?;
    }
    Ok(())
}

fn cmd_kernel(
    s: f64,
    dim: u8,
    n: Option<i64>,
    radius: Option<i64>,
    crossover: Option<i64>,
    source: &str,
    output: &OutputOpts,
) -> Result<i32> {
    let order = FracOrder::new(s)?;
    let mut out = open_out(&output.out)?;
    write_stamp(out.as_mut(), output)?;
    match dim {
        1 => {
            let n = n.unwrap_or(10);
            let table = KernelTable::build(order, n, parse_kernel_source(source)?)?;
            match output.format {
                Format::Csv => {
                    writeln!(out, "m,value,main_term,difference")?;
                    for m in 0..=n {
                        let v = table.value(m);
                        match table.asymptotic_main_term(m) {
                            Some(main) => {
                                writeln!(out, "{m},{v},{main},{}", v - main)?;
                            }
                            None => writeln!(out, "{m},{v},,")?,
                        }
                    }
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Dump {
                        order: f64,
                        radius: i64,
                        values: Vec<f64>,
                        main_terms: Vec<Option<f64>>,
                    }
                    let dump = Dump {
                        order: s,
                        radius: n,
                        values: (0..=n).map(|m| table.value(m)).collect(),
                        main_terms: (0..=n).map(|m| table.asymptotic_main_term(m)).collect(),
                    };
                    serde_json::to_writer_pretty(&mut out, &dump)
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    writeln!(out)?;
                }
            }
        }
        2 => {
            let r = radius.unwrap_or(5);
            let table = match crossover {
                Some(c) => Kernel2DTable::build_hybrid(order, r, c)?,
                None => Kernel2DTable::build_hybrid(order, r, r.min(12))?,
            };
            let tag = |src: EntrySource| match src {
                EntrySource::Center => "center",
                EntrySource::Quadrature => "quadrature",
                EntrySource::Asymptotic => "asymptotic",
            };
            match output.format {
                Format::Csv => {
                    writeln!(out, "m1,m2,value,source")?;
                    for m1 in 0..=r {
                        for m2 in 0..=m1 {
                            writeln!(
                                out,
                                "{m1},{m2},{},{}",
                                table.value(m1, m2),
                                tag(table.source(m1, m2))
                            )?;
                        }
                    }
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Entry {
                        m1: i64,
                        m2: i64,
                        value: f64,
                        source: String,
                    }
                    let entries: Vec<Entry> = (0..=r)
                        .flat_map(|m1| (0..=m1).map(move |m2| (m1, m2)))
                        .map(|(m1, m2)| Entry {
                            m1,
                            m2,
                            value: table.value(m1, m2),
                            source: tag(table.source(m1, m2)).into(),
                        })
                        .collect();
                    serde_json::to_writer_pretty(&mut out, &entries)
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    writeln!(out)?;
                }
            }
        }
        d => return Err(Error::Domain(format!("dimension must be 1 or 2, got {d}"))),
    }
    out.flush()?;
    Ok(0)
}

/// Parses an input grid CSV: optional `# hint: compact R | decay E | none`
/// header lines, then `index,value` rows. Values outside the file are zero
/// unless a decay hint says otherwise.
fn parse_grid_csv(path: &Path) -> Result<Sampler1d> {
    let text = std::fs::read_to_string(path)?;
    let mut hint = SupportHint::None;
    let mut pairs: Vec<(i64, f64)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(h) = rest.strip_prefix("hint:") {
                let h = h.trim();
                hint = if let Some(r) = h.strip_prefix("compact") {
                    SupportHint::Compact {
                        radius: r.trim().parse().map_err(|_| {
                            Error::Parse(format!("bad compact radius in hint: '{h}'"))
                        })?,
                    }
                } else if let Some(e) = h.strip_prefix("decay") {
                    SupportHint::Decay {
                        exponent: e.trim().parse().map_err(|_| {
                            Error::Parse(format!("bad decay exponent in hint: '{h}'"))
                        })?,
                    }
                } else {
                    SupportHint::None
                };
            }
            continue;
        }
        if line.chars().next().is_some_and(|c| c.is_alphabetic()) {
            continue; // header row
        }
        let mut fields = line.split(',');
        let j: i64 = fields
            .next()
            .unwrap_or_default()
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad index", lineno + 1)))?;
        let v: f64 = fields
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing value", lineno + 1)))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad value", lineno + 1)))?;
        pairs.push((j, v));
    }
    if pairs.is_empty() {
        return Err(Error::Parse("input grid holds no samples".into()));
    }
    let lo = pairs.iter().map(|p| p.0).min().unwrap();
    let hi = pairs.iter().map(|p| p.0).max().unwrap();
    let mut values = vec![0.0; (hi - lo + 1) as usize];
    for (j, v) in pairs {
        values[(j - lo) as usize] = v;
    }
    let hint = match hint {
        SupportHint::None => SupportHint::Compact {
            radius: lo.abs().max(hi.abs()),
        },
        other => other,
    };
    Ok(Sampler1d::new(hint, move |j| {
        if j >= lo && j <= hi {
            values[(j - lo) as usize]
        } else {
            0.0
        }
    }))
}

struct PairColumns {
    reference: Vec<Option<f64>>,
    error: Vec<Option<f64>>,
}

fn reference_columns_1d(grid: &Grid1d, pair: &SolutionPair, solve: bool) -> PairColumns {
    let mut reference = Vec::with_capacity(grid.values.len());
    let mut error = Vec::with_capacity(grid.values.len());
    for (j, v) in grid.iter() {
        let x = grid.window.x(j);
        let want = if solve {
            Some(pair.u_1d(x))
        } else {
            match pair.f_domain {
                RefDomain::Everywhere => Some(pair.f_1d(x)),
                RefDomain::OriginOnly => (x == 0.0).then(|| pair.f_1d(0.0)),
            }
        };
        reference.push(want);
        error.push(want.map(|r| v - r));
    }
    PairColumns { reference, error }
}

fn write_grid1d(
    out: &mut dyn Write,
    opts: &OutputOpts,
    grid: &Grid1d,
    cols: Option<&PairColumns>,
) -> Result<()> {
    match opts.format {
        Format::Csv => {
            if cols.is_some() {
                writeln!(out, "j,x,value,reference,error")?;
            } else {
                writeln!(out, "j,x,value")?;
            }
            for (i, (j, v)) in grid.iter().enumerate() {
                let x = grid.window.x(j);
                match cols {
                    Some(c) => {
                        let r = c.reference[i].map(|v| v.to_string()).unwrap_or_default();
                        let e = c.error[i].map(|v| v.to_string()).unwrap_or_default();
                        writeln!(out, "{j},{x},{v},{r},{e}")?;
                    }
                    None => writeln!(out, "{j},{x},{v}")?,
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Dump<'a> {
                window: &'a Window1d,
                values: &'a [f64],
                #[serde(skip_serializing_if = "Option::is_none")]
                reference: Option<&'a [Option<f64>]>,
                #[serde(skip_serializing_if = "Option::is_none")]
                error: Option<&'a [Option<f64>]>,
            }
            let dump = Dump {
                window: &grid.window,
                values: &grid.values,
                reference: cols.map(|c| c.reference.as_slice()),
                error: cols.map(|c| c.error.as_slice()),
            };
            serde_json::to_writer_pretty(&mut *out, &dump)
                .map_err(|e| Error::Parse(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn write_grid2d(
    out: &mut dyn Write,
    opts: &OutputOpts,
    grid: &Grid2d,
    pair: Option<(&SolutionPair, bool)>,
) -> Result<()> {
    match opts.format {
        Format::Csv => {
            if pair.is_some() {
                writeln!(out, "j1,j2,x,y,value,reference,error")?;
            } else {
                writeln!(out, "j1,j2,x,y,value")?;
            }
            for (j1, j2, v) in grid.iter() {
                let (x, y) = (grid.window.x(j1), grid.window.y(j2));
                match pair {
                    Some((p, solve)) => {
                        let r = if solve {
                            p.u_at(x.hypot(y))
                        } else {
                            p.f_at(x.hypot(y))
                        };
                        writeln!(out, "{j1},{j2},{x},{y},{v},{r},{}", v - r)?;
                    }
                    None => writeln!(out, "{j1},{j2},{x},{y},{v}")?,
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Dump<'a> {
                window: &'a Window2d,
                values: &'a [f64],
            }
            serde_json::to_writer_pretty(
                &mut *out,
                &Dump {
                    window: &grid.window,
                    values: &grid.values,
                },
            )
            .map_err(|e| Error::Parse(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn build_window_1d(op: &OperatorOpts) -> Result<Window1d> {
    let (lo, hi) = parse_range(&op.range)?;
    let mut w = Window1d::new(op.h, lo, hi)?;
    if matches!(op.offset.as_deref(), Some("half")) {
        w = w.with_offset();
    }
    Ok(w)
}

fn build_window_2d(op: &OperatorOpts) -> Result<Window2d> {
    let (lo, hi) = parse_range(&op.range)?;
    let mut w = Window2d::new(op.h, (lo, hi), (lo, hi))?;
    if matches!(op.offset.as_deref(), Some("half")) {
        w = w.with_offset();
    }
    Ok(w)
}

fn sampler_for_pair_1d(pair: &SolutionPair, w: &Window1d, solve: bool) -> Sampler1d {
    let p = pair.clone();
    if solve {
        let hint = match pair.f_compact_x {
            Some(rx) => SupportHint::Compact {
                radius: (rx / w.h).ceil() as i64 + 1,
            },
            None => SupportHint::None,
        };
        restrict_1d(move |x| p.f_1d(x), w, hint)
    } else {
        let hint = match (pair.u_compact_x, pair.u_decay_exponent) {
            (Some(rx), _) => SupportHint::Compact {
                radius: (rx / w.h).ceil() as i64 + 1,
            },
            (None, Some(e)) => SupportHint::Decay { exponent: e },
            _ => SupportHint::None,
        };
        restrict_1d(move |x| p.u_1d(x), w, hint)
    }
}

fn cmd_apply_or_solve(op: &OperatorOpts, output: &OutputOpts, solve: bool) -> Result<i32> {
    let order = if solve {
        FracOrder::integral(op.s)?
    } else {
        FracOrder::laplacian(op.s)?
    };
    let tail = parse_tail(&op.tail)?;
    let mut out = open_out(&output.out)?;
    write_stamp(out.as_mut(), output)?;
    match op.dim {
        1 => {
            let w = build_window_1d(op)?;
            let kernel = match &op.kernel {
                Some(k) => parse_kernel_source(k)?,
                None => KernelSource::ClosedForm,
            };
            let cfg = OperatorConfig::new(order, op.n)
                .with_tail(tail)
                .with_kernel(kernel);
            let (grid, cols) = if let Some(name) = &op.pair {
                let pair = pair_by_name(name, op.s, 1, op.alpha)?;
                let u = sampler_for_pair_1d(&pair, &w, solve);
                let grid = if solve {
                    apply_frint_1d(&u, &w, &cfg)?
                } else {
                    apply_frlap_1d(&u, &w, &cfg)?
                };
                let cols = reference_columns_1d(&grid, &pair, solve);
                (grid, Some(cols))
            } else if let Some(path) = &op.input {
                let u = parse_grid_csv(path)?;
                let grid = if solve {
                    apply_frint_1d(&u, &w, &cfg)?
                } else {
                    apply_frlap_1d(&u, &w, &cfg)?
                };
                (grid, None)
            } else {
                return Err(Error::Config("provide --pair or --input".into()));
            };
            write_grid1d(out.as_mut(), output, &grid, cols.as_ref())?;
        }
        2 => {
            let w = build_window_2d(op)?;
            let kernel = match &op.kernel {
                Some(k) => parse_kernel_source(k)?,
                None => KernelSource::Asymptotic,
            };
            let cfg = OperatorConfig::new(order, op.n)
                .with_tail(tail)
                .with_kernel(kernel);
            let name = op
                .pair
                .as_ref()
                .ok_or_else(|| Error::Config("2D runs take --pair".into()))?;
            let pair = pair_by_name(name, op.s, 2, op.alpha)?;
            let p = pair.clone();
            let reach = op.n + w.max_abs_index() + 1;
            let sampler = if solve {
                let hint = match pair.f_compact_x {
                    Some(rx) => SupportHint::Compact {
                        radius: (rx / w.h).ceil() as i64 + 1,
                    },
                    None => SupportHint::None,
                };
                Sampler2d::memoized_square(reach, hint, move |j1, j2| {
                    p.f_at(w.x(j1).hypot(w.y(j2)))
                })
            } else {
                let hint = match pair.u_decay_exponent {
                    Some(e) => SupportHint::Decay { exponent: e },
                    None => SupportHint::None,
                };
                Sampler2d::memoized_square(reach, hint, move |j1, j2| {
                    p.u_at(w.x(j1).hypot(w.y(j2)))
                })
            };
            let grid = if solve {
                apply_frint_2d(&sampler, &w, &cfg)?
            } else {
                apply_frlap_2d(&sampler, &w, &cfg)?
            };
            write_grid2d(out.as_mut(), output, &grid, Some((&pair, solve)))?;
        }
        d => return Err(Error::Domain(format!("dimension must be 1 or 2, got {d}"))),
    }
    out.flush()?;
    Ok(0)
}

fn cmd_heat(t: f64, k: Option<i64>, op: &OperatorOpts, output: &OutputOpts) -> Result<i32> {
    let hc = match k {
        Some(k) => HeatConfig::new(t, k)?,
        None => HeatConfig::auto(t, op.h)?,
    };
    let mut out = open_out(&output.out)?;
    write_stamp(out.as_mut(), output)?;
    match op.dim {
        1 => {
            let w = build_window_1d(op)?;
            let u = if let Some(name) = &op.pair {
                let pair = pair_by_name(name, op.s, 1, op.alpha)?;
                sampler_for_pair_1d(&pair, &w, false)
            } else if let Some(path) = &op.input {
                parse_grid_csv(path)?
            } else {
                return Err(Error::Config("provide --pair or --input".into()));
            };
            let grid = heat_apply_1d(&u, &w, &hc)?;
            write_grid1d(out.as_mut(), output, &grid, None)?;
        }
        2 => {
            let w = build_window_2d(op)?;
            let name = op
                .pair
                .as_ref()
                .ok_or_else(|| Error::Config("2D heat runs take --pair".into()))?;
            let pair = pair_by_name(name, op.s, 2, op.alpha)?;
            let p = pair.clone();
            let u = restrict_2d(move |x, y| p.u_at(x.hypot(y)), &w, SupportHint::None);
            let grid = heat_apply_2d(&u, &w, &hc)?;
            write_grid2d(out.as_mut(), output, &grid, None)?;
        }
        d => return Err(Error::Domain(format!("dimension must be 1 or 2, got {d}"))),
    }
    out.flush()?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_converge(
    pair_name: &str,
    s: f64,
    h_list: &str,
    level: u8,
    dim: u8,
    alpha: Option<f64>,
    exponent: Option<f64>,
    window: f64,
    output: &OutputOpts,
) -> Result<i32> {
    let h_list: Vec<f64> = h_list
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad mesh size '{t}'")))
        })
        .collect::<Result<_>>()?;
    let pair = pair_by_name(pair_name, s, dim, alpha)?;
    let mut out = open_out(&output.out)?;
    write_stamp(out.as_mut(), output)?;

    let report = if dim == 2 {
        // Descriptive only; the kernel radius is kept moderate because the
        // work grows with (radius/h)²·(window/h)².
        rate_study_2d(&pair, &h_list, window, 10.0, KernelSource::Asymptotic)?
    } else {
        let study = StudyConfig {
            window_x: window,
            ..StudyConfig::default()
        };
        let theoretical = exponent.unwrap_or((1.0 - 2.0 * s).max(0.0));
        rate_study(&pair, level, &h_list, &study, theoretical)?
    };

    match output.format {
        Format::Csv => report.write_csv(out.as_mut())?,
        Format::Json => {
            serde_json::to_writer_pretty(out.as_mut(), &report)
                .map_err(|e| Error::Parse(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;

    if report.degenerate {
        eprintln!("fraclap: degenerate study: every error vanished, no rate to fit");
        return Ok(3);
    }
    match report.pass {
        Some(true) | None => Ok(0),
        Some(false) => {
            eprintln!(
                "fraclap: rate study failed: slope {:?} below {} - {}",
                report.fitted_slope, report.theoretical_exponent, report.slack
            );
            Ok(3)
        }
    }
}

/// Named figure presets, 1-13.
fn figure_spec(id: u8) -> Result<OperatorOpts> {
    let mk =
        |pair: &str, s: f64, n: i64, range: &str, dim: u8, alpha: Option<f64>, offset: bool| {
            OperatorOpts {
                pair: Some(pair.into()),
                input: None,
                s,
                h: 0.1,
                n,
                range: range.into(),
                dim,
                alpha,
                offset: offset.then(|| "half".into()),
                tail: "ignore".into(),
                kernel: None,
            }
        };
    Ok(match id {
        1 => mk("gaussian", 0.25, 1000, "-20:20", 1, None, false),
        2 => mk("algebraic", 0.4, 1000, "-50:50", 1, None, false),
        3 => mk("algebraic", 0.4, 1000, "-50:50", 1, None, false),
        4 => mk("ball-1s", 0.25, 1000, "-20:20", 1, None, false),
        5 => mk("ball-1s", 0.25, 20, "-20:20", 1, None, false),
        6 => mk("ball-2s", 0.25, 1000, "-20:20", 1, None, false),
        7 => mk("ball-2s", 0.25, 20, "-20:20", 1, None, false),
        8 => mk("ball-1s", 0.25, 500, "-20:20", 2, None, false),
        9 => mk("ball-1s", 0.25, 40, "-20:20", 2, None, false),
        10 => mk("ball-2s", 0.25, 500, "-20:20", 2, None, false),
        11 => mk("ball-2s", 0.25, 40, "-20:20", 2, None, false),
        12 => mk("riesz2d", 0.3, 500, "-20:20", 2, Some(0.5), true),
        13 => mk("riesz2d", 0.3, 500, "-20:20", 2, Some(0.5), true),
        other => {
            return Err(Error::Config(format!(
                "figure id must lie in 1..=13, got {other}"
            )))
        }
    })
}

/// Whether a figure preset is a Poisson solve (integral power) run.
fn figure_is_solve(id: u8) -> bool {
    matches!(id, 3 | 5 | 7 | 9 | 11 | 13)
}

fn cmd_figure(id: u8, out_dir: Option<PathBuf>, no_timestamp: bool) -> Result<i32> {
    let op = figure_spec(id)?;
    let dir = out_dir
        .or_else(|| std::env::var(OUT_DIR_ENV).ok().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;
    let output = OutputOpts {
        out: Some(dir.join(format!("figure{id:02}.csv"))),
        format: Format::Csv,
        no_timestamp,
    };
    cmd_apply_or_solve(&op, &output, figure_is_solve(id))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_and_mode_parsing() {
        assert_eq!(parse_range("-20:20").unwrap(), (-20, 20));
        assert_eq!(parse_range(" 3 : 7 ").unwrap(), (3, 7));
        assert!(parse_range("3-7").is_err());
        assert_eq!(parse_tail("sampled:500").unwrap(), TailMode::Sampled(500));
        assert!(parse_tail("sometimes").is_err());
        assert_eq!(
            parse_kernel_source("hybrid:12").unwrap(),
            KernelSource::Hybrid(12)
        );
        assert!(parse_kernel_source("magic").is_err());
    }

    #[test]
    fn figure_table_is_complete() {
        for id in 1..=13u8 {
            assert!(figure_spec(id).is_ok());
        }
        assert!(figure_spec(0).is_err());
        assert!(figure_spec(14).is_err());
    }
}
