//! Command line front end: family construction, exact potential and
//! polynomial tables, spectra with a finite-difference cross check, ladder
//! action tables, the verification suite, and JSON/CSV export.
//!
//! Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use xhermite::families::{
    self, eop_first, eop_second, potential_v_minus, pseudo_hermite_checked, spectrum_first_order,
    Ham,
};
use xhermite::jsonio::{potential_samples, FamilyExport};
use xhermite::numerics::{fd_spectrum, FdGrid, QuadratureSpec};
use xhermite::operators::{hamiltonian_for, ladder_action, ladder_chain, pha_polys, LadderOp,
    LadderOutcome};
use xhermite::poly::rint;
use xhermite::verify::{run_default_grid, run_family_suite, run_first_order_suite, SuiteReport,
    VerifyOptions};
use xhermite::{Error, ExtendedFamily, Potential, PotentialLayout};

#[derive(Parser)]
#[command(name = "xhermite", version, about = "Exact toolkit for rationally extended oscillators and their exceptional polynomial families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for stdout-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Directory for files written by `export`.
    #[arg(long, global = true, env = "XHERMITE_OUT_DIR", default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family and emit its exact data bundle.
    Family(FamilyArgs),
    /// Print the extended potential exactly, or sample it.
    Potential(SeedArgs),
    /// Tabulate the orthogonal polynomial family with its degree gaps.
    Polys(PolysArgs),
    /// Exact spectrum side by side with the finite-difference recovery.
    Spectrum(SpectrumArgs),
    /// Apply a ladder operator across the spectrum and tabulate outcomes.
    Ladder(LadderArgs),
    /// Run the verification suite; nonzero exit on any failed check.
    Verify(VerifyArgs),
    /// Write the JSON/CSV bundle for a parameter grid and re-validate it.
    Export(ExportArgs),
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    m1: u32,
    #[arg(long)]
    m2: u32,
    /// Levels of the extended spectrum to include.
    #[arg(long, default_value_t = 8)]
    levels: usize,
    /// Highest polynomial index in the exported degree table.
    #[arg(long, default_value_t = 16)]
    max_degree: u32,
}

/// Either a two-seed family (--m1 --m2) or the one-seed extension (--m).
#[derive(Args)]
struct SeedArgs {
    #[arg(long)]
    m1: Option<u32>,
    #[arg(long)]
    m2: Option<u32>,
    /// Even seed degree for the one-seed extension.
    #[arg(long, conflicts_with_all = ["m1", "m2"])]
    m: Option<i64>,
    /// Half width of the sampling window (csv output).
    #[arg(long, default_value_t = 6.0)]
    half_width: f64,
    /// Sample count for csv output.
    #[arg(long, default_value_t = 241)]
    samples: usize,
}

#[derive(Args)]
struct PolysArgs {
    #[arg(long)]
    m1: Option<u32>,
    #[arg(long)]
    m2: Option<u32>,
    #[arg(long, conflicts_with_all = ["m1", "m2"])]
    m: Option<i64>,
    /// Highest polynomial index to tabulate.
    #[arg(long, default_value_t = 12)]
    max_n: u32,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    m1: Option<u32>,
    #[arg(long)]
    m2: Option<u32>,
    #[arg(long, conflicts_with_all = ["m1", "m2"])]
    m: Option<i64>,
    /// Channel of the factorization triple (two-seed mode).
    #[arg(long, value_enum, default_value_t = Channel::H2)]
    channel: Channel,
    #[arg(long, default_value_t = 6)]
    levels: usize,
    /// Skip the finite-difference column.
    #[arg(long)]
    no_fd: bool,
    /// Finite-difference half width.
    #[arg(long, default_value_t = 8.0)]
    half_width: f64,
    /// Finite-difference subinterval count.
    #[arg(long, default_value_t = 2000)]
    points: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Channel {
    H1,
    Mid,
    H2,
}

impl Channel {
    fn ham(self) -> Ham {
        match self {
            Channel::H1 => Ham::H1,
            Channel::Mid => Ham::Mid,
            Channel::H2 => Ham::H2,
        }
    }
}

#[derive(Args)]
struct LadderArgs {
    #[arg(long)]
    m1: u32,
    #[arg(long)]
    m2: u32,
    /// Which ladder operator to apply.
    #[arg(long, value_enum, default_value_t = OpChoice::C)]
    op: OpChoice,
    /// Highest tower level to include.
    #[arg(long, default_value_t = 8)]
    max_nu: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpChoice {
    B,
    BDagger,
    C,
    CDagger,
}

impl OpChoice {
    fn op(self) -> LadderOp {
        match self {
            OpChoice::B => LadderOp::B,
            OpChoice::BDagger => LadderOp::BDagger,
            OpChoice::C => LadderOp::C,
            OpChoice::CDagger => LadderOp::CDagger,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    m1: Option<u32>,
    #[arg(long)]
    m2: Option<u32>,
    /// One-seed extension to verify instead of a two-seed family.
    #[arg(long, conflicts_with_all = ["m1", "m2"])]
    m: Option<i64>,
    /// Highest index for differential-equation residuals.
    #[arg(long, default_value_t = 20)]
    max_n: u32,
    /// Highest tower level for ladder checks.
    #[arg(long, default_value_t = 12)]
    max_nu: i64,
    /// Exact checks only; skip quadrature and finite differences.
    #[arg(long)]
    skip_numerics: bool,
    /// Quadrature window half width.
    #[arg(long, default_value_t = 9.0)]
    quad_half_width: f64,
    /// Quadrature node count (at least 64).
    #[arg(long, default_value_t = 768)]
    quad_nodes: usize,
    /// Finite-difference window half width.
    #[arg(long, default_value_t = 8.0)]
    fd_half_width: f64,
    /// Finite-difference subinterval count (at least 400).
    #[arg(long, default_value_t = 2000)]
    fd_points: usize,
    /// Pass tolerance for the finite-difference spectrum checks.
    #[arg(long, default_value_t = 1e-3)]
    fd_tol: f64,
    /// Corrupt one fixture expectation to prove the harness can fail.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// Restrict the export to one family instead of the default grid.
    #[arg(long, requires = "m2")]
    m1: Option<u32>,
    #[arg(long, requires = "m1")]
    m2: Option<u32>,
    #[arg(long, default_value_t = 8)]
    levels: usize,
    #[arg(long, default_value_t = 16)]
    max_degree: u32,
    /// Sampling half width for the potential CSV.
    #[arg(long, default_value_t = 6.0)]
    half_width: f64,
    #[arg(long, default_value_t = 241)]
    samples: usize,
}

/// Failure category, mapped onto the exit-code contract.
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_)
            | Error::InadmissibleNu { .. }
            | Error::DegreeGap { .. }
            | Error::GridTooCoarse { .. }
            | Error::TooManyLevels { .. }
            | Error::NonDecaying { .. } => CliError::Usage(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    // Die quietly when the reader of a pipe goes away (`xhermite ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Family(args) => cmd_family(args, cli.format),
        Command::Potential(args) => cmd_potential(args, cli.format),
        Command::Polys(args) => cmd_polys(args, cli.format),
        Command::Spectrum(args) => cmd_spectrum(args, cli.format),
        Command::Ladder(args) => cmd_ladder(args, cli.format),
        Command::Verify(args) => cmd_verify(args, cli.format),
        Command::Export(args) => cmd_export(args, &cli.out_dir),
    }
}

fn two_seed(m1: Option<u32>, m2: Option<u32>) -> Result<Option<ExtendedFamily>, CliError> {
    match (m1, m2) {
        (Some(a), Some(b)) => Ok(Some(ExtendedFamily::from_indices(a, b)?)),
        (None, None) => Ok(None),
        _ => Err(usage("--m1 and --m2 must be given together")),
    }
}

fn cmd_family(args: FamilyArgs, format: Format) -> Result<bool, CliError> {
    let fam = ExtendedFamily::from_indices(args.m1, args.m2)?;
    let export = FamilyExport::from_family(&fam, args.levels, args.max_degree);
    match format {
        Format::Json => println!("{}", export.to_json()),
        Format::Pretty => {
            let p = fam.params();
            println!("family {p}: codimension {}, ell = {}", p.mu(), p.ell());
            println!("  seed (even):  {}", fam.seed1());
            println!("  seed (odd):   {}", fam.seed2());
            println!("  Wronskian g:  {}", fam.g());
            println!("  potential:    {}", fam.layout());
            let head: Vec<String> = export
                .degree_set_head
                .iter()
                .map(|n| n.to_string())
                .collect();
            println!("  degrees:      {} ...", head.join(", "));
            println!("  spectrum:");
            for level in fam.spectrum(Ham::H2, args.levels) {
                println!("    nu = {:>3}  E = {}", level.nu, level.energy);
            }
        }
        Format::Csv => {
            return Err(usage("family emits a structured bundle; use --format json or pretty"))
        }
    }
    Ok(true)
}

/// Exact layout of a potential: the two-seed one over g, the one-seed one
/// over its pseudo-Hermite seed.
fn layout_for(fam: Option<&ExtendedFamily>, m: Option<i64>) -> Result<(Potential, PotentialLayout, String), CliError> {
    if let Some(fam) = fam {
        let p = fam.params();
        return Ok((
            fam.v2().clone(),
            fam.layout(),
            format!("extended oscillator for {p}"),
        ));
    }
    let m = m.ok_or_else(|| usage("give either --m1 --m2 or --m"))?;
    let pot = potential_v_minus(m)?;
    let layout = PotentialLayout::from_seed(&pseudo_hermite_checked(m)?, rint(-2));
    Ok((pot, layout, format!("one-seed extension, m = {m}")))
}

#[derive(Serialize)]
struct PotentialOut<'a> {
    subject: &'a str,
    exact: String,
    layout: &'a PotentialLayout,
}

fn cmd_potential(args: SeedArgs, format: Format) -> Result<bool, CliError> {
    let fam = two_seed(args.m1, args.m2)?;
    let (pot, layout, subject) = layout_for(fam.as_ref(), args.m)?;
    match format {
        Format::Pretty => {
            println!("{layout}");
        }
        Format::Json => {
            let out = PotentialOut {
                subject: &subject,
                exact: layout.to_string(),
                layout: &layout,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["x", "V"])?;
            for (x, v) in potential_samples(&pot, args.half_width, args.samples) {
                w.write_record([format!("{x:.6}"), format!("{v:.12}")])?;
            }
            w.flush()?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct PolyRow {
    n: u32,
    admissible: bool,
    degree: Option<usize>,
    polynomial: Option<String>,
}

fn poly_rows(args: &PolysArgs) -> Result<(String, Vec<PolyRow>), CliError> {
    if let Some(fam) = two_seed(args.m1, args.m2)? {
        let p = *fam.params();
        let rows = (0..=args.max_n)
            .map(|n| match eop_second(&p, n) {
                Ok(y) => PolyRow {
                    n,
                    admissible: true,
                    degree: y.degree(),
                    polynomial: Some(y.to_string()),
                },
                Err(_) => PolyRow {
                    n,
                    admissible: false,
                    degree: None,
                    polynomial: None,
                },
            })
            .collect();
        return Ok((format!("double-indexed family {p}"), rows));
    }
    let m = args.m.ok_or_else(|| usage("give either --m1 --m2 or --m"))?;
    if m <= 0 || m % 2 != 0 {
        return Err(CliError::from(Error::InvalidParams(format!(
            "need m even and positive, got m = {m}"
        ))));
    }
    let rows = (0..=args.max_n)
        .map(|n| match eop_first(m as u32, n) {
            Ok(y) => PolyRow {
                n,
                admissible: true,
                degree: y.degree(),
                polynomial: Some(y.to_string()),
            },
            Err(_) => PolyRow {
                n,
                admissible: false,
                degree: None,
                polynomial: None,
            },
        })
        .collect();
    Ok((format!("one-seed family, m = {m}"), rows))
}

fn cmd_polys(args: PolysArgs, format: Format) -> Result<bool, CliError> {
    let (subject, rows) = poly_rows(&args)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                subject: &'a str,
                rows: &'a [PolyRow],
            }
            let out = Out {
                subject: &subject,
                rows: &rows,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["n", "admissible", "degree", "polynomial"])?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.admissible.to_string(),
                    r.degree.map(|d| d.to_string()).unwrap_or_default(),
                    r.polynomial.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            println!("{subject}");
            for r in &rows {
                match &r.polynomial {
                    Some(poly) => println!("  n = {:>2}: {}", r.n, poly),
                    None => println!("  n = {:>2}: (gap)", r.n),
                }
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct SpectrumRow {
    nu: i64,
    energy: i64,
    fd: Option<f64>,
    deviation: Option<f64>,
}

fn cmd_spectrum(args: SpectrumArgs, format: Format) -> Result<bool, CliError> {
    let (subject, exact, pot): (String, Vec<(i64, i64)>, Potential) =
        if let Some(fam) = two_seed(args.m1, args.m2)? {
            let p = fam.params();
            let which = args.channel.ham();
            let exact = fam
                .spectrum(which, args.levels)
                .iter()
                .map(|l| (l.nu, l.energy))
                .collect();
            (
                format!("{which} channel of {p}"),
                exact,
                hamiltonian_for(&fam, which),
            )
        } else {
            let m = args.m.ok_or_else(|| usage("give either --m1 --m2 or --m"))?;
            (
                format!("one-seed extension, m = {m}"),
                spectrum_first_order(m, args.levels)?,
                potential_v_minus(m)?,
            )
        };

    let fd = if args.no_fd {
        None
    } else {
        let grid = FdGrid::new(args.half_width, args.points)?;
        Some(fd_spectrum(&pot, &grid, exact.len())?)
    };

    let rows: Vec<SpectrumRow> = exact
        .iter()
        .enumerate()
        .map(|(i, &(nu, energy))| {
            let fd_val = fd.as_ref().map(|v| v[i]);
            SpectrumRow {
                nu,
                energy,
                fd: fd_val,
                deviation: fd_val.map(|v| (v - energy as f64).abs()),
            }
        })
        .collect();

    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                subject: &'a str,
                rows: &'a [SpectrumRow],
            }
            let out = Out {
                subject: &subject,
                rows: &rows,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["nu", "energy", "fd", "deviation"])?;
            for r in &rows {
                w.write_record([
                    r.nu.to_string(),
                    r.energy.to_string(),
                    r.fd.map(|v| format!("{v:.10}")).unwrap_or_default(),
                    r.deviation.map(|v| format!("{v:.3e}")).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            println!("{subject}");
            println!("  {:>4}  {:>7}  {:>14}  {:>10}", "nu", "exact", "fd", "|diff|");
            for r in &rows {
                match (r.fd, r.deviation) {
                    (Some(fd), Some(dev)) => println!(
                        "  {:>4}  {:>7}  {:>14.8}  {:>10.2e}",
                        r.nu, r.energy, fd, dev
                    ),
                    _ => println!("  {:>4}  {:>7}  {:>14}  {:>10}", r.nu, r.energy, "-", "-"),
                }
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct LadderRow {
    nu: i64,
    energy: i64,
    outcome: String,
    target_nu: Option<i64>,
    coeff_sq: Option<String>,
    coeff: Option<f64>,
}

fn cmd_ladder(args: LadderArgs, format: Format) -> Result<bool, CliError> {
    let fam = ExtendedFamily::from_indices(args.m1, args.m2)?;
    let p = *fam.params();
    let op = args.op.op();
    let chain = ladder_chain(&fam, op);
    let polys = pha_polys(&fam);

    let mut rows = Vec::new();
    for nu in families::nu_values(&p, Ham::H2).take_while(|&nu| nu <= args.max_nu) {
        let act = ladder_action(&fam, op, nu)?;
        let row = match act.outcome {
            LadderOutcome::Annihilated => LadderRow {
                nu,
                energy: act.source.energy,
                outcome: "annihilated".into(),
                target_nu: None,
                coeff_sq: None,
                coeff: None,
            },
            LadderOutcome::Mapped {
                target,
                coeff_sq,
                coeff,
                ..
            } => LadderRow {
                nu,
                energy: act.source.energy,
                outcome: format!("mapped to nu = {}", target.nu),
                target_nu: Some(target.nu),
                coeff_sq: Some(coeff_sq.to_string()),
                coeff: Some(coeff),
            },
        };
        rows.push(row);
    }

    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                operator: String,
                chain: String,
                order: usize,
                closure_roots_p: Vec<i64>,
                closure_roots_q: Vec<i64>,
                rows: Vec<LadderRow>,
            }
            let out = Out {
                operator: op.to_string(),
                chain: chain.to_string(),
                order: chain.order(),
                closure_roots_p: polys.p_roots.clone(),
                closure_roots_q: polys.q_roots.clone(),
                rows,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["nu", "energy", "outcome", "target_nu", "coeff_sq", "coeff"])?;
            for r in &rows {
                w.write_record([
                    r.nu.to_string(),
                    r.energy.to_string(),
                    r.outcome.clone(),
                    r.target_nu.map(|v| v.to_string()).unwrap_or_default(),
                    r.coeff_sq.clone().unwrap_or_default(),
                    r.coeff.map(|v| format!("{v:.12}")).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            println!("{chain} acting on the extended channel of {p} (order {})", chain.order());
            for r in &rows {
                match (&r.coeff_sq, r.coeff) {
                    (Some(sq), Some(c)) => println!(
                        "  nu = {:>3} (E = {:>3}): {}, coeff^2 = {}, coeff = {:.6}",
                        r.nu, r.energy, r.outcome, sq, c
                    ),
                    _ => println!("  nu = {:>3} (E = {:>3}): {}", r.nu, r.energy, r.outcome),
                }
            }
        }
    }
    Ok(true)
}

fn render_reports(reports: &[SuiteReport], format: Format) -> Result<bool, CliError> {
    let all = reports.iter().all(|r| r.all_passed());
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
        }
        Format::Pretty => {
            for r in reports {
                print!("{r}");
            }
            let (pass, fail) = reports.iter().fold((0, 0), |(p, f), r| {
                let (a, b) = r.counts();
                (p + a, f + b)
            });
            println!("total: {pass} passed, {fail} failed");
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["subject", "check", "passed", "detail"])?;
            for r in reports {
                for c in &r.checks {
                    w.write_record([
                        r.subject.clone(),
                        c.name.clone(),
                        c.passed.to_string(),
                        c.detail.clone(),
                    ])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(all)
}

fn cmd_verify(args: VerifyArgs, format: Format) -> Result<bool, CliError> {
    if !(args.fd_tol.is_finite() && args.fd_tol > 0.0) {
        return Err(usage(format!("--fd-tol must be positive, got {}", args.fd_tol)));
    }
    // both grids must be valid before any computation starts
    FdGrid::new(args.fd_half_width, args.fd_points)?;
    let opts = VerifyOptions {
        max_n: args.max_n,
        max_nu: args.max_nu,
        numerics: !args.skip_numerics,
        inject_fault: args.inject_fault,
        quad: QuadratureSpec::new(args.quad_half_width, args.quad_nodes)?,
        fd_half_width: args.fd_half_width,
        fd_points: args.fd_points,
        fd_tol: args.fd_tol,
    };
    let reports = if let Some(m) = args.m {
        vec![run_first_order_suite(m, &opts)?]
    } else if let (Some(m1), Some(m2)) = (args.m1, args.m2) {
        vec![run_family_suite(m1, m2, &opts)?]
    } else if args.m1.is_some() || args.m2.is_some() {
        return Err(usage("--m1 and --m2 must be given together"));
    } else {
        run_default_grid(&opts)?
    };
    render_reports(&reports, format)
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(content.as_bytes())?;
    Ok(())
}

fn export_one(
    fam: &ExtendedFamily,
    args: &ExportArgs,
    dir: &Path,
) -> Result<Vec<PathBuf>, CliError> {
    let p = fam.params();
    let stem = format!("family_{}_{}", p.m1(), p.m2());
    let mut written = Vec::new();

    let export = FamilyExport::from_family(fam, args.levels, args.max_degree);
    let json_path = dir.join(format!("{stem}.json"));
    let text = export.to_json();
    write_file(&json_path, &text)?;

    // round trip must be bit identical and must validate against a rebuild
    let back = FamilyExport::from_json(&std::fs::read_to_string(&json_path)?)?;
    back.validate()?;
    if back.to_json() != text {
        return Err(CliError::Failure(format!(
            "round trip of {} is not bit identical",
            json_path.display()
        )));
    }
    written.push(json_path);

    let csv_path = dir.join(format!("{stem}_potential.csv"));
    let mut w = csv::Writer::from_path(&csv_path)?;
    w.write_record(["x", "V"])?;
    for (x, v) in potential_samples(fam.v2(), args.half_width, args.samples) {
        w.write_record([format!("{x:.6}"), format!("{v:.12}")])?;
    }
    w.flush()?;
    written.push(csv_path);

    let spec_path = dir.join(format!("{stem}_spectrum.csv"));
    let mut w = csv::Writer::from_path(&spec_path)?;
    w.write_record(["nu", "energy"])?;
    for level in fam.spectrum(Ham::H2, args.levels) {
        w.write_record([level.nu.to_string(), level.energy.to_string()])?;
    }
    w.flush()?;
    written.push(spec_path);

    Ok(written)
}

fn cmd_export(args: ExportArgs, out_dir: &Path) -> Result<bool, CliError> {
    std::fs::create_dir_all(out_dir)?;
    let families: Vec<ExtendedFamily> = match (args.m1, args.m2) {
        (Some(m1), Some(m2)) => vec![ExtendedFamily::from_indices(m1, m2)?],
        _ => xhermite::DEFAULT_GRID
            .iter()
            .map(|&(m1, m2)| ExtendedFamily::from_indices(m1, m2))
            .collect::<Result<_, _>>()?,
    };
    for fam in &families {
        for path in export_one(fam, &args, out_dir)? {
            println!("wrote {}", path.display());
        }
    }
    Ok(true)
}
