mod report;
mod svg;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use ngon_roots::chebyshev::{catalan_numbers, catalan_ratio_coefficients, chebyshev_t, dickson};
use ngon_roots::rational::rational_to_f64_nearest;
use ngon_roots::verify::fit_regular_ngon;

use report::{run_suite, SuiteConfig};
use svg::{render_figure, FigureSpec};

#[derive(Parser)]
#[command(
    name = "ngon-roots",
    version,
    about = "Projection polynomials of rotated regular polygons: verification suite, figures, and solvers"
)]
struct Cli {
    /// Print full error chains on failure.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite and write a JSON report.
    Verify(VerifyArgs),
    /// Render the polygon, its tangent circles, critical-point lines and
    /// polynomial graph as an SVG file.
    Figure(FigureArgs),
    /// Fit a regular n-gon with one vertex projection on each given line.
    Fit(FitArgs),
    /// Print the exact coefficients of a Chebyshev or Dickson polynomial.
    Chebyshev(ChebyshevArgs),
    /// Tabulate the Chebyshev Laurent-ratio coefficients against the
    /// Catalan numbers.
    Catalan(CatalanArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Polygon sizes to sweep: a range like 3..16, or a single value.
    #[arg(long, default_value = "3..16")]
    n: String,
    /// Random parameter draws per polygon size.
    #[arg(long, default_value_t = 5)]
    samples: u32,
    /// Seed for the parameter draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Pass/fail tolerance applied to every check.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Where to write the JSON report.
    #[arg(long, default_value = "report.json")]
    out: PathBuf,
}

#[derive(Args)]
struct FigureArgs {
    /// Number of polygon vertices.
    #[arg(long)]
    n: u32,
    /// Rotation in radians.
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// Output path.
    #[arg(long, default_value = "figure.svg")]
    out: PathBuf,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 600)]
    height: u32,
    /// Skip the diagonal-tangent circles.
    #[arg(long)]
    no_circles: bool,
    /// Skip the vertical lines through the critical points.
    #[arg(long)]
    no_lines: bool,
    /// Skip the graph of the projection polynomial.
    #[arg(long)]
    no_curve: bool,
}

#[derive(Args)]
struct FitArgs {
    /// Comma-separated abscissas of the vertical lines, e.g. 0,1,3,4.
    #[arg(long)]
    lines: String,
    /// Feasibility threshold, relative to the spread of the lines.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct ChebyshevArgs {
    /// Degree.
    #[arg(long)]
    n: u32,
    /// Print the Dickson polynomial D_n = 2 T_n(x/2) instead of T_n.
    #[arg(long)]
    dickson: bool,
}

#[derive(Args)]
struct CatalanArgs {
    /// Chebyshev degree in the numerator of the ratio.
    #[arg(long)]
    m: u32,
    /// Number of odd-power coefficients to tabulate (at most m - 1).
    #[arg(long, default_value_t = 5)]
    terms: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            if cli.verbose {
                eprintln!("error: {err:?}");
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Figure(args) => cmd_figure(args),
        Command::Fit(args) => cmd_fit(args),
        Command::Chebyshev(args) => cmd_chebyshev(args),
        Command::Catalan(args) => cmd_catalan(args),
    }
}

/// "a..b" or a single "a".
fn parse_range(text: &str) -> anyhow::Result<(u32, u32)> {
    if let Some((lo, hi)) = text.split_once("..") {
        Ok((lo.trim().parse()?, hi.trim().parse()?))
    } else {
        let n = text.trim().parse()?;
        Ok((n, n))
    }
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let (n_min, n_max) = parse_range(&args.n)
        .with_context(|| format!("cannot parse --n {:?} (expected e.g. 3..16)", args.n))?;
    if n_max > 16 {
        eprintln!("note: n above 16 grows the sweep considerably; expect a slower run");
    }
    let config = SuiteConfig {
        n_min,
        n_max,
        samples_per_n: args.samples,
        seed: args.seed,
        tolerance: args.tol,
    };
    let entries = run_suite(&config)?;
    let failed = entries.iter().filter(|e| !e.pass).count();

    let mut json = serde_json::to_string_pretty(&entries)?;
    json.push('\n');
    std::fs::write(&args.out, json)
        .with_context(|| format!("cannot write report to {}", args.out.display()))?;

    println!(
        "{} checks over n = {}..{} ({} samples each, seed {}): {} failed; report: {}",
        entries.len(),
        n_min,
        n_max,
        args.samples,
        args.seed,
        failed,
        args.out.display()
    );
    Ok(ExitCode::from(u8::from(failed > 0)))
}

fn cmd_figure(args: &FigureArgs) -> anyhow::Result<ExitCode> {
    let spec = FigureSpec {
        n: args.n,
        theta: args.theta,
        show_polynomial_curve: !args.no_curve,
        show_circles: !args.no_circles,
        show_lines: !args.no_lines,
        width_px: args.width,
        height_px: args.height,
    };
    let svg = render_figure(&spec)?;
    std::fs::write(&args.out, svg)
        .with_context(|| format!("cannot write figure to {}", args.out.display()))?;
    println!("figure written to {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_fit(args: &FitArgs) -> anyhow::Result<ExitCode> {
    let lines: Vec<f64> = args
        .lines
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .with_context(|| format!("cannot parse line abscissa {part:?}"))
        })
        .collect::<anyhow::Result<_>>()?;
    let fit = fit_regular_ngon(&lines, args.tol)?;
    println!("{}", serde_json::to_string_pretty(&fit)?);
    Ok(ExitCode::from(if fit.feasible { 0 } else { 2 }))
}

fn cmd_chebyshev(args: &ChebyshevArgs) -> anyhow::Result<ExitCode> {
    let (name, poly) = if args.dickson {
        anyhow::ensure!(args.n >= 1, "the Dickson polynomial needs n >= 1");
        ("D", dickson(args.n))
    } else {
        ("T", chebyshev_t(args.n))
    };
    let coeffs: Vec<String> = poly
        .coeffs()
        .iter()
        .map(|c| c.to_integer().to_string())
        .collect();
    println!("{}_{}(x) coefficients, ascending degree:", name, args.n);
    println!("[{}]", coeffs.join(", "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalan(args: &CatalanArgs) -> anyhow::Result<ExitCode> {
    anyhow::ensure!(args.m >= 2, "need m >= 2");
    anyhow::ensure!(
        args.terms >= 1 && args.terms <= args.m - 1,
        "need 1 <= terms <= m - 1 (got terms = {}, m = {})",
        args.terms,
        args.m
    );
    let coeffs = catalan_ratio_coefficients(args.m, args.terms)?;
    let targets = catalan_numbers(args.terms);
    println!(
        "T_{m}(1/(2x)) / T_{}(1/(2x)): odd-power coefficients vs Catalan numbers",
        args.m - 1,
        m = args.m
    );
    println!(
        "{:>6}  {:>24}  {:>14}  {:>10}  {:>12}",
        "power", "exact", "decimal", "catalan", "|error|"
    );
    for (j, (coeff, target)) in coeffs.iter().zip(&targets).enumerate() {
        let decimal = rational_to_f64_nearest(coeff);
        let error = (decimal - rational_to_f64_nearest(&target.clone().into())).abs();
        println!(
            "{:>6}  {:>24}  {:>14.6}  {:>10}  {:>12.6}",
            format!("x^{}", 2 * j + 1),
            coeff.to_string(),
            decimal,
            target,
            error
        );
    }
    Ok(ExitCode::SUCCESS)
}
