//! Batch front-end for the division-field verifier.
//!
//! Verbs: `verify` runs the selected checks on one curve and reports
//! pass/fail per check; `tower` prints the generator tower; `torsion`
//! dumps the full 8-torsion; `group` runs the curve-independent congruence
//! suite. The process exits 0 exactly when every requested check passed.

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::path::PathBuf;

use torsion8::generators::CurveInput;
use torsion8::pipeline::{self, Check, JobSpec};

#[derive(Parser)]
#[command(
    name = "torsion8",
    version,
    about = "Exact 8-division field construction and verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification checks on a curve
    Verify(VerifyArgs),
    /// Build and print the generator tower of a curve
    Tower(CurveArgs),
    /// Enumerate and dump the full 8-torsion of a curve
    Torsion(CurveArgs),
    /// Run the finite congruence-group suite (curve-independent)
    Group(GroupArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Curve model: degree3 or degree4
    #[arg(long)]
    mode: Option<String>,
    /// Comma-separated rational roots, e.g. 0,1,10
    #[arg(long, value_delimiter = ',')]
    roots: Vec<String>,
    /// Subset of identities,torsion,theorem1a,theorem1b,galois_group,congruence
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Read the whole job as JSON from a file, or '-' for stdin
    #[arg(long)]
    job: Option<String>,
    /// Write the JSON report to this path
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    mode: String,
    #[arg(long, value_delimiter = ',')]
    roots: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn read_job(args: &VerifyArgs) -> anyhow::Result<JobSpec> {
    if let Some(path) = &args.job {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading job file {path}"))?
        };
        let job: JobSpec = serde_json::from_str(&text).context("parsing job JSON")?;
        return Ok(job);
    }
    let mode = args
        .mode
        .clone()
        .context("--mode is required without --job")?;
    if args.roots.is_empty() {
        bail!("--roots is required without --job");
    }
    let checks = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks
            .iter()
            .map(|s| Check::parse(s).map_err(anyhow::Error::from))
            .collect::<anyhow::Result<Vec<_>>>()?
    };
    Ok(JobSpec {
        mode,
        roots: args.roots.clone(),
        checks,
        output_path: args.out.as_ref().map(|p| p.display().to_string()),
    })
}

fn curve_input(mode: &str, roots: &[String]) -> anyhow::Result<CurveInput> {
    let job = JobSpec {
        mode: mode.to_string(),
        roots: roots.to_vec(),
        checks: vec![Check::Identities],
        output_path: None,
    };
    Ok(job.curve_input()?)
}

fn write_out(out: &Option<PathBuf>, json: &str) -> anyhow::Result<()> {
    if let Some(path) = out {
        std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let exit = match cli.cmd {
        Cmd::Verify(args) => {
            let mut job = read_job(&args)?;
            if job.output_path.is_none() {
                job.output_path = args.out.as_ref().map(|p| p.display().to_string());
            }
            let report = pipeline::run(&job)?;
            let json = report.to_json();
            match args.format {
                Format::Text => print!("{}", report.text_summary()),
                Format::Json => println!("{json}"),
            }
            let out = job.output_path.as_ref().map(PathBuf::from);
            write_out(&out, &json)?;
            if report.overall_pass {
                0
            } else {
                1
            }
        }
        Cmd::Tower(args) => {
            let input = curve_input(&args.mode, &args.roots)?;
            let dump = pipeline::dump_tower(&input)?;
            let json = serde_json::to_string_pretty(&dump)?;
            match args.format {
                Format::Json => println!("{json}"),
                Format::Text => {
                    println!(
                        "tower {} of dimension {}",
                        dump.tower.tower_id, dump.tower.dimension
                    );
                    for lv in &dump.tower.levels {
                        println!("  level {}: radicand {:?}", lv.label, lv.radicand);
                    }
                    println!(
                        "identities: {}",
                        if dump.identities.all_passed() {
                            "all pass"
                        } else {
                            "FAIL"
                        }
                    );
                }
            }
            write_out(&args.out, &json)?;
            if dump.identities.all_passed() {
                0
            } else {
                1
            }
        }
        Cmd::Torsion(args) => {
            let input = curve_input(&args.mode, &args.roots)?;
            let dump = pipeline::dump_torsion(&input)?;
            let json = serde_json::to_string_pretty(&dump)?;
            match args.format {
                Format::Json => println!("{json}"),
                Format::Text => println!(
                    "{} torsion points, census {:?}, scratch {}",
                    dump.points.len(),
                    dump.census,
                    dump.scratch_used
                ),
            }
            write_out(&args.out, &json)?;
            if dump.census == (1, 3, 12, 48) {
                0
            } else {
                1
            }
        }
        Cmd::Group(args) => {
            let dump = pipeline::group_report()?;
            let json = serde_json::to_string_pretty(&dump)?;
            match args.format {
                Format::Json => println!("{json}"),
                Format::Text => println!(
                    "orders {}/{}, presentation {:?}, unique quotient {}",
                    dump.gamma2_mod8_order,
                    dump.gamma2_prime_mod8_order,
                    dump.presentation.abstract_order,
                    dump.unique_quotient.all_pass()
                ),
            }
            write_out(&args.out, &json)?;
            let ok = dump.gamma2_mod8_order == 64
                && dump.gamma2_prime_mod8_order == 32
                && dump.direct_product.holds()
                && dump.presentation.all_pass()
                && dump.unique_quotient.all_pass();
            if ok {
                0
            } else {
                1
            }
        }
    };
    std::process::exit(exit);
}
