//! Command-line front end: argument parsing, dispatch, and report rendering.
//!
//! Exit codes follow the verdict of the command's certificate: `0` when the
//! verdict is strictly positive (or the command only emits data), `2` when
//! the verdict is `fails` or `nonnegative_boundary` (the two are
//! distinguished in the report body), and `1` on input or validation
//! errors. Output files are rendered in full before anything is written, so
//! a failing run never leaves a partial file behind. Given the same
//! arguments, input files, and `--seed`, every command reproduces its output
//! byte for byte.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::certify::{self, CertifyOptions, PositivityReport, Verdict, VERDICT_TOL};
use crate::cspace::{self, CSpaceDescriptor, ClassificationRecord, Family};
use crate::curvature::{orthonormalize, HermitianForm, KahlerCurvatureTensor};
use crate::error::{Error, Result};
use crate::io::{self, TensorDocument};
use crate::models::{self, SplitBundleModel};
use crate::projbundle;

/// Parsed command line for the `ricperp` binary.
#[derive(Debug, Parser)]
#[command(
    name = "ricperp",
    version,
    about = "Curvature positivity certificates for Kähler manifolds",
    long_about = "Emits model-space curvature tensors, classifies homogeneous \
                  spaces, certifies extremal curvature quantities of tensor \
                  files, and checks positivity for projectivized vector \
                  bundles.\n\nExit codes: 0 = certified positive (or data \
                  emitted), 2 = verdict fails or sits on the zero boundary, \
                  1 = input or validation error.\n\nThe RICPERP_THREADS \
                  environment variable caps the number of worker threads."
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit model-space curvature tensors as tensor files.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Classify compact homogeneous Kähler spaces with b₂ = 1.
    #[command(subcommand)]
    Cspace(CspaceCmd),
    /// Certify extremal curvature quantities of a tensor file.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Positivity checks for projectivized vector bundles.
    #[command(subcommand)]
    Projbundle(ProjbundleCmd),
}

/// Report rendering format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON with a stable field order.
    #[default]
    Json,
    /// Human-readable markdown table.
    Md,
}

#[derive(Debug, Subcommand)]
pub enum ModelCmd {
    /// Write one model space's curvature tensor to a tensor file.
    Emit(EmitArgs),
}

/// Model spaces available to `model emit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelName {
    /// Projective space with holomorphic sectional curvature 2 (needs -n).
    FubiniStudy,
    /// Grassmannian-type space of p×q matrices (needs -p and -q).
    Grassmannian,
    /// Lagrangian-Grassmannian-type space of symmetric r×r matrices (needs -r).
    LagrangianGrassmannian,
    /// Product of two curves with constant curvatures (needs --k1 and --k2).
    CurveProduct,
}

#[derive(Debug, Args)]
pub struct EmitArgs {
    /// Which model space to emit.
    pub name: ModelName,
    /// Complex dimension (fubini-study).
    #[arg(short = 'n', long)]
    pub n: Option<usize>,
    /// First block size (grassmannian).
    #[arg(short = 'p', long)]
    pub p: Option<usize>,
    /// Second block size (grassmannian).
    #[arg(short = 'q', long)]
    pub q: Option<usize>,
    /// Matrix rank (lagrangian-grassmannian).
    #[arg(short = 'r', long)]
    pub r: Option<usize>,
    /// Curvature of the first factor (curve-product).
    #[arg(long, allow_hyphen_values = true)]
    pub k1: Option<f64>,
    /// Curvature of the second factor (curve-product).
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Option<f64>,
    /// Output tensor file path.
    #[arg(short = 'o', long)]
    pub output: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum CspaceCmd {
    /// Classify a single space (family, rank, marked node).
    Classify {
        /// Family letter: A, B, C, D, E6, E7, E8, F4, or G2.
        #[arg(long)]
        family: String,
        /// Rank of the group.
        #[arg(long)]
        rank: usize,
        /// Marked simple root, 1-based.
        #[arg(long)]
        node: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Output path; prints to stdout when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Emit the classification table for whole families.
    Table {
        /// Comma-separated family letters, e.g. B,C,D.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<String>,
        /// Largest rank to include per family.
        #[arg(long)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Output path; prints to stdout when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertifyCmd {
    /// Minimum orthogonal Ricci curvature over unit directions.
    RicPerp(CertifyArgs),
    /// Maximum holomorphic sectional curvature over unit directions.
    HMax(CertifyArgs),
    /// Heuristic minimum of the quadratic bisectional form over frames.
    Qb(CertifyArgs),
    /// Classify a tensor whose orthogonal Ricci curvature vanishes.
    Flat {
        /// Tensor file to classify.
        input: PathBuf,
        /// Classification tolerance (relative to the tensor's sup norm).
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Tensor file to certify.
    pub input: PathBuf,
    /// Number of independent descent starts.
    #[arg(long, default_value_t = 64)]
    pub restarts: u32,
    /// Seed; equal seeds reproduce reports byte for byte.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cross-check against the dense direction grid (n ≤ 3 only).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum ProjbundleCmd {
    /// Exact positivity margin for a split bundle over projective space.
    Check {
        /// Complex dimension of the base projective space.
        #[arg(long)]
        base_dim: usize,
        /// Comma-separated degrees of the line-bundle summands, e.g. 0,0,-1.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        degrees: Vec<f64>,
        /// Also certify min Ric^⊥ at the adapted point for this λ.
        #[arg(long)]
        lambda: Option<f64>,
        /// Descent starts for the λ certificate.
        #[arg(long, default_value_t = 64)]
        restarts: u32,
        /// Seed for the λ certificate.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Scan a λ grid for the first positive certificate.
    LambdaSearch {
        /// Complex dimension of the base projective space.
        #[arg(long)]
        base_dim: usize,
        /// Comma-separated degrees of the line-bundle summands.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        degrees: Vec<f64>,
        /// Comma-separated λ grid, e.g. 5,10,20,50,100.
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<f64>,
        /// Descent starts per grid point.
        #[arg(long, default_value_t = 64)]
        restarts: u32,
        /// Seed shared by all grid points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate bundle curvature at the adapted point and write a tensor file.
    Curvature {
        /// Bundle-input JSON file (base curvature, bundle curvature, λ, ξ).
        #[arg(long)]
        input: PathBuf,
        /// Output tensor file path (orthonormal frame, identity metric).
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
}

/// Runs the CLI on the given argument list and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(cfg) => cfg,
        Err(e) => {
            // --help and --version surface as Err but are not failures;
            // clap routes their text to stdout and real errors to stderr.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cfg: RunConfig) -> Result<i32> {
    match cfg.command {
        Command::Model(cmd) => match cmd {
            ModelCmd::Emit(args) => emit_model(args),
        },
        Command::Cspace(cmd) => run_cspace(cmd),
        Command::Certify(cmd) => run_certify(cmd),
        Command::Projbundle(cmd) => run_projbundle(cmd),
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str, model: &str) -> Result<T> {
    v.ok_or_else(|| {
        Error::InvalidParameter(format!("model '{model}' requires the {flag} flag"))
    })
}

fn emit_model(args: EmitArgs) -> Result<i32> {
    let (tensor, g) = match args.name {
        ModelName::FubiniStudy => {
            models::fubini_study(require(args.n, "-n", "fubini-study")?)?
        }
        ModelName::Grassmannian => models::grassmannian(
            require(args.p, "-p", "grassmannian")?,
            require(args.q, "-q", "grassmannian")?,
        )?,
        ModelName::LagrangianGrassmannian => models::lagrangian_grassmannian(require(
            args.r,
            "-r",
            "lagrangian-grassmannian",
        )?)?,
        ModelName::CurveProduct => models::curve_product(
            require(args.k1, "--k1", "curve-product")?,
            require(args.k2, "--k2", "curve-product")?,
        )?,
    };
    let metric = if g.is_identity(0.0) { None } else { Some(g) };
    TensorDocument::new(tensor, metric).save(&args.output)?;
    Ok(0)
}

fn parse_family(s: &str) -> Result<Family> {
    let want = s.trim().to_ascii_uppercase();
    Family::ALL
        .into_iter()
        .find(|f| f.name() == want)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown family '{s}' (expected one of A, B, C, D, E6, E7, E8, F4, G2)"
            ))
        })
}

fn write_or_print(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn records_markdown(records: &[ClassificationRecord]) -> String {
    let mut out = String::from(
        "| family | rank | node | dimension | mu | nu | qb | ricperp |\n\
         |--------|------|------|-----------|----|----|----|---------|\n",
    );
    for r in records {
        let fmt_opt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x}"));
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            r.family,
            r.rank,
            r.node,
            r.dimension,
            fmt_opt(r.mu),
            fmt_opt(r.nu),
            r.qb,
            r.ricperp,
        ));
    }
    out
}

fn records_json(records: &[ClassificationRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

fn record_json(record: &ClassificationRecord) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("record serializes");
    s.push('\n');
    s
}

fn run_cspace(cmd: CspaceCmd) -> Result<i32> {
    match cmd {
        CspaceCmd::Classify {
            family,
            rank,
            node,
            format,
            output,
        } => {
            let fam = parse_family(&family)?;
            let d = CSpaceDescriptor::new(fam, rank, node)?;
            let record = cspace::classify(&d);
            let text = match format {
                Format::Json => record_json(&record),
                Format::Md => records_markdown(std::slice::from_ref(&record)),
            };
            write_or_print(output.as_deref(), &text)?;
            Ok(if record.ricperp == "positive" { 0 } else { 2 })
        }
        CspaceCmd::Table {
            families,
            max_rank,
            format,
            output,
        } => {
            let fams: Vec<Family> = families
                .iter()
                .map(|s| parse_family(s))
                .collect::<Result<_>>()?;
            let records = cspace::classify_range(&fams, max_rank);
            let text = match format {
                Format::Json => records_json(&records),
                Format::Md => records_markdown(&records),
            };
            write_or_print(output.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::Positive => 0,
        Verdict::NonnegativeBoundary | Verdict::Fails => 2,
    }
}

fn print_report(rep: &PositivityReport, format: Format) {
    match format {
        Format::Json => println!("{}", rep.to_json()),
        Format::Md => print!("{}", io::report_markdown(rep)),
    }
}

fn load_tensor(path: &Path) -> Result<(KahlerCurvatureTensor, HermitianForm)> {
    let doc = TensorDocument::load(path)?;
    let g = doc.metric_or_identity();
    Ok((doc.tensor, g))
}

fn run_certify(cmd: CertifyCmd) -> Result<i32> {
    match cmd {
        CertifyCmd::RicPerp(args) => {
            let (tensor, g) = load_tensor(&args.input)?;
            let rep = certify::min_ric_perp(&tensor, &g, &options(&args))?;
            print_report(&rep, args.format);
            Ok(verdict_exit(rep.verdict))
        }
        CertifyCmd::HMax(args) => {
            let (tensor, g) = load_tensor(&args.input)?;
            let rep = certify::max_holo_sect(&tensor, &g, &options(&args))?;
            print_report(&rep, args.format);
            Ok(verdict_exit(rep.verdict))
        }
        CertifyCmd::Qb(args) => {
            let (tensor, g) = load_tensor(&args.input)?;
            // The frame minimization is formulated at the identity metric;
            // transform first when the file carries one.
            let (t, _) = orthonormalize(&tensor, &g)?;
            let rep = certify::min_qb(&t, &options(&args))?;
            print_report(&rep, args.format);
            Ok(verdict_exit(rep.verdict))
        }
        CertifyCmd::Flat { input, tol, format } => {
            let (tensor, g) = load_tensor(&input)?;
            let class = certify::flat_ric_perp_classify(&tensor, &g, tol)?;
            let body = serde_json::json!({
                "quantity": "ric_perp_flat_class",
                "classification": class,
                "tol": tol,
            });
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&body).expect("serializes"))
                }
                Format::Md => println!("| quantity | classification |\n|---|---|\n| ric_perp_flat_class | {class} |"),
            }
            Ok(0)
        }
    }
}

fn options(args: &CertifyArgs) -> CertifyOptions {
    CertifyOptions {
        restarts: args.restarts,
        seed: args.seed,
        grid_oracle: args.oracle,
        ..CertifyOptions::default()
    }
}

fn verdict_of(value: f64) -> Verdict {
    if value > VERDICT_TOL {
        Verdict::Positive
    } else if value < -VERDICT_TOL {
        Verdict::Fails
    } else {
        Verdict::NonnegativeBoundary
    }
}

fn run_projbundle(cmd: ProjbundleCmd) -> Result<i32> {
    match cmd {
        ProjbundleCmd::Check {
            base_dim,
            degrees,
            lambda,
            restarts,
            seed,
            format,
        } => {
            let model = SplitBundleModel::new(base_dim, degrees.clone())?;
            let (margin, top) = projbundle::condition_margin_split(&model);
            let verdict = verdict_of(margin);
            let mut exit = verdict_exit(verdict);
            let mut body = serde_json::json!({
                "quantity": "split_bundle_margin",
                "base_dim": base_dim,
                "degrees": degrees,
                "value": margin,
                "verdict": verdict,
                "margin": margin,
                "witness": { "kind": "fiber_summand", "index": top },
            });
            if let Some(lambda) = lambda {
                let opts = CertifyOptions {
                    restarts,
                    ..CertifyOptions::seeded(seed)
                };
                let search = projbundle::min_lambda_search(&model, &[lambda], &opts)?;
                let entry = &search.entries[0];
                if entry.verdict != Verdict::Positive {
                    exit = 2;
                }
                body["lambda_certificate"] = serde_json::json!({
                    "lambda": entry.lambda,
                    "min_value": entry.min_value,
                    "verdict": entry.verdict,
                    "method": { "seed": seed, "restarts": restarts },
                });
            }
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&body).expect("serializes"))
                }
                Format::Md => {
                    println!(
                        "| quantity | value | verdict |\n|---|---|---|\n| split_bundle_margin | {margin} | {} |",
                        serde_json::to_value(verdict).expect("serializes").as_str().unwrap_or("?")
                    );
                }
            }
            Ok(exit)
        }
        ProjbundleCmd::LambdaSearch {
            base_dim,
            degrees,
            grid,
            restarts,
            seed,
            format,
        } => {
            let model = SplitBundleModel::new(base_dim, degrees)?;
            let opts = CertifyOptions {
                restarts,
                ..CertifyOptions::seeded(seed)
            };
            let report = projbundle::min_lambda_search(&model, &grid, &opts)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializes")
                ),
                Format::Md => {
                    let mut out = String::from("| lambda | min_value | verdict |\n|---|---|---|\n");
                    for e in &report.entries {
                        let v = serde_json::to_value(e.verdict).expect("serializes");
                        out.push_str(&format!(
                            "| {} | {} | {} |\n",
                            e.lambda,
                            e.min_value,
                            v.as_str().unwrap_or("?")
                        ));
                    }
                    out.push_str(&match report.first_positive {
                        Some(l) => format!("\nfirst positive at lambda = {l}\n"),
                        None => "\nno positive grid point\n".to_string(),
                    });
                    print!("{out}");
                }
            }
            Ok(if report.first_positive.is_some() { 0 } else { 2 })
        }
        ProjbundleCmd::Curvature { input, output } => {
            let bundle = io::load_bundle_input(&input)?;
            let tensor = bundle.curvature_at_origin()?;
            TensorDocument::new(tensor, None).save(&output)?;
            Ok(0)
        }
    }
}
