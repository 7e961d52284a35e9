//! Command-line front end for the rank-2 ACM bundle case analysis: derive
//! c2 relations, evaluate normal-bundle dimensions and the Hilbert-flag
//! gate from resolution files, run linkage chains, and reprint the fixed
//! tables.

pub mod report;

use acmgate_core::bundle::{chi_rank2, BundleInvariants, HypersurfaceContext};
use acmgate_core::expr::parse_poly;
use acmgate_core::gorenstein::{
    flag_gate_at, h0_normal_bundle, hilbert_constraints, CurveInvariants, GorensteinResolution,
    Verdict,
};
use acmgate_core::liaison::{cancel_pair, degree_genus, link, CancelPosition, CiType};
use acmgate_core::linear;
use acmgate_core::io::{parse_assignments, ComplexFile, ResolutionFile};
use acmgate_core::poly::Poly;
use acmgate_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use report::Format;
use std::path::PathBuf;

/// Default ambient dimension: the projective space of sextic threefolds.
const DEFAULT_AMBIENT_DIM: i64 = 209;

#[derive(Parser, Debug)]
#[command(
    name = "acmgate",
    about = "Exact dimension-gate calculus for rank-2 ACM bundles on hypersurface threefolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Md,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Md => Format::Markdown,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Args, Debug)]
pub struct ResolutionInput {
    /// Resolution file (JSON): { e, pairs, invariants, constraints }
    pub file: PathBuf,
    /// Unknown assignment file: `name=integer` lines substituted at the end
    #[arg(long)]
    pub assign: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the c2 classification table for a hypersurface degree
    Classify {
        #[arg(long)]
        degree: i64,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatArg,
    },
    /// Euler characteristic of a rank-2 bundle from its Chern data
    Chi {
        #[arg(long, default_value_t = 6)]
        degree: i64,
        #[arg(long)]
        c1: i64,
        /// c2 as an integer or expression (e.g. "20 - 2*u2")
        #[arg(long)]
        c2: String,
    },
    /// h^0 of the normal bundle from a resolution file
    Km(ResolutionInput),
    /// Hilbert-flag dimension gate from a resolution file
    Gate {
        #[command(flatten)]
        input: ResolutionInput,
        /// Ambient dimension (defaults to 209; env ACMGATE_AMBIENT_DIM overrides)
        #[arg(long)]
        ambient_dim: Option<i64>,
        /// Hypersurface degree for the ideal-section count
        #[arg(long, default_value_t = 6)]
        degree: i64,
    },
    /// Link a curve complex inside a complete intersection
    Link {
        /// Complex file { terms } or resolution file
        file: PathBuf,
        /// Complete intersection type, e.g. 2,2,5
        #[arg(long)]
        ci: String,
        /// Cancellations `POS:TWIST:COUNT` with POS one of 1-2, 2-3
        /// (applied in order after linking)
        #[arg(long = "cancel")]
        cancellations: Vec<String>,
    },
    /// Reprint the classification or dimension-gate tables
    Reproduce {
        #[arg(long)]
        section: String,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatArg,
    },
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn ambient_dim(flag: Option<i64>) -> i64 {
    if let Some(dim) = flag {
        return dim;
    }
    std::env::var("ACMGATE_AMBIENT_DIM")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_AMBIENT_DIM)
}

fn execute(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Classify { degree, format } => {
            print!("{}", report::classify_table(degree)?.render(format.into()));
            Ok(0)
        }
        Command::Chi { degree, c1, c2 } => {
            let ctx = HypersurfaceContext::new(degree)?;
            let c2 = parse_poly(&c2)?;
            let chi = chi_rank2(&BundleInvariants::new(ctx, c1, c2));
            println!("chi = {chi}");
            Ok(0)
        }
        Command::Km(input) => {
            let (res, _inv) = load_resolution(&input)?;
            println!("resolution: {res}");
            println!("h0(N(C)) = {}", h0_normal_bundle(&res));
            Ok(0)
        }
        Command::Gate { input, ambient_dim: dim, degree } => {
            let (res, inv) = load_resolution(&input)?;
            let ambient = ambient_dim(dim);
            let report = flag_gate_at(&res, &inv, degree, ambient)?;
            println!("h0(N(C))   = {}", report.h0_normal);
            println!("h0(I({degree}))   = {}", report.h0_ideal_n);
            println!("bound      = {}", report.bound);
            println!("ambient    = {}", report.ambient_dim);
            println!("verdict    = {}", report.verdict);
            Ok(match report.verdict {
                Verdict::DominantImpossible => 0,
                Verdict::Inconclusive => 2,
            })
        }
        Command::Link { file, ci, cancellations } => {
            let text = read(&file)?;
            let cx = match ComplexFile::from_json(&text) {
                Ok(f) => f.complex()?,
                Err(_) => {
                    let res = ResolutionFile::from_json(&text)?;
                    (&res.resolution()?).into()
                }
            };
            let ci = parse_ci(&ci)?;
            let mut linked = link(&cx, ci)?;
            for spec in &cancellations {
                let (pos, twist, count) = parse_cancellation(spec)?;
                linked = cancel_pair(&linked, pos, twist, &count)?;
            }
            println!("{}", ComplexFile::from_complex(&linked).to_json());
            let (d, g) = degree_genus(&linked)?;
            println!("degree = {d}");
            println!("genus  = {g}");
            Ok(0)
        }
        Command::Reproduce { section, format } => {
            let format: Format = format.into();
            match section.as_str() {
                "3" => print!("{}", report::section3_report(format)?),
                "5" => print!("{}", report::section5_report(ambient_dim(None), format)?),
                other => {
                    return Err(Error::Parse {
                        input: other.to_string(),
                        reason: "section must be 3 or 5".into(),
                    })
                }
            }
            Ok(0)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

/// Loads a resolution file and reduces it: Hilbert constraints plus the
/// file's own constraints are solved and substituted into the
/// multiplicities and invariants, then any assignment file is applied.
fn load_resolution(input: &ResolutionInput) -> Result<(GorensteinResolution, CurveInvariants), Error> {
    let file = ResolutionFile::from_json(&read(&input.file)?)?;
    let res = file.resolution()?;
    if res.pairs.is_empty() {
        return Err(Error::NoGenerators);
    }
    let inv = file.curve_invariants()?;
    let mut equations = hilbert_constraints(&res, &inv)?.rows;
    equations.extend(file.extra_constraints()?);
    let system = linear::reduce(&equations, &res.unknowns())?;
    let mut res = res.substituted(&system);
    let mut inv = CurveInvariants::new(system.apply(&inv.degree), system.apply(&inv.genus), inv.e);
    if let Some(path) = &input.assign {
        let assignment = parse_assignments(&read(path)?)?;
        let subs: std::collections::BTreeMap<String, Poly> = assignment
            .into_iter()
            .map(|(name, value)| (name, Poly::constant(value)))
            .collect();
        res = GorensteinResolution::new(
            res.e,
            res.pairs
                .iter()
                .map(|p| (p.a, p.mult.substitute_map(&subs)))
                .collect(),
        )?;
        inv = CurveInvariants::new(
            inv.degree.substitute_map(&subs),
            inv.genus.substitute_map(&subs),
            inv.e,
        );
    }
    Ok((res, inv))
}

fn parse_ci(s: &str) -> Result<CiType, Error> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "expected three comma-separated degrees".into(),
        })?;
    if parts.len() != 3 {
        return Err(Error::Parse {
            input: s.to_string(),
            reason: "expected three comma-separated degrees".into(),
        });
    }
    let ci = CiType(parts[0], parts[1], parts[2]);
    ci.validate()?;
    Ok(ci)
}

fn parse_cancellation(s: &str) -> Result<(CancelPosition, i64, Poly), Error> {
    let err = || Error::Parse {
        input: s.to_string(),
        reason: "expected POS:TWIST:COUNT with POS one of 1-2, 2-3".into(),
    };
    let mut parts = s.splitn(3, ':');
    let pos = match parts.next().ok_or_else(err)? {
        "1-2" => CancelPosition::F1F2,
        "2-3" => CancelPosition::F2F3,
        _ => return Err(err()),
    };
    let twist: i64 = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
    let count = parse_poly(parts.next().ok_or_else(err)?)?;
    Ok((pos, twist, count))
}
