//! Command-line surface for `goodcomp`.
//!
//! Every command returns its standard output as a string so that the binary
//! and the tests share one code path.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use goodcomp::compactify::{certify, good_system, good_system_randomized};
use goodcomp::elimination::project;
use goodcomp::laurent::parse_system;
use goodcomp::mixedvol::bkk_number;
use goodcomp::{Covector, Fan, LatticePolytope, LatticeVector, LaurentPolynomial, TorusSplit};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] goodcomp::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    /// Certificates were computed but some check failed; carries the output.
    #[error("checks failed")]
    ChecksFailed(String),
}

impl CliError {
    /// 0 success, 1 failed checks, 2 parse/shape, 3 genericity, 4 precondition.
    pub fn exit_code(&self) -> i32 {
        use goodcomp::Error as E;
        match self {
            CliError::ChecksFailed(_) => 1,
            CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                E::GenericityFailure { .. } => 3,
                E::NotWeaklyGeneric(_)
                | E::EmptyVariety { .. }
                | E::CodimTooLarge { .. }
                | E::ZeroVector
                | E::NotPrimitive(_)
                | E::NotDeveloped(_)
                | E::NoEquations
                | E::ZeroPivot
                | E::NotInKernel(_) => 4,
                _ => 2,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "goodcomp", version, about = "Good compactifications of subvarieties of the torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print dimension and codimension with the per-level report.
    Dim { file: PathBuf },
    /// Build a certified tuple and fan; write system.out, fan.out, certs.out, report.out.
    Compactify {
        file: PathBuf,
        /// Use the randomized driver with this target codimension.
        #[arg(long)]
        codim: Option<usize>,
        /// Seed for the randomized driver (requires --codim).
        #[arg(long, requires = "codim")]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Project along a covector and print the pruned equations.
    Project {
        file: PathBuf,
        /// Space-separated integers, e.g. "0 1".
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// Bernstein count of n polytopes of rank n.
    Mixedvol {
        /// System whose Newton polytopes are used.
        file: Option<PathBuf>,
        /// Vertex list like "0 0, 1 0, 0 1"; repeat once per polytope.
        #[arg(long = "polytope", allow_hyphen_values = true)]
        polytopes: Vec<String>,
    },
    /// Check a tuple against a fan.
    Check { tuple: PathBuf, fan: PathBuf },
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_system(path: &Path) -> CliResult<(usize, Vec<LaurentPolynomial>)> {
    Ok(parse_system(&read(path)?)?)
}

/// Runs a parsed command line and returns what goes to standard output.
pub fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Dim { file } => cmd_dim(&file),
        Command::Compactify {
            file,
            codim,
            seed,
            out,
        } => cmd_compactify(&file, codim, seed, &out),
        Command::Project { file, phi } => cmd_project(&file, &phi),
        Command::Mixedvol { file, polytopes } => cmd_mixedvol(file.as_deref(), &polytopes),
        Command::Check { tuple, fan } => cmd_check(&tuple, &fan),
    }
}

pub fn cmd_dim(file: &Path) -> CliResult<String> {
    let (rank, system) = read_system(file)?;
    let r = good_system(rank, &system)?;
    Ok(format!("dim={} codim={}\n{}", r.dim(), r.codim, r.report()))
}

pub fn cmd_compactify(file: &Path, codim: Option<usize>, seed: Option<u64>, out: &Path) -> CliResult<String> {
    if seed.is_some() && codim.is_none() {
        return Err(CliError::Usage("--seed requires --codim".into()));
    }
    let (rank, system) = read_system(file)?;
    let r = match codim {
        Some(k) => good_system_randomized(rank, &system, k, seed.unwrap_or(0))?,
        None => good_system(rank, &system)?,
    };
    std::fs::create_dir_all(out).map_err(|source| CliError::Io {
        path: out.to_path_buf(),
        source,
    })?;
    let certs = r.certificates.to_text();
    write(&out.join("system.out"), &format!("# rank: {rank}\n{}", r.system_text()))?;
    write(&out.join("fan.out"), &r.fan.to_text())?;
    write(&out.join("certs.out"), &certs)?;
    write(&out.join("report.out"), &r.report())?;
    if !r.certificates.all_pass() {
        return Err(CliError::ChecksFailed(certs));
    }
    Ok(r.report())
}

pub fn parse_covector(text: &str) -> CliResult<Covector> {
    let coords = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| CliError::Usage(format!("bad integer '{t}' in covector")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Covector::new(coords))
}

pub fn cmd_project(file: &Path, phi: &str) -> CliResult<String> {
    let (rank, system) = read_system(file)?;
    let phi = parse_covector(phi)?;
    if phi.rank() != rank {
        return Err(goodcomp::Error::RankMismatch {
            expected: rank,
            got: phi.rank(),
        }
        .into());
    }
    let split = TorusSplit::complete(&phi)?;
    let proj = project(&system, &split)?;
    let mut s = String::new();
    let kernel: Vec<String> = split.kernel_basis.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(s, "# phi={} e={} kernel={}", split.phi, split.e, kernel.join(" "));
    let _ = writeln!(
        s,
        "# pivot degree {} coeffs={}/{}",
        proj.pivot_degree,
        proj.raw_count,
        proj.equations.len()
    );
    if proj.equations.is_empty() {
        s.push_str("# all coefficients vanish\n");
    }
    for e in &proj.equations {
        let _ = writeln!(s, "{e}");
    }
    Ok(s)
}

/// Parses `"0 0, 1 0, 0 1"` into a polytope.
pub fn parse_vertex_list(text: &str) -> CliResult<LatticePolytope> {
    let points = text
        .split(',')
        .map(|p| {
            p.split_whitespace()
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| CliError::Usage(format!("bad integer '{t}' in vertex list")))
                })
                .collect::<CliResult<Vec<_>>>()
                .map(LatticeVector::new)
        })
        .collect::<CliResult<Vec<_>>>()?;
    if let Some(first) = points.first() {
        if let Some(bad) = points.iter().find(|p| p.rank() != first.rank()) {
            return Err(goodcomp::Error::RankMismatch {
                expected: first.rank(),
                got: bad.rank(),
            }
            .into());
        }
    }
    Ok(LatticePolytope::hull(points)?)
}

pub fn cmd_mixedvol(file: Option<&Path>, polytopes: &[String]) -> CliResult<String> {
    let tuple: Vec<LatticePolytope> = match (file, polytopes.is_empty()) {
        (Some(f), true) => {
            let (_, system) = read_system(f)?;
            system
                .iter()
                .map(|p| p.newton_polytope())
                .collect::<goodcomp::Result<_>>()?
        }
        (None, false) => polytopes
            .iter()
            .map(|p| parse_vertex_list(p))
            .collect::<CliResult<_>>()?,
        _ => {
            return Err(CliError::Usage(
                "give either a system file or --polytope lists".into(),
            ))
        }
    };
    let v: BigRational = bkk_number(&tuple)?;
    Ok(format!("{v}\n"))
}

/// Reads a tuple, lifting it to `rank` variables when fewer are mentioned.
fn read_tuple(path: &Path, rank: usize) -> CliResult<Vec<LaurentPolynomial>> {
    let (r, system) = read_system(path)?;
    if r > rank {
        return Err(goodcomp::Error::RankMismatch { expected: rank, got: r }.into());
    }
    Ok(system
        .iter()
        .map(|p| {
            p.map_exponents(rank, |e| {
                let mut c = e.0.clone();
                c.resize(rank, BigInt::from(0));
                LatticeVector::new(c)
            })
        })
        .collect())
}

pub fn cmd_check(tuple: &Path, fan: &Path) -> CliResult<String> {
    let fan = Fan::from_text(&read(fan)?)?;
    let rank = fan.rank();
    let polys = read_tuple(tuple, rank)?;
    let polytopes: Vec<LatticePolytope> = polys
        .iter()
        .map(|p| p.newton_polytope())
        .collect::<goodcomp::Result<_>>()?;
    let certs = certify(rank, &polytopes, &fan)?;
    let mut s = String::new();
    for (name, ok, detail) in certs.summary() {
        let _ = writeln!(s, "{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
    if certs.all_pass() {
        Ok(s)
    } else {
        Err(CliError::ChecksFailed(s))
    }
}
