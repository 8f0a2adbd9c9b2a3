//! Construction of a system `P_1..P_k` with affine independent Newton
//! polytope edges, and the certified convenient fan built from it.
//!
//! [`good_system`] is the deterministic elimination driver: pick a pivot,
//! split the torus along a generic covector, project the rest of the system
//! with a parametric resultant, and recurse in the kernel sublattice until
//! the projected equations vanish or only the pivot is left.
//! [`good_system_randomized`] replaces the parametric expansion with random
//! integer combinations when the codimension is known.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elimination::{project, resultant};
use crate::error::{Error, Result};
use crate::lattice::{Covector, LatticeVector, TorusSplit};
use crate::laurent::{LaurentPolynomial, UnivariatePoly};
use crate::polytope::{
    edges_affine_independent, face_decomposition, find_generic_covector, is_convenient,
    is_developed, is_generic_covector, ConvenienceCertificate, DevelopedCertificate,
    EdgeIndependence, Fan, LatticePolytope,
};

/// Default bound on the number of equations carried to the next level.
pub const DEFAULT_CAP: usize = 64;
/// Default number of attempts of the randomized driver.
pub const DEFAULT_RETRIES: usize = 6;
/// Initial half-width of the integer range for random combinations.
pub const DEFAULT_COEFF_RANGE: i64 = 8;

#[derive(Clone, Debug)]
pub struct Options {
    /// Maximum number of projected equations kept per level. Exceeding it
    /// truncates the canonically sorted list and records a warning.
    pub cap: usize,
    /// Overrides the level-1 covector (must be generic for the pivot).
    pub level1_phi: Option<Covector>,
    pub retries: usize,
    pub coeff_range: i64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            level1_phi: None,
            retries: DEFAULT_RETRIES,
            coeff_range: DEFAULT_COEFF_RANGE,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    Continue,
    AllCoefficientsVanish,
    SingleEquation,
    CapWarning,
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StopReason::Continue => "continue",
            StopReason::AllCoefficientsVanish => "all coefficients vanish",
            StopReason::SingleEquation => "single equation",
            StopReason::CapWarning => "cap warning",
        })
    }
}

/// One level of the recursion, in the coordinates of that level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelState {
    /// 1-based.
    pub level: usize,
    /// Ambient rank of this level.
    pub rank: usize,
    pub system: Vec<LaurentPolynomial>,
    pub pivot: LaurentPolynomial,
    /// `None` when the pivot is the last equation.
    pub split: Option<TorusSplit>,
    /// Basis of this level's lattice inside `Z^n`.
    pub embedding: Vec<LatticeVector>,
    pub coeffs_before: usize,
    pub coeffs_after: usize,
    pub stop: StopReason,
}

/// For a cone of dimension `> n − k`: a summand whose face is a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEntry {
    pub cone: usize,
    pub cone_dim: usize,
    pub witness: Option<(usize, LatticeVector)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificates {
    pub edges: EdgeIndependence,
    pub developed: DevelopedCertificate,
    /// `Err` carries the reason the fan could not be checked.
    pub convenient: std::result::Result<ConvenienceCertificate, String>,
    pub orbit_avoidance: Vec<OrbitEntry>,
}

impl Certificates {
    pub fn edges_pass(&self) -> bool {
        self.edges.holds()
    }

    pub fn developed_pass(&self) -> bool {
        self.developed.holds()
    }

    pub fn convenient_pass(&self) -> bool {
        self.convenient.as_ref().is_ok_and(|c| c.holds())
    }

    pub fn orbit_pass(&self) -> bool {
        self.orbit_avoidance.iter().all(|e| e.witness.is_some())
    }

    pub fn all_pass(&self) -> bool {
        self.edges_pass() && self.developed_pass() && self.convenient_pass() && self.orbit_pass()
    }

    /// One `PASS`/`FAIL` line per check.
    pub fn summary(&self) -> Vec<(&'static str, bool, String)> {
        let edges_detail = match &self.edges {
            EdgeIndependence::Independent => "every choice of edges is independent".to_string(),
            EdgeIndependence::Dependent { directions, .. } => format!(
                "dependent edge directions {}",
                directions.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
            ),
            EdgeIndependence::TooManyPolytopes { k, rank } => {
                format!("{k} polytopes exceed rank {rank}")
            }
        };
        let developed_detail = match self.developed.violation() {
            None => format!("{} faces of dimension < {}", self.developed.faces.len(), self.developed.k),
            Some(f) => format!("face {} has no vertex summand", format_points(&f.face.vertices)),
        };
        let convenient_detail = match &self.convenient {
            Err(e) => e.clone(),
            Ok(c) => match c.first_failure() {
                None => format!("{} cone/polytope pairs linear", c.entries.len()),
                Some((cone, poly)) => {
                    format!("support function of polytope {} is not linear on cone {cone}", poly + 1)
                }
            },
        };
        let orbit_detail = match self.orbit_avoidance.iter().find(|e| e.witness.is_none()) {
            None => format!("{} cones checked", self.orbit_avoidance.len()),
            Some(e) => format!("cone {} has no vertex summand", e.cone),
        };
        vec![
            ("edges", self.edges_pass(), edges_detail),
            ("developed", self.developed_pass(), developed_detail),
            ("convenient", self.convenient_pass(), convenient_detail),
            ("orbit-avoidance", self.orbit_pass(), orbit_detail),
        ]
    }

    /// Full certificate listing; ends with `ALL CHECKS PASSED` when every
    /// check holds.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str("[edges]\n");
        match &self.edges {
            EdgeIndependence::Independent => s.push_str("independent\n"),
            EdgeIndependence::Dependent { edges, directions } => {
                for (e, d) in edges.iter().zip(directions) {
                    let _ = writeln!(s, "edge {} direction {d}", format_points(&e.vertices));
                }
            }
            EdgeIndependence::TooManyPolytopes { k, rank } => {
                let _ = writeln!(s, "too many polytopes: {k} > {rank}");
            }
        }
        s.push_str("[developed]\n");
        for f in &self.developed.faces {
            let _ = write!(s, "face {} dim={}", format_points(&f.face.vertices), f.face.dim);
            match f.vertex() {
                Some((j, a)) => {
                    let _ = writeln!(s, " vertex-summand={} A={a}", j + 1);
                }
                None => s.push_str(" vertex-summand=none\n"),
            }
        }
        s.push_str("[convenient]\n");
        match &self.convenient {
            Err(e) => {
                let _ = writeln!(s, "error {e}");
            }
            Ok(c) => {
                for (cone, poly, a) in &c.entries {
                    match a {
                        Some(a) => {
                            let _ = writeln!(s, "cone {cone} polytope {} A={a}", poly + 1);
                        }
                        None => {
                            let _ = writeln!(s, "cone {cone} polytope {} A=none", poly + 1);
                        }
                    }
                }
            }
        }
        s.push_str("[orbit-avoidance]\n");
        for e in &self.orbit_avoidance {
            match &e.witness {
                Some((j, a)) => {
                    let _ = writeln!(s, "cone {} dim={} j={} A={a}", e.cone, e.cone_dim, j + 1);
                }
                None => {
                    let _ = writeln!(s, "cone {} dim={} j=none", e.cone, e.cone_dim);
                }
            }
        }
        s.push_str("[summary]\n");
        for (name, ok, detail) in self.summary() {
            let _ = writeln!(s, "{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        }
        s.push_str(if self.all_pass() {
            "ALL CHECKS PASSED\n"
        } else {
            "CHECKS FAILED\n"
        });
        s
    }
}

fn format_points(points: &[LatticeVector]) -> String {
    format!(
        "{{{}}}",
        points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactificationResult {
    pub rank: usize,
    pub codim: usize,
    /// `P_1..P_k` as Laurent polynomials in the original coordinates.
    pub tuple: Vec<LaurentPolynomial>,
    pub fan: Fan,
    pub certificates: Certificates,
    pub levels: Vec<LevelState>,
    pub warnings: Vec<String>,
    /// Attempts used by the randomized driver (1 for the deterministic one).
    pub attempts: usize,
}

impl CompactificationResult {
    pub fn dim(&self) -> usize {
        self.rank - self.codim
    }

    pub fn is_whole_torus(&self) -> bool {
        self.codim == 0
    }

    pub fn newton_polytopes(&self) -> Vec<LatticePolytope> {
        self.tuple
            .iter()
            .map(|p| p.newton_polytope().expect("tuple entries are nonzero"))
            .collect()
    }

    /// Per-level run report followed by `codim=<k>`.
    pub fn report(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "goodcomp {}", env!("CARGO_PKG_VERSION"));
        for l in &self.levels {
            let (phi, e) = match &l.split {
                Some(sp) => (sp.phi.to_string(), sp.e.to_string()),
                None => ("-".to_string(), "-".to_string()),
            };
            let _ = writeln!(
                s,
                "level {}: pivot={} phi={phi} e={e} coeffs={}/{} stop={}",
                l.level, l.pivot, l.coeffs_before, l.coeffs_after, l.stop
            );
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        if self.is_whole_torus() {
            s.push_str("note: variety is the whole torus\n");
        }
        let _ = writeln!(s, "codim={}", self.codim);
        s
    }

    /// The tuple, one polynomial per line.
    pub fn system_text(&self) -> String {
        self.tuple.iter().map(|p| format!("{p}\n")).collect()
    }
}

fn pull_back(p: &LaurentPolynomial, embedding: &[LatticeVector], n: usize) -> LaurentPolynomial {
    p.map_exponents(n, |c| {
        c.0.iter()
            .zip(embedding)
            .fold(LatticeVector::zero(n), |acc, (k, b)| &acc + &b.scale(k))
    })
}

fn nonzero(system: &[LaurentPolynomial], n: usize) -> Result<Vec<LaurentPolynomial>> {
    for p in system {
        if p.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: p.rank(),
            });
        }
    }
    Ok(system.iter().filter(|p| !p.is_zero()).cloned().collect())
}

fn reject_units(system: &[LaurentPolynomial], level: usize) -> Result<()> {
    match system.iter().find(|p| p.is_monomial()) {
        Some(u) => Err(Error::EmptyVariety {
            level,
            equation: u.to_string(),
        }),
        None => Ok(()),
    }
}

/// Certificates for a tuple against a given fan.
pub fn certify(rank: usize, polytopes: &[LatticePolytope], fan: &Fan) -> Result<Certificates> {
    if fan.rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            got: fan.rank(),
        });
    }
    let k = polytopes.len();
    let edges = edges_affine_independent(polytopes);
    let developed = is_developed(polytopes)?;
    let convenient = match is_convenient(fan, polytopes) {
        Ok(c) => Ok(c),
        Err(e @ (Error::IncompleteFan(_) | Error::MalformedFan(_))) => Err(e.to_string()),
        Err(e) => return Err(e),
    };
    let mut orbit_avoidance = Vec::new();
    for (i, cone) in fan.cones().iter().enumerate() {
        if cone.dim + k <= rank {
            continue;
        }
        let xi = fan.interior_point(i);
        let parts = face_decomposition(&xi, polytopes)?;
        let witness = parts
            .iter()
            .position(|f| f.is_vertex())
            .map(|j| (j, parts[j].vertices[0].clone()));
        orbit_avoidance.push(OrbitEntry {
            cone: i,
            cone_dim: cone.dim,
            witness,
        });
    }
    Ok(Certificates {
        edges,
        developed,
        convenient,
        orbit_avoidance,
    })
}

/// Normal fan of `Δ(P_1) + … + Δ(P_k)` with its certificates. The empty
/// tuple gives the fan with the whole dual space as its only cone.
pub fn build_convenient_fan(rank: usize, tuple: &[LaurentPolynomial]) -> Result<(Fan, Certificates)> {
    let polytopes: Vec<LatticePolytope> = tuple
        .iter()
        .map(|p| p.newton_polytope())
        .collect::<Result<_>>()?;
    for p in &polytopes {
        if p.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: p.rank(),
            });
        }
    }
    let fan = if polytopes.is_empty() {
        Fan::whole_space(rank)
    } else {
        LatticePolytope::sum_all(&polytopes)?.normal_fan()
    };
    let certs = certify(rank, &polytopes, &fan)?;
    if let Some(v) = certs.developed.violation() {
        return Err(Error::NotDeveloped(format!(
            "face {} of the Minkowski sum decomposes without a vertex summand",
            format_points(&v.face.vertices)
        )));
    }
    Ok((fan, certs))
}

fn choose_split(pivot: &LaurentPolynomial, forced: Option<&Covector>) -> Result<TorusSplit> {
    let poly = pivot.newton_polytope()?;
    let phi = match forced {
        Some(phi) => {
            if !is_generic_covector(phi, &poly) {
                return Err(Error::InvalidArgument(format!(
                    "covector {phi} is not generic for the pivot {pivot}"
                )));
            }
            phi.clone()
        }
        None => find_generic_covector(&poly),
    };
    TorusSplit::complete(&phi)
}

/// Deterministic driver with default options.
pub fn good_system(rank: usize, system: &[LaurentPolynomial]) -> Result<CompactificationResult> {
    good_system_with(rank, system, &Options::default())
}

pub fn good_system_with(
    rank: usize,
    system: &[LaurentPolynomial],
    opts: &Options,
) -> Result<CompactificationResult> {
    let mut current = nonzero(system, rank)?;
    let mut embedding: Vec<LatticeVector> = (0..rank).map(|i| LatticeVector::unit(rank, i)).collect();
    let mut levels = Vec::new();
    let mut tuple = Vec::new();
    let mut warnings = Vec::new();
    let mut level = 1;
    while !current.is_empty() {
        reject_units(&current, level)?;
        let level_rank = rank + 1 - level;
        let pivot = current[0].clone();
        tuple.push(pull_back(&pivot, &embedding, rank));
        if current.len() == 1 {
            levels.push(LevelState {
                level,
                rank: level_rank,
                system: current.clone(),
                pivot,
                split: None,
                embedding: embedding.clone(),
                coeffs_before: 0,
                coeffs_after: 0,
                stop: StopReason::SingleEquation,
            });
            break;
        }
        let forced = if level == 1 { opts.level1_phi.as_ref() } else { None };
        let split = choose_split(&pivot, forced)?;
        let proj = project(&current, &split)?;
        let mut eqs = proj.equations;
        let after_dedup = eqs.len();
        let mut stop = if eqs.is_empty() {
            StopReason::AllCoefficientsVanish
        } else {
            StopReason::Continue
        };
        if eqs.len() > opts.cap {
            eqs.truncate(opts.cap);
            stop = StopReason::CapWarning;
            warnings.push(format!(
                "level {level}: kept {} of {after_dedup} projected equations; the computed codimension may be too small",
                opts.cap
            ));
        }
        let next_embedding: Vec<LatticeVector> = split
            .kernel_basis
            .iter()
            .map(|b| {
                b.0.iter()
                    .zip(&embedding)
                    .fold(LatticeVector::zero(rank), |acc, (k, v)| &acc + &v.scale(k))
            })
            .collect();
        levels.push(LevelState {
            level,
            rank: level_rank,
            system: current.clone(),
            pivot,
            split: Some(split),
            embedding: embedding.clone(),
            coeffs_before: proj.raw_count,
            coeffs_after: eqs.len(),
            stop,
        });
        embedding = next_embedding;
        current = eqs;
        level += 1;
    }
    let (fan, certificates) = build_convenient_fan(rank, &tuple)?;
    Ok(CompactificationResult {
        rank,
        codim: tuple.len(),
        tuple,
        fan,
        certificates,
        levels,
        warnings,
        attempts: 1,
    })
}

/// `(dim, codim)` of the variety defined by the system.
pub fn dimension(rank: usize, system: &[LaurentPolynomial]) -> Result<(usize, usize)> {
    let r = good_system(rank, system)?;
    Ok((r.dim(), r.codim))
}

fn random_combination(
    rng: &mut ChaCha8Rng,
    split: &TorusSplit,
    polys: &[UnivariatePoly],
    bound: i64,
) -> UnivariatePoly {
    loop {
        let lambda: Vec<BigRational> = polys
            .iter()
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
            .collect();
        if lambda.iter().any(|l| !l.is_zero()) {
            let refs: Vec<&UnivariatePoly> = polys.iter().collect();
            return UnivariatePoly::linear_combination(split, &refs, &lambda);
        }
    }
}

fn randomized_attempt(
    rank: usize,
    system: &[LaurentPolynomial],
    k: usize,
    rng: &mut ChaCha8Rng,
    bound: i64,
) -> std::result::Result<CompactificationResult, String> {
    let mut current = system.to_vec();
    let mut embedding: Vec<LatticeVector> = (0..rank).map(|i| LatticeVector::unit(rank, i)).collect();
    let mut levels = Vec::new();
    let mut tuple = Vec::new();
    for level in 1..=k {
        let level_rank = rank + 1 - level;
        let pivot = current
            .iter()
            .find(|p| !p.is_zero())
            .cloned()
            .ok_or_else(|| format!("level {level}: every equation vanished"))?;
        if pivot.is_monomial() {
            return Err(format!("level {level}: pivot {pivot} is a unit"));
        }
        tuple.push(pull_back(&pivot, &embedding, rank));
        if level == k {
            levels.push(LevelState {
                level,
                rank: level_rank,
                system: current.clone(),
                pivot,
                split: None,
                embedding: embedding.clone(),
                coeffs_before: 0,
                coeffs_after: 0,
                stop: StopReason::SingleEquation,
            });
            break;
        }
        let split = choose_split(&pivot, None).map_err(|e| e.to_string())?;
        let (pu, _) = pivot.to_univariate(&split).map_err(|e| e.to_string())?;
        let p = pu.degree().unwrap_or(0);
        let us: Vec<UnivariatePoly> = current
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| f.to_univariate(&split).map(|(u, _)| u))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        let mut next = Vec::new();
        for _ in 0..k - level {
            let g = random_combination(rng, &split, &us, bound);
            let q = g.degree().unwrap_or(0);
            let r = resultant(&pu, &g, p, q).map_err(|e| e.to_string())?;
            if r.is_zero() {
                return Err(format!("level {level}: resultant vanished identically"));
            }
            if r.is_monomial() {
                return Err(format!("level {level}: resultant {r} is a unit"));
            }
            next.push(r.normalized());
        }
        let next_embedding: Vec<LatticeVector> = split
            .kernel_basis
            .iter()
            .map(|b| {
                b.0.iter()
                    .zip(&embedding)
                    .fold(LatticeVector::zero(rank), |acc, (c, v)| &acc + &v.scale(c))
            })
            .collect();
        levels.push(LevelState {
            level,
            rank: level_rank,
            system: current.clone(),
            pivot,
            split: Some(split),
            embedding: embedding.clone(),
            coeffs_before: next.len(),
            coeffs_after: next.len(),
            stop: StopReason::Continue,
        });
        embedding = next_embedding;
        current = next;
    }
    let (fan, certificates) = build_convenient_fan(rank, &tuple).map_err(|e| e.to_string())?;
    if !certificates.all_pass() {
        return Err("certificates failed".into());
    }
    Ok(CompactificationResult {
        rank,
        codim: k,
        tuple,
        fan,
        certificates,
        levels,
        warnings: Vec::new(),
        attempts: 0,
    })
}

/// Randomized driver for a known codimension `k`, seeded and deterministic.
pub fn good_system_randomized(
    rank: usize,
    system: &[LaurentPolynomial],
    k: usize,
    seed: u64,
) -> Result<CompactificationResult> {
    good_system_randomized_with(rank, system, k, seed, &Options::default())
}

pub fn good_system_randomized_with(
    rank: usize,
    system: &[LaurentPolynomial],
    k: usize,
    seed: u64,
    opts: &Options,
) -> Result<CompactificationResult> {
    if k > rank {
        return Err(Error::CodimTooLarge { k, n: rank });
    }
    if k == 0 {
        return Err(Error::InvalidArgument("codimension must be at least 1".into()));
    }
    let current = nonzero(system, rank)?;
    if current.is_empty() {
        return Err(Error::InvalidArgument("system has no nonzero equation".into()));
    }
    reject_units(&current, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = opts.coeff_range.max(1);
    let mut trace = Vec::new();
    for attempt in 1..=opts.retries {
        match randomized_attempt(rank, &current, k, &mut rng, bound) {
            Ok(mut r) => {
                r.attempts = attempt;
                return Ok(r);
            }
            Err(why) => trace.push(format!("attempt {attempt} (B={bound}): {why}")),
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::GenericityFailure {
        attempts: opts.retries,
        trace: trace.join("; "),
    })
}
