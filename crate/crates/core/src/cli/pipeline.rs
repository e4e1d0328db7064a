//! The full certification run: curve data, every place, reduction reports.

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::parse::{parse_input, ParseError, ParsedInput, Witness};
use crate::exactmath::{is_prime_u64, PrimeField, UniPoly, MAX_PRIME};
use crate::fano::{fano_system, FULL_RANK};
use crate::localcert::{
    first_smooth_point, hensel_certify, padic_solution_tree, real_place_report, Liftability,
    LocalPointCertificate, PadicTreeReport, Place, SearchConfig, TreeOutcome,
    DEFAULT_LIFT_PRECISION, DEFAULT_OBSTRUCTION_DEPTH, DEFAULT_PRNG_SEED, DEFAULT_SEARCH_BUDGET,
    EXHAUSTIVE_PRIME_LIMIT,
};
use crate::par::Execution;
use crate::pencil::{CurveData, PencilOfQuadrics, Smoothness};
use crate::reduction::{
    cone_check, mod2_degeneracy, normalize_projective, reduce_pencil, singular_locus, Mod2Report,
    SingularLocusReport,
};

pub const DEFAULT_GOOD_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

pub const VERDICT_POSITIVE: &str = "locally rational at all places (per cited criteria)";

/// Facts the verdict leans on that are cited, not computed.
pub const EXTERNAL_INPUTS: [&str; 7] = [
    "Hensel's lemma: a smooth F_p-point of F1(X) lifts to a Q_p-point",
    "Hassett-Tschinkel, Benoist-Wittenberg: X is k-rational iff F1(X)(k) is nonempty",
    "Lang's theorem: F1(X) has F_p-points when X has good reduction at p",
    "Bhargava-Gross-Wang: a real Weierstrass point of C gives a real point of F1(X)",
    "a Q_v-line on X makes X rational over Q_v (projection from a line)",
    "Fisher-Yan: rank of Jac(C)(Q) and Pic^1_C(Q) empty (not computed here)",
    "irrationality of X over Q from Pic^1_C(Q) empty (not computed here)",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("search budget must be at least 1")]
    EmptyBudget,
    #[error("lift precision must be at least 1")]
    ZeroPrecision,
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub input_path: Option<PathBuf>,
    pub good_prime_samples: Vec<u64>,
    pub search_budget: u64,
    pub lift_precision: u32,
    pub prng_seed: u64,
    /// Added to the witnesses read from the input file.
    pub supplied_witnesses: Vec<Witness>,
    pub execution: Execution,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            input_path: None,
            good_prime_samples: DEFAULT_GOOD_PRIMES.to_vec(),
            search_budget: DEFAULT_SEARCH_BUDGET,
            lift_precision: DEFAULT_LIFT_PRECISION,
            prng_seed: DEFAULT_PRNG_SEED,
            supplied_witnesses: Vec::new(),
            execution: Execution::Parallel,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.search_budget == 0 {
            return Err(ConfigError::EmptyBudget);
        }
        if self.lift_precision == 0 {
            return Err(ConfigError::ZeroPrecision);
        }
        let bad = self
            .good_prime_samples
            .iter()
            .copied()
            .chain(self.supplied_witnesses.iter().map(Witness::prime))
            .find(|&p| p > MAX_PRIME || !is_prime_u64(p));
        match bad {
            Some(p) => Err(ConfigError::NotPrime(p)),
            None => Ok(()),
        }
    }

    fn search(&self) -> SearchConfig {
        SearchConfig {
            budget: self.search_budget,
            seed: self.prng_seed,
            execution: self.execution,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    CompletePositive,
    CompleteNegative,
    Incomplete,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::CompletePositive => 0,
            Status::CompleteNegative => 1,
            Status::Incomplete => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::CompletePositive => "complete-positive",
            Status::CompleteNegative => "complete-negative",
            Status::Incomplete => "incomplete",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaceRole {
    Real,
    BadPrime,
    GoodPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointSource {
    SuppliedWitness,
    Search { exhaustive: bool },
    /// No point found, but the reduction is smooth.
    SmoothReduction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceReport {
    pub role: PlaceRole,
    pub certificate: LocalPointCertificate,
    pub source: Option<PointSource>,
    pub notes: Vec<String>,
    /// Chart solutions mod p^k, when no smooth point was found at a small prime.
    pub solution_tree: Option<PadicTreeReport>,
}

impl PlaceReport {
    /// Counts towards "locally rational everywhere".
    pub fn is_settled(&self) -> bool {
        self.certificate.liftable == Liftability::Liftable
    }

    /// F1(X) provably has no points over this completion.
    pub fn is_obstructed(&self) -> bool {
        self.certificate.liftable == Liftability::NotLiftable
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularWitnessCheck {
    pub coords: [u64; 6],
    pub on_variety: bool,
    pub jacobian_rank: usize,
    pub in_locus: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReductionReport {
    pub prime: u64,
    pub singular_locus: Option<SingularLocusReport>,
    pub non_conical: Option<bool>,
    pub mod2: Option<Mod2Report>,
    pub witnesses: Vec<SingularWitnessCheck>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalityCertificate {
    pub q1: String,
    pub q2: String,
    pub witnesses: Vec<Witness>,
    pub good_prime_samples: Vec<u64>,
    pub search_budget: u64,
    pub lift_precision: u32,
    pub prng_seed: u64,
    pub characteristic_form: UniPoly<BigInt>,
    pub smoothness: Smoothness,
    pub curve: Option<CurveData>,
    pub places: Vec<PlaceReport>,
    pub reductions: Vec<ReductionReport>,
    pub external_inputs: Vec<String>,
    pub errors: Vec<String>,
    pub status: Status,
    pub verdict: String,
}

/// Reads, parses and certifies the configured input file.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<RationalityCertificate, PipelineError> {
    cfg.validate()?;
    let path = cfg.input_path.clone().unwrap_or_default();
    let text = std::fs::read_to_string(&path).map_err(|source| PipelineError::Io { path, source })?;
    let input = parse_input(&text)?;
    Ok(certify(&input, cfg))
}

/// Runs every stage in order on parsed input; failures land in the certificate.
pub fn certify(input: &ParsedInput, cfg: &PipelineConfig) -> RationalityCertificate {
    let pencil = &input.pencil;
    let mut witnesses = input.witnesses.clone();
    witnesses.extend(cfg.supplied_witnesses.iter().cloned());
    let mut cert = RationalityCertificate {
        q1: pencil.q1().to_string(),
        q2: pencil.q2().to_string(),
        witnesses,
        good_prime_samples: cfg.good_prime_samples.clone(),
        search_budget: cfg.search_budget,
        lift_precision: cfg.lift_precision,
        prng_seed: cfg.prng_seed,
        characteristic_form: pencil.characteristic_form().clone(),
        smoothness: pencil.smoothness_check(),
        curve: None,
        places: Vec::new(),
        reductions: Vec::new(),
        external_inputs: EXTERNAL_INPUTS.iter().map(|s| s.to_string()).collect(),
        errors: Vec::new(),
        status: Status::Incomplete,
        verdict: String::new(),
    };
    match cert.smoothness {
        Smoothness::Degenerate => {
            cert.verdict = "degenerate pencil".into();
            cert.errors.push("characteristic form vanishes identically".into());
            return cert;
        }
        Smoothness::Singular => {
            cert.status = Status::CompleteNegative;
            cert.verdict = "singular intersection: X is not a smooth threefold".into();
            return cert;
        }
        Smoothness::Smooth => {}
    }
    let curve = match pencil.curve_data() {
        Ok(cd) => cd,
        Err(e) => {
            cert.errors.push(format!("curve data: {e}"));
            cert.verdict = format!("incomplete: curve data: {e}");
            return cert;
        }
    };

    let mut gaps: Vec<String> = Vec::new();
    let real = PlaceReport {
        role: PlaceRole::Real,
        certificate: real_place_report(&curve),
        source: None,
        notes: Vec::new(),
        solution_tree: None,
    };
    if !real.is_settled() {
        gaps.push("real place undetermined".into());
    }
    cert.places.push(real);

    for b in &curve.bad_primes {
        match b.to_u64().filter(|&p| p <= MAX_PRIME) {
            Some(p) => {
                let report = certify_prime(pencil, p, PlaceRole::BadPrime, &cert.witnesses, cfg, &mut cert.errors);
                if !report.is_settled() {
                    gaps.push(format!("no witness at {p}"));
                }
                cert.places.push(report);
            }
            None => {
                cert.errors.push(format!("bad prime {b} exceeds the supported range"));
                gaps.push(format!("bad prime {b} out of range"));
            }
        }
    }

    for &p in &cfg.good_prime_samples {
        if curve.is_bad_prime(p) {
            continue;
        }
        let report = certify_prime(pencil, p, PlaceRole::GoodPrime, &cert.witnesses, cfg, &mut cert.errors);
        if !report.is_settled() {
            gaps.push(format!("no point or smooth reduction at {p}"));
        }
        cert.places.push(report);
    }

    for b in &curve.bad_primes {
        if let Some(p) = b.to_u64().filter(|&p| p <= MAX_PRIME) {
            let r = reduction_report(pencil, p, &cert.witnesses);
            if let Some(e) = &r.error {
                cert.errors.push(format!("reduction mod {p}: {e}"));
                gaps.push(format!("reduction mod {p} failed"));
            }
            cert.reductions.push(r);
        }
    }

    cert.curve = Some(curve);
    let obstructed: Vec<String> = cert
        .places
        .iter()
        .filter(|r| r.is_obstructed())
        .map(|r| r.certificate.place.to_string())
        .collect();
    if !obstructed.is_empty() {
        cert.status = Status::CompleteNegative;
        cert.verdict = format!(
            "not locally rational: F1(X) has no points over Q_{}",
            obstructed.join(", Q_")
        );
    } else if gaps.is_empty() {
        cert.status = Status::CompletePositive;
        cert.verdict = VERDICT_POSITIVE.into();
    } else {
        cert.verdict = format!("incomplete: {}", gaps.join("; "));
    }
    cert
}

/// Supplied witnesses first, then a search; good primes fall back on
/// smooth reduction.
fn certify_prime(
    pencil: &PencilOfQuadrics,
    p: u64,
    role: PlaceRole,
    witnesses: &[Witness],
    cfg: &PipelineConfig,
    errors: &mut Vec<String>,
) -> PlaceReport {
    let field = PrimeField::new(p).expect("validated prime");
    let mut notes = Vec::new();
    for w in witnesses {
        let Witness::Fano { prime, chart, coords } = w else { continue };
        if *prime != p {
            continue;
        }
        let sys = fano_system(pencil, chart);
        match hensel_certify(&sys, coords, &field, cfg.lift_precision) {
            Ok(c) if c.liftable == Liftability::Liftable => {
                return PlaceReport {
                    role,
                    certificate: c,
                    source: Some(PointSource::SuppliedWitness),
                    notes,
                    solution_tree: None,
                };
            }
            Ok(c) => notes.push(format!(
                "supplied witness on chart {chart} has Jacobian rank {}",
                c.jacobian_rank.unwrap_or(0)
            )),
            Err(e) => notes.push(format!("supplied witness on chart {chart} rejected: {e}")),
        }
    }

    let search = cfg.search();
    let exhaustive = p <= EXHAUSTIVE_PRIME_LIMIT;
    if let Some(pt) = first_smooth_point(pencil, &field, &search) {
        let sys = fano_system(pencil, &pt.chart);
        match hensel_certify(&sys, &pt.coords, &field, cfg.lift_precision) {
            Ok(c) => {
                debug_assert_eq!(c.jacobian_rank, Some(FULL_RANK));
                return PlaceReport {
                    role,
                    certificate: c,
                    source: Some(PointSource::Search { exhaustive }),
                    notes,
                    solution_tree: None,
                };
            }
            Err(e) => errors.push(format!("search point at {p} failed to certify: {e}")),
        }
    }
    notes.push(if exhaustive {
        format!("exhaustive search found no smooth F_{p}-point")
    } else {
        format!("sampled search ({} per chart) found no smooth F_{p}-point", cfg.search_budget)
    });

    let smooth_reduction = role == PlaceRole::GoodPrime
        && p != 2
        && matches!(pencil.smoothness_mod_p(&field), Ok(Smoothness::Smooth));
    let mut solution_tree = None;
    let (liftable, justification, source) = if smooth_reduction {
        (
            Liftability::Liftable,
            format!("X has smooth reduction at {p}; F1(X) has a smooth F_{p}-point by Lang's theorem"),
            Some(PointSource::SmoothReduction),
        )
    } else if exhaustive {
        let tree = padic_solution_tree(pencil, &field, DEFAULT_OBSTRUCTION_DEPTH, cfg.execution);
        let verdict = match tree.outcome {
            TreeOutcome::Empty { level } => (
                Liftability::NotLiftable,
                format!(
                    "no chart of F1(X) has solutions mod {p}^{level}; the charts cover the \
                     Grassmannian over Z_{p}, so F1(X)(Q_{p}) is empty"
                ),
                None,
            ),
            TreeOutcome::Survives => {
                notes.push(format!("chart solutions persist mod {p}^{}", tree.depth));
                (Liftability::Undetermined, format!("no smooth F_{p}-point available"), None)
            }
            TreeOutcome::CapExceeded => {
                notes.push("solution tree exceeded its node cap".into());
                (Liftability::Undetermined, format!("no smooth F_{p}-point available"), None)
            }
        };
        solution_tree = Some(tree);
        verdict
    } else {
        (Liftability::Undetermined, format!("no smooth F_{p}-point available"), None)
    };
    PlaceReport {
        role,
        certificate: LocalPointCertificate {
            place: Place::Prime(p),
            chart: None,
            coordinates: None,
            jacobian_rank: None,
            liftable,
            justification,
            lift: None,
            real_roots: Vec::new(),
        },
        source,
        notes,
        solution_tree,
    }
}

fn reduction_report(pencil: &PencilOfQuadrics, p: u64, witnesses: &[Witness]) -> ReductionReport {
    let mut r = ReductionReport { prime: p, ..ReductionReport::default() };
    if p == 2 {
        r.mod2 = Some(mod2_degeneracy(pencil));
        return r;
    }
    let field = PrimeField::new(p).expect("validated prime");
    match singular_locus(pencil, &field) {
        Ok(locus) => {
            let red = reduce_pencil(pencil, &field);
            for w in witnesses {
                let Witness::Singular { prime, coords } = w else { continue };
                if *prime != p {
                    continue;
                }
                let normalized = normalize_projective(&field, coords).expect("nonzero witness");
                r.witnesses.push(SingularWitnessCheck {
                    coords: *coords,
                    on_variety: red.on_variety(&normalized),
                    jacobian_rank: red.jacobian_rank(&normalized),
                    in_locus: locus.points.contains(&normalized),
                });
            }
            r.non_conical = Some(cone_check(&locus));
            r.singular_locus = Some(locus);
        }
        Err(e) => r.error = Some(e.to_string()),
    }
    r
}

/// Whether a bad prime's place was settled by the given witness kind.
pub fn settled_by(cert: &RationalityCertificate, p: u64) -> Option<PointSource> {
    cert.places
        .iter()
        .find(|r| r.certificate.place == Place::Prime(p))
        .and_then(|r| r.is_settled().then_some(r.source).flatten())
}
