//! Local point certificates: smooth F_p-points on the Fano charts, their
//! Newton lifts to Z/p^k, and the real place.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{fp_linalg, PrimeField, RootInterval, Scalar};
use crate::fano::{fano_system, vanishes_mod, FanoSystem, GrassmannChart, FULL_RANK, PARAMS};
use crate::par::{self, Execution};
use crate::pencil::{CurveData, PencilOfQuadrics};

/// Primes up to this bound are scanned exhaustively (p^8 points per chart).
pub const EXHAUSTIVE_PRIME_LIMIT: u64 = 5;
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;
pub const DEFAULT_LIFT_PRECISION: u32 = 3;
pub const DEFAULT_PRNG_SEED: u64 = 0x5eed_0f1a_2b3c_4d5e;

const SAMPLE_BLOCK: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalError {
    #[error("point is not on the Fano system")]
    NotOnFano,
    #[error("budget exhausted, none found at p = {prime} ({evaluated} points, exhaustive: {exhaustive})")]
    NoneFound { prime: u64, evaluated: u64, exhaustive: bool },
    #[error("Jacobian rank {0} < 6, cannot lift")]
    RankDeficient(usize),
    #[error("zero vector is not a projective point")]
    ZeroVector,
    #[error("search budget must be at least 1")]
    EmptyBudget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Liftability {
    Liftable,
    NotLiftable,
    /// The available criterion does not apply; no conclusion either way.
    Undetermined,
}

impl fmt::Display for Liftability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Liftability::Liftable => "liftable",
            Liftability::NotLiftable => "not liftable",
            Liftability::Undetermined => "undetermined",
        })
    }
}

/// An integer point solving the chart equations modulo p^precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HenselLift {
    pub precision: u32,
    pub modulus: BigInt,
    pub coordinates: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPointCertificate {
    pub place: Place,
    pub chart: Option<GrassmannChart>,
    pub coordinates: Option<[u64; PARAMS]>,
    pub jacobian_rank: Option<usize>,
    pub liftable: Liftability,
    pub justification: String,
    pub lift: Option<HenselLift>,
    pub real_roots: Vec<RootInterval>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmoothPoint {
    pub chart: GrassmannChart,
    pub coords: [u64; PARAMS],
    pub rank: usize,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Samples per chart when the scan is not exhaustive.
    pub budget: u64,
    pub seed: u64,
    /// `None` scans exhaustively iff p <= EXHAUSTIVE_PRIME_LIMIT.
    pub exhaustive: Option<bool>,
    /// `None` searches all 15 charts.
    pub charts: Option<Vec<GrassmannChart>>,
    pub execution: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_SEARCH_BUDGET,
            seed: DEFAULT_PRNG_SEED,
            exhaustive: None,
            charts: None,
            execution: Execution::Parallel,
        }
    }
}

impl SearchConfig {
    fn is_exhaustive(&self, p: u64) -> bool {
        self.exhaustive.unwrap_or(p <= EXHAUSTIVE_PRIME_LIMIT)
    }

    fn charts(&self) -> Vec<GrassmannChart> {
        self.charts.clone().unwrap_or_else(GrassmannChart::all)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub prime: u64,
    pub exhaustive: bool,
    pub evaluated: u64,
    /// Sorted by (chart pivots, coordinates), no duplicates.
    pub points: Vec<SmoothPoint>,
}

/// The point with index `i` in lexicographic order, t1 most significant.
fn point_from_index(mut i: u64, p: u64) -> [u64; PARAMS] {
    let mut pt = [0u64; PARAMS];
    for k in (0..PARAMS).rev() {
        pt[k] = i % p;
        i /= p;
    }
    pt
}

fn chart_size(p: u64) -> Option<u64> {
    p.checked_pow(PARAMS as u32)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A generator depending only on (seed, p, chart, block), never on scheduling.
fn block_rng(seed: u64, p: u64, chart: &GrassmannChart, block: u64) -> ChaCha8Rng {
    let (i, j) = chart.pivots();
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(seed ^ splitmix(p)));
    rng.set_stream(((i * 6 + j) as u64) << 40 | block);
    rng
}

/// Every smooth point of one chart, exhaustively, in lexicographic order.
pub fn scan_chart(
    pencil: &PencilOfQuadrics,
    chart: &GrassmannChart,
    field: &PrimeField,
    exec: Execution,
) -> Vec<SmoothPoint> {
    let p = field.modulus();
    let n = chart_size(p).expect("exhaustive scan needs p^8 < 2^64");
    let sys = fano_system(pencil, chart).compile(field);
    par::filter_map_range(exec, n, |i| {
        let pt = point_from_index(i, p);
        match sys.smooth_rank(&pt) {
            Some(rank) if rank == FULL_RANK => Some(SmoothPoint { chart: *chart, coords: pt, rank }),
            _ => None,
        }
    })
}

fn sample_chart(
    pencil: &PencilOfQuadrics,
    chart: &GrassmannChart,
    field: &PrimeField,
    cfg: &SearchConfig,
) -> Vec<SmoothPoint> {
    let p = field.modulus();
    let sys = fano_system(pencil, chart).compile(field);
    let blocks = cfg.budget.div_ceil(SAMPLE_BLOCK);
    let found: Vec<Vec<SmoothPoint>> = par::filter_map_range(cfg.execution, blocks, |b| {
        let mut rng = block_rng(cfg.seed, p, chart, b);
        let count = SAMPLE_BLOCK.min(cfg.budget - b * SAMPLE_BLOCK);
        let hits: Vec<SmoothPoint> = (0..count)
            .filter_map(|_| {
                let pt: [u64; PARAMS] = std::array::from_fn(|_| rng.random_range(0..p));
                match sys.smooth_rank(&pt) {
                    Some(rank) if rank == FULL_RANK => {
                        Some(SmoothPoint { chart: *chart, coords: pt, rank })
                    }
                    _ => None,
                }
            })
            .collect();
        (!hits.is_empty()).then_some(hits)
    });
    let mut pts: Vec<SmoothPoint> = found.into_iter().flatten().collect();
    pts.sort();
    pts.dedup();
    pts
}

/// Smooth F_p-points on the requested charts: exhaustive for small p,
/// seeded sampling within `budget` per chart otherwise.
pub fn search_smooth_points(
    pencil: &PencilOfQuadrics,
    field: &PrimeField,
    cfg: &SearchConfig,
) -> Result<SearchReport, LocalError> {
    let p = field.modulus();
    let exhaustive = cfg.is_exhaustive(p) && chart_size(p).is_some();
    if !exhaustive && cfg.budget == 0 {
        return Err(LocalError::EmptyBudget);
    }
    let charts = cfg.charts();
    let mut points = Vec::new();
    let mut evaluated = 0u64;
    for chart in &charts {
        if exhaustive {
            points.extend(scan_chart(pencil, chart, field, cfg.execution));
            evaluated = evaluated.saturating_add(chart_size(p).unwrap());
        } else {
            points.extend(sample_chart(pencil, chart, field, cfg));
            evaluated = evaluated.saturating_add(cfg.budget);
        }
    }
    points.sort();
    if points.is_empty() {
        return Err(LocalError::NoneFound { prime: p, evaluated, exhaustive });
    }
    Ok(SearchReport { prime: p, exhaustive, evaluated, points })
}

/// The lexicographically first smooth point, trying charts in order. Stops
/// at the first chart that has one.
pub fn first_smooth_point(
    pencil: &PencilOfQuadrics,
    field: &PrimeField,
    cfg: &SearchConfig,
) -> Option<SmoothPoint> {
    let p = field.modulus();
    let exhaustive = cfg.is_exhaustive(p) && chart_size(p).is_some();
    for chart in cfg.charts() {
        let hit = if exhaustive {
            let sys = fano_system(pencil, &chart).compile(field);
            par::find_first_range(cfg.execution, chart_size(p).unwrap(), |i| {
                let pt = point_from_index(i, p);
                match sys.smooth_rank(&pt) {
                    Some(rank) if rank == FULL_RANK => Some(SmoothPoint { chart, coords: pt, rank }),
                    _ => None,
                }
            })
        } else {
            sample_chart(pencil, &chart, field, cfg).into_iter().next()
        };
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Number of smooth F_p-points on each of the 15 charts (exhaustive).
pub fn chart_census(
    pencil: &PencilOfQuadrics,
    field: &PrimeField,
    exec: Execution,
) -> Vec<(GrassmannChart, usize)> {
    GrassmannChart::all()
        .into_iter()
        .map(|c| (c, scan_chart(pencil, &c, field, exec).len()))
        .collect()
}

/// Default depth k of the p-adic solution tree (solutions mod p^k).
pub const DEFAULT_OBSTRUCTION_DEPTH: u32 = 4;
/// Upper bound on the nodes of one chart's tree at any level.
pub const OBSTRUCTION_NODE_CAP: usize = 1 << 20;

/// Number of chart solutions modulo p, p^2, ..., one entry per level reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTree {
    pub chart: GrassmannChart,
    pub counts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeOutcome {
    /// Every chart runs out of solutions by level `level`.
    Empty { level: u32 },
    /// Some chart still has solutions mod p^depth.
    Survives,
    /// A level grew past the node cap; no conclusion.
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicTreeReport {
    pub prime: u64,
    pub depth: u32,
    pub charts: Vec<ChartTree>,
    pub outcome: TreeOutcome,
}

/// All d in F_p^8 with J d = rhs.
fn affine_solutions(field: &PrimeField, jac: &[Vec<u64>], rhs: &[u64]) -> Vec<[u64; PARAMS]> {
    let mut rows: Vec<Vec<u64>> = jac
        .iter()
        .zip(rhs)
        .map(|(row, &r)| row.iter().copied().chain([r]).collect())
        .collect();
    let pivots = fp_linalg::rref(field, &mut rows);
    if pivots.last() == Some(&PARAMS) {
        return Vec::new();
    }
    let free: Vec<usize> = (0..PARAMS).filter(|c| !pivots.contains(c)).collect();
    let p = field.modulus();
    let total = p.pow(free.len() as u32);
    (0..total)
        .map(|mut idx| {
            let mut d = [0u64; PARAMS];
            for &c in &free {
                d[c] = idx % p;
                idx /= p;
            }
            for (row, &pc) in rows.iter().zip(&pivots) {
                let dot = free.iter().fold(0, |acc, &c| field.add(acc, field.mul(row[c], d[c])));
                d[pc] = field.sub(row[PARAMS], dot);
            }
            d
        })
        .collect()
}

/// Solutions mod p^(e+1) above the solutions `level` mod p^e, for e >= 1.
/// F(x + p^e d) = F(x) + p^e J(x) d mod p^(e+1), so each node lifts along an
/// affine subspace of F_p^8.
fn lift_level(sys: &FanoSystem, field: &PrimeField, level: &[Vec<BigInt>], e: u32) -> Vec<Vec<BigInt>> {
    let compiled = sys.compile(field);
    let p = BigInt::from(field.modulus());
    let pe = num_traits::pow(p.clone(), e as usize);
    let m = &pe * &p;
    let mut next = Vec::new();
    for x in level {
        let base: [u64; PARAMS] = std::array::from_fn(|k| field.reduce(&x[k]));
        let rhs: Vec<u64> = sys
            .equations()
            .iter()
            .map(|eq| field.neg(field.reduce(&(eq.eval_mod_big(x, &m) / &pe))))
            .collect();
        for d in affine_solutions(field, &compiled.jacobian_at(&base), &rhs) {
            next.push(x.iter().zip(d).map(|(xi, di)| xi + &pe * BigInt::from(di)).collect());
        }
    }
    next
}

/// Exhaustive tree of chart solutions mod p^k for k = 1..=depth on all 15
/// charts. Every Z_p-point of the Grassmannian lies in some chart over Z_p,
/// so an empty level on every chart shows F1(X)(Q_p) is empty.
pub fn padic_solution_tree(
    pencil: &PencilOfQuadrics,
    field: &PrimeField,
    depth: u32,
    exec: Execution,
) -> PadicTreeReport {
    let p = field.modulus();
    let n = chart_size(p).expect("solution tree needs p^8 < 2^64");
    let mut charts = Vec::new();
    let mut deepest = 0;
    let mut capped = false;
    let mut survives = false;
    for chart in GrassmannChart::all() {
        let sys = fano_system(pencil, &chart);
        let compiled = sys.compile(field);
        let mut level: Vec<Vec<BigInt>> = par::filter_map_range(exec, n, |i| {
            let pt = point_from_index(i, p);
            compiled.on_fano(&pt).then(|| pt.iter().map(|&c| BigInt::from(c)).collect())
        });
        let mut counts = vec![level.len()];
        let mut chart_capped = false;
        for e in 1..depth.max(1) {
            if level.is_empty() {
                break;
            }
            if level.len() > OBSTRUCTION_NODE_CAP {
                chart_capped = true;
                break;
            }
            level = lift_level(&sys, field, &level, e);
            counts.push(level.len());
        }
        if level.is_empty() {
            deepest = deepest.max(counts.len() as u32);
        } else if chart_capped {
            capped = true;
        } else {
            survives = true;
        }
        charts.push(ChartTree { chart, counts });
    }
    let outcome = if survives {
        TreeOutcome::Survives
    } else if capped {
        TreeOutcome::CapExceeded
    } else {
        TreeOutcome::Empty { level: deepest }
    };
    PadicTreeReport { prime: p, depth: depth.max(1), charts, outcome }
}

/// Linear Hensel lifting of a smooth point to a solution modulo p^precision.
///
/// Six independent Jacobian columns at the base point are corrected; the
/// other two coordinates stay at their residues.
pub fn newton_lift(
    sys: &FanoSystem,
    pt: &[u64; PARAMS],
    field: &PrimeField,
    precision: u32,
) -> Result<HenselLift, LocalError> {
    let compiled = sys.compile(field);
    let base: [u64; PARAMS] = pt.map(|x| x % field.modulus());
    if !compiled.on_fano(&base) {
        return Err(LocalError::NotOnFano);
    }
    let jac = compiled.jacobian_at(&base);
    let mut echelon = jac.clone();
    let cols = fp_linalg::rref(field, &mut echelon);
    if cols.len() < FULL_RANK || jac.len() != FULL_RANK {
        return Err(LocalError::RankDeficient(cols.len()));
    }
    let square: Vec<Vec<u64>> = jac
        .iter()
        .map(|row| cols.iter().map(|&c| row[c]).collect())
        .collect();
    let inv = fp_linalg::inverse(field, &square).expect("pivot columns are independent");

    let p = BigInt::from(field.modulus());
    let mut x: Vec<BigInt> = base.iter().map(|&c| BigInt::from(c)).collect();
    let mut pe = BigInt::one();
    for _ in 1..precision.max(1) {
        let next = &pe * &p;
        let m = &next * &p;
        // F(x) = 0 mod next; c = F(x) / next mod p
        let c: Vec<u64> = sys
            .equations()
            .iter()
            .map(|e| {
                let r = e.eval_mod_big(&x, &m);
                debug_assert!((&r % &next).is_zero());
                field.reduce(&(r / &next))
            })
            .collect();
        for (row, &col) in inv.iter().zip(&cols) {
            let dot = row.iter().zip(&c).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)));
            let delta = field.neg(dot);
            x[col] += &next * BigInt::from(delta);
        }
        pe = next;
    }
    let modulus = num_traits::pow(p, precision.max(1) as usize);
    debug_assert!(vanishes_mod(sys, &x, &modulus));
    Ok(HenselLift { precision: precision.max(1), modulus, coordinates: x })
}

/// Certificate for a finite place from an on-surface point: liftable iff the
/// Jacobian has full rank there, with an explicit lift when `precision >= 2`.
pub fn hensel_certify(
    sys: &FanoSystem,
    pt: &[u64; PARAMS],
    field: &PrimeField,
    precision: u32,
) -> Result<LocalPointCertificate, LocalError> {
    let base: [u64; PARAMS] = pt.map(|x| x % field.modulus());
    let check = sys.compile(field).check(&base);
    if !check.on_fano {
        return Err(LocalError::NotOnFano);
    }
    let p = field.modulus();
    let (liftable, lift, justification) = if check.smooth {
        let lift = if precision >= 2 {
            Some(newton_lift(sys, &base, field, precision)?)
        } else {
            None
        };
        (
            Liftability::Liftable,
            lift,
            format!("smooth F_{p}-point (Jacobian rank 6); Hensel's lemma gives a Q_{p}-point"),
        )
    } else {
        (
            Liftability::NotLiftable,
            None,
            format!(
                "on the Fano surface mod {p} but Jacobian rank {} < 6; not certifiably smooth",
                check.jacobian_rank
            ),
        )
    };
    Ok(LocalPointCertificate {
        place: Place::Prime(p),
        chart: Some(sys.chart()),
        coordinates: Some(base),
        jacobian_rank: Some(check.jacobian_rank),
        liftable,
        justification,
        lift,
        real_roots: Vec::new(),
    })
}

/// The real place: a real Weierstrass point of z^2 = f(t) forces a real
/// point on F1(X). Without one the criterion is silent.
pub fn real_place_report(cd: &CurveData) -> LocalPointCertificate {
    let n = cd.real_weierstrass_count;
    let (liftable, justification) = if n >= 1 {
        (
            Liftability::Liftable,
            format!(
                "C has {n} real Weierstrass point(s); a real Weierstrass point forces a real point \
                 on F1(X) (cited criterion: Bhargava-Gross-Wang, real orbits)"
            ),
        )
    } else {
        (
            Liftability::Undetermined,
            "C has no real Weierstrass point; the real Weierstrass point criterion does not apply"
                .to_string(),
        )
    };
    LocalPointCertificate {
        place: Place::Real,
        chart: None,
        coordinates: None,
        jacobian_rank: None,
        liftable,
        justification,
        lift: None,
        real_roots: cd.real_roots.clone(),
    }
}

/// Whether both forms vanish at the projective point `v`.
pub fn verify_projective_point<T: Scalar>(
    pencil: &PencilOfQuadrics,
    v: &[T; 6],
) -> Result<bool, LocalError> {
    if v.iter().all(Scalar::is_zero_scalar) {
        return Err(LocalError::ZeroVector);
    }
    Ok(pencil.forms().iter().all(|q| q.evaluate(v).is_zero_scalar()))
}
