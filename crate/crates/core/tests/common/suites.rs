//! Seeded oracle-equivalence suites, shared by the acceptance run and the
//! property tests.

use std::collections::BTreeSet;

use rand::Rng;

use pencil_cert::exactmath::{
    isolate_real_roots, squarefree_degree6, sturm_count, Endpoint, PrimeField, UniPoly,
};
use pencil_cert::reduction::{singular_locus_with, LocusMethod, ReductionError};
use pencil_cert::Execution;

use super::{rat, rng};

#[derive(Debug, Default)]
pub struct SuiteResult {
    pub cases: usize,
    pub mismatches: usize,
    pub primes: BTreeSet<u64>,
}

pub fn bareiss_vs_cofactor(seed: u64, cases: usize) -> SuiteResult {
    let mut r = rng(seed);
    let mut out = SuiteResult::default();
    for _ in 0..cases {
        let n = r.random_range(1..=6);
        let m = super::random_matrix(&mut r, n, 20);
        out.cases += 1;
        if m.det_bareiss().unwrap() != m.det_cofactor().unwrap() {
            out.mismatches += 1;
        }
    }
    out
}

/// Outcome of comparing both singular-locus methods on one (pencil, p).
pub enum LocusComparison {
    Agree { points: usize },
    Disagree,
    /// The kernel-guided method does not apply (e.g. f vanishes mod p).
    NotApplicable,
}

pub fn compare_loci(pencil: &pencil_cert::pencil::PencilOfQuadrics, p: u64) -> LocusComparison {
    let field = PrimeField::new(p).unwrap();
    let kernel = singular_locus_with(pencil, &field, LocusMethod::KernelGuided, Execution::Parallel);
    let exhaustive = singular_locus_with(pencil, &field, LocusMethod::Exhaustive, Execution::Parallel);
    match (kernel, exhaustive) {
        (Ok(k), Ok(e)) => {
            if k.points == e.points && k.ranks == e.ranks && k.conical == e.conical {
                LocusComparison::Agree { points: e.points.len() }
            } else {
                LocusComparison::Disagree
            }
        }
        (Err(ReductionError::CharFormVanishes(_) | ReductionError::TooManyCandidates { .. }), _) => {
            LocusComparison::NotApplicable
        }
        (Err(a), Err(b)) if a == b => LocusComparison::NotApplicable,
        _ => LocusComparison::Disagree,
    }
}

/// Random integral pencils at odd primes p <= 13 dividing the discriminant,
/// until `want` comparisons with a nonempty singular locus have been made.
pub fn kernel_vs_exhaustive(seed: u64, want: usize) -> SuiteResult {
    let mut r = rng(seed);
    let mut out = SuiteResult::default();
    let mut nonempty = 0;
    for _ in 0..2000 {
        if nonempty >= want {
            break;
        }
        let Some(pencil) = super::random_pencil(&mut r) else { continue };
        let Ok(cd) = pencil.curve_data() else { continue };
        for p in [3u64, 5, 7, 11, 13] {
            if !cd.is_bad_prime(p) {
                continue;
            }
            match compare_loci(&pencil, p) {
                LocusComparison::Agree { points } => {
                    out.cases += 1;
                    out.primes.insert(p);
                    nonempty += usize::from(points > 0);
                }
                LocusComparison::Disagree => {
                    out.cases += 1;
                    out.mismatches += 1;
                }
                LocusComparison::NotApplicable => {}
            }
        }
    }
    assert!(nonempty >= want, "only {nonempty} nonempty loci generated");
    out
}

/// Half the sextics have a known number of real roots by construction; the
/// rest are random squarefree integer sextics.
pub fn sturm_vs_isolation(seed: u64, cases: usize) -> SuiteResult {
    let mut r = rng(seed);
    let mut out = SuiteResult::default();
    while out.cases < cases {
        let (f, known) = if out.cases % 2 == 0 {
            let real = 2 * r.random_range(0..=3);
            (super::sextic_with_real_roots(&mut r, real), Some(real))
        } else {
            let mut c: Vec<_> = (0..7).map(|_| rat(r.random_range(-9..=9))).collect();
            if r.random_bool(0.5) {
                c[6] = rat(1);
            }
            let f = UniPoly::new(c);
            if !squarefree_degree6(&f) {
                continue;
            }
            (f, None)
        };
        out.cases += 1;
        let total = sturm_count(&f, &Endpoint::NegInfinity, &Endpoint::PosInfinity).unwrap();
        let roots = isolate_real_roots(&f).unwrap();
        let each_one = roots.iter().all(|iv| {
            sturm_count(&f, &Endpoint::Finite(iv.lo.clone()), &Endpoint::Finite(iv.hi.clone())).unwrap() == 1
        });
        if total != roots.len() || !each_one || known.is_some_and(|k| k != total) {
            out.mismatches += 1;
        }
    }
    out
}
