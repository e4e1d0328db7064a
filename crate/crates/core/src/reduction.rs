//! Reductions X_p of the threefold mod p: singular locus, cone check, and
//! the characteristic-2 factorization analysis.

use std::fmt;

use crate::exactmath::{fp_linalg, roots_in_field, ExactMatrix, FpPoly, PrimeField};
use crate::par::{self, Execution};
use crate::pencil::PencilOfQuadrics;
use crate::quadric::{FpForm, VARIABLES};

/// Primes up to this bound use the exhaustive P^5 scan by default.
pub const EXHAUSTIVE_LOCUS_LIMIT: u64 = 13;
/// Most candidates tried from one kernel of dimension >= 3.
pub const KERNEL_CANDIDATE_CAP: u64 = 1_000_000;
/// Largest p^5 accepted by an explicit exhaustive scan.
const EXHAUSTIVE_SCAN_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("p = 2: use the mod-2 analysis")]
    CharacteristicTwo,
    #[error("degenerate reduction: Q{0} vanishes identically mod {1}")]
    DegenerateReduction(usize, u64),
    #[error("reduction mod {0} may not be a complete intersection")]
    NotCompleteIntersection(u64),
    #[error("characteristic form vanishes mod {0}; kernel-guided method inapplicable")]
    CharFormVanishes(u64),
    #[error("kernel of dimension {dim} at p = {prime} has {count} candidates, cap is {cap}")]
    TooManyCandidates { prime: u64, dim: usize, count: u64, cap: u64 },
    #[error("exhaustive scan of P^5(F_{0}) is too large")]
    ScanTooLarge(u64),
}

/// Both forms reduced coefficient-wise mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPencil {
    pub prime: u64,
    pub q1: FpForm,
    pub q2: FpForm,
}

impl ReducedPencil {
    pub fn forms(&self) -> [&FpForm; 2] {
        [&self.q1, &self.q2]
    }

    /// Indices (1 or 2) of forms vanishing identically.
    pub fn degenerate_forms(&self) -> Vec<usize> {
        (1..=2).filter(|&i| self.forms()[i - 1].is_zero()).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degenerate_forms().is_empty()
    }

    pub fn on_variety(&self, v: &[u64; 6]) -> bool {
        self.q1.eval(v) == 0 && self.q2.eval(v) == 0
    }

    /// Rank of the 2x6 matrix of gradients at `v`.
    pub fn jacobian_rank(&self, v: &[u64; 6]) -> usize {
        let rows = vec![self.q1.gradient(v).to_vec(), self.q2.gradient(v).to_vec()];
        fp_linalg::rank(self.q1.field(), &rows)
    }
}

pub fn reduce_pencil(p: &PencilOfQuadrics, field: &PrimeField) -> ReducedPencil {
    ReducedPencil {
        prime: field.modulus(),
        q1: p.q1().reduce_mod(field),
        q2: p.q2().reduce_mod(field),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocusMethod {
    KernelGuided,
    Exhaustive,
}

impl fmt::Display for LocusMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocusMethod::KernelGuided => "kernel-guided",
            LocusMethod::Exhaustive => "exhaustive",
        })
    }
}

/// A singular member of the pencil mod p: M1 - t M2, or M2 itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberRoot {
    Finite(u64),
    Infinity,
}

impl fmt::Display for FiberRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberRoot::Finite(t) => write!(f, "{t}"),
            FiberRoot::Infinity => write!(f, "infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLocusReport {
    pub prime: u64,
    /// Normalized, sorted, distinct.
    pub points: Vec<[u64; 6]>,
    pub ranks: Vec<usize>,
    pub method: LocusMethod,
    pub conical: bool,
    /// Repeated roots inspected by the kernel-guided method.
    pub fibers: Vec<FiberRoot>,
}

impl SingularLocusReport {
    fn new(prime: u64, mut found: Vec<([u64; 6], usize)>, method: LocusMethod, fibers: Vec<FiberRoot>) -> Self {
        found.sort();
        found.dedup();
        let conical = found.iter().any(|&(_, r)| r == 0);
        let (points, ranks) = found.into_iter().unzip();
        Self { prime, points, ranks, method, conical, fibers }
    }

    /// Appends a point, keeping the report's invariants.
    pub fn with_point(&self, point: [u64; 6], rank: usize) -> Self {
        let found = self.points.iter().copied().zip(self.ranks.iter().copied()).chain([(point, rank)]);
        Self::new(self.prime, found.collect(), self.method, self.fibers.clone())
    }
}

/// Scales so the first nonzero coordinate is 1; `None` for the zero vector.
pub fn normalize_projective(field: &PrimeField, v: &[u64; 6]) -> Option<[u64; 6]> {
    let lead = v.iter().map(|&x| x % field.modulus()).find(|&x| x != 0)?;
    let inv = field.inv(lead)?;
    Some(v.map(|x| field.mul(x % field.modulus(), inv)))
}

/// True iff non-conical: no singular point has Jacobian rank 0.
pub fn cone_check(r: &SingularLocusReport) -> bool {
    !r.ranks.contains(&0)
}

fn check_complete_intersection(p: &PencilOfQuadrics, red: &ReducedPencil, field: &PrimeField) -> Result<(), ReductionError> {
    let prime = field.modulus();
    if prime == 2 {
        return Err(ReductionError::CharacteristicTwo);
    }
    if let Some(&i) = red.degenerate_forms().first() {
        return Err(ReductionError::DegenerateReduction(i, prime));
    }
    if red.q1.proportional_to(&red.q2) {
        return Err(ReductionError::NotCompleteIntersection(prime));
    }
    // Forms of rank <= 2 split over F_p or F_p^2; two of them might share a
    // factor, so such pairs are refused.
    let gram_rank = |m: ExactMatrix<u64>| {
        let rows: Vec<Vec<u64>> = (0..6).map(|i| m.row(i).to_vec()).collect();
        fp_linalg::rank(field, &rows)
    };
    let r1 = gram_rank(p.m1().reduce_mod(field).expect("odd prime"));
    let r2 = gram_rank(p.m2().reduce_mod(field).expect("odd prime"));
    if r1 <= 2 && r2 <= 2 {
        return Err(ReductionError::NotCompleteIntersection(prime));
    }
    Ok(())
}

/// Singular points of X_p: exhaustive for p <= 13, kernel-guided otherwise.
pub fn singular_locus(p: &PencilOfQuadrics, field: &PrimeField) -> Result<SingularLocusReport, ReductionError> {
    let method = if field.modulus() <= EXHAUSTIVE_LOCUS_LIMIT {
        LocusMethod::Exhaustive
    } else {
        LocusMethod::KernelGuided
    };
    singular_locus_with(p, field, method, Execution::Parallel)
}

pub fn singular_locus_with(
    p: &PencilOfQuadrics,
    field: &PrimeField,
    method: LocusMethod,
    exec: Execution,
) -> Result<SingularLocusReport, ReductionError> {
    let red = reduce_pencil(p, field);
    check_complete_intersection(p, &red, field)?;
    match method {
        LocusMethod::Exhaustive => exhaustive_locus(&red, field, exec),
        LocusMethod::KernelGuided => kernel_guided_locus(p, &red, field),
    }
}

fn exhaustive_locus(red: &ReducedPencil, field: &PrimeField, exec: Execution) -> Result<SingularLocusReport, ReductionError> {
    let q = field.modulus();
    match q.checked_pow(5) {
        Some(n) if n <= EXHAUSTIVE_SCAN_CAP => {}
        _ => return Err(ReductionError::ScanTooLarge(q)),
    }
    let mut found = Vec::new();
    // Points with leading 1 in position k, trailing coordinates free.
    for k in 0..6 {
        let tail = 5 - k;
        found.extend(par::filter_map_range(exec, q.pow(tail as u32), |mut i| {
            let mut v = [0u64; 6];
            v[k] = 1;
            for slot in v[k + 1..].iter_mut().rev() {
                *slot = i % q;
                i /= q;
            }
            if !red.on_variety(&v) {
                return None;
            }
            let r = red.jacobian_rank(&v);
            (r <= 1).then_some((v, r))
        }));
    }
    Ok(SingularLocusReport::new(q, found, LocusMethod::Exhaustive, Vec::new()))
}

/// Repeated roots of f mod p, plus infinity when deg(f mod p) <= 4.
fn singular_fibers(p: &PencilOfQuadrics, field: &PrimeField) -> Result<Vec<FiberRoot>, ReductionError> {
    let f = p.char_form_mod(field);
    let deg = f.degree().ok_or(ReductionError::CharFormVanishes(field.modulus()))?;
    let g = f.gcd(field, &f.derivative(field));
    let mut fibers: Vec<FiberRoot> = roots_in_field(field, &g).into_iter().map(FiberRoot::Finite).collect();
    if deg <= 4 {
        fibers.push(FiberRoot::Infinity);
    }
    Ok(fibers)
}

fn member_matrix(p: &PencilOfQuadrics, field: &PrimeField, fiber: FiberRoot) -> ExactMatrix<u64> {
    let m1 = p.m1().reduce_mod(field).expect("odd prime");
    let m2 = p.m2().reduce_mod(field).expect("odd prime");
    match fiber {
        FiberRoot::Finite(t) => ExactMatrix::from_fn(6, 6, |i, j| {
            field.sub(*m1.get(i, j), field.mul(t, *m2.get(i, j)))
        }),
        FiberRoot::Infinity => m2,
    }
}

fn combine(field: &PrimeField, basis: &[Vec<u64>], coeffs: &[u64]) -> [u64; 6] {
    let mut v = [0u64; 6];
    for (b, &c) in basis.iter().zip(coeffs) {
        for (vi, &bi) in v.iter_mut().zip(b) {
            *vi = field.add(*vi, field.mul(c, bi));
        }
    }
    v
}

/// Projective roots [r : s] of A r^2 + B rs + C s^2, or `None` if the form is zero.
fn binary_roots(field: &PrimeField, (a, b, c): (u64, u64, u64)) -> Option<Vec<[u64; 2]>> {
    if a == 0 && b == 0 && c == 0 {
        return None;
    }
    let mut out: Vec<[u64; 2]> = roots_in_field(field, &FpPoly::new(field, vec![c, b, a]))
        .into_iter()
        .map(|x| [x, 1])
        .collect();
    if a == 0 {
        out.push([1, 0]);
    }
    Some(out)
}

fn restricted_binary(form: &FpForm, a: &[u64; 6], b: &[u64; 6]) -> (u64, u64, u64) {
    let f = form.field();
    let qa = form.eval(a);
    let qb = form.eval(b);
    let ab: [u64; 6] = std::array::from_fn(|i| f.add(a[i], b[i]));
    (qa, f.sub(f.sub(form.eval(&ab), qa), qb), qb)
}

/// Every point of P(span(basis)) lying on X_p.
fn kernel_points(red: &ReducedPencil, field: &PrimeField, basis: &[Vec<u64>]) -> Result<Vec<[u64; 6]>, ReductionError> {
    let q = field.modulus();
    let dim = basis.len();
    match dim {
        0 => Ok(Vec::new()),
        1 => {
            let v = combine(field, basis, &[1]);
            Ok(red.on_variety(&v).then_some(v).into_iter().collect())
        }
        2 => {
            let a = combine(field, basis, &[1, 0]);
            let b = combine(field, basis, &[0, 1]);
            let g1 = restricted_binary(&red.q1, &a, &b);
            let g2 = restricted_binary(&red.q2, &a, &b);
            let candidates: Vec<[u64; 2]> = match binary_roots(field, g1).or_else(|| binary_roots(field, g2)) {
                Some(c) => c,
                None => (0..q).map(|x| [x, 1]).chain([[1, 0]]).collect(),
            };
            Ok(candidates
                .into_iter()
                .map(|rs| combine(field, basis, &rs))
                .filter(|v| red.on_variety(v))
                .collect())
        }
        _ => {
            let count = (1..dim as u32).try_fold(1u64, |acc, e| acc.checked_add(q.checked_pow(e)?));
            match count {
                Some(n) if n <= KERNEL_CANDIDATE_CAP => {}
                _ => {
                    return Err(ReductionError::TooManyCandidates {
                        prime: q,
                        dim,
                        count: count.unwrap_or(u64::MAX),
                        cap: KERNEL_CANDIDATE_CAP,
                    })
                }
            }
            let mut out = Vec::new();
            for k in 0..dim {
                let tail = (dim - 1 - k) as u32;
                for mut i in 0..q.pow(tail) {
                    let mut c = vec![0u64; dim];
                    c[k] = 1;
                    for slot in c[k + 1..].iter_mut().rev() {
                        *slot = i % q;
                        i /= q;
                    }
                    let v = combine(field, basis, &c);
                    if red.on_variety(&v) {
                        out.push(v);
                    }
                }
            }
            Ok(out)
        }
    }
}

/// A singular point v of X_p lies in the kernel of some member M1 - t0 M2,
/// and then t0 is a repeated root of f mod p (or infinity). Only those
/// kernels are searched.
fn kernel_guided_locus(p: &PencilOfQuadrics, red: &ReducedPencil, field: &PrimeField) -> Result<SingularLocusReport, ReductionError> {
    let fibers = singular_fibers(p, field)?;
    let mut found = Vec::new();
    for &fiber in &fibers {
        let basis = fp_linalg::nullspace(field, &member_matrix(p, field, fiber));
        for v in kernel_points(red, field, &basis)? {
            let v = normalize_projective(field, &v).expect("kernel vectors are nonzero");
            let r = red.jacobian_rank(&v);
            if r <= 1 {
                found.push((v, r));
            }
        }
    }
    Ok(SingularLocusReport::new(field.modulus(), found, LocusMethod::KernelGuided, fibers))
}

/// A linear form over F_2 in u..z, bit i for variable i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Linear(pub u8);

impl fmt::Display for F2Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..6)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| VARIABLES[i].to_string())
            .collect();
        if names.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&names.join(" + "))
        }
    }
}

/// Quadratic form over F_2: bit (i, j), i <= j, in a 36-bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct F2Quad(u64);

impl F2Quad {
    fn bit(i: usize, j: usize) -> u64 {
        let (i, j) = (i.min(j), i.max(j));
        1 << (6 * i + j)
    }

    fn from_form(q: &FpForm) -> Self {
        Self(q.terms().iter().filter(|(_, c)| c % 2 == 1).fold(0, |acc, &((i, j), _)| acc | Self::bit(i, j)))
    }

    fn product(a: F2Linear, b: F2Linear) -> Self {
        let mut m = 0u64;
        for i in 0..6 {
            for j in 0..6 {
                if a.0 >> i & 1 == 1 && b.0 >> j & 1 == 1 {
                    m ^= Self::bit(i, j);
                }
            }
        }
        // the xor over (i, j) and (j, i) gives a_i b_j + a_j b_i
        Self(m)
    }

    fn has_cross_terms(&self) -> bool {
        (0..6).any(|i| (i + 1..6).any(|j| self.0 & Self::bit(i, j) != 0))
    }

    /// The restriction to the hyperplane l = 0, written in the remaining
    /// variables by eliminating the highest variable of l.
    fn restrict(&self, l: F2Linear) -> Self {
        let k = (0..6).rev().find(|&i| l.0 >> i & 1 == 1).expect("nonzero linear form");
        let image = |i: usize| if i == k { F2Linear(l.0 ^ (1 << k)) } else { F2Linear(1 << i) };
        let mut m = 0u64;
        for i in 0..6 {
            for j in i..6 {
                if self.0 & Self::bit(i, j) != 0 {
                    m ^= Self::product(image(i), image(j)).0;
                }
            }
        }
        Self(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mod2FormReport {
    /// 1 for Q1, 2 for Q2.
    pub index: usize,
    pub reduced: String,
    /// Unordered factor pairs with the first factor <= the second.
    pub linear_factorizations: Vec<(F2Linear, F2Linear)>,
    pub square_of: Option<F2Linear>,
    pub verdict: String,
}

/// The other form restricted to a hyperplane factor becomes a square there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonReducedEvidence {
    pub factor_of: usize,
    pub hyperplane: F2Linear,
    pub restricted_form: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mod2Report {
    pub forms: Vec<Mod2FormReport>,
    pub non_reduced: Vec<NonReducedEvidence>,
    pub verdict: String,
}

fn analyze_f2_form(index: usize, form: &FpForm) -> Mod2FormReport {
    let q = F2Quad::from_form(form);
    let mut factorizations = Vec::new();
    for a in 1u8..64 {
        for b in a..64 {
            if F2Quad::product(F2Linear(a), F2Linear(b)) == q {
                factorizations.push((F2Linear(a), F2Linear(b)));
            }
        }
    }
    let square_of = factorizations.iter().find(|(a, b)| a == b).map(|&(a, _)| a);
    let verdict = if q.0 == 0 {
        "zero mod 2"
    } else if square_of.is_some() {
        "square of a linear form"
    } else if !factorizations.is_empty() {
        "product of two distinct linear forms"
    } else {
        "irreducible over F_2"
    };
    Mod2FormReport {
        index,
        reduced: form.to_string(),
        linear_factorizations: factorizations,
        square_of,
        verdict: verdict.to_string(),
    }
}

/// Factorization evidence for X_2 by exhaustive search over the 63 nonzero
/// linear forms on F_2^6.
pub fn mod2_degeneracy(p: &PencilOfQuadrics) -> Mod2Report {
    let f2 = PrimeField::new(2).expect("2 is prime");
    let red = reduce_pencil(p, &f2);
    let forms = [&red.q1, &red.q2];
    let reports: Vec<Mod2FormReport> = forms.iter().enumerate().map(|(i, f)| analyze_f2_form(i + 1, f)).collect();

    let mut non_reduced = Vec::new();
    for r in &reports {
        let other = 3 - r.index;
        let oq = F2Quad::from_form(forms[other - 1]);
        let mut hyperplanes: Vec<F2Linear> = r.linear_factorizations.iter().flat_map(|&(a, b)| [a, b]).collect();
        hyperplanes.sort();
        hyperplanes.dedup();
        for l in hyperplanes {
            let restricted = oq.restrict(l);
            if restricted.0 != 0 && !restricted.has_cross_terms() {
                non_reduced.push(NonReducedEvidence { factor_of: r.index, hyperplane: l, restricted_form: other });
            }
        }
    }

    let reducible = reports.iter().any(|r| !r.linear_factorizations.is_empty());
    let verdict = match (reducible, non_reduced.is_empty()) {
        (true, false) => "reducible and non-reduced (factorization evidence)",
        (true, true) => "reducible (factorization evidence)",
        (false, _) => "no factorization evidence",
    };
    Mod2Report { forms: reports, non_reduced, verdict: verdict.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quadric::QuadraticForm;

    fn form(terms: &[((usize, usize), i64)]) -> QuadraticForm {
        QuadraticForm::from_i64_terms(terms).unwrap()
    }

    #[test]
    fn q2_mod_2() {
        let red = reduce_pencil(&fixtures::reference_pencil(), &PrimeField::new(2).unwrap());
        assert_eq!(red.q2.to_string(), "uv + uw + uy");
        assert!(!red.is_degenerate());
    }

    #[test]
    fn degenerate_flag() {
        let q1 = form(&[((0, 1), 3), ((2, 2), 6)]);
        let q2 = form(&[((0, 0), 1), ((3, 4), 1)]);
        let red = reduce_pencil(&PencilOfQuadrics::new(q1, q2).unwrap(), &PrimeField::new(3).unwrap());
        assert_eq!(red.degenerate_forms(), vec![1]);
    }

    #[test]
    fn normalization() {
        let f7 = PrimeField::new(7).unwrap();
        let v = normalize_projective(&f7, &[0, 3, 1, 0, 0, 6]).unwrap();
        assert_eq!(v, [0, 1, 5, 0, 0, 2]);
        assert_eq!(normalize_projective(&f7, &v), Some(v));
        assert_eq!(normalize_projective(&f7, &[0; 6]), None);
    }

    #[test]
    fn cone_check_cases() {
        let empty = SingularLocusReport::new(5, vec![], LocusMethod::Exhaustive, vec![]);
        assert!(cone_check(&empty));
        assert!(!empty.conical);
        let one = empty.with_point([1, 0, 0, 0, 0, 0], 1);
        assert!(cone_check(&one));
        let cone = one.with_point([0, 1, 0, 0, 0, 0], 0);
        assert!(!cone_check(&cone));
        assert!(cone.conical);
    }

    #[test]
    fn binary_form_roots() {
        let f5 = PrimeField::new(5).unwrap();
        // r s
        assert_eq!(binary_roots(&f5, (0, 1, 0)).unwrap(), vec![[0, 1], [1, 0]]);
        // r^2 - s^2
        assert_eq!(binary_roots(&f5, (1, 0, 4)).unwrap(), vec![[1, 1], [4, 1]]);
        assert!(binary_roots(&f5, (0, 0, 0)).is_none());
    }

    #[test]
    fn reference_singular_point() {
        let p = fixtures::reference_pencil();
        let field = PrimeField::new(fixtures::LARGE_BAD_PRIME).unwrap();
        let r = singular_locus(&p, &field).unwrap();
        assert_eq!(r.method, LocusMethod::KernelGuided);
        let expect = normalize_projective(&field, &fixtures::SINGULAR_POINT).unwrap();
        assert_eq!(r.points, vec![expect]);
        assert_eq!(r.ranks, vec![1]);
        assert!(cone_check(&r));
    }

    #[test]
    fn good_prime_three_is_smooth() {
        let p = fixtures::reference_pencil();
        let r = singular_locus(&p, &PrimeField::new(3).unwrap()).unwrap();
        assert_eq!(r.method, LocusMethod::Exhaustive);
        assert!(r.points.is_empty());
    }

    #[test]
    fn characteristic_two_is_refused() {
        let p = fixtures::reference_pencil();
        assert_eq!(
            singular_locus(&p, &PrimeField::new(2).unwrap()),
            Err(ReductionError::CharacteristicTwo)
        );
    }

    #[test]
    fn cone_over_a_smooth_base_is_detected() {
        // Neither form involves z, so [0:0:0:0:0:1] is a vertex.
        let q1 = form(&[((0, 1), 1), ((2, 3), 1), ((4, 4), 1)]);
        let q2 = form(&[((0, 0), 1), ((1, 2), 1), ((3, 4), 1)]);
        let p = PencilOfQuadrics::new(q1, q2).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        let r = singular_locus_with(&p, &f5, LocusMethod::Exhaustive, Execution::Sequential).unwrap();
        let i = r.points.iter().position(|v| *v == [0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(r.ranks[i], 0);
        assert!(!cone_check(&r));
        // both Gram matrices are singular, so the characteristic form is zero
        assert_eq!(
            singular_locus_with(&p, &f5, LocusMethod::KernelGuided, Execution::Sequential),
            Err(ReductionError::CharFormVanishes(5))
        );
    }

    #[test]
    fn mod2_reference() {
        let rep = mod2_degeneracy(&fixtures::reference_pencil());
        let q2 = &rep.forms[1];
        assert_eq!(q2.linear_factorizations, vec![(F2Linear(0b000001), F2Linear(0b010110))]);
        assert_eq!(q2.linear_factorizations[0].1.to_string(), "v + w + y");
        assert!(rep.forms[0].linear_factorizations.is_empty());
        assert!(rep.non_reduced.iter().any(|e| e.factor_of == 2 && e.hyperplane == F2Linear(1)));
        assert_eq!(rep.verdict, "reducible and non-reduced (factorization evidence)");
    }

    #[test]
    fn mod2_square_and_irreducible() {
        let sq = analyze_f2_form(1, &form(&[((0, 0), 1)]).reduce_mod(&PrimeField::new(2).unwrap()));
        assert_eq!(sq.square_of, Some(F2Linear(1)));
        let irr = form(&[((0, 1), 1), ((2, 2), 1), ((2, 3), 1), ((3, 3), 1)]);
        let rep = analyze_f2_form(1, &irr.reduce_mod(&PrimeField::new(2).unwrap()));
        assert_eq!(rep.verdict, "irreducible over F_2");
    }
}
