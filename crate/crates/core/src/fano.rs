//! The Fano surface of lines F1(X) on the 15 standard affine charts of Gr(2, 6).
//!
//! A chart fixes two pivot columns to the 2x2 identity. The eight remaining
//! slots carry the parameters t1..t8, column by column: for the k-th
//! non-pivot column the top row holds t(2k+1) and the bottom row t(2k+2).
//! With pivots (1, 2) this is the familiar patch
//!
//! ```text
//! ( t1  1  0  t3  t5  t7 )
//! ( t2  0  1  t4  t6  t8 )
//! ```
//!
//! i.e. lines [r:s] -> [t1 r + t2 s : r : s : t3 r + t4 s : t5 r + t6 s : t7 r + t8 s].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::fp_linalg;
use crate::exactmath::{CompiledPoly, ExactMatrix, MultiPoly, PrimeField};
use crate::pencil::PencilOfQuadrics;

/// Number of chart parameters.
pub const PARAMS: usize = 8;
/// Codimension of F1(X) in a chart; a point is smooth iff the Jacobian has this rank.
pub const FULL_RANK: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChartError {
    #[error("invalid chart pivots ({0}, {1}): need 0 <= i < j <= 5")]
    BadPivots(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannChart {
    pivots: (usize, usize),
}

impl GrassmannChart {
    pub fn new(i: usize, j: usize) -> Result<Self, ChartError> {
        if i < j && j <= 5 {
            Ok(Self { pivots: (i, j) })
        } else {
            Err(ChartError::BadPivots(i, j))
        }
    }

    /// All 15 charts, pivots in lexicographic order.
    pub fn all() -> Vec<Self> {
        (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| Self { pivots: (i, j) }))
            .collect()
    }

    pub fn pivots(&self) -> (usize, usize) {
        self.pivots
    }

    pub fn free_columns(&self) -> [usize; 4] {
        let (a, b) = self.pivots;
        let mut out = [0; 4];
        for (k, c) in (0..6).filter(|&c| c != a && c != b).enumerate() {
            out[k] = c;
        }
        out
    }

    /// (row, column) of each parameter t1..t8.
    pub fn param_layout(&self) -> [(usize, usize); PARAMS] {
        let cols = self.free_columns();
        std::array::from_fn(|n| (n % 2, cols[n / 2]))
    }

    /// Symbolic rows in the parameters t1..t8.
    pub fn rows(&self) -> ([MultiPoly; 6], [MultiPoly; 6]) {
        let zero = MultiPoly::zero(PARAMS);
        let mut rows = [
            std::array::from_fn(|_| zero.clone()),
            std::array::from_fn(|_| zero.clone()),
        ];
        rows[0][self.pivots.0] = MultiPoly::constant(PARAMS, BigInt::one());
        rows[1][self.pivots.1] = MultiPoly::constant(PARAMS, BigInt::one());
        for (n, (r, c)) in self.param_layout().into_iter().enumerate() {
            rows[r][c] = MultiPoly::var(PARAMS, n);
        }
        let [a, b] = rows;
        (a, b)
    }

    /// Numeric rows at a parameter point.
    pub fn rows_at(&self, pt: &[u64; PARAMS]) -> ([u64; 6], [u64; 6]) {
        let mut rows = [[0u64; 6]; 2];
        rows[0][self.pivots.0] = 1;
        rows[1][self.pivots.1] = 1;
        for (n, (r, c)) in self.param_layout().into_iter().enumerate() {
            rows[r][c] = pt[n];
        }
        (rows[0], rows[1])
    }
}

impl fmt::Display for GrassmannChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.pivots.0, self.pivots.1)
    }
}

/// Symbolic rows of a chart.
pub fn chart_rows(c: &GrassmannChart) -> ([MultiPoly; 6], [MultiPoly; 6]) {
    c.rows()
}

/// Six integer polynomials in t1..t8 whose common zeros on the chart are the
/// lines contained in X: the r^2, rs, s^2 coefficients for Q1, then for Q2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoSystem {
    chart: GrassmannChart,
    equations: Vec<MultiPoly>,
}

impl FanoSystem {
    pub fn chart(&self) -> GrassmannChart {
        self.chart
    }

    pub fn equations(&self) -> &[MultiPoly] {
        &self.equations
    }

    /// Builds a system from arbitrary equations in 8 variables (used for
    /// synthetic tests).
    pub fn from_equations(chart: GrassmannChart, equations: Vec<MultiPoly>) -> Self {
        assert!(equations.iter().all(|e| e.arity() == PARAMS));
        Self { chart, equations }
    }

    pub fn compile(&self, field: &PrimeField) -> CompiledSystem {
        let jac = fano_jacobian(self);
        CompiledSystem {
            field: *field,
            equations: self.equations.iter().map(|e| CompiledPoly::new(e, field)).collect(),
            jacobian: (0..jac.rows())
                .map(|i| jac.row(i).iter().map(|e| CompiledPoly::new(e, field)).collect())
                .collect(),
        }
    }
}

pub fn fano_system(p: &PencilOfQuadrics, c: &GrassmannChart) -> FanoSystem {
    let (a, b) = c.rows();
    let mut equations = Vec::with_capacity(6);
    for q in p.forms() {
        let (rr, rs, ss) = q.restrict_to_line(&a, &b);
        equations.extend([rr, rs, ss]);
    }
    FanoSystem { chart: *c, equations }
}

/// Entry (i, j) is the partial derivative of equation i by t(j+1).
pub fn fano_jacobian(s: &FanoSystem) -> ExactMatrix<MultiPoly> {
    ExactMatrix::from_fn(s.equations.len(), PARAMS, |i, j| s.equations[i].derivative(j))
}

/// Result of checking a parameter point against a system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FanoPointCheck {
    pub on_fano: bool,
    pub jacobian_rank: usize,
    pub smooth: bool,
}

/// A system reduced mod p with its Jacobian, for fast repeated evaluation.
#[derive(Clone, Debug)]
pub struct CompiledSystem {
    field: PrimeField,
    equations: Vec<CompiledPoly>,
    jacobian: Vec<Vec<CompiledPoly>>,
}

impl CompiledSystem {
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn on_fano(&self, pt: &[u64; PARAMS]) -> bool {
        self.equations.iter().all(|e| e.eval(&self.field, pt) == 0)
    }

    pub fn jacobian_at(&self, pt: &[u64; PARAMS]) -> Vec<Vec<u64>> {
        self.jacobian
            .iter()
            .map(|row| row.iter().map(|e| e.eval(&self.field, pt)).collect())
            .collect()
    }

    pub fn jacobian_rank(&self, pt: &[u64; PARAMS]) -> usize {
        fp_linalg::rank(&self.field, &self.jacobian_at(pt))
    }

    pub fn check(&self, pt: &[u64; PARAMS]) -> FanoPointCheck {
        let on_fano = self.on_fano(pt);
        let jacobian_rank = self.jacobian_rank(pt);
        FanoPointCheck {
            on_fano,
            jacobian_rank,
            smooth: on_fano && jacobian_rank == FULL_RANK,
        }
    }

    /// Rank only if the point is on the surface; cheap rejection otherwise.
    #[inline]
    pub fn smooth_rank(&self, pt: &[u64; PARAMS]) -> Option<usize> {
        self.on_fano(pt).then(|| self.jacobian_rank(pt))
    }
}

pub fn verify_fano_point(s: &FanoSystem, pt: &[u64; PARAMS], field: &PrimeField) -> FanoPointCheck {
    let reduced: [u64; PARAMS] = pt.map(|x| x % field.modulus());
    s.compile(field).check(&reduced)
}

/// Residues of the equations at a parameter point, in order.
pub fn residuals_mod(s: &FanoSystem, pt: &[u64; PARAMS], field: &PrimeField) -> Vec<u64> {
    s.equations.iter().map(|e| e.eval_mod(field, pt)).collect()
}

/// Every equation is zero at the integer point modulo `m`.
pub fn vanishes_mod(s: &FanoSystem, pt: &[BigInt], m: &BigInt) -> bool {
    s.equations.iter().all(|e| e.eval_mod_big(pt, m).is_zero())
}
