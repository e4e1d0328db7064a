//! The reference pencil and the witnesses supplied with it.

use crate::cli::parse::parse_form;
use crate::fano::GrassmannChart;
use crate::pencil::PencilOfQuadrics;

pub const Q1: &str = "uv + uw - 4vw + 2vz + 2wz + x^2 - 2xz + y^2 - z^2";
pub const Q2: &str = "uv - uw + uy - 2v^2 + 2vx - 2wy + 2wz + 2xz";

/// Characteristic sextic, lowest degree first.
pub const CHAR_FORM: [i64; 7] = [-2, -3, -3, 3, 2, -3, -1];

pub const LARGE_BAD_PRIME: u64 = 149_743_897;

/// Pivot columns of the chart carrying both smooth witnesses.
pub const WITNESS_CHART: (usize, usize) = (1, 2);

pub const F2_POINT: [u64; 8] = [1, 1, 0, 0, 1, 1, 0, 0];

pub const LARGE_PRIME_POINT: [u64; 8] = [
    10276, 859210, 113976451, 113430900, 122036333, 94785567, 35411179, 25838500,
];

/// The singular point of the reduction mod LARGE_BAD_PRIME, scaled so the
/// last coordinate is 1.
pub const SINGULAR_POINT: [u64; 6] = [10925789, 85737939, 85378598, 93099029, 51694582, 1];

/// Contents of `data/reference_pencil.txt`.
pub const INPUT_FILE: &str = include_str!("../data/reference_pencil.txt");

pub fn reference_pencil() -> PencilOfQuadrics {
    PencilOfQuadrics::new(parse_form(Q1).unwrap(), parse_form(Q2).unwrap())
        .expect("reference pencil is integral")
}

pub fn witness_chart() -> GrassmannChart {
    GrassmannChart::new(WITNESS_CHART.0, WITNESS_CHART.1).unwrap()
}
