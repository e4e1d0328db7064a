//! Input parsing, the certification pipeline and certificate output.

pub mod certificate;
pub mod parse;
pub mod pipeline;

pub use parse::{parse_form, parse_input, ParseError, ParsedInput, Witness};
pub use pipeline::{
    certify, run_pipeline, PipelineConfig, PipelineError, RationalityCertificate, Status,
    VERDICT_POSITIVE,
};

/// Exit code for unreadable or malformed input.
pub const EXIT_INPUT_ERROR: i32 = 3;
