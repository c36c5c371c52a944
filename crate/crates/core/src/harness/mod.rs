//! Generators, property suites, surveys and fits.

mod fit;
mod gen;
mod lemmas;
mod survey;

use thiserror::Error;

use crate::filling::FillError;
use crate::trace::TraceError;

pub use fit::{fit_exponent, fit_records, Fit};
pub use gen::{
    gen_family, gen_random_null_homotopic, random_alternating, random_balanced, random_letter,
    random_marked_balanced, random_with_alternating, random_word, random_zero_sum_word,
    rng_from_seed, FamilyKind,
};
pub use lemmas::{
    alternation_suite, balanced_splice_suite, balanced_subword_suite, balanced_to_preferred_suite,
    centraliser_suite, check_alternation, check_balanced_subword, check_fill, check_lemmas,
    check_lemmas_with, fill_suite, p_removal_suite, preferred_form_suite, LemmaReport,
    SuiteResult,
};
pub use survey::{
    geometric_grid, measure, read_csv, run_survey, survey_records, write_csv, SurveyRecord,
    CSV_HEADER,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown family {0:?} (expected commutator, hnn or random)")]
    UnknownFamily(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("need at least 3 distinct n with positive cost, found {0}")]
    InsufficientData(usize),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: {reason}")]
    Malformed { path: String, reason: String },
    #[error(transparent)]
    Fill(#[from] FillError),
    #[error(transparent)]
    Trace(#[from] TraceError),
}
