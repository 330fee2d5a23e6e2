//! Batch pipeline over graph6 streams: exact invariants, inequality checks,
//! the constructive bounds, ratio surveys and family certificates.

pub mod certify;
pub mod input;
pub mod verify;

pub use certify::{certify_families, certify_instance, CertifyReport, CertifyRow, Grid};
pub use input::{read_source, GraphLine, LineReader};
pub use verify::{
    conjecture_survey, verify_stream, Aggregate, GraphRecord, SurveyOptions, VerifyOptions,
};
