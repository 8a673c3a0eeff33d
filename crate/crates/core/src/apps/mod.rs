//! Application-level figures of merit built on basis sets.

pub mod entropy;
pub mod qkd;

pub use entropy::{maassen_uffink_bound, outcome_entropy};
pub use qkd::{exhaustive_sift_error, intercept_resend_sift_error, mub_sift_error, raw_key_rate, QkdOutcome};
