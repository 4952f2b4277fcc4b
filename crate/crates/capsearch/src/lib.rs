//! IO companion to `capsearch-core`: certificate files, reference data,
//! verification reports, a threaded classification driver and the text
//! syntax for points shared by the CLI and fixtures.

pub mod certificate;
pub mod fixture;
pub mod parallel;
pub mod textio;
pub mod verify;

pub use capsearch_core as core;
