//! Executable forms of the transfer arguments, each checked against brute
//! force over a [`TruncatedUniverse`].

pub mod annihilator;
pub mod extraction;
pub mod fusible;
pub mod universe;
pub mod zip;

pub use annihilator::{lifted_annihilator_check, lifted_annihilator_report, sa_transfer_report, sa_transfer_witness, AnnihilatorLift, SaTransfer};
pub use extraction::{coefficient_extraction, DerivationTrace, TraceStep};
pub use fusible::{lift_fusible_decomposition, FusibleLift};
pub use universe::TruncatedUniverse;
pub use zip::{series_zip_witness, SeriesZip};
