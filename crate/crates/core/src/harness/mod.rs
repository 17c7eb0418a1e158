//! Instance files, the theorem checks built on the algebra layers, and
//! their reports.

pub mod checks;
pub mod cli;
pub mod instance;
pub mod report;
pub mod syntax;

pub use checks::{run, run_instance, RunOptions, DEFAULT_EMAX};
pub use instance::{parse_instance, AnyInstance, ComplexDef, NamedComplex, NamedModule, ProblemInstance};
pub use report::{CheckRecord, VerificationReport, Verdict};
pub use syntax::{parse_document, CheckDecl, CheckKind};
