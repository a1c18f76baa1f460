//! Root finding, numeric eigenvalues, and crossing classification.

pub mod aberth;
pub mod crossings;
pub mod jacobi;
pub mod sturm;
pub mod sweep;

pub use aberth::{complex_roots, ComplexRoot};
pub use crossings::{
    classify_crossings, Crossing, CrossingOptions, CrossingReport, ExceptionalPoint, MeetingLevels,
};
pub use jacobi::jacobi_eigenvalues;
pub use sturm::{sturm_real_roots, RealRoot, SturmChain};
pub use sweep::{sweep, sweep_sequential, SweepTable};
