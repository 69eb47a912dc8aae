//! Representation-theoretic computations for window categories and
//! flop-flop kernels on Grassmannian flops.

pub mod bott;
pub mod chars;
pub mod error;
pub mod invariants;
pub mod report;
pub mod resolution;
pub mod weight;
pub mod window;

pub use bott::{bott_push, relative_bott_push, BottResult, GrassmannBundleWeight};
pub use chars::{decompose, tensor, Character, TorusCharacter};
pub use error::{Error, Result};
pub use report::{Report, Verdict};
pub use resolution::{BundleTerm, ComplexKind, GradedTermList, RChargeConvention};
pub use weight::Weight;
pub use window::{WindowFamily, WindowSet};
