pub mod cancel;
pub mod complexes;
pub mod koszul;
pub mod reference;
pub mod render;
pub mod term;
pub mod weyman;

pub use cancel::{
    convolve_and_cancel, k2_nominal_offsets, k2_rows, search_alignments, Alignment,
    CancellationOutcome, CancelledPair, ConvolutionRow,
};
pub use complexes::{build_complex, trace_cone, ComplexKind, RChargeConvention};
pub use koszul::{hom_s2_s1, koszul_terms};
pub use render::{render_columns, render_resolution, render_term, Notation};
pub use term::{BundleTerm, DisplayTable, GradedTermList};
pub use weyman::{oc_weights, resolve_oc, specialize_h, weyman_resolution, SpringerComponent, SpringerDatum};
