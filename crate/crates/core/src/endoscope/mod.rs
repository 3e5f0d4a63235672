//! Endomorphism-ring analysis: `End(E)` with its identity, the radical
//! subideals, the finite-dimensional bar algebra acting on `E/mE` with
//! its radical and block decomposition (hence locality), smallness and
//! decomposition profiles, traces, exact-sequence verification, and
//! generator-count bounds.

pub mod bar;
pub mod bounds;
pub mod end_algebra;
pub mod sequences;
pub mod smallness;
pub mod trace;

pub use bar::{
    bar_algebra, fd_radical, is_local_module, profile_of_bar, simple_blocks, BarAlgebra,
    RadicalProfile,
};
pub use bounds::{generator_bound_report, GeneratorBoundReport};
pub use end_algebra::{end_algebra, j0, j1, quotient_mod_irrelevant, EndAlgebra};
pub use sequences::{
    verify_adual, verify_ausbr0, verify_perfect_syzygy_sequence, SequenceReport, SpotReport,
};
pub use smallness::{
    check_transition, is_small, radical_block_profile, BlockReport, RadicalBlockProfile,
};
pub use trace::endomorphism_trace;
