//! The category of finitely presented graded modules: presentations,
//! minimalization, sums and tensor products, Hom via the kernel
//! construction, free resolutions, Ext and Tor, Hilbert functions, duals
//! and trace ideals.

pub mod auslander;
pub mod hom;
pub mod json;
pub mod module;
pub mod morphism;
pub mod resolution;

pub use auslander::{auslander_dual, has_free_summand, is_reflexive, trace_ideal, TraceIdeal};
pub use hom::{dual, hom, natural_hom_map, HomModule, NaturalHomMap};
pub use json::{
    module_from_json, module_to_json, morphism_from_json, morphism_to_json, ModuleJson,
    MorphismJson, RingJson,
};
pub use module::{
    default_window, direct_sum, hf_equal, minimal_generator_indices, tensor, FPModule,
    HilbertFunction,
};
pub use morphism::{
    cokernel_of, image_of, kernel_of, lift_through, minimalize, nu, Minimalization, ModuleMorphism,
    SubmoduleResult,
};
pub use resolution::{depth, ext, free_resolution, projective_dimension, rank, tor, Resolution};
