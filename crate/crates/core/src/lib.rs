//! Symbolic computation with finitely presented graded modules over
//! polynomial rings, aimed at endomorphism rings: Groebner machinery,
//! Hom/Ext/Tor, module constructions, and radical analysis of the
//! finite-dimensional quotients of End(E).

pub mod constructions;
pub mod endoscope;
pub mod error;
pub mod fpmodules;
pub mod groebner;
pub mod linalg;
pub mod polyring;

pub use error::{Error, Result};

#[cfg(test)]
mod concurrency {
    // values are immutable after construction and safely shareable
    fn assert_sync_send<T: Sync + Send>() {}

    #[test]
    fn shared_types_are_sync_and_send() {
        assert_sync_send::<crate::polyring::Polynomial>();
        assert_sync_send::<crate::groebner::GroebnerBasis>();
        assert_sync_send::<crate::fpmodules::FPModule>();
        assert_sync_send::<crate::fpmodules::ModuleMorphism>();
        assert_sync_send::<crate::fpmodules::HomModule>();
    }
}
