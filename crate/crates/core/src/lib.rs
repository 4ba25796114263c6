//! Discrete magnetic Hodge calculus on weighted triangulations.
//!
//! A weighted triangulation carries vertex, edge and face weights and a
//! skew-symmetric magnetic potential α. This crate provides the magnetic
//! difference and derivative operators with their adjoints, the Gauß-Bonnet
//! operator and Laplacian, holonomy and face flux, completeness audits on
//! finite truncations, generators for example families, and dense spectra.

pub mod cochain;
pub mod completeness;
pub mod complex;
pub mod error;
pub mod field;
pub mod generators;
pub mod io;
pub mod ops;
pub mod sample;
pub mod spectral;
pub mod verify;

pub use cochain::{Cochain, Cochain0, Cochain1, Cochain2, GaugeFunction, RealOneForm};
pub use complex::{VertexId, WeightedTriangulation};
pub use error::{Error, Result};
pub use field::{EdgePotential, MagneticPotential};
