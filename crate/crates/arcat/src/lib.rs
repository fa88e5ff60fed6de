//! Exact-arithmetic Auslander-Reiten theory over bound quiver algebras.
//!
//! The crate computes Nakayama functors and AR translates two ways and
//! cross-checks them:
//!
//! * **classically**, inside the module category of a bound quiver
//!   algebra (projective covers, injective envelopes, minimal
//!   presentations, `tau` via the Nakayama functor), and
//! * **by approximation**, as minimal covers and envelopes relative to a
//!   subcategory of a mesh-category model of the derived category of a
//!   linear `A_n` quiver.
//!
//! All arithmetic is exact rational (`num-rational`); nothing in the
//! crate rounds, so every equality test is an honest one.

pub mod algebra;
pub mod approx;
pub mod artrans;
pub mod decomp;
pub mod error;
pub mod io;
pub mod linalg;
pub mod mesh;
pub mod nakayama;
pub mod poly;
pub mod modcat;
pub mod quiver;
pub mod rep;

pub use algebra::{BoundQuiverAlgebra, Relation};
pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Rat};
pub use quiver::{alternating_an, linear_an, Arrow, Path, Quiver, VertexId};
pub use rep::{hom_basis, hom_dim, RepMorphism, Representation};
