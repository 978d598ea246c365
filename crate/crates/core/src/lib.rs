//! Two-dimensional cross-sections of the qutrit state space.
//!
//! A qutrit state is `ρ = I/3 + M` with `M` traceless hermitian and `ρ ≥ 0`.
//! A section by the plane `span{A, B}` is the set of `(x, y)` with
//! `I/3 + x·A + y·B ≥ 0`. This crate brings any plane to a five-parameter
//! standard form, raycasts and classifies the section boundary, finds its
//! pure states, and checks that the projection of the state space onto the
//! plane is the polar dual of the section.
//!
//! * [`herm3`]: validated 3×3 hermitian matrices, the Gell-Mann basis and an
//!   eigensolver that stays accurate for degenerate pairs.
//! * [`canonical`]: section planes, the standard tuple `(k, a, b, c, φ)` and
//!   unitary equivalence.
//! * [`boundary`]: the boundary cubic, raycasting, shape classes and pure states.
//! * [`atlas`]: the Gell-Mann pair atlas, parameter sweeps and the round 4-ball.
//! * [`dualrange`]: projections, numerical ranges, polar duals and Hausdorff distances.
//! * [`export`]: CSV and SVG output.
//!
//! ```
//! use qutrit_sections::boundary::{classify_shape, ShapeTag};
//! use qutrit_sections::canonical::canonicalize;
//! use qutrit_sections::herm3::gell_mann;
//!
//! let res = canonicalize(&gell_mann(4), &gell_mann(8)).unwrap();
//! let shape = classify_shape(&res.params, 1e-9);
//! assert_eq!(shape.tag, ShapeTag::EllipseOnePureContact);
//! assert_eq!(shape.pure_contacts, 1);
//! ```
//!
//! The guide in `book/` walks through the geometry with runnable examples.

pub mod atlas;
pub mod boundary;
pub mod canonical;
pub mod dualrange;
pub mod error;
pub mod export;
pub mod herm3;
pub mod poly;
pub mod tol;

pub use error::{Error, Result};
pub use herm3::{hs_inner, ComplexMatrix3, GellMannVector, Herm3, Spectrum3};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hermitian.md")]
    mod hermitian {}
    #[doc = include_str!("../../../book/src/canonical.md")]
    mod canonical {}
    #[doc = include_str!("../../../book/src/boundary.md")]
    mod boundary {}
    #[doc = include_str!("../../../book/src/shapes.md")]
    mod shapes {}
    #[doc = include_str!("../../../book/src/atlas.md")]
    mod atlas {}
    #[doc = include_str!("../../../book/src/duality.md")]
    mod duality {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
