//! Equivariant signature of directed strongly invertible knots.
//!
//! A knot is given as an admissible symmetric diagram ([`SymmetricDiagram`]):
//! a planar-diagram code whose segments are labelled in traversal order from
//! the fixed point `F0`, together with the crossing involution induced by the
//! strong inversion and the side on which the marked half-axis leaves and
//! enters the diagram. From it we trace the faces, shade the checkerboard
//! surface containing the marked half-axis, build its Goeritz form, split it
//! into the `±1` eigenspaces of the involution and combine the resulting
//! g-signature with the diagrammatic correction term.
//!
//! ```
//! use equisig::{catalog, invariant};
//!
//! let trefoil = catalog::build_torus_2_odd(1).unwrap();
//! let report = invariant::sigma_tilde(&trefoil).unwrap();
//! assert_eq!(report.sigma_tilde, -2);
//! ```

pub mod algebra;
pub mod catalog;
pub mod diagram;
pub mod error;
pub mod faces;
pub mod forms;
pub mod invariant;
pub mod linalg;
pub mod report;

pub use diagram::{Crossing, DiagramCandidate, Side, SymmetricDiagram};
pub use error::Error;
pub use invariant::InvariantReport;
