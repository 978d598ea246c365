//! Exact-shape 3×3 complex hermitian linear algebra.
//!
//! Inner products are Hilbert-Schmidt, `½Tr(M₁M₂)`, under which the
//! Gell-Mann matrices are orthonormal.

mod eigen;
mod gellmann;
mod matrix;

pub use eigen::{eigenvalues, eigh, is_density_psd, rank_with_tol, Eigh, Spectrum3};
pub use gellmann::{from_gellmann, gell_mann, gell_mann_basis, to_gellmann, GellMannVector};
pub use matrix::{hs_inner, ComplexMatrix3, Herm3, Vec3, C64};

/// `i[A,B] = i(AB - BA)`, hermitian whenever `A`, `B` are.
pub fn commutator_i(a: &Herm3, b: &Herm3) -> Herm3 {
    let (am, bm) = (a.as_matrix(), b.as_matrix());
    let c = (am * bm - bm * am) * C64::new(0.0, 1.0);
    c.hermitian_part()
}
