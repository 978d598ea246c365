use serde::{Deserialize, Serialize};

use super::matrix::{Herm3, C64};
use crate::error::{Error, Result};
use crate::tol::TRACE_TOL;

const INV_SQRT3: f64 = 0.577_350_269_189_625_8;

/// Coordinates `x₁..x₈` of a traceless hermitian matrix in the Gell-Mann basis.
///
/// The basis is orthonormal under `½Tr(M₁M₂)`, so the Euclidean dot product
/// of coordinate vectors equals the Hilbert-Schmidt product of the matrices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GellMannVector(pub [f64; 8]);

impl GellMannVector {
    /// The `i`-th unit vector, 1-based.
    pub fn unit(i: usize) -> Self {
        let mut x = [0.0; 8];
        x[i - 1] = 1.0;
        Self(x)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0).map(|(a, b)| a * b).sum()
    }
}

/// `Σ xᵢλᵢ`.
pub fn from_gellmann(x: &GellMannVector) -> Herm3 {
    let x = &x.0;
    let d8 = x[7] * INV_SQRT3;
    Herm3::from_upper(
        [d8 + x[2], d8 - x[2], -2.0 * d8],
        [C64::new(x[0], -x[1]), C64::new(x[3], -x[4]), C64::new(x[5], -x[6])],
    )
}

pub fn to_gellmann(m: &Herm3) -> Result<GellMannVector> {
    let trace = m.trace();
    if trace.abs() > TRACE_TOL {
        return Err(Error::NonTraceless { trace });
    }
    let (m01, m02, m12) = (m.get(0, 1), m.get(0, 2), m.get(1, 2));
    let (d0, d1) = (m.get(0, 0).re, m.get(1, 1).re);
    Ok(GellMannVector([
        m01.re,
        -m01.im,
        0.5 * (d0 - d1),
        m02.re,
        -m02.im,
        m12.re,
        -m12.im,
        0.5 * (d0 + d1) / INV_SQRT3,
    ]))
}

/// Gell-Mann matrix `λᵢ`, 1-based (`1 ≤ i ≤ 8`).
///
/// # Panics
///
/// When `i` is outside `1..=8`.
pub fn gell_mann(i: usize) -> Herm3 {
    assert!((1..=8).contains(&i), "Gell-Mann index {i} out of range");
    from_gellmann(&GellMannVector::unit(i))
}

/// `[λ₁, …, λ₈]`.
pub fn gell_mann_basis() -> [Herm3; 8] {
    std::array::from_fn(|i| gell_mann(i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::herm3::hs_inner;

    #[test]
    fn basis_layout() {
        assert_eq!(gell_mann(3), Herm3::diag([1.0, -1.0, 0.0]));
        let l8 = gell_mann(8);
        assert!((l8.get(2, 2).re + 2.0 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(gell_mann(2).get(0, 1), C64::new(0.0, -1.0));
        assert_eq!(gell_mann(5).get(2, 0), C64::new(0.0, 1.0));
        assert_eq!(from_gellmann(&GellMannVector([0.0; 8])), Herm3::zero());
    }

    #[test]
    fn basis_is_orthonormal() {
        let basis = gell_mann_basis();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((hs_inner(a, b) - expected).abs() < 1e-15, "({},{})", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn round_trip_units() {
        for i in 1..=8 {
            let x = to_gellmann(&gell_mann(i)).unwrap();
            for (j, v) in x.0.iter().enumerate() {
                let expected = if j + 1 == i { 1.0 } else { 0.0 };
                assert!((v - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rejects_trace() {
        assert!(matches!(to_gellmann(&Herm3::identity()), Err(Error::NonTraceless { .. })));
    }
}
