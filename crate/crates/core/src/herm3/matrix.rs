use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol::HERMITICITY_TOL;

pub type C64 = Complex64;

/// A complex 3-vector.
pub type Vec3 = [C64; 3];

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// General complex 3×3 matrix, no structure assumed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix3 {
    pub entries: [[C64; 3]; 3],
}

impl ComplexMatrix3 {
    pub const fn new(entries: [[C64; 3]; 3]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self::new([[ZERO; 3]; 3])
    }

    pub fn identity() -> Self {
        Self::diag([ONE; 3])
    }

    pub fn diag(d: [C64; 3]) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = d[i];
        }
        m
    }

    /// Builds `re + i·im` from two real arrays.
    pub fn from_parts(re: [[f64; 3]; 3], im: [[f64; 3]; 3]) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = C64::new(re[i][j], im[i][j]);
            }
        }
        m
    }

    pub fn real_part(&self) -> [[f64; 3]; 3] {
        self.entries.map(|row| row.map(|z| z.re))
    }

    pub fn imag_part(&self) -> [[f64; 3]; 3] {
        self.entries.map(|row| row.map(|z| z.im))
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2]
    }

    pub fn det(&self) -> C64 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let m = &self.entries;
        [0, 1, 2].map(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
    }

    /// `v† M v`.
    pub fn quadratic_form(&self, v: &Vec3) -> C64 {
        let mv = self.apply(v);
        v[0].conj() * mv[0] + v[1].conj() * mv[1] + v[2].conj() * mv[2]
    }

    /// `(M + M†)/2`.
    pub fn hermitian_part(&self) -> Herm3 {
        Herm3::symmetrized(&self.entries)
    }

    /// `C` in `M = H + iC` with `H`, `C` hermitian.
    pub fn skew_hermitian_part(&self) -> Herm3 {
        let mut out = [[ZERO; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, z) in row.iter_mut().enumerate() {
                *z = (self.entries[i][j] - self.entries[j][i].conj()) / C64::new(0.0, 2.0);
            }
        }
        Herm3::symmetrized(&out)
    }

    /// `U M U†`.
    pub fn conjugate_by(&self, u: &ComplexMatrix3) -> ComplexMatrix3 {
        *u * *self * u.adjoint()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let p = *self * self.adjoint();
        (p - Self::identity()).frobenius_norm() <= tol
    }
}

impl Mul for ComplexMatrix3 {
    type Output = ComplexMatrix3;
    fn mul(self, rhs: ComplexMatrix3) -> ComplexMatrix3 {
        let mut out = ComplexMatrix3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] = (0..3).map(|l| self.entries[i][l] * rhs.entries[l][j]).sum();
            }
        }
        out
    }
}

impl Add for ComplexMatrix3 {
    type Output = ComplexMatrix3;
    fn add(mut self, rhs: ComplexMatrix3) -> ComplexMatrix3 {
        for i in 0..3 {
            for j in 0..3 {
                self.entries[i][j] += rhs.entries[i][j];
            }
        }
        self
    }
}

impl Sub for ComplexMatrix3 {
    type Output = ComplexMatrix3;
    fn sub(self, rhs: ComplexMatrix3) -> ComplexMatrix3 {
        self + rhs * C64::new(-1.0, 0.0)
    }
}

impl Mul<C64> for ComplexMatrix3 {
    type Output = ComplexMatrix3;
    fn mul(mut self, s: C64) -> ComplexMatrix3 {
        self.entries.iter_mut().flatten().for_each(|z| *z *= s);
        self
    }
}

impl Mul<f64> for ComplexMatrix3 {
    type Output = ComplexMatrix3;
    fn mul(self, s: f64) -> ComplexMatrix3 {
        self * C64::new(s, 0.0)
    }
}

impl From<Herm3> for ComplexMatrix3 {
    fn from(h: Herm3) -> Self {
        ComplexMatrix3::new(h.entries)
    }
}

/// JSON layout shared by every matrix type: `{"re": [[..]], "im": [[..]]}`.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    re: [[f64; 3]; 3],
    #[serde(default)]
    im: [[f64; 3]; 3],
}

impl Serialize for ComplexMatrix3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { re: self.real_part(), im: self.imag_part() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        Ok(ComplexMatrix3::from_parts(r.re, r.im))
    }
}

/// A 3×3 complex hermitian matrix.
///
/// Construction checks that the anti-hermitian part is negligible and then
/// symmetrizes exactly, so `entries[i][j] == conj(entries[j][i])` holds bit
/// for bit and diagonal entries are real.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Herm3 {
    entries: [[C64; 3]; 3],
}

impl Herm3 {
    pub fn new(entries: [[C64; 3]; 3]) -> Result<Self> {
        let mut asym = 0.0_f64;
        let mut scale = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                asym = asym.max((entries[i][j] - entries[j][i].conj()).norm());
                scale = scale.max(entries[i][j].norm());
            }
        }
        let relative = asym / scale.max(1.0);
        if relative > HERMITICITY_TOL {
            return Err(Error::NonHermitian { asymmetry: relative });
        }
        Ok(Self::symmetrized(&entries))
    }

    /// `(M + M†)/2` with no validation.
    pub(crate) fn symmetrized(entries: &[[C64; 3]; 3]) -> Self {
        let mut out = [[ZERO; 3]; 3];
        for i in 0..3 {
            out[i][i] = C64::new(entries[i][i].re, 0.0);
            for j in (i + 1)..3 {
                let z = (entries[i][j] + entries[j][i].conj()) * 0.5;
                out[i][j] = z;
                out[j][i] = z.conj();
            }
        }
        Self { entries: out }
    }

    pub fn from_real_symmetric(m: [[f64; 3]; 3]) -> Result<Self> {
        Self::new(m.map(|row| row.map(|x| C64::new(x, 0.0))))
    }

    pub fn from_parts(re: [[f64; 3]; 3], im: [[f64; 3]; 3]) -> Result<Self> {
        Self::new(ComplexMatrix3::from_parts(re, im).entries)
    }

    /// Hermitian matrix with the given real diagonal and upper off-diagonal
    /// entries `(0,1)`, `(0,2)`, `(1,2)`.
    pub fn from_upper(diag: [f64; 3], upper: [C64; 3]) -> Self {
        let mut e = [[ZERO; 3]; 3];
        for i in 0..3 {
            e[i][i] = C64::new(diag[i], 0.0);
        }
        e[0][1] = upper[0];
        e[0][2] = upper[1];
        e[1][2] = upper[2];
        e[1][0] = upper[0].conj();
        e[2][0] = upper[1].conj();
        e[2][1] = upper[2].conj();
        Self { entries: e }
    }

    pub fn diag(d: [f64; 3]) -> Self {
        Self::from_upper(d, [ZERO; 3])
    }

    pub fn zero() -> Self {
        Self::diag([0.0; 3])
    }

    pub fn identity() -> Self {
        Self::diag([1.0; 3])
    }

    pub fn entries(&self) -> &[[C64; 3]; 3] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i][j]
    }

    pub fn as_matrix(&self) -> ComplexMatrix3 {
        ComplexMatrix3::new(self.entries)
    }

    pub fn trace(&self) -> f64 {
        (0..3).map(|i| self.entries[i][i].re).sum()
    }

    /// Determinant; real for hermitian input.
    pub fn det(&self) -> f64 {
        self.as_matrix().det().re
    }

    /// Hilbert-Schmidt norm `sqrt(½Tr M²)`.
    pub fn hs_norm(&self) -> f64 {
        hs_inner(self, self).sqrt()
    }

    /// `v† M v`, real.
    pub fn expectation(&self, v: &Vec3) -> f64 {
        self.as_matrix().quadratic_form(v).re
    }

    /// `U M U†`, re-symmetrized.
    pub fn conjugate_by(&self, u: &ComplexMatrix3) -> Herm3 {
        Self::symmetrized(&self.as_matrix().conjugate_by(u).entries)
    }

    /// `M - (Tr M / 3)·I`.
    pub fn traceless_part(&self) -> Herm3 {
        *self - Herm3::identity() * (self.trace() / 3.0)
    }

    pub fn max_abs_diff(&self, other: &Herm3) -> f64 {
        let mut d = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        d
    }
}

/// Hilbert-Schmidt scalar product `½·Tr(M₁M₂)`.
pub fn hs_inner(m1: &Herm3, m2: &Herm3) -> f64 {
    // Tr(M1 M2) = Σ M1_ij M2_ji = Σ M1_ij conj(M2_ij) for hermitian M2.
    let mut s = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            s += (m1.entries[i][j] * m2.entries[i][j].conj()).re;
        }
    }
    0.5 * s
}

impl Add for Herm3 {
    type Output = Herm3;
    fn add(self, rhs: Herm3) -> Herm3 {
        let mut e = self.entries;
        for i in 0..3 {
            for j in 0..3 {
                e[i][j] += rhs.entries[i][j];
            }
        }
        Herm3 { entries: e }
    }
}

impl Sub for Herm3 {
    type Output = Herm3;
    fn sub(self, rhs: Herm3) -> Herm3 {
        self + (-rhs)
    }
}

impl Neg for Herm3 {
    type Output = Herm3;
    fn neg(self) -> Herm3 {
        self * -1.0
    }
}

impl Mul<f64> for Herm3 {
    type Output = Herm3;
    fn mul(self, s: f64) -> Herm3 {
        Herm3 { entries: self.entries.map(|row| row.map(|z| z * s)) }
    }
}

impl Mul<Herm3> for f64 {
    type Output = Herm3;
    fn mul(self, m: Herm3) -> Herm3 {
        m * self
    }
}

impl Serialize for Herm3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_matrix().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Herm3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = ComplexMatrix3::deserialize(d)?;
        Herm3::new(m.entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_hermitian() {
        let mut e = [[ZERO; 3]; 3];
        e[0][1] = C64::new(1.0, 0.0);
        assert!(matches!(Herm3::new(e), Err(Error::NonHermitian { .. })));
    }

    #[test]
    fn symmetrizes_tiny_asymmetry() {
        let mut e = [[ZERO; 3]; 3];
        e[0][1] = C64::new(1.0, 0.5);
        e[1][0] = C64::new(1.0 + 1e-14, -0.5);
        e[2][2] = C64::new(2.0, 1e-15);
        let h = Herm3::new(e).unwrap();
        assert_eq!(h.get(0, 1), h.get(1, 0).conj());
        assert_eq!(h.get(2, 2).im, 0.0);
    }

    #[test]
    fn hs_inner_of_diagonals() {
        let a = Herm3::diag([1.0, -1.0, 0.0]);
        let b = Herm3::diag([1.0, 1.0, -2.0]) * (1.0 / 3f64.sqrt());
        assert_eq!(hs_inner(&a, &b), 0.0);
        assert!((hs_inner(&a, &a) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn json_layout_and_default_imaginary_part() {
        let h: Herm3 = serde_json_like(r#"{"re": [[1,0,0],[0,-1,0],[0,0,0]]}"#);
        assert_eq!(h, Herm3::diag([1.0, -1.0, 0.0]));
    }

    fn serde_json_like(s: &str) -> Herm3 {
        serde_json::from_str(s).unwrap()
    }
}
