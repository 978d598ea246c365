//! Spectra of 3×3 hermitian matrices.
//!
//! The closed-form trigonometric solution of the characteristic cubic gives
//! all three roots, but two nearly equal roots come out with only about half
//! the working precision. So only the most isolated root is taken from it
//! (plus a Newton step on the characteristic polynomial). Its eigenvector is
//! a cross product of two rows of `M - λI`, and the remaining pair is the
//! spectrum of `M` compressed to the orthogonal complement, a 2×2 problem
//! whose discriminant is a sum of squares.

use serde::{Deserialize, Serialize};

use super::matrix::{hs_inner, Herm3, Vec3, C64};

/// Three real eigenvalues, sorted descending.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum3 {
    pub eigenvalues: [f64; 3],
}

impl Spectrum3 {
    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[2]
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Largest eigenvalue magnitude, the spectral norm.
    pub fn spectral_norm(&self) -> f64 {
        self.max().abs().max(self.min().abs())
    }
}

/// Eigenvalues (descending) with matching orthonormal eigenvectors.
#[derive(Clone, Copy, Debug)]
pub struct Eigh {
    pub spectrum: Spectrum3,
    pub vectors: [Vec3; 3],
}

const ZERO: C64 = C64::new(0.0, 0.0);

fn unit(i: usize) -> Vec3 {
    let mut v = [ZERO; 3];
    v[i] = C64::new(1.0, 0.0);
    v
}

fn norm(v: &Vec3) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn scale(v: &Vec3, s: C64) -> Vec3 {
    v.map(|z| z * s)
}

fn normalized(v: &Vec3) -> Vec3 {
    scale(v, C64::new(1.0 / norm(v), 0.0))
}

/// Bilinear cross product (no conjugation): `a·(a×b) = b·(a×b) = 0`.
fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// `det(M - λI)`.
fn char_poly(m: &Herm3, lambda: f64) -> f64 {
    (m.as_matrix() - crate::ComplexMatrix3::identity() * lambda).det().re
}

/// `d/dλ det(M - λI) = -(sum of principal 2×2 minors of M - λI)`.
fn char_poly_deriv(m: &Herm3, lambda: f64) -> f64 {
    let d = [0, 1, 2].map(|i| m.get(i, i).re - lambda);
    let minors = d[1] * d[2] - m.get(1, 2).norm_sqr() + d[0] * d[2] - m.get(0, 2).norm_sqr()
        + d[0] * d[1]
        - m.get(0, 1).norm_sqr();
    -minors
}

fn polish(m: &Herm3, mut lambda: f64) -> f64 {
    for _ in 0..2 {
        let f = char_poly(m, lambda);
        let df = char_poly_deriv(m, lambda);
        if f == 0.0 || df == 0.0 {
            break;
        }
        let next = lambda - f / df;
        if char_poly(m, next).abs() < f.abs() {
            lambda = next;
        } else {
            break;
        }
    }
    lambda
}

/// Null vector of the (rank-2) matrix `M - λI`.
fn null_vector(m: &Herm3, lambda: f64) -> Vec3 {
    let rows: [Vec3; 3] = [0, 1, 2].map(|i| {
        let mut r = m.entries()[i];
        r[i] -= lambda;
        r
    });
    let candidates = [cross(&rows[0], &rows[1]), cross(&rows[0], &rows[2]), cross(&rows[1], &rows[2])];
    let best = candidates
        .iter()
        .max_by(|a, b| norm(a).total_cmp(&norm(b)))
        .copied()
        .unwrap_or_else(|| unit(0));
    if norm(&best) == 0.0 {
        return unit(0);
    }
    normalized(&best)
}

/// Full hermitian eigen-decomposition.
pub fn eigh(m: &Herm3) -> Eigh {
    let e = m.entries();
    let off = e[0][1].norm_sqr() + e[0][2].norm_sqr() + e[1][2].norm_sqr();
    if off == 0.0 {
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| e[j][j].re.total_cmp(&e[i][i].re));
        return Eigh {
            spectrum: Spectrum3 { eigenvalues: idx.map(|i| e[i][i].re) },
            vectors: idx.map(unit),
        };
    }

    let q = m.trace() / 3.0;
    let shifted = *m - Herm3::identity() * q;
    let p = (2.0 * hs_inner(&shifted, &shifted) / 6.0).sqrt();
    let r = ((shifted * (1.0 / p)).det() / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let mid = 3.0 * q - hi - lo;
    let isolated = if hi - mid >= mid - lo { hi } else { lo };
    let isolated = polish(m, isolated);

    let v = null_vector(m, isolated);

    // Orthonormal basis of v⊥.
    let j = (0..3)
        .min_by(|&a, &b| v[a].norm().total_cmp(&v[b].norm()))
        .unwrap_or(0);
    let mut e1 = unit(j);
    let overlap = v[j].conj();
    for i in 0..3 {
        e1[i] -= v[i] * overlap;
    }
    let e1 = normalized(&e1);
    let e2 = normalized(&cross(&v, &e1).map(|z| z.conj()));

    let mm = m.as_matrix();
    let h11 = m.expectation(&e1);
    let h22 = m.expectation(&e2);
    let me2 = mm.apply(&e2);
    let h12: C64 = (0..3).map(|i| e1[i].conj() * me2[i]).sum();
    let mean = 0.5 * (h11 + h22);
    let delta = 0.5 * (h11 - h22);
    let rad = delta.hypot(h12.norm());
    let (upper, lower) = (mean + rad, mean - rad);

    let (u_up, u_low): ([C64; 2], [C64; 2]) = if rad == 0.0 || h12.norm() == 0.0 {
        if h11 >= h22 {
            ([C64::new(1.0, 0.0), ZERO], [ZERO, C64::new(1.0, 0.0)])
        } else {
            ([ZERO, C64::new(1.0, 0.0)], [C64::new(1.0, 0.0), ZERO])
        }
    } else {
        let u = if delta >= 0.0 {
            [C64::new(rad + delta, 0.0), h12.conj()]
        } else {
            [h12, C64::new(rad - delta, 0.0)]
        };
        let n = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
        let u = [u[0] / n, u[1] / n];
        (u, [-u[1].conj(), u[0].conj()])
    };
    let lift = |u: [C64; 2]| -> Vec3 { [0, 1, 2].map(|i| e1[i] * u[0] + e2[i] * u[1]) };

    let mut pairs = [(isolated, v), (upper, lift(u_up)), (lower, lift(u_low))];
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    Eigh {
        spectrum: Spectrum3 { eigenvalues: pairs.map(|p| p.0) },
        vectors: pairs.map(|p| p.1),
    }
}

/// The three real eigenvalues of `m`, descending. Exact for diagonal input.
pub fn eigenvalues(m: &Herm3) -> Spectrum3 {
    eigh(m).spectrum
}

/// Number of eigenvalues with `|λ| > tol·max(1, ‖M‖₂)`.
pub fn rank_with_tol(m: &Herm3, tol: f64) -> usize {
    let s = eigenvalues(m);
    let threshold = tol * s.spectral_norm().max(1.0);
    s.eigenvalues.iter().filter(|x| x.abs() > threshold).count()
}

/// Whether `I/3 + M` is positive semidefinite up to `tol`.
pub fn is_density_psd(m: &Herm3, tol: f64) -> bool {
    1.0 / 3.0 + eigenvalues(m).min() >= -tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::herm3::gellmann::gell_mann;

    fn assert_spectrum(m: &Herm3, expected: [f64; 3]) {
        let s = eigenvalues(m).eigenvalues;
        for (x, y) in s.iter().zip(expected) {
            assert!((x - y).abs() < 1e-14, "{s:?} vs {expected:?}");
        }
    }

    #[test]
    fn diagonal_is_exact() {
        assert_eq!(eigenvalues(&Herm3::diag([1.0, -1.0, 0.0])).eigenvalues, [1.0, 0.0, -1.0]);
        let third = 1.0 / 3.0;
        assert_eq!(eigenvalues(&Herm3::diag([third; 3])).eigenvalues, [third; 3]);
    }

    #[test]
    fn off_diagonal_blocks() {
        assert_spectrum(&gell_mann(1), [1.0, 0.0, -1.0]);
        assert_spectrum(&gell_mann(2), [1.0, 0.0, -1.0]);
        assert_spectrum(&gell_mann(7), [1.0, 0.0, -1.0]);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_with_tol(&gell_mann(3), 1e-9), 2);
        assert_eq!(rank_with_tol(&gell_mann(8), 1e-9), 3);
        assert_eq!(rank_with_tol(&Herm3::zero(), 1e-9), 0);
        assert_eq!(rank_with_tol(&(gell_mann(1) + gell_mann(4)), 1e-9), 2);
    }

    #[test]
    fn density_positivity() {
        assert!(is_density_psd(&Herm3::zero(), 1e-9));
        assert!(is_density_psd(&(gell_mann(3) * (1.0 / 3.0)), 1e-9));
        assert!(!is_density_psd(&gell_mann(3), 1e-9));
    }

    #[test]
    fn eigenvectors_diagonalize() {
        let m = gell_mann(1) * 0.3 + gell_mann(5) * -0.7 + gell_mann(8) * 0.2 + gell_mann(6) * 0.1;
        let eig = eigh(&m);
        for (i, v) in eig.vectors.iter().enumerate() {
            let mv = m.as_matrix().apply(v);
            for c in 0..3 {
                assert!((mv[c] - v[c] * eig.spectrum.eigenvalues[i]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn degenerate_pair_keeps_full_precision() {
        // Unitary rotation of diag(2,-1,-1)/sqrt3: the pure-state direction.
        let s3 = 3f64.sqrt();
        let d = Herm3::diag([2.0 / s3, -1.0 / s3, -1.0 / s3]);
        let t = 0.3_f64;
        let u = crate::ComplexMatrix3::from_parts(
            [[t.cos(), -t.sin(), 0.0], [t.sin(), t.cos(), 0.0], [0.0, 0.0, 1.0]],
            [[0.0; 3]; 3],
        );
        let w = crate::ComplexMatrix3::from_parts(
            [[1.0, 0.0, 0.0], [0.0, (0.7f64).cos(), -(0.7f64).sin()], [0.0, (0.7f64).sin(), (0.7f64).cos()]],
            [[0.0; 3]; 3],
        );
        let m = d.conjugate_by(&(w * u));
        let s = eigenvalues(&m).eigenvalues;
        assert!((s[1] + 1.0 / s3).abs() < 1e-15 && (s[2] + 1.0 / s3).abs() < 1e-15, "{s:?}");
    }
}
