//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use nalgebra::Matrix3;
use num_complex::Complex64 as C;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use qutrit_sections::canonical::SectionParams;
use qutrit_sections::herm3::{from_gellmann, GellMannVector};
use qutrit_sections::{ComplexMatrix3, Herm3};

pub type M3 = [[C; 3]; 3];

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// Cofactor expansion along the first row.
pub fn det3(m: &M3) -> C {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn matmul(a: &M3, b: &M3) -> M3 {
    let mut out = [[c(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    out
}

pub fn adjoint(a: &M3) -> M3 {
    let mut out = [[c(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub fn lin(a: &M3, x: f64, b: &M3, y: f64) -> M3 {
    let mut out = [[c(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][j] * x + b[i][j] * y;
        }
    }
    out
}

/// `½ Tr(X Y)`.
pub fn half_trace_product(x: &M3, y: &M3) -> C {
    let p = matmul(x, y);
    (p[0][0] + p[1][1] + p[2][2]) * 0.5
}

pub fn a_std() -> M3 {
    let mut m = [[c(0.0, 0.0); 3]; 3];
    m[0][0] = c(1.0, 0.0);
    m[1][1] = c(-1.0, 0.0);
    m
}

/// The standard `B` written out entry by entry.
pub fn b_std(k: f64, a: f64, b: f64, cc: f64, phi: f64) -> M3 {
    let e = C::from_polar(1.0, phi);
    [
        [c(k, 0.0), e * a, e * b],
        [e.conj() * a, c(k, 0.0), e * cc],
        [e.conj() * b, e.conj() * cc, c(-2.0 * k, 0.0)],
    ]
}

pub fn b_of(p: &SectionParams) -> M3 {
    let [k, a, b, cc, phi] = p.as_tuple();
    b_std(k, a, b, cc, phi)
}

/// `3·det(I/3 + x·A + y·B)` from the explicit matrix.
pub fn det_oracle(p: &SectionParams, x: f64, y: f64) -> f64 {
    let mut m = lin(&a_std(), x, &b_of(p), y);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += 1.0 / 3.0;
    }
    3.0 * det3(&m).re
}

/// Eigenvalues of a hermitian matrix by nalgebra, ascending.
pub fn eig_oracle(m: &M3) -> [f64; 3] {
    let mat = Matrix3::from_fn(|i, j| m[i][j]);
    let mut v: Vec<f64> = mat.symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    [v[0], v[1], v[2]]
}

pub fn to_m3(m: &ComplexMatrix3) -> M3 {
    m.entries
}

pub fn herm_m3(h: &Herm3) -> M3 {
    *h.entries()
}

pub fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

/// Uniform tuple on the parameter domain: `(√3k, a, b, c)` on the unit
/// sphere's positive orthant with `b ≥ c`, `φ` uniform.
pub fn random_params<R: Rng>(rng: &mut R) -> SectionParams {
    let g: [f64; 4] = std::array::from_fn(|_| gaussian(rng).abs());
    let n = g.iter().map(|v| v * v).sum::<f64>().sqrt();
    let (b, cc) = if g[2] >= g[3] { (g[2], g[3]) } else { (g[3], g[2]) };
    let phi = Uniform::new(0.0, std::f64::consts::TAU).unwrap().sample(rng);
    SectionParams::normalized(g[0] / n / 3f64.sqrt(), g[1] / n, b / n, cc / n, phi).unwrap()
}

pub fn random_traceless<R: Rng>(rng: &mut R) -> Herm3 {
    from_gellmann(&GellMannVector(std::array::from_fn(|_| gaussian(rng))))
}

/// Haar-ish unitary from Gram-Schmidt on gaussian columns.
pub fn random_unitary<R: Rng>(rng: &mut R) -> ComplexMatrix3 {
    let mut cols: Vec<[C; 3]> = Vec::new();
    while cols.len() < 3 {
        let mut v: [C; 3] = std::array::from_fn(|_| c(gaussian(rng), gaussian(rng)));
        for u in &cols {
            let dot: C = (0..3).map(|i| u[i].conj() * v[i]).sum();
            for i in 0..3 {
                v[i] -= u[i] * dot;
            }
        }
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-6 {
            cols.push(v.map(|z| z / n));
        }
    }
    let mut m = ComplexMatrix3::zero();
    for (j, col) in cols.iter().enumerate() {
        for i in 0..3 {
            m.entries[i][j] = col[i];
        }
    }
    m
}
