//! Boundary curves of 2-sections.
//!
//! In the standard basis a section is `{(x, y) : I/3 + x·A + y·B ≥ 0}`, and
//! its boundary lies on the plane cubic `3·det ρ(x, y) = 0`. Positivity is
//! decided spectrally: along a unit direction `D` the boundary is reached at
//! `t* = -1/(3·λ_min(D))`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::canonical::{SectionParams, SectionPlane};
use crate::error::{Error, Result};
use crate::herm3::{eigenvalues, Herm3};
use crate::poly::real_cubic_roots;
use crate::tol::{CLASSIFY_TOL, PHASE_ZERO_TOL, PURE_SCAN_SAMPLES, R_IN, R_OUT};

/// `p(x,y) = c0 + cx2·x² + cy2·y² + cy3·y³ + cx2y·x²y + cxy2·xy²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicCurve {
    pub c0: f64,
    pub cx2: f64,
    pub cy2: f64,
    pub cy3: f64,
    pub cx2y: f64,
    pub cxy2: f64,
}

impl CubicCurve {
    pub fn evaluate(&self, x: f64, y: f64) -> f64 {
        self.c0
            + self.cx2 * x * x
            + self.cy2 * y * y
            + self.cy3 * y * y * y
            + self.cx2y * x * x * y
            + self.cxy2 * x * y * y
    }

    /// `(∂p/∂x, ∂p/∂y)`.
    pub fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let dx = 2.0 * self.cx2 * x + 2.0 * self.cx2y * x * y + self.cxy2 * y * y;
        let dy = 2.0 * self.cy2 * y + 3.0 * self.cy3 * y * y + self.cx2y * x * x + 2.0 * self.cxy2 * x * y;
        (dx, dy)
    }

    /// `max(|p|, |∂ₓp|, |∂ᵧp|)`; zero exactly at singular points of the curve.
    pub fn singular_residual(&self, x: f64, y: f64) -> f64 {
        let (dx, dy) = self.gradient(x, y);
        self.evaluate(x, y).abs().max(dx.abs()).max(dy.abs())
    }
}

/// Coefficients of `3·det(I/3 + x·A + y·B)` for the standard basis.
pub fn cubic_coefficients(params: &SectionParams) -> CubicCurve {
    let (k, a, b, c) = (params.k(), params.a(), params.b(), params.c());
    CubicCurve {
        c0: 1.0 / 9.0,
        cx2: -1.0,
        cy2: -1.0,
        cy3: 3.0 * (2.0 * a * b * c * params.cos_phi() - k * (1.0 - k * k - 3.0 * a * a)),
        cx2y: 6.0 * k,
        cxy2: 3.0 * (b * b - c * c),
    }
}

/// `3·det(I/3 + x·A + y·B)` by a direct determinant.
pub fn evaluate_det(params: &SectionParams, x: f64, y: f64) -> f64 {
    let plane = params.standard_plane();
    3.0 * (Herm3::identity() * (1.0 / 3.0) + plane.point(x, y)).det()
}

/// Largest `t ≥ 0` with `I/3 + t·direction` positive semidefinite.
///
/// Works for any traceless direction in the full eight-dimensional space.
/// `tol` bounds the accepted negativity of the returned density matrix and is
/// only checked in debug builds.
pub fn raycast_boundary(direction: &Herm3, tol: f64) -> f64 {
    let lowest = eigenvalues(direction).min();
    if lowest >= 0.0 {
        return f64::INFINITY;
    }
    let t = -1.0 / (3.0 * lowest);
    debug_assert!(1.0 / 3.0 + t * lowest >= -tol.max(1e-12));
    t
}

/// Second route to [`raycast_boundary`]: smallest positive root of the cubic
/// `det(D)·t³ - (‖D‖²/3)·t² + 1/27 = det(I/3 + t·D)`, verified against the
/// minimum eigenvalue and replaced by bisection if the check fails.
///
/// Near pure-state directions `t*` is a double root and this route is only
/// accurate to about `1e-8`.
pub fn raycast_cubic(direction: &Herm3) -> f64 {
    let norm2 = crate::hs_inner(direction, direction);
    let roots = real_cubic_roots(direction.det(), -norm2 / 3.0, 0.0, 1.0 / 27.0);
    let min_eig = |t: f64| 1.0 / 3.0 + t * eigenvalues(direction).min();
    if let Some(&t) = roots.iter().find(|&&t| t > 0.0) {
        if min_eig(t).abs() <= 1e-7 {
            return t;
        }
    }
    let (mut lo, mut hi) = (0.0, R_OUT * norm2.sqrt().recip() * 1.5);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if min_eig(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn radius(plane: &SectionPlane, theta: f64) -> f64 {
    raycast_boundary(&plane.direction(theta), 0.0)
}

/// One boundary point at polar angle `theta`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundarySample {
    pub theta: f64,
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

/// `n` boundary points of the section by `plane`, at `θ₀ + 2πj/n`.
pub fn section_boundary(plane: &SectionPlane, n: usize, theta0: f64) -> Vec<BoundarySample> {
    (0..n)
        .map(|j| {
            let theta = theta0 + TAU * j as f64 / n as f64;
            let t = radius(plane, theta);
            BoundarySample { theta, t, x: t * theta.cos(), y: t * theta.sin() }
        })
        .collect()
}

/// `n ≥ 3` uniformly spaced boundary points of the standard section, from `θ = 0`.
pub fn sample_boundary(params: &SectionParams, n: usize) -> Vec<BoundarySample> {
    section_boundary(&params.standard_plane(), n, 0.0)
}

/// As [`sample_boundary`], starting at `theta0`.
pub fn sample_boundary_from(params: &SectionParams, n: usize, theta0: f64) -> Vec<BoundarySample> {
    section_boundary(&params.standard_plane(), n, theta0)
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if hi - lo < 1e-14 {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Smallest and largest boundary distance of the section, a congruence invariant.
pub fn radial_extrema(plane: &SectionPlane) -> (f64, f64) {
    const N: usize = 720;
    let h = TAU / N as f64;
    let ts: Vec<f64> = (0..N).map(|j| radius(plane, j as f64 * h)).collect();
    let argmin = (0..N).min_by(|&i, &j| ts[i].total_cmp(&ts[j])).unwrap_or(0);
    let argmax = (0..N).max_by(|&i, &j| ts[i].total_cmp(&ts[j])).unwrap_or(0);
    let th = |i: usize| i as f64 * h;
    let (_, lo) = golden_max(|t| -radius(plane, t), th(argmin) - h, th(argmin) + h);
    let (_, hi) = golden_max(|t| radius(plane, t), th(argmax) - h, th(argmax) + h);
    ((-lo).min(ts[argmin]), hi.max(ts[argmax]))
}

/// How the boundary meets the outsphere at a pure state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContactKind {
    /// The boundary has a corner at the pure state.
    Corner,
    /// The boundary touches the outsphere smoothly.
    Tangent,
}

/// A pure state on the section boundary.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PureContact {
    pub theta: f64,
    pub x: f64,
    pub y: f64,
    pub kind: ContactKind,
}

/// Pure states of the section by `plane`: directions whose boundary distance
/// reaches `1/√3` within `tol`.
pub fn find_pure_states_in_plane(plane: &SectionPlane, tol: f64) -> Vec<PureContact> {
    let n = PURE_SCAN_SAMPLES;
    let h = TAU / n as f64;
    let ts: Vec<f64> = (0..n).map(|j| radius(plane, j as f64 * h)).collect();
    let mut contacts: Vec<PureContact> = Vec::new();
    for i in 0..n {
        let (prev, next) = (ts[(i + n - 1) % n], ts[(i + 1) % n]);
        if ts[i] < prev || ts[i] < next || ts[i] < R_OUT - 0.05 {
            continue;
        }
        let centre = i as f64 * h;
        let (theta, t) = golden_max(|th| radius(plane, th), centre - h, centre + h);
        if R_OUT - t > tol {
            continue;
        }
        let theta = theta.rem_euclid(TAU);
        let duplicate = contacts.iter().any(|c| {
            let d = (c.theta - theta).abs();
            d.min(TAU - d) < 2.0 * h
        });
        if duplicate {
            continue;
        }
        let delta = 1e-6;
        let slope = ((radius(plane, theta + delta) - t) / delta)
            .abs()
            .max(((radius(plane, theta - delta) - t) / delta).abs());
        let kind = if slope > 1e-3 { ContactKind::Corner } else { ContactKind::Tangent };
        contacts.push(PureContact { theta, x: t * theta.cos(), y: t * theta.sin(), kind });
    }
    contacts.sort_by(|a, b| a.theta.total_cmp(&b.theta));
    contacts
}

/// Pure states on the boundary of the standard section.
pub fn find_pure_states(params: &SectionParams, tol: f64) -> Vec<PureContact> {
    find_pure_states_in_plane(&params.standard_plane(), tol)
}

/// Shape families of section boundaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeTag {
    CircularDisk,
    Ellipse,
    EllipseOnePureContact,
    CutEllipse,
    ParabolaChord,
    CutHyperbola,
    Triangle,
    GenericSmooth,
    GenericWithPureContacts,
}

impl ShapeTag {
    pub const ALL: [ShapeTag; 9] = [
        ShapeTag::CircularDisk,
        ShapeTag::Ellipse,
        ShapeTag::EllipseOnePureContact,
        ShapeTag::CutEllipse,
        ShapeTag::ParabolaChord,
        ShapeTag::CutHyperbola,
        ShapeTag::Triangle,
        ShapeTag::GenericSmooth,
        ShapeTag::GenericWithPureContacts,
    ];

    /// Boundary contains a line segment (the cubic has a linear factor that
    /// actually cuts the conic).
    pub fn has_segment(self) -> bool {
        matches!(self, ShapeTag::CutEllipse | ShapeTag::ParabolaChord | ShapeTag::CutHyperbola | ShapeTag::Triangle)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ShapeTag::CircularDisk => "CircularDisk",
            ShapeTag::Ellipse => "Ellipse",
            ShapeTag::EllipseOnePureContact => "EllipseOnePureContact",
            ShapeTag::CutEllipse => "CutEllipse",
            ShapeTag::ParabolaChord => "ParabolaChord",
            ShapeTag::CutHyperbola => "CutHyperbola",
            ShapeTag::Triangle => "Triangle",
            ShapeTag::GenericSmooth => "GenericSmooth",
            ShapeTag::GenericWithPureContacts => "GenericWithPureContacts",
        }
    }
}

impl std::fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ShapeTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ShapeTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown shape tag '{s}'")))
    }
}

/// Classification verdict for a section boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeClass {
    pub tag: ShapeTag,
    pub pure_contacts: usize,
    pub has_segment: bool,
}

/// [`ShapeClass`] together with the tuple it describes, the CLI's JSON report.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShapeReport {
    pub tag: ShapeTag,
    pub pure_contacts: usize,
    pub has_segment: bool,
    pub params: SectionParams,
}

impl ShapeReport {
    pub fn new(shape: ShapeClass, params: SectionParams) -> Self {
        Self { tag: shape.tag, pure_contacts: shape.pure_contacts, has_segment: shape.has_segment, params }
    }
}

const HALF_R_IN_K: f64 = R_IN; // k = 1/(2√3)
const TRIANGLE_K: f64 = R_OUT; // k = 1/√3

/// Shape of the boundary from the canonical tuple.
///
/// Factorizing cubics are recognised from parameter identities tested at
/// absolute tolerance `tol`; degenerate strata win at decision boundaries.
/// Everything else is generic and is told apart by its pure states.
pub fn classify_shape(params: &SectionParams, tol: f64) -> ShapeClass {
    let tag = shape_tag(params, tol);
    let pure_contacts = match tag {
        ShapeTag::CircularDisk | ShapeTag::Ellipse => 0,
        _ => find_pure_states(params, tol).len(),
    };
    let tag = match tag {
        ShapeTag::GenericSmooth if pure_contacts > 0 => ShapeTag::GenericWithPureContacts,
        other => other,
    };
    ShapeClass { tag, pure_contacts, has_segment: tag.has_segment() }
}

fn shape_tag(params: &SectionParams, tol: f64) -> ShapeTag {
    let (k, a, b, c) = (params.k(), params.a(), params.b(), params.c());
    let cos_phi = params.cos_phi();
    let near = |x: f64, y: f64| (x - y).abs() <= tol;

    // Every element has rank two: no cubic terms at all.
    if k <= tol && near(b, c) && (a * b * c * cos_phi).abs() <= tol {
        return ShapeTag::CircularDisk;
    }
    // Block structure {1,3} ⊕ {2}: a line times a conic.
    if a <= tol && c <= tol {
        return if k <= tol {
            ShapeTag::ParabolaChord
        } else if near(k, TRIANGLE_K) {
            ShapeTag::Triangle
        } else {
            ShapeTag::CutHyperbola
        };
    }
    if near(b, c) {
        if b <= tol {
            // Line 1/3 - 2ky = 0 times a conic with y² coefficient 3(4k² - 1).
            // The two meet (at pure states) iff 12k² ≥ 1.
            return if near(k, TRIANGLE_K) {
                ShapeTag::Triangle
            } else if near(k, 0.5) {
                ShapeTag::ParabolaChord
            } else if near(k, HALF_R_IN_K) {
                ShapeTag::EllipseOnePureContact
            } else if k > 0.5 {
                ShapeTag::CutHyperbola
            } else if k > HALF_R_IN_K {
                ShapeTag::CutEllipse
            } else {
                ShapeTag::Ellipse
            };
        }
        if near(a * cos_phi, 3.0 * k) {
            return ShapeTag::Ellipse;
        }
    }
    ShapeTag::GenericSmooth
}

/// Whether the boundary cubic is free of singular points on the section.
///
/// Singular points are the pure states and the corners where a linear factor
/// meets the conic. At each pure state the gradient condition
/// `p = ∂ₓp = ∂ᵧp = 0` is cross-checked in debug builds.
pub fn is_smooth_boundary(params: &SectionParams, tol: f64) -> bool {
    let shape = classify_shape(params, tol);
    if cfg!(debug_assertions) {
        let curve = cubic_coefficients(params);
        for c in find_pure_states(params, tol) {
            debug_assert!(curve.singular_residual(c.x, c.y) < 1e-6);
        }
    }
    !shape.has_segment && shape.pure_contacts == 0
}

/// `6k·cos φ·abc - (ab)² - (ac)² + 2(bc)²`, which vanishes exactly when a
/// section with `abc ≠ 0` and real `B` (`φ ∈ {0, π}`) contains a pure state.
pub fn pure_state_surface_residual(params: &SectionParams) -> Result<f64> {
    let (k, a, b, c) = (params.k(), params.a(), params.b(), params.c());
    if a.min(b).min(c) <= PHASE_ZERO_TOL {
        return Err(Error::InapplicableRegime("requires abc ≠ 0"));
    }
    if params.phi().sin().abs() > CLASSIFY_TOL {
        return Err(Error::InapplicableRegime("requires φ ∈ {0, π}"));
    }
    let s = params.cos_phi().signum();
    Ok(6.0 * k * s * a * b * c - (a * b).powi(2) - (a * c).powi(2) + 2.0 * (b * c).powi(2))
}
