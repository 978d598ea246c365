//! Standard form of a 2-plane of traceless hermitian matrices.
//!
//! Every plane through the maximally mixed state contains a rank-2 line.
//! Diagonalizing a unit element of such a line to `A = diag(1,-1,0)` and
//! fixing the diagonal phases of the orthogonal direction brings the plane to
//!
//! ```text
//!     A = diag(1, -1, 0)      B = ⎡ k      a·e^{iφ}  b·e^{iφ} ⎤
//!                                 ⎢ a·e^{-iφ}  k     c·e^{iφ} ⎥
//!                                 ⎣ b·e^{-iφ} c·e^{-iφ}  -2k  ⎦
//! ```
//!
//! with `k, a, b, c ≥ 0`, `3k² + a² + b² + c² = 1` and `b ≥ c`. When a plane
//! holds several rank-2 lines each yields a tuple; all of them are reported
//! as candidates and the lexicographically smallest is the representative.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::boundary;
use crate::error::{Error, Result};
use crate::herm3::{commutator_i, eigh, from_gellmann, hs_inner, ComplexMatrix3, GellMannVector, Herm3, C64};
use crate::poly::real_cubic_roots;
use crate::tol::{
    CLASSIFY_TOL, MAX_GRAM_CONDITION, ORTHONORMAL_TOL, PHASE_ZERO_TOL, ROOT_MERGE_TOL, TRACE_TOL,
};

/// Orthonormal pair of traceless hermitian matrices spanning a 2-plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SectionPlane {
    a: Herm3,
    b: Herm3,
}

impl SectionPlane {
    /// Validates tracelessness and orthonormality under `½Tr(M₁M₂)`.
    pub fn new(a: Herm3, b: Herm3) -> Result<Self> {
        for m in [&a, &b] {
            if m.trace().abs() > TRACE_TOL {
                return Err(Error::NonTraceless { trace: m.trace() });
            }
        }
        let deviation = (hs_inner(&a, &a) - 1.0)
            .abs()
            .max((hs_inner(&b, &b) - 1.0).abs())
            .max(hs_inner(&a, &b).abs());
        if deviation > ORTHONORMAL_TOL {
            return Err(Error::NotOrthonormal { deviation });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Herm3 {
        &self.a
    }

    pub fn b(&self) -> &Herm3 {
        &self.b
    }

    /// `x·A + y·B`.
    pub fn point(&self, x: f64, y: f64) -> Herm3 {
        self.a * x + self.b * y
    }

    /// Unit element `cos θ·A + sin θ·B`.
    pub fn direction(&self, theta: f64) -> Herm3 {
        self.point(theta.cos(), theta.sin())
    }

    /// Coordinates of the orthogonal projection of `m` onto the plane.
    pub fn coordinates(&self, m: &Herm3) -> (f64, f64) {
        (hs_inner(m, &self.a), hs_inner(m, &self.b))
    }

    /// Same plane, basis rotated by `angle`.
    pub fn rotated(&self, angle: f64) -> Self {
        Self { a: self.direction(angle), b: self.direction(angle + PI / 2.0) }
    }

    /// `U·plane·U†`.
    pub fn conjugated(&self, u: &ComplexMatrix3) -> Self {
        Self { a: self.a.conjugate_by(u), b: self.b.conjugate_by(u) }
    }

    /// Largest distance from `other`'s basis to this plane, a subspace test.
    pub fn subspace_distance(&self, other: &SectionPlane) -> f64 {
        [other.a, other.b]
            .iter()
            .map(|m| {
                let (x, y) = self.coordinates(m);
                (*m - self.point(x, y)).hs_norm()
            })
            .fold(0.0, f64::max)
    }
}

/// Gram-Schmidt under the Hilbert-Schmidt product.
pub fn orthonormalize_plane(m1: &Herm3, m2: &Herm3) -> Result<SectionPlane> {
    for m in [m1, m2] {
        if m.trace().abs() > TRACE_TOL {
            return Err(Error::NonTraceless { trace: m.trace() });
        }
    }
    let g11 = hs_inner(m1, m1);
    let g22 = hs_inner(m2, m2);
    let g12 = hs_inner(m1, m2);
    let mean = 0.5 * (g11 + g22);
    let rad = (0.5 * (g11 - g22)).hypot(g12);
    let (hi, lo) = (mean + rad, mean - rad);
    let condition = if lo <= 0.0 { f64::INFINITY } else { hi / lo };
    if !(condition <= MAX_GRAM_CONDITION) {
        return Err(Error::DegenerateSpan { condition });
    }
    let a = m1.traceless_part() * (1.0 / g11.sqrt());
    let rest = m2.traceless_part() - a * hs_inner(m2, &a);
    let b = rest * (1.0 / rest.hs_norm());
    SectionPlane::new(a, b)
}

/// `count` planes spanned by independent isotropic gaussian directions,
/// reproducible from `seed`.
pub fn random_planes(count: usize, seed: u64) -> Vec<SectionPlane> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gaussian = || GellMannVector(std::array::from_fn(|_| StandardNormal.sample(&mut rng)));
    let mut planes = Vec::with_capacity(count);
    while planes.len() < count {
        let (g1, g2) = (gaussian(), gaussian());
        if let Ok(plane) = orthonormalize_plane(&from_gellmann(&g1), &from_gellmann(&g2)) {
            planes.push(plane);
        }
    }
    planes
}

/// Normalized entries this small are roundoff from the unitary and are set to zero.
const ROUNDOFF_ZERO: f64 = 1e-14;

/// Canonical tuple `(k, a, b, c, φ)` labelling a unitary class of 2-sections.
///
/// `d = √3·k` is the fourth coordinate of the unit 3-sphere point
/// `(a, b, c, d)`. Shape quantities depend on `φ` only through `cos φ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SectionParams {
    k: f64,
    a: f64,
    b: f64,
    c: f64,
    phi: f64,
}

impl SectionParams {
    /// Validated constructor. `φ` is reduced to `[0, 2π)` and set to zero
    /// when `abc = 0`.
    pub fn new(k: f64, a: f64, b: f64, c: f64, phi: f64) -> Result<Self> {
        if [k, a, b, c, phi].iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParams("non-finite component".into()));
        }
        if [k, a, b, c].iter().any(|&x| x < -1e-12) {
            return Err(Error::InvalidParams(format!("negative component in ({k}, {a}, {b}, {c})")));
        }
        let norm = 3.0 * k * k + a * a + b * b + c * c;
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidParams(format!("3k² + a² + b² + c² = {norm}, expected 1")));
        }
        if b < c - 1e-12 {
            return Err(Error::InvalidParams(format!("b = {b} < c = {c}")));
        }
        Ok(Self::from_raw(k.max(0.0), a.max(0.0), b.max(0.0), c.max(0.0), phi))
    }

    /// Like [`SectionParams::new`] but rescales a tuple whose squared norm is
    /// within `1e-6` of one, for hand-typed input such as `0.577350269,0,0,0,0`.
    pub fn normalized(k: f64, a: f64, b: f64, c: f64, phi: f64) -> Result<Self> {
        let norm = (3.0 * k * k + a * a + b * b + c * c).sqrt();
        if !((norm * norm - 1.0).abs() <= 1e-6) {
            return Err(Error::InvalidParams(format!(
                "3k² + a² + b² + c² = {}, expected 1",
                norm * norm
            )));
        }
        if (norm - 1.0).abs() <= 8.0 * f64::EPSILON {
            return Self::new(k, a, b, c, phi);
        }
        Self::new(k / norm, a / norm, b / norm, c / norm, phi)
    }

    /// Projects any non-zero tuple with non-negative entries onto the unit
    /// sphere, then validates as [`SectionParams::new`].
    pub fn rescaled(k: f64, a: f64, b: f64, c: f64, phi: f64) -> Result<Self> {
        let norm = (3.0 * k * k + a * a + b * b + c * c).sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::InvalidParams(format!("cannot rescale ({k}, {a}, {b}, {c})")));
        }
        Self::normalized(k / norm, a / norm, b / norm, c / norm, phi)
    }

    /// Rescales onto the unit sphere and reduces `φ`; no ordering checks.
    pub(crate) fn from_raw(k: f64, a: f64, b: f64, c: f64, phi: f64) -> Self {
        let n = (3.0 * k * k + a * a + b * b + c * c).sqrt();
        // Leaves unit tuples bit-for-bit unchanged, so that parsing is idempotent.
        let n = if (n - 1.0).abs() <= 8.0 * f64::EPSILON { 1.0 } else { n };
        let snap = |v: f64| if (v / n).abs() <= ROUNDOFF_ZERO { 0.0 } else { v / n };
        let (k, a, b, c) = (snap(k), snap(a), snap(b), snap(c));
        let phi = if a.min(b).min(c) <= PHASE_ZERO_TOL { 0.0 } else { phi.rem_euclid(TAU) };
        // rem_euclid can round up to exactly TAU.
        let phi = if phi >= TAU { 0.0 } else { phi };
        Self { k, a, b, c, phi }
    }

    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }
    pub fn d(&self) -> f64 {
        3f64.sqrt() * self.k
    }
    pub fn cos_phi(&self) -> f64 {
        self.phi.cos()
    }

    /// `(k, a, b, c, φ)`.
    pub fn as_tuple(&self) -> [f64; 5] {
        [self.k, self.a, self.b, self.c, self.phi]
    }

    /// The standard second basis vector `B`.
    pub fn b_matrix(&self) -> Herm3 {
        let e = C64::from_polar(1.0, self.phi);
        Herm3::from_upper([self.k, self.k, -2.0 * self.k], [e * self.a, e * self.b, e * self.c])
    }

    /// `(diag(1,-1,0), B)`.
    pub fn standard_plane(&self) -> SectionPlane {
        SectionPlane { a: Herm3::diag([1.0, -1.0, 0.0]), b: self.b_matrix() }
    }

    /// `4a² + b² + c² = 3(a² - k²) + 1`, the commutator invariant in closed form.
    pub fn commutator_invariant(&self) -> f64 {
        4.0 * self.a * self.a + self.b * self.b + self.c * self.c
    }

    /// Hilbert-Schmidt distance between the standard `B` matrices, minimised
    /// over the relabelings that leave the class unchanged (`φ → -φ` when
    /// `b = c`, `φ → φ + π` when `k = 0`).
    pub fn distance(&self, other: &SectionParams) -> f64 {
        let mine = self.b_matrix();
        let mut images = vec![other.phi];
        if (other.b - other.c).abs() <= CLASSIFY_TOL {
            images.push(-other.phi);
        }
        if other.k <= CLASSIFY_TOL {
            images.push(other.phi + PI);
            if (other.b - other.c).abs() <= CLASSIFY_TOL {
                images.push(PI - other.phi);
            }
        }
        images
            .into_iter()
            .map(|phi| {
                let img = SectionParams { phi, ..*other };
                (mine - img.b_matrix()).hs_norm()
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Ordering by `(k, a, b, c, cos φ)` with ties inside [`CLASSIFY_TOL`].
    pub fn canonical_cmp(&self, other: &SectionParams) -> Ordering {
        let lhs = [self.k, self.a, self.b, self.c, self.cos_phi()];
        let rhs = [other.k, other.a, other.b, other.c, other.cos_phi()];
        for (x, y) in lhs.iter().zip(rhs) {
            if (x - y).abs() > CLASSIFY_TOL {
                return x.total_cmp(&y);
            }
        }
        Ordering::Equal
    }
}

#[derive(Deserialize)]
struct RawParams {
    k: f64,
    a: f64,
    b: f64,
    c: f64,
    #[serde(default)]
    phi: f64,
}

impl<'de> Deserialize<'de> for SectionParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawParams::deserialize(d)?;
        SectionParams::new(r.k, r.a, r.b, r.c, r.phi).map_err(serde::de::Error::custom)
    }
}

/// Unit rank-2 elements of a plane, one per `±` pair.
#[derive(Clone, Debug, PartialEq)]
pub enum Rank2Lines {
    /// Every element of the plane has rank at most two.
    All,
    Lines(Vec<Herm3>),
}

/// Below this `|det|` at every probe angle the plane is all rank-2.
const ALL_RANK2_TOL: f64 = 1e-10;

/// Rank-2 lines of a plane: the real roots of `det(λP + Q) = 0`.
///
/// `(P, Q)` is the plane basis rotated so that `P` is the probe direction
/// with the largest `|det|`. That keeps the leading coefficient away from
/// zero, so a line close to the original `A` is not a huge root.
pub fn find_rank2_units(plane: &SectionPlane) -> Rank2Lines {
    let probes: Vec<(f64, f64)> = (0..6)
        .map(|j| {
            let theta = j as f64 * PI / 6.0;
            (theta, plane.direction(theta).det())
        })
        .collect();
    let &(theta0, det_p) = probes
        .iter()
        .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
        .expect("six probes");
    if det_p.abs() <= ALL_RANK2_TOL {
        return Rank2Lines::All;
    }
    let p = plane.direction(theta0);
    let q = plane.direction(theta0 + PI / 2.0);
    let (pm, qm) = (p.as_matrix(), q.as_matrix());
    let mixed = |x: &ComplexMatrix3, y: &ComplexMatrix3| -> f64 {
        (0..3)
            .map(|j| {
                let mut m = *x;
                for i in 0..3 {
                    m.entries[i][j] = y.entries[i][j];
                }
                m.det().re
            })
            .sum()
    };
    // det(λP + Q) = det P·λ³ + Σⱼ det(P|Q_j)·λ² + Σⱼ det(Q|P_j)·λ + det Q
    let roots = real_cubic_roots(det_p, mixed(&pm, &qm), mixed(&qm, &pm), q.det());

    let mut lines: Vec<(f64, Herm3)> = roots
        .into_iter()
        .map(|lambda| {
            let m = p * lambda + q;
            let m = m * (1.0 / m.hs_norm());
            let (x, y) = plane.coordinates(&m);
            let (m, x, y) = if y < 0.0 || (y == 0.0 && x < 0.0) { (-m, -x, -y) } else { (m, x, y) };
            (y.atan2(x), m)
        })
        .collect();
    lines.sort_by(|a, b| a.0.total_cmp(&b.0));
    lines.dedup_by(|a, b| (a.0 - b.0).abs() <= ROOT_MERGE_TOL || (PI - (a.0 - b.0).abs()) <= ROOT_MERGE_TOL);
    Rank2Lines::Lines(lines.into_iter().map(|(_, m)| m).collect())
}

/// One standard-form realization of a plane.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub params: SectionParams,
    /// `U` with `U·a_source·U† = diag(1,-1,0)` and `U·b_source·U† = B(params)`.
    pub unitary: ComplexMatrix3,
    /// The rank-2 element of the input plane mapped to `A`.
    pub a_source: Herm3,
    /// The orthogonal element of the input plane mapped to `B`.
    pub b_source: Herm3,
}

/// Output of [`canonicalize`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CanonicalResult {
    pub params: SectionParams,
    pub a_std: Herm3,
    pub b_std: Herm3,
    #[serde(rename = "U")]
    pub unitary: ComplexMatrix3,
    /// Every distinct tuple reachable from a rank-2 line, sorted.
    pub candidates: Vec<SectionParams>,
    #[serde(skip)]
    pub realization: Candidate,
}

/// Canonical form of `span{m1, m2}`.
pub fn canonicalize(m1: &Herm3, m2: &Herm3) -> Result<CanonicalResult> {
    Ok(canonicalize_plane(&orthonormalize_plane(m1, m2)?))
}

/// Canonical form of an already orthonormal plane.
pub fn canonicalize_plane(plane: &SectionPlane) -> CanonicalResult {
    let directions = match find_rank2_units(plane) {
        Rank2Lines::All => vec![*plane.a()],
        Rank2Lines::Lines(lines) => lines,
    };
    let mut candidates: Vec<Candidate> = directions.iter().map(|l| standardize(plane, l)).collect();
    candidates.sort_by(|x, y| x.params.canonical_cmp(&y.params));
    candidates.dedup_by(|x, y| x.params.distance(&y.params) <= 1e-8);
    let best = candidates[0].clone();
    CanonicalResult {
        params: best.params,
        a_std: Herm3::diag([1.0, -1.0, 0.0]),
        b_std: best.params.b_matrix(),
        unitary: best.unitary,
        candidates: candidates.iter().map(|c| c.params).collect(),
        realization: best,
    }
}

/// Equalizes the off-diagonal phases of a matrix with diagonal `(k, k, -2k)`.
///
/// Returns the raw tuple and the diagonal unitary `D` doing it. The common
/// phase is the conjugation invariant `arg z₁₂ + arg z₂₃ - arg z₁₃`.
fn fix_phases(m: &Herm3) -> (SectionParams, ComplexMatrix3) {
    let d = [0, 1, 2].map(|i| m.get(i, i).re);
    let k = (d[0] + d[1] - 2.0 * d[2]) / 6.0;
    let (z12, z13, z23) = (m.get(0, 1), m.get(0, 2), m.get(1, 2));
    let nz = |z: C64| z.norm() > PHASE_ZERO_TOL;
    let (phi, alpha) = match (nz(z12), nz(z13), nz(z23)) {
        (true, true, true) => {
            let phi = z12.arg() + z23.arg() - z13.arg();
            (phi, [0.0, z12.arg() - phi, z13.arg() - phi])
        }
        (true, true, false) | (false, true, false) | (true, false, false) => {
            (0.0, [0.0, z12.arg(), z13.arg()])
        }
        (true, false, true) => (0.0, [0.0, z12.arg(), z12.arg() + z23.arg()]),
        (false, true, true) => (0.0, [0.0, z13.arg() - z23.arg(), z13.arg()]),
        (false, false, true) => (0.0, [0.0, 0.0, z23.arg()]),
        (false, false, false) => (0.0, [0.0; 3]),
    };
    let dmat = ComplexMatrix3::diag(alpha.map(|t| C64::from_polar(1.0, t)));
    let params = SectionParams::from_raw(k.abs(), z12.norm(), z13.norm(), z23.norm(), phi);
    (params, dmat)
}

/// Brings `plane` to standard form with `line` as the rank-2 direction.
fn standardize(plane: &SectionPlane, line: &Herm3) -> Candidate {
    let (x, y) = plane.coordinates(line);
    let complement = plane.point(-y, x);
    let eig = eigh(line);
    // Eigenvalue order (+1, -1, 0): descending spectrum is (1, 0, -1).
    let order = [0usize, 2, 1];
    let mut u_eig = ComplexMatrix3::zero();
    for (row, &idx) in order.iter().enumerate() {
        for col in 0..3 {
            u_eig.entries[row][col] = eig.vectors[idx][col].conj();
        }
    }
    let swap12 = ComplexMatrix3::from_parts(
        [[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]],
        [[0.0; 3]; 3],
    );

    let realize = |swap: bool, flip: bool| -> (SectionParams, ComplexMatrix3, f64) {
        let u = if swap { swap12 * u_eig } else { u_eig };
        let source = if flip { -complement } else { complement };
        let transformed = source.conjugate_by(&u);
        let d = [0, 1, 2].map(|i| transformed.get(i, i).re);
        let signed_k = (d[0] + d[1] - 2.0 * d[2]) / 6.0;
        let (params, dmat) = fix_phases(&transformed);
        (params, dmat * u, signed_k)
    };

    let (_, _, signed_k) = realize(false, false);
    let mut flip = signed_k < 0.0;
    let (p, _, _) = realize(false, flip);
    let mut swap = p.b < p.c;
    let (p, _, _) = realize(swap, flip);
    let has_phase = p.a.min(p.b).min(p.c) > PHASE_ZERO_TOL;
    if has_phase && p.k <= CLASSIFY_TOL && p.cos_phi() < 0.0 {
        flip = !flip;
    }
    let (p, _, _) = realize(swap, flip);
    if has_phase && (p.b - p.c).abs() <= CLASSIFY_TOL && p.phi > PI {
        swap = !swap;
    }
    let (params, unitary, _) = realize(swap, flip);
    Candidate {
        params,
        unitary,
        a_source: if swap { -*line } else { *line },
        b_source: if flip { -complement } else { complement },
    }
}

/// `½Tr((i[A,B])²)`, independent of the orthonormal basis chosen in the plane.
///
/// Equals `4a² + b² + c²` on the canonical tuple. Without the factor `i` the
/// trace is the negative of that, since `[A,B]` is anti-hermitian.
pub fn commutator_invariant(plane: &SectionPlane) -> f64 {
    let c = commutator_i(plane.a(), plane.b());
    hs_inner(&c, &c)
}

/// Number of rank-2 lines through the origin of a section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LineCount {
    Finite(usize),
    All,
}

/// `1 +` the number of distinct real roots of
/// `2kλ² + (b²-c²)λ + 2abc·cos φ - 2k³ + k(2a²-b²-c²)`.
pub fn rank2_line_count(params: &SectionParams) -> LineCount {
    let SectionParams { k, a, b, c, .. } = *params;
    let c2 = 2.0 * k;
    let c1 = b * b - c * c;
    let c0 = 2.0 * a * b * c * params.cos_phi() - 2.0 * k * k * k + k * (2.0 * a * a - b * b - c * c);
    if c2.abs() <= CLASSIFY_TOL && c1.abs() <= CLASSIFY_TOL && c0.abs() <= CLASSIFY_TOL {
        return LineCount::All;
    }
    // The coefficients are O(1) combinations of the parameters, so strata
    // (linear case, double root) are decided at the absolute parameter tolerance.
    let distinct = if c2.abs() <= CLASSIFY_TOL {
        usize::from(c1.abs() > CLASSIFY_TOL)
    } else {
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc > CLASSIFY_TOL {
            2
        } else if disc >= -CLASSIFY_TOL {
            1
        } else {
            0
        }
    };
    LineCount::Finite(1 + distinct)
}

/// Verdict of [`equivalence_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Equivalence {
    Equivalent,
    Inequivalent,
    Undecided,
}

/// Decides whether two tuples label the same unitary class.
///
/// Differing invariants (commutator invariant, rank-2 line count, extreme
/// boundary radii) prove inequivalence. Overlapping candidate sets of the two
/// standard planes prove equivalence. Anything else is undecided.
pub fn equivalence_check(p1: &SectionParams, p2: &SectionParams, tol: f64) -> Equivalence {
    if (p1.commutator_invariant() - p2.commutator_invariant()).abs() > tol {
        return Equivalence::Inequivalent;
    }
    if rank2_line_count(p1) != rank2_line_count(p2) {
        return Equivalence::Inequivalent;
    }
    let (plane1, plane2) = (p1.standard_plane(), p2.standard_plane());
    let (lo1, hi1) = boundary::radial_extrema(&plane1);
    let (lo2, hi2) = boundary::radial_extrema(&plane2);
    if (lo1 - lo2).abs() > tol || (hi1 - hi2).abs() > tol {
        return Equivalence::Inequivalent;
    }
    let c1 = canonicalize_plane(&plane1).candidates;
    let c2 = canonicalize_plane(&plane2).candidates;
    let overlap = c1.iter().any(|x| c2.iter().any(|y| x.distance(y) <= tol))
        || c2.iter().any(|y| y.distance(p1) <= tol)
        || c1.iter().any(|x| x.distance(p2) <= tol);
    if overlap {
        Equivalence::Equivalent
    } else {
        Equivalence::Undecided
    }
}
