//! Numerical ranges, projections of the state space, and planar polar duality.
//!
//! A section of the state space by a plane and the orthogonal projection of
//! the state space onto the same plane are polar to each other: with plane
//! coordinates `u, v` the dual of a region `X` is
//! `{u : 1/3 + 2·u·v ≥ 0 for all v ∈ X}`.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::section_boundary;
use crate::canonical::SectionPlane;
use crate::error::{Error, Result};
use crate::herm3::{eigh, ComplexMatrix3, C64};

/// A planar region given by its boundary polygon.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlanarRegion {
    pub boundary: Vec<(f64, f64)>,
    pub convex: bool,
}

const CONVEX_TOL: f64 = 1e-9;
const MERGE_TOL: f64 = 1e-12;

impl PlanarRegion {
    /// Wraps a boundary polygon and records whether it is convex.
    pub fn new(boundary: Vec<(f64, f64)>) -> Self {
        let convex = is_convex(&boundary);
        Self { boundary, convex }
    }

    /// Convex hull of the boundary points, counter-clockwise.
    pub fn hull(&self) -> PlanarRegion {
        PlanarRegion { boundary: convex_hull(&self.boundary), convex: true }
    }

    /// `max_{p ∈ region} p·(cos θ, sin θ)`.
    pub fn support(&self, theta: f64) -> f64 {
        let (c, s) = (theta.cos(), theta.sin());
        self.boundary.iter().map(|&(x, y)| x * c + y * s).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Whether `p` lies in the convex hull of the region, up to `tol`.
    pub fn contains(&self, p: (f64, f64), tol: f64) -> bool {
        let hull = convex_hull(&self.boundary);
        match hull.len() {
            0 => false,
            1 => dist(p, hull[0]) <= tol,
            _ => {
                let inside = hull.len() > 2
                    && (0..hull.len()).all(|i| cross(hull[i], hull[(i + 1) % hull.len()], p) >= 0.0);
                inside
                    || (0..hull.len())
                        .any(|i| segment_distance(p, hull[i], hull[(i + 1) % hull.len()]) <= tol)
            }
        }
    }

    pub fn translated(&self, dx: f64, dy: f64) -> PlanarRegion {
        PlanarRegion::new(self.boundary.iter().map(|&(x, y)| (x + dx, y + dy)).collect())
    }
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return dist(p, a);
    }
    let s = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0);
    dist(p, (a.0 + s * dx, a.1 + s * dy))
}

/// All turns of the closed polygon have one sign, ignoring turns below `1e-9`.
fn is_convex(points: &[(f64, f64)]) -> bool {
    let pts: Vec<(f64, f64)> = dedup_closed(points);
    let n = pts.len();
    if n < 3 {
        return true;
    }
    let (mut pos, mut neg) = (false, false);
    for i in 0..n {
        let c = cross(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
        pos |= c > CONVEX_TOL;
        neg |= c < -CONVEX_TOL;
    }
    !(pos && neg)
}

fn dedup_closed(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(points.len());
    for &p in points {
        if out.last().is_none_or(|&q| dist(p, q) > MERGE_TOL) {
            out.push(p);
        }
    }
    while out.len() > 1 && dist(out[0], out[out.len() - 1]) <= MERGE_TOL {
        out.pop();
    }
    out
}

/// Counter-clockwise convex hull without collinear points (monotone chain).
pub fn convex_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup_by(|a, b| dist(*a, *b) <= MERGE_TOL);
    if pts.len() < 3 {
        return pts;
    }
    let turn_tol = |o, a, b| cross(o, a, b) <= MERGE_TOL * (dist(o, a) + dist(a, b));
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && turn_tol(hull[hull.len() - 2], hull[hull.len() - 1], p) {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Boundary of `W(M) = {v†Mv : ‖v‖ = 1}` from `n` support directions.
///
/// At angle `θ` the top eigenvector of the hermitian part of `e^{-iθ}M`
/// exposes the boundary point `v†Mv`.
pub fn numerical_range(m: &ComplexMatrix3, n: usize) -> Result<PlanarRegion> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("numerical range needs n ≥ 3, got {n}")));
    }
    let points: Vec<(f64, f64)> = (0..n)
        .into_par_iter()
        .map(|j| {
            let theta = TAU * j as f64 / n as f64;
            let rotated = *m * C64::from_polar(1.0, -theta);
            let v = eigh(&rotated.hermitian_part()).vectors[0];
            let z = m.quadratic_form(&v);
            (z.re, z.im)
        })
        .collect();
    Ok(PlanarRegion::new(points))
}

/// Support lines `p·(cos θⱼ, sin θⱼ) = hⱼ` intersected pairwise in order.
fn region_from_support(support: &[f64]) -> PlanarRegion {
    let n = support.len();
    let mut pts = Vec::with_capacity(n);
    for j in 0..n {
        let (t1, t2) = (TAU * j as f64 / n as f64, TAU * (j + 1) as f64 / n as f64);
        let (h1, h2) = (support[j], support[(j + 1) % n]);
        let det = (t2 - t1).sin();
        let x = (h1 * t2.sin() - h2 * t1.sin()) / det;
        let y = (h2 * t1.cos() - h1 * t2.cos()) / det;
        pts.push((x, y));
    }
    PlanarRegion::new(dedup_closed(&pts))
}

/// Orthogonal projection of the state space onto `plane`, in plane
/// coordinates, bounded by `n ≥ 3` support lines.
///
/// The support value at angle `θ` is `½·λ_max(cos θ·A + sin θ·B)`.
pub fn project_states(plane: &SectionPlane, n: usize) -> Result<PlanarRegion> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("projection needs n ≥ 3, got {n}")));
    }
    let support: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|j| 0.5 * eigh(&plane.direction(TAU * j as f64 / n as f64)).spectrum.max())
        .collect();
    Ok(region_from_support(&support))
}

/// Polar `{u : 1/3 + 2·u·v ≥ 0 for all v}` of a convex polygon.
///
/// Each hull edge on the line `n·v = d` (outward unit normal `n`) becomes the
/// dual vertex `-n/(6d)`.
pub fn polar_dual_2d(region: &PlanarRegion) -> Result<PlanarRegion> {
    let hull = convex_hull(&region.boundary);
    if hull.len() < 3 {
        return Err(Error::OriginOutside);
    }
    let m = hull.len();
    let mut pts = Vec::with_capacity(m);
    for i in 0..m {
        let (p, q) = (hull[i], hull[(i + 1) % m]);
        let len = dist(p, q);
        let normal = ((q.1 - p.1) / len, (p.0 - q.0) / len);
        let d = normal.0 * p.0 + normal.1 * p.1;
        if d <= MERGE_TOL {
            return Err(Error::OriginOutside);
        }
        pts.push((-normal.0 / (6.0 * d), -normal.1 / (6.0 * d)));
    }
    Ok(PlanarRegion::new(pts))
}

/// Hausdorff distance between the convex hulls of two regions, computed as
/// the largest difference of their support functions.
pub fn hausdorff_distance(a: &PlanarRegion, b: &PlanarRegion) -> f64 {
    let (ha, hb) = (convex_hull(&a.boundary), convex_hull(&b.boundary));
    if ha.is_empty() || hb.is_empty() {
        return f64::INFINITY;
    }
    let normal_angles = |h: &[(f64, f64)]| -> Vec<f64> {
        let m = h.len();
        if m < 2 {
            return Vec::new();
        }
        (0..m)
            .map(|i| {
                let (p, q) = (h[i], h[(i + 1) % m]);
                (p.0 - q.0).atan2(q.1 - p.1).rem_euclid(TAU)
            })
            .collect()
    };
    let mut cuts: Vec<f64> = normal_angles(&ha);
    cuts.extend(normal_angles(&hb));
    cuts.extend((0..4).map(|i| i as f64 * TAU / 4.0));
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let argmax = |h: &[(f64, f64)], theta: f64| -> (f64, f64) {
        let (c, s) = (theta.cos(), theta.sin());
        *h.iter().max_by(|p, q| (p.0 * c + p.1 * s).total_cmp(&(q.0 * c + q.1 * s))).expect("non-empty hull")
    };
    let mut worst: f64 = 0.0;
    for i in 0..cuts.len() {
        let lo = cuts[i];
        let hi = if i + 1 < cuts.len() { cuts[i + 1] } else { cuts[0] + TAU };
        let mid = 0.5 * (lo + hi);
        let (va, vb) = (argmax(&ha, mid), argmax(&hb, mid));
        let diff = (va.0 - vb.0, va.1 - vb.1);
        let gap = |t: f64| (diff.0 * t.cos() + diff.1 * t.sin()).abs();
        worst = worst.max(gap(lo)).max(gap(hi));
        let stationary = diff.1.atan2(diff.0);
        for cand in [stationary, stationary + TAU / 2.0] {
            let shifted = lo + (cand - lo).rem_euclid(TAU);
            if shifted <= hi {
                worst = worst.max(gap(shifted));
            }
        }
    }
    worst
}

/// Outcome of comparing the polar of a section with the projection.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DualityReport {
    pub hausdorff: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Compares the polar of the section by `plane` with the projection onto it,
/// both sampled at `n ≥ 64` angles.
pub fn verify_section_projection_duality(plane: &SectionPlane, n: usize, tol: f64) -> Result<DualityReport> {
    if n < 64 {
        return Err(Error::InvalidArgument(format!("duality check needs n ≥ 64, got {n}")));
    }
    let section = PlanarRegion::new(section_boundary(plane, n, 0.0).into_iter().map(|s| (s.x, s.y)).collect());
    let dual = polar_dual_2d(&section)?;
    let projection = project_states(plane, n)?;
    let hausdorff = hausdorff_distance(&dual, &projection);
    Ok(DualityReport { hausdorff, tol, pass: hausdorff <= tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::herm3::{gell_mann, Herm3};

    fn disk(r: f64, n: usize) -> PlanarRegion {
        PlanarRegion::new((0..n).map(|j| TAU * j as f64 / n as f64).map(|t| (r * t.cos(), r * t.sin())).collect())
    }

    fn triangle(r: f64, rot: f64) -> PlanarRegion {
        PlanarRegion::new(
            (0..3).map(|j| rot + TAU * j as f64 / 3.0).map(|t| (r * t.cos(), r * t.sin())).collect(),
        )
    }

    fn mat(rows: [[(f64, f64); 3]; 3]) -> ComplexMatrix3 {
        ComplexMatrix3 { entries: rows.map(|r| r.map(|(a, b)| C64::new(a, b))) }
    }

    #[test]
    fn convexity_flag() {
        assert!(disk(1.0, 12).convex);
        let dart = PlanarRegion::new(vec![(0.0, 0.0), (2.0, 1.0), (0.0, 0.2), (-2.0, 1.0)]);
        assert!(!dart.convex);
    }

    #[test]
    fn hull_examples() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.0), (1.0, 1.0), (0.2, 0.3), (0.0, 1.0)];
        assert_eq!(convex_hull(&pts), vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
    }

    #[test]
    fn hausdorff_examples() {
        assert!(hausdorff_distance(&triangle(1.0, 0.0), &triangle(1.0, 0.0)) < 1e-15);
        let sq = PlanarRegion::new(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert!((hausdorff_distance(&sq, &sq.translated(0.3, 0.4)) - 0.5).abs() < 1e-15);
        let seg = PlanarRegion::new(vec![(-1.0, 0.0), (1.0, 0.0)]);
        let pt = PlanarRegion::new(vec![(0.0, 0.0)]);
        assert!((hausdorff_distance(&seg, &pt) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn numerical_range_examples() {
        let d = mat([[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)], [
            (0.0, 0.0),
            (0.0, 0.0),
            (0.0, 1.0),
        ]]);
        let w = numerical_range(&d, 360).unwrap();
        assert!(w.convex);
        let tri = PlanarRegion::new(vec![(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        assert!(hausdorff_distance(&w, &tri) < 1e-12);

        let nil = mat([[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0); 3], [(0.0, 0.0); 3]]);
        let w = numerical_range(&nil, 720).unwrap();
        for &(x, y) in &w.boundary {
            assert!((x.hypot(y) - 0.5).abs() < 1e-12);
        }

        let l = gell_mann(1).as_matrix() + gell_mann(2).as_matrix() * C64::new(0.0, 1.0);
        let w = numerical_range(&l, 720).unwrap();
        for &(x, y) in &w.boundary {
            assert!((x.hypot(y) - 1.0).abs() < 1e-12);
        }
        assert!(numerical_range(&l, 2).is_err());
    }

    #[test]
    fn projection_examples() {
        let p12 = SectionPlane::new(gell_mann(1), gell_mann(2)).unwrap();
        assert!(hausdorff_distance(&project_states(&p12, 720).unwrap(), &disk(0.5, 4096)) < 1e-5);
        let p38 = SectionPlane::new(gell_mann(3), gell_mann(8)).unwrap();
        let proj = project_states(&p38, 720).unwrap();
        let vertices = [(0.5, 0.5 / 3f64.sqrt()), (-0.5, 0.5 / 3f64.sqrt()), (0.0, -1.0 / 3f64.sqrt())];
        assert!(hausdorff_distance(&proj, &PlanarRegion::new(vertices.to_vec())) < 1e-12);
    }

    #[test]
    fn polar_examples() {
        let d = polar_dual_2d(&disk(1.0 / 3.0, 4096)).unwrap();
        assert!(hausdorff_distance(&d, &disk(0.5, 4096)) < 1e-6);
        let d = polar_dual_2d(&disk(0.5, 4096)).unwrap();
        assert!(hausdorff_distance(&d, &disk(1.0 / 3.0, 4096)) < 1e-6);
        let r = 1.0 / 3f64.sqrt();
        let t = polar_dual_2d(&triangle(r, 0.3)).unwrap();
        // The sign in 1/3 + 2·u·v undoes the half-turn of the ordinary polar.
        assert!(hausdorff_distance(&t, &triangle(r, 0.3)) < 1e-14);
        assert!(hausdorff_distance(&t, &triangle(r, 0.3 + TAU / 2.0)) > 0.1);
        let off = disk(0.1, 64).translated(0.5, 0.0);
        assert_eq!(polar_dual_2d(&off), Err(Error::OriginOutside));
    }

    #[test]
    fn duality_examples() {
        for (i, j) in [(1, 2), (3, 8)] {
            let plane = SectionPlane::new(gell_mann(i), gell_mann(j)).unwrap();
            let report = verify_section_projection_duality(&plane, 720, 2e-3).unwrap();
            assert!(report.pass, "{i}{j}: {report:?}");
        }
        let plane = SectionPlane::new(gell_mann(1), gell_mann(2)).unwrap();
        assert!(verify_section_projection_duality(&plane, 10, 1e-3).is_err());
    }

    #[test]
    fn hermitian_range_is_segment() {
        let h = Herm3::from_upper([0.3, -0.2, 0.5], [C64::new(0.1, 0.2), C64::new(-0.3, 0.0), C64::new(0.0, 0.4)]);
        let w = numerical_range(&h.as_matrix(), 360).unwrap();
        let spec = crate::herm3::eigenvalues(&h);
        let seg = PlanarRegion::new(vec![(spec.min(), 0.0), (spec.max(), 0.0)]);
        assert!(hausdorff_distance(&w, &seg) < 1e-9);
    }
}
