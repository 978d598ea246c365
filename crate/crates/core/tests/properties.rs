mod common;

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use qutrit_sections::atlas::{sweep_parameters, SweepSpec};
use qutrit_sections::boundary::{classify_shape, evaluate_det, sample_boundary, section_boundary};
use qutrit_sections::canonical::{canonicalize, orthonormalize_plane, SectionParams};
use qutrit_sections::dualrange::{
    convex_hull, hausdorff_distance, numerical_range, polar_dual_2d, project_states, PlanarRegion,
};
use qutrit_sections::herm3::{eigenvalues, from_gellmann, to_gellmann, GellMannVector};
use qutrit_sections::tol::{R_IN, R_OUT};
use qutrit_sections::{hs_inner, ComplexMatrix3, Herm3};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn mat_diff(x: &M3, y: &M3) -> f64 {
    let mut d = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            d = d.max((x[i][j] - y[i][j]).norm());
        }
    }
    d
}

fn params_with(k: f64, a: f64) -> SectionParams {
    SectionParams::normalized(k, a, 0.0, 0.0, 0.0).unwrap()
}

/// `b = c = 0` with `a` fixed by normalization.
fn bc_zero(k: f64) -> SectionParams {
    params_with(k, (1.0 - 3.0 * k * k).max(0.0).sqrt())
}

fn random_region(seed: u64) -> PlanarRegion {
    project_states(&random_params(&mut rng(seed)).standard_plane(), 96).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn eigenvalues_match_oracle(seed in any::<u64>()) {
        let m = random_traceless(&mut rng(seed));
        let ours = eigenvalues(&m);
        let oracle = eig_oracle(&herm_m3(&m));
        let scale = oracle[0].abs().max(oracle[2].abs());
        let mut got = [ours.min(), ours.sum() - ours.min() - ours.max(), ours.max()];
        got.sort_by(f64::total_cmp);
        for i in 0..3 {
            prop_assert!((got[i] - oracle[i]).abs() <= 1e-12 * scale);
        }
        prop_assert!(ours.sum().abs() <= 1e-12 * scale);
    }

    #[test]
    fn gellmann_round_trip_and_inner_product(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = GellMannVector(std::array::from_fn(|_| gaussian(&mut r)));
        let y = GellMannVector(std::array::from_fn(|_| gaussian(&mut r)));
        let (mx, my) = (from_gellmann(&x), from_gellmann(&y));
        let back = to_gellmann(&mx).unwrap();
        for i in 0..8 {
            prop_assert!((back.0[i] - x.0[i]).abs() <= 1e-13);
        }
        let oracle = half_trace_product(&herm_m3(&mx), &herm_m3(&my));
        prop_assert!((hs_inner(&mx, &my) - oracle.re).abs() <= 1e-12);
        prop_assert!((x.dot(&y) - oracle.re).abs() <= 1e-12);
    }

    #[test]
    fn conjugation_preserves_spectrum(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_traceless(&mut r);
        let u = random_unitary(&mut r);
        let (s0, s1) = (eigenvalues(&m), eigenvalues(&m.conjugate_by(&u)));
        prop_assert!((s0.min() - s1.min()).abs() <= 1e-12 * s0.spectral_norm());
        prop_assert!((s0.max() - s1.max()).abs() <= 1e-12 * s0.spectral_norm());
    }

    #[test]
    fn canonical_form_is_unitarily_invariant(seed in any::<u64>(), angle in 0.0..TAU) {
        let mut r = rng(seed);
        let p = random_params(&mut r);
        let u = random_unitary(&mut r);
        let moved = p.standard_plane().rotated(angle).conjugated(&u);
        let res = canonicalize(moved.a(), moved.b()).unwrap();
        prop_assert!(res.candidates.iter().any(|q| q.distance(&p) <= 1e-6),
            "{p:?} missing from {:?}", res.candidates);
        let direct = canonicalize(p.standard_plane().a(), p.standard_plane().b()).unwrap();
        prop_assert!(res.params.distance(&direct.params) <= 1e-6);
    }

    #[test]
    fn canonical_unitary_realizes_standard_form(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m1 = random_traceless(&mut r);
        let m2 = random_traceless(&mut r);
        let res = canonicalize(&m1, &m2).unwrap();
        let real = &res.realization;
        prop_assert!(real.unitary.is_unitary(1e-10));
        let ua = to_m3(&real.a_source.as_matrix().conjugate_by(&real.unitary));
        let ub = to_m3(&real.b_source.as_matrix().conjugate_by(&real.unitary));
        prop_assert!(mat_diff(&ua, &a_std()) <= 1e-9);
        prop_assert!(mat_diff(&ub, &b_of(&res.params)) <= 1e-9);
        // Both sources lie in the input plane.
        let plane = orthonormalize_plane(&m1, &m2).unwrap();
        for s in [&real.a_source, &real.b_source] {
            let (x, y) = plane.coordinates(s);
            prop_assert!(plane.point(x, y).max_abs_diff(s) <= 1e-10);
        }
    }

    #[test]
    fn params_round_trip_through_canonicalize(seed in any::<u64>()) {
        let p = random_params(&mut rng(seed));
        let plane = p.standard_plane();
        let res = canonicalize(plane.a(), plane.b()).unwrap();
        let again = res.params.standard_plane();
        let back = canonicalize(again.a(), again.b()).unwrap();
        prop_assert!(back.params.distance(&res.params) <= 1e-9);
    }

    #[test]
    fn cubic_matches_explicit_determinant(seed in any::<u64>(), x in -0.7..0.7f64, y in -0.7..0.7f64) {
        let p = random_params(&mut rng(seed));
        prop_assert!((evaluate_det(&p, x, y) - det_oracle(&p, x, y)).abs() <= 1e-12);
    }

    #[test]
    fn section_radii_stay_between_spheres(seed in any::<u64>(), theta0 in 0.0..TAU) {
        let p = random_params(&mut rng(seed));
        for s in section_boundary(&p.standard_plane(), 64, theta0) {
            prop_assert!(s.t >= R_IN - 1e-12 && s.t <= R_OUT + 1e-12);
            prop_assert!(det_oracle(&p, s.x, s.y).abs() <= 1e-12);
        }
    }

    #[test]
    fn segment_shapes_contain_collinear_runs(k in 0.30..(1.0 / 3f64.sqrt())) {
        let p = bc_zero(k);
        let shape = classify_shape(&p, 1e-9);
        prop_assert!(shape.has_segment, "{:?}", shape.tag);
        let pts: Vec<(f64, f64)> = sample_boundary(&p, 720).iter().map(|s| (s.x, s.y)).collect();
        let n = pts.len();
        let best = (0..n)
            .map(|i| {
                let (a, m, b) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
                let chord = ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt();
                ((m.0 - a.0) * (b.1 - a.1) - (m.1 - a.1) * (b.0 - a.0)).abs() / chord
            })
            .fold(f64::INFINITY, f64::min);
        prop_assert!(best <= 1e-7, "closest to collinear: {best:e}");
    }

    #[test]
    fn smooth_family_boundary_is_a_conic(k in 0.0..0.27f64) {
        let p = bc_zero(k);
        prop_assert!(!classify_shape(&p, 1e-9).has_segment);
        let pts: Vec<(f64, f64)> = sample_boundary(&p, 360).iter().map(|s| (s.x, s.y)).collect();
        let rows = DMatrix::from_fn(pts.len(), 6, |i, j| {
            let (x, y) = pts[i];
            [x * x, x * y, y * y, x, y, 1.0][j]
        });
        let sv = rows.singular_values();
        let (lo, hi) = (sv.min(), sv.max());
        prop_assert!(lo / hi <= 1e-7, "conic fit residual {:e}", lo / hi);
    }

    #[test]
    fn polar_dual_is_an_involution(seed in any::<u64>()) {
        let region = random_region(seed);
        let twice = polar_dual_2d(&polar_dual_2d(&region).unwrap()).unwrap();
        prop_assert!(hausdorff_distance(&region, &twice) <= 1e-6);
    }

    #[test]
    fn polar_dual_reverses_inclusion(seed in any::<u64>(), scale in 0.3..0.95f64) {
        let outer = random_region(seed);
        let inner = PlanarRegion::new(outer.boundary.iter().map(|&(x, y)| (scale * x, scale * y)).collect());
        let (d_outer, d_inner) = (polar_dual_2d(&outer).unwrap(), polar_dual_2d(&inner).unwrap());
        for &v in &d_outer.boundary {
            prop_assert!(d_inner.contains(v, 1e-12));
        }
    }

    #[test]
    fn numerical_range_translates_with_identity_shift(seed in any::<u64>(), re in -2.0..2.0f64, im in -2.0..2.0f64) {
        let mut r = rng(seed);
        let mut m = ComplexMatrix3::zero();
        for row in m.entries.iter_mut() {
            for z in row.iter_mut() {
                *z = c(gaussian(&mut r), gaussian(&mut r));
            }
        }
        let shifted = m + ComplexMatrix3::identity() * c(re, im);
        let w = numerical_range(&m, 180).unwrap();
        let ws = numerical_range(&shifted, 180).unwrap();
        prop_assert!(hausdorff_distance(&w.translated(re, im), &ws) <= 1e-9);
    }

    #[test]
    fn section_lies_inside_projection(seed in any::<u64>()) {
        let p = random_params(&mut rng(seed));
        let plane = p.standard_plane();
        let proj = project_states(&plane, 360).unwrap();
        let hull = PlanarRegion::new(convex_hull(&proj.boundary));
        for s in section_boundary(&plane, 90, 0.0) {
            prop_assert!(hull.contains((s.x, s.y), 1e-9));
        }
    }

    #[test]
    fn sweep_points_are_normalized(n_simplex in 2usize..7, n_phi in 1usize..5) {
        let spec = SweepSpec::new(n_simplex, n_phi).unwrap();
        let mut count = 0;
        for q in sweep_parameters(&spec) {
            let [k, a, b, cc, phi] = q.as_tuple();
            prop_assert!((3.0 * k * k + a * a + b * b + cc * cc - 1.0).abs() <= 1e-12);
            prop_assert!(k >= 0.0 && a >= 0.0 && cc >= 0.0 && b >= cc);
            prop_assert!((0.0..TAU).contains(&phi));
            count += 1;
        }
        prop_assert!(count > 0);
    }
}

#[test]
fn herm3_rejects_non_hermitian_input() {
    let mut e = [[c(0.0, 0.0); 3]; 3];
    e[0][1] = c(1.0, 0.0);
    assert!(Herm3::new(e).unwrap_err().is_input_error());
}
