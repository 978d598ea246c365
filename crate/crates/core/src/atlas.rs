//! Gell-Mann pair sections and parameter sweeps.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boundary::{classify_shape, raycast_boundary, ShapeClass, ShapeTag};
use crate::canonical::{canonicalize_plane, SectionParams, SectionPlane};
use crate::error::{Error, Result};
use crate::herm3::{gell_mann, Herm3};
use crate::tol::{CLASSIFY_TOL, R_RANK2};

/// The five unitary classes of Gell-Mann pair sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AtlasGroup {
    DiskI,
    DiskII,
    Parabola,
    Triangle,
    Ellipse,
}

impl AtlasGroup {
    pub const ALL: [AtlasGroup; 5] =
        [AtlasGroup::DiskI, AtlasGroup::DiskII, AtlasGroup::Parabola, AtlasGroup::Triangle, AtlasGroup::Ellipse];

    /// Standard tuples of the class; the parabola class has two.
    pub fn representatives(self) -> Vec<SectionParams> {
        let s3 = 3f64.sqrt();
        let tuples: &[[f64; 4]] = match self {
            AtlasGroup::DiskI => &[[0.0, 1.0, 0.0, 0.0]],
            AtlasGroup::DiskII => &[[0.0, 0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2]],
            AtlasGroup::Parabola => &[[0.0, 0.0, 1.0, 0.0], [0.5, 0.5, 0.0, 0.0]],
            AtlasGroup::Triangle => &[[1.0 / s3, 0.0, 0.0, 0.0]],
            AtlasGroup::Ellipse => &[[0.5 / s3, 0.5 * s3, 0.0, 0.0]],
        };
        tuples
            .iter()
            .map(|&[k, a, b, c]| SectionParams::new(k, a, b, c, 0.0).expect("representative is normalized"))
            .collect()
    }

    /// Shape shared by every section of the group.
    pub fn shape(self) -> ShapeTag {
        match self {
            AtlasGroup::DiskI | AtlasGroup::DiskII => ShapeTag::CircularDisk,
            AtlasGroup::Parabola => ShapeTag::ParabolaChord,
            AtlasGroup::Triangle => ShapeTag::Triangle,
            AtlasGroup::Ellipse => ShapeTag::EllipseOnePureContact,
        }
    }

    /// Pairs `ij` making up the group.
    pub fn pairs(self) -> &'static [(usize, usize)] {
        match self {
            AtlasGroup::DiskI => &[(1, 2), (1, 3), (2, 3), (4, 5), (6, 7)],
            AtlasGroup::DiskII => &[
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 5),
                (2, 6),
                (2, 7),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
            ],
            AtlasGroup::Parabola => &[(3, 4), (3, 5), (3, 6), (3, 7)],
            AtlasGroup::Triangle => &[(1, 8), (2, 8), (3, 8)],
            AtlasGroup::Ellipse => &[(4, 8), (5, 8), (6, 8), (7, 8)],
        }
    }
}

/// One classified Gell-Mann pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AtlasEntry {
    pub pair: (usize, usize),
    pub params: SectionParams,
    pub shape: ShapeClass,
    pub group: AtlasGroup,
}

/// Tolerance for matching canonical parameters against a representative.
pub const GROUP_MATCH_TOL: f64 = 1e-6;

/// Index pairs `(i, j)`, `1 ≤ i < j ≤ 8`, in lexicographic order.
pub fn gellmann_index_pairs() -> Vec<(usize, usize)> {
    (1..=8).flat_map(|i| (i + 1..=8).map(move |j| (i, j))).collect()
}

/// The 28 planes `span(λᵢ, λⱼ)`, `i < j`, in lexicographic order.
pub fn gellmann_pairs() -> Vec<SectionPlane> {
    gellmann_index_pairs()
        .into_iter()
        .map(|(i, j)| SectionPlane::new(gell_mann(i), gell_mann(j)).expect("Gell-Mann matrices are orthonormal"))
        .collect()
}

/// Group whose representative lies within [`GROUP_MATCH_TOL`] of any candidate.
pub fn match_group(candidates: &[SectionParams]) -> Option<AtlasGroup> {
    AtlasGroup::ALL.into_iter().find(|g| {
        g.representatives()
            .iter()
            .any(|r| candidates.iter().any(|c| c.distance(r) <= GROUP_MATCH_TOL))
    })
}

/// Canonicalizes, classifies and groups all 28 Gell-Mann pair sections.
pub fn classify_gellmann_atlas() -> Result<Vec<AtlasEntry>> {
    gellmann_index_pairs()
        .into_par_iter()
        .zip(gellmann_pairs())
        .map(|(pair, plane)| {
            let canon = canonicalize_plane(&plane);
            let group = match_group(&canon.candidates)
                .ok_or(Error::InapplicableRegime("section matches no Gell-Mann representative"))?;
            let shape = classify_shape(&canon.params, CLASSIFY_TOL);
            Ok(AtlasEntry { pair, params: canon.params, shape, group })
        })
        .collect()
}

/// Grid over the canonical parameter domain.
///
/// `n_simplex` is the number of grid points per edge of the simplex in
/// `(a, b, c, d)` with `d = √3·k`; `n_phi` the number of phases on the circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n_simplex: usize,
    pub n_phi: usize,
    #[serde(default)]
    pub filters: Option<Vec<ShapeTag>>,
}

impl SweepSpec {
    pub fn new(n_simplex: usize, n_phi: usize) -> Result<Self> {
        if n_simplex < 2 || n_phi < 1 {
            return Err(Error::InvalidArgument(format!(
                "sweep needs n_simplex ≥ 2 and n_phi ≥ 1, got {n_simplex} and {n_phi}"
            )));
        }
        Ok(Self { n_simplex, n_phi, filters: None })
    }

    pub fn with_filters(mut self, filters: Vec<ShapeTag>) -> Self {
        self.filters = Some(filters);
        self
    }
}

/// Grid points of the domain, before filtering.
fn sweep_grid(spec: &SweepSpec) -> impl Iterator<Item = SectionParams> + '_ {
    let m = spec.n_simplex.saturating_sub(1);
    let n_phi = spec.n_phi.max(1);
    (0..=m).flat_map(move |ia| {
        (0..=m - ia).flat_map(move |ib| {
            (0..=(m - ia - ib).min(ib)).flat_map(move |ic| {
                let id = m - ia - ib - ic;
                let [a, b, c, d] = [ia, ib, ic, id].map(|v| v as f64);
                let norm = (a * a + b * b + c * c + d * d).sqrt();
                let (a, b, c, k) = (a / norm, b / norm, c / norm, d / norm / 3f64.sqrt());
                let phases = if ia == 0 || ib == 0 || ic == 0 { 1 } else { n_phi };
                (0..phases).map(move |p| {
                    let phi = TAU * p as f64 / n_phi as f64;
                    SectionParams::normalized(k, a, b, c, phi).expect("grid point lies on the sphere")
                })
            })
        })
    })
}

/// Deterministic stream of canonical tuples, restricted to `spec.filters` if set.
pub fn sweep_parameters(spec: &SweepSpec) -> impl Iterator<Item = SectionParams> + '_ {
    sweep_grid(spec).filter(move |p| match &spec.filters {
        None => true,
        Some(tags) => tags.contains(&classify_shape(p, CLASSIFY_TOL).tag),
    })
}

/// A classified sweep point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub params: SectionParams,
    pub shape: ShapeClass,
}

/// Classifies the sweep grid in parallel; rows come back in grid order.
pub fn sweep_classified(spec: &SweepSpec, tol: f64) -> Vec<SweepRow> {
    let grid: Vec<SectionParams> = sweep_grid(spec).collect();
    let rows: Vec<SweepRow> =
        grid.into_par_iter().map(|params| SweepRow { params, shape: classify_shape(&params, tol) }).collect();
    match &spec.filters {
        None => rows,
        Some(tags) => rows.into_iter().filter(|r| tags.contains(&r.shape.tag)).collect(),
    }
}

/// Result of raycasting the section spanned by `λ₁, λ₂, λ₄, λ₅`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ball4Report {
    pub samples: usize,
    pub min_radius: f64,
    pub max_radius: f64,
    pub round: bool,
    /// Rank-2 distance `1/3` from the maximally mixed state.
    pub expected_radius: f64,
    /// The value `1/√6` sometimes quoted for this sphere. It is not the
    /// distance under `½Tr(M₁M₂)`.
    pub printed_radius: f64,
    pub verdict: String,
}

/// Spread below which the quartet section counts as a round ball.
pub const ROUND_TOL: f64 = 1e-9;

/// Unit direction `Σ gᵢ λᵢ` over `i ∈ {1, 2, 4, 5}`.
pub fn ball4_direction(g: [f64; 4]) -> Herm3 {
    let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
    [1, 2, 4, 5]
        .into_iter()
        .zip(g)
        .fold(Herm3::zero(), |acc, (i, gi)| acc + gell_mann(i) * (gi / norm))
}

/// Boundary distances along `n` random directions of the quartet section.
pub fn ball4_check(n: usize, seed: u64) -> Result<Ball4Report> {
    if n == 0 {
        return Err(Error::InvalidArgument("ball4 needs at least one direction".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..n {
        let g: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
        let t = raycast_boundary(&ball4_direction(g), 0.0);
        lo = lo.min(t);
        hi = hi.max(t);
    }
    let round = hi - lo <= ROUND_TOL;
    let verdict = if round {
        format!("round, radius {}", fmt_radius(0.5 * (lo + hi)))
    } else {
        format!("not round, radii in [{lo:.12}, {hi:.12}]")
    };
    Ok(Ball4Report {
        samples: n,
        min_radius: lo,
        max_radius: hi,
        round,
        expected_radius: R_RANK2,
        printed_radius: 1.0 / 6f64.sqrt(),
        verdict,
    })
}

fn fmt_radius(r: f64) -> String {
    if (r - R_RANK2).abs() <= ROUND_TOL {
        "1/3".to_string()
    } else {
        format!("{r:.12}")
    }
}
