use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qutrit_sections::atlas::{ball4_check, classify_gellmann_atlas, sweep_classified, SweepSpec};
use qutrit_sections::boundary::{classify_shape, find_pure_states, sample_boundary, ShapeReport, ShapeTag};
use qutrit_sections::canonical::{
    canonicalize_plane, orthonormalize_plane, random_planes, SectionParams, SectionPlane,
};
use qutrit_sections::dualrange::{numerical_range, verify_section_projection_duality, DualityReport};
use qutrit_sections::export::{boundary_csv, region_csv, region_svg, section_svg, sweep_csv};
use qutrit_sections::herm3::{from_gellmann, gell_mann, GellMannVector};
use qutrit_sections::{ComplexMatrix3, Herm3};

#[derive(Parser)]
#[command(name = "qutrit-sections", version, about = "Two-dimensional sections of the qutrit state space")]
struct Cli {
    /// Absolute tolerance for classification and pure-state detection.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bring a plane to standard form.
    Canonicalize {
        #[command(flatten)]
        plane: PlaneInput,
        #[command(flatten)]
        out: Outputs,
    },
    /// Classify the boundary shape of a section.
    Classify {
        #[command(flatten)]
        plane: PlaneInput,
        #[command(flatten)]
        out: Outputs,
    },
    /// Sample the boundary of a section (CSV on stdout unless --csv is given).
    Boundary {
        #[command(flatten)]
        plane: PlaneInput,
        /// Number of boundary samples.
        #[arg(long, default_value_t = 360)]
        n: usize,
        #[command(flatten)]
        out: Outputs,
    },
    /// Classify the 28 Gell-Mann pair sections (JSON lines).
    Atlas {
        #[command(flatten)]
        out: Outputs,
    },
    /// Classify a grid over the canonical parameter domain.
    Sweep {
        /// Grid points per simplex edge.
        #[arg(long, default_value_t = 11)]
        n_simplex: usize,
        /// Phases per circle.
        #[arg(long, default_value_t = 8)]
        n_phi: usize,
        /// Keep only these shape tags (comma separated).
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        #[command(flatten)]
        out: Outputs,
    },
    /// Boundary of the numerical range of a 3x3 complex matrix.
    Numrange {
        /// JSON file {"re": [[..]], "im": [[..]]}.
        #[arg(long, conflicts_with = "pair")]
        matrix: Option<PathBuf>,
        /// Use λi + i·λj.
        #[arg(long, value_parser = parse_pair)]
        pair: Option<(usize, usize)>,
        /// Number of support directions.
        #[arg(long, default_value_t = 360)]
        n: usize,
        #[command(flatten)]
        out: Outputs,
    },
    /// Compare the polar of a section with the projection onto its plane.
    DualCheck {
        #[command(flatten)]
        plane: PlaneInput,
        /// Check this many random planes instead (seeded by --seed).
        #[arg(long)]
        random: Option<usize>,
        /// Number of support samples.
        #[arg(long, default_value_t = 720)]
        n: usize,
        /// Hausdorff tolerance.
        #[arg(long, default_value_t = 2e-3)]
        hausdorff_tol: f64,
        #[command(flatten)]
        out: Outputs,
    },
    /// Raycast random directions of the 4-section spanned by λ1, λ2, λ4, λ5.
    Ball4 {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[command(flatten)]
        out: Outputs,
    },
}

#[derive(Args, Default)]
struct PlaneInput {
    /// JSON file holding the first spanning matrix.
    #[arg(long, requires = "b")]
    a: Option<PathBuf>,
    /// JSON file holding the second spanning matrix.
    #[arg(long, requires = "a")]
    b: Option<PathBuf>,
    /// First spanning matrix as eight Gell-Mann coordinates.
    #[arg(long, value_delimiter = ',', requires = "gb", allow_hyphen_values = true)]
    ga: Option<Vec<f64>>,
    /// Second spanning matrix as eight Gell-Mann coordinates.
    #[arg(long, value_delimiter = ',', requires = "ga", allow_hyphen_values = true)]
    gb: Option<Vec<f64>>,
    /// Gell-Mann pair, e.g. 4,8.
    #[arg(long, value_parser = parse_pair)]
    pair: Option<(usize, usize)>,
    /// Canonical parameters k,a,b,c,phi.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    params: Option<Vec<f64>>,
}

#[derive(Args)]
struct Outputs {
    /// Write CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write JSON here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write SVG here.
    #[arg(long)]
    svg: Option<PathBuf>,
}

/// Input that failed validation; maps to exit code 2.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_err(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

fn lib_err(e: qutrit_sections::Error) -> anyhow::Error {
    if e.is_input_error() {
        input_err(e.to_string())
    } else {
        anyhow!(e)
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [i, j] = parts.as_slice() else { return Err(format!("expected i,j, got '{s}'")) };
    let i: usize = i.trim().parse().map_err(|e| format!("{e}"))?;
    let j: usize = j.trim().parse().map_err(|e| format!("{e}"))?;
    if !(1..=8).contains(&i) || !(1..=8).contains(&j) || i == j {
        return Err(format!("pair indices must be distinct and in 1..=8, got {i},{j}"));
    }
    Ok((i, j))
}

enum Resolved {
    Plane(SectionPlane),
    Params(SectionParams),
}

impl Resolved {
    fn plane(&self) -> SectionPlane {
        match self {
            Resolved::Plane(p) => *p,
            Resolved::Params(p) => p.standard_plane(),
        }
    }

    fn params(&self) -> SectionParams {
        match self {
            Resolved::Plane(p) => canonicalize_plane(p).params,
            Resolved::Params(p) => *p,
        }
    }
}

fn read_matrix(path: &Path) -> Result<ComplexMatrix3> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn read_hermitian(path: &Path) -> Result<Herm3> {
    Herm3::new(read_matrix(path)?.entries).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn gellmann_vector(v: &[f64]) -> Result<GellMannVector> {
    let arr: [f64; 8] =
        v.try_into().map_err(|_| input_err(format!("expected 8 Gell-Mann coordinates, got {}", v.len())))?;
    Ok(GellMannVector(arr))
}

fn resolve(input: &PlaneInput) -> Result<Resolved> {
    let given = [input.a.is_some(), input.ga.is_some(), input.pair.is_some(), input.params.is_some()]
        .iter()
        .filter(|&&x| x)
        .count();
    if given != 1 {
        return Err(input_err("give exactly one of --a/--b, --ga/--gb, --pair, --params"));
    }
    if let (Some(a), Some(b)) = (&input.a, &input.b) {
        let plane = orthonormalize_plane(&read_hermitian(a)?, &read_hermitian(b)?).map_err(lib_err)?;
        return Ok(Resolved::Plane(plane));
    }
    if let (Some(ga), Some(gb)) = (&input.ga, &input.gb) {
        let (m1, m2) = (from_gellmann(&gellmann_vector(ga)?), from_gellmann(&gellmann_vector(gb)?));
        return Ok(Resolved::Plane(orthonormalize_plane(&m1, &m2).map_err(lib_err)?));
    }
    if let Some((i, j)) = input.pair {
        return Ok(Resolved::Plane(SectionPlane::new(gell_mann(i), gell_mann(j)).map_err(lib_err)?));
    }
    let p = input.params.as_deref().unwrap_or_default();
    let [k, a, b, c, phi] = p else {
        return Err(input_err(format!("--params needs k,a,b,c,phi, got {} values", p.len())));
    };
    Ok(Resolved::Params(SectionParams::normalized(*k, *a, *b, *c, *phi).map_err(lib_err)?))
}

fn write_or_print(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn write_file(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => Ok(()),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn run(cli: Cli) -> Result<()> {
    let tol = cli.tol;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(input_err(format!("--tol must be positive, got {tol}")));
    }
    match cli.command {
        Command::Canonicalize { plane, out } => {
            let result = canonicalize_plane(&resolve(&plane)?.plane());
            write_or_print(out.json.as_deref(), &json(&result)?)
        }
        Command::Classify { plane, out } => {
            let params = resolve(&plane)?.params();
            let report = ShapeReport::new(classify_shape(&params, tol), params);
            write_or_print(out.json.as_deref(), &json(&report)?)
        }
        Command::Boundary { plane, n, out } => {
            if n < 3 {
                return Err(input_err(format!("--n must be at least 3, got {n}")));
            }
            let params = resolve(&plane)?.params();
            let samples = sample_boundary(&params, n);
            if let Some(svg) = &out.svg {
                write_file(&Some(svg.clone()), &section_svg(&samples, &find_pure_states(&params, tol)))?;
            }
            if let Some(path) = &out.json {
                let report = ShapeReport::new(classify_shape(&params, tol), params);
                write_file(&Some(path.clone()), &json(&report)?)?;
            }
            write_or_print(out.csv.as_deref(), &boundary_csv(&samples))
        }
        Command::Atlas { out } => {
            let atlas = classify_gellmann_atlas().map_err(lib_err)?;
            let mut lines = String::new();
            for entry in &atlas {
                lines += &serde_json::to_string(entry)?;
                lines.push('\n');
            }
            write_or_print(out.json.as_deref(), &lines)
        }
        Command::Sweep { n_simplex, n_phi, filter, out } => {
            let mut spec = SweepSpec::new(n_simplex, n_phi).map_err(lib_err)?;
            if !filter.is_empty() {
                let tags = filter
                    .iter()
                    .map(|t| t.parse::<ShapeTag>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(lib_err)?;
                spec = spec.with_filters(tags);
            }
            let rows = sweep_classified(&spec, tol);
            if let Some(path) = &out.json {
                write_file(&Some(path.clone()), &json(&rows)?)?;
            }
            write_or_print(out.csv.as_deref(), &sweep_csv(&rows))
        }
        Command::Numrange { matrix, pair, n, out } => {
            let m = match (matrix, pair) {
                (Some(path), None) => read_matrix(&path)?,
                (None, Some((i, j))) => {
                    gell_mann(i).as_matrix() + gell_mann(j).as_matrix() * qutrit_sections::herm3::C64::new(0.0, 1.0)
                }
                _ => return Err(input_err("give one of --matrix, --pair")),
            };
            let region = numerical_range(&m, n).map_err(lib_err)?;
            write_file(&out.svg, &region_svg(&region))?;
            write_file(&out.json, &json(&region)?)?;
            write_or_print(out.csv.as_deref(), &region_csv(&region))
        }
        Command::DualCheck { plane, random, n, hausdorff_tol, out } => {
            let planes = match random {
                Some(count) => random_planes(count, cli.seed),
                None => vec![resolve(&plane)?.plane()],
            };
            let reports: Vec<DualityReport> = planes
                .iter()
                .map(|p| verify_section_projection_duality(p, n, hausdorff_tol))
                .collect::<Result<_, _>>()
                .map_err(lib_err)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            let text = if random.is_some() { json(&reports)? } else { json(&reports[0])? };
            write_or_print(out.json.as_deref(), &text)?;
            if failed > 0 {
                return Err(anyhow!("{failed} of {} planes exceed the Hausdorff tolerance", reports.len()));
            }
            Ok(())
        }
        Command::Ball4 { n, out } => {
            let report = ball4_check(n, cli.seed).map_err(lib_err)?;
            write_or_print(out.json.as_deref(), &json(&report)?)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("QUTRIT_SECTIONS_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
