//! Command orchestration for the `specbound` binary.

pub mod args;
pub mod emit;
pub mod input;

use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use specbound::envelope::{envelope_raster_from_frames, min_g_over_frames, rotated_gamma_curves};
use specbound::{
    auto_window, build_frame, build_matrix, eigenvalues, envelope_frames, gamma_curve,
    gamma_min_curve, hyperbola_set, membership_tolerance, numerical_range_boundary,
    rank_numrange_raster, theta_grid, Complex, ComplexMatrix, CurveSet, CurveWarning,
    MatrixSpec, Window, CATALOGUE, DEFAULT_GRID, DEFAULT_MARGIN, DEFAULT_THETA_COUNT,
};
use thiserror::Error;

use crate::emit::{curves_csv, raster_pgm, render_svg, Figure};
use crate::input::{parse_matrix_file, InputError};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Curve,
    Envelope,
    Numrange,
    Gallery,
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Svg,
    Csv,
    Pgm,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    File(PathBuf),
    Gallery(MatrixSpec),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub k: usize,
    pub theta_count: usize,
    pub grid: (usize, usize),
    /// s_min, s_max, t_min, t_max
    pub window: Option<[f64; 4]>,
    pub input: Option<Input>,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub include_gamma_min: bool,
    pub include_hyperbolas: bool,
    /// Rank ℓ for the half-plane raster of `numrange`.
    pub ell: Option<usize>,
    /// Rotation angle for `curve`.
    pub theta: f64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            k: 2,
            theta_count: DEFAULT_THETA_COUNT,
            grid: DEFAULT_GRID,
            window: None,
            input: None,
            output: None,
            format: None,
            seed: None,
            include_gamma_min: false,
            include_hyperbolas: false,
            ell: None,
            theta: 0.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    Usage,
    Io,
    Violation,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::Usage => 1,
            ExitStatus::Io => 2,
            ExitStatus::Violation => 3,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) => ExitStatus::Usage,
            CliError::Input(_) | CliError::Io(_) => ExitStatus::Io,
        }
    }
}

impl From<specbound::Error> for CliError {
    fn from(e: specbound::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// The bytes a command produces plus its exit status and any diagnostics.
#[derive(Clone, Debug)]
pub struct Artifact {
    pub bytes: Vec<u8>,
    pub status: ExitStatus,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct EigenRecord {
    pub re: f64,
    pub im: f64,
    pub min_g_over_theta: f64,
    pub worst_theta: f64,
    pub contained: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub matrix: String,
    pub n: usize,
    pub k: usize,
    pub theta_count: usize,
    pub tolerance: f64,
    pub contained: bool,
    pub eigenvalues: Vec<EigenRecord>,
}

fn load_matrix(config: &RunConfig) -> Result<(ComplexMatrix, String), CliError> {
    match &config.input {
        None => Err(CliError::Usage("need --matrix PATH or --gallery NAME".into())),
        Some(Input::File(path)) => Ok((parse_matrix_file(path)?, path.display().to_string())),
        Some(Input::Gallery(spec)) => {
            let spec = spec.with_default_seed(config.seed.unwrap_or(0));
            Ok((build_matrix(&spec)?, spec.to_string()))
        }
    }
}

fn explicit_window(config: &RunConfig) -> Result<Option<Window>, CliError> {
    config
        .window
        .map(|[s0, s1, t0, t1]| Window::new(s0, s1, t0, t1, config.grid.0, config.grid.1))
        .transpose()
        .map_err(CliError::from)
}

/// Bounding box of F(A) with 10% padding on each side.
pub fn range_window(a: &ComplexMatrix, cols: usize, rows: usize) -> Result<Window, CliError> {
    let hull = numerical_range_boundary(a, DEFAULT_THETA_COUNT)?.window;
    let (ds, dt) = (hull.s_max - hull.s_min, hull.t_max - hull.t_min);
    let pad = 0.1 * ds.max(dt);
    Ok(Window::new(
        hull.s_min - pad,
        hull.s_max + pad,
        hull.t_min - pad,
        hull.t_max + pad,
        cols,
        rows,
    )?)
}

fn warning_notes(sets: &[CurveSet]) -> Vec<String> {
    let mut notes = Vec::new();
    for set in sets {
        for w in &set.warnings {
            let text = match w {
                CurveWarning::DegenerateFrame => "degenerate frame: δ_k = δ_(k+1)",
                CurveWarning::VanishingCoupling => "V_k = 0: the curve is the line s = δ_(k+1)",
                CurveWarning::Experimental => "γ_k for k ≥ 3 is experimental",
            };
            let note = format!("warning: {} {text}", set.kind.as_str());
            if !notes.contains(&note) {
                notes.push(note);
            }
        }
    }
    notes
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Usage(format!("{command} cannot write {format:?} output"))
}

pub fn run(config: &RunConfig) -> Result<Artifact, CliError> {
    match config.command {
        Command::Gallery => Ok(gallery()),
        Command::Curve => curve(config),
        Command::Envelope => envelope(config),
        Command::Numrange => numrange(config),
        Command::Check => check(config),
    }
}

fn done(bytes: Vec<u8>, notes: Vec<String>) -> Artifact {
    Artifact {
        bytes,
        status: ExitStatus::Success,
        notes,
    }
}

fn gallery() -> Artifact {
    let mut text = String::new();
    for (name, params) in CATALOGUE {
        text.push_str(&format!("{name:<16}{params}\n"));
    }
    done(text.into_bytes(), Vec::new())
}

fn curve(config: &RunConfig) -> Result<Artifact, CliError> {
    let (a, name) = load_matrix(config)?;
    let frame = build_frame(&a, config.k, config.theta)?;
    let window = match explicit_window(config)? {
        Some(w) => w,
        None => auto_window(&frame, DEFAULT_MARGIN).with_grid(config.grid.0, config.grid.1)?,
    };
    let mut sets = vec![gamma_curve(&frame, &window)];
    if config.include_gamma_min {
        sets.push(gamma_min_curve(&frame, &window));
    }
    if config.include_hyperbolas {
        sets.push(hyperbola_set(&frame.deltas, config.k, &window)?);
    }
    let notes = warning_notes(&sets);
    let bytes = match config.format.unwrap_or(Format::Svg) {
        Format::Svg => {
            let rot = Complex::from_polar(1.0, config.theta);
            let fig = Figure {
                window,
                title: format!("Gamma_{} of {name}, theta = {}", config.k, config.theta),
                raster: None,
                curves: sets,
                delta_lines: frame.deltas[..=config.k].to_vec(),
                eigenvalues: eigenvalues(&a)?.into_iter().map(|z| z * rot).collect(),
            };
            render_svg(&fig).into_bytes()
        }
        Format::Csv => curves_csv(&sets).into_bytes(),
        f => return Err(unsupported("curve", f)),
    };
    Ok(done(bytes, notes))
}

fn envelope(config: &RunConfig) -> Result<Artifact, CliError> {
    let (a, name) = load_matrix(config)?;
    if config.theta_count == 0 {
        return Err(CliError::Usage("--theta-count must be positive".into()));
    }
    let window = match explicit_window(config)? {
        Some(w) => w,
        None => range_window(&a, config.grid.0, config.grid.1)?,
    };
    let frames = envelope_frames(&a, config.k, &theta_grid(config.theta_count))?;
    let format = config.format.unwrap_or(Format::Svg);
    let overlay = || {
        let coarse = window
            .with_grid((window.cols / 4).max(50), (window.rows / 4).max(50))
            .expect("window already validated");
        rotated_gamma_curves(&frames, &coarse)
    };
    let bytes = match format {
        Format::Pgm => raster_pgm(&envelope_raster_from_frames(&frames, &window)),
        Format::Csv => curves_csv(&overlay()).into_bytes(),
        Format::Svg => {
            let fig = Figure {
                window,
                title: format!("E_{} of {name}, {} angles", config.k, config.theta_count),
                raster: Some(envelope_raster_from_frames(&frames, &window)),
                curves: overlay(),
                delta_lines: Vec::new(),
                eigenvalues: eigenvalues(&a)?,
            };
            render_svg(&fig).into_bytes()
        }
        f => return Err(unsupported("envelope", f)),
    };
    Ok(done(bytes, Vec::new()))
}

fn numrange(config: &RunConfig) -> Result<Artifact, CliError> {
    let (a, name) = load_matrix(config)?;
    let boundary = numerical_range_boundary(&a, config.theta_count.max(3))?;
    let window = match explicit_window(config)? {
        Some(w) => w,
        None => range_window(&a, config.grid.0, config.grid.1)?,
    };
    let format = config.format.unwrap_or(Format::Svg);
    let raster = |ell: usize| rank_numrange_raster(&a, ell, config.theta_count, &window);
    let bytes = match format {
        Format::Pgm => raster_pgm(&raster(config.ell.unwrap_or(1))?),
        Format::Csv => curves_csv(&[boundary]).into_bytes(),
        Format::Svg => {
            let fig = Figure {
                window,
                title: match config.ell {
                    Some(ell) => format!("F and Lambda_{ell} of {name}"),
                    None => format!("F of {name}"),
                },
                raster: config.ell.map(raster).transpose()?,
                curves: vec![CurveSet { window, ..boundary }],
                delta_lines: Vec::new(),
                eigenvalues: eigenvalues(&a)?,
            };
            render_svg(&fig).into_bytes()
        }
        f => return Err(unsupported("numrange", f)),
    };
    Ok(done(bytes, Vec::new()))
}

/// Evaluates g at every eigenvalue for every sampled angle.
pub fn check_report(a: &ComplexMatrix, name: &str, k: usize, theta_count: usize) -> Result<CheckReport, CliError> {
    if theta_count == 0 {
        return Err(CliError::Usage("--theta-count must be positive".into()));
    }
    let frames = envelope_frames(a, k, &theta_grid(theta_count))?;
    let tolerance = membership_tolerance(&frames[0]);
    let records: Vec<EigenRecord> = eigenvalues(a)?
        .into_iter()
        .map(|z| {
            let (min_g, worst_theta) = min_g_over_frames(&frames, z);
            EigenRecord {
                re: z.re,
                im: z.im,
                min_g_over_theta: min_g,
                worst_theta,
                contained: min_g >= -tolerance,
            }
        })
        .collect();
    Ok(CheckReport {
        schema_version: REPORT_SCHEMA_VERSION,
        matrix: name.to_string(),
        n: a.rows(),
        k,
        theta_count,
        tolerance,
        contained: records.iter().all(|r| r.contained),
        eigenvalues: records,
    })
}

fn check(config: &RunConfig) -> Result<Artifact, CliError> {
    let (a, name) = load_matrix(config)?;
    match config.format.unwrap_or(Format::Json) {
        Format::Json => {}
        f => return Err(unsupported("check", f)),
    }
    let report = check_report(&a, &name, config.k, config.theta_count)?;
    let mut bytes = serde_json::to_vec_pretty(&report).map_err(|e| CliError::Io(e.to_string()))?;
    bytes.push(b'\n');
    let status = if report.contained {
        ExitStatus::Success
    } else {
        ExitStatus::Violation
    };
    let notes = report
        .eigenvalues
        .iter()
        .filter(|r| !r.contained)
        .map(|r| format!("violation: eigenvalue {}{:+}i has g = {:e}", r.re, r.im, r.min_g_over_theta))
        .collect();
    Ok(Artifact { bytes, status, notes })
}

/// Runs a command, writes its artifact to `--out` or stdout, and returns the
/// process exit code.
pub fn execute(config: &RunConfig) -> i32 {
    let artifact = match run(config) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return e.status().code();
        }
    };
    for note in &artifact.notes {
        eprintln!("{note}");
    }
    let written = match &config.output {
        Some(path) => std::fs::write(path, &artifact.bytes)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(&artifact.bytes)
            .map_err(|e| format!("cannot write to stdout: {e}")),
    };
    match written {
        Ok(()) => artifact.status.code(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitStatus::Io.code()
        }
    }
}
