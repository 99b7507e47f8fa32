use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;
use specbound::MatrixSpec;

use crate::{Command, Format, Input, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "specbound", version, about = "Curves and envelopes that enclose the eigenvalues of a matrix")]
struct Cli {
    #[arg(value_enum)]
    command: Command,

    /// Block size k of the inequality.
    #[arg(long, default_value_t = 2)]
    k: usize,

    /// Number of rotation angles 2πm/count.
    #[arg(long, default_value_t = 120)]
    theta_count: usize,

    /// Grid as COLSxROWS.
    #[arg(long, value_parser = parse_grid, default_value = "800x600")]
    grid: (usize, usize),

    /// Explicit window smin,smax,tmin,tmax.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<[f64; 4]>,

    /// Matrix file.
    #[arg(long, conflicts_with = "gallery")]
    matrix: Option<PathBuf>,

    /// Gallery entry NAME[:params].
    #[arg(long)]
    gallery: Option<String>,

    /// Seed for random gallery entries given without one.
    #[arg(long)]
    seed: Option<u64>,

    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Also draw the λ_min companion curve.
    #[arg(long)]
    with_gamma_min: bool,

    /// Also draw the region-separating hyperbolas.
    #[arg(long)]
    with_hyperbolas: bool,

    /// Rank ℓ of the half-plane raster (numrange).
    #[arg(long)]
    ell: Option<usize>,

    /// Rotation angle for curve.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    theta: f64,
}

fn parse_grid(text: &str) -> Result<(usize, usize), String> {
    let (w, h) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected COLSxROWS, got `{text}`"))?;
    let w: usize = w.trim().parse().map_err(|_| format!("bad column count `{w}`"))?;
    let h: usize = h.trim().parse().map_err(|_| format!("bad row count `{h}`"))?;
    if w < 2 || h < 2 {
        return Err("grid needs at least 2x2".into());
    }
    Ok((w, h))
}

fn parse_window(text: &str) -> Result<[f64; 4], String> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("bad number `{p}`")))
        .collect::<Result<_, _>>()?;
    let [s0, s1, t0, t1] = parts[..] else {
        return Err(format!("expected smin,smax,tmin,tmax, got `{text}`"));
    };
    Ok([s0, s1, t0, t1])
}

/// Parses command-line arguments (including the program name).
pub fn parse_args<I, T>(args: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let input = match (cli.matrix, cli.gallery) {
        (Some(path), _) => Some(Input::File(path)),
        (None, Some(spec)) => {
            let spec: MatrixSpec = spec.parse().map_err(|e: specbound::Error| {
                clap::Error::raw(clap::error::ErrorKind::InvalidValue, format!("--gallery: {e}\n"))
            })?;
            Some(Input::Gallery(spec))
        }
        (None, None) => None,
    };
    Ok(RunConfig {
        command: cli.command,
        k: cli.k,
        theta_count: cli.theta_count,
        grid: cli.grid,
        window: cli.window,
        input,
        output: cli.out,
        format: cli.format,
        seed: cli.seed,
        include_gamma_min: cli.with_gamma_min,
        include_hyperbolas: cli.with_hyperbolas,
        ell: cli.ell,
        theta: cli.theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = parse_args(["specbound", "curve", "--gallery", "a_tilde"]).unwrap();
        assert_eq!(c.command, Command::Curve);
        assert_eq!((c.k, c.theta_count, c.grid), (2, 120, (800, 600)));
        assert_eq!(c.input, Some(Input::Gallery(MatrixSpec::ATilde)));
    }

    #[test]
    fn all_flags() {
        let c = parse_args([
            "specbound", "envelope", "--k", "1", "--theta-count", "36", "--grid", "40x30",
            "--window", "-1,2,-3,4", "--gallery", "random_complex:5", "--seed", "9",
            "--out", "x.pgm", "--format", "pgm", "--with-gamma-min", "--with-hyperbolas",
            "--ell", "2", "--theta", "-0.5",
        ])
        .unwrap();
        assert_eq!(c.grid, (40, 30));
        assert_eq!(c.window, Some([-1.0, 2.0, -3.0, 4.0]));
        assert_eq!(c.format, Some(Format::Pgm));
        assert_eq!(c.seed, Some(9));
        assert_eq!(c.ell, Some(2));
        assert_eq!(c.theta, -0.5);
        assert!(c.include_gamma_min && c.include_hyperbolas);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(parse_args(["specbound", "curve", "--grid", "10"]).is_err());
        assert!(parse_args(["specbound", "curve", "--grid", "1x10"]).is_err());
        assert!(parse_args(["specbound", "curve", "--window", "1,2,3"]).is_err());
        assert!(parse_args(["specbound", "plot"]).is_err());
        assert!(parse_args(["specbound", "curve", "--gallery", "nope"]).is_err());
        assert!(parse_args(["specbound", "curve", "--gallery", "a_tilde", "--matrix", "m.txt"]).is_err());
    }
}
