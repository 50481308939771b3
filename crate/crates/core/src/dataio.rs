//! Experimental series in and trajectories out, plus model-vs-data fitting.
//!
//! Series files are CSV with a `time,value` header. Lines starting with `#`
//! and blank lines are skipped, and CRLF endings are accepted. Trajectories
//! are written as CSV (17 significant digits, LF) or as JSON of the form
//! `{"meta": {...}, "t": [...], "u": [...]}`.

use std::fs;
use std::io;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::solver::{solve_pece, FroProblem, SolveError, Trajectory};

#[derive(Debug, Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("series needs at least 2 points, found {0}")]
    TooFewPoints(usize),
    #[error("times must be strictly increasing: t = {previous} is followed by t = {next}")]
    NonIncreasing { previous: f64, next: f64 },
    #[error("non-finite value at t = {0}")]
    NonFinite(f64),
    #[error("negative time {0}")]
    NegativeTime(f64),
    #[error("data time {time} lies outside the model range [0, {end}]")]
    OutOfRange { time: f64, end: f64 },
    #[error("{0}")]
    Serialize(String),
}

#[derive(Debug, Error)]
pub enum FitError {
    #[error("parameter grids must be non-empty")]
    EmptyGrid,
    #[error("template duration {duration} ends before the last data time {last}")]
    ShortDuration { duration: f64, last: f64 },
    #[error("at alpha = {alpha}, coeff = {coeff}: {source}")]
    Solve {
        alpha: f64,
        coeff: f64,
        #[source]
        source: SolveError,
    },
    #[error("every grid point diverged")]
    AllDiverged,
    #[error(transparent)]
    Data(#[from] DataError),
}

/// Measured `(time, value)` pairs with strictly increasing times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentalSeries {
    points: Vec<(f64, f64)>,
    pub label: String,
}

impl ExperimentalSeries {
    pub fn new(points: Vec<(f64, f64)>, label: impl Into<String>) -> Result<Self, DataError> {
        if points.len() < 2 {
            return Err(DataError::TooFewPoints(points.len()));
        }
        for &(t, v) in &points {
            if !t.is_finite() || !v.is_finite() {
                return Err(DataError::NonFinite(t));
            }
            if t < 0.0 {
                return Err(DataError::NegativeTime(t));
            }
        }
        for pair in points.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(DataError::NonIncreasing {
                    previous: pair[0].0,
                    next: pair[1].0,
                });
            }
        }
        Ok(ExperimentalSeries {
            points,
            label: label.into(),
        })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> (f64, f64) {
        self.points[0]
    }

    pub fn last(&self) -> (f64, f64) {
        self.points[self.points.len() - 1]
    }
}

/// Reads a series file; the label is the file stem.
pub fn load_series(path: impl AsRef<Path>) -> Result<ExperimentalSeries, DataError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut series = parse_series(&text)?;
    if let Some(stem) = path.file_stem() {
        series.label = stem.to_string_lossy().into_owned();
    }
    Ok(series)
}

/// Parses series CSV text. The first non-comment line must be the header
/// `time,value`.
pub fn parse_series(text: &str) -> Result<ExperimentalSeries, DataError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());

    let mut header_seen = false;
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| DataError::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if !header_seen {
            let fields: Vec<_> = record.iter().collect();
            if fields != ["time", "value"] {
                return Err(DataError::Parse {
                    line,
                    message: format!(
                        "expected header \"time,value\", found {:?}",
                        fields.join(",")
                    ),
                });
            }
            header_seen = true;
            continue;
        }
        if record.len() != 2 {
            return Err(DataError::Parse {
                line,
                message: format!("expected 2 fields, found {}", record.len()),
            });
        }
        let number = |field: &str| {
            field.parse::<f64>().map_err(|_| DataError::Parse {
                line,
                message: format!("not a number: {field:?}"),
            })
        };
        points.push((number(&record[0])?, number(&record[1])?));
    }
    if !header_seen {
        return Err(DataError::Parse {
            line: 1,
            message: "missing header \"time,value\"".into(),
        });
    }
    ExperimentalSeries::new(points, "series")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}, expected csv or json")),
        }
    }
}

/// Trajectory as CSV text: header plus one `time,value` row per node.
pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::with_capacity(48 * (traj.values.len() + 1));
    out.push_str("time,value\n");
    for (t, u) in traj.times().iter().zip(&traj.values) {
        out.push_str(&format!("{t:.16e},{u:.16e}\n"));
    }
    out
}

/// Trajectory as a JSON value `{meta, t, u}`.
pub fn trajectory_json(traj: &Trajectory) -> serde_json::Value {
    json!({
        "meta": {
            "problem": traj.problem,
            "method": traj.method,
            "nodes": traj.values.len(),
            "notices": traj.notices,
        },
        "t": traj.times(),
        "u": traj.values,
    })
}

pub fn export_trajectory(
    traj: &Trajectory,
    path: impl AsRef<Path>,
    format: Format,
) -> Result<(), DataError> {
    let body = match format {
        Format::Csv => trajectory_csv(traj),
        Format::Json => serde_json::to_string_pretty(&trajectory_json(traj))
            .map_err(|e| DataError::Serialize(e.to_string()))?,
    };
    let path = path.as_ref();
    fs::write(path, body).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub rmse: f64,
    pub max_abs_error: f64,
    /// `rmse` over the RMS of the data values.
    pub relative_rmse: f64,
    pub params: FroProblem,
    /// `(alpha, coeff)` grid points whose solve diverged and were left out.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diverged: Vec<(f64, f64)>,
}

/// Compares a trajectory to data, interpolating the model linearly between
/// nodes.
pub fn residuals(traj: &Trajectory, series: &ExperimentalSeries) -> Result<FitReport, DataError> {
    let times = traj.times();
    let end = traj.grid.duration();
    let h = traj.grid.step;
    let mut sum_sq = 0.0;
    let mut sum_data_sq = 0.0;
    let mut max_abs: f64 = 0.0;
    for &(t, v) in series.points() {
        // tolerate rounding in T = N h
        if t > end * (1.0 + 1e-12) {
            return Err(DataError::OutOfRange { time: t, end });
        }
        let pos = (t / h).min(times.len() as f64 - 1.0);
        let i = (pos.floor() as usize).min(times.len() - 2);
        let theta = (t - times[i]) / (times[i + 1] - times[i]);
        let model = traj.values[i] + theta * (traj.values[i + 1] - traj.values[i]);
        let r = model - v;
        sum_sq += r * r;
        sum_data_sq += v * v;
        max_abs = max_abs.max(r.abs());
    }
    let n = series.len() as f64;
    let rmse = (sum_sq / n).sqrt();
    let data_rms = (sum_data_sq / n).sqrt();
    Ok(FitReport {
        rmse,
        max_abs_error: max_abs,
        relative_rmse: if data_rms > 0.0 {
            rmse / data_rms
        } else {
            rmse
        },
        params: traj.problem.clone(),
        diverged: Vec::new(),
    })
}

/// Exhaustive search over `alpha_grid × coeff_grid` with every other field
/// taken from `template`. Returns the smallest-rmse report, ties going to the
/// smaller α and then the smaller A. Grid points where the scheme blows up
/// (small α with large A is outside its stability region) are skipped and
/// listed in `diverged`; any other solve error aborts the fit.
pub fn grid_fit(
    series: &ExperimentalSeries,
    alpha_grid: &[f64],
    coeff_grid: &[f64],
    template: &FroProblem,
) -> Result<FitReport, FitError> {
    if alpha_grid.is_empty() || coeff_grid.is_empty() {
        return Err(FitError::EmptyGrid);
    }
    let last = series.last().0;
    if template.duration < last * (1.0 - 1e-12) {
        return Err(FitError::ShortDuration {
            duration: template.duration,
            last,
        });
    }
    let pairs: Vec<(f64, f64)> = alpha_grid
        .iter()
        .flat_map(|&a| coeff_grid.iter().map(move |&c| (a, c)))
        .collect();
    // collect() keeps grid order, so the reduction below is deterministic
    let reports = pairs
        .par_iter()
        .map(|&(alpha, coeff)| {
            let problem = FroProblem {
                alpha,
                relax_coeff: coeff,
                ..template.clone()
            };
            match solve_pece(&problem) {
                Ok(traj) => Ok(Some(residuals(&traj, series)?)),
                Err(SolveError::Diverged { .. }) => Ok(None),
                Err(source) => Err(FitError::Solve {
                    alpha,
                    coeff,
                    source,
                }),
            }
        })
        .collect::<Result<Vec<Option<FitReport>>, FitError>>()?;
    let diverged: Vec<(f64, f64)> = pairs
        .iter()
        .zip(&reports)
        .filter(|(_, r)| r.is_none())
        .map(|(p, _)| *p)
        .collect();
    let mut best = reports
        .into_iter()
        .flatten()
        .min_by(|a, b| {
            a.rmse
                .total_cmp(&b.rmse)
                .then(a.params.alpha.total_cmp(&b.params.alpha))
                .then(a.params.relax_coeff.total_cmp(&b.params.relax_coeff))
        })
        .ok_or(FitError::AllDiverged)?;
    if !diverged.is_empty() {
        log::warn!("{} grid points diverged and were skipped", diverged.len());
    }
    best.diverged = diverged;
    Ok(best)
}

/// Parses a parameter grid: either `start:stop:step` (inclusive of `stop`)
/// or a comma-separated list. Range values are rounded to 12 decimals so
/// `0.1:0.3:0.1` gives exactly `[0.1, 0.2, 0.3]`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let spec = spec.trim();
    let number = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("not a number: {:?}", s.trim()))
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected start:stop:step, got {spec:?}"));
        }
        let (start, stop, step) = (number(parts[0])?, number(parts[1])?, number(parts[2])?);
        if step <= 0.0 {
            return Err(format!("grid step must be positive, got {step}"));
        }
        if stop < start {
            return Err(format!("grid stop {stop} is below start {start}"));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        if count > 100_000 {
            return Err(format!("grid has {count} points, limit is 100000"));
        }
        Ok((0..count)
            .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
            .collect())
    } else {
        let values = spec.split(',').map(number).collect::<Result<Vec<_>, _>>()?;
        if values.is_empty() {
            return Err("empty grid".into());
        }
        Ok(values)
    }
}
