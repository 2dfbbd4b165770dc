//! Parameter sweeps and verification runs behind the `qtele` binary.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Args;
use rayon::prelude::*;
use thiserror::Error;

use qutrit_teleport::closed_form::reconciled_fidelity;
use qutrit_teleport::hypergraph::{hypergraph_name, parse_hypergraph_name};
use qutrit_teleport::{
    teleport_fidelity, ChannelKind, ChannelSpec, FormulaKey, NonMarkovConstants, StateParams,
    StatePreset,
};

pub const CSV_HEADER: [&str; 9] = [
    "channel",
    "hypergraph",
    "theta1",
    "theta2",
    "param_name",
    "param_value",
    "F_sim",
    "F_closed",
    "abs_err",
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("numerical failure at {context}: {source}")]
    Numerical {
        context: String,
        source: qutrit_teleport::Error,
    },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Numerical { .. } | CliError::Io(_) | CliError::Csv(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Simulate,
    ClosedForm,
    Check,
}

impl FromStr for Mode {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.trim() {
            "simulate" => Ok(Mode::Simulate),
            "closed-form" => Ok(Mode::ClosedForm),
            "check" => Ok(Mode::Check),
            other => Err(usage(format!(
                "unknown mode '{other}' (expected simulate, closed-form or check)"
            ))),
        }
    }
}

/// An evenly spaced grid; point `k` is `start + k (stop - start)/(steps - 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, steps: usize) -> CliResult<Self> {
        if !start.is_finite() || !stop.is_finite() {
            return Err(usage("grid bounds must be finite"));
        }
        if steps < 2 {
            return Err(usage(format!("steps must be at least 2, got {steps}")));
        }
        if start >= stop {
            return Err(usage(format!(
                "grid start {start} must be below stop {stop}"
            )));
        }
        Ok(Self { start, stop, steps })
    }

    pub fn point(&self, k: usize) -> f64 {
        if k + 1 == self.steps {
            return self.stop;
        }
        self.start + k as f64 * (self.stop - self.start) / (self.steps - 1) as f64
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.steps).map(|k| self.point(k)).collect()
    }
}

impl FromStr for Grid {
    type Err = CliError;

    /// `START:STOP:STEPS`.
    fn from_str(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts[..] else {
            return Err(usage(format!("expected START:STOP:STEPS, got '{s}'")));
        };
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("bad number '{x}' in '{s}'")))
        };
        let steps = n
            .trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("bad step count '{n}' in '{s}'")))?;
        Grid::new(num(a)?, num(b)?, steps)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StateChoice {
    Preset(StatePreset),
    Explicit(StateParams),
    /// `θ1 = 3 θ2` over a `θ2` grid.
    Linked(Grid),
}

impl StateChoice {
    fn states(&self) -> Vec<StateParams> {
        match self {
            StateChoice::Preset(p) => vec![p.params()],
            StateChoice::Explicit(s) => vec![*s],
            StateChoice::Linked(grid) => grid
                .points()
                .into_iter()
                .map(|t2| StateParams {
                    theta1: 3.0 * t2,
                    theta2: t2,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub channel: ChannelKind,
    pub hypergraphs: Vec<usize>,
    pub state: StateChoice,
    pub grid: Grid,
    pub constants: NonMarkovConstants,
    pub mode: Mode,
    pub out: Option<PathBuf>,
}

/// Sweep options as given on the command line or in a config file. Every
/// field is optional so that flags can override file values one by one.
#[derive(Debug, Clone, Default, Args)]
pub struct SweepOptions {
    /// Channel name, see `qtele list`.
    #[arg(long)]
    pub channel: Option<String>,
    /// H1..H5; repeat for several. Defaults to all five.
    #[arg(long = "hypergraph")]
    pub hypergraphs: Vec<String>,
    /// Preset input state: plus, zero2 or zero.
    #[arg(long)]
    pub state: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta2: Option<f64>,
    /// Linked angles theta1 = 3 theta2 over a theta2 grid START:STOP:STEPS.
    #[arg(long)]
    pub linked: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub param_start: Option<f64>,
    #[arg(long)]
    pub param_stop: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub g: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// simulate, closed-form or check.
    #[arg(long)]
    pub mode: Option<String>,
    /// Output CSV path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// key=value file with the same keys as the long flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> CliResult<T> {
    value
        .trim()
        .parse()
        .map_err(|_| usage(format!("invalid value '{value}' for '{key}'")))
}

impl SweepOptions {
    /// Reads `key = value` lines; `#` starts a comment. `hypergraph` may
    /// repeat or hold a comma-separated list.
    pub fn from_config_text(text: &str) -> CliResult<Self> {
        let mut values: HashMap<String, String> = HashMap::new();
        let mut opts = SweepOptions::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("config line {}: expected key=value", n + 1)))?;
            let key = key.trim().replace('_', "-");
            let value = value.trim().to_owned();
            if key == "hypergraph" || key == "hypergraphs" {
                opts.hypergraphs.extend(
                    value
                        .split(',')
                        .map(|s| s.trim().to_owned())
                        .filter(|s| !s.is_empty()),
                );
                continue;
            }
            if values.insert(key.clone(), value).is_some() {
                return Err(usage(format!("config key '{key}' given twice")));
            }
        }
        for (key, value) in values {
            match key.as_str() {
                "channel" => opts.channel = Some(value),
                "state" => opts.state = Some(value),
                "theta1" => opts.theta1 = Some(parse_value(&key, &value)?),
                "theta2" => opts.theta2 = Some(parse_value(&key, &value)?),
                "linked" => opts.linked = Some(value),
                "param-start" => opts.param_start = Some(parse_value(&key, &value)?),
                "param-stop" => opts.param_stop = Some(parse_value(&key, &value)?),
                "steps" => opts.steps = Some(parse_value(&key, &value)?),
                "g" => opts.g = Some(parse_value(&key, &value)?),
                "gamma" => opts.gamma = Some(parse_value(&key, &value)?),
                "eta" => opts.eta = Some(parse_value(&key, &value)?),
                "beta" => opts.beta = Some(parse_value(&key, &value)?),
                "mode" => opts.mode = Some(value),
                "out" => opts.out = Some(PathBuf::from(value)),
                other => return Err(usage(format!("unknown config key '{other}'"))),
            }
        }
        Ok(opts)
    }

    pub fn from_config_file(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_config_text(&text)
    }

    /// Field-wise merge; values in `self` win.
    pub fn or(self, file: SweepOptions) -> SweepOptions {
        SweepOptions {
            channel: self.channel.or(file.channel),
            hypergraphs: if self.hypergraphs.is_empty() {
                file.hypergraphs
            } else {
                self.hypergraphs
            },
            state: self.state.or(file.state),
            theta1: self.theta1.or(file.theta1),
            theta2: self.theta2.or(file.theta2),
            linked: self.linked.or(file.linked),
            param_start: self.param_start.or(file.param_start),
            param_stop: self.param_stop.or(file.param_stop),
            steps: self.steps.or(file.steps),
            g: self.g.or(file.g),
            gamma: self.gamma.or(file.gamma),
            eta: self.eta.or(file.eta),
            beta: self.beta.or(file.beta),
            mode: self.mode.or(file.mode),
            out: self.out.or(file.out),
            config: self.config,
        }
    }

    /// Loads the config file if one is named, merges, and validates.
    pub fn resolve(self) -> CliResult<SweepConfig> {
        let merged = match self.config.clone() {
            Some(path) => self.or(SweepOptions::from_config_file(&path)?),
            None => self,
        };
        SweepConfig::try_from(merged)
    }
}

impl TryFrom<SweepOptions> for SweepConfig {
    type Error = CliError;

    fn try_from(o: SweepOptions) -> CliResult<Self> {
        let channel: ChannelKind = o
            .channel
            .as_deref()
            .ok_or_else(|| usage("--channel is required"))?
            .parse()
            .map_err(|e: qutrit_teleport::Error| usage(e.to_string()))?;

        let mut hypergraphs = Vec::new();
        for name in &o.hypergraphs {
            let h = parse_hypergraph_name(name).map_err(|e| usage(e.to_string()))?;
            if !hypergraphs.contains(&h) {
                hypergraphs.push(h);
            }
        }
        if hypergraphs.is_empty() {
            hypergraphs = (1..=5).collect();
        }
        hypergraphs.sort_unstable();

        let explicit = o.theta1.is_some() || o.theta2.is_some();
        let state = match (&o.linked, explicit, &o.state) {
            (Some(_), true, _) | (Some(_), _, Some(_)) => {
                return Err(usage(
                    "--linked cannot be combined with --state or explicit angles",
                ))
            }
            (_, true, Some(_)) => {
                return Err(usage("--state cannot be combined with --theta1/--theta2"))
            }
            (Some(spec), false, None) => StateChoice::Linked(spec.parse()?),
            (None, true, None) => {
                let (Some(t1), Some(t2)) = (o.theta1, o.theta2) else {
                    return Err(usage("explicit angles need both --theta1 and --theta2"));
                };
                StateChoice::Explicit(StateParams::new(t1, t2).map_err(|e| usage(e.to_string()))?)
            }
            (None, false, preset) => StateChoice::Preset(
                preset
                    .as_deref()
                    .unwrap_or("plus")
                    .parse()
                    .map_err(|e: qutrit_teleport::Error| usage(e.to_string()))?,
            ),
        };

        let is_time = channel == ChannelKind::AmplitudeDampingNonMarkov;
        let grid = Grid::new(
            o.param_start.unwrap_or(0.0),
            o.param_stop.unwrap_or(if is_time { 5.0 } else { 1.0 }),
            o.steps.unwrap_or(if is_time { 21 } else { 11 }),
        )?;

        let d = NonMarkovConstants::default();
        let constants = NonMarkovConstants {
            g: o.g.unwrap_or(d.g),
            gamma: o.gamma.unwrap_or(d.gamma),
            eta: o.eta.unwrap_or(d.eta),
            beta: o.beta.unwrap_or(d.beta),
        };
        for x in grid.points() {
            ChannelSpec::new(channel, x, constants).map_err(|e| {
                usage(format!(
                    "grid point {}={x} is outside the {channel} domain: {e}",
                    channel.param_name()
                ))
            })?;
        }

        let mode = o.mode.as_deref().unwrap_or("check").parse()?;
        Ok(SweepConfig {
            channel,
            hypergraphs,
            state,
            grid,
            constants,
            mode,
            out: o.out,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub channel: ChannelKind,
    pub hypergraph: usize,
    pub state: StateParams,
    pub param: f64,
    pub f_sim: Option<f64>,
    pub f_closed: Option<f64>,
}

impl SweepRow {
    pub fn abs_err(&self) -> Option<f64> {
        Some((self.f_sim? - self.f_closed?).abs())
    }
}

/// 17 significant digits, round-trippable.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

struct Point {
    hypergraph: usize,
    state: StateParams,
    param: f64,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hypergraph {}, theta1 {}, theta2 {}, param {}",
            hypergraph_name(self.hypergraph),
            self.state.theta1,
            self.state.theta2,
            self.param
        )
    }
}

fn evaluate(config: &SweepConfig, pt: &Point) -> CliResult<SweepRow> {
    let numerical = |source| CliError::Numerical {
        context: pt.to_string(),
        source,
    };
    let f_sim = match config.mode {
        Mode::Simulate | Mode::Check => {
            let spec =
                ChannelSpec::new(config.channel, pt.param, config.constants).map_err(numerical)?;
            Some(teleport_fidelity(pt.state, pt.hypergraph, &spec).map_err(numerical)?)
        }
        Mode::ClosedForm => None,
    };
    let f_closed = match config.mode {
        Mode::ClosedForm | Mode::Check => {
            let key = FormulaKey::new(config.channel, pt.hypergraph).map_err(numerical)?;
            Some(
                reconciled_fidelity(key, pt.state, pt.param, config.constants)
                    .map_err(numerical)?,
            )
        }
        Mode::Simulate => None,
    };
    Ok(SweepRow {
        channel: config.channel,
        hypergraph: pt.hypergraph,
        state: pt.state,
        param: pt.param,
        f_sim,
        f_closed,
    })
}

/// Evaluates the grid in parallel; rows come back ordered by hypergraph,
/// then parameter, then `θ2` in linked mode.
pub fn compute_rows(config: &SweepConfig) -> CliResult<Vec<SweepRow>> {
    let states = config.state.states();
    let mut points = Vec::new();
    for &hypergraph in &config.hypergraphs {
        for param in config.grid.points() {
            for &state in &states {
                points.push(Point {
                    hypergraph,
                    state,
                    param,
                });
            }
        }
    }
    points.par_iter().map(|pt| evaluate(config, pt)).collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let opt = |x: Option<f64>| x.map(format_float).unwrap_or_default();
    for r in rows {
        w.write_record([
            r.channel.name().to_owned(),
            hypergraph_name(r.hypergraph),
            format_float(r.state.theta1),
            format_float(r.state.theta2),
            r.channel.param_name().to_owned(),
            format_float(r.param),
            opt(r.f_sim),
            opt(r.f_closed),
            opt(r.abs_err()),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub rows: usize,
    pub max_abs_err: Option<f64>,
}

/// Computes the sweep and writes CSV. In check mode, a row beyond the oracle
/// tolerance yields a verification error after the CSV is written.
pub fn run_sweep<W: Write>(config: &SweepConfig, out: W) -> CliResult<SweepSummary> {
    let rows = compute_rows(config)?;
    write_csv(&rows, out)?;
    let max_abs_err = rows
        .iter()
        .filter_map(SweepRow::abs_err)
        .fold(None, |acc: Option<f64>, e| {
            Some(acc.map_or(e, |a| a.max(e)))
        });
    if let Some(err) = max_abs_err {
        if err > qutrit_teleport::tol::ORACLE {
            let worst = rows
                .iter()
                .find(|r| r.abs_err() == Some(err))
                .expect("maximum comes from a row");
            return Err(CliError::Verification(format!(
                "{}/{} at {}={} differs by {err:e}",
                worst.channel,
                hypergraph_name(worst.hypergraph),
                worst.channel.param_name(),
                worst.param
            )));
        }
    }
    Ok(SweepSummary {
        rows: rows.len(),
        max_abs_err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(channel: &str) -> SweepOptions {
        SweepOptions {
            channel: Some(channel.into()),
            ..Default::default()
        }
    }

    #[test]
    fn grid_points_hit_endpoints_exactly() {
        let g = Grid::new(0.0, 1.0, 11).unwrap();
        let pts = g.points();
        assert_eq!(pts[0], 0.0);
        assert_eq!(pts[10], 1.0);
        assert_eq!(pts[3], 3.0 / 10.0);
        assert!(Grid::new(1.0, 0.0, 5).is_err());
        assert!(Grid::new(0.0, 1.0, 1).is_err());
        assert_eq!(
            "0:2:3".parse::<Grid>().unwrap().points(),
            vec![0.0, 1.0, 2.0]
        );
        assert!("0:2".parse::<Grid>().is_err());
    }

    #[test]
    fn defaults_resolve() {
        let c = SweepConfig::try_from(opts("qutrit-flip")).unwrap();
        assert_eq!(c.hypergraphs, vec![1, 2, 3, 4, 5]);
        assert_eq!(c.state, StateChoice::Preset(StatePreset::Plus));
        assert_eq!(c.grid, Grid::new(0.0, 1.0, 11).unwrap());
        assert_eq!(c.mode, Mode::Check);

        let t = SweepConfig::try_from(opts("ad-nonmarkov")).unwrap();
        assert_eq!(t.grid, Grid::new(0.0, 5.0, 21).unwrap());
    }

    #[test]
    fn invalid_configs_are_usage_errors() {
        let cases = [
            SweepOptions::default(),
            opts("bit-flip"),
            SweepOptions {
                param_stop: Some(1.5),
                ..opts("qutrit-flip")
            },
            SweepOptions {
                steps: Some(1),
                ..opts("qutrit-flip")
            },
            SweepOptions {
                theta1: Some(0.3),
                ..opts("qutrit-flip")
            },
            SweepOptions {
                linked: Some("0:1:3".into()),
                state: Some("plus".into()),
                ..opts("qutrit-flip")
            },
            SweepOptions {
                hypergraphs: vec!["H9".into()],
                ..opts("qutrit-flip")
            },
            SweepOptions {
                mode: Some("fast".into()),
                ..opts("qutrit-flip")
            },
            // κ(p) leaves [0, 1] at p = 0.8 with the default constants.
            opts("dephasing-nonmarkov"),
        ];
        for o in cases {
            let err = SweepConfig::try_from(o.clone()).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{o:?}: {err}");
        }
    }

    #[test]
    fn config_text_and_flag_precedence() {
        let text = "# sweep\nchannel = depolarizing\nhypergraph = H2, H4\nsteps = 3\nmode = simulate\nparam_stop = 0.5\n";
        let file = SweepOptions::from_config_text(text).unwrap();
        let flags = SweepOptions {
            steps: Some(5),
            ..Default::default()
        };
        let c = SweepConfig::try_from(flags.or(file)).unwrap();
        assert_eq!(c.channel, ChannelKind::Depolarizing);
        assert_eq!(c.hypergraphs, vec![2, 4]);
        assert_eq!(c.grid, Grid::new(0.0, 0.5, 5).unwrap());
        assert_eq!(c.mode, Mode::Simulate);

        assert!(SweepOptions::from_config_text("nonsense").is_err());
        assert!(SweepOptions::from_config_text("colour = red").is_err());
        assert!(SweepOptions::from_config_text("steps = 2\nsteps = 3").is_err());
    }

    #[test]
    fn check_mode_rows() {
        let c = SweepConfig::try_from(SweepOptions {
            hypergraphs: vec!["H5".into()],
            steps: Some(3),
            ..opts("qutrit-flip")
        })
        .unwrap();
        let rows = compute_rows(&c).unwrap();
        assert_eq!(rows.len(), 3);
        for r in &rows {
            assert!(r.abs_err().unwrap() < 1e-9);
        }
        assert!((rows[0].f_sim.unwrap() * 729.0 - 69.0).abs() < 1e-9);
    }

    #[test]
    fn linked_mode_expands_theta2_grid() {
        let c = SweepConfig::try_from(SweepOptions {
            linked: Some("0:0.5:3".into()),
            hypergraphs: vec!["H1".into()],
            steps: Some(2),
            mode: Some("closed-form".into()),
            ..opts("qutrit-phase-flip")
        })
        .unwrap();
        let rows = compute_rows(&c).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[1].state.theta2, 0.25);
        assert_eq!(rows[1].state.theta1, 0.75);
        assert!(rows
            .iter()
            .all(|r| r.f_sim.is_none() && r.f_closed.is_some()));
    }

    #[test]
    fn csv_layout() {
        let row = SweepRow {
            channel: ChannelKind::QutritFlip,
            hypergraph: 2,
            state: StateParams {
                theta1: 0.5,
                theta2: 0.25,
            },
            param: 0.1,
            f_sim: Some(1.0 / 3.0),
            f_closed: None,
        };
        let mut buf = Vec::new();
        write_csv(&[row], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "channel,hypergraph,theta1,theta2,param_name,param_value,F_sim,F_closed,abs_err"
        );
        assert_eq!(
            lines.next().unwrap(),
            "qutrit-flip,H2,5.0000000000000000e-1,2.5000000000000000e-1,p,1.0000000000000001e-1,3.3333333333333331e-1,,"
        );
        assert_eq!("3.3333333333333331e-1".parse::<f64>().unwrap(), 1.0 / 3.0);
    }
}
