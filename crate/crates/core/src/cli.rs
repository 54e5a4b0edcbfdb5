// Copyright 2026 The gaussherald Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end. The binary only forwards to [`run`].
//!
//! Every command reads an optional JSON config (unknown keys rejected),
//! applies flag overrides and writes one result document that carries the
//! hash of the effective config and the seed.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::derivative::{gaussian_derivative, DerivOrder, GaussianForm, Monomial};
use crate::error::{Error, Result};
use crate::herald::{herald_circuit, wigner_grid, HeraldedState};
use crate::io::{content_hash, csv_string, write_atomic, CircuitJson, HeraldedJson, PatternJson};
use crate::linalg::{CMat, CVec, C64};
use crate::reproduce;
use crate::target::{
    conjecture_probe, dimension_bound, optimize_circuit, solve_inverse, DesignJson, DesignOptions, DesignStatus, InverseOptions, TargetState,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gaussherald", version, about = "Heralded non-Gaussian states from Gaussian circuits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Herald a circuit and report the gate form, probability and Wigner grid.
    Herald(Common),
    /// Search for a circuit preparing a target.
    Design(Common),
    /// Recompute a reference study.
    Reproduce(Common),
    /// Solvability rate of random inverse problems.
    ProbeConjecture(Common),
    /// Derivative kernel timing and an instance dump.
    DiagDerivative(Common),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub restarts: Option<usize>,
    #[arg(long)]
    pub cutoff: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Study {
    CatTable,
    DesignTable,
    Gkp,
    Cubic,
    DualPath,
    Derivative,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WignerConfig {
    pub x: (f64, f64),
    pub p: (f64, f64),
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeConfig {
    pub modes: usize,
    pub n_t: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_starts")]
    pub starts: usize,
}

fn default_trials() -> usize {
    100
}

fn default_starts() -> usize {
    16
}

/// Single config schema shared by all commands.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuit: Option<CircuitJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetState>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fidelity_floor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub displace: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restarts: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wigner: Option<WignerConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub study: Option<Study>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbeConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("config: {e}")))
    }

    fn load(common: &Common) -> Result<Self> {
        let mut cfg = match &common.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("reading {}: {e}", path.display())))?;
                Config::parse(&text)?
            }
            None => Config::default(),
        };
        if common.seed.is_some() {
            cfg.seed = common.seed;
        }
        if common.restarts.is_some() {
            cfg.restarts = common.restarts;
        }
        if common.cutoff.is_some() {
            cfg.cutoff = common.cutoff;
        }
        Ok(cfg)
    }

    /// SHA-256 of the canonical JSON of the effective config.
    pub fn hash(&self) -> String {
        content_hash(serde_json::to_string(self).expect("config serialises").as_bytes())
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(2019)
    }

    fn require<T: Clone>(v: &Option<T>, key: &str) -> Result<T> {
        v.clone().ok_or_else(|| Error::Invalid(format!("config is missing `{key}`")))
    }
}

/// A result ready to be written: JSON payload plus a table for CSV.
pub struct Report {
    pub payload: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Exit with the numerical code after writing.
    pub numerical_failure: bool,
}

fn num(x: f64) -> String {
    format!("{x:.10e}")
}

fn herald_report(cfg: &Config) -> Result<Report> {
    let circuit = Config::require(&cfg.circuit, "circuit")?.to_params()?;
    let pattern = Config::require(&cfg.pattern, "pattern")?.to_pattern()?;
    let hs: HeraldedState = herald_circuit(&circuit, &pattern)?;
    let mut payload = json!({ "state": HeraldedJson::from(&hs), "mean_photons": hs.mean_photons() });
    if let Some(cut) = cfg.cutoff {
        let amps = hs.fock_amplitudes(cut);
        payload["fock"] = serde_json::to_value(amps.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()).expect("serialise");
    }
    let (header, rows) = match &cfg.wigner {
        Some(w) => {
            let grid = wigner_grid(&hs, w.x, w.p, w.steps);
            let mut rows = Vec::new();
            for (i, x) in grid.xs.iter().enumerate() {
                for (j, p) in grid.ps.iter().enumerate() {
                    rows.push(vec![num(*x), num(*p), num(grid.values[i][j])]);
                }
            }
            payload["wigner"] = serde_json::to_value(&grid).expect("serialise");
            (vec!["x", "p", "w"], rows)
        }
        None => (
            vec!["n", "re", "im"],
            hs.coeffs.iter().enumerate().map(|(n, z)| vec![n.to_string(), num(z.re), num(z.im)]).collect(),
        ),
    };
    Ok(Report { payload, header, rows, numerical_failure: false })
}

fn design_report(cfg: &Config) -> Result<Report> {
    let target = Config::require(&cfg.target, "target")?;
    let pattern = Config::require(&cfg.pattern, "pattern")?.to_pattern()?;
    let modes = cfg.modes.unwrap_or(pattern.detected.len() + target.modes());
    let mut opts = DesignOptions { seed: cfg.seed(), displace: cfg.displace, cutoff: cfg.cutoff, ..Default::default() };
    if let Some(r) = cfg.restarts {
        opts.restarts = r;
    }
    if let Some(f) = cfg.fidelity_floor {
        opts.fidelity_floor = f;
    }
    if let Some(c) = &cfg.circuit {
        opts.seeds.push(c.to_params()?);
    }
    let res = optimize_circuit(&target, modes, &pattern, &opts)?;
    let js = DesignJson::from(&res);
    let rows = vec![vec![
        target.label(),
        num(res.fidelity),
        num(res.probability),
        format!("{:?}", res.status).to_lowercase(),
        res.restarts.to_string(),
    ]];
    Ok(Report {
        payload: serde_json::to_value(&js).expect("serialise"),
        header: vec!["target", "fidelity", "probability", "status", "restarts"],
        rows,
        numerical_failure: res.status == DesignStatus::Infeasible,
    })
}

fn reproduce_report(cfg: &Config) -> Result<Report> {
    let seed = cfg.seed();
    match cfg.study.unwrap_or(Study::CatTable) {
        Study::CatTable => {
            let rows = reproduce::cat_table()?;
            let table = rows
                .iter()
                .map(|r| {
                    vec![
                        r.reference.alpha.to_string(),
                        num(r.fidelity),
                        r.reference.fidelity.to_string(),
                        num(r.probability),
                        r.reference.probability.to_string(),
                        num(r.zeta),
                        num(r.c0_over_c2),
                    ]
                })
                .collect();
            Ok(Report {
                payload: json!({ "study": "cat_table", "rows": rows }),
                header: vec!["alpha", "fidelity", "fidelity_ref", "probability", "probability_ref", "zeta", "c0_over_c2"],
                rows: table,
                numerical_failure: false,
            })
        }
        Study::DesignTable => {
            let restarts = cfg.restarts.unwrap_or(16);
            let mut out = Vec::new();
            let mut table = Vec::new();
            for case in reproduce::design_cases() {
                let res = optimize_circuit(&case.target, case.modes, &case.pattern, &case.options(restarts, seed))?;
                table.push(vec![
                    case.label.clone(),
                    num(res.fidelity),
                    num(res.probability),
                    case.reference_probability.to_string(),
                    format!("{:?}", res.status).to_lowercase(),
                ]);
                out.push(json!({ "case": case, "design": DesignJson::from(&res) }));
            }
            Ok(Report {
                payload: json!({ "study": "design_table", "rows": out }),
                header: vec!["label", "fidelity", "probability", "probability_ref", "status"],
                rows: table,
                numerical_failure: false,
            })
        }
        Study::Gkp => {
            let f = reproduce::gkp_gate_form_fidelity()?;
            let (zeta, c) = reproduce::gkp_gate_form();
            Ok(Report {
                payload: json!({ "study": "gkp", "zeta": zeta.re, "coeffs": c.iter().map(|z| z.re).collect::<Vec<_>>(), "fidelity": f }),
                header: vec!["delta", "zeta", "fidelity"],
                rows: vec![vec!["0.35".into(), num(zeta.re), num(f)]],
                numerical_failure: false,
            })
        }
        Study::Cubic => {
            let pattern = crate::herald::HeraldPattern::new(vec![1, 2], vec![1, 2])?;
            let mut out = Vec::new();
            let mut table = Vec::new();
            for a in [0.05, 0.1, 0.2] {
                let t = crate::target::render_single(&TargetState::Cubic { a }, 4)?;
                let res = solve_inverse(&t, &pattern, &InverseOptions { seed, ..Default::default() })?;
                table.push(vec![a.to_string(), res.roots.len().to_string(), num(res.best_residual)]);
                out.push(json!({ "a": a, "roots": res.roots.len(), "best_residual": res.best_residual, "first_root": res.roots.first() }));
            }
            Ok(Report {
                payload: json!({ "study": "cubic", "n_t": 3, "bound": dimension_bound(3), "rows": out }),
                header: vec!["a", "roots", "best_residual"],
                rows: table,
                numerical_failure: false,
            })
        }
        Study::DualPath => {
            let cases = reproduce::dual_path(cfg.samples.unwrap_or(200), seed)?;
            let table = cases
                .iter()
                .map(|c| vec![c.modes.to_string(), c.pattern.total().to_string(), num(c.overlap), num(c.probability_error)])
                .collect();
            Ok(Report {
                payload: json!({ "study": "dual_path", "cases": cases }),
                header: vec!["modes", "n_t", "overlap", "probability_error"],
                rows: table,
                numerical_failure: false,
            })
        }
        Study::Derivative => derivative_report(cfg),
    }
}

fn probe_report(cfg: &Config) -> Result<Report> {
    let probe = cfg.probe.clone().unwrap_or(ProbeConfig { modes: 2, n_t: 2, trials: default_trials(), starts: default_starts() });
    let starts = cfg.restarts.unwrap_or(probe.starts);
    let stats = conjecture_probe(probe.modes, probe.n_t, probe.trials, cfg.seed(), starts)?;
    let rows = vec![vec![
        stats.modes.to_string(),
        stats.n_t.to_string(),
        stats.bound.to_string(),
        stats.trials.to_string(),
        stats.solved.to_string(),
        num(stats.rate),
    ]];
    Ok(Report {
        payload: serde_json::to_value(&stats).expect("serialise"),
        header: vec!["modes", "n_t", "bound", "trials", "solved", "rate"],
        rows,
        numerical_failure: false,
    })
}

fn derivative_report(cfg: &Config) -> Result<Report> {
    let errs = reproduce::derivative_check(cfg.samples.unwrap_or(500), cfg.seed())?;
    let worst = errs.iter().cloned().fold(0.0, f64::max);
    // one larger instance for timing
    let k = 4;
    let mat = CMat::from_fn(2 * k, 2 * k, |i, j| C64::new(0.1 * ((i + j) % 5) as f64 - 0.2, 0.03 * (i * j % 7) as f64));
    let mat = (&mat + mat.transpose()) * C64::new(0.5, 0.0);
    let form = GaussianForm::new(mat, CVec::from_element(2 * k, C64::new(0.3, -0.1)))?;
    let order = DerivOrder::new(vec![2; k]).with_monomial(Monomial::unit(k, 2, 2));
    let start = std::time::Instant::now();
    let value = gaussian_derivative(&form, &order)?;
    let secs = start.elapsed().as_secs_f64();
    let rows = errs.iter().enumerate().map(|(i, e)| vec![i.to_string(), num(*e)]).collect();
    Ok(Report {
        payload: json!({
            "samples": errs.len(),
            "max_relative_error": worst,
            "timing": { "expanded_size": order.expanded_size(), "seconds": secs, "value": [value.re, value.im] },
        }),
        header: vec!["instance", "relative_error"],
        rows,
        numerical_failure: false,
    })
}

fn render(cfg: &Config, command: &str, report: &Report, format: Format) -> Result<String> {
    let hash = cfg.hash();
    match format {
        Format::Json => {
            let doc = json!({
                "command": command,
                "config_hash": hash,
                "seed": cfg.seed(),
                "config": cfg,
                "result": report.payload,
            });
            Ok(serde_json::to_string_pretty(&doc).expect("serialise") + "\n")
        }
        Format::Csv => {
            let body = csv_string(&report.header, &report.rows)?;
            Ok(format!("# command={command}\n# config_hash={hash}\n# seed={}\n{body}", cfg.seed()))
        }
    }
}

/// Runs one command and returns its exit code.
pub fn run(cli: Cli) -> i32 {
    let (name, common) = match &cli.command {
        Command::Herald(c) => ("herald", c),
        Command::Design(c) => ("design", c),
        Command::Reproduce(c) => ("reproduce", c),
        Command::ProbeConjecture(c) => ("probe-conjecture", c),
        Command::DiagDerivative(c) => ("diag-derivative", c),
    };
    match execute(name, &cli.command, common) {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            eprintln!("error: design did not reach the fidelity floor");
            EXIT_NUMERICAL
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            if e.is_numerical() {
                EXIT_NUMERICAL
            } else {
                EXIT_INVALID
            }
        }
    }
}

fn execute(name: &str, command: &Command, common: &Common) -> Result<bool> {
    let cfg = Config::load(common)?;
    let report = match command {
        Command::Herald(_) => herald_report(&cfg)?,
        Command::Design(_) => design_report(&cfg)?,
        Command::Reproduce(_) => reproduce_report(&cfg)?,
        Command::ProbeConjecture(_) => probe_report(&cfg)?,
        Command::DiagDerivative(_) => derivative_report(&cfg)?,
    };
    let text = render(&cfg, name, &report, common.format)?;
    match &common.out {
        Some(path) => write_atomic(path, text.as_bytes())?,
        None => {
            use std::io::Write;
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    Ok(!report.numerical_failure)
}
