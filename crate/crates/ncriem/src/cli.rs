//! Command-line front end: verify / classify / solve-lc / sample-moduli /
//! sigma-dump, each emitting a reproducible report. The exit code is 0 only
//! when every check passed; usage and input errors exit with 2.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::groupcalc::FGCalculus;
use crate::groupconn::classify::{classify_s3, ClassifyConfig, ClassifyReport, Condition};
use crate::groupconn::{FGConnection, S3Params};
use crate::matrix::Mat;
use crate::qconn::classify::{classify_qsu2, QCondition};
use crate::qconn::levi_civita::levi_civita_solve;
use crate::qconn::QSU2Connection;
use crate::report::{CheckRecord, OutFormat, RunConfig, SuiteResult};
use crate::scalars::{Backend, CDouble, GaussRat, QRatFn, Rat, Scalar};
use crate::suites::{run_suite, sample_moduli};

#[derive(Parser)]
#[command(
    name = "ncriem",
    version,
    about = "exact differential calculi, bimodule connections and braidings on finite groups and quantum SU(2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Scalar backend: gauss | qratfn | cdouble
    #[arg(long, default_value = "gauss")]
    backend: String,
    /// Numeric tolerance (ignored by the exact backends)
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Random seed; the NCRIEM_SEED environment variable overrides this flag
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format: json | csv | text
    #[arg(long, default_value = "json")]
    format: String,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock times per check (waives byte-identical reports)
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite
    Verify {
        /// s3-calculus | s3-classification | qsl2-algebra | qsu2-calculus |
        /// qsu2-classification | sphere
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Certify the known families for a conjunction of conditions
    Classify {
        /// s3 | qsu2
        geometry: String,
        /// Comma-separated condition names
        #[arg(long, value_delimiter = ',')]
        conditions: Vec<String>,
        /// Metric entries g++,g00,g-- as rationals (qsu2 only)
        #[arg(long, default_value = "1,1,1")]
        metric: String,
        #[command(flatten)]
        common: Common,
    },
    /// Solve for the four torsion-free connections at a real q and metric
    SolveLc {
        #[arg(long)]
        q: f64,
        /// Metric entries g++,g00,g--
        #[arg(long, default_value = "1,1,1")]
        metric: String,
        #[command(flatten)]
        common: Common,
    },
    /// Sample a continuous moduli family and verify every point
    SampleModuli {
        /// s3-torsion-free-star | s3-generalized-lc
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 25)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Print the sigma matrix for explicit connection parameters
    SigmaDump {
        /// s3 | qsu2
        #[arg(long)]
        geometry: String,
        /// s3: a,b,c,d,e; qsu2: n+,n-,m+,m-,r,nu,mu (scalar text format,
        /// separated by commas)
        #[arg(long)]
        params: String,
        /// The value of q for qsu2 (scalar text format; `q` itself under the
        /// qratfn backend)
        #[arg(long)]
        q_param: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn run_config(common: &Common) -> Result<RunConfig, String> {
    let backend = Backend::from_str(&common.backend)?;
    let format = OutFormat::from_str(&common.format)?;
    let seed = match std::env::var("NCRIEM_SEED") {
        Ok(v) => v.parse::<u64>().map_err(|_| format!("bad NCRIEM_SEED value `{v}`"))?,
        Err(_) => common.seed,
    };
    Ok(RunConfig {
        backend,
        tolerance: common.tol,
        seed,
        format,
        out: common.out.clone(),
        timings: common.timings,
    })
}

fn emit(cfg: &RunConfig, body: String) -> Result<(), String> {
    match &cfg.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("write {path:?}: {e}")),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn parse_metric(s: &str) -> Result<(Rat, Rat, Rat), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated metric entries, got `{s}`"));
    }
    let parse_one = |t: &str| -> Result<Rat, String> {
        let g = GaussRat::parse(t.trim()).map_err(|e| format!("metric entry `{t}`: {e}"))?;
        if !g.is_real() {
            return Err(format!("metric entry `{t}` must be real"));
        }
        Ok(g.re)
    };
    Ok((parse_one(parts[0])?, parse_one(parts[1])?, parse_one(parts[2])?))
}

fn classify_report_body(report: &ClassifyReport, cfg: &RunConfig, title: &str) -> String {
    match cfg.format {
        OutFormat::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        _ => {
            let mut suite = SuiteResult::new(title, cfg);
            for fam in &report.families {
                if fam.informational {
                    suite.push(CheckRecord::flagged(&fam.name, &fam.paper_ref, fam.witness.clone()));
                } else {
                    suite.push(CheckRecord::new(&fam.name, &fam.paper_ref, fam.pass, fam.witness.clone()));
                }
            }
            suite.push(CheckRecord::new(
                "off-family-refutation",
                "-",
                report.off_family_samples.all_failed,
                serde_json::json!({ "samples": report.off_family_samples.count }),
            ));
            suite.render(cfg.format)
        }
    }
}

fn sigma_body<K: Scalar>(m: &Mat<K>, cfg: &RunConfig) -> String {
    match cfg.format {
        OutFormat::Json => serde_json::to_string_pretty(&m.to_json()).expect("serializable") + "\n",
        _ => {
            let mut out = String::new();
            for i in 0..m.rows() {
                let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
            out
        }
    }
}

fn parse_scalars<K: Scalar>(s: &str, want: usize) -> Result<Vec<K>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != want {
        return Err(format!("expected {want} comma-separated values, got {}", parts.len()));
    }
    parts
        .iter()
        .map(|t| K::parse(t.trim()).map_err(|e| format!("value `{t}`: {e}")))
        .collect()
}

fn sigma_dump_s3<K: Scalar>(params: &str, cfg: &RunConfig) -> Result<String, String> {
    let vals = parse_scalars::<K>(params, 5)?;
    let calc: FGCalculus<K> = FGCalculus::s3_standard();
    let p = S3Params::from_array([
        vals[0].clone(),
        vals[1].clone(),
        vals[2].clone(),
        vals[3].clone(),
        vals[4].clone(),
    ]);
    Ok(sigma_body(FGConnection::from_s3_params(&calc, &p).sigma(), cfg))
}

fn sigma_dump_qsu2<K: Scalar>(params: &str, q_param: &str, cfg: &RunConfig) -> Result<String, String> {
    let vals = parse_scalars::<K>(params, 7)?;
    let q = K::parse(q_param).map_err(|e| format!("q `{q_param}`: {e}"))?;
    let conn = QSU2Connection {
        q,
        n_plus: vals[0].clone(),
        n_minus: vals[1].clone(),
        m_plus: vals[2].clone(),
        m_minus: vals[3].clone(),
        r: vals[4].clone(),
        nu: vals[5].clone(),
        mu: vals[6].clone(),
    };
    Ok(sigma_body(&conn.sigma9(), cfg))
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify { suite, common } => {
            let cfg = run_config(&common)?;
            let res = run_suite(&suite, &cfg).map_err(|e| e.to_string())?;
            emit(&cfg, res.render(cfg.format))?;
            Ok(res.passed())
        }
        Command::Classify { geometry, conditions, metric, common } => {
            let cfg = run_config(&common)?;
            if conditions.is_empty() {
                return Err("at least one condition is required".into());
            }
            let ccfg = ClassifyConfig {
                seed: cfg.seed,
                tolerance: 1e-10,
                family_samples: 50,
                off_family_samples: 100,
                backend: cfg.backend,
            };
            let report = match geometry.as_str() {
                "s3" => {
                    let conds: Vec<Condition> = conditions
                        .iter()
                        .map(|c| c.parse::<Condition>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| e.to_string())?;
                    classify_s3(&conds, &ccfg).map_err(|e| e.to_string())?
                }
                "qsu2" => {
                    let conds: Vec<QCondition> = conditions
                        .iter()
                        .map(|c| c.parse::<QCondition>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| e.to_string())?;
                    let (gp, gz, gm) = parse_metric(&metric)?;
                    classify_qsu2(&conds, (&gp, &gz, &gm), &ccfg).map_err(|e| e.to_string())?
                }
                other => return Err(format!("unknown geometry `{other}` (expected s3|qsu2)")),
            };
            emit(&cfg, classify_report_body(&report, &cfg, &format!("classify-{geometry}")))?;
            Ok(report.passed())
        }
        Command::SolveLc { q, metric, common } => {
            let cfg = run_config(&common)?;
            let (gp, gz, gm) = parse_metric(&metric)?;
            let report = levi_civita_solve(q, [gp.to_f64(), gz.to_f64(), gm.to_f64()])
                .map_err(|e| e.to_string())?;
            let body = match cfg.format {
                OutFormat::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                _ => {
                    let mut suite = SuiteResult::new("solve-lc", &cfg);
                    for (i, s) in report.solutions.iter().enumerate() {
                        let worst =
                            s.residuals.torsion.max(s.residuals.metric).max(s.residuals.star);
                        suite.push(CheckRecord::new(
                            &format!("solution {} (r = {}, sign {})", i, s.r, s.sign),
                            "6.2.3",
                            worst <= cfg.tolerance,
                            serde_json::json!({
                                "n_plus": s.n_plus,
                                "residuals": [s.residuals.torsion, s.residuals.metric, s.residuals.star],
                                "classical": i == report.classical_root_index,
                            }),
                        ));
                    }
                    suite.render(cfg.format)
                }
            };
            emit(&cfg, body)?;
            let ok = report.solutions.iter().all(|s| {
                s.residuals.torsion.max(s.residuals.metric).max(s.residuals.star) <= cfg.tolerance
            });
            Ok(ok)
        }
        Command::SampleModuli { family, count, common } => {
            let cfg = run_config(&common)?;
            let res = sample_moduli(&family, count, &cfg).map_err(|e| e.to_string())?;
            emit(&cfg, res.render(cfg.format))?;
            Ok(res.passed())
        }
        Command::SigmaDump { geometry, params, q_param, common } => {
            let cfg = run_config(&common)?;
            let body = match (geometry.as_str(), cfg.backend) {
                ("s3", Backend::Gauss) => sigma_dump_s3::<GaussRat>(&params, &cfg)?,
                ("s3", Backend::QRatFn) => sigma_dump_s3::<QRatFn>(&params, &cfg)?,
                ("s3", Backend::CDouble) => sigma_dump_s3::<CDouble>(&params, &cfg)?,
                ("qsu2", backend) => {
                    let q = q_param.as_deref().ok_or("--q-param is required for qsu2")?;
                    match backend {
                        Backend::Gauss => sigma_dump_qsu2::<GaussRat>(&params, q, &cfg)?,
                        Backend::QRatFn => sigma_dump_qsu2::<QRatFn>(&params, q, &cfg)?,
                        Backend::CDouble => sigma_dump_qsu2::<CDouble>(&params, q, &cfg)?,
                    }
                }
                (other, _) => return Err(format!("unknown geometry `{other}` (expected s3|qsu2)")),
            };
            emit(&cfg, body)?;
            Ok(true)
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
