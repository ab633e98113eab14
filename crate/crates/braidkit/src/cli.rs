//! Command-line front end. `run` returns the exit code and prints the JSON
//! report; `main` only forwards `std::env::args`.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use braidkit_core::presentations::{builtin, Presentation};

use crate::io::load_presentation_file;
use crate::reps::RepParams;
use crate::report::SuiteReport;
use crate::suites::{self, ActionKind, SearchTarget, SphereKind};

#[derive(Parser, Debug)]
#[command(name = "braidkit", version, about = "Verification suites for braided quantum groups")]
pub struct Cli {
    /// Load the algebra from a JSON presentation file.
    #[arg(long, global = true)]
    pub presentation: Option<PathBuf>,
    /// Include wall-clock time in the report (breaks byte stability).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact axiom suites.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Quantum sphere checks.
    Sphere {
        #[arg(value_enum)]
        which: SphereArg,
    },
    /// Finite-dimensional representations.
    Rep(RepCmd),
    /// Scalar braiding search.
    Search {
        #[arg(value_enum)]
        algebra: SearchArg,
    },
    /// Classical limit probe.
    Limit {
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
    /// Unbounded-spectrum witness.
    Witness {
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        #[arg(long, default_value_t = 0.3)]
        psi: f64,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
        #[arg(long, default_value_t = 1e6)]
        bound: f64,
    },
    /// Local confluence of the built-in rewrite systems.
    Confluence {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Every acceptance suite.
    All {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    Hopf {
        /// su-qphi2, hat-u2, u2 or su2; omit with --presentation.
        algebra: Option<String>,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    Pairing {
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    Action {
        #[arg(value_enum)]
        kind: ActionArg,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    Star {
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ActionArg {
    Left,
    Right,
    Adjoint,
    Sphere,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SphereArg {
    Covariance,
    Embedding,
    Kernel,
    Alternate,
    PsiNonzero,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SearchArg {
    Su2,
    HatU2,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
pub struct RepCmd {
    #[command(subcommand)]
    pub sweep: Option<RepSub>,
    /// Highest weight, e.g. 1/2, 1 or 1.5.
    #[arg(long, value_parser = parse_l)]
    pub l: Option<u32>,
    #[arg(long, default_value_t = 0.7)]
    pub q: f64,
    #[arg(long, default_value_t = 0.3)]
    pub phi: f64,
    #[arg(long, default_value_t = 0.0)]
    pub psi: f64,
    /// + or -.
    #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
    pub sign: f64,
}

#[derive(Subcommand, Debug)]
pub enum RepSub {
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

/// 2l from "1/2", "1.5" or "2".
pub fn parse_l(s: &str) -> Result<u32, String> {
    let two_l = if let Some((n, d)) = s.split_once('/') {
        let n: u32 = n.trim().parse().map_err(|_| format!("bad l {s:?}"))?;
        match d.trim() {
            "2" => n,
            "1" => 2 * n,
            _ => return Err(format!("l must be a half-integer, got {s:?}")),
        }
    } else {
        let x: f64 = s.trim().parse().map_err(|_| format!("bad l {s:?}"))?;
        let t = 2.0 * x;
        if t < 0.0 || t.fract() != 0.0 || t > 64.0 {
            return Err(format!("l must be a half-integer in [0, 32], got {s:?}"));
        }
        t as u32
    };
    Ok(two_l)
}

pub fn parse_sign(s: &str) -> Result<f64, String> {
    match s {
        "+" | "1" | "+1" => Ok(1.0),
        "-" | "-1" => Ok(-1.0),
        _ => Err(format!("sign must be + or -, got {s:?}")),
    }
}

fn load(cli: &Cli) -> Result<Option<Presentation>, String> {
    match &cli.presentation {
        None => Ok(None),
        Some(path) => load_presentation_file(path).map(Some).map_err(|e| format!("{}: {e}", path.display())),
    }
}

/// Outcome of one invocation: exit code, standard output, standard error.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage(msg: impl Into<String>) -> Outcome {
    Outcome { code: 2, stdout: String::new(), stderr: msg.into() }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, stdout: if code == 0 { e.to_string() } else { String::new() }, stderr: if code == 0 { String::new() } else { e.to_string() } };
        }
    };
    let loaded = match load(&cli) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let start = Instant::now();
    let report = match dispatch(&cli, loaded) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let mut report = report;
    if let Some(p) = &cli.presentation {
        report.param("presentation", p.display().to_string());
    }
    if cli.timing {
        report.wall_clock_ms = Some(start.elapsed().as_millis() as u64);
    }
    Outcome { code: if report.pass { 0 } else { 1 }, stdout: report.to_json() + "\n", stderr: String::new() }
}

fn dispatch(cli: &Cli, loaded: Option<Presentation>) -> Result<SuiteReport, String> {
    Ok(match &cli.command {
        Command::Check(CheckCmd::Hopf { algebra, degree }) => {
            if *degree == 0 {
                return Err("degree must be at least 1".into());
            }
            let p = match (loaded, algebra) {
                (Some(p), None) => p,
                (Some(_), Some(_)) => return Err("give either an algebra name or --presentation".into()),
                (None, Some(name)) => builtin(name).ok_or_else(|| format!("unknown algebra {name:?}; try su-qphi2, hat-u2, u2, su2"))?,
                (None, None) => return Err("missing algebra name".into()),
            };
            suites::hopf(&p, *degree)
        }
        Command::Check(CheckCmd::Pairing { degree }) => suites::pairing(*degree),
        Command::Check(CheckCmd::Action { kind, degree }) => suites::action(
            match kind {
                ActionArg::Left => ActionKind::Left,
                ActionArg::Right => ActionKind::Right,
                ActionArg::Adjoint => ActionKind::Adjoint,
                ActionArg::Sphere => ActionKind::Sphere,
            },
            *degree,
        ),
        Command::Check(CheckCmd::Star { degree }) => suites::star(*degree),
        Command::Sphere { which } => suites::sphere(match which {
            SphereArg::Covariance => SphereKind::Covariance,
            SphereArg::Embedding => SphereKind::Embedding,
            SphereArg::Kernel => SphereKind::Kernel,
            SphereArg::Alternate => SphereKind::Alternate,
            SphereArg::PsiNonzero => SphereKind::PsiNonzero,
        }),
        Command::Rep(RepCmd { sweep: Some(RepSub::Sweep { seed, samples }), .. }) => suites::rep_sweep(*seed, *samples),
        Command::Rep(RepCmd { sweep: None, l, q, phi, psi, sign }) => {
            let two_l = l.ok_or("rep needs --l")?;
            if !(*q > 0.0) {
                return Err("q must be positive".into());
            }
            let mut p = RepParams::new(two_l, *q, *phi, *psi);
            p.sign = *sign;
            suites::rep(&p)
        }
        Command::Search { algebra } => suites::search(match algebra {
            SearchArg::Su2 => SearchTarget::Su2,
            SearchArg::HatU2 => SearchTarget::HatU2,
        }),
        Command::Limit { steps } => {
            if *steps < 2 {
                return Err("the slope fit needs at least 2 steps".into());
            }
            suites::limit(*steps)
        }
        Command::Witness { q, psi, k_max, bound } => suites::witness(*q, *psi, *k_max, *bound),
        Command::Confluence { max_len } => match loaded {
            Some(p) => {
                let mut r = SuiteReport::new("confluence");
                let c = p.rules.local_confluence_check(*max_len);
                r.param("max_len", *max_len);
                r.check(&p.name, "no divergent overlaps", c.is_confluent(), format!("{} overlaps, {} divergent", c.overlaps_checked, c.failures.len()));
                r.finish()
            }
            None => suites::confluence(*max_len),
        },
        Command::All { seed } => suites::all(*seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integers() {
        assert_eq!(parse_l("1/2"), Ok(1));
        assert_eq!(parse_l("1.5"), Ok(3));
        assert_eq!(parse_l("2"), Ok(4));
        assert!(parse_l("1/3").is_err());
        assert!(parse_l("0.3").is_err());
        assert_eq!(parse_sign("-"), Ok(-1.0));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["braidkit", "frobnicate"]).code, 2);
        assert_eq!(run(["braidkit", "check", "hopf", "nope"]).code, 2);
        assert_eq!(run(["braidkit", "rep", "--l", "1/3"]).code, 2);
        assert_eq!(run(["braidkit", "rep"]).code, 2);
    }

    #[test]
    fn rep_command() {
        let o = run(["braidkit", "rep", "--l", "1", "--q", "0.7", "--phi", "0.3", "--psi", "1.1", "--sign", "-"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["schema"], "braidkit-report/1");
        assert_eq!(v["parameters"]["sign"], -1.0);
    }
}
