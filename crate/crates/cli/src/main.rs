mod pretty;
mod system;

use std::io::{Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use semireg::buchberger::{buchberger, dehomogenize_gb, EngineOptions, GroebnerBasis};
use semireg::f5::{complexity_estimate, f5_gb, macaulay_bound, macaulay_gb, monomial_count};
use semireg::series::{homogenized_prefix, semiregular_dreg, semiregular_series, Dreg};
use semireg::verify::{
    verify_golden, verify_instance, verify_sequence, worked_example, CheckSet, InstanceSpec,
};
use semireg::{Error, PolySequence};

use system::{parse_system, FileError};

/// Macaulay extraction stops here when no degree cap is given.
const DEFAULT_MACAULAY_DMAX: u32 = 24;

#[derive(Parser)]
#[command(
    name = "semireg",
    version,
    about = "Groebner bases, Hilbert series and semi-regularity checks over F_p"
)]
struct Cli {
    /// Render aligned text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Largest step degree any engine may reach.
    #[arg(long, global = true, env = "SEMIREG_DEGREE_CAP")]
    degree_cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Engine {
    Buchberger,
    F5,
    Macaulay,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of a system file (`-` reads stdin).
    Gb {
        file: String,
        #[arg(long, value_enum, default_value = "buchberger")]
        engine: Engine,
        /// Run on F^h and report G_hom with its dehomogenization.
        #[arg(long)]
        homogenize: bool,
    },
    /// Semi-regular Hilbert series, degree of regularity and the F^h prefix.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Repeat a single degree this many times.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 32)]
        precision: usize,
    },
    /// Runs the verification checks on a file, a random instance or the
    /// bundled worked example.
    Verify {
        #[arg(conflicts_with_all = ["golden", "spec"])]
        file: Option<String>,
        /// Name of a bundled example: `paper-example` (alias `worked-example`).
        #[arg(long)]
        golden: Option<String>,
        /// `p=..,n=..,m=..,d=..` with `d` one degree or a `:`-separated list.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seed range `a..b` (exclusive) instead of one seed.
        #[arg(long, conflicts_with = "seed")]
        seeds: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Degree bounds and `N^omega` cost estimates.
    Estimate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 2.0)]
        omega: f64,
    },
}

/// A command failure with its exit code.
struct Failure {
    code: u8,
    value: Value,
    message: String,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PreconditionUnverified(_)
        | Error::CapExceeded { .. }
        | Error::TimeoutDegree { .. }
        | Error::NotArtinianWithinCap(_)
        | Error::NotArtinian
        | Error::NotReached(_)
        | Error::NoFallWithinCap(_)
        | Error::GenerationFailed { .. } => 2,
        _ => 3,
    }
}

fn kind(e: &Error) -> String {
    format!("{e:?}")
        .split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            value: json!({"error": {"kind": kind(&e), "message": e.to_string()}}),
            message: e.to_string(),
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        let value = json!({"error": {
            "kind": kind(&e.error), "message": e.to_string(), "line": e.line, "column": e.column,
        }});
        Failure {
            code: 3,
            value,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        code: 3,
        value: json!({"error": {"kind": "Usage", "message": message}}),
        message,
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn strings(g: &GroebnerBasis) -> Vec<String> {
    g.elements.iter().map(ToString::to_string).collect()
}

fn run_engine(engine: Engine, f: &PolySequence, cap: Option<u32>) -> Result<Value, Error> {
    let opts = EngineOptions {
        step_degree_cap: cap,
        ..EngineOptions::default()
    };
    let start = Instant::now();
    let (g, sd) = match engine {
        Engine::Buchberger => {
            let g = buchberger(f, &opts)?;
            let sd = g.log.highest_step_degree;
            (g, sd)
        }
        Engine::F5 => {
            let g = f5_gb(f, &opts)?;
            let sd = g.log.highest_step_degree;
            (g, sd)
        }
        Engine::Macaulay => macaulay_gb(f, cap.unwrap_or(DEFAULT_MACAULAY_DMAX))?,
        Engine::All => unreachable!(),
    };
    let millis = start.elapsed().as_secs_f64() * 1e3;
    Ok(json!({
        "engine": engine,
        "basis": strings(&g),
        "max_degree": g.max_degree(),
        "solving_degree": sd,
        "log": to_value(&g.log),
        "millis": millis,
        "dehomogenized": if f.ring().has_hom_var { Some(strings(&dehomogenize_gb(&g))) } else { None },
    }))
}

fn cmd_gb(
    file: &str,
    engine: Engine,
    homogenize: bool,
    cap: Option<u32>,
) -> Result<(Value, bool), Failure> {
    let sf = parse_system(&read_input(file)?)?;
    let f = if homogenize && !sf.homogeneous {
        sf.system.homogenize()?
    } else {
        sf.system
    };
    let engines = match engine {
        Engine::All => vec![Engine::Buchberger, Engine::F5, Engine::Macaulay],
        e => vec![e],
    };
    let runs = engines
        .into_iter()
        .map(|e| run_engine(e, &f, cap))
        .collect::<Result<Vec<_>, _>>()?;
    let identical = runs.windows(2).all(|w| w[0]["basis"] == w[1]["basis"]);
    let out = json!({
        "command": "gb",
        "p": sf.p,
        "n": sf.n,
        "homogenized": f.ring().has_hom_var,
        "input": f.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "basis": runs[0]["basis"].clone(),
        "dehomogenized": runs[0]["dehomogenized"].clone(),
        "identical": identical,
        "runs": runs,
    });
    Ok((out, identical))
}

fn expand_degrees(degrees: Vec<u32>, m: Option<usize>) -> Result<Vec<u32>, Failure> {
    match m {
        None => Ok(degrees),
        Some(m) if degrees.len() == 1 => Ok(vec![degrees[0]; m]),
        Some(m) if degrees.len() == m => Ok(degrees),
        Some(m) => Err(usage(format!(
            "{} degrees given for m = {m}",
            degrees.len()
        ))),
    }
}

fn cmd_hilbert(n: usize, degrees: &[u32], precision: usize) -> Result<(Value, bool), Failure> {
    let hs_top = semiregular_series(n, degrees, precision)?;
    let d = semiregular_dreg(n, degrees)?;
    let hom = match d {
        Dreg::Finite { .. } => Some(to_value(&homogenized_prefix(n, degrees)?)),
        Dreg::Infinite { .. } => None,
    };
    let out = json!({
        "command": "hilbert",
        "n": n,
        "degrees": degrees,
        "hs_top": to_value(&hs_top),
        "d": to_value(&d),
        "hs_hom_prefix": hom,
    });
    Ok((out, true))
}

fn cmd_estimate(n: usize, degrees: &[u32], omega: f64) -> Result<(Value, bool), Failure> {
    // reject a bad exponent before anything else
    complexity_estimate(n, 0, omega)?;
    let d = semiregular_dreg(n, degrees)?.finite();
    let mac = macaulay_bound(degrees, n);
    let mut at = Vec::new();
    if let Some(d) = d {
        at.push(("D", d));
        at.push(("2D-2", (2 * d).saturating_sub(2)));
    }
    at.push(("macaulay_bound", mac));
    let costs = at
        .into_iter()
        .map(|(label, deg)| {
            Ok(json!({
                "at": label,
                "degree": deg,
                "monomials": monomial_count(n, deg).to_string(),
                "cost": complexity_estimate(n, deg, omega)?.to_string(),
            }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let out = json!({
        "command": "estimate",
        "n": n,
        "degrees": degrees,
        "omega": omega,
        "d": d,
        "two_d_minus_2": d.map(|d| (2 * d).saturating_sub(2)),
        "macaulay_bound": mac,
        "costs": costs,
    });
    Ok((out, true))
}

fn parse_spec(text: &str, seed: u64) -> Result<InstanceSpec, Failure> {
    let (mut p, mut n, mut m, mut d) = (None, None, None, None);
    for part in text.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("bad spec field '{part}'")))?;
        let num = |v: &str| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| usage(format!("bad value in '{part}'")))
        };
        match k.trim() {
            "p" => p = Some(num(v)? as u32),
            "n" => n = Some(num(v)? as usize),
            "m" => m = Some(num(v)? as usize),
            "d" => {
                d = Some(
                    v.split(':')
                        .map(|x| num(x).map(|x| x as u32))
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
            other => return Err(usage(format!("unknown spec field '{other}'"))),
        }
    }
    let need = |what: &str| usage(format!("spec lacks {what}"));
    let (p, n, m, d) = (
        p.ok_or_else(|| need("p"))?,
        n.ok_or_else(|| need("n"))?,
        m.ok_or_else(|| need("m"))?,
        d.ok_or_else(|| need("d"))?,
    );
    let degrees = expand_degrees(d, Some(m))?;
    Ok(InstanceSpec {
        p,
        n,
        m,
        degrees,
        seed,
        require_semiregular: true,
    })
}

fn parse_seeds(text: &str) -> Result<Vec<u64>, Failure> {
    let bad = || usage(format!("seed range must look like a..b, got '{text}'"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let (a, b): (u64, u64) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    Ok((a..b).collect())
}

fn run_seeds(
    spec: &InstanceSpec,
    seeds: &[u64],
    checks: CheckSet,
    jobs: usize,
) -> Vec<(u64, Result<Value, Error>)> {
    let jobs = jobs.clamp(1, seeds.len().max(1));
    let one = |s: u64| {
        let spec = InstanceSpec {
            seed: s,
            ..spec.clone()
        };
        (s, verify_instance(&spec, checks).map(|r| to_value(&r)))
    };
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let mine: Vec<u64> = seeds.iter().copied().skip(j).step_by(jobs).collect();
                scope.spawn(move || mine.into_iter().map(one).collect::<Vec<_>>())
            })
            .collect();
        let mut all: Vec<_> = handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect();
        all.sort_by_key(|(s, _)| *s);
        all
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    file: Option<String>,
    golden: Option<String>,
    spec: Option<String>,
    seed: u64,
    seeds: Option<String>,
    jobs: usize,
    checks: &str,
) -> Result<(Value, bool), Failure> {
    let check_set = CheckSet::parse(checks)?;
    if let Some(name) = golden {
        if !matches!(name.as_str(), "paper-example" | "worked-example") {
            return Err(usage(format!("unknown golden example '{name}'")));
        }
        let report = verify_golden(&worked_example()?)?;
        let pass = report.pass;
        return Ok((
            json!({"command": "verify", "golden": name, "report": to_value(&report), "pass": pass}),
            pass,
        ));
    }
    if let Some(spec) = spec {
        let spec = parse_spec(&spec, seed)?;
        let Some(range) = seeds else {
            let report = verify_instance(&spec, check_set)?;
            return Ok((to_value(&report), report.pass));
        };
        let results = run_seeds(&spec, &parse_seeds(&range)?, check_set, jobs);
        let mut worst: Option<Error> = None;
        let mut pass = true;
        let instances: Vec<Value> = results
            .into_iter()
            .map(|(s, r)| match r {
                Ok(v) => {
                    pass &= v["pass"] == json!(true);
                    json!({"seed": s, "report": v})
                }
                Err(e) => {
                    let v =
                        json!({"seed": s, "error": {"kind": kind(&e), "message": e.to_string()}});
                    worst.get_or_insert(e);
                    v
                }
            })
            .collect();
        let out =
            json!({"command": "verify", "instances": instances, "pass": pass && worst.is_none()});
        if let Some(e) = worst {
            return Err(Failure {
                code: exit_code(&e),
                value: out,
                message: e.to_string(),
            });
        }
        return Ok((out, pass));
    }
    let Some(file) = file else {
        return Err(usage("give a system file, --golden or --spec".into()));
    };
    let sf = parse_system(&read_input(&file)?)?;
    if sf.homogeneous {
        return Err(usage(
            "verify expects an affine system (no 'homogeneous' flag)".into(),
        ));
    }
    let report = verify_sequence(&sf.system, check_set, None)?;
    Ok((to_value(&report), report.pass))
}

fn emit(v: &Value, pretty: bool) {
    let text = if pretty {
        pretty::render(v)
    } else {
        format!("{v}\n")
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.degree_cap;
    let result = match cli.command {
        Command::Gb {
            file,
            engine,
            homogenize,
        } => cmd_gb(&file, engine, homogenize, cap),
        Command::Hilbert {
            n,
            degrees,
            m,
            precision,
        } => expand_degrees(degrees, m).and_then(|d| cmd_hilbert(n, &d, precision)),
        Command::Verify {
            file,
            golden,
            spec,
            seed,
            seeds,
            jobs,
            checks,
        } => cmd_verify(file, golden, spec, seed, seeds, jobs, &checks),
        Command::Estimate {
            n,
            degrees,
            m,
            omega,
        } => expand_degrees(degrees, m).and_then(|d| cmd_estimate(n, &d, omega)),
    };
    match result {
        Ok((v, pass)) => {
            emit(&v, cli.pretty);
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            emit(&f.value, cli.pretty);
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
