mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use ladderlab::clasp::{conjecture_sweep, gamma, kappa_method, kappa_methods, validate_clasp, weyl_dim, weyl_dim_at_one, ClaspEngine};
use ladderlab::eval::{check_relation, eval_ladder, hom_rank, registry, relation, sweep_relation};
use ladderlab::qring::{qbinom, qint, RatFun};
use ladderlab::webs::Ladder;
use ladderlab::weights::{count_paths, enumerate_paths, GlWeight, SlWeight};
use ladderlab::Error;

use render::{render, Format};

#[derive(Parser, Debug)]
#[command(name = "ladderlab", version, about = "Exact sl_n ladder webs, clasps and local intersection forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Rank n of sl_n.
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Also specialize results at a rational q, written `q=p/r`.
    #[arg(long, global = true, value_parser = parse_at)]
    at: Option<BigRational>,
    /// Where computed clasps are kept between runs.
    #[arg(long, global = true, env = "LADDERLAB_CACHE_DIR", default_value = ".ladderlab-cache")]
    cache_dir: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quantum integer [k].
    Qnum {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Quantum binomial [m choose k].
    Qbinom {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        k: i64,
    },
    /// Dominant paths of a word, optionally ending at a target weight.
    Paths {
        #[arg(long)]
        word: String,
        #[arg(long)]
        target: Option<String>,
        /// Print only the number of paths.
        #[arg(long)]
        count: bool,
    },
    /// Matrix of a ladder stored as JSON.
    Eval {
        #[arg(long)]
        file: PathBuf,
    },
    /// Web relations as matrix identities: one instance, or sweeps.
    Relcheck {
        /// One of the registered relations; all when omitted.
        #[arg(long)]
        relation: Option<String>,
        /// Check a single instance at these comma-separated parameters.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Build and validate a clasp.
    Clasp {
        #[arg(long)]
        lambda: String,
        /// Include the matrix in the report.
        #[arg(long)]
        matrix: bool,
    },
    /// Local intersection form kappa.
    Kappa {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Coefficient gamma from matrices.
    Gamma {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Compares every kappa method on all pairs up to a level.
    Conjecture {
        #[arg(long)]
        level_bound: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Rank of the double ladders between two words against the number of path pairs.
    Dims {
        #[arg(long)]
        word: String,
        /// Target word; the source word when omitted.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Quantum Weyl dimension and its value at q = 1.
    Weyldim {
        #[arg(long)]
        lambda: String,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckFailed(_) | Error::NonUniqueSolution(_) | Error::DegenerateKappa(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// A report and whether its checks passed.
struct Report {
    value: Value,
    passed: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, passed: true }
    }
}

fn parse_at(s: &str) -> Result<BigRational, String> {
    let v = s.strip_prefix("q=").unwrap_or(s);
    let r: BigRational = v.parse().map_err(|_| format!("expected q=p/r, got {s}"))?;
    Ok(r)
}

fn parse_word(s: &str) -> Result<Vec<u8>, Failure> {
    s.split(',').map(|t| t.trim().parse::<u8>().map_err(|_| Failure::Usage(format!("bad word {s}")))).collect()
}

fn lambda_of(s: &str, n: Option<usize>) -> Result<SlWeight, Failure> {
    let l: SlWeight = s.parse()?;
    rank(n, Some(l.n()))?;
    Ok(l)
}

fn gl_of(s: &str, n: usize) -> Result<GlWeight, Failure> {
    let g: GlWeight = s.parse()?;
    if g.n() != n {
        return Err(Failure::Usage(format!("{s} has length {}, expected {n}", g.n())));
    }
    Ok(g)
}

/// The rank from `--n` and from the other arguments, which must agree.
fn rank(given: Option<usize>, inferred: Option<usize>) -> Result<usize, Failure> {
    let n = match (given, inferred) {
        (Some(a), Some(b)) if a != b => return Err(Failure::Usage(format!("--n {a} does not match the weights (n = {b})"))),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(Failure::Usage("--n is required".into())),
    };
    if n < 2 {
        return Err(Failure::Usage(format!("n must be at least 2, got {n}")));
    }
    Ok(n)
}

fn at_value(x: &RatFun, at: &Option<BigRational>) -> Result<Option<String>, Failure> {
    Ok(match at {
        Some(q) => Some(x.specialize(q)?.to_string()),
        None => None,
    })
}

fn scalar(x: &RatFun, at: &Option<BigRational>) -> Result<Value, Failure> {
    Ok(Value::String(at_value(x, at)?.unwrap_or_else(|| x.to_string())))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let at = &cli.at;
    let engine = || ClaspEngine::with_cache_dir(&cli.cache_dir);
    match &cli.command {
        Command::Qnum { k } => {
            if let Some(n) = cli.n {
                rank(Some(n), None)?;
            }
            Ok(Report::ok(scalar(&RatFun::from_poly(qint(*k)), at)?))
        }
        Command::Qbinom { m, k } => {
            if let Some(n) = cli.n {
                rank(Some(n), None)?;
            }
            Ok(Report::ok(scalar(&RatFun::from_poly(qbinom(*m, *k)), at)?))
        }
        Command::Paths { word, target, count } => {
            let n = rank(cli.n, None)?;
            let w = parse_word(word)?;
            if w.iter().any(|&a| a as usize > n) {
                return Err(Failure::Usage(format!("word {word} has labels above {n}")));
            }
            let t = target.as_deref().map(|t| lambda_of(t, Some(n))).transpose()?;
            if *count {
                let c = match &t {
                    Some(t) => count_paths(n, &w, t),
                    None => enumerate_paths(n, &w, None).len(),
                };
                return Ok(Report::ok(json!(c)));
            }
            let paths = enumerate_paths(n, &w, t.as_ref());
            let rows: Vec<Value> = paths
                .iter()
                .map(|p| {
                    let steps: Vec<String> = p.steps.iter().map(|s| s.to_string()).collect();
                    json!({ "endpoint": p.endpoint().to_string(), "steps": steps.join(".") })
                })
                .collect();
            Ok(Report::ok(json!({
                "count": rows.len(),
                "n": n,
                "rows": rows,
                "target": t.map(|t| t.to_string()),
                "word": w,
            })))
        }
        Command::Eval { file } => {
            let l = load_ladder(file)?;
            rank(cli.n, Some(l.n))?;
            let m = eval_ladder(&l).to_ratfun();
            Ok(Report::ok(match at {
                Some(q) => m.specialize_json(q)?,
                None => m.to_json(),
            }))
        }
        Command::Relcheck { relation: name, params } => {
            let n = rank(cli.n, None)?;
            if let Some(ps) = params {
                let name = name.as_deref().ok_or_else(|| Failure::Usage("--params needs --relation".into()))?;
                let ps: Vec<i64> = ps
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("bad parameters {ps}"))))
                    .collect::<Result<_, _>>()?;
                let holds = check_relation(name, &ps, n)?;
                return Ok(Report {
                    value: json!({ "holds": holds, "n": n, "params": ps, "relation": name }),
                    passed: holds,
                });
            }
            let rels = match name {
                Some(r) => vec![relation(r)?],
                None => registry(),
            };
            let mut rows = Vec::new();
            for r in &rels {
                let rep = sweep_relation(r.as_ref(), n)?;
                rows.push(json!({
                    "checked": rep.checked,
                    "failures": rep.failures.join("; "),
                    "passed": rep.passed(),
                    "relation": rep.relation,
                }));
            }
            let passed = rows.iter().all(|r| r["passed"] == json!(true));
            Ok(Report { value: json!({ "n": n, "passed": passed, "rows": rows }), passed })
        }
        Command::Clasp { lambda, matrix } => {
            let l = lambda_of(lambda, cli.n)?;
            let e = engine();
            let rep = validate_clasp(&e, &l)?;
            let mut v = serde_json::to_value(&rep).expect("report serializes");
            v["passed"] = json!(rep.passed());
            if *matrix {
                let p = e.clasp(&l)?;
                v["matrix"] = match at {
                    Some(q) => p.matrix.specialize_json(q)?,
                    None => p.matrix.to_json(),
                };
            }
            Ok(Report { value: v, passed: rep.passed() })
        }
        Command::Kappa { lambda, mu, method } => {
            let l = lambda_of(lambda, cli.n)?;
            let m = gl_of(mu, l.n())?;
            let methods = match method.as_str() {
                "all" => kappa_methods().into_iter().filter(|k| k.name() != "recursive" || l.n() <= 4).collect(),
                name => vec![kappa_method(name)?],
            };
            let e = engine();
            let mut values = Map::new();
            let mut first: Option<RatFun> = None;
            let mut agree = true;
            for k in &methods {
                let v = k.kappa(&e, &l, &m)?;
                if let Some(f) = &first {
                    agree &= f.sub(&v).is_zero();
                } else {
                    first = Some(v.clone());
                }
                values.insert(k.name().to_string(), scalar(&v, at)?);
            }
            Ok(Report {
                value: json!({
                    "agree": agree,
                    "at": at.as_ref().map(|q| q.to_string()),
                    "lambda": l.to_string(),
                    "mu": m.to_string(),
                    "n": l.n(),
                    "values": values,
                }),
                passed: agree,
            })
        }
        Command::Gamma { lambda, mu, nu } => {
            let l = lambda_of(lambda, cli.n)?;
            let m = gl_of(mu, l.n())?;
            let v = gl_of(nu, l.n())?;
            let g = gamma(&engine(), &l, &m, &v)?;
            Ok(Report::ok(json!({
                "at": at.as_ref().map(|q| q.to_string()),
                "gamma": scalar(&g, at)?,
                "lambda": l.to_string(),
                "mu": m.to_string(),
                "n": l.n(),
                "nu": v.to_string(),
            })))
        }
        Command::Conjecture { level_bound, jobs } => {
            let n = rank(cli.n, None)?;
            if *level_bound < 0 {
                return Err(Failure::Usage("--level-bound must be nonnegative".into()));
            }
            let rep = conjecture_sweep(&engine(), n, *level_bound, *jobs)?;
            Ok(Report { value: serde_json::to_value(&rep).expect("report serializes"), passed: rep.passed() })
        }
        Command::Dims { word, target, points, seed } => {
            let n = rank(cli.n, None)?;
            let s = parse_word(word)?;
            let t = match target {
                Some(t) => parse_word(t)?,
                None => s.clone(),
            };
            if s.iter().chain(&t).any(|&a| a as usize > n) {
                return Err(Failure::Usage(format!("labels must lie in 0..={n}")));
            }
            let rep = hom_rank(n, &s, &t, *points, *seed)?;
            Ok(Report { value: serde_json::to_value(&rep).expect("report serializes"), passed: rep.certified })
        }
        Command::Weyldim { lambda } => {
            let l = lambda_of(lambda, cli.n)?;
            Ok(Report::ok(json!({
                "at": at.as_ref().map(|q| q.to_string()),
                "dim": weyl_dim_at_one(&l)?,
                "dim_q": scalar(&weyl_dim(&l)?, at)?,
                "lambda": l.to_string(),
                "n": l.n(),
            })))
        }
    }
}

/// Reads and validates a ladder file.
fn load_ladder(path: &std::path::Path) -> Result<Ladder, Failure> {
    let s = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(Ladder::from_json(&s)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            println!("{}", render(&r.value, cli.format).trim_end());
            if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(1)
        }
    }
}
