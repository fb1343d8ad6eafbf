//! The `tentfield` command-line front end.
//!
//! Every subcommand is a pure function of its flags: output is written to
//! `--out` (or returned for stdout) with no timestamps, sorted JSON keys and
//! fixed float formatting, so identical invocations give identical bytes.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for usage
//! or input errors.

mod plot;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arith::{checked_pow, divisors, is_prime};
use crate::bijection::{build_bijection, multiply_indices, verify_frobenius, PiPermutation};
use crate::chebyshev::{cheb_coeffs, cheb_fixed_points, factorization_check};
use crate::dynamics::{
    self, expansion_of_fixed_point, fixed_points, orbit_partition, periodic_count, UpSet,
};
use crate::error::{Error, Result};
use crate::ffield::{count_irreducibles, make_field, PolyFp};

pub use plot::{emit_plot, Curve, FixedMarker, PlotSpec};

/// Default bound on `p^n` for commands that enumerate fixed points.
pub const DEFAULT_MAX_PN: u64 = 1 << 20;
/// Environment variable overriding [`DEFAULT_MAX_PN`].
pub const MAX_PN_ENV: &str = "TENTFIELD_MAX_PN";
/// Largest degree whose exact Chebyshev coefficients are dumped.
const MAX_COEFF_DUMP: u64 = 1024;

#[derive(Parser, Debug)]
#[command(
    name = "tentfield",
    version,
    about = "Fixed points of up-down maps and their bijection with finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Periodic points of exact order m and irreducible polynomials of degree m
    Count(Flags),
    /// Fixed points of the n-th iterate with their base-p expansions
    Fixpoints(Flags),
    /// The permutation π for (p, n, I)
    Perm(Flags),
    /// The bijection table between fixed points and field elements
    Table(Flags),
    /// Run every consistency check for (p, n, I)
    Verify(Flags),
    /// Orbit decomposition of the fixed points under one application of g
    Orbits(Flags),
    /// Chebyshev fixed points, residuals and factorization error
    Cheb(Flags),
    /// SVG figure of the n-th iterate, its fixed points and their orbits
    Plot(Flags),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Flags {
    /// Prime characteristic / number of branches
    #[arg(long)]
    pub p: Option<u64>,
    /// Iterate count, equivalently the extension degree
    #[arg(long)]
    pub n: Option<u32>,
    /// Period (for `count`)
    #[arg(long)]
    pub m: Option<u64>,
    /// Increasing branches: evens, empty, full, or a comma-separated list
    #[arg(long = "I", value_name = "SPEC")]
    pub up: Option<String>,
    /// Field modulus as comma-separated coefficients, lowest degree first
    #[arg(long)]
    pub modulus: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Sample count for numeric checks
    #[arg(long)]
    pub samples: Option<usize>,
    /// Seed for random up-set sweeps in `verify`
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Count,
    Fixpoints,
    Perm,
    Table,
    Verify,
    Orbits,
    Cheb,
    Plot,
}

/// Which branches increase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpSpec {
    Evens,
    Empty,
    Full,
    Explicit(Vec<u64>),
}

impl UpSpec {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "evens" => Ok(Self::Evens),
            "empty" => Ok(Self::Empty),
            "full" => Ok(Self::Full),
            list => list
                .split(',')
                .map(|t| {
                    t.trim().parse::<u64>().map_err(|_| {
                        Error::InvalidArgument(format!("bad up-set entry {t:?} in {s:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()
                .map(Self::Explicit),
        }
    }

    pub fn resolve(&self, p: u64) -> Result<UpSet> {
        match self {
            Self::Evens => UpSet::evens(p),
            Self::Empty => UpSet::empty(p),
            Self::Full => UpSet::full(p),
            Self::Explicit(v) => UpSet::new(p, v.iter().copied()),
        }
    }
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub p: u64,
    /// Iterate count / extension degree, or the period `m` for `count`.
    pub n: u32,
    pub up: UpSpec,
    pub modulus: Option<Vec<u64>>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub samples: usize,
    pub seed: Option<u64>,
}

/// The `p^n` cap, honouring [`MAX_PN_ENV`].
pub fn size_cap() -> Result<u64> {
    match std::env::var(MAX_PN_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{MAX_PN_ENV}={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_MAX_PN),
    }
}

fn parse_coeffs(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad modulus coefficient {t:?}")))
        })
        .collect()
}

impl RunConfig {
    pub fn from_cli(cli: Cli, max_pn: u64) -> Result<Self> {
        let (command, flags) = match cli.command {
            CliCommand::Count(f) => (Command::Count, f),
            CliCommand::Fixpoints(f) => (Command::Fixpoints, f),
            CliCommand::Perm(f) => (Command::Perm, f),
            CliCommand::Table(f) => (Command::Table, f),
            CliCommand::Verify(f) => (Command::Verify, f),
            CliCommand::Orbits(f) => (Command::Orbits, f),
            CliCommand::Cheb(f) => (Command::Cheb, f),
            CliCommand::Plot(f) => (Command::Plot, f),
        };
        let p = flags
            .p
            .ok_or_else(|| Error::InvalidArgument("--p is required".into()))?;
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("--p {p} is not prime")));
        }
        let n = if command == Command::Count {
            let m = flags
                .m
                .or(flags.n.map(u64::from))
                .ok_or_else(|| Error::InvalidArgument("--m is required".into()))?;
            u32::try_from(m).map_err(|_| Error::InvalidArgument(format!("--m {m} is too large")))?
        } else {
            flags.n.unwrap_or(1)
        };
        if n == 0 {
            return Err(Error::InvalidArgument("--n/--m must be positive".into()));
        }
        if command != Command::Count {
            let size = checked_pow(p, n).filter(|&s| s <= max_pn).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{p}^{n} exceeds the size cap {max_pn} (set {MAX_PN_ENV} to raise it)"
                ))
            })?;
            debug_assert!(size >= 2);
        }
        let up = match &flags.up {
            Some(s) => UpSpec::parse(s)?,
            None => UpSpec::Evens,
        };
        up.resolve(p)?;
        let modulus = flags.modulus.as_deref().map(parse_coeffs).transpose()?;
        let default_format = match command {
            Command::Count | Command::Perm | Command::Verify => Format::Text,
            Command::Fixpoints | Command::Table | Command::Cheb => Format::Csv,
            Command::Orbits => Format::Json,
            Command::Plot => Format::Svg,
        };
        let format = flags.format.unwrap_or(default_format);
        let supported: &[Format] = match command {
            Command::Count | Command::Fixpoints | Command::Perm | Command::Table => {
                &[Format::Csv, Format::Json, Format::Text]
            }
            Command::Verify => &[Format::Text, Format::Json],
            Command::Orbits => &[Format::Json, Format::Text],
            Command::Cheb => &[Format::Csv, Format::Json, Format::Svg],
            Command::Plot => &[Format::Svg],
        };
        if !supported.contains(&format) {
            return Err(Error::InvalidArgument(format!(
                "format {format:?} is not available for {command:?}"
            )));
        }
        Ok(Self {
            command,
            p,
            n,
            up,
            modulus,
            format,
            out: flags.out,
            samples: flags.samples.unwrap_or(1000),
            seed: flags.seed,
        })
    }
}

/// Result of a run: the exit code and whatever should go to stdout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Decimal rendering of a double: shortest round-trip form, at most 17
/// significant digits, e.g. `0.11764705882352941` or `0.4`.
pub fn decimal(v: f64) -> String {
    format!("{v:?}")
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(vec![]);
    let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn big(n: &BigUint) -> Value {
    serde_json::from_str(&n.to_string()).expect("integers are valid json numbers")
}

fn field_for(cfg: &RunConfig) -> Result<crate::ffield::FieldContext> {
    let modulus = cfg
        .modulus
        .as_ref()
        .map(|c| PolyFp::new(cfg.p, c.iter().copied()))
        .transpose()?;
    make_field(cfg.p, cfg.n, modulus)
}

/// Dispatches a validated configuration.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let (code, body) = match cfg.command {
        Command::Count => (0, count(cfg)?),
        Command::Fixpoints => (0, fixpoints(cfg)?),
        Command::Perm => (0, perm(cfg)?),
        Command::Table => (0, table(cfg)?),
        Command::Verify => verify(cfg)?,
        Command::Orbits => (0, orbits(cfg)?),
        Command::Cheb => (0, cheb(cfg)?),
        Command::Plot => (0, plot_map(cfg)?),
    };
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, body.as_bytes()).map_err(|e| {
                Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Outcome {
                code,
                stdout: String::new(),
            })
        }
        None => Ok(Outcome { code, stdout: body }),
    }
}

fn count(cfg: &RunConfig) -> Result<String> {
    let m = u64::from(cfg.n);
    let j = periodic_count(cfg.p, m)?;
    let i = count_irreducibles(cfg.p, m)?;
    Ok(match cfg.format {
        Format::Json => json_string(&json!({ "p": cfg.p, "m": m, "J": big(&j), "I": big(&i) })),
        Format::Csv => csv_string(
            &["p", "m", "J", "I"],
            [vec![
                cfg.p.to_string(),
                m.to_string(),
                j.to_string(),
                i.to_string(),
            ]],
        )?,
        _ => format!("J={j} I={i}\n"),
    })
}

fn fixpoints(cfg: &RunConfig) -> Result<String> {
    let up = cfg.up.resolve(cfg.p)?;
    let points = fixed_points(&up, cfg.n)?;
    let rows: Vec<(String, String, String, String, String)> = points
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let e = expansion_of_fixed_point(&up, cfg.n, k as u64)?;
            Ok((
                k.to_string(),
                x.numer().to_string(),
                x.denom().to_string(),
                decimal(x.to_f64()),
                e.period().to_string(),
            ))
        })
        .collect::<Result<_>>()?;
    Ok(match cfg.format {
        Format::Json => json_string(&Value::Array(
            rows.iter()
                .zip(&points)
                .map(|(r, x)| {
                    json!({
                        "k": r.0.parse::<u64>().unwrap_or_default(),
                        "numerator": serde_json::from_str::<Value>(&x.numer().to_string()).unwrap_or(Value::Null),
                        "denominator": serde_json::from_str::<Value>(&x.denom().to_string()).unwrap_or(Value::Null),
                        "decimal": x.to_f64(),
                        "period_digits": r.4,
                    })
                })
                .collect(),
        )),
        Format::Text => rows
            .iter()
            .map(|r| format!("x_{} = {}/{} = {} = 0.({})\n", r.0, r.1, r.2, r.3, r.4))
            .collect(),
        _ => csv_string(
            &["k", "numerator", "denominator", "decimal", "period_digits"],
            rows.into_iter().map(|r| vec![r.0, r.1, r.2, r.3, r.4]),
        )?,
    })
}

fn perm(cfg: &RunConfig) -> Result<String> {
    let up = cfg.up.resolve(cfg.p)?;
    let pi = PiPermutation::build(&up, cfg.n)?;
    let t = pi.table();
    Ok(match cfg.format {
        Format::Json => json_string(&json!(t)),
        Format::Csv => csv_string(
            &["k", "pi_k"],
            t.iter()
                .enumerate()
                .map(|(k, v)| vec![k.to_string(), v.to_string()]),
        )?,
        _ => {
            let parts: Vec<String> = t.iter().map(u64::to_string).collect();
            format!("{}\n", parts.join(" "))
        }
    })
}

fn table(cfg: &RunConfig) -> Result<String> {
    let ctx = field_for(cfg)?;
    let up = cfg.up.resolve(cfg.p)?;
    let bij = build_bijection(&ctx, &up)?;
    let rows: Vec<Vec<String>> = bij
        .rows()
        .iter()
        .map(|r| {
            let gx = dynamics::eval_g(&up, &r.x)?;
            Ok(vec![
                r.k.to_string(),
                r.x.to_string(),
                decimal(r.x.to_f64()),
                decimal(gx.to_f64()),
                r.pi.to_string(),
                r.image.to_string(),
            ])
        })
        .collect::<Result<_>>()?;
    let header = [
        "k",
        "x_k_exact",
        "x_k_decimal",
        "g_of_x_k_decimal",
        "pi_k",
        "image_string",
    ];
    Ok(match cfg.format {
        Format::Json => json_string(&Value::Array(
            rows.iter()
                .map(|r| {
                    let obj = header
                        .iter()
                        .zip(r)
                        .map(|(h, v)| {
                            let val = match *h {
                                "k" | "pi_k" => json!(v.parse::<u64>().unwrap_or_default()),
                                _ => json!(v),
                            };
                            (h.to_string(), val)
                        })
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )),
        Format::Text => rows.iter().map(|r| format!("{}\n", r.join("\t"))).collect(),
        _ => csv_string(&header, rows)?,
    })
}

/// The up-set family swept by `verify --seed`: evens, empty, full, `{2}`
/// when `p > 2`, and ten random subsets drawn from the seed.
pub fn upset_family(p: u64, seed: u64) -> Result<Vec<(String, UpSet)>> {
    let mut family = vec![
        ("evens".to_string(), UpSet::evens(p)?),
        ("empty".to_string(), UpSet::empty(p)?),
        ("full".to_string(), UpSet::full(p)?),
    ];
    if p > 2 {
        family.push(("{2}".to_string(), UpSet::new(p, [2])?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    for _ in 0..10 {
        let up = UpSet::random(p, &mut rng)?;
        let name = format!("{:?}", up.members());
        family.push((name, up));
    }
    Ok(family)
}

struct Check {
    name: String,
    passed: usize,
    total: usize,
}

impl Check {
    fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn verify_one(cfg: &RunConfig, up: &UpSet, label: &str) -> Result<Vec<Check>> {
    let n = cfg.n;
    let mut checks = Vec::new();
    let tag = |s: &str| {
        if label.is_empty() {
            s.to_string()
        } else {
            format!("[I={label}] {s}")
        }
    };

    let pi = PiPermutation::build(up, n)?;
    checks.push(Check {
        name: tag("permutation is a bijection"),
        passed: usize::from(pi.is_permutation()),
        total: 1,
    });

    let points = fixed_points(up, n)?;
    let exact = points
        .iter()
        .filter(|x| dynamics::eval_g_iter(up, x, n).is_ok_and(|y| &y == *x))
        .count();
    checks.push(Check {
        name: tag("fixed points exact"),
        passed: exact,
        total: points.len(),
    });

    let ctx = field_for(cfg)?;
    let table = build_bijection(&ctx, up)?;
    let report = verify_frobenius(&table)?;
    checks.push(Check {
        name: tag("Frobenius checks passed"),
        passed: report.passed_rows(),
        total: report.checked,
    });

    let size = ctx.order();
    let nonzero: Vec<u64> = (0..size).filter(|&k| k != table.zero_row()).collect();
    let lefts: Vec<u64> = if size <= 256 {
        nonzero.clone()
    } else {
        nonzero
            .iter()
            .copied()
            .step_by((nonzero.len() / 64).max(1))
            .collect()
    };
    let mut products = 0;
    let mut agree = 0;
    for &i in &lefts {
        for &j in &nonzero {
            let r = multiply_indices(&table, i, j)?;
            let rows = table.rows();
            let lhs = ctx.mul(&rows[i as usize].image, &rows[j as usize].image);
            products += 1;
            if lhs == rows[r as usize].image {
                agree += 1;
            }
        }
    }
    checks.push(Check {
        name: tag("index products agree"),
        passed: agree,
        total: products,
    });

    let part = orbit_partition(up, n)?;
    let ds = divisors(u64::from(n));
    let matching = ds
        .iter()
        .filter(|&&d| {
            periodic_count(cfg.p, d)
                .is_ok_and(|j| j == BigUint::from(part.points_of_order(d as usize)))
        })
        .count();
    checks.push(Check {
        name: tag("periodic counts match"),
        passed: matching,
        total: ds.len(),
    });
    Ok(checks)
}

fn verify(cfg: &RunConfig) -> Result<(i32, String)> {
    let mut checks = verify_one(cfg, &cfg.up.resolve(cfg.p)?, "")?;
    if let Some(seed) = cfg.seed {
        for (label, up) in upset_family(cfg.p, seed)? {
            checks.extend(verify_one(cfg, &up, &label)?);
        }
    }
    let all_ok = checks.iter().all(Check::ok);
    let body = match cfg.format {
        Format::Json => json_string(&json!({
            "passed": all_ok,
            "checks": checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "total": c.total }))
                .collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(s, "{}/{} {}", c.passed, c.total, c.name);
            }
            s.push_str(if all_ok {
                "all checks passed\n"
            } else {
                "VERIFICATION FAILED\n"
            });
            s
        }
    };
    Ok((if all_ok { 0 } else { 1 }, body))
}

fn orbits(cfg: &RunConfig) -> Result<String> {
    let up = cfg.up.resolve(cfg.p)?;
    let part = orbit_partition(&up, cfg.n)?;
    Ok(match cfg.format {
        Format::Text => part
            .cycles()
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(u64::to_string).collect();
                format!("{}\n", parts.join(" "))
            })
            .collect(),
        _ => {
            let mut s = serde_json::to_string(&part).expect("cycles serialize");
            s.push('\n');
            s
        }
    })
}

fn cheb(cfg: &RunConfig) -> Result<String> {
    if cfg.format == Format::Svg {
        return Ok(emit_plot(&PlotSpec::for_chebyshev(cfg.p, cfg.n)?));
    }
    let degree = checked_pow(cfg.p, cfg.n).expect("validated against the size cap");
    let points = cheb_fixed_points(cfg.p, cfg.n)?;
    let fact = if degree <= 64 {
        Some(factorization_check(cfg.p, cfg.n)?)
    } else {
        None
    };
    Ok(match cfg.format {
        Format::Json => {
            let coefficients = if degree <= MAX_COEFF_DUMP {
                let c = cheb_coeffs(degree);
                Value::Array(
                    c.coeffs()
                        .iter()
                        .map(|v| serde_json::from_str(&v.to_string()).expect("integer"))
                        .collect(),
                )
            } else {
                Value::Null
            };
            json_string(&json!({
                "p": cfg.p,
                "n": cfg.n,
                "degree": degree,
                "coefficients": coefficients,
                "factorization_error": fact,
                "fixed_points": points
                    .iter()
                    .map(|f| json!({
                        "k": f.k,
                        "x_exact": f.source.to_string(),
                        "y": f.y,
                        "residual": f.residual,
                    }))
                    .collect::<Vec<_>>(),
            }))
        }
        _ => {
            let fact_s = fact.map(|e| format!("{e:.6e}")).unwrap_or_default();
            csv_string(
                &["k", "x_exact", "y", "residual", "factorization_error"],
                points.iter().map(|f| {
                    vec![
                        f.k.to_string(),
                        f.source.to_string(),
                        decimal(f.y),
                        format!("{:.6e}", f.residual),
                        fact_s.clone(),
                    ]
                }),
            )?
        }
    })
}

fn plot_map(cfg: &RunConfig) -> Result<String> {
    let up = cfg.up.resolve(cfg.p)?;
    Ok(emit_plot(&PlotSpec::for_map(&up, cfg.n)?))
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = size_cap()
        .and_then(|cap| RunConfig::from_cli(cli, cap))
        .and_then(|cfg| run(&cfg));
    match outcome {
        Ok(o) => {
            print!("{}", o.stdout);
            o.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<RunConfig> {
        let cli = Cli::try_parse_from(std::iter::once("tentfield").chain(args.iter().copied()))
            .expect("arguments parse");
        RunConfig::from_cli(cli, DEFAULT_MAX_PN)
    }

    #[test]
    fn up_spec_parsing() {
        assert_eq!(UpSpec::parse("evens").unwrap(), UpSpec::Evens);
        assert_eq!(UpSpec::parse("0, 2").unwrap(), UpSpec::Explicit(vec![0, 2]));
        assert!(UpSpec::parse("x").is_err());
        assert!(UpSpec::Explicit(vec![3]).resolve(3).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(cfg(&["table", "--p", "4", "--n", "2"]).is_err());
        assert!(cfg(&["table", "--p", "2", "--n", "21"]).is_err());
        assert!(cfg(&["plot", "--p", "2", "--n", "2", "--format", "csv"]).is_err());
        assert!(cfg(&["count", "--p", "2"]).is_err());
        assert!(cfg(&["verify", "--p", "3", "--n", "2", "--I", "5"]).is_err());
        let c = cfg(&["count", "--p", "2", "--m", "3"]).unwrap();
        assert_eq!(
            (c.command, c.n, c.format),
            (Command::Count, 3, Format::Text)
        );
    }

    #[test]
    fn count_output() {
        let c = cfg(&["count", "--p", "2", "--m", "3"]).unwrap();
        assert_eq!(run(&c).unwrap().stdout, "J=6 I=2\n");
    }

    #[test]
    fn verify_output() {
        let c = cfg(&["verify", "--p", "3", "--n", "3", "--I", "2"]).unwrap();
        let out = run(&c).unwrap();
        assert_eq!(out.code, 0);
        assert!(
            out.stdout.contains("27/27 Frobenius checks passed"),
            "{}",
            out.stdout
        );
    }

    #[test]
    fn decimals_match_python_repr() {
        assert_eq!(decimal(0.0), "0.0");
        assert_eq!(decimal(0.4), "0.4");
        assert_eq!(decimal(2.0 / 17.0), "0.11764705882352941");
    }

    #[test]
    fn bad_modulus_is_an_error() {
        let c = cfg(&["table", "--p", "2", "--n", "2", "--modulus", "1,0,1"]).unwrap();
        assert!(matches!(run(&c), Err(Error::InvalidModulus(_))));
    }
}
