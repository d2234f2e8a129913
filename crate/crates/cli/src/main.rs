use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use egc_core::combinatorics::{compatible_flag, parse_list};
use egc_core::edelman_greene::{j_plus_witnessed, PipelineContext};
use egc_core::{
    j_report, EgcError, EnumSpec, Flag, Partition, Permutation, Result, SkewShape, Sign, Suite, VerifyConfig,
};
use serde_json::json;

/// Flagged double β-Edelman–Greene coefficients and their verification.
#[derive(Parser, Debug)]
#[command(name = "egc", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Graham-positive expansion of j^{λ,φ}_ρ.
    J(JArgs),
    /// Run verification suites and print a report.
    Verify(VerifyArgs),
    /// Vexillary data of a permutation.
    Perm(PermArgs),
    /// List flagged set-valued tableaux.
    Enumerate(EnumArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct JArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    phi: String,
    #[arg(long, allow_hyphen_values = true)]
    rho: String,
    /// Also list the tableaux behind each j⁺ monomial.
    #[arg(long)]
    witnesses: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// decompose, pi, gvex, theorem, omega, ring, a comma list of these, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = egc_core::ring::DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, allow_hyphen_values = true, default_value = "-2:3")]
    window: String,
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    #[arg(long, allow_hyphen_values = true, default_value = "-2:3")]
    flag_range: String,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "input")]
struct PermInput {
    /// Reduced or unreduced word in simple reflections s_i.
    #[arg(long, allow_hyphen_values = true, group = "input")]
    word: Option<String>,
    /// One-line notation starting at --base.
    #[arg(long, allow_hyphen_values = true, group = "input")]
    oneline: Option<String>,
}

#[derive(Args, Debug)]
struct PermArgs {
    #[command(flatten)]
    input: PermInput,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    base: i64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Any,
    Positive,
    Nonpositive,
}

#[derive(Args, Debug)]
struct EnumArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Inner shape for skew tableaux.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<String>,
    #[arg(long, value_enum, default_value = "any")]
    sign: SignArg,
    #[arg(long, allow_hyphen_values = true, default_value = "-2:2")]
    window: String,
    /// Print at most this many tableaux (the count is always exact).
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| EgcError::Argument(format!("expected lo:hi, got {s:?}")))?;
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| EgcError::Argument(format!("bad bound {t:?}")));
    let (lo, hi) = (num(a)?, num(b)?);
    if lo > hi {
        return Err(EgcError::Argument(format!("empty range {s}")));
    }
    Ok((lo, hi))
}

fn cmd_j(a: &JArgs) -> Result<ExitCode> {
    let lambda: Partition = a.lambda.parse()?;
    let phi: Flag = a.phi.parse()?;
    let rho: Partition = a.rho.parse()?;
    let (sum, mut report) = j_report(&lambda, &phi, &rho)?;
    let witnesses = if a.witnesses && lambda.contains(&rho) {
        let ctx = PipelineContext::new(&lambda, &phi, &rho)?;
        match &ctx.nu {
            Some(nu) => j_plus_witnessed(&lambda, &ctx.phi_plus, nu)?,
            None => Vec::new(),
        }
    } else {
        Vec::new()
    };
    match a.format {
        Format::Json => {
            if a.witnesses {
                let w: Vec<_> = witnesses
                    .iter()
                    .map(|(m, w)| {
                        json!({"monomial": m.to_string(), "mu": w.mu.parts(),
                               "upper": w.upper.to_string(), "lower": w.lower.to_string()})
                    })
                    .collect();
                report["witnesses"] = json!(w);
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("plain data"));
        }
        Format::Text => {
            println!("lambda = {lambda}   phi = {phi}   rho = {rho}");
            let nu = report["nu"].as_array().map(|v| {
                format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            });
            println!("nu = {}   q = {}   case = {}", nu.as_deref().unwrap_or("none"), report["q"], report["case"].as_str().unwrap_or(""));
            println!("β^{} · j =", sum.normalization_beta_exp);
            if sum.is_zero() {
                println!("  0");
            }
            for (m, c) in sum.terms() {
                println!("  {c:>4}  {m}");
            }
            for (m, w) in &witnesses {
                println!("  j⁺ term {m}: μ = {}, upper = [{}], lower = [{}]", w.mu, w.upper, w.lower);
            }
        }
    }
    Ok(if sum.is_zero() { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn cmd_verify(a: &VerifyArgs) -> Result<ExitCode> {
    let cfg = VerifyConfig {
        prime: a.prime,
        seed: a.seed,
        trials: a.trials,
        window: parse_range(&a.window)?,
        max_size: a.max_size,
        flag_range: parse_range(&a.flag_range)?,
        jobs: a.jobs,
    };
    let suites = Suite::parse_list(&a.suite)?;
    let report = egc_core::verify::run(&suites, &cfg)?;
    match a.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => {
            for s in &report.suites {
                for c in &s.checks {
                    let tag = if c.passed() { "PASS" } else { "FAIL" };
                    println!("{tag}  {}/{}  instances={}  failures={}", s.suite, c.name, c.instances, c.failures.len());
                    for f in c.failures.iter().take(20) {
                        println!("      {f}");
                    }
                }
            }
            println!("discrepancies = {}", report.discrepancies);
        }
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_perm(a: &PermArgs) -> Result<ExitCode> {
    let w = match (&a.input.word, &a.input.oneline) {
        (Some(word), _) => Permutation::from_word(&parse_list::<i64>(word)?),
        (_, Some(line)) => Permutation::from_oneline(a.base, &parse_list::<i64>(line)?)?,
        _ => unreachable!("clap enforces one input"),
    };
    let vex = w.is_vexillary();
    let csf = if vex { Some(w.code_shape_flag()?) } else { None };
    let compat = match &csf {
        Some(c) => Some(compatible_flag(&c.shape, &c.flag)?),
        None => None,
    };
    let code: Vec<(i64, usize)> = w.code().into_iter().collect();
    let oneline = w.window().map(|(lo, hi)| (lo, w.oneline(lo, hi)));
    match a.format {
        Format::Json => {
            let v = json!({
                "identity": w.is_identity(),
                "window": w.window().map(|(lo, hi)| [lo, hi]),
                "oneline": oneline.as_ref().map(|(_, v)| v),
                "vexillary": vex,
                "code": code,
                "shape": w.shape().parts(),
                "flag": csf.as_ref().map(|c| c.flag.bounds().to_vec()),
                "compatible_flag": compat.as_ref().map(|f| f.bounds().to_vec()),
                "length": w.length(),
                "descents": w.descents(),
                "reduced_word": w.reduced_word(),
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("plain data"));
        }
        Format::Text => {
            if w.is_identity() {
                println!("identity");
            }
            if let Some((lo, v)) = &oneline {
                let s: Vec<String> = v.iter().map(i64::to_string).collect();
                println!("oneline = {} (from {lo})", s.join(","));
            }
            println!("vexillary = {vex}");
            let code_s: Vec<String> = code.iter().map(|(k, c)| format!("c{k}={c}")).collect();
            println!("code = {}", code_s.join(" "));
            println!("shape = {}", w.shape());
            if let (Some(c), Some(f)) = (&csf, &compat) {
                println!("flag = {}", c.flag);
                println!("compatible flag = {f}");
            }
            println!("length = {}", w.length());
            let d: Vec<String> = w.descents().iter().map(i64::to_string).collect();
            println!("descents = {}", d.join(","));
            let r: Vec<String> = w.reduced_word().iter().map(i64::to_string).collect();
            println!("reduced word = {}", r.join(","));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(a: &EnumArgs) -> Result<ExitCode> {
    let lambda: Partition = a.lambda.parse()?;
    let mu: Partition = a.mu.parse()?;
    let phi = a.phi.as_deref().map(str::parse::<Flag>).transpose()?;
    let sign = match a.sign {
        SignArg::Any => Sign::Any,
        SignArg::Positive => Sign::Positive,
        SignArg::Nonpositive => Sign::NonPositive,
    };
    let spec = EnumSpec::new(SkewShape::new(lambda, mu)?, phi, sign, parse_range(&a.window)?)?;
    let limit = a.limit.unwrap_or(usize::MAX);
    let mut shown = Vec::new();
    let mut count = 0usize;
    for t in egc_core::tableaux::enumerate(&spec)? {
        if shown.len() < limit {
            shown.push(t.to_string());
        }
        count += 1;
    }
    match a.format {
        Format::Json => {
            let v = json!({"shape": spec.shape.to_string(), "count": count, "tableaux": shown});
            println!("{}", serde_json::to_string_pretty(&v).expect("plain data"));
        }
        Format::Text => {
            for t in &shown {
                println!("{t}");
            }
            println!("count = {count}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = match &cli.cmd {
        Cmd::J(a) => cmd_j(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Perm(a) => cmd_perm(a),
        Cmd::Enumerate(a) => cmd_enumerate(a),
    };
    out.unwrap_or_else(|e| {
        eprintln!("egc: {e}");
        ExitCode::from(1)
    })
}
