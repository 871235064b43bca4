//! `cohsys`: exact Hodge polynomials of coherent-system moduli spaces on an
//! elliptic curve, plus the identity-verification suite.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing identity, 2 on
//! usage errors and violated mathematical preconditions.

mod format;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cohsys_core::verify::{run_all, VerifyBounds};
use cohsys_core::{
    birational_type, birational_type_count_bound, classify_isomorphism, critical_values,
    hodge_for_query, hodge_stratum, BiPoly, Chamber, Error, ModuliQuery, Rational, StratumId,
};
use format::OutputFormat;

#[derive(Parser)]
#[command(
    name = "cohsys",
    version,
    about = "Exact Hodge polynomials of coherent-system moduli spaces on an elliptic curve"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hodge polynomial of a moduli space of coherent systems.
    Hodge(HodgeArgs),
    /// The three gcd-2 strata and their sum.
    Strata(StrataArgs),
    /// Critical values of the stability parameter.
    CriticalValues(CriticalValuesArgs),
    /// Run the identity-verification suite.
    Verify(VerifyArgs),
    /// Isomorphism or birational classification.
    Classify(ClassifyArgs),
}

#[derive(Args)]
struct HodgeArgs {
    /// Rank of the bundles.
    #[arg(long)]
    n: u64,
    /// Degree of the bundles.
    #[arg(long)]
    d: u64,
    /// Dimension of the space of sections.
    #[arg(long)]
    k: u64,
    /// Fix the determinant.
    #[arg(long)]
    fixed_det: bool,
    /// Chamber index i (0 = small alpha end); omit for the small-alpha space.
    #[arg(long)]
    chamber: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Print the Euler characteristic (value at u = v = -1).
    #[arg(long, conflicts_with_all = ["poincare", "at"])]
    euler: bool,
    /// Print the Poincare polynomial (substitute v = u).
    #[arg(long, conflicts_with_all = ["euler", "at"])]
    poincare: bool,
    /// Evaluate at exact rationals "u,v", e.g. --at=-1,1/2.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["euler", "poincare"])]
    at: Option<String>,
}

#[derive(Args)]
struct StrataArgs {
    /// Even degree of the bundles (rank is 2 mod d with gcd 2).
    #[arg(long)]
    d: u64,
    /// Fix the determinant.
    #[arg(long)]
    fixed_det: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct CriticalValuesArgs {
    /// Degree of the bundles.
    #[arg(long)]
    d: u64,
    /// Rank parameter: the rank is 2 + a*d.
    #[arg(long, default_value_t = 0)]
    a: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest degree to sweep (default 20, or COHSYS_VERIFY_MAX_D).
    #[arg(long)]
    max_d: Option<u64>,
    /// Largest rank parameter to sweep (default 3, or COHSYS_VERIFY_MAX_A).
    #[arg(long)]
    max_a: Option<u64>,
    /// Use the full acceptance range (degree 40, rank parameter 5).
    #[arg(long)]
    deep: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Rank of the bundles.
    #[arg(long)]
    n: u64,
    /// Second rank: compare G_0(n, d, k) with G_0(n2, d, k).
    #[arg(long)]
    n2: Option<u64>,
    /// Degree of the bundles.
    #[arg(long)]
    d: u64,
    /// Dimension of the space of sections.
    #[arg(long)]
    k: u64,
    /// Classify the fixed-determinant space.
    #[arg(long)]
    fixed_det: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Hodge(args) => cmd_hodge(args),
        Command::Strata(args) => cmd_strata(args),
        Command::CriticalValues(args) => cmd_critical_values(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Classify(args) => cmd_classify(args),
    }
}

fn describe(e: Error) -> String {
    e.to_string()
}

fn cmd_hodge(args: HodgeArgs) -> Result<ExitCode, String> {
    let chamber = match args.chamber {
        Some(i) => Chamber::Index(i),
        None => Chamber::SmallAlpha,
    };
    let query = ModuliQuery::new(args.n, args.d, args.k, args.fixed_det, chamber)
        .map_err(describe)?;
    let p = hodge_for_query(&query).map_err(describe)?;

    let output = if args.euler {
        let minus_one = Rational::from(-1i64);
        BiPoly::from(p.eval(&minus_one, &minus_one))
    } else if args.poincare {
        p.poincare()
    } else if let Some(spec) = &args.at {
        let (u0, v0) = parse_point(spec)?;
        BiPoly::from(p.eval(&u0, &v0))
    } else {
        p
    };
    println!("{}", format::poly(&output, args.format));
    Ok(ExitCode::SUCCESS)
}

fn parse_point(spec: &str) -> Result<(Rational, Rational), String> {
    let (u_str, v_str) = spec
        .split_once(',')
        .ok_or_else(|| format!("expected \"u,v\" with exact rationals, got {spec:?}"))?;
    let parse = |s: &str| {
        s.parse::<Rational>()
            .map_err(|_| format!("not an exact rational: {s:?}"))
    };
    Ok((parse(u_str)?, parse(v_str)?))
}

fn cmd_strata(args: StrataArgs) -> Result<ExitCode, String> {
    if args.d % 2 != 0 || args.d == 0 {
        return Err(format!("d must be even and positive, got {}", args.d));
    }
    let query = ModuliQuery::small_alpha(2, args.d, 1, args.fixed_det).map_err(describe)?;
    let mut parts = Vec::new();
    let mut sum = BiPoly::zero();
    for s in StratumId::ALL {
        let p = hodge_stratum(&query, s).map_err(describe)?;
        sum = sum + &p;
        parts.push((s, p));
    }

    match args.format {
        OutputFormat::Json => {
            let strata: serde_json::Map<String, serde_json::Value> = parts
                .iter()
                .map(|(s, p)| {
                    let poly = serde_json::to_value(format::JsonPoly::from(p)).unwrap();
                    (s.to_string(), poly)
                })
                .collect();
            let doc = serde_json::json!({
                "strata": strata,
                "sum": format::JsonPoly::from(&sum),
            });
            println!("{doc}");
        }
        fmt => {
            for (s, p) in &parts {
                println!("{s}: {}", format::poly(p, fmt));
            }
            println!("sum: {}", format::poly(&sum, fmt));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_critical_values(args: CriticalValuesArgs) -> Result<ExitCode, String> {
    if args.d < 1 {
        return Err("d must be positive".to_string());
    }
    let walls = critical_values(args.d, args.a);
    match args.format {
        OutputFormat::Plain => {
            println!("i\td1\tn1\tn2\talpha");
            for w in &walls {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    w.index,
                    w.d1,
                    w.n1,
                    w.n2,
                    format::rational_plain(&w.alpha)
                );
            }
        }
        OutputFormat::Latex => {
            println!("\\begin{{tabular}}{{rrrrr}}");
            println!("i & d_1 & n_1 & n_2 & \\alpha \\\\");
            for w in &walls {
                println!(
                    "{} & {} & {} & {} & {} \\\\",
                    w.index,
                    w.d1,
                    w.n1,
                    w.n2,
                    format::rational_latex(&w.alpha)
                );
            }
            println!("\\end{{tabular}}");
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = walls
                .iter()
                .map(|w| {
                    serde_json::json!({
                        "i": w.index,
                        "d1": w.d1,
                        "d2": w.d2,
                        "n1": w.n1,
                        "n2": w.n2,
                        "alpha": {
                            "num": w.alpha.numer().to_string(),
                            "den": w.alpha.denom().to_string(),
                        },
                    })
                })
                .collect();
            println!("{}", serde_json::json!({ "walls": rows }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn env_bound(name: &str) -> Result<Option<u64>, String> {
    match std::env::var(name) {
        Ok(value) => value
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("{name} must be a nonnegative integer, got {value:?}")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("{name}: {e}")),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let mut bounds = if args.deep {
        VerifyBounds::deep()
    } else {
        VerifyBounds::standard()
    };
    if !args.deep {
        if let Some(d) = env_bound("COHSYS_VERIFY_MAX_D")? {
            bounds.max_d = d;
        }
        if let Some(a) = env_bound("COHSYS_VERIFY_MAX_A")? {
            bounds.max_a = a;
        }
    }
    if let Some(d) = args.max_d {
        bounds.max_d = d;
    }
    if let Some(a) = args.max_a {
        bounds.max_a = a;
    }
    if bounds.max_d < 2 {
        return Err(format!("max-d must be at least 2, got {}", bounds.max_d));
    }

    let results = run_all(&bounds);
    let mut failures = 0usize;
    for r in &results {
        if r.passed {
            println!("PASS {} ({})", r.name, r.detail);
        } else {
            failures += 1;
            println!("FAIL {}: {}", r.name, r.detail);
        }
    }
    if failures == 0 {
        println!(
            "all {} checks passed (max-d {}, max-a {})",
            results.len(),
            bounds.max_d,
            bounds.max_a
        );
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{failures} of {} checks failed", results.len());
        Ok(ExitCode::from(1))
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, String> {
    match args.n2 {
        Some(n2) => {
            let c = classify_isomorphism(args.n, n2, args.d, args.k).map_err(describe)?;
            println!("{} ({})", c.verdict, c.reason);
        }
        None => {
            let t = birational_type(args.n, args.d, args.k, args.fixed_det).map_err(describe)?;
            println!("{t}");
            println!(
                "at most {} birational types among the chambers in degree {}",
                birational_type_count_bound(args.d),
                args.d
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
