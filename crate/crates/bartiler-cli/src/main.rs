//! Command-line surface over the bartiler library: exact counts, rational
//! generating functions, the brute-force oracle, invariant suites, and OEIS
//! b-file emission. All output is deterministic; identical invocations
//! produce byte-identical output.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use bartiler::gf::{big_count_at, f_main};
use bartiler::oracle::{count_tilings_with, visit_tilings, Caps};
use bartiler::poly::{rational_to_series, BiPoly, XPoly};
use bartiler::verify::{run, Level, Suite};

#[derive(Parser)]
#[command(
    name = "bartiler",
    version,
    about = "Exact weighted counts and generating functions for tilings of 2k x n rectangles by k x 1 bars"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the counting sweep.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count tilings of a 2k x n rectangle by k x 1 bars
    Count {
        /// Bar length; the rectangle has 2k rows.
        #[arg(long)]
        k: u32,
        /// Number of columns.
        #[arg(long)]
        n: usize,
        /// Weight substituted per vertical bar.
        #[arg(long, default_value = "1", value_parser = parse_bigint, allow_hyphen_values = true)]
        a: BigInt,
        /// Weight substituted per horizontal bar.
        #[arg(long, default_value = "1", value_parser = parse_bigint, allow_hyphen_values = true)]
        b: BigInt,
        /// Print the full weighted polynomial instead of one number.
        #[arg(long)]
        weighted: bool,
    },
    /// Print the rational generating function for a bar length
    Gf {
        /// Bar length.
        #[arg(long)]
        k: u32,
        /// Also print the series coefficients through this order.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Brute-force weighted count for an arbitrary m x n rectangle
    Oracle {
        /// Number of rows.
        #[arg(long)]
        m: u32,
        /// Number of columns.
        #[arg(long)]
        n: u32,
        /// Bar length.
        #[arg(long)]
        bar: u32,
        /// Stream every tiling as one JSON object per line.
        #[arg(long)]
        list: bool,
    },
    /// Run a named invariant suite
    Verify {
        /// One of: all, fn, det, hadamard, oracle, srht.
        #[arg(long, default_value = "all")]
        suite: String,
        /// One of: quick, full.
        #[arg(long, default_value = "quick")]
        level: String,
    },
    /// Emit unit-weight counts in OEIS b-file format
    Bfile {
        /// Bar length.
        #[arg(long)]
        k: u32,
        /// Largest column count to emit.
        #[arg(long)]
        max: usize,
    },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>()
        .map_err(|_| format!("`{s}` is not an integer"))
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_json(v: &serde_json::Value) {
    println!("{v}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count {
            k,
            n,
            a,
            b,
            weighted,
        } => cmd_count(cli.format, k, n, &a, &b, weighted),
        Command::Gf { k, terms } => cmd_gf(cli.format, k, terms),
        Command::Oracle { m, n, bar, list } => cmd_oracle(cli.format, cli.threads, m, n, bar, list),
        Command::Verify { suite, level } => cmd_verify(cli.format, &suite, &level),
        Command::Bfile { k, max } => cmd_bfile(cli.format, k, max),
    }
}

fn cmd_count(format: Format, k: u32, n: usize, a: &BigInt, b: &BigInt, weighted: bool) -> ExitCode {
    if k < 2 {
        return usage("--k must be at least 2");
    }
    if weighted {
        let gf = match f_main(k) {
            Ok(gf) => gf,
            Err(e) => return usage(&e.to_string()),
        };
        let series = rational_to_series(&gf, n);
        let poly = series.coeff(n);
        match format {
            Format::Text => println!("{poly}"),
            Format::Json => print_json(&json!({
                "k": k,
                "n": n,
                "weighted": poly.to_json(),
            })),
        }
        return ExitCode::SUCCESS;
    }
    match big_count_at(k, n, a, b) {
        Ok(value) => {
            match format {
                Format::Text => println!("{value}"),
                Format::Json => print_json(&json!({
                    "k": k,
                    "n": n,
                    "a": a.to_string(),
                    "b": b.to_string(),
                    "count": value.to_string(),
                })),
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage(&e.to_string()),
    }
}

fn cmd_gf(format: Format, k: u32, terms: Option<usize>) -> ExitCode {
    if k < 2 {
        return usage("--k must be at least 2");
    }
    let gf = match f_main(k) {
        Ok(gf) => gf,
        Err(e) => return usage(&e.to_string()),
    };
    // The width-2 construction carries one shared linear factor; display the
    // reduced pair. The series below comes from the original fraction, whose
    // value the cancellation does not change.
    let mut num = gf.num().clone();
    let mut den = gf.den().clone();
    if k == 2 {
        let shared = XPoly::from_coeffs(vec![BiPoly::one(), BiPoly::monomial_i64(-1, 0, 2)]);
        if let (Some(n2), Some(d2)) = (num.div_exact(&shared), den.div_exact(&shared)) {
            num = n2;
            den = d2;
        }
    }
    match format {
        Format::Text => {
            println!("numerator: {num}");
            println!("denominator: {den}");
            if let Some(order) = terms {
                let series = rational_to_series(&gf, order);
                for n in 0..=order {
                    println!("x^{n}: {}", series.coeff(n));
                }
            }
        }
        Format::Json => {
            let mut doc = json!({
                "k": k,
                "numerator": num.to_json(),
                "denominator": den.to_json(),
            });
            if let Some(order) = terms {
                let series = rational_to_series(&gf, order);
                let coeffs: Vec<serde_json::Value> =
                    (0..=order).map(|n| series.coeff(n).to_json()).collect();
                doc["series"] = serde_json::Value::Array(coeffs);
            }
            print_json(&doc);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_oracle(format: Format, threads: usize, m: u32, n: u32, bar: u32, list: bool) -> ExitCode {
    if bar < 1 {
        return usage("--bar must be at least 1");
    }
    let caps = Caps::from_env();
    if list {
        // identical JSON lines in both formats; the stream already is JSON
        let mut emit = |t: &bartiler::oracle::Tiling| println!("{}", t.to_json());
        return match visit_tilings(m, n, bar, &caps, &mut emit) {
            Ok(_) => ExitCode::SUCCESS,
            Err(e) => usage(&e.to_string()),
        };
    }
    match count_tilings_with(m, n, bar, &caps, threads) {
        Ok(poly) => {
            let unit = poly.eval(&BigInt::from(1), &BigInt::from(1));
            match format {
                Format::Text => println!("{unit}"),
                Format::Json => print_json(&json!({
                    "m": m,
                    "n": n,
                    "bar": bar,
                    "count": unit.to_string(),
                    "weighted": poly.to_json(),
                })),
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage(&e.to_string()),
    }
}

fn cmd_verify(format: Format, suite: &str, level: &str) -> ExitCode {
    let suite = match Suite::parse(suite) {
        Some(s) => s,
        None => return usage("--suite must be one of all, fn, det, hadamard, oracle, srht"),
    };
    let level = match Level::parse(level) {
        Some(l) => l,
        None => return usage("--level must be quick or full"),
    };
    let checks = run(suite, level);
    let all_passed = checks.iter().all(|c| c.passed);
    match format {
        Format::Text => {
            for c in &checks {
                if c.passed {
                    println!("PASS {} [{}]", c.name, c.detail);
                } else {
                    println!("FAIL {}: {}", c.name, c.detail);
                }
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed,
                        "detail": c.detail,
                    })
                })
                .collect();
            print_json(&json!({
                "checks": rows,
                "all_passed": all_passed,
            }));
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_bfile(format: Format, k: u32, max: usize) -> ExitCode {
    if k < 2 {
        return usage("--k must be at least 2");
    }
    let gf = match f_main(k) {
        Ok(gf) => gf,
        Err(e) => return usage(&e.to_string()),
    };
    let one = BigInt::from(1);
    let num = gf.num().eval_ab(&one, &one);
    let den = gf.den().eval_ab(&one, &one);
    // den[0] = 1 by the rational-form invariant
    let d = den.len() - 1;
    let mut values: Vec<BigInt> = Vec::with_capacity(max + 1);
    for i in 0..=max {
        let mut c = num.get(i).cloned().unwrap_or_else(BigInt::zero);
        for j in 1..=d.min(i) {
            if !den[j].is_zero() {
                c -= &den[j] * &values[i - j];
            }
        }
        values.push(c);
    }
    match format {
        Format::Text => {
            for (n, v) in values.iter().enumerate() {
                println!("{n} {v}");
            }
        }
        Format::Json => {
            let rows: Vec<String> = values.iter().map(BigInt::to_string).collect();
            print_json(&json!({
                "k": k,
                "max": max,
                "values": rows,
            }));
        }
    }
    ExitCode::SUCCESS
}
