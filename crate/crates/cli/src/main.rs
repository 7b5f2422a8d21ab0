use std::fmt::Write as _;
use std::process::ExitCode;

use artin_core::artin::{growth_rows, residual_reports};
use artin_core::certificate::groebner_certificate;
use artin_core::ideal::{generator, s_polynomial, DEFAULT_MAX_STEPS};
use artin_core::series::{
    divergence_certificate, has_factorial_coefficients, residual, rows, solve_flat_counterexample,
};
use artin_core::{parse_polynomial, GeneratorId, Polynomial, RElement, Rational, Reducer};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

/// Environment variable overriding the reducer's step ceiling.
const MAX_STEPS_VAR: &str = "ARTIN_MAX_STEPS";

#[derive(Debug, Parser)]
#[command(name = "artin", version, about = "Exact checks in a binomial quotient algebra and its power series")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form of a polynomial modulo the ideal.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Quotient-norm bound (and exact norm where known) of a polynomial's class.
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// S-polynomial of two generators, e.g. `spoly F1 F2` or `spoly G0,1 F2`.
    Spoly { id1: String, id2: String },
    /// Check the Groebner-basis certificate for generators with w index <= N.
    GroebnerVerify {
        #[arg(long, default_value_t = 25)]
        max_index: u32,
    },
    /// Divide a class by x.
    DivideX {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Solve (x - y*t)*f = z^2 to order K and certify divergence.
    SolveSeries {
        #[arg(long, default_value_t = 20)]
        order: usize,
        /// Find the least k with ||f_k|| >= bound^k.
        #[arg(long, default_value = "10", value_parser = parse_rational)]
        bound: Rational,
    },
    /// Residual orders of the approximate solutions built from sqrt(1+t).
    StrongArtin {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        example: u8,
        #[arg(long, default_value_t = 12)]
        c_max: u32,
    },
    /// The norms ||x^(k!)||_2 = 2^(k!).
    Remark {
        #[arg(long, default_value_t = 5)]
        k_max: u32,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("not a rational number: {e}"))
}

/// A finished report; `pass` decides the exit code.
struct Report {
    text: String,
    json: Value,
    pass: bool,
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// The computation itself could not finish: exit 1.
    Runtime(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn runtime<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Runtime(e.to_string())
}

fn reducer() -> Result<Reducer, Failure> {
    match std::env::var(MAX_STEPS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|n| Reducer::default().with_max_steps(n))
            .map_err(|_| Failure::Usage(format!("{MAX_STEPS_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(Reducer::default().with_max_steps(DEFAULT_MAX_STEPS)),
    }
}

fn parse_expr(expr: &str) -> Result<Polynomial, Failure> {
    parse_polynomial(expr).map_err(usage)
}

fn run(command: Command) -> Result<Report, Failure> {
    let reducer = reducer()?;
    match command {
        Command::Nf { expr } => {
            let p = parse_expr(&expr)?;
            let (nf, trace) = reducer.normal_form(&p).map_err(runtime)?;
            Ok(Report {
                text: format!("{nf}\n"),
                json: json!({
                    "input": p.to_string(),
                    "normal_form": nf.to_string(),
                    "steps": trace.steps.len(),
                }),
                pass: true,
            })
        }
        Command::Norm { expr } => {
            let p = parse_expr(&expr)?;
            let r = RElement::project_with(&p, &reducer).map_err(runtime)?;
            let exact = r.exact_norm();
            let mut text = format!("normal form: {r}\nnorm <= {}\n", r.norm_upper_bound());
            if let Some(e) = &exact {
                let _ = writeln!(text, "norm = {e} (exact)");
            }
            Ok(Report {
                text,
                json: json!({
                    "normal_form": r.to_string(),
                    "norm_bound": r.norm_upper_bound().to_string(),
                    "exact_norm": exact.map(|e| e.to_string()),
                }),
                pass: true,
            })
        }
        Command::Spoly { id1, id2 } => {
            let a: GeneratorId = id1.parse().map_err(usage)?;
            let b: GeneratorId = id2.parse().map_err(usage)?;
            let s = s_polynomial(&generator(a).map_err(usage)?, &generator(b).map_err(usage)?)
                .map_err(runtime)?;
            let (nf, _) = reducer.normal_form(&s).map_err(runtime)?;
            Ok(Report {
                text: format!("S({a},{b}) = {s}\nnormal form: {nf}\n"),
                json: json!({
                    "pair": [a.to_string(), b.to_string()],
                    "s_polynomial": s.to_string(),
                    "normal_form": nf.to_string(),
                }),
                pass: true,
            })
        }
        Command::GroebnerVerify { max_index } => {
            let report = groebner_certificate(max_index, &reducer).map_err(runtime)?;
            let failures: Vec<_> = report.entries.iter().filter(|e| !e.pass).collect();
            Ok(Report {
                text: report.to_text(),
                json: json!({ "summary": report.summary, "failures": failures }),
                pass: report.summary.all_pass,
            })
        }
        Command::DivideX { expr } => {
            let p = parse_expr(&expr)?;
            let r = RElement::project_with(&p, &reducer).map_err(runtime)?;
            let h = r.divide_by_x().map_err(runtime)?;
            let text = match &h {
                Some(h) => format!("{h}\n"),
                None => format!("{r} is not a multiple of x\n"),
            };
            Ok(Report {
                text,
                json: json!({
                    "input": r.to_string(),
                    "divisible": h.is_some(),
                    "quotient": h.as_ref().map(|h| h.to_string()),
                }),
                pass: h.is_some(),
            })
        }
        Command::SolveSeries { order, bound } => solve_series(order, &bound),
        Command::StrongArtin { example, c_max } => {
            let reports = residual_reports(example, c_max).map_err(usage)?;
            let mut text = format!("example {example}: residual t-order vs guaranteed bound\n");
            for r in &reports {
                let order = if r.order < 0 { "inf".to_string() } else { r.order.to_string() };
                let _ = writeln!(
                    text,
                    "c={:<3} order={:<4} bound={:<4} {}  leading: {}",
                    r.c,
                    order,
                    r.bound,
                    pass_word(r.pass),
                    r.leading
                );
            }
            let pass = reports.iter().all(|r| r.pass);
            Ok(Report { text, json: json!(reports), pass })
        }
        Command::Remark { k_max } => {
            let table = growth_rows(k_max).map_err(usage)?;
            let mut text = String::from("k  k!   ||x^(k!)||_2\n");
            for r in &table {
                let _ = writeln!(text, "{:<2} {:<4} {}", r.k, r.exponent, r.norm);
            }
            Ok(Report { text, json: json!(table), pass: true })
        }
    }
}

fn solve_series(order: usize, bound: &Rational) -> Result<Report, Failure> {
    let f = solve_flat_counterexample(order).map_err(runtime)?;
    let res = residual(&f).map_err(runtime)?;
    let factorial = has_factorial_coefficients(&f);
    let cert = divergence_certificate(&f, bound).map_err(usage)?;
    let table = rows(&f);

    let mut text = String::new();
    for r in &table {
        let _ = writeln!(text, "f_{} = {}   norm {}", r.k, r.coeff, r.norm);
    }
    let _ = writeln!(text, "residual through t^{order}: {}", if res.is_zero() { "0" } else { "NONZERO" });
    let _ = writeln!(text, "f_k = k!*w_k for all k <= {order}: {}", pass_word(factorial));
    match cert.least_k {
        Some(k) => {
            let _ = writeln!(text, "least k with ||f_k|| >= {bound}^k: {k}");
        }
        None => {
            let _ = writeln!(text, "no k <= {order} with ||f_k|| >= {bound}^k");
        }
    }
    Ok(Report {
        text,
        json: json!({
            "order": order,
            "coefficients": table,
            "residual_zero": res.is_zero(),
            "factorial_coefficients": factorial,
            "divergence": cert,
        }),
        pass: res.is_zero() && factorial,
    })
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize"));
            } else {
                print!("{}", report.text);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
