//! `leibnitz`: compute Leibnitz-type numbers, print their tables and series,
//! and run the exact identity suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

mod table;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use leibnitz::generalized::{gen_leibnitz, gen_leibnitz_symbolic, specialize_classical};
use leibnitz::kernel::{parse_rational, parse_rational_list, render};
use leibnitz::series::{family_series, solve_gf_leibnitz};
use leibnitz::special::{changhee, daehee, leibnitz as leibnitz_number, y_number, LeibnitzTriangle, NumberFamily};
use leibnitz::suite::{self, corrupted_check, registry, run_checks, RunConfig, VerificationReport};
use leibnitz::volkenborn::{volkenborn_falling_product, volkenborn_integral_poly};
use leibnitz::{Error, Rational, UniPoly};
use serde_json::json;

use table::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(alias = "markdown")]
    Md,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "leibnitz", version, about = "Exact Leibnitz numbers, tables, series and identity checks")]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: Format,

    /// Largest index used by verification runs.
    #[arg(long, global = true, default_value_t = 20)]
    depth: usize,

    /// Sample points for t, e.g. "1, 2, -1/2".
    #[arg(long = "t-samples", global = true, allow_hyphen_values = true)]
    t_samples: Option<String>,

    /// Sample points for lambda, e.g. "-1, 2, 5/2".
    #[arg(long = "lambda-samples", global = true, allow_hyphen_values = true)]
    lambda_samples: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a single number.
    Num {
        #[command(subcommand)]
        family: NumCommand,
    },
    /// Print a table of values.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        /// Largest n (defaults follow each table's standard shape).
        n_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Run registered identity checks (all of them when no id is given).
    Verify {
        ids: Vec<String>,
        /// Adds a deliberately failing check to exercise the failure path.
        #[arg(long, hide = true)]
        self_test_fault: bool,
    },
    /// Dump generating-function coefficients, one line per power of u.
    Series {
        #[arg(value_enum)]
        which: SeriesKind,
        order: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Volkenborn integrals of polynomials.
    Volkenborn {
        #[command(subcommand)]
        sub: VolkenbornCommand,
    },
}

#[derive(Subcommand, Debug)]
enum NumCommand {
    Leibnitz { n: usize, k: usize },
    Daehee { n: usize },
    Changhee { n: usize },
    Y {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    Gen {
        n: usize,
        k: usize,
        #[arg(allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
        /// Print L(n,k;a,b) as a polynomial in a and b.
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Triangle,
    GenK1,
    GenK2,
    GenMatrix,
    ClassicalMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Leibnitz,
    Daehee,
    Changhee,
    Y,
}

#[derive(Subcommand, Debug)]
enum VolkenbornCommand {
    /// Integral of the polynomial with the given coefficients (constant term first).
    Poly {
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Integral of x_(n) x_(m).
    Product { n: usize, m: usize },
    /// Check the falling-factorial product representation of L_n(t) up to --depth.
    CheckA11,
    /// Check the closed double-sum representation of L_n(t) up to --depth.
    CheckKi1,
}

/// What a command produced: text for stdout plus the exit status.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Num { family } => cmd_num(family, cli.format).map(Output::ok),
        Command::Table { which, n_max, k_max } => Ok(Output::ok(cmd_table(*which, *n_max, *k_max)?.render(cli.format))),
        Command::Verify { ids, self_test_fault } => cmd_verify(cli, ids, *self_test_fault),
        Command::Series { which, order, lambda } => cmd_series(*which, *order, lambda.as_deref(), cli.format).map(Output::ok),
        Command::Volkenborn { sub } => cmd_volkenborn(cli, sub),
    }
}

fn value_output(format: Format, label: &str, value: String) -> String {
    match format {
        Format::Json => json!({ "quantity": label, "value": value }).to_string(),
        Format::Md | Format::Csv => value,
    }
}

fn cmd_num(family: &NumCommand, format: Format) -> Result<String, Error> {
    let (label, value) = match family {
        NumCommand::Leibnitz { n, k } => (format!("l({n},{k})"), render(&leibnitz_number(*n, *k)?)),
        NumCommand::Daehee { n } => (format!("D_{n}"), render(&daehee(*n))),
        NumCommand::Changhee { n } => (format!("Ch_{n}"), render(&changhee(*n))),
        NumCommand::Y { n, lambda } => {
            let lambda = parse_rational(lambda)?;
            (format!("Y_{n}({})", render(&lambda)), render(&y_number(*n, &lambda)?))
        }
        NumCommand::Gen { n, k, a, b, symbolic } => {
            let label = format!("L({n},{k};a,b)");
            if *symbolic {
                (label, gen_leibnitz_symbolic(*n, *k)?.render())
            } else {
                let (Some(a), Some(b)) = (a, b) else {
                    return Err(Error::EmptySamples("gen needs a and b unless --symbolic is given"));
                };
                let (a, b) = (parse_rational(a)?, parse_rational(b)?);
                (label, render(&gen_leibnitz(*n, *k, &a, &b)?))
            }
        }
    };
    Ok(value_output(format, &label, value))
}

fn cmd_table(which: TableKind, n_max: Option<usize>, k_max: Option<usize>) -> Result<Table, Error> {
    let index_cols = |k_max: usize| (0..=k_max).map(|k| k.to_string()).collect::<Vec<_>>();
    match which {
        TableKind::Triangle => {
            let n_max = n_max.unwrap_or(8);
            let k_max = k_max.unwrap_or(n_max);
            let tri = LeibnitzTriangle::build(n_max);
            let rows = (0..=n_max)
                .map(|n| {
                    let cells = (0..=k_max)
                        .map(|k| tri.get(n, k).map(render).unwrap_or_default())
                        .collect();
                    (n.to_string(), cells)
                })
                .collect();
            Ok(Table { name: "triangle".into(), corner: "n \\ k".into(), columns: index_cols(k_max), rows })
        }
        TableKind::ClassicalMatrix => {
            let n_max = n_max.unwrap_or(8);
            let k_max = k_max.unwrap_or(n_max);
            matrix("classical-matrix", n_max, k_max, |n, k| specialize_classical(n, k).map(|v| render(&v)))
        }
        TableKind::GenMatrix => {
            let n_max = n_max.unwrap_or(3);
            let k_max = k_max.unwrap_or(2);
            matrix("gen-matrix", n_max, k_max, |n, k| gen_leibnitz_symbolic(n, k).map(|p| p.render()))
        }
        TableKind::GenK1 | TableKind::GenK2 => {
            let k = if which == TableKind::GenK1 { 1 } else { 2 };
            let n_max = n_max.unwrap_or(4);
            let rows = (0..=n_max)
                .map(|n| {
                    let cell = if k > n { String::new() } else { gen_leibnitz_symbolic(n, k)?.render() };
                    Ok((n.to_string(), vec![cell]))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let name = if k == 1 { "gen-k1" } else { "gen-k2" };
            Ok(Table { name: name.into(), corner: "n".into(), columns: vec![format!("L(n,{k};a,b)")], rows })
        }
    }
}

fn matrix(
    name: &str,
    n_max: usize,
    k_max: usize,
    cell: impl Fn(usize, usize) -> Result<String, Error>,
) -> Result<Table, Error> {
    let rows = (0..=n_max)
        .map(|n| {
            let cells = (0..=k_max)
                .map(|k| if k > n { Ok(String::new()) } else { cell(n, k) })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok((n.to_string(), cells))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Table {
        name: name.into(),
        corner: "n \\ k".into(),
        columns: (0..=k_max).map(|k| k.to_string()).collect(),
        rows,
    })
}

fn run_config(cli: &Cli) -> Result<RunConfig, Error> {
    let mut config = RunConfig::new(cli.depth);
    if let Some(t) = &cli.t_samples {
        config = config.with_t_samples(parse_rational_list(t)?);
    }
    if let Some(l) = &cli.lambda_samples {
        config = config.with_lambda_samples(parse_rational_list(l)?);
    }
    Ok(config)
}

fn report_output(report: &VerificationReport, format: Format) -> Output {
    let text = match format {
        Format::Md => report.to_markdown(),
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    Output { text, code: if report.all_passed() { 0 } else { 1 } }
}

fn cmd_verify(cli: &Cli, ids: &[String], self_test_fault: bool) -> Result<Output, Error> {
    let mut checks = if ids.is_empty() {
        registry()
    } else {
        ids.iter().map(|id| suite::find(id)).collect::<Result<Vec<_>, _>>()?
    };
    if self_test_fault {
        checks.push(corrupted_check());
    }
    let report = run_checks(&checks, &run_config(cli)?)?;
    Ok(report_output(&report, cli.format))
}

fn cmd_series(which: SeriesKind, order: usize, lambda: Option<&str>, format: Format) -> Result<String, Error> {
    let coeffs: Vec<String> = match which {
        SeriesKind::Leibnitz => solve_gf_leibnitz(order)?.iter().map(|p| p.render("t")).collect(),
        SeriesKind::Daehee | SeriesKind::Changhee | SeriesKind::Y => {
            let family = match which {
                SeriesKind::Daehee => NumberFamily::Daehee,
                SeriesKind::Changhee => NumberFamily::Changhee,
                _ => NumberFamily::Y,
            };
            let lambda = match (family, lambda) {
                (NumberFamily::Y, None) => return Err(Error::EmptySamples("series y needs --lambda")),
                (NumberFamily::Y, Some(l)) => Some(parse_rational(l)?),
                _ => None,
            };
            family_series(family, order, lambda.as_ref())?
                .coeffs()
                .iter()
                .map(|p| render(&p.coeff(0)))
                .collect()
        }
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({ "coefficients": coeffs })).expect("serializes"),
        Format::Md | Format::Csv => coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| format!("u^{n}: {c}\n"))
            .collect(),
    })
}

fn cmd_volkenborn(cli: &Cli, sub: &VolkenbornCommand) -> Result<Output, Error> {
    match sub {
        VolkenbornCommand::Poly { coeffs } => {
            let coeffs = coeffs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<Rational>, _>>()?;
            let value = volkenborn_integral_poly(&UniPoly::from_coeffs(coeffs));
            Ok(Output::ok(value_output(cli.format, "volkenborn integral", render(&value))))
        }
        VolkenbornCommand::Product { n, m } => {
            let value = volkenborn_falling_product(*n, *m);
            Ok(Output::ok(value_output(cli.format, "volkenborn product", render(&value))))
        }
        VolkenbornCommand::CheckA11 | VolkenbornCommand::CheckKi1 => {
            let id = if matches!(sub, VolkenbornCommand::CheckA11) { "V-A11" } else { "V-KI1" };
            let report = run_checks(&[suite::find(id)?], &run_config(cli)?)?;
            Ok(report_output(&report, cli.format))
        }
    }
}
