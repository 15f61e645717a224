//! `sylowrestrict`: character values, LR coefficients, Sylow restrictions
//! and verification campaigns from the command line.
//!
//! Exit status is 0 on success, 1 when a campaign finds a counterexample or
//! a computation runs out of budget, and 2 for usage errors.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use sylowrestrict::characters::{
    an_value_at, degree, is_odd_degree, mn_value, nu_p_degree, CycleType, SignChoice,
};
use sylowrestrict::lr::{lr_coefficient_with_cap, DEFAULT_WITNESS_CAP};
use sylowrestrict::restriction::{
    default_suite, CampaignParams, RestrictionContext, Statement, VerifyOptions,
};
use sylowrestrict::sylow::{default_budget, Ambient, Perm};
use sylowrestrict::{Error, Partition};

use output::{Format, Record, Sink};

/// Largest partition size accepted for direct character evaluation.
const MAX_EVAL_SIZE: usize = 60;

#[derive(Parser, Debug)]
#[command(
    name = "sylowrestrict",
    version,
    about = "Characters of symmetric groups restricted to Sylow subgroups"
)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// χ^λ on a cycle type, or φ^λ_± of A_n at a permutation.
    CharEval {
        lambda: String,
        /// Cycle type, e.g. `2,2`.
        class: Option<String>,
        /// Evaluate at this permutation instead, e.g. `(1 2 3)(4 5)`.
        #[arg(long, conflicts_with = "class")]
        perm: Option<String>,
        /// Half of a split character, for λ = λ'.
        #[arg(long, requires = "perm", value_parser = parse_sign)]
        sign: Option<SignChoice>,
    },
    /// χ^λ(1), optionally with its p-adic valuation.
    Degree {
        lambda: String,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Hook lengths of every node, optionally only those divisible by e.
    Hooks {
        lambda: String,
        #[arg(long)]
        e: Option<usize>,
    },
    /// e-core and e-quotient.
    CoreQuotient {
        lambda: String,
        #[arg(long)]
        e: usize,
    },
    /// The partition left after removing both hooks of length |λ|/2.
    Delta2 { lambda: String },
    /// Littlewood–Richardson coefficient C^λ_{μν} with witnesses.
    Lr {
        lambda: String,
        mu: String,
        nu: String,
        /// Number of witness fillings to print.
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        witnesses: usize,
    },
    /// Linear constituents of χ^λ (or φ^λ_±) restricted to P_n or Q_n.
    Restrict {
        lambda: String,
        #[arg(long)]
        p: usize,
        /// Must equal |λ| when given.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_ambient, default_value = "P")]
        group: Ambient,
        #[arg(long, value_parser = parse_sign)]
        sign: Option<SignChoice>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run verification campaigns.
    Verify {
        /// Statement id; repeat for several.
        #[arg(long, required_unless_present = "all")]
        statement: Vec<String>,
        /// Every statement over its default range.
        #[arg(long, conflicts_with_all = ["statement", "p", "n", "k"])]
        all: bool,
        #[arg(long)]
        p: Option<usize>,
        /// Values of n: `1..13`, `12,14,20` or a mix.
        #[arg(long, value_parser = parse_range)]
        n: Option<Values>,
        /// Values of k, in the same syntax.
        #[arg(long, value_parser = parse_range)]
        k: Option<Values>,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Report 0 ms so identical runs give identical bytes.
        #[arg(long)]
        no_timing: bool,
    },
}

/// A failed command with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) | Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn parse_sign(s: &str) -> Result<SignChoice, String> {
    match s {
        "+" | "plus" => Ok(SignChoice::Plus),
        "-" | "minus" => Ok(SignChoice::Minus),
        _ => Err(format!("sign must be + or -, got {s:?}")),
    }
}

fn parse_ambient(s: &str) -> Result<Ambient, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A list of integers given as ranges and single values.
#[derive(Clone, Debug)]
struct Values(Vec<usize>);

/// `a..b` and `a..=b` are inclusive; pieces may be joined with commas.
fn parse_range(s: &str) -> Result<Values, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a number: {t:?}"))
    };
    let mut out = Vec::new();
    for piece in s.split(',') {
        if let Some((a, b)) = piece.split_once("..") {
            let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
            if a > b {
                return Err(format!("empty range {piece:?}"));
            }
            out.extend(a..=b);
        } else {
            out.push(num(piece)?);
        }
    }
    if out.is_empty() {
        return Err("empty range".into());
    }
    Ok(Values(out))
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
fn integer(v: impl ToPrimitive + ToString) -> Value {
    match (v.to_i64(), v.to_u64()) {
        (Some(x), _) => Value::from(x),
        (_, Some(x)) => Value::from(x),
        _ => Value::String(v.to_string()),
    }
}

fn evaluable(lambda: &Partition) -> Result<(), Failure> {
    if lambda.size() > MAX_EVAL_SIZE {
        return Err(usage(format!(
            "|λ| = {} exceeds the supported size {MAX_EVAL_SIZE}",
            lambda.size()
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|info| {
        eprintln!("sylowrestrict: internal error: {info}")
    }));
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(f)) => {
            eprintln!("sylowrestrict: {}", f.message);
            ExitCode::from(f.code)
        }
        Err(_) => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut sink = Sink::open(cli.out.as_deref())?;
    let format = cli.format;
    match cli.command {
        Command::CharEval {
            lambda,
            class,
            perm,
            sign,
        } => {
            let lambda = partition(&lambda)?;
            evaluable(&lambda)?;
            let record = match (class, perm) {
                (Some(class), None) => {
                    let class: CycleType = partition(&class)?;
                    let value = mn_value(&lambda, &class)?;
                    Record::new(
                        json!({ "lambda": lambda, "class": class, "value": integer(value) }),
                    )
                    .text(value.to_string())
                    .csv(
                        ["lambda", "class", "value"],
                        vec![vec![
                            lambda.to_string(),
                            class.to_string(),
                            value.to_string(),
                        ]],
                    )
                }
                (None, Some(perm)) => {
                    let g: Perm = perm.parse()?;
                    let n = lambda.size();
                    if g.degree() > n {
                        return Err(usage(format!("{g} moves points beyond {n}")));
                    }
                    let g = g.embed(n, 0);
                    let class = g.cycle_type();
                    match sign {
                        Some(s) => {
                            let value = an_value_at(&lambda, s, &g)?;
                            let label = format!("{lambda}{}", s.symbol());
                            Record::new(json!({ "character": label, "perm": g.to_string(), "class": class, "value": value }))
                                .text(value.to_string())
                                .csv(["character", "perm", "value"], vec![vec![label, g.to_string(), value.to_string()]])
                        }
                        None => {
                            let value = mn_value(&lambda, &class)?;
                            Record::new(json!({ "lambda": lambda, "perm": g.to_string(), "class": class, "value": integer(value) }))
                                .text(value.to_string())
                                .csv(["lambda", "perm", "value"], vec![vec![lambda.to_string(), g.to_string(), value.to_string()]])
                        }
                    }
                }
                _ => return Err(usage("give a cycle type or --perm")),
            };
            sink.single(&record, format.unwrap_or(Format::Text))?;
        }
        Command::Degree { lambda, p } => {
            let lambda = partition(&lambda)?;
            evaluable(&lambda)?;
            let d = degree(&lambda);
            let mut value = json!({ "lambda": lambda, "degree": integer(d.clone()), "odd": is_odd_degree(&lambda) });
            let mut row = vec![lambda.to_string(), d.to_string()];
            if let Some(p) = p {
                if p < 2 {
                    return Err(usage("--p must be at least 2"));
                }
                let v = nu_p_degree(&lambda, p);
                value["p"] = json!(p);
                value["valuation"] = json!(v);
                row.push(v.to_string());
            }
            let header: Vec<&str> = ["lambda", "degree", "valuation"][..row.len()].to_vec();
            let record = Record::new(value)
                .text(d.to_string())
                .csv(header, vec![row]);
            sink.single(&record, format.unwrap_or(Format::Text))?;
        }
        Command::Hooks { lambda, e } => {
            let lambda = partition(&lambda)?;
            let hooks = match e {
                Some(0) => return Err(usage("--e must be positive")),
                Some(e) => lambda.hooks_divisible(e),
                None => lambda.hooks(),
            };
            let width = hooks
                .iter()
                .map(|h| h.length.to_string().len())
                .max()
                .unwrap_or(1);
            let grid: Vec<String> = (1..=lambda.len())
                .map(|r| {
                    (1..=lambda.part(r - 1))
                        .map(|c| match hooks.iter().find(|h| h.row == r && h.col == c) {
                            Some(h) => format!("{:>width$}", h.length),
                            None => format!("{:>width$}", "."),
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            let rows = hooks
                .iter()
                .map(|h| {
                    vec![
                        h.row.to_string(),
                        h.col.to_string(),
                        h.length.to_string(),
                        h.arm.to_string(),
                        h.leg.to_string(),
                    ]
                })
                .collect();
            let record = Record::new(json!({ "lambda": lambda, "hooks": hooks }))
                .text(grid.join("\n"))
                .csv(["row", "col", "length", "arm", "leg"], rows);
            sink.single(&record, format.unwrap_or(Format::Json))?;
        }
        Command::CoreQuotient { lambda, e } => {
            if e < 2 {
                return Err(usage("--e must be at least 2"));
            }
            let lambda = partition(&lambda)?;
            let cq = lambda.core_quotient(e);
            let quotient: Vec<String> = cq.quotient.iter().map(Partition::to_string).collect();
            let text = format!(
                "core {}\nquotient ({})\nweight {}",
                cq.core,
                quotient.join("; "),
                cq.weight
            );
            let record = Record::new(json!({ "lambda": lambda, "e": e, "core": cq.core, "quotient": cq.quotient, "weight": cq.weight }))
                .text(text)
                .csv(["lambda", "e", "core", "quotient", "weight"], vec![vec![
                    lambda.to_string(),
                    e.to_string(),
                    cq.core.to_string(),
                    quotient.join(";"),
                    cq.weight.to_string(),
                ]]);
            sink.single(&record, format.unwrap_or(Format::Json))?;
        }
        Command::Delta2 { lambda } => {
            let lambda = partition(&lambda)?;
            let d = lambda.delta2()?;
            let record = Record::new(json!({ "lambda": lambda, "delta2": d }))
                .text(d.to_string())
                .csv(
                    ["lambda", "delta2"],
                    vec![vec![lambda.to_string(), d.to_string()]],
                );
            sink.single(&record, format.unwrap_or(Format::Text))?;
        }
        Command::Lr {
            lambda,
            mu,
            nu,
            witnesses,
        } => {
            let (lambda, mu, nu) = (partition(&lambda)?, partition(&mu)?, partition(&nu)?);
            let result = lr_coefficient_with_cap(&lambda, &mu, &nu, witnesses)?;
            let mut text = format!("C^{lambda}_{{{mu},{nu}}} = {}", result.coefficient);
            for w in &result.witnesses {
                text.push_str("\n\n");
                text.push_str(w.render().trim_end());
            }
            let rows = result
                .witnesses
                .iter()
                .map(|w| vec![w.rows().join("/")])
                .collect::<Vec<_>>();
            let mut csv_rows = vec![vec![
                lambda.to_string(),
                mu.to_string(),
                nu.to_string(),
                result.coefficient.to_string(),
                String::new(),
            ]];
            csv_rows.extend(rows.into_iter().map(|r| {
                vec![
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    r[0].clone(),
                ]
            }));
            let record = Record::new(json!({
                "lambda": lambda, "mu": mu, "nu": nu,
                "coefficient": result.coefficient, "witnesses": result.witnesses,
            }))
            .text(text)
            .csv(["lambda", "mu", "nu", "coefficient", "witness"], csv_rows);
            sink.single(&record, format.unwrap_or(Format::Json))?;
        }
        Command::Restrict {
            lambda,
            p,
            n,
            group,
            sign,
            budget,
        } => {
            let lambda = partition(&lambda)?;
            if let Some(n) = n {
                if n != lambda.size() {
                    return Err(usage(format!("--n {n} but |λ| = {}", lambda.size())));
                }
            }
            if sign.is_some() && !lambda.is_self_conjugate() {
                return Err(usage(format!(
                    "--sign needs a self-conjugate partition, and {lambda} is not"
                )));
            }
            let ctx = RestrictionContext::new(
                lambda.size(),
                p,
                group,
                budget.unwrap_or_else(default_budget),
            )?;
            let report = ctx.restrict(&lambda, sign)?;
            report.check_invariants()?;
            let mut text = format!(
                "{} restricted to {}_{} (p = {}): degree {}, {} distinct linear constituents, residual degree {}\n",
                report.character(),
                report.group,
                report.n,
                report.p,
                report.degree,
                report.distinct_count,
                report.residual_degree
            );
            for m in &report.multiplicities {
                text.push_str(&format!(
                    "  {:<24} {}\n",
                    m.label.to_string(),
                    m.multiplicity
                ));
            }
            let rows = report
                .multiplicities
                .iter()
                .map(|m| vec![m.label.to_string(), m.multiplicity.to_string()])
                .collect();
            let record = Record::new(serde_json::to_value(&report).expect("report serializes"))
                .text(text.trim_end().to_string())
                .csv(["label", "multiplicity"], rows);
            sink.single(&record, format.unwrap_or(Format::Json))?;
        }
        Command::Verify {
            statement,
            all,
            p,
            n,
            k,
            budget,
            workers,
            no_timing,
        } => {
            if workers == 0 {
                return Err(usage("--workers must be at least 1"));
            }
            let runs = if all {
                default_suite()
            } else {
                let k: Option<Vec<u32>> = k
                    .map(|ks| {
                        ks.0.into_iter()
                            .map(|k| {
                                u32::try_from(k)
                                    .ok()
                                    .filter(|&k| k < 32)
                                    .ok_or_else(|| usage(format!("k = {k} is too large")))
                            })
                            .collect::<Result<_, _>>()
                    })
                    .transpose()?;
                let mut runs: Vec<(Statement, CampaignParams)> = Vec::new();
                for id in &statement {
                    let s: Statement = id.parse()?;
                    for params in s.params(p, n.as_ref().map(|v| v.0.clone()), k.clone())? {
                        runs.push((s, params));
                    }
                }
                runs
            };
            let options = VerifyOptions {
                budget: budget.unwrap_or_else(default_budget),
                workers,
                keep_reports: false,
                no_timing,
            };
            let format = format.unwrap_or(Format::Json);
            let mut all_pass = true;
            sink.begin_outcomes(format)?;
            for (s, params) in runs {
                let outcome = s.run(&params, &options)?;
                all_pass &= outcome.pass;
                sink.outcome(&outcome, format)?;
            }
            return Ok(if all_pass { 0 } else { 1 });
        }
    }
    Ok(0)
}
