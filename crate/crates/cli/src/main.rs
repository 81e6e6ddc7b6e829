//! `watercap`: capacity statistics on compositions with parts 1 and 2.
//!
//! Exit status is 0 on success, 1 when a verification suite fails and 2 on
//! any usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use watercap::algebra::{TriPoly, DEFAULT_ORDER};
use watercap::closed_forms::{self, ClosedForms, FormulaConstants};
use watercap::genfunc::{self, ModelParams, MODELS};
use watercap::recurrences::{b_seq_rec3, bpq_seq, d_seq_rec2};
use watercap::verify::{self, Bounds, VerifyReport, SUITES};
use watercap::Composition;

const MAX_DIST_Y: u32 = 1000;
const MAX_DIST_YPQ: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Vars {
    Y,
    Ypq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqName {
    Fib,
    Lucas,
    D,
    W0,
    Totcap,
    Signbal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    Wnk,
    Bnkj,
}

#[derive(Parser)]
#[command(
    name = "watercap",
    version,
    about = "Water-cell capacity of compositions with parts 1 and 2"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Largest n to compute (each command has its own default).
    #[arg(long, global = true)]
    n_max: Option<u32>,
    /// Series truncation order.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Perturb one closed-form constant before verifying.
    #[arg(long, global = true, hide = true)]
    mutate: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics and bargraph of one composition, e.g. `212` or `3,1,2`.
    Show { composition: String },
    /// Capacity distribution over B_n.
    Dist {
        n: u32,
        #[arg(long, value_enum, default_value_t = Vars::Y)]
        vars: Vars,
    },
    /// An integer sequence for n = 0..=n-max (Lucas starts at 1).
    Seq {
        #[arg(value_enum)]
        name: SeqName,
    },
    /// w(n,k) or |B_{n,k,j}| as rows.
    Table {
        #[arg(value_enum)]
        stat: TableName,
    },
    /// Run one cross-check suite, or `all`.
    Verify { suite: String },
    /// Coefficients of a registered generating function.
    Gf {
        model: String,
        /// Capacity index for gf.wk.
        #[arg(long)]
        k: Option<u32>,
        /// Keep p symbolic in gf.totcap.
        #[arg(long)]
        symbolic: bool,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Header plus records, rendered as CSV with quoting where needed.
struct Rows {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Rows {
    fn new(header: &[&'static str]) -> Self {
        Rows {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn csv(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| field(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn poly_rows(poly: &TriPoly, rows: &mut Rows, prefix: &[String]) {
    for (m, c) in poly.terms() {
        let mut row = prefix.to_vec();
        row.extend([m.y, m.p, m.q].map(|e| e.to_string()));
        row.push(c.to_string());
        rows.push(row);
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn show(cli: &Cli, input: &str) -> Result<String, Usage> {
    let c: Composition = input.parse()?;
    let s = c.stats();
    let sigma = s.sigma.map_or("undefined".to_string(), |v| v.to_string());
    Ok(match cli.format {
        Format::Text => format!(
            "parts: {}\nn: {}\ncapacity: {}\ntau: {}\nmu: {}\nsigma: {}\nsign: {:+}\n\n{}",
            c.parts()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(","),
            c.n(),
            s.capacity,
            s.tau,
            s.mu,
            sigma,
            s.sign,
            c.render_bargraph()
        ),
        Format::Json => pretty(&json!({
            "parts": c.parts(),
            "n": c.n(),
            "capacity": s.capacity,
            "tau": s.tau,
            "mu": s.mu,
            "sigma": s.sigma,
            "sign": s.sign,
            "bargraph": c.render_bargraph(),
        })),
        Format::Csv => {
            let mut rows = Rows::new(&["parts", "n", "capacity", "tau", "mu", "sigma", "sign"]);
            let parts: Vec<String> = c.parts().iter().map(u32::to_string).collect();
            rows.push(vec![
                parts.join(" "),
                c.n().to_string(),
                s.capacity.to_string(),
                s.tau.to_string(),
                s.mu.to_string(),
                s.sigma.map_or(String::new(), |v| v.to_string()),
                s.sign.to_string(),
            ]);
            rows.csv()
        }
    })
}

fn dist(cli: &Cli, n: u32, vars: Vars) -> Result<String, Usage> {
    let (cap, label) = match vars {
        Vars::Y => (MAX_DIST_Y, "y"),
        Vars::Ypq => (MAX_DIST_YPQ, "ypq"),
    };
    if n > cap {
        return Err(Usage(format!(
            "dist --vars {label} supports n <= {cap}, got {n}"
        )));
    }
    let poly = match vars {
        Vars::Y => b_seq_rec3(n as usize)[n as usize].clone(),
        Vars::Ypq => bpq_seq(n as usize).full[n as usize].clone(),
    };
    Ok(match cli.format {
        Format::Text => format!("{poly}\n"),
        Format::Json => pretty(&json!({"n": n, "vars": label, "poly": poly.to_json()})),
        Format::Csv => {
            let mut rows = Rows::new(&["y", "p", "q", "coef"]);
            poly_rows(&poly, &mut rows, &[]);
            rows.csv()
        }
    })
}

fn sequence(name: SeqName, n_max: u32) -> Result<(u32, Vec<BigInt>), Usage> {
    let cf = ClosedForms::standard();
    let range = 0..=n_max as u64;
    Ok(match name {
        SeqName::Fib => (0, range.map(closed_forms::fib_fast_doubling).collect()),
        SeqName::Lucas => {
            let values = (1..=n_max.max(1) as i64)
                .map(|m| cf.lucas(m))
                .collect::<Result<_, _>>()?;
            (1, values)
        }
        SeqName::D => (0, d_seq_rec2(n_max as usize)),
        SeqName::W0 => (0, range.map(|n| cf.w0(n)).collect()),
        SeqName::Totcap => (
            0,
            range
                .map(|n| cf.total_capacity(n))
                .collect::<Result<_, _>>()?,
        ),
        SeqName::Signbal => (
            0,
            range
                .map(|n| cf.sign_balance(n))
                .collect::<Result<_, _>>()?,
        ),
    })
}

fn seq(cli: &Cli, name: SeqName) -> Result<String, Usage> {
    let n_max = cli.n_max.unwrap_or(20);
    let (start, values) = sequence(name, n_max)?;
    let label = name
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let strings: Vec<String> = values.iter().map(BigInt::to_string).collect();
    Ok(match cli.format {
        Format::Text => format!("{}\n", strings.join(",")),
        Format::Json => pretty(&json!({"sequence": label, "start": start, "values": strings})),
        Format::Csv => {
            let mut rows = Rows::new(&["n", "value"]);
            for (i, v) in strings.into_iter().enumerate() {
                rows.push(vec![(start as usize + i).to_string(), v]);
            }
            rows.csv()
        }
    })
}

fn table(cli: &Cli, stat: TableName) -> Result<String, Usage> {
    let n_max = cli.n_max.unwrap_or(12) as u64;
    let cf = ClosedForms::standard();
    let (header, rows): (&[&'static str], Vec<Vec<u64>>) = match stat {
        TableName::Wnk => (
            &["n", "k", "value"],
            (0..=n_max)
                .flat_map(|n| (0..=n).map(move |k| vec![n, k]))
                .collect(),
        ),
        TableName::Bnkj => (
            &["n", "k", "j", "value"],
            (0..=n_max)
                .flat_map(|n| {
                    (n % 2..=n)
                        .step_by(2)
                        .flat_map(move |j| (0..=j).map(move |k| vec![n, k, j]))
                })
                .collect(),
        ),
    };
    let mut out = Rows::new(header);
    for key in rows {
        let value = match stat {
            TableName::Wnk if key[1] == 0 => cf.w0(key[0]),
            TableName::Wnk => cf.wnk(key[0], key[1])?,
            TableName::Bnkj => cf.bnkj(key[0], key[1], key[2])?,
        };
        let mut row: Vec<String> = key.iter().map(u64::to_string).collect();
        row.push(value.to_string());
        out.push(row);
    }
    Ok(match cli.format {
        Format::Csv => out.csv(),
        Format::Json => {
            let records: Vec<Value> = out
                .rows
                .iter()
                .map(|r| {
                    let obj = out
                        .header
                        .iter()
                        .zip(r)
                        .map(|(h, v)| (h.to_string(), json!(v)));
                    Value::Object(obj.collect())
                })
                .collect();
            pretty(&json!({"table": header_name(stat), "rows": records}))
        }
        Format::Text => match stat {
            // one triangle row per n: w(n,0) w(n,1) ... w(n,n)
            TableName::Wnk => {
                let mut s = String::new();
                for n in 0..=n_max {
                    let vals: Vec<&str> = out
                        .rows
                        .iter()
                        .filter(|r| r[0] == n.to_string())
                        .map(|r| r[2].as_str())
                        .collect();
                    s.push_str(&format!("{n:>3}: {}\n", vals.join(" ")));
                }
                s
            }
            TableName::Bnkj => {
                let mut s = String::new();
                for r in out.rows.iter().filter(|r| r[3] != "0") {
                    s.push_str(&format!("b({},{},{}) = {}\n", r[0], r[1], r[2], r[3]));
                }
                s
            }
        },
    })
}

fn header_name(stat: TableName) -> &'static str {
    match stat {
        TableName::Wnk => "wnk",
        TableName::Bnkj => "bnkj",
    }
}

fn verify_cmd(cli: &Cli, suite: &str) -> Result<(String, bool), Usage> {
    let cf = match &cli.mutate {
        None => ClosedForms::standard(),
        Some(name) => ClosedForms::mutant(name).ok_or_else(|| {
            Usage(format!(
                "unknown mutation point {name:?}; known: {}",
                FormulaConstants::MUTATION_POINTS.join(", ")
            ))
        })?,
    };
    let bounds = cli.n_max.map_or_else(Bounds::default, Bounds::capped);
    let reports: Vec<VerifyReport> = if suite == "all" {
        verify::run_all(&bounds, &cf)
    } else {
        vec![verify::run_suite(suite, &bounds, &cf)
            .map_err(|e| Usage(format!("{e}; known suites: all, {}", SUITES.join(", "))))?]
    };
    let pass = reports.iter().all(|r| r.pass);
    let out = match cli.format {
        Format::Json => pretty(&serde_json::to_value(&reports)?),
        Format::Csv => {
            let mut rows = Rows::new(&["suite", "pass", "checks", "failures", "ms"]);
            for r in &reports {
                rows.push(vec![
                    r.suite.clone(),
                    r.pass.to_string(),
                    r.checks.to_string(),
                    r.failures.len().to_string(),
                    r.ms.to_string(),
                ]);
            }
            rows.csv()
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                s.push_str(&format!(
                    "{status} {:<20} {:>7} checks  {:>6} ms  ({})\n",
                    r.suite, r.checks, r.ms, r.range
                ));
                for f in r.failures.iter().take(5) {
                    s.push_str(&format!(
                        "     {} expected {} got {}\n",
                        f.params, f.expected, f.actual
                    ));
                }
                if r.failures.len() > 5 {
                    s.push_str(&format!("     ... {} more\n", r.failures.len() - 5));
                }
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            s.push_str(&format!("{passed}/{} suites passed\n", reports.len()));
            s
        }
    };
    Ok((out, pass))
}

fn gf(cli: &Cli, model: &str, k: Option<u32>, symbolic: bool) -> Result<String, Usage> {
    let top = cli.n_max.map_or(10, |n| n as usize).min(cli.order);
    let built = genfunc::build_model(
        model,
        top,
        ModelParams {
            k,
            symbolic_p: symbolic,
        },
    )
    .map_err(|e| match e {
        genfunc::GfError::UnknownModel(_) => {
            let names: Vec<&str> = MODELS.iter().map(|(n, _)| *n).collect();
            Usage(format!("{e}; known: {}", names.join(", ")))
        }
        other => Usage(other.to_string()),
    })?;
    let coeffs = built.series.coeffs();
    Ok(match cli.format {
        Format::Text => {
            let mut s = format!("{} = {}\n", built.name, built.formula);
            for (n, c) in coeffs.iter().enumerate() {
                s.push_str(&format!("x^{n}: {c}\n"));
            }
            s
        }
        Format::Json => pretty(&json!({
            "model": built.name,
            "formula": built.formula,
            "order": top,
            "coefficients": coeffs.iter().map(TriPoly::to_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut rows = Rows::new(&["n", "y", "p", "q", "coef"]);
            for (n, c) in coeffs.iter().enumerate() {
                poly_rows(c, &mut rows, &[n.to_string()]);
            }
            rows.csv()
        }
    })
}

fn run(cli: &Cli) -> Result<(String, bool), Usage> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Usage(format!("cannot set up {threads} threads: {e}")))?;
    }
    match &cli.command {
        Command::Show { composition } => show(cli, composition).map(|s| (s, true)),
        Command::Dist { n, vars } => dist(cli, *n, *vars).map(|s| (s, true)),
        Command::Seq { name } => seq(cli, *name).map(|s| (s, true)),
        Command::Table { stat } => table(cli, *stat).map(|s| (s, true)),
        Command::Verify { suite } => verify_cmd(cli, suite),
        Command::Gf { model, k, symbolic } => gf(cli, model, *k, *symbolic).map(|s| (s, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, pass)) => {
            print!("{out}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
