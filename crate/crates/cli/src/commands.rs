use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{debug, info};
use rayon::prelude::*;

use irredforge_core::arith::factorize;
use irredforge_core::family::{self, k_normality_unchecked};
use irredforge_core::orbit::{infer_order, iterate_prime};
use irredforge_core::{oracle, Constructor, FieldElement, FieldSpec, Poly, PolyRing};

use crate::doc::{
    table_csv, table_rows, table_text, ConstructDoc, PolyDoc, ReportDoc, TraceDoc,
};
use crate::error::{CliError, CliResult};
use crate::sweep::random_cases;

#[derive(Parser, Debug)]
#[command(name = "irredforge", version, about = "Minimal polynomials of powers over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// `p,m,<modulus in y>`, a prime `p`, or `gf8` / `gf16`.
    #[arg(long, default_value = "gf16")]
    pub field: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal polynomial of β^k from f = m_β.
    Construct {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Iterate the prime step for one prime and infer the order.
    Iterate {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate the family of f with weight and normality statistics.
    Enumerate {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
        /// Exponent caps for all primes of q-1 but the largest.
        #[arg(long, value_delimiter = ',')]
        caps: Option<Vec<u32>>,
        /// Include every member in JSON output.
        #[arg(long)]
        members: bool,
        /// Also write the member list, one polynomial per line.
        #[arg(long)]
        list: Option<String>,
        /// Skip the k-normality computation.
        #[arg(long)]
        skip_normality: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Weight and normality table of a member list file.
    Analyze {
        #[command(flatten)]
        field: FieldArg,
        /// One polynomial per line.
        input: String,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the construction against the conjugate-product oracle.
    Verify {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, requires = "k")]
        poly: Option<String>,
        #[arg(long)]
        k: Option<u64>,
        /// Number of seeded random cases.
        #[arg(long, conflicts_with = "poly")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Perturb oracle outputs, to exercise the failure path.
        #[arg(long, hide = true)]
        corrupt_oracle: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Order of f, its factorization and primitivity.
    Order {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        output: Output,
    },
}

fn emit(output: &Output, text: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("stdout", e))
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn no_csv(cmd: &str) -> CliError {
    CliError::Precondition(format!("{cmd} has no csv output"))
}

fn pool(threads: Option<usize>) -> CliResult<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return Err(CliError::Precondition("--threads must be positive".into()));
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Runtime(e.to_string()))
}

/// `k`-normality of every member, in member order.
pub fn normalities(
    ring: &PolyRing<FieldSpec>,
    members: &[Poly<FieldElement>],
    threads: Option<usize>,
) -> CliResult<Vec<usize>> {
    let pool = pool(threads)?;
    Ok(pool.install(|| {
        members
            .par_iter()
            .map(|m| k_normality_unchecked(ring, m))
            .collect()
    }))
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Construct {
            field,
            poly,
            k,
            output,
        } => {
            let field = crate::parse_field(&field.field)?;
            let f = crate::parse_irreducible(&field, &poly)?;
            let ctor = Constructor::new(field.clone())?;
            let result = ctor.construct_general(&f, k)?;
            info!("constructed k = {k} in {} steps", result.steps.len());
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Text => {
                    let steps: Vec<String> = result
                        .steps
                        .iter()
                        .map(|s| format!("{}:{}", s.prime, crate::doc::step_kind_name(s.kind)))
                        .collect();
                    format!(
                        "{}\ndegree={} steps={}\n",
                        field.format_poly(&result.output),
                        result.output.degree().unwrap_or(0),
                        if steps.is_empty() { "none".to_string() } else { steps.join(",") }
                    )
                }
                Format::Json => json(&ConstructDoc::new(&field, &f, &result))?,
                Format::Csv => return Err(no_csv("construct")),
            };
            emit(&output, &text)
        }
        Command::Iterate {
            field,
            poly,
            prime,
            output,
        } => {
            let field = crate::parse_field(&field.field)?;
            let f = crate::parse_irreducible(&field, &poly)?;
            let ctor = Constructor::new(field.clone())?;
            let trace = iterate_prime(&ctor, &f, prime)?;
            let cands = infer_order(&trace)?;
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Text => {
                    let orders: Vec<String> = cands.orders().map(|o| o.to_string()).collect();
                    format!(
                        "tail={} orbit={}\nvaluation={}\ncandidates={}\n",
                        trace.tail_length,
                        trace.orbit_length,
                        cands.k_adic_valuation,
                        orders.join(",")
                    )
                }
                Format::Json => json(&TraceDoc::new(&field, &trace, &cands))?,
                Format::Csv => return Err(no_csv("iterate")),
            };
            emit(&output, &text)
        }
        Command::Enumerate {
            field,
            poly,
            caps,
            members,
            list,
            skip_normality,
            threads,
            output,
        } => {
            let field = crate::parse_field(&field.field)?;
            let f = crate::parse_irreducible(&field, &poly)?;
            let ctor = Constructor::new(field.clone())?;
            let mut report = family::enumerate_family(&ctor, &f, caps.as_deref())?;
            info!(
                "{} members in {} orbits",
                report.members.len(),
                report.orbits.len()
            );
            if !skip_normality {
                let ks = normalities(ctor.ring(), &report.members, threads)?;
                report.set_normalities(ctor.ring(), &ks);
            }
            if let Some(path) = list {
                let mut text = String::new();
                for m in &report.members {
                    text.push_str(&field.format_poly(m));
                    text.push('\n');
                }
                fs::write(&path, text).map_err(|e| CliError::io(path, e))?;
            }
            let doc = ReportDoc::new(&field, &report, members);
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Text => {
                    let weights: Vec<String> =
                        doc.weights.iter().map(|(w, c)| format!("{w}^{c}")).collect();
                    let sizes: Vec<String> = doc.orbits.iter().map(|o| o.size.to_string()).collect();
                    let mut s = format!(
                        "members={}\norder={}\ncaps={:?}\norbits={} sizes={}\nweights={}\n",
                        doc.member_count,
                        doc.order,
                        doc.caps,
                        doc.orbits.len(),
                        sizes.join(","),
                        weights.join(" ")
                    );
                    if !doc.table.is_empty() {
                        s.push_str(&table_text(&doc.table));
                    }
                    s
                }
                Format::Json => json(&doc)?,
                Format::Csv => {
                    if doc.table.is_empty() {
                        return Err(CliError::Precondition(
                            "csv output needs normality; drop --skip-normality".into(),
                        ));
                    }
                    table_csv(&doc.table)?
                }
            };
            emit(&output, &text)
        }
        Command::Analyze {
            field,
            input,
            threads,
            output,
        } => {
            let field = crate::parse_field(&field.field)?;
            let text = fs::read_to_string(&input).map_err(|e| CliError::io(&input, e))?;
            let members = crate::parse_member_list(&field, &text)?;
            debug!("read {} members from {input}", members.len());
            let ring = PolyRing::new(field.clone());
            let ks = normalities(&ring, &members, threads)?;
            let weights = family::weight_distribution(&ring, &members);
            let mut joint = std::collections::BTreeMap::new();
            for (m, &k) in members.iter().zip(&ks) {
                *joint.entry((ring.weight(m), k)).or_insert(0) += 1;
            }
            let rows = table_rows(&weights, &joint);
            let text = match output.format.unwrap_or(Format::Csv) {
                Format::Csv => table_csv(&rows)?,
                Format::Text => table_text(&rows),
                Format::Json => json(&rows)?,
            };
            emit(&output, &text)
        }
        Command::Verify {
            field,
            poly,
            k,
            random,
            seed,
            corrupt_oracle,
            output,
        } => {
            let cases: Vec<(FieldSpec, Poly<FieldElement>, u64)> = match (poly, k, random) {
                (Some(poly), Some(k), None) => {
                    let field = crate::parse_field(&field.field)?;
                    let f = crate::parse_irreducible(&field, &poly)?;
                    vec![(field, f, k)]
                }
                (None, None, Some(n)) => random_cases(seed, n)
                    .into_iter()
                    .map(|c| (c.field, c.f, c.k))
                    .collect(),
                _ => {
                    return Err(CliError::Precondition(
                        "verify needs either --poly with --k, or --random".into(),
                    ))
                }
            };
            let mut failures = Vec::new();
            for (i, (field, f, k)) in cases.iter().enumerate() {
                let ctor = Constructor::new(field.clone())?;
                let got = ctor.construct_general(f, *k)?.output;
                let mut want = oracle::min_poly_power(field, f, *k)?;
                if corrupt_oracle {
                    let ring = ctor.ring();
                    want = ring.add(&want, &ring.one());
                }
                if got != want {
                    failures.push(format!(
                        "case {i}: q={} f={} k={k}: construction {} != oracle {}",
                        field.q(),
                        field.format_poly(f),
                        field.format_poly(&got),
                        field.format_poly(&want)
                    ));
                }
            }
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Text => {
                    let mut s = String::new();
                    for line in &failures {
                        s.push_str(line);
                        s.push('\n');
                    }
                    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
                    s.push_str(&format!(
                        "{verdict} {}/{} cases agree\n",
                        cases.len() - failures.len(),
                        cases.len()
                    ));
                    s
                }
                Format::Json => json(&serde_json::json!({
                    "cases": cases.len(),
                    "failures": failures,
                    "pass": failures.is_empty(),
                }))?,
                Format::Csv => return Err(no_csv("verify")),
            };
            emit(&output, &text)?;
            if failures.is_empty() {
                Ok(())
            } else {
                Err(CliError::Runtime(format!(
                    "{} of {} cases disagree with the oracle",
                    failures.len(),
                    cases.len()
                )))
            }
        }
        Command::Order {
            field,
            poly,
            output,
        } => {
            let field = crate::parse_field(&field.field)?;
            let f = crate::parse_irreducible(&field, &poly)?;
            let ring = PolyRing::new(field.clone());
            let e = ring.poly_order(&f)?;
            let n = f.degree().unwrap_or(0) as u32;
            let group = irredforge_core::arith::checked_pow(field.q(), n)? - 1;
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Text => format!(
                    "order={e} = {}\ndegree={n}\nprimitive={}\n",
                    factorize(e),
                    e == group
                ),
                Format::Json => json(&serde_json::json!({
                    "poly": PolyDoc::new(&field, &f),
                    "order": e,
                    "factors": factorize(e).pairs().to_vec(),
                    "degree": n,
                    "primitive": e == group,
                }))?,
                Format::Csv => return Err(no_csv("order")),
            };
            emit(&output, &text)
        }
    }
}
