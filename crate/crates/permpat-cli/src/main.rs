mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use permpat::bijection::{phi, phi_inverse, phi_prime, phi_prime_inverse, phi_star, DyckPath};
use permpat::genome::{ball_polynomial, bfs_ball, BlockOp};
use permpat::oracle::{enumerate_class, occurrence_totals, AvoidanceQuery, Budget};
use permpat::peg::{parse_peg_set, polyclass_enumerate, polyclass_stream};
use permpat::perm::{gap_report, stats};
use permpat::series::{catalog, exact_formula, formula_min_n, lookup, CatalogSeries, FORMULAS};
use permpat::verify;
use permpat::Permutation;

use output::{Format, Output};

/// Exact enumeration of permutation classes, series and block-move balls.
#[derive(Parser, Debug)]
#[command(name = "permpat", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, env = "PERMPAT_WORKERS", global = true, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    /// Largest length the exhaustive searches may reach.
    #[arg(long, default_value_t = Budget::default().max_n as u64, global = true, value_parser = clap::value_parser!(u64).range(1..=16))]
    max_n: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count Av_n(basis) for n = 1..order.
    Avoid {
        /// Basis patterns, e.g. `1342` or `2,3,4,1`.
        #[arg(required = true)]
        basis: Vec<String>,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Count only involutions.
        #[arg(long)]
        involutions: bool,
    },
    /// Total occurrences of a pattern over Av_n(basis), n = 1..order.
    Occur {
        pattern: String,
        /// Basis of the class searched.
        #[arg(long = "in", required = true, num_args = 1..)]
        basis: Vec<String>,
        #[arg(long, default_value_t = 7)]
        order: usize,
    },
    /// Enumerate the class generated by a peg-permutation file.
    Polyclass {
        pegfile: PathBuf,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Use the low-memory completion.
        #[arg(long)]
        stream: bool,
    },
    /// Counting polynomial of the radius-k ball under a block move.
    Ball {
        /// One of bt, pt, br, pr, cp, bi (or the long names).
        #[arg(long)]
        op: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Compare against breadth-first search for n = 1..N; exits 1 on a mismatch.
        #[arg(long)]
        oracle_n: Option<usize>,
    },
    /// Coefficients of a catalog series, or values of a closed form.
    Series {
        /// A catalog or formula name; `list` prints the names.
        name: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Evaluate the closed form of this name instead of the series.
        #[arg(long)]
        exact: bool,
    },
    /// Apply a Dyck path map: phi, phi-prime, phi-star, phi-inverse, phi-prime-inverse.
    Biject { map: String, input: String },
    /// Statistics of a single permutation.
    Stats { perm: String },
    /// Run acceptance criteria; exits 1 if any check fails.
    Verify {
        /// `all`, `quick`, or a comma-separated list of ids.
        #[arg(long, default_value = "quick")]
        suite: String,
    },
}

fn perm(s: &str) -> Result<Permutation> {
    s.parse().map_err(|e| anyhow!("`{s}`: {e}"))
}

fn perms(list: &[String]) -> Result<Vec<Permutation>> {
    list.iter().map(|s| perm(s)).collect()
}

/// A run's output and whether it found a mismatch.
struct Outcome {
    output: Output,
    mismatch: bool,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome {
            output,
            mismatch: false,
        }
    }
}

fn budget(global: &Global) -> Budget {
    Budget {
        max_n: global.max_n as usize,
        ..Budget::default()
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let budget = budget(&cli.global);
    Ok(match &cli.command {
        Command::Avoid {
            basis,
            order,
            involutions,
        } => {
            let basis = perms(basis)?;
            let counts = (1..=*order)
                .map(|n| {
                    let mut q = AvoidanceQuery::new(basis.clone(), n)?;
                    if *involutions {
                        q = q.involutions();
                    }
                    enumerate_class(&q, &budget)
                })
                .collect::<permpat::Result<Vec<_>>>()?;
            Output::sequence(1, counts).into()
        }
        Command::Occur {
            pattern,
            basis,
            order,
        } => {
            let pattern = perm(pattern)?;
            let basis = perms(basis)?;
            let totals = (1..=*order)
                .map(|n| occurrence_totals(&pattern, &basis, n, &budget))
                .collect::<permpat::Result<Vec<_>>>()?;
            Output::sequence(1, totals).into()
        }
        Command::Polyclass {
            pegfile,
            order,
            stream,
        } => {
            let text = fs::read_to_string(pegfile)
                .with_context(|| format!("reading {}", pegfile.display()))?;
            let set = parse_peg_set(&text)?;
            let (gf, poly, classes) = if *stream {
                let s = polyclass_stream(&set)?;
                (s.gf, s.polynomial, s.classes)
            } else {
                let p = polyclass_enumerate(&set)?;
                let classes = p.partition.len();
                (p.gf, p.polynomial, classes)
            };
            Output::sequence(1, poly.counts(*order))
                .with_note("gf", &gf)
                .with_note("basis", poly.basis_string())
                .with_note("from_n", poly.threshold)
                .with_note("classes", classes)
                .into()
        }
        Command::Ball {
            op,
            k,
            order,
            oracle_n,
        } => {
            let op: BlockOp = op.parse()?;
            let poly = ball_polynomial(op, *k)?;
            let counts = poly.counts(*order);
            let mut out = Output::sequence(1, &counts)
                .with_note("basis", poly.basis_string())
                .with_note("from_n", poly.threshold);
            let mut mismatch = false;
            if let Some(m) = oracle_n {
                let mut bad = Vec::new();
                for n in 1..=*m {
                    let b = bfs_ball(op, *k, n)?;
                    if poly.count(n) != b.into() {
                        bad.push(format!("n={n}: polynomial {} vs search {b}", poly.count(n)));
                    }
                }
                mismatch = !bad.is_empty();
                let verdict = if mismatch {
                    bad.join("; ")
                } else {
                    format!("agrees for n <= {m}")
                };
                out = out.with_note("search", verdict);
            }
            Outcome {
                output: out,
                mismatch,
            }
        }
        Command::Series { name, order, exact } => series(name, *order, *exact)?.into(),
        Command::Biject { map, input } => {
            let result = match map.as_str() {
                "phi" => phi(&perm(input)?)?.to_string(),
                "phi-prime" => phi_prime(&perm(input)?)?.to_string(),
                "phi-star" => phi_star(&perm(input)?)?.to_string(),
                "phi-inverse" => phi_inverse(&input.parse::<DyckPath>()?).to_string(),
                "phi-prime-inverse" => phi_prime_inverse(&input.parse::<DyckPath>()?).to_string(),
                other => bail!("unknown map `{other}`"),
            };
            Output::Lines(vec![result]).into()
        }
        Command::Stats { perm: p } => {
            let p = perm(p)?;
            let s = stats(&p);
            let mut fields = vec![
                ("permutation".to_string(), p.to_string()),
                ("length".into(), p.len().to_string()),
                ("ascents".into(), s.ascents.to_string()),
                ("inversions".into(), s.inversions.to_string()),
                ("ltr_minima".into(), s.ltr_minima_count.to_string()),
                (
                    "ltr_minima_positions".into(),
                    s.ltr_minima_positions
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                ),
                ("rtl_maxima".into(), s.rtl_maxima_count.to_string()),
                ("fixed_points".into(), s.fixed_points.to_string()),
                ("bonds".into(), s.bonds.to_string()),
                ("involution".into(), p.is_involution().to_string()),
            ];
            if p.len() >= 2 {
                fields.push(("min_gap".into(), gap_report(&p)?.min_gap.to_string()));
            }
            Output::Record(fields).into()
        }
        Command::Verify { suite } => {
            let ids = verify::suite(suite)?;
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut mismatch = false;
            for id in ids {
                let r = verify::run(id)?;
                mismatch |= !r.passed();
                lines.push(r.summary());
                for c in &r.checks {
                    if !c.passed {
                        let known = c
                            .known_mismatch
                            .map(|k| format!(" (known: {k})"))
                            .unwrap_or_default();
                        lines.push(format!("    {}: {}{known}", c.label, c.detail));
                    }
                    rows.push(vec![
                        id.to_string(),
                        if c.passed { "PASS" } else { "FAIL" }.to_string(),
                        c.label.clone(),
                        c.detail.clone(),
                        c.known_mismatch.unwrap_or("").to_string(),
                    ]);
                }
            }
            let output = if cli.global.format == Format::Text {
                Output::Lines(lines)
            } else {
                Output::Table {
                    header: ["criterion", "verdict", "check", "detail", "known_mismatch"]
                        .map(String::from)
                        .to_vec(),
                    rows,
                }
            };
            Outcome { output, mismatch }
        }
    })
}

fn series(name: &str, order: usize, exact: bool) -> Result<Output> {
    if name == "list" {
        let mut lines: Vec<String> = permpat::series::CATALOG
            .iter()
            .map(|e| format!("series  {:<24} {}", e.name, e.description))
            .collect();
        lines.extend(FORMULAS.iter().map(|(n, d)| format!("formula {n:<24} {d}")));
        return Ok(Output::Lines(lines));
    }
    let is_formula = FORMULAS.iter().any(|f| f.0 == name);
    if exact || (lookup(name).is_err() && is_formula) {
        let lo = formula_min_n(name);
        let values = (lo..=order)
            .map(|n| exact_formula(name, n))
            .collect::<permpat::Result<Vec<_>>>()?;
        return Ok(Output::sequence(lo, values));
    }
    Ok(match catalog(name, order)? {
        CatalogSeries::Univariate(s) => Output::sequence(0, s.coeffs().iter().take(order + 1)),
        CatalogSeries::Bivariate(m) => Output::Table {
            header: vec!["i".into(), "j".into(), "coefficient".into()],
            rows: m
                .terms()
                .into_iter()
                .filter(|t| t.0 <= order)
                .map(|(i, j, c)| vec![i.to_string(), j.to_string(), c.to_string()])
                .collect(),
        },
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(w) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build_global()
        {
            eprintln!("permpat: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli).and_then(|o| {
        let text = o.output.render(cli.global.format)?;
        write_out(&cli.global, &text)?;
        Ok(o.mismatch)
    }) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("permpat: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_out(global: &Global, text: &str) -> Result<()> {
    match &global.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
