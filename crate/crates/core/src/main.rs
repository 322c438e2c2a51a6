use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use trigroups::arith::{chi_sign, Order, Sign, Triple};
use trigroups::curvature::{curvature_sign, sandwich};
use trigroups::enumerate::{enumerate_with_stats, BoundMode, EnumerationConfig};
use trigroups::multiplicity::{multiplicity, MultiplicityMode};
use trigroups::oracle::golden;
use trigroups::output::{write_records, Format};
use trigroups::{adim, Error};

#[derive(Parser)]
#[command(name = "trigroups", version, about = "Arithmetic dimension of hyperbolic triangle groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Safe,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MultArg {
    Auto,
    Brute,
    Closed,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Bound ladder for the largest nondividing prime.
    #[arg(long, value_enum, default_value = "paper")]
    mode: ModeArg,
    /// Override the bound with an explicit odd-prime index.
    #[arg(long)]
    max_ndp_index: Option<usize>,
    /// Number of primes fed to the divisor filter (default maxNDPIndex * r).
    #[arg(long)]
    max_prime_index: Option<usize>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl SearchArgs {
    fn config(&self, r: u64) -> EnumerationConfig {
        let mut cfg = EnumerationConfig::new(r).with_threads(self.threads);
        cfg.bound_mode = match (self.max_ndp_index, self.mode) {
            (Some(i), _) => BoundMode::ExplicitIndex(i),
            (None, ModeArg::Paper) => BoundMode::Paper,
            (None, ModeArg::Safe) => BoundMode::Safe,
        };
        cfg.max_prime_index = self.max_prime_index;
        cfg
    }
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic dimension of (a, b, c); use `oo` for infinity.
    Adim {
        a: Order,
        b: Order,
        c: Order,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// #H with its intermediate counts.
    Multiplicity {
        a: Order,
        b: Order,
        c: Order,
        #[arg(long, value_enum, default_value = "auto")]
        method: MultArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Sign of the curvature of the k-th conjugate, with the exact sandwich values.
    Curvature { a: Order, b: Order, c: Order, k: u64 },
    /// All triples of arithmetic dimension r.
    Enumerate {
        r: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Write records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate and compare against a fixture (the built-in list by default).
    Verify {
        r: u64,
        #[arg(long)]
        golden: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Tab-separated counts `r compact noncompact` for r = 1..=max-r.
    Counts {
        #[arg(long, default_value_t = 5)]
        max_r: u64,
        /// Print the published table instead of computing.
        #[arg(long)]
        published: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
}

enum Failure {
    Parse(String),
    Domain(String),
    Invariant(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NotHyperbolic { .. } | Error::NotUnit { .. } | Error::TooLarge(_) => Failure::Domain(e.to_string()),
            Error::InvalidOrder(_) | Error::Parse(_) | Error::Io(_) => Failure::Parse(e.to_string()),
            e => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Parse(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("internal invariant violated: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Mismatch) => ExitCode::from(4),
    }
}

fn triple(a: Order, b: Order, c: Order) -> Result<Triple, Failure> {
    let t = Triple::new_unchecked(a, b, c)?;
    match chi_sign(a, b, c) {
        Sign::Negative => Ok(t),
        chi => Err(Failure::Domain(format!("{t} is not hyperbolic: chi is {chi}"))),
    }
}

fn print_fields<T: Serialize>(value: &T, format: FormatArg) -> Result<(), Failure> {
    let json = serde_json::to_value(value).map_err(|e| Failure::Parse(e.to_string()))?;
    let mut out = io::stdout().lock();
    match format {
        FormatArg::Json => writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("value serializes"))?,
        FormatArg::Csv => {
            let obj = json.as_object().expect("report is an object");
            let cell = |v: &serde_json::Value| v.as_str().map_or_else(|| v.to_string(), str::to_owned);
            writeln!(out, "{}", obj.keys().cloned().collect::<Vec<_>>().join(","))?;
            writeln!(out, "{}", obj.values().map(cell).collect::<Vec<_>>().join(","))?;
        }
        FormatArg::Text => {
            for (k, v) in json.as_object().expect("report is an object") {
                let v = v.as_str().map_or_else(|| v.to_string(), str::to_owned);
                writeln!(out, "{k}={v}")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct WithTriple<T: Serialize> {
    triple: String,
    #[serde(flatten)]
    inner: T,
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Adim { a, b, c, format } => {
            let t = triple(a, b, c)?;
            let res = adim(&t)?;
            print_fields(&WithTriple { triple: t.to_string(), inner: res }, format)
        }
        Command::Multiplicity { a, b, c, method, format } => {
            let t = triple(a, b, c)?;
            let mode = match method {
                MultArg::Auto => MultiplicityMode::Auto,
                MultArg::Brute => MultiplicityMode::ForceBrute,
                MultArg::Closed => MultiplicityMode::ForceClosed,
            };
            print_fields(&WithTriple { triple: t.to_string(), inner: multiplicity(&t, mode) }, format)
        }
        Command::Curvature { a, b, c, k } => {
            let t = triple(a, b, c)?;
            let sign = curvature_sign(&t, k)?;
            let mut out = io::stdout().lock();
            writeln!(out, "triple={t}")?;
            writeln!(out, "k={k}")?;
            writeln!(out, "sign={sign}")?;
            match sandwich(&t, k) {
                Some(s) => {
                    writeln!(out, "k_a={} k_b={} k_c={}", s.ka, s.kb, s.kc)?;
                    writeln!(out, "left={} middle={} right={}", s.left, s.middle, s.right)?;
                }
                None => writeln!(out, "noncompact: every conjugate is hyperbolic")?,
            }
            Ok(())
        }
        Command::Enumerate { r, search, format, out } => {
            check_r(r)?;
            let e = enumerate_with_stats(&search.config(r))?;
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            let summary = format!("r={r} compact={} noncompact={}", e.compact_count(), e.noncompact_count());
            match out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(&path)?);
                    write_records(&e.records, format, &mut w)?;
                    w.flush()?;
                    println!("{summary}");
                }
                None => {
                    let mut w = BufWriter::new(io::stdout().lock());
                    write_records(&e.records, format, &mut w)?;
                    w.flush()?;
                    eprintln!("{summary}");
                }
            }
            Ok(())
        }
        Command::Verify { r, golden: path, search } => {
            check_r(r)?;
            let want: BTreeSet<Triple> = match path {
                Some(p) => golden::load_path(r, &p)?.all(),
                None => match golden::load(r) {
                    Some(g) if g.has_lists() => g.all(),
                    _ => return Err(Failure::Parse(format!("no built-in list for r={r}; pass --golden"))),
                },
            };
            let e = enumerate_with_stats(&search.config(r))?;
            let got: BTreeSet<Triple> = e.records.iter().map(|rec| rec.triple).collect();
            let missing: Vec<_> = want.difference(&got).collect();
            let extra: Vec<_> = got.difference(&want).collect();
            println!("r={r} expected={} found={} missing={} extra={}", want.len(), got.len(), missing.len(), extra.len());
            for t in &missing {
                println!("missing {t}");
            }
            for t in &extra {
                println!("extra {t}");
            }
            if missing.is_empty() && extra.is_empty() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Counts { max_r, published, search } => {
            let mut out = io::stdout().lock();
            writeln!(out, "r\tcompact\tnoncompact")?;
            if published {
                for (r, c, n) in golden::counts().into_iter().filter(|c| c.0 <= max_r) {
                    writeln!(out, "{r}\t{c}\t{n}")?;
                }
                return Ok(());
            }
            for r in 1..=max_r {
                let e = enumerate_with_stats(&search.config(r))?;
                writeln!(out, "{r}\t{}\t{}", e.compact_count(), e.noncompact_count())?;
                out.flush()?;
            }
            Ok(())
        }
    }
}

fn check_r(r: u64) -> Result<(), Failure> {
    if r == 0 {
        return Err(Failure::Parse("r must be at least 1".into()));
    }
    Ok(())
}
