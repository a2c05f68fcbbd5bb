//! `scat`: count, list, convert and check s-Catalan objects.

mod family;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use scat_core::arw::compare_constructions;
use scat_core::enumeration::{count_determinant, count_exhaustive, count_recurrence, narayana_distribution, Statistic};
use scat_core::parking::{count_parking, enumerate_parking};
use scat_core::paths::enumerate_paths;
use scat_core::signatures::{compositions_up_to, rational_signature};
use scat_core::{Composition, DyckPath, Error, WeakComposition, DEFAULT_CAP};

use family::{Family, Object};

#[derive(Parser)]
#[command(name = "scat", version, about = "s-Catalan combinatorics: counting, listing and bijections")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Maximum number of objects any command may enumerate.
    #[arg(long, global = true, env = "SCAT_CAP", default_value_t = DEFAULT_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Print C_s.
    Count {
        /// Signature, e.g. 3,4,3 (empty string for the empty signature).
        s: String,
        /// Compare recurrence, determinant and exhaustive generation.
        #[arg(long)]
        all_methods: bool,
    },
    /// Print every object of a family, one per line, then the count.
    List {
        #[arg(value_enum)]
        family: Family,
        s: String,
    },
    /// Send an object through the bijections to another family.
    Convert {
        #[arg(value_enum)]
        from: Family,
        #[arg(value_enum)]
        to: Family,
        object: String,
        /// Tree signature; required when converting from ncpartition.
        #[arg(long)]
        s: Option<String>,
    },
    /// The ribbon signature of a coprime pair.
    Rational { a: u64, b: u64 },
    /// Histograms of the Narayana statistics.
    Narayana {
        s: String,
        /// A single statistic; all applicable ones by default.
        #[arg(long)]
        statistic: Option<String>,
    },
    /// Count or list μ-parking functions.
    Parking {
        #[command(subcommand)]
        action: ParkingAction,
    },
    /// Compare the laser partition with the tree-route partition.
    ArwCompare {
        a: u64,
        b: u64,
        /// Every rational path (the default).
        #[arg(long, conflicts_with = "mu")]
        all: bool,
        /// One path, given by its east-step composition.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Run the invariant suite on every signature up to a weight.
    Verify {
        max_weight: usize,
        /// Only ribbon signatures of coprime pairs with a + b ≤ max_weight + 1.
        #[arg(long)]
        rational_only: bool,
    },
}

#[derive(Subcommand)]
enum ParkingAction {
    Count { mu: String },
    List { mu: String },
}

enum Failure {
    Usage(String),
    Property(String),
    Cap(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(cap) => Failure::Cap(cap),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("write failed: {}", e))
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Out {
    format: Format,
    w: BufWriter<io::StdoutLock<'static>>,
}

impl Out {
    fn emit(&mut self, text: &str, value: Value) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.w, "{}", text),
            Format::Jsonl => writeln!(self.w, "{}", value),
        }
    }
}

fn big_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn signature(text: &str) -> Result<Composition, Failure> {
    Ok(text.parse::<Composition>()?)
}

fn check_cap(size: &BigUint, cap: usize) -> Outcome {
    if *size > BigUint::from(cap) {
        return Err(Failure::Cap(cap));
    }
    Ok(())
}

fn run(cli: Cli, out: &mut Out) -> Outcome {
    let cap = usize::try_from(cli.cap).unwrap_or(usize::MAX);
    match cli.command {
        Command::Count { s, all_methods } => {
            let s = signature(&s)?;
            let rec = count_recurrence(&s);
            if !all_methods {
                out.emit(&rec.to_string(), json!({ "s": s.parts(), "count": big_json(&rec) }))?;
                return Ok(());
            }
            let det = count_determinant(&s);
            let exh = count_exhaustive(&s, cap)?;
            let text = format!("recurrence {}\ndeterminant {}\nexhaustive {}", rec, det, exh);
            let value = json!({
                "s": s.parts(),
                "recurrence": big_json(&rec),
                "determinant": big_json(&det),
                "exhaustive": big_json(&exh),
            });
            out.emit(&text, value)?;
            if rec != det || rec != exh {
                return Err(Failure::Property(format!("counting methods disagree for ({})", s)));
            }
        }
        Command::List { family, s } => {
            let s = signature(&s)?;
            check_cap(&family::list_size(family, &s)?, cap)?;
            let mut n = 0usize;
            for item in family::list(family, &s)? {
                out.emit(&item.text, item.json)?;
                n += 1;
            }
            out.emit(&format!("count {}", n), json!({ "count": n }))?;
        }
        Command::Convert { from, to, object, s } => {
            let s = s.as_deref().map(signature).transpose()?;
            let obj = Object::parse(from, &object, s.as_ref())?;
            let tree = obj.to_tree(s.as_ref())?;
            if let Some(s) = &s {
                if &tree.signature() != s {
                    return Err(Failure::Usage(format!("object has signature ({}), not ({})", tree.signature(), s)));
                }
            }
            let image = Object::from_tree(to, &tree)?;
            out.emit(&image.text(), image.json())?;
        }
        Command::Rational { a, b } => {
            let s = rational_signature(a, b)?;
            out.emit(&s.to_string(), json!({ "a": a, "b": b, "s": s.parts() }))?;
        }
        Command::Narayana { s, statistic } => {
            let s = signature(&s)?;
            let stats: Vec<Statistic> = match statistic {
                Some(name) => vec![name.parse()?],
                None => Statistic::ALL
                    .into_iter()
                    .filter(|st| !st.needs_at_least_two() || s.all_at_least_two())
                    .collect(),
            };
            for st in stats {
                let d = narayana_distribution(&s, st, cap)?;
                let value: Value = serde_json::from_str(&d.to_json()).expect("well-formed histogram");
                out.emit(&format!("{} {}", st, d.to_text()), value)?;
            }
        }
        Command::Parking { action } => match action {
            ParkingAction::Count { mu } => {
                let mu: WeakComposition = mu.parse()?;
                let n = count_parking(&mu);
                out.emit(&n.to_string(), json!({ "mu": mu.parts(), "count": big_json(&n) }))?;
            }
            ParkingAction::List { mu } => {
                let mu: WeakComposition = mu.parse()?;
                check_cap(&count_parking(&mu), cap)?;
                let mut n = 0usize;
                for p in enumerate_parking(&mu) {
                    out.emit(&p.to_string(), json!(p.prefs()))?;
                    n += 1;
                }
                out.emit(&format!("count {}", n), json!({ "count": n }))?;
            }
        },
        Command::ArwCompare { a, b, all: _, mu } => {
            let s = rational_signature(a, b)?;
            let paths: Vec<DyckPath> = match mu {
                Some(mu) => vec![DyckPath::new(s, mu.parse()?)?],
                None => {
                    check_cap(&count_recurrence(&s), cap)?;
                    enumerate_paths(&s).collect()
                }
            };
            let mut differ = 0;
            for p in &paths {
                let report = compare_constructions(p, a, b)?;
                differ += usize::from(!report.equal);
                let value = serde_json::to_value(&report).expect("plain data serializes");
                out.emit(&value.to_string(), value)?;
            }
            if paths.len() > 1 {
                out.emit(
                    &format!("paths {} differ {}", paths.len(), differ),
                    json!({ "paths": paths.len(), "differ": differ }),
                )?;
            }
        }
        Command::Verify { max_weight, rational_only } => {
            let sigs: Vec<Composition> = if rational_only {
                let mut v = Vec::new();
                for a in 1..=max_weight as u64 {
                    for b in 1..=(max_weight as u64 + 1).saturating_sub(a) {
                        if let Ok(s) = rational_signature(a, b) {
                            v.push(s);
                        }
                    }
                }
                v
            } else {
                compositions_up_to(max_weight)
            };
            let mut failures = 0;
            for s in &sigs {
                let row = verify::check(s, cap)?;
                failures += usize::from(!row.ok());
                out.emit(&row.text(), row.json())?;
            }
            out.emit(
                &format!("verified {} signatures, {} failures", sigs.len(), failures),
                json!({ "signatures": sigs.len(), "failures": failures }),
            )?;
            if failures > 0 {
                return Err(Failure::Property(format!("{} signatures failed", failures)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { format: cli.format, w: BufWriter::new(io::stdout().lock()) };
    let result = run(cli, &mut out);
    let flushed = out.w.flush();
    let code = match result {
        Ok(()) => 0,
        Err(Failure::Property(msg)) => {
            eprintln!("scat: {}", msg);
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("scat: {}", msg);
            2
        }
        Err(Failure::Cap(cap)) => {
            eprintln!("scat: more than {} objects; raise --cap or SCAT_CAP", cap);
            3
        }
    };
    if code == 0 && flushed.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
