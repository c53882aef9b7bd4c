use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use omega_core::kaehler::{kaehler_presentation, top_form_hilbert_function};
use omega_core::scheme::{parse_scheme, separators};
use omega_core::verify::{self, VerificationReport};
use omega_core::{regularity_index, FatPointScheme, HilbertFunction};

const DEFAULT_SEED: u64 = 2024;
const SWEEP_SIZE: usize = 50;

#[derive(Parser)]
#[command(name = "omega", version, about = "Hilbert functions and Kähler differential modules of fat point schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(clap::Args)]
struct Common {
    /// Scheme file
    #[arg(long, value_name = "FILE")]
    scheme: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of the coordinate ring of a scheme
    Hf {
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert function of the module of Kähler differential k-forms
    Kaehler {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'k', value_name = "K")]
        k: usize,
        /// Print the presentation instead of the Hilbert function
        #[arg(long)]
        presentation: bool,
    },
    /// Check a claim on a scheme; `sweep` runs the seeded random sweep
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "CLAIM")]
        claim_arg: Option<String>,
        #[arg(long = "claim", value_name = "ID")]
        claim: Option<String>,
        #[arg(short = 'k', value_name = "K")]
        k: Option<usize>,
        /// Degrees scanned past the computed start of windowed checks [default: n + 3]
        #[arg(long, value_name = "N")]
        window: Option<usize>,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Recompute a built-in example; lists the examples without a name
    Example {
        name: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Minimal separators of the points of a scheme
    Separators {
        #[command(flatten)]
        common: Common,
        /// Point index, 1-based; all points when omitted
        #[arg(long, value_name = "J")]
        point: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<omega_core::Error> for Failure {
    fn from(e: omega_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(common: &Common) -> Result<FatPointScheme, Failure> {
    let path = common.scheme.as_ref().ok_or_else(|| Failure::Usage("missing --scheme FILE".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?;
    parse_scheme(&text).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))
}

fn hf_json(hf: &HilbertFunction) -> Result<serde_json::Value, Failure> {
    Ok(json!({
        "values": hf.printed_values(),
        "stable_from": hf.stable_from(),
        "stable_value": hf.stable_value(),
        "regularity_index": regularity_index(hf)?,
    }))
}

fn print_reports(reports: &[VerificationReport], format: Format) -> Result<(), Failure> {
    for r in reports {
        match format {
            Format::Text => println!("{}", r),
            Format::Structured => println!("{}", serde_json::to_string(r).expect("serializable")),
        }
    }
    if reports.iter().any(|r| !r.holds()) {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Hf { common } => {
            let w = load(&common)?;
            let hf = omega_core::scheme::hilbert_function_by_interpolation(&w);
            let ri = regularity_index(&hf)?;
            match common.format {
                Format::Text => {
                    println!("{}", hf);
                    println!("deg={} ri={}", w.degree(), ri);
                }
                Format::Structured => {
                    let mut v = hf_json(&hf)?;
                    v["degree"] = json!(w.degree());
                    println!("{}", v);
                }
            }
        }
        Command::Kaehler { common, k, presentation } => {
            let w = load(&common)?;
            let pres = kaehler_presentation(&w, k)?;
            if presentation {
                print!("{}", pres);
                return Ok(());
            }
            let hf = if k == w.nvars() { top_form_hilbert_function(&w)? } else { pres.hilbert_function()? };
            let ri = regularity_index(&hf)?;
            match common.format {
                Format::Text => {
                    println!("{}", hf);
                    println!("HP={} ri={}", hf.stable_value(), ri);
                }
                Format::Structured => {
                    let mut v = hf_json(&hf)?;
                    v["k"] = json!(k);
                    println!("{}", v);
                }
            }
        }
        Command::Verify { common, claim_arg, claim, k, window, seed } => {
            let id = match (claim_arg, claim) {
                (Some(a), Some(b)) if a != b => return Err(Failure::Usage("conflicting claim ids".into())),
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => return Err(Failure::Usage("missing claim id".into())),
            };
            if id == "sweep" {
                return print_reports(&verify::random_sweep(seed, SWEEP_SIZE)?, common.format);
            }
            let w = load(&common)?;
            let ks = k.map(|k| vec![k]);
            let window = window.unwrap_or_else(|| verify::default_window(&w));
            let report = verify::verify_claim(&id, &w, ks.as_deref(), window)?;
            print_reports(&[report], common.format)?;
        }
        Command::Example { name, format } => {
            let Some(name) = name else {
                for n in verify::example_names() {
                    println!("{}", n);
                }
                return Ok(());
            };
            let out = verify::builtin_example(&name)?;
            match format {
                Format::Text => print!("{}", out),
                Format::Structured => println!("{}", serde_json::to_string(&out).expect("serializable")),
            }
            if out.reports.iter().any(|r| !r.holds()) {
                return Err(Failure::Verification);
            }
        }
        Command::Separators { common, point } => {
            let w = load(&common)?;
            let indices: Vec<usize> = match point {
                Some(j) => vec![j],
                None => (1..=w.len()).collect(),
            };
            let mut all = Vec::new();
            for j in indices {
                let seps = separators(&w, j)?;
                match common.format {
                    Format::Text => {
                        println!("point {} {} separators={}", j, w.points()[j - 1], seps.len());
                        for f in &seps {
                            println!("  {}", f);
                        }
                    }
                    Format::Structured => all.push(json!({
                        "point": j,
                        "separators": seps.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    })),
                }
            }
            if common.format == Format::Structured {
                println!("{}", serde_json::Value::Array(all));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("omega: {}", msg);
            ExitCode::from(2)
        }
    }
}
