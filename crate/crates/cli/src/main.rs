use std::io::Write;
use std::process::ExitCode;

use abacus_core::verify::{self, CaseOutcome, VerifyReport, DEFAULT_SEED};
use abacus_core::{
    block_partition, e_core, e_quotient_charged, ennola_e, epsilon_sign, generic_degree,
    hc_partition, mod_cyclotomic, specialization, uglov, verify_mainthm1, ChargedMultiPartition,
    CuspidalPairGL, Error, MultiCharge, MultiPartition, Partition, Variant,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "abacus",
    version,
    about = "Cores, quotients, level-rank maps and block checks for GL_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// e-core and charged e-quotient of a partition
    Core {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        e: usize,
    },
    /// Level-rank bijection from e-multipartitions to m-multipartitions
    Uglov {
        #[arg(long, allow_hyphen_values = true)]
        mp: String,
        #[arg(long, allow_hyphen_values = true)]
        charges: String,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        m: usize,
    },
    /// Series of GL_n grouped by e-core
    Series {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
    },
    /// Generic degree, optionally reduced mod Phi_e with its sign
    Degree {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        e: Option<usize>,
    },
    /// Hecke parameters of the series with the given core
    Specialize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        core: String,
        #[arg(long, default_value = "gl")]
        variant: Variant,
    },
    /// Blocks of the series with the given core at a primitive m-th root of unity
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        core: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "gl")]
        variant: Variant,
    },
    /// Intersections of Phi_e- and Phi_m-series and their blocks
    Intersections {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        m: usize,
    },
    /// Exhaustive or seeded verification sweeps
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

#[derive(Args)]
struct Sweep {
    /// Emit one JSON line per case before the summary
    #[arg(long)]
    stream: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Intersections of series are single blocks
    Thm1 {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        max_m: usize,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// The level-rank diagram commutes
    Thm2 {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        max_m: usize,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Generating-function identities for residues
    ContentLemma {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_s: i64,
        #[arg(long, default_value_t = 5)]
        max_e: usize,
        /// Fixed coefficient window instead of the per-case default.
        #[arg(long)]
        window: Option<u32>,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Same m-core iff equal residue keys mod m
    ContentProp {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Cores are exactly the partitions with full Phi_e-multiplicity
    Cuspidal {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        max_e: usize,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Generic degrees mod Phi_e against wreath-product degrees
    Degmod {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Use the congruence normalized by the core and weight
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Seeded random round trips of every bijection
    Roundtrip {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        sweep: Sweep,
    },
}

fn partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

// A closed pipe is not an error worth reporting.
fn print_line(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_json(value: &Value) {
    print_line(&serde_json::to_string_pretty(value).expect("JSON values always serialize"));
}

fn series_pair(n: usize, e: usize, core: &str) -> Result<CuspidalPairGL, Error> {
    CuspidalPairGL::new(n, e, partition(core)?)
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Core { partition: p, e } => {
            let p = partition(&p)?;
            let core = e_core(&p, e)?;
            let (quotient, charges) = e_quotient_charged(&p, e, core.len() as i64)?.into_parts();
            print_json(&json!({
                "core": core,
                "quotient": [quotient],
                "charges": charges,
            }));
        }
        Command::Uglov { mp, charges, e, m } => {
            let mp: MultiPartition = mp.parse()?;
            let charges: MultiCharge = charges.parse()?;
            if mp.len() != e {
                return Err(Error::ComponentMismatch {
                    expected: e,
                    found: mp.len(),
                });
            }
            let (mp, charges) = uglov(&ChargedMultiPartition::new(mp, charges)?, m)?.into_parts();
            print_json(&json!({ "mp": mp, "charges": charges }));
        }
        Command::Series { n, e } => {
            print_json(&json!({ "n": n, "e": e, "series": json!(hc_partition(n, e)?) }));
        }
        Command::Degree { partition: p, e } => {
            let p = partition(&p)?;
            let degree = generic_degree(&p)?;
            let mut out = json!({ "partition": p, "degree": degree });
            if let Some(e) = e {
                out["e"] = json!(e);
                out["remainder"] = json!(mod_cyclotomic(&degree, e)?);
                out["sign"] = match epsilon_sign(&p, e) {
                    Ok(sign) => json!(sign),
                    Err(_) => Value::Null,
                };
            }
            print_json(&out);
        }
        Command::Specialize {
            n,
            e,
            core,
            variant,
        } => {
            let pair = series_pair(n, e, &core)?;
            print_json(&json!({
                "pair": pair,
                "specialization": json!(specialization(&pair, variant)?),
            }));
        }
        Command::Blocks {
            n,
            e,
            core,
            m,
            variant,
        } => {
            let pair = series_pair(n, e, &core)?;
            let blocks = match variant {
                Variant::GL => block_partition(e, pair.a, &pair.core, m)?,
                Variant::GU => gu_blocks(&pair, m)?,
            };
            print_json(&json!({ "pair": pair, "m": m, "variant": variant, "blocks": blocks }));
        }
        Command::Intersections { n, e, m } => {
            let report = verify_mainthm1(n, e, m)?;
            print_json(&json!(report));
            return Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Verify { which } => return Ok(run_verify(which)),
    }
    Ok(ExitCode::SUCCESS)
}

/// GU blocks at `x = exp(2πi/m⁻)`.
fn gu_blocks(pair: &CuspidalPairGL, m: usize) -> Result<Vec<Vec<MultiPartition>>, Error> {
    let mps = MultiPartition::all_of_size(pair.e, pair.a);
    if pair.a == 0 {
        return Ok(vec![mps]);
    }
    let params = specialization(pair, Variant::GU)?;
    let root = ennola_e(m)?;
    let mut blocks: Vec<(abacus_core::RootResidueKey, Vec<MultiPartition>)> = Vec::new();
    for mp in mps {
        let key = abacus_core::lm_block_key(&mp, &params, root)?;
        match blocks.iter_mut().find(|(k, _)| *k == key) {
            Some((_, block)) => block.push(mp),
            None => blocks.push((key, vec![mp])),
        }
    }
    Ok(blocks.into_iter().map(|(_, b)| b).collect())
}

fn run_verify(which: VerifyCommand) -> ExitCode {
    let stream = match &which {
        VerifyCommand::Thm1 { sweep, .. }
        | VerifyCommand::Thm2 { sweep, .. }
        | VerifyCommand::ContentLemma { sweep, .. }
        | VerifyCommand::ContentProp { sweep, .. }
        | VerifyCommand::Cuspidal { sweep, .. }
        | VerifyCommand::Degmod { sweep, .. }
        | VerifyCommand::Roundtrip { sweep, .. } => sweep.stream,
    };
    let mut emit = |case: &CaseOutcome| {
        print_line(&serde_json::to_string(case).expect("case lines serialize"));
    };
    let sink: Option<&mut dyn FnMut(&CaseOutcome)> = if stream { Some(&mut emit) } else { None };
    let report: VerifyReport = match which {
        VerifyCommand::Thm1 { max_n, max_m, .. } => verify::thm1(max_n, max_m, sink),
        VerifyCommand::Thm2 { max_n, max_m, .. } => verify::thm2(max_n, max_m, sink),
        VerifyCommand::ContentLemma {
            max_n,
            max_s,
            max_e,
            window,
            ..
        } => verify::content_lemma(max_n, max_s, max_e, window, sink),
        VerifyCommand::ContentProp { max_n, max_m, .. } => verify::content_prop(max_n, max_m, sink),
        VerifyCommand::Cuspidal { max_n, max_e, .. } => verify::cuspidal(max_n, max_e, sink),
        VerifyCommand::Degmod {
            max_n, normalized, ..
        } => verify::degmod(max_n, normalized, sink),
        VerifyCommand::Roundtrip { trials, seed, .. } => verify::roundtrip(trials, seed, sink),
    };
    if stream {
        print_line(&serde_json::to_string(&report).expect("reports serialize"));
    } else {
        print_json(&json!(report));
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(std::io::stderr(), "{}", json!({ "error": err.to_string() }));
            ExitCode::from(2)
        }
    }
}
