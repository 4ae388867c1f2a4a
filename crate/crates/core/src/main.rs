//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 invariant
//! violation (a measured count contradicted a proved bound).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lastsym::alphabet::Alphabet;
use lastsym::corpus::random_regex;
use lastsym::dfa::{minimize, DEFAULT_SUBSET_CAP};
use lastsym::dot::{dfa_to_dot, nfa_to_dot};
use lastsym::format::{dfa_from_text, dfa_to_text, nfa_to_text};
use lastsym::nfa::{build_nfa, symbol_partition};
use lastsym::regex::parse;
use lastsym::report::{analyze, witness_row, BoundReport, CSV_HEADER};
use lastsym::unary::LandauTable;
use lastsym::witness::{
    select_primes, witness_nfa, witness_regex_text, CertificationRecord, WitnessSpec,
};

#[derive(Parser)]
#[command(name = "lastsym", version, about = "Regular expressions, last-symbol NFAs, and DFA state complexity experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlphabetArg {
    /// Alphabet symbols, one character each, in index order.
    #[arg(long, default_value = "ab")]
    alphabet: String,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a regex and print its width, nullability and canonical form.
    Parse {
        regex: String,
        #[command(flatten)]
        alphabet: AlphabetArg,
    },
    /// Build the width+1 NFA for a regex and print it in text format.
    Nfa {
        regex: String,
        #[command(flatten)]
        alphabet: AlphabetArg,
        /// Write the NFA text to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a DOT rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the full pipeline for a regex: NFA, subset construction,
    /// minimization and a bound-report row.
    Dfa {
        regex: String,
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        max_subsets: usize,
        /// Write the (unminimized) DFA text to a file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the minimal DFA text to a file.
        #[arg(long)]
        min_out: Option<PathBuf>,
        /// Write a DOT rendering of the DFA.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Append the report row (with header) to a CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Minimize a DFA given in text format.
    Minimize {
        /// Path to a DFA text file.
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate a lower-bound witness and optionally certify it.
    Witness {
        /// Size budget for prime selection (mutually exclusive with --cycles).
        #[arg(long)]
        budget: Option<usize>,
        /// Explicit cycle lengths, e.g. 3,5,7.
        #[arg(long, value_delimiter = ',')]
        cycles: Option<Vec<u64>>,
        /// Determinize, minimize and verify the lower bound.
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        max_subsets: usize,
        /// Length bound for the three-way agreement check.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Write the witness NFA text to a file.
        #[arg(long)]
        nfa_out: Option<PathBuf>,
        /// Write a DOT rendering of the witness NFA.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Append the certification row (with header) to a CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print n, g(n) and a maximizing multiset for 0..=N as CSV.
    Landau { n: usize },
    /// One witness row plus random-regex rows per width in a range; CSV.
    Sweep {
        n_min: usize,
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random regexes per width.
        #[arg(long, default_value_t = 2)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        max_subsets: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Also write the CSV to a file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

enum CliError {
    Input(String),
    Budget(String),
    Invariant(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Budget(m) | CliError::Invariant(m) => m,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Parse { regex, alphabet } => {
            let alphabet = parse_alphabet(&alphabet.alphabet)?;
            let ast = parse(&regex, &alphabet).map_err(input_err)?;
            println!("width: {}", ast.width());
            println!("nullable: {}", ast.nullable());
            println!("canonical: {}", ast.to_canonical_string(&alphabet));
            Ok(())
        }
        Command::Nfa { regex, alphabet, out, dot } => {
            let alphabet = parse_alphabet(&alphabet.alphabet)?;
            let ast = parse(&regex, &alphabet).map_err(input_err)?;
            let nfa = build_nfa(&ast, &alphabet);
            let partition = symbol_partition(&nfa);
            let text = nfa_to_text(&nfa);
            write_or_print(out.as_deref(), &text)?;
            if let Some(path) = dot {
                write_file(&path, &nfa_to_dot(&nfa))?;
            }
            eprintln!(
                "states: {} (width {} + 1), n1: {}, remembers last symbol: {}",
                nfa.state_count(),
                ast.width(),
                partition.n1(),
                partition.remembers_last_symbol()
            );
            Ok(())
        }
        Command::Dfa { regex, alphabet, max_subsets, out, min_out, dot, csv } => {
            let alphabet = parse_alphabet(&alphabet.alphabet)?;
            let ast = parse(&regex, &alphabet).map_err(input_err)?;
            let nfa = build_nfa(&ast, &alphabet);
            let analysis = analyze(&regex, Some(ast.width()), &nfa, max_subsets);
            enforce_chain(&analysis.report)?;
            let dfa = analysis.dfa.as_ref().ok_or_else(|| {
                CliError::Budget(format!("subset cap {max_subsets} exceeded; raise --max-subsets"))
            })?;
            if let Some(path) = out {
                write_file(&path, &dfa_to_text(dfa))?;
            }
            if let Some(path) = min_out {
                write_file(&path, &dfa_to_text(analysis.minimal.as_ref().expect("present with dfa")))?;
            }
            if let Some(path) = dot {
                write_file(&path, &dfa_to_dot(dfa))?;
            }
            let rows = [analysis.report.to_csv_row()];
            emit_csv(csv.as_deref(), &rows)?;
            Ok(())
        }
        Command::Minimize { file, out, dot } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
            let dfa = dfa_from_text(&text).map_err(input_err)?;
            let minimal = minimize(&dfa);
            eprintln!("states: {} -> {}", dfa.state_count(), minimal.state_count());
            write_or_print(out.as_deref(), &dfa_to_text(&minimal))?;
            if let Some(path) = dot {
                write_file(&path, &dfa_to_dot(&minimal))?;
            }
            Ok(())
        }
        Command::Witness { budget, cycles, certify: do_certify, max_subsets, max_len, nfa_out, dot, csv } => {
            let spec = match (budget, cycles) {
                (Some(n), None) => select_primes(n).map_err(input_err)?,
                (None, Some(cycles)) => WitnessSpec::new(cycles).map_err(input_err)?,
                _ => {
                    return Err(CliError::Input(
                        "exactly one of --budget and --cycles is required".into(),
                    ))
                }
            };
            let lower = spec.lower_bound();
            println!("cycles: {:?}", spec.cycles());
            println!("regex: {}", witness_regex_text(&spec));
            println!("regex width: {}", spec.regex_width());
            println!("nfa states: {}", spec.nfa_state_count());
            println!("lower bound: {}", lower.product);
            let nfa = witness_nfa(&spec);
            if let Some(path) = nfa_out {
                write_file(&path, &nfa_to_text(&nfa))?;
            }
            if let Some(path) = dot {
                write_file(&path, &nfa_to_dot(&nfa))?;
            }
            if do_certify {
                let (report, record) = witness_row(&spec, max_subsets, max_len);
                enforce_chain(&report)?;
                let record = record.ok_or_else(|| {
                    CliError::Budget(format!("subset cap {max_subsets} exceeded; raise --max-subsets"))
                })?;
                println!("reachable subsets: {}", record.reachable_subsets);
                println!("minimal dfa: {}", record.minimal_states);
                println!("lower bound met: {}", record.lower_bound_met);
                println!("regex/nfa dfas equivalent: {}", record.dfas_equivalent);
                println!("three-way agreement (len <= {}): {}", record.agreement_max_len, record.agreement_ok);
                check_certification(&spec, &record)?;
                emit_csv(csv.as_deref(), &[report.to_csv_row()])?;
            }
            Ok(())
        }
        Command::Landau { n } => {
            let table = LandauTable::up_to(n).map_err(input_err)?;
            println!("n,g,witness");
            for i in 0..=n {
                let parts: Vec<String> = table.witness(i).iter().map(u64::to_string).collect();
                println!("{i},{},{{{}}}", table.value(i), parts.join(" "));
            }
            Ok(())
        }
        Command::Sweep { n_min, n_max, seed, samples, max_subsets, max_len, csv } => {
            if n_min > n_max {
                return Err(CliError::Input("n_min must not exceed n_max".into()));
            }
            let alphabet: Alphabet = "ab".parse().expect("static alphabet");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rows = Vec::new();
            for n in n_min..=n_max {
                match select_primes(n) {
                    Ok(spec) => {
                        let (report, record) = witness_row(&spec, max_subsets, max_len);
                        enforce_chain(&report)?;
                        if let Some(record) = &record {
                            check_certification(&spec, record)?;
                        }
                        rows.push(report.to_csv_row());
                    }
                    Err(e) => rows.push(format!("witness_skipped_n{n},,,,,,,,,,,,,{e}")),
                }
                for sample in 0..samples {
                    let ast = random_regex(&mut rng, n, &alphabet);
                    let label = format!("random_w{n}_s{sample}");
                    let nfa = build_nfa(&ast, &alphabet);
                    let analysis = analyze(&label, Some(ast.width()), &nfa, max_subsets);
                    enforce_chain(&analysis.report)?;
                    rows.push(analysis.report.to_csv_row());
                }
            }
            emit_csv(csv.as_deref(), &rows)?;
            Ok(())
        }
    }
}

fn check_certification(spec: &WitnessSpec, record: &CertificationRecord) -> Result<(), CliError> {
    if !record.lower_bound_met || !record.dfas_equivalent || !record.agreement_ok {
        return Err(CliError::Invariant(format!(
            "witness certification failed for {}",
            spec.label()
        )));
    }
    Ok(())
}

fn enforce_chain(report: &BoundReport) -> Result<(), CliError> {
    match report.chain_violation() {
        Some(diagnostic) => Err(CliError::Invariant(diagnostic)),
        None => Ok(()),
    }
}

fn parse_alphabet(s: &str) -> Result<Alphabet, CliError> {
    s.parse().map_err(input_err)
}

fn write_file(path: &std::path::Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&std::path::Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_csv(path: Option<&std::path::Path>, rows: &[String]) -> Result<(), CliError> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(row);
        out.push('\n');
    }
    print!("{out}");
    if let Some(p) = path {
        write_file(p, &out)?;
    }
    Ok(())
}
