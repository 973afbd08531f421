//! `natded`: batch entry points for checking, rendering, model checking,
//! soundness fuzzing and serving.
//!
//! Exit codes: 0 success, 1 negative result (rejected proof, countermodel,
//! failed corpus run), 2 unreadable or malformed input, 64 usage error.

use std::fs;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use natded_core::corpus::{self, CorpusEntry};
use natded_core::formats::{decode_proof, encode_proof, parse_formula, print_formula, render_ok_listing, render_tree};
use natded_core::fuzz::{GenStats, ProofGen, DEPTH_CAP};
use natded_core::semantics::{entails_with, SearchConfig, Verdict, DEFAULT_SEED};
use natded_core::{check, CheckReport, Formula, ProofNode, Rule};
use natded_service::Config;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "natded", version, about = "Natural deduction for first-order logic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Numbered `OK p a` lines with the rule name.
    Ok,
    /// Indented goal tree.
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof document.
    Check { file: PathBuf },
    /// Render a proof document.
    Print {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ok")]
        format: Format,
    },
    /// Search for a countermodel to the formula in a `.fol` file.
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generate random accepted proofs and look for countermodels to them.
    FuzzSoundness {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Interpretations examined per proof.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// List the corpus, optionally checking it or writing it out as files.
    Corpus {
        /// Check every proof and validate every theorem up to size 3.
        #[arg(long)]
        run_all: bool,
        /// Write `<name>.fol` and `<name>.ndproof` files into this directory.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
        /// Read the corpus from a directory instead of the bundled one.
        #[arg(long, value_name = "DIR")]
        from: Option<PathBuf>,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long)]
        port: Option<u16>,
        #[arg(long)]
        bind: Option<IpAddr>,
        /// Save sessions here and reload them on startup.
        #[arg(long, value_name = "DIR")]
        persist: Option<PathBuf>,
        #[arg(long, value_name = "DIR")]
        corpus: Option<PathBuf>,
        /// Serve a web front end from this directory at `/`.
        #[arg(long = "static", value_name = "DIR")]
        static_dir: Option<PathBuf>,
        #[arg(long)]
        budget_cap: Option<u64>,
    },
}

/// A failure that ends the command with `code`.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(path: &Path, message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {message}", path.display()),
    }
}

type Outcome = Result<ExitCode, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(path, e))
}

fn load_proof(path: &Path) -> Result<ProofNode, Failure> {
    let doc: serde_json::Value =
        serde_json::from_str(&read(path)?).map_err(|e| input_error(path, format!("invalid JSON: {e}")))?;
    decode_proof(&doc).map_err(|e| input_error(path, e))
}

fn load_formula(path: &Path) -> Result<Formula, Failure> {
    parse_formula(&read(path)?).map_err(|e| input_error(path, e))
}

fn negative(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

fn describe(verdict: &Verdict) -> String {
    match verdict {
        Verdict::Valid {
            bound,
            exhaustive: true,
            checked,
            ..
        } => format!("valid up to {bound} (exhaustive, {checked} interpretations)"),
        Verdict::Valid {
            bound, checked, seed, ..
        } => format!(
            "valid up to {bound} (sampled, {checked} interpretations, seed {})",
            seed.unwrap_or_default()
        ),
        Verdict::Countermodel { model, seed } => {
            let origin = seed.map_or("enumerated".to_string(), |s| format!("sampled, seed {s}"));
            format!("countermodel ({origin}):\n{model}")
        }
    }
}

fn cmd_check(file: &Path) -> Outcome {
    let proof = load_proof(file)?;
    match check(&proof) {
        CheckReport::Accepted => {
            println!("accepted ({} nodes)", proof.size());
            Ok(ExitCode::SUCCESS)
        }
        CheckReport::Rejected { path, reason } => {
            println!("rejected at {path:?}: {}: {reason}", reason.code());
            Ok(ExitCode::from(EXIT_NEGATIVE))
        }
    }
}

fn cmd_print(file: &Path, format: Format) -> Outcome {
    let proof = load_proof(file)?;
    print!(
        "{}",
        match format {
            Format::Ok => render_ok_listing(&proof),
            Format::Tree => render_tree(&proof),
        }
    );
    Ok(ExitCode::SUCCESS)
}

fn search(assumptions: &[Formula], p: &Formula, config: &SearchConfig) -> Result<Verdict, Failure> {
    entails_with(assumptions, p, config).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    })
}

fn cmd_validate(file: &Path, max_size: usize, budget: u64, seed: Option<u64>) -> Outcome {
    let p = load_formula(file)?;
    let verdict = search(&[], &p, &SearchConfig::new(max_size, budget).with_seed(seed.unwrap_or(DEFAULT_SEED)))?;
    println!("{}", describe(&verdict));
    Ok(negative(verdict.is_valid()))
}

fn cmd_fuzz(count: usize, max_size: usize, seed: u64, budget: u64) -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = GenStats::default();
    let proofs = ProofGen::default().generate(&mut rng, count, &mut stats);
    let config = SearchConfig::new(max_size, budget).with_seed(seed);
    let (mut exhaustive, mut sampled, mut nodes, mut interpretations) = (0, 0, 0, 0u64);
    let mut countermodels = 0;
    for (i, proof) in proofs.iter().enumerate() {
        nodes += proof.size();
        match search(&proof.goal.assumptions, &proof.goal.formula, &config)? {
            Verdict::Valid {
                exhaustive: e, checked, ..
            } => {
                interpretations += checked;
                if e {
                    exhaustive += 1;
                } else {
                    sampled += 1;
                }
            }
            verdict @ Verdict::Countermodel { .. } => {
                countermodels += 1;
                println!("proof {i} has a {}", describe(&verdict));
                print!("{}", render_ok_listing(proof));
            }
        }
    }
    println!("proofs: {count} accepted, {} discarded, {} attempts", stats.discarded, stats.attempts);
    println!("nodes: {nodes} (depth cap {DEPTH_CAP})");
    let uses: Vec<String> = Rule::ALL.iter().map(|r| format!("{}={}", r.name(), stats.count(*r))).collect();
    println!("rule uses: {}", uses.join(" "));
    println!(
        "model checks: up to size {max_size}, {exhaustive} exhaustive, {sampled} sampled, {interpretations} interpretations"
    );
    println!("countermodels: {countermodels}");
    println!("elapsed: {:.2?}", started.elapsed());
    Ok(negative(countermodels == 0))
}

/// Checks the proof of an entry and validates its theorem. `None` when
/// there is nothing to check.
fn run_entry(entry: &CorpusEntry) -> Result<Option<String>, String> {
    let Some(proof) = &entry.proof else {
        return Ok(None);
    };
    if let CheckReport::Rejected { path, reason } = check(proof) {
        return Err(format!("proof rejected at {path:?}: {reason}"));
    }
    let verdict = entails_with(
        &proof.goal.assumptions,
        &proof.goal.formula,
        &SearchConfig::new(3, 10_000),
    )
    .map_err(|e| e.to_string())?;
    if verdict.is_valid() {
        Ok(Some(format!("accepted, {}", describe(&verdict))))
    } else {
        Err(describe(&verdict))
    }
}

fn export_entry(dir: &Path, entry: &CorpusEntry) -> Result<(), Failure> {
    let io = |path: &Path, e: std::io::Error| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    };
    let fol = dir.join(format!("{}.fol", entry.name));
    fs::write(&fol, format!("{}\n", print_formula(&entry.goal))).map_err(|e| io(&fol, e))?;
    if let Some(proof) = &entry.proof {
        let path = dir.join(format!("{}.ndproof", entry.name));
        let text = serde_json::to_string_pretty(&encode_proof(proof)).expect("documents serialize");
        fs::write(&path, text + "\n").map_err(|e| io(&path, e))?;
    }
    Ok(())
}

fn cmd_corpus(run_all: bool, export: Option<&Path>, from: Option<&Path>) -> Outcome {
    let entries = match from {
        Some(dir) => corpus::load_dir(dir).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        })?,
        None => corpus::corpus(),
    };
    if let Some(dir) = export {
        fs::create_dir_all(dir).map_err(|e| input_error(dir, e))?;
        for entry in &entries {
            export_entry(dir, entry)?;
        }
        println!("wrote {} entries to {}", entries.len(), dir.display());
    }
    let mut failures = 0;
    for entry in &entries {
        let kind = if entry.proof.is_some() { "proof" } else { "goal " };
        if !run_all {
            println!("{:<20} {kind}  {}", entry.name, print_formula(&entry.goal));
            continue;
        }
        match run_entry(entry) {
            Ok(Some(summary)) => println!("{:<20} ok    {summary}", entry.name),
            Ok(None) => println!("{:<20} --    no proof", entry.name),
            Err(message) => {
                failures += 1;
                println!("{:<20} FAIL  {message}", entry.name);
            }
        }
    }
    Ok(negative(failures == 0))
}

fn cmd_serve(
    port: Option<u16>,
    bind: Option<IpAddr>,
    persist: Option<PathBuf>,
    corpus: Option<PathBuf>,
    static_dir: Option<PathBuf>,
    budget_cap: Option<u64>,
) -> Outcome {
    let startup = |e: natded_service::StartupError| Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    };
    let mut config = Config::from_env().map_err(startup)?;
    if let Some(ip) = bind {
        config.addr = SocketAddr::new(ip, config.addr.port());
    }
    if let Some(port) = port {
        config.addr.set_port(port);
    }
    config.persist_dir = persist.or(config.persist_dir);
    config.corpus_dir = corpus.or(config.corpus_dir);
    config.static_dir = static_dir.or(config.static_dir);
    config.budget_cap = budget_cap.unwrap_or(config.budget_cap);
    let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    })?;
    runtime.block_on(natded_service::serve(config)).map_err(startup)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Check { file } => cmd_check(&file),
        Command::Print { file, format } => cmd_print(&file, format),
        Command::Validate {
            file,
            max_size,
            budget,
            seed,
        } => cmd_validate(&file, max_size, budget, seed),
        Command::FuzzSoundness {
            count,
            max_size,
            seed,
            budget,
        } => cmd_fuzz(count, max_size, seed, budget),
        Command::Corpus { run_all, export, from } => cmd_corpus(run_all, export.as_deref(), from.as_deref()),
        Command::Serve {
            port,
            bind,
            persist,
            corpus,
            static_dir,
            budget_cap,
        } => cmd_serve(port, bind, persist, corpus, static_dir, budget_cap),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("natded: {message}");
            ExitCode::from(code)
        }
    }
}
