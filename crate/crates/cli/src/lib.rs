//! The `mealy` command line. [`run`] is a pure function of the arguments
//! and the files they name, which keeps it testable without a process.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use mealy::cycles::{self, Cycle};
use mealy::enrichment::{enrich_with, Branch};
use mealy::finiteness::{self, DecideConfig};
use mealy::format::{self, Machine};
use mealy::random::{self, SampleParams};
use mealy::report::{self, MachineSummary, Report};
use mealy::{Automaton, Error, MealyMachine};

/// Exit code for usage and parse errors.
pub const EXIT_USAGE: i32 = 1;
/// Exit code for inputs that violate an operation's precondition.
pub const EXIT_PRECONDITION: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Auto,
    Binary,
    NoReturn,
    Reversible,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Auto => Branch::Auto,
            BranchArg::Binary => Branch::Binary,
            BranchArg::NoReturn => Branch::NoReturn,
            BranchArg::Reversible => Branch::Reversible,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mealy", version, about = "Analyse Mealy automata and the groups they generate")]
struct Cli {
    /// Rendering of reports.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document and print its predicate flags.
    Check { file: PathBuf },
    /// Print the dual machine (states and letters exchanged).
    Dual { file: PathBuf },
    /// Print the inverse of an invertible machine.
    Inverse { file: PathBuf },
    /// Print the n-th power of a machine.
    Power {
        n: usize,
        file: PathBuf,
        /// Largest number of states to materialize.
        #[arg(long, default_value_t = mealy::mealy::DEFAULT_POWER_CAP)]
        cap: usize,
    },
    /// Remove the states not reachable from a cycle.
    Prune { file: PathBuf },
    /// Find a cycle with exit and classify the exits of cycles.
    Cycles {
        file: PathBuf,
        /// Also classify this cycle, given by its states (e.g. "1 2 3").
        #[arg(long, requires = "labels")]
        cycle: Option<String>,
        /// Letters of `--cycle` (e.g. "a a b").
        #[arg(long, requires = "cycle")]
        labels: Option<String>,
    },
    /// Enrich an automaton into an invertible machine generating an infinite group.
    Enrich {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        branch: BranchArg,
    },
    /// Look for a finiteness or infiniteness certificate.
    Finiteness {
        file: PathBuf,
        /// Element budget of the semigroup closure.
        #[arg(long, env = "MEALY_BUDGET", default_value_t = finiteness::DEFAULT_CLOSURE_BUDGET)]
        budget: usize,
        /// Deepest power scanned for two-state reversible machines.
        #[arg(long, env = "MEALY_MAX_LEVEL", default_value_t = finiteness::DEFAULT_MAX_LEVEL)]
        max_level: usize,
        /// Bisimulation work cap of the closure, in symbols.
        #[arg(long, env = "MEALY_WORK", default_value_t = finiteness::DEFAULT_CLOSURE_WORK)]
        work: u64,
    },
    /// Size of the orbit of a letter word under a state word.
    Orbit {
        file: PathBuf,
        #[arg(long)]
        element: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = finiteness::DEFAULT_ORBIT_CAP)]
        cap: u64,
    },
    /// Graphviz rendering.
    Dot { file: PathBuf },
    /// Sample an automaton without cycle with exit.
    Sample {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        letters: usize,
        #[arg(long)]
        seed: u64,
        /// Enrich with seeded uniform permutations of the alphabet.
        #[arg(long)]
        enrich_random: bool,
    },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => Output {
            code: 0,
            stdout: out.render(cli.format),
            stderr: String::new(),
        },
        Err(e) => Output {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::NoExitCycle
            | Error::PreconditionViolated(_)
            | Error::NotInvertible { .. }
            | Error::NoSuchTriple
            | Error::BudgetExceeded { .. }
            | Error::EmptyResult
            | Error::NotACycle(_),
        ) => EXIT_PRECONDITION,
        _ => EXIT_USAGE,
    }
}

/// Either a full report or raw text (DOT in text mode).
enum Rendered {
    Report(Report),
    Dot(String, Report),
}

impl Rendered {
    fn render(&self, format: OutputFormat) -> String {
        match (self, format) {
            (Rendered::Report(r), OutputFormat::Text) => r.to_text(),
            (Rendered::Report(r), OutputFormat::Json) => r.to_json(),
            (Rendered::Dot(dot, _), OutputFormat::Text) => dot.clone(),
            (Rendered::Dot(_, r), OutputFormat::Json) => r.to_json(),
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Machine> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    format::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn load_mealy(path: &Path) -> anyhow::Result<MealyMachine> {
    match load(path)? {
        Machine::Mealy(m) => Ok(m),
        Machine::Automaton(_) => bail!("{} is an automaton document; this command needs a mealy document", path.display()),
    }
}

fn base_report(command: &str, path: &Path, machine: &Machine) -> Report {
    Report::new(command)
        .parameter("file", path.display().to_string())
        .machine(MachineSummary::of(machine))
}

fn names(table: &mealy::SymbolTable, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&x| table.name(x).to_string()).collect()
}

fn execute(command: &Command) -> anyhow::Result<Rendered> {
    let report = match command {
        Command::Check { file } => {
            let machine = load(file)?;
            let a = machine.automaton();
            let blocks: Vec<Vec<String>> = a
                .connected_components()
                .blocks()
                .iter()
                .map(|b| names(a.states(), b))
                .collect();
            let warnings: Vec<String> = a.validate().iter().map(ToString::to_string).collect();
            base_report("check", file, &machine).payload(json!({
                "valid": true,
                "warnings": warnings,
                "components": blocks,
            }))
        }
        Command::Dual { file } => {
            let m = load_mealy(file)?;
            let d = m.dual();
            let warnings: Vec<String> = d.automaton().validate().iter().map(ToString::to_string).collect();
            base_report("dual", file, &Machine::Mealy(m))
                .payload(json!({ "warnings": warnings }))
                .document(format::print_mealy(&d))
        }
        Command::Inverse { file } => {
            let m = load_mealy(file)?;
            let inv = m.inverse()?;
            base_report("inverse", file, &Machine::Mealy(m)).document(format::print_mealy(&inv))
        }
        Command::Power { n, file, cap } => {
            let m = load_mealy(file)?;
            let p = m.power_with_cap(*n, *cap)?;
            base_report("power", file, &Machine::Mealy(m))
                .parameter("n", *n)
                .parameter("cap", *cap)
                .payload(json!({
                    "states": p.state_count(),
                    "reversible": p.is_reversible(),
                    "components": p.automaton().connected_components().sizes(),
                }))
                .document(format::print_mealy(&p))
        }
        Command::Prune { file } => {
            let machine = load(file)?;
            let a = machine.automaton();
            let pruned = cycles::prune(a)?;
            let removed = names(a.states(), &pruned.removed);
            let doc = match &machine {
                Machine::Automaton(_) => format::print_automaton(&pruned.automaton),
                Machine::Mealy(m) => {
                    let rho = pruned.kept.iter().map(|&x| m.output_function(x).to_vec()).collect();
                    format::print_mealy(&MealyMachine::new(pruned.automaton.clone(), rho)?)
                }
            };
            base_report("prune", file, &machine)
                .payload(json!({ "removed": removed }))
                .document(doc)
        }
        Command::Cycles { file, cycle, labels } => {
            let machine = load(file)?;
            let a = machine.automaton();
            let witness = cycles::has_cycle_with_exit(a).map(|w| {
                json!({
                    "cycle": report::cycle_view(a, &w.cycle),
                    "exit": report::exit_view(a, &w.exit),
                })
            });
            let mut reports = Vec::new();
            if let (Some(states), Some(letters)) = (cycle, labels) {
                let c = parse_cycle(a, states, letters)?;
                reports.push(report::exit_report_view(a, &cycles::classify_exits(a, &c)?));
            }
            for c in representative_cycles(a) {
                reports.push(report::exit_report_view(a, &cycles::classify_exits(a, &c)?));
            }
            base_report("cycles", file, &machine).payload(json!({
                "has_cycle_with_exit": witness.is_some(),
                "witness": witness,
                "reports": reports,
            }))
        }
        Command::Enrich { file, branch } => {
            let machine = load(file)?;
            let a = machine.automaton();
            let out = enrich_with(a, (*branch).into())?;
            let mut payload = report::enrichment_view(a, &out);
            let verdict = finiteness::enrichment_verdict(&out);
            payload["verdict"] = json!(verdict.kind());
            payload["verdict_certificate"] = json!(verdict.certificate_tag());
            base_report("enrich", file, &machine)
                .parameter("branch", format!("{branch:?}").to_lowercase())
                .payload(payload)
                .document(format::print_mealy(&out.machine))
        }
        Command::Finiteness {
            file,
            budget,
            max_level,
            work,
        } => {
            let m = load_mealy(file)?;
            let config = DecideConfig {
                budget: *budget,
                max_level: *max_level,
                work: *work,
                ..DecideConfig::default()
            };
            let verdict = finiteness::decide(&m, &config);
            base_report("finiteness", file, &Machine::Mealy(m))
                .parameter("budget", *budget)
                .parameter("max_level", *max_level)
                .parameter("work", *work)
                .payload(report::verdict_view(&verdict, &config))
        }
        Command::Orbit {
            file,
            element,
            word,
            cap,
        } => {
            let m = load_mealy(file)?;
            let g = m.states().parse_word(element).map_err(Error::UnknownName)?;
            let s = m.letters().parse_word(word).map_err(Error::UnknownName)?;
            let size = finiteness::orbit_size(&m, &g, &s, *cap)?;
            base_report("orbit", file, &Machine::Mealy(m))
                .parameter("element", element.as_str())
                .parameter("word", word.as_str())
                .parameter("cap", *cap)
                .payload(json!({
                    "orbit_size": size,
                    "cap_exceeded": size.is_none(),
                }))
        }
        Command::Dot { file } => {
            let machine = load(file)?;
            let dot = mealy::dot::export_dot(&machine);
            let r = base_report("dot", file, &machine).payload(json!({ "dot": dot }));
            return Ok(Rendered::Dot(dot, r));
        }
        Command::Sample {
            states,
            letters,
            seed,
            enrich_random,
        } => {
            let params = SampleParams {
                states: *states,
                letters: *letters,
                seed: *seed,
            };
            let a = random::sample_no_exit(params)?;
            let machine = if *enrich_random {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(1);
                Machine::Mealy(random::random_invertible_enrichment(&mut rng, &a))
            } else {
                Machine::Automaton(a)
            };
            Report::new("sample")
                .parameter("states", *states)
                .parameter("letters", *letters)
                .parameter("seed", *seed)
                .parameter("enrich_random", *enrich_random)
                .machine(MachineSummary::of(&machine))
                .document(machine.print())
        }
    };
    Ok(Rendered::Report(report))
}

fn parse_cycle(a: &Automaton, states: &str, letters: &str) -> anyhow::Result<Cycle> {
    let st = a.states().parse_word(states).map_err(Error::UnknownName)?;
    let lt = a.letters().parse_word(letters).map_err(Error::UnknownName)?;
    if st.len() != lt.len() {
        return Err(anyhow!(Error::NotACycle(format!(
            "{} states but {} letters",
            st.len(),
            lt.len()
        ))));
    }
    Ok(Cycle::new(a, st, lt)?)
}

/// One cycle through every state on a cycle, skipping state sets already
/// covered, in declaration order.
fn representative_cycles(a: &Automaton) -> Vec<Cycle> {
    let scc = a.scc_labels();
    let on_cycle = a.on_cycle_states();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for x in (0..a.state_count()).filter(|&x| on_cycle[x]) {
        if let Some(c) = cycles::cycle_through(a, x, &scc) {
            let mut key = c.states.clone();
            key.sort_unstable();
            if !seen.contains(&key) {
                seen.push(key);
                out.push(c);
            }
        }
    }
    out
}
