//! `pdt`: evaluate, combine, relativize, optimize and pump pushdown
//! transducers given as machine files.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pdt::algebra::{self, FunctionHandle, Refinement};
use pdt::optimize::{opt_eval, opt_nfa_el_eval, opt_refinement, OptMode};
use pdt::oracle::random::{random_input, random_oracle, random_turing_machine};
use pdt::oracle::{
    build_level_with, complement_oracle, eval_many_one, eval_turing, eval_turing_traced,
    MachineOracle, PredicateOracle, SharedOracle,
};
use pdt::par::Mode;
use pdt::pumping::{pumping_report, PumpOptions, PumpingParams};
use pdt::strings::{Alphabet, Word};
use pdt::transducer::{
    format, Limits, LinearBound, Machine, MachineSpec, OutputSet, TerminationVerdict,
};
use pdt::witnesses::{self, verify_entry, Verdict};
use pdt::{Error, Result};

#[derive(Parser)]
#[command(name = "pdt", version, about = "Nondeterministic pushdown transducers")]
struct Cli {
    /// Cap on configurations explored per run (and on enumerated sets).
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_configs: usize,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Evaluate sequentially instead of on the thread pool.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// Input strings; `()` is the empty string.
    inputs: Vec<String>,

    /// Newline-delimited file of further inputs.
    #[arg(long = "inputs", value_name = "FILE")]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Max,
    Min,
}

impl From<Direction> for OptMode {
    fn from(d: Direction) -> OptMode {
        match d {
            Direction::Max => OptMode::Max,
            Direction::Min => OptMode::Min,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Intersect,
    Union,
    Difference,
    Complement,
    Domain,
    Range,
}

#[derive(Subcommand)]
enum Command {
    /// Check termination and report accept/reject per input.
    Run {
        machine: PathBuf,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Print the set of valid outputs.
    Enum {
        machine: PathBuf,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Print the dictionary-extremal valid output.
    Opt {
        #[arg(long, value_enum)]
        mode: Direction,
        /// Require a stack-free machine with equal-length outputs.
        #[arg(long)]
        el: bool,
        machine: PathBuf,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Evaluate outer ∘ inner.
    Compose {
        outer: PathBuf,
        inner: PathBuf,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Apply a function-algebra operator.
    Algebra {
        #[arg(value_enum)]
        op: Op,
        machine: PathBuf,
        /// Second operand for intersect, union and difference.
        #[arg(long)]
        with: Option<PathBuf>,
        /// Output bound `a,b` (p(n) = a·n + b) for complement.
        #[arg(long, default_value = "1,0")]
        bound: String,
        /// Complement is undefined on inputs shorter than this.
        #[arg(long, default_value_t = 0)]
        n0: usize,
        /// Input length bound for domain and range.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Evaluate a query machine relative to an oracle or an oracle chain.
    OracleRun {
        machine: PathBuf,
        /// `machine:<file>` or `builtin:<palindromes|dup|all|none>`.
        #[arg(long)]
        oracle: Option<String>,
        /// Chain machines, outermost first; oracle i is the complement of
        /// the language of chain machine i.
        #[arg(long)]
        chain: Vec<PathBuf>,
        /// Also print every simulated query (Turing mode).
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Search pumping decompositions of (w, s) for each s ∈ f(w).
    Pump {
        machine: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        d: usize,
        /// Probe pump counts 0..=imax; default probes {0, 2}.
        #[arg(long)]
        imax: Option<usize>,
        #[arg(long)]
        relaxed: bool,
        #[arg(long)]
        length_preserving: bool,
        /// Only this output instead of every s ∈ f(w).
        #[arg(long)]
        output: Option<String>,
        w: String,
    },
    /// Check that one machine refines another up to a length.
    Refine {
        /// The refined (coarser) function g.
        general: PathBuf,
        /// The refining function f; omit to check the opt selector.
        specific: Option<PathBuf>,
        #[arg(long, value_enum)]
        opt: Option<Direction>,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Verify every catalog witness against its brute-force definition.
    VerifyWitnesses {
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        name: Vec<String>,
        /// Also run this many randomized Turing-oracle checks from --seed.
        #[arg(long, default_value_t = 0)]
        random: u64,
    },
}

struct Ctx {
    limits: Limits,
    seed: u64,
    mode: Mode,
}

impl Ctx {
    fn load_spec(&self, path: &Path) -> Result<MachineSpec> {
        format::parse(&std::fs::read_to_string(path)?)
    }

    fn load(&self, path: &Path) -> Result<Machine> {
        Ok(Machine::new(self.load_spec(path)?)?.with_limits(self.limits))
    }

    fn handle(&self, path: &Path) -> Result<FunctionHandle> {
        Ok(FunctionHandle::from_machine(self.load(path)?))
    }
}

fn read_inputs(inputs: &Inputs, alphabet: &Alphabet) -> Result<Vec<Word>> {
    let mut raw = inputs.inputs.clone();
    if let Some(path) = &inputs.file {
        raw.extend(
            std::fs::read_to_string(path)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from),
        );
    }
    if raw.is_empty() {
        return Err(Error::Precondition("no input strings given".into()));
    }
    raw.iter().map(|s| alphabet.parse_word(s)).collect()
}

fn render_set(set: &OutputSet, alphabet: &Alphabet) -> Vec<String> {
    if set.is_empty() {
        return vec!["UNDEFINED".into()];
    }
    let mut items: Vec<&Word> = set.iter().collect();
    items.sort_by(|a, b| alphabet.compare(a, b).unwrap_or_else(|_| a.cmp(b)));
    items.into_iter().map(Word::display_or_unit).collect()
}

/// One block per input; the header appears only when there are several.
fn print_blocks(
    inputs: &[Word],
    mut line_for: impl FnMut(&Word) -> Result<Vec<String>>,
) -> Result<()> {
    for x in inputs {
        let lines = line_for(x)?;
        if inputs.len() > 1 {
            println!("input: {}", x.display_or_unit());
        }
        for l in lines {
            println!("{l}");
        }
    }
    Ok(())
}

fn parse_bound(text: &str) -> Result<LinearBound> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |s: &str| {
        s.parse::<u64>()
            .map_err(|_| Error::Precondition(format!("bad bound `{text}`; expected a,b")))
    };
    match parts[..] {
        [a, b] => LinearBound::new(num(a)?, num(b)?),
        _ => Err(Error::Precondition(format!(
            "bad bound `{text}`; expected a,b"
        ))),
    }
}

fn oracle_from_flag(ctx: &Ctx, flag: &str, alphabet: &Alphabet) -> Result<SharedOracle> {
    if let Some(name) = flag.strip_prefix("builtin:") {
        return PredicateOracle::builtin(name, alphabet.clone())
            .map(|o| Arc::new(o) as SharedOracle)
            .ok_or_else(|| Error::Precondition(format!("unknown builtin oracle `{name}`")));
    }
    if let Some(file) = flag.strip_prefix("machine:") {
        let machine = ctx.load(Path::new(file))?;
        if !machine.spec().input.same_symbols(alphabet) {
            return Err(Error::AlphabetMismatch(format!(
                "oracle machine reads {} but queries are over {alphabet}",
                machine.spec().input
            )));
        }
        return Ok(Arc::new(MachineOracle::plain(machine)));
    }
    Err(Error::Precondition(format!(
        "--oracle expects machine:<file> or builtin:<name>, got `{flag}`"
    )))
}

fn run(cli: Cli) -> Result<()> {
    let ctx = Ctx {
        limits: Limits {
            max_configs: cli.max_configs,
            max_enumeration: cli.max_configs,
        },
        seed: cli.seed,
        mode: if cli.sequential {
            Mode::Sequential
        } else {
            Mode::default()
        },
    };
    match cli.command {
        Command::Run { machine, inputs } => {
            let m = ctx.load(&machine)?;
            let xs = read_inputs(&inputs, &m.spec().input)?;
            print_blocks(&xs, |x| {
                if let TerminationVerdict::Violates(path) = m.check_termination(x)? {
                    return Err(Error::Termination {
                        input: x.display_or_unit(),
                        budget: m.spec().bound.eval(x.len()),
                        path,
                    });
                }
                Ok(vec![if m.accepts(x)? { "accept" } else { "reject" }.into()])
            })
        }
        Command::Enum { machine, inputs } => {
            let m = ctx.load(&machine)?;
            let xs = read_inputs(&inputs, &m.spec().input)?;
            print_blocks(&xs, |x| Ok(render_set(&m.enumerate(x)?, &m.spec().output)))
        }
        Command::Opt {
            mode,
            el,
            machine,
            inputs,
        } => {
            let m = ctx.load(&machine)?;
            let xs = read_inputs(&inputs, &m.spec().input)?;
            print_blocks(&xs, |x| {
                let y = if el {
                    opt_nfa_el_eval(&m, mode.into(), x)?
                } else {
                    opt_eval(&m, mode.into(), x)?
                };
                Ok(vec![y.display_or_unit()])
            })
        }
        Command::Compose {
            outer,
            inner,
            inputs,
        } => {
            let f = algebra::compose(&ctx.handle(&outer)?, &ctx.handle(&inner)?)?;
            let xs = read_inputs(&inputs, f.input_alphabet())?;
            print_blocks(&xs, |x| Ok(render_set(&f.eval(x)?, f.output_alphabet())))
        }
        Command::Algebra {
            op,
            machine,
            with,
            bound,
            n0,
            max_len,
            inputs,
        } => {
            let f = ctx.handle(&machine)?;
            let second = || -> Result<FunctionHandle> {
                let path = with.as_ref().ok_or_else(|| {
                    Error::Precondition("this operator needs --with <file>".into())
                })?;
                ctx.handle(path)
            };
            let h = match op {
                Op::Intersect => algebra::intersect(&f, &second()?)?,
                Op::Union => algebra::union(&f, &second()?)?,
                Op::Difference => algebra::set_difference(&f, &second()?)?,
                Op::Complement => algebra::complement_capped(
                    &f,
                    parse_bound(&bound)?,
                    n0,
                    ctx.limits.max_enumeration,
                ),
                Op::Domain | Op::Range => {
                    let set = if matches!(op, Op::Domain) {
                        algebra::domain(&f, max_len, ctx.mode)?
                    } else {
                        algebra::range(&f, max_len, ctx.mode)?
                    };
                    let alphabet = if matches!(op, Op::Domain) {
                        f.input_alphabet()
                    } else {
                        f.output_alphabet()
                    };
                    for line in render_set(&set, alphabet) {
                        println!("{line}");
                    }
                    return Ok(());
                }
            };
            let xs = read_inputs(&inputs, h.input_alphabet())?;
            print_blocks(&xs, |x| Ok(render_set(&h.eval(x)?, h.output_alphabet())))
        }
        Command::OracleRun {
            machine,
            oracle,
            chain,
            trace,
            inputs,
        } => {
            let spec = ctx.load_spec(&machine)?;
            let q = spec
                .query
                .clone()
                .ok_or_else(|| Error::Precondition(format!("`{}` has no query tape", spec.name)))?;
            let xs = read_inputs(&inputs, &spec.input)?;
            let output = spec.output.clone();
            if !chain.is_empty() {
                if oracle.is_some() {
                    return Err(Error::Precondition(
                        "give either --oracle or --chain, not both".into(),
                    ));
                }
                let chain = chain
                    .iter()
                    .map(|p| ctx.load_spec(p))
                    .collect::<Result<Vec<_>>>()?;
                let f = build_level_with(chain.len() + 1, spec, chain, ctx.limits)?;
                return print_blocks(&xs, |x| Ok(render_set(&f.eval(x)?, &output)));
            }
            let flag = oracle.ok_or_else(|| {
                Error::Precondition("oracle-run needs --oracle or --chain".into())
            })?;
            let a = oracle_from_flag(&ctx, &flag, &q.alphabet)?;
            let m = Machine::new(spec)?.with_limits(ctx.limits);
            print_blocks(&xs, |x| {
                if q.turing.is_none() {
                    return Ok(render_set(&eval_many_one(&m, a.as_ref(), x)?, &output));
                }
                let run = eval_turing_traced(&m, a.as_ref(), x)?;
                let mut lines = render_set(&run.outputs, &output);
                if trace {
                    lines.extend(run.queries.iter().map(|r| {
                        format!(
                            "query {} -> {}",
                            r.word.display_or_unit(),
                            if r.answer { "yes" } else { "no" }
                        )
                    }));
                }
                Ok(lines)
            })
        }
        Command::Pump {
            machine,
            m,
            c,
            d,
            imax,
            relaxed,
            length_preserving,
            output,
            w,
        } => {
            let f = ctx.handle(&machine)?;
            let params = PumpingParams::new(m, c, d)?;
            let base = imax.map_or_else(PumpOptions::default, PumpOptions::up_to);
            let opts = base.relaxed(relaxed).length_preserving(length_preserving);
            let w = f.input_alphabet().parse_word(&w)?;
            let mut lines = pumping_report(&f, params, std::slice::from_ref(&w), &opts, ctx.mode)?;
            if let Some(s) = output {
                let s = f.output_alphabet().parse_word(&s)?;
                lines.retain(|l| l.s == s);
                if lines.is_empty() {
                    return Err(Error::Precondition(format!(
                        "`{}` is not in f(w)",
                        s.display_or_unit()
                    )));
                }
            }
            for line in &lines {
                println!("{line}");
            }
            if lines.iter().any(|l| l.found.is_none()) {
                println!("note: `none` holds only for (m,c,d) = ({m},{c},{d}) and the probed pump counts");
            }
            Ok(())
        }
        Command::Refine {
            general,
            specific,
            opt,
            max_len,
        } => {
            let g = ctx.handle(&general)?;
            let f = match (specific, opt) {
                (Some(path), None) => ctx.handle(&path)?,
                (None, Some(dir)) => opt_refinement(&g, dir.into()),
                _ => {
                    return Err(Error::Precondition(
                        "give exactly one of <specific> or --opt".into(),
                    ))
                }
            };
            match algebra::refinement_check(&g, &f, max_len, ctx.mode)? {
                Refinement::Holds => {
                    println!("holds up to length {max_len}");
                    Ok(())
                }
                other => Err(Error::Precondition(format!("refinement fails: {other:?}"))),
            }
        }
        Command::VerifyWitnesses {
            max_len,
            name,
            random,
        } => {
            let mut failed = 0;
            for entry in witnesses::catalog() {
                if !name.is_empty() && !name.iter().any(|n| n == entry.name) {
                    continue;
                }
                let len = max_len.unwrap_or(entry.max_len);
                match verify_entry(&entry, len, ctx.mode)? {
                    Verdict::Agree { checked } => println!(
                        "{}: agree on {checked} inputs up to length {len}",
                        entry.name
                    ),
                    Verdict::Mismatch {
                        input,
                        construction,
                        oracle,
                    } => {
                        failed += 1;
                        println!(
                            "{}: MISMATCH at {}: construction {{{}}}, oracle {{{}}}",
                            entry.name,
                            input.display_or_unit(),
                            render_set(&construction, entry.oracle.output_alphabet()).join(", "),
                            render_set(&oracle, entry.oracle.output_alphabet()).join(", ")
                        );
                    }
                }
            }
            for seed in ctx.seed..ctx.seed + random {
                let spec = random_turing_machine(seed);
                let m = Machine::new(spec.clone())?.with_limits(ctx.limits);
                let a: SharedOracle = Arc::new(random_oracle(seed));
                let x = random_input(seed, 6);
                let run = eval_turing_traced(&m, a.as_ref(), &x)?;
                let clean = run
                    .queries
                    .iter()
                    .all(|q| q.tape_cells_after == 0 && q.head_after == 0);
                let swapped = Machine::new(spec.swap_yes_no())?.with_limits(ctx.limits);
                let same = eval_turing(&swapped, complement_oracle(a).as_ref(), &x)? == run.outputs;
                if !(clean && same) {
                    failed += 1;
                    println!(
                        "random seed {seed}: MISMATCH (tape reset {clean}, swap agrees {same})"
                    );
                }
            }
            if random > 0 {
                println!("random Turing checks: {random} from seed {}", ctx.seed);
            }
            if failed > 0 {
                return Err(Error::Precondition(format!(
                    "{failed} verification failures"
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource() { 2 } else { 1 })
        }
    }
}
