//! `deutsch`: run the Deutsch algorithm on the quantum and toy layers, and
//! compile two-qubit circuits to confocal lens layouts.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 the oracle breaks the
//! constant-or-balanced promise, 3 a layout failed verification.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use deutsch_core::deutsch::{
    build_oracle_circuit, classify_truth_table, run_quantum_deutsch, run_toy_deutsch,
    FunctionClass, OracleKind, RunError,
};
use deutsch_core::optics::{
    compile_circuit_with, emit_layout_file, emit_schematic, grid_from_state, parse_layout_file,
    trace, verify_layout, CompileOptions, CzMounting, OpticalLayout, DEFAULT_PITCH_MM,
};
use deutsch_core::quantum::BooleanFunction;
use deutsch_core::toy::{render_grid, EpistemicState, NamedToyState};
use deutsch_core::{parse_circuit, Gate};

#[derive(Parser)]
#[command(
    name = "deutsch",
    version,
    about = "Deutsch algorithm on quantum and toy-model layers, lowered to lens optics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide constant vs balanced with a single oracle query.
    Run(RunArgs),
    /// Print the toy-model beam grid after every step of the algorithm.
    Evolve {
        #[arg(long)]
        oracle: OracleKind,
    },
    /// Write the lens layout for a circuit.
    Compile(CompileArgs),
    /// Send a beam pattern through a layout and print input and output grids.
    Trace(TraceArgs),
    /// Check a layout against the toy model on all 60 two-system states.
    Verify(VerifyArgs),
    /// Write an SVG schematic of a layout.
    Render(CompileArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayerArg {
    Quantum,
    Toy,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum CzArg {
    Sequential,
    Coplanar,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "both")]
    layer: LayerArg,
    #[command(flatten)]
    function: FunctionArgs,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FunctionArgs {
    /// One of f0, f1, fx, fxbar.
    #[arg(long)]
    oracle: Option<OracleKind>,
    /// Truth table as bits, input 0 first, e.g. 0110.
    #[arg(long)]
    table: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Oracle circuit for f0, f1, fx or fxbar.
    #[arg(long)]
    oracle: Option<OracleKind>,
    /// Whitespace-separated gates: H1 H2 X1 X2 Z1 Z2 CN12 CN21 CZ.
    #[arg(long)]
    circuit: Option<String>,
}

#[derive(Args)]
struct Lowering {
    /// Beam spacing in mm.
    #[arg(long, default_value_t = DEFAULT_PITCH_MM)]
    pitch: f64,
    /// Mounting of the CZ lens pairs.
    #[arg(long, value_enum, default_value = "sequential")]
    cz: CzArg,
}

#[derive(Args)]
struct CompileArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    lowering: Lowering,
    /// Output file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    target: TraceTarget,
    #[command(flatten)]
    lowering: Lowering,
    /// Comma-separated single-system states for the two systems.
    #[arg(long, default_value = "plus,minus")]
    input: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TraceTarget {
    #[arg(long)]
    oracle: Option<OracleKind>,
    #[arg(long)]
    circuit: Option<String>,
    /// Trace a layout file instead of compiling.
    #[arg(long)]
    layout: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    lowering: Lowering,
    /// Check this layout file instead of the freshly compiled layout.
    #[arg(long)]
    layout: Option<PathBuf>,
}

enum Failure {
    Usage(anyhow::Error),
    Promise(anyhow::Error),
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Run(args) => run(&args),
        Command::Evolve { oracle } => evolve(oracle),
        Command::Compile(args) => compile(&args),
        Command::Trace(args) => trace_cmd(&args),
        Command::Verify(args) => verify(&args),
        Command::Render(args) => render(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Promise(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(report)) => {
            eprint!("{report}");
            ExitCode::from(3)
        }
    }
}

fn run(args: &RunArgs) -> CmdResult {
    let f = match (&args.function.oracle, &args.function.table) {
        (Some(kind), _) => kind.truth_table(),
        (None, Some(bits)) => BooleanFunction::from_bit_str(bits)
            .with_context(|| format!("bad truth table `{bits}`"))?,
        (None, None) => unreachable!("clap enforces one source"),
    };
    if classify_truth_table(&f) == FunctionClass::Neither {
        return Err(Failure::Promise(
            RunError::PromiseViolation {
                table: f.to_string(),
            }
            .into(),
        ));
    }
    let toy_kind = || {
        OracleKind::from_function(&f).ok_or_else(|| {
            anyhow!("the toy layer runs one-bit oracles only; use --layer quantum for {f}")
        })
    };
    let line = match args.layer {
        LayerArg::Quantum => {
            let q = run_quantum_deutsch(&f).map_err(anyhow::Error::from)?;
            format!("{}, queries={}", q.verdict, q.oracle_queries)
        }
        LayerArg::Toy => {
            let t = run_toy_deutsch(toy_kind()?).map_err(anyhow::Error::from)?;
            format!("{}, queries={}", t.verdict, t.oracle_queries)
        }
        LayerArg::Both => {
            let kind = toy_kind()?;
            let q = run_quantum_deutsch(&f).map_err(anyhow::Error::from)?;
            let t = run_toy_deutsch(kind).map_err(anyhow::Error::from)?;
            let queries = if q.oracle_queries == t.oracle_queries {
                q.oracle_queries.to_string()
            } else {
                format!("{}/{}", q.oracle_queries, t.oracle_queries)
            };
            format!("{} / {}, queries={queries}", q.verdict, t.verdict)
        }
    };
    println!("{line}");
    Ok(())
}

fn evolve(kind: OracleKind) -> CmdResult {
    let report = run_toy_deutsch(kind).map_err(anyhow::Error::from)?;
    let states = report.toy_states().expect("toy run");
    let blocks: Vec<String> = report
        .steps
        .iter()
        .zip(states)
        .map(|(step, state)| format!("{}:\n{}\n", step.label, render_grid(state)))
        .collect();
    print!("{}", blocks.join("\n"));
    Ok(())
}

fn circuit_of(oracle: Option<OracleKind>, circuit: Option<&str>) -> anyhow::Result<Vec<Gate>> {
    match (oracle, circuit) {
        (Some(kind), _) => Ok(build_oracle_circuit(kind).gates),
        (None, Some(text)) => parse_circuit(text).with_context(|| format!("bad circuit `{text}`")),
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn lower(circuit: &[Gate], lowering: &Lowering) -> anyhow::Result<OpticalLayout> {
    let options = CompileOptions {
        pitch_mm: lowering.pitch,
        cz_mounting: match lowering.cz {
            CzArg::Sequential => CzMounting::Sequential,
            CzArg::Coplanar => CzMounting::Coplanar,
        },
        ..CompileOptions::default()
    };
    Ok(compile_circuit_with(circuit, &options)?)
}

fn read_layout(path: &Path) -> anyhow::Result<OpticalLayout> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_layout_file(&text).with_context(|| format!("{}", path.display()))
}

fn write_output(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn compile(args: &CompileArgs) -> CmdResult {
    let circuit = circuit_of(args.source.oracle, args.source.circuit.as_deref())?;
    let layout = lower(&circuit, &args.lowering)?;
    write_output(args.out.as_deref(), &emit_layout_file(&layout))?;
    Ok(())
}

fn render(args: &CompileArgs) -> CmdResult {
    let circuit = circuit_of(args.source.oracle, args.source.circuit.as_deref())?;
    let layout = lower(&circuit, &args.lowering)?;
    write_output(args.out.as_deref(), &emit_schematic(&layout))?;
    Ok(())
}

fn parse_input(text: &str) -> anyhow::Result<EpistemicState> {
    let names = text
        .split(',')
        .map(|s| s.trim().parse::<NamedToyState>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("bad input `{text}`"))?;
    if names.len() != 2 {
        return Err(anyhow!(
            "input needs two states separated by a comma, got `{text}`"
        ));
    }
    Ok(EpistemicState::product(&names))
}

fn trace_cmd(args: &TraceArgs) -> CmdResult {
    let t = &args.target;
    let layout = match &t.layout {
        Some(path) => read_layout(path)?,
        None => lower(&circuit_of(t.oracle, t.circuit.as_deref())?, &args.lowering)?,
    };
    let input = parse_input(&args.input)?;
    let grid = grid_from_state(&input, layout.pitch_mm).map_err(anyhow::Error::from)?;
    let output = trace(&layout, &grid);
    let label = match output.to_state() {
        Ok(state) => state.to_string(),
        Err(_) => "not a valid state".to_string(),
    };
    println!(
        "input: {input}\n{}\n\noutput: {label}\n{}",
        grid.render(),
        output.render()
    );
    Ok(())
}

fn verify(args: &VerifyArgs) -> CmdResult {
    let circuit = circuit_of(args.source.oracle, args.source.circuit.as_deref())?;
    let layout = match &args.layout {
        Some(path) => read_layout(path)?,
        None => lower(&circuit, &args.lowering)?,
    };
    let report = verify_layout(&layout, &circuit).map_err(anyhow::Error::from)?;
    let summary = format!(
        "checked {} inputs, {} mismatches\n",
        report.checked,
        report.mismatches.len()
    );
    if report.passed() {
        print!("{summary}");
        return Ok(());
    }
    let mut text = String::new();
    for m in &report.mismatches {
        let flat = |s: String| s.replace('\n', "/");
        text.push_str(&format!(
            "mismatch: input {}: expected {} got {}\n",
            m.input,
            flat(m.expected.render()),
            flat(m.actual.render())
        ));
    }
    text.push_str(&summary);
    Err(Failure::Verification(text))
}
