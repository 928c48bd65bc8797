use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tres_core::formula::parse;
use tres_core::oracle::{build_graph_with, reduce_graph, to_dot, OracleConfig};
use tres_core::prover::{self, translate_for};
use tres_core::snf::text::{is_clause_text, parse_clause_set, to_text};
use tres_core::temporal::augment;
use tres_core::{Config, Error, Exec, Mode, Status, Verdict};

#[derive(Parser)]
#[command(name = "tres", version, about = "Clausal temporal resolution prover for PLTL")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a formula file or a clause file.
    Prove(ProveArgs),
}

#[derive(clap::Args)]
struct ProveArgs {
    /// Formula file, or clause file (one clause per line, containing `=>`).
    file: PathBuf,

    /// Prove the formula valid by refuting its negation (default for formulae).
    #[arg(long, conflicts_with = "sat")]
    validity: bool,

    /// Decide satisfiability (always the case for clause files).
    #[arg(long)]
    sat: bool,

    /// Print the numbered proof trace.
    #[arg(long)]
    trace: bool,

    /// Print the clause set that would be refuted and stop.
    #[arg(long)]
    snf_only: bool,

    /// Also decide the augmented clause set with the behaviour-graph oracle.
    #[arg(long)]
    oracle: bool,

    /// Write the behaviour graph of the augmented clause set in DOT format.
    #[arg(long, value_name = "FILE")]
    emit_graph: Option<PathBuf>,

    /// Print run statistics.
    #[arg(long)]
    stats: bool,

    /// Run the inner loops on one thread.
    #[arg(long)]
    sequential: bool,

    #[arg(long, value_name = "N", default_value_t = Config::default().max_loop_width)]
    max_loop_width: usize,

    #[arg(long, value_name = "N", default_value_t = Config::default().max_entail_symbols)]
    max_entail_symbols: usize,

    #[arg(long, value_name = "N", default_value_t = Config::default().max_oracle_props)]
    max_oracle_props: usize,
}

fn exit_code(status: Status) -> u8 {
    match status {
        Status::Valid | Status::Satisfiable => 0,
        Status::NotValid | Status::Unsatisfiable => 1,
    }
}

fn error_code(e: &Error) -> u8 {
    if e.is_resource_cap() {
        3
    } else if e.is_input_error() {
        2
    } else {
        4
    }
}

/// Runs the command, appending its standard output to `out`.
fn run(args: &ProveArgs, out: &mut String) -> Result<u8, (u8, String)> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| (2, format!("cannot read {}: {e}", args.file.display())))?;
    let fail = |e: Error| (error_code(&e), e.to_string());
    let cfg = Config {
        max_loop_width: args.max_loop_width,
        max_entail_symbols: args.max_entail_symbols,
        max_oracle_props: args.max_oracle_props,
        exec: if args.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        },
    };

    let clause_file = is_clause_text(&text);
    if clause_file && args.validity {
        return Err((2, "clause files are decided for satisfiability only".into()));
    }
    let mode = if args.sat || clause_file {
        Mode::Satisfiability
    } else {
        Mode::Validity
    };
    let cs = if clause_file {
        parse_clause_set(&text).map_err(fail)?
    } else {
        translate_for(&parse(&text).map_err(fail)?, mode).map_err(fail)?
    };

    if args.snf_only {
        out.push_str(&to_text(&cs));
        return Ok(0);
    }

    let verdict: Verdict = if clause_file {
        prover::prove_clause_set(&cs, &cfg)
    } else {
        prover::prove_translation(&cs, mode, &cfg)
    }
    .map_err(fail)?;
    let status = verdict.status;
    if args.trace {
        out.push_str(&verdict.trace.render());
    }
    writeln!(out, "{status}").expect("write to string");
    if args.stats {
        let s = &verdict.stats;
        writeln!(
            out,
            "clauses generated: {}, loop searches: {}, resolvents: {}, time: {:.3}s",
            s.clauses_generated,
            s.loop_searches,
            s.resolvents,
            s.wall_time.as_secs_f64()
        )
        .expect("write to string");
    }

    if args.oracle || args.emit_graph.is_some() {
        let aug = augment(&cs);
        let ocfg = OracleConfig {
            max_symbols: cfg.max_oracle_props,
            exec: cfg.exec,
        };
        let g = build_graph_with(&aug.base, &BTreeSet::new(), &ocfg).map_err(fail)?;
        let reduced = reduce_graph(&g);
        if let Some(path) = &args.emit_graph {
            std::fs::write(path, to_dot(&g, Some(&reduced)))
                .map_err(|e| (2, format!("cannot write {}: {e}", path.display())))?;
        }
        if args.oracle {
            let oracle_sat = !reduced.initial().is_empty();
            let agree = oracle_sat != verdict.status.is_refutation();
            writeln!(
                out,
                "oracle: {} ({})",
                if oracle_sat { "satisfiable" } else { "unsatisfiable" },
                if agree { "agrees" } else { "DISAGREES" }
            )
            .expect("write to string");
            if !agree {
                return Err((4, "prover and oracle disagree".into()));
            }
        }
    }
    Ok(exit_code(status))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Prove(args) = &cli.command;
    let mut out = String::new();
    let result = run(args, &mut out);
    // A closed pipe is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("tres: {msg}");
            if code == 3 {
                eprintln!("tres: inconclusive (resource cap reached)");
            }
            ExitCode::from(code)
        }
    }
}
