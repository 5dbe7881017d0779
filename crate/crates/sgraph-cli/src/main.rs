//! `sgraph` — construct finite permutation groups, emit their Sylow
//! graphs, run the per-prime normalizer hypothesis, and decide formation
//! membership.
//!
//! Exit codes are a stable scripting contract: 0 for success (and for
//! "yes" answers: connected, member, verified), 1 for semantic negatives
//! (disconnected, not a member, a recomputed table line that fails), 2 for
//! usage and parse errors, 3 when a resource cap is exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sgraph_core::{
    appendix_item, computable_group, export_dot, export_json, gamma_graph, hypothesis_check,
    lattice_formation_membership, lf_membership, local_definition_from_covering, n_closure_test,
    parse_formation_spec, parse_group_expr, realize, reference_lines, report_lines,
    validate_symmetric, verify_item, Caps, Error, FormationSpec, GraphVariant, LocalDefinition,
    PermGroup, SylowGraph,
};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sgraph",
    version,
    about = "Sylow graphs and formation membership for finite permutation groups",
    after_help = "Group expressions: Cyc(n), Dih(n), Sym(n), Alt(n), PSL2(q), PSL2(q):e, \
                  M11, M12, M22, A5, file:PATH, and products like 'Sym(3) x Cyc(5)'."
)]
struct Cli {
    /// Exhaustive enumeration cap in elements (overrides SGRAPH_CAP)
    #[arg(long, global = true, value_name = "N")]
    cap: Option<u64>,

    /// Quotient index cap (overrides SGRAPH_QCAP)
    #[arg(long, global = true, value_name = "N")]
    quotient_cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, primes, and per-prime Sylow data for a group
    Info {
        /// Group expression
        expr: String,
    },
    /// Emit a Sylow graph; exit 0 if connected, 1 if disconnected
    Graph {
        /// Group expression
        expr: String,
        /// Which graph to emit
        #[arg(long, value_enum, default_value_t = Variant::Gamma)]
        variant: Variant,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Per-prime normalizer index test; exit 0 if it holds, 1 if not
    Hypothesis {
        /// Group expression
        expr: String,
        /// Also print the prime factors of each index
        #[arg(long)]
        verbose: bool,
    },
    /// Formation membership queries driven by a JSON spec file
    Formation {
        #[command(subcommand)]
        query: FormationQuery,
    },
    /// Show or recompute one item of the shipped sporadic-group table
    Appendix {
        /// Item name (M11, J1, O'N, Fi22, M, ...)
        name: String,
        /// Recompute every divisibility statement instead of echoing the
        /// stored table (only the five smallest items are computable)
        #[arg(long)]
        computed: bool,
    },
}

#[derive(Subcommand)]
enum FormationQuery {
    /// Is the group in the class the spec locally defines?
    Check {
        /// Covering or local-definition JSON file
        #[arg(long)]
        spec: PathBuf,
        /// Group expression
        expr: String,
        /// Print the per-chief-factor trace to stderr
        #[arg(long)]
        verbose: bool,
    },
    /// Do all Sylow normalizers of the group lie in the class?
    Nclosed {
        /// Covering or local-definition JSON file
        #[arg(long)]
        spec: PathBuf,
        /// Group expression
        expr: String,
        /// Print the per-prime trace to stderr
        #[arg(long)]
        verbose: bool,
    },
    /// Does the group split as a direct product over a partition covering?
    Lattice {
        /// Partition covering JSON file
        #[arg(long)]
        spec: PathBuf,
        /// Group expression
        expr: String,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Variant {
    Gamma,
    Delta,
}

impl From<Variant> for GraphVariant {
    fn from(v: Variant) -> GraphVariant {
        match v {
            Variant::Gamma => GraphVariant::Gamma,
            Variant::Delta => GraphVariant::Delta,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match resolve_caps(&cli) {
        Ok(caps) => caps,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = match cli.command {
        Command::Info { ref expr } => cmd_info(expr, &caps),
        Command::Graph {
            ref expr,
            variant,
            format,
        } => cmd_graph(expr, variant.into(), format, &caps),
        Command::Hypothesis { ref expr, verbose } => cmd_hypothesis(expr, verbose, &caps),
        Command::Formation { ref query } => cmd_formation(query, &caps),
        Command::Appendix { ref name, computed } => cmd_appendix(name, computed, &caps),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::QuotientCapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn env_cap(var: &str) -> Result<Option<u64>, String> {
    match std::env::var(var) {
        Ok(text) => text
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("{var} must be a positive integer, got {text:?}")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("{var}: {e}")),
    }
}

/// Defaults, overridden by environment, overridden by flags.
fn resolve_caps(cli: &Cli) -> Result<Caps, String> {
    let mut caps = Caps::default();
    if let Some(v) = env_cap("SGRAPH_CAP")? {
        caps.exhaustive = v as u128;
    }
    if let Some(v) = env_cap("SGRAPH_QCAP")? {
        caps.quotient = v as u128;
    }
    if let Some(v) = cli.cap {
        caps.exhaustive = v as u128;
    }
    if let Some(v) = cli.quotient_cap {
        caps.quotient = v as u128;
    }
    if caps.exhaustive == 0 || caps.quotient == 0 {
        return Err("caps must be positive".to_string());
    }
    Ok(caps)
}

fn build_group(expr: &str) -> sgraph_core::Result<PermGroup> {
    realize(&parse_group_expr(expr)?)
}

fn fmt_primes(primes: &[u64]) -> String {
    if primes.is_empty() {
        "(none)".to_string()
    } else {
        primes
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn cmd_info(expr: &str, caps: &Caps) -> sgraph_core::Result<u8> {
    let g = build_group(expr)?;
    let graph = gamma_graph(&g, caps.exhaustive)?;
    println!("group: {expr}");
    println!("degree: {}", g.degree());
    println!("order: {}", g.order());
    println!("pi: {}", fmt_primes(&g.pi()));
    for d in graph.data() {
        println!(
            "p={}: sylow {}, normalizer {}, centralizer {}, center {}, nc_index {}, automiser {}",
            d.p,
            d.sylow_order,
            d.normalizer_order,
            d.centralizer_order,
            d.center_of_sylow_order,
            d.nc_index,
            d.automiser_order
        );
    }
    Ok(0)
}

fn graph_text(graph: &SylowGraph, variant: GraphVariant) -> String {
    let mut out = String::new();
    out.push_str(&format!("order: {}\n", graph.group_order()));
    out.push_str(&format!("vertices: {}\n", fmt_primes(graph.vertices())));
    match variant {
        GraphVariant::Gamma => {
            out.push_str("edges:\n");
            for (p, q) in graph.gamma_edges() {
                out.push_str(&format!("  {p} -> {q}\n"));
            }
        }
        GraphVariant::Delta => {
            out.push_str("edges:\n");
            for (p, q) in graph.delta_edges() {
                if p == q {
                    out.push_str(&format!("  {p} -- {p} (loop)\n"));
                } else {
                    out.push_str(&format!("  {p} -- {q}\n"));
                }
            }
        }
    }
    out.push_str("components:\n");
    for comp in graph.components(variant) {
        out.push_str(&format!("  {}\n", fmt_primes(comp)));
    }
    out.push_str(&format!(
        "connected: {}\n",
        if graph.is_connected(variant) {
            "yes"
        } else {
            "no"
        }
    ));
    out
}

fn cmd_graph(
    expr: &str,
    variant: GraphVariant,
    format: Format,
    caps: &Caps,
) -> sgraph_core::Result<u8> {
    let g = build_group(expr)?;
    let graph = gamma_graph(&g, caps.exhaustive)?;
    match format {
        Format::Dot => print!("{}", export_dot(&graph, variant)),
        Format::Json => println!("{}", export_json(&graph)),
        Format::Text => print!("{}", graph_text(&graph, variant)),
    }
    Ok(if graph.is_connected(variant) {
        0
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_hypothesis(expr: &str, verbose: bool, caps: &Caps) -> sgraph_core::Result<u8> {
    let g = build_group(expr)?;
    let report = hypothesis_check(&g, caps.exhaustive)?;
    for row in &report.rows {
        let verdict = if !row.considered {
            "not counted (smallest prime is 2)"
        } else if row.satisfied {
            "has a smaller prime factor"
        } else {
            "no smaller prime factor"
        };
        println!("p={}: nc_index {} — {}", row.p, row.nc_index, verdict);
        if verbose {
            println!("  factors of nc_index: {}", fmt_primes(&row.factors));
        }
    }
    println!("hypothesis: {}", report.overall);
    if !report.overall {
        println!("failing primes: {}", fmt_primes(&report.failing_primes()));
    }
    Ok(if report.overall { 0 } else { EXIT_NEGATIVE })
}

fn load_spec(path: &PathBuf) -> sgraph_core::Result<FormationSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::SpecFile(format!("{}: {e}", path.display())))?;
    parse_formation_spec(&text)
}

/// A covering spec must validate before it defines anything locally.
fn local_definition_of(spec: FormationSpec) -> sgraph_core::Result<LocalDefinition> {
    match spec {
        FormationSpec::Covering(c) => {
            let report = validate_symmetric(&c);
            if !report.ok {
                return Err(Error::NotSymmetric(report.violations.join("; ")));
            }
            local_definition_from_covering(&c)
        }
        FormationSpec::Local(f) => Ok(f),
    }
}

fn cmd_formation(query: &FormationQuery, caps: &Caps) -> sgraph_core::Result<u8> {
    match query {
        FormationQuery::Check {
            spec,
            expr,
            verbose,
        } => {
            let f = local_definition_of(load_spec(spec)?)?;
            let g = build_group(expr)?;
            let report = lf_membership(&f, &g, caps)?;
            if *verbose {
                for row in &report.trace {
                    eprintln!(
                        "factor {} (order {}), q={}: acting quotient order {} — {}",
                        row.factor_index,
                        row.factor_order,
                        row.q,
                        row.quotient_order,
                        if row.passed { "pass" } else { "fail" }
                    );
                }
            }
            println!("member: {}", report.member);
            Ok(if report.member { 0 } else { EXIT_NEGATIVE })
        }
        FormationQuery::Nclosed {
            spec,
            expr,
            verbose,
        } => {
            let f = local_definition_of(load_spec(spec)?)?;
            let g = build_group(expr)?;
            let report = n_closure_test(&g, caps.exhaustive, |n| {
                Ok(lf_membership(&f, n, caps)?.member)
            })?;
            if *verbose {
                for row in &report.rows {
                    eprintln!(
                        "p={}: normalizer order {} — {}",
                        row.p,
                        row.normalizer_order,
                        if row.passed { "pass" } else { "fail" }
                    );
                }
            }
            println!("all sylow normalizers in class: {}", report.all_pass);
            Ok(if report.all_pass { 0 } else { EXIT_NEGATIVE })
        }
        FormationQuery::Lattice { spec, expr } => {
            let covering = match load_spec(spec)? {
                FormationSpec::Covering(c) => c,
                FormationSpec::Local(_) => {
                    return Err(Error::SpecFile(
                        "lattice queries need a partition covering, not a local definition"
                            .to_string(),
                    ))
                }
            };
            let g = build_group(expr)?;
            let member = lattice_formation_membership(&covering, &g, caps.exhaustive)?;
            println!("lattice member: {member}");
            Ok(if member { 0 } else { EXIT_NEGATIVE })
        }
    }
}

fn cmd_appendix(name: &str, computed: bool, caps: &Caps) -> sgraph_core::Result<u8> {
    let item = appendix_item(name).ok_or_else(|| Error::UnknownAppendixItem(name.to_string()))?;
    if !computed {
        for line in reference_lines(item) {
            println!("{line}");
        }
        return Ok(0);
    }
    let g = match computable_group(name) {
        Some(g) => g?,
        None => {
            eprintln!(
                "error: ({}) {}: order is beyond the exhaustive cap; reference mode only",
                item.number, item.name
            );
            return Ok(EXIT_CAP);
        }
    };
    let report = verify_item(item, &g, caps.exhaustive)?;
    for line in report_lines(&report) {
        println!("{line}");
    }
    Ok(if report.all_hold { 0 } else { EXIT_NEGATIVE })
}
