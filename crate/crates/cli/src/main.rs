use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use epg_rainbow::catalog::{build_group, Catalog};
use epg_rainbow::cayley::{load_cayley, write_cayley};
use epg_rainbow::dot::export_dot;
use epg_rainbow::json::{invariants_json, rc_json, record_json};
use epg_rainbow::sweep::{run_sweep, SweepConfig};
use epg_rainbow::text::{invariants_text, rc_text, sweep_text};
use epg_rainbow::Error;
use epg_core::awning::{awning_order_probe, find_awning, AwningMode, DEFAULT_AWNING_BUDGET};
use epg_core::graph::{enhanced_power_graph, power_graph};
use epg_core::group::DEFAULT_ORDER_CAP;
use epg_core::rainbow::DEFAULT_RC_BUDGET;
use epg_core::{
    cross_validate, Agreement, AwningSearch, CyclicDecomposition, FiniteGroup, GroupSpec, SearchConfig,
    ValidationConfig,
};

const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "epg-rainbow", version, about = "Rainbow connection of enhanced power graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and write its Cayley table.
    Group,
    /// Maximal cyclic subgroups, independence cyclic set, maximal involutions, awning.
    Invariants,
    /// Predicted and exact rainbow connection number.
    Rc {
        #[arg(long, value_enum, default_value_t = Which::Enhanced)]
        which: Which,
    },
    /// Cross-validate every group of a catalog.
    Sweep {
        /// Catalog file, one group spec per line. Defaults to the built-in catalog.
        catalog: Option<PathBuf>,
        /// Treat malformed catalog lines and construction failures as input errors.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Enhanced,
    Power,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct RunArgs {
    /// Group spec such as `dicyclic(2)`, `product(cyclic(2),cyclic(4))` or `DIHEDRAL 4`.
    #[arg(long, global = true, conflicts_with = "input")]
    spec: Option<String>,
    /// Cayley table file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Backtracking nodes per color level of the exact search.
    #[arg(long, global = true, env = "EPG_RAINBOW_BUDGET", default_value_t = DEFAULT_RC_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    rc_budget: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_AWNING_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    awning_budget: u64,
    /// Search for an awning under several orders of the maximal cyclic subgroups.
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "720",
          value_parser = clap::value_parser!(u64).range(1..))]
    probe_orders: Option<u64>,
    /// Allow groups above the order cap and search every color level.
    #[arg(long, global = true)]
    override_size_cap: bool,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn size_cap(&self) -> usize {
        if self.override_size_cap {
            usize::MAX
        } else {
            DEFAULT_ORDER_CAP
        }
    }

    fn awning(&self) -> AwningSearch {
        AwningSearch { mode: AwningMode::Coherent, node_budget: self.awning_budget }
    }

    fn validation(&self, power_graph: bool) -> ValidationConfig {
        ValidationConfig {
            rc: SearchConfig {
                node_budget: self.rc_budget,
                override_gate: self.override_size_cap,
                ..SearchConfig::default()
            },
            awning: self.awning(),
            power_graph,
            probe_orders: self.probe_orders.map(|n| n as usize),
        }
    }

    fn group(&self) -> Result<FiniteGroup, CliError> {
        match (&self.spec, &self.input) {
            (Some(spec), _) => {
                let spec: GroupSpec = spec.parse().map_err(Error::from)?;
                Ok(build_group(&spec, Path::new(""), self.size_cap())?)
            }
            (None, Some(path)) => Ok(load_cayley(path)?),
            (None, None) => Err(CliError::Usage("give a group with --spec or --input".into())),
        }
    }
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io { path: path.to_path_buf(), source: e }.into()),
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a failure exit.
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn cmd_group(run: &RunArgs) -> Result<u8, CliError> {
    let g = run.group()?;
    let mut histogram = BTreeMap::new();
    for x in 0..g.order() {
        *histogram.entry(g.element_order(x)).or_insert(0usize) += 1;
    }
    let summary = match run.format {
        Format::Json => {
            let orders: serde_json::Map<String, Value> =
                histogram.iter().map(|(o, c)| (o.to_string(), json!(c))).collect();
            pretty(&json!({"order": g.order(), "element_orders": orders}))
        }
        Format::Text | Format::Dot => {
            let parts: Vec<String> = histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
            format!("order {}\nelement orders {}\n", g.order(), parts.join(" "))
        }
    };
    let table = if run.format == Format::Dot {
        let d = CyclicDecomposition::of_group(&g);
        export_dot(&enhanced_power_graph(&d), g.labels(), None).map_err(Error::from)?
    } else {
        write_cayley(&g)
    };
    emit(run.out.as_deref(), &table)?;
    if run.out.is_some() {
        emit(None, &summary)?;
    } else {
        eprint!("{summary}");
    }
    Ok(0)
}

fn cmd_invariants(run: &RunArgs) -> Result<u8, CliError> {
    let g = run.group()?;
    let d = CyclicDecomposition::of_group(&g);
    let ics = d.ics_report();
    let order: Vec<usize> = (0..d.m()).collect();
    let (awning, _) = find_awning(&d, &order, &run.awning());
    let probe = run.probe_orders.map(|n| awning_order_probe(&d, n as usize, &run.awning()));
    let text = match run.format {
        Format::Json => pretty(&invariants_json(&g, &d, &ics, &awning, probe.as_ref())),
        Format::Text => invariants_text(&g, &d, &ics, &awning, probe.as_ref()),
        Format::Dot => export_dot(&enhanced_power_graph(&d), g.labels(), None).map_err(Error::from)?,
    };
    emit(run.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_rc(run: &RunArgs, which: Which) -> Result<u8, CliError> {
    let g = run.group()?;
    let r = cross_validate(&g, &run.validation(which != Which::Enhanced));
    let pg = r.power.as_ref().map(|_| power_graph(&g));
    let show_enhanced = which != Which::Power;
    let text = match run.format {
        Format::Json => {
            let v = if show_enhanced {
                record_json(&g, &r)
            } else {
                let (pg, p) = (pg.as_ref().unwrap(), r.power.as_ref().unwrap());
                json!({"order": r.order, "edges": pg.edge_count(), "power_graph_oracle": rc_json(pg, p)})
            };
            pretty(&v)
        }
        Format::Text => rc_text(&r, show_enhanced),
        Format::Dot => {
            let mut out = String::new();
            if show_enhanced {
                out += &export_dot(&r.graph, g.labels(), r.oracle.upper_bound_certificate.as_ref()).map_err(Error::from)?;
            }
            if let (Some(pg), Some(p)) = (&pg, &r.power) {
                out += &export_dot(pg, g.labels(), p.upper_bound_certificate.as_ref()).map_err(Error::from)?;
            }
            out
        }
    };
    emit(run.out.as_deref(), &text)?;
    Ok(if show_enhanced && r.agreement == Agreement::Mismatch { EXIT_MISMATCH } else { 0 })
}

fn cmd_sweep(run: &RunArgs, catalog: Option<&Path>, strict: bool) -> Result<u8, CliError> {
    if run.format == Format::Dot {
        return Err(CliError::Usage("sweep reports are json or text".into()));
    }
    let catalog = match catalog {
        Some(path) => Catalog::load(path)?,
        None => Catalog::builtin(),
    };
    for w in &catalog.warnings {
        eprintln!("warning: line {}: skipping '{}': {}", w.line, w.text, w.message);
    }
    if strict && !catalog.warnings.is_empty() {
        return Err(CliError::Usage("malformed catalog lines".into()));
    }
    let report = run_sweep(&catalog, &SweepConfig { validation: run.validation(false), size_cap: run.size_cap() });
    let text = match run.format {
        Format::Text => sweep_text(&report),
        _ => pretty(&report.to_json()),
    };
    emit(run.out.as_deref(), &text)?;
    let counts = report.counts();
    if counts.mismatches > 0 || counts.flagged > 0 {
        Ok(EXIT_MISMATCH)
    } else if strict && counts.errors > 0 {
        eprintln!("error: {} catalog groups could not be built", counts.errors);
        Ok(EXIT_INPUT)
    } else {
        Ok(0)
    }
}

fn run(cli: &Cli) -> u8 {
    let result = match &cli.command {
        Command::Group => cmd_group(&cli.run),
        Command::Invariants => cmd_invariants(&cli.run),
        Command::Rc { which } => cmd_rc(&cli.run, *which),
        Command::Sweep { catalog, strict } => cmd_sweep(&cli.run, catalog.as_deref(), *strict),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            match e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Lib(e) => eprintln!("error: {e}"),
            }
            EXIT_INPUT
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(&Cli::parse()))
}
