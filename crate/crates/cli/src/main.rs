//! `descent`: multiply, verify, tabulate, and draw descent-algebra objects.

mod verify;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use descent_core::export::{to_csv, to_json, to_text};
use descent_core::{
    composition_to_subset, contingency_tables, graph_of_subset, oracle_multiply, solomon_multiply,
    structure_constants, to_group_algebra, Bounds, Composition, Descent64, GeneratorSubset,
    GroupElement64, StructureTable64,
};
use serde::Serialize;
use serde_json::json;

use crate::verify::{Scope, ScopeReport, Settings};

#[derive(Debug, Parser)]
#[command(name = "descent", version, about = "Descent algebra of the symmetric group")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Override every degree limit (prints a warning).
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    /// Seed for sampled verification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand B_kappa * B_nu in the B basis.
    Multiply {
        n: usize,
        /// Left factor, comma-separated parts.
        kappa: String,
        /// Right factor, comma-separated parts.
        nu: String,
        /// Print every margin matrix and its reading word.
        #[arg(long)]
        show_matrices: bool,
        /// Cross-check against the group-algebra product.
        #[arg(long)]
        oracle: bool,
    },
    /// Run exhaustive (or seeded sampled) checks at degree n.
    Verify {
        n: usize,
        /// Every scope whose default limit admits n.
        #[arg(long)]
        all: bool,
        /// Ordered presentation of x^-1 J ∩ K and reading words, all (J, K).
        #[arg(long)]
        lemma: bool,
        /// Conjugate parabolic intersections, all (J, K).
        #[arg(long)]
        parabolic: bool,
        /// zeta maps the double set onto the margin matrices.
        #[arg(long)]
        bijection: bool,
        /// Margin-matrix products against group-algebra products.
        #[arg(long)]
        oracle: bool,
        /// Multinomial counting identity, all (kappa, nu).
        #[arg(long)]
        counting: bool,
        /// Coset representative counts.
        #[arg(long)]
        representatives: bool,
        /// Counterexamples kept per scope.
        #[arg(long, default_value_t = 10)]
        max_counterexamples: usize,
    },
    /// Emit the full structure-constant table.
    Table {
        n: usize,
        /// Write to a file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Show the graph of a generator subset.
    #[command(group(ArgGroup::new("input").required(true).args(["subset", "kappa"])))]
    Graph {
        n: usize,
        /// Generator indices, comma-separated (i for s_i); may be empty.
        #[arg(long, allow_hyphen_values = true)]
        subset: Option<String>,
        /// Composition whose blocks give the subset.
        #[arg(long)]
        kappa: Option<String>,
        /// Emit Graphviz DOT with components clustered.
        #[arg(long)]
        dot: bool,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let bounds = match cli.max_n {
        Some(max) => {
            eprintln!("warning: --max-n {max} overrides the default degree limits");
            Bounds::DEFAULT.with_max_n(max)
        }
        None => Bounds::DEFAULT,
    };
    let mut out = String::new();
    let outcome = match &cli.command {
        Command::Multiply {
            n,
            kappa,
            nu,
            show_matrices,
            oracle,
        } => multiply(&mut out, cli.format, &bounds, *n, kappa, nu, *show_matrices, *oracle)?,
        Command::Verify {
            n,
            all,
            lemma,
            parabolic,
            bijection,
            oracle,
            counting,
            representatives,
            max_counterexamples,
        } => {
            let flags = [
                (Scope::Lemma, *lemma),
                (Scope::Parabolic, *parabolic),
                (Scope::Bijection, *bijection),
                (Scope::Oracle, *oracle),
                (Scope::Counting, *counting),
                (Scope::Representatives, *representatives),
            ];
            let explicit: Vec<Scope> = flags.iter().filter(|f| f.1).map(|f| f.0).collect();
            let settings = Settings {
                bounds,
                seed: cli.seed,
                cap: *max_counterexamples,
            };
            verify_cmd(&mut out, cli.format, *n, *all, &explicit, &settings)?
        }
        Command::Table { n, output } => {
            table(&mut out, cli.format, &bounds, *n)?;
            if let Some(path) = output {
                fs::write(path, &out).with_context(|| format!("writing {}", path.display()))?;
                out.clear();
            }
            Outcome::Pass
        }
        Command::Graph {
            n,
            subset,
            kappa,
            dot,
        } => graph(&mut out, cli.format, *n, subset.as_deref(), kappa.as_deref(), *dot)?,
    };
    io::stdout().lock().write_all(out.as_bytes())?;
    Ok(outcome)
}

fn parse_composition(text: &str, n: usize) -> Result<Composition> {
    Composition::parse_for(text, n).with_context(|| format!("bad composition {text:?}"))
}

#[derive(Serialize)]
struct TermOut {
    eta: String,
    coefficient: i64,
}

fn terms_of(e: &Descent64) -> Vec<TermOut> {
    e.terms()
        .map(|(eta, &coefficient)| TermOut {
            eta: eta.to_string(),
            coefficient,
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn multiply(
    out: &mut String,
    format: Format,
    bounds: &Bounds,
    n: usize,
    kappa: &str,
    nu: &str,
    show_matrices: bool,
    oracle: bool,
) -> Result<Outcome> {
    bounds.check_basis(n)?;
    let kappa = parse_composition(kappa, n)?;
    let nu = parse_composition(nu, n)?;
    let product: Descent64 = solomon_multiply(&kappa, &nu)?;
    let matrices: Vec<_> = if show_matrices {
        contingency_tables(&nu, &kappa)?.collect()
    } else {
        Vec::new()
    };
    let verdict = if oracle {
        let lhs = to_group_algebra(&product, bounds)?;
        let rhs: GroupElement64 = oracle_multiply(&kappa, &nu, bounds)?;
        Some(lhs == rhs)
    } else {
        None
    };
    let verdict_text = |ok: bool| if ok { "PASS" } else { "FAIL" };

    match format {
        Format::Text => {
            for z in &matrices {
                writeln!(out, "{z} -> {}", z.reading_word())?;
            }
            writeln!(out, "{product}")?;
            if let Some(ok) = verdict {
                writeln!(out, "oracle: {}", verdict_text(ok))?;
            }
        }
        Format::Csv => {
            writeln!(out, "eta,coefficient")?;
            for t in terms_of(&product) {
                writeln!(out, "\"{}\",{}", t.eta, t.coefficient)?;
            }
        }
        Format::Json => {
            let mut doc = json!({
                "n": n,
                "kappa": kappa.to_string(),
                "nu": nu.to_string(),
                "terms": terms_of(&product),
            });
            if show_matrices {
                doc["matrices"] = json!(matrices
                    .iter()
                    .map(|z| json!({"matrix": z, "eta": z.reading_word().to_string()}))
                    .collect::<Vec<_>>());
            }
            if let Some(ok) = verdict {
                doc["oracle"] = json!(verdict_text(ok));
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(match verdict {
        Some(false) => Outcome::Fail,
        _ => Outcome::Pass,
    })
}

fn verify_cmd(
    out: &mut String,
    format: Format,
    n: usize,
    all: bool,
    explicit: &[Scope],
    settings: &Settings,
) -> Result<Outcome> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    if !all && explicit.is_empty() {
        bail!("choose at least one scope (--all, --lemma, --parabolic, --bijection, --oracle, --counting, --representatives)");
    }
    let mut selected = Vec::new();
    let mut skipped = Vec::new();
    for scope in Scope::ALL {
        let within = scope.check_bound(n, &settings.bounds);
        if explicit.contains(&scope) {
            within.with_context(|| {
                format!("--{} is limited by default; pass --max-n {n} to run it anyway", scope.name())
            })?;
            selected.push(scope);
        } else if all {
            match within {
                Ok(()) => selected.push(scope),
                Err(_) => skipped.push(scope),
            }
        }
    }
    let reports = selected
        .iter()
        .map(|&scope| verify::run(scope, n, settings))
        .collect::<Result<Vec<ScopeReport>>>()?;
    let passed = reports.iter().all(|r| r.passed);

    match format {
        Format::Json => {
            let doc = json!({
                "n": n,
                "passed": passed,
                "scopes": reports,
                "skipped": skipped.iter().map(|s| s.name()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Csv => {
            writeln!(out, "scope,passed,cases,witnesses,sampled,failures")?;
            for r in &reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.scope.name(),
                    r.passed,
                    r.cases,
                    r.witnesses,
                    r.sampled,
                    r.failures
                )?;
            }
        }
        Format::Text => {
            for r in &reports {
                let unit = match r.scope {
                    Scope::Lemma | Scope::Parabolic | Scope::Bijection => "(J,K) pairs",
                    Scope::Oracle | Scope::Counting => "(kappa,nu) pairs",
                    Scope::Representatives => "subsets",
                };
                let sampled = if r.sampled {
                    format!(", sampled with seed {}", settings.seed)
                } else {
                    String::new()
                };
                writeln!(
                    out,
                    "{}: {} ({} {unit}, {} witnesses, {} failures{sampled})",
                    r.scope.name(),
                    if r.passed { "PASS" } else { "FAIL" },
                    r.cases,
                    r.witnesses,
                    r.failures,
                )?;
                for f in &r.counterexamples {
                    match (&f.detail, &f.message) {
                        (Some(d), _) => writeln!(
                            out,
                            "  J={{{}}} K={{{}}} x={} {:?}: expected {} got {}",
                            f.left, f.right, d.x, d.check, d.expected, d.actual
                        )?,
                        (None, Some(m)) => writeln!(out, "  {} / {}: {m}", f.left, f.right)?,
                        (None, None) => writeln!(out, "  {} / {}", f.left, f.right)?,
                    }
                }
            }
            for s in &skipped {
                writeln!(out, "{}: skipped (n = {n} exceeds the default limit)", s.name())?;
            }
            writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(if passed { Outcome::Pass } else { Outcome::Fail })
}

fn table(out: &mut String, format: Format, bounds: &Bounds, n: usize) -> Result<()> {
    let table: StructureTable64 = structure_constants(n, bounds)?;
    match format {
        Format::Text => out.push_str(&to_text(&table)),
        Format::Csv => out.push_str(&to_csv(&table)?),
        Format::Json => out.push_str(&to_json(&table)?),
    }
    Ok(())
}

fn graph(
    out: &mut String,
    format: Format,
    n: usize,
    subset: Option<&str>,
    kappa: Option<&str>,
    dot: bool,
) -> Result<Outcome> {
    let j = match (subset, kappa) {
        (Some(text), _) => GeneratorSubset::parse(text, n).with_context(|| format!("bad subset {text:?}"))?,
        (None, Some(text)) => composition_to_subset(&parse_composition(text, n)?),
        (None, None) => bail!("one of --subset or --kappa is required"),
    };
    let g = graph_of_subset(&j);
    let presentation = g.ordered_presentation();
    let composition = j.to_composition();
    if dot {
        out.push_str(&g.to_dot(true));
        return Ok(Outcome::Pass);
    }
    match format {
        Format::Json => {
            let doc = json!({
                "n": n,
                "subset": j.members().collect::<Vec<_>>(),
                "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                "ordered_presentation": presentation.blocks(),
                "composition": composition.to_string(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Text | Format::Csv => {
            let edges: String = g.edges().map(|(u, v)| format!(" {{{u},{v}}}")).collect();
            writeln!(out, "subset: {{{j}}}")?;
            writeln!(out, "edges:{edges}")?;
            writeln!(out, "ordered presentation: {presentation}")?;
            writeln!(out, "composition: ({composition})")?;
        }
    }
    Ok(Outcome::Pass)
}
