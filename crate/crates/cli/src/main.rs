use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pgtk_cli::corpus::CorpusSpec;
use pgtk_cli::suite::{run_suite, Suite, SuiteConfig};
use pgtk_core::error::Error;
use pgtk_core::fp::{todd_coxeter, Presentation, Word, DEFAULT_MAX_COSETS};
use pgtk_core::group::{
    abelian_invariants, center, commutator_subgroup, fingerprint, power_subgroup, quotient_group, CatalogSpec, Group,
    SubgroupRef, DEFAULT_ORDER_CAP,
};
use pgtk_core::powerful::is_powerful_subgroup;
use pgtk_core::series::{
    derived_series, frattini_series, lower_central_series, lower_p_series, upper_central_series, SeriesResult,
};
use pgtk_core::tensor::{compute_q_tensor, compute_tensor, CrossedModule, TensorCaps, TensorResult};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "pgtk", version, about = "Finite p-group computations and theorem sweeps")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    max_cosets: Option<usize>,
    /// Group order cap; for `verify`, the corpus order cap for every prime.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a catalog group.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Todd–Coxeter enumeration of a presentation.
    Tc {
        #[arg(long)]
        presentation: String,
        /// Subgroup generator words, in the presentation's letters.
        #[arg(long)]
        subgroup: Vec<String>,
    },
    /// Non-abelian tensor product of crossed modules over a group.
    Tensor(TensorArgs),
    /// Tensor product modulo q.
    Qtensor {
        #[command(flatten)]
        t: TensorArgs,
        #[arg(long)]
        q: u32,
    },
    /// Run a theorem suite over a generated corpus.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Primes to include (default 2, 3, 5).
        #[arg(long)]
        prime: Vec<u32>,
        #[arg(long, default_value_t = 3)]
        min_substantive: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Include the wall time in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    Info {
        #[arg(long)]
        group: String,
    },
    Series {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = SeriesArg::LowerCentral)]
        kind: SeriesArg,
    },
    Quotient {
        #[arg(long)]
        group: String,
        /// center, derived, frattini, gamma:K, zeta:K, lambda:K or power:E
        #[arg(long)]
        by: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    LowerCentral,
    UpperCentral,
    Derived,
    LowerP,
    Frattini,
}

#[derive(Args)]
struct TensorArgs {
    #[arg(long)]
    group: String,
    /// G ⊗ G with identity crossed modules.
    #[arg(long = "self", conflicts_with = "sub")]
    self_: bool,
    /// Use the inclusion of this normal subgroup as the left factor.
    #[arg(long)]
    sub: Option<String>,
    /// Write the instantiated presentation here.
    #[arg(long)]
    emit_presentation: Option<PathBuf>,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource() {
            2
        } else if matches!(e, Error::Structure(_)) {
            1
        } else {
            3
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes to stdout; a closed pipe (`pgtk ... | head`) is not an error.
fn out(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit(cli: &Cli, value: &Value, text: impl FnOnce() -> String) {
    match cli.output {
        Output::Json => out(&format!("{}\n", serde_json::to_string_pretty(value).expect("json"))),
        Output::Text => out(&text()),
    }
}

fn load_group(cli: &Cli, spec: &str) -> Result<Group, Failure> {
    let cs: CatalogSpec = spec.parse()?;
    let cap = cli.max_order.unwrap_or(DEFAULT_ORDER_CAP);
    match cs.order() {
        Some(n) if n <= cap => Ok(Arc::new(cs.build()?)),
        n => Err(Error::OrderCap { order: n.unwrap_or(usize::MAX), cap }.into()),
    }
}

fn term_index(arg: &str, prefix: &str) -> Option<usize> {
    arg.strip_prefix(prefix)?.parse().ok()
}

fn named_subgroup(g: &Group, by: &str) -> Result<SubgroupRef, Failure> {
    let whole = SubgroupRef::whole(g);
    let p = g.prime();
    let need_p = || p.ok_or_else(|| usage(format!("{by} needs a p-group")));
    Ok(match by {
        "center" => center(g),
        "derived" => commutator_subgroup(&whole, &whole)?,
        "frattini" => frattini_series(g, need_p()?)?.term(2).clone(),
        "trivial" => SubgroupRef::trivial(g),
        "whole" => whole,
        _ => {
            if let Some(k) = term_index(by, "gamma:") {
                lower_central_series(g)?.term(k.max(1)).clone()
            } else if let Some(k) = term_index(by, "zeta:") {
                upper_central_series(g)?.term(k).clone()
            } else if let Some(k) = term_index(by, "lambda:") {
                lower_p_series(g, need_p()?)?.term(k.max(1)).clone()
            } else if let Some(e) = term_index(by, "power:") {
                power_subgroup(&whole, e as u64)
            } else {
                return Err(usage(format!("unknown subgroup `{by}`")));
            }
        }
    })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Group(cmd) => group_command(cli, cmd),
        Command::Tc { presentation, subgroup } => tc(cli, presentation, subgroup),
        Command::Tensor(t) => tensor(cli, t, None),
        Command::Qtensor { t, q } => tensor(cli, t, Some(*q)),
        Command::Verify { suite, prime, min_substantive, report, timing } => {
            let mut spec = CorpusSpec::default();
            if !prime.is_empty() {
                let cap = |p: u32| spec.max_order.get(&p).copied().unwrap_or(125);
                spec.max_order = prime.iter().map(|&p| (p, cap(p))).collect();
                spec.primes = prime.clone();
            }
            if let Some(m) = cli.max_order {
                spec.max_order.values_mut().for_each(|v| *v = m);
            }
            spec.seed = cli.seed;
            let mut config = SuiteConfig { min_substantive: *min_substantive, ..SuiteConfig::default() };
            if let Some(c) = cli.max_cosets {
                config.caps.max_cosets = c;
            }
            let mut r = run_suite(*suite, &spec, &config)?;
            if !timing {
                r.wall_time_ms = None;
            }
            let json = r.to_json();
            if let Some(path) = report {
                std::fs::write(path, &json).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            match cli.output {
                Output::Json => out(&format!("{json}\n")),
                Output::Text => out(&r.to_text()),
            }
            Ok(r.exit_code as u8)
        }
    }
}

fn nilpotency_class(g: &Group) -> Result<usize, Failure> {
    Ok(lower_central_series(g)?.terms.len() - 1)
}

fn group_command(cli: &Cli, cmd: &GroupCommand) -> Result<u8, Failure> {
    match cmd {
        GroupCommand::Info { group } => {
            let g = load_group(cli, group)?;
            let whole = SubgroupRef::whole(&g);
            let class = nilpotency_class(&g).ok().filter(|_| g.prime().is_some() || g.order() == 1);
            let v = json!({
                "name": g.name(),
                "order": g.order(),
                "prime": g.prime(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "center_order": center(&g).order(),
                "class": class,
                "derived_length": derived_series(&g)?.terms.len() - 1,
                "powerful": g.prime().map(|p| is_powerful_subgroup(&whole, p)),
                "abelian_invariants": g.is_abelian().then(|| abelian_invariants(&g)),
                "fingerprint": fingerprint(&g),
            });
            emit(cli, &v, || {
                let mut s = String::new();
                for (k, x) in v.as_object().expect("object") {
                    s.push_str(&format!("{k}: {x}\n"));
                }
                s
            });
        }
        GroupCommand::Series { group, kind } => {
            let g = load_group(cli, group)?;
            let p = || g.prime().ok_or_else(|| usage("this series needs a p-group"));
            let s: SeriesResult = match kind {
                SeriesArg::LowerCentral => lower_central_series(&g)?,
                SeriesArg::UpperCentral => upper_central_series(&g)?,
                SeriesArg::Derived => derived_series(&g)?,
                SeriesArg::LowerP => lower_p_series(&g, p()?)?,
                SeriesArg::Frattini => frattini_series(&g, p()?)?,
            };
            let v: Value = serde_json::from_str(&s.to_json()).expect("series json");
            emit(cli, &v, || format!("{}: orders {:?}\n", s.kind.as_str(), s.orders()));
        }
        GroupCommand::Quotient { group, by } => {
            let g = load_group(cli, group)?;
            let n = named_subgroup(&g, by)?;
            let q = quotient_group(&g, &n)?;
            let v = json!({
                "group": g.name(),
                "by": by,
                "kernel_order": n.order(),
                "quotient_order": q.group.order(),
                "fingerprint": fingerprint(&q.group),
                "projection": q.projection.images(),
            });
            emit(cli, &v, || format!("{} / {by}: order {} (kernel order {})\n", g.name(), q.group.order(), n.order()));
        }
    }
    Ok(0)
}

fn parse_word(p: &Presentation, w: &str) -> Result<Word, Failure> {
    let labels: Vec<String> = (0..p.generator_count()).map(|g| p.label(g)).collect();
    let wrapped: Presentation = format!("<{} | {w}>", labels.join(",")).parse()?;
    wrapped.relators().first().cloned().ok_or_else(|| usage(format!("empty subgroup word `{w}`")))
}

fn tc(cli: &Cli, presentation: &str, subgroup: &[String]) -> Result<u8, Failure> {
    let p: Presentation = presentation.parse()?;
    let words = subgroup.iter().map(|w| parse_word(&p, w)).collect::<Result<Vec<_>, _>>()?;
    let ct = todd_coxeter(&p, &words, cli.max_cosets.unwrap_or(DEFAULT_MAX_COSETS))?;
    let what = if words.is_empty() { "order" } else { "index" };
    let v = json!({ what: ct.coset_count(), "cosets": ct.coset_count(), "table": ct.rows() });
    emit(cli, &v, || format!("{what} {}\n", ct.coset_count()));
    Ok(0)
}

fn tensor_json(t: &TensorResult) -> Value {
    let m = t.mu().source().order();
    let n = t.nu().source().order();
    let gen_map: Vec<[usize; 3]> =
        (0..m).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| [a, b, t.tensor(a, b)]).collect();
    let brace_map: Option<Vec<[usize; 3]>> =
        t.brace.as_ref().map(|(k, e)| k.pairs.iter().zip(e).map(|(&(a, b), &x)| [a, b, x]).collect());
    json!({
        "kind": t.kind,
        "order": t.group().order(),
        "fingerprint": fingerprint(t.group()),
        "presentation_shape": t.presentation_shape,
        "table": t.group().to_data().mult,
        "gen_map": gen_map,
        "brace_map": brace_map,
        "alpha": t.alpha().images(),
        "beta": t.beta().images(),
    })
}

fn tensor(cli: &Cli, args: &TensorArgs, q: Option<u32>) -> Result<u8, Failure> {
    let g = load_group(cli, &args.group)?;
    let id = CrossedModule::identity(&g);
    let left = match (&args.sub, args.self_) {
        (Some(s), _) => CrossedModule::inclusion(&named_subgroup(&g, s)?)?,
        (None, true) => id.clone(),
        (None, false) => return Err(usage("pass --self or --sub")),
    };
    let mut caps = TensorCaps::default();
    if let Some(c) = cli.max_cosets {
        caps.max_cosets = c;
    }
    let t = match q {
        None => compute_tensor(&left, &id, &caps)?,
        Some(q) => compute_q_tensor(&left, &id, q, &caps)?,
    };
    if let Some(path) = &args.emit_presentation {
        std::fs::write(path, t.presentation.to_text())
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let v = tensor_json(&t);
    emit(cli, &v, || {
        let s = &t.presentation_shape;
        format!(
            "order {}\nfingerprint {:?}\npresentation {} generators, {} relators (simplified to {}, {})\n",
            t.group().order(),
            fingerprint(t.group()),
            s.generators,
            s.relators,
            s.simplified_generators,
            s.simplified_relators
        )
    });
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
