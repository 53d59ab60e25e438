//! The `workbench` command-line interface: polynomial queries, crystal
//! construction and export, conjecture verification campaigns, figure-table
//! regeneration, and the worked-example selftest.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap
//! exceeded.

use crate::cache::Cache;
use crate::crystal::{CrystalGraph, CrystalKind, Generator};
use crate::demazure::bounded_subset_of;
use crate::inv::{FpfInvolution, Involution};
use crate::perm::Permutation;
use crate::poly::{
    inv_schubert_o, inv_schubert_sp, key_expand, key_polynomial, p_key, q_key, schubert, Polynomial,
};
use crate::shapes::{Flag, WeakComposition};
use crate::verify::{
    selftest, verify_o_conjecture, verify_sp_conjecture, verify_tables, verify_vexillary,
    VerificationReport,
};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "workbench",
    version,
    about = "crystals, shifted keys, and conjecture checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a key, P-key, Q-key, Schubert, or involution Schubert polynomial
    Poly {
        /// one of: key, pkey, qkey, schubert, ischub-o, ischub-sp
        family: String,
        /// a composition (e.g. 1021 or 1,0,2,1), one-line permutation, or
        /// cycle notation depending on the family
        index: String,
    },
    /// Build a reduced factorization crystal and export it
    Crystal {
        #[command(subcommand)]
        action: CrystalCmd,
    },
    /// Run a verification campaign
    Verify {
        #[command(subcommand)]
        target: VerifyCmd,
    },
    /// Regenerate the printed alpha tables
    Tables {
        /// one of: sp-fig, o-fig
        which: String,
    },
    /// Run every worked-example regression
    Selftest,
}

#[derive(Subcommand)]
enum CrystalCmd {
    Build(BuildArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// crystal kind: gl, sp, or o
    #[arg(long)]
    kind: String,
    /// generator: one-line permutation for gl, cycle notation otherwise
    #[arg(long)]
    gen: String,
    /// number of factors
    #[arg(short)]
    n: usize,
    /// restrict to the factorizations bounded by this flag (e.g. 2,2,4,4)
    #[arg(long)]
    flag: Option<String>,
    /// write Graphviz DOT here
    #[arg(long)]
    dot: Option<String>,
    /// write the JSON graph here
    #[arg(long)]
    json: Option<String>,
    /// draw every operator index instead of the default subset
    #[arg(long, default_value_t = false)]
    all_edges: bool,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// symplectic Demazure decomposition over fpf-involutions
    SpConj(CampaignArgs),
    /// orthogonal Demazure decomposition over involutions
    OConj(CampaignArgs),
    /// vexillary involutions against the Demazure crystal of their code
    Vexillary(CampaignArgs),
}

#[derive(Args)]
struct CampaignArgs {
    /// window bound of the involution family
    #[arg(long)]
    max: usize,
    /// fixed crystal rank (default: per-input stable rank)
    #[arg(short)]
    n: Option<usize>,
    /// worker threads
    #[arg(long)]
    jobs: Option<usize>,
}

pub fn cli_main(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success exit
            if e.use_stderr() {
                eprintln!("{e}");
                return 2;
            }
            print!("{e}");
            return 0;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Error::EnumerationTooLarge(msg)) => {
            eprintln!("error: {msg}");
            3
        }
        Err(Error::Parse(msg)) | Err(Error::Domain(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Poly { family, index } => run_poly(&family, &index),
        Cmd::Crystal {
            action: CrystalCmd::Build(args),
        } => run_build(args),
        Cmd::Verify { target } => run_verify(target),
        Cmd::Tables { which } => run_tables(&which),
        Cmd::Selftest => run_selftest(),
    }
}

fn render_key_expansion(f: &Polynomial) -> String {
    let expansion = key_expand(f);
    let mut parts = Vec::new();
    for (alpha, c) in expansion {
        use num_traits::One;
        if c.is_one() {
            parts.push(format!("kappa{alpha}"));
        } else {
            parts.push(format!("{c}*kappa{alpha}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn run_poly(family: &str, index: &str) -> Result<i32> {
    match family {
        "key" => {
            let alpha = WeakComposition::parse(index)?;
            let f = key_polynomial(&alpha);
            println!("{}", f.render());
        }
        "pkey" | "qkey" => {
            let alpha = WeakComposition::parse(index)?;
            let f = if family == "pkey" { p_key(&alpha)? } else { q_key(&alpha)? };
            println!("{}", f.render());
            println!("key expansion: {}", render_key_expansion(&f));
        }
        "schubert" => {
            let w = Permutation::parse_one_line(index)?;
            println!("{}", schubert(&w)?.render());
        }
        "ischub-o" => {
            let z = Involution::parse(index)?;
            println!("{}", inv_schubert_o(&z)?.render());
        }
        "ischub-sp" => {
            let z = FpfInvolution::parse(index)?;
            println!("{}", inv_schubert_sp(&z)?.render());
        }
        _ => {
            return Err(Error::Parse(format!(
                "unknown polynomial family {family:?} (expected key, pkey, qkey, schubert, ischub-o, ischub-sp)"
            )))
        }
    }
    Ok(0)
}

fn run_build(args: BuildArgs) -> Result<i32> {
    let kind = CrystalKind::parse(&args.kind)?;
    let gen = match kind {
        CrystalKind::Gl => Generator::Word {
            w: Permutation::parse_one_line(&args.gen)?,
            marks: vec![],
        },
        CrystalKind::Q => Generator::Fpf(FpfInvolution::parse(&args.gen)?),
        CrystalKind::QPlus => Generator::Inv(Involution::parse(&args.gen)?),
    };
    let full = CrystalGraph::reduced_factorizations(&gen, args.n)?;
    let graph = match &args.flag {
        None => full,
        Some(phi) => {
            let phi = Flag::parse(phi)?;
            bounded_subset_of(&full, &phi).to_graph()
        }
    };
    println!(
        "{} crystal on {} vertices, {} components; character: {}",
        graph.kind.label(),
        graph.len(),
        graph.components().len(),
        graph.character().render()
    );
    if let Some(path) = args.dot {
        std::fs::write(&path, graph.to_dot(args.all_edges))?;
        println!("wrote {path}");
    }
    if let Some(path) = args.json {
        std::fs::write(&path, serde_json::to_string_pretty(&graph.to_json())?)?;
        println!("wrote {path}");
    }
    Ok(0)
}

fn report_exit(report: &VerificationReport, cache_key: Option<String>) -> Result<i32> {
    for o in &report.outcomes {
        println!(
            "{} {} ({} ms) {}",
            if o.pass { "pass" } else { "FAIL" },
            o.input,
            o.millis,
            o.detail
        );
    }
    println!(
        "{}: {} inputs, {} failures, {} ms total",
        report.target,
        report.outcomes.len(),
        report.failures,
        report.total_millis
    );
    if let (Some(key), Some(cache)) = (cache_key, Cache::from_env()) {
        cache.put(&key, &serde_json::to_value(report)?)?;
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn cached_report(key: &str) -> Option<VerificationReport> {
    let cache = Cache::from_env()?;
    let value = cache.get(key)?;
    serde_json::from_value(value).ok()
}

fn run_verify(target: VerifyCmd) -> Result<i32> {
    let (name, args) = match &target {
        VerifyCmd::SpConj(a) => ("sp-conj", a),
        VerifyCmd::OConj(a) => ("o-conj", a),
        VerifyCmd::Vexillary(a) => ("vexillary", a),
    };
    let descriptor = format!("max={} n={:?}", args.max, args.n);
    let key = Cache::key(&format!("verify {name}"), &descriptor);
    if let Some(report) = cached_report(&key) {
        println!("(cached)");
        return report_exit(&report, None);
    }
    let report = match target {
        VerifyCmd::SpConj(a) => verify_sp_conjecture(a.max, a.n, a.jobs)?,
        VerifyCmd::OConj(a) => verify_o_conjecture(a.max, a.n, a.jobs)?,
        VerifyCmd::Vexillary(a) => verify_vexillary(a.max, a.jobs)?,
    };
    report_exit(&report, Some(key))
}

fn run_tables(which: &str) -> Result<i32> {
    let kind = match which {
        "sp-fig" => CrystalKind::Q,
        "o-fig" => CrystalKind::QPlus,
        _ => {
            return Err(Error::Parse(format!(
                "unknown table {which:?} (expected sp-fig, o-fig)"
            )))
        }
    };
    let key = Cache::key("tables", which);
    if let Some(report) = cached_report(&key) {
        println!("(cached)");
        return report_exit(&report, None);
    }
    let report = verify_tables(kind)?;
    report_exit(&report, Some(key))
}

fn run_selftest() -> Result<i32> {
    let results = selftest();
    let mut failures = 0;
    for r in &results {
        println!(
            "{} {}{}",
            if r.pass { "pass" } else { "FAIL" },
            r.name,
            if r.pass {
                String::new()
            } else {
                format!(": {}", r.detail)
            }
        );
        if !r.pass {
            failures += 1;
        }
    }
    println!(
        "selftest: {}/{} checks pass",
        results.len() - failures,
        results.len()
    );
    Ok(if failures == 0 { 0 } else { 1 })
}
