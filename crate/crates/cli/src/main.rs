use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diffbase::bounds::{bound_report, check_analytic_inequality, verify_gap_inequality, NoCache};
use diffbase::cache::{cache_path_from_env, CacheStore};
use diffbase::group::uncovered;
use diffbase::tables::{
    compress_ranges, render_csv, render_json, render_text, scan_bounds, scan_exact, solve_delta,
    table_rows, TableMode, DEFAULT_NODE_BUDGET,
};
use diffbase::{
    bose_chowla_set, is_difference_basis, singer_set, Basis, DeltaSource, Error, GroupKind,
    GroupSpec,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "diffbase", version, about = "Difference bases of cyclic and dihedral groups")]
struct Cli {
    /// Nodes per size attempt (default 10^9).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Remove the node budget.
    #[arg(long, global = true)]
    long: bool,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cyclic,
    Dihedral,
    Interval,
}

impl From<Kind> for GroupKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cyclic => GroupKind::Cyclic,
            Kind::Dihedral => GroupKind::Dihedral,
            Kind::Interval => GroupKind::Interval,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Cyclic,
    Dihedral,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Singer,
    Bose,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact difference size of one group.
    Delta {
        kind: Kind,
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Table of difference sizes for all groups up to an order.
    Table {
        kind: TableKind,
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Use bounds, constructions and cached values only.
        #[arg(long)]
        bounds_only: bool,
    },
    /// Check that a comma-separated list of indices is a difference basis.
    Verify { kind: Kind, n: u32, elems: String },
    /// Every applicable bound with its provenance.
    Bounds {
        kind: Kind,
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Largest dihedral characteristic for orders up to `max`.
    Scan {
        #[arg(long)]
        max: u32,
        #[arg(long)]
        bounds_only: bool,
    },
    /// Check 11(q'+1)² ≤ 12q²+14q+16 for consecutive prime powers q in [lo, hi].
    Gapcheck {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        /// Also sample the real inequality on [43, 10^6] at unit steps.
        #[arg(long)]
        analytic: bool,
    },
    /// Build a Singer difference set or a Bose–Chowla Sidon set.
    Construct { which: Construction, q: u32 },
}

struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::InvalidInput(_) => EXIT_USAGE,
            Error::Resource(_) | Error::BudgetExhausted { .. } => EXIT_BUDGET,
            Error::Construction(_) | Error::CorruptCache { .. } | Error::Io(_) => EXIT_FAIL,
        };
        Fail { code, msg: e.to_string() }
    }
}

type Out = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn budget(cli: &Cli) -> Option<u64> {
    if cli.long {
        None
    } else {
        Some(cli.budget.unwrap_or(DEFAULT_NODE_BUDGET))
    }
}

fn open_cache(cli: &Cli) -> Result<Option<CacheStore>, Fail> {
    if cli.no_cache {
        return Ok(None);
    }
    Ok(Some(CacheStore::load(cache_path_from_env())?))
}

fn spec_of(kind: Kind, n: u32) -> Result<GroupSpec, Fail> {
    Ok(GroupSpec::new(kind.into(), n)?)
}

fn status(certified: bool) -> u8 {
    if certified {
        0
    } else {
        EXIT_BUDGET
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.cmd {
        Cmd::Delta { kind, n, format } => cmd_delta(cli, spec_of(*kind, *n)?, *format),
        Cmd::Table { kind, max, format, bounds_only } => {
            cmd_table(cli, *kind, *max, *format, *bounds_only)
        }
        Cmd::Verify { kind, n, elems } => cmd_verify(spec_of(*kind, *n)?, elems),
        Cmd::Bounds { kind, n, format } => cmd_bounds(cli, spec_of(*kind, *n)?, *format),
        Cmd::Scan { max, bounds_only } => cmd_scan(cli, *max, *bounds_only),
        Cmd::Gapcheck { lo, hi, analytic } => cmd_gapcheck(*lo, *hi, *analytic),
        Cmd::Construct { which, q } => cmd_construct(*which, *q),
    }
}

fn source(cache: &Option<CacheStore>) -> &dyn DeltaSource {
    match cache {
        Some(c) => c,
        None => &NoCache,
    }
}

fn cmd_delta(cli: &Cli, spec: GroupSpec, format: Format) -> Out {
    let mut cache = open_cache(cli)?;
    let s = solve_delta(spec, budget(cli), cache.as_mut())?;
    let report = bound_report(spec, source(&cache));
    if format == Format::Json {
        let v = serde_json::json!({
            "group": spec,
            "delta": s.delta,
            "certified": s.certified,
            "witness": s.witness.elems(),
            "from_cache": s.from_cache,
            "nodes_expanded": s.nodes_expanded,
            "wall_time_ms": s.wall_time.as_millis() as u64,
            "bounds": report,
        });
        println!("{v}");
        return Ok(status(s.certified));
    }
    println!("group: {spec}");
    println!("delta: {}", s.delta);
    println!("certified: {}", s.certified);
    println!("witness: {}", s.witness);
    if s.from_cache {
        println!("source: cache");
    } else {
        println!("nodes: {}  time: {:.3?}", s.nodes_expanded, s.wall_time);
    }
    print_bounds(&report);
    Ok(status(s.certified))
}

fn print_bounds(r: &diffbase::BoundReport) {
    println!("lower {}  upper {}  exact {}", r.best_lower, r.best_upper, match r.exact {
        Some(e) => e.to_string(),
        None => "unknown".into(),
    });
    for b in &r.lower {
        println!("  >= {:<4} {}", b.value, b.rule);
    }
    for b in &r.upper {
        match &b.witness {
            Some(w) => println!("  <= {:<4} {}  {}", b.value, b.rule, w.basis()),
            None => println!("  <= {:<4} {}", b.value, b.rule),
        }
    }
}

fn cmd_table(cli: &Cli, kind: TableKind, max: u32, format: Format, bounds_only: bool) -> Out {
    let kind = match kind {
        TableKind::Cyclic => GroupKind::Cyclic,
        TableKind::Dihedral => GroupKind::Dihedral,
    };
    let mut cache = open_cache(cli)?;
    let mode = if bounds_only {
        TableMode::BoundsOnly
    } else {
        TableMode::Exact { budget: budget(cli) }
    };
    let rows = table_rows(kind, max, mode, cache.as_mut())?;
    let out = match format {
        Format::Csv => render_csv(kind, &rows, bounds_only),
        Format::Json => render_json(&rows),
        Format::Text => render_text(kind, &rows),
    };
    print!("{out}");
    Ok(status(bounds_only || rows.iter().all(|r| r.certified)))
}

fn cmd_verify(spec: GroupSpec, elems: &str) -> Out {
    let parsed: Result<Vec<u32>, _> =
        elems.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse()).collect();
    let parsed = parsed.map_err(|e| Fail { code: EXIT_USAGE, msg: format!("bad element list: {e}") })?;
    let basis = Basis::new(spec, parsed)?;
    if is_difference_basis(&basis) {
        println!("pass: {basis} is a difference basis of {spec}");
        Ok(0)
    } else {
        let missing: Vec<String> = uncovered(&basis).iter().map(u32::to_string).collect();
        println!("fail: uncovered {{{}}}", missing.join(","));
        Ok(EXIT_FAIL)
    }
}

fn cmd_bounds(cli: &Cli, spec: GroupSpec, format: Format) -> Out {
    let cache = open_cache(cli)?;
    let report = bound_report(spec, source(&cache));
    if format == Format::Json {
        println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    } else {
        println!("group: {spec}");
        print_bounds(&report);
        if let Some(t) = diffbase::exact_by_theorem(spec) {
            println!("theorem: {t:?}");
        }
    }
    Ok(0)
}

fn cmd_scan(cli: &Cli, max: u32, bounds_only: bool) -> Out {
    let mut cache = open_cache(cli)?;
    let report = if bounds_only {
        scan_bounds(max, source(&cache))
    } else {
        scan_exact(max, budget(cli), cache.as_mut())?
    };
    let label = if bounds_only { "upper bound" } else { "certified" };
    match &report.argmax {
        Some(a) => println!(
            "argmax 2n={} delta={} char={} ({label})",
            a.order, a.delta, a.characteristic
        ),
        None => println!("empty range"),
    }
    if bounds_only {
        println!(
            "unresolved n (bound above 8/sqrt(22)): {} of {}",
            report.unresolved.len(),
            max / 2
        );
        if !report.unresolved.is_empty() {
            println!("{}", compress_ranges(&report.unresolved));
        }
        Ok(0)
    } else {
        if !report.unresolved.is_empty() {
            println!("above 8/sqrt(22): {}", compress_ranges(&report.unresolved));
        }
        Ok(status(report.all_certified))
    }
}

fn cmd_gapcheck(lo: u64, hi: u64, analytic: bool) -> Out {
    let r = verify_gap_inequality(lo, hi);
    println!("pairs checked: {}  violators: {}", r.pairs_checked, r.violators.len());
    for v in &r.violators {
        println!("  q={} next={} 11(next+1)^2={} > 12q^2+14q+16={}", v.q, v.next, v.lhs, v.rhs);
    }
    let mut ok = r.violators.is_empty();
    if analytic {
        let a = check_analytic_inequality(43.0, 1e6, 1.0)?;
        println!(
            "analytic [43, 1e6] step 1: samples {}  violations {}  min slack {:.6} at x={}",
            a.samples,
            a.violations.len(),
            a.min_slack,
            a.argmin
        );
        ok &= a.violations.is_empty();
    }
    Ok(if ok { 0 } else { EXIT_FAIL })
}

fn cmd_construct(which: Construction, q: u32) -> Out {
    match which {
        Construction::Singer => {
            let s = singer_set(q)?;
            println!("group: {}", s.basis().group());
            println!("size: {}", s.len());
            println!("provenance: {}", s.provenance());
            println!("elements: {}", s.basis());
        }
        Construction::Bose => {
            let s = bose_chowla_set(q)?;
            println!("modulus: {}", s.modulus);
            println!("size: {}", s.elems.len());
            let parts: Vec<String> = s.elems.iter().map(u32::to_string).collect();
            println!("elements: {{{}}}", parts.join(","));
        }
    }
    Ok(0)
}
