//! Tables of `Δ` for cyclic and dihedral groups, characteristic scans, and
//! their CSV / JSON-lines / text renderings.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::bounds::{
    bound_report, characteristic, closed_form_dihedral_upper, dihedral_lower_bound, singer_q,
    Characteristic, DeltaSource, NoCache,
};
use crate::cache::{CacheRecord, CacheStore};
use crate::error::{Error, Result};
use crate::group::{Basis, GroupKind, GroupSpec};
use crate::search::{min_difference_basis, SearchConfig, MAX_SEARCH_ORDER};

/// Node budget per size attempt unless long mode lifts it.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// A value of `Δ` with its witness, from the cache or a fresh search.
#[derive(Debug, Clone)]
pub struct Solved {
    pub delta: u32,
    pub witness: Basis,
    pub certified: bool,
    pub from_cache: bool,
    pub nodes_expanded: u64,
    pub wall_time: Duration,
}

/// `Δ[spec]`, reusing a certified cache record when one exists and storing
/// any new result.
pub fn solve_delta(
    spec: GroupSpec,
    budget: Option<u64>,
    cache: Option<&mut CacheStore>,
) -> Result<Solved> {
    if let Some(rec) = cache.as_ref().and_then(|c| c.get(spec)).filter(|r| r.certified) {
        let witness = rec.verify().map_err(Error::InvalidInput)?;
        return Ok(Solved {
            delta: rec.delta,
            witness,
            certified: true,
            from_cache: true,
            nodes_expanded: 0,
            wall_time: Duration::ZERO,
        });
    }
    let cfg = SearchConfig::for_spec(spec).with_budget(budget);
    let out = min_difference_basis(spec, &cfg)?;
    if let Some(c) = cache {
        c.insert(CacheRecord::new(&out.witness, out.certified, "search"))?;
    }
    Ok(Solved {
        delta: out.delta,
        witness: out.witness,
        certified: out.certified,
        from_cache: false,
        nodes_expanded: out.nodes_expanded,
        wall_time: out.wall_time,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    /// Search every row; `budget` caps each size attempt.
    Exact { budget: Option<u64> },
    /// Closed forms, constructions and cached values only.
    BoundsOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub kind: GroupKind,
    /// `n` of `C_n` or `D_2n`.
    pub n: u32,
    pub order: u32,
    pub lb: u32,
    /// `Δ`, or the best upper bound when uncertified.
    pub delta: Option<u32>,
    pub upper: u32,
    /// `2Δ[C_n]` for dihedral rows.
    pub two_delta_cyclic: Option<u32>,
    #[serde(skip)]
    pub characteristic: Option<Characteristic>,
    pub certified: bool,
    pub witness: Vec<u32>,
    /// `n = q² + q + 1` for a prime power `q`.
    pub flagged: bool,
}

impl TableRow {
    fn char_decimal(&self) -> String {
        self.characteristic.map(|c| c.decimal()).unwrap_or_default()
    }
}

fn check_kind(kind: GroupKind) -> Result<()> {
    if kind == GroupKind::Interval {
        return Err(Error::InvalidInput("tables cover cyclic and dihedral groups".into()));
    }
    Ok(())
}

/// Rows `1..=max` of the table for `kind`; for dihedral groups `max` bounds
/// the order `2n`.
pub fn table_rows(
    kind: GroupKind,
    max: u32,
    mode: TableMode,
    mut cache: Option<&mut CacheStore>,
) -> Result<Vec<TableRow>> {
    check_kind(kind)?;
    let last = match kind {
        GroupKind::Dihedral => max / 2,
        _ => max,
    };
    if let TableMode::Exact { .. } = mode {
        let spec = GroupSpec::new(kind, last.max(1))?;
        if spec.order() > MAX_SEARCH_ORDER {
            return Err(Error::Resource(format!(
                "{spec} exceeds the exact-search cap of order {MAX_SEARCH_ORDER}"
            )));
        }
    }
    let mut rows = Vec::with_capacity(last as usize);
    for n in 1..=last {
        let row = match mode {
            TableMode::Exact { budget } => exact_row(kind, n, budget, cache.as_deref_mut())?,
            TableMode::BoundsOnly => {
                let src: &dyn DeltaSource = match cache.as_deref() {
                    Some(c) => c,
                    None => &NoCache,
                };
                bounds_row(kind, n, src)
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

fn exact_row(
    kind: GroupKind,
    n: u32,
    budget: Option<u64>,
    mut cache: Option<&mut CacheStore>,
) -> Result<TableRow> {
    let spec = GroupSpec::new(kind, n)?;
    let s = solve_delta(spec, budget, cache.as_deref_mut())?;
    let mut certified = s.certified;
    let mut two = None;
    if kind == GroupKind::Dihedral {
        let c = solve_delta(GroupSpec::cyclic(n), budget, cache)?;
        certified &= c.certified;
        two = Some(2 * c.delta);
    }
    Ok(TableRow {
        kind,
        n,
        order: spec.order() as u32,
        lb: lower_for(spec),
        delta: Some(s.delta),
        upper: s.delta,
        two_delta_cyclic: two,
        characteristic: Some(characteristic(s.delta as u64, spec.order() as u64)),
        certified,
        witness: s.witness.elems().to_vec(),
        flagged: singer_q(n as u64).is_some(),
    })
}

fn lower_for(spec: GroupSpec) -> u32 {
    match spec.kind {
        GroupKind::Dihedral => dihedral_lower_bound(spec.n as u64) as u32,
        _ => crate::bounds::lower_bound_generic(spec.order() as u64) as u32,
    }
}

fn bounds_row(kind: GroupKind, n: u32, src: &dyn DeltaSource) -> TableRow {
    let spec = GroupSpec::new(kind, n).expect("n ≥ 1");
    let r = bound_report(spec, src);
    let two = (kind == GroupKind::Dihedral)
        .then(|| bound_report(GroupSpec::cyclic(n), src).exact.map(|d| 2 * d))
        .flatten();
    let witness = r.best_witness().map(|w| w.basis().elems().to_vec()).unwrap_or_default();
    TableRow {
        kind,
        n,
        order: spec.order() as u32,
        lb: lower_for(spec),
        delta: r.exact,
        upper: r.best_upper,
        two_delta_cyclic: two,
        characteristic: r.exact.map(|d| characteristic(d as u64, spec.order() as u64)),
        certified: r.exact.is_some(),
        witness,
        flagged: singer_q(n as u64).is_some(),
    }
}

fn opt(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn join(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// CSV with a header line. Dihedral columns:
/// `order,lb,delta,two_delta_cyclic,characteristic,certified,witness`;
/// cyclic columns: `n,delta,characteristic,certified,witness`. Bounds-only
/// tables add an `upper` column.
pub fn render_csv(kind: GroupKind, rows: &[TableRow], bounds_only: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = match kind {
        GroupKind::Dihedral => {
            vec!["order", "lb", "delta", "two_delta_cyclic", "characteristic", "certified", "witness"]
        }
        _ => vec!["n", "delta", "characteristic", "certified", "witness"],
    };
    if bounds_only {
        header.push("upper");
    }
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        let mut rec = match kind {
            GroupKind::Dihedral => vec![
                r.order.to_string(),
                r.lb.to_string(),
                opt(r.delta),
                opt(r.two_delta_cyclic),
                r.char_decimal(),
                r.certified.to_string(),
                join(&r.witness),
            ],
            _ => vec![
                r.n.to_string(),
                opt(r.delta),
                r.char_decimal(),
                r.certified.to_string(),
                join(&r.witness),
            ],
        };
        if bounds_only {
            rec.push(r.upper.to_string());
        }
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// One JSON object per line.
pub fn render_json(rows: &[TableRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let mut v = serde_json::to_value(r).expect("rows serialize");
        v["characteristic"] = match r.characteristic {
            Some(_) => serde_json::Value::String(r.char_decimal()),
            None => serde_json::Value::Null,
        };
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

/// Aligned columns; flagged rows carry a `*`.
pub fn render_text(kind: GroupKind, rows: &[TableRow]) -> String {
    let mut out = String::new();
    let ch = |r: &TableRow| r.characteristic.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
    let d = |v: Option<u32>| v.map_or("-".to_string(), |x| x.to_string());
    match kind {
        GroupKind::Dihedral => {
            let _ = writeln!(out, "{:>5} {:>4} {:>5} {:>7} {:>10}  ", "2n", "lb", "delta", "2D[C_n]", "char");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>5} {:>4} {:>5} {:>7} {:>10} {}{}",
                    r.order,
                    r.lb,
                    d(r.delta),
                    d(r.two_delta_cyclic),
                    ch(r),
                    if r.flagged { "*" } else { " " },
                    if r.certified { "" } else { " (uncertified)" },
                );
            }
        }
        _ => {
            let _ = writeln!(out, "{:>5} {:>5} {:>10}", "n", "delta", "char");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>5} {:>5} {:>10}{}",
                    r.n,
                    d(r.delta),
                    ch(r),
                    if r.certified { "" } else { " (uncertified)" },
                );
            }
        }
    }
    out
}

// ---- characteristic scans ------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub n: u32,
    pub order: u32,
    /// Certified `Δ` in exact mode, an upper bound in bounds-only mode.
    pub delta: u32,
    #[serde(skip)]
    pub characteristic: Characteristic,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub max_order: u32,
    pub bounds_only: bool,
    pub argmax: Option<ScanEntry>,
    pub all_certified: bool,
    /// `n` whose upper bound on `ð[D_2n]` exceeds `8/√22`.
    pub unresolved: Vec<u32>,
}

/// `ð ≤ 8/√22`, i.e. `22Δ² ≤ 64N`.
fn within_question_bound(c: &Characteristic) -> bool {
    c.sq_le(64, 22)
}

/// Certified `ð[D_2n]` for every `2n ≤ max`, and where it peaks.
pub fn scan_exact(max: u32, budget: Option<u64>, mut cache: Option<&mut CacheStore>) -> Result<ScanReport> {
    let last = max / 2;
    if 2 * last as usize > MAX_SEARCH_ORDER {
        return Err(Error::Resource(format!("order {max} exceeds the exact-search cap")));
    }
    let mut best: Option<ScanEntry> = None;
    let mut all_certified = true;
    let mut unresolved = Vec::new();
    for n in 1..=last {
        let spec = GroupSpec::dihedral(n);
        let s = solve_delta(spec, budget, cache.as_deref_mut())?;
        all_certified &= s.certified;
        let c = characteristic(s.delta as u64, 2 * n as u64);
        if !within_question_bound(&c) {
            unresolved.push(n);
        }
        if best.as_ref().is_none_or(|b| !c.le(&b.characteristic)) {
            best = Some(ScanEntry { n, order: 2 * n, delta: s.delta, characteristic: c });
        }
    }
    Ok(ScanReport { max_order: max, bounds_only: false, argmax: best, all_certified, unresolved })
}

/// Upper bounds on `ð[D_2n]` for every `2n ≤ max` from closed forms and the
/// cache; `unresolved` lists the `n` where the bound exceeds `8/√22`.
pub fn scan_bounds(max: u32, src: &dyn DeltaSource) -> ScanReport {
    let mut best: Option<ScanEntry> = None;
    let mut unresolved = Vec::new();
    for n in 1..=max / 2 {
        let (u, _) = closed_form_dihedral_upper(n, src);
        let c = characteristic(u as u64, 2 * n as u64);
        if !within_question_bound(&c) {
            unresolved.push(n);
        }
        if best.as_ref().is_none_or(|b| !c.le(&b.characteristic)) {
            best = Some(ScanEntry { n, order: 2 * n, delta: u, characteristic: c });
        }
    }
    ScanReport { max_order: max, bounds_only: true, argmax: best, all_certified: false, unresolved }
}

/// `1,2,3,7,8` as `1-3,7-8`.
pub fn compress_ranges(xs: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let mut j = i;
        while j + 1 < xs.len() && xs[j + 1] == xs[j] + 1 {
            j += 1;
        }
        parts.push(if i == j { xs[i].to_string() } else { format!("{}-{}", xs[i], xs[j]) });
        i = j + 1;
    }
    parts.join(",")
}
