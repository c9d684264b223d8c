//! Closed-form bounds on `Δ`, the difference characteristic, and the
//! prime-power gap checks.
//!
//! Every comparison involving a square root is done on squared integers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::constructions::{
    cyclic_basis_from_interval, dihedral_basis_from_cyclic, product_basis, singer_set,
    subgroup_transversal_basis, CertifiedBasis, MAX_CONSTRUCTION_Q,
};
use crate::field::{is_prime, prime_power};
use crate::group::{Basis, GroupKind, GroupSpec};
use crate::search::{min_difference_basis, SearchConfig};

/// Least `k` with `k(k-1) + 1 ≥ order`.
pub fn lower_bound_generic(order: u64) -> u64 {
    let mut k = 1;
    while k * (k - 1) + 1 < order {
        k += 1;
    }
    k
}

/// Least `k` with `k(k-1)/2 ≥ n`.
pub fn interval_lower_bound(n: u64) -> u64 {
    let mut k = 1;
    while k * (k - 1) / 2 < n {
        k += 1;
    }
    k
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn ceil_sqrt(n: u128) -> u128 {
    let r = isqrt(n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// `⌈√(4n)⌉`, the lower bound for `D_2n`.
pub fn dihedral_lower_bound(n: u64) -> u64 {
    ceil_sqrt(4 * n as u128) as u64
}

/// `q` with `n = q² + q + 1` for a prime power `q`.
pub fn singer_q(n: u64) -> Option<u64> {
    if n < 7 {
        return None;
    }
    let r = isqrt(4 * n as u128 - 3) as u64;
    let q = r.checked_sub(1)? / 2;
    (q * q + q + 1 == n && prime_power(q).is_some()).then_some(q)
}

/// Exact value or bracket that follows from a theorem without search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremValue {
    Exact(u32),
    Interval(u32, u32),
}

/// For `D_2n`: `n = q²+q+1` gives exactly `2q+2`; `n = 4(q²+q+1)` gives
/// `[4q+3, 4q+4]`. Other groups and other `n` give `None`.
pub fn exact_by_theorem(spec: GroupSpec) -> Option<TheoremValue> {
    if spec.kind != GroupKind::Dihedral {
        return None;
    }
    let n = spec.n as u64;
    if let Some(q) = singer_q(n) {
        return Some(TheoremValue::Exact(2 * q as u32 + 2));
    }
    if n.is_multiple_of(4) {
        if let Some(q) = singer_q(n / 4) {
            return Some(TheoremValue::Interval(4 * q as u32 + 3, 4 * q as u32 + 4));
        }
    }
    None
}

// ---- characteristic ------------------------------------------------------

/// `ð = Δ / √N`, kept as the exact pair `(Δ, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Characteristic {
    pub delta: u64,
    pub order: u64,
}

pub fn characteristic(delta: u64, order: u64) -> Characteristic {
    assert!(delta >= 1 && order >= 1, "characteristic needs positive arguments");
    Characteristic { delta, order }
}

const PLACES: u32 = 4;

impl Characteristic {
    pub fn value(&self) -> f64 {
        self.delta as f64 / (self.order as f64).sqrt()
    }

    /// `⌊ð·10^4⌋`.
    fn scaled(&self) -> u128 {
        let scale = 10u128.pow(2 * PLACES);
        isqrt(self.delta as u128 * self.delta as u128 * scale / self.order as u128)
    }

    /// True when `ð` has at most four decimals.
    pub fn is_exact(&self) -> bool {
        let s = self.scaled();
        s * s * self.order as u128
            == self.delta as u128 * self.delta as u128 * 10u128.pow(2 * PLACES)
    }

    /// `ð` truncated to four decimals (`1.7056`, `1.2060`); exact values drop
    /// trailing zeros (`1.125`, `1.2`, `1`).
    pub fn decimal(&self) -> String {
        let s = self.scaled();
        let unit = 10u128.pow(PLACES);
        let frac = format!("{:04}", s % unit);
        let frac = if self.is_exact() { frac.trim_end_matches('0') } else { &frac };
        if frac.is_empty() {
            format!("{}", s / unit)
        } else {
            format!("{}.{}", s / unit, frac)
        }
    }

    /// `ð² ≤ num / den`.
    pub fn sq_le(&self, num: u64, den: u64) -> bool {
        self.delta as u128 * self.delta as u128 * den as u128 <= num as u128 * self.order as u128
    }

    /// `ð² ≥ num / den`.
    pub fn sq_ge(&self, num: u64, den: u64) -> bool {
        self.delta as u128 * self.delta as u128 * den as u128 >= num as u128 * self.order as u128
    }

    /// `ð ≤ other`.
    pub fn le(&self, other: &Characteristic) -> bool {
        self.sq_le(other.delta * other.delta, other.order)
    }
}

/// Decimal with a trailing `...` when truncation dropped digits.
impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.decimal())
        } else {
            write!(f, "{}...", self.decimal())
        }
    }
}

/// Largest `k ≥ 0` with `k² · den ≤ num · N`, i.e. `⌊√(num/den · N)⌋`.
fn floor_scaled_sqrt(num: u64, den: u64, order: u64) -> u64 {
    isqrt(num as u128 * order as u128 / den as u128) as u64
}

// ---- bound reports -------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Rule {
    /// `k(k-1)+1 ≥ |G|`.
    Counting,
    /// `k(k-1)/2 ≥ n` for intervals.
    PairCount,
    /// `⌈√(4n)⌉ ≤ Δ[D_2n]`.
    DihedralSqrt,
    /// `4q+3 ≤ Δ[D_8n]` for `n = q²+q+1`.
    EightDup { q: u32 },
    /// `Δ ≤ ⌈(|G|+1)/2⌉`.
    Half,
    /// All of `[0, n]`.
    WholeInterval,
    Singer { q: u32 },
    /// `2q+2` for `D_2n`, `n = q²+q+1`.
    Dup { q: u32 },
    Transversal { m: u32 },
    /// `Δ[H]·Δ[G/H]` for the rotation subgroup of order `m`.
    Product { m: u32 },
    DihedralFromCyclic,
    IntervalTransfer { m: u32 },
    /// `q - 1 + Δ[C_{q-1}]` on `C_{q²-1}`.
    SingerMinus { q: u32 },
    /// `q - 1 + ⌊1.5√(q-1)⌋` on `C_{q²-1}`.
    SingerMinusFormula { q: u32 },
    /// `p - 3 + Δ[C_p] + Δ[C_{p-1}]` on `C_{p²-p}`.
    Ruzsa { p: u32 },
    /// `p - 3 + ⌊1.5(√p + √(p-1))⌋` on `C_{p²-p}`.
    RuzsaFormula { p: u32 },
    /// `ð[C_n] ≤ √(num/den)`, the cyclic characteristic bounds.
    CyclicCharacteristic { num: u32, den: u32 },
    /// `ð[D_2n] ≤ 48/√586`.
    DihedralMax,
    /// A stored search result.
    Search { certified: bool },
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Counting => write!(f, "counting k(k-1)+1 >= N"),
            Rule::PairCount => write!(f, "pair count k(k-1)/2 >= n"),
            Rule::DihedralSqrt => write!(f, "ceil(sqrt(4n))"),
            Rule::EightDup { q } => write!(f, "4q+3 for D_8(q^2+q+1), q={q}"),
            Rule::Half => write!(f, "ceil((N+1)/2)"),
            Rule::WholeInterval => write!(f, "all of [0,n]"),
            Rule::Singer { q } => write!(f, "singer q={q}"),
            Rule::Dup { q } => write!(f, "2q+2 for D_2(q^2+q+1), q={q}"),
            Rule::Transversal { m } => write!(f, "subgroup+transversal |H|={m}"),
            Rule::Product { m } => write!(f, "product over |H|={m}"),
            Rule::DihedralFromCyclic => write!(f, "2*Delta[C_n]"),
            Rule::IntervalTransfer { m } => write!(f, "Delta[{m}] interval transfer"),
            Rule::SingerMinus { q } => write!(f, "q-1+Delta[C_(q-1)], q={q}"),
            Rule::SingerMinusFormula { q } => write!(f, "q-1+1.5sqrt(q-1), q={q}"),
            Rule::Ruzsa { p } => write!(f, "p-3+Delta[C_p]+Delta[C_(p-1)], p={p}"),
            Rule::RuzsaFormula { p } => write!(f, "p-3+1.5(sqrt(p)+sqrt(p-1)), p={p}"),
            Rule::CyclicCharacteristic { num, den } => write!(f, "char <= sqrt({num}/{den})"),
            Rule::DihedralMax => write!(f, "char <= 48/sqrt(586)"),
            Rule::Search { certified: true } => write!(f, "search (certified)"),
            Rule::Search { certified: false } => write!(f, "search (witness)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u32,
    pub rule: Rule,
    pub witness: Option<CertifiedBasis>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub group: GroupSpec,
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    pub best_lower: u32,
    pub best_upper: u32,
    pub exact: Option<u32>,
}

impl BoundReport {
    /// The upper bound attaining `best_upper` that carries a witness, if any.
    pub fn best_witness(&self) -> Option<&CertifiedBasis> {
        self.upper
            .iter()
            .filter(|b| b.value == self.best_upper)
            .find_map(|b| b.witness.as_ref())
    }
}

/// A known value of `Δ` with a witness basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownDelta {
    pub delta: u32,
    pub witness: Basis,
    pub certified: bool,
}

/// Read-only lookup of previously computed `Δ` values.
pub trait DeltaSource {
    fn known(&self, spec: GroupSpec) -> Option<KnownDelta>;
}

/// A source that knows nothing.
pub struct NoCache;

impl DeltaSource for NoCache {
    fn known(&self, _: GroupSpec) -> Option<KnownDelta> {
        None
    }
}

impl DeltaSource for BTreeMap<GroupSpec, KnownDelta> {
    fn known(&self, spec: GroupSpec) -> Option<KnownDelta> {
        self.get(&spec).cloned()
    }
}

/// Dependencies of at most this many points are searched directly when the
/// source has no record.
pub const DIRECT_SEARCH_POINTS: usize = 33;

/// `Δ` of a dependency, from the source, a Singer set, or a small exact search.
fn resolve(src: &dyn DeltaSource, spec: GroupSpec) -> Option<KnownDelta> {
    if let Some(k) = src.known(spec).filter(|k| k.certified) {
        return Some(k);
    }
    if spec.kind == GroupKind::Cyclic {
        if let Some(q) = singer_q(spec.n as u64).filter(|&q| q <= MAX_CONSTRUCTION_Q as u64) {
            let s = singer_set(q as u32).ok()?;
            return Some(KnownDelta { delta: s.len() as u32, witness: s.into_basis(), certified: true });
        }
    }
    if spec.points() <= DIRECT_SEARCH_POINTS {
        return small_exact(spec);
    }
    src.known(spec)
}

/// Memoized exact search for dependencies of at most [`DIRECT_SEARCH_POINTS`] points.
fn small_exact(spec: GroupSpec) -> Option<KnownDelta> {
    static MEMO: OnceLock<Mutex<HashMap<GroupSpec, KnownDelta>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(k) = memo.lock().ok()?.get(&spec) {
        return Some(k.clone());
    }
    let out = min_difference_basis(spec, &SearchConfig::default()).ok()?;
    let k = KnownDelta { delta: out.delta, witness: out.witness, certified: out.certified };
    memo.lock().ok()?.insert(spec, k.clone());
    Some(k)
}

/// Upper bound on `Δ[D_2n]` from closed forms and direct lookups only, cheap
/// enough to evaluate for millions of `n`.
pub fn closed_form_dihedral_upper(n: u32, src: &dyn DeltaSource) -> (u32, Rule) {
    let nn = n as u64;
    let mut best = (nn + 1, Rule::Half);
    let mut offer = |v: u64, r: Rule| {
        if v < best.0 {
            best = (v, r);
        }
    };
    if let Some(q) = singer_q(nn) {
        offer(2 * q + 2, Rule::Dup { q: q as u32 });
    }
    if let Some(TheoremValue::Interval(_, hi)) = exact_by_theorem(GroupSpec::dihedral(n)) {
        offer(hi as u64, Rule::Product { m: n / 4 });
    }
    if let Some(k) = src.known(GroupSpec::cyclic(n)) {
        offer(2 * k.delta as u64, Rule::DihedralFromCyclic);
    }
    if let Some(k) = src.known(GroupSpec::dihedral(n)) {
        offer(k.delta as u64, Rule::Search { certified: k.certified });
    }
    let mut cyc = floor_scaled_sqrt(9, 4, nn);
    if n != 4 {
        cyc = cyc.min(floor_scaled_sqrt(2, 1, nn));
    }
    if n >= 9 {
        cyc = cyc.min(floor_scaled_sqrt(144, 73, nn));
        if n != 292 {
            cyc = cyc.min(floor_scaled_sqrt(576, 293, nn));
        }
    }
    offer(2 * cyc, Rule::DihedralFromCyclic);
    offer(floor_scaled_sqrt(2304, 586, 2 * nn), Rule::DihedralMax);
    (best.0 as u32, best.1)
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

struct Collector {
    lower: Vec<Bound>,
    upper: Vec<Bound>,
}

impl Collector {
    fn lower(&mut self, value: u64, rule: Rule) {
        self.lower.push(Bound { value: value as u32, rule, witness: None });
    }

    fn upper(&mut self, value: u64, rule: Rule) {
        self.upper.push(Bound { value: value as u32, rule, witness: None });
    }

    fn witness(&mut self, rule: Rule, w: crate::Result<CertifiedBasis>) {
        let w = w.expect("bound constructions verify by design");
        self.upper.push(Bound { value: w.len() as u32, rule, witness: Some(w) });
    }
}

fn cyclic_rules(n: u32, src: &dyn DeltaSource, c: &mut Collector) {
    let spec = GroupSpec::cyclic(n);
    let nn = n as u64;
    c.lower(lower_bound_generic(nn), Rule::Counting);

    let m = n / 2;
    if n >= 2 {
        let half = Basis::new(GroupSpec::interval(m), (0..=m).collect()).expect("in range");
        c.witness(Rule::Half, cyclic_basis_from_interval(&half, n));
    } else {
        c.upper(1, Rule::Half);
    }

    if let Some(q) = singer_q(nn).filter(|&q| q <= MAX_CONSTRUCTION_Q as u64) {
        c.witness(Rule::Singer { q: q as u32 }, singer_set(q as u32));
    }

    if let Some(&m) = divisors(n).iter().min_by_key(|&&m| m + n / m) {
        c.witness(Rule::Transversal { m }, subgroup_transversal_basis(spec, m));
    }

    let mut best: Option<(u32, CertifiedBasis)> = None;
    for a in divisors(n).into_iter().filter(|&a| a > 1 && a < n) {
        let b = n / a;
        let (Some(da), Some(db)) = (resolve(src, GroupSpec::cyclic(a)), resolve(src, GroupSpec::cyclic(b)))
        else {
            continue;
        };
        let inner: Vec<u32> = da.witness.elems().iter().map(|&x| x * b).collect();
        let w = product_basis(spec, &inner, db.witness.elems()).expect("product of bases");
        if best.as_ref().is_none_or(|(_, bw)| w.len() < bw.len()) {
            best = Some((a, w));
        }
    }
    if let Some((m, w)) = best {
        c.witness(Rule::Product { m }, Ok(w));
    }

    if n >= 2 {
        if let Some(di) = resolve(src, GroupSpec::interval(m)) {
            c.witness(Rule::IntervalTransfer { m }, cyclic_basis_from_interval(&di.witness, n));
        }
    }

    // C_{q²-1}
    let r = isqrt(nn as u128 + 1) as u64;
    if r * r == nn + 1 && prime_power(r).is_some() && r >= 2 {
        let q = r as u32;
        if let Some(d) = resolve(src, GroupSpec::cyclic(q - 1)) {
            c.upper((q - 1 + d.delta) as u64, Rule::SingerMinus { q });
        }
        c.upper((q - 1) as u64 + isqrt(9 * (q as u128 - 1)) as u64 / 2, Rule::SingerMinusFormula { q });
    }

    // C_{p²-p}
    let p = isqrt(nn as u128) as u64 + 1;
    if p * p - p == nn && is_prime(p) {
        let p32 = p as u32;
        if let (Some(dp), Some(dp1)) =
            (resolve(src, GroupSpec::cyclic(p32)), resolve(src, GroupSpec::cyclic(p32 - 1)))
        {
            c.upper(p + (dp.delta + dp1.delta) as u64 - 3, Rule::Ruzsa { p: p32 });
        }
        c.upper(p + ruzsa_floor(p) - 3, Rule::RuzsaFormula { p: p32 });
    }

    c.upper(floor_scaled_sqrt(9, 4, nn), Rule::CyclicCharacteristic { num: 9, den: 4 });
    if n != 4 {
        c.upper(floor_scaled_sqrt(2, 1, nn), Rule::CyclicCharacteristic { num: 2, den: 1 });
    }
    if n >= 9 {
        c.upper(floor_scaled_sqrt(144, 73, nn), Rule::CyclicCharacteristic { num: 144, den: 73 });
        if n != 292 {
            c.upper(floor_scaled_sqrt(576, 293, nn), Rule::CyclicCharacteristic { num: 576, den: 293 });
        }
    }
}

/// `⌊1.5(√p + √(p-1))⌋` exactly.
fn ruzsa_floor(p: u64) -> u64 {
    // k ≤ 1.5(√p+√(p-1))  ⟺  4k² - 9(2p-1) ≤ 18√(p²-p).
    let holds = |k: u64| {
        let l = 4 * (k as i128) * (k as i128) - 9 * (2 * p as i128 - 1);
        l < 0 || l * l <= 324 * ((p * p - p) as i128)
    };
    let mut k = 0;
    while holds(k + 1) {
        k += 1;
    }
    k
}

fn dihedral_rules(n: u32, src: &dyn DeltaSource, c: &mut Collector) {
    let spec = GroupSpec::dihedral(n);
    let nn = n as u64;
    c.lower(lower_bound_generic(2 * nn), Rule::Counting);
    c.lower(dihedral_lower_bound(nn), Rule::DihedralSqrt);

    c.witness(Rule::Half, subgroup_transversal_basis(spec, n));
    if let Some(&m) = divisors(n).iter().min_by_key(|&&m| m + 2 * n / m) {
        c.witness(Rule::Transversal { m }, subgroup_transversal_basis(spec, m));
    }

    if let Some(q) = singer_q(nn).filter(|&q| q <= MAX_CONSTRUCTION_Q as u64) {
        let s = singer_set(q as u32).expect("q is a prime power");
        c.witness(Rule::Dup { q: q as u32 }, dihedral_basis_from_cyclic(s.basis()));
    }

    if let Some(dc) = resolve(src, GroupSpec::cyclic(n)) {
        c.witness(Rule::DihedralFromCyclic, dihedral_basis_from_cyclic(&dc.witness));
    }

    // H = <r^b> of order a, G/H = D_2b.
    let mut best: Option<(u32, CertifiedBasis)> = None;
    for a in divisors(n).into_iter().filter(|&a| a > 1 && a < n) {
        let b = n / a;
        let (Some(da), Some(db)) =
            (resolve(src, GroupSpec::cyclic(a)), resolve(src, GroupSpec::dihedral(b)))
        else {
            continue;
        };
        let inner: Vec<u32> = da.witness.elems().iter().map(|&x| x * b).collect();
        let lifts: Vec<u32> =
            db.witness.elems().iter().map(|&x| if x < b { x } else { n + x - b }).collect();
        let w = product_basis(spec, &inner, &lifts).expect("product of bases");
        if best.as_ref().is_none_or(|(_, bw)| w.len() < bw.len()) {
            best = Some((a, w));
        }
    }
    if let Some((m, w)) = best {
        c.witness(Rule::Product { m }, Ok(w));
    }

    if let Some(TheoremValue::Interval(lo, _)) = exact_by_theorem(spec) {
        c.lower(lo as u64, Rule::EightDup { q: (lo - 3) / 4 });
    }

    c.upper(floor_scaled_sqrt(2304, 586, 2 * nn), Rule::DihedralMax);
}

/// Evaluates every applicable bound for `spec`.
///
/// Bounds that depend on `Δ` of another group use `src` (or a direct search
/// of at most [`DIRECT_SEARCH_POINTS`] points); unresolved ones are omitted.
pub fn bound_report(spec: GroupSpec, src: &dyn DeltaSource) -> BoundReport {
    let mut c = Collector { lower: Vec::new(), upper: Vec::new() };
    match spec.kind {
        GroupKind::Cyclic => cyclic_rules(spec.n, src, &mut c),
        GroupKind::Dihedral => dihedral_rules(spec.n, src, &mut c),
        GroupKind::Interval => {
            c.lower(interval_lower_bound(spec.n as u64), Rule::PairCount);
            c.upper(spec.n as u64 + 1, Rule::WholeInterval);
        }
    }
    let stored = src.known(spec);
    if let Some(k) = &stored {
        if k.certified {
            c.lower(k.delta as u64, Rule::Search { certified: true });
        }
        c.upper.push(Bound {
            value: k.delta,
            rule: Rule::Search { certified: k.certified },
            witness: CertifiedBasis::from_search(&crate::search::SearchOutcome {
                delta: k.delta,
                witness: k.witness.clone(),
                certified: k.certified,
                nodes_expanded: 0,
                wall_time: Default::default(),
            })
            .ok(),
        });
    }
    let best_lower = c.lower.iter().map(|b| b.value).max().unwrap_or(1);
    let best_upper = c.upper.iter().map(|b| b.value).min().unwrap_or(u32::MAX);
    let exact = if best_lower == best_upper {
        Some(best_lower)
    } else {
        stored.filter(|k| k.certified).map(|k| k.delta)
    };
    BoundReport { group: spec, lower: c.lower, upper: c.upper, best_lower, best_upper, exact }
}

// ---- prime powers and the gap inequality ---------------------------------

/// All prime powers `p^k ≤ m`, increasing.
pub fn prime_powers_up_to(m: u64) -> Vec<u64> {
    if m < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; m as usize + 1];
    let mut out = Vec::new();
    for p in 2..=m {
        if composite[p as usize] {
            continue;
        }
        let mut j = p * p;
        while j <= m {
            composite[j as usize] = true;
            j += p;
        }
        let mut q = p;
        loop {
            out.push(q);
            match q.checked_mul(p) {
                Some(next) if next <= m => q = next,
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapViolation {
    pub q: u64,
    pub next: u64,
    /// `11(next+1)²`.
    pub lhs: u128,
    /// `12q² + 14q + 16`.
    pub rhs: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub lo: u64,
    pub hi: u64,
    pub pairs_checked: usize,
    pub violators: Vec<GapViolation>,
}

/// Checks `11(q'+1)² ≤ 12q² + 14q + 16` for every prime power `q ∈ [lo, hi]`
/// and its successor `q'`. An empty or reversed range checks nothing.
pub fn verify_gap_inequality(lo: u64, hi: u64) -> GapReport {
    let mut report = GapReport { lo, hi, pairs_checked: 0, violators: Vec::new() };
    if lo > hi {
        return report;
    }
    // Bertrand: the successor of any q ≤ hi is below 2·hi + 2.
    let pps = prime_powers_up_to(2 * hi + 2);
    for w in pps.windows(2) {
        let (q, next) = (w[0], w[1]);
        if q < lo || q > hi {
            continue;
        }
        report.pairs_checked += 1;
        let lhs = 11 * (next as u128 + 1).pow(2);
        let rhs = 12 * (q as u128).pow(2) + 14 * q as u128 + 16;
        if lhs > rhs {
            report.violators.push(GapViolation { q, next, lhs, rhs });
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyticReport {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
    pub samples: usize,
    /// Least `rhs - lhs` over the grid, and where it occurs.
    pub min_slack: f64,
    pub argmin: f64,
    pub violations: Vec<f64>,
}

/// `(12x² + 14x + 16)/11 - (1 + x + x/(2 ln² x))²`, positive where
/// `1 + x + x/(2 ln² x) ≤ √((12x² + 14x + 16)/11)`.
pub fn analytic_slack(x: f64) -> f64 {
    let l = x.ln();
    let lhs = 1.0 + x + x / (2.0 * l * l);
    (12.0 * x * x + 14.0 * x + 16.0) / 11.0 - lhs * lhs
}

/// Evaluates [`analytic_slack`] on `lo, lo + step, …` up to `hi`.
pub fn check_analytic_inequality(lo: f64, hi: f64, step: f64) -> crate::Result<AnalyticReport> {
    // Negated comparisons also reject NaN.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(step > 0.0 && step <= 1.0) || !(lo > 1.0) || lo > hi {
        return Err(crate::Error::InvalidInput(format!(
            "grid [{lo}, {hi}] with step {step} needs 1 < lo ≤ hi and 0 < step ≤ 1"
        )));
    }
    let count = ((hi - lo) / step).floor() as usize + 1;
    let mut report = AnalyticReport {
        lo,
        hi,
        step,
        samples: count,
        min_slack: f64::INFINITY,
        argmin: lo,
        violations: Vec::new(),
    };
    for i in 0..count {
        let x = lo + i as f64 * step;
        let s = analytic_slack(x);
        if s < report.min_slack {
            report.min_slack = s;
            report.argmin = x;
        }
        if s < 0.0 {
            report.violations.push(x);
        }
    }
    Ok(report)
}
