//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to see
//! the report; the test fails if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::{golden, oracle};
use diffbase::bounds::{
    bound_report, check_analytic_inequality, dihedral_lower_bound, prime_powers_up_to,
    verify_gap_inequality, NoCache,
};
use diffbase::constructions::{is_planar, is_sidon};
use diffbase::tables::scan_bounds;
use diffbase::{
    bose_chowla_set, characteristic, dihedral_basis_from_cyclic, find_basis_of_size,
    is_difference_basis, min_difference_basis, min_interval_basis, singer_set,
    split_dihedral_basis, Element, GroupSpec, SearchConfig, SearchOutcome,
};

/// Every comparison against published values is exact.
const TOLERANCE: u32 = 0;
/// Wall-clock targets per criterion, checked on release builds only.
const TABLE_BUDGET: Duration = Duration::from_secs(600);
const GAP_BUDGET: Duration = Duration::from_secs(60);
/// Nodes spent looking below each published value in witness mode.
const PROBE_BUDGET: u64 = 20_000_000;

struct Report {
    failed: Vec<String>,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String, t: Instant) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("{verdict} {id}: {detail} [{:.1?}]", t.elapsed());
        if !ok {
            self.failed.push(id.to_string());
        }
    }
}

fn timed_ok(t: Instant, budget: Duration) -> bool {
    cfg!(debug_assertions) || t.elapsed() <= budget
}

fn certify(spec: GroupSpec) -> SearchOutcome {
    min_difference_basis(spec, &SearchConfig::for_spec(spec)).unwrap()
}

fn kind_name(spec: GroupSpec) -> &'static str {
    match spec.kind {
        diffbase::GroupKind::Cyclic => "cyclic",
        diffbase::GroupKind::Dihedral => "dihedral",
        diffbase::GroupKind::Interval => "interval",
    }
}

/// Certified values shared between criteria.
struct Certified {
    cyclic: BTreeMap<u32, SearchOutcome>,
    dihedral: BTreeMap<u32, SearchOutcome>,
}

fn dihedral_rows(r: &mut Report, cyc: &BTreeMap<u32, SearchOutcome>) -> BTreeMap<u32, SearchOutcome> {
    let mut out = BTreeMap::new();
    for (id, range) in [("1a table D_2n, 2n <= 48", 1..=24u32), ("1b table D_2n, 48 < 2n <= 80", 25..=40)] {
        let t = Instant::now();
        let mut bad = Vec::new();
        for n in range {
            let (order, lb, delta, two_c, chr) = golden::DIHEDRAL[n as usize - 1];
            assert_eq!(order, 2 * n);
            let s = certify(GroupSpec::dihedral(n));
            let got_lb = dihedral_lower_bound(n as u64) as u32;
            let got_two = 2 * cyc[&n].delta;
            let got_chr = characteristic(s.delta as u64, order as u64).to_string();
            let independent = oracle::is_basis("dihedral", n as usize, s.witness.elems());
            if !s.certified
                || s.delta.abs_diff(delta) > TOLERANCE
                || got_lb != lb
                || got_two != two_c
                || got_chr != chr
                || !independent
            {
                bad.push(format!(
                    "D_{order}: got ({got_lb},{},{got_two},{got_chr}) published ({lb},{delta},{two_c},{chr}) witness {} independently verified {independent}",
                    s.delta, s.witness
                ));
            }
            out.insert(n, s);
        }
        let ok = bad.is_empty() && timed_ok(t, TABLE_BUDGET);
        let detail = if bad.is_empty() { "all rows match".into() } else { bad.join("; ") };
        r.line(id, ok, detail, t);
    }
    out
}

fn cyclic_rows(r: &mut Report) -> BTreeMap<u32, SearchOutcome> {
    let t = Instant::now();
    let mut out = BTreeMap::new();
    let mut bad = Vec::new();
    for n in 1..=64u32 {
        let (gn, delta, chr) = golden::CYCLIC[n as usize - 1];
        assert_eq!(gn, n);
        let s = certify(GroupSpec::cyclic(n));
        let got_chr = characteristic(s.delta as u64, n as u64).to_string();
        let independent = oracle::is_basis("cyclic", n as usize, s.witness.elems());
        if !s.certified || s.delta.abs_diff(delta) > TOLERANCE || got_chr != chr || !independent {
            bad.push(format!("C_{n}: got {} {got_chr}, published {delta} {chr}", s.delta));
        }
        out.insert(n, s);
    }
    let ok = bad.is_empty() && timed_ok(t, TABLE_BUDGET);
    r.line("2a table C_n, n <= 64 certified", ok, if ok { "all rows match".into() } else { bad.join("; ") }, t);

    let t = Instant::now();
    let mut bad = Vec::new();
    let mut refuted = 0;
    for n in 65..=100u32 {
        let (_, delta, chr) = golden::CYCLIC[n as usize - 1];
        let spec = GroupSpec::cyclic(n);
        let cfg = SearchConfig { witness_only: true, ..SearchConfig::for_spec(spec) };
        let w = find_basis_of_size(spec, delta as usize, &cfg).unwrap();
        let lower = bound_report(spec, &NoCache).best_lower;
        let got_chr = characteristic(delta as u64, n as u64).to_string();
        match w {
            Some(b) if oracle::is_basis("cyclic", n as usize, b.elems()) && lower <= delta && got_chr == chr => {}
            other => bad.push(format!("C_{n}: witness {other:?} lower {lower} char {got_chr}")),
        }
        // A basis one smaller than published refutes the published value.
        let probe = SearchConfig { node_budget: Some(PROBE_BUDGET), ..cfg };
        match find_basis_of_size(spec, delta as usize - 1, &probe) {
            Ok(Some(b)) if oracle::is_basis("cyclic", n as usize, b.elems()) => {
                bad.push(format!("C_{n}: published {delta} but {b} has {} elements", b.len()))
            }
            Ok(None) => refuted += 1,
            _ => {}
        }
    }
    println!("     size delta-1 refuted within budget for {refuted} of 36 rows");
    let ok = bad.is_empty();
    r.line(
        "2b table C_n, 64 < n <= 100 witness mode",
        ok,
        if ok { "witness at published size, lower bound consistent".into() } else { bad.join("; ") },
        t,
    );
    out
}

fn singer_pipeline(r: &mut Report) {
    let t = Instant::now();
    let mut bad = Vec::new();
    for q in 2..=5u32 {
        let v = q * q + q + 1;
        let s = singer_set(q).unwrap();
        let d = dihedral_basis_from_cyclic(s.basis()).unwrap();
        let searched = certify(GroupSpec::dihedral(v));
        let ceil = dihedral_lower_bound(v as u64) as u32;
        let lifted_ok = oracle::is_basis("dihedral", v as usize, d.basis().elems());
        if !(lifted_ok
            && d.len() as u32 == 2 * q + 2
            && ceil == 2 * q + 2
            && searched.certified
            && searched.delta == 2 * q + 2)
        {
            bad.push(format!("q={q}: lifted {} ceil {ceil} searched {}", d.len(), searched.delta));
        }
    }
    let ok = bad.is_empty();
    r.line(
        "3 Singer set lifted to D_2(q^2+q+1), q=2..5",
        ok,
        if ok { "size 2q+2 = ceil(2 sqrt n) = searched value".into() } else { bad.join("; ") },
        t,
    );
}

fn d56(r: &mut Report, dih: &BTreeMap<u32, SearchOutcome>) {
    let t = Instant::now();
    let s = &dih[&28];
    let q = 2;
    let ok = s.certified && s.delta == 11 && s.delta == 4 * q + 3;
    r.line("4 D_56 = 11 = 4q+3 at q=2", ok, format!("searched {} certified {}", s.delta, s.certified), t);
}

fn constructions(r: &mut Report) {
    let t = Instant::now();
    let mut bad = Vec::new();
    for q in prime_powers_up_to(32) {
        let q = q as u32;
        let v = q * q + q + 1;
        let s = singer_set(q).unwrap();
        // Independent count: each nonzero residue occurs exactly once.
        let mut hits = vec![0u32; v as usize];
        for &a in s.basis().elems() {
            for &b in s.basis().elems() {
                if a != b {
                    hits[((a + v - b) % v) as usize] += 1;
                }
            }
        }
        let perfect = hits[1..].iter().all(|&h| h == 1);
        if !(perfect && s.len() as u32 == q + 1 && is_planar(s.basis().elems(), v)) {
            bad.push(format!("singer q={q}"));
        }
    }
    for q in prime_powers_up_to(64) {
        let q = q as u32;
        let s = bose_chowla_set(q).unwrap();
        let m = q * q - 1;
        let mut diffs: Vec<u32> = Vec::new();
        for &a in &s.elems {
            for &b in &s.elems {
                if a != b {
                    diffs.push((a + m - b) % m);
                }
            }
        }
        let n = diffs.len();
        diffs.sort_unstable();
        diffs.dedup();
        if !(s.elems.len() as u32 == q && diffs.len() == n && is_sidon(&s.elems, m)) {
            bad.push(format!("bose q={q}"));
        }
    }
    let ok = bad.is_empty();
    r.line(
        "5 Singer planarity q <= 32, Bose-Chowla Sidon q <= 64",
        ok,
        if ok { "all perfect / all Sidon".into() } else { bad.join("; ") },
        t,
    );
}

fn gaps(r: &mut Report) {
    let t = Instant::now();
    let g = verify_gap_inequality(331, 3275);
    let a = check_analytic_inequality(43.0, 1e6, 1.0).unwrap();
    let ok = g.violators.is_empty() && a.violations.is_empty() && timed_ok(t, GAP_BUDGET);
    r.line(
        "6 prime-power gap inequality",
        ok,
        format!(
            "[331,3275]: {} pairs, {} violators; [43,1e6]: {} samples, {} violations",
            g.pairs_checked,
            g.violators.len(),
            a.samples,
            a.violations.len()
        ),
        t,
    );
}

fn properties(r: &mut Report, c: &Certified) {
    let t = Instant::now();
    let mut bad = Vec::new();

    for n in 1..=16usize {
        let s = &c.cyclic[&(n as u32)];
        if s.delta as usize != oracle::group_delta(&oracle::cyclic_table(n)) {
            bad.push(format!("oracle C_{n}"));
        }
    }
    for n in 1..=12usize {
        let s = &c.dihedral[&(n as u32)];
        if s.delta as usize != oracle::group_delta(&oracle::dihedral_table(n)) {
            bad.push(format!("oracle D_{}", 2 * n));
        }
        let i = min_interval_basis(n as u32, &SearchConfig::default()).unwrap();
        if i.delta as usize != oracle::interval_delta(n) {
            bad.push(format!("oracle interval {n}"));
        }
    }

    let witnesses = c.cyclic.values().chain(c.dihedral.values());
    for s in witnesses {
        let spec = s.witness.group();
        for g in 0..spec.order() {
            let moved = s.witness.translate(Element(g as u32)).unwrap();
            if !is_difference_basis(&moved) {
                bad.push(format!("translate {spec} by {g}"));
                break;
            }
        }
        if spec.kind == diffbase::GroupKind::Dihedral {
            let n = spec.n;
            let (a, b) = split_dihedral_basis(&s.witness).unwrap();
            let mut seen = vec![false; n as usize];
            for &x in &a {
                for &y in &b {
                    seen[((y + n - x) % n) as usize] = true;
                }
            }
            if seen.iter().any(|&x| !x) {
                bad.push(format!("split {spec}"));
            }
        }
        if !oracle::is_basis(kind_name(spec), spec.n as usize, s.witness.elems()) {
            bad.push(format!("witness {spec}"));
        }
    }

    for (&n, s) in &c.dihedral {
        let lb = dihedral_lower_bound(n as u64) as u32;
        let two = 2 * c.cyclic[&n].delta;
        if !(lb <= s.delta && s.delta <= two) {
            bad.push(format!("sandwich D_{}", 2 * n));
        }
        let ch = characteristic(s.delta as u64, 2 * n as u64);
        if !(ch.sq_ge(2, 1) && ch.sq_le(48 * 48, 586)) {
            bad.push(format!("sqrt2..48/sqrt586 D_{}", 2 * n));
        }
    }

    let c4 = characteristic(3, 4);
    for (&n, s) in &c.cyclic {
        let ch = characteristic(s.delta as u64, n as u64);
        if !ch.le(&c4) {
            bad.push(format!("3/2 max C_{n}"));
        }
        if n != 4 && !ch.sq_le(2, 1) {
            bad.push(format!("sqrt2 C_{n}"));
        }
        if n >= 9 && !(ch.sq_le(144, 73) && ch.sq_le(576, 293)) {
            bad.push(format!("12/sqrt73 C_{n}"));
        }
    }

    let ok = bad.is_empty();
    r.line(
        "7 property suite",
        ok,
        if ok {
            format!(
                "oracle, translation, split, sandwich, characteristic bounds over {} certified values",
                c.cyclic.len() + c.dihedral.len()
            )
        } else {
            bad.join("; ")
        },
        t,
    );
}

fn declared(r: &mut Report) {
    let t = Instant::now();
    let scan = scan_bounds(2000, &NoCache);
    let ran = scan.argmax.is_some();
    r.line(
        "8 declared out of desk scale",
        ran,
        format!(
            "not reproduced: the n >= 2*10^15 cyclic regime, Delta[6166] = 128, and the scan up to n = 1212464. \
             Substitute bounds-only scan to 2n = 2000 leaves {} n above 8/sqrt(22)",
            scan.unresolved.len()
        ),
        t,
    );
}

#[test]
fn acceptance() {
    let mut r = Report { failed: Vec::new() };
    let cyclic = cyclic_rows(&mut r);
    let dihedral = dihedral_rows(&mut r, &cyclic);
    singer_pipeline(&mut r);
    d56(&mut r, &dihedral);
    constructions(&mut r);
    gaps(&mut r);
    properties(&mut r, &Certified { cyclic, dihedral });
    declared(&mut r);
    assert!(r.failed.is_empty(), "failed criteria: {:?}", r.failed);
}

/// Full certification of the cyclic table above 64. Hours on a desktop.
#[test]
#[ignore]
fn cyclic_table_certified_long() {
    for n in 65..=100u32 {
        let (_, delta, _) = golden::CYCLIC[n as usize - 1];
        let s = certify(GroupSpec::cyclic(n));
        println!("C_{n} delta={} certified={} {:.1?}", s.delta, s.certified, s.wall_time);
        assert!(s.certified);
        assert_eq!(s.delta, delta, "C_{n}");
    }
}
