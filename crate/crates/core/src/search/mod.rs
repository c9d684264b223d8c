//! Exact difference sizes by branch-and-bound.
//!
//! [`find_basis_of_size`] decides whether a basis of a given size exists.
//! [`min_difference_basis`] deepens from the counting lower bound until the
//! first size that has a basis; the answer is certified when every smaller
//! size was refuted exhaustively.

mod control;
mod dihedral;
mod generic;
mod mask;

use std::time::{Duration, Instant};

use crate::bounds::{interval_lower_bound, lower_bound_generic};
use crate::error::{Error, Result};
use crate::group::{Basis, GroupKind, GroupSpec};

use control::Control;

/// Largest group order (or interval length) the exact search accepts.
pub const MAX_SEARCH_ORDER: usize = 256;

/// Which search engine handles a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Rotation/reflection engine for dihedral groups, ordered search otherwise.
    #[default]
    Auto,
    /// Ordered branch-and-bound for every group.
    Ordered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum nodes per size attempt. `None` means unlimited.
    pub node_budget: Option<u64>,
    /// Pin index 1 as the second basis element. Every basis has two elements
    /// whose difference is the element 1 (for cyclic groups: a unit), and a
    /// translation moves them to `{0, 1}`.
    pub use_unit_symmetry: bool,
    /// Worker threads.
    pub parallel_width: usize,
    /// Accept the first basis any worker finds. The witness may then depend
    /// on scheduling; the size never does.
    pub witness_only: bool,
    pub engine: Engine,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            use_unit_symmetry: false,
            parallel_width: 1,
            witness_only: false,
            engine: Engine::Auto,
        }
    }
}

impl SearchConfig {
    /// Defaults for a specific group: unit symmetry above order 60 and one
    /// worker per available core.
    pub fn for_spec(spec: GroupSpec) -> Self {
        SearchConfig {
            use_unit_symmetry: spec.order() > 60,
            parallel_width: std::thread::available_parallelism().map_or(1, |n| n.get()),
            ..Default::default()
        }
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget == Some(0) {
            return Err(Error::InvalidInput("node budget must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub delta: u32,
    pub witness: Basis,
    /// Every size below `delta` was refuted exhaustively.
    pub certified: bool,
    pub nodes_expanded: u64,
    pub wall_time: Duration,
}

/// Upper bound on the non-identity ordered differences gained by growing a
/// set from `m` to `k` elements.
pub fn max_additional_coverage(m: u64, k: u64) -> u64 {
    assert!(m <= k, "current size exceeds target");
    k * (k - 1) - m * m.saturating_sub(1)
}

fn check_order(spec: GroupSpec) -> Result<()> {
    if spec.points() > MAX_SEARCH_ORDER + 1 {
        return Err(Error::Resource(format!(
            "{spec} exceeds the exact-search cap of order {MAX_SEARCH_ORDER}"
        )));
    }
    Ok(())
}

/// Pads `elems` with the smallest unused points up to `k` elements.
fn pad(spec: GroupSpec, mut elems: Vec<u32>, k: usize) -> Basis {
    let mut p = 0u32;
    while elems.len() < k {
        if !elems.contains(&p) {
            elems.push(p);
        }
        p += 1;
    }
    Basis::new(spec, elems).expect("search witnesses are in range")
}

fn solve(spec: GroupSpec, k: usize, cfg: &SearchConfig, ctl: &Control) -> Result<Option<Vec<u32>>> {
    let width = cfg.parallel_width.max(1);
    match (spec.kind, cfg.engine) {
        (GroupKind::Dihedral, Engine::Auto) if spec.n <= dihedral::MAX_N => {
            dihedral::solve(spec.n, k, ctl, width)
        }
        _ => {
            let p = generic::Problem::new(spec, cfg.use_unit_symmetry);
            generic::solve(&p, k, ctl, width)
        }
    }
}

/// A difference basis of exactly `k` elements, or `None` when none exists.
///
/// Running out of budget is an error: it says nothing about existence.
pub fn find_basis_of_size(spec: GroupSpec, k: usize, cfg: &SearchConfig) -> Result<Option<Basis>> {
    cfg.validate()?;
    check_order(spec)?;
    if k == 0 || k > spec.points() {
        return Err(Error::InvalidInput(format!("size {k} out of range for {spec}")));
    }
    let ctl = Control::new(cfg.node_budget, cfg.witness_only);
    Ok(solve(spec, k, cfg, &ctl)?.map(|w| pad(spec, w, k)))
}

fn proven_lower(spec: GroupSpec) -> usize {
    match spec.kind {
        GroupKind::Interval => interval_lower_bound(spec.n as u64) as usize,
        _ => lower_bound_generic(spec.order() as u64) as usize,
    }
}

/// Minimal difference basis by iterative deepening.
///
/// A size attempt that exhausts the budget is skipped; the search then goes
/// on to larger sizes and the outcome is reported uncertified. If every
/// attempt runs dry the greedy basis is returned.
pub fn min_difference_basis(spec: GroupSpec, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    check_order(spec)?;
    let start = Instant::now();
    let greedy = greedy_basis(spec);
    let mut certified = true;
    let mut nodes = 0u64;
    for k in proven_lower(spec)..greedy.len() {
        let ctl = Control::new(cfg.node_budget, cfg.witness_only);
        let res = solve(spec, k, cfg, &ctl);
        nodes += ctl.nodes();
        match res {
            Ok(Some(w)) => {
                return Ok(SearchOutcome {
                    delta: k as u32,
                    witness: pad(spec, w, k),
                    certified,
                    nodes_expanded: nodes,
                    wall_time: start.elapsed(),
                })
            }
            Ok(None) => {}
            Err(Error::BudgetExhausted { .. }) => certified = false,
            Err(e) => return Err(e),
        }
    }
    Ok(SearchOutcome {
        delta: greedy.len() as u32,
        witness: greedy,
        certified,
        nodes_expanded: nodes,
        wall_time: start.elapsed(),
    })
}

/// Minimal `B ⊂ [0, n]` whose positive differences cover `[1, n]`.
pub fn min_interval_basis(n: u32, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let spec = GroupSpec::new(GroupKind::Interval, n)?;
    min_difference_basis(spec, cfg)
}

/// Greedy cover: repeatedly add the lowest point with the largest gain.
pub fn greedy_basis(spec: GroupSpec) -> Basis {
    let points = spec.points() as u32;
    let mut chosen: Vec<u32> = match spec.kind {
        GroupKind::Interval => vec![0, spec.n],
        _ => vec![0],
    };
    let mut covered = vec![false; spec.order()];
    let mark = |a: u32, b: u32, covered: &mut Vec<bool>| -> usize {
        let mut fresh = 0;
        for (x, y) in [(a, b), (b, a)] {
            if let Some(bit) = spec.pair_bit(x, y) {
                if !covered[bit as usize] {
                    covered[bit as usize] = true;
                    fresh += 1;
                }
            }
        }
        fresh
    };
    let mut count = 0;
    for i in 0..chosen.len() {
        for j in 0..=i {
            count += mark(chosen[i], chosen[j], &mut covered);
        }
    }
    while count < spec.order() {
        let mut best = (0usize, u32::MAX);
        for p in 0..points {
            if chosen.contains(&p) {
                continue;
            }
            let mut fresh = std::collections::BTreeSet::new();
            for &c in &chosen {
                for (x, y) in [(p, c), (c, p)] {
                    if let Some(bit) = spec.pair_bit(x, y) {
                        if !covered[bit as usize] {
                            fresh.insert(bit);
                        }
                    }
                }
            }
            if fresh.len() > best.0 {
                best = (fresh.len(), p);
            }
        }
        let p = best.1;
        for &c in &chosen {
            count += mark(p, c, &mut covered);
        }
        chosen.push(p);
    }
    Basis::new(spec, chosen).expect("greedy points are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_difference_basis;

    fn exact(spec: GroupSpec) -> SearchOutcome {
        let out = min_difference_basis(spec, &SearchConfig::default()).unwrap();
        assert!(out.certified);
        assert!(is_difference_basis(&out.witness));
        assert_eq!(out.witness.len(), out.delta as usize);
        out
    }

    #[test]
    fn coverage_capacity() {
        assert_eq!(max_additional_coverage(0, 5), 20);
        assert_eq!(max_additional_coverage(3, 3), 0);
        assert_eq!(max_additional_coverage(2, 4), 10);
    }

    #[test]
    fn decision_examples() {
        let cfg = SearchConfig::default();
        let w = find_basis_of_size(GroupSpec::cyclic(7), 3, &cfg).unwrap().unwrap();
        assert!(is_difference_basis(&w));
        assert_eq!(w.len(), 3);
        assert!(find_basis_of_size(GroupSpec::cyclic(7), 2, &cfg).unwrap().is_none());
        assert!(find_basis_of_size(GroupSpec::dihedral(11), 7, &cfg).unwrap().is_none());
        let w = find_basis_of_size(GroupSpec::dihedral(11), 8, &cfg).unwrap().unwrap();
        assert!(is_difference_basis(&w));
        assert_eq!(w.len(), 8);
        assert!(find_basis_of_size(GroupSpec::cyclic(7), 0, &cfg).is_err());
    }

    #[test]
    fn minimum_examples() {
        assert_eq!(exact(GroupSpec::cyclic(12)).delta, 4);
        assert_eq!(exact(GroupSpec::dihedral(16)).delta, 9);
        let c1 = exact(GroupSpec::cyclic(1));
        assert_eq!((c1.delta, c1.witness.elems()), (1, &[0u32][..]));
        assert_eq!(exact(GroupSpec::dihedral(1)).delta, 2);
    }

    #[test]
    fn interval_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(min_interval_basis(6, &cfg).unwrap().delta, 4);
        assert_eq!(min_interval_basis(3, &cfg).unwrap().delta, 3);
        let one = min_interval_basis(1, &cfg).unwrap();
        assert_eq!((one.delta, one.witness.elems()), (2, &[0u32, 1][..]));
    }

    #[test]
    fn budget_is_an_error() {
        let cfg = SearchConfig { node_budget: Some(1), ..Default::default() };
        let err = find_basis_of_size(GroupSpec::cyclic(40), 7, &cfg).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted { .. }));
        let out = min_difference_basis(GroupSpec::cyclic(40), &cfg).unwrap();
        assert!(!out.certified);
        assert!(is_difference_basis(&out.witness));
        assert!(SearchConfig { node_budget: Some(0), ..Default::default() }.validate().is_err());
    }

    #[test]
    fn greedy_is_a_basis() {
        for spec in [GroupSpec::cyclic(30), GroupSpec::dihedral(9), GroupSpec::interval(20)] {
            assert!(is_difference_basis(&greedy_basis(spec)));
        }
    }

    #[test]
    fn engines_agree_on_small_dihedral() {
        for n in 1..=12 {
            let spec = GroupSpec::dihedral(n);
            let a = min_difference_basis(spec, &SearchConfig::default()).unwrap();
            let cfg = SearchConfig { engine: Engine::Ordered, ..Default::default() };
            let b = min_difference_basis(spec, &cfg).unwrap();
            assert_eq!(a.delta, b.delta, "{spec}");
        }
    }
}
