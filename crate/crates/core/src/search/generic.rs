//! Ordered branch-and-bound over the points of any group or interval.
//!
//! Points are added in increasing index order after a fixed prefix (the
//! identity, and optionally index 1 or the interval endpoint). A node with
//! `m` points and `r = k - m` still to place is pruned when the uncovered
//! count exceeds what `r` more points could possibly add, using either the
//! plain pair count or the sharper sum of the `r` best per-candidate gains.

use super::control::{Control, Meter, TaskResult};
use super::mask::Mask;
use crate::group::{GroupKind, GroupSpec};

const NONE: u16 = u16::MAX;
/// Depths at which children are visited by descending gain instead of index.
const ORDERED_DEPTH: usize = 2;

pub(crate) struct Problem {
    pub universe: usize,
    /// Upper bound on new coverage bits per unordered pair of new points.
    pub pair_yield: usize,
    pub forced: Vec<u32>,
    pub free: Vec<u32>,
    points: usize,
    pairs: Vec<[u16; 2]>,
    group: bool,
}

impl Problem {
    pub fn new(spec: GroupSpec, pin_second: bool) -> Self {
        let points = spec.points();
        let mut pairs = vec![[NONE; 2]; points * points];
        for a in 0..points {
            for b in 0..points {
                let ab = spec.pair_bit(a as u32, b as u32).map_or(NONE, |x| x as u16);
                let ba = spec.pair_bit(b as u32, a as u32).map_or(NONE, |x| x as u16);
                pairs[a * points + b] = [ab, ba];
            }
        }
        let forced: Vec<u32> = match spec.kind {
            // [1, n] needs the difference n, which only the pair (0, n) supplies.
            GroupKind::Interval => vec![0, spec.n],
            _ if pin_second && points > 1 => vec![0, 1],
            _ => vec![0],
        };
        let free = (0..points as u32).filter(|p| !forced.contains(p)).collect();
        Problem {
            universe: spec.order(),
            pair_yield: if spec.is_group() { 2 } else { 1 },
            forced,
            free,
            points,
            pairs,
            group: spec.is_group(),
        }
    }

    #[inline]
    fn pair<const W: usize>(&self, a: u32, b: u32) -> Mask<W> {
        let mut m = Mask::zero();
        for bit in self.pairs[a as usize * self.points + b as usize] {
            if bit != NONE {
                m.set(bit as usize);
            }
        }
        m
    }

    /// New coverage obtainable by adding `r` mutually new points.
    fn pair_capacity(&self, r: usize) -> usize {
        self.pair_yield * r * r.saturating_sub(1) / 2
    }
}

struct Engine<'p, 'm, 'c, const W: usize> {
    p: &'p Problem,
    k: usize,
    /// `dsets[d * F + i]`: coverage of free point `i` against the points chosen at depth `d`.
    dsets: Vec<Mask<W>>,
    chosen: Vec<usize>,
    gains: Vec<u32>,
    meter: &'m mut Meter<'c>,
}

enum Step {
    Found,
    Refuted,
    Stop,
}

impl<const W: usize> Engine<'_, '_, '_, W> {
    fn free_len(&self) -> usize {
        self.p.free.len()
    }

    fn dfs(&mut self, depth: usize, start: usize, covered: Mask<W>) -> Step {
        if !self.meter.tick() {
            return Step::Stop;
        }
        let p = self.p;
        let f = self.free_len();
        let m = p.forced.len() + depth;
        let uncovered = p.universe - covered.count() as usize;
        if uncovered == 0 {
            return Step::Found;
        }
        if m >= self.k {
            return Step::Refuted;
        }
        let r = self.k - m;
        if uncovered > p.pair_yield * m * r + p.pair_capacity(r) {
            return Step::Refuted;
        }
        if f - start < r {
            return Step::Refuted;
        }

        let base = depth * f;
        let mut hist = [0u32; 130];
        let mut max_gain = 0usize;
        for i in start..f {
            let g = self.dsets[base + i].count_without(&covered) as usize;
            self.gains[base + i] = g as u32;
            hist[g.min(129)] += 1;
            max_gain = max_gain.max(g);
        }
        let mut best = 0usize;
        let mut need = r;
        for g in (0..=max_gain.min(129)).rev() {
            if need == 0 {
                break;
            }
            let take = (hist[g] as usize).min(need);
            best += take * g;
            need -= take;
        }
        if uncovered > best + p.pair_capacity(r) {
            return Step::Refuted;
        }

        let last = f - r;
        if depth < ORDERED_DEPTH {
            let mut order: Vec<usize> = (start..=last).collect();
            order.sort_by_key(|&i| std::cmp::Reverse(self.gains[base + i]));
            for j in order {
                match self.child(depth, j, covered) {
                    Step::Refuted => {}
                    other => return other,
                }
            }
        } else {
            for j in start..=last {
                match self.child(depth, j, covered) {
                    Step::Refuted => {}
                    other => return other,
                }
            }
        }
        Step::Refuted
    }

    fn child(&mut self, depth: usize, j: usize, covered: Mask<W>) -> Step {
        let p = self.p;
        let f = self.free_len();
        let base = depth * f;
        let next = base + f;
        let pj = p.free[j];
        for i in j + 1..f {
            self.dsets[next + i] = self.dsets[base + i] | p.pair::<W>(p.free[i], pj);
        }
        self.chosen.push(j);
        let step = self.dfs(depth + 1, j + 1, covered | self.dsets[base + j]);
        if let Step::Refuted = step {
            self.chosen.pop();
        }
        step
    }

    /// Rebuilds the search state for a prefix of chosen free indices.
    fn seed(&mut self, prefix: &[usize]) -> Mask<W> {
        let p = self.p;
        let f = self.free_len();
        let mut covered = Mask::<W>::zero();
        if p.group {
            covered.set(0);
        }
        let mut present: Vec<u32> = p.forced.clone();
        present.extend(prefix.iter().map(|&i| p.free[i]));
        for (x, &a) in present.iter().enumerate() {
            for &b in &present[..x] {
                covered |= p.pair::<W>(a, b);
            }
        }
        let depth = prefix.len();
        let start = prefix.last().map_or(0, |&j| j + 1);
        for i in start..f {
            let mut d = Mask::zero();
            for &a in &present {
                d |= p.pair::<W>(p.free[i], a);
            }
            self.dsets[depth * f + i] = d;
        }
        self.chosen = prefix.to_vec();
        covered
    }

    fn witness(&self) -> Vec<u32> {
        let p = self.p;
        let mut w: Vec<u32> = p.forced.clone();
        w.extend(self.chosen.iter().map(|&i| p.free[i]));
        w
    }
}

fn new_engine<'p, 'm, 'c, const W: usize>(
    p: &'p Problem,
    k: usize,
    meter: &'m mut Meter<'c>,
) -> Engine<'p, 'm, 'c, W> {
    let f = p.free.len();
    let depths = k + 2;
    Engine {
        p,
        k,
        dsets: vec![Mask::zero(); depths * f.max(1)],
        chosen: Vec::new(),
        gains: vec![0; depths * f.max(1)],
        meter,
    }
}

/// Task prefixes: the first one or two free choices, in the order the
/// sequential search would visit them.
fn prefixes<const W: usize>(p: &Problem, k: usize, ctl: &Control) -> Vec<Vec<usize>> {
    let r = k.saturating_sub(p.forced.len());
    let mut meter = ctl.meter(0);
    let mut eng = new_engine::<W>(p, k, &mut meter);
    let covered = eng.seed(&[]);
    let depth = r.min(2);
    let mut out = Vec::new();
    if depth == 0 {
        out.push(Vec::new());
        return out;
    }
    let order0 = child_order(&mut eng, 0, 0, covered, r);
    for j in order0 {
        if depth == 1 {
            out.push(vec![j]);
            continue;
        }
        let c1 = eng.seed(&[j]);
        let next = child_order(&mut eng, 1, j + 1, c1, r - 1);
        out.extend(next.into_iter().map(|i| vec![j, i]));
    }
    out
}

fn child_order<const W: usize>(
    eng: &mut Engine<'_, '_, '_, W>,
    depth: usize,
    start: usize,
    covered: Mask<W>,
    r: usize,
) -> Vec<usize> {
    let f = eng.free_len();
    if r == 0 || f < start + r {
        return Vec::new();
    }
    let base = depth * f;
    let mut order: Vec<usize> = (start..=f - r).collect();
    if depth < ORDERED_DEPTH {
        for &i in &order {
            eng.gains[base + i] = eng.dsets[base + i].count_without(&covered);
        }
        order.sort_by_key(|&i| std::cmp::Reverse(eng.gains[base + i]));
    }
    order
}

fn solve_w<const W: usize>(
    p: &Problem,
    k: usize,
    ctl: &Control,
    width: usize,
) -> crate::Result<Option<Vec<u32>>> {
    if k < p.forced.len() {
        // A single point covers only the identity.
        return Ok((p.universe <= 1 && p.group && k >= 1).then(|| vec![0]));
    }
    let tasks = prefixes::<W>(p, k, ctl);
    if tasks.is_empty() {
        // No room for any free point: only the forced prefix itself can work.
        let mut meter = ctl.meter(0);
        let mut eng = new_engine::<W>(p, k, &mut meter);
        let covered = eng.seed(&[]);
        return Ok((covered.count() as usize == p.universe).then(|| eng.witness()));
    }
    ctl.run(&tasks, width, |prefix, meter| {
        let mut eng = new_engine::<W>(p, k, meter);
        let covered = eng.seed(prefix);
        let start = prefix.last().map_or(0, |&j| j + 1);
        match eng.dfs(prefix.len(), start, covered) {
            Step::Found => TaskResult::Found(eng.witness()),
            Step::Refuted => TaskResult::Refuted,
            Step::Stop => TaskResult::Aborted,
        }
    })
}

/// Finds a set of at most `k` points covering the universe (the caller pads
/// it to exactly `k`).
pub(crate) fn solve(
    p: &Problem,
    k: usize,
    ctl: &Control,
    width: usize,
) -> crate::Result<Option<Vec<u32>>> {
    match p.universe.max(p.points) {
        0..=64 => solve_w::<1>(p, k, ctl, width),
        65..=128 => solve_w::<2>(p, k, ctl, width),
        _ => solve_w::<4>(p, k, ctl, width),
    }
}
