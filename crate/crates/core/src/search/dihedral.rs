//! Dihedral search on the rotation/reflection decomposition.
//!
//! Write a basis of `D_2n` as rotations `r^a (a ∈ A)` plus reflections
//! `s·r^b (b ∈ R)`. Rotations are covered by `(A - A) ∪ (R - R)` and
//! reflections by `R - A`, both inside `Z_n`. Translating `A` and `R`
//! independently (left and right multiplication by rotations), scaling both by
//! a unit (an automorphism) and exchanging them (right multiplication by `s`)
//! all preserve coverage, so the search may assume `|A| ≥ |R|`, `0 ∈ A`, and
//! that `R` is the lexicographically least of its images `u·(R - b)`.
//!
//! For each such `R`, the set `A` is grown by branching on the uncovered
//! reflection with the fewest remaining candidates.

use super::control::{Control, Meter, TaskResult};

pub(crate) const MAX_N: u32 = 128;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn units(n: u32) -> Vec<u32> {
    (0..n).filter(|&u| gcd(u, n) == 1).collect()
}

#[inline]
fn bit(x: u32) -> u128 {
    1u128 << x
}

fn full(n: u32) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        bit(n) - 1
    }
}

/// Feasible `(|A|, |R|)` splits of `k`, most balanced first.
pub(crate) fn splits(n: u32, k: usize) -> Vec<(usize, usize)> {
    let n = n as usize;
    (1..=k / 2)
        .rev()
        .map(|b| (k - b, b))
        .filter(|&(a, b)| a * b >= n && a * (a - 1) + b * (b - 1) + 1 >= n)
        .collect()
}

/// Is `set` (sorted, containing 0) the least of its affine images?
fn is_canonical(set: &[u32], n: u32, units: &[u32]) -> bool {
    let mut img = vec![0u32; set.len()];
    for &shift in set {
        for &u in units {
            for (slot, &x) in img.iter_mut().zip(set) {
                *slot = ((u as u64 * ((x + n - shift) % n) as u64) % n as u64) as u32;
            }
            img.sort_unstable();
            if img.as_slice() < set {
                return false;
            }
        }
    }
    true
}

/// All canonical reflection sets of size `b`.
fn canonical_sets(n: u32, b: usize, units: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32];
    fn rec(n: u32, b: usize, units: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == b {
            if is_canonical(cur, n, units) {
                out.push(cur.clone());
            }
            return;
        }
        let from = cur.last().map_or(1, |&x| x + 1);
        let left = (b - cur.len()) as u32;
        if n < left {
            return;
        }
        for x in from..=n - left {
            cur.push(x);
            rec(n, b, units, cur, out);
            cur.pop();
        }
    }
    rec(n, b, units, &mut cur, &mut out);
    out
}

struct RotationSearch<'a, 'm> {
    n: u32,
    a: usize,
    full: u128,
    /// Reflections covered by each candidate rotation: `R - x`.
    refl_of: Vec<u128>,
    refl_set: &'a [u32],
    chosen: Vec<u32>,
    meter: &'a mut Meter<'m>,
}

enum Step {
    Found,
    Refuted,
    Stop,
}

impl RotationSearch<'_, '_> {
    fn rot_of(&self, x: u32) -> u128 {
        let n = self.n;
        let mut m = 0u128;
        for &y in &self.chosen {
            m |= bit((x + n - y) % n) | bit((y + n - x) % n);
        }
        m
    }

    fn dfs(&mut self, refl: u128, rot: u128, forbidden: u128) -> Step {
        if !self.meter.tick() {
            return Step::Stop;
        }
        let m = self.chosen.len();
        let r = self.a - m;
        let miss_refl = (self.full & !refl).count_ones() as usize;
        let miss_rot = (self.full & !rot).count_ones() as usize;
        if miss_refl == 0 && miss_rot == 0 {
            return Step::Found;
        }
        if r == 0 {
            return Step::Refuted;
        }
        let per = self.refl_of[0].count_ones() as usize;
        if miss_refl > r * per || miss_rot > self.a * (self.a - 1) - m * (m - 1) {
            return Step::Refuted;
        }
        let taken = forbidden | self.chosen.iter().fold(0u128, |acc, &x| acc | bit(x));

        if miss_refl == 0 {
            return self.fill(rot, taken, 0);
        }

        // Uncovered reflection with the fewest candidate rotations.
        let mut best: Option<(u32, u128)> = None;
        let mut missing = self.full & !refl;
        while missing != 0 {
            let z = missing.trailing_zeros();
            missing &= missing - 1;
            let mut cands = 0u128;
            for &y in self.refl_set {
                let x = (y + self.n - z) % self.n;
                if taken & bit(x) == 0 {
                    cands |= bit(x);
                }
            }
            let c = cands.count_ones();
            if c == 0 {
                return Step::Refuted;
            }
            if best.is_none_or(|(_, bc)| c < bc.count_ones()) {
                best = Some((z, cands));
            }
        }
        let (_, mut cands) = best.expect("missing reflections exist");
        let mut forb = forbidden;
        while cands != 0 {
            let x = cands.trailing_zeros();
            cands &= cands - 1;
            let rot_new = rot | self.rot_of(x);
            self.chosen.push(x);
            match self.dfs(refl | self.refl_of[x as usize], rot_new, forb) {
                Step::Refuted => {}
                other => return other,
            }
            self.chosen.pop();
            forb |= bit(x);
        }
        Step::Refuted
    }

    /// Reflections are done; place the remaining rotations freely.
    fn fill(&mut self, rot: u128, taken: u128, from: u32) -> Step {
        let m = self.chosen.len();
        let miss = (self.full & !rot).count_ones() as usize;
        if miss == 0 {
            return Step::Found;
        }
        if m == self.a || miss > self.a * (self.a - 1) - m * (m - 1) {
            return Step::Refuted;
        }
        for x in from..self.n {
            if taken & bit(x) != 0 {
                continue;
            }
            if !self.meter.tick() {
                return Step::Stop;
            }
            let rot_new = rot | self.rot_of(x);
            self.chosen.push(x);
            match self.fill(rot_new, taken | bit(x), x + 1) {
                Step::Refuted => {}
                other => return other,
            }
            self.chosen.pop();
        }
        Step::Refuted
    }
}

fn diff_set(set: &[u32], n: u32) -> u128 {
    let mut m = 0u128;
    for &x in set {
        for &y in set {
            m |= bit((x + n - y) % n);
        }
    }
    m
}

/// Searches `D_2n` for a basis with at most `k` elements.
pub(crate) fn solve(n: u32, k: usize, ctl: &Control, width: usize) -> crate::Result<Option<Vec<u32>>> {
    assert!(n <= MAX_N);
    let us = units(n);
    for (a, b) in splits(n, k) {
        let tasks = canonical_sets(n, b, &us);
        let found = ctl.run(&tasks, width, |refl_set, meter| {
            let mut refl_of = vec![0u128; n as usize];
            for x in 0..n {
                for &y in refl_set {
                    refl_of[x as usize] |= bit((y + n - x) % n);
                }
            }
            let mut s = RotationSearch {
                n,
                a,
                full: full(n),
                refl_of,
                refl_set,
                chosen: vec![0],
                meter,
            };
            let refl = s.refl_of[0];
            let rot = diff_set(refl_set, n) | bit(0);
            match s.dfs(refl, rot, 0) {
                Step::Found => {
                    let mut w: Vec<u32> = s.chosen.clone();
                    w.extend(refl_set.iter().map(|&y| n + y));
                    w.sort_unstable();
                    TaskResult::Found(w)
                }
                Step::Refuted => TaskResult::Refuted,
                Step::Stop => TaskResult::Aborted,
            }
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_counts() {
        // D_22: 7 = 4 + 3 gives 12 reflections but only 4*3 + 3*2 + 1 = 19 rotations.
        assert_eq!(splits(11, 7), vec![(4, 3)]);
        assert!(splits(11, 6).is_empty());
        assert_eq!(splits(1, 2), vec![(1, 1)]);
    }

    #[test]
    fn canonical_reps_cover_orbits() {
        let us = units(7);
        let reps = canonical_sets(7, 3, &us);
        assert!(reps.contains(&vec![0, 1, 3]));
        for r in &reps {
            assert!(is_canonical(r, 7, &us));
        }
        // Every 3-subset of Z_7 containing 0 reaches some representative.
        assert_eq!(reps.len(), 2);
    }
}
