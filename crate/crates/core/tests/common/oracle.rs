//! Exhaustive reference computations, written without the library's group
//! arithmetic or pruning.

/// Group element of `C_n` or `D_2n` as the affine map `v ↦ σv + c` on `Z`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Affine {
    sign: i64,
    shift: i64,
}

pub struct Table {
    pub order: usize,
    /// `diff[a][b] = a·b⁻¹`.
    pub diff: Vec<Vec<usize>>,
}

fn affine_of(index: usize, n: usize) -> Affine {
    if index < n {
        Affine { sign: 1, shift: index as i64 }
    } else {
        // s·r^k: reflect first, then rotate by k.
        Affine { sign: -1, shift: (index - n) as i64 }
    }
}

/// Apply `g`, then `h`.
fn then(g: Affine, h: Affine, n: i64) -> Affine {
    let at = |v: i64| h.sign * (g.sign * v + g.shift) + h.shift;
    Affine { sign: at(1) - at(0), shift: at(0).rem_euclid(n) }
}

fn index_of(a: Affine, n: usize) -> usize {
    if a.sign == 1 {
        a.shift as usize
    } else {
        n + a.shift as usize
    }
}

pub fn dihedral_table(n: usize) -> Table {
    let order = 2 * n;
    let mul: Vec<Vec<usize>> = (0..order)
        .map(|a| {
            (0..order)
                .map(|b| index_of(then(affine_of(a, n), affine_of(b, n), n as i64), n))
                .collect()
        })
        .collect();
    let inv: Vec<usize> = (0..order).map(|b| (0..order).find(|&e| mul[b][e] == 0).unwrap()).collect();
    let diff = (0..order).map(|a| (0..order).map(|b| mul[a][inv[b]]).collect()).collect();
    Table { order, diff }
}

pub fn cyclic_table(n: usize) -> Table {
    let diff = (0..n).map(|a| (0..n).map(|b| (a + n - b) % n).collect()).collect();
    Table { order: n, diff }
}

fn covers(t: &Table, set: &[usize]) -> bool {
    let mut seen = vec![false; t.order];
    for &a in set {
        for &b in set {
            seen[t.diff[a][b]] = true;
        }
    }
    seen.iter().all(|&s| s)
}

fn interval_covers(n: usize, set: &[usize]) -> bool {
    let mut seen = vec![false; n + 1];
    for &a in set {
        for &b in set {
            if a > b {
                seen[a - b] = true;
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// Calls `f` on every `k`-subset of `0..m` until it returns true.
fn any_subset(m: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(m: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for x in from..m {
            cur.push(x);
            if rec(m, k, x + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(m, k, 0, &mut Vec::new(), f)
}

pub fn group_delta(t: &Table) -> usize {
    (1..=t.order).find(|&k| any_subset(t.order, k, &mut |s| covers(t, s))).unwrap()
}

pub fn interval_delta(n: usize) -> usize {
    (1..=n + 1).find(|&k| any_subset(n + 1, k, &mut |s| interval_covers(n, s))).unwrap()
}

/// Independent check that `set` is a difference basis.
pub fn is_basis(kind: &str, n: usize, set: &[u32]) -> bool {
    let set: Vec<usize> = set.iter().map(|&x| x as usize).collect();
    match kind {
        "cyclic" => covers(&cyclic_table(n), &set),
        "dihedral" => covers(&dihedral_table(n), &set),
        _ => interval_covers(n, &set),
    }
}
