//! Explicit difference bases with a known upper bound on `Δ`.
//!
//! Every builder verifies its own output before returning it. A failed check
//! on caller-supplied input is [`Error::InvalidInput`]; a failed check on a
//! purely algebraic construction is [`Error::Construction`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{self, make_field_capped, prime_power, ARITH_CAP};
use crate::group::{is_difference_basis, Basis, Element, GroupKind, GroupSpec};
use crate::search::SearchOutcome;

/// Largest `q` accepted by [`singer_set`] and [`bose_chowla_set`].
pub const MAX_CONSTRUCTION_Q: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Singer { q: u32 },
    BoseChowla { q: u32 },
    Product { subgroup_order: u32, inner_size: u32, lifts_size: u32 },
    SubgroupTransversal { subgroup_order: u32 },
    DihedralFromCyclic { cyclic_size: u32 },
    CyclicFromInterval { m: u32 },
    SearchWitness { certified: bool },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Singer { q } => write!(f, "singer(q={q})"),
            Provenance::BoseChowla { q } => write!(f, "bose-chowla(q={q})"),
            Provenance::Product { subgroup_order, inner_size, lifts_size } => {
                write!(f, "product(|H|={subgroup_order}, {inner_size}x{lifts_size})")
            }
            Provenance::SubgroupTransversal { subgroup_order } => {
                write!(f, "subgroup+transversal(|H|={subgroup_order})")
            }
            Provenance::DihedralFromCyclic { cyclic_size } => {
                write!(f, "dihedral-from-cyclic(2x{cyclic_size})")
            }
            Provenance::CyclicFromInterval { m } => write!(f, "interval-transfer(m={m})"),
            Provenance::SearchWitness { certified } => {
                write!(f, "search({})", if *certified { "certified" } else { "uncertified" })
            }
        }
    }
}

/// A difference basis together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertifiedBasis {
    basis: Basis,
    provenance: Provenance,
}

impl CertifiedBasis {
    fn checked(basis: Basis, provenance: Provenance, err: fn(String) -> Error) -> Result<Self> {
        if !is_difference_basis(&basis) {
            return Err(err(format!("{basis} does not cover {} ({provenance})", basis.group())));
        }
        Ok(CertifiedBasis { basis, provenance })
    }

    /// Wraps a search witness, re-verifying it.
    pub fn from_search(outcome: &SearchOutcome) -> Result<Self> {
        Self::checked(
            outcome.witness.clone(),
            Provenance::SearchWitness { certified: outcome.certified },
            Error::InvalidInput,
        )
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn into_basis(self) -> Basis {
        self.basis
    }
}

/// A set in `Z_modulus` whose nonzero differences are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SidonSet {
    pub modulus: u32,
    pub q: u32,
    pub elems: Vec<u32>,
}

/// True when all ordered differences `a - b` (`a ≠ b`) are distinct mod `modulus`.
pub fn is_sidon(elems: &[u32], modulus: u32) -> bool {
    let mut seen = vec![false; modulus as usize];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = ((a + modulus - b) % modulus) as usize;
            if d == 0 || seen[d] {
                return false;
            }
            seen[d] = true;
        }
    }
    true
}

fn check_q(q: u32) -> Result<(u32, u32)> {
    let (p, k) = prime_power(q as u64)
        .ok_or_else(|| Error::Domain(format!("{q} is not a prime power")))?;
    if q > MAX_CONSTRUCTION_Q {
        return Err(Error::Resource(format!("q = {q} exceeds {MAX_CONSTRUCTION_Q}")));
    }
    Ok((p, k))
}

/// Least translate of `set` mod `v` that contains 0.
fn least_translate(set: &[u32], v: u32) -> Vec<u32> {
    set.iter()
        .map(|&s| {
            let mut t: Vec<u32> = set.iter().map(|&x| (x + v - s) % v).collect();
            t.sort_unstable();
            t
        })
        .min()
        .unwrap_or_default()
}

/// Each nonzero residue mod `v` is exactly one difference of `set`.
pub fn is_planar(set: &[u32], v: u32) -> bool {
    let mut hits = vec![0u32; v as usize];
    for &a in set {
        for &b in set {
            if a != b {
                hits[((a + v - b) % v) as usize] += 1;
            }
        }
    }
    hits[1..].iter().all(|&h| h == 1)
}

/// A planar difference set of size `q + 1` in `C_{q²+q+1}`.
///
/// With `α` primitive in `GF(q³)`, the exponents `i < q²+q+1` for which `α^i`
/// lies in the `GF(q)`-span of `{1, α}` form the set; it is then moved to its
/// least translate containing 0.
pub fn singer_set(q: u32) -> Result<CertifiedBasis> {
    let (p, k) = check_q(q)?;
    let f = make_field_capped(p, 3 * k, ARITH_CAP)?;
    let alpha = f.primitive_code();
    let v = q * q + q + 1;

    // GF(q) inside GF(q³): zero and the powers of α^v.
    let w = f.pow_code(alpha, v as u64);
    let mut sub = vec![0u32];
    let mut x = 1u32;
    for _ in 0..q - 1 {
        sub.push(x);
        x = f.mul_codes(x, w);
    }

    let size = f.q() as usize;
    let mut span = vec![0u64; size.div_ceil(64)];
    for &c1 in &sub {
        let t = f.mul_codes(c1, alpha);
        for &c0 in &sub {
            let e = f.add_codes(c0, t) as usize;
            span[e / 64] |= 1 << (e % 64);
        }
    }

    let mut set = Vec::with_capacity(q as usize + 1);
    let mut x = 1u32;
    for i in 0..v {
        if span[x as usize / 64] >> (x % 64) & 1 == 1 {
            set.push(i);
        }
        x = f.mul_codes(x, alpha);
    }
    let set = least_translate(&set, v);
    if set.len() != q as usize + 1 || !is_planar(&set, v) {
        return Err(Error::Construction(format!("singer set for q = {q} is not planar: {set:?}")));
    }
    let basis = Basis::new(GroupSpec::cyclic(v), set)?;
    CertifiedBasis::checked(basis, Provenance::Singer { q }, Error::Construction)
}

/// The Sidon set `{ log_θ(θ + a) : a ∈ GF(q) }` in `Z_{q²-1}`, with `θ`
/// primitive in `GF(q²)`.
pub fn bose_chowla_set(q: u32) -> Result<SidonSet> {
    let (p, k) = check_q(q)?;
    let f = field::make_field(p, 2 * k)?;
    let table = field::dlog_table(&f)?;
    let theta = f.code(&table.generator);
    let modulus = q * q - 1;
    let w = table.exp_code((q + 1) as u64);
    let mut sub = vec![0u32];
    let mut x = 1u32;
    for _ in 0..q - 1 {
        sub.push(x);
        x = f.mul_codes(x, w);
    }
    let mut elems = Vec::with_capacity(q as usize);
    for &a in &sub {
        let s = f.add_codes(theta, a);
        let l = table
            .log_code(s)
            .ok_or_else(|| Error::Construction("θ + a vanished".into()))?;
        elems.push(l);
    }
    elems.sort_unstable();
    if elems.len() != q as usize || !is_sidon(&elems, modulus) {
        return Err(Error::Construction(format!("bose-chowla set for q = {q} is not Sidon")));
    }
    Ok(SidonSet { modulus, q, elems })
}

fn check_elems(spec: GroupSpec, xs: &[u32], what: &str) -> Result<()> {
    if let Some(&x) = xs.iter().find(|&&x| x as usize >= spec.order()) {
        return Err(Error::InvalidInput(format!("{what} element {x} out of range for {spec}")));
    }
    if xs.is_empty() {
        return Err(Error::InvalidInput(format!("{what} is empty")));
    }
    Ok(())
}

/// `{ l·a : l ∈ lifts, a ∈ inner }`, where `inner` (indices of `spec`) is a
/// difference basis of a normal subgroup `H` and `lifts` project onto a
/// difference basis of `G/H`. Only the final cover is checked.
pub fn product_basis(spec: GroupSpec, inner: &[u32], lifts: &[u32]) -> Result<CertifiedBasis> {
    if !spec.is_group() {
        return Err(Error::Domain(format!("{spec} is not a group")));
    }
    check_elems(spec, inner, "inner")?;
    check_elems(spec, lifts, "lift")?;
    let mut elems: Vec<u32> = lifts
        .iter()
        .flat_map(|&l| inner.iter().map(move |&a| spec.mul_unchecked(Element(l), Element(a)).0))
        .collect();
    elems.sort_unstable();
    elems.dedup();
    let subgroup_order = subgroup_generated(spec, inner);
    let basis = Basis::new(spec, elems)?;
    CertifiedBasis::checked(
        basis,
        Provenance::Product {
            subgroup_order,
            inner_size: inner.len() as u32,
            lifts_size: lifts.len() as u32,
        },
        Error::InvalidInput,
    )
}

/// Order of the subgroup generated by `xs`.
fn subgroup_generated(spec: GroupSpec, xs: &[u32]) -> u32 {
    let mut seen = vec![false; spec.order()];
    let mut stack = vec![0u32];
    seen[0] = true;
    while let Some(g) = stack.pop() {
        for &x in xs {
            let h = spec.mul_unchecked(Element(g), Element(x)).0;
            if !seen[h as usize] {
                seen[h as usize] = true;
                stack.push(h);
            }
        }
    }
    seen.iter().filter(|&&s| s).count() as u32
}

/// `H ∪ T` for the cyclic subgroup `H` of order `m` (inside the rotations for
/// dihedral groups) and a transversal `T ∋ e` of its cosets. Size is
/// `m + |G|/m - 1`.
pub fn subgroup_transversal_basis(spec: GroupSpec, m: u32) -> Result<CertifiedBasis> {
    let n = spec.n;
    if !spec.is_group() {
        return Err(Error::Domain(format!("{spec} is not a group")));
    }
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::Domain(format!("{m} does not divide {n}")));
    }
    let step = n / m;
    let mut elems: Vec<u32> = (0..m).map(|j| j * step).collect();
    elems.extend(0..step);
    if spec.kind == GroupKind::Dihedral {
        elems.extend((0..step).map(|j| n + j));
    }
    elems.sort_unstable();
    elems.dedup();
    let basis = Basis::new(spec, elems)?;
    CertifiedBasis::checked(
        basis,
        Provenance::SubgroupTransversal { subgroup_order: m },
        Error::Construction,
    )
}

/// `{r^b} ∪ {s·r^b}` for a difference basis `B` of `C_n`, of size `2|B|`.
pub fn dihedral_basis_from_cyclic(bc: &Basis) -> Result<CertifiedBasis> {
    let g = bc.group();
    if g.kind != GroupKind::Cyclic {
        return Err(Error::InvalidInput(format!("expected a cyclic basis, got {g}")));
    }
    if !is_difference_basis(bc) {
        return Err(Error::InvalidInput(format!("{bc} is not a difference basis of {g}")));
    }
    let n = g.n;
    let mut elems = bc.elems().to_vec();
    elems.extend(bc.elems().iter().map(|&b| n + b));
    let basis = Basis::new(GroupSpec::dihedral(n), elems)?;
    CertifiedBasis::checked(
        basis,
        Provenance::DihedralFromCyclic { cyclic_size: bc.len() as u32 },
        Error::Construction,
    )
}

/// Reads an interval basis of `[1, m]` with `m = ⌈(n-1)/2⌉` as a subset of
/// `C_n`: its differences `±[1, m] ∪ {0}` exhaust `Z_n`.
pub fn cyclic_basis_from_interval(bi: &Basis, n: u32) -> Result<CertifiedBasis> {
    if n < 2 {
        return Err(Error::Domain("interval transfer needs n ≥ 2".into()));
    }
    let g = bi.group();
    let m = n / 2;
    if g.kind != GroupKind::Interval || g.n != m {
        return Err(Error::InvalidInput(format!("expected a basis of [1,{m}], got {g}")));
    }
    if !is_difference_basis(bi) {
        return Err(Error::InvalidInput(format!("{bi} does not cover [1,{m}]")));
    }
    let basis = Basis::new(GroupSpec::cyclic(n), bi.elems().to_vec())?;
    CertifiedBasis::checked(basis, Provenance::CyclicFromInterval { m }, Error::Construction)
}
