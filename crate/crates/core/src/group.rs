//! Cyclic groups, dihedral groups and integer order-intervals in one frame.
//!
//! Every group element is a dense index in `[0, order)`. Cyclic `n` uses the
//! residues directly. Dihedral `n` (order `2n`) stores the rotation `r^k` at
//! index `k` and the reflection `s·r^k` at index `n + k`, with `s r s = r^-1`.
//!
//! Intervals are not groups: an interval `n` is the target set `[1, n]` inside
//! the integers, and basis elements are integers in `[0, n]`. Coverage of an
//! interval uses plain subtraction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which family a [`GroupSpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
    Interval,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Cyclic => "cyclic",
            GroupKind::Dihedral => "dihedral",
            GroupKind::Interval => "interval",
        })
    }
}

impl std::str::FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" | "c" => Ok(GroupKind::Cyclic),
            "dihedral" | "d" => Ok(GroupKind::Dihedral),
            "interval" | "i" => Ok(GroupKind::Interval),
            other => Err(Error::Domain(format!("unknown group kind `{other}`"))),
        }
    }
}

/// A finite group (or integer interval) descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: u32,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain(format!("{kind} group parameter must be at least 1")));
        }
        Ok(GroupSpec { kind, n })
    }

    /// Cyclic group `C_n`. Panics on `n == 0`.
    pub fn cyclic(n: u32) -> Self {
        Self::new(GroupKind::Cyclic, n).expect("n >= 1")
    }

    /// Dihedral group `D_2n` of order `2n`. Panics on `n == 0`.
    pub fn dihedral(n: u32) -> Self {
        Self::new(GroupKind::Dihedral, n).expect("n >= 1")
    }

    /// Order-interval `[1, n]`. Panics on `n == 0`.
    pub fn interval(n: u32) -> Self {
        Self::new(GroupKind::Interval, n).expect("n >= 1")
    }

    pub fn is_group(&self) -> bool {
        self.kind != GroupKind::Interval
    }

    /// Group order, or the size of the coverage universe `[1, n]` for intervals.
    pub fn order(&self) -> usize {
        match self.kind {
            GroupKind::Cyclic | GroupKind::Interval => self.n as usize,
            GroupKind::Dihedral => 2 * self.n as usize,
        }
    }

    /// Number of distinct values a basis element may take.
    pub fn points(&self) -> usize {
        match self.kind {
            GroupKind::Interval => self.n as usize + 1,
            _ => self.order(),
        }
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    fn check(&self, g: Element) -> Result<()> {
        if !self.is_group() {
            return Err(Error::Domain("interval targets have no group law".into()));
        }
        if g.0 as usize >= self.order() {
            return Err(Error::Domain(format!(
                "element index {} out of range for {self} (order {})",
                g.0,
                self.order()
            )));
        }
        Ok(())
    }

    /// Decomposes a dihedral index into `(k, reflection)`.
    fn split(&self, g: Element) -> (u32, bool) {
        let n = self.n;
        if g.0 < n {
            (g.0, false)
        } else {
            (g.0 - n, true)
        }
    }

    fn join(&self, k: u32, reflection: bool) -> Element {
        Element(if reflection { self.n + k } else { k })
    }

    /// Group product `g·h`.
    pub fn mul(&self, g: Element, h: Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    pub(crate) fn mul_unchecked(&self, g: Element, h: Element) -> Element {
        let n = self.n;
        match self.kind {
            GroupKind::Cyclic => Element((g.0 + h.0) % n),
            GroupKind::Dihedral => {
                let (k1, e1) = self.split(g);
                let (k2, e2) = self.split(h);
                // r^a s r^b = s r^(b-a), so a reflection on the right negates the left exponent.
                let k = if e2 { (n - k1 + k2) % n } else { (k1 + k2) % n };
                self.join(k, e1 ^ e2)
            }
            GroupKind::Interval => unreachable!("checked by caller"),
        }
    }

    pub fn inv(&self, g: Element) -> Result<Element> {
        self.check(g)?;
        Ok(self.inv_unchecked(g))
    }

    pub(crate) fn inv_unchecked(&self, g: Element) -> Element {
        let n = self.n;
        match self.kind {
            GroupKind::Cyclic => Element((n - g.0) % n),
            GroupKind::Dihedral => {
                let (k, e) = self.split(g);
                if e {
                    g
                } else {
                    self.join((n - k) % n, false)
                }
            }
            GroupKind::Interval => unreachable!("checked by caller"),
        }
    }

    /// The difference `a·b⁻¹`.
    pub fn difference(&self, a: Element, b: Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, self.inv_unchecked(b)))
    }

    /// Coverage bit reached by the ordered pair `(a, b)`, if any.
    ///
    /// Groups: the index of `a·b⁻¹`. Intervals: `a - b - 1` when `a > b`.
    pub(crate) fn pair_bit(&self, a: u32, b: u32) -> Option<u32> {
        match self.kind {
            GroupKind::Interval => (a > b).then(|| a - b - 1),
            _ => Some(self.mul_unchecked(Element(a), self.inv_unchecked(Element(b))).0),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Cyclic => write!(f, "C_{}", self.n),
            GroupKind::Dihedral => write!(f, "D_{}", 2 * self.n),
            GroupKind::Interval => write!(f, "[1,{}]", self.n),
        }
    }
}

/// A group element by canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u32);

/// A candidate difference basis: a strictly increasing list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Basis {
    group: GroupSpec,
    elems: Vec<u32>,
}

impl Basis {
    /// Builds a basis from arbitrary-order indices. Duplicates and
    /// out-of-range values are rejected.
    pub fn new(group: GroupSpec, mut elems: Vec<u32>) -> Result<Self> {
        elems.sort_unstable();
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate basis element {}", w[0])));
        }
        if let Some(&last) = elems.last() {
            if last as usize >= group.points() {
                return Err(Error::InvalidInput(format!(
                    "basis element {last} out of range for {group}"
                )));
            }
        }
        Ok(Basis { group, elems })
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Right translate `{b·g : b ∈ B}`; preserves every difference `a·b⁻¹`.
    pub fn translate(&self, g: Element) -> Result<Basis> {
        let spec = self.group;
        spec.check(g)?;
        let elems = self.elems.iter().map(|&b| spec.mul_unchecked(Element(b), g).0).collect();
        Basis::new(spec, elems)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Bit vector over the coverage universe of a group.
///
/// For groups bit `g` stands for element `g`; for an interval bit `i - 1`
/// stands for the value `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverageMask {
    len: usize,
    words: Vec<u64>,
}

impl CoverageMask {
    pub fn empty(len: usize) -> Self {
        CoverageMask { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, bit: usize) {
        assert!(bit < self.len);
        self.words[bit / 64] |= 1 << (bit % 64);
    }

    pub fn get(&self, bit: usize) -> bool {
        bit < self.len && self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    /// Indices of unset bits, ascending.
    pub fn missing(&self) -> Vec<u32> {
        (0..self.len).filter(|&i| !self.get(i)).map(|i| i as u32).collect()
    }
}

/// All differences `a·b⁻¹` (or `a - b ∈ [1, n]` for intervals) of a basis.
pub fn difference_cover(basis: &Basis) -> CoverageMask {
    let spec = basis.group;
    let mut mask = CoverageMask::empty(spec.order());
    for &a in &basis.elems {
        for &b in &basis.elems {
            if let Some(bit) = spec.pair_bit(a, b) {
                mask.set(bit as usize);
            }
        }
    }
    mask
}

pub fn is_difference_basis(basis: &Basis) -> bool {
    difference_cover(basis).is_full()
}

/// Group elements left uncovered by a basis, in the group's own labelling
/// (interval values are reported as `1..=n`).
pub fn uncovered(basis: &Basis) -> Vec<u32> {
    let missing = difference_cover(basis).missing();
    match basis.group.kind {
        GroupKind::Interval => missing.into_iter().map(|b| b + 1).collect(),
        _ => missing,
    }
}

/// Splits a dihedral basis into its rotation exponents `A` and the exponents
/// `B'` of its reflections `s·r^k`.
///
/// A dihedral basis covers every reflection, which forces the residues
/// `{a - b mod n : a ∈ A, b ∈ B'}` to exhaust `Z_n`.
pub fn split_dihedral_basis(basis: &Basis) -> Result<(Vec<u32>, Vec<u32>)> {
    let spec = basis.group;
    if spec.kind != GroupKind::Dihedral {
        return Err(Error::Domain(format!("{spec} is not dihedral")));
    }
    let n = spec.n;
    let (rot, refl): (Vec<u32>, Vec<u32>) = basis.elems.iter().partition(|&&e| e < n);
    Ok((rot, refl.into_iter().map(|e| e - n).collect()))
}
