//! Arithmetic in `GF(p^k)` for building Singer and Bose–Chowla sets.
//!
//! Elements are polynomials over `GF(p)` of degree below `k`, reduced modulo
//! the lexicographically smallest monic irreducible polynomial. Internally an
//! element is also addressed by its code `Σ c_i p^i`, which is the enumeration
//! order used for every deterministic choice in this module.

use crate::error::{Error, Result};

/// Largest field order accepted by [`make_field`] and [`dlog_table`].
pub const FIELD_CAP: u64 = 1 << 20;
/// Largest field order used internally for arithmetic without log tables.
pub(crate) const ARITH_CAP: u64 = 1 << 24;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some((p, k))` when `q = p^k` for a prime `p` and `k ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let fs = prime_factors(q);
    if fs.len() != 1 {
        return None;
    }
    let p = fs[0];
    let mut k = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p as u32, k))
}

// ---- polynomials over GF(p), constant term first -------------------------

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let f = trim(f.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        if c != 0 {
            for (j, &fj) in f.iter().enumerate() {
                let i = dr - df + j;
                r[i] = (r[i] + p - c * fj % p) % p;
            }
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility by `gcd(x^{p^i} - x, f) = 1` for `1 ≤ i ≤ deg f / 2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut h = poly_rem(&x, &f, p);
    for _ in 1..=k / 2 {
        // h <- h^p mod f
        let mut acc = vec![1];
        let mut base = h.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, &f, p);
            }
            base = poly_mulmod(&base, &base, &f, p);
            e >>= 1;
        }
        h = acc;
        let mut hx = h.clone();
        hx.resize(hx.len().max(2), 0);
        hx[1] = (hx[1] + p - 1) % p;
        let g = poly_gcd(&f, &hx, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Irreducibility by trying every monic divisor of degree up to `deg f / 2`.
pub fn is_irreducible_by_division(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for m in 0..count {
            let mut g = digits(m, p, d);
            g.push(1);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut m: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(m % p);
        m /= p;
    }
    out
}

// ---- fields ---------------------------------------------------------------

/// `GF(p^k)` with a fixed monic irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    /// Length `k + 1`, constant term first, leading coefficient 1.
    modulus: Vec<u32>,
    q: u32,
}

/// A field element as its coefficient vector (length `k`, constant first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coeffs: Vec<u32>,
}

/// Builds `GF(p^k)` with the smallest monic irreducible modulus, where
/// polynomials are ordered by their codes `Σ c_i p^i` over the non-leading
/// coefficients.
pub fn make_field(p: u32, k: u32) -> Result<FieldSpec> {
    make_field_capped(p, k, FIELD_CAP)
}

pub(crate) fn make_field_capped(p: u32, k: u32, cap: u64) -> Result<FieldSpec> {
    if !is_prime(p as u64) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::Domain("field degree must be at least 1".into()));
    }
    let q = (p as u64)
        .checked_pow(k)
        .filter(|&q| q <= cap)
        .ok_or_else(|| Error::Resource(format!("GF({p}^{k}) exceeds the field size cap {cap}")))?;
    let pk = p as u64;
    for m in 0..q {
        let mut f = digits(m, pk, k as usize);
        f.push(1);
        let irreducible =
            if k <= 4 { is_irreducible_by_division(&f, pk) } else { is_irreducible(&f, pk) };
        if irreducible {
            return Ok(FieldSpec {
                p,
                k,
                modulus: f.into_iter().map(|c| c as u32).collect(),
                q: q as u32,
            });
        }
    }
    unreachable!("every finite field has an irreducible polynomial of each degree")
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order `p^k`.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, code: u32) -> FieldElement {
        assert!(code < self.q, "code out of range");
        FieldElement {
            coeffs: digits(code as u64, self.p as u64, self.k as usize)
                .into_iter()
                .map(|c| c as u32)
                .collect(),
        }
    }

    pub fn code(&self, e: &FieldElement) -> u32 {
        e.coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.element(self.add_codes(self.code(a), self.code(b)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.element(self.mul_codes(self.code(a), self.code(b)))
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> FieldElement {
        self.element(self.pow_code(self.code(a), e))
    }

    fn unpack(&self, mut code: u32, out: &mut [u64]) {
        for c in out.iter_mut() {
            *c = (code % self.p) as u64;
            code /= self.p;
        }
    }

    fn pack(&self, coeffs: &[u64]) -> u32 {
        coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c as u32)
    }

    pub(crate) fn add_codes(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let k = self.k as usize;
        let (mut x, mut y) = ([0u64; 32], [0u64; 32]);
        self.unpack(a, &mut x[..k]);
        self.unpack(b, &mut y[..k]);
        for i in 0..k {
            x[i] = (x[i] + y[i]) % self.p as u64;
        }
        self.pack(&x[..k])
    }

    pub(crate) fn mul_codes(&self, a: u32, b: u32) -> u32 {
        let k = self.k as usize;
        let p = self.p as u64;
        if self.p == 2 {
            let modbits = self.pack(&self.modulus.iter().map(|&c| c as u64).collect::<Vec<_>>());
            let mut acc: u64 = 0;
            let mut x = a as u64;
            let mut y = b;
            while y != 0 {
                if y & 1 == 1 {
                    acc ^= x;
                }
                y >>= 1;
                x <<= 1;
            }
            for i in (k..2 * k).rev() {
                if acc >> i & 1 == 1 {
                    acc ^= (modbits as u64) << (i - k);
                }
            }
            return acc as u32;
        }
        let (mut x, mut y) = ([0u64; 32], [0u64; 32]);
        self.unpack(a, &mut x[..k]);
        self.unpack(b, &mut y[..k]);
        let mut prod = [0u64; 64];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..k {
                    let t = i - k + j;
                    prod[t] = (prod[t] + p - c * self.modulus[j] as u64 % p) % p;
                }
                prod[i] = 0;
            }
        }
        self.pack(&prod[..k])
    }

    pub(crate) fn pow_code(&self, mut b: u32, mut e: u64) -> u32 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_codes(r, b);
            }
            b = self.mul_codes(b, b);
            e >>= 1;
        }
        r
    }

    /// Smallest code of an element of multiplicative order `q - 1`.
    pub(crate) fn primitive_code(&self) -> u32 {
        let n = self.q as u64 - 1;
        let primes = prime_factors(n);
        (1..self.q)
            .find(|&g| primes.iter().all(|&r| self.pow_code(g, n / r) != 1))
            .expect("the multiplicative group is cyclic")
    }
}

/// The first element (in code order) of multiplicative order `q - 1`.
pub fn primitive_element(f: &FieldSpec) -> FieldElement {
    f.element(f.primitive_code())
}

/// Discrete logarithms to the base [`primitive_element`].
#[derive(Debug, Clone)]
pub struct DlogTable {
    pub generator: FieldElement,
    log: Vec<u32>,
    exp: Vec<u32>,
}

impl DlogTable {
    /// `log_g(x)` in `[0, q - 1)`, or `None` for zero.
    pub fn log(&self, f: &FieldSpec, x: &FieldElement) -> Option<u32> {
        self.log_code(f.code(x))
    }

    pub(crate) fn log_code(&self, code: u32) -> Option<u32> {
        let l = self.log[code as usize];
        (l != u32::MAX).then_some(l)
    }

    /// `g^i` as a code.
    pub(crate) fn exp_code(&self, i: u64) -> u32 {
        self.exp[(i % self.exp.len() as u64) as usize]
    }

    pub fn exp(&self, f: &FieldSpec, i: u64) -> FieldElement {
        f.element(self.exp_code(i))
    }
}

pub fn dlog_table(f: &FieldSpec) -> Result<DlogTable> {
    if f.q as u64 > FIELD_CAP {
        return Err(Error::Resource(format!("log table for GF({}) exceeds the cap", f.q)));
    }
    let g = f.primitive_code();
    let n = f.q as usize - 1;
    let mut log = vec![u32::MAX; f.q as usize];
    let mut exp = Vec::with_capacity(n);
    let mut x = 1u32;
    for i in 0..n {
        debug_assert_eq!(log[x as usize], u32::MAX, "generator is primitive");
        log[x as usize] = i as u32;
        exp.push(x);
        x = f.mul_codes(x, g);
    }
    Ok(DlogTable { generator: f.element(g), log, exp })
}
