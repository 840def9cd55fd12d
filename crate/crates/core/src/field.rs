//! Exact arithmetic in GF(p^e) and in tower extensions GF(q^m),
//! including deterministic construction of canonical irreducible moduli
//! and location of primitive n-th roots of unity.
//!
//! An element is identified by its canonical index: the coordinate
//! vector over the immediate subfield, constant coordinate first, read
//! as little-endian digits in base |subfield|. Index order is therefore
//! the canonical enumeration order (constant coordinate fastest), which
//! pins moduli, root searches and message spaces bit-for-bit across
//! runs. An element of GF(q^m) lies in the embedded GF(q) exactly when
//! its index is below q.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nt;

/// Fields are capped strictly below 2^127 elements.
pub const CARDINALITY_CAP: u128 = 1 << 127;

/// Full arithmetic tables are materialized for fields up to this size.
const TABLE_LIMIT: u128 = 256;

/// Trial division decides irreducibility while the monic divisor count
/// stays below this bound; larger searches switch to Rabin's test.
const TRIAL_DIVISION_LIMIT: u128 = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("{q}^{m} reaches the 2^127 cardinality cap")]
    CardinalityOverflow { q: u128, m: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands belong to different field contexts")]
    ContextMismatch,
    #[error("no primitive {n}-th root of unity: {n} does not divide {q} - 1")]
    NoSuchRoot { n: u64, q: u128 },
    #[error("index {idx} out of range for a field of {q} elements")]
    InvalidIndex { idx: u128, q: u128 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
}

/// Serialized form of a context: characteristic, total degree over the
/// prime field, and the modulus coefficient indices over the immediate
/// subfield (constant term first; `[0, 1]` for a prime field).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u64>,
}

/// An explicit finite field GF(p^e), possibly built as a tower GF(q^m)
/// over a named base field. Immutable and cheap to clone.
#[derive(Clone)]
pub struct FieldContext {
    inner: Arc<Inner>,
}

struct Inner {
    p: u64,
    degree: u32,
    cardinality: u128,
    base: Option<FieldContext>,
    ext_degree: u32,
    /// Monic irreducible over the base, constant term first, as indices.
    modulus: Vec<u128>,
    tables: Option<Tables>,
}

struct Tables {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// An element of a specific [`FieldContext`].
#[derive(Clone)]
pub struct FieldElement {
    ctx: FieldContext,
    index: u128,
}

/// Constructs GF(p^e) over the prime field GF(p) with the canonical
/// irreducible modulus; for e = 1 the modulus is the identity reduction
/// mod p.
pub fn make_field(p: u64, e: u32) -> Result<FieldContext, FieldError> {
    if !nt::is_prime(p) {
        return Err(FieldError::NonPrimeCharacteristic(p));
    }
    if e == 0 {
        return Err(FieldError::InvalidDegree);
    }
    let prime = prime_field(p);
    if e == 1 {
        Ok(prime)
    } else {
        extend_field(&prime, e)
    }
}

/// Constructs GF(q^m) as a tower over `base` = GF(q), with the canonical
/// irreducible modulus of degree m over GF(q). GF(q) embeds as the
/// elements with index below q.
pub fn extend_field(base: &FieldContext, m: u32) -> Result<FieldContext, FieldError> {
    if m == 0 {
        return Err(FieldError::InvalidDegree);
    }
    let q = base.cardinality();
    let cardinality = checked_pow(q, m).ok_or(FieldError::CardinalityOverflow { q, m })?;
    let modulus = cached_canonical_modulus(base, m);
    let mut inner = Inner {
        p: base.inner.p,
        degree: base.inner.degree * m,
        cardinality,
        base: Some(base.clone()),
        ext_degree: m,
        modulus,
        tables: None,
    };
    inner.tables = Tables::build(&inner);
    Ok(FieldContext { inner: Arc::new(inner) })
}

/// Resolves a prime-power order q = p^e to its field, e.g. for CLI input.
pub fn field_for_order(q: u64) -> Result<FieldContext, FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let f = nt::factor(q);
    if f.len() != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    make_field(f[0].0, f[0].1)
}

fn prime_field(p: u64) -> FieldContext {
    let mut inner = Inner {
        p,
        degree: 1,
        cardinality: p as u128,
        base: None,
        ext_degree: 1,
        modulus: vec![0, 1],
        tables: None,
    };
    inner.tables = Tables::build(&inner);
    FieldContext { inner: Arc::new(inner) }
}

fn checked_pow(q: u128, m: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..m {
        acc = acc.checked_mul(q)?;
        if acc >= CARDINALITY_CAP {
            return None;
        }
    }
    Some(acc)
}

impl FieldContext {
    pub fn cardinality(&self) -> u128 {
        self.inner.cardinality
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    /// Total extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    /// Degree over the immediate base field (1 for a prime field).
    pub fn ext_degree(&self) -> u32 {
        self.inner.ext_degree
    }

    /// Modulus coefficients over the immediate base, constant term first.
    pub fn modulus(&self) -> &[u128] {
        &self.inner.modulus
    }

    pub fn base(&self) -> Option<&FieldContext> {
        self.inner.base.as_ref()
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.inner.p,
            e: self.inner.degree,
            modulus: self.inner.modulus.iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { ctx: self.clone(), index: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { ctx: self.clone(), index: 1 }
    }

    /// The element with the given canonical index.
    pub fn element(&self, idx: u128) -> Result<FieldElement, FieldError> {
        if idx >= self.inner.cardinality {
            return Err(FieldError::InvalidIndex { idx, q: self.inner.cardinality });
        }
        Ok(FieldElement { ctx: self.clone(), index: idx })
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_pair(a, b)?;
        Ok(self.wrap(self.inner.add_idx(a.index, b.index)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_pair(a, b)?;
        Ok(self.wrap(self.inner.sub_idx(a.index, b.index)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_pair(a, b)?;
        Ok(self.wrap(self.inner.mul_idx(a.index, b.index)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_one(a)?;
        Ok(self.wrap(self.inner.neg_idx(a.index)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_one(a)?;
        let idx = self.inner.inv_idx(a.index).ok_or(FieldError::ZeroInverse)?;
        Ok(self.wrap(idx))
    }

    /// Square-and-multiply; `pow(0, 0)` is 1 by convention.
    pub fn pow(&self, a: &FieldElement, exp: u128) -> Result<FieldElement, FieldError> {
        self.check_one(a)?;
        Ok(self.wrap(self.inner.pow_idx(a.index, exp)))
    }

    /// The first element delta, over candidates gamma in canonical index
    /// order with delta = gamma^((Q-1)/n), whose multiplicative order is
    /// exactly n.
    pub fn primitive_nth_root(&self, n: u64) -> Result<FieldElement, FieldError> {
        let q = self.cardinality();
        if n == 0 || (q - 1) % n as u128 != 0 {
            return Err(FieldError::NoSuchRoot { n, q });
        }
        let exp = (q - 1) / n as u128;
        let prime_divisors = nt::distinct_primes(n);
        for gamma in 1..q {
            let delta = self.inner.pow_idx(gamma, exp);
            debug_assert_eq!(self.inner.pow_idx(delta, n as u128), 1);
            if prime_divisors.iter().all(|&l| self.inner.pow_idx(delta, (n / l) as u128) != 1) {
                return Ok(self.wrap(delta));
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    fn wrap(&self, index: u128) -> FieldElement {
        FieldElement { ctx: self.clone(), index }
    }

    fn check_one(&self, a: &FieldElement) -> Result<(), FieldError> {
        if &a.ctx != self {
            return Err(FieldError::ContextMismatch);
        }
        Ok(())
    }

    fn check_pair(&self, a: &FieldElement, b: &FieldElement) -> Result<(), FieldError> {
        self.check_one(a)?;
        self.check_one(b)
    }

    // Index-level arithmetic for the rest of the crate; callers are
    // responsible for using indices of this context only.
    pub(crate) fn add_idx(&self, a: u128, b: u128) -> u128 {
        self.inner.add_idx(a, b)
    }

    pub(crate) fn sub_idx(&self, a: u128, b: u128) -> u128 {
        self.inner.sub_idx(a, b)
    }

    pub(crate) fn mul_idx(&self, a: u128, b: u128) -> u128 {
        self.inner.mul_idx(a, b)
    }

    pub(crate) fn neg_idx(&self, a: u128) -> u128 {
        self.inner.neg_idx(a)
    }

    pub(crate) fn inv_idx(&self, a: u128) -> Option<u128> {
        self.inner.inv_idx(a)
    }

    #[cfg(test)]
    pub(crate) fn pow_idx(&self, a: u128, e: u128) -> u128 {
        self.inner.pow_idx(a, e)
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        self.inner.p == other.inner.p
            && self.inner.cardinality == other.inner.cardinality
            && self.inner.ext_degree == other.inner.ext_degree
            && self.inner.modulus == other.inner.modulus
            && self.inner.base == other.inner.base
    }
}

impl Eq for FieldContext {}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.cardinality)?;
        if self.inner.base.is_some() {
            write!(f, " (degree {} over GF({}))", self.inner.ext_degree, self.base().unwrap().cardinality())?;
        }
        Ok(())
    }
}

impl FieldElement {
    pub fn index(&self) -> u128 {
        self.index
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    /// Coordinate vector over the immediate base field, constant first.
    pub fn coords(&self) -> Vec<u128> {
        self.ctx.inner.digits(self.index)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.ctx == other.ctx
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in GF({})", self.index, self.ctx.cardinality())
    }
}

impl Inner {
    fn base_card(&self) -> u128 {
        self.base.as_ref().map_or(self.p as u128, |b| b.cardinality())
    }

    fn digits(&self, mut x: u128) -> Vec<u128> {
        let b = self.base_card();
        let mut out = Vec::with_capacity(self.ext_degree as usize);
        for _ in 0..self.ext_degree {
            out.push(x % b);
            x /= b;
        }
        out
    }

    fn encode(&self, digits: &[u128]) -> u128 {
        let b = self.base_card();
        let mut out = 0u128;
        for &d in digits.iter().rev() {
            out = out * b + d;
        }
        out
    }

    fn add_idx(&self, a: u128, b: u128) -> u128 {
        if let Some(t) = &self.tables {
            return t.add[a as usize * t.q + b as usize] as u128;
        }
        match &self.base {
            None => {
                let p = self.p as u128;
                let s = a + b;
                if s >= p { s - p } else { s }
            }
            Some(base) => self.zip(a, b, |x, y| base.inner.add_idx(x, y)),
        }
    }

    fn neg_idx(&self, a: u128) -> u128 {
        if let Some(t) = &self.tables {
            return t.neg[a as usize] as u128;
        }
        match &self.base {
            None => {
                if a == 0 { 0 } else { self.p as u128 - a }
            }
            Some(base) => self.map(a, |x| base.inner.neg_idx(x)),
        }
    }

    fn sub_idx(&self, a: u128, b: u128) -> u128 {
        self.add_idx(a, self.neg_idx(b))
    }

    fn mul_idx(&self, a: u128, b: u128) -> u128 {
        if let Some(t) = &self.tables {
            return t.mul[a as usize * t.q + b as usize] as u128;
        }
        match &self.base {
            None => (a * b) % self.p as u128,
            Some(base) => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let da = self.digits(a);
                let db = self.digits(b);
                let mut prod = poly_mul(base, &da, &db);
                poly_reduce(base, &mut prod, &self.modulus);
                prod.resize(self.ext_degree as usize, 0);
                self.encode(&prod)
            }
        }
    }

    fn inv_idx(&self, a: u128) -> Option<u128> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            return Some(t.inv[a as usize] as u128);
        }
        match &self.base {
            None => {
                // extended Euclid on (a, p)
                let p = self.p as i128;
                let (mut r0, mut r1) = (a as i128, p);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                Some(s0.rem_euclid(p) as u128)
            }
            // Fermat; fields are small enough that the extra squarings
            // over an extended-Euclid routine never matter here.
            Some(_) => Some(self.pow_idx(a, self.cardinality - 2)),
        }
    }

    fn pow_idx(&self, a: u128, mut e: u128) -> u128 {
        let mut base = a;
        let mut acc = 1u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        acc
    }

    fn zip(&self, a: u128, b: u128, f: impl Fn(u128, u128) -> u128) -> u128 {
        let bq = self.base_card();
        let (mut a, mut b) = (a, b);
        let mut out = 0u128;
        let mut place = 1u128;
        for i in 0..self.ext_degree {
            out += f(a % bq, b % bq) * place;
            a /= bq;
            b /= bq;
            if i + 1 < self.ext_degree {
                place *= bq;
            }
        }
        out
    }

    fn map(&self, a: u128, f: impl Fn(u128) -> u128) -> u128 {
        self.zip(a, 0, |x, _| f(x))
    }
}

impl Tables {
    fn build(inner: &Inner) -> Option<Tables> {
        if inner.cardinality > TABLE_LIMIT {
            return None;
        }
        let q = inner.cardinality as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            neg[a] = inner.neg_idx(a as u128) as u16;
            for b in 0..q {
                add[a * q + b] = inner.add_idx(a as u128, b as u128) as u16;
                let m = inner.mul_idx(a as u128, b as u128) as u16;
                mul[a * q + b] = m;
                if m == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        Some(Tables { q, add, mul, neg, inv })
    }
}

// ---- polynomial arithmetic over a coefficient field (index vectors,
// constant term first); shared by the modulus search and tower reduction.

pub(crate) fn poly_trim(c: &mut Vec<u128>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

pub(crate) fn poly_mul(f: &FieldContext, a: &[u128], b: &[u128]) -> Vec<u128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                out[i + j] = f.add_idx(out[i + j], f.mul_idx(ai, bj));
            }
        }
    }
    out
}

/// Reduces `a` in place modulo a monic divisor.
pub(crate) fn poly_reduce(f: &FieldContext, a: &mut Vec<u128>, den: &[u128]) {
    let d = den.len() - 1;
    debug_assert_eq!(den[d], 1, "divisor must be monic");
    while a.len() > d {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - d;
        if lead != 0 {
            for j in 0..d {
                let sub = f.mul_idx(lead, den[j]);
                a[shift + j] = f.sub_idx(a[shift + j], sub);
            }
        }
        a.pop();
    }
    poly_trim(a);
}

pub(crate) fn poly_rem(f: &FieldContext, a: &[u128], den: &[u128]) -> Vec<u128> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    poly_reduce(f, &mut r, den);
    r
}

fn poly_mulmod(f: &FieldContext, a: &[u128], b: &[u128], den: &[u128]) -> Vec<u128> {
    let mut p = poly_mul(f, a, b);
    poly_reduce(f, &mut p, den);
    p
}

/// x^e mod den by square-and-multiply on the exponent bits.
fn poly_x_powmod(f: &FieldContext, mut e: u128, den: &[u128]) -> Vec<u128> {
    let mut acc = vec![1u128];
    let mut sq = poly_rem(f, &[0, 1], den);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(f, &acc, &sq, den);
        }
        sq = poly_mulmod(f, &sq, &sq, den);
        e >>= 1;
    }
    acc
}

fn poly_gcd(f: &FieldContext, a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let lead = *b.last().unwrap();
        let inv = f.inv_idx(lead).expect("nonzero leading coefficient");
        let monic: Vec<u128> = b.iter().map(|&c| f.mul_idx(c, inv)).collect();
        let r = poly_rem(f, &a, &monic);
        a = b;
        b = r;
    }
    a
}

// ---- canonical irreducible modulus search.

/// Memoizes the modulus search: scans rebuild the same extensions for
/// every candidate set, and the answer is a pure function of
/// (|base|, m) because moduli are always canonical.
fn cached_canonical_modulus(base: &FieldContext, m: u32) -> Vec<u128> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<(u128, u32), Vec<u128>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(base.cardinality(), m)) {
        return hit.clone();
    }
    let modulus = canonical_modulus(base, m);
    cache
        .lock()
        .unwrap()
        .insert((base.cardinality(), m), modulus.clone());
    modulus
}

/// Smallest monic irreducible of degree m over `base`, ordering monic
/// candidates by their coefficient tuple (constant first) read as
/// little-endian digits of an integer in base |base|.
fn canonical_modulus(base: &FieldContext, m: u32) -> Vec<u128> {
    let bq = base.cardinality();
    let m = m as usize;
    let mut enc: u128 = 0;
    loop {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut t = enc;
        for _ in 0..m {
            coeffs.push(t % bq);
            t /= bq;
        }
        coeffs.push(1);
        if is_irreducible(base, &coeffs) {
            return coeffs;
        }
        enc += 1;
    }
}

/// Exact irreducibility of a monic polynomial over `base`: trial
/// division at desk scale, Rabin's deterministic criterion beyond.
pub(crate) fn is_irreducible(base: &FieldContext, f: &[u128]) -> bool {
    let m = f.len() - 1;
    debug_assert!(m >= 1 && f[m] == 1);
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false; // divisible by x
    }
    let bq = base.cardinality();
    // root scan settles degrees two and three outright
    if m <= 3 && bq <= 65_536 {
        return (0..bq).all(|c| poly_eval(base, f, c) != 0);
    }
    let mut divisors: u128 = 0;
    let mut pow = 1u128;
    for _ in 0..m / 2 {
        pow = pow.saturating_mul(bq);
        divisors = divisors.saturating_add(pow);
    }
    if divisors <= TRIAL_DIVISION_LIMIT {
        trial_division_irreducible(base, f)
    } else {
        rabin_irreducible(base, f)
    }
}

fn poly_eval(base: &FieldContext, f: &[u128], x: u128) -> u128 {
    let mut acc = 0u128;
    for &c in f.iter().rev() {
        acc = base.add_idx(base.mul_idx(acc, x), c);
    }
    acc
}

fn trial_division_irreducible(base: &FieldContext, f: &[u128]) -> bool {
    let m = f.len() - 1;
    let bq = base.cardinality();
    for d in 1..=m / 2 {
        let mut enc: u128 = 0;
        let end = bq.pow(d as u32);
        while enc < end {
            let mut div = Vec::with_capacity(d + 1);
            let mut t = enc;
            for _ in 0..d {
                div.push(t % bq);
                t /= bq;
            }
            div.push(1);
            if poly_rem(base, f, &div).is_empty() {
                return false;
            }
            enc += 1;
        }
    }
    true
}

/// Rabin: f of degree m is irreducible over GF(b) iff x^(b^m) = x mod f
/// and gcd(x^(b^(m/l)) - x, f) = 1 for every prime l dividing m.
fn rabin_irreducible(base: &FieldContext, f: &[u128]) -> bool {
    let m = f.len() - 1;
    let bq = base.cardinality();
    // b^m fits u128: no caller can build a field past the cardinality cap
    let full = checked_pow_raw(bq, m as u32).expect("query within the cardinality cap");
    let xq = poly_x_powmod(base, full, f);
    let mut diff = xq;
    sub_x(base, &mut diff);
    if !diff.is_empty() {
        return false;
    }
    for l in nt::distinct_primes(m as u64) {
        let e = checked_pow_raw(bq, (m as u64 / l) as u32).expect("smaller power fits");
        let mut g = poly_x_powmod(base, e, f);
        sub_x(base, &mut g);
        let gcd = poly_gcd(base, &g, f);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

fn sub_x(base: &FieldContext, p: &mut Vec<u128>) {
    if p.len() < 2 {
        p.resize(2, 0);
    }
    p[1] = base.sub_idx(p[1], 1);
    poly_trim(p);
}

fn checked_pow_raw(b: u128, e: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(b)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.cardinality(), 5);
        assert_eq!(f5.modulus(), &[0, 1]);
        let three = f5.element(3).unwrap();
        assert_eq!(f5.inv(&three).unwrap().index(), 2);
        let two = f5.element(2).unwrap();
        assert_eq!(f5.pow(&two, 4).unwrap().index(), 1);
    }

    #[test]
    fn non_prime_characteristic_rejected() {
        assert_eq!(make_field(4, 1), Err(FieldError::NonPrimeCharacteristic(4)));
        assert_eq!(make_field(1, 1), Err(FieldError::NonPrimeCharacteristic(1)));
    }

    #[test]
    fn canonical_moduli_are_frozen() {
        // independently derived by enumerating monic polynomials in
        // canonical order and checking irreducibility by hand
        let cases: &[(u64, u32, &[u128])] = &[
            (2, 2, &[1, 1, 1]),
            (2, 3, &[1, 1, 0, 1]),
            (2, 4, &[1, 1, 0, 0, 1]),
            (2, 5, &[1, 0, 1, 0, 0, 1]),
            (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
            (3, 2, &[1, 0, 1]),
            (3, 3, &[1, 2, 0, 1]),
            (5, 2, &[2, 0, 1]),
            (7, 2, &[1, 0, 1]),
        ];
        for &(p, e, want) in cases {
            let f = make_field(p, e).unwrap();
            assert_eq!(f.modulus(), want, "GF({p}^{e})");
        }
    }

    #[test]
    fn gf9_has_no_linear_term_and_squares_to_minus_one() {
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // generator coordinate vector [0,1] is index 3; its square is
        // -(constant term) = -1 = 2
        let alpha = f9.element(3).unwrap();
        assert_eq!(alpha.coords(), vec![0, 1]);
        let sq = f9.mul(&alpha, &alpha).unwrap();
        assert_eq!(sq.index(), 2);
    }

    #[test]
    fn tower_cardinalities() {
        let f5 = make_field(5, 1).unwrap();
        let ext = extend_field(&f5, 5).unwrap();
        assert_eq!(ext.cardinality(), 3125);
        let f17 = make_field(17, 1).unwrap();
        let big = extend_field(&f17, 9).unwrap();
        assert_eq!(big.cardinality(), 118_587_876_497);
    }

    #[test]
    fn identity_tower_is_isomorphic_to_base() {
        let f7 = make_field(7, 1).unwrap();
        let t = extend_field(&f7, 1).unwrap();
        assert_eq!(t.cardinality(), 7);
        assert_eq!(t.modulus(), &[0, 1]);
        for a in 0..7u128 {
            for b in 0..7u128 {
                assert_eq!(t.add_idx(a, b), f7.add_idx(a, b));
                assert_eq!(t.mul_idx(a, b), f7.mul_idx(a, b));
            }
        }
    }

    #[test]
    fn cardinality_cap_enforced() {
        let f3 = make_field(3, 1).unwrap();
        assert!(matches!(
            extend_field(&f3, 81),
            Err(FieldError::CardinalityOverflow { .. })
        ));
        assert!(extend_field(&f3, 80).is_ok());
    }

    #[test]
    fn context_mismatch_detected() {
        let f5 = make_field(5, 1).unwrap();
        let f7 = make_field(7, 1).unwrap();
        let a = f5.element(2).unwrap();
        let b = f7.element(2).unwrap();
        assert_eq!(f5.add(&a, &b), Err(FieldError::ContextMismatch));
    }

    #[test]
    fn zero_inverse_rejected() {
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.inv(&f9.zero()), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn construction_is_deterministic() {
        let a = make_field(3, 4).unwrap().descriptor();
        let b = make_field(3, 4).unwrap().descriptor();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn field_axioms_hold_on_sampled_triples() {
        let fields = [
            make_field(5, 1).unwrap(),
            make_field(3, 2).unwrap(),
            make_field(2, 3).unwrap(),
            make_field(3, 3).unwrap(),
            make_field(7, 2).unwrap(),
            extend_field(&make_field(3, 2).unwrap(), 2).unwrap(), // GF(81) over GF(9)
        ];
        for f in &fields {
            let q = f.cardinality();
            // deterministic pseudo-random walk over triples
            let mut s = 0xdead_beefu128;
            for _ in 0..300 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = s % q;
                let b = (s >> 32) % q;
                let c = (s >> 64) % q;
                let ab_c = f.add_idx(f.add_idx(a, b), c);
                let a_bc = f.add_idx(a, f.add_idx(b, c));
                assert_eq!(ab_c, a_bc);
                assert_eq!(f.mul_idx(a, b), f.mul_idx(b, a));
                let left = f.mul_idx(a, f.add_idx(b, c));
                let right = f.add_idx(f.mul_idx(a, b), f.mul_idx(a, c));
                assert_eq!(left, right);
                assert_eq!(f.add_idx(a, f.neg_idx(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul_idx(a, f.inv_idx(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn lagrange_exhaustive_on_small_fields() {
        for f in [
            make_field(3, 4).unwrap(),   // 81
            make_field(5, 3).unwrap(),   // 125
            make_field(2, 10).unwrap(),  // 1024, no tables
            make_field(97, 1).unwrap(),
        ] {
            let q = f.cardinality();
            for x in 1..q {
                assert_eq!(f.pow_idx(x, q - 1), 1, "x={x} in GF({q})");
            }
        }
    }

    #[test]
    fn primitive_roots_match_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.primitive_nth_root(4).unwrap().index(), 2);
        assert_eq!(f5.primitive_nth_root(1).unwrap().index(), 1);
        assert!(matches!(
            f5.primitive_nth_root(3),
            Err(FieldError::NoSuchRoot { n: 3, .. })
        ));

        let ext = extend_field(&f5, 5).unwrap(); // 5^5 - 1 = 3124 = 11 * 284
        let delta = ext.primitive_nth_root(11).unwrap();
        assert_eq!(ext.pow(&delta, 11).unwrap().index(), 1);
        assert_ne!(delta.index(), 1);
    }

    #[test]
    fn root_order_is_verified_for_composite_n() {
        // GF(2^6): Q - 1 = 63 = 9 * 7; check a primitive 9th root
        let f = make_field(2, 6).unwrap();
        let d = f.primitive_nth_root(9).unwrap();
        assert_eq!(f.pow_idx(d.index(), 9), 1);
        assert_ne!(f.pow_idx(d.index(), 3), 1);
    }

    #[test]
    fn irreducibility_routes_agree() {
        // every monic quartic over GF(3): trial division against Rabin
        let f3 = make_field(3, 1).unwrap();
        let mut count = 0;
        for enc in 0..81u128 {
            let poly = [enc % 3, (enc / 3) % 3, (enc / 9) % 3, (enc / 27) % 3, 1];
            let trial = trial_division_irreducible(&f3, &poly);
            let rabin = rabin_irreducible(&f3, &poly);
            assert_eq!(trial, rabin, "disagree on {poly:?}");
            if trial {
                count += 1;
            }
        }
        // necklace count of monic irreducible quartics over GF(3)
        assert_eq!(count, 18);
    }

    #[test]
    fn irreducible_sextics_over_gf2_counted() {
        let f2 = make_field(2, 1).unwrap();
        let mut count = 0;
        for enc in 0..64u128 {
            let poly = [
                enc & 1,
                (enc >> 1) & 1,
                (enc >> 2) & 1,
                (enc >> 3) & 1,
                (enc >> 4) & 1,
                (enc >> 5) & 1,
                1,
            ];
            if trial_division_irreducible(&f2, &poly) {
                count += 1;
            }
            assert_eq!(
                trial_division_irreducible(&f2, &poly),
                rabin_irreducible(&f2, &poly)
            );
        }
        assert_eq!(count, 9);
    }

    #[test]
    fn field_for_order_accepts_prime_powers_only() {
        assert_eq!(field_for_order(9).unwrap().cardinality(), 9);
        assert_eq!(field_for_order(64).unwrap().cardinality(), 64);
        assert_eq!(field_for_order(12), Err(FieldError::NotPrimePower(12)));
        assert_eq!(field_for_order(1), Err(FieldError::NotPrimePower(1)));
    }

    #[test]
    fn descriptor_round_trips_through_json() {
        let f = make_field(3, 2).unwrap();
        let d = f.descriptor();
        let s = serde_json::to_string(&d).unwrap();
        let back: FieldDescriptor = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert_eq!(d.modulus, vec![1, 0, 1]);
    }
}
