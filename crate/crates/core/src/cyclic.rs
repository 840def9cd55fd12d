//! Cyclic codes of length n over GF(q) cut out by defining sets.
//!
//! A defining set T (a union of q-cyclotomic cosets mod n) fixes the
//! generator polynomial g = prod_{i in T} (x - alpha^i), computed in
//! GF(q^m) with alpha a primitive n-th root of unity and m = ord_n(q);
//! Frobenius-closure of T makes every coefficient descend to GF(q).
//! The code is the ideal (g) in GF(q)[x]/(x^n - 1), has dimension
//! n - |T|, and the BCH bound reads off the longest circular run of T.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cosets::{self, Coset, CosetError, DefiningSet};
use crate::field::{self, extend_field, FieldContext, FieldElement, FieldError};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("set is not closed under multiplication by q: {x} * q escapes")]
    NotClosedUnderQ { x: u64 },
    #[error("expected a word of length {expected}, got {got}")]
    LengthMismatch { expected: u64, got: u64 },
    #[error("field has order {field_order} but the set expects q = {q}")]
    FieldOrderMismatch { field_order: u128, q: u64 },
    #[error("coefficient index {index} does not descend to the base field")]
    DescentFailed { index: u128 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Coset(#[from] CosetError),
}

/// Dense univariate polynomial over a fixed field, constant term
/// first, trailing zeros trimmed (the zero polynomial has no
/// coefficients). Coefficients are canonical element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldContext,
    coeffs: Vec<u128>,
}

impl Polynomial {
    pub fn new(field: &FieldContext, mut coeffs: Vec<u128>) -> Result<Self, FieldError> {
        for &c in &coeffs {
            field.element(c)?;
        }
        field::poly_trim(&mut coeffs);
        Ok(Polynomial { field: field.clone(), coeffs })
    }

    pub fn zero(field: &FieldContext) -> Self {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldContext) -> Self {
        Polynomial { field: field.clone(), coeffs: vec![1] }
    }

    /// x^n - 1 over the given field.
    pub fn x_n_minus_1(field: &FieldContext, n: u64) -> Self {
        let mut coeffs = vec![0u128; n as usize + 1];
        coeffs[0] = field.neg_idx(1);
        coeffs[n as usize] = 1;
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        let idx = self.coeffs.get(i).copied().unwrap_or(0);
        self.field.element(idx).expect("stored coefficients are valid")
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "polynomial fields differ");
        let mut out = vec![0u128; self.coeffs.len().max(other.coeffs.len())];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.field.add_idx(a, b);
        }
        field::poly_trim(&mut out);
        Polynomial { field: self.field.clone(), coeffs: out }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "polynomial fields differ");
        let coeffs = field::poly_mul(&self.field, &self.coeffs, &other.coeffs);
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// Quotient and remainder; the divisor need not be monic.
    pub fn divrem(&self, den: &Polynomial) -> (Polynomial, Polynomial) {
        assert_eq!(self.field, den.field, "polynomial fields differ");
        assert!(!den.is_zero(), "division by the zero polynomial");
        let f = &self.field;
        let dlen = den.coeffs.len();
        if self.coeffs.len() < dlen {
            return (Polynomial::zero(f), self.clone());
        }
        let lead_inv = f
            .inv_idx(*den.coeffs.last().unwrap())
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u128; rem.len() - dlen + 1];
        for sh in (0..=rem.len() - dlen).rev() {
            let top = rem[sh + dlen - 1];
            if top == 0 {
                continue;
            }
            let c = f.mul_idx(top, lead_inv);
            quot[sh] = c;
            for j in 0..dlen {
                let sub = f.mul_idx(c, den.coeffs[j]);
                rem[sh + j] = f.sub_idx(rem[sh + j], sub);
            }
        }
        field::poly_trim(&mut rem);
        field::poly_trim(&mut quot);
        (
            Polynomial { field: f.clone(), coeffs: quot },
            Polynomial { field: f.clone(), coeffs: rem },
        )
    }

    pub fn rem(&self, den: &Polynomial) -> Polynomial {
        self.divrem(den).1
    }

    /// Does self divide other exactly?
    pub fn divides(&self, other: &Polynomial) -> bool {
        other.rem(self).is_zero()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, at: &FieldElement) -> FieldElement {
        let f = &self.field;
        assert_eq!(f, at.context(), "evaluation point from another field");
        let mut acc = 0u128;
        for &c in self.coeffs.iter().rev() {
            acc = f.add_idx(f.mul_idx(acc, at.index()), c);
        }
        f.element(acc).expect("arithmetic stays in the field")
    }

    /// x^deg * p(1/x): the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Polynomial {
        let mut coeffs: Vec<u128> = self.coeffs.iter().rev().copied().collect();
        field::poly_trim(&mut coeffs);
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// Scales by the inverse of the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .field
            .inv_idx(*self.coeffs.last().unwrap())
            .expect("nonzero leading coefficient");
        let coeffs = self.coeffs.iter().map(|&c| self.field.mul_idx(c, inv)).collect();
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// x^j * self.
    pub fn shift(&self, j: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0u128; j];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { field: self.field.clone(), coeffs }
    }
}

/// A cyclic code together with the data the construction certifies:
/// its defining set, generator, dimension and BCH bound.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    field: FieldContext,
    n: u64,
    defining: DefiningSet,
    generator: Polynomial,
    k: u64,
    delta: u64,
    dual_containing: bool,
}

impl CyclicCode {
    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn defining(&self) -> &DefiningSet {
        &self.defining
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// BCH bound delta = longest circular run + 1: d >= delta.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// T and -T disjoint, i.e. the Euclidean dual is contained in the
    /// code.
    pub fn dual_containing(&self) -> bool {
        self.dual_containing
    }

    /// h = (x^n - 1) / g.
    pub fn check_polynomial(&self) -> Polynomial {
        let (h, r) = Polynomial::x_n_minus_1(&self.field, self.n).divrem(&self.generator);
        assert!(r.is_zero(), "generator must divide x^n - 1");
        h
    }

    /// Membership test: the word, read as a polynomial, is in the code
    /// iff the generator divides it.
    pub fn contains(&self, word: &[u128]) -> Result<bool, CodeError> {
        if word.len() as u64 != self.n {
            return Err(CodeError::LengthMismatch { expected: self.n, got: word.len() as u64 });
        }
        let p = Polynomial::new(&self.field, word.to_vec())?;
        Ok(self.generator.divides(&p))
    }

    /// The Euclidean dual: generator = monic reciprocal of the check
    /// polynomial, defining set Z_n minus -T.
    pub fn dual_code(&self) -> Result<CyclicCode, CodeError> {
        let n = self.n;
        let neg = cosets::negate_set(self.defining.elements(), n);
        // the dual of the full space (empty T) is the zero code with
        // defining set Z_n and generator x^n - 1; k = 0 is fine here
        // even though build_code refuses it as a primary construction
        let complement: BTreeSet<u64> = (0..n).filter(|x| !neg.contains(x)).collect();
        let dual_set = defining_set_from_elements(self.defining.q(), n, &complement)?;
        let gd = self.check_polynomial().reciprocal().monic();
        assert_eq!(
            gd.degree(),
            Some(dual_set.len() as usize),
            "dual generator degree must equal the dual defining set size"
        );
        Ok(CyclicCode {
            field: self.field.clone(),
            n,
            dual_containing: is_dual_containing(&dual_set),
            delta: dual_set.run().len + 1,
            k: n - self.k,
            generator: gd,
            defining: dual_set,
        })
    }

    /// Checks C^perp <= C word by word: every basis vector x^j * g^perp
    /// of the dual (j = 0 .. n-k-1) must be divisible by g.
    pub fn explicit_dual_containment_check(&self) -> Result<bool, CodeError> {
        let dual = self.dual_code()?;
        for j in 0..(self.n - self.k) as usize {
            let mut word = dual.generator.shift(j).coeffs().to_vec();
            word.resize(self.n as usize, 0);
            if !self.contains(&word)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Validates closure under multiplication by q and wraps the set.
pub fn defining_set_from_elements(
    q: u64,
    n: u64,
    elements: &BTreeSet<u64>,
) -> Result<DefiningSet, CodeError> {
    let mut reps = Vec::new();
    let mut seen = BTreeSet::new();
    for &x in elements {
        if x >= n {
            return Err(CosetError::BadResidue { x, n }.into());
        }
        if seen.contains(&x) {
            continue;
        }
        let coset = cosets::cyclotomic_coset(x, q, n)?;
        for &y in coset.orbit() {
            if !elements.contains(&y) {
                return Err(CodeError::NotClosedUnderQ { x });
            }
            seen.insert(y);
        }
        reps.push(coset.rep());
    }
    Ok(DefiningSet::from_reps(q, n, &reps)?)
}

/// T and -T disjoint.
pub fn is_dual_containing(defining: &DefiningSet) -> bool {
    let neg = cosets::negate_set(defining.elements(), defining.n());
    defining.elements().is_disjoint(&neg)
}

/// Generator polynomial over GF(q): the linear factors x - alpha^i are
/// multiplied in ascending i over GF(q^m), then every coefficient is
/// required to descend.
pub fn generator_polynomial(
    field: &FieldContext,
    defining: &DefiningSet,
) -> Result<Polynomial, CodeError> {
    let ext = splitting_field(field, defining.q(), defining.n())?;
    let alpha = ext.primitive_nth_root(defining.n())?;
    let indices: Vec<u64> = defining.elements().iter().copied().collect();
    let raw = linear_factor_product(&ext, &alpha, &indices)?;
    descend(field, &ext, raw)
}

/// Minimal polynomial over GF(q) of alpha^rep: the single-coset
/// generator.
pub fn minimal_polynomial(field: &FieldContext, coset: &Coset) -> Result<Polynomial, CodeError> {
    let ext = splitting_field(field, coset.q(), coset.n())?;
    let alpha = ext.primitive_nth_root(coset.n())?;
    let raw = linear_factor_product(&ext, &alpha, &coset.sorted())?;
    descend(field, &ext, raw)
}

/// Multiplies the minimal polynomials of every q-cyclotomic coset mod n
/// over GF(q) and compares against x^n - 1.
pub fn product_check(field: &FieldContext, n: u64) -> Result<bool, CodeError> {
    let q = field_order(field)?;
    let ext = splitting_field(field, q, n)?;
    let alpha = ext.primitive_nth_root(n)?;
    let mut product = Polynomial::one(field);
    for coset in cosets::all_cosets(q, n)? {
        let raw = linear_factor_product(&ext, &alpha, &coset.sorted())?;
        product = product.mul(&descend(field, &ext, raw)?);
    }
    Ok(product == Polynomial::x_n_minus_1(field, n))
}

/// Builds the cyclic code for a defining set, checking the generator
/// degree and divisibility into x^n - 1 on the way. T = Z_n gives the
/// zero code (g = x^n - 1, k = 0, delta = n + 1); it never passes the
/// dual-containment gate, so it cannot reach the quantum construction.
pub fn build_code(field: &FieldContext, defining: &DefiningSet) -> Result<CyclicCode, CodeError> {
    let q = field_order(field)?;
    if q != defining.q() {
        return Err(CodeError::FieldOrderMismatch { field_order: field.cardinality(), q: defining.q() });
    }
    let n = defining.n();
    let generator = generator_polynomial(field, defining)?;
    assert_eq!(
        generator.degree(),
        Some(defining.len() as usize),
        "generator degree must equal |T|"
    );
    assert!(
        generator.divides(&Polynomial::x_n_minus_1(field, n)),
        "generator must divide x^n - 1"
    );
    Ok(CyclicCode {
        field: field.clone(),
        n,
        k: n - defining.len(),
        delta: defining.run().len + 1,
        dual_containing: is_dual_containing(defining),
        generator,
        defining: defining.clone(),
    })
}

fn field_order(field: &FieldContext) -> Result<u64, CodeError> {
    u64::try_from(field.cardinality())
        .map_err(|_| CodeError::FieldOrderMismatch { field_order: field.cardinality(), q: 0 })
}

fn splitting_field(field: &FieldContext, q: u64, n: u64) -> Result<FieldContext, CodeError> {
    let order = field_order(field)?;
    if order != q {
        return Err(CodeError::FieldOrderMismatch { field_order: field.cardinality(), q });
    }
    let m = cosets::multiplicative_order(q, n)?;
    Ok(extend_field(field, m as u32)?)
}

fn linear_factor_product(
    ext: &FieldContext,
    alpha: &FieldElement,
    exponents: &[u64],
) -> Result<Vec<u128>, CodeError> {
    let mut g = vec![1u128];
    for &i in exponents {
        let root = ext.pow(alpha, i as u128)?.index();
        let mut next = vec![0u128; g.len() + 1];
        for (d, &gd) in g.iter().enumerate() {
            if gd == 0 {
                continue;
            }
            next[d + 1] = ext.add_idx(next[d + 1], gd);
            next[d] = ext.sub_idx(next[d], ext.mul_idx(root, gd));
        }
        g = next;
    }
    Ok(g)
}

/// Frobenius-closed products have base-field coefficients; in the
/// index encoding that is exactly `index < q`.
fn descend(field: &FieldContext, ext: &FieldContext, raw: Vec<u128>) -> Result<Polynomial, CodeError> {
    debug_assert!(ext.cardinality() >= field.cardinality());
    let cap = field.cardinality();
    let mut coeffs = Vec::with_capacity(raw.len());
    for c in raw {
        if c >= cap {
            return Err(CodeError::DescentFailed { index: c });
        }
        coeffs.push(c);
    }
    Ok(Polynomial::new(field, coeffs)?)
}
