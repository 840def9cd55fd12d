//! CSS construction over a dual-containing cyclic code.
//!
//! A cyclic [n, k]_q code C with C^perp <= C yields an
//! [[n, 2k - n, >= d(C)]]_q quantum code, pure to d(C). Both stabilizer
//! halves are the parity-check matrix of C, so the commutation
//! condition HX * HZ^T = 0 is exactly dual containment.

use thiserror::Error;

use crate::cyclic::{CodeError, CyclicCode};
use crate::distance::{self, DistanceError, DistanceMethod, VerdictKind};

#[derive(Debug, Error)]
pub enum CssError {
    #[error("the code does not contain its Euclidean dual")]
    NotDualContaining,
    #[error("2k - n = {0} is negative: no quantum code")]
    NonpositiveDimension(i64),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// The distance statement a record makes: exact value or certified
/// lower bound, with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceClaim {
    pub kind: VerdictKind,
    pub method: DistanceMethod,
    pub d: u64,
}

/// A constructed [[n, k_q, >= d]]_q code, plus the classical source
/// data and how far it sits from the Singleton bound.
#[derive(Debug, Clone)]
pub struct QuantumCodeRecord {
    pub q: u64,
    pub n: u64,
    pub k_q: u64,
    pub claim: DistanceClaim,
    /// Coset representatives of the classical defining set.
    pub defining_reps: Vec<u64>,
    pub classical_k: u64,
    /// BCH bound of the classical code.
    pub delta: u64,
    /// n + 2 - k_q - 2d with the claimed d; nonnegative by the
    /// quantum Singleton bound.
    pub qsb_defect: u64,
    /// The construction is pure to the claimed distance.
    pub pure_to: u64,
    /// Set when k_q = 0: the record describes a state, not a code.
    pub zero_dimensional: bool,
}

/// Both stabilizer halves; always identical here, kept separate so the
/// CSS shape is explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerMatrices {
    pub hx: Vec<Vec<u128>>,
    pub hz: Vec<Vec<u128>>,
}

/// 2k - n, rejecting negative results.
pub fn quantum_dimension(n: u64, k: u64) -> Result<u64, CssError> {
    let kq = 2 * k as i64 - n as i64;
    if kq < 0 {
        return Err(CssError::NonpositiveDimension(kq));
    }
    Ok(kq as u64)
}

/// n + 2 - k_q - 2d, the gap to the quantum Singleton bound.
pub fn qsb_defect(n: u64, k_q: u64, d: u64) -> i64 {
    n as i64 + 2 - k_q as i64 - 2 * d as i64
}

/// Runs the CSS construction: checks dual containment both by defining
/// sets and word by word, settles the distance under the budget, and
/// assembles the record.
pub fn css_construct(code: &CyclicCode, budget: u64) -> Result<QuantumCodeRecord, CssError> {
    if !code.dual_containing() || !code.explicit_dual_containment_check()? {
        return Err(CssError::NotDualContaining);
    }
    let n = code.n();
    let k_q = quantum_dimension(n, code.k())?;
    let verdict = distance::min_distance(code, budget)?;
    let defect = qsb_defect(n, k_q, verdict.d);
    assert!(defect >= 0, "Singleton bound violated: defect {defect}");
    Ok(QuantumCodeRecord {
        q: code.defining().q(),
        n,
        k_q,
        claim: DistanceClaim { kind: verdict.kind, method: verdict.method, d: verdict.d },
        defining_reps: code.defining().reps().to_vec(),
        classical_k: code.k(),
        delta: code.delta(),
        qsb_defect: defect as u64,
        pure_to: verdict.d,
        zero_dimensional: k_q == 0,
    })
}

/// The (n-k) x n stabilizer pair: rows are the cyclic shifts of the
/// dual generator, i.e. a parity-check matrix of C. Orthogonality
/// HX * HZ^T = 0 is verified entry by entry before returning.
pub fn stabilizer_matrices(code: &CyclicCode) -> Result<StabilizerMatrices, CssError> {
    if !code.dual_containing() {
        return Err(CssError::NotDualContaining);
    }
    let n = code.n() as usize;
    let rows = (code.n() - code.k()) as usize;
    let dual = code.dual_code()?;
    let f = code.field();
    let h: Vec<Vec<u128>> = (0..rows)
        .map(|j| {
            let mut row = dual.generator().shift(j).coeffs().to_vec();
            row.resize(n, 0);
            row
        })
        .collect();
    for (i, u) in h.iter().enumerate() {
        for v in &h[i..] {
            let mut acc = 0u128;
            for (a, b) in u.iter().zip(v) {
                acc = f.add_idx(acc, f.mul_idx(*a, *b));
            }
            assert_eq!(acc, 0, "stabilizer rows must be orthogonal");
        }
    }
    Ok(StabilizerMatrices { hz: h.clone(), hx: h })
}
