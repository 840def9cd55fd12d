//! Sweep driver: walk (q, n) pairs, enumerate candidate defining sets
//! with a long-enough run, keep the dual-containing ones, and build a
//! report row for each resulting quantum code.
//!
//! Output order is fully deterministic — ascending (q, n, reps) — and
//! independent of the thread count: pairs fan out across threads but
//! results are merged back in pair order.

use serde::{Deserialize, Serialize};

use crate::cosets::{self, DefiningSet};
use crate::css;
use crate::cyclic::{self, CyclicCode};
use crate::field::{self, FieldError, CARDINALITY_CAP};
use crate::nt;
use crate::report::{ReportRow, RowStatus};

/// What to sweep and how hard to try on each hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    /// Field orders; each must be a prime power >= 3.
    pub q_values: Vec<u64>,
    /// Inclusive length range.
    pub n_range: (u64, u64),
    /// Keep defining sets whose longest circular run is at least this.
    pub min_run: u64,
    /// Word budget for distance enumeration per code.
    pub budget: u64,
    /// 1 = single cosets, 2 = also unions of two cosets.
    pub union_limit: u8,
}

impl ScanConfig {
    pub fn new(q_values: Vec<u64>, n_range: (u64, u64), min_run: u64, budget: u64, union_limit: u8) -> Self {
        ScanConfig { q_values, n_range, min_run, budget, union_limit }
    }
}

/// Runs the sweep. Fails fast on a malformed config (bad q, bad
/// union limit); per-pair trouble (extension past the cardinality cap)
/// becomes a Skipped row instead.
pub fn scan(config: &ScanConfig) -> Result<Vec<ReportRow>, FieldError> {
    assert!(
        config.union_limit == 1 || config.union_limit == 2,
        "union_limit must be 1 or 2"
    );
    let mut qs = config.q_values.clone();
    qs.sort_unstable();
    qs.dedup();
    for &q in &qs {
        field::field_for_order(q)?;
    }
    let mut pairs = Vec::new();
    for &q in &qs {
        for n in config.n_range.0.max(2)..=config.n_range.1 {
            if nt::gcd(q, n) == 1 {
                pairs.push((q, n));
            }
        }
    }

    #[cfg(feature = "parallel")]
    let rows: Vec<Vec<ReportRow>> = {
        use rayon::prelude::*;
        pairs.par_iter().map(|&(q, n)| scan_pair(config, q, n)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Vec<ReportRow>> = pairs.iter().map(|&(q, n)| scan_pair(config, q, n)).collect();

    Ok(rows.into_iter().flatten().collect())
}

/// All candidate defining sets for one (q, n): single cosets, plus
/// two-coset unions when asked, filtered by run length and dual
/// containment. Candidates come back ordered by their rep lists.
pub fn candidates(q: u64, n: u64, min_run: u64, union_limit: u8) -> Vec<DefiningSet> {
    let cosets = cosets::all_cosets(q, n).expect("caller checked gcd(q, n) = 1");
    let mut out = Vec::new();
    let keep = |t: &DefiningSet| {
        t.len() < n && t.run().len >= min_run && cyclic::is_dual_containing(t)
    };
    for c in &cosets {
        let t = DefiningSet::from_cosets(q, n, std::slice::from_ref(c));
        if keep(&t) {
            out.push(t);
        }
    }
    if union_limit >= 2 {
        for (i, a) in cosets.iter().enumerate() {
            for b in &cosets[i + 1..] {
                let t = DefiningSet::from_cosets(q, n, &[a.clone(), b.clone()]);
                if keep(&t) {
                    out.push(t);
                }
            }
        }
    }
    out.sort_by(|a, b| a.reps().cmp(b.reps()));
    out
}

fn scan_pair(config: &ScanConfig, q: u64, n: u64) -> Vec<ReportRow> {
    // the whole pair needs GF(q^m); give it one Skipped row if that
    // overflows the cap
    let m = match cosets::multiplicative_order(q, n) {
        Ok(m) => m,
        Err(_) => return Vec::new(),
    };
    if pow_overflows(q, m) {
        return vec![ReportRow::failure(
            q,
            n,
            Vec::new(),
            RowStatus::Skipped,
            format!("q^m = {q}^{m} exceeds the field cardinality cap"),
        )];
    }
    let field = field::field_for_order(q).expect("orders validated up front");
    let mut rows = Vec::new();
    for t in candidates(q, n, config.min_run, config.union_limit) {
        let reps = t.reps().to_vec();
        match build_and_record(&field, &t, config.budget) {
            Ok(row) => rows.push(row),
            Err(e) => rows.push(ReportRow::failure(q, n, reps, RowStatus::Failed, e)),
        }
    }
    rows
}

fn build_and_record(
    field: &field::FieldContext,
    t: &DefiningSet,
    budget: u64,
) -> Result<ReportRow, String> {
    let code: CyclicCode = cyclic::build_code(field, t).map_err(|e| e.to_string())?;
    let rec = css::css_construct(&code, budget).map_err(|e| e.to_string())?;
    Ok(ReportRow::from_record(
        &rec,
        t.elements().iter().copied().collect(),
        code.generator().coeffs().to_vec(),
        field.descriptor(),
    ))
}

fn pow_overflows(q: u64, m: u64) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..m {
        acc = match acc.checked_mul(q as u128) {
            Some(v) if v < CARDINALITY_CAP => v,
            _ => return true,
        };
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_filtering() {
        // mod 11 over q=5 with min_run 3: C_1 and its mirror C_2 carry
        // runs, both are disjoint from their own negations
        let c = candidates(5, 11, 3, 1);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].reps(), &[1]);
        assert_eq!(c[1].reps(), &[2]);
        // mod 4 over q=3 nothing is dual-containing
        assert!(candidates(3, 4, 1, 2).is_empty());
    }

    #[test]
    fn pair_unions_show_up() {
        // C_2 u C_3 over q=27 mod 35 has the run {2,3,4} (len 3)
        let c = candidates(27, 35, 3, 2);
        assert!(c.iter().any(|t| t.reps() == [2, 3]));
        // with union_limit 1 it cannot appear
        let singles = candidates(27, 35, 3, 1);
        assert!(singles.iter().all(|t| t.reps().len() == 1));
    }

    #[test]
    fn sweep_is_deterministic_and_ordered() {
        let config = ScanConfig::new(vec![5, 3, 5], (2, 13), 2, 50_000, 1);
        let a = scan(&config).unwrap();
        let b = scan(&config).unwrap();
        assert_eq!(a, b);
        let keys: Vec<(u64, u64, Vec<u64>)> =
            a.iter().map(|r| (r.q, r.n, r.reps.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // the length-11 hit must be in there with an exact distance
        let hit = a.iter().find(|r| (r.q, r.n) == (5, 11) && r.reps == [1]).unwrap();
        assert_eq!(hit.status, RowStatus::Ok);
        assert_eq!(hit.k_q, 1);
        assert_eq!(hit.d, 5);
        assert_eq!(hit.distance_kind, "exact");
    }

    #[test]
    fn cap_overflow_becomes_a_skipped_row() {
        // ord_100(3) = 20 and 3^20 is fine; ord_121(3) = 5; pick a pair
        // that really overflows: q = 31, n = 97 has ord 48, 31^48 >> cap
        let config = ScanConfig::new(vec![31], (97, 97), 2, 1_000, 1);
        let rows = scan(&config).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].status, RowStatus::Skipped);
        assert!(rows[0].note.contains("cardinality cap"));
    }

    #[test]
    fn bad_q_is_rejected() {
        let config = ScanConfig::new(vec![6], (2, 5), 1, 100, 1);
        assert!(scan(&config).is_err());
    }
}
