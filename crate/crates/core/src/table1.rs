//! The published 14-row table of quantum codes this toolkit
//! reproduces, and the machinery that rebuilds and checks every row.
//!
//! Two rows carry no explicit defining set in the source and are
//! rediscovered by the single-coset scan. Two documented discrepancies
//! are expected and flagged rather than patched over:
//!
//! * row 9 ([[63, 39, >= 4]] over GF(11)): the published pair
//!   C_43 u C_20 is a mirror pair (-C_43 = C_20), so the union equals
//!   its own negation and the CSS construction refuses it outright; on
//!   top of that its longest run is 2, certifying only d >= 3. The row
//!   is emitted with the published dimensions and both flags. (The
//!   published parameters are attainable: a two-coset scan finds
//!   C_1 u C_3, whose union contains {23, 24, 25} and is disjoint from
//!   its negation.)
//! * row 14 (GF(64), n = 73): the published listing of C_14 contains
//!   30, which actually sits in C_21; the computed coset is
//!   {14, 20, 39}.

use crate::cosets::DefiningSet;
use crate::css;
use crate::cyclic;
use crate::field;
use crate::report::{ReportRow, RowStatus};
use crate::scan;

/// One published row: claimed parameters, the published defining-set
/// representatives (None = rediscovered by scanning), any published
/// element listings, and the discrepancies we expect to find.
#[derive(Debug)]
pub struct Table1Entry {
    pub q: u64,
    pub n: u64,
    pub k_q: u64,
    pub d: u64,
    pub reps: Option<&'static [u64]>,
    pub printed_sets: &'static [(u64, &'static [u64])],
    pub expect_short_bound: bool,
    pub expect_set_mismatch: bool,
    pub expect_not_containing: bool,
}

pub static TABLE1: [Table1Entry; 14] = [
    Table1Entry {
        q: 5,
        n: 11,
        k_q: 1,
        d: 4,
        reps: Some(&[1]),
        printed_sets: &[(1, &[1, 5, 3, 4, 9])],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 17,
        n: 19,
        k_q: 1,
        d: 5,
        reps: Some(&[1]),
        printed_sets: &[(1, &[1, 17, 4, 11, 16, 6, 7, 5, 9])],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 13,
        n: 35,
        k_q: 27,
        d: 3,
        reps: None,
        printed_sets: &[],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 27,
        n: 35,
        k_q: 27,
        d: 3,
        reps: Some(&[3]),
        printed_sets: &[(3, &[3, 11, 17, 4])],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 27,
        n: 35,
        k_q: 19,
        d: 4,
        reps: Some(&[2, 3]),
        printed_sets: &[],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 32,
        n: 51,
        k_q: 35,
        d: 3,
        reps: None,
        printed_sets: &[],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 9,
        n: 61,
        k_q: 51,
        d: 3,
        reps: Some(&[8]),
        printed_sets: &[(8, &[8, 11, 38, 37, 28])],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 11,
        n: 63,
        k_q: 51,
        d: 3,
        reps: Some(&[43]),
        printed_sets: &[],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 11,
        n: 63,
        k_q: 39,
        d: 4,
        reps: Some(&[43, 20]),
        printed_sets: &[],
        expect_short_bound: true,
        expect_set_mismatch: false,
        expect_not_containing: true,
    },
    Table1Entry {
        q: 23,
        n: 63,
        k_q: 51,
        d: 3,
        reps: Some(&[4]),
        printed_sets: &[],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 23,
        n: 63,
        k_q: 45,
        d: 4,
        reps: Some(&[4, 27]),
        printed_sets: &[],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 29,
        n: 67,
        k_q: 61,
        d: 3,
        reps: Some(&[12]),
        printed_sets: &[(12, &[12, 13, 42])],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 64,
        n: 73,
        k_q: 67,
        d: 3,
        reps: Some(&[21]),
        printed_sets: &[(21, &[22, 21, 30])],
        expect_short_bound: false,
        expect_set_mismatch: false,
        expect_not_containing: false,
    },
    Table1Entry {
        q: 64,
        n: 73,
        k_q: 61,
        d: 4,
        reps: Some(&[14, 21]),
        printed_sets: &[(14, &[14, 20, 30])],
        expect_short_bound: false,
        expect_set_mismatch: true,
        expect_not_containing: false,
    },
];

/// Result of rebuilding one row.
#[derive(Debug)]
pub struct Table1Outcome {
    /// 1-based row number.
    pub index: usize,
    pub claimed_k_q: u64,
    pub claimed_d: u64,
    pub row: ReportRow,
    /// Discrepancies found while checking.
    pub flags: Vec<String>,
    /// No discrepancies at all.
    pub verified: bool,
    /// Discrepancies are exactly the documented ones.
    pub as_documented: bool,
}

/// Rebuilds all 14 rows under the given distance budget.
pub fn reproduce_table1(budget: u64) -> Vec<Table1Outcome> {
    TABLE1
        .iter()
        .enumerate()
        .map(|(i, entry)| reproduce_entry(i + 1, entry, budget))
        .collect()
}

/// Every row either verified outright or flagged exactly as
/// documented.
pub fn all_as_documented(outcomes: &[Table1Outcome]) -> bool {
    outcomes.iter().all(|o| o.verified || o.as_documented)
}

fn reproduce_entry(index: usize, entry: &Table1Entry, budget: u64) -> Table1Outcome {
    let mut flags = Vec::new();

    let defining = match entry.reps {
        Some(reps) => DefiningSet::from_reps(entry.q, entry.n, reps)
            .expect("published representatives are valid residues"),
        None => {
            // rediscover: first single coset whose run supports the
            // claimed distance and which is disjoint from its negation
            match scan::candidates(entry.q, entry.n, entry.d - 1, 1).into_iter().next() {
                Some(t) => t,
                None => {
                    flags.push("no candidate defining set found".to_string());
                    return Table1Outcome {
                        index,
                        claimed_k_q: entry.k_q,
                        claimed_d: entry.d,
                        row: ReportRow::failure(
                            entry.q,
                            entry.n,
                            Vec::new(),
                            RowStatus::Failed,
                            "scan found no defining set".to_string(),
                        ),
                        as_documented: false,
                        verified: false,
                        flags,
                    };
                }
            }
        }
    };

    // published element listings, compared as sets
    for (rep, printed) in entry.printed_sets {
        let computed = crate::cosets::cyclotomic_coset(*rep, entry.q, entry.n)
            .expect("published cosets have valid representatives");
        let mut want = printed.to_vec();
        want.sort_unstable();
        if computed.sorted() != want {
            flags.push(format!(
                "published C_{rep} = {{{}}} but computed {{{}}}",
                join(printed),
                join(&computed.sorted()),
            ));
        }
    }

    let f = field::field_for_order(entry.q).expect("published orders are prime powers");
    let code = cyclic::build_code(&f, &defining).expect("published sets build");
    let explicit = code
        .explicit_dual_containment_check()
        .expect("containment check runs on built codes");
    let containing = code.dual_containing() && explicit;
    if !containing {
        flags.push("not dual-containing: the set meets its own negation".to_string());
    }

    // With containment the CSS construction supplies the record; without
    // it there is no quantum code, so the row carries the published
    // dimensions (k_q = n - 2|T|) and the bare BCH bound, marked Failed.
    let (row, got_k_q, got_d) = if containing {
        let rec = css::css_construct(&code, budget).expect("dual-containing codes construct");
        let row = ReportRow::from_record(
            &rec,
            defining.elements().iter().copied().collect(),
            code.generator().coeffs().to_vec(),
            f.descriptor(),
        );
        (row, rec.k_q, rec.claim.d)
    } else {
        let k_q = entry.n - 2 * defining.len();
        let delta = code.delta();
        let mut row = ReportRow::failure(
            entry.q,
            entry.n,
            defining.reps().to_vec(),
            RowStatus::Failed,
            String::new(),
        );
        row.defining_set = defining.elements().iter().copied().collect();
        row.classical_k = code.k();
        row.k_q = k_q;
        row.delta = delta;
        row.distance_kind = "lower_bound".to_string();
        row.distance_method = "bch".to_string();
        row.d = delta;
        row.pure_to = delta;
        row.generator = code.generator().coeffs().to_vec();
        row.field = Some(f.descriptor());
        (row, k_q, delta)
    };

    if got_k_q != entry.k_q {
        flags.push(format!(
            "parameters [[{}, {got_k_q}]]_{} do not match the published [[{}, {}]]_{}",
            entry.n, entry.q, entry.n, entry.k_q, entry.q
        ));
    }
    if got_d < entry.d {
        flags.push(format!(
            "certified d >= {got_d} falls short of the published d >= {}",
            entry.d
        ));
    }

    let mut row = row;
    row.note = flags.join("; ");
    let verified = flags.is_empty();
    let as_documented = expected_flags_only(entry, &flags);
    Table1Outcome {
        index,
        claimed_k_q: entry.k_q,
        claimed_d: entry.d,
        row,
        flags,
        verified,
        as_documented,
    }
}

fn expected_flags_only(entry: &Table1Entry, flags: &[String]) -> bool {
    let expected = entry.expect_short_bound as usize
        + entry.expect_set_mismatch as usize
        + entry.expect_not_containing as usize;
    if flags.len() != expected {
        return false;
    }
    let mut ok = true;
    if entry.expect_short_bound {
        ok &= flags.iter().any(|f| f.contains("falls short"));
    }
    if entry.expect_set_mismatch {
        ok &= flags.iter().any(|f| f.contains("but computed"));
    }
    if entry.expect_not_containing {
        ok &= flags.iter().any(|f| f.contains("not dual-containing"));
    }
    ok
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_is_consistent() {
        assert_eq!(TABLE1.len(), 14);
        for e in &TABLE1 {
            // claimed dimensions are consistent with the rep sizes
            if let Some(reps) = e.reps {
                let t = DefiningSet::from_reps(e.q, e.n, reps).unwrap();
                assert_eq!(e.n - 2 * t.len(), e.k_q, "q={} n={}", e.q, e.n);
            }
        }
    }

    #[test]
    fn discovered_rows_resolve_to_the_expected_cosets() {
        let c13 = scan::candidates(13, 35, 2, 1);
        assert_eq!(c13[0].reps(), &[3]);
        assert_eq!(
            c13[0].elements().iter().copied().collect::<Vec<_>>(),
            vec![3, 4, 11, 17]
        );
        let c32 = scan::candidates(32, 51, 2, 1);
        assert_eq!(c32[0].reps(), &[1]);
        assert_eq!(
            c32[0].elements().iter().copied().collect::<Vec<_>>(),
            vec![1, 2, 4, 8, 13, 16, 26, 32]
        );
    }

    #[test]
    fn spot_check_three_rows() {
        // row 1 verifies clean
        let o = reproduce_entry(1, &TABLE1[0], 50_000);
        assert!(o.verified, "flags: {:?}", o.flags);
        assert_eq!(o.row.k_q, 1);
        assert_eq!(o.row.d, 5);
        // row 9 carries exactly the documented pair of flags: the
        // published pair is a mirror pair, and its run is too short
        let o = reproduce_entry(9, &TABLE1[8], 1_000);
        assert!(!o.verified);
        assert!(o.as_documented, "flags: {:?}", o.flags);
        assert_eq!(o.flags.len(), 2);
        assert_eq!(o.row.status, RowStatus::Failed);
        assert_eq!(o.row.k_q, 39);
        assert_eq!(o.row.delta, 3);
        // row 14 carries exactly the documented set mismatch
        let o = reproduce_entry(14, &TABLE1[13], 1_000);
        assert!(!o.verified);
        assert!(o.as_documented, "flags: {:?}", o.flags);
        assert_eq!(o.row.d, 4); // the construction itself is fine
    }
}
