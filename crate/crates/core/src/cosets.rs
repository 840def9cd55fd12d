//! q-cyclotomic cosets modulo n, consecutive-run detection, and set
//! negation. These drive both the BCH designed distance and the
//! dual-containment criterion.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("gcd({q}, {n}) != 1")]
    NotCoprime { q: u64, n: u64 },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("representative {x} is not a residue modulo {n}")]
    BadResidue { x: u64, n: u64 },
}

/// A maximal run of circularly consecutive residues; `len == 0` means
/// the empty run (start is then meaningless and reported as 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Run {
    pub start: u64,
    pub len: u64,
}

/// The orbit of a residue under multiplication by q modulo n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    n: u64,
    q: u64,
    rep: u64,
    orbit: Vec<u64>,
}

impl Coset {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Canonical representative: the minimum element.
    pub fn rep(&self) -> u64 {
        self.rep
    }

    /// Elements in orbit order {s, sq, sq^2, ...} starting from the
    /// canonical representative.
    pub fn orbit(&self) -> &[u64] {
        &self.orbit
    }

    pub fn cardinality(&self) -> u64 {
        self.orbit.len() as u64
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.orbit.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, x: u64) -> bool {
        self.orbit.contains(&x)
    }
}

/// A union of cosets (a subset of Z_n closed under multiplication by q)
/// with its derived BCH run data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    q: u64,
    reps: Vec<u64>,
    elements: BTreeSet<u64>,
    run: Run,
}

impl DefiningSet {
    /// Union of the cosets of the given representatives; duplicates
    /// (representatives landing in the same orbit) collapse.
    pub fn from_reps(q: u64, n: u64, reps: &[u64]) -> Result<Self, CosetError> {
        let mut cosets = Vec::new();
        for &r in reps {
            let c = cyclotomic_coset(r, q, n)?;
            if !cosets.iter().any(|e: &Coset| e.rep() == c.rep()) {
                cosets.push(c);
            }
        }
        cosets.sort_by_key(Coset::rep);
        Ok(Self::from_cosets(q, n, &cosets))
    }

    /// Union of already-computed cosets (assumed pairwise distinct).
    pub fn from_cosets(q: u64, n: u64, cosets: &[Coset]) -> Self {
        let mut reps: Vec<u64> = cosets.iter().map(Coset::rep).collect();
        reps.sort_unstable();
        let elements: BTreeSet<u64> =
            cosets.iter().flat_map(|c| c.orbit().iter().copied()).collect();
        let run = longest_circular_run(&elements, n);
        DefiningSet { n, q, reps, elements, run }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn run(&self) -> Run {
        self.run
    }

    pub fn len(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains(&x)
    }
}

/// Smallest m >= 1 with q^m = 1 (mod n); requires n >= 2 and gcd = 1.
pub fn multiplicative_order(q: u64, n: u64) -> Result<u64, CosetError> {
    check_coprime(q, n)?;
    if n < 2 {
        return Err(CosetError::ZeroModulus);
    }
    let q0 = q % n;
    let mut t = q0;
    let mut m = 1u64;
    while t != 1 {
        t = nt::mulmod(t, q0, n);
        m += 1;
    }
    Ok(m)
}

/// The orbit of x under multiplication by q mod n, canonical
/// representative = minimum element.
pub fn cyclotomic_coset(x: u64, q: u64, n: u64) -> Result<Coset, CosetError> {
    check_coprime(q, n)?;
    if x >= n {
        return Err(CosetError::BadResidue { x, n });
    }
    if n == 1 {
        return Ok(Coset { n, q, rep: 0, orbit: vec![0] });
    }
    let mut orbit = vec![x];
    let mut t = nt::mulmod(x, q % n, n);
    while t != x {
        orbit.push(t);
        t = nt::mulmod(t, q % n, n);
    }
    let rep = *orbit.iter().min().unwrap();
    let pos = orbit.iter().position(|&e| e == rep).unwrap();
    orbit.rotate_left(pos);
    Ok(Coset { n, q, rep, orbit })
}

/// The complete partition of Z_n into q-cosets, sorted by canonical
/// representative.
pub fn all_cosets(q: u64, n: u64) -> Result<Vec<Coset>, CosetError> {
    check_coprime(q, n)?;
    if n == 1 {
        return Ok(vec![Coset { n, q, rep: 0, orbit: vec![0] }]);
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let c = cyclotomic_coset(s, q, n)?;
        for &e in c.orbit() {
            seen[e as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Longest run of circularly consecutive residues contained in T
/// (length n if T = Z_n, 0 if empty); ties broken by smallest start.
pub fn longest_circular_run(t: &BTreeSet<u64>, n: u64) -> Run {
    if t.is_empty() {
        return Run { start: 0, len: 0 };
    }
    if t.len() as u64 == n {
        return Run { start: 0, len: n };
    }
    // walk the sorted elements and stitch maximal linear stretches,
    // then join the stretch ending at n-1 to the one starting at 0
    let sorted: Vec<u64> = t.iter().copied().collect();
    let mut stretches: Vec<(u64, u64)> = Vec::new(); // (start, len)
    for &x in &sorted {
        match stretches.last_mut() {
            Some((s, l)) if *s + *l == x => *l += 1,
            _ => stretches.push((x, 1)),
        }
    }
    let mut wrap: Option<(u64, u64)> = None;
    if stretches.len() >= 2 {
        let (fs, fl) = stretches[0];
        let &(ls, ll) = stretches.last().unwrap();
        if fs == 0 && ls + ll == n {
            wrap = Some((ls, ll + fl));
        }
    }
    let mut best = Run { start: 0, len: 0 };
    let mut consider = |start: u64, len: u64| {
        if len > best.len || (len == best.len && start < best.start) {
            best = Run { start, len };
        }
    };
    for &(s, l) in &stretches {
        consider(s, l);
    }
    if let Some((s, l)) = wrap {
        consider(s, l);
    }
    best
}

/// {(n - t) mod n : t in T}.
pub fn negate_set(t: &BTreeSet<u64>, n: u64) -> BTreeSet<u64> {
    t.iter().map(|&x| (n - x) % n).collect()
}

fn check_coprime(q: u64, n: u64) -> Result<(), CosetError> {
    if n == 0 {
        return Err(CosetError::ZeroModulus);
    }
    if nt::gcd(q, n) != 1 {
        return Err(CosetError::NotCoprime { q, n });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn orders_match_worked_examples() {
        assert_eq!(multiplicative_order(5, 11).unwrap(), 5);
        assert_eq!(multiplicative_order(17, 19).unwrap(), 9);
        assert_eq!(multiplicative_order(4, 3).unwrap(), 1);
        assert_eq!(multiplicative_order(9, 61).unwrap(), 5);
        assert_eq!(multiplicative_order(29, 67).unwrap(), 3);
        assert_eq!(multiplicative_order(64, 73).unwrap(), 3);
        assert_eq!(multiplicative_order(32, 51).unwrap(), 8);
        assert_eq!(
            multiplicative_order(4, 2),
            Err(CosetError::NotCoprime { q: 4, n: 2 })
        );
    }

    #[test]
    fn cosets_in_orbit_order() {
        let c = cyclotomic_coset(1, 5, 11).unwrap();
        assert_eq!(c.orbit(), &[1, 5, 3, 4, 9]);
        assert_eq!(c.rep(), 1);
        assert_eq!(c.cardinality(), 5);

        let c8 = cyclotomic_coset(8, 9, 61).unwrap();
        assert_eq!(c8.orbit(), &[8, 11, 38, 37, 28]);

        let zero = cyclotomic_coset(0, 7, 13).unwrap();
        assert_eq!(zero.orbit(), &[0]);
    }

    #[test]
    fn coset_is_rotated_to_canonical_rep() {
        // start the orbit off-canonically: 4 lies in the coset of 1
        let c = cyclotomic_coset(4, 5, 11).unwrap();
        assert_eq!(c.rep(), 1);
        assert_eq!(c.orbit()[0], 1);
        assert_eq!(c.sorted(), vec![1, 3, 4, 5, 9]);
    }

    #[test]
    fn partition_of_z11() {
        let cs = all_cosets(5, 11).unwrap();
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0].sorted(), vec![0]);
        assert_eq!(cs[1].sorted(), vec![1, 3, 4, 5, 9]);
        assert_eq!(cs[2].sorted(), vec![2, 6, 7, 8, 10]);
    }

    #[test]
    fn partition_contains_printed_coset_mod_67() {
        let cs = all_cosets(29, 67).unwrap();
        assert!(cs.iter().any(|c| c.sorted() == vec![12, 13, 42]));
    }

    #[test]
    fn trivial_modulus_partition() {
        let cs = all_cosets(7, 1).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].orbit(), &[0]);
    }

    #[test]
    fn partitions_are_exact_for_small_moduli() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            for n in 2..=500u64 {
                if nt::gcd(q, n) != 1 {
                    continue;
                }
                let cs = all_cosets(q, n).unwrap();
                let mut seen = vec![0u32; n as usize];
                for c in &cs {
                    // closure under multiplication by q
                    for &e in c.orbit() {
                        seen[e as usize] += 1;
                        assert!(c.contains(nt::mulmod(e, q % n, n)));
                    }
                    // orbit length divides ord_n(q)
                    assert_eq!(multiplicative_order(q, n).unwrap() % c.cardinality(), 0);
                }
                assert!(seen.iter().all(|&x| x == 1), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn runs_match_examples() {
        assert_eq!(
            longest_circular_run(&set(&[1, 3, 4, 5, 9]), 11),
            Run { start: 3, len: 3 }
        );
        assert_eq!(
            longest_circular_run(&set(&[12, 13, 42]), 67),
            Run { start: 12, len: 2 }
        );
        assert_eq!(longest_circular_run(&set(&[]), 9), Run { start: 0, len: 0 });
    }

    #[test]
    fn runs_wrap_around() {
        assert_eq!(
            longest_circular_run(&set(&[0, 1, 4]), 5),
            Run { start: 4, len: 3 }
        );
        let full: BTreeSet<u64> = (0..6).collect();
        assert_eq!(longest_circular_run(&full, 6), Run { start: 0, len: 6 });
        // tie at length 2: smallest start wins
        assert_eq!(
            longest_circular_run(&set(&[2, 3, 6, 7]), 10),
            Run { start: 2, len: 2 }
        );
    }

    #[test]
    fn runs_agree_with_brute_force() {
        // oracle: for every start, count consecutive membership
        fn brute(t: &BTreeSet<u64>, n: u64) -> Run {
            if t.len() as u64 == n {
                return Run { start: 0, len: n };
            }
            let mut best = Run { start: 0, len: 0 };
            for s in 0..n {
                let mut l = 0;
                while l < n && t.contains(&((s + l) % n)) {
                    l += 1;
                }
                if l > best.len || (l == best.len && s < best.start) {
                    best = Run { start: s, len: l };
                }
            }
            best
        }
        let mut state = 0x1234_5678u64;
        for n in [2u64, 3, 7, 24, 60, 101, 255, 500] {
            for density in [3u64, 7] {
                let mut t = BTreeSet::new();
                for x in 0..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(17);
                    if state % 10 < density {
                        t.insert(x);
                    }
                }
                assert_eq!(longest_circular_run(&t, n), brute(&t, n), "n={n}");
            }
        }
    }

    #[test]
    fn negation_maps_cosets_to_cosets() {
        let c1 = set(&[1, 3, 4, 5, 9]);
        assert_eq!(negate_set(&c1, 11), set(&[2, 6, 7, 8, 10]));
        assert_eq!(negate_set(&set(&[0]), 9), set(&[0]));
        let zn: BTreeSet<u64> = (0..12).collect();
        assert_eq!(negate_set(&zn, 12), zn);
        // orbit property over a sweep
        for q in [3u64, 5, 8] {
            for n in [7u64, 11, 20, 91] {
                if nt::gcd(q, n) != 1 {
                    continue;
                }
                let all = all_cosets(q, n).unwrap();
                for c in &all {
                    let neg = negate_set(&c.orbit().iter().copied().collect(), n);
                    let found = all
                        .iter()
                        .any(|d| d.orbit().len() == neg.len() && d.orbit().iter().all(|e| neg.contains(e)));
                    assert!(found, "negation of a coset is a coset");
                }
            }
        }
    }

    #[test]
    fn defining_set_union_and_dedup() {
        let t = DefiningSet::from_reps(5, 11, &[1, 4]).unwrap(); // same coset twice
        assert_eq!(t.reps(), &[1]);
        assert_eq!(t.len(), 5);
        assert_eq!(t.run(), Run { start: 3, len: 3 });

        let u = DefiningSet::from_reps(64, 73, &[14, 21]).unwrap();
        assert_eq!(u.reps(), &[14, 21]);
        assert_eq!(u.len(), 6);
        // 20,21,22 sit inside the union
        assert_eq!(u.run(), Run { start: 20, len: 3 });
    }
}
