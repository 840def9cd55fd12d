//! Shared integer number theory: gcd, modular arithmetic, deterministic
//! Miller-Rabin, and Pollard rho factorization for 64-bit operands.

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub(crate) fn powmod(mut b: u64, mut e: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, n);
        }
        b = mulmod(b, b, n);
        e >>= 1;
    }
    acc
}

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin; the witness set is exact for all u64.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in MR_WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Nontrivial factor of an odd composite via Pollard rho (Floyd cycle).
fn rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let step = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = step(x);
            y = step(step(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted (prime, exponent) pairs.
pub(crate) fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut stack = vec![n];
    while let Some(mut m) = stack.pop() {
        if m < 2 {
            continue;
        }
        while m % 2 == 0 {
            push_prime(&mut out, 2);
            m /= 2;
        }
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push_prime(&mut out, m);
        } else {
            let d = rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    out.sort_unstable();
    out
}

fn push_prime(out: &mut Vec<(u64, u32)>, p: u64) {
    if let Some(e) = out.iter_mut().find(|(q, _)| *q == p) {
        e.1 += 1;
    } else {
        out.push((p, 1));
    }
}

pub(crate) fn distinct_primes(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_known_values() {
        let primes = [2u64, 3, 5, 7, 11, 13, 19, 61, 67, 73, 97, 2_147_483_647];
        for p in primes {
            assert!(is_prime(p), "{p} is prime");
        }
        let composites = [1u64, 4, 9, 15, 35, 51, 63, 91, 3215031751, 3825123056546413051];
        for c in composites {
            assert!(!is_prime(c), "{c} is composite");
        }
    }

    #[test]
    fn factor_recovers_products() {
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factor(3124), vec![(2, 2), (11, 1), (71, 1)]); // 5^5 - 1
        assert_eq!(factor(97), vec![(97, 1)]);
        let n = 600_851_475_143u64;
        let f = factor(n);
        let back: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(back, n);
        assert!(f.iter().all(|(p, _)| is_prime(*p)));
    }

    #[test]
    fn distinct_prime_lists() {
        assert_eq!(distinct_primes(4), vec![2]);
        assert_eq!(distinct_primes(11), vec![11]);
        assert_eq!(distinct_primes(60), vec![2, 3, 5]);
    }

    #[test]
    fn powmod_matches_naive() {
        for b in 0..12u64 {
            for e in 0..10u64 {
                let naive = (0..e).fold(1u64, |acc, _| acc * b % 1009);
                assert_eq!(powmod(b, e, 1009), naive);
            }
        }
    }
}
