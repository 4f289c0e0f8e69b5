//! Small number-theoretic helpers over `Z_n`.

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient. `totient(1) == 1`.
pub fn totient(n: usize) -> usize {
    assert!(n >= 1, "totient is defined for n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Smallest prime dividing `m`, or `None` when `m < 2`.
pub fn least_prime_factor(m: usize) -> Option<usize> {
    if m < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            return Some(p);
        }
        p += 1;
    }
    Some(m)
}

/// Units of `Z_n` in ascending order (`1 <= i < n`, `gcd(i, n) = 1`).
pub fn units(n: usize) -> Vec<usize> {
    (1..n).filter(|&i| gcd(i, n) == 1).collect()
}

/// Splits `n` as `2^k * m` with `m` odd.
pub fn split_two_power(n: usize) -> (u32, usize) {
    assert!(n > 0);
    let k = n.trailing_zeros();
    (k, n >> k)
}

/// Returns `(p, k)` when `n = p^k` for a prime `p`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    let p = least_prime_factor(n)?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: count units by brute-force gcd.
    fn totient_brute(n: usize) -> usize {
        if n == 1 {
            return 1;
        }
        (1..n).filter(|&i| gcd(i, n) == 1).count()
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(16), 8);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(24), 8);
        for n in 1..300 {
            assert_eq!(totient(n), totient_brute(n), "n = {n}");
        }
    }

    #[test]
    fn least_prime_factor_values() {
        assert_eq!(least_prime_factor(3), Some(3));
        assert_eq!(least_prime_factor(15), Some(3));
        assert_eq!(least_prime_factor(49), Some(7));
        assert_eq!(least_prime_factor(1), None);
        assert_eq!(least_prime_factor(0), None);
    }

    #[test]
    fn factor_shapes() {
        assert_eq!(split_two_power(24), (3, 3));
        assert_eq!(split_two_power(9), (0, 9));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(units(10), vec![1, 3, 7, 9]);
    }
}
