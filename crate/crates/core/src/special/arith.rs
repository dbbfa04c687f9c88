//! Bernoulli numbers, divisor sums, Eulerian numbers and factorials.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::rational::Rational;

pub fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n as u64 {
        f *= i;
    }
    f
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    for i in 0..k as u64 {
        num *= n as u64 - i;
    }
    num / factorial(k)
}

static BERNOULLI_CACHE: Mutex<Vec<Option<Rational>>> = Mutex::new(Vec::new());

/// Bernoulli number B_n in the v/(e^v − 1) convention, so B₁ = −1/2 and
/// B_odd = 0 for n ≥ 3. Computed by the recurrence
/// Σ_{j=0}^{n} C(n+1, j)·B_j = 0.
pub fn bernoulli(n: u32) -> Rational {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.len() <= n as usize {
        cache.resize(n as usize + 1, None);
    }
    if let Some(b) = &cache[n as usize] {
        return b.clone();
    }
    let mut row: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let value = match cache[m as usize].clone() {
            Some(v) => v,
            None => {
                if m == 0 {
                    Rational::one()
                } else {
                    let mut acc = Rational::zero();
                    for (j, b) in row.iter().enumerate() {
                        acc += Rational::from_integer(binomial(m + 1, j as u32)) * b;
                    }
                    -acc / Rational::from_integer(BigInt::from(m) + 1)
                }
            }
        };
        cache[m as usize] = Some(value.clone());
        row.push(value);
    }
    row[n as usize].clone()
}

/// Divisors of n in increasing order (n ≥ 1).
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// σ_k(n) = Σ_{d|n} d^k, exactly.
pub fn divisor_sigma(k: u32, n: u64) -> BigInt {
    assert!(n >= 1, "divisor sum needs n >= 1");
    divisors(n)
        .into_iter()
        .map(|d| BigInt::from(d).pow(k))
        .sum()
}

/// Eulerian numbers A(n, 0..n-1), the coefficients in
/// Σ_{m≥1} mⁿ xᵐ = Σ_j A(n, j)·x^{j+1} / (1−x)^{n+1}.
pub fn eulerian(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut row = vec![BigInt::one()];
    for m in 2..=n as usize {
        let mut next = vec![BigInt::zero(); m];
        for (j, value) in row.iter().enumerate() {
            next[j] += value * (j as u64 + 1);
            next[j + 1] += value * (m as u64 - 1 - j as u64);
        }
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::rat;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for n in [3u32, 5, 7, 9, 11, 13] {
            assert_eq!(bernoulli(n), rat(0, 1));
        }
    }

    #[test]
    fn sigma_values() {
        assert_eq!(divisor_sigma(1, 1), BigInt::from(1));
        assert_eq!(divisor_sigma(1, 2), BigInt::from(3));
        assert_eq!(divisor_sigma(3, 2), BigInt::from(9));
        assert_eq!(divisor_sigma(1, 6), BigInt::from(12));
        assert_eq!(divisor_sigma(5, 2), BigInt::from(33));
    }

    #[test]
    fn eulerian_rows() {
        assert_eq!(eulerian(1), vec![BigInt::from(1)]);
        assert_eq!(
            eulerian(3),
            vec![BigInt::from(1), BigInt::from(4), BigInt::from(1)]
        );
        // Row sums are n!.
        for n in 1..=8u32 {
            let sum: BigInt = eulerian(n).into_iter().sum();
            assert_eq!(sum, factorial(n));
        }
    }
}
