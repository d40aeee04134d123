//! The MacWilliams transform in exact integer arithmetic.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::code::{binomial, WeightDistribution};
use crate::error::{Error, Result};

/// Krawtchouk polynomial `K_j(i) = sum_l (-1)^l (q-1)^(j-l) C(i,l) C(n-i, j-l)`.
pub fn krawtchouk(n: usize, q: u32, j: usize, i: usize) -> BigInt {
    let q1 = BigInt::from(q - 1);
    let mut acc = BigInt::zero();
    for l in 0..=j.min(i) {
        if j - l > n - i {
            continue;
        }
        let term = BigInt::from(binomial(i, l)) * BigInt::from(binomial(n - i, j - l)) * num_traits::pow(q1.clone(), j - l);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Weight distribution of the dual of an `[n, k]_q` code with distribution `wd`.
///
/// Every output entry must come out as a nonnegative integer; anything else means the
/// input was not the distribution of a linear code.
pub fn macwilliams(wd: &WeightDistribution, n: usize, k: usize, q: u32) -> Result<WeightDistribution> {
    if wd.n() != n {
        return Err(Error::Inconsistent(format!("distribution has length {}, expected {n}", wd.n())));
    }
    let size = num_traits::pow(BigUint::from(q), k);
    if wd.total() != size {
        return Err(Error::Inconsistent(format!("distribution sums to {}, expected {q}^{k}", wd.total())));
    }
    if !wd.count(0).is_one() {
        return Err(Error::Inconsistent("A_0 must be 1".into()));
    }
    let support: Vec<(usize, BigInt)> = wd
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| (i, BigInt::from(a.clone())))
        .collect();
    let size = BigInt::from(size);
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let sum: BigInt = support.iter().map(|(i, a)| a * krawtchouk(n, q, j, *i)).sum();
        let (quot, rem) = sum.div_rem(&size);
        if !rem.is_zero() || quot.sign() == Sign::Minus {
            return Err(Error::MacWilliams { weight: j });
        }
        out.push(quot.to_biguint().expect("nonnegative"));
    }
    Ok(WeightDistribution::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_space_dualizes_to_zero_code() {
        // [3,3]_3: A_w = C(3,w) 2^w
        let wd = WeightDistribution::from_u64(&[1, 6, 12, 8]);
        let d = macwilliams(&wd, 3, 3, 3).unwrap();
        assert_eq!(d, WeightDistribution::from_u64(&[1, 0, 0, 0]));
    }

    #[test]
    fn even_weight_to_repetition() {
        let wd = WeightDistribution::from_u64(&[1, 0, 6, 0, 1]);
        assert_eq!(macwilliams(&wd, 4, 3, 2).unwrap(), WeightDistribution::from_u64(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn inconsistent_input_is_rejected() {
        let wd = WeightDistribution::from_u64(&[1, 1, 6, 0, 0]);
        assert!(matches!(macwilliams(&wd, 4, 3, 2), Err(Error::MacWilliams { .. })));
        let short = WeightDistribution::from_u64(&[1, 0, 6, 0, 0]);
        assert!(matches!(macwilliams(&short, 4, 3, 2), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn krawtchouk_orthogonality_at_small_n() {
        // sum_i C(n,i)(q-1)^i K_j(i) K_l(i) = q^n C(n,j)(q-1)^j [j = l]
        let (n, q) = (5, 3);
        for j in 0..=n {
            for l in 0..=n {
                let s: BigInt = (0..=n)
                    .map(|i| {
                        BigInt::from(binomial(n, i)) * BigInt::from(2u32.pow(i as u32)) * krawtchouk(n, q, j, i) * krawtchouk(n, q, l, i)
                    })
                    .sum();
                let expect = if j == l {
                    BigInt::from(3u64.pow(5)) * BigInt::from(binomial(n, j)) * BigInt::from(2u32.pow(j as u32))
                } else {
                    BigInt::zero()
                };
                assert_eq!(s, expect);
            }
        }
    }
}
