use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::int_matrix::IntMatrix;
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&p| is_prime(p)).collect()
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Canonical residue of `x` in `[0, p)`.
pub fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Rank of `m` over `F_p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| reduce(x, p)).collect())
        .collect();
    Ok(rank_reduced(&mut a, p))
}

/// Row reduction over `F_p` of an already reduced matrix; returns the rank.
pub(crate) fn rank_reduced(a: &mut [Vec<u64>], p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = inv_mod(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..rows {
            if r == rank || a[r][c] == 0 {
                continue;
            }
            let f = a[r][c];
            for j in 0..cols {
                let sub = mul_mod(f, a[rank][j], p);
                a[r][j] = (a[r][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert!(is_prime(2059 / 29));
    }

    #[test]
    fn rank_examples() {
        let m = IntMatrix::from_rows(&[[0, 3], [0, -1]]);
        assert_eq!(rank_mod_p(&m, 7).unwrap(), 1);
        assert_eq!(rank_mod_p(&m, 3).unwrap(), 1);
        assert_eq!(rank_mod_p(&IntMatrix::zeros(3, 4), 5).unwrap(), 0);
        for p in [2, 3, 7, 97] {
            assert_eq!(rank_mod_p(&IntMatrix::identity(4), p).unwrap(), 4);
        }
        let z = IntMatrix::from_rows(&[[0, 3], [3, 0]]);
        assert_eq!(rank_mod_p(&z, 3).unwrap(), 0);
        assert_eq!(rank_mod_p(&z, 5).unwrap(), 2);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(
            rank_mod_p(&IntMatrix::identity(2), 9),
            Err(Error::NotPrime(9))
        );
    }

    #[test]
    fn pow_mod_small() {
        assert_eq!(pow_mod(2, 3, 7), 1);
        assert_eq!(pow_mod(4, 3, 7), 1);
        assert_eq!(pow_mod(3, 0, 7), 1);
    }
}
