use num::{BigInt, ToPrimitive, Zero};
use rand::Rng;

use super::matrix::SparseMatrix;
use super::LinalgError;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly sampled 31-bit prime (so products fit comfortably in u64
/// arithmetic via u128 intermediates).
pub fn random_prime_31<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let c = rng.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = v % BigInt::from(p);
    let m = if m < BigInt::zero() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits u64")
}

/// Rank of the reduction of `m` modulo `prime`.
///
/// By lower semicontinuity of rank under specialization this is at most the
/// rational rank, with equality for all but finitely many primes; it serves
/// as the cross-check oracle for [`super::rank`].
///
/// Fails with [`LinalgError::DenominatorCollision`] when a stored denominator
/// is divisible by `prime`; the caller retries with a fresh prime.
pub fn rank_modular(m: &SparseMatrix, prime: u64) -> Result<usize, LinalgError> {
    assert!(prime > (1 << 20), "prime must exceed 2^20");
    assert!(is_prime(prime), "modulus must be prime");
    let mut rows: Vec<Vec<(usize, u64)>> = Vec::new();
    for row in m.row_major() {
        let mut out = Vec::with_capacity(row.len());
        for (c, v) in row {
            let den = bigint_mod(v.denom(), prime);
            if den == 0 {
                return Err(LinalgError::DenominatorCollision { prime });
            }
            let num = bigint_mod(v.numer(), prime);
            let r = (num as u128 * inv_mod(den, prime) as u128 % prime as u128) as u64;
            if r != 0 {
                out.push((c, r));
            }
        }
        if !out.is_empty() {
            rows.push(out);
        }
    }

    // Plain sparse elimination over the prime field, leftmost-column pivots.
    let mut rank = 0;
    let mut pivot_rows: Vec<(usize, Vec<(usize, u64)>)> = Vec::new(); // (pivot col, unit row)
    for mut row in rows {
        loop {
            if row.is_empty() {
                break;
            }
            let lead = row[0].0;
            match pivot_rows.binary_search_by_key(&lead, |(c, _)| *c) {
                Err(_) => {
                    // New pivot: normalize to leading 1.
                    let inv = inv_mod(row[0].1, prime);
                    for (_, v) in &mut row {
                        *v = (*v as u128 * inv as u128 % prime as u128) as u64;
                    }
                    let pos = pivot_rows.partition_point(|(c, _)| *c < lead);
                    pivot_rows.insert(pos, (lead, row));
                    rank += 1;
                    break;
                }
                Ok(idx) => {
                    let coeff = row[0].1;
                    let prow = &pivot_rows[idx].1;
                    // row -= coeff * prow
                    let mut out = Vec::with_capacity(row.len() + prow.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < prow.len() {
                        if j == prow.len() || (i < row.len() && row[i].0 < prow[j].0) {
                            out.push(row[i]);
                            i += 1;
                        } else if i == row.len() || prow[j].0 < row[i].0 {
                            let v = (prime as u128 - (coeff as u128 * prow[j].1 as u128 % prime as u128))
                                as u64
                                % prime;
                            if v != 0 {
                                out.push((prow[j].0, v));
                            }
                            j += 1;
                        } else {
                            let sub = coeff as u128 * prow[j].1 as u128 % prime as u128;
                            let v = ((row[i].1 as u128 + prime as u128 - sub) % prime as u128) as u64;
                            if v != 0 {
                                out.push((row[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
            }
        }
    }
    Ok(rank)
}
