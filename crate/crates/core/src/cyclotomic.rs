//! Cyclotomic polynomials from the divisor identity `z^n - 1 = prod_{d | n} g_d(z)`.
//!
//! `g_n` is obtained by exact division of `z^n - 1` by the `g_d` of its proper
//! divisors. The identity itself groups all divisors of a maximal proper
//! divisor `m = n / p` into the single binomial `z^m - 1`, so the division
//! starts there and continues with the `g_d` for `d | n`, `d` not dividing
//! `m`. Arithmetic runs on `i64` with overflow checks and falls back to
//! arbitrary precision when a coefficient escapes that range.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, euler_phi, factorize, inverse_phi};
use crate::poly::IntPoly;

/// `g_index` together with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicEntry {
    pub index: u64,
    pub poly: IntPoly,
}

#[derive(Debug)]
enum Stored {
    Small(Vec<i64>),
    Big(IntPoly),
}

impl Stored {
    fn to_poly(&self) -> IntPoly {
        match self {
            Stored::Small(c) => IntPoly::from_i64s(c),
            Stored::Big(p) => p.clone(),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Stored::Small(c) => c.len() - 1,
            Stored::Big(p) => p.degree().expect("cyclotomic polynomials are nonzero"),
        }
    }
}

type Cache = RwLock<HashMap<u64, Arc<Stored>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial. Memoized.
pub fn cyclotomic(n: u64) -> Result<CyclotomicEntry> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(CyclotomicEntry {
        index: n,
        poly: stored(n).to_poly(),
    })
}

/// Degree of `g_n` as produced by the division, without materialising the
/// big-integer polynomial.
pub fn cyclotomic_degree(n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(stored(n).degree())
}

/// Every `g_n` with `phi(n) <= max_degree`, sorted by index.
pub fn cyclotomics_up_to_degree(max_degree: u64) -> Result<Vec<CyclotomicEntry>> {
    Ok(cyclotomic_indices_up_to_degree(max_degree)?
        .into_iter()
        .map(|n| CyclotomicEntry {
            index: n,
            poly: stored(n).to_poly(),
        })
        .collect())
}

/// Indices `n` with `phi(n) <= max_degree`, ascending.
pub fn cyclotomic_indices_up_to_degree(max_degree: u64) -> Result<Vec<u64>> {
    if max_degree == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut indices = Vec::new();
    for j in 1..=max_degree {
        indices.extend_from_slice(&inverse_phi(j)?.members);
    }
    indices.sort_unstable();
    Ok(indices)
}

fn stored(n: u64) -> Arc<Stored> {
    if let Some(hit) = cache().read().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let value = Arc::new(compute(n));
    let mut guard = cache().write().unwrap();
    Arc::clone(guard.entry(n).or_insert(value))
}

/// Picks the prime `p | n` whose leftover divisors (those not dividing `n/p`)
/// have the smallest total degree.
fn split_prime(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .min_by_key(|&(p, a)| {
            let pa = p.pow(a);
            let r = n / pa;
            (pa - pa / p) * (r - euler_phi(r).unwrap())
        })
        .map(|(p, _)| p)
        .expect("n > 1 has a prime factor")
}

fn compute(n: u64) -> Stored {
    if n == 1 {
        return Stored::Small(vec![-1, 1]);
    }
    let m = n / split_prime(n);
    let rest: Vec<u64> = divisors(n)
        .into_iter()
        .filter(|&d| d < n && !m.is_multiple_of(d))
        .collect();

    match compute_small(n, m, &rest) {
        Some(c) => Stored::Small(c),
        None => Stored::Big(compute_big(n, m, &rest)),
    }
}

fn binomial_small(m: usize) -> Vec<i64> {
    let mut b = vec![0i64; m + 1];
    b[0] = -1;
    b[m] = 1;
    b
}

fn compute_small(n: u64, m: u64, rest: &[u64]) -> Option<Vec<i64>> {
    let mut acc = div_exact_small(&binomial_small(n as usize), &binomial_small(m as usize))?;
    for &d in rest {
        let g = stored(d);
        let Stored::Small(g) = &*g else {
            return None;
        };
        acc = div_exact_small(&acc, g)?;
    }
    Some(acc)
}

fn compute_big(n: u64, m: u64, rest: &[u64]) -> IntPoly {
    let mut acc = IntPoly::x_pow_minus_one(n as usize)
        .div_exact(&IntPoly::x_pow_minus_one(m as usize))
        .expect("z^m - 1 divides z^n - 1");
    for &d in rest {
        acc = acc
            .div_exact(&stored(d).to_poly())
            .expect("g_d divides z^n - 1 for d | n");
    }
    acc
}

/// Exact division by a monic divisor on `i64` coefficients. `None` on
/// overflow. Zero coefficients of the divisor are skipped, so dividing by a
/// binomial is linear.
fn div_exact_small(dividend: &[i64], divisor: &[i64]) -> Option<Vec<i64>> {
    let dg = divisor.len() - 1;
    debug_assert_eq!(divisor[dg], 1);
    let df = dividend.len() - 1;
    let lower: Vec<(usize, i64)> = divisor[..dg]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect();
    let mut rem = dividend.to_vec();
    let mut quot = vec![0i64; df - dg + 1];
    for i in (0..=df - dg).rev() {
        let q = rem[i + dg];
        if q == 0 {
            continue;
        }
        for &(j, c) in &lower {
            rem[i + j] = rem[i + j].checked_sub(q.checked_mul(c)?)?;
        }
        quot[i] = q;
    }
    assert!(
        rem[..dg].iter().all(|&c| c == 0),
        "cyclotomic division left a remainder"
    );
    Some(quot)
}
