//! Euler's totient, its inverse fibers, and the multiplicity function `s(j)`.
//!
//! The inverse totient is computed by a divisor-driven search: every prime `p`
//! dividing a solution `n` of `phi(n) = j` has `p - 1 | j`, and a prime power
//! `p^a` contributes the factor `(p - 1) p^(a-1)`. The search walks the
//! admissible primes in descending order, peeling off one prime-power factor
//! at a time from the remaining quotient.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

/// The fiber `phi^{-1}(degree)`, with members strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotientFiber {
    pub degree: u64,
    pub members: Vec<u64>,
}

impl TotientFiber {
    /// `s(degree)`, the number of cyclotomic polynomials of this degree.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// ascending prime order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient. `phi(0)` is rejected; the `phi(0) = 1` convention used
/// when counting lives in [`crate::counting`].
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

fn fiber_cache() -> &'static RwLock<HashMap<u64, Arc<TotientFiber>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<TotientFiber>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The complete fiber `phi^{-1}(j)`. Results are cached per `j`.
pub fn inverse_phi(j: u64) -> Result<Arc<TotientFiber>> {
    if j == 0 {
        return Err(Error::ZeroArgument);
    }
    if let Some(hit) = fiber_cache().read().unwrap().get(&j) {
        return Ok(Arc::clone(hit));
    }
    let fiber = Arc::new(compute_fiber(j));
    let mut cache = fiber_cache().write().unwrap();
    Ok(Arc::clone(cache.entry(j).or_insert(fiber)))
}

/// `s(j) = |phi^{-1}(j)|`.
pub fn s(j: u64) -> Result<usize> {
    inverse_phi(j).map(|f| f.len())
}

fn compute_fiber(j: u64) -> TotientFiber {
    let mut primes: Vec<u64> = divisors(j)
        .into_iter()
        .filter_map(|d| d.checked_add(1))
        .filter(|&p| is_prime(p))
        .collect();
    primes.sort_unstable_by(|a, b| b.cmp(a));

    let mut members = Vec::new();
    search(&primes, 0, j as u128, 1, &mut members);
    members.sort_unstable();
    TotientFiber { degree: j, members }
}

/// Extends the partial solution `n` using primes from `primes[from..]` so that
/// the remaining totient quotient `rest` is absorbed exactly.
fn search(primes: &[u64], from: usize, rest: u128, n: u128, out: &mut Vec<u64>) {
    if rest == 1 {
        if let Ok(n) = u64::try_from(n) {
            out.push(n);
        }
    }
    // Only p = 2 contributes an odd factor, and that factor is 1.
    if rest > 1 && rest % 2 == 1 {
        return;
    }
    for (i, &p) in primes.iter().enumerate().skip(from) {
        let p = p as u128;
        if !rest.is_multiple_of(p - 1) {
            continue;
        }
        let mut rest = rest / (p - 1);
        let mut pk = p;
        loop {
            search(primes, i + 1, rest, n * pk, out);
            if !rest.is_multiple_of(p) {
                break;
            }
            rest /= p;
            pk *= p;
        }
    }
}
