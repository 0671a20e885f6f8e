//! Counting Kronecker polynomials of degree `n`.
//!
//! A Kronecker polynomial of degree `n` is a choice of multiplicities `x_r`
//! with `sum_r x_r phi(r) = n`, where `r = 0` stands for the factor `z` and
//! `phi(0) = phi(1) = 1` by convention. The three weight-one generators
//! (`z`, `g_1`, `g_2`) and the even-degree rest separate, which gives
//!
//! ```text
//! k(n) = sum_{m=0}^{n} C(n - m + 2, 2) b(m),
//! b(m) = sum over partitions P of m into even parts of prod_j C(mu(j,P) + s(j) - 1, mu(j,P)),
//! ```
//!
//! and, independently, `sum_n k(n) x^n = prod_{r >= 0} 1 / (1 - x^phi(r))`.
//! Both are implemented here and checked against each other.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kronecker::enumerate_canonical;
use crate::numtheory::s;

/// A partition of `total` into even parts, as part `j` to multiplicity `mu(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvenPartition {
    pub parts: BTreeMap<u64, u32>,
    pub total: u64,
}

/// Partitions of `n` in reverse lexicographic order, each as a
/// non-increasing list of parts.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Partitions {
    pub fn new(n: u64) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.take()?;
        // drop trailing 1s, decrement the last part > 1, refill greedily
        let mut next = out.clone();
        let mut freed = 0;
        while next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let part = freed.min(cap);
                next.push(part);
                freed -= part;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All partitions of `m` into even parts: the partitions of `m / 2` with
/// every part doubled. Empty for odd `m`.
pub fn even_partitions(m: u64) -> impl Iterator<Item = EvenPartition> {
    let halves = m.is_multiple_of(2).then(|| Partitions::new(m / 2));
    halves.into_iter().flatten().map(move |parts| {
        let mut map = BTreeMap::new();
        for h in parts {
            *map.entry(2 * h).or_insert(0) += 1;
        }
        EvenPartition {
            parts: map,
            total: m,
        }
    })
}

fn multiset_count(mu: u32, kinds: usize) -> BigUint {
    // C(mu + s - 1, mu): multisets of size mu drawn from s kinds
    if kinds == 0 {
        return BigUint::zero();
    }
    binomial(BigUint::from(mu as usize + kinds - 1), BigUint::from(mu))
}

/// `b(m)` as the literal sum over [`even_partitions`]. Reference version of
/// [`b`].
pub fn b_by_listing(m: u64) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for part in even_partitions(m) {
        let mut term = BigUint::one();
        for (&j, &mu) in &part.parts {
            term *= multiset_count(mu, s(j)?);
        }
        total += term;
    }
    Ok(total)
}

/// `b(m)`, the number of solutions of `sum_{r >= 3} x_r phi(r) = m`.
pub fn b(m: u64) -> Result<BigUint> {
    if m % 2 == 1 {
        return Ok(BigUint::zero());
    }
    Ok(b_table(m)?.pop().expect("table has m + 1 entries"))
}

/// `b(0), ..., b(n)`.
///
/// One depth-first walk over the partitions of every `t <= n / 2` into
/// parts `h` (standing for the even part `2h`), in descending part order.
/// Each node of the walk is itself a complete partition of its running sum,
/// so its product of multiset counts is added to `b(2t)` on the spot. Parts
/// with `s(2h) = 0` make every term containing them vanish and are skipped.
/// Accumulation runs in `u128` and is redone in `BigUint` on overflow.
pub fn b_table(n: u64) -> Result<Vec<BigUint>> {
    let half = n / 2;
    let kinds: Vec<usize> = (0..=half)
        .map(|h| if h == 0 { Ok(0) } else { s(2 * h) })
        .collect::<Result<_>>()?;
    let by_half = match walk_all::<u128>(&kinds, half) {
        Some(t) => t.into_iter().map(BigUint::from).collect(),
        None => walk_all::<BigUint>(&kinds, half).expect("BigUint does not overflow"),
    };
    Ok((0..=n)
        .map(|m| {
            if m % 2 == 0 {
                by_half[(m / 2) as usize].clone()
            } else {
                BigUint::zero()
            }
        })
        .collect())
}

trait Tally: Clone + Zero {
    fn from_big(v: BigUint) -> Option<Self>;
    fn add_into(&self, slot: &mut Self) -> Option<()>;
    fn times(&self, k: &Self) -> Option<Self>;
}

impl Tally for u128 {
    fn from_big(v: BigUint) -> Option<Self> {
        u128::try_from(v).ok()
    }
    fn add_into(&self, slot: &mut Self) -> Option<()> {
        *slot = slot.checked_add(*self)?;
        Some(())
    }
    fn times(&self, k: &Self) -> Option<Self> {
        self.checked_mul(*k)
    }
}

impl Tally for BigUint {
    fn from_big(v: BigUint) -> Option<Self> {
        Some(v)
    }
    fn add_into(&self, slot: &mut Self) -> Option<()> {
        *slot += self;
        Some(())
    }
    fn times(&self, k: &Self) -> Option<Self> {
        Some(self * k)
    }
}

struct Walk<'a, T> {
    kinds: &'a [usize],
    limit: u64,
    // counts[h][mu] = C(mu + s(2h) - 1, mu)
    counts: Vec<Vec<T>>,
    table: Vec<T>,
}

fn walk_all<T: Tally>(kinds: &[usize], limit: u64) -> Option<Vec<T>> {
    let counts = (0..=limit)
        .map(|h| {
            (0..=(limit / h.max(1)) as u32)
                .map(|mu| T::from_big(multiset_count(mu, kinds[h as usize])))
                .collect::<Option<Vec<T>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    let mut w = Walk {
        kinds,
        limit,
        counts,
        table: vec![T::zero(); limit as usize + 1],
    };
    let one = T::from_big(BigUint::one())?;
    w.visit(limit, 0, &one)?;
    Some(w.table)
}

impl<T: Tally> Walk<'_, T> {
    fn visit(&mut self, max_part: u64, sum: u64, acc: &T) -> Option<()> {
        acc.add_into(&mut self.table[sum as usize])?;
        let room = self.limit - sum;
        for h in (1..=max_part.min(room)).rev() {
            if self.kinds[h as usize] == 0 {
                continue;
            }
            for mu in 1..=(room / h) {
                let term = acc.times(&self.counts[h as usize][mu as usize])?;
                self.visit(h - 1, sum + mu * h, &term)?;
            }
        }
        Some(())
    }
}

fn k_from_b(n: u64, bs: &[BigUint]) -> BigUint {
    (0..=n)
        .filter(|m| m % 2 == 0)
        .map(|m| binomial(BigUint::from(n - m + 2), BigUint::from(2u32)) * &bs[m as usize])
        .sum()
}

/// `k(n)` from the partition formula.
pub fn k_partition(n: u64) -> Result<BigUint> {
    Ok(k_from_b(n, &b_table(n)?))
}

/// `k(0), ..., k(n)` from the partition formula, sharing the `b` values.
pub fn k_partition_table(n: u64) -> Result<Vec<BigUint>> {
    let bs = b_table(n)?;
    Ok((0..=n).map(|i| k_from_b(i, &bs)).collect())
}

/// Truncated series `k(0) + k(1) x + ... + k(limit) x^limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub limit: u64,
    pub coeffs: Vec<BigUint>,
}

impl CountSeries {
    pub fn get(&self, n: u64) -> Option<&BigUint> {
        self.coeffs.get(n as usize)
    }
}

/// Exponents `e_j` in `prod_{r >= 0} 1/(1 - x^phi(r)) = prod_{j >= 1} (1 - x^j)^{-e_j}`
/// for `j <= limit`. `e_1` counts `r = 0, 1, 2`; `e_j = s(j)` otherwise.
pub fn series_exponents(limit: u64) -> Result<Vec<(u64, usize)>> {
    (1..=limit)
        .map(|j| {
            let e = if j == 1 { s(1)? + 1 } else { s(j)? };
            Ok((j, e))
        })
        .collect()
}

/// `k(0..=limit)` from the generating function.
///
/// Each factor `1 / (1 - x^j)` is the geometric series `1 + x^j + x^2j + ...`;
/// multiplying a truncated series by it in place is the running sum
/// `a[i] += a[i - j]` for ascending `i`. Factors are applied in ascending `j`.
pub fn k_series(limit: u64) -> Result<CountSeries> {
    if limit == 0 {
        return Err(Error::ZeroArgument);
    }
    let len = limit as usize + 1;
    let mut coeffs = vec![BigUint::zero(); len];
    coeffs[0] = BigUint::one();
    for (j, e) in series_exponents(limit)? {
        let j = j as usize;
        for _ in 0..e {
            for i in j..len {
                let (lo, hi) = coeffs.split_at_mut(i);
                hi[0] += &lo[i - j];
            }
        }
    }
    Ok(CountSeries { limit, coeffs })
}

/// Largest degree at which [`k_crosscheck`] also lists the factorizations.
pub const CROSSCHECK_ENUMERATION_LIMIT: u64 = 12;

/// `k(n)` computed by both engines and, for small `n`, by counting the
/// canonical enumeration; any disagreement is an error.
pub fn k_crosscheck(n: u64) -> Result<BigUint> {
    let by_partition = k_partition(n)?;
    let by_series = k_series(n.max(1))?.coeffs[n as usize].clone();
    if by_partition != by_series {
        return Err(Error::Mismatch {
            n: n as usize,
            detail: format!("partition formula gives {by_partition}, series gives {by_series}"),
        });
    }
    if n <= CROSSCHECK_ENUMERATION_LIMIT {
        let listed = if n == 0 {
            1
        } else {
            enumerate_canonical(n as usize, false)?.len()
        };
        if BigUint::from(listed) != by_partition {
            return Err(Error::Mismatch {
                n: n as usize,
                detail: format!("formulas give {by_partition}, enumeration lists {listed}"),
            });
        }
    }
    Ok(by_partition)
}
