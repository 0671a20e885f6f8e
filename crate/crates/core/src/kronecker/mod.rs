//! Kronecker polynomials: monic integer polynomials with every root in the
//! closed unit disc.
//!
//! Every such polynomial is `z^k` times a product of cyclotomic polynomials,
//! so membership is decided exactly by trial division, and the polynomials of
//! a given degree can be listed either by scanning the finite box of
//! admissible coefficient vectors or directly from their factorizations.

pub mod numeric;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::cyclotomic::{cyclotomic, cyclotomic_indices_up_to_degree};
use crate::error::{Error, Result};
use crate::numtheory::euler_phi;
use crate::poly::IntPoly;

pub use numeric::{numeric_roots, roots_in_disc_numeric, DEFAULT_TOLERANCE};

/// Default degree limit for [`enumerate_brute`].
pub const BRUTE_FORCE_LIMIT: usize = 8;
/// Default degree limit for [`enumerate_canonical`].
pub const CANONICAL_LIMIT: usize = 30;

/// `z^shift * prod_d g_d^{e_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CycloFactorization {
    pub shift: usize,
    /// Cyclotomic index `d` to multiplicity `e_d >= 1`.
    pub factors: BTreeMap<u64, u32>,
}

impl CycloFactorization {
    pub fn degree(&self) -> usize {
        self.shift
            + self
                .factors
                .iter()
                .map(|(&d, &e)| e as usize * euler_phi(d).unwrap() as usize)
                .sum::<usize>()
    }

    /// Indices with repetition, ascending: `{1: 2, 3: 1}` becomes `[1, 1, 3]`.
    pub fn index_vector(&self) -> Vec<u64> {
        self.factors
            .iter()
            .flat_map(|(&d, &e)| std::iter::repeat_n(d, e as usize))
            .collect()
    }

    /// Multiplies the factorization out.
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::monomial(self.shift), |acc, (&d, &e)| {
                acc.mul(&cyclotomic(d).unwrap().poly.pow(e))
            })
    }
}

/// Outcome of [`is_kronecker`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Kronecker(CycloFactorization),
    NotKronecker,
}

impl Verdict {
    pub fn is_kronecker(&self) -> bool {
        matches!(self, Verdict::Kronecker(_))
    }

    pub fn factorization(&self) -> Option<&CycloFactorization> {
        match self {
            Verdict::Kronecker(f) => Some(f),
            Verdict::NotKronecker => None,
        }
    }
}

/// Decides whether monic `f` has all roots in the closed unit disc.
///
/// Strips the power of `z`, then divides out each cyclotomic `g_d` with
/// `phi(d)` at most the remaining degree, in ascending `d`, to full
/// multiplicity. `f` is Kronecker iff the residual is `1`.
pub fn is_kronecker(f: &IntPoly) -> Result<Verdict> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.degree() == Some(0) {
        return Err(Error::ConstantPolynomial);
    }
    let shift = f.zero_root_multiplicity();
    let mut residual = f.shift_down(shift);
    let mut factors = BTreeMap::new();

    let remaining = residual.degree().unwrap_or(0);
    if remaining > 0 {
        // products of cyclotomic polynomials have constant term +-1
        if !residual.coeffs()[0].abs().is_one() {
            return Ok(Verdict::NotKronecker);
        }
        for d in cyclotomic_indices_up_to_degree(remaining as u64)? {
            let deg = euler_phi(d)? as usize;
            if residual.degree().unwrap_or(0) < deg {
                continue;
            }
            let g = cyclotomic(d)?.poly;
            let mut e = 0u32;
            while residual.degree().unwrap_or(0) >= deg {
                match residual.div_exact(&g) {
                    Ok(q) => {
                        residual = q;
                        e += 1;
                    }
                    Err(Error::NotDivisible) => break,
                    Err(other) => return Err(other),
                }
            }
            if e > 0 {
                factors.insert(d, e);
            }
            if residual.degree() == Some(0) {
                break;
            }
        }
    }
    if residual == IntPoly::one() {
        Ok(Verdict::Kronecker(CycloFactorization { shift, factors }))
    } else {
        Ok(Verdict::NotKronecker)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Result of scanning the coefficient box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteEnumeration {
    pub degree: usize,
    /// Number of coefficient vectors scanned.
    pub candidates: BigInt,
    /// Kronecker polynomials found, sorted by ascending coefficient vector.
    pub polynomials: Vec<IntPoly>,
}

/// Size of the box `|a_j| <= C(n, j)`, `j = 0..n-1`, that contains every
/// Kronecker polynomial of degree `n`.
pub fn candidate_box_size(n: usize) -> BigInt {
    (0..n)
        .map(|j| binomial(n, j) * 2 + 1)
        .fold(BigInt::one(), |acc, w| acc * w)
}

fn check_guard(n: usize, limit: usize, allow_large: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > limit && !allow_large {
        return Err(Error::GuardExceeded { degree: n, limit });
    }
    Ok(())
}

/// Every Kronecker polynomial of degree `n`, found by testing each monic
/// polynomial whose coefficient of `z^j` satisfies `|a_j| <= C(n, j)`.
///
/// Degrees above [`BRUTE_FORCE_LIMIT`] are refused unless `allow_large`.
pub fn enumerate_brute(n: usize, allow_large: bool) -> Result<BruteEnumeration> {
    check_guard(n, BRUTE_FORCE_LIMIT, allow_large)?;
    let bounds: Vec<i64> = (0..n)
        .map(|j| {
            i64::try_from(binomial(n, j)).map_err(|_| Error::GuardExceeded {
                degree: n,
                limit: BRUTE_FORCE_LIMIT,
            })
        })
        .collect::<Result<_>>()?;

    let mut coeffs: Vec<i64> = bounds.iter().map(|&b| -b).collect();
    coeffs.push(1);
    let mut found = Vec::new();
    let mut scanned = BigInt::from(0);
    loop {
        scanned += 1;
        let f = IntPoly::from_i64s(&coeffs);
        if is_kronecker(&f)?.is_kronecker() {
            found.push(f);
        }
        // odometer step, lowest coefficient fastest
        let mut j = 0;
        while j < n && coeffs[j] == bounds[j] {
            coeffs[j] = -bounds[j];
            j += 1;
        }
        if j == n {
            break;
        }
        coeffs[j] += 1;
    }
    found.sort();
    Ok(BruteEnumeration {
        degree: n,
        candidates: scanned,
        polynomials: found,
    })
}

/// Every factorization `z^k prod g_d^{e_d}` of total degree `n`, sorted by
/// shift and then by [`CycloFactorization::index_vector`].
///
/// Degrees above [`CANONICAL_LIMIT`] are refused unless `allow_large`.
pub fn enumerate_canonical(n: usize, allow_large: bool) -> Result<Vec<CycloFactorization>> {
    check_guard(n, CANONICAL_LIMIT, allow_large)?;
    let generators: Vec<(u64, usize)> = cyclotomic_indices_up_to_degree(n as u64)?
        .into_iter()
        .map(|d| Ok((d, euler_phi(d)? as usize)))
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    for shift in (0..=n).rev() {
        fill(&generators, n - shift, &mut current, &mut |factors| {
            out.push(CycloFactorization {
                shift,
                factors: factors.clone(),
            })
        });
    }
    out.sort_by_cached_key(|f| (f.shift, f.index_vector()));
    Ok(out)
}

/// Calls `emit` for every multiset over `generators` of total degree `budget`.
fn fill(
    generators: &[(u64, usize)],
    budget: usize,
    current: &mut BTreeMap<u64, u32>,
    emit: &mut dyn FnMut(&BTreeMap<u64, u32>),
) {
    if budget == 0 {
        emit(current);
        return;
    }
    let Some((&(d, deg), rest)) = generators.split_first() else {
        return;
    };
    fill(rest, budget, current, emit);
    let mut e = 0;
    let mut used = 0;
    while used + deg <= budget {
        used += deg;
        e += 1;
        current.insert(d, e);
        fill(rest, budget - used, current, emit);
    }
    current.remove(&d);
}
