//! Newton's identities and the root-power map `f -> f_k`.
//!
//! For monic `f = z^n + c_{n-1} z^{n-1} + ... + c_0` with roots `z_1..z_n`,
//! the elementary symmetric functions are `p_i = (-1)^i c_{n-i}` and the power
//! sums `s_k = sum_j z_j^k` satisfy
//!
//! ```text
//! s_k - p_1 s_{k-1} + p_2 s_{k-2} - ... + (-1)^{k-1} p_{k-1} s_1 + (-1)^k k p_k = 0
//! ```
//!
//! with `p_i = 0` for `i > n`. Substituting `p_i` this collapses to
//! `s_k = -(c_{n-1} s_{k-1} + ... + c_{n-k+1} s_1) - k c_{n-k}`, which is what
//! the code evaluates. Both directions are exact over the integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::IntPoly;
use crate::error::{Error, Result};

/// Power sums `s_1..s_K` of the roots of a degree-`source_degree` polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSums {
    pub values: Vec<BigInt>,
    pub source_degree: usize,
}

impl PowerSums {
    /// `s_k`, 1-based.
    pub fn get(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }
}

/// Lazily extended power sums of a fixed monic polynomial.
#[derive(Debug, Clone)]
pub struct PowerSumStream {
    // c_{n-1}, c_{n-2}, ..., c_0: the coefficient paired with s_{k-i} is tail[i-1]
    tail: Vec<BigInt>,
    sums: Vec<BigInt>,
}

impl PowerSumStream {
    pub fn new(f: &IntPoly) -> Result<Self> {
        let n = f.degree().filter(|&d| d >= 1 && f.is_monic()).ok_or(Error::NotMonic)?;
        let tail = f.coeffs()[..n].iter().rev().cloned().collect();
        Ok(PowerSumStream { tail, sums: Vec::new() })
    }

    pub fn degree(&self) -> usize {
        self.tail.len()
    }

    /// `s_k` for `k >= 1`, extending the table as needed.
    pub fn get(&mut self, k: usize) -> &BigInt {
        assert!(k >= 1, "power sums are 1-based");
        while self.sums.len() < k {
            let k = self.sums.len() + 1;
            let n = self.tail.len();
            let mut acc = BigInt::zero();
            for i in 1..k.min(n + 1) {
                acc -= &self.tail[i - 1] * &self.sums[k - i - 1];
            }
            if k <= n {
                acc -= &self.tail[k - 1] * k;
            }
            self.sums.push(acc);
        }
        &self.sums[k - 1]
    }
}

/// `s_1..s_count` for a monic polynomial of degree at least one.
pub fn power_sums(f: &IntPoly, count: usize) -> Result<PowerSums> {
    let mut stream = PowerSumStream::new(f)?;
    let values = (1..=count).map(|k| stream.get(k).clone()).collect();
    Ok(PowerSums {
        values,
        source_degree: stream.degree(),
    })
}

/// Recovers the monic degree-`n` polynomial with power sums `s_1..s_n`.
///
/// Step `k` determines `c_{n-k}` from `k c_{n-k} = -(s_k + c_{n-1} s_{k-1} + ... + c_{n-k+1} s_1)`;
/// a nonzero remainder there means the sums do not come from an integer
/// monic polynomial.
pub fn from_power_sums(sums: &PowerSums, n: usize) -> Result<IntPoly> {
    from_sum_slice(&sums.values, n)
}

fn from_sum_slice(sums: &[BigInt], n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if sums.len() < n {
        return Err(Error::TooFewPowerSums {
            needed: n,
            got: sums.len(),
        });
    }
    // tail[i-1] = c_{n-i}
    let mut tail: Vec<BigInt> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = sums[k - 1].clone();
        for i in 1..k {
            acc += &tail[i - 1] * &sums[k - i - 1];
        }
        let numerator = -acc;
        let (q, r) = numerator.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::NonIntegral { step: k, numerator });
        }
        tail.push(q);
    }
    let mut coeffs: Vec<BigInt> = tail.into_iter().rev().collect();
    coeffs.push(BigInt::from(1));
    Ok(IntPoly::new(coeffs))
}

fn power_map_from_stream(stream: &mut PowerSumStream, k: usize) -> IntPoly {
    let n = stream.degree();
    let picked: Vec<BigInt> = (1..=n).map(|i| stream.get(i * k).clone()).collect();
    from_sum_slice(&picked, n).expect("power sums of an integer polynomial are integral")
}

/// `f_k(z) = prod_j (z - z_j^k)` for monic `f`, computed exactly from the
/// power sums `s_k, s_2k, ..., s_nk` of `f`.
pub fn power_map(f: &IntPoly, k: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut stream = PowerSumStream::new(f)?;
    Ok(power_map_from_stream(&mut stream, k))
}

/// The sequence `f_1, f_2, ...` of a power-map orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// `f_1..f_m`; when a repeat was found, the last entry is the repeat.
    pub steps: Vec<IntPoly>,
    /// 1-based `(j, k)` with `j < k` and `f_j = f_k`, or `None` if no repeat
    /// occurred within the step budget.
    pub repeat: Option<(usize, usize)>,
}

/// Computes `f_1, f_2, ...` until some `f_k` equals an earlier `f_j` or
/// `max_steps` entries have been produced.
pub fn power_map_orbit(f: &IntPoly, max_steps: usize) -> Result<Orbit> {
    if max_steps == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut stream = PowerSumStream::new(f)?;
    if f.coeffs()[0].is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut seen: HashMap<IntPoly, usize> = HashMap::new();
    let mut steps = Vec::new();
    for k in 1..=max_steps {
        let fk = if k == 1 {
            f.clone()
        } else {
            power_map_from_stream(&mut stream, k)
        };
        steps.push(fk.clone());
        if let Some(&j) = seen.get(&fk) {
            return Ok(Orbit {
                steps,
                repeat: Some((j, k)),
            });
        }
        seen.insert(fk, k);
    }
    Ok(Orbit {
        steps,
        repeat: None,
    })
}
