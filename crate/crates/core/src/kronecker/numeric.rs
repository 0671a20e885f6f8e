//! Floating-point root location, kept independent of the exact decision
//! procedure so it can serve as a cross-check.
//!
//! Repeated roots are ill-conditioned for eigenvalue solvers: a root of
//! multiplicity `m` is only resolved to about `eps^(1/m)`. The polynomial is
//! therefore first split into squarefree parts with exact rational
//! arithmetic (Yun's algorithm), and only those parts, whose roots are all
//! simple, are handed to the companion-matrix eigensolver.

use nalgebra::{DMatrix, Schur};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

const SCHUR_MAX_ITER: usize = 10_000;
const POLISH_STEPS: usize = 3;
const SHIFTS: [f64; 4] = [0.0, 0.3719, -0.2917, 0.6180];

#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_int(f: &IntPoly) -> Self {
        RatPoly(f.coeffs().iter().cloned().map(BigRational::from_integer).collect())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn monic(self) -> Self {
        let Some(lead) = self.0.last().cloned() else {
            return self;
        };
        RatPoly(self.0.into_iter().map(|c| c / &lead).collect())
    }

    fn derivative(&self) -> Self {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        RatPoly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
        .trim()
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dg = divisor.degree().expect("nonzero divisor");
        let mut rem = self.0.clone();
        let Some(df) = self.degree().filter(|&d| d >= dg) else {
            return (RatPoly(Vec::new()), self.clone());
        };
        let lead = &divisor.0[dg];
        let mut quot = vec![BigRational::zero(); df - dg + 1];
        for i in (0..=df - dg).rev() {
            let q = &rem[i + dg] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, g) in divisor.0.iter().enumerate() {
                rem[i + j] -= &q * g;
            }
            quot[i] = q;
        }
        rem.truncate(dg);
        (RatPoly(quot).trim(), RatPoly(rem).trim())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn to_f64_monic(&self) -> Vec<f64> {
        let lead = self.0.last().expect("nonzero polynomial");
        self.0
            .iter()
            .map(|c| (c / lead).to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Squarefree factors `a_i` of `f` with multiplicity `i`, so that
/// `f = prod a_i^i` up to a constant.
fn squarefree_parts(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let mut d = df.div_rem(&a0).0.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = b.gcd(&d);
        let c = d.div_rem(&a).0;
        b = b.div_rem(&a).0;
        d = c.sub(&b.derivative());
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut slope = Complex64::zero();
    for &c in coeffs.iter().rev() {
        slope = slope * z + value;
        value = value * z + c;
    }
    (value, slope)
}

/// Coefficients of `f(w + shift)`, by repeated synthetic division.
fn taylor_shift(coeffs: &[f64], shift: f64) -> Vec<f64> {
    let mut a = coeffs.to_vec();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = a[j + 1] * shift;
            a[j] += t;
        }
    }
    a
}

fn companion_eigenvalues(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    let mut companion = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        companion[(i, d - 1)] = -coeffs[i];
    }
    Schur::try_new(companion, f64::EPSILON, SCHUR_MAX_ITER)
        .map(|schur| schur.complex_eigenvalues().iter().copied().collect())
}

/// Roots of a monic squarefree polynomial given by ascending `f64`
/// coefficients, as companion-matrix eigenvalues refined by Newton steps.
///
/// The QR iteration can stall on highly symmetric companion matrices (e.g.
/// `z^4 + 1`); translating the variable breaks the symmetry, so failed
/// attempts are retried on `f(w + shift)`.
fn simple_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    if d == 1 {
        return Ok(vec![Complex64::new(-coeffs[0], 0.0)]);
    }
    let mut roots = SHIFTS
        .iter()
        .find_map(|&shift| {
            let shifted = taylor_shift(coeffs, shift);
            companion_eigenvalues(&shifted)
                .map(|ws| ws.into_iter().map(|w| w + shift).collect::<Vec<_>>())
        })
        .ok_or_else(|| Error::Numeric(format!("Schur iteration did not converge (degree {d})")))?;
    for z in &mut roots {
        for _ in 0..POLISH_STEPS {
            let (v, dv) = horner(coeffs, *z);
            if dv.norm() == 0.0 {
                break;
            }
            let next = *z - v / dv;
            if horner(coeffs, next).0.norm() <= v.norm() {
                *z = next;
            }
        }
    }
    if roots.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric("non-finite eigenvalue".into()));
    }
    Ok(roots)
}

/// All complex roots of a monic integer polynomial, repeated according to
/// multiplicity.
pub fn numeric_roots(f: &IntPoly) -> Result<Vec<Complex64>> {
    if !f.is_monic() || f.degree() == Some(0) {
        return Err(Error::NotMonic);
    }
    let zeros = f.zero_root_multiplicity();
    let mut roots = vec![Complex64::zero(); zeros];
    let rest = f.shift_down(zeros);
    if rest.degree() == Some(0) {
        return Ok(roots);
    }
    for (part, mult) in squarefree_parts(&RatPoly::from_int(&rest)) {
        let simple = simple_roots(&part.to_f64_monic())?;
        for z in simple {
            roots.extend(std::iter::repeat_n(z, mult));
        }
    }
    debug_assert_eq!(Some(roots.len()), f.degree());
    Ok(roots)
}

/// `true` iff every root of `f` has modulus at most `1 + tol`.
pub fn roots_in_disc_numeric(f: &IntPoly, tol: f64) -> Result<bool> {
    Ok(numeric_roots(f)?.iter().all(|z| z.norm() <= 1.0 + tol))
}

/// The default tolerance on root moduli.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
