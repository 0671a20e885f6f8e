//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending-power order (`coeffs[i]` multiplies
//! `z^i`) and are arbitrary precision. The zero polynomial is the empty
//! coefficient list; every other polynomial has a nonzero leading coefficient.

mod newton;

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use newton::{power_map, power_map_orbit, power_sums, from_power_sums, Orbit, PowerSums, PowerSumStream};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming high zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `z^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.coeffs[0] -= 1;
        Self::new(p.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Multiplicity of the root `z = 0`, i.e. the number of vanishing low
    /// coefficients. Zero for the zero polynomial.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `z^k`; the `k` low coefficients must already be zero.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        IntPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`. Fails with [`Error::NotDivisible`]
    /// when the division leaves a remainder or a quotient coefficient would
    /// not be an integer.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let dg = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let Some(df) = self.degree() else {
            return Ok(Self::zero());
        };
        if df < dg {
            return Err(Error::NotDivisible);
        }
        let lead = &divisor.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); df - dg + 1];
        for i in (0..=df - dg).rev() {
            let top = &rem[i + dg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, g) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * g;
            }
            quot[i] = q;
        }
        if rem[..dg].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Largest absolute coefficient (zero for the zero polynomial).
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Ascending coefficients as `f64`, for numeric work.
    pub fn to_f64s(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Comma-separated ascending coefficients, the inverse of [`FromStr`].
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(coeffs: Vec<BigInt>) -> Self {
        IntPoly::new(coeffs)
    }
}

/// Parses comma-separated ascending coefficients: `"1,1,1"` is `z^2 + z + 1`.
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("invalid coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::new)
    }
}

/// Descending-power human form, e.g. `z^2 - 2z + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn normalisation_trims_leading_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn products() {
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        let f = p(&[3, -2, 0, 7]);
        assert_eq!(f.mul(&IntPoly::one()), f);
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1, 1])), IntPoly::x_pow_minus_one(3));
        assert!(f.mul(&IntPoly::zero()).is_zero());
        assert!(p(&[-1, 1]).mul(&p(&[1, 1])).is_monic());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        let f = p(&[2, 0, -3, 1]);
        assert_eq!(f.div_exact(&f).unwrap(), IntPoly::one());
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), Err(Error::NotDivisible));
        assert_eq!(f.div_exact(&IntPoly::zero()), Err(Error::ZeroDivisor));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[1, 0, 1])), Err(Error::NotDivisible));
        // quotient would need a rational coefficient
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), Err(Error::NotDivisible));
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 2])).unwrap(), p(&[2]));
    }

    #[test]
    fn remainder_of_z2_plus_1_by_z_minus_1_is_two() {
        // long-division oracle: z^2 + 1 = (z + 1)(z - 1) + 2
        let q = p(&[1, 1]);
        let back = q.mul(&p(&[-1, 1]));
        let rem: Vec<BigInt> = p(&[1, 0, 1])
            .coeffs()
            .iter()
            .zip(back.coeffs())
            .map(|(a, b)| a - b)
            .collect();
        assert_eq!(IntPoly::new(rem), p(&[2]));
    }

    #[test]
    fn parse_and_display() {
        let f: IntPoly = "1,1,1".parse().unwrap();
        assert_eq!(f, p(&[1, 1, 1]));
        assert_eq!(f.to_string(), "z^2 + z + 1");
        assert_eq!(p(&[1, -2, 1]).to_string(), "z^2 - 2z + 1");
        assert_eq!(p(&[0, 0, 1]).to_string(), "z^2");
        assert_eq!(p(&[-1, 1]).to_string(), "z - 1");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "z^3 - z");
        assert_eq!(p(&[1, 0, -3]).to_string(), "-3z^2 + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(" -1 , 0,0, 1".parse::<IntPoly>().unwrap(), p(&[-1, 0, 0, 1]));
        assert!("1,x".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
        assert!("1,,2".parse::<IntPoly>().is_err());
    }

    #[test]
    fn shifts_and_zero_roots() {
        let f = p(&[0, 0, 1, 1]);
        assert_eq!(f.zero_root_multiplicity(), 2);
        assert_eq!(f.shift_down(2), p(&[1, 1]));
        assert_eq!(p(&[1, 1]).shift_up(2), f);
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn product_divides_back(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            let fg = f.mul(&g);
            prop_assert_eq!(fg.div_exact(&g).unwrap(), f.clone());
            prop_assert_eq!(fg, g.mul(&f));
        }

        #[test]
        fn coefficient_string_round_trips(f in arb_poly()) {
            let back: IntPoly = f.to_coeff_string().parse().unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
