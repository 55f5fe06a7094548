//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Forcing polynomials have non-negative coefficients, but the turning-row
//! recurrence subtracts an inclusion-exclusion term before the final value
//! settles, so the representation is signed throughout and callers assert
//! non-negativity on finished results.
//!
//! # Design notes
//!
//! * Coefficients live in a `Vec<BigInt>` indexed by exponent with trailing
//!   zeros trimmed; the zero polynomial is the empty vector.
//! * Arithmetic is implemented on references so sums of many terms do not
//!   clone intermediates.
//! * The JSON form is an array of decimal strings indexed by exponent,
//!   which survives coefficients beyond `u64` without loss.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![BigInt::one()] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn monomial(exponent: usize, coeff: BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = coeff;
        Polynomial { coeffs }
    }

    /// Build from coefficients indexed by exponent; trailing zeros are fine.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficient of `x^exponent` (zero beyond the degree).
    pub fn coeff(&self, exponent: usize) -> BigInt {
        self.coeffs.get(exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients indexed by exponent, without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exponents with nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, _)| e)
            .collect()
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(|c| c.sign() == num_bigint::Sign::Minus)
    }

    /// Multiply by `x^w` in place.
    pub fn shift_up(&mut self, w: usize) {
        if !self.is_zero() && w > 0 {
            self.coeffs.splice(0..0, std::iter::repeat_with(BigInt::zero).take(w));
        }
    }

    /// Sum of coefficients. For a forcing polynomial this is the number of
    /// perfect matchings.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Coefficients as decimal strings indexed by exponent.
    pub fn to_decimal_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_coeffs(coeffs: &[impl AsRef<str>]) -> Result<Self, Error> {
        let parsed: Result<Vec<BigInt>, _> =
            coeffs.iter().map(|s| s.as_ref().parse::<BigInt>()).collect();
        match parsed {
            Ok(cs) => Ok(Self::from_coeffs(cs)),
            Err(e) => Err(Error::Parse(format!("bad coefficient: {e}"))),
        }
    }

    /// LaTeX form with descending powers, e.g. `4x^{2}+x`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let coeff_is_one = mag == &num_bigint::BigUint::one();
            if e == 0 || !coeff_is_one {
                out.push_str(&mag.to_string());
            }
            if e >= 1 {
                out.push('x');
            }
            if e >= 2 {
                if latex {
                    out.push_str(&format!("^{{{e}}}"));
                } else {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

/// Plain text with descending powers, e.g. `4x^2+x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize_with(rhs.coeffs.len(), BigInt::zero);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize_with(rhs.coeffs.len(), BigInt::zero);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_coeffs().serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<String>::deserialize(deserializer)?;
        Polynomial::from_decimal_coeffs(&coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_matches_hand_value() {
        // (1 + 2x) * x = x + 2x^2
        let lhs = p(&[1, 2]);
        let got = &lhs * &Polynomial::x();
        assert_eq!(got, p(&[0, 1, 2]));
        assert_eq!(got.to_string(), "2x^2+x");
    }

    #[test]
    fn zero_and_one_behave() {
        let z = Polynomial::zero();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.min_exponent(), None);
        assert_eq!(z.to_string(), "0");
        assert_eq!(&z + &Polynomial::one(), Polynomial::one());
        assert_eq!(&z * &p(&[3, 4]), Polynomial::zero());
        assert_eq!(&Polynomial::one() * &p(&[3, 4]), p(&[3, 4]));
    }

    #[test]
    fn sub_cancels_to_zero() {
        let a = p(&[4, 0, 7]);
        assert!((&a - &a).is_zero());
        let b = &p(&[1, 2]) - &p(&[1, 2, 3]);
        assert_eq!(b, p(&[0, 0, -3]));
        assert!(b.has_negative_coeff());
        assert_eq!(b.to_string(), "-3x^2");
    }

    #[test]
    fn shift_is_mul_by_power_of_x() {
        let mut a = p(&[2, 1]);
        a.shift_up(2);
        assert_eq!(a, p(&[0, 0, 2, 1]));
        let mut z = Polynomial::zero();
        z.shift_up(5);
        assert!(z.is_zero());
    }

    #[test]
    fn support_degree_min_exponent() {
        let a = p(&[0, 1, 0, 4]);
        assert_eq!(a.support(), vec![1, 3]);
        assert_eq!(a.degree(), Some(3));
        assert_eq!(a.min_exponent(), Some(1));
        assert_eq!(a.eval_at_one(), BigInt::from(5));
    }

    #[test]
    fn rendering_styles() {
        let a = p(&[0, 1, 4]);
        assert_eq!(a.to_string(), "4x^2+x");
        assert_eq!(a.to_latex(), "4x^{2}+x");
        assert_eq!(p(&[7]).to_string(), "7");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]).to_latex(), "x^{10}");
        assert_eq!(p(&[-2, 3]).to_string(), "3x-2");
    }

    #[test]
    fn decimal_coeff_round_trip() {
        let a = p(&[0, 1, 4]);
        let s = a.to_decimal_coeffs();
        assert_eq!(s, vec!["0", "1", "4"]);
        assert_eq!(Polynomial::from_decimal_coeffs(&s).unwrap(), a);
        assert!(Polynomial::from_decimal_coeffs(&["4", "x"]).is_err());
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"["0","1","4"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), a);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|cs| p(&cs))
    }

    proptest! {
        #[test]
        fn add_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mul_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), at in -9i64..9) {
            let at = BigInt::from(at);
            prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
        }

        #[test]
        fn add_then_sub_round_trips(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
