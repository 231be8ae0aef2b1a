//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending order, index = power. The zero
//! polynomial is the empty coefficient vector (trailing zeros are always
//! trimmed), and its degree is `None`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0; intended for literals.
pub fn rfrac(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rfrac denominator must be nonzero");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// 2^k as a rational, k may be negative.
pub fn pow2(k: i64) -> Rat {
    if k >= 0 {
        Rat::from_integer(BigInt::from(2).pow(k as u32))
    } else {
        Rat::new(BigInt::one(), BigInt::from(2).pow((-k) as u32))
    }
}

/// Best-effort conversion to f64 (NaN when out of range).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn x() -> Self {
        Polynomial::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::new(vec![c])
    }

    /// c * x^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// Ascending integer coefficients; convenient for fixtures and tests.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rint(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^k, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    /// Coefficients converted once for repeated float evaluation.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rat_to_f64).collect()
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rint(k as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Leading coefficient normalized to 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&(Rat::one() / lc)),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn divrem(&self, div: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = div.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lc = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lc;
            for (i, c) in div.coeffs.iter().enumerate() {
                let t = &rem[k + i] - &q * c;
                rem[k + i] = t;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = q;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// True when `div` divides self exactly.
    pub fn divisible_by(&self, div: &Polynomial) -> bool {
        matches!(self.divrem(div), Ok((_, r)) if r.is_zero())
    }

    /// Writes self = c * q with q primitive over the integers and a positive
    /// leading coefficient. The zero polynomial returns (1, 0).
    pub fn integer_primitive(&self) -> (Rat, Polynomial) {
        if self.is_zero() {
            return (Rat::one(), Polynomial::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let q = Polynomial::new(
            ints.iter()
                .map(|v| Rat::from_integer(v / &content))
                .collect(),
        );
        (Rat::new(content, den_lcm), q)
    }

    pub fn neg_ref(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Monic greatest common divisor (zero when both inputs are zero).
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut r0 = a.monic();
    let mut r1 = b.monic();
    while !r1.is_zero() {
        let r2 = r0.divrem(&r1).expect("nonzero divisor").1.monic();
        r0 = r1;
        r1 = r2;
    }
    r0
}

/// Wronskian of two polynomials, p q' - p' q.
pub fn wronskian2(p: &Polynomial, q: &Polynomial) -> Polynomial {
    &(p * &q.derivative()) - &(&p.derivative() * q)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &coeffs[i + j] + a * b;
                coeffs[i + j] = t;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

fn fmt_coeff_mag(c: &Rat, with_var: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mag = c.abs();
    if mag.is_one() && with_var {
        return Ok(());
    }
    if mag.denom().is_one() {
        write!(f, "{}", mag.numer())
    } else if with_var {
        write!(f, "({}/{})", mag.numer(), mag.denom())
    } else {
        write!(f, "{}/{}", mag.numer(), mag.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers, integer coefficients shown without denominators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_coeff_mag(c, k > 0, f)?;
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

// JSON form: array of [numerator, denominator] decimal strings, ascending
// powers, so coefficients survive arbitrary magnitude round trips.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[c.numer().to_string(), c.denom().to_string()])?;
        }
        seq.end()
    }
}

struct PolyVisitor;

impl<'de> Visitor<'de> for PolyVisitor {
    type Value = Polynomial;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a sequence of [numerator, denominator] string pairs")
    }

    fn visit_seq<A: SeqAccess<'de>>(
        self,
        mut seq: A,
    ) -> std::result::Result<Polynomial, A::Error> {
        let mut coeffs = Vec::new();
        while let Some([n, d]) = seq.next_element::<[String; 2]>()? {
            let num = BigInt::from_str(&n)
                .map_err(|e| de::Error::custom(format!("bad numerator {n:?}: {e}")))?;
            let den = BigInt::from_str(&d)
                .map_err(|e| de::Error::custom(format!("bad denominator {d:?}: {e}")))?;
            if den.is_zero() {
                return Err(de::Error::custom("coefficient denominator is zero"));
            }
            coeffs.push(Rat::new(num, den));
        }
        Ok(Polynomial::new(coeffs))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_seq(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn zero_polynomial_conventions() {
        let z = Polynomial::new(vec![Rat::zero(), Rat::zero()]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.coeffs().len(), 0);
        assert_eq!(z, Polynomial::zero());
        assert_eq!(format!("{z}"), "0");
    }

    #[test]
    fn trailing_zeros_trimmed_on_construction() {
        let q = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
    }

    #[test]
    fn degree_and_leading() {
        let q = p(&[3, 0, 5]);
        assert_eq!(q.degree(), Some(2));
        assert_eq!(q.leading(), Some(&rint(5)));
    }

    #[test]
    fn horner_eval_matches_naive() {
        let q = p(&[1, -2, 0, 7]);
        let x = rfrac(3, 2);
        let naive = rint(1) + rint(-2) * &x + rint(7) * &x * &x * &x;
        assert_eq!(q.eval(&x), naive);
    }

    #[test]
    fn derivative_basic() {
        assert_eq!(p(&[5]).derivative(), Polynomial::zero());
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[2, -3, 0, 1, 4]);
        let b = p(&[1, 0, 2]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn divrem_by_zero_is_error() {
        assert_eq!(
            p(&[1, 1]).divrem(&Polynomial::zero()),
            Err(Error::DivisionByZeroPoly)
        );
    }

    #[test]
    fn gcd_of_shared_factor() {
        let common = p(&[1, 1]);
        let a = &common * &p(&[2, 0, 1]);
        let b = &common * &p(&[-3, 1]);
        assert_eq!(poly_gcd(&a, &b), common.monic());
    }

    #[test]
    fn integer_primitive_normalizes_sign_and_content() {
        let q = Polynomial::new(vec![rfrac(-3, 2), rint(0), rfrac(-9, 4)]);
        let (c, prim) = q.integer_primitive();
        assert_eq!(prim, p(&[2, 0, 3]));
        assert_eq!(c, rfrac(-3, 4));
        assert_eq!(prim.scale(&c), q);
    }

    #[test]
    fn wronskian_of_powers() {
        // W(x^2, x^3) = x^4.
        let w = wronskian2(&Polynomial::monomial(Rat::one(), 2), &Polynomial::monomial(Rat::one(), 3));
        assert_eq!(w, Polynomial::monomial(Rat::one(), 4));
    }

    #[test]
    fn display_layout() {
        assert_eq!(format!("{}", p(&[3, 0, 0, 0, 4])), "4x^4 + 3");
        assert_eq!(format!("{}", p(&[0, 0, -384])), "-384x^2");
        assert_eq!(format!("{}", p(&[-1, 1])), "x - 1");
        assert_eq!(
            format!("{}", Polynomial::new(vec![rfrac(1, 2), rfrac(-3, 2)])),
            "-(3/2)x + 1/2"
        );
    }

    #[test]
    fn serde_round_trip_keeps_exact_coefficients() {
        let q = Polynomial::new(vec![rfrac(22, 7), rint(-5), Rat::zero(), rint(1)]);
        let s = serde_json::to_string(&q).unwrap();
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn serde_rejects_zero_denominator() {
        let s = r#"[["1","0"]]"#;
        assert!(serde_json::from_str::<Polynomial>(s).is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..8).prop_map(|(n, d)| rfrac(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rat(), 0..6).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
            prop_assert_eq!(&a * &Polynomial::one(), a.clone());
            prop_assert_eq!(&a - &a, Polynomial::zero());
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn wronskian_antisymmetric_and_bilinear(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(wronskian2(&a, &b), -&wronskian2(&b, &a));
            let lhs = wronskian2(&(&a + &b), &c);
            let rhs = &wronskian2(&a, &c) + &wronskian2(&b, &c);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(wronskian2(&a, &a), Polynomial::zero());
        }

        #[test]
        fn divrem_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }

        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), x in arb_rat()) {
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn serde_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: Polynomial = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
