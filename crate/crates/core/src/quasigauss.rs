//! Functions of the form scale * R(x) * exp(s x^2 / 2) with R rational and
//! s in {-1, 0, +1}.
//!
//! This class is closed under d/dx and under multiplication by rational
//! functions, which is exactly what first order operators W(x) +- d/dx need.
//! The rational part and the exponent sign are exact; only `scale` is a
//! float, and every operation passes it through untouched.

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rat};
use crate::ratfunc::RationalFunction;
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussSign {
    Minus,
    Zero,
    Plus,
}

impl GaussSign {
    pub fn as_i8(self) -> i8 {
        match self {
            GaussSign::Minus => -1,
            GaussSign::Zero => 0,
            GaussSign::Plus => 1,
        }
    }

    pub fn from_i8(s: i8) -> Result<Self> {
        match s {
            -1 => Ok(GaussSign::Minus),
            0 => Ok(GaussSign::Zero),
            1 => Ok(GaussSign::Plus),
            other => Err(Error::InvalidParams(format!(
                "gaussian exponent sign must be -1, 0 or +1, got {other}"
            ))),
        }
    }

    fn as_rat(self) -> Rat {
        crate::poly::rint(self.as_i8() as i64)
    }
}

impl Serialize for GaussSign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for GaussSign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i8::deserialize(d)?;
        GaussSign::from_i8(v).map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuasiGaussian {
    pub r: RationalFunction,
    pub s: GaussSign,
    /// Overall float prefactor, typically a normalization constant. Exact
    /// operations never touch it.
    pub scale: f64,
}

impl QuasiGaussian {
    pub fn new(r: RationalFunction, s: GaussSign) -> Self {
        QuasiGaussian { r, s, scale: 1.0 }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn from_poly(p: Polynomial, s: GaussSign) -> Self {
        QuasiGaussian::new(RationalFunction::from_poly(p), s)
    }

    /// Zero iff the rational part is zero, regardless of scale.
    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// d/dx: (R' + s x R) e^{s x^2/2}, same class.
    pub fn derivative(&self) -> QuasiGaussian {
        QuasiGaussian {
            r: &self.r.derivative() + &self.sxr(),
            s: self.s,
            scale: self.scale,
        }
    }

    fn sxr(&self) -> RationalFunction {
        let x = RationalFunction::from_poly(Polynomial::x());
        (&x * &self.r).scale(&self.s.as_rat())
    }

    /// Second derivative through the one-step closed form
    /// (R'' + 2 s x R' + (s + s^2 x^2) R) e^{s x^2/2}. Production code uses
    /// `derivative()` twice; this is the independent cross check.
    pub fn second_derivative_direct(&self) -> QuasiGaussian {
        let s = self.s.as_rat();
        let x2 = Polynomial::from_ints(&[0, 0, 1]);
        let front = RationalFunction::from_poly(
            &Polynomial::constant(s.clone()) + &x2.scale(&(&s * &s)),
        );
        let x = RationalFunction::from_poly(Polynomial::x());
        let r = &(&self.r.derivative().derivative()
            + &(&x * &self.r.derivative()).scale(&(s * crate::poly::rint(2))))
            + &(&front * &self.r);
        QuasiGaussian {
            r,
            s: self.s,
            scale: self.scale,
        }
    }

    pub fn mul_rat(&self, c: &Rat) -> QuasiGaussian {
        QuasiGaussian {
            r: self.r.scale(c),
            s: self.s,
            scale: self.scale,
        }
    }

    pub fn mul_ratfunc(&self, f: &RationalFunction) -> QuasiGaussian {
        QuasiGaussian {
            r: &self.r * f,
            s: self.s,
            scale: self.scale,
        }
    }

    /// Exact sum; both exponent signs and both scales must agree.
    pub fn add_checked(&self, rhs: &QuasiGaussian) -> Result<QuasiGaussian> {
        self.same_class(rhs)?;
        Ok(QuasiGaussian {
            r: &self.r + &rhs.r,
            s: self.s,
            scale: self.scale,
        })
    }

    pub fn sub_checked(&self, rhs: &QuasiGaussian) -> Result<QuasiGaussian> {
        self.same_class(rhs)?;
        Ok(QuasiGaussian {
            r: &self.r - &rhs.r,
            s: self.s,
            scale: self.scale,
        })
    }

    fn same_class(&self, rhs: &QuasiGaussian) -> Result<()> {
        if self.s != rhs.s {
            return Err(Error::ClassMismatch {
                left: self.s.as_i8(),
                right: rhs.s.as_i8(),
            });
        }
        if self.scale != rhs.scale {
            return Err(Error::ScaleMismatch {
                left: self.scale,
                right: rhs.scale,
            });
        }
        Ok(())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.scale * self.r.eval_f64(x) * (0.5 * self.s.as_i8() as f64 * x * x).exp()
    }
}

impl fmt::Display for QuasiGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tail = match self.s {
            GaussSign::Minus => " * exp(-x^2/2)",
            GaussSign::Zero => "",
            GaussSign::Plus => " * exp(+x^2/2)",
        };
        if self.scale == 1.0 {
            write!(f, "[{}]{}", self.r, tail)
        } else {
            write!(f, "{} * [{}]{}", self.scale, self.r, tail)
        }
    }
}

/// Outcome of comparing two quasi gaussians for exact proportionality of
/// their rational parts (scales are deliberately ignored; callers combine
/// them separately).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Proportionality {
    BothZero,
    LeftZero,
    RightZero,
    Ratio(Rat),
    NotProportional,
}

/// Compares exact parts; errors when the exponent signs differ, which is a
/// different statement than "not proportional".
pub fn proportionality(a: &QuasiGaussian, b: &QuasiGaussian) -> Result<Proportionality> {
    if a.s != b.s {
        return Err(Error::ClassMismatch {
            left: a.s.as_i8(),
            right: b.s.as_i8(),
        });
    }
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Ok(Proportionality::BothZero),
        (true, false) => return Ok(Proportionality::LeftZero),
        (false, true) => return Ok(Proportionality::RightZero),
        (false, false) => {}
    }
    // a.r / b.r must reduce to a constant.
    let p = a.r.num() * b.r.den();
    let q = b.r.num() * a.r.den();
    if p.degree() != q.degree() {
        return Ok(Proportionality::NotProportional);
    }
    let lambda = p.leading().unwrap() / q.leading().unwrap();
    if p == q.scale(&lambda) {
        Ok(Proportionality::Ratio(lambda))
    } else {
        Ok(Proportionality::NotProportional)
    }
}

// JSON keeps the exact parts exact and writes the float scale as a decimal
// string so the round trip is bit faithful.
#[derive(Serialize, Deserialize)]
struct QgWire {
    r: RationalFunction,
    s: GaussSign,
    scale: String,
}

impl Serialize for QuasiGaussian {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QgWire {
            r: self.r.clone(),
            s: self.s,
            scale: format!("{:?}", self.scale),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasiGaussian {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = QgWire::deserialize(d)?;
        let scale: f64 = wire
            .scale
            .parse()
            .map_err(|e| de::Error::custom(format!("bad scale {:?}: {e}", wire.scale)))?;
        Ok(QuasiGaussian {
            r: wire.r,
            s: wire.s,
            scale,
        })
    }
}
