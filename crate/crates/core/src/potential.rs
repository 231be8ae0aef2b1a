//! Potentials of the form V(x) = x^2 + rational(x), with the rational tail
//! (including any additive constant) stored exactly.

use crate::poly::{rint, Polynomial, Rat};
use crate::quasigauss::QuasiGaussian;
use crate::ratfunc::RationalFunction;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Potential {
    rational: RationalFunction,
    label: String,
}

impl Potential {
    pub fn new(rational: RationalFunction, label: impl Into<String>) -> Self {
        Potential {
            rational,
            label: label.into(),
        }
    }

    /// The plain harmonic oscillator x^2.
    pub fn oscillator() -> Self {
        Potential::new(RationalFunction::zero(), "x^2")
    }

    /// Everything except the implicit x^2 term.
    pub fn rational(&self) -> &RationalFunction {
        &self.rational
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        x * x + self.rational.eval_f64(x)
    }

    /// Applies -d^2/dx^2 + V to a quasi gaussian, exactly. The scale of the
    /// state passes through.
    pub fn apply_to(&self, f: &QuasiGaussian) -> QuasiGaussian {
        let x2 = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1]));
        let v_tot = &x2 + &self.rational;
        let d2 = f.derivative().derivative();
        QuasiGaussian {
            r: &(&f.r * &v_tot) - &d2.r,
            s: f.s,
            scale: f.scale,
        }
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rational.is_zero() {
            write!(f, "x^2")
        } else {
            write!(f, "x^2 + {}", self.rational)
        }
    }
}

/// Display form x^2 + A/D + B/D^2 + K where D is the primitive integer part
/// of the denominator seed (content removed, positive leading coefficient)
/// and A, B are the integer polynomial quotient and remainder of the exact
/// rational tail against D. This is the conventional way these potentials
/// are written out, and it is exact: A/D + B/D^2 + K equals the rational
/// tail identically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialLayout {
    pub a: Polynomial,
    pub b: Polynomial,
    pub d: Polynomial,
    #[serde(with = "crate::jsonio::rat_pair")]
    pub k: Rat,
}

impl PotentialLayout {
    /// Splits -2 (p''p - p'^2)/p^2 + k over the primitive part of p.
    pub fn from_seed(p: &Polynomial, k: Rat) -> Self {
        let (_, d) = p.integer_primitive();
        // numerator of the x^2-free tail over d^2; content of p cancels.
        let raw = &(&d.derivative() * &d.derivative()).scale(&rint(2))
            - &(&d.derivative().derivative() * &d).scale(&rint(2));
        let (a, b) = raw.divrem(&d).expect("seed nonzero");
        PotentialLayout { a, b, d, k }
    }

    /// Recombines the layout into a single exact rational function.
    pub fn as_rational(&self) -> RationalFunction {
        let d = RationalFunction::from_poly(self.d.clone());
        let d2 = &d * &d;
        let a_over_d = RationalFunction::new(self.a.clone(), self.d.clone()).expect("d nonzero");
        let b_over_d2 =
            RationalFunction::new(self.b.clone(), d2.num().clone()).expect("d^2 nonzero");
        &(&a_over_d + &b_over_d2) + &RationalFunction::constant(self.k.clone())
    }
}

/// Writes a numerator with its integer content factored out, the way these
/// closed forms are conventionally typeset: 96x^4 + 120 becomes
/// 24(4x^4 + 5), and a monomial like 384x^2 stays bare.
fn fmt_numerator(q: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let (c, prim) = q.integer_primitive();
    if !c.denom().is_one() {
        // Non-integer content; no conventional factored form, print as is.
        return write!(f, "({q})");
    }
    let multi_term = prim.coeffs().iter().filter(|v| !v.is_zero()).count() > 1;
    if prim == Polynomial::one() {
        return write!(f, "{}", c.numer());
    }
    if c.is_one() {
        return if multi_term {
            write!(f, "({prim})")
        } else {
            write!(f, "{prim}")
        };
    }
    if multi_term {
        write!(f, "{}({prim})", c.numer())
    } else {
        write!(f, "{}{prim}", c.numer())
    }
}

impl fmt::Display for PotentialLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2")?;
        for (term, square) in [(&self.a, false), (&self.b, true)] {
            if term.is_zero() {
                continue;
            }
            let negative = term.leading().is_some_and(|lc| lc.is_negative());
            write!(f, " {} ", if negative { "-" } else { "+" })?;
            let magnitude = if negative { -term } else { term.clone() };
            fmt_numerator(&magnitude, f)?;
            write!(f, "/({})", self.d)?;
            if square {
                write!(f, "^2")?;
            }
        }
        if !self.k.is_zero() {
            if self.k.is_negative() {
                write!(f, " - {}", -self.k.clone())?;
            } else {
                write!(f, " + {}", self.k)?;
            }
        }
        Ok(())
    }
}
