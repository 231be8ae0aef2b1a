//! Hermite and pseudo-Hermite seeds, the double-indexed exceptional
//! polynomial families built from them, and the associated rationally
//! extended oscillator potentials, spectra and bound states.
//!
//! Everything in this module is exact. Degrees, leading coefficients and
//! nodelessness are checked at construction time, so a successfully built
//! family is already a certificate that the defining identities hold.

use crate::error::{Error, Result};
use crate::poly::{factorial, pow2, rat_to_f64, rint, wronskian2, Polynomial, Rat};
use crate::potential::{Potential, PotentialLayout};
use crate::quasigauss::{GaussSign, QuasiGaussian};
use crate::ratfunc::RationalFunction;
use crate::sturm::{count_real_roots, is_nodeless};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Physicists' Hermite polynomial H_n via the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
pub fn hermite(n: u32) -> Polynomial {
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::from_ints(&[0, 2]);
    for k in 1..n {
        let next = &(&Polynomial::from_ints(&[0, 2]) * &cur)
            - &prev.scale(&rint(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Pseudo-Hermite polynomial, H_m with x rotated to the imaginary axis so
/// that all coefficients are positive: recurrence with a + sign,
/// 𝓗_{m+1} = 2x 𝓗_m + 2m 𝓗_{m-1}.
pub fn pseudo_hermite(m: u32) -> Polynomial {
    let mut prev = Polynomial::one();
    if m == 0 {
        return prev;
    }
    let mut cur = Polynomial::from_ints(&[0, 2]);
    for k in 1..m {
        let next = &(&Polynomial::from_ints(&[0, 2]) * &cur)
            + &prev.scale(&rint(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Degree-validated front door for callers holding raw integers.
pub fn hermite_checked(n: i64) -> Result<Polynomial> {
    if n < 0 {
        return Err(Error::InvalidParams(format!(
            "Hermite degree must be nonnegative, got {n}"
        )));
    }
    Ok(hermite(n as u32))
}

pub fn pseudo_hermite_checked(m: i64) -> Result<Polynomial> {
    if m < 0 {
        return Err(Error::InvalidParams(format!(
            "pseudo-Hermite degree must be nonnegative, got {m}"
        )));
    }
    Ok(pseudo_hermite(m as u32))
}

/// The index pair (m1, m2): m1 positive even, m2 odd, m2 > m1. The m1 = 0
/// case degenerates to the single-index family and is rejected here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    m1: u32,
    m2: u32,
}

/// The five explicitly published parameter pairs, used as the default grid
/// for verification runs.
pub const DEFAULT_GRID: [(u32, u32); 5] = [(2, 3), (2, 5), (2, 7), (4, 5), (4, 7)];

impl FamilyParams {
    pub fn new(m1: u32, m2: u32) -> Result<Self> {
        if m1 == 0 || m1 % 2 != 0 || m2 % 2 != 1 || m2 <= m1 {
            return Err(Error::InvalidParams(format!(
                "need m1 even and positive, m2 odd, m2 > m1 (got m1 = {m1}, m2 = {m2})"
            )));
        }
        Ok(FamilyParams { m1, m2 })
    }

    pub fn m1(&self) -> u32 {
        self.m1
    }

    pub fn m2(&self) -> u32 {
        self.m2
    }

    /// Codimension of the polynomial family, m1 + m2 - 1.
    pub fn mu(&self) -> u32 {
        self.m1 + self.m2 - 1
    }

    /// Gap between the seed degrees, m2 - m1; always odd.
    pub fn ell(&self) -> u32 {
        self.m2 - self.m1
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m1, m2) = ({}, {})", self.m1, self.m2)
    }
}

/// Wronskian of the two pseudo-Hermite seeds, computed both directly and
/// through the reduced two-product form; the two must agree identically.
pub fn wronskian_g(p: &FamilyParams) -> Polynomial {
    let (m1, m2) = (p.m1 as i64, p.m2 as i64);
    let h1 = pseudo_hermite(p.m1);
    let h2 = pseudo_hermite(p.m2);
    let direct = wronskian2(&h1, &h2);
    let reduced = &(&h1 * &pseudo_hermite(p.m2 - 1)).scale(&rint(2 * m2))
        - &(&pseudo_hermite(p.m1 - 1) * &h2).scale(&rint(2 * m1));
    assert_eq!(direct, reduced, "the two closed forms of g must agree");
    assert_eq!(direct.degree(), Some(p.mu() as usize));
    assert_eq!(
        direct.leading(),
        Some(&(pow2(p.mu() as i64 + 1) * rint(m2 - m1)))
    );
    direct
}

/// Wronskian of the derivatives of the seeds, again with a dual-form cross
/// check; degree mu - 2.
pub fn gbar(p: &FamilyParams) -> Polynomial {
    let (m1, m2) = (p.m1 as i64, p.m2 as i64);
    let h1 = pseudo_hermite(p.m1);
    let h2 = pseudo_hermite(p.m2);
    let direct = wronskian2(&h1.derivative(), &h2.derivative());
    let reduced = &(&h1.derivative() * &h2).scale(&rint(2 * m2))
        - &(&h1 * &h2.derivative()).scale(&rint(2 * m1));
    assert_eq!(direct, reduced, "the two closed forms of gbar must agree");
    assert_eq!(direct.degree(), Some(p.mu() as usize - 2));
    direct
}

/// -2 [h''/h - (h'/h)^2] as a single reduced rational function.
fn log_curvature_tail(h: &Polynomial) -> RationalFunction {
    let num = &(&h.derivative() * &h.derivative()).scale(&rint(2))
        - &(&h.derivative().derivative() * h).scale(&rint(2));
    RationalFunction::new(num, h * h).expect("seed polynomial is nonzero")
}

fn with_constant(tail: RationalFunction, k: i64) -> RationalFunction {
    &tail + &RationalFunction::constant(rint(k))
}

/// One-step extension x^2 - 2 [𝓗_m''/𝓗_m - (𝓗_m'/𝓗_m)^2] - 2 built on a
/// single even seed. Requires m even and positive so 𝓗_m is nodeless.
pub fn potential_v_minus(m: i64) -> Result<Potential> {
    if m <= 0 || m % 2 != 0 {
        return Err(Error::InvalidParams(format!(
            "one-step extension needs a positive even seed degree (𝓗_m nodeless), got m = {m}"
        )));
    }
    let tail = log_curvature_tail(&pseudo_hermite(m as u32));
    Ok(Potential::new(
        with_constant(tail, -2),
        format!("one-step extension, m = {m}"),
    ))
}

/// Top of the factorization chain: the oscillator shifted by m1 + m2 + 1.
pub fn potential_h1(p: &FamilyParams) -> Potential {
    Potential::new(
        RationalFunction::constant(rint(p.m1 as i64 + p.m2 as i64 + 1)),
        format!("x^2 + {}", p.m1 + p.m2 + 1),
    )
}

/// Intermediate channel, regular: extension over the even seed 𝓗_{m1}.
pub fn potential_middle(p: &FamilyParams) -> Potential {
    let tail = log_curvature_tail(&pseudo_hermite(p.m1));
    Potential::new(
        with_constant(tail, p.m1 as i64 + p.m2 as i64 - 1),
        format!("intermediate channel for {p}"),
    )
}

/// Mirror intermediate channel over the odd seed 𝓗_{m2}. Singular at the
/// origin, used only as a formal tool inside operator chains; never fed to
/// an eigensolver here.
pub fn potential_vbar(p: &FamilyParams) -> Potential {
    let tail = log_curvature_tail(&pseudo_hermite(p.m2));
    Potential::new(
        with_constant(tail, p.m1 as i64 + p.m2 as i64 - 1),
        format!("mirror intermediate channel for {p} (singular at x = 0)"),
    )
}

/// Rung i of the interpolating chain, i = 1 ..= ell + 1, built over the
/// seed 𝓗_{m1+i-1} with constant -3. Odd-seed rungs are singular at the
/// origin and formal only.
pub fn potential_hat(p: &FamilyParams, i: u32) -> Result<Potential> {
    if i == 0 || i > p.ell() + 1 {
        return Err(Error::InvalidParams(format!(
            "chain rung index must satisfy 1 <= i <= ell + 1 = {}, got {i}",
            p.ell() + 1
        )));
    }
    let tail = log_curvature_tail(&pseudo_hermite(p.m1 + i - 1));
    Ok(Potential::new(
        with_constant(tail, -3),
        format!("chain rung {i} for {p}"),
    ))
}

/// The fully extended potential
/// x^2 - 2 [g''/g - (g'/g)^2] + m1 + m2 - 3.
pub fn potential_v2(p: &FamilyParams) -> Potential {
    let tail = log_curvature_tail(&wronskian_g(p));
    Potential::new(
        with_constant(tail, p.m1 as i64 + p.m2 as i64 - 3),
        format!("rational extension for {p}"),
    )
}

/// First, single-index exceptional family: degree set {0} ∪ {m+1, m+2, ...}.
pub fn eop_first(m: u32, n: u32) -> Result<Polynomial> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    if n <= m {
        return Err(Error::DegreeGap {
            n: n as i64,
            admissible: format!("{{0}} ∪ {{{}, {}, ...}}", m + 1, m + 2),
        });
    }
    let nu = (n - m - 1) as i64;
    let y = &(-&(&pseudo_hermite(m) * &hermite(nu as u32 + 1)))
        - &(&pseudo_hermite(m.saturating_sub(1)) * &hermite(nu as u32)).scale(&rint(2 * m as i64));
    assert_eq!(y.degree(), Some(n as usize));
    Ok(y)
}

/// Double-indexed exceptional family: degree set
/// {m1, m2} ∪ {m1 + m2 + 1, m1 + m2 + 2, ...}, exactly mu gaps.
pub fn eop_second(p: &FamilyParams, n: u32) -> Result<Polynomial> {
    let (m1, m2) = (p.m1, p.m2);
    if n == m1 {
        return Ok(pseudo_hermite(m1));
    }
    if n == m2 {
        return Ok(pseudo_hermite(m2));
    }
    if n <= m1 + m2 {
        return Err(Error::DegreeGap {
            n: n as i64,
            admissible: format!(
                "{{{m1}, {m2}}} ∪ {{{}, {}, ...}}",
                m1 + m2 + 1,
                m1 + m2 + 2
            ),
        });
    }
    let nu = (n - m1 - m2 - 1) as i64;
    let h1 = pseudo_hermite(m1);
    let h2 = pseudo_hermite(m2);
    let lead = (&(&h1 * &h2) * &hermite(nu as u32 + 1)).scale(&rint(m2 as i64 - m1 as i64));
    let bracket = &(&pseudo_hermite(m1 - 1) * &h2).scale(&rint(m1 as i64 * (m2 as i64 + nu + 1)))
        - &(&h1 * &pseudo_hermite(m2 - 1)).scale(&rint(m2 as i64 * (m1 as i64 + nu + 1)));
    let y = &lead + &(&bracket * &hermite(nu as u32)).scale(&rint(2));
    assert_eq!(y.degree(), Some(n as usize));
    Ok(y)
}

/// True when n is in the degree set of the double-indexed family.
pub fn admissible_degree_second(p: &FamilyParams, n: u32) -> bool {
    n == p.m1 || n == p.m2 || n > p.m1 + p.m2
}

/// The degree set up to max_n inclusive.
pub fn degree_set_second(p: &FamilyParams, max_n: u32) -> Vec<u32> {
    (0..=max_n)
        .filter(|&n| admissible_degree_second(p, n))
        .collect()
}

/// Residual of the single-index family equation, multiplied through by 𝓗_m
/// so it stays polynomial:
/// 𝓗_m y'' - 2 (x 𝓗_m + 𝓗_m') y' + 2 n 𝓗_m y. Must vanish identically.
pub fn diffeq_residual_first(m: u32, n: u32) -> Result<Polynomial> {
    let y = eop_first(m, n)?;
    let h = pseudo_hermite(m);
    let term1 = &h * &y.derivative().derivative();
    let drift = &(&Polynomial::x() * &h) + &h.derivative();
    let term2 = (&drift * &y.derivative()).scale(&rint(2));
    let term3 = (&h * &y).scale(&rint(2 * n as i64));
    Ok(&(&term1 - &term2) + &term3)
}

/// Residual of the double-indexed family equation, multiplied through by g:
/// g y'' - 2 (x g + g') y' + (2 n g + 2 gbar) y. Must vanish identically.
pub fn diffeq_residual_second(p: &FamilyParams, n: u32) -> Result<Polynomial> {
    let y = eop_second(p, n)?;
    let g = wronskian_g(p);
    let gb = gbar(p);
    let term1 = &g * &y.derivative().derivative();
    let drift = &(&Polynomial::x() * &g) + &g.derivative();
    let term2 = (&drift * &y.derivative()).scale(&rint(2));
    let term3 = &(&g.scale(&rint(2 * n as i64)) + &gb.scale(&rint(2))) * &y;
    Ok(&(&term1 - &term2) + &term3)
}

/// Which Hamiltonian of the factorization triple a state belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ham {
    /// Shifted oscillator at the top of the chain.
    H1,
    /// Intermediate one-step extension.
    Mid,
    /// Fully extended oscillator.
    H2,
}

impl fmt::Display for Ham {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ham::H1 => write!(f, "H1"),
            Ham::Mid => write!(f, "H"),
            Ham::H2 => write!(f, "H2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub nu: i64,
    pub energy: i64,
    pub which: Ham,
}

/// All three members of the triple share E = 2 nu + m1 + m2 + 2 on their
/// respective nu sets.
pub fn energy_of(p: &FamilyParams, nu: i64) -> i64 {
    2 * nu + p.m1 as i64 + p.m2 as i64 + 2
}

pub fn admissible_nu(p: &FamilyParams, which: Ham, nu: i64) -> bool {
    match which {
        Ham::H1 => nu >= 0,
        Ham::Mid => nu >= 0 || nu == -(p.m1 as i64) - 1,
        Ham::H2 => nu >= 0 || nu == -(p.m1 as i64) - 1 || nu == -(p.m2 as i64) - 1,
    }
}

fn admissible_nu_text(p: &FamilyParams, which: Ham) -> String {
    match which {
        Ham::H1 => "{0, 1, 2, ...}".to_string(),
        Ham::Mid => format!("{{{}, 0, 1, 2, ...}}", -(p.m1 as i64) - 1),
        Ham::H2 => format!(
            "{{{}, {}, 0, 1, 2, ...}}",
            -(p.m2 as i64) - 1,
            -(p.m1 as i64) - 1
        ),
    }
}

/// The nu values of a channel in increasing energy order.
pub fn nu_values(p: &FamilyParams, which: Ham) -> impl Iterator<Item = i64> {
    let below: Vec<i64> = match which {
        Ham::H1 => vec![],
        Ham::Mid => vec![-(p.m1 as i64) - 1],
        Ham::H2 => vec![-(p.m2 as i64) - 1, -(p.m1 as i64) - 1],
    };
    below.into_iter().chain(0..)
}

/// First `count` levels of the requested channel.
pub fn spectrum(p: &FamilyParams, which: Ham, count: usize) -> Vec<EnergyLevel> {
    nu_values(p, which)
        .take(count)
        .map(|nu| EnergyLevel {
            nu,
            energy: energy_of(p, nu),
            which,
        })
        .collect()
}

/// A bound state with its exact rational part and exact squared norm
/// constant. `norm_sq_sqrt_pi` is the rational q with N^2 = q / sqrt(pi);
/// the float `qg.scale` is sqrt(q) * pi^(-1/4).
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction {
    pub qg: QuasiGaussian,
    pub norm_sq_sqrt_pi: Rat,
    pub level: EnergyLevel,
}

impl Wavefunction {
    /// The same state with unit scale, for exact-arithmetic pipelines.
    pub fn exact_part(&self) -> QuasiGaussian {
        self.qg.clone().with_scale(1.0)
    }
}

fn norm_scale(q: &Rat) -> f64 {
    rat_to_f64(q).sqrt() * std::f64::consts::PI.powf(-0.25)
}

fn fact_i(n: i64) -> BigInt {
    factorial(n as u64)
}

/// Exact q with N^2 = q / sqrt(pi) for each channel and nu.
pub fn norm_sq_sqrt_pi(p: &FamilyParams, which: Ham, nu: i64) -> Result<Rat> {
    if !admissible_nu(p, which, nu) {
        return Err(Error::InadmissibleNu {
            nu,
            admissible: admissible_nu_text(p, which),
        });
    }
    let (m1, m2) = (p.m1 as i64, p.m2 as i64);
    let ell = m2 - m1;
    let q = match which {
        Ham::H1 => Rat::new(BigInt::one(), BigInt::from(2).pow(nu as u32) * fact_i(nu)),
        Ham::Mid => {
            if nu < 0 {
                // ground state below the oscillator band
                pow2(m1) * Rat::from_integer(fact_i(m1))
            } else {
                Rat::new(
                    BigInt::one(),
                    BigInt::from(2).pow(nu as u32 + 1) * BigInt::from(nu + m1 + 1) * fact_i(nu),
                )
            }
        }
        Ham::H2 => {
            if nu == -m2 - 1 {
                pow2(m2 + 1) * Rat::from_integer(fact_i(m2) * BigInt::from(ell))
            } else if nu == -m1 - 1 {
                pow2(m1 + 1) * Rat::from_integer(fact_i(m1) * BigInt::from(ell))
            } else {
                Rat::new(
                    BigInt::one(),
                    BigInt::from(2).pow(nu as u32)
                        * BigInt::from(nu + m1 + 1)
                        * BigInt::from(nu + m2 + 1)
                        * fact_i(nu),
                )
            }
        }
    };
    Ok(q)
}

/// Normalized bound state of the requested channel.
pub fn wavefunction(p: &FamilyParams, which: Ham, nu: i64) -> Result<Wavefunction> {
    if !admissible_nu(p, which, nu) {
        return Err(Error::InadmissibleNu {
            nu,
            admissible: admissible_nu_text(p, which),
        });
    }
    let m1 = p.m1;
    let r = match which {
        Ham::H1 => RationalFunction::from_poly(hermite(nu as u32)),
        Ham::Mid => {
            let num = if nu < 0 {
                Polynomial::one()
            } else {
                eop_first(m1, nu as u32 + m1 + 1)?
            };
            RationalFunction::new(num, pseudo_hermite(m1))?
        }
        Ham::H2 => {
            let n = (nu + p.mu() as i64 + 2) as u32;
            RationalFunction::new(eop_second(p, n)?, wronskian_g(p))?
        }
    };
    let q = norm_sq_sqrt_pi(p, which, nu)?;
    let qg = QuasiGaussian::new(r, GaussSign::Minus).with_scale(norm_scale(&q));
    Ok(Wavefunction {
        qg,
        norm_sq_sqrt_pi: q,
        level: EnergyLevel {
            nu,
            energy: energy_of(p, nu),
            which,
        },
    })
}

/// Oscillator eigenstate H_nu e^{-x^2/2} with unit scale, handy as an exact
/// probe function.
pub fn oscillator_probe(nu: u32) -> QuasiGaussian {
    QuasiGaussian::from_poly(hermite(nu), GaussSign::Minus)
}

/// A bound state of the standalone one-step extension -d²/dx² + V_minus.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstOrderState {
    pub qg: QuasiGaussian,
    pub norm_sq_sqrt_pi: Rat,
    pub nu: i64,
    pub energy: i64,
}

fn validate_even_seed(m: i64) -> Result<u32> {
    if m <= 0 || m % 2 != 0 {
        return Err(Error::InvalidParams(format!(
            "one-step extension needs a positive even seed degree, got m = {m}"
        )));
    }
    Ok(m as u32)
}

/// Spectrum of the standalone one-step extension: a single level at
/// -2m - 1, then the oscillator levels 2 nu + 1.
pub fn spectrum_first_order(m: i64, count: usize) -> Result<Vec<(i64, i64)>> {
    validate_even_seed(m)?;
    Ok(std::iter::once(-m - 1)
        .chain(0..)
        .take(count)
        .map(|nu| (nu, if nu < 0 { -2 * m - 1 } else { 2 * nu + 1 }))
        .collect())
}

/// Bound states of the standalone one-step extension.
pub fn wavefunction_first_order(m: i64, nu: i64) -> Result<FirstOrderState> {
    let mu = validate_even_seed(m)?;
    if nu != -m - 1 && nu < 0 {
        return Err(Error::InadmissibleNu {
            nu,
            admissible: format!("{{{}, 0, 1, 2, ...}}", -m - 1),
        });
    }
    let h = pseudo_hermite(mu);
    let (num, q, energy) = if nu < 0 {
        (
            Polynomial::one(),
            pow2(m) * Rat::from_integer(fact_i(m)),
            -2 * m - 1,
        )
    } else {
        (
            eop_first(mu, nu as u32 + mu + 1)?,
            Rat::new(
                BigInt::one(),
                BigInt::from(2).pow(nu as u32 + 1) * BigInt::from(nu + m + 1) * fact_i(nu),
            ),
            2 * nu + 1,
        )
    };
    let r = RationalFunction::new(num, h)?;
    let qg = QuasiGaussian::new(r, GaussSign::Minus).with_scale(norm_scale(&q));
    Ok(FirstOrderState {
        qg,
        norm_sq_sqrt_pi: q,
        nu,
        energy,
    })
}

/// A fully constructed family: parameters, seeds, Wronskians and the
/// extended potential, with all build-time invariants verified.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedFamily {
    params: FamilyParams,
    h1: Polynomial,
    h2: Polynomial,
    g: Polynomial,
    gbar: Polynomial,
    v2: Potential,
}

impl ExtendedFamily {
    pub fn build(params: FamilyParams) -> Result<Self> {
        let h1 = pseudo_hermite(params.m1);
        let h2 = pseudo_hermite(params.m2);
        let g = wronskian_g(&params);
        let gb = gbar(&params);
        if !is_nodeless(&g) {
            return Err(Error::Internal(format!(
                "Wronskian denominator for {params} has a real zero"
            )));
        }
        // even seed nodeless, odd seed with exactly one node
        if count_real_roots(&h1) != 0 || count_real_roots(&h2) != 1 {
            return Err(Error::Internal(format!(
                "seed node counts are off for {params}"
            )));
        }
        let v2 = potential_v2(&params);
        Ok(ExtendedFamily {
            params,
            h1,
            h2,
            g,
            gbar: gb,
            v2,
        })
    }

    pub fn from_indices(m1: u32, m2: u32) -> Result<Self> {
        ExtendedFamily::build(FamilyParams::new(m1, m2)?)
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn seed1(&self) -> &Polynomial {
        &self.h1
    }

    pub fn seed2(&self) -> &Polynomial {
        &self.h2
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn gbar(&self) -> &Polynomial {
        &self.gbar
    }

    pub fn v2(&self) -> &Potential {
        &self.v2
    }

    /// Conventional A/D + B/D^2 + K split of the extended potential.
    pub fn layout(&self) -> PotentialLayout {
        let layout = PotentialLayout::from_seed(
            &self.g,
            rint(self.params.m1 as i64 + self.params.m2 as i64 - 3),
        );
        debug_assert_eq!(&layout.as_rational(), self.v2.rational());
        layout
    }

    pub fn wavefunction(&self, which: Ham, nu: i64) -> Result<Wavefunction> {
        wavefunction(&self.params, which, nu)
    }

    pub fn spectrum(&self, which: Ham, count: usize) -> Vec<EnergyLevel> {
        spectrum(&self.params, which, count)
    }
}
