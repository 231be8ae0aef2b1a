//! Floating point cross checks for the exact layer: composite Gauss
//! Legendre quadrature for inner products of decaying states, and a
//! Dirichlet finite difference eigensolver for bound-state spectra.
//!
//! Everything here is a check, not a source of truth; tolerances live with
//! the callers.

use crate::error::{Error, Result};
use crate::families::Wavefunction;
use crate::potential::Potential;
use crate::quasigauss::{GaussSign, QuasiGaussian};

/// Nodes and weights of the 16 point Gauss Legendre rule on [-1, 1],
/// computed once by Newton iteration on the Legendre polynomial.
fn gauss_legendre_16() -> &'static ([f64; 16], [f64; 16]) {
    static RULE: std::sync::OnceLock<([f64; 16], [f64; 16])> = std::sync::OnceLock::new();
    RULE.get_or_init(|| {
        const N: usize = 16;
        let mut nodes = [0.0; N];
        let mut weights = [0.0; N];
        for k in 0..N {
            // Chebyshev-like initial guess, then Newton on P_N
            let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (N as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // evaluate P_N and P_N' by the three term recurrence
                let (mut p0, mut p1) = (1.0, x);
                for j in 2..=N {
                    let jf = j as f64;
                    let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = (N as f64) * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            nodes[k] = x;
            weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

/// Float Horner form of one decaying state, converted from the exact
/// coefficients once so quadrature loops stay cheap.
struct FloatForm {
    num: Vec<f64>,
    den: Vec<f64>,
    scale: f64,
}

impl FloatForm {
    fn of(f: &QuasiGaussian) -> Self {
        FloatForm {
            num: f.r.num().to_f64_coeffs(),
            den: f.r.den().to_f64_coeffs(),
            scale: f.scale,
        }
    }

    /// The rational part times the scale; the gaussian factor is applied
    /// by the integrand, where the two halves combine into e^{-x^2}.
    fn rational(&self, x: f64) -> f64 {
        let horner = |c: &[f64]| c.iter().rev().fold(0.0, |acc, &a| acc * x + a);
        self.scale * horner(&self.num) / horner(&self.den)
    }
}

/// Composite quadrature over [-half_width, half_width] with `nodes` total
/// evaluation points split into 16 point panels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub half_width: f64,
    pub nodes: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            half_width: 9.0,
            nodes: 768,
        }
    }
}

impl QuadratureSpec {
    pub fn new(half_width: f64, nodes: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) || nodes < 64 {
            return Err(Error::InvalidParams(format!(
                "quadrature needs a positive finite half width and at least 64 nodes, got ({half_width}, {nodes})"
            )));
        }
        Ok(QuadratureSpec { half_width, nodes })
    }

    fn panels(&self) -> usize {
        (self.nodes + 15) / 16
    }

    /// Integrates f over [-half_width, half_width].
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let (nodes, weights) = gauss_legendre_16();
        let (nodes, weights) = (*nodes, *weights);
        let panels = self.panels();
        let width = 2.0 * self.half_width / panels as f64;
        let mut total = 0.0;
        for p in 0..panels {
            let a = -self.half_width + p as f64 * width;
            let mid = a + width / 2.0;
            let half = width / 2.0;
            let mut acc = 0.0;
            for (x, w) in nodes.iter().zip(weights.iter()) {
                acc += w * f(mid + half * x);
            }
            total += half * acc;
        }
        total
    }

    /// Integrates twice, once at double resolution, and reports the finer
    /// value together with the difference as an error estimate.
    pub fn integrate_with_estimate(&self, f: impl Fn(f64) -> f64) -> (f64, f64) {
        let coarse = self.integrate(&f);
        let fine_spec = QuadratureSpec {
            half_width: self.half_width,
            nodes: self.nodes * 2,
        };
        let fine = fine_spec.integrate(&f);
        (fine, (fine - coarse).abs())
    }
}

/// L2 inner product of two decaying states; rejects classes whose product
/// does not decay and flags non-converged panels.
pub fn inner_product(spec: &QuadratureSpec, a: &QuasiGaussian, b: &QuasiGaussian) -> Result<f64> {
    for f in [a, b] {
        if f.s != GaussSign::Minus {
            return Err(Error::NonDecaying { s: f.s.as_i8() });
        }
    }
    let (fa, fb) = (FloatForm::of(a), FloatForm::of(b));
    let (value, estimate) =
        spec.integrate_with_estimate(|x| fa.rational(x) * fb.rational(x) * (-x * x).exp());
    let bound = 1e-10 * (1.0 + value.abs());
    if estimate > bound {
        return Err(Error::QuadratureNotConverged { estimate, bound });
    }
    Ok(value)
}

/// sqrt(<psi, psi>) including the normalization scale of the state.
pub fn norm_of_state(spec: &QuadratureSpec, w: &Wavefunction) -> Result<f64> {
    inner_product(spec, &w.qg, &w.qg).map(|v| v.sqrt())
}

/// Full Gram matrix of a set of normalized states.
pub fn gram_matrix(spec: &QuadratureSpec, states: &[Wavefunction]) -> Result<Vec<Vec<f64>>> {
    let n = states.len();
    let mut gram = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = inner_product(spec, &states[i].qg, &states[j].qg)?;
            gram[i][j] = v;
            gram[j][i] = v;
        }
    }
    Ok(gram)
}

/// Largest |G_ij - delta_ij| over the matrix.
pub fn gram_defect(gram: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in gram.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).abs());
        }
    }
    worst
}

/// Uniform Dirichlet grid on [-half_width, half_width] with `subintervals`
/// steps, giving subintervals - 1 interior nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdGrid {
    pub half_width: f64,
    pub subintervals: usize,
}

impl FdGrid {
    pub fn new(half_width: f64, subintervals: usize) -> Result<Self> {
        if subintervals < 400 {
            return Err(Error::GridTooCoarse {
                m: subintervals,
                min: 400,
            });
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidParams(format!(
                "grid half width must be positive and finite, got {half_width}"
            )));
        }
        Ok(FdGrid {
            half_width,
            subintervals,
        })
    }

    pub fn step(&self) -> f64 {
        2.0 * self.half_width / self.subintervals as f64
    }

    pub fn interior_nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.step();
        (1..self.subintervals).map(move |i| -self.half_width + i as f64 * h)
    }
}

/// Lowest k eigenvalues of -f'' + V f with Dirichlet walls, ascending.
/// Eigenvalues are isolated by bisection on the Sturm count of the LDL^T
/// pivots of T - lambda I.
pub fn fd_spectrum(pot: &Potential, grid: &FdGrid, k: usize) -> Result<Vec<f64>> {
    let m = grid.subintervals;
    if k == 0 {
        return Ok(vec![]);
    }
    if k > m - 1 {
        return Err(Error::TooManyLevels { k, max: m - 1 });
    }
    let h = grid.step();
    let inv_h2 = 1.0 / (h * h);
    // precompute V on the interior nodes once, via f64 Horner forms
    let num = pot.rational().num().to_f64_coeffs();
    let den = pot.rational().den().to_f64_coeffs();
    let horner = |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, &a| acc * x + a);
    let mut diag = Vec::with_capacity(m - 1);
    for x in grid.interior_nodes() {
        let v = x * x + horner(&num, x) / horner(&den, x);
        if !v.is_finite() {
            return Err(Error::PoleOnGrid { x });
        }
        diag.push(2.0 * inv_h2 + v);
    }
    let off_sq = inv_h2 * inv_h2;

    // the first pivot must not receive an off_sq/d correction: seed with a
    // sentinel row so the recurrence is uniform
    let count = |lambda: f64| -> usize {
        let mut cnt = 0usize;
        let mut d = diag[0] - lambda;
        if d == 0.0 {
            d = -f64::MIN_POSITIVE;
        }
        if d < 0.0 {
            cnt += 1;
        }
        for &t in &diag[1..] {
            d = t - lambda - off_sq / d;
            if d == 0.0 {
                d = -f64::MIN_POSITIVE;
            }
            if d < 0.0 {
                cnt += 1;
            }
        }
        cnt
    };

    // Gershgorin bracket
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &t in &diag {
        lo = lo.min(t - 2.0 * inv_h2);
        hi = hi.max(t + 2.0 * inv_h2);
    }

    let mut out = Vec::with_capacity(k);
    for idx in 0..k {
        let (mut a, mut b) = (lo, hi);
        for _ in 0..120 {
            let mid = 0.5 * (a + b);
            if count(mid) > idx {
                b = mid;
            } else {
                a = mid;
            }
            if (b - a).abs() <= 1e-12 * (1.0 + mid.abs()) {
                break;
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{wavefunction, wavefunction_first_order, ExtendedFamily, Ham};
    use crate::poly::Polynomial;
    use crate::ratfunc::RationalFunction;

    #[test]
    fn quadrature_integrates_gaussian_moments() {
        let spec = QuadratureSpec::default();
        let exact = std::f64::consts::PI.sqrt();
        let got = spec.integrate(|x| (-x * x).exp());
        assert!((got - exact).abs() < 1e-12, "got {got}, want {exact}");
        let got = spec.integrate(|x| x * x * (-x * x).exp());
        assert!((got - exact / 2.0).abs() < 1e-12);
        // odd integrand dies by symmetry
        let got = spec.integrate(|x| x * (-x * x).exp());
        assert!(got.abs() < 1e-14);
    }

    #[test]
    fn quadrature_rejects_bad_specs() {
        assert!(QuadratureSpec::new(0.0, 768).is_err());
        assert!(QuadratureSpec::new(9.0, 16).is_err());
        assert!(QuadratureSpec::new(9.0, 64).is_ok());
    }

    #[test]
    fn inner_product_rejects_growing_states() {
        let spec = QuadratureSpec::default();
        let one = RationalFunction::from_poly(Polynomial::one());
        let grow = QuasiGaussian::new(one.clone(), GaussSign::Plus);
        let flat = QuasiGaussian::new(one.clone(), GaussSign::Zero);
        let decay = QuasiGaussian::new(one, GaussSign::Minus);
        assert!(matches!(
            inner_product(&spec, &grow, &decay),
            Err(Error::NonDecaying { s: 1 })
        ));
        assert!(matches!(
            inner_product(&spec, &decay, &flat),
            Err(Error::NonDecaying { s: 0 })
        ));
        assert!(inner_product(&spec, &decay, &decay).is_ok());
    }

    #[test]
    fn normalized_states_have_unit_norm() {
        let spec = QuadratureSpec::default();
        let fam = ExtendedFamily::from_indices(2, 3).unwrap();
        for nu in [-4i64, -3, 0, 1, 5] {
            let w = fam.wavefunction(Ham::H2, nu).unwrap();
            let n = norm_of_state(&spec, &w).unwrap();
            assert!((n - 1.0).abs() < 1e-10, "nu = {nu}: norm {n}");
        }
        for nu in [-3i64, 0, 2] {
            let w = fam.wavefunction(Ham::Mid, nu).unwrap();
            let n = norm_of_state(&spec, &w).unwrap();
            assert!((n - 1.0).abs() < 1e-10, "mid nu = {nu}: norm {n}");
        }
        let w = wavefunction_first_order(2, -3).unwrap();
        assert_eq!(w.energy, -5);
        let n = inner_product(&spec, &w.qg, &w.qg).unwrap().sqrt();
        assert!((n - 1.0).abs() < 1e-10, "first order ground norm {n}");
    }

    #[test]
    fn gram_matrix_is_identity_for_eigenstates() {
        let spec = QuadratureSpec::default();
        let fam = ExtendedFamily::from_indices(2, 5).unwrap();
        let p = fam.params();
        let states: Vec<_> = crate::families::nu_values(p, Ham::H2)
            .take(5)
            .map(|nu| wavefunction(p, Ham::H2, nu).unwrap())
            .collect();
        let gram = gram_matrix(&spec, &states).unwrap();
        assert!(gram_defect(&gram) < 1e-8, "defect {}", gram_defect(&gram));
    }

    #[test]
    fn fd_grid_validation() {
        assert!(matches!(
            FdGrid::new(8.0, 100),
            Err(Error::GridTooCoarse { m: 100, min: 400 })
        ));
        assert!(FdGrid::new(8.0, 400).is_ok());
    }

    #[test]
    fn fd_oscillator_spectrum() {
        // calibration configuration: the plain oscillator must come out to
        // 1e-4 before the extended potentials are trusted at 1e-3
        let grid = FdGrid::new(8.0, 3000).unwrap();
        let evs = fd_spectrum(&Potential::oscillator(), &grid, 4).unwrap();
        for (i, ev) in evs.iter().enumerate() {
            let exact = 2.0 * i as f64 + 1.0;
            assert!(
                (ev - exact).abs() < 1e-4,
                "level {i}: got {ev}, want {exact}"
            );
        }
    }

    #[test]
    fn fd_second_order_convergence() {
        // halving h should shrink the error by about 4
        let exact = 1.0;
        let coarse = fd_spectrum(
            &Potential::oscillator(),
            &FdGrid::new(8.0, 500).unwrap(),
            1,
        )
        .unwrap()[0];
        let fine = fd_spectrum(
            &Potential::oscillator(),
            &FdGrid::new(8.0, 1000).unwrap(),
            1,
        )
        .unwrap()[0];
        let ratio = (coarse - exact).abs() / (fine - exact).abs();
        assert!(
            (3.0..5.0).contains(&ratio),
            "convergence ratio {ratio} out of second order range"
        );
    }

    #[test]
    fn fd_first_order_extension_spectrum() {
        // one seed, m = 2: levels -5 then the odd tower 1, 3, 5
        let pot = crate::families::potential_v_minus(2).unwrap();
        let grid = FdGrid::new(8.0, 2000).unwrap();
        let evs = fd_spectrum(&pot, &grid, 4).unwrap();
        let expect = [-5.0, 1.0, 3.0, 5.0];
        for (ev, ex) in evs.iter().zip(expect.iter()) {
            assert!((ev - ex).abs() < 1e-3, "got {ev}, want {ex}");
        }
    }

    #[test]
    fn fd_extended_family_spectrum() {
        let fam = ExtendedFamily::from_indices(2, 3).unwrap();
        let grid = FdGrid::new(8.0, 2000).unwrap();
        let evs = fd_spectrum(fam.v2(), &grid, 5).unwrap();
        let expect = [-1.0, 1.0, 7.0, 9.0, 11.0];
        for (ev, ex) in evs.iter().zip(expect.iter()) {
            assert!((ev - ex).abs() < 1e-3, "got {ev}, want {ex}");
        }
    }

    #[test]
    fn fd_rejects_too_many_levels() {
        let grid = FdGrid::new(8.0, 400).unwrap();
        assert!(matches!(
            fd_spectrum(&Potential::oscillator(), &grid, 400),
            Err(Error::TooManyLevels { k: 400, max: 399 })
        ));
    }

    #[test]
    fn eigenvalues_come_out_ascending() {
        let grid = FdGrid::new(8.0, 600).unwrap();
        let evs = fd_spectrum(&Potential::oscillator(), &grid, 6).unwrap();
        for pair in evs.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }
}
