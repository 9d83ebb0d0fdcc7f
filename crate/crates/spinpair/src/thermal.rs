//! Gibbs states of the pair at finite temperature, through two independent
//! routes: closed-form matrix elements and a numeric spectral build.
//!
//! Both routes work with Boltzmann weights shifted by the ground-state
//! energy, `w_l = exp(-beta * (e_l - e_min))`. The shift cancels in every
//! normalized quantity, so it changes nothing mathematically, while keeping
//! all stored intermediates in [0, 1] x 4. That matters downstream: the
//! concurrence closed form squares these elements, which would overflow for
//! unshifted weights long before the exponent guard trips.

use crate::linalg::{c64, hermitian_eig, LinalgError, Matrix4};
use crate::model::{analytic_spectrum, build_hamiltonian, ModelParams};
use crate::tol;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ThermalError {
    #[error("temperature must be finite and strictly positive, got {value}")]
    InvalidTemperature { value: f64 },
    #[error("exponent argument {arg:e} exceeds the overflow guard")]
    Overflow { arg: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Strictly positive, finite temperature with a finite inverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(t: f64) -> Result<Self, ThermalError> {
        if !t.is_finite() || t <= 0.0 || !(1.0 / t).is_finite() {
            return Err(ThermalError::InvalidTemperature { value: t });
        }
        Ok(Temperature(t))
    }

    pub fn get(&self) -> f64 {
        self.0
    }

    pub fn beta(&self) -> f64 {
        1.0 / self.0
    }
}

/// Closed-form partition function
/// `Z = 2 exp(beta J) cosh(2 beta eta) + 2 exp(-beta J) cosh(2 beta Gx)`,
/// evaluated literally (no energy shift). Fails with `Overflow` once an
/// exponent argument leaves the guard window, or when the product of two
/// individually representable factors would still overflow (the guards on
/// the factors alone cannot see that case).
pub fn partition_function(p: &ModelParams, temp: Temperature) -> Result<f64, ThermalError> {
    let beta = temp.beta();
    let args = [beta * p.j, 2.0 * beta * p.eta(), 2.0 * beta * p.gx];
    for arg in args {
        if arg.abs() > tol::EXP_ARG_MAX {
            return Err(ThermalError::Overflow { arg });
        }
    }
    let z = 2.0 * (beta * p.j).exp() * (2.0 * beta * p.eta()).cosh()
        + 2.0 * (-beta * p.j).exp() * (2.0 * beta * p.gx).cosh();
    if !z.is_finite() {
        let combined = (beta * p.j + (2.0 * beta * p.eta()).abs())
            .max(-beta * p.j + (2.0 * beta * p.gx).abs());
        return Err(ThermalError::Overflow { arg: combined });
    }
    Ok(z)
}

/// Unnormalized Gibbs matrix elements, all real, in the shifted-weight
/// scale. `a` sits on the outer diagonal, `b` on the inner; `c` and `d` are
/// the corresponding antidiagonal entries; `mu` and `nu` carry the purely
/// imaginary off-diagonal structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalElements {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub mu: f64,
    pub nu: f64,
}

/// Normalized Gibbs state plus the unnormalized elements and partition sum
/// it was assembled from. `z` and `elements` share one common scale (both
/// carry the same ground-state energy shift), so every ratio is exact.
#[derive(Debug, Clone)]
pub struct ThermalState {
    pub rho: Matrix4,
    pub z: f64,
    pub elements: ThermalElements,
}

/// Shifted Boltzmann weights `exp(-beta (e_l - min_l e_l))`.
pub(crate) fn shifted_weights(energies: &[f64; 4], beta: f64) -> [f64; 4] {
    let e_min = energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut w = [0.0; 4];
    for (k, e) in energies.iter().enumerate() {
        let delta = e - e_min;
        // delta = 0 must map to weight 1 even if beta * delta would be 0 * inf.
        w[k] = if delta == 0.0 { 1.0 } else { (-beta * delta).exp() };
    }
    w
}

fn assemble(elements: ThermalElements, z: f64) -> ThermalState {
    let ThermalElements { a, b, c, d, mu, nu } = elements;
    let inv = 1.0 / z;
    let rho = Matrix4([
        [c64(a, 0.0), c64(0.0, mu), c64(0.0, nu), c64(c, 0.0)],
        [c64(0.0, -mu), c64(b, 0.0), c64(d, 0.0), c64(0.0, -nu)],
        [c64(0.0, -nu), c64(d, 0.0), c64(b, 0.0), c64(0.0, -mu)],
        [c64(c, 0.0), c64(0.0, nu), c64(0.0, mu), c64(a, 0.0)],
    ])
    .scale(inv);
    ThermalState { rho, z, elements }
}

/// Gibbs state from the closed-form spectrum and matrix elements.
///
/// The trigonometric factors of the mixing angles are evaluated through
/// their algebraic half-angle identities,
/// `sin^2 t1 = (1 + J/eta)/2`, `sin^2 t2 = (1 - J/eta)/2`,
/// `sin 2 t1 = sin 2 t2 = Dx/eta` (and `Dx/eta := 1` at `eta = 0`, the
/// value the angle convention assigns there), rather than by taking sines
/// of the angles. The identities are exact consequences of the arctangent
/// definitions and make the corner cases (`Dx = 0`, `eta = 0`) land on
/// exact floating-point values, where `sin(pi/4)^2` would miss 1/2 by an
/// ulp.
pub fn thermal_state_analytic(
    p: &ModelParams,
    temp: Temperature,
) -> Result<ThermalState, ThermalError> {
    let s = analytic_spectrum(p);
    let [w1, w2, w3, w4] = shifted_weights(&s.energies, temp.beta());
    let eta = s.eta;
    let (rj, rd) = if eta == 0.0 { (0.0, 1.0) } else { (p.j / eta, p.dx / eta) };
    let s1_sq = 0.5 * (1.0 + rj);
    let c1_sq = 0.5 * (1.0 - rj);
    let s2_sq = 0.5 * (1.0 - rj);
    let c2_sq = 0.5 * (1.0 + rj);
    let sin_2t1 = rd;
    let sin_2t2 = rd;

    let elements = ThermalElements {
        a: 0.25 * (2.0 * w3 * s1_sq + 2.0 * w4 * s2_sq + w1 + w2),
        b: 0.25 * (2.0 * w3 * c1_sq + 2.0 * w4 * c2_sq + w1 + w2),
        c: 0.25 * (-2.0 * w3 * s1_sq - 2.0 * w4 * s2_sq + w1 + w2),
        d: 0.25 * (-2.0 * w3 * c1_sq - 2.0 * w4 * c2_sq + w1 + w2),
        mu: -0.25 * (-w3 * sin_2t1 + w4 * sin_2t2 + w1 - w2),
        nu: -0.25 * (w3 * sin_2t1 - w4 * sin_2t2 + w1 - w2),
    };
    let z = w1 + w2 + w3 + w4;
    Ok(assemble(elements, z))
}

/// Gibbs state built with no knowledge of the closed forms: numeric
/// eigendecomposition of the assembled Hamiltonian, then a weighted sum of
/// eigenprojectors. The element fields are read back off the matrix.
pub fn thermal_state_oracle(
    p: &ModelParams,
    temp: Temperature,
) -> Result<ThermalState, ThermalError> {
    let h = build_hamiltonian(p);
    let eig = hermitian_eig(&h)?;
    let w = shifted_weights(&eig.values, temp.beta());
    let z: f64 = w.iter().sum();

    let mut rho = Matrix4::zero();
    for k in 0..4 {
        let proj = eig.vectors.column(k).projector();
        for i in 0..4 {
            for j in 0..4 {
                rho.0[i][j] += proj.0[i][j] * (w[k] / z);
            }
        }
    }
    let elements = ThermalElements {
        a: z * rho.at(0, 0).re,
        b: z * rho.at(1, 1).re,
        c: z * rho.at(0, 3).re,
        d: z * rho.at(1, 2).re,
        mu: z * rho.at(0, 1).im,
        nu: z * rho.at(0, 2).im,
    };
    Ok(ThermalState { rho, z, elements })
}
