//! Two-qubit model: Hamiltonian assembly, closed-form spectrum, and
//! ground-state phase classification.
//!
//! The system is a Heisenberg XXX pair with exchange `J` plus the x-axis
//! components of the Dzyaloshinsky-Moriya (antisymmetric, strength `Dx`) and
//! KSEA (symmetric, strength `Gx`) anisotropies. In the product basis
//! |00>, |01>, |10>, |11> the Hamiltonian is
//!
//! ```text
//!     [  J        i(Dx-Gx)   -i(Dx+Gx)   0        ]
//!     [ -i(Dx-Gx)  -J          2J         i(Dx+Gx) ]
//!     [  i(Dx+Gx)   2J        -J         -i(Dx-Gx) ]
//!     [  0         -i(Dx+Gx)   i(Dx-Gx)   J        ]
//! ```
//!
//! Its spectrum is available in closed form and every eigenvector is
//! maximally entangled, which is what makes the thermal concurrence of this
//! model tractable analytically.

use crate::linalg::{c64, Matrix4, Vector4};
use crate::tol;
use rayon::prelude::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("parameter {name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("invalid axis: {0}")]
    InvalidAxis(String),
}

/// Coupling constants of the pair, in units where kB = hbar = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub j: f64,
    pub dx: f64,
    pub gx: f64,
}

impl ModelParams {
    pub fn new(j: f64, dx: f64, gx: f64) -> Result<Self, ModelError> {
        for (name, value) in [("j", j), ("dx", dx), ("gx", gx)] {
            if !value.is_finite() {
                return Err(ModelError::NonFinite { name, value });
            }
        }
        Ok(ModelParams { j, dx, gx })
    }

    /// eta = sqrt(Dx^2 + J^2), the mixing energy scale of the Dx-J sector.
    pub fn eta(&self) -> f64 {
        self.dx.hypot(self.j)
    }
}

/// Hamiltonian matrix in the product basis |00>, |01>, |10>, |11>.
pub fn build_hamiltonian(p: &ModelParams) -> Matrix4 {
    let (j, d, g) = (p.j, p.dx, p.gx);
    let re = |x: f64| c64(x, 0.0);
    let im = |x: f64| c64(0.0, x);
    Matrix4([
        [re(j), im(d - g), im(-d - g), re(0.0)],
        [im(g - d), re(-j), re(2.0 * j), im(g + d)],
        [im(g + d), re(2.0 * j), re(-j), im(g - d)],
        [re(0.0), im(-g - d), im(-g + d), re(j)],
    ])
}

/// Closed-form spectrum: energies in fixed label order (not sorted), the
/// mixing angles, and the matching unit eigenvectors.
///
/// Labels: e1 = J + 2*Gx, e2 = J - 2*Gx, e3 = -J + 2*eta, e4 = -J - 2*eta.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub energies: [f64; 4],
    pub eta: f64,
    pub theta1: f64,
    pub theta2: f64,
    /// Unit eigenvectors paired with `energies` entry by entry.
    pub states: [Vector4; 4],
}

/// Mixing angles theta1 = arctan(Dx / (eta - J)), theta2 = arctan(Dx / (eta + J)),
/// evaluated with a two-argument arctangent so a vanishing denominator takes
/// its directional limit. The only genuinely indeterminate corners are the
/// 0/0 ones at Dx = 0: there the angle is pinned to the limit that keeps
/// theta1 + theta2 = pi/2, which is what keeps the closed-form eigenvectors
/// an orthonormal basis (pi/2 for the angle whose denominator vanished, pi/4
/// for both when J = 0 as well).
fn mixing_angles(j: f64, dx: f64, eta: f64) -> (f64, f64) {
    let den1 = eta - j;
    let den2 = eta + j;
    let corner = |den: f64| -> Option<f64> {
        if dx == 0.0 && den == 0.0 {
            Some(if j == 0.0 { FRAC_PI_4 } else { FRAC_PI_2 })
        } else {
            None
        }
    };
    let theta1 = corner(den1).unwrap_or_else(|| dx.atan2(den1));
    let theta2 = corner(den2).unwrap_or_else(|| dx.atan2(den2));
    (theta1, theta2)
}

pub fn analytic_spectrum(p: &ModelParams) -> Spectrum {
    let eta = p.eta();
    let energies = [
        p.j + 2.0 * p.gx,
        p.j - 2.0 * p.gx,
        -p.j + 2.0 * eta,
        -p.j - 2.0 * eta,
    ];
    let (theta1, theta2) = mixing_angles(p.j, p.dx, eta);
    let (s1, c1) = theta1.sin_cos();
    let (s2, c2) = theta2.sin_cos();
    let h = 0.5;
    let r = std::f64::consts::FRAC_1_SQRT_2;

    // The first pair are the fixed Bell-like combinations of |00>, |11| with
    // |01>, |10>; the second pair mix the same blocks through theta1/theta2.
    // The pairing below satisfies H|phi_l> = e_l |phi_l> exactly; tests
    // enforce it against the assembled matrix.
    let states = [
        Vector4([c64(h, 0.0), c64(0.0, h), c64(0.0, h), c64(h, 0.0)]),
        Vector4([c64(h, 0.0), c64(0.0, -h), c64(0.0, -h), c64(h, 0.0)]),
        Vector4([c64(-r * s1, 0.0), c64(0.0, r * c1), c64(0.0, -r * c1), c64(r * s1, 0.0)]),
        Vector4([c64(-r * s2, 0.0), c64(0.0, -r * c2), c64(0.0, r * c2), c64(r * s2, 0.0)]),
    ];
    Spectrum { energies, eta, theta1, theta2, states }
}

/// Which closed-form eigenstate can be the ground state. The e3 level sits
/// 4*eta above e4, so it never reaches the minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateLabel {
    Phi1,
    Phi2,
    Phi4,
}

impl StateLabel {
    pub fn name(&self) -> &'static str {
        match self {
            StateLabel::Phi1 => "Phi1",
            StateLabel::Phi2 => "Phi2",
            StateLabel::Phi4 => "Phi4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroundStateLabel {
    Phi1,
    Phi2,
    Phi4,
    DegenerateBoundary,
}

impl GroundStateLabel {
    pub fn name(&self) -> &'static str {
        match self {
            GroundStateLabel::Phi1 => "Phi1",
            GroundStateLabel::Phi2 => "Phi2",
            GroundStateLabel::Phi4 => "Phi4",
            GroundStateLabel::DegenerateBoundary => "DegenerateBoundary",
        }
    }
}

/// Ground-state classification: the winning level, its energy, and, on a
/// degeneracy boundary, every label sharing the minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundStateClass {
    pub label: GroundStateLabel,
    pub energy: f64,
    /// Empty unless `label` is `DegenerateBoundary`.
    pub degenerate_with: Vec<StateLabel>,
}

impl GroundStateClass {
    fn unique(label: GroundStateLabel, energy: f64) -> Self {
        GroundStateClass { label, energy, degenerate_with: Vec::new() }
    }

    fn boundary(members: &[StateLabel], energy: f64) -> Self {
        GroundStateClass {
            label: GroundStateLabel::DegenerateBoundary,
            energy,
            degenerate_with: members.to_vec(),
        }
    }
}

/// Classify the T = 0 ground state by the level-crossing case table.
///
/// For Gx > 0 the contest is e2 = J - 2*Gx against e4 = -J - 2*eta, so the
/// defining inequality is Gx vs J + eta; for Gx < 0 it is -Gx vs J + eta
/// with e1 in place of e2. At Gx = 0 the doublet e1 = e2 = J competes with
/// e4, meeting it only in the triple-degenerate corner Dx = 0, J <= 0.
/// Inequalities satisfied within an absolute slack of `tol::DEGENERACY`
/// classify as `DegenerateBoundary`.
pub fn classify_ground_state(p: &ModelParams) -> GroundStateClass {
    let eta = p.eta();
    let e1 = p.j + 2.0 * p.gx;
    let e2 = p.j - 2.0 * p.gx;
    let e4 = -p.j - 2.0 * eta;

    if p.gx > 0.0 {
        let slack = p.gx - (p.j + eta);
        if slack.abs() <= tol::DEGENERACY {
            GroundStateClass::boundary(&[StateLabel::Phi2, StateLabel::Phi4], e2.min(e4))
        } else if slack > 0.0 {
            GroundStateClass::unique(GroundStateLabel::Phi2, e2)
        } else {
            GroundStateClass::unique(GroundStateLabel::Phi4, e4)
        }
    } else if p.gx < 0.0 {
        let slack = -p.gx - (p.j + eta);
        if slack.abs() <= tol::DEGENERACY {
            GroundStateClass::boundary(&[StateLabel::Phi1, StateLabel::Phi4], e1.min(e4))
        } else if slack > 0.0 {
            GroundStateClass::unique(GroundStateLabel::Phi1, e1)
        } else {
            GroundStateClass::unique(GroundStateLabel::Phi4, e4)
        }
    } else {
        // Gx = 0: e1 = e2 = J always; eta >= |J| keeps J + eta >= 0, with
        // equality exactly at the Dx = 0, J <= 0 corner where e1 = e2 = e4.
        let slack = p.j + eta;
        if slack.abs() <= tol::DEGENERACY {
            GroundStateClass::boundary(
                &[StateLabel::Phi1, StateLabel::Phi2, StateLabel::Phi4],
                e4.min(e1),
            )
        } else {
            GroundStateClass::unique(GroundStateLabel::Phi4, e4)
        }
    }
}

/// Model parameter selected by a raster axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelAxisParam {
    J,
    Dx,
    Gx,
}

impl ModelAxisParam {
    pub fn name(&self) -> &'static str {
        match self {
            ModelAxisParam::J => "j",
            ModelAxisParam::Dx => "dx",
            ModelAxisParam::Gx => "gx",
        }
    }
}

/// Closed interval scanned by one raster axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RasterAxis {
    pub param: ModelAxisParam,
    pub lo: f64,
    pub hi: f64,
}

impl RasterAxis {
    pub fn new(param: ModelAxisParam, lo: f64, hi: f64) -> Result<Self, ModelError> {
        if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
            return Err(ModelError::InvalidAxis(format!(
                "range [{lo}, {hi}] for {} must be finite with lo < hi",
                param.name()
            )));
        }
        Ok(RasterAxis { param, lo, hi })
    }

    /// Center of cell `i` out of `n`.
    pub fn center(&self, i: usize, n: usize) -> f64 {
        self.lo + (self.hi - self.lo) * ((i as f64 + 0.5) / n as f64)
    }
}

/// Ground-state phase raster over two model parameters at T = 0.
///
/// `cells` is row-major: index `iy * nx + ix`.
#[derive(Debug, Clone)]
pub struct PhaseRaster {
    pub x_axis: RasterAxis,
    pub y_axis: RasterAxis,
    pub nx: usize,
    pub ny: usize,
    pub base: ModelParams,
    pub cells: Vec<GroundStateClass>,
}

fn apply_axis(p: &mut ModelParams, axis: ModelAxisParam, value: f64) {
    match axis {
        ModelAxisParam::J => p.j = value,
        ModelAxisParam::Dx => p.dx = value,
        ModelAxisParam::Gx => p.gx = value,
    }
}

/// Classify every cell center of an `nx` by `ny` grid. Cell centers, never
/// edges, are sampled, so generic grids avoid the degeneracy curves.
pub fn phase_diagram_raster(
    x_axis: RasterAxis,
    y_axis: RasterAxis,
    base: &ModelParams,
    nx: usize,
    ny: usize,
) -> Result<PhaseRaster, ModelError> {
    if x_axis.param == y_axis.param {
        return Err(ModelError::InvalidAxis(format!(
            "both raster axes select {}",
            x_axis.param.name()
        )));
    }
    if nx == 0 || ny == 0 {
        return Err(ModelError::InvalidAxis(format!("grid {nx}x{ny} must be at least 1x1")));
    }

    let rows: Vec<Vec<GroundStateClass>> = crate::worker_pool().install(|| {
        (0..ny)
            .into_par_iter()
            .map(|iy| {
                let yv = y_axis.center(iy, ny);
                (0..nx)
                    .map(|ix| {
                        let xv = x_axis.center(ix, nx);
                        let mut p = *base;
                        apply_axis(&mut p, x_axis.param, xv);
                        apply_axis(&mut p, y_axis.param, yv);
                        classify_ground_state(&p)
                    })
                    .collect()
            })
            .collect()
    });
    let cells = rows.into_iter().flatten().collect();
    Ok(PhaseRaster { x_axis, y_axis, nx, ny, base: *base, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eig;

    #[test]
    fn rejects_non_finite_parameters() {
        assert!(matches!(
            ModelParams::new(f64::NAN, 0.0, 0.0),
            Err(ModelError::NonFinite { name: "j", .. })
        ));
        assert!(matches!(
            ModelParams::new(0.0, f64::INFINITY, 0.0),
            Err(ModelError::NonFinite { name: "dx", .. })
        ));
    }

    #[test]
    fn hamiltonian_matches_hand_expansion() {
        // J = 1, Dx = 2, Gx = 3 written out entry by entry.
        let p = ModelParams::new(1.0, 2.0, 3.0).unwrap();
        let h = build_hamiltonian(&p);
        let want = Matrix4([
            [c64(1.0, 0.0), c64(0.0, -1.0), c64(0.0, -5.0), c64(0.0, 0.0)],
            [c64(0.0, 1.0), c64(-1.0, 0.0), c64(2.0, 0.0), c64(0.0, 5.0)],
            [c64(0.0, 5.0), c64(2.0, 0.0), c64(-1.0, 0.0), c64(0.0, 1.0)],
            [c64(0.0, 0.0), c64(0.0, -5.0), c64(0.0, -1.0), c64(1.0, 0.0)],
        ]);
        assert!(h.max_abs_diff(&want) == 0.0);
        assert!(h.hermiticity_deviation() == 0.0);
        assert!(h.trace().norm() == 0.0);
    }

    #[test]
    fn spectrum_known_values() {
        // J = 1, Dx = 0, Gx = 1: energies (3, -1, 1, -3).
        let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
        let s = analytic_spectrum(&p);
        assert_eq!(s.energies, [3.0, -1.0, 1.0, -3.0]);
        assert_eq!(s.eta, 1.0);

        // J = 1, Dx = 1, Gx = 1: eta = sqrt(2), e3/e4 = -1 +/- 2*sqrt(2).
        let p = ModelParams::new(1.0, 1.0, 1.0).unwrap();
        let s = analytic_spectrum(&p);
        let r2 = 2.0_f64.sqrt();
        assert!((s.energies[2] - (-1.0 + 2.0 * r2)).abs() < 1e-15);
        assert!((s.energies[3] - (-1.0 - 2.0 * r2)).abs() < 1e-15);
        // theta1 = arctan(1/(sqrt(2)-1)) = 3*pi/8, theta2 = pi/8.
        assert!((s.theta1 - 3.0 * std::f64::consts::PI / 8.0).abs() < 1e-14);
        assert!((s.theta2 - std::f64::consts::PI / 8.0).abs() < 1e-14);
    }

    #[test]
    fn spectrum_matches_numeric_eigenvalues() {
        let p = ModelParams::new(-0.7, 1.3, 2.1).unwrap();
        let h = build_hamiltonian(&p);
        let numeric = hermitian_eig(&h).unwrap().values;
        let mut analytic = analytic_spectrum(&p).energies;
        analytic.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, n) in analytic.iter().zip(numeric.iter()) {
            assert!((a - n).abs() < 1e-12, "{a} vs {n}");
        }
    }

    #[test]
    fn eigenvalue_equation_holds_for_each_state() {
        for p in [
            ModelParams::new(1.0, 1.0, 1.0).unwrap(),
            ModelParams::new(-2.0, 0.5, -1.5).unwrap(),
            ModelParams::new(0.0, 2.0, 3.0).unwrap(),
            ModelParams::new(1.0, 0.0, 0.0).unwrap(),
            ModelParams::new(-1.0, 0.0, 2.0).unwrap(),
            ModelParams::new(0.0, 0.0, 1.0).unwrap(),
            ModelParams::new(0.0, 0.0, 0.0).unwrap(),
        ] {
            let h = build_hamiltonian(&p);
            let s = analytic_spectrum(&p);
            for (k, state) in s.states.iter().enumerate() {
                assert!((state.norm() - 1.0).abs() < 1e-14);
                let hv = h.matvec(state);
                let mut residual: f64 = 0.0;
                for i in 0..4 {
                    residual = residual.max((hv.0[i] - state.0[i] * s.energies[k]).norm());
                }
                assert!(
                    residual < 1e-10,
                    "state {k} residual {residual} at {p:?}"
                );
            }
        }
    }

    #[test]
    fn states_form_an_orthonormal_basis() {
        for p in [
            ModelParams::new(1.0, 1.0, 1.0).unwrap(),
            ModelParams::new(1.0, 0.0, 0.5).unwrap(),
            ModelParams::new(-1.0, 0.0, 0.5).unwrap(),
            ModelParams::new(0.0, 0.0, 0.0).unwrap(),
        ] {
            let s = analytic_spectrum(&p);
            for a in 0..4 {
                for b in 0..4 {
                    let want = if a == b { 1.0 } else { 0.0 };
                    let got = s.states[a].dot(&s.states[b]).norm();
                    assert!((got - want).abs() < 1e-14, "<{a}|{b}> = {got} at {p:?}");
                }
            }
        }
    }

    #[test]
    fn mixing_angle_corners() {
        // Dx = 0, J > 0: theta1 takes the directional limit pi/2, theta2 = 0.
        let s = analytic_spectrum(&ModelParams::new(2.0, 0.0, 0.0).unwrap());
        assert_eq!(s.theta1, FRAC_PI_2);
        assert_eq!(s.theta2, 0.0);
        // Dx = 0, J < 0: mirrored.
        let s = analytic_spectrum(&ModelParams::new(-2.0, 0.0, 0.0).unwrap());
        assert_eq!(s.theta1, 0.0);
        assert_eq!(s.theta2, FRAC_PI_2);
        // Dx = 0, J = 0: both pi/4 (keeps the basis orthonormal).
        let s = analytic_spectrum(&ModelParams::new(0.0, 0.0, 0.0).unwrap());
        assert_eq!(s.theta1, FRAC_PI_4);
        assert_eq!(s.theta2, FRAC_PI_4);
    }

    #[test]
    fn ground_state_cases() {
        // Gx far above the boundary: Phi2 with energy J - 2*Gx.
        let g = classify_ground_state(&ModelParams::new(1.0, 1.0, 3.0).unwrap());
        assert_eq!(g.label, GroundStateLabel::Phi2);
        assert!((g.energy - (1.0 - 6.0)).abs() < 1e-15);
        assert!(g.degenerate_with.is_empty());

        // Mirrored for negative Gx: Phi1 with energy J + 2*Gx.
        let g = classify_ground_state(&ModelParams::new(1.0, 1.0, -3.0).unwrap());
        assert_eq!(g.label, GroundStateLabel::Phi1);
        assert!((g.energy - (1.0 - 6.0)).abs() < 1e-15);

        // Between the boundaries: Phi4.
        let g = classify_ground_state(&ModelParams::new(1.0, 1.0, 1.0).unwrap());
        assert_eq!(g.label, GroundStateLabel::Phi4);
        assert!((g.energy - (-1.0 - 2.0 * 2.0_f64.sqrt())).abs() < 1e-15);

        // Exactly on the upper boundary: DegenerateBoundary{Phi2, Phi4}.
        let gx = 1.0 + 2.0_f64.sqrt();
        let g = classify_ground_state(&ModelParams::new(1.0, 1.0, gx).unwrap());
        assert_eq!(g.label, GroundStateLabel::DegenerateBoundary);
        assert_eq!(g.degenerate_with, vec![StateLabel::Phi2, StateLabel::Phi4]);

        // Gx = 0, J < 0, Dx = 0: the triple-degenerate corner.
        let g = classify_ground_state(&ModelParams::new(-1.0, 0.0, 0.0).unwrap());
        assert_eq!(g.label, GroundStateLabel::DegenerateBoundary);
        assert_eq!(
            g.degenerate_with,
            vec![StateLabel::Phi1, StateLabel::Phi2, StateLabel::Phi4]
        );
        assert!((g.energy - (-1.0)).abs() < 1e-12);

        // Gx = 0 with Dx != 0: Phi4 wins outright.
        let g = classify_ground_state(&ModelParams::new(-1.0, 0.5, 0.0).unwrap());
        assert_eq!(g.label, GroundStateLabel::Phi4);
    }

    #[test]
    fn raster_small_grid_row_major() {
        let x = RasterAxis::new(ModelAxisParam::Dx, -3.0, 3.0).unwrap();
        let y = RasterAxis::new(ModelAxisParam::Gx, -4.0, 4.0).unwrap();
        let base = ModelParams::new(1.0, 0.0, 0.0).unwrap();
        let r = phase_diagram_raster(x, y, &base, 2, 2).unwrap();
        assert_eq!(r.cells.len(), 4);
        // Centers: dx in {-1.5, 1.5}, gx in {-2, 2}; row 0 is gx = -2.
        // |gx| = 2 vs J + eta = 1 + sqrt(1 + 2.25) = 2.803: Phi4 everywhere.
        for cell in &r.cells {
            assert_eq!(cell.label, GroundStateLabel::Phi4);
        }
        // A taller grid reaches the Phi1/Phi2 regions.
        let r = phase_diagram_raster(x, y, &base, 3, 8).unwrap();
        assert_eq!(r.cells[1].label, GroundStateLabel::Phi1); // gx = -3.5, dx = 0
        assert_eq!(r.cells[7 * 3 + 1].label, GroundStateLabel::Phi2); // gx = +3.5
    }

    #[test]
    fn raster_rejects_duplicate_axes() {
        let x = RasterAxis::new(ModelAxisParam::Dx, -1.0, 1.0).unwrap();
        let base = ModelParams::new(1.0, 0.0, 0.0).unwrap();
        assert!(matches!(
            phase_diagram_raster(x, x, &base, 2, 2),
            Err(ModelError::InvalidAxis(_))
        ));
    }
}
