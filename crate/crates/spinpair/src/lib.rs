//! Thermal entanglement of a two-qubit Heisenberg XXX dimer whose exchange
//! coupling is decorated with x-axis Dzyaloshinskii-Moriya (DM) and
//! Kaplan-Shekhtman-Entin-Wohlman-Aharony (KSEA) interactions.
//!
//! The crate computes the Wootters concurrence of the pair's Gibbs state
//! through two deliberately independent routes:
//!
//! * an **analytic** pipeline: closed-form spectrum and eigenbasis of the
//!   coupling matrix, closed-form Gibbs matrix elements, and closed-form
//!   square roots of the spin-flip spectrum ([`model`], [`thermal`],
//!   [`concurrence`]);
//! * a **spectral oracle**: numeric Jacobi eigendecomposition of the
//!   assembled coupling matrix and the standard Wootters procedure on the
//!   resulting density matrix, sharing no closed form with the first route.
//!
//! On top of those sit asymptotic limit formulas kept verbatim with their
//! known defects ([`limits`]), ground-state classification and phase rasters
//! ([`model`]), and sweep drivers with a threshold-temperature finder
//! ([`sweep`]). Numerical guard thresholds live in one table ([`tol`]).
//!
//! Conventions used throughout: the product basis is ordered
//! `|00>, |01>, |10>, |11>`, energies are in units of the exchange coupling
//! scale, and the Boltzmann constant is 1, so `beta = 1/T`.

pub mod concurrence;
pub mod limits;
pub mod linalg;
pub mod model;
pub mod sweep;
pub mod thermal;
pub mod tol;

pub use concurrence::{
    concurrence_analytic, concurrence_oracle, pure_state_concurrence, r_matrix, spin_flip,
    ComputationPath, ConcurrenceError, ConcurrenceResult,
};
pub use limits::{
    limit_high_temperature, limit_strong_coupling, limit_strong_dm_ksea, LimitBranch,
    LimitError, LimitEvaluation,
};
pub use linalg::{c64, hermitian_eig, Complex64, EigenDecomposition, LinalgError, Matrix4, Vector4};
pub use model::{
    analytic_spectrum, build_hamiltonian, classify_ground_state, phase_diagram_raster,
    GroundStateClass, GroundStateLabel, ModelAxisParam, ModelError, ModelParams, PhaseRaster,
    RasterAxis, Spectrum, StateLabel,
};
pub use sweep::{
    critical_temperature, sweep_1d, sweep_2d, AxisSpec, CriticalTemperature, Method, SweepError,
    SweepParam, SweepResult,
};
pub use thermal::{
    partition_function, thermal_state_analytic, thermal_state_oracle, Temperature, ThermalError,
    ThermalElements, ThermalState,
};

use std::sync::OnceLock;

static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();

/// Shared worker pool for grid evaluations. The `SPINPAIR_THREADS`
/// environment variable caps its size (a positive integer, read once at
/// first use); absent or unparsable means the hardware default.
pub fn worker_pool() -> &'static rayon::ThreadPool {
    POOL.get_or_init(|| {
        let threads = std::env::var("SPINPAIR_THREADS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n >= 1);
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            builder = builder.num_threads(n);
        }
        builder.build().expect("worker pool construction cannot fail")
    })
}
