//! Central table of numeric tolerances and guards.
//!
//! Every comparison threshold the library uses lives here so the
//! relationships between them stay auditable in one place. Values are
//! absolute unless noted otherwise; the matrices involved are 4x4 with
//! entries of order one to ten, so absolute thresholds are meaningful.

/// Max entrywise deviation |A - A^H| tolerated before an input matrix is
/// rejected as non-Hermitian.
pub const HERMITICITY: f64 = 1e-12;

/// The Jacobi eigensolver stops once the off-diagonal Frobenius norm of the
/// working matrix falls to or below this.
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; reaching it without meeting
/// [`JACOBI_OFF_DIAGONAL`] is a convergence failure.
pub const JACOBI_MAX_SWEEPS: usize = 200;

/// Eigenvalues and radicands of nominally nonnegative quantities that land in
/// `[-NEGATIVE_CLAMP, 0)` are clamped to zero; anything more negative is a
/// hard numeric error rather than roundoff.
pub const NEGATIVE_CLAMP: f64 = 1e-10;

/// Exponent guard: exp/cosh arguments beyond this magnitude would overflow
/// an f64 (overflow starts near 709.8).
pub const EXP_ARG_MAX: f64 = 700.0;

/// Ground-state level crossings: the defining inequality counts as exactly
/// satisfied (a degenerate boundary) within this absolute slack.
pub const DEGENERACY: f64 = 1e-12;

/// Concurrence at or below this counts as zero when locating the temperature
/// where entanglement vanishes.
pub const ZERO_CONCURRENCE: f64 = 1e-12;

/// Number of points in the coarse geometric temperature scan that brackets
/// the last zero crossing of the concurrence.
pub const TC_SCAN_POINTS: usize = 64;

/// Lower end of the critical-temperature scan.
pub const TC_SCAN_T_MIN: f64 = 1e-3;

/// Iteration cap for the bisection that narrows a critical-temperature
/// bracket; 64 halvings already shrink any sane bracket below 1e-15.
pub const TC_MAX_BISECTIONS: usize = 200;
