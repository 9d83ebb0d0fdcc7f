//! Parameter sweeps over concurrence: 1D curves, 2D grids, and the threshold
//! temperature beyond which entanglement disappears.
//!
//! Grid evaluations are independent pure computations; they may run on the
//! shared worker pool, but results land in preassigned slots, so the output
//! is bitwise identical regardless of thread count or schedule.

use crate::concurrence::{concurrence_analytic, concurrence_oracle, ConcurrenceError};
use crate::model::ModelParams;
use crate::thermal::Temperature;
use crate::tol;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid axis: {0}")]
    InvalidAxis(String),
    #[error("concurrence is zero over the whole scan range; no threshold to find")]
    NoEntanglement,
    #[error("concurrence is still positive at the scan ceiling {t_max}; raise the ceiling")]
    NoVanishing { t_max: f64 },
    #[error("evaluation failed at grid index {index}: {source}")]
    Evaluation {
        index: usize,
        source: ConcurrenceError,
    },
    #[error("bisection stalled at bracket width {width:e} before reaching the tolerance")]
    BisectionExhausted { width: f64 },
}

/// Quantity a sweep axis varies. `LogTemp` runs over log10(T), so an axis
/// from -1 to 1 covers temperatures 0.1 to 10 geometrically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    Temp,
    LogTemp,
    J,
    Dx,
    Gx,
}

impl SweepParam {
    pub fn name(&self) -> &'static str {
        match self {
            SweepParam::Temp => "temp",
            SweepParam::LogTemp => "log_temp",
            SweepParam::J => "j",
            SweepParam::Dx => "dx",
            SweepParam::Gx => "gx",
        }
    }
}

/// Uniform closed grid on [lo, hi] with at least two points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub param: SweepParam,
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl AxisSpec {
    pub fn new(param: SweepParam, lo: f64, hi: f64, steps: usize) -> Result<Self, SweepError> {
        if !lo.is_finite() || !hi.is_finite() || !(hi - lo).is_finite() {
            return Err(SweepError::InvalidAxis(format!(
                "{} axis bounds must be finite, got [{lo}, {hi}]",
                param.name()
            )));
        }
        if lo >= hi {
            return Err(SweepError::InvalidAxis(format!(
                "{} axis needs lo < hi, got [{lo}, {hi}]",
                param.name()
            )));
        }
        if steps < 2 {
            return Err(SweepError::InvalidAxis(format!(
                "{} axis needs at least 2 steps, got {steps}",
                param.name()
            )));
        }
        if param == SweepParam::Temp && lo <= 0.0 {
            return Err(SweepError::InvalidAxis(format!(
                "temp axis needs lo > 0, got {lo}"
            )));
        }
        Ok(AxisSpec { param, lo, hi, steps })
    }

    /// Grid point `i` of `steps`. The endpoints are returned literally, not
    /// through the interpolation formula, so they are exact.
    pub fn value_at(&self, i: usize) -> f64 {
        debug_assert!(i < self.steps);
        if i == 0 {
            self.lo
        } else if i == self.steps - 1 {
            self.hi
        } else {
            self.lo + (self.hi - self.lo) * (i as f64) / ((self.steps - 1) as f64)
        }
    }
}

/// Which concurrence route a sweep runs through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Oracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Oracle => "oracle",
        }
    }
}

/// Sweep output: one axis for curves, two for grids (values row-major with
/// the first axis fastest), plus the base point the sweep varied around.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub axes: Vec<AxisSpec>,
    pub values: Vec<f64>,
    pub base: ModelParams,
    pub base_temp: Temperature,
    pub method: Method,
}

/// Base point with one parameter overridden by a grid value.
fn apply(
    base: &ModelParams,
    base_temp: Temperature,
    param: SweepParam,
    value: f64,
) -> Result<(ModelParams, Temperature), ConcurrenceError> {
    let mut j = base.j;
    let mut dx = base.dx;
    let mut gx = base.gx;
    let mut t = base_temp;
    match param {
        SweepParam::Temp => t = Temperature::new(value)?,
        SweepParam::LogTemp => t = Temperature::new(10f64.powf(value))?,
        SweepParam::J => j = value,
        SweepParam::Dx => dx = value,
        SweepParam::Gx => gx = value,
    }
    let p = ModelParams::new(j, dx, gx).expect("axis bounds are finite");
    Ok((p, t))
}

fn eval(method: Method, p: &ModelParams, t: Temperature) -> Result<f64, ConcurrenceError> {
    match method {
        Method::Analytic => concurrence_analytic(p, t).map(|r| r.concurrence),
        Method::Oracle => concurrence_oracle(p, t).map(|r| r.concurrence),
    }
}

fn collect_grid(
    results: Vec<Result<f64, ConcurrenceError>>,
) -> Result<Vec<f64>, SweepError> {
    let mut values = Vec::with_capacity(results.len());
    for (index, r) in results.into_iter().enumerate() {
        match r {
            Ok(v) => values.push(v),
            Err(source) => return Err(SweepError::Evaluation { index, source }),
        }
    }
    Ok(values)
}

/// Concurrence along one axis; both endpoints included.
pub fn sweep_1d(
    axis: AxisSpec,
    base: &ModelParams,
    base_temp: Temperature,
    method: Method,
) -> Result<SweepResult, SweepError> {
    let results: Vec<Result<f64, ConcurrenceError>> = crate::worker_pool().install(|| {
        (0..axis.steps)
            .into_par_iter()
            .map(|i| {
                let (p, t) = apply(base, base_temp, axis.param, axis.value_at(i))?;
                eval(method, &p, t)
            })
            .collect()
    });
    Ok(SweepResult {
        axes: vec![axis],
        values: collect_grid(results)?,
        base: *base,
        base_temp,
        method,
    })
}

/// Concurrence over a 2D grid, row-major: index `iy * nx + ix`, x fastest.
pub fn sweep_2d(
    ax: AxisSpec,
    ay: AxisSpec,
    base: &ModelParams,
    base_temp: Temperature,
    method: Method,
) -> Result<SweepResult, SweepError> {
    if ax.param == ay.param {
        return Err(SweepError::InvalidAxis(format!(
            "both grid axes vary {}",
            ax.param.name()
        )));
    }
    let (nx, ny) = (ax.steps, ay.steps);
    let results: Vec<Result<f64, ConcurrenceError>> = crate::worker_pool().install(|| {
        (0..nx * ny)
            .into_par_iter()
            .map(|idx| {
                let (ix, iy) = (idx % nx, idx / nx);
                let (p, t) = apply(base, base_temp, ax.param, ax.value_at(ix))?;
                let (p, t) = apply(&p, t, ay.param, ay.value_at(iy))?;
                eval(method, &p, t)
            })
            .collect()
    });
    Ok(SweepResult {
        axes: vec![ax, ay],
        values: collect_grid(results)?,
        base: *base,
        base_temp,
        method,
    })
}

/// Threshold temperature with its final bisection bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalTemperature {
    pub tc: f64,
    pub bracket: (f64, f64),
    pub tolerance: f64,
}

/// Largest temperature at which concurrence crosses to zero, located by a
/// coarse geometric scan and sharpened by bisection on the indicator
/// `C > 0`. Concurrence need not be monotone in temperature, so the scan
/// keeps the LAST positive-to-zero crossing below `t_max`.
pub fn critical_temperature(
    p: &ModelParams,
    t_max: f64,
    tolerance: f64,
) -> Result<CriticalTemperature, SweepError> {
    if !t_max.is_finite() || t_max <= tol::TC_SCAN_T_MIN {
        return Err(SweepError::InvalidAxis(format!(
            "scan ceiling must be finite and above {}, got {t_max}",
            tol::TC_SCAN_T_MIN
        )));
    }
    if !tolerance.is_finite() || tolerance <= 0.0 {
        return Err(SweepError::InvalidAxis(format!(
            "bracket tolerance must be positive, got {tolerance}"
        )));
    }

    let n = tol::TC_SCAN_POINTS;
    let ratio = t_max / tol::TC_SCAN_T_MIN;
    let grid_point = |k: usize| -> f64 {
        if k == 0 {
            tol::TC_SCAN_T_MIN
        } else if k == n - 1 {
            t_max
        } else {
            tol::TC_SCAN_T_MIN * ratio.powf(k as f64 / (n - 1) as f64)
        }
    };
    let entangled = |t: f64| -> Result<bool, SweepError> {
        let temp = Temperature::new(t)
            .map_err(|e| SweepError::Evaluation { index: 0, source: e.into() })?;
        let c = concurrence_analytic(p, temp)
            .map_err(|source| SweepError::Evaluation { index: 0, source })?;
        Ok(c.concurrence > tol::ZERO_CONCURRENCE)
    };

    let mut flags = Vec::with_capacity(n);
    for k in 0..n {
        flags.push(entangled(grid_point(k))?);
    }
    if flags[n - 1] {
        return Err(SweepError::NoVanishing { t_max });
    }
    // Last scan point that is still entangled; everything after it is not.
    let last_positive = match flags.iter().rposition(|&f| f) {
        Some(k) => k,
        None => return Err(SweepError::NoEntanglement),
    };

    let mut lo = grid_point(last_positive);
    let mut hi = grid_point(last_positive + 1);
    for _ in 0..tol::TC_MAX_BISECTIONS {
        if hi - lo <= tolerance {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if entangled(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi - lo > tolerance {
        return Err(SweepError::BisectionExhausted { width: hi - lo });
    }
    Ok(CriticalTemperature {
        tc: 0.5 * (lo + hi),
        bracket: (lo, hi),
        tolerance,
    })
}
