//! JSON rendering: flat snake_case objects, every payload stamped with
//! `schema_version` 1. Floats serialize in shortest round-trip form.

use crate::verify::VerifyReport;
use serde::Serialize;
use spinpair::{
    ConcurrenceResult, CriticalTemperature, GroundStateClass, LimitEvaluation, ModelParams,
    PhaseRaster, Spectrum, SweepResult, Temperature,
};

pub const SCHEMA_VERSION: u32 = 1;

fn line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: &'a str,
}

#[derive(Serialize)]
struct ErrorOut<'a> {
    schema_version: u32,
    error: ErrorBody<'a>,
}

/// Machine-readable error line for stderr. No trailing newline; callers
/// print it as one line.
pub fn error_line(kind: &str, message: &str) -> String {
    serde_json::to_string(&ErrorOut {
        schema_version: SCHEMA_VERSION,
        error: ErrorBody { kind, message },
    })
    .expect("plain data serializes")
}

#[derive(Serialize)]
struct ConcurrenceOut<'a> {
    schema_version: u32,
    command: &'a str,
    j: f64,
    dx: f64,
    gx: f64,
    temp: f64,
    method: &'a str,
    concurrence: f64,
    lambdas: [f64; 4],
}

pub fn concurrence(p: &ModelParams, temp: Temperature, r: &ConcurrenceResult) -> String {
    line(&ConcurrenceOut {
        schema_version: SCHEMA_VERSION,
        command: "concurrence",
        j: p.j,
        dx: p.dx,
        gx: p.gx,
        temp: temp.get(),
        method: r.path.name(),
        concurrence: r.concurrence,
        lambdas: r.lambdas,
    })
}

#[derive(Serialize)]
struct SpectrumOut<'a> {
    schema_version: u32,
    command: &'a str,
    j: f64,
    dx: f64,
    gx: f64,
    energies: [f64; 4],
    eta: f64,
    theta1: f64,
    theta2: f64,
    /// One row per eigenstate, components as [re, im] pairs.
    states: [[[f64; 2]; 4]; 4],
}

pub fn spectrum(p: &ModelParams, s: &Spectrum) -> String {
    let mut states = [[[0.0; 2]; 4]; 4];
    for (k, v) in s.states.iter().enumerate() {
        for i in 0..4 {
            states[k][i] = [v.0[i].re, v.0[i].im];
        }
    }
    line(&SpectrumOut {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        j: p.j,
        dx: p.dx,
        gx: p.gx,
        energies: s.energies,
        eta: s.eta,
        theta1: s.theta1,
        theta2: s.theta2,
        states,
    })
}

#[derive(Serialize)]
struct GroundStateOut<'a> {
    schema_version: u32,
    command: &'a str,
    j: f64,
    dx: f64,
    gx: f64,
    label: &'a str,
    energy: f64,
    degenerate_with: Vec<&'a str>,
}

pub fn ground_state(p: &ModelParams, g: &GroundStateClass) -> String {
    line(&GroundStateOut {
        schema_version: SCHEMA_VERSION,
        command: "ground-state",
        j: p.j,
        dx: p.dx,
        gx: p.gx,
        label: g.label.name(),
        energy: g.energy,
        degenerate_with: g.degenerate_with.iter().map(|l| l.name()).collect(),
    })
}

#[derive(Serialize)]
struct AxisOut<'a> {
    param: &'a str,
    from: f64,
    to: f64,
    steps: usize,
}

#[derive(Serialize)]
struct SweepOut<'a> {
    schema_version: u32,
    command: &'a str,
    method: &'a str,
    j: f64,
    dx: f64,
    gx: f64,
    temp: f64,
    axes: Vec<AxisOut<'a>>,
    /// Row-major for 2D grids, x axis fastest.
    values: &'a [f64],
}

pub fn sweep(r: &SweepResult) -> String {
    line(&SweepOut {
        schema_version: SCHEMA_VERSION,
        command: "sweep",
        method: r.method.name(),
        j: r.base.j,
        dx: r.base.dx,
        gx: r.base.gx,
        temp: r.base_temp.get(),
        axes: r
            .axes
            .iter()
            .map(|a| AxisOut { param: a.param.name(), from: a.lo, to: a.hi, steps: a.steps })
            .collect(),
        values: &r.values,
    })
}

#[derive(Serialize)]
struct PhaseOut<'a> {
    schema_version: u32,
    command: &'a str,
    j: f64,
    dx: f64,
    gx: f64,
    x_param: &'a str,
    x_from: f64,
    x_to: f64,
    y_param: &'a str,
    y_from: f64,
    y_to: f64,
    nx: usize,
    ny: usize,
    /// Row-major cell labels, x axis fastest.
    labels: Vec<&'a str>,
    /// Ground-state energy per cell, same order.
    energies: Vec<f64>,
}

pub fn phase(r: &PhaseRaster) -> String {
    line(&PhaseOut {
        schema_version: SCHEMA_VERSION,
        command: "phase-diagram",
        j: r.base.j,
        dx: r.base.dx,
        gx: r.base.gx,
        x_param: r.x_axis.param.name(),
        x_from: r.x_axis.lo,
        x_to: r.x_axis.hi,
        y_param: r.y_axis.param.name(),
        y_from: r.y_axis.lo,
        y_to: r.y_axis.hi,
        nx: r.nx,
        ny: r.ny,
        labels: r.cells.iter().map(|c| c.label.name()).collect(),
        energies: r.cells.iter().map(|c| c.energy).collect(),
    })
}

#[derive(Serialize)]
struct TcOut<'a> {
    schema_version: u32,
    command: &'a str,
    j: f64,
    dx: f64,
    gx: f64,
    t_max: f64,
    tolerance: f64,
    tc: f64,
    bracket_lo: f64,
    bracket_hi: f64,
}

pub fn tc(p: &ModelParams, t_max: f64, ct: &CriticalTemperature) -> String {
    line(&TcOut {
        schema_version: SCHEMA_VERSION,
        command: "tc",
        j: p.j,
        dx: p.dx,
        gx: p.gx,
        t_max,
        tolerance: ct.tolerance,
        tc: ct.tc,
        bracket_lo: ct.bracket.0,
        bracket_hi: ct.bracket.1,
    })
}

#[derive(Serialize)]
struct LimitsOut<'a> {
    schema_version: u32,
    command: &'a str,
    case: &'a str,
    j: f64,
    dx: f64,
    gx: f64,
    temp: f64,
    branch: &'a str,
    limit_value: f64,
    exact_value: f64,
    abs_difference: f64,
    /// True when the asymptotic formula misses the exact concurrence by
    /// more than 0.01 at the evaluated point.
    discrepancy: bool,
}

pub fn limits(
    case: &str,
    p: &ModelParams,
    temp: Temperature,
    limit: &LimitEvaluation,
    exact: &ConcurrenceResult,
) -> String {
    let abs_difference = (limit.value - exact.concurrence).abs();
    line(&LimitsOut {
        schema_version: SCHEMA_VERSION,
        command: "limits",
        case,
        j: p.j,
        dx: p.dx,
        gx: p.gx,
        temp: temp.get(),
        branch: limit.branch.name(),
        limit_value: limit.value,
        exact_value: exact.concurrence,
        abs_difference,
        discrepancy: abs_difference > 0.01,
    })
}

#[derive(Serialize)]
struct VerifyFailureOut {
    j: f64,
    dx: f64,
    gx: f64,
    temp: f64,
    analytic: f64,
    oracle: f64,
    abs_dev: f64,
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    schema_version: u32,
    command: &'a str,
    samples: usize,
    seed: u64,
    tolerance: f64,
    max_abs_dev: f64,
    failure_count: usize,
    failures: Vec<VerifyFailureOut>,
}

pub fn verify(report: &VerifyReport) -> String {
    line(&VerifyOut {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        samples: report.samples,
        seed: report.seed,
        tolerance: report.tolerance,
        max_abs_dev: report.max_abs_dev,
        failure_count: report.failure_count,
        failures: report
            .failures
            .iter()
            .map(|f| VerifyFailureOut {
                j: f.point.j,
                dx: f.point.dx,
                gx: f.point.gx,
                temp: f.point.temp,
                analytic: f.analytic,
                oracle: f.oracle,
                abs_dev: f.abs_dev,
            })
            .collect(),
    })
}
