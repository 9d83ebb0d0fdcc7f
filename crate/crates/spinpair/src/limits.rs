//! Asymptotic concurrence formulas for three limiting regimes, kept verbatim
//! in their printed closed forms.
//!
//! These are approximations with restricted domains of validity, exposed for
//! comparison against the exact routes and never substituted for them. Two of
//! them are known to disagree with the exact computation even deep inside
//! their nominal regime:
//!
//! * the ferromagnetic strong-coupling branch has a strictly negative
//!   argument, so it returns 0 for every temperature, while the exact ground
//!   state at strong negative coupling is maximally entangled;
//! * the DM-dominant branch doubles the exponent scales relative to its
//!   KSEA-dominant partner and grows past 1, while the exact concurrence
//!   saturates at 1.
//!
//! Both discrepancies are deliberate transcription fidelity, not bugs; the
//! exact routes in [`crate::concurrence`] are authoritative.

use crate::model::ModelParams;
use crate::thermal::Temperature;
use crate::tol;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LimitError {
    #[error("exponent argument {arg:e} exceeds the overflow guard")]
    Overflow { arg: f64 },
}

/// Which asymptotic branch produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitBranch {
    HighTemperature,
    AntiferromagneticCoupling,
    FerromagneticCoupling,
    KseaDominant,
    DmDominant,
}

impl LimitBranch {
    pub fn name(&self) -> &'static str {
        match self {
            LimitBranch::HighTemperature => "high-temperature",
            LimitBranch::AntiferromagneticCoupling => "antiferromagnetic-coupling",
            LimitBranch::FerromagneticCoupling => "ferromagnetic-coupling",
            LimitBranch::KseaDominant => "ksea-dominant",
            LimitBranch::DmDominant => "dm-dominant",
        }
    }
}

/// Value of an asymptotic formula plus the branch that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitEvaluation {
    pub value: f64,
    pub branch: LimitBranch,
}

/// Guard for `exp(arg)`: only large positive arguments overflow; large
/// negative ones underflow harmlessly to zero.
fn guard_exp(arg: f64) -> Result<(), LimitError> {
    if arg > tol::EXP_ARG_MAX {
        return Err(LimitError::Overflow { arg });
    }
    Ok(())
}

/// Guard for `cosh(arg)` and `sinh(arg)`: both tails grow, so the magnitude
/// is what matters.
fn guard_cosh(arg: f64) -> Result<(), LimitError> {
    if arg.abs() > tol::EXP_ARG_MAX {
        return Err(LimitError::Overflow { arg });
    }
    Ok(())
}

/// Leading-order concurrence for small inverse temperature with all three
/// couplings fixed at 1 (the regime the expansion was carried out in):
/// `max(0, ((2 sqrt(2) + 1) beta - 1) / 2)`.
pub fn limit_high_temperature(temp: Temperature) -> Result<LimitEvaluation, LimitError> {
    let beta = temp.beta();
    let value = (((2.0 * 2.0_f64.sqrt() + 1.0) * beta - 1.0) / 2.0).max(0.0);
    Ok(LimitEvaluation {
        value,
        branch: LimitBranch::HighTemperature,
    })
}

/// Concurrence when the exchange coupling dominates both anisotropies.
/// The antiferromagnetic branch (J >= 0) is
/// `max(0, (e^{4 beta J} - 3) / (2 cosh(2 beta Gx) + e^{4 beta J} + 1))`;
/// the ferromagnetic branch (J < 0) replaces the numerator by
/// `-(e^{4 beta J} + 1)`, which is strictly negative, so that branch always
/// clamps to 0 (see the module discussion).
pub fn limit_strong_coupling(
    p: &ModelParams,
    temp: Temperature,
) -> Result<LimitEvaluation, LimitError> {
    let beta = temp.beta();
    guard_exp(4.0 * beta * p.j)?;
    guard_cosh(2.0 * beta * p.gx)?;
    let grow = (4.0 * beta * p.j).exp();
    let den = 2.0 * (2.0 * beta * p.gx).cosh() + grow + 1.0;
    if p.j >= 0.0 {
        Ok(LimitEvaluation {
            value: ((grow - 3.0) / den).max(0.0),
            branch: LimitBranch::AntiferromagneticCoupling,
        })
    } else {
        Ok(LimitEvaluation {
            value: (-(grow + 1.0) / den).max(0.0),
            branch: LimitBranch::FerromagneticCoupling,
        })
    }
}

/// Concurrence when both anisotropies dominate the exchange coupling.
/// The KSEA-dominant branch (Gx >= Dx) is
/// `max(0, sqrt(2) (sinh(beta Gx) - cosh(beta Dx)) / sqrt(cosh(2 beta Dx) + cosh(2 beta Gx)))`;
/// the DM-dominant branch (Gx < Dx) doubles the arguments in the numerator,
/// `max(0, sqrt(2) (sinh(2 beta Dx) - cosh(2 beta Gx)) / sqrt(...))`,
/// and is kept as printed even though it exceeds 1 (see the module
/// discussion). Equal anisotropies fall into the first branch; both branches
/// agree on the value 0 there.
pub fn limit_strong_dm_ksea(
    p: &ModelParams,
    temp: Temperature,
) -> Result<LimitEvaluation, LimitError> {
    let beta = temp.beta();
    guard_cosh(2.0 * beta * p.dx)?;
    guard_cosh(2.0 * beta * p.gx)?;
    let den = ((2.0 * beta * p.dx).cosh() + (2.0 * beta * p.gx).cosh()).sqrt();
    if p.gx >= p.dx {
        let num = 2.0_f64.sqrt() * ((beta * p.gx).sinh() - (beta * p.dx).cosh());
        Ok(LimitEvaluation {
            value: (num / den).max(0.0),
            branch: LimitBranch::KseaDominant,
        })
    } else {
        let num = 2.0_f64.sqrt() * ((2.0 * beta * p.dx).sinh() - (2.0 * beta * p.gx).cosh());
        Ok(LimitEvaluation {
            value: (num / den).max(0.0),
            branch: LimitBranch::DmDominant,
        })
    }
}
