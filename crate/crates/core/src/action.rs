//! Normalized per-window action space: five fluid-volume levels crossed
//! with five vasopressor-rate levels, 25 joint actions total.
//!
//! Fluid bounds are volumes per window and scale linearly with the window
//! size relative to a 4-hour base configuration; vasopressor bounds are
//! simultaneous rates and do not depend on the window size. Level 0 of
//! either drug is reserved for exactly zero dose.

use alloc::vec::Vec;
use thiserror::Error;

pub const LEVELS_PER_DRUG: usize = 5;
pub const ACTION_COUNT: usize = 25;

/// Window size at which `base_fluid_bounds` are expressed (hours).
pub const REFERENCE_DT_HOURS: f64 = 4.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ActionError {
    #[error("step size must be positive, got {0}")]
    NonPositiveDt(f64),
    #[error("{what} bounds must be 4 strictly increasing positive values")]
    NonMonotoneBounds { what: &'static str },
    #[error("dose inputs must be non-negative, got fluid={fluid} vaso={vaso}")]
    NegativeDose { fluid: f64, vaso: f64 },
    #[error("action index {0} out of range 0..25")]
    BadIndex(usize),
    #[error("fluid level-4 cap has not been fitted for this action space")]
    UnfittedCap,
}

/// One of the 25 joint dose actions, stored as its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JointAction {
    index: u8,
}

impl JointAction {
    pub fn from_index(index: usize) -> Result<Self, ActionError> {
        if index >= ACTION_COUNT {
            return Err(ActionError::BadIndex(index));
        }
        Ok(Self { index: index as u8 })
    }

    /// index = 5 * fluid_level + vaso_level
    pub fn from_levels(fluid_level: usize, vaso_level: usize) -> Result<Self, ActionError> {
        if fluid_level >= LEVELS_PER_DRUG || vaso_level >= LEVELS_PER_DRUG {
            return Err(ActionError::BadIndex(5 * fluid_level + vaso_level));
        }
        Ok(Self {
            index: (5 * fluid_level + vaso_level) as u8,
        })
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn fluid_level(&self) -> usize {
        self.index as usize / 5
    }

    pub fn vaso_level(&self) -> usize {
        self.index as usize % 5
    }
}

/// Per-window dose bins for one step size.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionSpace {
    pub dt_hours: f64,
    /// Volumes (mL per window) separating fluid levels; level l in 1..=4
    /// covers (bounds[l-2], bounds[l-1]] with bounds[-1] = 0, and any volume
    /// above the last bound is still level 4.
    pub fluid_bounds: [f64; 4],
    /// Rates (ug/kg/min) separating vasopressor levels, same convention.
    pub vaso_bounds: [f64; 4],
    /// Empirical open-end cap for fluid level 4 (mL), fitted from data.
    pub fluid_p95_upper: Option<f64>,
}

fn check_bounds(bounds: &[f64; 4], what: &'static str) -> Result<(), ActionError> {
    let mut prev = 0.0;
    for &b in bounds {
        if !(b > prev) || !b.is_finite() {
            return Err(ActionError::NonMonotoneBounds { what });
        }
        prev = b;
    }
    Ok(())
}

/// Builds the action space for a step size, scaling the fluid bounds from
/// their 4-hour base values. Vasopressor bounds are rates and stay fixed.
pub fn make_action_space(
    dt_hours: f64,
    base_fluid_bounds: [f64; 4],
    vaso_bounds: [f64; 4],
) -> Result<ActionSpace, ActionError> {
    if !(dt_hours > 0.0) {
        return Err(ActionError::NonPositiveDt(dt_hours));
    }
    check_bounds(&base_fluid_bounds, "fluid")?;
    check_bounds(&vaso_bounds, "vasopressor")?;
    let scale = dt_hours / REFERENCE_DT_HOURS;
    let mut fluid_bounds = base_fluid_bounds;
    for b in &mut fluid_bounds {
        *b *= scale;
    }
    Ok(ActionSpace {
        dt_hours,
        fluid_bounds,
        vaso_bounds,
        fluid_p95_upper: None,
    })
}

fn level_of(value: f64, bounds: &[f64; 4]) -> usize {
    if value == 0.0 {
        return 0;
    }
    let below = bounds.iter().filter(|&&b| b < value).count();
    (1 + below).min(4)
}

/// Bins a window's total fluid volume and maximum simultaneous vasopressor
/// rate into a joint action.
pub fn encode_action(
    fluid_volume: f64,
    vaso_rate: f64,
    space: &ActionSpace,
) -> Result<JointAction, ActionError> {
    if fluid_volume < 0.0 || vaso_rate < 0.0 || !fluid_volume.is_finite() || !vaso_rate.is_finite()
    {
        return Err(ActionError::NegativeDose {
            fluid: fluid_volume,
            vaso: vaso_rate,
        });
    }
    let f = level_of(fluid_volume, &space.fluid_bounds);
    let v = level_of(vaso_rate, &space.vaso_bounds);
    JointAction::from_levels(f, v)
}

impl ActionSpace {
    /// Half-open-below bin (lower, upper] of a fluid level, as a closed
    /// segment for interval arithmetic. Level 0 is the point [0, 0]; level 4
    /// runs up to the fitted p95 cap.
    pub fn fluid_interval(&self, level: usize) -> Result<(f64, f64), ActionError> {
        match level {
            0 => Ok((0.0, 0.0)),
            1..=3 => Ok((
                if level == 1 {
                    0.0
                } else {
                    self.fluid_bounds[level - 2]
                },
                self.fluid_bounds[level - 1],
            )),
            4 => {
                let cap = self.fluid_p95_upper.ok_or(ActionError::UnfittedCap)?;
                Ok((self.fluid_bounds[2], cap))
            }
            _ => Err(ActionError::BadIndex(level)),
        }
    }

    /// Cap to use where an open-ended level-4 value is required: the fitted
    /// p95 if present, otherwise twice the top fluid bound.
    pub fn fluid_cap_or_default(&self) -> f64 {
        self.fluid_p95_upper
            .unwrap_or(2.0 * self.fluid_bounds[3])
    }

    /// Representative volume (mL per window) used when a discrete fluid
    /// level must be executed as a concrete dose: bin midpoints, with the
    /// level-4 bin closed by the cap.
    pub fn representative_fluid_volume(&self, level: usize) -> f64 {
        match level {
            0 => 0.0,
            1 => self.fluid_bounds[0] / 2.0,
            2 => (self.fluid_bounds[0] + self.fluid_bounds[1]) / 2.0,
            3 => (self.fluid_bounds[1] + self.fluid_bounds[2]) / 2.0,
            _ => (self.fluid_bounds[2] + self.fluid_cap_or_default()) / 2.0,
        }
    }

    /// Representative vasopressor rate (ug/kg/min) for a level; level 4 uses
    /// twice the top bound as its nominal upper edge.
    pub fn representative_vaso_rate(&self, level: usize) -> f64 {
        match level {
            0 => 0.0,
            1 => self.vaso_bounds[0] / 2.0,
            2 => (self.vaso_bounds[0] + self.vaso_bounds[1]) / 2.0,
            3 => (self.vaso_bounds[1] + self.vaso_bounds[2]) / 2.0,
            _ => (self.vaso_bounds[2] + 2.0 * self.vaso_bounds[3]) / 2.0,
        }
    }

    pub fn with_cap(mut self, cap: f64) -> Self {
        self.fluid_p95_upper = Some(cap);
        self
    }
}

/// Default 4-hour fluid bin edges (mL per window). Placeholder clinically
/// plausible values; real deployments supply their own in configuration.
pub const DEFAULT_BASE_FLUID_BOUNDS: [f64; 4] = [50.0, 180.0, 530.0, 1000.0];
/// Default vasopressor bin edges (ug/kg/min).
pub const DEFAULT_VASO_BOUNDS: [f64; 4] = [0.08, 0.22, 0.45, 0.90];

/// All 25 joint actions in index order.
pub fn all_actions() -> Vec<JointAction> {
    (0..ACTION_COUNT)
        .map(|i| JointAction::from_index(i).expect("index in range"))
        .collect()
}
