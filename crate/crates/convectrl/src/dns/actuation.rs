use serde::{Deserialize, Serialize};

use super::{Result, SimError};

/// Number of independently heated bottom-wall segments.
pub const N_ACTUATORS: usize = 12;

/// Largest admissible temperature offset of a single segment.
pub const MAX_SEGMENT_OFFSET: f64 = 0.75;

/// A raw agent action: one normalized value per heating segment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Action(pub [f64; N_ACTUATORS]);

impl Action {
    pub fn zeros() -> Self {
        Action([0.0; N_ACTUATORS])
    }

    pub fn from_slice(values: &[f64]) -> Result<Self> {
        if values.len() != N_ACTUATORS {
            return Err(SimError::InvalidInput(format!(
                "action must have {} components, got {}",
                N_ACTUATORS,
                values.len()
            )));
        }
        let mut a = [0.0; N_ACTUATORS];
        a.copy_from_slice(values);
        Ok(Action(a))
    }

    /// Clamps each component into `[-1, 1]`.
    pub fn clamped(&self) -> Self {
        let mut a = self.0;
        for v in &mut a {
            *v = v.clamp(-1.0, 1.0);
        }
        Action(a)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, v) in self.0.iter().enumerate() {
            if !v.is_finite() || v.abs() > 1.0 {
                return Err(SimError::InvalidInput(format!(
                    "action component {i} = {v} outside [-1, 1]"
                )));
            }
        }
        Ok(())
    }
}

/// Temperature offsets applied to the bottom-wall segments.
///
/// Offsets always have zero mean, so the mean bottom-wall temperature stays
/// fixed, and each entry lies within `±0.75`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryActuation {
    pub segment_temps: [f64; N_ACTUATORS],
}

impl BoundaryActuation {
    pub fn zero() -> Self {
        Self {
            segment_temps: [0.0; N_ACTUATORS],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mean: f64 = self.segment_temps.iter().sum::<f64>() / N_ACTUATORS as f64;
        if mean.abs() > 1e-12 {
            return Err(SimError::InvalidInput(format!(
                "segment offsets must have zero mean (got {mean:e})"
            )));
        }
        for (i, v) in self.segment_temps.iter().enumerate() {
            if !v.is_finite() || v.abs() > MAX_SEGMENT_OFFSET + 1e-12 {
                return Err(SimError::InvalidInput(format!(
                    "segment offset {i} = {v} outside ±{MAX_SEGMENT_OFFSET}"
                )));
            }
        }
        Ok(())
    }
}

/// Maps a normalized control signal onto admissible segment offsets.
///
/// The mean of the raw signal is removed first, so the offsets never change
/// the net heating. The zero-mean vector is then rescaled by
/// `0.75 / max(1, max_i |a_i - mean|)`: inputs already within bounds pass
/// through unchanged and anything larger is shrunk uniformly, preserving the
/// zero mean and capping every offset at ±0.75.
pub fn apply_action_transform(action: &Action) -> Result<BoundaryActuation> {
    action.validate()?;
    let mean: f64 = action.0.iter().sum::<f64>() / N_ACTUATORS as f64;
    let mut centered = [0.0; N_ACTUATORS];
    let mut max_abs = 0.0f64;
    for (c, a) in centered.iter_mut().zip(action.0.iter()) {
        *c = a - mean;
        max_abs = max_abs.max(c.abs());
    }
    let scale = MAX_SEGMENT_OFFSET / max_abs.max(1.0);
    let mut segment_temps = [0.0; N_ACTUATORS];
    for (t, c) in segment_temps.iter_mut().zip(centered.iter()) {
        *t = scale * c;
    }
    let actuation = BoundaryActuation { segment_temps };
    debug_assert!(actuation.validate().is_ok());
    Ok(actuation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_input_gives_zero_offsets() {
        let out = apply_action_transform(&Action::zeros()).unwrap();
        assert_eq!(out.segment_temps, [0.0; N_ACTUATORS]);
    }

    #[test]
    fn constant_input_is_annihilated() {
        for c in [-1.0, -0.3, 0.55, 1.0] {
            let out = apply_action_transform(&Action([c; N_ACTUATORS])).unwrap();
            for v in out.segment_temps {
                assert!(v.abs() < 1e-15, "constant {c} leaked through: {v}");
            }
        }
    }

    #[test]
    fn single_spike_saturates_at_bound() {
        // a = (1, -1, ..., -1): mean = -5/6, centered = (11/6, -1/6, ...),
        // max-norm 11/6 > 1, so the spike lands exactly on 0.75 and the rest
        // on -0.75/11.
        let mut a = [-1.0; N_ACTUATORS];
        a[0] = 1.0;
        let out = apply_action_transform(&Action(a)).unwrap();
        assert!((out.segment_temps[0] - 0.75).abs() < 1e-15);
        for v in &out.segment_temps[1..] {
            assert!((v + 0.75 / 11.0).abs() < 1e-15);
        }
    }

    #[test]
    fn small_zero_mean_inputs_pass_through() {
        let mut a = [0.0; N_ACTUATORS];
        a[0] = 0.4;
        a[1] = -0.4;
        let out = apply_action_transform(&Action(a)).unwrap();
        assert!((out.segment_temps[0] - 0.3).abs() < 1e-15);
        assert!((out.segment_temps[1] + 0.3).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range_and_non_finite() {
        let mut a = [0.0; N_ACTUATORS];
        a[3] = 1.5;
        assert!(apply_action_transform(&Action(a)).is_err());
        a[3] = f64::NAN;
        assert!(apply_action_transform(&Action(a)).is_err());
    }

    proptest! {
        #[test]
        fn output_always_zero_mean_and_bounded(raw in proptest::array::uniform12(-1.0f64..=1.0)) {
            let out = apply_action_transform(&Action(raw)).unwrap();
            let mean: f64 = out.segment_temps.iter().sum::<f64>() / 12.0;
            prop_assert!(mean.abs() < 1e-12);
            for v in out.segment_temps {
                prop_assert!(v.abs() <= MAX_SEGMENT_OFFSET + 1e-12);
            }
        }

        #[test]
        fn invariant_under_constant_shift(
            raw in proptest::array::uniform12(-0.5f64..=0.5),
            shift in -0.5f64..=0.5,
        ) {
            let base = apply_action_transform(&Action(raw)).unwrap();
            let mut shifted = raw;
            for v in &mut shifted {
                *v += shift;
            }
            let out = apply_action_transform(&Action(shifted)).unwrap();
            for (a, b) in base.segment_temps.iter().zip(out.segment_temps.iter()) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }
}
