use ndarray::{Array2, Array3, ArrayView3};
use rand::Rng;

use super::{PhysicalParams, Result, SimError};

/// Stacked `(3, nz, nx)` single-precision view of a flow state, the layout
/// used for datasets, model inputs and observations. Channel order is
/// temperature, horizontal velocity, vertical velocity.
pub type FieldStack = Array3<f32>;

/// The prognostic fields of the solver on a staggered (MAC) grid.
///
/// All three arrays have shape `(nz, nx)` and share the column spacing `dx`
/// and row spacing `dz`, but sit at different points of the cell:
///
/// * `temperature[k][i]` at the cell center `((i+1/2)dx, (k+1/2)dz)`,
/// * `u[k][i]` at the vertical face `(i dx, (k+1/2)dz)`,
/// * `w[k][i]` at the horizontal face `((i+1/2)dx, k dz)`.
///
/// Row `k = 0` of `w` is the bottom wall and is identically zero; the top
/// wall value (row `nz`) is implied zero. Keeping the staggered values as
/// the state representation makes saving, restoring and symmetry operations
/// exact: no interpolation ever filters the fields.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowState {
    pub temperature: Array2<f64>,
    pub u: Array2<f64>,
    pub w: Array2<f64>,
    pub time: f64,
}

impl FlowState {
    /// Motionless conductive profile: a linear temperature ramp between the
    /// wall values and zero velocity.
    pub fn conductive(params: &PhysicalParams) -> Self {
        let (nz, nx) = (params.grid_nz, params.grid_nx);
        let dz = params.dz();
        let mut temperature = Array2::zeros((nz, nx));
        for k in 0..nz {
            let z = (k as f64 + 0.5) * dz;
            let t = params.t_bottom_mean
                - (params.t_bottom_mean - params.t_top) * z / params.domain_height;
            temperature.row_mut(k).fill(t);
        }
        Self {
            temperature,
            u: Array2::zeros((nz, nx)),
            w: Array2::zeros((nz, nx)),
            time: 0.0,
        }
    }

    /// Conductive profile plus a small seeded temperature perturbation,
    /// the initial condition for checkpoint generation.
    pub fn perturbed(params: &PhysicalParams, amplitude: f64, rng: &mut impl Rng) -> Self {
        let mut state = Self::conductive(params);
        let nz = params.grid_nz;
        for (k, mut row) in state.temperature.rows_mut().into_iter().enumerate() {
            // Leave the rows next to the walls untouched so the boundary
            // layers start consistent with the wall values.
            if k == 0 || k == nz - 1 {
                continue;
            }
            for v in row.iter_mut() {
                *v += amplitude * rng.gen_range(-1.0..1.0);
            }
        }
        state
    }

    pub fn shape(&self) -> (usize, usize) {
        self.temperature.dim()
    }

    pub fn is_finite(&self) -> bool {
        self.temperature.iter().all(|v| v.is_finite())
            && self.u.iter().all(|v| v.is_finite())
            && self.w.iter().all(|v| v.is_finite())
            && self.time.is_finite()
    }

    /// Maximum magnitude over both velocity components.
    pub fn max_velocity(&self) -> f64 {
        let m1 = self.u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        self.w.iter().fold(m1, |m, v| m.max(v.abs()))
    }

    /// Largest absolute discrete divergence over all cells.
    pub fn max_divergence(&self, params: &PhysicalParams) -> f64 {
        let (nz, nx) = self.shape();
        let (dx, dz) = (params.dx(), params.dz());
        let mut worst = 0.0f64;
        for k in 0..nz {
            for i in 0..nx {
                let ip = (i + 1) % nx;
                let w_top = if k + 1 < nz { self.w[[k + 1, i]] } else { 0.0 };
                let div = (self.u[[k, ip]] - self.u[[k, i]]) / dx + (w_top - self.w[[k, i]]) / dz;
                worst = worst.max(div.abs());
            }
        }
        worst
    }

    /// Checks finiteness, shape consistency and the bottom-wall row of `w`.
    pub fn validate(&self, params: &PhysicalParams) -> Result<()> {
        let want = (params.grid_nz, params.grid_nx);
        if self.temperature.dim() != want || self.u.dim() != want || self.w.dim() != want {
            return Err(SimError::InvalidInput(format!(
                "state shape {:?} does not match grid {:?}",
                self.temperature.dim(),
                want
            )));
        }
        if !self.is_finite() {
            return Err(SimError::InvalidInput("state contains non-finite values".into()));
        }
        if self.w.row(0).iter().any(|v| *v != 0.0) {
            return Err(SimError::InvalidInput(
                "bottom-wall row of w must be identically zero".into(),
            ));
        }
        Ok(())
    }

    /// Packs the three fields into a `(3, nz, nx)` single-precision stack.
    pub fn to_stack(&self) -> FieldStack {
        let (nz, nx) = self.shape();
        let mut out = Array3::zeros((3, nz, nx));
        for (c, src) in [&self.temperature, &self.u, &self.w].into_iter().enumerate() {
            out.index_axis_mut(ndarray::Axis(0), c)
                .iter_mut()
                .zip(src.iter())
                .for_each(|(o, v)| *o = *v as f32);
        }
        out
    }

    /// Rebuilds a state from a stack produced by [`FlowState::to_stack`] (or
    /// decoded by a surrogate model). The bottom-wall row of `w` is forced
    /// back to zero.
    pub fn from_stack(stack: &ArrayView3<f32>, time: f64) -> Self {
        let (_, nz, nx) = stack.dim();
        let channel = |c: usize| {
            Array2::from_shape_fn((nz, nx), |(k, i)| stack[[c, k, i]] as f64)
        };
        let mut w = channel(2);
        w.row_mut(0).fill(0.0);
        Self {
            temperature: channel(0),
            u: channel(1),
            w,
            time,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::seeded_rng;

    #[test]
    fn conductive_state_is_divergence_free_and_linear() {
        let p = PhysicalParams::default();
        let s = FlowState::conductive(&p);
        assert_eq!(s.max_divergence(&p), 0.0);
        assert!(s.validate(&p).is_ok());
        // Linear profile: exact second difference vanishes.
        let t = &s.temperature;
        for k in 1..p.grid_nz - 1 {
            let dd = t[[k + 1, 0]] - 2.0 * t[[k, 0]] + t[[k - 1, 0]];
            assert!(dd.abs() < 1e-14);
        }
    }

    #[test]
    fn stack_round_trip_preserves_values() {
        let p = PhysicalParams::default();
        let mut rng = seeded_rng(7, 0);
        let s = FlowState::perturbed(&p, 0.05, &mut rng);
        let stack = s.to_stack();
        let back = FlowState::from_stack(&stack.view(), s.time);
        // f32 storage: exact for values representable in f32 after rounding.
        let worst = s
            .temperature
            .iter()
            .zip(back.temperature.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        assert!(worst < 1e-6);
        assert_eq!(back.w.row(0).iter().filter(|v| **v != 0.0).count(), 0);
    }

    #[test]
    fn perturbation_is_deterministic_per_seed() {
        let p = PhysicalParams::default();
        let a = FlowState::perturbed(&p, 0.05, &mut seeded_rng(3, 1));
        let b = FlowState::perturbed(&p, 0.05, &mut seeded_rng(3, 1));
        assert_eq!(a, b);
    }
}
