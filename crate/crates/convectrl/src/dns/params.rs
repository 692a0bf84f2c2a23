use serde::{Deserialize, Serialize};

use super::{Result, SimError, N_ACTUATORS};

/// Physical and numerical parameters of the convection problem.
///
/// Everything is nondimensionalized in free-fall units: the layer height is
/// the length scale, the wall temperature difference the temperature scale,
/// and the free-fall velocity the velocity scale. The thermal diffusivity is
/// then `1/sqrt(Ra*Pr)` and the kinematic viscosity `sqrt(Pr/Ra)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhysicalParams {
    /// Rayleigh number.
    pub rayleigh: f64,
    /// Prandtl number.
    pub prandtl: f64,
    /// Domain width in units of the layer height.
    pub domain_width: f64,
    /// Layer height (the length scale; kept explicit for the diagnostics).
    pub domain_height: f64,
    /// Grid cells in the periodic (horizontal) direction.
    pub grid_nx: usize,
    /// Grid cells in the wall-normal (vertical) direction.
    pub grid_nz: usize,
    /// Mean temperature of the heated bottom wall.
    pub t_bottom_mean: f64,
    /// Temperature of the cooled top wall.
    pub t_top: f64,
    /// Solver substep.
    pub dt_solver: f64,
    /// Time between successive control inputs.
    pub control_interval: f64,
    /// Largest advective CFL number tolerated before the step is declared
    /// diverged. The solver never adapts the step silently.
    pub cfl_limit: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self {
            rayleigh: 1e4,
            prandtl: 0.7,
            domain_width: 4.0,
            domain_height: 1.0,
            grid_nx: 96,
            grid_nz: 64,
            t_bottom_mean: 2.0,
            t_top: 1.0,
            dt_solver: 0.0125,
            control_interval: 1.5,
            cfl_limit: 0.9,
        }
    }
}

impl PhysicalParams {
    /// Thermal diffusivity in free-fall units.
    pub fn kappa(&self) -> f64 {
        1.0 / (self.rayleigh * self.prandtl).sqrt()
    }

    /// Kinematic viscosity in free-fall units.
    pub fn viscosity(&self) -> f64 {
        (self.prandtl / self.rayleigh).sqrt()
    }

    /// Horizontal grid spacing.
    pub fn dx(&self) -> f64 {
        self.domain_width / self.grid_nx as f64
    }

    /// Vertical grid spacing.
    pub fn dz(&self) -> f64 {
        self.domain_height / self.grid_nz as f64
    }

    /// Grid columns covered by one actuator segment.
    pub fn segment_width(&self) -> usize {
        self.grid_nx / N_ACTUATORS
    }

    /// Solver substeps per control interval.
    pub fn substeps_per_action(&self) -> usize {
        (self.control_interval / self.dt_solver).round() as usize
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(SimError::InvalidParams(msg));
        if !(self.rayleigh > 0.0 && self.prandtl > 0.0) {
            return fail(format!(
                "Ra and Pr must be positive (got {}, {})",
                self.rayleigh, self.prandtl
            ));
        }
        if !(self.dt_solver > 0.0) {
            return fail(format!("dt_solver must be positive (got {})", self.dt_solver));
        }
        if self.grid_nx % N_ACTUATORS != 0 {
            return fail(format!(
                "grid_nx = {} must be divisible into {} actuator segments",
                self.grid_nx, N_ACTUATORS
            ));
        }
        if self.grid_nx % 2 != 0 || self.grid_nz % 8 != 0 {
            return fail(format!(
                "grid {}x{} incompatible with the 2x horizontal / 8x vertical observation pooling",
                self.grid_nx, self.grid_nz
            ));
        }
        let ratio = self.control_interval / self.dt_solver;
        if (ratio - ratio.round()).abs() > 1e-9 * ratio.max(1.0) || ratio.round() < 1.0 {
            return fail(format!(
                "control_interval = {} is not an integer multiple of dt_solver = {}",
                self.control_interval, self.dt_solver
            ));
        }
        if ((self.t_bottom_mean - self.t_top) - 1.0).abs() > 1e-12 {
            return fail(format!(
                "temperature scale requires t_bottom_mean - t_top = 1 (got {})",
                self.t_bottom_mean - self.t_top
            ));
        }
        if !(self.domain_width > 0.0 && self.domain_height > 0.0) {
            return fail("domain dimensions must be positive".into());
        }
        if !(self.cfl_limit > 0.0) {
            return fail("cfl_limit must be positive".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        let p = PhysicalParams::default();
        p.validate().unwrap();
        assert_eq!(p.segment_width(), 8);
        assert_eq!(p.substeps_per_action(), 120);
    }

    #[test]
    fn diffusivities_follow_free_fall_units() {
        let p = PhysicalParams::default();
        let expected_kappa = 1.0 / (1e4f64 * 0.7).sqrt();
        assert!((p.kappa() - expected_kappa).abs() < 1e-15);
        assert!((p.kappa() * p.viscosity() - 1.0 / p.rayleigh).abs() < 1e-18);
        assert!((p.viscosity() / p.kappa() - p.prandtl).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_grids_and_intervals() {
        let mut p = PhysicalParams {
            grid_nx: 50,
            ..Default::default()
        };
        assert!(p.validate().is_err());
        p.grid_nx = 96;
        p.control_interval = 1.0;
        p.dt_solver = 0.3;
        assert!(p.validate().is_err());
        p.dt_solver = 0.25;
        assert!(p.validate().is_ok());
        p.t_top = 0.5;
        assert!(p.validate().is_err());
    }
}
