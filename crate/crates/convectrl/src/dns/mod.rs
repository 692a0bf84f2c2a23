//! Direct numerical simulation of 2D Rayleigh-Bénard convection.
//!
//! The fluid sits between a heated bottom wall and a cooled top wall,
//! periodic in the horizontal direction. Twelve independently heated
//! segments on the bottom wall act as control inputs. The solver integrates
//! the Boussinesq equations on a staggered (MAC) grid: explicit
//! Adams-Bashforth advection, Crank-Nicolson diffusion and an exact
//! pressure projection, both solved by an FFT in the periodic direction
//! combined with tridiagonal solves in the wall-normal direction.

mod actuation;
mod checkpoint;
mod coarsen;
mod env;
mod fields;
mod nusselt;
mod params;
mod solver;
mod spectral;
pub mod sym;

pub use actuation::{apply_action_transform, Action, BoundaryActuation, N_ACTUATORS};
pub use checkpoint::{generate_checkpoint, Checkpoint, CheckpointStats, Split};
pub use coarsen::{coarsen_observation, flatten_observation, OBS_LEN};
pub use env::DnsEnv;
pub use fields::{FieldStack, FlowState};
pub use nusselt::{compute_nusselt, kinetic_energy};
pub use params::PhysicalParams;
pub use solver::{DnsSolver, StepDiagnostics};

use thiserror::Error;

/// Errors from simulation and validation paths.
#[derive(Debug, Error)]
pub enum SimError {
    /// A field stopped being finite or the CFL monitor tripped.
    #[error("simulation diverged at t = {time:.4}: {reason}")]
    Diverged { time: f64, reason: String },
    /// Parameter combination violates an invariant.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A state or action failed validation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Checkpoint generation did not reach the convective regime.
    #[error("non-convective state at Ra = {rayleigh}: tail-averaged Nu = {nusselt:.3}")]
    NonConvective { rayleigh: f64, nusselt: f64 },
}

pub type Result<T> = std::result::Result<T, SimError>;
