//! Closed-loop control of two-dimensional Rayleigh-Bénard convection.
//!
//! The crate bundles everything needed to train and evaluate reinforcement
//! learning agents that suppress convective heat transport by modulating the
//! temperature of twelve heating segments on the bottom wall:
//!
//! * [`dns`] — a finite-difference Boussinesq solver on a staggered grid with
//!   actuated bottom-boundary temperature, Nusselt-number diagnostics and
//!   checkpoint management,
//! * [`surrogate`] — a convolutional autoencoder whose latent state advances
//!   through affine dynamics with control inputs, trained on recorded episodes,
//! * [`rl`] — a PPO implementation with generalized advantage estimation that
//!   runs against any [`env::ControlEnv`],
//! * [`pipeline`] — dataset generation and the static / policy-aware /
//!   pretrain-then-finetune training regimes,
//! * [`io`] — format-versioned artifact files (checkpoints, datasets, models,
//!   policies, metrics logs).
//!
//! The `convectrl` binary in this workspace wires these pieces into a command
//! line. See the book under `book/` for a guided tour.

pub mod config;
pub mod dns;
pub mod env;
pub mod io;
pub mod nn;
pub mod pipeline;
pub mod rl;
pub mod surrogate;
pub mod util;

// Compile the code blocks in the book chapters as doc-tests so the guide
// cannot drift from the API.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(simulation, "../../../book/src/simulation.md");
    chapter!(actuation, "../../../book/src/actuation.md");
    chapter!(surrogate, "../../../book/src/surrogate.md");
    chapter!(agent, "../../../book/src/agent.md");
    chapter!(regimes, "../../../book/src/regimes.md");
}
