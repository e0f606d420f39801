//! Comparison optimizers under the shared run machinery.

mod bto;
mod cdo;
mod gsa;
mod gwo;
mod leaders;
mod pso;
mod sso;

pub use bto::{bto_acc, bto_position, bto_zone, force_probability, gravitational_force, Bto, BtoParams, GRAVITATIONAL_CONSTANT, ZONE_MAX_AREA, ZONE_MIN_AREA};
pub use cdo::{cdo_component, cdo_walk_speed, Cdo, CdoDraws, ALPHA_SPEED_MAX, BETA_SPEED_MAX, GAMMA_SPEED_MAX};
pub use gsa::{gsa_gravity, gsa_kbest, gsa_masses, Gsa, GsaParams};
pub use gwo::{gwo_coefficient, gwo_component, Gwo};
pub use leaders::Leaders;
pub use pso::{pso_velocity, Pso, PsoParams};
pub use sso::{sso_velocity, Sso, SsoDraws, PH_RANGE, TEMPERATURE_RANGE};
