//! Modules over the implemented group-scheme families, π-points and Heller shifts.

pub mod group;
pub mod heller;
pub(crate) mod json;
pub mod module;
pub mod pipoint;
pub mod sample;

pub use group::{Family, GroupData, Hopf};
pub use heller::{free_cover, omega, omega_inverse, omega_power, HellerShift};
pub use module::{monomial_exponents, monomial_index, ModuleRep};
pub use pipoint::{parse_polynomial, Flatness, PiPoint};
