pub mod error;
pub mod ff;
pub mod gallery;
pub mod homological;
pub mod jordan;
pub mod modrep;
pub mod strata;

pub use error::{Error, Result};
pub use ff::{Elem, Field, MPoly, Matrix, PolyMatrix, UPoly};
pub use homological::{CohomClass, Extension};
pub use jordan::{Dominance, JordanType};
pub use modrep::{Family, GroupData, Hopf, ModuleRep, PiPoint};
pub use strata::{Options, PiFamily, StratumReport};
