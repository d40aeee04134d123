//! Linear completely regular codes with covering radius 2 whose duals are antipodal
//! two-weight codes: finite-field substrate, code transforms, complete-regularity
//! testing, difference matrices, the known families, existence conditions and
//! desk-scale exhaustive searches.

pub mod budget;
pub mod code;
pub mod conditions;
pub mod diffmat;
pub mod error;
pub mod families;
pub mod field;
pub mod formats;
pub mod macwilliams;
pub mod matrix;
pub mod projective;
pub mod regularity;
pub mod report;
pub mod search;
pub mod vecspace;

pub use code::{CodewordMatrix, LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use field::{Elem, FieldSpec};
pub use matrix::MatGF;
