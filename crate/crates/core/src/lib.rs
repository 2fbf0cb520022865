//! Exact symbolic construction and verification of lightlike hypersurfaces
//! in indefinite S-manifolds.

pub mod chart;
pub mod cli;
pub mod connection;
pub mod error;
pub mod framed;
pub mod hypersurface;
pub mod induced;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use chart::Chart;
pub use error::{Error, Result};
pub use scalar::{parse_expression, RationalExpr};
