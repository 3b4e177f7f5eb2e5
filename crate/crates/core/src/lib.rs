pub mod bridge;
pub mod cli;
pub mod corpus;
pub mod cover;
pub mod dependence;
pub mod deviant;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod granular;
pub mod io;
pub mod prob;
pub mod relation;
pub mod report;
pub mod squeezed;
pub mod sweep;
pub mod table;
pub mod tarski;
pub mod universe;

pub use error::{Error, Result};
pub use universe::{Subset, Universe};
