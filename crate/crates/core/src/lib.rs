pub mod cli;
pub mod error;
pub mod exactnum;
pub mod io;
pub mod oracle;
pub mod parametric;
pub mod queries;
pub mod realnonreal;
pub mod signdet;
pub mod znz;

pub use error::{Error, Result};
