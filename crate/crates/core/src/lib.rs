pub mod algebra;
pub mod binomials;
pub mod cli;
pub mod closedforms;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod report;
pub mod stemleaf;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
