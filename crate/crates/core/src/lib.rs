//! Exact construction and verification of homogeneous 3-Sasakian data for
//! the simple complex Lie algebras.

pub mod chevalley;
pub mod cli;
pub mod datum;
pub mod dynkin;
pub mod error;
pub mod linalg;
pub mod pipeline;
pub mod report;
pub mod rootcore;
pub mod tensors;

pub use error::{Error, Result};
