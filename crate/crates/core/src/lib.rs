pub mod cellular;
pub mod diagram;
pub mod error;
pub mod forked;
pub mod gramdet;
pub mod halfdiag;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
