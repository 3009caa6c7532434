//! Simplicity of augmentation modules of finite transformation monoids.

pub mod actmod;
pub mod augcheck;
pub mod error;
pub mod exactlin;
pub mod tmon;
pub mod zoo;

pub use error::{Error, Result};
