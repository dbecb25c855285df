//! Motivic and cohomological bookkeeping for Pfaffian–Grassmannian pairs.

pub mod cache;
pub mod chern;
pub mod dsl;
pub mod error;
pub mod grid;
pub mod json_int;
pub mod memo;
pub mod pairs;
pub mod render;
pub mod ring;
pub mod schubert;
pub mod series;

pub use error::{Diagnostic, Error, Result};
pub use ring::{LPoly, Poly, TPoly};
