//! Lower and upper bounds on the minima and maxima of knot cobordisms, from
//! branched-cover homology, Alexander modules and metacyclic covers, with
//! staircase sets, certificates and renderings.

pub mod bounds;
pub mod covers;
pub mod error;
pub mod knots;
pub mod linalg;
pub mod metacyclic;
pub mod quadrant;
pub mod render;

pub use error::{Error, Result};
