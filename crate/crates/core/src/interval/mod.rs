//! Exact regular open algebra of the real line, restricted to eventually
//! periodic sets with rational breakpoints.

mod expr;
pub mod rational;
mod raw;
mod region;

pub use expr::{evaluate, parse_region, Value};
pub use rational::{Bound, Q};
pub use raw::IntervalSet;
pub use region::Region;
