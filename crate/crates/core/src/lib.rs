//! Exact Urysohn functions and Tietze extensions on the unit interval, built
//! by composing the Cantor function with a nested family of open sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`cantor`]: ternary digits, the endpoint sets `𝓛ₙ`, the Cantor function Φ.
//! * [`region`]: exact open/closed subsets of [0,1] and the insertion witnesses.
//! * [`urysohn`]: the nested family `{U_p}`, `F = Φ∘g` and its verification.
//! * [`tietze`]: piecewise-linear functions on closed sets and their extensions.
//! * [`io`], [`plot`], [`cli`]: file formats, SVG output and the command line.

pub mod cantor;
pub mod cli;
pub mod error;
pub mod io;
pub mod plot;
pub mod rational;
pub mod region;
pub mod report;
pub mod tietze;
pub mod urysohn;

pub use error::{Error, Result};
pub use rational::{Dyadic, Rational};
