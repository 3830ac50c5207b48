//! Coefficient-bound engine for bi-Bazilevic function classes under a
//! convolution multiplier operator.
//!
//! The crate provides:
//!
//! - [`series`]: truncated power-series arithmetic over complex rational or
//!   floating coefficients, including fractional powers, composition and
//!   reversion;
//! - [`operator`]: the diagonal multiplier transform and the Bazilevic
//!   quotient it induces;
//! - [`maminda`]: the subordination target families and their first two
//!   coefficients;
//! - [`bounds`]: the closed-form second- and third-coefficient bounds, plus
//!   an audit of every printed specialization against mechanical
//!   specialization;
//! - [`verify`]: exact reproduction of the proof chain behind the bounds and
//!   an extremal search certifying the bounds as maxima of the relaxed
//!   problem.
//!
//! Exact-rational and floating modes are separate types; conversions are
//! explicit and nothing rounds silently.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod maminda;
pub mod operator;
pub mod report;
pub mod scalar;
pub mod series;
pub mod verify;

pub use bounds::{bound_a2, bound_a3, bound_janowski, bound_order, BoundError, BoundResult};
pub use maminda::{PhiError, PhiSpec};
pub use operator::{c_delta, ClassParams, MultiplierPair, ParamError};
pub use report::{ComplexVal, Finding};
pub use scalar::{Exact, Scalar, C};
pub use series::{NormalizedSeries, SeriesError, TruncSeries};
pub use verify::search::{extremal_search, BoundTarget, ExtremalReport, SearchConfig};
pub use verify::{CaratheodoryTuple, SchwarzPair, TupleError};
