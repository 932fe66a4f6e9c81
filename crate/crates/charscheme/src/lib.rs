//! Exact symbolic toolkit for SL2 character schemes of finitely presented
//! groups.
//!
//! The pipeline: a group presentation ([`presentation`]) determines a trace
//! ring on Fricke coordinates ([`poly`]); arbitrary word traces rewrite into
//! that ring ([`trace`]); each relator contributes finitely many polynomial
//! generators to a character ideal ([`ideal`]); ideals are compared and
//! dissected with an exact Groebner engine ([`groebner`]); numeric
//! representations over the Gaussian rationals cross-check every symbolic
//! step ([`oracle`]); and curated worked examples with frozen expected
//! answers live in [`registry`].
//!
//! All arithmetic is exact. Coefficients are arbitrary-precision rationals,
//! numeric evaluation uses Gaussian rationals, and no floating point is used
//! anywhere.

pub mod gaussian;
pub mod groebner;
pub mod ideal;
pub mod oracle;
pub mod poly;
pub mod presentation;
pub mod registry;
pub mod trace;

pub use gaussian::GaussianRational;
pub use groebner::{Budget, GroebnerBasis, GroebnerError};
pub use ideal::{Ideal, RelatorMode};
pub use oracle::Sl2Matrix;
pub use poly::{MonomialOrder, Polynomial, TraceRing, TraceVar};
pub use presentation::{Presentation, Relator, Word};
pub use registry::{AssertionReport, GoldenCase, RuntimeClass, Status};
pub use trace::TraceReducer;
