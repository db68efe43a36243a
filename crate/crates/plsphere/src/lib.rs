//! Combinatorial toolkit for piecewise-linear spheres.
//!
//! The crate represents pure simplicial complexes by their facet lists and
//! implements the operations used to manufacture new spheres from old ones:
//! links, stars, joins, stellar subdivisions, wedges, suspensions, and the
//! multiplicity-tuple wedge iteration `K(J)`. On top of those it provides
//! seed/suspension classification, characteristic-matrix certificates over
//! GF(2) and the integers, desk-scale sphere evidence (pseudomanifold,
//! Euler characteristic, rational Betti numbers), and a generator for the
//! seed families of maximal Picard-number defect.
//!
//! Everything is exact: all linear algebra is integer or GF(2) arithmetic,
//! and every operation is a pure function of immutable inputs, so results
//! are deterministic and safe to share across threads. The crate is
//! `no_std` (it only needs `alloc`); file formats and the command-line
//! front end live in the companion `plsphere-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod charmap;
pub mod classify;
pub mod complex;
pub mod evidence;
pub mod family;
pub mod iso;
mod linalg;
pub mod ops;

pub use complex::{Face, FVector, SimplicialComplex, VertexLabel};

use alloc::string::String;

/// Errors shared by every module of the crate.
///
/// Variant names follow the failure they report; operations only ever
/// return the variants named in their documentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The raw facet list was empty.
    EmptyInput,
    /// Facets of different cardinalities were supplied.
    NotPure { smaller: String, larger: String },
    /// One supplied facet strictly contains another.
    NonMaximalFacet { inner: String, outer: String },
    /// A vertex label is empty, contains whitespace or a comma, or repeats.
    InvalidLabel(String),
    /// A facet repeats one of its vertices.
    InvalidFacet(String),
    /// A label-table entry occurs in no facet.
    GhostVertex(String),
    /// A label was expected to be fresh but already names a vertex.
    LabelCollision(String),
    /// The given vertex set is not a face of the complex.
    NotAFace(String),
    /// The given label names no vertex of the complex.
    NotAVertex(String),
    /// A multiplicity tuple does not match the complex's vertex count.
    LengthMismatch { expected: usize, got: usize },
    /// A selection tuple entry is out of range for its multiplicity.
    BoundsViolation { vertex: String, selected: u32, multiplicity: u32 },
    /// The pair does not meet every facet.
    NotCoveringPair(String),
    /// Reconstruction from a classification witness did not reproduce the input.
    WitnessVerificationFailed(String),
    /// Matrix shape does not match the complex.
    ShapeMismatch { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    /// A certificate that was required to verify does not.
    InvalidInputCertificate(String),
    /// Face enumeration passed the configured budget.
    BudgetExceeded { budget: u64, reached: u64 },
    /// Exact integer arithmetic left the fixed-width range.
    ArithmeticOverflow(String),
    /// Parameters outside the supported range (named in the message).
    InvalidParameters(String),
    /// Fewer vertices than the construction needs.
    TooSmall { minimum: usize, got: usize },
    /// A seed construction was invoked on a non-seed base.
    NotASeed(String),
    /// A construction hypothesis (e.g. a non-suspended base) is violated.
    HypothesisViolated(String),
    /// Requested Picard number outside the generated range.
    UnsupportedP(u32),
    /// A recomputed flag contradicts what the construction guarantees.
    ConstructionContradicted(String),
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "facet list is empty"),
            Error::NotPure { smaller, larger } => {
                write!(f, "complex is not pure: facet {smaller} is smaller than facet {larger}")
            }
            Error::NonMaximalFacet { inner, outer } => {
                write!(f, "facet {inner} is contained in facet {outer}")
            }
            Error::InvalidLabel(l) => write!(f, "invalid vertex label {l:?}"),
            Error::InvalidFacet(s) => write!(f, "invalid facet {s}"),
            Error::GhostVertex(l) => write!(f, "vertex {l} occurs in no facet"),
            Error::LabelCollision(l) => write!(f, "label {l} already names a vertex"),
            Error::NotAFace(s) => write!(f, "{s} is not a face of the complex"),
            Error::NotAVertex(l) => write!(f, "{l} is not a vertex of the complex"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "tuple length {got} does not match vertex count {expected}")
            }
            Error::BoundsViolation { vertex, selected, multiplicity } => write!(
                f,
                "selection {selected} for vertex {vertex} exceeds multiplicity {multiplicity}"
            ),
            Error::NotCoveringPair(s) => write!(f, "{s} does not meet every facet"),
            Error::WitnessVerificationFailed(s) => {
                write!(f, "witness reconstruction failed: {s}")
            }
            Error::ShapeMismatch { rows, cols, expected_rows, expected_cols } => write!(
                f,
                "matrix is {rows}x{cols}, complex needs {expected_rows}x{expected_cols}"
            ),
            Error::InvalidInputCertificate(s) => {
                write!(f, "input certificate does not verify: {s}")
            }
            Error::BudgetExceeded { budget, reached } => {
                write!(f, "face budget {budget} exceeded (reached {reached})")
            }
            Error::ArithmeticOverflow(s) => write!(f, "exact arithmetic overflow in {s}"),
            Error::InvalidParameters(s) => write!(f, "invalid parameters: {s}"),
            Error::TooSmall { minimum, got } => {
                write!(f, "needs at least {minimum} vertices, got {got}")
            }
            Error::NotASeed(s) => write!(f, "base complex is not a seed: wedged edge {s}"),
            Error::HypothesisViolated(s) => write!(f, "hypothesis violated: {s}"),
            Error::UnsupportedP(p) => write!(f, "Picard number {p} outside supported range 3..=5"),
            Error::ConstructionContradicted(s) => {
                write!(f, "construction produced a contradiction: {s}")
            }
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
