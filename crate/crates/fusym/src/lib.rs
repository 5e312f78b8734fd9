//! Exact-arithmetic construction of generalized Young symmetrizers on mixed
//! tensor spaces via the fusion procedure, together with the Yangian module
//! actions they intertwine.
//!
//! Every computation in this crate is exact: scalars are arbitrary-precision
//! rationals or univariate rational functions over the rationals, and every
//! identity is checked at zero tolerance.  The crate is organised as a stack:
//!
//! * [`exact_algebra`] — rationals, rational functions, dense exact linear
//!   algebra over a generic field, symmetric-group algebra;
//! * [`combinatorics`] — partitions, skew shapes, standard tableaux, content
//!   vectors, and dimension oracles;
//! * [`fusion`] — the fusion procedure producing the diagonal matrix elements
//!   `f_Lambda` of irreducible symmetric-group representations, and their skew
//!   analogues `f_Omega`;
//! * [`mixed_tensor`] — tensor spaces with dual and ordinary factors, the
//!   permutation/contraction operators acting on them, generalized Young
//!   symmetrizers, and R-matrix identity checks;
//! * [`yangian`] — evaluation-type Yangian actions on mixed tensor spaces,
//!   centralizer-construction actions on Hom spaces, and the certificates
//!   establishing their equivalence;
//! * [`cli`] — the `fusym` command line interface emitting deterministic JSON
//!   reports.

pub mod cli;
pub mod combinatorics;
pub mod exact_algebra;
pub mod fusion;
pub mod mixed_tensor;
pub mod yangian;

use std::fmt;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition or skew shape failed validation.
    ShapeInvalid(String),
    /// A configured size bound (tableau cells, group order, tensor dimension)
    /// would be exceeded.
    BoundExceeded(String),
    /// Two operands have incompatible sizes.
    SizeMismatch { left: usize, right: usize },
    /// An index was outside its valid range.
    IndexOutOfRange(String),
    /// A pair operator was requested on tensor factors whose kinds (dual or
    /// ordinary) do not fit the operator: permutation operators need two
    /// factors of the same kind, contraction operators one of each.
    MixedFactorKinds { first: usize, second: usize },
    /// Division by zero in a field.
    DivisionByZero,
    /// A rational function was evaluated at a pole.
    PoleAt(String),
    /// A rational function has no finite value at the requested limit point.
    NotRegular,
    /// A matrix required to be invertible was singular.
    Singular,
    /// A denominator in an operator product vanished, so the product is
    /// undefined for the given data.
    DenominatorZero(String),
    /// The requested Hom space is zero because the admissibility conditions
    /// on the four partitions fail.
    EmptyHom(String),
    /// Two modules that were to be compared have different dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// No intertwiner exists where the equivalence certificate required one.
    NoIntertwiner(String),
    /// Malformed user input (CLI arguments, fillings, and so on).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeInvalid(msg) => write!(f, "invalid shape: {msg}"),
            Error::BoundExceeded(msg) => write!(f, "bound exceeded: {msg}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange(msg) => write!(f, "index out of range: {msg}"),
            Error::MixedFactorKinds { first, second } => write!(
                f,
                "factors {first} and {second} have incompatible kinds (dual vs ordinary) \
                 for the requested operator"
            ),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::PoleAt(at) => write!(f, "evaluation at a pole: {at}"),
            Error::NotRegular => write!(f, "no finite limit at the requested point"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::DenominatorZero(msg) => write!(f, "denominator vanishes: {msg}"),
            Error::EmptyHom(msg) => write!(f, "Hom space is empty: {msg}"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NoIntertwiner(msg) => write!(f, "no intertwiner: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// Process exit code associated with this error: `2` for malformed
    /// input, `3` for exceeded bounds, `1` for everything else (failed
    /// verification or internal arithmetic failure).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ShapeInvalid(_)
            | Error::SizeMismatch { .. }
            | Error::IndexOutOfRange(_)
            | Error::MixedFactorKinds { .. }
            | Error::InvalidInput(_)
            | Error::EmptyHom(_) => 2,
            Error::BoundExceeded(_) => 3,
            _ => 1,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a family of identity checks, listing how many instances ran
/// and which of them (by label) failed.  Shared by the acceptance tests and
/// the CLI suite runner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    name: String,
    instances: usize,
    failures: Vec<String>,
}

impl CheckReport {
    /// Start an empty report for the named check family.
    pub fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            instances: 0,
            failures: Vec::new(),
        }
    }

    /// Record one instance; a failing instance is remembered by its label.
    pub fn record(&mut self, label: &str, ok: bool) {
        self.instances += 1;
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    /// Merge another report into this one, keeping this report's name.
    pub fn absorb(&mut self, other: CheckReport) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }

    /// Name of the check family.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of instances checked.
    pub fn instances(&self) -> usize {
        self.instances
    }

    /// Labels of the failing instances.
    pub fn failures(&self) -> &[String] {
        &self.failures
    }

    /// Whether every instance passed.
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}
