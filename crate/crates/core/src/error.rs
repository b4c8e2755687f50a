use alloc::string::String;

/// Errors reported by the geometric and arithmetic operations.
///
/// All errors are precondition violations; no operation fails spuriously.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The zero vector has no primitive form.
    #[error("no primitive form")]
    ZeroVector,

    /// The given columns generate a sublattice that is not a direct summand
    /// of `Z^n`, so no unimodular extension exists.
    #[error("not a direct summand of Z^n")]
    NotDirectSummand,

    /// The given columns are linearly dependent.
    #[error("columns are linearly dependent")]
    DependentColumns,

    /// Two objects live in different ambient dimensions.
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// The operation requires a nonempty polyhedron.
    #[error("{0} requires a nonempty polyhedron")]
    EmptyPolyhedron(&'static str),

    /// Integer point enumeration requires a bounded polyhedron.
    #[error("enumeration requires boundedness")]
    Unbounded,

    /// The integer bounding box is too large to enumerate at desk scale.
    #[error("enumeration box too large ({0} candidate points)")]
    EnumerationTooLarge(u64),

    /// The polyhedron is not integral.
    #[error("polyhedron is not integral")]
    NotIntegral,

    /// The given point is not in the relative interior of the polyhedron.
    #[error("point is not in the relative interior")]
    NotInRelativeInterior,

    /// The given vectors do not span the orthogonal complement of the
    /// affine hull direction space.
    #[error("basis does not span the orthogonal complement of the affine hull")]
    BadComplementBasis,

    /// The inequality is not valid for the relevant (mixed-)integer hull.
    #[error("inequality is not valid for the mixed-integer hull")]
    InvalidInequality,

    /// A scalar parameter is out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
