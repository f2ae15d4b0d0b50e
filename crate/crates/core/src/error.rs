use thiserror::Error;

/// Errors shared across the exact-arithmetic and operator-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    /// Two elements built over different variable contexts were combined.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// An operation that needs a nonzero element received zero.
    #[error("zero element where a nonzero one is required")]
    ZeroElement,

    /// Division asked for a generator whose leading coefficient still
    /// contains symbolic parameters, so it cannot be inverted.
    #[error("leading coefficient is not an invertible constant: {0}")]
    ParameterLeadingCoefficient(String),

    /// A term order for the plain Weyl algebra must have a nonnegative
    /// u+v weight sum in its first row; row index reported.
    #[error("weight row {0} has a negative u+v entry, not admissible for the Weyl algebra")]
    NegativeWeightSum(usize),

    /// The homogenized-algebra basis routine needs homogeneous inputs.
    #[error("input operator is not homogeneous of a single total degree")]
    NonHomogeneousInput,

    /// A term order was used in a setting that makes it ill-founded.
    #[error("inadmissible order: {0}")]
    InadmissibleOrder(String),

    /// An ideal expected to be generated by squarefree monomials was not.
    #[error("monomial is not squarefree: {0}")]
    NonSquarefree(String),

    /// A variable or operator index falls outside the ambient dimension.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A coordinate or variable change has singular (det = 0) matrix.
    #[error("change of variables matrix is singular")]
    SingularChange,

    /// The lattice-basis binomials must be homogeneous for the
    /// cheap-variable saturation trick to be valid.
    #[error("lattice vector does not sum to zero; toric saturation shortcut is invalid")]
    NonHomogeneousLattice,

    /// Specialization requested a parameter value that was not supplied.
    #[error("missing parameter value: {0}")]
    MissingParameter(String),

    /// Generic parse failure with byte offset into the input.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

pub type AlgResult<T> = Result<T, AlgError>;
