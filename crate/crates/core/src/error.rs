use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PvError {
    #[error("scaling by zero")]
    ZeroScale,
    #[error("zero input where a nonzero value is required")]
    ZeroInput,
    #[error("polynomial has non-rational coefficients")]
    NonRationalCoefficients,
    #[error("q = {0} is zero or a root of unity")]
    InvalidQ(String),
    #[error("dimension {0} exceeds the supported maximum of 3")]
    DimensionTooLarge(usize),
    #[error("unsupported system shape: {0}")]
    UnsupportedShape(String),
    #[error("no explicit idempotents: {0}")]
    NoExplicitIdempotents(String),
    #[error("ideal is not sigma-stable: {0}")]
    NotSigmaStable(String),
    #[error("unsupported substitution shape: {0}")]
    UnsupportedSubstitutionShape(String),
    #[error("matrix is not fundamental: {0}")]
    NotFundamental(String),
    #[error("connection matrix entry ({row}, {col}) is not constant: {value}")]
    NotConstant { row: usize, col: usize, value: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("step budget of {0} exhausted")]
    BudgetExhausted(usize),
}

impl PvError {
    /// Stable short code, used by the command-line reports.
    pub fn code(&self) -> &'static str {
        match self {
            PvError::ZeroScale => "zero_scale",
            PvError::ZeroInput => "zero_input",
            PvError::NonRationalCoefficients => "non_rational_coefficients",
            PvError::InvalidQ(_) => "invalid_q",
            PvError::DimensionTooLarge(_) => "dimension_too_large",
            PvError::UnsupportedShape(_) => "unsupported_shape",
            PvError::NoExplicitIdempotents(_) => "no_explicit_idempotents",
            PvError::NotSigmaStable(_) => "not_sigma_stable",
            PvError::UnsupportedSubstitutionShape(_) => "unsupported_substitution_shape",
            PvError::NotFundamental(_) => "not_fundamental",
            PvError::NotConstant { .. } => "not_constant",
            PvError::ShapeMismatch(_) => "shape_mismatch",
            PvError::BudgetExhausted(_) => "budget_exhausted",
        }
    }
}

pub type Result<T> = std::result::Result<T, PvError>;
