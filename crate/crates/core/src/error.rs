use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("gcd of zeros")]
    GcdOfZeros,
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("pole at evaluation point")]
    PoleAtEvaluationPoint,
    #[error("variable tables differ")]
    VarTableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable table: {0}")]
    InvalidVarTable(String),
    #[error("exponent vector has {got} entries, variable table has {expected}")]
    IndexArity { expected: usize, got: usize },
    #[error("non-unit series")]
    NonUnitSeries,
    #[error("index of total degree {total} is beyond truncation order {order}")]
    BeyondTruncation { total: u32, order: u32 },
    #[error("truncation exhausted: no coefficient of the derivative is known")]
    TruncationExhausted,
    #[error("negative Pochhammer length {0}")]
    NegativePochhammerLength(i64),
    #[error("non-truncating infinite product")]
    NonTruncatingProduct,
    #[error("undefined series (zero denominator at k={k}: {detail})")]
    UndefinedSeries { k: usize, detail: String },
    #[error("series does not terminate and its argument has analytic degree 0")]
    NonTerminatingSeries,
    #[error("sum does not truncate")]
    SumDoesNotTruncate,
    #[error("operator parameter must not contain the differentiation variable `{0}`")]
    OperatorParameterDependsOnVariable(String),
    #[error("negative q-binomial upper index {0}")]
    NegativeBinomialIndex(i64),
}
