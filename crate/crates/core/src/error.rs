use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("polynomial has no coefficients")]
    EmptyPolynomial,
    #[error("coefficient {index} is not a square {p}x{p} block")]
    NonSquareBlock { index: usize, p: usize },
    #[error("leading coefficient block is zero")]
    LeadingBlockZero,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has odd degree {0}, an even degree is required")]
    OddDegree(usize),
    #[error("degree {degree} has the wrong parity for this kind of Markov parameters")]
    WrongParity { degree: usize },
    #[error("leading block of the even part is singular")]
    SingularLeadingEvenBlock,
    #[error("leading principal block is singular")]
    SingularLeadingBlock,
    #[error("need Markov block s_{needed}, only {available} blocks available")]
    InsufficientBlocks { needed: usize, available: usize },
    #[error("Markov block s_{index} is not Hermitian")]
    NonHermitianSequence { index: isize },
    #[error("continued fraction breaks down at level {level}: leading block is singular")]
    ExpansionBreakdown { level: usize },
    #[error("last continued fraction parameter is singular")]
    SingularTailParameter,
    #[error("continued fraction parameter c_{index} is singular")]
    SingularParameter { index: usize },
    #[error("determinant vanishes identically")]
    DegenerateDeterminant,
    #[error("common multiple identity violated (relative residual {residual:e})")]
    CommonMultipleViolated { residual: f64 },
    #[error("quadruple identity L^v L = L1^v L1 violated (relative residual {residual:e})")]
    QuadrupleIdentityViolated { residual: f64 },
    #[error("polynomial is not regular")]
    NotRegular,
    #[error("degree decision within a factor 10 of the tolerance (ratio {ratio:e})")]
    ToleranceAmbiguity {
        ratio: f64,
        /// Divisors obtained with a hundredfold coarser and finer tolerance.
        candidates: alloc::vec::Vec<crate::MatrixPolynomial>,
    },
    #[error("matrix polynomial is not unimodular")]
    NotUnimodular,
    #[error("eigenvalue iteration did not converge")]
    EigenFailure,
}
