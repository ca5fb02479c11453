use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weights live in different algebras: gl({0}|{1}) vs gl({2}|{3})")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("weight {0} is not dominant integral for the even part")]
    NotDominant(String),

    #[error("search space too large: {0}")]
    TooLarge(String),

    #[error("construction needs dimension {needed}, budget is {budget}")]
    ConstructionOverflow { needed: usize, budget: usize },

    #[error("image vector {0} is not contained in the kernel span")]
    ImageNotContained(usize),

    #[error("vector is not in the span of the given basis")]
    NotInSpan,

    #[error("contravariant form check failed: {0}")]
    FormInconsistent(String),

    #[error("the origin is not a valid test point")]
    ZeroPoint,

    #[error("differential does not square to zero in degree {0}")]
    SignConventionBroken(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("subalgebra assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("support dimension {support} exceeds ambient dimension {ambient}")]
    BadCodimension { support: usize, ambient: usize },

    #[error("modules are defined over different algebras")]
    AlgebraMismatch,

    #[error("structure constants fail the {0}")]
    BadStructureConstants(String),

    #[error("not a representation: {0}")]
    NotARepresentation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
