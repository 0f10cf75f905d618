use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u32),
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("operands live over different fields (F_{0} vs F_{1})")]
    FieldMismatch(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty polynomial")]
    Empty,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed exponent at byte {0}")]
    MalformedExponent(usize),
    #[error("malformed coefficient at byte {0}")]
    MalformedCoefficient(usize),
    #[error("unexpected character `{ch}` at byte {pos}")]
    Unexpected { ch: char, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("no relations given")]
    NoRelations,
    #[error("relation {0} has a nonzero constant term; the quotient would not be local at the origin")]
    ConstantTerm(usize),
    #[error("not zero-dimensional: no pure power of `{0}` among the leading terms")]
    NotZeroDimensional(String),
    #[error("S-pair iteration cap {0} exceeded")]
    IterationCap(usize),
    #[error("quotient dimension exceeds the cap {cap}")]
    DimensionCap { cap: usize },
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structure constants malformed: {0}")]
    Malformed(String),
    #[error("basis element 0 is not a two-sided unit")]
    BadUnit,
    #[error("product is not commutative on e{0}*e{1}")]
    NonCommutative(usize, usize),
    #[error("product is not associative on (e{0}*e{1})*e{2}")]
    NonAssociative(usize, usize, usize),
    #[error("algebra is not local: basis element e{0} is not nilpotent")]
    NonLocal(usize),
    #[error("algebra is not local: e{0}*e{1} has a nonzero unit component")]
    NotAnIdeal(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("module axiom fails: {0}")]
    Axiom(String),
    #[error("map is not R-linear (fails to commute with e{0})")]
    NotLinear(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("d^2 != 0 at degree {0}")]
    NotAComplex(i32),
    #[error("chain map fails to commute with differentials at degree {0}")]
    NotAChainMap(i32),
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("degree {degree} lies outside the window [{lo}, {hi}]")]
    OutOfWindow { degree: i32, lo: i32, hi: i32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("resource budget exceeded: {needed} > {budget} total dimensions")]
    Budget { needed: usize, budget: usize },
    #[error("depth must be at least 1")]
    BadDepth,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectorError {
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("depth must be at least 2, got {0}")]
    BadDepth(usize),
}

impl From<LinalgError> for ResolveError {
    fn from(e: LinalgError) -> Self {
        ResolveError::Complex(ComplexError::Linalg(e))
    }
}

impl From<ModuleError> for ResolveError {
    fn from(e: ModuleError) -> Self {
        ResolveError::Complex(ComplexError::Module(e))
    }
}

impl From<LinalgError> for DetectorError {
    fn from(e: LinalgError) -> Self {
        DetectorError::Complex(ComplexError::Linalg(e))
    }
}
