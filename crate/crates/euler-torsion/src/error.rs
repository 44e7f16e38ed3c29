use thiserror::Error;

/// Errors raised by the verification engine.
///
/// Every arithmetic and search failure is loud: a cap that is too small or a
/// matrix that falls outside its expected shape aborts the computation
/// instead of producing a silently wrong certificate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("letter index {index} out of range for genus {genus} (expected < {limit})")]
    LetterOutOfRange { index: usize, genus: usize, limit: usize },

    #[error("the trivial word has no inversive")]
    TrivialInversive,

    #[error("word length {len} exceeds the cap {cap} during {stage}")]
    WordLengthCap { len: usize, cap: usize, stage: &'static str },

    #[error("Dehn reduction requested at genus 1; use the abelian word problem instead")]
    DehnAtGenusOne,

    #[error("negative power of an automorphism without a generator expression")]
    NegativePowerWithoutExpr,

    #[error("orbit/connection search exhausted depth {depth} before reaching {target}")]
    SearchExhausted { depth: usize, target: String },

    #[error("bidegree error: {0}")]
    Bidegree(String),

    #[error("abelianized automorphism has determinant {det}, expected 1")]
    DeterminantNotOne { det: i64 },

    #[error("matrix is not in stabilizer block form: {0}")]
    NotKForm(String),

    #[error("holonomy element does not fix the oriented base simplex: {0}")]
    HolonomyBase(String),

    #[error("simplex {0} is not covered by the orbit partition")]
    UncoveredSimplex(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checked addition, surfacing overflow as a hard error.
pub fn add_exact(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Checked multiplication, surfacing overflow as a hard error.
pub fn mul_exact(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}
