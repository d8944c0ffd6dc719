use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dc_n is only defined for n >= 2.
    #[error("invalid dicyclic index n = {0}; n must be at least 2")]
    InvalidParams(i64),

    #[error("elements belong to different groups (Dc_{left} vs Dc_{right})")]
    MismatchedGroups { left: u32, right: u32 },

    #[error("r = {r} is not a unit modulo {modulus}")]
    NotAUnit { r: i64, modulus: u32 },

    #[error("automorphism order must be at least 1, got {0}")]
    InvalidOrder(i64),

    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("classification failed: {0}")]
    ClassificationFailure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Closed-form and definitional computations disagree.
    #[error("consistency check failed for {set}: closed form {closed_form}, oracle {oracle}")]
    Consistency {
        set: &'static str,
        closed_form: String,
        oracle: String,
    },

    #[error("{0}")]
    InvariantViolation(String),

    #[error("action escapes its carrier: {actor} * {element} = {image}")]
    ClosureViolation {
        actor: String,
        element: String,
        image: String,
    },

    #[error("automorphism list is not closed under composition")]
    NotClosed,

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("cannot parse element {0:?}")]
    Parse(String),
}
