use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised anywhere in the pipeline.
///
/// [`Error::is_domain_error`] splits them into input problems (bad syntax,
/// bad parameters) and mathematical-domain failures (non-regular input,
/// degenerate complexes); the command-line front end maps these onto exit
/// codes 1 and 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("deficiency mismatch: {generators} generators need {expected} relators, found {relators}", expected = .generators.saturating_sub(1))]
    DeficiencyMismatch { generators: usize, relators: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("quaternion is central (±1); axis/angle decomposition is not unique")]
    CentralElement,

    #[error("presentation lacks peripheral data (meridian, longitude and identity sequence)")]
    MissingPeripheralData,

    #[error("presentation is not knot-like: {0}")]
    NotKnotLike(String),

    #[error("assignment is not a representation: relator residual {residual:.3e} exceeds {tolerance:.1e}")]
    NotARepresentation { residual: f64, tolerance: f64 },

    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),

    #[error("invalid homology basis: {0}")]
    InvalidBasis(String),

    #[error("degenerate complex: {0}")]
    DegenerateComplex(String),

    #[error("representation is not regular (dims H^* = {dims:?}, irreducible = {irreducible})")]
    NotRegular { dims: [usize; 3], irreducible: bool },

    #[error("representation is not regular with respect to the chosen curve")]
    NotMuRegular,

    #[error("the curve is sent to a central element (±1)")]
    CentralMeridian,

    #[error("peripheral pairing vanishes on H^2 (restriction to the boundary torus looks non-injective)")]
    DegeneratePairing,

    #[error("abelian representation at theta = {theta} is not regular: |Delta(e^(2i theta))| = {modulus:.3e}")]
    NonRegularTheta { theta: f64, modulus: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of the mathematical hypotheses (as opposed to malformed input).
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::CentralElement
                | Error::NotKnotLike(_)
                | Error::NotARepresentation { .. }
                | Error::DegenerateComplex(_)
                | Error::NotRegular { .. }
                | Error::NotMuRegular
                | Error::CentralMeridian
                | Error::DegeneratePairing
                | Error::NonRegularTheta { .. }
                | Error::MissingPeripheralData
                | Error::InvalidBasis(_)
        )
    }
}
