use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("slope 0/0 is undefined")]
    ZeroSlope,
    #[error("cannot parse `{0}` as a slope")]
    BadSlope(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("-{p}/{q} has no continued fraction expansion with coefficients <= -2")]
    NotExpandable { p: i64, q: i64 },
    #[error("continued fraction coefficient {0} is not <= -2")]
    BadCoefficient(i64),
    #[error("empty continued fraction")]
    EmptyContinuedFraction,
    #[error("bypass attachment slope must differ from the dividing slope")]
    EqualSlopes,
    #[error("a closed front has an even number of cusps, got {0}")]
    OddCusps(u32),
    #[error("Seifert surfaces have Euler characteristic <= 1, got {0}")]
    BadEulerCharacteristic(i64),
    #[error("dividing curves meet a closed curve in an even number of points, got {0}")]
    OddIntersections(i64),
    #[error("expected a positive integer, got {0}")]
    NotPositive(i64),
    #[error("invalid chord diagram: {0}")]
    BadDiagram(String),
    #[error("invalid annulus diagram: {0}")]
    BadAnnulus(String),
    #[error("a torus dividing set has a positive even number of curves, got {0}")]
    BadCurveCount(u32),
    #[error("bypass attachment needs at least two chords on the disk")]
    DiagramTooSmall,
    #[error("attachment index {index} out of range for {points} boundary points")]
    TripleOutOfRange { index: usize, points: usize },
    #[error("diagram on {got} chords does not match a disk with {expected} chords")]
    SizeMismatch { expected: usize, got: usize },
    #[error("expected {expected} signs for a path with {expected} edges, got {got}")]
    SignCountMismatch { expected: usize, got: usize },
    #[error("unknown export format `{0}`")]
    UnknownFormat(String),
}
