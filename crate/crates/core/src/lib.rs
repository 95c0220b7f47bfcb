//! Combinatorial contact topology on solid tori and lens spaces.
//!
//! Everything is exact: slopes are reduced integer fractions on the circle
//! of slopes, dividing sets are chord diagrams, and tight contact
//! structures are counted two independent ways — by the closed-form
//! continued fraction products ([`classify`]) and by traversing the bypass
//! transition graph of cutting-disk configurations ([`traversal`]).
//!
//! The graph traversal is data-parallel over configurations; the
//! `parallel` feature (on by default) backs it with a work-stealing
//! thread pool, and disabling it falls back to the identical sequential
//! scan.

pub mod classify;
pub mod dividing;
pub mod error;
pub mod farey;
pub mod legendrian;
pub mod traversal;

pub use classify::{BlockDecomposition, HalfEulerClass, TightDecoration};
pub use dividing::{AnnulusDiagram, DiskDiagram, Side, TorusDividingSet};
pub use error::{Error, Result};
pub use farey::{ContinuedFraction, Slope};
pub use legendrian::{FrontCounts, UnknotForm};
pub use traversal::{ExportFormat, SolidTorusProblem, SphereAssembly, StateGraph};

/// Sign of a stabilization or of a basic slice in a decorated layering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}
