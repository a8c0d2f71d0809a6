//! Finitely presented graded rings in even degrees, truncated above a top
//! degree, with normal-form multiplication and an optional fundamental class.

mod element;
mod graded;
mod linalg;
mod monomial;
mod morphism;
mod presentation;
mod projective;

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

pub use element::RingElement;
pub use graded::{make_ring, Ring, RingHandle};
pub use monomial::{FreePoly, Generator, Monomial};
pub use morphism::RingMorphism;
pub use presentation::{Relation, RingPresentation};
pub use projective::{projectivize, ProjectiveBundle, ProjectivizeOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn from_sign(s: i64) -> Option<Self> {
        match s {
            1 => Some(Orientation::Positive),
            -1 => Some(Orientation::Negative),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl Mul for Orientation {
    type Output = Orientation;
    fn mul(self, rhs: Orientation) -> Orientation {
        if self == rhs {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+1",
            Orientation::Negative => "-1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("generator {symbol} has degree {degree}; only positive even degrees are supported")]
    OddGeneratorDegree { symbol: String, degree: u32 },
    #[error("top degree {0} is odd")]
    OddTopDegree(u32),
    #[error("monomial has the wrong number of exponents")]
    MalformedMonomial,
    #[error("relation with constant left-hand side")]
    TrivialRelation,
    #[error("relation {lhs} is not homogeneous")]
    InhomogeneousRelation { lhs: String },
    #[error("rewriting does not terminate on {monomial}")]
    NonTerminating { monomial: String },
    #[error("relations are not confluent at {monomial}")]
    NonConfluent { monomial: String },
    #[error("top degree has no basis monomials")]
    EmptyTopDegree,
    #[error("{0} is not a top-degree basis monomial")]
    NotATopBasisMonomial(String),
    #[error("no fundamental value for {0}")]
    MissingFundamental(String),
    #[error("lattice generator in invalid degree {degree}")]
    LatticeDegree { degree: u32 },
    #[error("zero lattice generator in degree {degree}")]
    ZeroLatticeGenerator { degree: u32 },
    #[error("degree {degree} needs {expected} lattice generators, got {got}")]
    LatticeRank { degree: u32, expected: usize, got: usize },
    #[error("lattice generators in degree {degree} are linearly dependent")]
    LatticeSingular { degree: u32 },
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("elements of different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("ring {0} has no fundamental class")]
    NoFundamentalClass(String),
    #[error("element is not divisible by the given class")]
    NotDivisible,
    #[error("bundle rank must be positive")]
    RankZero,
    #[error("total class must have constant term 1")]
    NotATotalClass,
    #[error("Chern class above rank {rank} is nonzero")]
    BundleRankViolation { rank: usize },
    #[error("morphism needs one image per generator")]
    MorphismArity,
    #[error("image of {0} has the wrong degree")]
    MorphismNotGraded(String),
    #[error("morphism does not respect {0}")]
    MorphismBreaksRelation(String),
}
