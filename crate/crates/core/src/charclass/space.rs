use std::sync::Arc;

use crate::ring::{Orientation, Ring};

use super::{ClassError, TotalClass};

/// A manifold given by its cohomology ring, the total Chern class of an
/// almost complex structure, and an orientation relative to the ring's
/// fundamental class.
#[derive(Clone, Debug)]
pub struct Space {
    name: String,
    tangent: TotalClass,
    orientation: Orientation,
    provenance: String,
}

impl Space {
    pub fn new(name: &str, tangent: TotalClass, orientation: Orientation, provenance: &str) -> Self {
        Space {
            name: name.to_string(),
            tangent,
            orientation,
            provenance: provenance.to_string(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.tangent.ring()
    }

    pub fn tangent(&self) -> &TotalClass {
        &self.tangent
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn renamed(mut self, name: &str, provenance: &str) -> Self {
        self.name = name.to_string();
        self.provenance = provenance.to_string();
        self
    }

    /// The structure with every Chern class conjugated and the opposite
    /// orientation in odd complex dimension.
    pub fn conjugate(&self) -> Space {
        let n = self.ring().top_index();
        let orientation = if n % 2 == 1 {
            self.orientation.flip()
        } else {
            self.orientation
        };
        Space {
            name: format!("conj({})", self.name),
            tangent: self.tangent.conjugate(),
            orientation,
            provenance: format!("global conjugate of {}", self.name),
        }
    }
}

/// Conjugates the structure along a subbundle with total class `fiber`:
/// `c' = c * conj(F) / F`, orientation times `(-1)^rank(F)`. The complement
/// `c / F` must be a genuine integral class of the complementary rank.
pub fn flip(space: &Space, fiber: &TotalClass) -> Result<Space, ClassError> {
    if fiber.rank() < 1 || !fiber.is_genuine() || !fiber.total().is_integral() {
        return Err(ClassError::NotASummand);
    }
    let complement = space.tangent.series_quotient(fiber)?;
    if !complement.is_genuine() || !complement.total().is_integral() {
        return Err(ClassError::NotASummand);
    }
    let tangent = complement.whitney(&fiber.conjugate())?;
    let orientation = if fiber.rank() % 2 == 0 {
        space.orientation
    } else {
        space.orientation.flip()
    };
    Ok(Space {
        name: format!("flip({}; {})", space.name, fiber),
        tangent,
        orientation,
        provenance: format!(
            "{} conjugated along a rank {} summand with class {}",
            space.name,
            fiber.rank(),
            fiber
        ),
    })
}
