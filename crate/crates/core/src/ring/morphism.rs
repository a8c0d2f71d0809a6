use std::sync::Arc;

use super::element::RingElement;
use super::graded::{Ring, RingHandle};
use super::monomial::{monomials_in_degree_range, Monomial};
use super::RingError;

/// Degree-preserving ring map fixed by the images of the generators.
#[derive(Clone, Debug)]
pub struct RingMorphism {
    source: Arc<Ring>,
    target: Arc<Ring>,
    images: Vec<RingElement>,
}

impl RingMorphism {
    /// Checks that every image is homogeneous of its generator's degree, that
    /// each relation maps to an identity, and that monomials vanishing in the
    /// source for degree reasons map to zero.
    pub fn new(source: &Arc<Ring>, target: &Arc<Ring>, images: Vec<RingElement>) -> Result<Self, RingError> {
        if images.len() != source.generators().len() {
            return Err(RingError::MorphismArity);
        }
        for (g, img) in source.generators().iter().zip(&images) {
            if !Ring::same(img.ring(), target) {
                return Err(RingError::RingMismatch {
                    left: target.name().to_string(),
                    right: img.ring().name().to_string(),
                });
            }
            if !img.is_homogeneous_of((g.degree / 2) as usize) {
                return Err(RingError::MorphismNotGraded(g.symbol.clone()));
            }
        }
        let phi = RingMorphism {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        for rel in &source.presentation().relations {
            let lhs = phi.map_monomial(&rel.lhs);
            let mut rhs = target.zero();
            for (m, c) in rel.rhs.terms() {
                rhs = &rhs + &phi.map_monomial(m).scale(c);
            }
            if lhs != rhs {
                return Err(RingError::MorphismBreaksRelation(rel.lhs.render(source.generators())));
            }
        }
        if target.top_degree() > source.top_degree() {
            for m in monomials_in_degree_range(source.generators(), source.top_degree() + 1, target.top_degree()) {
                if !phi.map_monomial(&m).is_zero() {
                    return Err(RingError::MorphismBreaksRelation(m.render(source.generators())));
                }
            }
        }
        Ok(phi)
    }

    fn map_monomial(&self, m: &Monomial) -> RingElement {
        m.exponents()
            .iter()
            .zip(&self.images)
            .fold(self.target.one(), |acc, (&e, img)| &acc * &img.pow(e))
    }

    pub fn apply(&self, e: &RingElement) -> Result<RingElement, RingError> {
        if !Ring::same(e.ring(), &self.source) {
            return Err(RingError::RingMismatch {
                left: self.source.name().to_string(),
                right: e.ring().name().to_string(),
            });
        }
        let mut out = self.target.zero();
        for k in 0..=self.source.top_index() {
            for (c, m) in e.part(k).iter().zip(self.source.basis(k)) {
                if !c.is_zero() {
                    out = &out + &self.map_monomial(m).scale(c);
                }
            }
        }
        Ok(out)
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }
}
