use std::fmt;

use crate::arith::Rational;
use crate::ring::RingElement;

use super::{ClassError, Space};

/// The seven Chern monomials of weight 5, in table row order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChernMonomial {
    C5,
    C1Pow5,
    C1Cube2,
    C1Sq3,
    C1C4,
    C1C2Sq,
    C2C3,
}

impl ChernMonomial {
    pub const ALL: [ChernMonomial; 7] = [
        ChernMonomial::C5,
        ChernMonomial::C1Pow5,
        ChernMonomial::C1Cube2,
        ChernMonomial::C1Sq3,
        ChernMonomial::C1C4,
        ChernMonomial::C1C2Sq,
        ChernMonomial::C2C3,
    ];

    /// The partition of 5, largest part first.
    pub fn partition(self) -> &'static [usize] {
        match self {
            ChernMonomial::C5 => &[5],
            ChernMonomial::C1Pow5 => &[1, 1, 1, 1, 1],
            ChernMonomial::C1Cube2 => &[2, 1, 1, 1],
            ChernMonomial::C1Sq3 => &[3, 1, 1],
            ChernMonomial::C1C4 => &[4, 1],
            ChernMonomial::C1C2Sq => &[2, 2, 1],
            ChernMonomial::C2C3 => &[3, 2],
        }
    }

    /// Key as written in tables, e.g. `c1^3c2`.
    pub fn key(self) -> &'static str {
        match self {
            ChernMonomial::C5 => "c5",
            ChernMonomial::C1Pow5 => "c1^5",
            ChernMonomial::C1Cube2 => "c1^3c2",
            ChernMonomial::C1Sq3 => "c1^2c3",
            ChernMonomial::C1C4 => "c1c4",
            ChernMonomial::C1C2Sq => "c1c2^2",
            ChernMonomial::C2C3 => "c2c3",
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        ChernMonomial::ALL.into_iter().find(|m| m.key() == key)
    }

    /// Product of the classes `c(k)` over the partition.
    pub fn product(self, c: impl Fn(usize) -> RingElement) -> RingElement {
        let parts = self.partition();
        parts[1..].iter().fold(c(parts[0]), |acc, &k| &acc * &c(k))
    }
}

impl fmt::Display for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernNumberTable {
    entries: Vec<(ChernMonomial, Rational)>,
}

impl ChernNumberTable {
    pub fn from_values(values: [i64; 7]) -> Self {
        ChernNumberTable {
            entries: ChernMonomial::ALL
                .into_iter()
                .zip(values)
                .map(|(m, v)| (m, Rational::from(v)))
                .collect(),
        }
    }

    pub fn get(&self, m: ChernMonomial) -> &Rational {
        &self.entries.iter().find(|(k, _)| *k == m).expect("all seven entries").1
    }

    pub fn entries(&self) -> &[(ChernMonomial, Rational)] {
        &self.entries
    }

    pub fn values(&self) -> Vec<Rational> {
        self.entries.iter().map(|(_, v)| v.clone()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_integer())
    }

    /// `Some(k)` when every entry is `k` times the matching entry of `unit`.
    pub fn multiple_of(&self, unit: &ChernNumberTable) -> Option<Rational> {
        let mut factor: Option<Rational> = None;
        for ((_, a), (_, b)) in self.entries.iter().zip(&unit.entries) {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let k = a.checked_div(b).ok()?;
            match &factor {
                Some(f) if *f != k => return None,
                _ => factor = Some(k),
            }
        }
        factor
    }
}

/// Evaluates the seven weight-5 Chern monomials on the fundamental class with
/// the space's orientation.
pub fn chern_numbers(space: &Space) -> Result<ChernNumberTable, ClassError> {
    let ring = space.ring();
    if ring.top_index() != 5 {
        return Err(ClassError::WrongDimension {
            ring: ring.name().to_string(),
            dim: ring.top_index(),
        });
    }
    let c: Vec<RingElement> = (0..=5).map(|k| space.tangent().c(k)).collect();
    let entries = ChernMonomial::ALL
        .into_iter()
        .map(|m| {
            let v = m.product(|k| c[k].clone()).evaluate_top(space.orientation())?;
            Ok((m, v))
        })
        .collect::<Result<Vec<_>, ClassError>>()?;
    Ok(ChernNumberTable { entries })
}
