use std::cmp::Ordering;
use std::fmt;

use crate::algebra::Poly;

/// A place of F_q(x): a monic irreducible polynomial or the degree valuation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Degree of the residue field over F_q.
    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(p) => p.deg().unwrap_or(0) as u32,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn poly(&self) -> Option<&Poly> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinity => None,
        }
    }
}

/// Finite places by (degree, coefficients), infinity last.
impl Ord for Place {
    fn cmp(&self, o: &Place) -> Ordering {
        match (self, o) {
            (Place::Finite(a), Place::Finite(b)) => a.cmp(b),
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, o: &Place) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("infinity"),
        }
    }
}
