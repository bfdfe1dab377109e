use std::cmp::Ordering;
use std::fmt;

/// An objective value: a finite integer, `+inf` (e.g. disconnected shortest
/// path) or `-inf` (e.g. scattering number of a complete graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OptValue {
    MinusInf,
    Finite(i64),
    PlusInf,
}

impl OptValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            OptValue::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, OptValue::Finite(_))
    }
}

impl Ord for OptValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use OptValue::*;
        match (self, other) {
            (MinusInf, MinusInf) | (PlusInf, PlusInf) => Ordering::Equal,
            (MinusInf, _) | (_, PlusInf) => Ordering::Less,
            (PlusInf, _) | (_, MinusInf) => Ordering::Greater,
            (Finite(x), Finite(y)) => x.cmp(y),
        }
    }
}

impl PartialOrd for OptValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OptValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptValue::MinusInf => write!(f, "-inf"),
            OptValue::PlusInf => write!(f, "+inf"),
            OptValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for OptValue {
    fn from(v: i64) -> Self {
        OptValue::Finite(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order() {
        assert!(OptValue::MinusInf < OptValue::Finite(i64::MIN));
        assert!(OptValue::Finite(i64::MAX) < OptValue::PlusInf);
        assert!(OptValue::Finite(1) < OptValue::Finite(2));
        assert_eq!(OptValue::PlusInf, OptValue::PlusInf);
    }
}
