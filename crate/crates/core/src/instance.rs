use crate::error::CoreError;
use crate::interval::Interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Shrink,
    Expand,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Shrink => "shrink",
            Mode::Expand => "expand",
        }
    }
}

/// Source and target points for shortest-path problems, with `s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpEndpoints {
    pub s: i64,
    pub t: i64,
}

/// A shrink/expand problem instance: n pairs of (original, replacement)
/// intervals, a budget, and optionally shortest-path endpoints.
///
/// In shrink mode every replacement is a subset of its original; in expand
/// mode every original is a subset of its replacement. Pairs are indexed
/// 1..=n and duplicates are allowed and never merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub mode: Mode,
    pub pairs: Vec<(Interval, Interval)>,
    pub budget: usize,
    pub sp: Option<SpEndpoints>,
}

impl Instance {
    pub fn new(
        mode: Mode,
        pairs: Vec<(Interval, Interval)>,
        budget: usize,
        sp: Option<SpEndpoints>,
    ) -> Result<Self, CoreError> {
        for (idx, (orig, repl)) in pairs.iter().enumerate() {
            let ok = match mode {
                Mode::Shrink => repl.subset_of(orig),
                Mode::Expand => orig.subset_of(repl),
            };
            if !ok {
                return Err(CoreError::Containment {
                    pair: idx + 1,
                    msg: format!(
                        "{} mode requires {} for original {orig} and replacement {repl}",
                        mode.as_str(),
                        match mode {
                            Mode::Shrink => "replacement \u{2286} original",
                            Mode::Expand => "original \u{2286} replacement",
                        },
                    ),
                });
            }
            // Empty intervals written as [c, c] must still sit inside their
            // partner's span so their coordinate is meaningful downstream.
            let (inner, outer, which) = match mode {
                Mode::Shrink => (repl, orig, "replacement"),
                Mode::Expand => (orig, repl, "original"),
            };
            if inner.is_empty() && !outer.is_empty() && (inner.a < outer.a || inner.a > outer.b) {
                return Err(CoreError::Containment {
                    pair: idx + 1,
                    msg: format!(
                        "empty {which} coordinate {} outside partner interval {outer}",
                        inner.a
                    ),
                });
            }
        }
        if let Some(SpEndpoints { s, t }) = sp {
            if s >= t {
                return Err(CoreError::InvalidInstance(format!(
                    "shortest-path endpoints require s < t, got s={s}, t={t}"
                )));
            }
        }
        Ok(Instance {
            mode,
            pairs,
            budget,
            sp,
        })
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn originals(&self) -> Vec<Interval> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn replacements(&self) -> Vec<Interval> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    /// The modified sequence: position j holds the replacement when j is in X,
    /// the original otherwise.
    pub fn apply(&self, x: &ModificationSet) -> Result<Vec<Interval>, CoreError> {
        let n = self.n();
        for &i in x.indices() {
            if i == 0 || i > n {
                return Err(CoreError::InvalidModification { index: i, n });
            }
        }
        let mut out = self.originals();
        for &i in x.indices() {
            out[i - 1] = self.pairs[i - 1].1;
        }
        Ok(out)
    }
}

/// A set of 1-based pair indices to modify; kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModificationSet(Vec<usize>);

impl ModificationSet {
    pub fn empty() -> Self {
        ModificationSet(Vec::new())
    }

    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        ModificationSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

impl FromIterator<usize> for ModificationSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ModificationSet::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn apply_substitutes_selected_pairs() {
        let inst = Instance::new(Mode::Shrink, vec![(iv(0, 4), iv(1, 2))], 1, None).unwrap();
        let x = ModificationSet::new(vec![1]);
        assert_eq!(inst.apply(&x).unwrap(), vec![iv(1, 2)]);
        assert_eq!(inst.apply(&ModificationSet::empty()).unwrap(), vec![iv(0, 4)]);
    }

    #[test]
    fn apply_expand_case() {
        let inst = Instance::new(
            Mode::Expand,
            vec![(iv(0, 1), iv(0, 3)), (iv(2, 3), iv(2, 3))],
            1,
            None,
        )
        .unwrap();
        let x = ModificationSet::new(vec![1]);
        assert_eq!(inst.apply(&x).unwrap(), vec![iv(0, 3), iv(2, 3)]);
    }

    #[test]
    fn apply_rejects_out_of_range() {
        let inst = Instance::new(Mode::Shrink, vec![(iv(0, 4), iv(1, 2))], 1, None).unwrap();
        let err = inst.apply(&ModificationSet::new(vec![2])).unwrap_err();
        assert_eq!(err, CoreError::InvalidModification { index: 2, n: 1 });
    }

    #[test]
    fn containment_is_validated() {
        assert!(Instance::new(Mode::Shrink, vec![(iv(0, 4), iv(5, 6))], 0, None).is_err());
        assert!(Instance::new(Mode::Expand, vec![(iv(0, 4), iv(1, 2))], 0, None).is_err());
        // empty replacement is fine anywhere inside the original
        assert!(Instance::new(Mode::Shrink, vec![(iv(0, 4), iv(2, 2))], 0, None).is_ok());
        // but not outside its span
        assert!(Instance::new(Mode::Shrink, vec![(iv(0, 4), iv(9, 9))], 0, None).is_err());
    }

    #[test]
    fn sp_endpoints_must_be_ordered() {
        let sp = Some(SpEndpoints { s: 5, t: 5 });
        assert!(Instance::new(Mode::Shrink, vec![], 0, sp).is_err());
    }
}
