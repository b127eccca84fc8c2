use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite or cofinite subset of ℕ.
///
/// `Finite(s)` is `s`; `Cofinite(s)` is `ℕ \ s`. A finite set is never
/// equal to a cofinite one, so every representable set has exactly one
/// representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "tag", content = "support", rename_all = "snake_case")]
pub enum CofinSet {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

impl CofinSet {
    pub fn empty() -> Self {
        CofinSet::Finite(BTreeSet::new())
    }

    /// ℕ itself.
    pub fn nat() -> Self {
        CofinSet::Cofinite(BTreeSet::new())
    }

    pub fn finite(xs: impl IntoIterator<Item = u64>) -> Self {
        CofinSet::Finite(xs.into_iter().collect())
    }

    pub fn cofinite(xs: impl IntoIterator<Item = u64>) -> Self {
        CofinSet::Cofinite(xs.into_iter().collect())
    }

    pub fn support(&self) -> &BTreeSet<u64> {
        match self {
            CofinSet::Finite(s) | CofinSet::Cofinite(s) => s,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        match self {
            CofinSet::Finite(s) => s.contains(&x),
            CofinSet::Cofinite(s) => !s.contains(&x),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, CofinSet::Finite(_))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CofinSet::Finite(s) if s.is_empty())
    }

    pub fn is_nat(&self) -> bool {
        matches!(self, CofinSet::Cofinite(s) if s.is_empty())
    }

    pub fn complement(&self) -> Self {
        match self {
            CofinSet::Finite(s) => CofinSet::Cofinite(s.clone()),
            CofinSet::Cofinite(s) => CofinSet::Finite(s.clone()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use CofinSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Finite(a), Cofinite(b)) | (Cofinite(b), Finite(a)) => Cofinite(b - a),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        use CofinSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Finite(a), Cofinite(b)) | (Cofinite(b), Finite(a)) => Finite(a - b),
            (Cofinite(a), Cofinite(b)) => Cofinite(a | b),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        use CofinSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.is_subset(b),
            (Finite(a), Cofinite(b)) => a.is_disjoint(b),
            (Cofinite(_), Finite(_)) => false,
            (Cofinite(a), Cofinite(b)) => b.is_subset(a),
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.intersection(other).is_empty()
    }

    /// Least element.
    pub fn least(&self) -> Option<u64> {
        match self {
            CofinSet::Finite(s) => s.first().copied(),
            CofinSet::Cofinite(s) => (0..).find(|x| !s.contains(x)),
        }
    }

    /// Greatest element of a finite set.
    pub fn greatest(&self) -> Option<u64> {
        match self {
            CofinSet::Finite(s) => s.last().copied(),
            CofinSet::Cofinite(_) => None,
        }
    }

    /// Elements below `bound`, in order.
    pub fn elements_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..bound).filter(move |&x| self.contains(x))
    }
}

impl fmt::Display for CofinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            CofinSet::Finite(s) => write!(f, "{{{}}}", list(s)),
            CofinSet::Cofinite(s) if s.is_empty() => f.write_str("ℕ"),
            CofinSet::Cofinite(s) => write!(f, "ℕ∖{{{}}}", list(s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CofinOp {
    Union,
    Intersection,
    /// Unary; the second operand is ignored.
    Complement,
    Subset,
    /// Unary; the second operand is ignored.
    IsFinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CofinValue {
    Set(CofinSet),
    Bool(bool),
}

pub fn cofin_algebra(a: &CofinSet, b: &CofinSet, op: CofinOp) -> CofinValue {
    match op {
        CofinOp::Union => CofinValue::Set(a.union(b)),
        CofinOp::Intersection => CofinValue::Set(a.intersection(b)),
        CofinOp::Complement => CofinValue::Set(a.complement()),
        CofinOp::Subset => CofinValue::Bool(a.is_subset(b)),
        CofinOp::IsFinite => CofinValue::Bool(a.is_finite()),
    }
}

/// Every finite and cofinite set with support inside `{0, .., k-1}`.
pub fn representable_sets(k: u64) -> Vec<CofinSet> {
    assert!(k <= 16);
    let supports: Vec<BTreeSet<u64>> = (0u32..1 << k)
        .map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    let finite: Vec<CofinSet> = supports.iter().cloned().map(CofinSet::Finite).collect();
    finite
        .into_iter()
        .chain(supports.into_iter().map(CofinSet::Cofinite))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_examples() {
        assert_eq!(
            cofin_algebra(
                &CofinSet::finite([0, 1]),
                &CofinSet::empty(),
                CofinOp::Complement
            ),
            CofinValue::Set(CofinSet::cofinite([0, 1]))
        );
        assert_eq!(
            cofin_algebra(
                &CofinSet::cofinite([1]),
                &CofinSet::finite([1]),
                CofinOp::Union
            ),
            CofinValue::Set(CofinSet::nat())
        );
        assert_eq!(
            cofin_algebra(
                &CofinSet::finite([2, 3]),
                &CofinSet::cofinite([0]),
                CofinOp::Subset
            ),
            CofinValue::Bool(true)
        );
        assert_eq!(
            cofin_algebra(
                &CofinSet::cofinite([2]),
                &CofinSet::empty(),
                CofinOp::IsFinite
            ),
            CofinValue::Bool(false)
        );
    }

    #[test]
    fn min_max_display() {
        assert_eq!(CofinSet::cofinite([0, 1, 3]).least(), Some(2));
        assert_eq!(CofinSet::empty().least(), None);
        assert_eq!(CofinSet::finite([4, 9]).greatest(), Some(9));
        assert_eq!(CofinSet::nat().to_string(), "ℕ");
        assert_eq!(CofinSet::cofinite([0]).to_string(), "ℕ∖{0}");
    }

    #[test]
    fn json_shape() {
        let s = CofinSet::cofinite([0]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"tag":"cofinite","support":[0]}"#);
        assert_eq!(serde_json::from_str::<CofinSet>(&j).unwrap(), s);
        assert!(serde_json::from_str::<CofinSet>(r#"{"tag":"weird","support":[]}"#).is_err());
    }

    #[test]
    fn representable_count() {
        assert_eq!(representable_sets(3).len(), 16);
    }
}
