use std::collections::BTreeSet;
use std::fmt;

/// Vertex label drawn from the universe of non-negative integers.
pub type Label = u32;

/// Finite label set in canonical ascending order.
///
/// Equal sets always compare equal regardless of construction order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasisSet {
    labels: BTreeSet<Label>,
}

impl BasisSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn range(lo: Label, hi: Label) -> Self {
        (lo..=hi).collect()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.labels.contains(&label)
    }

    pub fn insert(&mut self, label: Label) -> bool {
        self.labels.insert(label)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.labels.iter().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { labels: self.labels.union(&other.labels).copied().collect() }
    }

    pub fn inter(&self, other: &Self) -> Self {
        Self { labels: self.labels.intersection(&other.labels).copied().collect() }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self { labels: self.labels.difference(&other.labels).copied().collect() }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.labels.is_subset(&other.labels)
    }

    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self.labels.is_subset(&other.labels) && self.labels.len() < other.labels.len()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.labels.is_disjoint(&other.labels)
    }

    /// Full Cartesian square B x B, loops included.
    pub fn square(&self) -> PairBasis {
        let mut pairs = BTreeSet::new();
        for p in self.iter() {
            for q in self.iter() {
                pairs.insert((p, q));
            }
        }
        PairBasis { pairs }
    }
}

impl FromIterator<Label> for BasisSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        Self { labels: iter.into_iter().collect() }
    }
}

impl fmt::Debug for BasisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels.iter()).finish()
    }
}

/// Finite set of ordered label pairs in canonical lexicographic order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PairBasis {
    pairs: BTreeSet<(Label, Label)>,
}

impl PairBasis {
    pub fn contains(&self, pair: (Label, Label)) -> bool {
        self.pairs.contains(&pair)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { pairs: self.pairs.union(&other.pairs).copied().collect() }
    }

    pub fn inter(&self, other: &Self) -> Self {
        Self { pairs: self.pairs.intersection(&other.pairs).copied().collect() }
    }
}

impl FromIterator<(Label, Label)> for PairBasis {
    fn from_iter<I: IntoIterator<Item = (Label, Label)>>(iter: I) -> Self {
        Self { pairs: iter.into_iter().collect() }
    }
}

impl fmt::Debug for PairBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs.iter()).finish()
    }
}
