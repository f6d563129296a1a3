use std::collections::BTreeMap;

use crate::basis::{BasisSet, Label, PairBasis};
use crate::scalar::Real;

/// Which combination a variable-basis operation performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Star {
    Union,
    Inter,
}

/// Vector that carries its own basis: the key set is the basis, values are
/// the coefficients (zeros are stored, not elided).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct VBVector<S> {
    coeffs: BTreeMap<Label, S>,
}

impl<S: Real> VBVector<S> {
    pub fn new() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Label, S)>) -> Self {
        Self { coeffs: pairs.into_iter().collect() }
    }

    /// Zero vector on the given basis.
    pub fn zeros(basis: &BasisSet) -> Self {
        Self { coeffs: basis.iter().map(|l| (l, S::zero())).collect() }
    }

    pub fn basis(&self) -> BasisSet {
        self.coeffs.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, label: Label) -> Option<S> {
        self.coeffs.get(&label).copied()
    }

    pub fn set(&mut self, label: Label, value: S) {
        self.coeffs.insert(label, value);
    }

    pub fn remove(&mut self, label: Label) {
        self.coeffs.remove(&label);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, S)> + '_ {
        self.coeffs.iter().map(|(&l, &v)| (l, v))
    }

    pub fn values(&self) -> impl Iterator<Item = S> + '_ {
        self.coeffs.values().copied()
    }

    pub fn map_values(&self, f: impl Fn(S) -> S) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&l, &v)| (l, f(v))).collect() }
    }

    /// self + h * other, defined on the shared basis (callers keep bases equal).
    pub fn axpy(&self, h: S, other: &Self) -> Self {
        debug_assert_eq!(self.basis(), other.basis());
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&l, &v)| (l, v + h * other.coeffs[&l]))
                .collect(),
        }
    }
}

/// Coefficient at `p` is `x_p + y_p`; a label present in exactly one operand
/// keeps its coefficient unchanged (zero-fill) in the union case.
pub fn vec_combine<S: Real>(star: Star, x: &VBVector<S>, y: &VBVector<S>) -> VBVector<S> {
    let coeffs = match star {
        Star::Union => {
            let mut out = x.coeffs.clone();
            for (&l, &v) in &y.coeffs {
                out.entry(l).and_modify(|a| *a += v).or_insert(v);
            }
            out
        }
        Star::Inter => x
            .coeffs
            .iter()
            .filter_map(|(&l, &v)| y.coeffs.get(&l).map(|&w| (l, v + w)))
            .collect(),
    };
    VBVector { coeffs }
}

/// Tensor over ordered label pairs; key set is the pair basis.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct VBTensor<S> {
    coeffs: BTreeMap<(Label, Label), S>,
}

impl<S: Real> VBTensor<S> {
    pub fn new() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = ((Label, Label), S)>) -> Self {
        Self { coeffs: pairs.into_iter().collect() }
    }

    pub fn zeros(basis: &PairBasis) -> Self {
        Self { coeffs: basis.iter().map(|p| (p, S::zero())).collect() }
    }

    pub fn pair_basis(&self) -> PairBasis {
        self.coeffs.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, p: Label, q: Label) -> Option<S> {
        self.coeffs.get(&(p, q)).copied()
    }

    pub fn set(&mut self, p: Label, q: Label, value: S) {
        self.coeffs.insert((p, q), value);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Label, Label), S)> + '_ {
        self.coeffs.iter().map(|(&p, &v)| (p, v))
    }

    pub fn values(&self) -> impl Iterator<Item = S> + '_ {
        self.coeffs.values().copied()
    }

    pub fn map_values(&self, f: impl Fn(S) -> S) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&p, &v)| (p, f(v))).collect() }
    }

    pub fn axpy(&self, h: S, other: &Self) -> Self {
        debug_assert_eq!(self.pair_basis(), other.pair_basis());
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&p, &v)| (p, v + h * other.coeffs[&p]))
                .collect(),
        }
    }
}

pub fn tensor_combine<S: Real>(star: Star, x: &VBTensor<S>, y: &VBTensor<S>) -> VBTensor<S> {
    let coeffs = match star {
        Star::Union => {
            let mut out = x.coeffs.clone();
            for (&p, &v) in &y.coeffs {
                out.entry(p).and_modify(|a| *a += v).or_insert(v);
            }
            out
        }
        Star::Inter => x
            .coeffs
            .iter()
            .filter_map(|(&p, &v)| y.coeffs.get(&p).map(|&w| (p, v + w)))
            .collect(),
    };
    VBTensor { coeffs }
}

/// Boolean tensor over ordered label pairs (adjacency).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct BoolTensor {
    coeffs: BTreeMap<(Label, Label), bool>,
}

impl BoolTensor {
    pub fn new() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = ((Label, Label), bool)>) -> Self {
        Self { coeffs: pairs.into_iter().collect() }
    }

    /// All-false tensor on the given basis.
    pub fn zeros(basis: &PairBasis) -> Self {
        Self { coeffs: basis.iter().map(|p| (p, false)).collect() }
    }

    /// All-true tensor on the given basis.
    pub fn ones(basis: &PairBasis) -> Self {
        Self { coeffs: basis.iter().map(|p| (p, true)).collect() }
    }

    pub fn pair_basis(&self) -> PairBasis {
        self.coeffs.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, p: Label, q: Label) -> Option<bool> {
        self.coeffs.get(&(p, q)).copied()
    }

    pub fn is_set(&self, p: Label, q: Label) -> bool {
        self.get(p, q).unwrap_or(false)
    }

    pub fn set(&mut self, p: Label, q: Label, value: bool) {
        self.coeffs.insert((p, q), value);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Label, Label), bool)> + '_ {
        self.coeffs.iter().map(|(&p, &v)| (p, v))
    }

    pub fn count_set(&self) -> usize {
        self.coeffs.values().filter(|v| **v).count()
    }
}

/// Union is pairwise OR with zero-fill; intersection is pairwise AND on the
/// shared pair basis.
pub fn bool_combine(star: Star, x: &BoolTensor, y: &BoolTensor) -> BoolTensor {
    let coeffs = match star {
        Star::Union => {
            let mut out = x.coeffs.clone();
            for (&p, &v) in &y.coeffs {
                out.entry(p).and_modify(|a| *a |= v).or_insert(v);
            }
            out
        }
        Star::Inter => x
            .coeffs
            .iter()
            .filter_map(|(&p, &v)| y.coeffs.get(&p).map(|&w| (p, v && w)))
            .collect(),
    };
    BoolTensor { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vec_union_zero_fills_and_sums() {
        let x = VBVector::from_pairs([(2, 1.0), (3, 2.0)]);
        let y = VBVector::from_pairs([(1, 10.0), (2, 20.0), (3, 30.0), (4, 40.0)]);
        let u = vec_combine(Star::Union, &x, &y);
        assert_eq!(u, VBVector::from_pairs([(1, 10.0), (2, 21.0), (3, 32.0), (4, 40.0)]));
        let i = vec_combine(Star::Inter, &x, &y);
        assert_eq!(i, VBVector::from_pairs([(2, 21.0), (3, 32.0)]));
        assert_eq!(vec_combine(Star::Union, &x, &VBVector::new()), x);
    }

    #[test]
    fn tensor_union_and_inter() {
        let w = VBTensor::from_pairs([((1, 2), 0.3)]);
        let v = VBTensor::from_pairs([((1, 2), 0.1), ((2, 3), 1.0)]);
        assert_eq!(
            tensor_combine(Star::Union, &w, &v),
            VBTensor::from_pairs([((1, 2), 0.4), ((2, 3), 1.0)])
        );
        assert_eq!(
            tensor_combine(Star::Inter, &w, &v),
            VBTensor::from_pairs([((1, 2), 0.4)])
        );
        assert_eq!(tensor_combine(Star::Union, &w, &VBTensor::new()), w);
    }

    #[test]
    fn bool_or_and() {
        let a = BoolTensor::from_pairs([((1, 2), true), ((2, 2), false)]);
        let e = BoolTensor::from_pairs([((1, 2), true), ((2, 1), true), ((2, 2), true)]);
        let u = bool_combine(Star::Union, &a, &e);
        assert_eq!(u.get(2, 2), Some(true));
        assert_eq!(u.get(2, 1), Some(true));
        let i = bool_combine(Star::Inter, &a, &e);
        assert_eq!(i, BoolTensor::from_pairs([((1, 2), true), ((2, 2), false)]));
        assert_eq!(bool_combine(Star::Union, &a, &BoolTensor::new()), a);
    }
}
