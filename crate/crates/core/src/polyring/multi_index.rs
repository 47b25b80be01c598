use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `α ∈ ℕⁿ`. The derived ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zeros(arity: usize) -> Self {
        MultiIndex(vec![0; arity])
    }

    /// The exponent vector of `x_i` (0-based).
    pub fn unit(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `|α|`
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Positions with a nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum; arities must agree.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.arity(), other.arity());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `α ≤ β` componentwise.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Graded lexicographic comparison: total degree first, then lex.
    pub fn cmp_graded(&self, other: &MultiIndex) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(v: &[u32]) -> Self {
        MultiIndex(v.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_and_support() {
        let a = MultiIndex::new(vec![2, 0, 3]);
        assert_eq!(a.total(), 5);
        assert_eq!(a.support(), vec![0, 2]);
        assert!(!a.is_zero());
        assert!(MultiIndex::zeros(3).is_zero());
    }

    #[test]
    fn orders() {
        let a = MultiIndex::new(vec![1, 0, 0]);
        let b = MultiIndex::new(vec![0, 1, 1]);
        assert!(a > b);
        assert_eq!(a.cmp_graded(&b), Ordering::Less);
    }

    #[test]
    fn arithmetic() {
        let a = MultiIndex::new(vec![1, 2]);
        let b = MultiIndex::new(vec![0, 1]);
        assert_eq!(a.add(&b), MultiIndex::new(vec![1, 3]));
        assert_eq!(a.checked_sub(&b), Some(MultiIndex::new(vec![1, 1])));
        assert_eq!(b.checked_sub(&a), None);
        assert!(b.divides(&a));
    }
}
