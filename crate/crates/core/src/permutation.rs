use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_same_size, Error, Result};

/// A bijection of `{1..m}`.
///
/// Composition follows `(p.compose(q))(j) = p(q(j))`. Stored 0-based; every
/// public accessor speaks 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list `[p(1), .., p(m)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        let mut zero_based = Vec::with_capacity(m);
        for &image in images {
            if image == 0 || image > m {
                return Err(Error::InvalidPermutation(format!(
                    "image {image} outside 1..={m}"
                )));
            }
            if std::mem::replace(&mut seen[image - 1], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {image} repeated"
                )));
            }
            zero_based.push(image - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.iter().copied().eq(0..images.len())
        });
        Permutation { images }
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k == 0 || k > degree {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    size: degree,
                });
            }
        }
        let mut p = Self::identity(degree);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `p(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> Result<usize> {
        if j == 0 || j > self.degree() {
            return Err(Error::IndexOutOfRange {
                index: j,
                size: self.degree(),
            });
        }
        Ok(self.images[j - 1] + 1)
    }

    #[inline]
    pub(crate) fn apply0(&self, j: usize) -> usize {
        self.images[j]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        ensure_same_size(self.degree(), other.degree())?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (j, &image) in self.images.iter().enumerate() {
            inv[image] = j;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &image)| j == image)
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&j| j + 1).collect()
    }

    /// `Some((i, j))` with `i < j` when this is the transposition `(i j)`.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (0..self.degree())
            .filter(|&j| self.images[j] != j)
            .collect();
        match moved.as_slice() {
            &[a, b] if self.images[a] == b => Some((a + 1, b + 1)),
            _ => None,
        }
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.images[a] > self.images[b])
            .count()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (n, image) in self.images().iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{image}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn all(m: usize) -> impl Iterator<Item = Permutation> {
        (1..=m)
            .permutations(m)
            .map(|images| Permutation::from_images(&images).unwrap())
    }

    #[test]
    fn identity_fixes_everything() {
        let id = Permutation::identity(4);
        for j in 1..=4 {
            assert_eq!(id.apply(j).unwrap(), j);
        }
        assert!(id.is_identity());
    }

    #[test]
    fn transposition_squares_to_identity() {
        let t = Permutation::transposition(3, 1, 2).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(t.as_transposition(), Some((1, 2)));
    }

    #[test]
    fn compose_with_inverse_is_identity_exhaustively() {
        for m in 1..=5 {
            for p in all(m) {
                assert!(p.compose(&p.inverse()).unwrap().is_identity());
                assert!(p.inverse().compose(&p).unwrap().is_identity());
                assert_eq!(p.inverse().inverse(), p);
            }
        }
    }

    #[test]
    fn compose_is_function_composition() {
        for p in all(4) {
            for q in all(4) {
                let pq = p.compose(&q).unwrap();
                for j in 1..=4 {
                    assert_eq!(pq.apply(j).unwrap(), p.apply(q.apply(j).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[3, 1]).is_err());
        assert!(matches!(
            Permutation::identity(3).apply(4),
            Err(Error::IndexOutOfRange { index: 4, size: 3 })
        ));
        assert!(Permutation::identity(3)
            .compose(&Permutation::identity(2))
            .is_err());
    }

    #[test]
    fn three_cycle_is_not_a_transposition() {
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(p.as_transposition(), None);
        assert_eq!(Permutation::identity(3).as_transposition(), None);
    }
}
