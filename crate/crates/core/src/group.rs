use crate::braid::BraidWord;
use crate::error::Result;

/// Group operations shared by braid words and their images in the
/// semidirect products `A ⋊ S_m` with `(a₁, π₁)(a₂, π₂) = (a₁ + π₁·a₂, π₁π₂)`.
pub trait GroupElement: Sized + Clone {
    fn identity(size: usize) -> Result<Self>;

    fn compose(&self, other: &Self) -> Result<Self>;

    fn inverse(&self) -> Self;

    /// `self * by = by⁻¹ · self · by`.
    fn conjugate(&self, by: &Self) -> Result<Self> {
        by.inverse().compose(self)?.compose(by)
    }
}

/// Words under concatenation followed by free cancellation. Equality is
/// still only up to the braid relations, which this impl does not decide.
impl GroupElement for BraidWord {
    fn identity(size: usize) -> Result<Self> {
        BraidWord::identity(size)
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        Ok(self.concat(other)?.freely_reduced())
    }

    fn inverse(&self) -> Self {
        BraidWord::inverse(self)
    }
}
