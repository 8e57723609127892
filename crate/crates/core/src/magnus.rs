//! The standard Magnus expansion truncated at degree two.
//!
//! `θ(x_i) = 1 + X_i` and `θ(x_i⁻¹) ≡ 1 - X_i + X_i⊗X_i`. Products keep
//! `(1 + a₁ + a₂)(1 + b₁ + b₂) = 1 + (a₁ + b₁) + (a₂ + b₂ + a₁⊗b₁)`.

use std::fmt;

use crate::braid::Sign;
use crate::crossing::HVector;
use crate::error::{checked_add, checked_mul, checked_neg, checked_sub, ensure_same_size, Error, Result};
use crate::free_group::FreeWord;
use crate::permutation::Permutation;

/// An element of `H⊗H`; entry `(k, l)` is the coefficient of `X_k⊗X_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    rank: usize,
    coeffs: Vec<i64>,
}

impl Tensor2 {
    pub fn zero(rank: usize) -> Self {
        Tensor2 {
            rank,
            coeffs: vec![0; rank * rank],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let rank = rows.len();
        if let Some(row) = rows.iter().find(|r| r.len() != rank) {
            return Err(Error::InvalidMatrix(format!(
                "row of length {} in a rank {rank} tensor",
                row.len()
            )));
        }
        Ok(Tensor2 {
            rank,
            coeffs: rows.concat(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coefficient of `X_k⊗X_l`, 1-based.
    pub fn get(&self, k: usize, l: usize) -> Result<i64> {
        for idx in [k, l] {
            if idx == 0 || idx > self.rank {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    size: self.rank,
                });
            }
        }
        Ok(self.at(k - 1, l - 1))
    }

    #[inline]
    pub(crate) fn at(&self, k: usize, l: usize) -> i64 {
        self.coeffs[k * self.rank + l]
    }

    #[inline]
    pub(crate) fn bump(&mut self, k: usize, l: usize, by: i64) {
        let slot = &mut self.coeffs[k * self.rank + l];
        *slot = checked_add(*slot, by);
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.coeffs.chunks(self.rank.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn tensor(a: &HVector, b: &HVector) -> Result<Self> {
        ensure_same_size(a.rank(), b.rank())?;
        let mut t = Tensor2::zero(a.rank());
        for k in 0..a.rank() {
            for l in 0..b.rank() {
                t.coeffs[k * a.rank() + l] = checked_mul(a.at(k), b.at(l));
            }
        }
        Ok(t)
    }

    /// `X ∧ Y`, embedded as `X⊗Y − Y⊗X`.
    pub fn wedge(a: &HVector, b: &HVector) -> Result<Self> {
        Tensor2::tensor(a, b)?.sub(&Tensor2::tensor(b, a)?)
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2> {
        ensure_same_size(self.rank, other.rank)?;
        Ok(Tensor2 {
            rank: self.rank,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| checked_add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2> {
        ensure_same_size(self.rank, other.rank)?;
        Ok(Tensor2 {
            rank: self.rank,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| checked_sub(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2 {
            rank: self.rank,
            coeffs: self.coeffs.iter().map(|&a| checked_neg(a)).collect(),
        }
    }

    /// `π^{⊗2}`: `X_k⊗X_l ↦ X_{π(k)}⊗X_{π(l)}`.
    pub fn permute(&self, p: &Permutation) -> Result<Tensor2> {
        ensure_same_size(self.rank, p.degree())?;
        let mut out = Tensor2::zero(self.rank);
        for k in 0..self.rank {
            for l in 0..self.rank {
                out.coeffs[p.apply0(k) * self.rank + p.apply0(l)] = self.at(k, l);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.rank).all(|k| (0..=k).all(|l| self.at(k, l) == -self.at(l, k)))
    }
}

/// `1 + deg1 + deg2` modulo degree three.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedExpansion {
    pub deg1: HVector,
    pub deg2: Tensor2,
}

impl TruncatedExpansion {
    pub fn one(rank: usize) -> Self {
        TruncatedExpansion {
            deg1: HVector::zero(rank),
            deg2: Tensor2::zero(rank),
        }
    }

    /// `θ(x_gen^sign)` truncated; `gen` is 1-based.
    pub fn of_generator(rank: usize, gen: usize, sign: Sign) -> Result<Self> {
        let basis = HVector::basis(rank, gen)?;
        Ok(match sign {
            Sign::Pos => TruncatedExpansion {
                deg1: basis,
                deg2: Tensor2::zero(rank),
            },
            Sign::Neg => {
                let mut deg2 = Tensor2::zero(rank);
                deg2.bump(gen - 1, gen - 1, 1);
                TruncatedExpansion {
                    deg1: basis.neg(),
                    deg2,
                }
            }
        })
    }

    pub fn rank(&self) -> usize {
        self.deg1.rank()
    }

    pub fn mul(&self, other: &TruncatedExpansion) -> Result<TruncatedExpansion> {
        Ok(TruncatedExpansion {
            deg1: self.deg1.add(&other.deg1)?,
            deg2: self
                .deg2
                .add(&other.deg2)?
                .add(&Tensor2::tensor(&self.deg1, &other.deg1)?)?,
        })
    }
}

impl TruncatedExpansion {
    /// Given `self = θ(w)` and `images[k] = θ(ψ(x_{k+1}))` for an
    /// endomorphism `ψ`, returns `θ(ψ(w))`. Substituting
    /// `X_k ↦ a_k + B_k` gives `Σ c_k a_k` in degree one and
    /// `Σ c_k B_k + Σ c_{kl} a_k⊗a_l` in degree two.
    pub fn substitute(&self, images: &[TruncatedExpansion]) -> Result<TruncatedExpansion> {
        let rank = self.rank();
        ensure_same_size(rank, images.len())?;
        let out_rank = images.first().map_or(rank, TruncatedExpansion::rank);
        let mut out = TruncatedExpansion::one(out_rank);
        for (k, image) in images.iter().enumerate() {
            ensure_same_size(out_rank, image.rank())?;
            let c = self.deg1.at(k);
            if c != 0 {
                out.deg1 = out.deg1.add(&image.deg1.scale(c))?;
                for p in 0..out_rank {
                    for q in 0..out_rank {
                        let b = image.deg2.at(p, q);
                        if b != 0 {
                            out.deg2.bump(p, q, checked_mul(c, b));
                        }
                    }
                }
            }
        }
        for k in 0..rank {
            for l in 0..rank {
                let c = self.deg2.at(k, l);
                if c == 0 {
                    continue;
                }
                let (ak, al) = (&images[k].deg1, &images[l].deg1);
                for p in (0..out_rank).filter(|&p| ak.at(p) != 0) {
                    for q in (0..out_rank).filter(|&q| al.at(q) != 0) {
                        out.deg2.bump(p, q, checked_mul(c, checked_mul(ak.at(p), al.at(q))));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TruncatedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1 + ({}) + [", self.deg1)?;
        let mut first = true;
        for k in 0..self.rank() {
            for l in 0..self.rank() {
                let c = self.deg2.at(k, l);
                if c != 0 {
                    if !first {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}·X{}⊗X{}", k + 1, l + 1)?;
                    first = false;
                }
            }
        }
        f.write_str("]")
    }
}

/// `θ_{≤2}(w)`, accumulated syllable by syllable in `O(len · m)`.
pub fn magnus(w: &FreeWord) -> TruncatedExpansion {
    let rank = w.rank();
    let mut acc = TruncatedExpansion::one(rank);
    for s in w.syllables() {
        let g = s.gen - 1;
        let e = s.sign.as_i64();
        // deg2 += e2 + deg1 ⊗ e·X_g
        for k in 0..rank {
            let prefix = acc.deg1.at(k);
            if prefix != 0 {
                acc.deg2.bump(k, g, checked_mul(prefix, e));
            }
        }
        if s.sign == Sign::Neg {
            acc.deg2.bump(g, g, 1);
        }
        let slot = acc.deg1.at_mut(g);
        *slot = checked_add(*slot, e);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(rank: usize, s: &[i64]) -> FreeWord {
        FreeWord::from_signed(rank, s).unwrap()
    }

    /// Independent route: fold the product of per-syllable expansions.
    fn magnus_by_products(w: &FreeWord) -> TruncatedExpansion {
        w.syllables()
            .iter()
            .map(|s| TruncatedExpansion::of_generator(w.rank(), s.gen, s.sign).unwrap())
            .fold(TruncatedExpansion::one(w.rank()), |acc, e| acc.mul(&e).unwrap())
    }

    #[test]
    fn inverse_generator() {
        let e = magnus(&fw(3, &[-2]));
        assert_eq!(e.deg1, HVector::basis(3, 2).unwrap().neg());
        let mut expected = Tensor2::zero(3);
        expected.bump(1, 1, 1);
        assert_eq!(e.deg2, expected);
    }

    #[test]
    fn empty_word_is_one() {
        assert_eq!(magnus(&FreeWord::identity(4)), TruncatedExpansion::one(4));
    }

    #[test]
    fn x_i_times_inverse_is_one() {
        let e = TruncatedExpansion::of_generator(2, 1, Sign::Pos).unwrap();
        let f = TruncatedExpansion::of_generator(2, 1, Sign::Neg).unwrap();
        assert_eq!(e.mul(&f).unwrap(), TruncatedExpansion::one(2));
        assert_eq!(f.mul(&e).unwrap(), TruncatedExpansion::one(2));
    }

    #[test]
    fn conjugate_of_generator_picks_up_a_wedge() {
        // θ₂(x_i x_{i+1} x_i⁻¹) = X_i ∧ X_{i+1}
        let e = magnus(&fw(3, &[1, 2, -1]));
        let expected = Tensor2::wedge(
            &HVector::basis(3, 1).unwrap(),
            &HVector::basis(3, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(e.deg2, expected);
        assert_eq!(e.deg1, HVector::basis(3, 2).unwrap());
    }

    #[test]
    fn fast_path_matches_products() {
        for s in [&[1, 2, -1, -2][..], &[3, 3, -1, 2, 2, -3], &[-1, -1, -1, 2]] {
            let w = fw(3, s);
            assert_eq!(magnus(&w), magnus_by_products(&w));
        }
    }

    #[test]
    fn permute_tensor_moves_both_indices() {
        let t = Tensor2::tensor(
            &HVector::basis(3, 1).unwrap(),
            &HVector::basis(3, 2).unwrap(),
        )
        .unwrap();
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        let moved = t.permute(&p).unwrap();
        assert_eq!(moved.get(2, 3).unwrap(), 1);
        assert_eq!(moved.rows().iter().flatten().filter(|&&c| c != 0).count(), 1);
    }

    #[test]
    fn substitution_matches_expanding_the_image_word() {
        // ψ: x1 ↦ x2 x1 x2⁻¹, x2 ↦ x1⁻¹ x2 x2, x3 ↦ x3 x1
        let psi = [fw(3, &[2, 1, -2]), fw(3, &[-1, 2, 2]), fw(3, &[3, 1])];
        let images: Vec<_> = psi.iter().map(magnus).collect();
        for s in [&[1, 2, -1, -3][..], &[3, 3, -2, 1, 1], &[]] {
            let mut image_word = FreeWord::identity(3);
            for syl in fw(3, s).syllables() {
                let piece = match syl.sign {
                    Sign::Pos => psi[syl.gen - 1].clone(),
                    Sign::Neg => psi[syl.gen - 1].invert(),
                };
                image_word = image_word.multiply(&piece).unwrap();
            }
            assert_eq!(magnus(&fw(3, s)).substitute(&images).unwrap(), magnus(&image_word));
        }
    }
}
