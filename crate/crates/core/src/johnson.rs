//! The extended first Johnson homomorphism `τ₁θ` on `B_m` and the map
//! `δ: Mat⁰_m → Hom(H, ∧²H)`, `δ(M)(X_i) = X_i ∧ f_i(M)`.
//!
//! `τ₁θ(β)(X_i) = −|β|^{⊗2}(θ₂(Φ(β)⁻¹(x_i)))`, with `Φ(β)⁻¹` evaluated as
//! `Φ(β⁻¹)`. On braids this equals `δ(C(β))`.
//!
//! Free words `Φ(β⁻¹)(x_i)` can grow exponentially in the length of `β`, so
//! [`tau1`] never builds them: it composes the degree-two truncations of the
//! one-letter substitutions instead, which is exact because `θ₂` of an image
//! only depends on the degree ≤ 2 parts. [`tau1_by_words`] keeps the literal
//! route for cross-checking on short words.

use std::sync::OnceLock;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::artin::apply_artin;
use crate::braid::BraidWord;
use crate::crossing::{crossing_with_permutation, CrossingMatrix, HVector};
use crate::error::{ensure_same_size, Error, Result};
use crate::free_group::FreeWord;
use crate::magnus::{magnus, Tensor2, TruncatedExpansion};
use crate::group::GroupElement;
use crate::permutation::Permutation;

/// An element of `Hom(H, ∧²H)`: the image of each `X_i` as an
/// antisymmetric coefficient matrix in `H⊗H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WedgeMap {
    images: Vec<Tensor2>,
}

impl WedgeMap {
    pub fn zero(rank: usize) -> Self {
        WedgeMap {
            images: vec![Tensor2::zero(rank); rank],
        }
    }

    /// Fails unless there is one antisymmetric `rank×rank` image per basis
    /// vector.
    pub fn from_images(images: Vec<Tensor2>) -> Result<Self> {
        let rank = images.len();
        for (i, t) in images.iter().enumerate() {
            ensure_same_size(rank, t.rank())?;
            if !t.is_antisymmetric() {
                return Err(Error::InvalidMatrix(format!(
                    "image of X{} is not antisymmetric",
                    i + 1
                )));
            }
        }
        Ok(WedgeMap { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `X_i`, 1-based.
    pub fn image(&self, i: usize) -> Result<&Tensor2> {
        self.images.get(i.wrapping_sub(1)).ok_or(Error::IndexOutOfRange {
            index: i,
            size: self.rank(),
        })
    }

    pub fn images(&self) -> &[Tensor2] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Tensor2::is_zero)
    }

    pub fn add(&self, other: &WedgeMap) -> Result<WedgeMap> {
        ensure_same_size(self.rank(), other.rank())?;
        Ok(WedgeMap {
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.add(b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn neg(&self) -> WedgeMap {
        WedgeMap {
            images: self.images.iter().map(Tensor2::neg).collect(),
        }
    }

    /// `(g ⊙ F)(X) = g^{⊗2}(F(g⁻¹(X)))`.
    pub fn act(&self, g: &Permutation) -> Result<WedgeMap> {
        ensure_same_size(self.rank(), g.degree())?;
        let inv = g.inverse();
        Ok(WedgeMap {
            images: (0..self.rank())
                .map(|i| self.images[inv.apply0(i)].permute(g))
                .collect::<Result<_>>()?,
        })
    }

    /// Inverts `δ`: returns `M` with `δ(M) = self`, or `None` when `self`
    /// is not of the form `X_i ∧ f_i` for every `i`.
    pub fn recover_matrix(&self) -> Option<CrossingMatrix> {
        let m = self.rank();
        let mut matrix = CrossingMatrix::zero(m);
        for (i, t) in self.images.iter().enumerate() {
            for k in 0..m {
                for l in 0..m {
                    if k != i && l != i && t.at(k, l) != 0 {
                        return None;
                    }
                }
            }
            for k in (0..m).filter(|&k| k != i) {
                matrix.set(k, i, t.at(i, k));
            }
        }
        Some(matrix)
    }
}

/// `δ(M)(X_i) = X_i ∧ f_i(M)`.
pub fn delta(matrix: &CrossingMatrix) -> WedgeMap {
    let m = matrix.size();
    let images = (0..m)
        .map(|i| {
            let mut t = Tensor2::zero(m);
            for k in 0..m {
                let a = matrix.at(k, i);
                if a != 0 {
                    t.bump(i, k, a);
                    t.bump(k, i, -a);
                }
            }
            t
        })
        .collect();
    WedgeMap { images }
}

/// `τ₁θ(β)` in `O(len · m³)`.
///
/// Panics if an image fails to be antisymmetric; that would mean the
/// composition conventions are broken, not that the input is bad.
pub fn tau1(word: &BraidWord) -> WedgeMap {
    assert_conventions();
    tau1_unchecked(word)
}

/// `τ₁θ(β)` through the explicit free words `Φ(β⁻¹)(x_i)`. Exponential in
/// the worst case; meant for short words.
pub fn tau1_by_words(word: &BraidWord) -> WedgeMap {
    let m = word.strands();
    let inverse = word.inverse();
    let pulled = (1..=m).map(|i| {
        let x = FreeWord::generator(m, i).expect("generator index in range");
        magnus(&apply_artin(&inverse, &x).expect("ranks agree"))
    });
    finish_tau(word, pulled.collect())
}

fn tau1_unchecked(word: &BraidWord) -> WedgeMap {
    let m = word.strands();
    // expansions of φ(x_i) for φ = Φ(l_k⁻¹)∘⋯∘Φ(l_1⁻¹), one letter at a time
    let mut pulled: Vec<TruncatedExpansion> = (1..=m)
        .map(|i| magnus(&FreeWord::generator(m, i).expect("generator index in range")))
        .collect();
    for &letter in word.letters() {
        let step = BraidWord::new(m, vec![letter.inverse()]).expect("letter already validated");
        let images: Vec<TruncatedExpansion> = (1..=m)
            .map(|k| {
                let x = FreeWord::generator(m, k).expect("generator index in range");
                magnus(&apply_artin(&step, &x).expect("ranks agree"))
            })
            .collect();
        for e in &mut pulled {
            *e = e.substitute(&images).expect("ranks agree");
        }
    }
    finish_tau(word, pulled)
}

/// `−|β|^{⊗2}` applied to the degree-two parts, with the antisymmetry check.
fn finish_tau(word: &BraidWord, pulled: Vec<TruncatedExpansion>) -> WedgeMap {
    let perm = word.permutation();
    let images: Vec<Tensor2> = pulled
        .iter()
        .map(|e| e.deg2.permute(&perm).expect("ranks agree").neg())
        .collect();
    for (i, t) in images.iter().enumerate() {
        assert!(
            t.is_antisymmetric(),
            "tau1 image of X{} is not antisymmetric for braid [{word}]",
            i + 1
        );
    }
    WedgeMap { images }
}

/// `(τ₁θ(β), |β|)` in `Hom(H, ∧²H) ⋊ S_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JohnsonLift {
    pub map: WedgeMap,
    pub perm: Permutation,
}

pub fn lift_tau(word: &BraidWord) -> JohnsonLift {
    JohnsonLift {
        map: tau1(word),
        perm: word.permutation(),
    }
}

/// `(δ(C(β)), |β|)`: the same element reached through the crossing matrix.
pub fn lift_delta(word: &BraidWord) -> JohnsonLift {
    let (matrix, perm) = crossing_with_permutation(word);
    JohnsonLift {
        map: delta(&matrix),
        perm,
    }
}

impl GroupElement for JohnsonLift {
    fn identity(size: usize) -> Result<Self> {
        Ok(JohnsonLift {
            map: WedgeMap::zero(size),
            perm: Permutation::identity(size),
        })
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        Ok(JohnsonLift {
            map: self.map.add(&other.map.act(&self.perm)?)?,
            perm: self.perm.compose(&other.perm)?,
        })
    }

    fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        JohnsonLift {
            map: self.map.act(&inv).expect("lift components share one size").neg(),
            perm: inv,
        }
    }
}

/// `{"m": 3, "tau1": [{"basis": "X1", "wedge": [{"i":1,"j":2,"c":-1}]}, ..], "perm": [..]}`.
/// Only nonzero `X_i ∧ X_j` coefficients with `i < j` are listed.
impl Serialize for JohnsonLift {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term {
            i: usize,
            j: usize,
            c: i64,
        }
        #[derive(serde::Serialize)]
        struct Image {
            basis: String,
            wedge: Vec<Term>,
        }
        let m = self.map.rank();
        let images: Vec<Image> = self
            .map
            .images
            .iter()
            .enumerate()
            .map(|(n, t)| Image {
                basis: format!("X{}", n + 1),
                wedge: (0..m)
                    .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                    .filter(|&(i, j)| t.at(i, j) != 0)
                    .map(|(i, j)| Term {
                        i: i + 1,
                        j: j + 1,
                        c: t.at(i, j),
                    })
                    .collect(),
            })
            .collect();
        let mut s = serializer.serialize_struct("JohnsonLift", 3)?;
        s.serialize_field("m", &m)?;
        s.serialize_field("tau1", &images)?;
        s.serialize_field("perm", &self.perm)?;
        s.end()
    }
}

/// Pins the two fragile composition conventions: the Artin action is a left
/// action, and `τ₁θ(σ_i)(X_i) = X_i ∧ X_{i+1}` with every other image zero
/// (and the mirrored statement for `σ_i⁻¹`).
pub fn convention_self_check() -> std::result::Result<(), String> {
    let m = 4;
    let a = BraidWord::from_signed(m, &[1, -2, 3]).map_err(|e| e.to_string())?;
    let b = BraidWord::from_signed(m, &[-3, 2, 2, -1]).map_err(|e| e.to_string())?;
    let ab = a.concat(&b).map_err(|e| e.to_string())?;
    for k in 1..=m {
        let x = FreeWord::generator(m, k).map_err(|e| e.to_string())?;
        let lhs = apply_artin(&ab, &x).map_err(|e| e.to_string())?;
        let rhs = apply_artin(&a, &apply_artin(&b, &x).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("Artin action is not a left action on x{k}"));
        }
    }
    for w in [&a, &b, &ab] {
        if tau1_unchecked(w) != tau1_by_words(w) {
            return Err(format!("truncated and word routes disagree on [{w}]"));
        }
    }
    for i in 1..m {
        let xi = HVector::basis(m, i).map_err(|e| e.to_string())?;
        let xj = HVector::basis(m, i + 1).map_err(|e| e.to_string())?;
        let wedge = Tensor2::wedge(&xi, &xj).map_err(|e| e.to_string())?;
        for (sign, hit) in [(1i64, i), (-1, i + 1)] {
            let word = BraidWord::from_signed(m, &[sign * i as i64]).map_err(|e| e.to_string())?;
            let t = tau1_unchecked(&word);
            for k in 1..=m {
                let expected = if k == hit { wedge.clone() } else { Tensor2::zero(m) };
                if t.images[k - 1] != expected {
                    return Err(format!(
                        "tau1 of generator {} disagrees at X{k}",
                        sign * i as i64
                    ));
                }
            }
        }
    }
    Ok(())
}

fn assert_conventions() {
    static CHECKED: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    if let Err(msg) = CHECKED.get_or_init(convention_self_check) {
        panic!("convention self-check failed: {msg}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::crossing_matrix;

    fn b(m: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, s).unwrap()
    }

    fn wedge(m: usize, i: usize, j: usize) -> Tensor2 {
        Tensor2::wedge(&HVector::basis(m, i).unwrap(), &HVector::basis(m, j).unwrap()).unwrap()
    }

    #[test]
    fn routes_agree() {
        for s in [&[][..], &[1, -2, 3, 3, -1, 2], &[-2, 1, 1, 2, 2, 2, -1, 2], &[4, -3, -3, 2, -1, 4, 1]] {
            let w = b(5, s);
            assert_eq!(tau1(&w), tau1_by_words(&w), "{s:?}");
        }
    }

    #[test]
    fn self_check_passes() {
        convention_self_check().unwrap();
    }

    #[test]
    fn generator_values() {
        for m in 2..=6 {
            for i in 1..m {
                let pos = tau1(&b(m, &[i as i64]));
                let neg = tau1(&b(m, &[-(i as i64)]));
                for k in 1..=m {
                    let zero = Tensor2::zero(m);
                    let w = wedge(m, i, i + 1);
                    assert_eq!(pos.image(k).unwrap(), if k == i { &w } else { &zero });
                    assert_eq!(neg.image(k).unwrap(), if k == i + 1 { &w } else { &zero });
                }
            }
        }
    }

    #[test]
    fn empty_braid_gives_zero() {
        assert!(tau1(&BraidWord::identity(3).unwrap()).is_zero());
        assert!(delta(&CrossingMatrix::zero(3)).is_zero());
    }

    #[test]
    fn delta_of_generator_matrix() {
        let m = 4;
        for j in 1..m {
            let d = delta(&crossing_matrix(&b(m, &[j as i64])));
            for i in 1..=m {
                let expected = if i == j { wedge(m, j, j + 1) } else { Tensor2::zero(m) };
                assert_eq!(d.image(i).unwrap(), &expected);
            }
        }
    }

    #[test]
    fn worked_example_satisfies_main_identity() {
        let word = BraidWord::parse(3, "-2 1 1 2 2 2 -1 2").unwrap();
        assert_eq!(tau1(&word), delta(&crossing_matrix(&word)));
    }

    #[test]
    fn recover_inverts_delta() {
        let c = CrossingMatrix::from_rows(&[vec![0, -1, 1], vec![0, 0, 1], vec![2, 1, 0]]).unwrap();
        assert_eq!(delta(&c).recover_matrix(), Some(c));
        let mut images = vec![Tensor2::zero(3); 3];
        images[0] = wedge(3, 2, 3);
        let not_delta = WedgeMap::from_images(images).unwrap();
        assert_eq!(not_delta.recover_matrix(), None);
    }

    #[test]
    fn from_images_rejects_symmetric_tensor() {
        let t = Tensor2::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(WedgeMap::from_images(vec![t.clone(), t]).is_err());
    }

    #[test]
    fn json_lists_upper_triangle() {
        let lift = lift_tau(&b(3, &[1]));
        let text = serde_json::to_string(&lift).unwrap();
        assert_eq!(
            text,
            r#"{"m":3,"tau1":[{"basis":"X1","wedge":[{"i":1,"j":2,"c":1}]},{"basis":"X2","wedge":[]},{"basis":"X3","wedge":[]}],"perm":[2,1,3]}"#
        );
    }
}
