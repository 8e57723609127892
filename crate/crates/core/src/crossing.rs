//! Crossing matrices and the diving combinatorial information `f_i`.
//!
//! Entry `(i, j)` of `C(β)` is the signed number of crossings where the
//! strand starting at `i` passes over the strand starting at `j`. The
//! convention is pinned by two facts: `C(σ_j)` has a single `1` at
//! `(j+1, j)`, and `C(σ_2⁻¹σ_1²σ_2³σ_1⁻¹σ_2) = [[0,-1,1],[0,0,1],[2,1,0]]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Sign, StrandTracker};
use crate::error::{checked_add, checked_mul, checked_neg, checked_sub, ensure_same_size, Error, Result};
use crate::permutation::Permutation;
use crate::group::GroupElement;

/// An element `Σ c_k X_k` of `H = Z^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HVector {
    coeffs: Vec<i64>,
}

impl HVector {
    pub fn zero(rank: usize) -> Self {
        HVector {
            coeffs: vec![0; rank],
        }
    }

    /// The basis vector `X_k`, 1-based.
    pub fn basis(rank: usize, k: usize) -> Result<Self> {
        if k == 0 || k > rank {
            return Err(Error::IndexOutOfRange {
                index: k,
                size: rank,
            });
        }
        let mut v = Self::zero(rank);
        v.coeffs[k - 1] = 1;
        Ok(v)
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        HVector { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `X_k`, 1-based.
    pub fn get(&self, k: usize) -> Result<i64> {
        self.coeffs
            .get(k.wrapping_sub(1))
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: k,
                size: self.rank(),
            })
    }

    #[inline]
    pub(crate) fn at(&self, k: usize) -> i64 {
        self.coeffs[k]
    }

    pub(crate) fn at_mut(&mut self, k: usize) -> &mut i64 {
        &mut self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &HVector) -> Result<HVector> {
        ensure_same_size(self.rank(), other.rank())?;
        Ok(HVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| checked_add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &HVector) -> Result<HVector> {
        ensure_same_size(self.rank(), other.rank())?;
        Ok(HVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| checked_sub(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> HVector {
        self.scale(-1)
    }

    pub fn scale(&self, factor: i64) -> HVector {
        HVector {
            coeffs: self.coeffs.iter().map(|&c| checked_mul(c, factor)).collect(),
        }
    }

    /// The `S_m` action `π(X_k) = X_{π(k)}`.
    pub fn permute(&self, p: &Permutation) -> Result<HVector> {
        ensure_same_size(self.rank(), p.degree())?;
        let mut out = vec![0; self.rank()];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[p.apply0(k)] = c;
        }
        Ok(HVector { coeffs: out })
    }
}

impl fmt::Display for HVector {
    /// Human form such as `2X2 - X5`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            write!(f, "X{}", k + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// An element of `Mat⁰_m`: an `m×m` integer matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct CrossingMatrix {
    size: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    m: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<MatrixJson> for CrossingMatrix {
    type Error = Error;

    fn try_from(json: MatrixJson) -> Result<Self> {
        if json.rows.len() != json.m {
            return Err(Error::InvalidMatrix(format!(
                "m = {} but {} rows given",
                json.m,
                json.rows.len()
            )));
        }
        CrossingMatrix::from_rows(&json.rows)
    }
}

impl From<CrossingMatrix> for MatrixJson {
    fn from(matrix: CrossingMatrix) -> Self {
        MatrixJson {
            m: matrix.size,
            rows: matrix.rows(),
        }
    }
}

impl CrossingMatrix {
    pub fn zero(size: usize) -> Self {
        CrossingMatrix {
            size,
            entries: vec![0; size * size],
        }
    }

    /// Validates squareness and the zero diagonal.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {size}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != 0 {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry ({0},{0}) is {1}, expected 0",
                    i + 1,
                    row[i]
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(CrossingMatrix { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Result<i64> {
        for k in [i, j] {
            if k == 0 || k > self.size {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    size: self.size,
                });
            }
        }
        Ok(self.at(i - 1, j - 1))
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    #[inline]
    fn bump(&mut self, i: usize, j: usize, by: i64) {
        let slot = &mut self.entries[i * self.size + j];
        *slot = checked_add(*slot, by);
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: i64) {
        debug_assert!(i != j || value == 0);
        self.entries[i * self.size + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.size.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn add(&self, other: &CrossingMatrix) -> Result<CrossingMatrix> {
        ensure_same_size(self.size, other.size)?;
        Ok(CrossingMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| checked_add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &CrossingMatrix) -> Result<CrossingMatrix> {
        ensure_same_size(self.size, other.size)?;
        Ok(CrossingMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| checked_sub(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> CrossingMatrix {
        CrossingMatrix {
            size: self.size,
            entries: self.entries.iter().map(|&a| checked_neg(a)).collect(),
        }
    }

    pub fn transpose(&self) -> CrossingMatrix {
        let mut out = CrossingMatrix::zero(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn entry_sum(&self) -> i64 {
        self.entries.iter().fold(0, |acc, &a| checked_add(acc, a))
    }

    /// `π(M)` with `π(M)_{ij} = M_{π⁻¹(i) π⁻¹(j)}`; a left `S_m` action.
    pub fn act(&self, p: &Permutation) -> Result<CrossingMatrix> {
        ensure_same_size(self.size, p.degree())?;
        let mut out = CrossingMatrix::zero(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(p.apply0(i), p.apply0(j), self.at(i, j));
            }
        }
        Ok(out)
    }

    /// `f_i(M) = Σ_k M_{ki} X_k`: column `i` read as an element of `H`.
    pub fn diving(&self, i: usize) -> Result<HVector> {
        if i == 0 || i > self.size {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.size,
            });
        }
        Ok(self.column(i - 1))
    }

    pub(crate) fn column(&self, i: usize) -> HVector {
        HVector::from_coeffs((0..self.size).map(|k| self.at(k, i)).collect())
    }
}

impl fmt::Display for CrossingMatrix {
    /// Right-aligned table, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|a| a.to_string().len())
            .max()
            .unwrap_or(1);
        for (n, row) in self.rows().iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|a| format!("{a:>width$}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// `C(β)` via a strand tracker.
///
/// For a letter `σ_p^ε` with strands `a` (position `p`) and `b` (position
/// `p+1`): a positive letter adds `+1` at `(b, a)`, a negative one adds `-1`
/// at `(a, b)`; then the two strands swap.
pub fn crossing_matrix(word: &BraidWord) -> CrossingMatrix {
    crossing_with_permutation(word).0
}

pub(crate) fn crossing_with_permutation(word: &BraidWord) -> (CrossingMatrix, Permutation) {
    let mut matrix = CrossingMatrix::zero(word.strands());
    let mut tracker = StrandTracker::new(word.strands());
    for &letter in word.letters() {
        let (a, b) = tracker.cross(letter);
        match letter.sign {
            Sign::Pos => matrix.bump(b, a, 1),
            Sign::Neg => matrix.bump(a, b, -1),
        }
    }
    (matrix, tracker.into_permutation())
}

/// `f_i(β)`, the `i`-th diving combinatorial information.
pub fn diving_info(word: &BraidWord, i: usize) -> Result<HVector> {
    crossing_matrix(word).diving(i)
}

/// `(C(β), |β|)` in `Mat⁰_m ⋊ S_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingLift {
    pub matrix: CrossingMatrix,
    pub perm: Permutation,
}

pub fn lift_crossing(word: &BraidWord) -> CrossingLift {
    let (matrix, perm) = crossing_with_permutation(word);
    CrossingLift { matrix, perm }
}

impl GroupElement for CrossingLift {
    fn identity(size: usize) -> Result<Self> {
        Ok(CrossingLift {
            matrix: CrossingMatrix::zero(size),
            perm: Permutation::identity(size),
        })
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        Ok(CrossingLift {
            matrix: self.matrix.add(&other.matrix.act(&self.perm)?)?,
            perm: self.perm.compose(&other.perm)?,
        })
    }

    fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let matrix = self
            .matrix
            .act(&inv)
            .expect("lift components share one size")
            .neg();
        CrossingLift { matrix, perm: inv }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, s).unwrap()
    }

    #[test]
    fn generator_has_single_subdiagonal_one() {
        for m in 2..=6 {
            for j in 1..m {
                let c = crossing_matrix(&w(m, &[j as i64]));
                for a in 1..=m {
                    for b in 1..=m {
                        let expected = i64::from(a == j + 1 && b == j);
                        assert_eq!(c.get(a, b).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn worked_example_matrix() {
        let c = crossing_matrix(&BraidWord::parse(3, "-2 1 1 2 2 2 -1 2").unwrap());
        assert_eq!(c.rows(), vec![vec![0, -1, 1], vec![0, 0, 1], vec![2, 1, 0]]);
    }

    #[test]
    fn empty_word_has_zero_matrix() {
        assert!(crossing_matrix(&BraidWord::identity(4).unwrap()).is_zero());
    }

    #[test]
    fn diving_of_generator() {
        let m = 5;
        for i in 1..m {
            let word = w(m, &[i as i64]);
            for k in 1..=m {
                let f = diving_info(&word, k).unwrap();
                let expected = if k == i {
                    HVector::basis(m, i + 1).unwrap()
                } else {
                    HVector::zero(m)
                };
                assert_eq!(f, expected);
            }
        }
        assert!(diving_info(&w(3, &[1]), 4).is_err());
        assert!(diving_info(&w(3, &[1]), 0).is_err());
    }

    #[test]
    fn act_identity_and_size_mismatch() {
        let c = crossing_matrix(&w(3, &[-2, 1, 1, 2]));
        assert_eq!(c.act(&Permutation::identity(3)).unwrap(), c);
        assert!(c.act(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn crossed_hom_on_every_split_of_worked_example() {
        let word = BraidWord::parse(3, "-2 1 1 2 2 2 -1 2").unwrap();
        let full = crossing_matrix(&word);
        for cut in 0..=word.len() {
            let a = BraidWord::new(3, word.letters()[..cut].to_vec()).unwrap();
            let b = BraidWord::new(3, word.letters()[cut..].to_vec()).unwrap();
            let rhs = crossing_matrix(&a)
                .add(&crossing_matrix(&b).act(&a.permutation()).unwrap())
                .unwrap();
            assert_eq!(full, rhs, "split at {cut}");
        }
    }

    #[test]
    fn word_times_inverse_vanishes() {
        let word = BraidWord::parse(3, "-2 1 1 2 2 2 -1 2").unwrap();
        let ww = word.concat(&word.inverse()).unwrap();
        assert!(crossing_matrix(&ww).is_zero());
        assert!(ww.permutation().is_identity());
        let lift = lift_crossing(&word);
        assert_eq!(
            lift.compose(&lift_crossing(&word.inverse())).unwrap(),
            CrossingLift::identity(3).unwrap()
        );
        assert_eq!(lift.inverse(), lift_crossing(&word.inverse()));
    }

    #[test]
    fn json_shape() {
        let c = crossing_matrix(&BraidWord::parse(3, "-2 1 1 2 2 2 -1 2").unwrap());
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"m":3,"rows":[[0,-1,1],[0,0,1],[2,1,0]]}"#);
        let back: CrossingMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        let h = HVector::from_coeffs(vec![0, 2, 0, 0, -1]);
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"coeffs":[0,2,0,0,-1]}"#);
    }

    #[test]
    fn json_rejects_nonzero_diagonal_and_ragged_rows() {
        assert!(serde_json::from_str::<CrossingMatrix>(r#"{"m":2,"rows":[[1,0],[0,0]]}"#).is_err());
        assert!(serde_json::from_str::<CrossingMatrix>(r#"{"m":2,"rows":[[0,0,0],[0,0]]}"#).is_err());
        assert!(serde_json::from_str::<CrossingMatrix>(r#"{"m":3,"rows":[[0,0],[0,0]]}"#).is_err());
    }

    #[test]
    fn hvector_display() {
        assert_eq!(HVector::from_coeffs(vec![0, 2, 0, 0, -1]).to_string(), "2X2 - X5");
        assert_eq!(HVector::from_coeffs(vec![-1, 0, 3]).to_string(), "-X1 + 3X3");
        assert_eq!(HVector::zero(3).to_string(), "0");
    }
}
