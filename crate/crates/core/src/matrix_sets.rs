//! Which integer matrices are crossing matrices.
//!
//! With the crossing convention used here, a positive crossing of the strand
//! on the left (`a`) with the one on the right (`b`) is recorded at `(b, a)`.
//! In a permutation braid every pair `a < b` starts with `a` on the left and
//! crosses at most once, so its matrix is strictly *lower* triangular. The
//! triangularity conditions below are stated for that orientation:
//!
//! 1. `L_{ij} = 0` for `i ≤ j`;
//! 2. `L_{ij} ∈ {0, 1}`;
//! 3. for `i < j < k` and `p ∈ {0, 1}`, `L_{ji} = L_{kj} = p` implies `L_{ki} = p`.
//!
//! Condition 3 says the crossed pairs form the inversion set of a
//! permutation. `C(B_m)` is exactly the set of sums `M + L` with `M`
//! symmetric and `L` as above.

use crate::braid::{BraidWord, Letter};
use crate::crossing::CrossingMatrix;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::simple::pure_generator;

pub fn is_perm_braid_matrix(l: &CrossingMatrix) -> bool {
    let m = l.size();
    for i in 0..m {
        for j in 0..m {
            let v = l.at(i, j);
            if (i <= j && v != 0) || !(v == 0 || v == 1) {
                return false;
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let p = l.at(j, i);
                if l.at(k, j) == p && l.at(k, i) != p {
                    return false;
                }
            }
        }
    }
    true
}

/// The positive word obtained by bubbling the identity arrangement into
/// `p`, so that `|result| = p` and each pair of strands crosses at most once.
pub fn permutation_braid(p: &Permutation) -> Result<BraidWord> {
    let m = p.degree();
    // target position of each strand
    let target = p.inverse();
    let mut at: Vec<usize> = (0..m).collect();
    let mut letters = Vec::new();
    loop {
        let swap = (0..m.saturating_sub(1))
            .find(|&q| target.apply0(at[q]) > target.apply0(at[q + 1]));
        match swap {
            Some(q) => {
                at.swap(q, q + 1);
                letters.push(Letter::pos(q + 1));
            }
            None => break,
        }
    }
    let word = BraidWord::new(m, letters)?;
    debug_assert_eq!(&word.permutation(), p);
    Ok(word)
}

/// The lower-triangular part forced on any preimage of `a`:
/// `L_{ij} = A_{ij} − A_{ji}` for `i > j`.
pub fn triangular_candidate(a: &CrossingMatrix) -> CrossingMatrix {
    let m = a.size();
    let mut l = CrossingMatrix::zero(m);
    for i in 0..m {
        for j in 0..i {
            l.set(i, j, a.at(i, j) - a.at(j, i));
        }
    }
    l
}

pub fn is_in_image_c(a: &CrossingMatrix) -> bool {
    is_perm_braid_matrix(&triangular_candidate(a))
}

/// Symmetric, nonnegative, and `M_{ij} = M_{jk} = 0 ⇒ M_{ik} = 0` for
/// `i < j < k`.
pub fn satisfies_ppb_conditions(m: &CrossingMatrix) -> bool {
    let n = m.size();
    if !m.is_symmetric() || m.rows().iter().flatten().any(|&v| v < 0) {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if m.at(i, j) == 0 && m.at(j, k) == 0 && m.at(i, k) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// The permutation whose permutation braid has crossing matrix `l`.
pub fn permutation_of_matrix(l: &CrossingMatrix) -> Option<Permutation> {
    if !is_perm_braid_matrix(l) {
        return None;
    }
    let mut order: Vec<usize> = (0..l.size()).collect();
    // strand b > a ends left of a exactly when the pair crossed
    order.sort_by(|&a, &b| match (a < b, a > b) {
        (true, _) if l.at(b, a) == 1 => std::cmp::Ordering::Greater,
        (_, true) if l.at(a, b) == 1 => std::cmp::Ordering::Less,
        _ => a.cmp(&b),
    });
    Some(Permutation::from_zero_based(order))
}

/// Splits `C(β)` as `C(a) + C(π⁺)` with `a = β (π⁺)⁻¹` pure and `π = |β|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub pure_part: BraidWord,
    pub permutation_braid: BraidWord,
}

pub fn decompose(word: &BraidWord) -> Result<Decomposition> {
    let perm = permutation_braid(&word.permutation())?;
    Ok(Decomposition {
        pure_part: word.concat(&perm.inverse())?,
        permutation_braid: perm,
    })
}

/// A word with crossing matrix `a`, or `None` when `a` is outside `C(B_m)`.
///
/// Built as `∏ A_{ij}^{M_{ij}} · π⁺`, since `C(A_{ij})` is the symmetric
/// elementary matrix at `{i, j}`.
pub fn realize_crossing_matrix(a: &CrossingMatrix) -> Result<Option<BraidWord>> {
    let m = a.size();
    if m < 2 {
        return Err(Error::TooFewStrands(m));
    }
    let l = triangular_candidate(a);
    let Some(perm) = permutation_of_matrix(&l) else {
        return Ok(None);
    };
    let sym = a.sub(&l)?;
    let mut word = BraidWord::identity(m)?;
    for i in 0..m {
        for j in i + 1..m {
            let k = sym.at(i, j);
            if k != 0 {
                word = word.concat(&pure_generator(m, i + 1, j + 1)?.power(k))?;
            }
        }
    }
    Ok(Some(word.concat(&permutation_braid(&perm)?)?))
}
