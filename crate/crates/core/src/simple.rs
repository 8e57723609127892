//! Simple braids `σ_{i₀}^ε * w = w⁻¹ σ_{i₀}^ε w` and their cord invariant
//! `v(β) = ([γ̃_β], ε)`.
//!
//! The cord class is never computed from geometry. For `β` with `|β| = (i j)`
//! the crossing matrix determines it:
//!
//! * positive: `f_i(β) = [γ̃] + X_j`, `f_j(β) = −[γ̃]`
//! * negative: `f_i(β) = [γ̃]`, `f_j(β) = −[γ̃] − X_i`
//! * `k ≠ i, j`: `f_k(β) = (c_k − 1)(X_i − X_j)` if `i < k < j`, otherwise
//!   `c_k (X_i − X_j)`, where `c_k` is the `X_k` coefficient of `[γ̃]`.
//!
//! [`v_invariant`] reads `[γ̃]` off `f_i`; [`check_diving_formulas`] checks
//! every other column against the remaining identities.

use serde::Serialize;

use crate::braid::{BraidWord, Letter, Sign};
use crate::crossing::{crossing_with_permutation, CrossingMatrix, HVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleBraid {
    base: usize,
    sign: Sign,
    conjugator: BraidWord,
}

impl SimpleBraid {
    pub fn new(base: usize, sign: Sign, conjugator: BraidWord) -> Result<Self> {
        let m = conjugator.strands();
        if base == 0 || base >= m {
            return Err(Error::GeneratorOutOfRange { index: base, strands: m });
        }
        Ok(SimpleBraid {
            base,
            sign,
            conjugator,
        })
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    /// `w⁻¹ σ_{i₀}^ε w`.
    pub fn as_word(&self) -> BraidWord {
        let core = BraidWord::new(self.strands(), vec![Letter::new(self.base, self.sign)])
            .expect("base index validated on construction");
        core.conjugate(&self.conjugator)
            .expect("conjugator shares the strand count")
    }
}

/// `([γ̃_β], ε)` together with the transposition `(i j)`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CordClass {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
    /// Element of `⊕_{k≠i,j} Z·X_k`; slots `i` and `j` are zero.
    pub homology: HVector,
}

impl Serialize for CordClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            transposition: [usize; 2],
            sign: i64,
            homology: &'a HVector,
        }
        Json {
            transposition: [self.i, self.j],
            sign: self.sign.as_i64(),
            homology: &self.homology,
        }
        .serialize(s)
    }
}

pub fn v_invariant(braid: &SimpleBraid) -> Result<CordClass> {
    let (matrix, perm) = crossing_with_permutation(&braid.as_word());
    let (i, j) = perm.as_transposition().ok_or_else(|| {
        Error::NotSimple(format!("underlying permutation {perm} is not a transposition"))
    })?;
    cord_class_from_matrix(&matrix, i, j, braid.sign)
}

fn cord_class_from_matrix(matrix: &CrossingMatrix, i: usize, j: usize, sign: Sign) -> Result<CordClass> {
    let mut homology = matrix.column(i - 1);
    if sign == Sign::Pos {
        *homology.at_mut(j - 1) -= 1;
    }
    for slot in [i, j] {
        let c = homology.at(slot - 1);
        if c != 0 {
            return Err(Error::Inconsistent(format!(
                "coefficient of X{slot} in the cord class is {c}, expected 0"
            )));
        }
    }
    Ok(CordClass { i, j, sign, homology })
}

/// Outcome of [`check_diving_formulas`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaReport {
    pub class: CordClass,
    /// First identity that failed, if any.
    pub violation: Option<String>,
}

impl FormulaReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the `f_j` and `f_k` identities against the class read from `f_i`.
pub fn check_diving_formulas(braid: &SimpleBraid) -> Result<FormulaReport> {
    let class = v_invariant(braid)?;
    let (matrix, _) = crossing_with_permutation(&braid.as_word());
    let m = braid.strands();
    let (i, j) = (class.i, class.j);
    let h = &class.homology;
    let xi = HVector::basis(m, i)?;
    let xj = HVector::basis(m, j)?;

    let expected_fj = match class.sign {
        Sign::Pos => h.neg(),
        Sign::Neg => h.neg().sub(&xi)?,
    };
    let actual_fj = matrix.column(j - 1);
    let mut violation = (actual_fj != expected_fj)
        .then(|| format!("f_{j} = {actual_fj}, expected {expected_fj}"));

    if violation.is_none() {
        let transposition = xi.sub(&xj)?;
        for k in (1..=m).filter(|&k| k != i && k != j) {
            let c = h.at(k - 1);
            let factor = if i < k && k < j { c - 1 } else { c };
            let expected = transposition.scale(factor);
            let actual = matrix.column(k - 1);
            if actual != expected {
                violation = Some(format!("f_{k} = {actual}, expected {expected}"));
                break;
            }
        }
    }
    Ok(FormulaReport { class, violation })
}

/// `A_{rs} = σ_{s−1}⋯σ_{r+1} σ_r² σ_{r+1}⁻¹⋯σ_{s−1}⁻¹`, `r < s`.
pub fn pure_generator(strands: usize, r: usize, s: usize) -> Result<BraidWord> {
    if !(1 <= r && r < s && s <= strands) {
        return Err(Error::InvalidTarget(format!(
            "pure generator A({r},{s}) needs 1 <= r < s <= {strands}"
        )));
    }
    let down: Vec<Letter> = (r + 1..s).rev().map(Letter::pos).collect();
    let mut letters = down.clone();
    letters.extend([Letter::pos(r), Letter::pos(r)]);
    letters.extend(down.iter().rev().map(|l| l.inverse()));
    BraidWord::new(strands, letters)
}

/// Builds a simple braid with `v = (homology, sign)` and transposition
/// `(i j)`.
///
/// Starts from `σ_i * (σ_{i+1}⋯σ_{j−1})` and, for each `k ≠ i, j`, appends
/// powers of `A_{min(j,k), max(j,k)}` to the conjugator. Dragging the
/// endpoint `q_j` once around `q_k` shifts the cord class by `±X_k`
/// independently of the current cord; the sign is measured once per `k`.
/// The result is verified with [`v_invariant`] before returning.
pub fn construct_from_invariant(
    strands: usize,
    i: usize,
    j: usize,
    sign: Sign,
    homology: &HVector,
) -> Result<SimpleBraid> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    if !(1 <= i && i < j && j <= strands) {
        return Err(Error::InvalidTarget(format!(
            "transposition ({i} {j}) needs 1 <= i < j <= {strands}"
        )));
    }
    if homology.rank() != strands {
        return Err(Error::InvalidTarget(format!(
            "homology has rank {}, expected {strands}",
            homology.rank()
        )));
    }
    for slot in [i, j] {
        if homology.at(slot - 1) != 0 {
            return Err(Error::InvalidTarget(format!(
                "homology must vanish at X{slot}"
            )));
        }
    }

    let straight = BraidWord::new(strands, (i + 1..j).map(Letter::pos).collect())?;
    let start = SimpleBraid::new(i, sign, straight.clone())?;
    let start_class = v_invariant(&start)?.homology;

    let mut conjugator = straight;
    for k in (1..=strands).filter(|&k| k != i && k != j) {
        let needed = homology.at(k - 1) - start_class.at(k - 1);
        if needed == 0 {
            continue;
        }
        let bump = pure_generator(strands, k.min(j), k.max(j))?;
        let probe = SimpleBraid::new(i, sign, start.conjugator.concat(&bump)?)?;
        let shift = v_invariant(&probe)?.homology.sub(&start_class)?;
        let unit = HVector::basis(strands, k)?;
        let direction = if shift == unit {
            1
        } else if shift == unit.neg() {
            -1
        } else {
            return Err(Error::Inconsistent(format!(
                "winding around X{k} shifted the cord class by {shift}"
            )));
        };
        conjugator = conjugator.concat(&bump.power(needed * direction))?;
    }

    let braid = SimpleBraid::new(i, sign, conjugator)?;
    let class = v_invariant(&braid)?;
    if class.i != i || class.j != j || class.sign != sign || &class.homology != homology {
        return Err(Error::Inconsistent(format!(
            "constructed braid has class {} on ({} {}), expected {homology} on ({i} {j})",
            class.homology, class.i, class.j
        )));
    }
    Ok(braid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_strand_example() -> SimpleBraid {
        let w = BraidWord::from_signed(5, &[2, -3, -4, -4, -1, -1]).unwrap();
        SimpleBraid::new(1, Sign::Pos, w).unwrap()
    }

    #[test]
    fn example_in_b5() {
        let s = five_strand_example();
        assert_eq!(s.as_word().len(), 13);
        let class = v_invariant(&s).unwrap();
        assert_eq!((class.i, class.j), (1, 4));
        assert_eq!(class.sign, Sign::Pos);
        assert_eq!(class.homology, HVector::from_coeffs(vec![0, 2, 0, 0, -1]));
        assert!(check_diving_formulas(&s).unwrap().passed());
        assert_eq!(
            serde_json::to_string(&class).unwrap(),
            r#"{"transposition":[1,4],"sign":1,"homology":{"coeffs":[0,2,0,0,-1]}}"#
        );
    }

    #[test]
    fn standard_generators_have_straight_cords() {
        for m in 2..=6 {
            for i in 1..m {
                for sign in [Sign::Pos, Sign::Neg] {
                    let s = SimpleBraid::new(i, sign, BraidWord::identity(m).unwrap()).unwrap();
                    let class = v_invariant(&s).unwrap();
                    assert_eq!((class.i, class.j, class.sign), (i, i + 1, sign));
                    assert!(class.homology.is_zero());
                    assert!(check_diving_formulas(&s).unwrap().passed());
                    assert_eq!(s.as_word().exponent_sum(), sign.as_i64());
                }
            }
        }
    }

    #[test]
    fn trivial_conjugator_gives_single_letter() {
        let s = SimpleBraid::new(1, Sign::Pos, BraidWord::identity(3).unwrap()).unwrap();
        assert_eq!(s.as_word().signed(), vec![1]);
    }

    #[test]
    fn rejects_base_out_of_range() {
        assert!(SimpleBraid::new(3, Sign::Pos, BraidWord::identity(3).unwrap()).is_err());
        assert!(SimpleBraid::new(0, Sign::Pos, BraidWord::identity(3).unwrap()).is_err());
    }

    #[test]
    fn construct_reaches_example_target() {
        let target = HVector::from_coeffs(vec![0, 2, 0, 0, -1]);
        for sign in [Sign::Pos, Sign::Neg] {
            let s = construct_from_invariant(5, 1, 4, sign, &target).unwrap();
            let class = v_invariant(&s).unwrap();
            assert_eq!(class.homology, target);
            assert_eq!(class.sign, sign);
        }
    }

    #[test]
    fn construct_zero_target() {
        let s = construct_from_invariant(6, 2, 5, Sign::Pos, &HVector::zero(6)).unwrap();
        assert!(v_invariant(&s).unwrap().homology.is_zero());
    }

    #[test]
    fn construct_rejects_bad_targets() {
        let h = HVector::from_coeffs(vec![1, 0, 0, 0]);
        assert!(construct_from_invariant(4, 1, 3, Sign::Pos, &h).is_err());
        assert!(construct_from_invariant(4, 3, 2, Sign::Pos, &HVector::zero(4)).is_err());
        assert!(construct_from_invariant(4, 1, 5, Sign::Pos, &HVector::zero(4)).is_err());
        assert!(construct_from_invariant(4, 1, 2, Sign::Pos, &HVector::zero(3)).is_err());
    }

    #[test]
    fn pure_generator_is_pure() {
        for s in 2..=5 {
            for r in 1..s {
                let a = pure_generator(5, r, s).unwrap();
                assert!(a.permutation().is_identity());
                let c = crate::crossing::crossing_matrix(&a);
                assert_eq!(c.get(r, s).unwrap(), 1);
                assert_eq!(c.get(s, r).unwrap(), 1);
                assert_eq!(c.entry_sum(), 2);
            }
        }
    }

    #[test]
    fn nonzero_endpoint_slot_is_reported() {
        let c = CrossingMatrix::from_rows(&[vec![0, 0, 0], vec![5, 0, 0], vec![0, 0, 0]]).unwrap();
        assert!(matches!(
            cord_class_from_matrix(&c, 1, 2, Sign::Neg),
            Err(Error::Inconsistent(_))
        ));
    }
}
