//! The Hurwitz action of `B_n` on `n`-tuples, by conjugation.
//!
//! Move `p` with direction `+1` sends `(.., a_p, a_{p+1}, ..)` to
//! `(.., a_{p+1}, a_{p+1}⁻¹ a_p a_{p+1}, ..)`; direction `-1` is the inverse
//! move `(.., a_p a_{p+1} a_p⁻¹, a_p, ..)`. Works on raw braid words and on
//! any [`GroupElement`], such as a semidirect-product image, so the two can be compared entry by entry.

use std::fmt;
use std::str::FromStr;

use crate::braid::Sign;
use crate::error::{Error, Result};
use crate::group::GroupElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HurwitzMove {
    /// 1-based; swaps entries `position` and `position + 1`.
    pub position: usize,
    pub direction: Sign,
}

impl HurwitzMove {
    pub fn new(position: usize, direction: Sign) -> Self {
        HurwitzMove { position, direction }
    }

    pub fn inverse(self) -> Self {
        HurwitzMove::new(self.position, -self.direction)
    }

    /// Parses `"1 -2 3"`: `p` is a forward move at `p`, `-p` its inverse.
    pub fn parse_list(text: &str) -> Result<Vec<HurwitzMove>> {
        text.split_whitespace()
            .enumerate()
            .map(|(n, token)| {
                let value: i64 = token
                    .parse()
                    .map_err(|_| Error::parse(n + 1, token, "expected nonzero integer"))?;
                let direction = match value.signum() {
                    1 => Sign::Pos,
                    -1 => Sign::Neg,
                    _ => return Err(Error::parse(n + 1, token, "zero is not a move")),
                };
                Ok(HurwitzMove::new(value.unsigned_abs() as usize, direction))
            })
            .collect()
    }
}

impl fmt::Display for HurwitzMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.position as i64 * self.direction.as_i64())
    }
}

impl FromStr for HurwitzMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match HurwitzMove::parse_list(s)?.as_slice() {
            [single] => Ok(*single),
            _ => Err(Error::parse(1, s, "expected exactly one move")),
        }
    }
}

/// One move on any tuple of group elements.
pub fn hurwitz_move<G: GroupElement>(tuple: &[G], mv: HurwitzMove) -> Result<Vec<G>> {
    if mv.position == 0 || mv.position + 1 > tuple.len() {
        return Err(Error::IndexOutOfRange {
            index: mv.position,
            size: tuple.len().saturating_sub(1),
        });
    }
    let p = mv.position - 1;
    let (a, b) = (&tuple[p], &tuple[p + 1]);
    let (left, right) = match mv.direction {
        Sign::Pos => (b.clone(), a.conjugate(b)?),
        Sign::Neg => (b.conjugate(&a.inverse())?, a.clone()),
    };
    let mut out = tuple.to_vec();
    out[p] = left;
    out[p + 1] = right;
    Ok(out)
}

pub fn apply_moves<G: GroupElement>(tuple: &[G], moves: &[HurwitzMove]) -> Result<Vec<G>> {
    moves
        .iter()
        .try_fold(tuple.to_vec(), |t, &mv| hurwitz_move(&t, mv))
}

/// Ordered product `a_1 ⋯ a_n`.
pub fn product<G: GroupElement>(size: usize, tuple: &[G]) -> Result<G> {
    tuple
        .iter()
        .try_fold(G::identity(size)?, |acc, g| acc.compose(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::crossing::lift_crossing;
    use crate::johnson::lift_tau;

    fn b(m: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, s).unwrap()
    }

    #[test]
    fn forward_move_unrolled() {
        let t = vec![b(3, &[1]), b(3, &[2])];
        let out = hurwitz_move(&t, HurwitzMove::new(1, Sign::Pos)).unwrap();
        assert_eq!(out[0], b(3, &[2]));
        assert_eq!(out[1], b(3, &[-2, 1, 2]));
    }

    #[test]
    fn move_then_inverse_restores_invariants() {
        let t = vec![b(4, &[1, -2]), b(4, &[3]), b(4, &[-1, 2, 2])];
        for p in 1..=2 {
            for dir in [Sign::Pos, Sign::Neg] {
                let mv = HurwitzMove::new(p, dir);
                let back = apply_moves(&t, &[mv, mv.inverse()]).unwrap();
                for (x, y) in t.iter().zip(&back) {
                    assert_eq!(lift_crossing(x), lift_crossing(y));
                    assert_eq!(lift_tau(x), lift_tau(y));
                }
            }
        }
    }

    #[test]
    fn out_of_range_moves() {
        let t = vec![b(3, &[1]), b(3, &[2])];
        assert!(hurwitz_move(&t, HurwitzMove::new(0, Sign::Pos)).is_err());
        assert!(hurwitz_move(&t, HurwitzMove::new(2, Sign::Pos)).is_err());
        assert!(hurwitz_move(&[b(3, &[1]), b(4, &[1])], HurwitzMove::new(1, Sign::Pos)).is_err());
    }

    #[test]
    fn parse_moves() {
        let moves = HurwitzMove::parse_list("1 -2 3").unwrap();
        assert_eq!(
            moves,
            vec![
                HurwitzMove::new(1, Sign::Pos),
                HurwitzMove::new(2, Sign::Neg),
                HurwitzMove::new(3, Sign::Pos)
            ]
        );
        assert!(HurwitzMove::parse_list("1 0").is_err());
        assert_eq!("-2".parse::<HurwitzMove>().unwrap().to_string(), "-2");
    }

    #[test]
    fn product_is_preserved() {
        let t = vec![b(3, &[1]), b(3, &[2, 2, -1]), b(3, &[-2])];
        let moves = HurwitzMove::parse_list("1 2 -1 2").unwrap();
        let before: Vec<_> = t.iter().map(lift_tau).collect();
        let after: Vec<_> = apply_moves(&t, &moves).unwrap().iter().map(lift_tau).collect();
        assert_eq!(
            product(3, &before).unwrap(),
            product(3, &after).unwrap()
        );
    }
}
