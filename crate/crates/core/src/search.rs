//! Bounded search for positive pure braids with a prescribed crossing
//! matrix.
//!
//! Every positive letter adds 1 to exactly one entry, so candidate words
//! have length equal to the entry sum of the target. For a pair `a < b` the
//! crossings alternate between `(b, a)` (while uncrossed) and `(a, b)`
//! (while crossed), which gives an exact feasibility test per pair at every
//! node. Words that differ only by commuting far-apart letters are reported
//! once: a letter `σ_j` never directly follows `σ_i` when `j < i − 1`.

use rayon::prelude::*;

use crate::braid::{BraidWord, Letter};
use crate::crossing::CrossingMatrix;
use crate::error::{Error, Result};
use crate::matrix_sets::satisfies_ppb_conditions;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchLimit {
    AtMost(usize),
    Unbounded,
}

impl Default for SearchLimit {
    fn default() -> Self {
        SearchLimit::AtMost(1)
    }
}

impl SearchLimit {
    fn reached(self, found: usize) -> bool {
        matches!(self, SearchLimit::AtMost(n) if found >= n)
    }
}

/// Positive pure braids with crossing matrix `target`, in lexicographic
/// order of their integer words.
pub fn search_positive_pure_realizations(
    target: &CrossingMatrix,
    limit: SearchLimit,
) -> Result<Vec<BraidWord>> {
    if limit == SearchLimit::AtMost(0) {
        return Err(Error::SearchRejected("limit must be positive".into()));
    }
    if !satisfies_ppb_conditions(target) {
        return Err(Error::SearchRejected(
            "matrix must be symmetric, nonnegative and closed under M_ij = M_jk = 0 => M_ik = 0".into(),
        ));
    }
    run(target, limit, true)
}

pub(crate) fn run(target: &CrossingMatrix, limit: SearchLimit, canonical: bool) -> Result<Vec<BraidWord>> {
    let m = target.size();
    if m < 2 {
        return Err(Error::TooFewStrands(m));
    }
    let total = target.entry_sum();
    if total < 0 {
        return Ok(Vec::new());
    }
    let state = State::new(target, total as usize, canonical);
    if state.remaining == 0 {
        return Ok(vec![BraidWord::identity(m)?]);
    }
    let branches: Vec<Vec<Vec<usize>>> = (1..m)
        .into_par_iter()
        .map(|first| {
            let mut s = state.clone();
            let mut out = Vec::new();
            if s.try_push(first) {
                s.dfs(limit, &mut out);
            }
            out
        })
        .collect();
    let mut words = Vec::new();
    for found in branches.into_iter().flatten() {
        if limit.reached(words.len()) {
            break;
        }
        words.push(found);
    }
    words
        .into_iter()
        .map(|w| BraidWord::new(m, w.into_iter().map(Letter::pos).collect()))
        .collect()
}

#[derive(Clone)]
struct State {
    m: usize,
    canonical: bool,
    /// Crossings still owed, indexed like the matrix.
    need: Vec<i64>,
    at: Vec<usize>,
    word: Vec<usize>,
    remaining: usize,
}

impl State {
    fn new(target: &CrossingMatrix, remaining: usize, canonical: bool) -> Self {
        let m = target.size();
        State {
            m,
            canonical,
            need: target.rows().concat(),
            at: (0..m).collect(),
            word: Vec::with_capacity(remaining),
            remaining,
        }
    }

    /// Whether strands `a < b` can still finish uncrossed with the
    /// crossings they owe.
    fn pair_feasible(&self, a: usize, b: usize) -> bool {
        let lower = self.need[b * self.m + a];
        let upper = self.need[a * self.m + b];
        let crossed = self.at.iter().position(|&s| s == b) < self.at.iter().position(|&s| s == a);
        if crossed {
            upper == lower + 1
        } else {
            upper == lower
        }
    }

    /// Appends `σ_p`; returns false (leaving the state unchanged) if the
    /// result can no longer reach the target.
    fn try_push(&mut self, p: usize) -> bool {
        if self.canonical {
            if let Some(&last) = self.word.last() {
                if p + 1 < last {
                    return false;
                }
            }
        }
        let (left, right) = (self.at[p - 1], self.at[p]);
        let slot = right * self.m + left;
        if self.need[slot] == 0 {
            return false;
        }
        self.need[slot] -= 1;
        self.at.swap(p - 1, p);
        if !self.pair_feasible(left.min(right), left.max(right)) {
            self.at.swap(p - 1, p);
            self.need[slot] += 1;
            return false;
        }
        self.word.push(p);
        self.remaining -= 1;
        true
    }

    fn pop(&mut self) {
        let p = self.word.pop().expect("pop on empty word");
        self.at.swap(p - 1, p);
        let (left, right) = (self.at[p - 1], self.at[p]);
        self.need[right * self.m + left] += 1;
        self.remaining += 1;
    }

    fn dfs(&mut self, limit: SearchLimit, out: &mut Vec<Vec<usize>>) {
        if limit.reached(out.len()) {
            return;
        }
        if self.remaining == 0 {
            if self.at.iter().enumerate().all(|(q, &s)| q == s) {
                out.push(self.word.clone());
            }
            return;
        }
        for p in 1..self.m {
            if self.try_push(p) {
                self.dfs(limit, out);
                self.pop();
                if limit.reached(out.len()) {
                    return;
                }
            }
        }
    }
}
