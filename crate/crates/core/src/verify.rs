//! A seeded randomized property suite over the whole library.
//!
//! Each case draws from its own stream `(check << 32) | case`, so the
//! results depend only on `(seed, cases)` and not on thread scheduling.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::crossing::{crossing_matrix, lift_crossing, HVector};
use crate::group::GroupElement;
use crate::hurwitz::apply_moves;
use crate::johnson::{delta, lift_tau, tau1, convention_self_check};
use crate::magnus::{magnus, Tensor2};
use crate::matrix_sets::{decompose, is_in_image_c};
use crate::sample::{
    random_free_word, random_hurwitz_moves, random_simple_braid, random_word, seeded,
};
use crate::simple::{check_diving_formulas, construct_from_invariant, v_invariant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Case = fn(&mut ChaCha8Rng) -> Result<(), String>;

const CHECKS: &[(&str, Case)] = &[
    ("tau1 equals delta of C", main_identity),
    ("C crossed homomorphism", crossing_crossed_hom),
    ("tau1 crossed homomorphism", tau_crossed_hom),
    ("braid relations", braid_relations),
    ("theta2 conjugation", theta2_conjugation),
    ("simple braid diving formulas", diving_formulas),
    ("cord class round trip", cord_round_trip),
    ("image of C", image_of_c),
    ("Hurwitz equivariance", hurwitz_equivariance),
];

pub fn check_names() -> Vec<&'static str> {
    std::iter::once("convention self-check")
        .chain(CHECKS.iter().map(|(name, _)| *name))
        .collect()
}

pub fn run_suite(seed: u64, cases: usize) -> Vec<CheckOutcome> {
    let mut out = vec![CheckOutcome {
        name: "convention self-check",
        cases: 1,
        failures: usize::from(convention_self_check().is_err()),
        first_failure: convention_self_check().err(),
    }];
    for (index, &(name, case)) in CHECKS.iter().enumerate() {
        let errors: Vec<String> = (0..cases)
            .into_par_iter()
            .filter_map(|n| {
                let mut rng = seeded(seed, ((index as u64) << 32) | n as u64);
                case(&mut rng).err().map(|e| format!("case {n}: {e}"))
            })
            .collect();
        out.push(CheckOutcome {
            name,
            cases,
            failures: errors.len(),
            first_failure: errors.into_iter().next(),
        });
    }
    out
}

fn strands(rng: &mut ChaCha8Rng, max: usize) -> usize {
    rng.gen_range(2..=max)
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, left: T, right: T) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left:?} != {right:?}"))
    }
}

fn main_identity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 6);
    let w = random_word(rng, m, 40);
    expect(&format!("[{w}]"), tau1(&w), delta(&crossing_matrix(&w)))
}

fn crossing_crossed_hom(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 6);
    let (a, b) = (random_word(rng, m, 30), random_word(rng, m, 30));
    let ab = a.concat(&b).map_err(|e| e.to_string())?;
    let rhs = crossing_matrix(&a)
        .add(&crossing_matrix(&b).act(&a.permutation()).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    expect(&format!("[{a}] [{b}]"), crossing_matrix(&ab), rhs)
}

fn tau_crossed_hom(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 6);
    let (a, b) = (random_word(rng, m, 20), random_word(rng, m, 20));
    let ab = a.concat(&b).map_err(|e| e.to_string())?;
    let rhs = lift_tau(&a).compose(&lift_tau(&b)).map_err(|e| e.to_string())?;
    expect(&format!("[{a}] [{b}]"), lift_tau(&ab), rhs)
}

fn braid_relations(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 8).max(3);
    let i = rng.gen_range(1..m - 1) as i64;
    let (lhs, rhs) = if m >= 4 && rng.gen() {
        let j = rng.gen_range(1..m) as i64;
        if (i - j).abs() < 2 {
            (vec![i, i + 1, i], vec![i + 1, i, i + 1])
        } else {
            (vec![i, j], vec![j, i])
        }
    } else {
        (vec![i, i + 1, i], vec![i + 1, i, i + 1])
    };
    let u = random_word(rng, m, 10);
    let v = random_word(rng, m, 10);
    let wrap = |core: &[i64]| -> Result<BraidWord, String> {
        let core = BraidWord::from_signed(m, core).map_err(|e| e.to_string())?;
        u.concat(&core).and_then(|x| x.concat(&v)).map_err(|e| e.to_string())
    };
    let (l, r) = (wrap(&lhs)?, wrap(&rhs)?);
    expect("C", crossing_matrix(&l), crossing_matrix(&r))?;
    expect("tau1", tau1(&l), tau1(&r))
}

fn theta2_conjugation(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let rank = rng.gen_range(1..=6);
    let x = random_free_word(rng, rank, 20);
    let y = random_free_word(rng, rank, 20);
    let conj = y.invert().multiply(&x).and_then(|t| t.multiply(&y)).map_err(|e| e.to_string())?;
    let (ax, ay) = (x.abelianize(), y.abelianize());
    let correction = Tensor2::wedge(&ax, &ay).map_err(|e| e.to_string())?;
    let rhs = magnus(&x).deg2.add(&correction).map_err(|e| e.to_string())?;
    expect(&format!("x = {x}, y = {y}"), magnus(&conj).deg2, rhs)
}

fn diving_formulas(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 7);
    let b = random_simple_braid(rng, m, 30);
    let report = check_diving_formulas(&b).map_err(|e| e.to_string())?;
    match report.violation {
        None => Ok(()),
        Some(v) => Err(format!("[{}]: {v}", b.as_word())),
    }
}

fn cord_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 6).max(3);
    let i = rng.gen_range(1..m);
    let j = rng.gen_range(i + 1..=m);
    let sign = if rng.gen() { crate::Sign::Pos } else { crate::Sign::Neg };
    let coeffs = (1..=m)
        .map(|k| if k == i || k == j { 0 } else { rng.gen_range(-3..=3) })
        .collect();
    let target = HVector::from_coeffs(coeffs);
    let built = construct_from_invariant(m, i, j, sign, &target).map_err(|e| e.to_string())?;
    let class = v_invariant(&built).map_err(|e| e.to_string())?;
    expect("class", (class.i, class.j, class.sign, class.homology), (i, j, sign, target))
}

fn image_of_c(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 6);
    let w = random_word(rng, m, 40);
    let c = crossing_matrix(&w);
    if !is_in_image_c(&c) {
        return Err(format!("C([{w}]) rejected"));
    }
    let d = decompose(&w).map_err(|e| e.to_string())?;
    let pure = crossing_matrix(&d.pure_part);
    if !d.pure_part.permutation().is_identity() || !pure.is_symmetric() {
        return Err(format!("pure part of [{w}] is not pure"));
    }
    let sum = pure.add(&crossing_matrix(&d.permutation_braid)).map_err(|e| e.to_string())?;
    expect(&format!("[{w}]"), sum, c)
}

fn hurwitz_equivariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = strands(rng, 5);
    let n = rng.gen_range(2..=4);
    let tuple: Vec<BraidWord> = (0..n).map(|_| random_word(rng, m, 4)).collect();
    let moves = random_hurwitz_moves(rng, n, 6);
    let moved = apply_moves(&tuple, &moves).map_err(|e| e.to_string())?;
    let lifted: Vec<_> = tuple.iter().map(lift_tau).collect();
    let moved_lifts = apply_moves(&lifted, &moves).map_err(|e| e.to_string())?;
    expect("tau lifts", moved.iter().map(lift_tau).collect::<Vec<_>>(), moved_lifts)?;
    let crossing: Vec<_> = tuple.iter().map(lift_crossing).collect();
    expect(
        "crossing lifts",
        moved.iter().map(lift_crossing).collect::<Vec<_>>(),
        apply_moves(&crossing, &moves).map_err(|e| e.to_string())?,
    )
}
