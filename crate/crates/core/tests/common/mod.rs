//! Strategies and checks shared by the property suite and the acceptance
//! target.

#![allow(dead_code)]

use flopcalc_core::chars::{
    cauchy_exterior, decompose, dualize, exterior_power, schur_dim, tensor, torus_weights,
    Character,
};
use flopcalc_core::resolution::{BundleTerm, GradedTermList};
use flopcalc_core::Weight;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 256;

pub fn w(p: &[i32]) -> Weight {
    Weight::new(p.to_vec()).unwrap()
}

/// A dominant weight of `GL_rank` with parts in `[lo, hi]`.
pub fn weight(rank: usize, lo: i32, hi: i32) -> impl Strategy<Value = Weight> {
    prop::collection::vec(lo..=hi, rank).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight::new(v).unwrap()
    })
}

/// A genuine character of `GL_rank`: one to three irreducibles with small
/// multiplicities.
pub fn character(rank: usize) -> impl Strategy<Value = Character> {
    prop::collection::vec((weight(rank, -2, 2), 1i64..=2), 1..=3).prop_map(move |ts| {
        Character::from_terms(vec![rank], ts.into_iter().map(|(w, m)| (vec![w], m))).unwrap()
    })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn check_round_trip(wt: &Weight) -> Result<(), TestCaseError> {
    let tw = torus_weights(wt);
    ensure(tw.cardinality() == schur_dim(wt) as i64, || format!("cardinality of {wt}"))?;
    let back = decompose(&tw).map_err(|e| TestCaseError::fail(e.to_string()))?;
    ensure(back == Character::gl(wt.clone()), || format!("decompose∘torus at {wt}"))
}

pub fn check_tensor(a: &Character, b: &Character, c: &Character) -> Result<(), TestCaseError> {
    let t = |x: &Character, y: &Character| tensor(x, y).unwrap();
    ensure(t(a, b) == t(b, a), || format!("commutativity for {a}, {b}"))?;
    ensure(t(&t(a, b), c) == t(a, &t(b, c)), || {
        format!("associativity for {a}, {b}, {c}")
    })?;
    ensure(t(a, b).dim() == a.dim() * b.dim(), || format!("dimension of {a} ⊗ {b}"))?;
    ensure(dualize(&dualize(a)) == *a, || format!("double dual of {a}"))?;
    ensure(dualize(&t(a, b)) == t(&dualize(a), &dualize(b)), || {
        format!("dual of {a} ⊗ {b}")
    })
}

/// `Λ^m(A ⊗ B)` for the standard representations of `GL_k × GL_d`, against
/// the Cauchy summands; the total dimension over all `m` is `2^{kd}`.
pub fn check_cauchy(k: usize, d: usize, m: usize) -> Result<(), TestCaseError> {
    let a = Character::gl(Weight::standard(k));
    let b = Character::gl(Weight::standard(d));
    let ab = a.outer(&b);
    let got = exterior_power(m, &ab).unwrap();
    let want = Character::from_terms(
        vec![k, d],
        cauchy_exterior(m, k, d)
            .into_iter()
            .map(|(x, y)| (vec![x, y], 1)),
    )
    .unwrap();
    ensure(got == want, || format!("Λ^{m} of GL_{k}×GL_{d}"))?;
    let total: i64 = (0..=k * d)
        .map(|j| exterior_power(j, &ab).unwrap().dim())
        .sum();
    ensure(total == 1 << (k * d), || format!("Σ dim Λ^j for {k}×{d}"))
}

pub fn term_list(ranks: Vec<usize>, terms: Vec<(Vec<Weight>, i32, i32)>) -> GradedTermList {
    let mut l = GradedTermList::new("random", ranks);
    for (full, h, r) in terms {
        l.push(BundleTerm::new(full, h, r)).unwrap();
    }
    l
}

/// A nonempty term list on `GL_2 × GL_2`.
pub fn graded_list() -> impl Strategy<Value = GradedTermList> {
    prop::collection::vec(
        (weight(2, -3, 3), weight(2, -3, 3), -4i32..=4, -8i32..=8),
        1..=6,
    )
    .prop_map(|ts| {
        term_list(
            vec![2, 2],
            ts.into_iter().map(|(a, b, h, r)| (vec![a, b], h, r)).collect(),
        )
    })
}

/// Runs `check` on `CASES` random inputs from a fixed seed, returning the
/// number of cases run.
pub fn run<S, F>(strategy: S, check: F) -> Result<u32, String>
where
    S: Strategy,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: CASES,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner.run(&strategy, check).map_err(|e| e.to_string())?;
    Ok(CASES)
}
