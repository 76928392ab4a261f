//! Seeded random automata for property checks.

use rand::Rng;

use crate::automata::{is_minimal, Dfa, DfaBuilder};

const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// A uniformly random complete DFA on `n` states over the first `k` of the
/// letters `a..f`, with initial state 0 and each state final with
/// probability one half.
pub fn random_dfa(rng: &mut impl Rng, n: usize, k: usize) -> Dfa {
    assert!(n >= 1 && k <= NAMES.len());
    let mut b = DfaBuilder::new(n);
    for name in &NAMES[..k] {
        let images: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
        b = b.images(name, &images);
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    b.finals(finals).build().expect("random DFA is well formed")
}

/// A random minimal DFA on `n >= 2` states whose letters never enter state
/// 0, found by rejection sampling. Gives up after `attempts` tries.
pub fn random_nonreturning_minimal(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    attempts: usize,
) -> Option<Dfa> {
    assert!(n >= 2 && k <= NAMES.len());
    for _ in 0..attempts {
        let mut b = DfaBuilder::new(n);
        for name in &NAMES[..k] {
            let images: Vec<usize> = (0..n).map(|_| rng.random_range(1..n)).collect();
            b = b.images(name, &images);
        }
        let finals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        let d = b.finals(finals).build().expect("random DFA is well formed");
        if is_minimal(&d) {
            return Some(d);
        }
    }
    None
}
