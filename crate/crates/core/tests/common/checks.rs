//! Property checks against the brute-force references. Each check panics
//! on the first disagreement.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use nonret_core::automata::{are_equivalent, determinize, minimize};
use nonret_core::harness::sample::{random_dfa, random_nonreturning_minimal};
use nonret_core::ops::{self, BooleanOp, OpMode};
use nonret_core::transform::{closure, enumerate_nonreturning, full_nonreturning_size};
use nonret_core::witness::{witness, Role};
use nonret_core::{atom_dfa, Dfa, Letter, Transformation};

pub const SEED: u64 = 20_161_016;

pub fn minimization_matches_table_filling(count: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..count {
        let n = rng.random_range(1..=8);
        let k = rng.random_range(1..=3);
        let d = random_dfa(&mut rng, n, k);
        let m = minimize(&d);
        assert_eq!(m.states(), table_filling_classes(&d), "{d:?}");
        assert_eq!(minimize(&m), m, "minimization is not idempotent");
        assert!(are_equivalent(&d, &m).unwrap());
        for w in words(&names(&d), 4) {
            assert_eq!(member(&d, &w), member(&m, &w));
        }
    }
}

pub fn double_reversal_minimizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for _ in 0..300 {
        let n = rng.random_range(1..=8);
        let d = random_dfa(&mut rng, n, 2);
        let once = determinize(&d.reverse());
        let twice = determinize(&once.reverse());
        // Determinizing the reversal of an accessible DFA gives a minimal DFA.
        assert_eq!(twice.canonical(), minimize(&d));
    }
    for n in 4..=8 {
        let w = witness(n, "a,b,c").unwrap().dfa;
        let b = determinize(&determinize(&w.reverse()).reverse());
        assert_eq!(b.canonical(), minimize(&w));
    }
}

fn shift_letters(d: &Dfa, rng: &mut impl Rng) -> Dfa {
    let offset = rng.random_range(0..=2u8);
    d.relabel(|l| {
        let c = l.as_str().as_bytes()[0] + offset;
        Letter::new((c as char).to_string()).ok()
    })
    .unwrap()
}

pub fn operations_match_word_semantics() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for round in 0..60 {
        let (m, km) = (rng.random_range(1..=4), rng.random_range(1..=2));
        let (n, kn) = (rng.random_range(1..=4), rng.random_range(1..=2));
        let left = random_dfa(&mut rng, m, km);
        let mut right = random_dfa(&mut rng, n, kn);
        let unrestricted = round % 2 == 1;
        if unrestricted {
            right = shift_letters(&right, &mut rng);
        }
        let sigma = left.alphabet().union(right.alphabet()).names();
        let all = words(&sigma, 6);

        let rev = ops::reverse(&right);
        let star = ops::star(&right);
        for w in words(&names(&right), 6) {
            assert_eq!(member(&rev, &w), member(&right, &reversed(&w)));
            assert_eq!(member(&star, &w), in_star(&right, &w), "star of {right:?} on {w:?}");
        }

        let modes: &[OpMode] = if left.alphabet() == right.alphabet() {
            &[OpMode::Restricted, OpMode::Unrestricted]
        } else {
            &[OpMode::Unrestricted]
        };
        for &mode in modes {
            let prod = ops::product(&left, &right, mode).unwrap();
            for w in &all {
                assert_eq!(member(&prod, w), in_product(&left, &right, w));
            }
            for op in BooleanOp::ALL {
                let r = ops::boolean(&left, &right, op, mode).unwrap();
                let target = op.result_alphabet(left.alphabet(), right.alphabet());
                assert_eq!(r.alphabet(), &target);
                for w in &all {
                    let over_target = w.iter().all(|l| target.contains(l));
                    let expected = over_target && op.eval(member(&left, w), member(&right, w));
                    assert_eq!(member(&r, w), expected, "{op} {mode} on {w:?}");
                }
            }
        }
        if left.alphabet() != right.alphabet() {
            assert!(ops::product(&left, &right, OpMode::Restricted).is_err());
        }
    }
}

pub fn ab_power_preimages() {
    for n in 4..=10 {
        let a = Role::A.transformation(n);
        let b = Role::C.transformation(n);
        let ab = a.then(&b);
        let mut k = 0;
        while 1 + 2 * k <= n - 1 {
            let p = ab.power(k);
            for q in 1 + 2 * k..n {
                assert_eq!(p.preimage(q), vec![q - 2 * k], "n={n} k={k} q={q}");
            }
            k += 1;
        }
    }
}

pub fn full_nonreturning_semigroup_by_enumeration() {
    for n in 4..=6 {
        let all: HashSet<Transformation> = enumerate_nonreturning(n).into_iter().collect();
        assert_eq!(all.len() as u64, full_nonreturning_size(n));
        assert!(all.iter().all(|t| !t.images().contains(&0)));
        let w = witness(n, "a,b,c,d,G").unwrap();
        let gens: Vec<Transformation> =
            w.dfa.letter_transformations().into_iter().map(|(_, t)| t).collect();
        let s = closure(&gens).unwrap();
        let generated: HashSet<Transformation> = s.iter().collect();
        assert_eq!(generated, all);
    }
}

pub fn closure_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let w = witness(5, "a,b,c").unwrap();
    let gens: Vec<Transformation> =
        w.dfa.letter_transformations().into_iter().map(|(_, t)| t).collect();
    let s = closure(&gens).unwrap();
    for i in 0..s.len() {
        let word = s.word(i);
        assert!(!word.is_empty() && word.len() <= s.len());
        assert_eq!(s.evaluate(&word), s.get(i));
    }
    for _ in 0..2000 {
        let x = s.get(rng.random_range(0..s.len()));
        let y = s.get(rng.random_range(0..s.len()));
        assert!(s.contains(&x.then(&y)));
    }
}

fn check_atoms(d: &Dfa, max_len: usize) {
    let n = d.states();
    let atoms: Vec<Dfa> = (0..1u32 << n)
        .map(|m| {
            let set: Vec<usize> = (0..n).filter(|q| m >> q & 1 == 1).collect();
            atom_dfa(d, &set).unwrap().dfa
        })
        .collect();
    for w in words(&names(d), max_len) {
        let s = accepting_set(d, &w);
        let mask: u32 = s.iter().map(|q| 1u32 << q).sum();
        let hits: Vec<usize> = (0..atoms.len()).filter(|&i| member(&atoms[i], &w)).collect();
        assert_eq!(hits, vec![mask as usize], "word {w:?}");
    }
}

pub fn atoms_partition_words() {
    for n in 4..=6 {
        check_atoms(&witness(n, "a,b").unwrap().dfa, 2 * n);
    }
    check_atoms(&witness(4, "a,b,c").unwrap().dfa, 8);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for _ in 0..10 {
        let n = rng.random_range(2..=5);
        if let Some(d) = random_nonreturning_minimal(&mut rng, n, 2, 1000) {
            check_atoms(&d, 2 * n);
        }
    }
}

pub fn atoms_pairwise_disjoint() {
    for (n, dialect) in [(4, "a,b,c"), (5, "a,b"), (6, "a,b")] {
        let d = witness(n, dialect).unwrap().dfa;
        let atoms: Vec<Dfa> = (0..1u32 << n)
            .map(|m| {
                let set: Vec<usize> = (0..n).filter(|q| m >> q & 1 == 1).collect();
                atom_dfa(&d, &set).unwrap().dfa
            })
            .collect();
        for i in 0..atoms.len() {
            for j in i + 1..atoms.len() {
                let both = ops::boolean(
                    &atoms[i],
                    &atoms[j],
                    BooleanOp::Intersection,
                    OpMode::Restricted,
                )
                .unwrap();
                assert!(both.finals().is_empty(), "atoms {i} and {j} of {dialect} overlap");
            }
        }
    }
}
