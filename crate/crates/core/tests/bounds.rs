//! Measured complexities of random non-returning operands stay within the
//! closed-form bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nonret_core::atoms::all_atom_complexities;
use nonret_core::harness::sample::random_nonreturning_minimal;
use nonret_core::ops::{self, alternative_bounds, formula_for, BooleanOp, OpId, OpMode};
use nonret_core::{atom_bound, count_atoms, witness::witness, Letter};

#[test]
fn operations_within_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut difference_max_gap = i64::MIN;
    let mut pairs = 0;
    while pairs < 500 {
        let (m, n) = (rng.random_range(2..=6), rng.random_range(2..=6));
        let k = rng.random_range(1..=3);
        let (Some(l), Some(r)) = (
            random_nonreturning_minimal(&mut rng, m, k, 2000),
            random_nonreturning_minimal(&mut rng, n, k, 2000),
        ) else {
            continue;
        };
        pairs += 1;
        assert!(ops::reverse(&r).states() as u64 <= formula_for(OpId::Reverse).eval(0, n));
        assert!(ops::star(&r).states() as u64 <= formula_for(OpId::Star).eval(0, n));
        let shifted = r
            .relabel(|x| Letter::new(((x.as_str().as_bytes()[0] + 1) as char).to_string()).ok())
            .unwrap();
        for (mode, right) in [(OpMode::Restricted, &r), (OpMode::Unrestricted, &shifted)] {
            let id = OpId::Product(mode);
            let p = ops::product(&l, right, mode).unwrap().states() as u64;
            assert!(p <= formula_for(id).eval(m, n), "{id} m={m} n={n}: {p}");
            for op in BooleanOp::ALL {
                let id = OpId::Boolean(op, mode);
                let v = ops::boolean(&l, right, op, mode).unwrap().states() as u64;
                let mut limit = formula_for(id).eval(m, n);
                if op == BooleanOp::Difference && mode == OpMode::Unrestricted {
                    difference_max_gap = difference_max_gap.max(v as i64 - limit as i64);
                    limit = alternative_bounds(id).iter().map(|a| a.eval(m, n)).fold(limit, u64::max);
                }
                assert!(v <= limit, "{id} m={m} n={n}: {v} > {limit}\n{l:?}\n{right:?}");
            }
        }
    }
    // Random operands never exceed the smaller difference bound either.
    assert!(difference_max_gap <= 0, "difference exceeded mn-n+1 by {difference_max_gap}");
}

#[test]
fn atoms_within_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 60 {
        let n = rng.random_range(2..=5);
        let k = rng.random_range(1..=3);
        let Some(d) = random_nonreturning_minimal(&mut rng, n, k, 2000) else { continue };
        checked += 1;
        for (s, kappa) in all_atom_complexities(&d).unwrap() {
            if let Some(kappa) = kappa {
                assert!(kappa as u64 <= atom_bound(n, s.len()), "n={n} S={s:?}: {kappa}");
            }
        }
    }
}

#[test]
fn binary_witness_has_fewer_atoms() {
    assert!(count_atoms(&witness(4, "a,b").unwrap().dfa).unwrap() < 16);
    assert!(count_atoms(&witness(5, "a,b").unwrap().dfa).unwrap() < 32);
}
