//! Atoms of a regular language.
//!
//! For a minimal DFA with states `Q` and a subset `S ⊆ Q`, the atomic
//! intersection `A_S` is the set of words lying in the quotient of every
//! state in `S` and in no quotient of a state outside `S`. It is recognized
//! by a DFA over pairs `(X, Y)` of disjoint state sets: a letter maps
//! `(X, Y)` to `(Xa, Ya)` when those images stay disjoint and to the sink
//! `⊥` otherwise. The initial pair is `(S, Q \ S)` and `(X, Y)` accepts when
//! `X ⊆ F` and `Y ∩ F = ∅`.
//!
//! The non-empty atomic intersections are the atoms, and there are exactly
//! as many as the reversal has states in its minimal DFA.

mod exhaustive;

use std::collections::VecDeque;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::automata::stateset::StateSet;
use crate::automata::{complexity, determinize, is_minimal, minimize, Dfa};
use crate::report::{ClaimReport, Params, Relation};
use crate::transform::PairType;
use crate::{Error, Result};

pub use exhaustive::{
    binary_search, max_atoms_binary_nonreturning, BinarySearchOptions, BinarySearchSummary,
    DEFAULT_MAX_N,
};

/// Subsets are enumerated as bitmasks, so the base DFA is capped here.
pub const MAX_ATOM_STATES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AtomState {
    Pair { x: Vec<usize>, y: Vec<usize> },
    Sink,
}

impl std::fmt::Display for AtomState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn set(s: &[usize]) -> String {
            let v: Vec<String> = s.iter().map(|q| q.to_string()).collect();
            format!("{{{}}}", v.join(","))
        }
        match self {
            AtomState::Pair { x, y } => write!(f, "({}, {})", set(x), set(y)),
            AtomState::Sink => write!(f, "⊥"),
        }
    }
}

/// The DFA of `A_S` together with the pair behind each state.
#[derive(Clone, Debug)]
pub struct AtomDfa {
    pub dfa: Dfa,
    pub labels: Vec<AtomState>,
    /// Index of `⊥`, present only when it is reachable.
    pub sink: Option<usize>,
}

impl AtomDfa {
    pub fn reachable_with_sink(&self) -> usize {
        self.dfa.states()
    }

    pub fn reachable_without_sink(&self) -> usize {
        self.dfa.states() - usize::from(self.sink.is_some())
    }

    pub fn accepts_something(&self) -> bool {
        !self.dfa.finals().is_empty()
    }
}

fn require_minimal(base: &Dfa) -> Result<()> {
    if !is_minimal(base) {
        return Err(Error::NotMinimal {
            states: base.states(),
            complexity: complexity(base),
        });
    }
    Ok(())
}

fn check_set(base: &Dfa, set: &[usize]) -> Result<()> {
    if set.iter().any(|&q| q >= base.states()) {
        return Err(Error::SubsetOutOfRange(set.to_vec()));
    }
    Ok(())
}

fn atom_dfa_unchecked(base: &Dfa, set: &[usize]) -> AtomDfa {
    let n = base.states();
    let k = base.alphabet().len();
    let finals = StateSet::from_iter(n, base.finals());
    let x0 = StateSet::from_iter(n, set.iter().copied());
    let y0 = x0.complement(n);

    // Index 0 is the initial pair; u32::MAX stands for the sink until the
    // table is finalized.
    const SINK: u32 = u32::MAX;
    let mut index: FxHashMap<(StateSet, StateSet), u32> = FxHashMap::default();
    let mut pairs: Vec<(StateSet, StateSet)> = vec![(x0.clone(), y0.clone())];
    index.insert((x0, y0), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut delta: Vec<u32> = Vec::new();
    let mut sink_used = false;
    while let Some(i) = queue.pop_front() {
        for c in 0..k {
            let (x, y) = &pairs[i];
            let image = |s: &StateSet| StateSet::from_iter(n, s.iter().map(|q| base.next(q, c)));
            let (xa, ya) = (image(x), image(y));
            if !xa.is_disjoint(&ya) {
                sink_used = true;
                delta.push(SINK);
                continue;
            }
            let key = (xa, ya);
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    let id = pairs.len() as u32;
                    index.insert(key.clone(), id);
                    pairs.push(key);
                    queue.push_back(id as usize);
                    id
                }
            };
            delta.push(id);
        }
    }
    let mut labels: Vec<AtomState> = pairs
        .iter()
        .map(|(x, y)| AtomState::Pair {
            x: x.to_vec(),
            y: y.to_vec(),
        })
        .collect();
    let mut accepting: Vec<bool> = pairs
        .iter()
        .map(|(x, y)| x.is_subset(&finals) && y.is_disjoint(&finals))
        .collect();
    let sink = sink_used.then_some(pairs.len());
    if let Some(s) = sink {
        for t in delta.iter_mut().filter(|t| **t == SINK) {
            *t = s as u32;
        }
        delta.extend(std::iter::repeat_n(s as u32, k));
        labels.push(AtomState::Sink);
        accepting.push(false);
    }
    let count = labels.len();
    AtomDfa {
        dfa: Dfa::from_parts(base.alphabet().clone(), count, delta, 0, accepting),
        labels,
        sink,
    }
}

/// Builds the reachable part of the DFA for `A_S`.
pub fn atom_dfa(base: &Dfa, set: &[usize]) -> Result<AtomDfa> {
    require_minimal(base)?;
    check_set(base, set)?;
    Ok(atom_dfa_unchecked(base, set))
}

/// Whether `A_S` is non-empty.
pub fn is_atom(base: &Dfa, set: &[usize]) -> Result<bool> {
    Ok(atom_dfa(base, set)?.accepts_something())
}

fn mask_to_set(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&q| mask >> q & 1 == 1).collect()
}

fn all_subsets(n: usize) -> Result<Vec<Vec<usize>>> {
    if n > MAX_ATOM_STATES {
        return Err(Error::Unsupported(format!(
            "atom enumeration is limited to {MAX_ATOM_STATES} states, got {n}"
        )));
    }
    Ok((0..1u64 << n).map(|m| mask_to_set(m, n)).collect())
}

/// Number of atoms, computed subset by subset and cross-checked against the
/// complexity of the reversal.
pub fn count_atoms(base: &Dfa) -> Result<usize> {
    require_minimal(base)?;
    let subsets = all_subsets(base.states())?;
    let count = subsets
        .par_iter()
        .filter(|s| atom_dfa_unchecked(base, s).accepts_something())
        .count();
    let reversal = complexity(&determinize(&base.reverse()));
    if count != reversal {
        return Err(Error::Internal(format!(
            "{count} atoms but the reversal has complexity {reversal}"
        )));
    }
    Ok(count)
}

/// `κ(A_S)`, the size of the minimal DFA of the atom.
pub fn atom_complexity(base: &Dfa, set: &[usize]) -> Result<usize> {
    let d = atom_dfa(base, set)?;
    if !d.accepts_something() {
        return Err(Error::NotAnAtom(set.to_vec()));
    }
    Ok(minimize(&d.dfa).states())
}

/// Atom complexity for every subset, `None` for empty intersections. Subsets
/// are listed in bitmask order.
pub fn all_atom_complexities(base: &Dfa) -> Result<Vec<(Vec<usize>, Option<usize>)>> {
    require_minimal(base)?;
    let subsets = all_subsets(base.states())?;
    Ok(subsets
        .into_par_iter()
        .map(|s| {
            let d = atom_dfa_unchecked(base, &s);
            let kappa = d.accepts_something().then(|| minimize(&d.dfa).states());
            (s, kappa)
        })
        .collect())
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn bound_with_limit(n: usize, s: usize, y_max: usize) -> u64 {
    if s == 0 || s == n {
        return 1u64 << (n - 1);
    }
    let mut total = 2u64;
    for x in 1..=s {
        for y in 1..=y_max {
            total += binomial(n - 1, x) * binomial(n - 1 - x.min(n - 1), y);
        }
    }
    total
}

/// Upper bound on `κ(A_S)` for a non-returning language of complexity `n`
/// and `|S| = s`: `2^(n-1)` when `S` is empty or everything, otherwise
/// `2 + Σ_{x=1}^{s} Σ_{y=1}^{n-s} C(n-1, x) C(n-1-x, y)`.
pub fn atom_bound(n: usize, s: usize) -> u64 {
    assert!(n >= 1 && s <= n, "atom_bound needs 0 <= s <= n");
    bound_with_limit(n, s, n - s)
}

/// The same sum with the inner index running to `s` instead of `n - s`.
pub fn atom_bound_printed(n: usize, s: usize) -> u64 {
    assert!(n >= 1 && s <= n, "atom_bound needs 0 <= s <= n");
    bound_with_limit(n, s, s)
}

/// If every atom of `base` meets [`atom_bound`], every pair type `{i, j}` must
/// be induced by some letter. Reports the number of distinct types covered.
pub fn alphabet_size_needed_for_max_atoms(base: &Dfa) -> Result<ClaimReport> {
    require_minimal(base)?;
    let n = base.states();
    let all = all_atom_complexities(base)?;
    let missed = all
        .iter()
        .filter(|(s, k)| k.map(|k| k as u64) != Some(atom_bound(n, s.len())))
        .count();
    let mut types: Vec<PairType> = base
        .letter_transformations()
        .iter()
        .filter_map(|(_, t)| t.type_of())
        .collect();
    types.sort();
    types.dedup();
    let pairs = binomial(n, 2);
    let covered = types.len() as u64;
    let report = if missed == 0 {
        ClaimReport::new(
            "thm1.4-alphabet",
            Params::n(n),
            "C(n,2)",
            pairs,
            Relation::Equal,
            covered,
        )
        .note(format!(
            "all {} atoms meet the bound; {} letters",
            all.len(),
            base.alphabet().len()
        ))
    } else {
        ClaimReport::new(
            "thm1.4-alphabet",
            Params::n(n),
            "vacuous",
            0,
            Relation::AtLeast,
            covered,
        )
        .note(format!(
            "{missed} of {} subsets miss the bound, so no coverage is implied; {covered} of {pairs} types covered",
            all.len()
        ))
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::witness;
    use crate::DfaBuilder;

    #[test]
    fn bound_values() {
        assert_eq!(atom_bound(4, 0), 8);
        assert_eq!(atom_bound(4, 4), 8);
        assert_eq!(atom_bound(4, 1), 11);
        assert_eq!(atom_bound_printed(4, 1), 2 + 3 * 2);
        let by_hand: u64 = 2 + (1..=2)
            .flat_map(|x| (1..=3).map(move |y| binomial(4, x) * binomial(4 - x, y)))
            .sum::<u64>();
        assert_eq!(atom_bound(5, 2), by_hand);
    }

    #[test]
    fn initial_pair_of_singleton() {
        let w = witness(4, "a,b,c").unwrap();
        let d = atom_dfa(&w.dfa, &[3]).unwrap();
        assert_eq!(
            d.labels[0],
            AtomState::Pair {
                x: vec![3],
                y: vec![0, 1, 2]
            }
        );
        assert!(d.dfa.is_final(0));
    }

    #[test]
    fn type_03_letter_avoids_sink() {
        let w = witness(4, "a,b,c").unwrap();
        let d = atom_dfa(&w.dfa, &[0, 3]).unwrap();
        let a = d.dfa.alphabet().index_of("a").unwrap();
        assert_ne!(Some(d.dfa.next(0, a)), d.sink);
    }

    #[test]
    fn universal_language_has_one_atom() {
        let d = DfaBuilder::new(1).images("a", &[0]).finals([0]).build().unwrap();
        assert_eq!(count_atoms(&d).unwrap(), 1);
    }

    #[test]
    fn ternary_witness_has_all_atoms() {
        let w = witness(4, "a,b,c").unwrap();
        assert_eq!(count_atoms(&w.dfa).unwrap(), 16);
    }

    #[test]
    fn corrected_sigma_small_atoms() {
        let w = witness(4, "a,b,c,d,G").unwrap();
        assert_eq!(atom_complexity(&w.dfa, &[]).unwrap(), 8);
        assert_eq!(atom_complexity(&w.dfa, &[0]).unwrap(), 11);
        assert_eq!(atom_complexity(&w.dfa, &[0, 1, 2, 3]).unwrap(), 8);
    }

    #[test]
    fn errors() {
        let w = witness(4, "a,b").unwrap();
        assert_eq!(
            atom_dfa(&w.dfa, &[7]).unwrap_err(),
            Error::SubsetOutOfRange(vec![7])
        );
        let doubled = DfaBuilder::new(2)
            .images("a", &[1, 0])
            .finals([0, 1])
            .build()
            .unwrap();
        assert!(matches!(
            count_atoms(&doubled),
            Err(Error::NotMinimal { .. })
        ));
    }

    #[test]
    fn alphabet_coverage() {
        let full = witness(4, "a,b,c,d,G").unwrap();
        let r = alphabet_size_needed_for_max_atoms(&full.dfa).unwrap();
        assert!(r.passed());
        assert_eq!(r.measured, 6);
        let ternary = witness(4, "a,b,c").unwrap();
        let r = alphabet_size_needed_for_max_atoms(&ternary.dfa).unwrap();
        assert!(r.passed());
        assert_eq!(r.predicted, 0);
        assert_eq!(r.measured, 3);
    }
}
