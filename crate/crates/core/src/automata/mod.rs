//! Complete DFAs, ε-free NFAs and the standard algorithms over them.

mod alphabet;
mod dfa;
mod minimize;
mod nfa;
pub(crate) mod stateset;
pub mod text;

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

pub use alphabet::{Alphabet, Letter};
pub use dfa::{Dfa, DfaBuilder};
pub use minimize::minimize;
pub use nfa::{determinize, determinize_with_subsets, Nfa};

use crate::{Error, Result};

/// True iff no transition enters the initial state.
pub fn is_non_returning(d: &Dfa) -> bool {
    let q0 = d.initial();
    (0..d.states()).all(|q| (0..d.alphabet().len()).all(|c| d.next(q, c) != q0))
}

/// States reachable from the initial state, in ascending order.
pub fn reachable(d: &Dfa) -> Vec<usize> {
    let mut r = d.bfs_order();
    r.sort_unstable();
    r
}

/// State complexity: the number of states of the minimal complete DFA.
pub fn complexity(d: &Dfa) -> usize {
    minimize(d).states()
}

pub fn is_minimal(d: &Dfa) -> bool {
    complexity(d) == d.states()
}

/// Complexity of `L^q` for every state `q`.
pub fn quotient_complexities(d: &Dfa) -> Vec<(usize, usize)> {
    (0..d.states())
        .map(|q| {
            let rooted = d.with_initial(q).expect("state in range");
            (q, complexity(&rooted))
        })
        .collect()
}

/// Shortest word (as letter names) accepted by exactly one of the automata,
/// found by breadth-first search of the product. Alphabets must hold the same
/// letters.
pub fn separating_word(d1: &Dfa, d2: &Dfa) -> Result<Option<Vec<Letter>>> {
    if d1.alphabet() != d2.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: d1.alphabet().names(),
            right: d2.alphabet().names(),
        });
    }
    let k = d1.alphabet().len();
    let start = (d1.initial(), d2.initial());
    let mut parent: FxHashMap<(usize, usize), Option<((usize, usize), usize)>> =
        FxHashMap::default();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        if d1.is_final(p) != d2.is_final(q) {
            let mut word = Vec::new();
            let mut cur = (p, q);
            while let Some(Some((prev, c))) = parent.get(&cur) {
                word.push(d1.alphabet().letters()[*c].clone());
                cur = *prev;
            }
            word.reverse();
            return Ok(Some(word));
        }
        for c in 0..k {
            let next = (d1.next(p, c), d2.next(q, c));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some(((p, q), c)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Language equality via product search for a separating word.
pub fn are_equivalent(d1: &Dfa, d2: &Dfa) -> Result<bool> {
    Ok(separating_word(d1, d2)?.is_none())
}

/// A regular language, held as its minimal complete DFA in canonical
/// numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Language {
    dfa: Dfa,
}

impl Language {
    pub fn new(d: &Dfa) -> Language {
        Language { dfa: minimize(d) }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.dfa.alphabet()
    }

    /// The state complexity κ(L).
    pub fn complexity(&self) -> usize {
        self.dfa.states()
    }

    pub fn contains<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        self.dfa.accepts_letters(word)
    }

    pub fn is_non_returning(&self) -> bool {
        is_non_returning(&self.dfa)
    }
}

impl From<Dfa> for Language {
    fn from(d: Dfa) -> Self {
        Language::new(&d)
    }
}
