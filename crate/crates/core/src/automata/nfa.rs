use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::stateset::StateSet;
use super::{Alphabet, Dfa};

/// An ε-free nondeterministic automaton with a set of initial states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    states: usize,
    delta: Vec<Vec<u32>>,
    initials: Vec<u32>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(states: usize, alphabet: Alphabet) -> Nfa {
        let k = alphabet.len();
        Nfa {
            alphabet,
            states,
            delta: vec![Vec::new(); states * k],
            initials: Vec::new(),
            finals: vec![false; states],
        }
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Panics if a state or column is out of range; callers build NFAs from
    /// already-validated DFAs.
    pub fn add_transition(&mut self, from: usize, c: usize, to: usize) {
        assert!(from < self.states && to < self.states && c < self.alphabet.len());
        let cell = &mut self.delta[from * self.alphabet.len() + c];
        if let Err(pos) = cell.binary_search(&(to as u32)) {
            cell.insert(pos, to as u32);
        }
    }

    pub fn add_initial(&mut self, q: usize) {
        assert!(q < self.states);
        if let Err(pos) = self.initials.binary_search(&(q as u32)) {
            self.initials.insert(pos, q as u32);
        }
    }

    pub fn set_final(&mut self, q: usize) {
        self.finals[q] = true;
    }

    pub fn initials(&self) -> impl Iterator<Item = usize> + '_ {
        self.initials.iter().map(|&q| q as usize)
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn successors(&self, q: usize, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.delta[q * self.alphabet.len() + c].iter().map(|&t| t as usize)
    }

    /// Membership by direct simulation of the state set.
    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut current = StateSet::from_iter(self.states, self.initials());
        for &c in word {
            let mut next = StateSet::empty(self.states);
            for q in current.iter() {
                for t in self.successors(q, c) {
                    next.insert(t);
                }
            }
            current = next;
        }
        let accepted = current.iter().any(|q| self.finals[q]);
        accepted
    }
}

/// Subset construction restricted to reachable subsets.
///
/// The result is complete over the NFA's alphabet; the empty subset appears
/// as an ordinary (sink) state whenever it is reachable. States are numbered
/// in discovery order, so state 0 is the initial subset.
pub fn determinize(m: &Nfa) -> Dfa {
    determinize_with_subsets(m).0
}

/// Like [`determinize`], also returning the subset behind each DFA state.
pub fn determinize_with_subsets(m: &Nfa) -> (Dfa, Vec<Vec<usize>>) {
    let n = m.states;
    let k = m.alphabet.len();
    let mut index: FxHashMap<StateSet, u32> = FxHashMap::default();
    let mut subsets: Vec<StateSet> = Vec::new();
    let mut queue = VecDeque::new();

    let start = StateSet::from_iter(n, m.initials());
    index.insert(start.clone(), 0);
    subsets.push(start);
    queue.push_back(0usize);

    let mut delta: Vec<u32> = Vec::new();
    while let Some(i) = queue.pop_front() {
        // Rows are filled in discovery order, matching the queue order.
        debug_assert_eq!(delta.len(), i * k);
        for c in 0..k {
            let mut next = StateSet::empty(n);
            for q in subsets[i].iter() {
                for &t in &m.delta[q * k + c] {
                    next.insert(t as usize);
                }
            }
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len() as u32;
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    queue.push_back(id as usize);
                    id
                }
            };
            delta.push(id);
        }
    }
    let finals = subsets
        .iter()
        .map(|s| s.iter().any(|q| m.finals[q]))
        .collect();
    let count = subsets.len();
    let dfa = Dfa::from_parts(m.alphabet.clone(), count, delta, 0, finals);
    (dfa, subsets.iter().map(StateSet::to_vec).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::DfaBuilder;

    #[test]
    fn dfa_as_nfa_determinizes_to_itself() {
        let d = DfaBuilder::new(3)
            .images("a", &[1, 2, 0])
            .images("b", &[0, 0, 2])
            .finals([2])
            .build()
            .unwrap();
        let back = determinize(&d.to_nfa());
        assert_eq!(back.canonical(), d.canonical());
    }

    #[test]
    fn empty_subset_is_a_sink() {
        // Accepts exactly "a".
        let mut m = Nfa::new(2, Alphabet::from_names(&["a"]).unwrap());
        m.add_transition(0, 0, 1);
        m.add_initial(0);
        m.set_final(1);
        let (d, subsets) = determinize_with_subsets(&m);
        assert_eq!(d.states(), 3);
        assert!(subsets.contains(&vec![]));
        assert!(d.accepts(&[0]));
        assert!(!d.accepts(&[0, 0]));
        assert!(!d.accepts(&[]));
    }
}
