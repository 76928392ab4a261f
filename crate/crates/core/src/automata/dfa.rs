use std::collections::VecDeque;

use super::{Alphabet, Letter, Nfa};
use crate::transform::Transformation;
use crate::{Error, Result};

/// A complete deterministic finite automaton over `{0, …, n-1}`.
///
/// Transitions are stored row-major: `delta[q * k + c]` is the image of state
/// `q` under the letter in column `c` of the alphabet. Every entry is defined;
/// partial tables are rejected by [`DfaBuilder::build`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    states: usize,
    delta: Vec<u32>,
    initial: u32,
    finals: Vec<bool>,
}

/// Incremental constructor for [`Dfa`] that reports the first offending entry.
#[derive(Clone, Debug)]
pub struct DfaBuilder {
    states: usize,
    letters: Vec<(String, Vec<Option<usize>>)>,
    initial: usize,
    finals: Vec<usize>,
}

impl DfaBuilder {
    pub fn new(states: usize) -> Self {
        DfaBuilder {
            states,
            letters: Vec::new(),
            initial: 0,
            finals: Vec::new(),
        }
    }

    fn column(&mut self, letter: &str) -> &mut Vec<Option<usize>> {
        let pos = match self.letters.iter().position(|(l, _)| l == letter) {
            Some(p) => p,
            None => {
                self.letters.push((letter.to_string(), vec![None; self.states]));
                self.letters.len() - 1
            }
        };
        &mut self.letters[pos].1
    }

    /// Declares a letter without any transitions yet.
    pub fn letter(mut self, letter: &str) -> Self {
        self.column(letter);
        self
    }

    /// Sets every transition of `letter` at once from its image list.
    pub fn images(mut self, letter: &str, images: &[usize]) -> Self {
        let states = self.states;
        let col = self.column(letter);
        for (q, &t) in images.iter().enumerate() {
            if q < states {
                col[q] = Some(t);
            } else {
                col.push(Some(t));
            }
        }
        self
    }

    pub fn transition(mut self, state: usize, letter: &str, target: usize) -> Self {
        let col = self.column(letter);
        if state >= col.len() {
            col.resize(state + 1, None);
        }
        col[state] = Some(target);
        self
    }

    pub fn initial(mut self, q: usize) -> Self {
        self.initial = q;
        self
    }

    pub fn finals(mut self, finals: impl IntoIterator<Item = usize>) -> Self {
        self.finals = finals.into_iter().collect();
        self
    }

    pub fn build(self) -> Result<Dfa> {
        let n = self.states;
        if n == 0 {
            return Err(Error::NoStates);
        }
        let letters = self
            .letters
            .iter()
            .map(|(l, _)| Letter::new(l.as_str()))
            .collect::<Result<Vec<_>>>()?;
        let alphabet = Alphabet::new(letters)?;
        let k = alphabet.len();
        let mut delta = vec![0u32; n * k];
        for (name, col) in &self.letters {
            if col.len() > n {
                return Err(Error::StateOutOfRange {
                    state: col.len() - 1,
                    count: n,
                });
            }
            let c = alphabet.index_of(name).expect("letter registered above");
            for q in 0..n {
                let t = col.get(q).copied().flatten().ok_or_else(|| Error::MissingTransition {
                    state: q,
                    letter: name.clone(),
                })?;
                if t >= n {
                    return Err(Error::TargetOutOfRange {
                        state: q,
                        letter: name.clone(),
                        target: t,
                        count: n,
                    });
                }
                delta[q * k + c] = t as u32;
            }
        }
        if self.initial >= n {
            return Err(Error::StateOutOfRange {
                state: self.initial,
                count: n,
            });
        }
        let mut finals = vec![false; n];
        for &f in &self.finals {
            if f >= n {
                return Err(Error::StateOutOfRange { state: f, count: n });
            }
            finals[f] = true;
        }
        Ok(Dfa {
            alphabet,
            states: n,
            delta,
            initial: self.initial as u32,
            finals,
        })
    }
}

impl Dfa {
    /// Validated constructor from a state-major table whose columns follow
    /// `letters` in the given order (which need not be sorted).
    pub fn from_table<S: AsRef<str>>(
        states: usize,
        letters: &[S],
        table: &[Vec<usize>],
        initial: usize,
        finals: &[usize],
    ) -> Result<Dfa> {
        let mut b = DfaBuilder::new(states).initial(initial).finals(finals.iter().copied());
        for l in letters {
            b = b.letter(l.as_ref());
        }
        if table.len() > states {
            return Err(Error::StateOutOfRange {
                state: table.len() - 1,
                count: states,
            });
        }
        for (q, row) in table.iter().enumerate() {
            for (c, &t) in row.iter().enumerate() {
                let letter = letters.get(c).ok_or_else(|| Error::Precondition(format!(
                    "row {q} has {} entries but only {} letters",
                    row.len(),
                    letters.len()
                )))?;
                b = b.transition(q, letter.as_ref(), t);
            }
        }
        b.build()
    }

    /// Internal constructor for tables already known to be valid.
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        states: usize,
        delta: Vec<u32>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Dfa {
        debug_assert_eq!(delta.len(), states * alphabet.len());
        debug_assert_eq!(finals.len(), states);
        debug_assert!(delta.iter().all(|&t| (t as usize) < states));
        Dfa {
            alphabet,
            states,
            delta,
            initial: initial as u32,
            finals,
        }
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial as usize
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> Vec<usize> {
        (0..self.states).filter(|&q| self.finals[q]).collect()
    }

    pub(crate) fn final_flags(&self) -> &[bool] {
        &self.finals
    }

    pub(crate) fn table(&self) -> &[u32] {
        &self.delta
    }

    #[inline]
    pub fn next(&self, q: usize, c: usize) -> usize {
        self.delta[q * self.alphabet.len() + c] as usize
    }

    /// State reached from `q` by reading the column indices in `word`.
    pub fn run_from(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &c| self.next(q, c))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.finals[self.run_from(self.initial(), word)]
    }

    /// Membership for a word spelled with letter names.
    pub fn accepts_letters<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.encode(word)?))
    }

    /// Transformation of the state set induced by the letter in column `c`.
    pub fn letter_transformation(&self, c: usize) -> Transformation {
        let images = (0..self.states).map(|q| self.next(q, c)).collect();
        Transformation::from_images_unchecked(images)
    }

    pub fn letter_transformations(&self) -> Vec<(Letter, Transformation)> {
        self.alphabet
            .iter()
            .enumerate()
            .map(|(c, l)| (l.clone(), self.letter_transformation(c)))
            .collect()
    }

    /// The same automaton rooted at `q`; its language is `L^q`.
    pub fn with_initial(&self, q: usize) -> Result<Dfa> {
        if q >= self.states {
            return Err(Error::StateOutOfRange {
                state: q,
                count: self.states,
            });
        }
        let mut d = self.clone();
        d.initial = q as u32;
        Ok(d)
    }

    pub fn with_finals(&self, finals: impl IntoIterator<Item = usize>) -> Result<Dfa> {
        let mut flags = vec![false; self.states];
        for f in finals {
            if f >= self.states {
                return Err(Error::StateOutOfRange {
                    state: f,
                    count: self.states,
                });
            }
            flags[f] = true;
        }
        let mut d = self.clone();
        d.finals = flags;
        Ok(d)
    }

    /// Complement with respect to the DFA's own alphabet.
    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        d.finals.iter_mut().for_each(|f| *f = !*f);
        d
    }

    /// Re-expresses the DFA over a larger alphabet. Letters not in the
    /// original alphabet lead to a fresh empty state, which is appended as the
    /// last state (and only when at least one new letter exists).
    pub fn extend_alphabet(&self, target: &Alphabet) -> Result<Dfa> {
        if !self.alphabet.is_subset(target) {
            return Err(Error::Precondition(format!(
                "{} is not a subset of {}",
                self.alphabet, target
            )));
        }
        if target.len() == self.alphabet.len() {
            return Ok(self.clone());
        }
        let n = self.states + 1;
        let sink = self.states as u32;
        let k = target.len();
        let column_map: Vec<Option<usize>> = target
            .iter()
            .map(|l| self.alphabet.index_of(l.as_str()))
            .collect();
        let mut delta = vec![sink; n * k];
        for q in 0..self.states {
            for (c, old) in column_map.iter().enumerate() {
                if let Some(old) = old {
                    delta[q * k + c] = self.next(q, *old) as u32;
                }
            }
        }
        let mut finals = self.finals.clone();
        finals.push(false);
        Ok(Dfa::from_parts(target.clone(), n, delta, self.initial(), finals))
    }

    /// Keeps only the columns of letters in `keep`; the language becomes
    /// `L ∩ keep*`.
    pub fn restrict_alphabet(&self, keep: &Alphabet) -> Result<Dfa> {
        if !keep.is_subset(&self.alphabet) {
            return Err(Error::Precondition(format!(
                "{} is not a subset of {}",
                keep, self.alphabet
            )));
        }
        let cols: Vec<usize> = keep
            .iter()
            .map(|l| self.alphabet.index_of(l.as_str()).expect("checked subset"))
            .collect();
        let k = cols.len();
        let mut delta = vec![0u32; self.states * k];
        for q in 0..self.states {
            for (c, &old) in cols.iter().enumerate() {
                delta[q * k + c] = self.next(q, old) as u32;
            }
        }
        Ok(Dfa::from_parts(
            keep.clone(),
            self.states,
            delta,
            self.initial(),
            self.finals.clone(),
        ))
    }

    /// Renames letters through `rename`; letters mapped to `None` are deleted.
    pub fn relabel(&self, rename: impl Fn(&Letter) -> Option<Letter>) -> Result<Dfa> {
        let mut b = DfaBuilder::new(self.states)
            .initial(self.initial())
            .finals(self.finals());
        for (c, l) in self.alphabet.iter().enumerate() {
            if let Some(new) = rename(l) {
                if b.letters.iter().any(|(x, _)| x == new.as_str()) {
                    return Err(Error::DuplicateLetter(new.to_string()));
                }
                let images: Vec<usize> = (0..self.states).map(|q| self.next(q, c)).collect();
                b = b.images(new.as_str(), &images);
            }
        }
        b.build()
    }

    /// The same transitions viewed as an NFA.
    pub fn to_nfa(&self) -> Nfa {
        let mut m = Nfa::new(self.states, self.alphabet.clone());
        for q in 0..self.states {
            for c in 0..self.alphabet.len() {
                m.add_transition(q, c, self.next(q, c));
            }
        }
        m.add_initial(self.initial());
        for f in self.finals() {
            m.set_final(f);
        }
        m
    }

    /// Transition reversal: initials are the old finals and the only final
    /// state is the old initial. The result accepts the reversed language.
    pub fn reverse(&self) -> Nfa {
        let mut m = Nfa::new(self.states, self.alphabet.clone());
        for q in 0..self.states {
            for c in 0..self.alphabet.len() {
                m.add_transition(self.next(q, c), c, q);
            }
        }
        for f in self.finals() {
            m.add_initial(f);
        }
        m.set_final(self.initial());
        m
    }

    /// Breadth-first order from the initial state, scanning letters in
    /// alphabet order. Unreachable states are absent.
    pub fn bfs_order(&self) -> Vec<usize> {
        let k = self.alphabet.len();
        let mut seen = vec![false; self.states];
        let mut order = Vec::with_capacity(self.states);
        let mut queue = VecDeque::new();
        seen[self.initial()] = true;
        queue.push_back(self.initial());
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for c in 0..k {
                let t = self.next(q, c);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Restricts to reachable states and renumbers them in BFS order.
    pub fn canonical(&self) -> Dfa {
        let order = self.bfs_order();
        let mut new_id = vec![u32::MAX; self.states];
        for (i, &q) in order.iter().enumerate() {
            new_id[q] = i as u32;
        }
        let k = self.alphabet.len();
        let n = order.len();
        let mut delta = Vec::with_capacity(n * k);
        let mut finals = Vec::with_capacity(n);
        for &q in &order {
            for c in 0..k {
                delta.push(new_id[self.next(q, c)]);
            }
            finals.push(self.finals[q]);
        }
        Dfa::from_parts(self.alphabet.clone(), n, delta, 0, finals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_letter_accepts_a_star() {
        let d = DfaBuilder::new(4)
            .images("a", &[0, 1, 2, 3])
            .initial(0)
            .finals([0])
            .build()
            .unwrap();
        for k in 0..6 {
            assert!(d.accepts(&vec![0; k]));
        }
    }

    #[test]
    fn missing_entry_is_named() {
        let err = DfaBuilder::new(4)
            .transition(0, "a", 1)
            .transition(1, "a", 2)
            .transition(3, "a", 0)
            .build()
            .unwrap_err();
        assert_eq!(
            err,
            Error::MissingTransition {
                state: 2,
                letter: "a".into()
            }
        );
    }

    #[test]
    fn range_errors() {
        let err = DfaBuilder::new(2).images("a", &[0, 2]).build().unwrap_err();
        assert!(matches!(err, Error::TargetOutOfRange { target: 2, .. }));
        let err = DfaBuilder::new(2).images("a", &[0, 1]).initial(5).build().unwrap_err();
        assert!(matches!(err, Error::StateOutOfRange { state: 5, .. }));
        let err = DfaBuilder::new(2).images("a", &[0, 1]).finals([2]).build().unwrap_err();
        assert!(matches!(err, Error::StateOutOfRange { state: 2, .. }));
        assert_eq!(DfaBuilder::new(0).build().unwrap_err(), Error::NoStates);
    }

    #[test]
    fn from_table_keeps_given_column_order() {
        let d = Dfa::from_table(2, &["b", "a"], &[vec![1, 0], vec![1, 1]], 0, &[1]).unwrap();
        assert_eq!(d.alphabet().names(), vec!["a", "b"]);
        assert!(d.accepts_letters(&["b"]).unwrap());
        assert!(!d.accepts_letters(&["a"]).unwrap());
    }

    #[test]
    fn extend_then_restrict_round_trips() {
        let d = DfaBuilder::new(2)
            .images("a", &[1, 0])
            .finals([1])
            .build()
            .unwrap();
        let big = Alphabet::from_names(&["a", "z"]).unwrap();
        let e = d.extend_alphabet(&big).unwrap();
        assert_eq!(e.states(), 3);
        assert!(!e.accepts_letters(&["a", "z"]).unwrap());
        assert!(e.accepts_letters(&["a"]).unwrap());
        let r = e.restrict_alphabet(d.alphabet()).unwrap();
        assert_eq!(r.canonical(), d.canonical());
    }
}
