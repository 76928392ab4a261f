//! Brute-force reference implementations shared by the integration tests.
//! Nothing here uses subset construction or minimization.

#![allow(dead_code)]

use nonret_core::Dfa;

pub mod checks;

/// All words over `letters` of length at most `max_len`, shortest first.
pub fn words(letters: &[String], max_len: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<String>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for l in letters {
                let mut v = w.clone();
                v.push(l.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Membership by letter names; letters outside the alphabet reject.
pub fn member(d: &Dfa, w: &[String]) -> bool {
    d.accepts_letters(w).unwrap_or(false)
}

pub fn run_from(d: &Dfa, q: usize, w: &[String]) -> Option<usize> {
    let mut s = q;
    for l in w {
        let c = d.alphabet().index_of(l)?;
        s = d.next(s, c);
    }
    Some(s)
}

/// Naive Myhill-Nerode: two states are equivalent iff they agree on every
/// word up to length `states`, which suffices for a DFA with that many
/// states.
pub fn table_filling_classes(d: &Dfa) -> usize {
    let n = d.states();
    let k = d.alphabet().len();
    // Reachable states first.
    let mut reach = vec![false; n];
    reach[d.initial()] = true;
    let mut stack = vec![d.initial()];
    while let Some(q) = stack.pop() {
        for c in 0..k {
            let t = d.next(q, c);
            if !reach[t] {
                reach[t] = true;
                stack.push(t);
            }
        }
    }
    let states: Vec<usize> = (0..n).filter(|&q| reach[q]).collect();
    // distinct[p][q] once some word separates p and q.
    let mut distinct = vec![vec![false; n]; n];
    for &p in &states {
        for &q in &states {
            distinct[p][q] = d.is_final(p) != d.is_final(q);
        }
    }
    loop {
        let mut changed = false;
        for &p in &states {
            for &q in &states {
                if distinct[p][q] {
                    continue;
                }
                if (0..k).any(|c| distinct[d.next(p, c)][d.next(q, c)]) {
                    distinct[p][q] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    for &q in &states {
        if !reps.iter().any(|&r| !distinct[r][q]) {
            reps.push(q);
        }
    }
    reps.len()
}

/// `w` splits into factors that all lie in `d`'s language.
pub fn in_star(d: &Dfa, w: &[String]) -> bool {
    let n = w.len();
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for end in 1..=n {
        ok[end] = (0..end).any(|start| ok[start] && member(d, &w[start..end]));
    }
    ok[n]
}

pub fn in_product(l: &Dfa, r: &Dfa, w: &[String]) -> bool {
    (0..=w.len()).any(|i| member(l, &w[..i]) && member(r, &w[i..]))
}

pub fn reversed(w: &[String]) -> Vec<String> {
    w.iter().rev().cloned().collect()
}

/// The set of states from which `w` is accepted.
pub fn accepting_set(d: &Dfa, w: &[String]) -> Vec<usize> {
    (0..d.states())
        .filter(|&q| run_from(d, q, w).is_some_and(|t| d.is_final(t)))
        .collect()
}

pub fn names(d: &Dfa) -> Vec<String> {
    d.alphabet().names()
}
