//! Reversal, star, product and the four proper boolean operations.
//!
//! Every operation builds an NFA or a direct product from its operands,
//! determinizes if needed and returns the minimal DFA of the result.
//!
//! Binary operations come in two modes. In restricted mode both operands
//! must have the same alphabet. In unrestricted mode the alphabets may
//! differ: each operand is completed over `Σ' ∪ Σ` with an empty state, and
//! the result is taken over
//!
//! * `Σ' ∪ Σ` for product, union and symmetric difference,
//! * `Σ'` (the left alphabet) for difference,
//! * `Σ' ∩ Σ` for intersection, which may be empty.

mod bounds;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automata::{determinize, minimize, Alphabet, Dfa, Nfa};
use crate::{Error, Result};

pub use bounds::{alternative_bounds, bound_for, formula_for, BoundFormula, OpId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BooleanOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BooleanOp {
    pub const ALL: [BooleanOp; 4] = [
        BooleanOp::Union,
        BooleanOp::Intersection,
        BooleanOp::Difference,
        BooleanOp::SymmetricDifference,
    ];

    pub fn eval(self, left: bool, right: bool) -> bool {
        match self {
            BooleanOp::Union => left || right,
            BooleanOp::Intersection => left && right,
            BooleanOp::Difference => left && !right,
            BooleanOp::SymmetricDifference => left != right,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BooleanOp::Union => "union",
            BooleanOp::Intersection => "intersection",
            BooleanOp::Difference => "difference",
            BooleanOp::SymmetricDifference => "symdiff",
        }
    }

    /// Alphabet of the result in unrestricted mode.
    pub fn result_alphabet(self, left: &Alphabet, right: &Alphabet) -> Alphabet {
        match self {
            BooleanOp::Union | BooleanOp::SymmetricDifference => left.union(right),
            BooleanOp::Difference => left.clone(),
            BooleanOp::Intersection => left.intersection(right),
        }
    }
}

impl fmt::Display for BooleanOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BooleanOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "union" => Ok(BooleanOp::Union),
            "intersection" => Ok(BooleanOp::Intersection),
            "difference" => Ok(BooleanOp::Difference),
            "symdiff" | "symmetric-difference" => Ok(BooleanOp::SymmetricDifference),
            other => Err(Error::UnknownOperation(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpMode {
    #[default]
    Restricted,
    Unrestricted,
}

impl OpMode {
    pub fn as_str(self) -> &'static str {
        match self {
            OpMode::Restricted => "restricted",
            OpMode::Unrestricted => "unrestricted",
        }
    }

    fn check(self, left: &Dfa, right: &Dfa) -> Result<()> {
        if self == OpMode::Restricted && left.alphabet() != right.alphabet() {
            return Err(Error::AlphabetMismatch {
                left: left.alphabet().names(),
                right: right.alphabet().names(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for OpMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Minimal DFA of the reversed language.
pub fn reverse(d: &Dfa) -> Dfa {
    minimize(&determinize(&d.reverse()))
}

/// Minimal DFA of `L*`.
///
/// Every final state gets the outgoing transitions of the initial state. The
/// initial state itself is made final when no transition enters it (or when
/// it is already final); otherwise a fresh final initial state copying its
/// transitions is added, so that `ε` is accepted without accepting more.
pub fn star(d: &Dfa) -> Dfa {
    let n = d.states();
    let k = d.alphabet().len();
    let q0 = d.initial();
    let entered = (0..n).any(|q| (0..k).any(|c| d.next(q, c) == q0));
    let fresh = entered && !d.is_final(q0);
    let mut m = Nfa::new(n + usize::from(fresh), d.alphabet().clone());
    for q in 0..n {
        for c in 0..k {
            m.add_transition(q, c, d.next(q, c));
            if d.is_final(q) {
                m.add_transition(q, c, d.next(q0, c));
            }
        }
        if d.is_final(q) {
            m.set_final(q);
        }
    }
    if fresh {
        for c in 0..k {
            m.add_transition(n, c, d.next(q0, c));
        }
        m.add_initial(n);
        m.set_final(n);
    } else {
        m.add_initial(q0);
        m.set_final(q0);
    }
    minimize(&determinize(&m))
}

/// Minimal DFA of the concatenation `L' L`, over `Σ' ∪ Σ`.
pub fn product(left: &Dfa, right: &Dfa, mode: OpMode) -> Result<Dfa> {
    mode.check(left, right)?;
    let sigma = left.alphabet().union(right.alphabet());
    let (m, n) = (left.states(), right.states());
    let lcols: Vec<Option<usize>> = sigma.iter().map(|l| left.alphabet().index_of(l.as_str())).collect();
    let rcols: Vec<Option<usize>> = sigma.iter().map(|l| right.alphabet().index_of(l.as_str())).collect();
    let mut nfa = Nfa::new(m + n, sigma.clone());
    let r0 = right.initial();
    for c in 0..sigma.len() {
        if let Some(lc) = lcols[c] {
            for p in 0..m {
                nfa.add_transition(p, c, left.next(p, lc));
            }
        }
        if let Some(rc) = rcols[c] {
            for q in 0..n {
                nfa.add_transition(m + q, c, m + right.next(q, rc));
            }
            for f in left.finals() {
                nfa.add_transition(f, c, m + right.next(r0, rc));
            }
        }
    }
    nfa.add_initial(left.initial());
    for q in right.finals() {
        nfa.set_final(m + q);
    }
    if right.is_final(r0) {
        for f in left.finals() {
            nfa.set_final(f);
        }
    }
    Ok(minimize(&determinize(&nfa)))
}

/// Direct product of the two operands completed over `Σ' ∪ Σ`, before any
/// restriction or minimization.
pub fn boolean_product(left: &Dfa, right: &Dfa, op: BooleanOp) -> Result<Dfa> {
    let sigma = left.alphabet().union(right.alphabet());
    let l = left.extend_alphabet(&sigma)?;
    let r = right.extend_alphabet(&sigma)?;
    let (m, n, k) = (l.states(), r.states(), sigma.len());
    let mut delta = Vec::with_capacity(m * n * k);
    let mut finals = Vec::with_capacity(m * n);
    for p in 0..m {
        for q in 0..n {
            for c in 0..k {
                delta.push((l.next(p, c) * n + r.next(q, c)) as u32);
            }
            finals.push(op.eval(l.is_final(p), r.is_final(q)));
        }
    }
    Ok(Dfa::from_parts(
        sigma,
        m * n,
        delta,
        l.initial() * n + r.initial(),
        finals,
    ))
}

/// Minimal DFA of `L' ∘ L` over the result alphabet of the mode.
pub fn boolean(left: &Dfa, right: &Dfa, op: BooleanOp, mode: OpMode) -> Result<Dfa> {
    mode.check(left, right)?;
    let full = boolean_product(left, right, op)?;
    let target = op.result_alphabet(left.alphabet(), right.alphabet());
    Ok(minimize(&full.restrict_alphabet(&target)?))
}
