//! Transformations of `Q_n = {0, …, n-1}` and the semigroups they generate.
//!
//! Composition is written left to right: `compose(s, t)` maps `q` to
//! `(qs)t`, i.e. `s` is applied first.

mod nonreturning;
mod semigroup;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use nonreturning::{
    check_generates_full_nonreturning, check_generator_necessity, enumerate_nonreturning,
    full_nonreturning_size, pair_coverage, removal_outcomes, restrictions_generate_symmetric_group,
    PairCoverage, RemovalOutcome,
};
pub use semigroup::{closure, closure_with, transition_semigroup, ClosureOptions, Semigroup};

use crate::{Error, Result};

/// A total map on `Q_n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transformation {
    images: Vec<u32>,
}

/// The unordered pair `{i, j}` (with `i < j`) collapsed by a rank `n-1`
/// transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairType {
    pub i: usize,
    pub j: usize,
}

impl PairType {
    pub fn new(i: usize, j: usize) -> PairType {
        assert!(i != j, "a pair type needs two distinct states");
        PairType {
            i: i.min(j),
            j: i.max(j),
        }
    }

    /// All `C(n, 2)` pairs in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = PairType> {
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| PairType { i, j }))
    }
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Transformation> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidTransformation("degree must be positive".into()));
        }
        if let Some(&bad) = images.iter().find(|&&t| t >= n) {
            return Err(Error::InvalidTransformation(format!(
                "image {bad} is outside 0..{n}"
            )));
        }
        Ok(Transformation {
            images: images.into_iter().map(|t| t as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Transformation {
        Transformation {
            images: images.into_iter().map(|t| t as u32).collect(),
        }
    }

    pub fn identity(n: usize) -> Transformation {
        Transformation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Transformation {
        assert!(value < n);
        Transformation {
            images: vec![value as u32; n],
        }
    }

    /// The cycle `(q_0, q_1, …, q_{k-1})`, identity elsewhere.
    pub fn cycle(n: usize, states: &[usize]) -> Transformation {
        let mut t = Self::identity(n);
        for (i, &q) in states.iter().enumerate() {
            t.images[q] = states[(i + 1) % states.len()] as u32;
        }
        t
    }

    /// `(p → q)`: sends `p` to `q`, identity elsewhere.
    pub fn mapping(n: usize, p: usize, q: usize) -> Transformation {
        let mut t = Self::identity(n);
        t.images[p] = q as u32;
        t
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, q: usize) -> usize {
        self.images[q] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&t| t as usize).collect()
    }

    /// `self` followed by `other`. Panics on a degree mismatch; see
    /// [`compose`] for the checked form.
    pub fn then(&self, other: &Transformation) -> Transformation {
        assert_eq!(self.degree(), other.degree());
        Transformation {
            images: self.images.iter().map(|&q| other.images[q as usize]).collect(),
        }
    }

    /// `self` applied `k` times; `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> Transformation {
        (0..k).fold(Self::identity(self.degree()), |acc, _| acc.then(self))
    }

    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        self.images.iter().filter(|&&q| !std::mem::replace(&mut seen[q as usize], true)).count()
    }

    /// `{i, j}` if the rank is `n-1` and `it = jt`; `None` otherwise.
    pub fn type_of(&self) -> Option<PairType> {
        let n = self.degree();
        if n < 2 || self.rank() != n - 1 {
            return None;
        }
        let mut first = vec![usize::MAX; n];
        for (q, &t) in self.images.iter().enumerate() {
            let slot = &mut first[t as usize];
            if *slot == usize::MAX {
                *slot = q;
            } else {
                return Some(PairType::new(*slot, q));
            }
        }
        unreachable!("rank n-1 implies exactly one collision")
    }

    /// True iff no state is mapped to 0.
    pub fn is_non_returning(&self) -> bool {
        self.images.iter().all(|&t| t != 0)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    /// All states mapped to `q`.
    pub fn preimage(&self, q: usize) -> Vec<usize> {
        (0..self.degree()).filter(|&p| self.apply(p) == q).collect()
    }

    /// Restriction to `Q_n \ {0}`, relabelled as a transformation of
    /// `{0, …, n-2}` by `q ↦ q - 1`. Requires a non-returning transformation.
    pub fn restrict_without_zero(&self) -> Result<Transformation> {
        if !self.is_non_returning() {
            return Err(Error::ReturningGenerator(self.to_string()));
        }
        Ok(Transformation {
            images: self.images[1..].iter().map(|&t| t - 1).collect(),
        })
    }

    /// Cycle notation in the style `(1,2,3)(0→1)`: nontrivial cycles first,
    /// then the image of every state outside a cycle that moves, by
    /// descending state. Fixed points are omitted; the identity prints as
    /// `id`.
    pub fn cycle_notation(&self) -> String {
        let n = self.degree();
        // A state lies on a cycle iff iterating from it returns to it.
        let on_cycle: Vec<bool> = (0..n)
            .map(|q| {
                let mut p = self.apply(q);
                for _ in 0..n {
                    if p == q {
                        return true;
                    }
                    p = self.apply(p);
                }
                false
            })
            .collect();
        let mut out = String::new();
        let mut done = vec![false; n];
        for q in 0..n {
            if done[q] || !on_cycle[q] || self.apply(q) == q {
                continue;
            }
            let mut cyc = vec![q];
            done[q] = true;
            let mut p = self.apply(q);
            while p != q {
                done[p] = true;
                cyc.push(p);
                p = self.apply(p);
            }
            let inner: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("({})", inner.join(",")));
        }
        for q in (0..n).rev() {
            if !on_cycle[q] {
                out.push_str(&format!("({}→{})", q, self.apply(q)));
            }
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

/// Left-to-right composition: the result maps `q` to `(qs)t`.
pub fn compose(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    if s.degree() != t.degree() {
        return Err(Error::DegreeMismatch(s.degree(), t.degree()));
    }
    Ok(s.then(t))
}

pub fn rank(t: &Transformation) -> usize {
    t.rank()
}

pub fn type_of(t: &Transformation) -> Option<PairType> {
    t.type_of()
}

pub fn is_non_returning_transform(t: &Transformation) -> bool {
    t.is_non_returning()
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the bracketed literal `[1,2,3,1]`.
impl FromStr for Transformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Transformation> {
        let bad = || Error::InvalidTransformation(format!("cannot parse `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let images = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Transformation::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = t(&[1, 2, 3, 1]);
        let b = t(&[2, 2, 1, 3]);
        assert_eq!(compose(&a, &b).unwrap(), t(&[2, 1, 3, 2]));
        assert_eq!(compose(&a, &Transformation::identity(4)).unwrap(), a);
        assert!(matches!(
            compose(&a, &Transformation::identity(3)),
            Err(Error::DegreeMismatch(4, 3))
        ));
    }

    #[test]
    fn rank_and_type() {
        assert_eq!(Transformation::identity(4).rank(), 4);
        assert_eq!(Transformation::constant(4, 2).rank(), 1);
        assert_eq!(Transformation::constant(4, 2).type_of(), None);
        assert_eq!(Transformation::identity(4).type_of(), None);
        assert_eq!(t(&[1, 2, 3, 1]).type_of(), Some(PairType::new(0, 3)));
        assert_eq!(t(&[2, 2, 1, 3]).type_of(), Some(PairType::new(0, 1)));
    }

    #[test]
    fn non_returning() {
        assert!(t(&[1, 2, 3, 1]).is_non_returning());
        assert!(!Transformation::identity(4).is_non_returning());
        assert!(!Transformation::mapping(4, 1, 0).is_non_returning());
    }

    #[test]
    fn builders_match_notation() {
        let a = Transformation::cycle(5, &[1, 2, 3, 4]).then(&Transformation::identity(5));
        assert_eq!(a.images(), vec![0, 2, 3, 4, 1]);
        assert_eq!(t(&[1, 2, 3, 1]).cycle_notation(), "(1,2,3)(0→1)");
        assert_eq!(t(&[2, 2, 1, 3]).cycle_notation(), "(1,2)(0→2)");
        assert_eq!(t(&[1, 2, 3, 2]).cycle_notation(), "(2,3)(1→2)(0→1)");
        assert_eq!(Transformation::identity(3).cycle_notation(), "id");
    }

    #[test]
    fn literal_round_trip() {
        let a: Transformation = "[1, 2,3,1]".parse().unwrap();
        assert_eq!(a.to_string(), "[1,2,3,1]");
        assert!("[1,4]".parse::<Transformation>().is_err());
        assert!("1,2".parse::<Transformation>().is_err());
        assert!("[]".parse::<Transformation>().is_err());
    }

    #[test]
    fn restriction_drops_zero() {
        let a = t(&[1, 2, 3, 1]);
        assert_eq!(a.restrict_without_zero().unwrap().images(), vec![1, 2, 0]);
        assert!(Transformation::identity(3).restrict_without_zero().is_err());
    }
}
