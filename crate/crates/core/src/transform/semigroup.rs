//! Breadth-first semigroup closure.
//!
//! Elements are packed four bits per state into a `u64`, which limits the
//! degree to 16. The frontier of each round is right-multiplied by every
//! generator; new elements keep a pointer to the element and generator that
//! produced them, so every element has a shortest generating word.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::Transformation;
use crate::automata::Dfa;
use crate::{Error, Result};

const MAX_DEGREE: usize = 16;
const NO_PARENT: u32 = u32::MAX;
const PARALLEL_FRONTIER: usize = 1 << 12;

#[derive(Clone, Copy, Debug)]
pub struct ClosureOptions {
    /// Abort with [`Error::BudgetExceeded`] once the closure would exceed
    /// this many elements.
    pub budget: u64,
    /// Compute products of large frontiers on the rayon pool. The element
    /// order is the same either way.
    pub parallel: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            budget: 100_000_000,
            parallel: true,
        }
    }
}

/// A transformation semigroup enumerated from its generators.
#[derive(Clone, Debug)]
pub struct Semigroup {
    degree: usize,
    generators: Vec<Transformation>,
    elements: Vec<u64>,
    // (parent element, generator); parent is NO_PARENT for generators.
    parents: Vec<(u32, u32)>,
    index: FxHashMap<u64, u32>,
}

#[inline]
fn pack(t: &Transformation) -> u64 {
    (0..t.degree()).fold(0u64, |acc, q| acc | (t.apply(q) as u64) << (4 * q))
}

#[inline]
fn unpack(code: u64, degree: usize) -> Transformation {
    Transformation::from_images_unchecked(
        (0..degree).map(|q| (code >> (4 * q) & 0xF) as usize).collect(),
    )
}

#[inline]
fn compose_packed(s: u64, t: u64, degree: usize) -> u64 {
    let mut r = 0u64;
    for q in 0..degree {
        let mid = s >> (4 * q) & 0xF;
        r |= (t >> (4 * mid) & 0xF) << (4 * q);
    }
    r
}

impl Semigroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        t.degree() == self.degree && self.index.contains_key(&pack(t))
    }

    pub fn get(&self, i: usize) -> Transformation {
        unpack(self.elements[i], self.degree)
    }

    pub fn iter(&self) -> impl Iterator<Item = Transformation> + '_ {
        self.elements.iter().map(|&c| unpack(c, self.degree))
    }

    /// Shortest word of generator indices producing element `i`, read left
    /// to right.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = i as u32;
        loop {
            let (parent, g) = self.parents[cur as usize];
            word.push(g as usize);
            if parent == NO_PARENT {
                break;
            }
            cur = parent;
        }
        word.reverse();
        word
    }

    /// Evaluates a generator word.
    pub fn evaluate(&self, word: &[usize]) -> Transformation {
        word.iter()
            .fold(Transformation::identity(self.degree), |acc, &g| acc.then(&self.generators[g]))
    }

    /// Number of elements that are permutations.
    pub fn permutation_count(&self) -> usize {
        let n = self.degree;
        self.elements
            .iter()
            .filter(|&&c| {
                let mut seen = 0u32;
                for q in 0..n {
                    seen |= 1 << (c >> (4 * q) & 0xF);
                }
                seen.count_ones() as usize == n
            })
            .count()
    }
}

/// The least composition-closed set containing `generators`.
pub fn closure(generators: &[Transformation]) -> Result<Semigroup> {
    closure_with(generators, ClosureOptions::default())
}

pub fn closure_with(generators: &[Transformation], options: ClosureOptions) -> Result<Semigroup> {
    let degree = generators
        .first()
        .ok_or_else(|| Error::Precondition("closure needs at least one generator".into()))?
        .degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch(degree, g.degree()));
    }
    if degree > MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "closure supports degree <= {MAX_DEGREE}, got {degree}"
        )));
    }
    let packed: Vec<u64> = generators.iter().map(pack).collect();
    let mut elements: Vec<u64> = Vec::new();
    let mut parents: Vec<(u32, u32)> = Vec::new();
    let mut index: FxHashMap<u64, u32> = FxHashMap::default();

    let mut insert = |code: u64,
                      parent: (u32, u32),
                      elements: &mut Vec<u64>,
                      parents: &mut Vec<(u32, u32)>|
     -> Result<bool> {
        if index.contains_key(&code) {
            return Ok(false);
        }
        if elements.len() as u64 >= options.budget {
            return Err(Error::BudgetExceeded {
                budget: options.budget,
            });
        }
        index.insert(code, elements.len() as u32);
        elements.push(code);
        parents.push(parent);
        Ok(true)
    };

    for (g, &code) in packed.iter().enumerate() {
        insert(code, (NO_PARENT, g as u32), &mut elements, &mut parents)?;
    }
    let mut frontier: std::ops::Range<usize> = 0..elements.len();
    while !frontier.is_empty() {
        let next_start = elements.len();
        let products: Vec<(u64, u32, u32)> =
            if options.parallel && frontier.len() >= PARALLEL_FRONTIER {
                let slice = &elements[frontier.clone()];
                let base = frontier.start;
                slice
                    .par_iter()
                    .enumerate()
                    .flat_map_iter(|(i, &s)| {
                        packed.iter().enumerate().map(move |(g, &t)| {
                            (compose_packed(s, t, degree), (base + i) as u32, g as u32)
                        })
                    })
                    .collect()
            } else {
                frontier
                    .clone()
                    .flat_map(|i| {
                        let s = elements[i];
                        packed
                            .iter()
                            .enumerate()
                            .map(move |(g, &t)| (compose_packed(s, t, degree), i as u32, g as u32))
                    })
                    .collect()
            };
        for (code, parent, g) in products {
            insert(code, (parent, g), &mut elements, &mut parents)?;
        }
        frontier = next_start..elements.len();
    }
    Ok(Semigroup {
        degree,
        generators: generators.to_vec(),
        elements,
        parents,
        index,
    })
}

/// The semigroup of transformations induced by non-empty words.
pub fn transition_semigroup(d: &Dfa) -> Result<Semigroup> {
    let gens: Vec<Transformation> = (0..d.alphabet().len())
        .map(|c| d.letter_transformation(c))
        .collect();
    closure(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn identity_closure_has_one_element() {
        assert_eq!(closure(&[Transformation::identity(4)]).unwrap().len(), 1);
    }

    #[test]
    fn powers_of_the_witness_a() {
        // [1,2,3,1] has powers a, a², a³ and then a⁴ = a.
        let s = closure(&[t(&[1, 2, 3, 1])]).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn symmetric_group_from_two_generators() {
        let s = closure(&[t(&[1, 2, 3, 4, 0]), t(&[1, 0, 2, 3, 4])]).unwrap();
        assert_eq!(s.len(), 120);
        assert_eq!(s.permutation_count(), 120);
    }

    #[test]
    fn words_reproduce_elements() {
        let s = closure(&[t(&[1, 2, 3, 1]), t(&[2, 2, 1, 3]), t(&[1, 2, 3, 2])]).unwrap();
        for i in 0..s.len() {
            assert_eq!(s.evaluate(&s.word(i)), s.get(i));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let opts = ClosureOptions {
            budget: 10,
            parallel: false,
        };
        let err = closure_with(&[t(&[1, 2, 3, 4, 0]), t(&[1, 0, 2, 3, 4])], opts).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { budget: 10 });
    }

    #[test]
    fn errors() {
        assert!(closure(&[]).is_err());
        assert!(matches!(
            closure(&[Transformation::identity(3), Transformation::identity(4)]),
            Err(Error::DegreeMismatch(3, 4))
        ));
        assert!(matches!(
            closure(&[Transformation::identity(17)]),
            Err(Error::Unsupported(_))
        ));
    }
}
