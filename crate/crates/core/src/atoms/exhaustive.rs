//! Exhaustive search over binary non-returning DFAs for the largest number
//! of atoms.
//!
//! Every DFA on `Q_n` with initial state 0 whose letters `a` and `b` avoid 0
//! is visited, for every final set. Non-minimal DFAs are skipped. For an
//! accessible DFA the subset construction applied to its reversal is already
//! minimal, so the atom count is just the number of subsets reachable from
//! `F` under preimages.
//!
//! Relabelling the non-initial states does not change the atom count or
//! minimality, so by default only one letter pair per orbit of `S_{n-1}` is
//! visited and its results are weighted by the orbit size. The weighted
//! totals must then equal the plain totals.

use rayon::prelude::*;

use crate::automata::{Dfa, DfaBuilder};
use crate::report::{ClaimReport, Params, Relation};
use crate::{Error, Result};

/// Largest `n` searched without an explicit override.
pub const DEFAULT_MAX_N: usize = 5;
const HARD_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug)]
pub struct BinarySearchOptions {
    pub n: usize,
    /// Visit one letter pair per relabelling orbit.
    pub canonicalize: bool,
    /// Maximum number of (pair, final set) combinations actually examined.
    pub budget: u64,
    /// Permit `n` above [`DEFAULT_MAX_N`].
    pub allow_large: bool,
}

impl BinarySearchOptions {
    pub fn new(n: usize) -> Self {
        BinarySearchOptions {
            n,
            canonicalize: true,
            budget: 100_000_000,
            allow_large: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BinarySearchSummary {
    pub n: usize,
    pub canonicalized: bool,
    /// `(n-1)^(2n) * 2^n`, every DFA in the search space.
    pub total_dfas: u64,
    /// Letter pairs visited (one per orbit when canonicalized).
    pub pairs_visited: u64,
    /// Sum of orbit sizes of the visited pairs; equals `(n-1)^(2n)`.
    pub orbit_total: u64,
    /// Number of minimal DFAs in the whole space (orbit-weighted).
    pub minimal: u64,
    pub non_minimal: u64,
    pub max_atoms: usize,
    /// Number of minimal DFAs attaining the maximum (orbit-weighted).
    pub max_count: u64,
    /// The first maximizer in enumeration order.
    pub example: Option<Dfa>,
}

impl BinarySearchSummary {
    pub fn report(&self) -> ClaimReport {
        let mut params = Params::n(self.n);
        params.variant = Some(if self.canonicalized { "canonical" } else { "plain" }.into());
        ClaimReport::new(
            "prop4-binary-exhaustive",
            params,
            "2^n",
            1u64 << self.n,
            Relation::LessThan,
            self.max_atoms as u64,
        )
        .note(format!(
            "{} DFAs, {} minimal, {} filtered as non-minimal; maximum attained by {}",
            self.total_dfas, self.minimal, self.non_minimal, self.max_count
        ))
    }
}

struct Space {
    /// All non-returning transformations in lexicographic order.
    maps: Vec<[u8; HARD_MAX_N]>,
    /// `conj[p][t]`: index of `t` relabelled by permutation `p`.
    conj: Vec<Vec<u32>>,
}

impl Space {
    fn new(n: usize, canonicalize: bool) -> Space {
        let base = n - 1;
        let count = base.pow(n as u32);
        let maps: Vec<[u8; HARD_MAX_N]> = (0..count)
            .map(|mut idx| {
                let mut m = [0u8; HARD_MAX_N];
                for q in (0..n).rev() {
                    m[q] = (idx % base + 1) as u8;
                    idx /= base;
                }
                m
            })
            .collect();
        let perms = if canonicalize {
            permutations_fixing_zero(n)
        } else {
            Vec::new()
        };
        let encode = |m: &[u8]| m[..n].iter().fold(0usize, |acc, &v| acc * base + v as usize - 1);
        let conj = perms
            .iter()
            .map(|p| {
                maps.iter()
                    .map(|t| {
                        let mut out = [0u8; HARD_MAX_N];
                        for q in 0..n {
                            out[p[q] as usize] = p[t[q] as usize];
                        }
                        encode(&out) as u32
                    })
                    .collect()
            })
            .collect();
        Space { maps, conj }
    }

    /// Orbit size of `(a, b)` if it is the least element of its orbit.
    fn canonical_orbit(&self, a: usize, b: usize) -> Option<u64> {
        let mut stabilizer = 0u64;
        for c in &self.conj {
            let image = (c[a] as usize, c[b] as usize);
            if image < (a, b) {
                return None;
            }
            if image == (a, b) {
                stabilizer += 1;
            }
        }
        Some(self.conj.len() as u64 / stabilizer)
    }
}

fn permutations_fixing_zero(n: usize) -> Vec<[u8; HARD_MAX_N]> {
    let mut out = Vec::new();
    let mut rest: Vec<u8> = (1..n as u8).collect();
    heap_permute(&mut rest, n - 1, &mut |perm| {
        let mut p = [0u8; HARD_MAX_N];
        p[1..n].copy_from_slice(perm);
        out.push(p);
    });
    out.sort();
    out
}

fn heap_permute(items: &mut [u8], k: usize, emit: &mut impl FnMut(&[u8])) {
    if k <= 1 {
        emit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(items, k - 1, emit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permute(items, k - 1, emit);
}

/// Minimality test for a two-letter DFA with initial state 0.
fn is_minimal_binary(n: usize, a: &[u8], b: &[u8], finals: u32) -> bool {
    let mut seen = 1u32;
    let mut stack = vec![0usize];
    while let Some(q) = stack.pop() {
        for t in [a[q], b[q]] {
            if seen >> t & 1 == 0 {
                seen |= 1 << t;
                stack.push(t as usize);
            }
        }
    }
    if seen != (1u32 << n) - 1 {
        return false;
    }
    let mut class: Vec<u32> = (0..n).map(|q| finals >> q & 1).collect();
    let mut classes = if finals == 0 || finals == (1 << n) - 1 { 1 } else { 2 };
    loop {
        let mut sigs: Vec<(u32, u32, u32)> = (0..n)
            .map(|q| (class[q], class[a[q] as usize], class[b[q] as usize]))
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == classes {
            return classes == n;
        }
        classes = sorted.len();
        for (q, sig) in sigs.iter_mut().enumerate() {
            class[q] = sorted.binary_search(sig).expect("signature present") as u32;
        }
    }
}

/// Subsets reachable from `F` under preimages of `a` and `b`.
fn reversal_size(n: usize, a: &[u8], b: &[u8], finals: u32) -> usize {
    let preimage = |m: &[u8], x: u32| -> u32 {
        (0..n).filter(|&q| x >> m[q] & 1 == 1).fold(0, |acc, q| acc | 1 << q)
    };
    let mut seen = vec![false; 1 << n];
    seen[finals as usize] = true;
    let mut stack = vec![finals];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for m in [a, b] {
            let y = preimage(m, x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

#[derive(Clone, Copy, Default)]
struct Tally {
    pairs: u64,
    orbit_total: u64,
    minimal: u64,
    max_atoms: usize,
    max_count: u64,
    /// Enumeration key (a, b, F) of the first maximizer.
    example: Option<(usize, usize, u32)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.pairs += other.pairs;
        self.orbit_total += other.orbit_total;
        self.minimal += other.minimal;
        match other.max_atoms.cmp(&self.max_atoms) {
            std::cmp::Ordering::Greater => {
                self.max_atoms = other.max_atoms;
                self.max_count = other.max_count;
                self.example = other.example;
            }
            std::cmp::Ordering::Equal => {
                self.max_count += other.max_count;
                self.example = match (self.example, other.example) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                };
            }
            std::cmp::Ordering::Less => {}
        }
        self
    }
}

pub fn binary_search(options: BinarySearchOptions) -> Result<BinarySearchSummary> {
    let n = options.n;
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} is too small for the search")));
    }
    if n > HARD_MAX_N || (n > DEFAULT_MAX_N && !options.allow_large) {
        return Err(Error::Unsupported(format!(
            "exhaustive search at n = {n} exceeds the limit of {}",
            if options.allow_large { HARD_MAX_N } else { DEFAULT_MAX_N }
        )));
    }
    let pair_count = ((n - 1) as u64).pow(2 * n as u32);
    let factorial: u64 = (1..n as u64).product();
    let expected_visits = if options.canonicalize {
        pair_count / factorial << n
    } else {
        pair_count << n
    };
    if expected_visits > options.budget {
        return Err(Error::BudgetExceeded {
            budget: options.budget,
        });
    }
    let space = Space::new(n, options.canonicalize);
    let maps = space.maps.len();
    let tally = (0..maps)
        .into_par_iter()
        .map(|ai| {
            let mut t = Tally::default();
            for bi in 0..maps {
                let weight = if options.canonicalize {
                    match space.canonical_orbit(ai, bi) {
                        Some(w) => w,
                        None => continue,
                    }
                } else {
                    1
                };
                t.pairs += 1;
                t.orbit_total += weight;
                let (a, b) = (&space.maps[ai][..n], &space.maps[bi][..n]);
                for f in 0..1u32 << n {
                    if !is_minimal_binary(n, a, b, f) {
                        continue;
                    }
                    t.minimal += weight;
                    let atoms = reversal_size(n, a, b, f);
                    let key = (ai, bi, f);
                    t = t.merge(Tally {
                        max_atoms: atoms,
                        max_count: weight,
                        example: Some(key),
                        ..Tally::default()
                    });
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    if tally.orbit_total != pair_count {
        return Err(Error::Internal(format!(
            "orbit sizes sum to {} instead of {pair_count}",
            tally.orbit_total
        )));
    }
    let example = tally.example.map(|(ai, bi, f)| {
        let img = |i: usize| -> Vec<usize> { space.maps[i][..n].iter().map(|&v| v as usize).collect() };
        DfaBuilder::new(n)
            .images("a", &img(ai))
            .images("b", &img(bi))
            .finals((0..n).filter(|q| f >> q & 1 == 1))
            .build()
            .expect("enumerated DFA is well formed")
    });
    let total = pair_count << n;
    Ok(BinarySearchSummary {
        n,
        canonicalized: options.canonicalize,
        total_dfas: total,
        pairs_visited: tally.pairs,
        orbit_total: tally.orbit_total,
        minimal: tally.minimal,
        non_minimal: total - tally.minimal,
        max_atoms: tally.max_atoms,
        max_count: tally.max_count,
        example,
    })
}

/// Exhaustive search with default options, reported against `2^n`.
pub fn max_atoms_binary_nonreturning(n: usize) -> Result<ClaimReport> {
    Ok(binary_search(BinarySearchOptions::new(n))?.report())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::count_atoms;
    use crate::automata::is_minimal;

    #[test]
    fn permutations() {
        assert_eq!(permutations_fixing_zero(4).len(), 6);
        assert_eq!(permutations_fixing_zero(5).len(), 24);
        let mut p = permutations_fixing_zero(5);
        p.dedup();
        assert_eq!(p.len(), 24);
    }

    #[test]
    fn fast_checks_match_general_code() {
        let space = Space::new(4, false);
        let mut checked = 0;
        for (ai, bi) in [(0usize, 5usize), (7, 40), (13, 80), (26, 3), (50, 60)] {
            let (a, b) = (&space.maps[ai][..4], &space.maps[bi][..4]);
            for f in 0..16u32 {
                let d = DfaBuilder::new(4)
                    .images("a", &a.iter().map(|&v| v as usize).collect::<Vec<_>>())
                    .images("b", &b.iter().map(|&v| v as usize).collect::<Vec<_>>())
                    .finals((0..4).filter(|q| f >> q & 1 == 1))
                    .build()
                    .unwrap();
                assert_eq!(is_minimal_binary(4, a, b, f), is_minimal(&d));
                if is_minimal(&d) {
                    assert_eq!(reversal_size(4, a, b, f), count_atoms(&d).unwrap());
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn n3_plain_and_canonical_agree() {
        let plain = binary_search(BinarySearchOptions {
            canonicalize: false,
            ..BinarySearchOptions::new(3)
        })
        .unwrap();
        let canon = binary_search(BinarySearchOptions::new(3)).unwrap();
        assert_eq!(plain.minimal, canon.minimal);
        assert_eq!(plain.max_atoms, canon.max_atoms);
        assert_eq!(plain.max_count, canon.max_count);
        assert!(canon.pairs_visited < plain.pairs_visited);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            binary_search(BinarySearchOptions::new(6)),
            Err(Error::Unsupported(_))
        ));
        let tight = BinarySearchOptions {
            budget: 10,
            ..BinarySearchOptions::new(4)
        };
        assert_eq!(
            binary_search(tight).unwrap_err(),
            Error::BudgetExceeded { budget: 10 }
        );
    }
}
