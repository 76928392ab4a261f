//! Generator analysis for the full non-returning semigroup `N_n`, the set of
//! all transformations of `Q_n` whose image avoids 0.
//!
//! A generating set of `N_n` must contain an element of every type `{i, j}`,
//! because composing a type-`{i, j}` transformation with anything either
//! keeps that type or drops the rank below `n - 1`. Conversely, one element
//! of each type together with restrictions to `Q_n \ {0}` that generate the
//! symmetric group is enough.

use std::collections::BTreeMap;

use super::{closure, PairType, Transformation};
use crate::report::{ClaimReport, Params, Relation};
use crate::{Error, Result};

/// `|N_n| = (n-1)^n`.
pub fn full_nonreturning_size(n: usize) -> u64 {
    (n as u64 - 1).pow(n as u32)
}

/// Every transformation of `Q_n` avoiding 0, in lexicographic order of image
/// lists.
pub fn enumerate_nonreturning(n: usize) -> Vec<Transformation> {
    let total = full_nonreturning_size(n) as usize;
    let mut out = Vec::with_capacity(total);
    let mut images = vec![1usize; n];
    loop {
        out.push(Transformation::from_images_unchecked(images.clone()));
        // Odometer over {1..n-1}^n, last position fastest.
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if images[pos] + 1 < n {
                images[pos] += 1;
                break;
            }
            images[pos] = 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCoverage {
    /// Generator indices of each type that occurs.
    pub covered: BTreeMap<PairType, Vec<usize>>,
    pub missing: Vec<PairType>,
}

impl PairCoverage {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }
}

pub fn pair_coverage(generators: &[Transformation], n: usize) -> PairCoverage {
    let mut covered: BTreeMap<PairType, Vec<usize>> = BTreeMap::new();
    for (i, g) in generators.iter().enumerate() {
        if let Some(p) = g.type_of() {
            covered.entry(p).or_default().push(i);
        }
    }
    let missing = PairType::all(n).filter(|p| !covered.contains_key(p)).collect();
    PairCoverage { covered, missing }
}

/// Whether the restrictions to `Q_n \ {0}` generate all `(n-1)!`
/// permutations of that set.
pub fn restrictions_generate_symmetric_group(generators: &[Transformation]) -> Result<bool> {
    let restricted = generators
        .iter()
        .map(Transformation::restrict_without_zero)
        .collect::<Result<Vec<_>>>()?;
    let s = closure(&restricted)?;
    let m = s.degree();
    let factorial: usize = (1..=m).product();
    Ok(s.permutation_count() == factorial)
}

fn check_degree(generators: &[Transformation], n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("degree {n} is too small")));
    }
    for g in generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(n, g.degree()));
        }
        if !g.is_non_returning() {
            return Err(Error::ReturningGenerator(g.to_string()));
        }
    }
    if generators.is_empty() {
        return Err(Error::Precondition("no generators".into()));
    }
    Ok(())
}

/// Measures the closure of `generators` against `(n-1)^n` and attaches the
/// sufficiency certificate (pair coverage plus symmetric-group restriction).
pub fn check_generates_full_nonreturning(
    generators: &[Transformation],
    n: usize,
) -> Result<ClaimReport> {
    check_degree(generators, n)?;
    let size = closure(generators)?.len() as u64;
    let expected = full_nonreturning_size(n);
    let coverage = pair_coverage(generators, n);
    let symmetric = restrictions_generate_symmetric_group(generators)?;
    let mut report = ClaimReport::new(
        "thm1.1-semigroup",
        Params::n(n),
        "(n-1)^n",
        expected,
        Relation::Equal,
        size,
    )
    .note(format!(
        "certificate: pair types covered {}/{}, restrictions generate S_{}: {}",
        coverage.covered.len(),
        n * (n - 1) / 2,
        n - 1,
        symmetric
    ));
    if !coverage.missing.is_empty() {
        let missing: Vec<String> = coverage.missing.iter().map(|p| p.to_string()).collect();
        report = report.note(format!("missing types: {}", missing.join(" ")));
    }
    let certified = coverage.is_complete() && symmetric;
    if certified && size != expected {
        report = report.fail("certificate holds but the closure is not N_n");
    }
    Ok(report)
}

/// Closure size after deleting one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalOutcome {
    pub generator: usize,
    pub pair_type: Option<PairType>,
    /// No other generator has the same type.
    pub unique_type: bool,
    pub closure_size: u64,
}

pub fn removal_outcomes(generators: &[Transformation], n: usize) -> Result<Vec<RemovalOutcome>> {
    check_degree(generators, n)?;
    let coverage = pair_coverage(generators, n);
    (0..generators.len())
        .map(|i| {
            let rest: Vec<Transformation> = generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let size = if rest.is_empty() {
                0
            } else {
                closure(&rest)?.len() as u64
            };
            let pair_type = generators[i].type_of();
            Ok(RemovalOutcome {
                generator: i,
                pair_type,
                unique_type: pair_type.is_some_and(|p| coverage.covered[&p].len() == 1),
                closure_size: size,
            })
        })
        .collect()
}

/// For a generating set of `N_n`: every pair type is present, and deleting a
/// generator whose type occurs once shrinks the closure, so at least
/// `C(n, 2)` generators are required.
pub fn check_generator_necessity(generators: &[Transformation], n: usize) -> Result<ClaimReport> {
    check_degree(generators, n)?;
    let full = full_nonreturning_size(n);
    let size = closure(generators)?.len() as u64;
    if size != full {
        return Err(Error::Precondition(format!(
            "generators produce {size} elements, not |N_{n}| = {full}"
        )));
    }
    let coverage = pair_coverage(generators, n);
    let outcomes = removal_outcomes(generators, n)?;
    let pairs = (n * (n - 1) / 2) as u64;
    let mut report = ClaimReport::new(
        "thm1.1-generators",
        Params::n(n),
        "C(n,2)",
        pairs,
        Relation::Equal,
        coverage.covered.len() as u64,
    )
    .note(format!("{} generators supplied", generators.len()));
    let not_needed: Vec<usize> = outcomes
        .iter()
        .filter(|o| o.unique_type && o.closure_size == full)
        .map(|o| o.generator)
        .collect();
    let redundant = outcomes.iter().filter(|o| o.closure_size == full).count();
    report = report.note(format!("{redundant} generators are individually redundant"));
    if !not_needed.is_empty() {
        report = report.fail(format!(
            "generators {not_needed:?} have a unique type but are not needed"
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_formula() {
        for n in 2..=5 {
            let all = enumerate_nonreturning(n);
            assert_eq!(all.len() as u64, full_nonreturning_size(n));
            assert!(all.iter().all(Transformation::is_non_returning));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn all_of_n4_generates_n4() {
        let all = enumerate_nonreturning(4);
        let r = check_generates_full_nonreturning(&all, 4).unwrap();
        assert!(r.passed());
        assert_eq!(r.measured, 81);
    }

    #[test]
    fn returning_generator_rejected() {
        let err = check_generates_full_nonreturning(&[Transformation::identity(4)], 4).unwrap_err();
        assert!(matches!(err, Error::ReturningGenerator(_)));
    }

    #[test]
    fn necessity_needs_full_closure() {
        let a = Transformation::new(vec![1, 2, 3, 1]).unwrap();
        assert!(matches!(
            check_generator_necessity(&[a], 4),
            Err(Error::Precondition(_))
        ));
    }
}
