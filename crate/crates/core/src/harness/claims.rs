use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{sample, Range, RunConfig};
use crate::atoms::{
    alphabet_size_needed_for_max_atoms, all_atom_complexities, atom_bound, atom_bound_printed,
    atom_dfa, binary_search, count_atoms, BinarySearchOptions,
};
use crate::automata::{complexity, quotient_complexities, Dfa, Letter};
use crate::ops::{
    alternative_bounds, boolean, formula_for, product, reverse, star, BooleanOp, OpId, OpMode,
};
use crate::report::{ClaimReport, Params, Relation};
use crate::transform::{
    check_generator_necessity, closure_with, full_nonreturning_size, ClosureOptions, Transformation,
};
use crate::witness::{build_witness, witness_is_valid, GammaVariant, Witness, WitnessId};
use crate::{Error, Result};

/// Dialects whose minimality the operation results rely on. `b,a,-,d` is
/// the dialect in which `a` and `b` swap roles and `d` keeps its own.
const DIALECTS: [&str; 8] = [
    "a,b,c,d,G", "a,b,c", "a,b", "b,a", "a,-,b", "a,-,b,d", "b,a,-,d", "a",
];

type Runner = fn(&Ctx) -> Result<Vec<ClaimReport>>;

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    default_n: Range,
    long_n: Range,
    max_n: usize,
    max_n_long: usize,
    /// `Some` for claims over pairs `(m, n)`.
    default_m: Option<Range>,
    runner: Runner,
}

pub(super) struct Ctx<'a> {
    n: Range,
    m: Range,
    config: &'a RunConfig,
}

impl Claim {
    pub fn is_binary(&self) -> bool {
        self.default_m.is_some()
    }

    pub fn default_range(&self, long: bool) -> Range {
        if long {
            self.long_n
        } else {
            self.default_n
        }
    }

    pub fn run(&self, config: &RunConfig) -> Result<Vec<ClaimReport>> {
        let n = config.n.unwrap_or_else(|| self.default_range(config.long));
        let m = match self.default_m {
            Some(def) => config.m.unwrap_or(if config.n.is_some() { n } else { def }),
            None => Range::new(0, 0),
        };
        let cap = if config.long { self.max_n_long } else { self.max_n };
        let lo = self.default_n.lo.min(4);
        for (name, r) in [("n", n), ("m", m)] {
            if name == "m" && !self.is_binary() {
                continue;
            }
            if r.lo < lo || r.hi > cap {
                return Err(Error::Precondition(format!(
                    "{}: {name} range {r} is outside {lo}..{cap}{}",
                    self.id,
                    if config.long { "" } else { " (more with --long)" }
                )));
            }
        }
        (self.runner)(&Ctx { n, m, config })
    }
}

macro_rules! claim {
    ($id:expr, $summary:expr, $n:expr, $long:expr, $max:expr, $max_long:expr, $m:expr, $f:expr) => {
        Claim {
            id: $id,
            summary: $summary,
            default_n: Range { lo: $n.0, hi: $n.1 },
            long_n: Range { lo: $long.0, hi: $long.1 },
            max_n: $max,
            max_n_long: $max_long,
            default_m: $m,
            runner: $f,
        }
    };
}

const PAIRS: Option<Range> = Some(Range { lo: 4, hi: 8 });
const SMALL_PAIRS: Option<Range> = Some(Range { lo: 4, hi: 6 });

static REGISTRY: [Claim; 20] = [
    claim!("bounds-random-soundness", "random non-returning operands never exceed the operation bounds", (4, 6), (4, 6), 6, 7, None, random_soundness),
    claim!("prop4-binary-exhaustive", "binary non-returning DFAs have fewer than 2^n atoms", (4, 4), (4, 5), 4, 5, None, binary_exhaustive),
    claim!("thm1.0-witness-valid", "every witness dialect is minimal and non-returning", (4, 10), (4, 12), 12, 16, None, witness_valid),
    claim!("thm1.1-generators", "N_n needs one generator of every type {i,j}", (4, 5), (4, 6), 5, 6, None, generators),
    claim!("thm1.1-semigroup", "the transition semigroup of L_n(Σ) is N_n", (4, 6), (4, 7), 6, 8, None, semigroup_corrected),
    claim!("thm1.1-semigroup-printed", "the semigroup with the printed Γ' is smaller than N_n", (4, 6), (4, 7), 6, 8, None, semigroup_printed),
    claim!("thm1.2-quotients", "quotients of L_n(a) have complexity n and n-1", (4, 10), (4, 16), 16, 24, None, quotients),
    claim!("thm1.3-atoms", "L_n(a,b,c) has 2^n atoms", (4, 8), (4, 10), 9, 11, None, atoms_count),
    claim!("thm1.3-reverse", "the reverse of L_n(a,b,c) has complexity 2^n", (4, 8), (4, 12), 12, 16, None, reverse_claim),
    claim!("thm1.4-alphabet", "all atoms at their bound force every pair type", (4, 6), (4, 7), 6, 7, None, alphabet_claim),
    claim!("thm1.4-atoms", "atoms of L_n(Σ) meet the atom bound", (4, 7), (4, 8), 7, 8, None, atom_complexities),
    claim!("thm1.5-star", "the star of L_n(a,b) has complexity 2^(n-1)", (4, 12), (4, 14), 14, 16, None, star_claim),
    claim!("thm1.6a-product-restricted", "L'_m(a,b) L_n(a,-,b) has complexity (m-1)2^(n-1)+1", (4, 8), (4, 10), 9, 11, PAIRS, product_restricted),
    claim!("thm1.6b-product-unrestricted", "L'_m(a,b) L_n(a,-,b,d) has complexity m2^(n-1)+1", (4, 8), (4, 10), 9, 11, PAIRS, product_unrestricted),
    claim!("thm1.7a-boolean-restricted", "restricted booleans of L'_m(a,b), L_n(b,a) reach mn-(m+n-2)", (4, 8), (4, 10), 10, 14, PAIRS, boolean_restricted),
    claim!("thm1.7b-boolean-restricted-same-dialect", "restricted booleans of L'_m(a,b), L_n(a,b), m != n, reach mn-(m+n-2)", (4, 8), (4, 10), 10, 14, PAIRS, boolean_same_dialect),
    claim!("thm1.7c-difference-unrestricted", "difference of L'_m(a,b,c), L_n(b,a) over Σ'", (4, 6), (4, 8), 8, 10, SMALL_PAIRS, difference_unrestricted),
    claim!("thm1.7c-intersection-unrestricted", "intersection of L'_m(a,b), L_n(b,a) reaches mn-(m+n-2)", (4, 6), (4, 8), 8, 10, SMALL_PAIRS, intersection_unrestricted),
    claim!("thm1.7c-symdiff-unrestricted", "symmetric difference of L'_m(a,b,c), L_n(b,a,-,d) reaches mn+1", (4, 6), (4, 8), 8, 10, SMALL_PAIRS, symdiff_unrestricted),
    claim!("thm1.7c-union-unrestricted", "union of L'_m(a,b,c), L_n(b,a,-,d) reaches mn+1", (4, 6), (4, 8), 8, 10, SMALL_PAIRS, union_unrestricted),
];

/// Registered claims sorted by id.
pub fn registry() -> &'static [Claim] {
    &REGISTRY
}

fn timed(f: impl FnOnce() -> Result<ClaimReport>) -> Result<ClaimReport> {
    let start = Instant::now();
    let report = f()?;
    Ok(report.with_runtime(start.elapsed().as_secs_f64()))
}

fn wit(n: usize, dialect: &str) -> Result<Witness> {
    build_witness(&WitnessId::new(n, dialect)?)
}

fn left_wit(m: usize, dialect: &str) -> Result<Witness> {
    build_witness(&WitnessId::new(m, dialect)?.primed())
}

fn grid(ctx: &Ctx, skip_equal: bool) -> Vec<(usize, usize)> {
    ctx.m
        .iter()
        .flat_map(|m| ctx.n.iter().map(move |n| (m, n)))
        .filter(|(m, n)| !(skip_equal && m == n))
        .collect()
}

fn per_n(ctx: &Ctx, f: impl Fn(usize) -> Result<ClaimReport> + Sync) -> Result<Vec<ClaimReport>> {
    ctx.n.iter().map(|n| timed(|| f(n))).collect()
}

fn witness_valid(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    for n in ctx.n.iter() {
        for dialect in DIALECTS {
            out.push(timed(|| {
                let w = wit(n, dialect)?;
                let mut r = witness_is_valid(&w.dfa);
                r.params.variant = Some(w.id.name());
                Ok(r)
            })?);
        }
    }
    Ok(out)
}

fn sigma(n: usize, gamma: GammaVariant) -> Result<Vec<Transformation>> {
    let w = build_witness(&WitnessId::new(n, "a,b,c,d,G")?.with_gamma(gamma))?;
    Ok(w.dfa.letter_transformations().into_iter().map(|(_, t)| t).collect())
}

fn closure_size(ctx: &Ctx, gens: &[Transformation]) -> Result<u64> {
    let options = ClosureOptions {
        budget: ctx.config.budget,
        ..ClosureOptions::default()
    };
    Ok(closure_with(gens, options)?.len() as u64)
}

fn semigroup_corrected(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    per_n(ctx, |n| {
        let size = closure_size(ctx, &sigma(n, GammaVariant::Corrected)?)?;
        let mut params = Params::n(n);
        params.variant = Some("corrected".into());
        Ok(ClaimReport::new(
            "thm1.1-semigroup",
            params,
            "(n-1)^n",
            full_nonreturning_size(n),
            Relation::Equal,
            size,
        ))
    })
}

fn semigroup_printed(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    per_n(ctx, |n| {
        let size = closure_size(ctx, &sigma(n, GammaVariant::Printed)?)?;
        let mut params = Params::n(n);
        params.variant = Some("printed".into());
        Ok(ClaimReport::new(
            "thm1.1-semigroup-printed",
            params,
            "(n-1)^n",
            full_nonreturning_size(n),
            Relation::LessThan,
            size,
        )
        .discrepancy("the printed Γ' repeats type {0,2} and omits {1,2}, so the closure misses N_n"))
    })
}

fn generators(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    per_n(ctx, |n| {
        let mut r = check_generator_necessity(&sigma(n, GammaVariant::Corrected)?, n)?;
        r.params.variant = Some("corrected".into());
        Ok(r)
    })
}

fn quotients(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    for n in ctx.n.iter() {
        let start = Instant::now();
        let w = wit(n, "a")?;
        let q = quotient_complexities(&w.dfa);
        let secs = start.elapsed().as_secs_f64();
        let first = q.iter().find(|(s, _)| *s == 0).map_or(0, |x| x.1);
        let mut p0 = Params::n(n);
        p0.state = Some(0);
        out.push(
            ClaimReport::new("thm1.2-quotients", p0, "n", n as u64, Relation::Equal, first as u64)
                .with_runtime(secs),
        );
        let rest: Vec<usize> = q.iter().filter(|(s, _)| *s != 0).map(|x| x.1).collect();
        let lo = rest.iter().copied().min().unwrap_or(0);
        let hi = rest.iter().copied().max().unwrap_or(0);
        let mut p = Params::n(n);
        p.variant = Some("states 1..n-1".into());
        let mut r = ClaimReport::new("thm1.2-quotients", p, "n-1", n as u64 - 1, Relation::Equal, hi as u64)
            .with_runtime(secs);
        if lo != hi {
            r = r.fail(format!("non-initial quotients range over {lo}..{hi}"));
        }
        out.push(r);
    }
    Ok(out)
}

fn reverse_claim(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    per_n(ctx, |n| {
        let w = wit(n, "a,b,c")?;
        let measured = reverse(&w.dfa).states() as u64;
        Ok(ClaimReport::new(
            "thm1.3-reverse",
            Params::n(n),
            "2^n",
            formula_for(OpId::Reverse).eval(0, n),
            Relation::Equal,
            measured,
        ))
    })
}

fn atoms_count(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    per_n(ctx, |n| {
        let w = wit(n, "a,b,c")?;
        let count = count_atoms(&w.dfa)? as u64;
        Ok(ClaimReport::new(
            "thm1.3-atoms",
            Params::n(n),
            "2^n",
            1 << n,
            Relation::Equal,
            count,
        )
        .note("atom count agrees with the reversal complexity"))
    })
}

fn binary_exhaustive(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    per_n(ctx, |n| {
        let options = BinarySearchOptions {
            budget: ctx.config.budget,
            allow_large: ctx.config.long,
            ..BinarySearchOptions::new(n)
        };
        Ok(binary_search(options)?.report())
    })
}

fn atom_complexities(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    for n in ctx.n.iter() {
        let start = Instant::now();
        let w = wit(n, "a,b,c,d,G")?;
        let all = all_atom_complexities(&w.dfa)?;
        // Distinguishability: every reachable state of D_S is needed.
        let lemma_failures: Vec<Vec<usize>> = all
            .par_iter()
            .filter(|(s, k)| match k {
                Some(k) => atom_dfa(&w.dfa, s).map_or(true, |d| d.reachable_with_sink() != *k),
                None => false,
            })
            .map(|(s, _)| s.clone())
            .collect();
        let secs = start.elapsed().as_secs_f64();
        for s in 0..=n {
            let sized: Vec<(&Vec<usize>, Option<usize>)> =
                all.iter().filter(|(set, _)| set.len() == s).map(|(set, k)| (set, *k)).collect();
            let bound = atom_bound(n, s);
            let values: Vec<u64> = sized.iter().map(|(_, k)| k.unwrap_or(0) as u64).collect();
            let lo = values.iter().copied().min().unwrap_or(0);
            let hi = values.iter().copied().max().unwrap_or(0);
            let mut p = Params::n(n);
            p.variant = Some(format!("|S|={s}"));
            let formula = if s == 0 || s == n {
                "2^(n-1)"
            } else {
                "2+sum_{x=1}^{s} sum_{y=1}^{n-s} C(n-1,x)C(n-1-x,y)"
            };
            let mut r = ClaimReport::new("thm1.4-atoms", p, formula, bound, Relation::Equal, lo)
                .with_runtime(secs)
                .note(format!("{} subsets of size {s}", sized.len()));
            let printed = atom_bound_printed(n, s);
            if printed != bound {
                r = r.alternative("printed", "inner sum to y=s", printed);
            }
            if lo != hi {
                r = r.fail(format!("complexities range over {lo}..{hi}"));
            }
            if let Some((set, _)) = sized.iter().find(|(_, k)| k.is_none()) {
                r = r.fail(format!("{set:?} is not an atom"));
            }
            let bad: Vec<&Vec<usize>> =
                lemma_failures.iter().filter(|x| x.len() == s).collect();
            if !bad.is_empty() {
                r = r.fail(format!("D_S has equivalent reachable states for {bad:?}"));
            }
            if let Some((set, _)) = sized.first() {
                if let Ok(d) = atom_dfa(&w.dfa, set) {
                    r = r.note(format!(
                        "D_S for S={set:?}: {} reachable states including the sink, {} without",
                        d.reachable_with_sink(),
                        d.reachable_without_sink()
                    ));
                }
            }
            out.push(r);
        }
    }
    Ok(out)
}

fn alphabet_claim(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    for n in ctx.n.iter() {
        for dialect in ["a,b,c,d,G", "a,b,c"] {
            out.push(timed(|| {
                let w = wit(n, dialect)?;
                let mut r = alphabet_size_needed_for_max_atoms(&w.dfa)?;
                r.params.variant = Some(w.id.name());
                Ok(r)
            })?);
        }
    }
    Ok(out)
}

fn star_claim(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    per_n(ctx, |n| {
        let w = wit(n, "a,b")?;
        Ok(ClaimReport::new(
            "thm1.5-star",
            Params::n(n),
            "2^(n-1)",
            formula_for(OpId::Star).eval(0, n),
            Relation::Equal,
            star(&w.dfa).states() as u64,
        ))
    })
}

struct BinarySetup {
    claim_id: &'static str,
    op: OpId,
    left: &'static str,
    right: &'static str,
    skip_equal: bool,
}

fn binary_claim(ctx: &Ctx, setup: BinarySetup) -> Result<Vec<ClaimReport>> {
    grid(ctx, setup.skip_equal)
        .into_par_iter()
        .map(|(m, n)| {
            timed(|| {
                let l = left_wit(m, setup.left)?;
                let r = wit(n, setup.right)?;
                let result: Dfa = match setup.op {
                    OpId::Product(mode) => product(&l.dfa, &r.dfa, mode)?,
                    OpId::Boolean(op, mode) => boolean(&l.dfa, &r.dfa, op, mode)?,
                    other => return Err(Error::UnknownOperation(other.to_string())),
                };
                let bound = formula_for(setup.op);
                let mut p = Params::mn(m, n);
                p.op = Some(setup.op.to_string());
                p.left = Some(l.id.name());
                p.right = Some(r.id.name());
                let mut report = ClaimReport::new(
                    setup.claim_id,
                    p,
                    bound.formula,
                    bound.eval(m, n),
                    Relation::Equal,
                    complexity(&result) as u64,
                );
                let measured = report.measured;
                let alts = alternative_bounds(setup.op);
                for alt in &alts {
                    report = report.alternative("stated", alt.formula, alt.eval(m, n));
                }
                if !alts.is_empty() {
                    let matching: Vec<&str> = std::iter::once(&bound)
                        .chain(&alts)
                        .filter(|f| f.eval(m, n) == measured)
                        .map(|f| f.formula)
                        .collect();
                    report = report.note(if matching.is_empty() {
                        "measured value matches no candidate formula".to_string()
                    } else {
                        format!("measured value matches {}", matching.join(" and "))
                    });
                }
                if result.alphabet().is_empty() {
                    report = report.note("result alphabet is empty");
                }
                Ok(report)
            })
        })
        .collect()
}

fn product_restricted(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    binary_claim(
        ctx,
        BinarySetup {
            claim_id: "thm1.6a-product-restricted",
            op: OpId::Product(OpMode::Restricted),
            left: "a,b",
            right: "a,-,b",
            skip_equal: false,
        },
    )
}

fn product_unrestricted(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    binary_claim(
        ctx,
        BinarySetup {
            claim_id: "thm1.6b-product-unrestricted",
            op: OpId::Product(OpMode::Unrestricted),
            left: "a,b",
            right: "a,-,b,d",
            skip_equal: false,
        },
    )
}

fn restricted_ops(ctx: &Ctx, claim_id: &'static str, right: &'static str, skip_equal: bool) -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    for op in BooleanOp::ALL {
        out.extend(binary_claim(
            ctx,
            BinarySetup {
                claim_id,
                op: OpId::Boolean(op, OpMode::Restricted),
                left: "a,b",
                right,
                skip_equal,
            },
        )?);
    }
    Ok(out)
}

fn boolean_restricted(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    restricted_ops(ctx, "thm1.7a-boolean-restricted", "b,a", false)
}

fn boolean_same_dialect(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    restricted_ops(ctx, "thm1.7b-boolean-restricted-same-dialect", "a,b", true)
}

fn unrestricted(ctx: &Ctx, claim_id: &'static str, op: BooleanOp, left: &'static str, right: &'static str) -> Result<Vec<ClaimReport>> {
    binary_claim(
        ctx,
        BinarySetup {
            claim_id,
            op: OpId::Boolean(op, OpMode::Unrestricted),
            left,
            right,
            skip_equal: false,
        },
    )
}

fn union_unrestricted(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    unrestricted(ctx, "thm1.7c-union-unrestricted", BooleanOp::Union, "a,b,c", "b,a,-,d")
}

fn symdiff_unrestricted(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    unrestricted(ctx, "thm1.7c-symdiff-unrestricted", BooleanOp::SymmetricDifference, "a,b,c", "b,a,-,d")
}

fn intersection_unrestricted(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    unrestricted(ctx, "thm1.7c-intersection-unrestricted", BooleanOp::Intersection, "a,b", "b,a")
}

fn difference_unrestricted(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    unrestricted(ctx, "thm1.7c-difference-unrestricted", BooleanOp::Difference, "a,b,c", "b,a")
}

/// Random minimal non-returning operands, checked against every bound. The
/// right operand of unrestricted operations is moved to the alphabet
/// `{b, c}` so that the alphabets overlap without being equal.
fn random_soundness(ctx: &Ctx) -> Result<Vec<ClaimReport>> {
    let shift = |d: &Dfa| {
        d.relabel(|l| {
            let next = match l.as_str() {
                "a" => "b",
                "b" => "c",
                other => other,
            };
            Letter::new(next).ok()
        })
    };
    let mut out = Vec::new();
    for n in ctx.n.iter() {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.config.seed ^ n as u64);
        let mut checks = 0u64;
        let mut violations: Vec<String> = Vec::new();
        let mut difference_max = 0u64;
        for _ in 0..ctx.config.samples {
            let m = rng.random_range(4..=n);
            let Some(l) = sample::random_nonreturning_minimal(&mut rng, m, 2, 1000) else { continue };
            let Some(r) = sample::random_nonreturning_minimal(&mut rng, n, 2, 1000) else { continue };
            let mut measure = |op: OpId, value: usize, limit: u64| {
                checks += 1;
                if value as u64 > limit {
                    violations.push(format!("{op} m={m} n={n}: {value} > {limit}"));
                }
            };
            measure(OpId::Reverse, reverse(&r).states(), formula_for(OpId::Reverse).eval(0, n));
            measure(OpId::Star, star(&r).states(), formula_for(OpId::Star).eval(0, n));
            let r_shifted = shift(&r)?;
            for mode in [OpMode::Restricted, OpMode::Unrestricted] {
                let right = if mode == OpMode::Restricted { &r } else { &r_shifted };
                let id = OpId::Product(mode);
                measure(id, product(&l, right, mode)?.states(), formula_for(id).eval(m, n));
                for op in BooleanOp::ALL {
                    let id = OpId::Boolean(op, mode);
                    let value = boolean(&l, right, op, mode)?.states();
                    let mut limit = formula_for(id).eval(m, n);
                    if id == OpId::Boolean(BooleanOp::Difference, OpMode::Unrestricted) {
                        difference_max = difference_max.max(value as u64);
                        limit = alternative_bounds(id).iter().map(|a| a.eval(m, n)).fold(limit, u64::max);
                    }
                    measure(id, value, limit);
                }
            }
        }
        let mut r = ClaimReport::new(
            "bounds-random-soundness",
            Params::n(n),
            "violations",
            0,
            Relation::Equal,
            violations.len() as u64,
        )
        .with_runtime(start.elapsed().as_secs_f64())
        .note(format!(
            "{checks} operation results, seed {:#x}, largest unrestricted difference {difference_max}",
            ctx.config.seed
        ));
        for v in violations.iter().take(5) {
            r = r.note(v.clone());
        }
        out.push(r);
    }
    Ok(out)
}
