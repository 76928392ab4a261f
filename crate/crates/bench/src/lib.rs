//! Fixed inputs shared by the benchmarks.

use nonret_core::{Dfa, DfaBuilder};

/// A DFA on `n` states over `{a, b}` that is far from minimal: two disjoint
/// copies of a cycle with one final state each.
pub fn doubled_cycle(n: usize) -> Dfa {
    let half = n / 2;
    let a: Vec<usize> = (0..n).map(|q| if q < half { (q + 1) % half } else { half + (q - half + 1) % (n - half) }).collect();
    let b: Vec<usize> = (0..n).map(|q| if q < half { q } else { q - half }).collect();
    DfaBuilder::new(n)
        .images("a", &a)
        .images("b", &b)
        .initial(0)
        .finals([0, half])
        .build()
        .expect("well-formed benchmark DFA")
}

#[cfg(test)]
mod tests {
    use nonret_core::minimize;

    #[test]
    fn doubled_cycle_collapses_to_one_cycle() {
        assert_eq!(minimize(&super::doubled_cycle(8)).states(), 4);
        assert_eq!(minimize(&super::doubled_cycle(64)).states(), 32);
    }
}
