//! Hopcroft partition refinement.
//!
//! The automaton is first trimmed to its reachable part. The partition starts
//! as {finals, non-finals} and is refined with splitters `(B, c)`: every block
//! `D` whose states disagree on whether `c` leads into `B` is split, and the
//! smaller half is queued for every letter. Once the worklist is empty the
//! blocks are exactly the Nerode classes.

use super::Dfa;

/// Minimal complete DFA for the same language, with states numbered in BFS
/// order from the initial state. Equal languages over the same alphabet give
/// structurally identical results.
pub fn minimize(d: &Dfa) -> Dfa {
    let trimmed = d.canonical();
    let n = trimmed.states();
    let k = trimmed.alphabet().len();
    let block_of = coarsest_partition(n, k, trimmed.table(), trimmed.final_flags());
    let blocks = block_of.iter().copied().max().map_or(0, |b| b as usize + 1);
    if blocks == n {
        return trimmed;
    }
    let mut rep = vec![usize::MAX; blocks];
    for (q, &b) in block_of.iter().enumerate() {
        if rep[b as usize] == usize::MAX {
            rep[b as usize] = q;
        }
    }
    let mut delta = Vec::with_capacity(blocks * k);
    let mut finals = Vec::with_capacity(blocks);
    for &q in &rep {
        for c in 0..k {
            delta.push(block_of[trimmed.next(q, c)]);
        }
        finals.push(trimmed.is_final(q));
    }
    let initial = block_of[trimmed.initial()] as usize;
    Dfa::from_parts(trimmed.alphabet().clone(), blocks, delta, initial, finals).canonical()
}

/// Returns the block index of every state under the coarsest congruence that
/// separates final from non-final states.
pub(crate) fn coarsest_partition(n: usize, k: usize, delta: &[u32], finals: &[bool]) -> Vec<u32> {
    // Preimage lists in CSR layout: sources of (c, t) are
    // pre[start[c * n + t] .. start[c * n + t + 1]].
    let mut start = vec![0u32; k * n + 1];
    for q in 0..n {
        for c in 0..k {
            start[c * n + delta[q * k + c] as usize + 1] += 1;
        }
    }
    for i in 0..k * n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut pre = vec![0u32; k * n];
    for q in 0..n {
        for c in 0..k {
            let slot = &mut fill[c * n + delta[q * k + c] as usize];
            pre[*slot as usize] = q as u32;
            *slot += 1;
        }
    }

    let mut block_of = vec![0u32; n];
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let (acc, rej): (Vec<u32>, Vec<u32>) = (0..n as u32).partition(|&q| finals[q as usize]);
    for part in [acc, rej] {
        if !part.is_empty() {
            let id = blocks.len() as u32;
            for &q in &part {
                block_of[q as usize] = id;
            }
            blocks.push(part);
        }
    }
    if blocks.len() < 2 || k == 0 {
        return block_of;
    }

    let mut pending = vec![false; blocks.len() * k];
    let mut worklist: Vec<(u32, u32)> = Vec::new();
    let first = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
    for c in 0..k {
        pending[first * k + c] = true;
        worklist.push((first as u32, c as u32));
    }

    let mut marked = vec![false; n];
    let mut marked_in_block: Vec<u32> = vec![0; blocks.len()];
    let mut touched: Vec<u32> = Vec::new();
    let mut sources: Vec<u32> = Vec::new();

    while let Some((b, c)) = worklist.pop() {
        let (b, c) = (b as usize, c as usize);
        pending[b * k + c] = false;
        for &t in &blocks[b] {
            let cell = c * n + t as usize;
            for &s in &pre[start[cell] as usize..start[cell + 1] as usize] {
                if !marked[s as usize] {
                    marked[s as usize] = true;
                    sources.push(s);
                    let bs = block_of[s as usize];
                    if marked_in_block[bs as usize] == 0 {
                        touched.push(bs);
                    }
                    marked_in_block[bs as usize] += 1;
                }
            }
        }
        for &d in &touched {
            let d = d as usize;
            let count = std::mem::take(&mut marked_in_block[d]) as usize;
            if count == blocks[d].len() {
                continue;
            }
            let (inside, outside): (Vec<u32>, Vec<u32>) =
                blocks[d].iter().partition(|&&q| marked[q as usize]);
            let (keep, moved) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            let new_id = blocks.len();
            for &q in &moved {
                block_of[q as usize] = new_id as u32;
            }
            blocks[d] = keep;
            blocks.push(moved);
            marked_in_block.push(0);
            pending.extend(std::iter::repeat_n(false, k));
            // Whether or not (d, a) is pending, queueing the smaller half
            // (always the moved part) keeps the splitter set sufficient.
            for a in 0..k {
                pending[new_id * k + a] = true;
                worklist.push((new_id as u32, a as u32));
            }
        }
        touched.clear();
        for &s in &sources {
            marked[s as usize] = false;
        }
        sources.clear();
    }
    block_of
}
