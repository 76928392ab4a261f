/// Fixed-capacity bitset over state indices, used as a hash key by the
/// subset construction and the atom construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    words: Box<[u64]>,
}

impl StateSet {
    pub fn empty(capacity: usize) -> Self {
        StateSet {
            words: vec![0; capacity.div_ceil(64).max(1)].into_boxed_slice(),
        }
    }

    pub fn from_iter(capacity: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(capacity);
        for q in items {
            s.insert(q);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, q: usize) {
        self.words[q / 64] |= 1 << (q % 64);
    }

    #[inline]
    pub fn contains(&self, q: usize) -> bool {
        self.words[q / 64] >> (q % 64) & 1 == 1
    }

    #[cfg(test)]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &StateSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self, capacity: usize) -> StateSet {
        let mut out = Self::empty(capacity);
        for q in 0..capacity {
            if !self.contains(q) {
                out.insert(q);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = StateSet::from_iter(130, [0, 5, 64, 129]);
        assert_eq!(a.to_vec(), vec![0, 5, 64, 129]);
        assert_eq!(a.len(), 4);
        let b = a.complement(130);
        assert!(a.is_disjoint(&b));
        assert_eq!(b.len(), 126);
        assert!(StateSet::from_iter(130, [5]).is_subset(&a));
        assert!(StateSet::empty(3).is_empty());
    }
}
