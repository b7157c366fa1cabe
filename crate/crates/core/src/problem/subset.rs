use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of the ground set `{0, .., n-1}` stored as a fixed-length bit vector.
///
/// The cardinality is cached and kept in sync by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    words: Vec<u64>,
    len: usize,
    card: usize,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            words: vec![0; n.div_ceil(WORD_BITS)],
            len: n,
            card: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.clear_tail();
        s.card = n;
        s
    }

    /// Builds a subset from item indices. Duplicates are ignored.
    ///
    /// Panics if an index is `>= n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut s = Self::empty(n);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Builds a subset from the low `n` bits of `mask` (`n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS, "from_mask supports n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == WORD_BITS { u64::MAX } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
            s.card = s.words[0].count_ones() as usize;
        }
        s
    }

    /// Low 64 bits of the bit vector; exact when `n <= 64`.
    pub fn to_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// Ground-set size.
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    /// Number of selected items.
    #[inline]
    pub fn cardinality(&self) -> usize {
        self.card
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        assert!(i < self.len, "item {i} out of range for n = {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Adds `i`; returns whether it was newly inserted.
    pub fn insert(&mut self, i: usize) -> bool {
        if self.contains(i) {
            return false;
        }
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
        self.card += 1;
        true
    }

    /// Removes `i`; returns whether it was present.
    pub fn remove(&mut self, i: usize) -> bool {
        if !self.contains(i) {
            return false;
        }
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
        self.card -= 1;
        true
    }

    /// Flips bit `i`.
    pub fn toggle(&mut self, i: usize) {
        if !self.remove(i) {
            self.insert(i);
        }
    }

    /// Copy of `self` with `i` added.
    pub fn with(&self, i: usize) -> Subset {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    /// Selected items in ascending order.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Restriction to the first `m` items, as a subset of `{0, .., m-1}`.
    pub fn truncated(&self, m: usize) -> Subset {
        assert!(m <= self.len);
        let mut s = Subset::empty(m);
        let nw = s.words.len();
        s.words.copy_from_slice(&self.words[..nw]);
        s.clear_tail();
        s.card = s.words.iter().map(|w| w.count_ones() as usize).sum();
        s
    }

    /// Extension to a larger ground set of size `m`, with the new items unselected.
    pub fn extended(&self, m: usize) -> Subset {
        assert!(m >= self.len);
        let mut s = Subset::empty(m);
        s.words[..self.words.len()].copy_from_slice(&self.words);
        s.card = self.card;
        s
    }

    /// Raw word storage, least-significant bit first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Recount cardinality from the bits; used by tests to check the cache.
    pub fn recount(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn zip_words(&self, other: &Subset, op: impl Fn(u64, u64) -> u64) -> Subset {
        assert_eq!(self.len, other.len, "ground-set sizes differ");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| op(*a, *b))
            .collect();
        let card = words.iter().map(|w| w.count_ones() as usize).sum();
        Subset {
            words,
            len: self.len,
            card,
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Orders by the ascending list of selected indices, lexicographically.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset(n={}, ", self.len)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, i) in self.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD_BITS + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}
