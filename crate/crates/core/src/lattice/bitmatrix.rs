//! Dense square boolean matrix, one packed row per element.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    /// `row(dst) |= row(src)`
    pub fn or_row_into(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let w = self.words;
        let (d, s) = (dst * w, src * w);
        for k in 0..w {
            let v = self.bits[s + k];
            self.bits[d + k] |= v;
        }
    }

    pub fn row_count(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_row(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.n);
        for r in 0..self.n {
            for c in self.iter_row(r) {
                t.set(c, r);
            }
        }
        t
    }

    /// Re-index rows and columns: entry (perm[r], perm[c]) of the result is (r, c) here.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut p = Self::new(self.n);
        for r in 0..self.n {
            for c in self.iter_row(r) {
                p.set(perm[r], perm[c]);
            }
        }
        p
    }
}

/// First set bit of `a & b`, together with the popcount of the intersection.
#[inline]
pub(crate) fn and_first_and_count(a: &[u64], b: &[u64]) -> (Option<usize>, usize) {
    let mut first = None;
    let mut count = 0usize;
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        let w = x & y;
        if w != 0 {
            if first.is_none() {
                first = Some(k * 64 + w.trailing_zeros() as usize);
            }
            count += w.count_ones() as usize;
        }
    }
    (first, count)
}

/// Last set bit of `a & b`, together with the popcount of the intersection.
#[inline]
pub(crate) fn and_last_and_count(a: &[u64], b: &[u64]) -> (Option<usize>, usize) {
    let mut last = None;
    let mut count = 0usize;
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        let w = x & y;
        if w != 0 {
            last = Some(k * 64 + 63 - w.leading_zeros() as usize);
            count += w.count_ones() as usize;
        }
    }
    (last, count)
}
