//! Finite lattices over dense element indices with precomputed meet and join tables.
//!
//! Every lattice is immutable once built. Construction goes through a partial-order
//! matrix, finds the least upper bound and greatest lower bound of every pair, and
//! fails with [`Error::NotALattice`] on the first pair that lacks one.

mod bitmatrix;
pub mod io;
mod props;

pub(crate) use bitmatrix::BitMatrix;
use bitmatrix::{and_first_and_count, and_last_and_count};

use crate::error::{Error, Result};

/// Largest element count any constructor accepts.
pub const MAX_ELEMENTS: usize = 50_000;

/// A Hasse diagram given as `(lower, upper)` pairs over elements `0..size`.
///
/// Pairs implied by transitivity are accepted and dropped during construction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoverList {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
}

impl CoverList {
    pub fn new(size: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self {
            size,
            covers: covers.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteLattice {
    size: usize,
    up: BitMatrix,
    down: BitMatrix,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
    atoms: Vec<usize>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    linear: Vec<usize>,
    labels: Option<Vec<String>>,
}

pub(crate) fn check_capacity(size: usize) -> Result<()> {
    if size > MAX_ELEMENTS {
        return Err(Error::CapacityExceeded {
            what: "lattice size",
            got: size,
            limit: MAX_ELEMENTS,
        });
    }
    Ok(())
}

impl FiniteLattice {
    /// Builds a lattice from its cover relations (the reflexive-transitive closure
    /// of `input.covers` is the order).
    pub fn from_cover_relations(input: &CoverList) -> Result<Self> {
        let n = input.size;
        if n == 0 {
            return Err(Error::NoBoundedExtremes);
        }
        check_capacity(n)?;
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(lo, up) in &input.covers {
            if lo >= n {
                return Err(Error::IndexOutOfRange(lo, n));
            }
            if up >= n {
                return Err(Error::IndexOutOfRange(up, n));
            }
            if lo == up {
                return Err(Error::CycleDetected(lo));
            }
            succ[lo].push(up);
            indeg[up] += 1;
        }
        // Kahn's algorithm; leftovers sit on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&x| indeg[x] == 0).collect();
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if order.len() < n {
            let culprit = (0..n).find(|&x| indeg[x] > 0).unwrap_or(0);
            return Err(Error::CycleDetected(culprit));
        }
        let mut up = BitMatrix::new(n);
        for &x in order.iter().rev() {
            up.set(x, x);
            for &y in &succ[x] {
                up.or_row_into(x, y);
            }
        }
        Self::from_order_matrix(up)
    }

    /// Builds a lattice from an order predicate `leq(x, y)` on `0..n`. The predicate
    /// must be a partial order; callers in this crate construct it from known families.
    pub(crate) fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoBoundedExtremes);
        }
        check_capacity(n)?;
        let mut up = BitMatrix::new(n);
        for x in 0..n {
            for y in 0..n {
                if x == y || leq(x, y) {
                    up.set(x, y);
                }
            }
        }
        Self::from_order_matrix(up)
    }

    /// `up` row `x` holds every `y >= x`.
    pub(crate) fn from_order_matrix(up: BitMatrix) -> Result<Self> {
        let n = up.dim();
        let down = up.transpose();
        let linear = linear_extension(&down, n);
        let mut pos = vec![0usize; n];
        for (p, &x) in linear.iter().enumerate() {
            pos[x] = p;
        }
        let up_p = up.permuted(&pos);
        let down_p = down.permuted(&pos);
        let up_count: Vec<usize> = (0..n).map(|p| up_p.row_count(p)).collect();
        let down_count: Vec<usize> = (0..n).map(|p| down_p.row_count(p)).collect();

        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for p in 0..n {
            for q in p..n {
                let (x, y) = (linear[p], linear[q]);
                let (first, cnt) = and_first_and_count(up_p.row(p), up_p.row(q));
                let j = match first {
                    Some(c) if up_count[c] == cnt => linear[c],
                    _ => return Err(Error::NotALattice(x.min(y), x.max(y), "join")),
                };
                let (last, cnt) = and_last_and_count(down_p.row(p), down_p.row(q));
                let m = match last {
                    Some(c) if down_count[c] == cnt => linear[c],
                    _ => return Err(Error::NotALattice(x.min(y), x.max(y), "meet")),
                };
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
            }
        }
        Ok(Self::from_parts(up, down, join, meet, linear, None))
    }

    fn from_parts(
        up: BitMatrix,
        down: BitMatrix,
        join: Vec<u32>,
        meet: Vec<u32>,
        linear: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let n = linear.len();
        let bottom = linear[0];
        let top = linear[n - 1];
        let mut pos = vec![0usize; n];
        for (p, &x) in linear.iter().enumerate() {
            pos[x] = p;
        }
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            let mut cands: Vec<usize> = up.iter_row(x).filter(|&y| y != x).collect();
            cands.sort_by_key(|&y| pos[y]);
            let mut found: Vec<usize> = Vec::new();
            for y in cands {
                if found.iter().all(|&c| !up.get(c, y)) {
                    found.push(y);
                }
            }
            found.sort_unstable();
            for &y in &found {
                lower_covers[y].push(x);
            }
            upper_covers[x] = found;
        }
        let atoms = upper_covers[bottom].clone();
        Self {
            size: n,
            up,
            down,
            join,
            meet,
            bottom,
            top,
            atoms,
            upper_covers,
            lower_covers,
            linear,
            labels,
        }
    }

    /// Attaches display labels, one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Parse {
                line: 0,
                msg: format!("{} labels for {} elements", labels.len(), self.size),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Atoms in increasing index order.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y] as usize
    }

    /// Join of a set of elements; the empty join is the bottom.
    pub fn join_set(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set of elements; the empty meet is the top.
    pub fn meet_set(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn covers(&self, lo: usize, hi: usize) -> bool {
        self.upper_covers[lo].binary_search(&hi).is_ok()
    }

    /// Elements `>= x`, increasing index order.
    pub fn up_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.up.iter_row(x)
    }

    /// Elements `<= x`, increasing index order.
    pub fn down_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.down.iter_row(x)
    }

    /// Elements listed so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// All cover pairs `(lo, up)` sorted lexicographically.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = (0..self.size)
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `x`, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Resolves an element by exact label, or by index when the text is numeric
    /// and no label matches.
    pub fn find_element(&self, text: &str) -> Option<usize> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|s| s == text) {
                return Some(i);
            }
        }
        text.parse::<usize>().ok().filter(|&i| i < self.size)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.size {
            return Err(Error::IndexOutOfRange(x, self.size));
        }
        Ok(())
    }

    /// The interval `[lo, hi]` as a lattice, with the map from its indices back to
    /// indices of `self`.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<(FiniteLattice, Vec<usize>)> {
        self.check_element(lo)?;
        self.check_element(hi)?;
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable(lo, hi));
        }
        let elems: Vec<usize> = self.up_set(lo).filter(|&z| self.leq(z, hi)).collect();
        let k = elems.len();
        let mut local = vec![usize::MAX; self.size];
        for (i, &z) in elems.iter().enumerate() {
            local[z] = i;
        }
        let mut up = BitMatrix::new(k);
        let mut join = vec![0u32; k * k];
        let mut meet = vec![0u32; k * k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                if self.leq(a, b) {
                    up.set(i, j);
                }
                join[i * k + j] = local[self.join(a, b)] as u32;
                meet[i * k + j] = local[self.meet(a, b)] as u32;
            }
        }
        let down = up.transpose();
        let linear: Vec<usize> = self
            .linear
            .iter()
            .filter(|&&z| local[z] != usize::MAX)
            .map(|&z| local[z])
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| elems.iter().map(|&z| l[z].clone()).collect());
        Ok((
            Self::from_parts(up, down, join, meet, linear, labels),
            elems,
        ))
    }

    /// Component-wise product; element `(a, b)` gets index `a * other.size() + b`.
    pub fn direct_product(&self, other: &FiniteLattice) -> Result<FiniteLattice> {
        let (n1, n2) = (self.size, other.size);
        let n = n1 * n2;
        check_capacity(n)?;
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut up = BitMatrix::new(n);
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for a in 0..n1 {
            for b in 0..n2 {
                let x = idx(a, b);
                for c in 0..n1 {
                    for d in 0..n2 {
                        let y = idx(c, d);
                        if self.leq(a, c) && other.leq(b, d) {
                            up.set(x, y);
                        }
                        join[x * n + y] = idx(self.join(a, c), other.join(b, d)) as u32;
                        meet[x * n + y] = idx(self.meet(a, c), other.meet(b, d)) as u32;
                    }
                }
            }
        }
        let down = up.transpose();
        let linear = linear_extension(&down, n);
        let labels = (0..n)
            .map(|x| format!("({},{})", self.label(x / n2), other.label(x % n2)))
            .collect();
        Ok(Self::from_parts(up, down, join, meet, linear, Some(labels)))
    }
}

/// Sorting by down-set size gives a linear extension; ties broken by index.
fn linear_extension(down: &BitMatrix, n: usize) -> Vec<usize> {
    let mut v: Vec<(usize, usize)> = (0..n).map(|x| (down.row_count(x), x)).collect();
    v.sort_unstable();
    v.into_iter().map(|(_, x)| x).collect()
}
