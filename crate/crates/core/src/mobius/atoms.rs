//! Atom sets, partial orders on atoms, and atom selectors.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Atom-set computations pack a set into one machine word.
pub const MAX_ATOMS: usize = 64;

/// Subset enumeration over atoms refuses lattices with more atoms than this.
pub const MAX_ENUMERATION_ATOMS: usize = 22;

/// A set of atoms, stored as a bitmask over positions in [`FiniteLattice::atoms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AtomSet(pub u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn from_positions(pos: impl IntoIterator<Item = usize>) -> Self {
        AtomSet(pos.into_iter().fold(0, |m, p| m | 1 << p))
    }

    pub fn singleton(p: usize) -> Self {
        AtomSet(1 << p)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, p: usize) -> bool {
        self.0 >> p & 1 == 1
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, p: usize) -> Self {
        AtomSet(self.0 | 1 << p)
    }

    pub fn without(self, p: usize) -> Self {
        AtomSet(self.0 & !(1 << p))
    }

    /// Positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut w = self.0;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(t)
        })
    }

    pub fn positions(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `(-1)^{|B|}`
    pub fn sign(self) -> i64 {
        if self.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Sorts atom sets by their increasing position lists.
pub fn sort_lexicographic(sets: &mut [AtomSet]) {
    sets.sort_by_cached_key(|s| s.positions());
}

/// A lattice together with the per-element masks of atoms below each element.
#[derive(Debug, Clone)]
pub struct AtomContext<'a> {
    pub lattice: &'a FiniteLattice,
    below: Vec<u64>,
}

impl<'a> AtomContext<'a> {
    pub fn new(lattice: &'a FiniteLattice) -> Result<Self> {
        let atoms = lattice.atoms();
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(atoms.len(), MAX_ATOMS));
        }
        let mut below = vec![0u64; lattice.size()];
        for (p, &a) in atoms.iter().enumerate() {
            for x in lattice.up_set(a) {
                below[x] |= 1 << p;
            }
        }
        Ok(Self { lattice, below })
    }

    pub(crate) fn for_enumeration(lattice: &'a FiniteLattice) -> Result<Self> {
        let k = lattice.atoms().len();
        if k > MAX_ENUMERATION_ATOMS {
            return Err(Error::TooManyAtoms(k, MAX_ENUMERATION_ATOMS));
        }
        Self::new(lattice)
    }

    pub fn atom_count(&self) -> usize {
        self.lattice.atoms().len()
    }

    pub fn all(&self) -> AtomSet {
        let k = self.atom_count();
        AtomSet(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
    }

    /// Atoms `<= x`.
    #[inline]
    pub fn below(&self, x: usize) -> AtomSet {
        AtomSet(self.below[x])
    }

    pub fn atom(&self, p: usize) -> usize {
        self.lattice.atoms()[p]
    }

    pub fn position_of(&self, element: usize) -> Option<usize> {
        self.lattice.atoms().binary_search(&element).ok()
    }

    #[inline]
    pub fn join(&self, set: AtomSet) -> usize {
        let atoms = self.lattice.atoms();
        set.iter()
            .fold(self.lattice.bottom(), |acc, p| self.lattice.join(acc, atoms[p]))
    }

    pub fn elements(&self, set: AtomSet) -> Vec<usize> {
        set.iter().map(|p| self.atom(p)).collect()
    }

    pub fn set_of_elements(&self, elems: &[usize]) -> Result<AtomSet> {
        let mut s = AtomSet::EMPTY;
        for &e in elems {
            let p = self
                .position_of(e)
                .ok_or_else(|| Error::InvalidAtomOrder(format!("element {e} is not an atom")))?;
            s = s.with(p);
        }
        Ok(s)
    }
}

/// A strict partial order ⊲ on the atoms of a lattice, independent of the lattice order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomOrder {
    atom_ids: Vec<usize>,
    /// `below[d]` holds every atom position `a` with `a ⊲ d`.
    below: Vec<u64>,
}

impl AtomOrder {
    /// The empty relation: no two atoms are comparable.
    pub fn incomparability(lattice: &FiniteLattice) -> Self {
        Self {
            atom_ids: lattice.atoms().to_vec(),
            below: vec![0; lattice.atoms().len()],
        }
    }

    /// Transitive closure of `a ⊲ b` pairs given as atom positions.
    pub fn from_relations(lattice: &FiniteLattice, rels: &[(usize, usize)]) -> Result<Self> {
        let k = lattice.atoms().len();
        if k > MAX_ATOMS {
            return Err(Error::TooManyAtoms(k, MAX_ATOMS));
        }
        let mut below = vec![0u64; k];
        for &(a, b) in rels {
            if a >= k || b >= k {
                return Err(Error::InvalidAtomOrder(format!(
                    "atom position out of range in relation {a} ⊲ {b} ({k} atoms)"
                )));
            }
            below[b] |= 1 << a;
        }
        // Warshall closure on bit rows
        for m in 0..k {
            for d in 0..k {
                if below[d] >> m & 1 == 1 {
                    below[d] |= below[m];
                }
            }
        }
        if let Some(d) = (0..k).find(|&d| below[d] >> d & 1 == 1) {
            return Err(Error::InvalidAtomOrder(format!(
                "cycle through atom position {d}"
            )));
        }
        Ok(Self {
            atom_ids: lattice.atoms().to_vec(),
            below,
        })
    }

    /// Builds the order from a predicate `strictly_below(a, b)` on atom positions,
    /// rejecting it unless it is irreflexive and transitive.
    pub fn from_predicate(
        lattice: &FiniteLattice,
        strictly_below: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let k = lattice.atoms().len();
        if k > MAX_ATOMS {
            return Err(Error::TooManyAtoms(k, MAX_ATOMS));
        }
        let mut below = vec![0u64; k];
        for (d, row) in below.iter_mut().enumerate() {
            for a in 0..k {
                if strictly_below(a, d) {
                    *row |= 1 << a;
                }
            }
        }
        let order = Self {
            atom_ids: lattice.atoms().to_vec(),
            below,
        };
        order.validate()?;
        Ok(order)
    }

    /// Orders atoms by position: `a ⊲ b` iff `a < b`.
    pub fn total_by_position(lattice: &FiniteLattice) -> Result<Self> {
        Self::from_predicate(lattice, |a, b| a < b)
    }

    fn validate(&self) -> Result<()> {
        let k = self.atom_ids.len();
        for d in 0..k {
            if self.below[d] >> d & 1 == 1 {
                return Err(Error::InvalidAtomOrder(format!("atom position {d} ⊲ itself")));
            }
            for m in AtomSet(self.below[d]).iter() {
                if self.below[m] & !self.below[d] != 0 {
                    return Err(Error::InvalidAtomOrder(format!(
                        "not transitive through atom positions {m} ⊲ {d}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn atom_ids(&self) -> &[usize] {
        &self.atom_ids
    }

    pub fn len(&self) -> usize {
        self.atom_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atom_ids.is_empty()
    }

    /// `a ⊲ b` on atom positions.
    #[inline]
    pub fn strictly_below(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    /// Positions strictly below `d`.
    #[inline]
    pub fn lower_set(&self, d: usize) -> AtomSet {
        AtomSet(self.below[d])
    }

    /// Every relation `(a, b)` with `a ⊲ b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|b| AtomSet(self.below[b]).iter().map(move |a| (a, b)))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn relation_count(&self) -> usize {
        self.below.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Covering pairs of ⊲ (its transitive reduction), sorted.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| self.below[b] & self.above_mask(a) == 0)
            .collect()
    }

    fn above_mask(&self, a: usize) -> u64 {
        (0..self.len())
            .filter(|&d| self.strictly_below(a, d))
            .fold(0, |m, d| m | 1 << d)
    }

    pub fn is_total(&self) -> bool {
        let k = self.len();
        (0..k).all(|a| (a + 1..k).all(|b| self.strictly_below(a, b) || self.strictly_below(b, a)))
    }

    /// ⊴-minimal members of `set`.
    pub fn minimal_in(&self, set: AtomSet) -> AtomSet {
        AtomSet(
            set.iter()
                .filter(|&p| self.below[p] & set.0 == 0)
                .fold(0, |m, p| m | 1 << p),
        )
    }

    /// Whether every relation of `self` also holds in `other`.
    pub fn is_extended_by(&self, other: &AtomOrder) -> bool {
        self.below
            .iter()
            .zip(&other.below)
            .all(|(mine, theirs)| mine & !theirs == 0)
    }

    /// A linear extension, breaking ties by position.
    pub fn linear_extension(&self) -> AtomOrder {
        let k = self.len();
        let mut rank = vec![0usize; k];
        let mut placed = 0u64;
        for r in 0..k {
            let p = (0..k)
                .find(|&p| placed >> p & 1 == 0 && self.below[p] & !placed == 0)
                .expect("strict partial order has a minimal element");
            rank[p] = r;
            placed |= 1 << p;
        }
        let mut below = vec![0u64; k];
        for (b, row) in below.iter_mut().enumerate() {
            for a in 0..k {
                if rank[a] < rank[b] {
                    *row |= 1 << a;
                }
            }
        }
        AtomOrder {
            atom_ids: self.atom_ids.clone(),
            below,
        }
    }

    /// Raw rows, used by the order search.
    pub(crate) fn from_rows_unchecked(atom_ids: Vec<usize>, below: Vec<u64>) -> Self {
        Self { atom_ids, below }
    }
}

/// Order file format: one `rel <a> <b>` line per relation `a ⊲ b`, indices into the
/// lattice's atom list. The transitive closure is taken on load.
pub fn parse_atom_order(text: &str, lattice: &FiniteLattice) -> Result<AtomOrder> {
    let mut rels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tok = line.split_whitespace();
        let err = |msg: &str| Error::Parse {
            line: i + 1,
            msg: msg.to_string(),
        };
        if tok.next() != Some("rel") {
            return Err(err("expected `rel <a> <b>`"));
        }
        let a = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad atom index"))?;
        let b = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad atom index"))?;
        if tok.next().is_some() {
            return Err(err("trailing tokens"));
        }
        rels.push((a, b));
    }
    AtomOrder::from_relations(lattice, &rels)
}

/// Writes the covering relations of the order, one `rel` line each.
pub fn write_atom_order(order: &AtomOrder) -> String {
    let mut out = String::new();
    for (a, b) in order.cover_relations() {
        let _ = writeln!(out, "rel {a} {b}");
    }
    out
}

/// For every element `x > 0̂`, a nonempty set of atoms below `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSelector {
    selection: Vec<AtomSet>,
}

impl AtomSelector {
    /// `selection[x]` for every element; the entry at `0̂` is ignored.
    pub fn new(lattice: &FiniteLattice, selection: Vec<AtomSet>) -> Result<Self> {
        let ctx = AtomContext::new(lattice)?;
        if selection.len() != lattice.size() {
            return Err(Error::InvalidSelector(
                0,
                format!("{} entries for {} elements", selection.len(), lattice.size()),
            ));
        }
        let mut selection = selection;
        for (x, s) in selection.iter_mut().enumerate() {
            if x == lattice.bottom() {
                *s = AtomSet::EMPTY;
                continue;
            }
            if s.is_empty() {
                return Err(Error::InvalidSelector(x, "empty selection".into()));
            }
            if !s.is_subset(ctx.below(x)) {
                return Err(Error::InvalidSelector(x, "selects an atom not below x".into()));
            }
        }
        Ok(Self { selection })
    }

    pub fn get(&self, x: usize) -> AtomSet {
        self.selection[x]
    }

    pub fn as_slice(&self) -> &[AtomSet] {
        &self.selection
    }
}
