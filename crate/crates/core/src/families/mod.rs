//! Concrete lattice families with their labels and distinguished atom orders.

mod dominance;
mod partitions;
mod shuffle;
mod signed;
mod spec;
mod tamari;

use std::collections::HashMap;
use std::hash::Hash;

pub use dominance::{
    composition_join, dominance_atom_order, dominance_atoms, dominance_interval, dominance_lattice,
    dominance_mobius, interval_analysis, partition_join, partition_reflection, AtomKind,
    Composition, DominanceAtomInfo, IntegerPartition, IntervalAnalysis,
};
pub use partitions::{
    nc_atom_order, noncrossing_lattice, partition_lattice, NcOrder, SetPartition,
};
pub use shuffle::{
    crossed_letters, shuffle_atom_order, shuffle_join, shuffle_poset, Letter, ShuffleWord,
};
pub use signed::{ncb_atom_order, ncbd_lattice, SignedAtom, SignedAtomKind};
pub use spec::{BuiltFamily, FamilySpec};
pub use tamari::{
    bracket_vector_of, parenthesization_of, rotation_covers, tamari_join, tamari_lattice,
    tamari_meet, tamari_tree_of, BracketVector, Parenthesization,
};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// A lattice whose element `i` is `elements[i]`.
#[derive(Debug, Clone)]
pub struct Family<T> {
    pub lattice: FiniteLattice,
    pub elements: Vec<T>,
    index: HashMap<T, usize>,
}

impl<T: Clone + Eq + Hash + std::fmt::Display> Family<T> {
    /// Orders `elements` by `leq` and labels each one by its display form.
    pub(crate) fn build(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let lattice = FiniteLattice::from_leq(elements.len(), |x, y| leq(&elements[x], &elements[y]))?
            .with_labels(elements.iter().map(|e| e.to_string()).collect())?;
        Ok(Self::from_parts(lattice, elements))
    }

    pub(crate) fn from_parts(lattice: FiniteLattice, elements: Vec<T>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Self {
            lattice,
            elements,
            index,
        }
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    /// The element behind each atom position.
    pub fn atom_elements(&self) -> Vec<&T> {
        self.lattice.atoms().iter().map(|&a| &self.elements[a]).collect()
    }
}

pub(crate) fn check_range(what: &'static str, got: usize, lo: usize, hi: usize) -> Result<()> {
    if got < lo || got > hi {
        return Err(Error::CapacityExceeded {
            what,
            got,
            limit: hi,
        });
    }
    Ok(())
}

pub const MAX_BOOLEAN_RANK: usize = 12;
pub const MAX_CHAIN_LENGTH: usize = 4096;

/// Subsets of `[n]` under inclusion, labelled `{1,3}`.
pub fn boolean_lattice(n: usize) -> Result<FiniteLattice> {
    check_range("boolean rank", n, 0, MAX_BOOLEAN_RANK)?;
    let size = 1usize << n;
    let labels = (0..size)
        .map(|s| {
            let parts: Vec<String> = (0..n).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    FiniteLattice::from_leq(size, |x, y| x & !y == 0)?.with_labels(labels)
}

/// The chain `0 < 1 < … < n` of length `n`.
pub fn chain(n: usize) -> Result<FiniteLattice> {
    check_range("chain length", n, 0, MAX_CHAIN_LENGTH)?;
    FiniteLattice::from_leq(n + 1, |x, y| x <= y)?.with_labels((0..=n).map(|i| i.to_string()).collect())
}
