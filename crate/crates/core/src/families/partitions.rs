use std::fmt;

use super::{check_range, Family};
use crate::error::{Error, Result};
use crate::mobius::AtomOrder;

/// A set partition of a finite set of nonzero integers. Blocks are kept in a
/// canonical order: members by `pos`, blocks by their first member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<i32>>,
}

impl SetPartition {
    /// Partition of `[n]` from explicit blocks.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<i32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for &e in blocks.iter().flatten() {
            let i = usize::try_from(e - 1)
                .ok()
                .filter(|&i| i < n)
                .ok_or_else(|| Error::InvalidPartition(format!("{e} is not in 1..={n}")))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPartition(format!("{e} appears twice")));
            }
        }
        if seen.iter().any(|s| !s) || blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidPartition("blocks do not cover the ground set".into()));
        }
        Ok(Self::canonical(blocks, |e| e as i64))
    }

    pub(crate) fn canonical(mut blocks: Vec<Vec<i32>>, pos: impl Fn(i32) -> i64) -> Self {
        for b in &mut blocks {
            b.sort_by_key(|&e| pos(e));
        }
        blocks.sort_by_key(|b| pos(b[0]));
        Self { blocks }
    }

    /// Blocks from a block-id word over ground positions, `ground[i]` naming position `i`.
    pub(crate) fn from_ids(ids: &[u8], ground: &[i32], pos: impl Fn(i32) -> i64) -> Self {
        let k = ids.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in ids.iter().enumerate() {
            blocks[b as usize].push(ground[i]);
        }
        Self::canonical(blocks, pos)
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// Non-singleton blocks.
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|c| b.iter().all(|e| c.contains(e))))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for e in b {
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// All block-id words (restricted growth strings) of length `m`.
pub(crate) fn growth_strings(m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; m];
    fn rec(i: usize, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            rec(i + 1, max.max(b), cur, out);
        }
    }
    if m == 0 {
        out.push(cur);
    } else {
        rec(1, 0, &mut cur, &mut out);
    }
    out
}

/// No `a < b < c < d` with `ids[a] = ids[c] != ids[b] = ids[d]`.
pub(crate) fn ids_noncrossing(ids: &[u8]) -> bool {
    let m = ids.len();
    for a in 0..m {
        for c in a + 2..m {
            if ids[a] != ids[c] {
                continue;
            }
            for b in a + 1..c {
                if ids[b] == ids[a] {
                    continue;
                }
                if (c + 1..m).any(|d| ids[d] == ids[b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Refinement on block-id words over the same ground positions.
pub(crate) fn ids_refine(p: &[u8], q: &[u8]) -> bool {
    let mut rep = [usize::MAX; 64];
    for (i, &b) in p.iter().enumerate() {
        let r = &mut rep[b as usize];
        if *r == usize::MAX {
            *r = i;
        } else if q[*r] != q[i] {
            return false;
        }
    }
    true
}

/// Family built from block-id words; element `i` is `ids[i]` read through `ground`.
pub(crate) fn family_from_ids(
    ids: Vec<Vec<u8>>,
    ground: &[i32],
    pos: impl Fn(i32) -> i64 + Copy,
) -> Result<Family<SetPartition>> {
    let lattice = crate::lattice::FiniteLattice::from_leq(ids.len(), |x, y| ids_refine(&ids[x], &ids[y]))?;
    let elements: Vec<SetPartition> = ids
        .iter()
        .map(|w| SetPartition::from_ids(w, ground, pos))
        .collect();
    let lattice = lattice.with_labels(elements.iter().map(|e| e.to_string()).collect())?;
    Ok(Family::from_parts(lattice, elements))
}

pub const MAX_PARTITION_N: usize = 8;

/// Π_n: all set partitions of `[n]` under refinement.
pub fn partition_lattice(n: usize) -> Result<Family<SetPartition>> {
    check_range("partition lattice n", n, 1, MAX_PARTITION_N)?;
    let ground: Vec<i32> = (1..=n as i32).collect();
    family_from_ids(growth_strings(n), &ground, |e| e as i64)
}

/// NC_n: noncrossing partitions of `[n]`. Joins are least upper bounds inside
/// the family, which can be coarser than joins in Π_n.
pub fn noncrossing_lattice(n: usize) -> Result<Family<SetPartition>> {
    check_range("noncrossing lattice n", n, 1, MAX_PARTITION_N)?;
    let ground: Vec<i32> = (1..=n as i32).collect();
    let ids = growth_strings(n).into_iter().filter(|w| ids_noncrossing(w)).collect();
    family_from_ids(ids, &ground, |e| e as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcOrder {
    /// `ij ⊲ i'j'` iff `j < j'`.
    Rank,
    /// `ij ⊲ i'j'` iff `[i, j]` properly contains `[i', j']`.
    Interval,
}

/// The pair `(i, j)` of an atom `ij`.
fn edge_of(p: &SetPartition) -> (i32, i32) {
    let b = p
        .nontrivial_blocks()
        .next()
        .expect("an atom has one two-element block");
    (b[0], b[1])
}

pub fn nc_atom_order(family: &Family<SetPartition>, variant: NcOrder) -> Result<AtomOrder> {
    let edges: Vec<(i32, i32)> = family.atom_elements().into_iter().map(edge_of).collect();
    AtomOrder::from_predicate(&family.lattice, |a, b| {
        let ((i, j), (k, l)) = (edges[a], edges[b]);
        match variant {
            NcOrder::Rank => j < l,
            NcOrder::Interval => i <= k && l <= j && (i, j) != (k, l),
        }
    })
}
