//! Noncrossing partitions of `{±1, …, ±n}` invariant under negation.

use super::partitions::{family_from_ids, growth_strings, ids_noncrossing, SetPartition};
use super::{check_range, Family};
use crate::error::{Error, Result};
use crate::mobius::AtomOrder;

pub const MAX_SIGNED_N: usize = 4;

/// Position in the circular order `1 < … < n < −1 < … < −n`.
fn circular_pos(n: usize) -> impl Fn(i32) -> i64 + Copy {
    move |e| {
        if e > 0 {
            e as i64 - 1
        } else {
            n as i64 - e as i64 - 1
        }
    }
}

fn admissible(ids: &[u8], n: usize, s: &[usize]) -> bool {
    let neg = |i: usize| (i + n) % (2 * n);
    // negation maps blocks onto blocks
    let k = *ids.iter().max().unwrap() as usize + 1;
    let mut image = vec![u8::MAX; k];
    for i in 0..2 * n {
        let b = ids[i] as usize;
        let nb = ids[neg(i)];
        if image[b] == u8::MAX {
            image[b] = nb;
        } else if image[b] != nb {
            return false;
        }
    }
    let zero: Vec<usize> = (0..k).filter(|&b| image[b] as usize == b).collect();
    if zero.len() > 1 {
        return false;
    }
    if let Some(&z) = zero.first() {
        let members: Vec<usize> = (0..2 * n).filter(|&i| ids[i] as usize == z).collect();
        if members.len() == 2 && s.contains(&(members[0] + 1)) {
            return false;
        }
    }
    ids_noncrossing(ids)
}

/// NCBD_n(S). A zero-block `{k, −k}` of size two is excluded when `k ∈ S`; `S = ∅`
/// gives the type-B lattice and `S = [n]` the type-D lattice.
pub fn ncbd_lattice(n: usize, s: &[usize]) -> Result<Family<SetPartition>> {
    check_range("signed noncrossing lattice n", n, 1, MAX_SIGNED_N)?;
    if let Some(&bad) = s.iter().find(|&&k| k == 0 || k > n) {
        return Err(Error::InvalidPartition(format!("{bad} is not in 1..={n}")));
    }
    let ground: Vec<i32> = (1..=n as i32).chain((1..=n as i32).map(|e| -e)).collect();
    let ids = growth_strings(2 * n)
        .into_iter()
        .filter(|w| admissible(w, n, s))
        .collect();
    family_from_ids(ids, &ground, circular_pos(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedAtomKind {
    /// Blocks `{i, j}` and `{−i, −j}`.
    Positive,
    /// Blocks `{i, −j}` and `{−i, j}`.
    Negative,
    /// The block `{i, −i}`.
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedAtom {
    pub kind: SignedAtomKind,
    /// `(i, j)` with `1 <= i <= j`; `i = j` exactly for half-edges.
    pub interval: (i32, i32),
}

impl SignedAtom {
    pub fn of(p: &SetPartition) -> Result<Self> {
        let b = p
            .nontrivial_blocks()
            .next()
            .ok_or_else(|| Error::InvalidPartition(format!("{p} is not an atom")))?;
        if b.len() != 2 {
            return Err(Error::InvalidPartition(format!("{p} is not an atom")));
        }
        let (x, y) = (b[0], b[1]);
        let (i, j) = (x.abs().min(y.abs()), x.abs().max(y.abs()));
        let kind = if x == -y {
            SignedAtomKind::Half
        } else if (x > 0) == (y > 0) {
            SignedAtomKind::Positive
        } else {
            SignedAtomKind::Negative
        };
        Ok(Self { kind, interval: (i, j) })
    }

    fn negative(&self) -> bool {
        self.kind != SignedAtomKind::Positive
    }
}

/// `a ⊲ b` iff the interval of `a` properly contains that of `b`, or the intervals
/// agree and `a` is negative while `b` is positive. Half-edges count as negative.
pub fn ncb_atom_order(family: &Family<SetPartition>) -> Result<AtomOrder> {
    let atoms: Vec<SignedAtom> = family
        .atom_elements()
        .into_iter()
        .map(SignedAtom::of)
        .collect::<Result<_>>()?;
    AtomOrder::from_predicate(&family.lattice, |a, b| {
        let (x, y) = (atoms[a], atoms[b]);
        let contains = x.interval.0 <= y.interval.0 && y.interval.1 <= x.interval.1;
        if x.interval == y.interval {
            x.negative() && !y.negative()
        } else {
            contains
        }
    })
}
