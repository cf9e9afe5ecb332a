//! Möbius functions by recursion, crosscut sums, NBB bases and coreless sets,
//! together with the BB/NBB, circuit and perfect-order machinery.

mod atoms;
mod circuits;
mod coreless;
mod nbb;
mod perfect;

use std::fmt::Write as _;

pub use atoms::{
    parse_atom_order, sort_lexicographic, write_atom_order, AtomContext, AtomOrder, AtomSelector,
    AtomSet, MAX_ATOMS, MAX_ENUMERATION_ATOMS,
};
pub use circuits::{
    broken_circuits, condition_cprime_holds, condition_cprime_witness, enumerate_circuits,
    enumerate_nbc_bases, is_independent, mobius_nbc_generalized,
};
pub use coreless::{core, enumerate_coreless_sets, mobius_coreless, selector_from_order};
pub use nbb::{
    crosscut_sets, enumerate_nbb_bases, enumerate_nbb_sets, incomparability_order,
    is_bounded_below, is_nbb, mobius_crosscut, mobius_nbb,
};
pub use perfect::{is_perfect_order, search_perfect_order, ElementReport, PerfectReport};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// μ(0̂, x) for every element x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusVector {
    values: Vec<i64>,
}

impl MobiusVector {
    /// Accepts `values` only if `Σ_{y<=x} values[y] = δ(0̂, x)` for every `x`.
    pub fn checked(lattice: &FiniteLattice, values: Vec<i64>) -> Result<Self> {
        if values.len() != lattice.size() {
            return Err(Error::MobiusInvariant(values.len().min(lattice.size())));
        }
        for x in 0..lattice.size() {
            let sum: i64 = lattice.down_set(x).map(|y| values[y]).sum();
            let expected = i64::from(x == lattice.bottom());
            if sum != expected {
                return Err(Error::MobiusInvariant(x));
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, x: usize) -> i64 {
        self.values[x]
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

/// `μ(0̂) = 1`, `μ(x) = −Σ_{y<x} μ(y)`, evaluated along a linear extension.
pub fn mobius_recursive(lattice: &FiniteLattice) -> MobiusVector {
    let mut values = vec![0i64; lattice.size()];
    for &x in lattice.linear_extension() {
        values[x] = if x == lattice.bottom() {
            1
        } else {
            -lattice.down_set(x).filter(|&y| y != x).map(|y| values[y]).sum::<i64>()
        };
    }
    MobiusVector { values }
}

/// `element<TAB>label<TAB>mu` rows under a header line.
pub fn write_mobius_tsv(lattice: &FiniteLattice, mu: &MobiusVector) -> String {
    let mut out = String::from("element\tlabel\tmu\n");
    for (x, v) in mu.values().iter().enumerate() {
        let _ = writeln!(out, "{x}\t{}\t{v}", lattice.label(x));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::CoverList;

    fn chain(len: usize) -> FiniteLattice {
        FiniteLattice::from_cover_relations(&CoverList::new(len + 1, (0..len).map(|i| (i, i + 1))))
            .unwrap()
    }

    #[test]
    fn chain_values() {
        assert_eq!(mobius_recursive(&chain(3)).values(), &[1, -1, 0, 0]);
    }

    #[test]
    fn boolean_cube_top() {
        let b1 = chain(1);
        let b3 = b1.direct_product(&b1).unwrap().direct_product(&b1).unwrap();
        let mu = mobius_recursive(&b3);
        assert_eq!(mu.get(b3.top()), -1);
        assert_eq!(mobius_crosscut(&b3).unwrap(), mu);
    }

    #[test]
    fn invariant_rejects_bad_vectors() {
        let c = chain(2);
        assert_eq!(
            MobiusVector::checked(&c, vec![1, -1, 1]),
            Err(Error::MobiusInvariant(2))
        );
        assert!(MobiusVector::checked(&c, vec![1, -1, 0]).is_ok());
    }

    #[test]
    fn tsv_layout() {
        let c = chain(1).with_labels(vec!["0".into(), "1".into()]).unwrap();
        assert_eq!(
            write_mobius_tsv(&c, &mobius_recursive(&c)),
            "element\tlabel\tmu\n0\t0\t1\n1\t1\t-1\n"
        );
    }
}
