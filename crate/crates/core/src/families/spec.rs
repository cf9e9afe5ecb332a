use std::fmt;
use std::str::FromStr;

use super::{
    boolean_lattice, chain, dominance_lattice, nc_atom_order, ncb_atom_order, ncbd_lattice,
    noncrossing_lattice, partition_lattice, shuffle_atom_order, shuffle_poset, tamari_lattice,
    NcOrder,
};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::mobius::AtomOrder;

/// Textual family names: `pi:n`, `nc:n`, `ncbd:n:S`, `shuffle:m:n`, `dom:n`,
/// `tamari:n`, `bool:n`, `chain:n`. `S` is a comma list and may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Partition(usize),
    Noncrossing(usize),
    Signed(usize, Vec<usize>),
    Shuffle(usize, usize),
    Dominance(usize),
    Tamari(usize),
    Boolean(usize),
    Chain(usize),
}

/// A constructed family with its distinguished atom order.
#[derive(Debug, Clone)]
pub struct BuiltFamily {
    pub lattice: FiniteLattice,
    /// Rank order for NC_n, the signed-interval order for NCBD_n(S), deletion atoms
    /// below insertion atoms for shuffles, and the empty order otherwise. P_n has a
    /// single atom, so its run order is empty as well.
    pub canonical: AtomOrder,
}

impl FamilySpec {
    pub fn build(&self) -> Result<BuiltFamily> {
        let plain = |lattice: FiniteLattice| {
            let canonical = AtomOrder::incomparability(&lattice);
            BuiltFamily { lattice, canonical }
        };
        Ok(match self {
            Self::Partition(n) => plain(partition_lattice(*n)?.lattice),
            Self::Noncrossing(n) => {
                let f = noncrossing_lattice(*n)?;
                let canonical = nc_atom_order(&f, NcOrder::Rank)?;
                BuiltFamily { lattice: f.lattice, canonical }
            }
            Self::Signed(n, s) => {
                let f = ncbd_lattice(*n, s)?;
                let canonical = ncb_atom_order(&f)?;
                BuiltFamily { lattice: f.lattice, canonical }
            }
            Self::Shuffle(m, n) => {
                let f = shuffle_poset(*m, *n)?;
                let canonical = shuffle_atom_order(&f)?;
                BuiltFamily { lattice: f.lattice, canonical }
            }
            Self::Dominance(n) => plain(dominance_lattice(*n)?.lattice),
            Self::Tamari(n) => plain(tamari_lattice(*n)?.lattice),
            Self::Boolean(n) => plain(boolean_lattice(*n)?),
            Self::Chain(n) => plain(chain(*n)?),
        })
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(text.to_string());
        let mut parts = text.split(':');
        let name = parts.next().ok_or_else(unknown)?;
        let args: Vec<&str> = parts.collect();
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| unknown());
        let spec = match (name, args.as_slice()) {
            ("pi", [n]) => Self::Partition(num(n)?),
            ("nc", [n]) => Self::Noncrossing(num(n)?),
            ("ncbd", [n]) => Self::Signed(num(n)?, Vec::new()),
            ("ncbd", [n, s]) => {
                let set = if s.trim().is_empty() {
                    Vec::new()
                } else {
                    s.split(',').map(num).collect::<Result<Vec<_>>>()?
                };
                Self::Signed(num(n)?, set)
            }
            ("shuffle", [m, n]) => Self::Shuffle(num(m)?, num(n)?),
            ("dom", [n]) => Self::Dominance(num(n)?),
            ("tamari", [n]) => Self::Tamari(num(n)?),
            ("bool", [n]) => Self::Boolean(num(n)?),
            ("chain", [n]) => Self::Chain(num(n)?),
            _ => return Err(unknown()),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Partition(n) => write!(f, "pi:{n}"),
            Self::Noncrossing(n) => write!(f, "nc:{n}"),
            Self::Signed(n, s) => {
                let s: Vec<String> = s.iter().map(usize::to_string).collect();
                write!(f, "ncbd:{n}:{}", s.join(","))
            }
            Self::Shuffle(m, n) => write!(f, "shuffle:{m}:{n}"),
            Self::Dominance(n) => write!(f, "dom:{n}"),
            Self::Tamari(n) => write!(f, "tamari:{n}"),
            Self::Boolean(n) => write!(f, "bool:{n}"),
            Self::Chain(n) => write!(f, "chain:{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["pi:3", "nc:4", "ncbd:3:1,3", "ncbd:2:", "shuffle:2:1", "dom:6", "tamari:3", "bool:2", "chain:3"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert_eq!("ncbd:2".parse::<FamilySpec>().unwrap(), FamilySpec::Signed(2, vec![]));
        assert!(matches!("foo:3".parse::<FamilySpec>(), Err(Error::UnknownFamily(_))));
        assert!(matches!("nc:x".parse::<FamilySpec>(), Err(Error::UnknownFamily(_))));
        assert!(matches!("nc:3:4".parse::<FamilySpec>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn canonical_orders() {
        let nc = FamilySpec::Noncrossing(4).build().unwrap();
        assert_eq!(nc.canonical.relation_count(), 11);
        let w = FamilySpec::Shuffle(2, 1).build().unwrap();
        assert_eq!(w.canonical.relation_count(), 6);
        let p = FamilySpec::Partition(3).build().unwrap();
        assert_eq!(p.canonical.relation_count(), 0);
    }
}
