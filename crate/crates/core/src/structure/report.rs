use std::fmt;
use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::chains::{find_left_modular_chain, level_condition_holds, walk_chains, MaximalChain};
use super::ll::is_ll;
use super::supersolvable::find_supersolvable_chain;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Chains examined when looking for one that satisfies the level condition.
pub const MAX_LEVEL_CHAIN_SCAN: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    LeftModular,
    Level,
    Ll,
    Semimodular,
    Geometric,
    Supersolvable,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::LeftModular,
        Property::Level,
        Property::Ll,
        Property::Semimodular,
        Property::Geometric,
        Property::Supersolvable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::LeftModular => "left-modular",
            Property::Level => "level",
            Property::Ll => "ll",
            Property::Semimodular => "semimodular",
            Property::Geometric => "geometric",
            Property::Supersolvable => "supersolvable",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown property `{s}`") })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub property: Property,
    pub holds: bool,
    /// Labels of a witnessing chain or violating pair.
    pub witness: Option<Vec<String>>,
}

/// The first maximal chain satisfying the level condition.
pub fn find_level_chain(lattice: &FiniteLattice) -> Result<Option<MaximalChain>> {
    let mut seen = 0usize;
    let mut found = Ok(None);
    walk_chains(
        lattice,
        |_| true,
        |path| {
            seen += 1;
            if seen > MAX_LEVEL_CHAIN_SCAN {
                found = Err(Error::CapacityExceeded {
                    what: "maximal chains scanned for the level condition",
                    got: seen,
                    limit: MAX_LEVEL_CHAIN_SCAN,
                });
                return ControlFlow::Break(());
            }
            let c = MaximalChain::new(lattice, path.to_vec()).expect("walk yields maximal chains");
            if level_condition_holds(lattice, &c) {
                found = Ok(Some(c));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    found
}

pub fn check_property(lattice: &FiniteLattice, property: Property) -> Result<ReportRow> {
    let chain_row = |c: Option<MaximalChain>| ReportRow {
        property,
        holds: c.is_some(),
        witness: c.map(|c| c.labels(lattice)),
    };
    Ok(match property {
        Property::LeftModular => chain_row(find_left_modular_chain(lattice)),
        Property::Level => chain_row(find_level_chain(lattice)?),
        Property::Ll => chain_row(is_ll(lattice).map(|w| w.chain().clone())),
        Property::Supersolvable => chain_row(find_supersolvable_chain(lattice)?),
        Property::Semimodular => {
            let bad = lattice.semimodularity_witness();
            ReportRow {
                property,
                holds: bad.is_none(),
                witness: bad.map(|(x, y)| vec![lattice.label(x), lattice.label(y)]),
            }
        }
        Property::Geometric => ReportRow {
            property,
            holds: lattice.is_geometric(),
            witness: None,
        },
    })
}

/// `property<TAB>holds<TAB>witness` lines; witness labels are space-separated, `-`
/// when absent.
pub fn write_report(rows: &[ReportRow]) -> String {
    let mut out = String::from("property\tholds\twitness\n");
    for r in rows {
        let w = r.witness.as_ref().map_or_else(|| "-".to_string(), |w| w.join(" "));
        let _ = writeln!(out, "{}\t{}\t{}", r.property, r.holds, w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, shuffle_poset};

    #[test]
    fn report_for_w21() {
        let l = shuffle_poset(2, 1).unwrap().lattice;
        let rows: Vec<ReportRow> = Property::ALL
            .into_iter()
            .map(|p| check_property(&l, p).unwrap())
            .collect();
        let holds: Vec<bool> = rows.iter().map(|r| r.holds).collect();
        assert_eq!(holds, [true, true, true, false, false, true]);
        let text = write_report(&rows);
        assert!(text.starts_with("property\tholds\twitness\nleft-modular\ttrue\tde "));
        assert!(text.contains("geometric\tfalse\t-\n"));
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("modular".parse::<Property>().is_err());
    }

    #[test]
    fn boolean_is_everything() {
        let l = boolean_lattice(2).unwrap();
        for p in Property::ALL {
            assert!(check_property(&l, p).unwrap().holds, "{p}");
        }
    }
}
