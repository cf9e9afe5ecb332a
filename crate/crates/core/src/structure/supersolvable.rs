use std::ops::ControlFlow;

use super::chains::{first_chain, is_left_modular_element, walk_chains, MaximalChain};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

pub const MAX_SUPERSOLVABLE_SIZE: usize = 200;

/// Closure of `generators` under meet and join, sorted.
pub fn sublattice_generated(lattice: &FiniteLattice, generators: &[usize]) -> Vec<usize> {
    let mut member = vec![false; lattice.size()];
    let mut members = Vec::new();
    let mut queue = Vec::new();
    for &g in generators {
        if !member[g] {
            member[g] = true;
            queue.push(g);
        }
    }
    while let Some(e) = queue.pop() {
        members.push(e);
        for i in 0..members.len() {
            let m = members[i];
            for r in [lattice.join(e, m), lattice.meet(e, m)] {
                if !member[r] {
                    member[r] = true;
                    queue.push(r);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

fn check_size(lattice: &FiniteLattice) -> Result<()> {
    if lattice.size() > MAX_SUPERSOLVABLE_SIZE {
        return Err(Error::CapacityExceeded {
            what: "lattice size for the supersolvability scan",
            got: lattice.size(),
            limit: MAX_SUPERSOLVABLE_SIZE,
        });
    }
    Ok(())
}

/// A maximal chain that generates a non-distributive sublattice together with
/// `delta`, if any.
pub fn supersolvability_witness(lattice: &FiniteLattice, delta: &MaximalChain) -> Result<Option<MaximalChain>> {
    check_size(lattice)?;
    // sublattices of a distributive lattice are distributive, so chains inside a
    // closure already checked need no work
    let mut checked: Vec<Vec<bool>> = Vec::new();
    let mut bad = None;
    walk_chains(
        lattice,
        |_| true,
        |path| {
            if checked.iter().any(|c| path.iter().all(|&x| c[x])) {
                return ControlFlow::Continue(());
            }
            let gens: Vec<usize> = delta.elements().iter().chain(path).copied().collect();
            let closure = sublattice_generated(lattice, &gens);
            if lattice.is_distributive_on(&closure) {
                let mut mask = vec![false; lattice.size()];
                for &x in &closure {
                    mask[x] = true;
                }
                checked.push(mask);
                ControlFlow::Continue(())
            } else {
                bad = Some(path.to_vec());
                ControlFlow::Break(())
            }
        },
    );
    Ok(bad.map(|p| MaximalChain::new(lattice, p).expect("walk yields maximal chains")))
}

/// `delta` together with every maximal chain generates a distributive sublattice.
pub fn is_supersolvable_with(lattice: &FiniteLattice, delta: &MaximalChain) -> Result<bool> {
    Ok(supersolvability_witness(lattice, delta)?.is_none())
}

/// A chain making the lattice supersolvable. Only left-modular chains qualify, so
/// only those are tried.
pub fn find_supersolvable_chain(lattice: &FiniteLattice) -> Result<Option<MaximalChain>> {
    check_size(lattice)?;
    let mut result = Ok(None);
    walk_chains(
        lattice,
        |x| is_left_modular_element(lattice, x),
        |path| {
            let delta = MaximalChain::new(lattice, path.to_vec()).expect("walk yields maximal chains");
            match is_supersolvable_with(lattice, &delta) {
                Ok(true) => {
                    result = Ok(Some(delta));
                    ControlFlow::Break(())
                }
                Ok(false) => ControlFlow::Continue(()),
                Err(e) => {
                    result = Err(e);
                    ControlFlow::Break(())
                }
            }
        },
    );
    result
}

/// Some maximal chain, searched depth-first with lower indices first.
pub fn first_maximal_chain(lattice: &FiniteLattice) -> MaximalChain {
    first_chain(lattice, |_| true).expect("every finite lattice has a maximal chain")
}
