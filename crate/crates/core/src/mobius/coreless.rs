use super::atoms::{AtomContext, AtomOrder, AtomSelector, AtomSet};
use super::nbb::walk_hereditary;
use super::MobiusVector;
use crate::error::Result;
use crate::lattice::FiniteLattice;

/// `M(x)` = the ⊴-minimal atoms below `x`.
pub fn selector_from_order(lattice: &FiniteLattice, order: &AtomOrder) -> Result<AtomSelector> {
    let ctx = AtomContext::new(lattice)?;
    let sel = (0..lattice.size())
        .map(|x| order.minimal_in(ctx.below(x)))
        .collect();
    AtomSelector::new(lattice, sel)
}

/// `removed[y]` = union of `M(x)` over all `x >= y`: what one application of the
/// deletion step strips from a set joining to `y`.
fn removal_masks(lattice: &FiniteLattice, selector: &AtomSelector) -> Vec<AtomSet> {
    (0..lattice.size())
        .map(|y| AtomSet(lattice.up_set(y).fold(0, |m, x| m | selector.get(x).0)))
        .collect()
}

fn core_with(ctx: &AtomContext<'_>, removed: &[AtomSet], mut b: AtomSet) -> AtomSet {
    loop {
        let next = AtomSet(b.0 & !removed[ctx.join(b)].0);
        if next == b {
            return b;
        }
        b = next;
    }
}

/// Repeatedly deletes from `B` every member of `M(x)` for every `x >= ⋁B`,
/// re-evaluating the join of the current set each round, until nothing changes.
pub fn core(lattice: &FiniteLattice, selector: &AtomSelector, b: AtomSet) -> Result<AtomSet> {
    let ctx = AtomContext::new(lattice)?;
    Ok(core_with(&ctx, &removal_masks(lattice, selector), b))
}

/// Every coreless set with its join. Coreless sets form a hereditary family
/// (the core of a subset lies inside the core of the set), so the walk is pruned.
pub fn enumerate_coreless_sets(
    lattice: &FiniteLattice,
    selector: &AtomSelector,
) -> Result<Vec<(AtomSet, usize)>> {
    let ctx = AtomContext::for_enumeration(lattice)?;
    let removed = removal_masks(lattice, selector);
    let mut out = Vec::new();
    walk_hereditary(
        &ctx,
        ctx.all(),
        |s, _, _| core_with(&ctx, &removed, s).is_empty(),
        |s, j| out.push((s, j)),
    );
    Ok(out)
}

pub fn mobius_coreless(lattice: &FiniteLattice, selector: &AtomSelector) -> Result<MobiusVector> {
    let mut values = vec![0i64; lattice.size()];
    for (s, j) in enumerate_coreless_sets(lattice, selector)? {
        values[j] += s.sign();
    }
    MobiusVector::checked(lattice, values)
}
