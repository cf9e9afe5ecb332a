use super::atoms::{sort_lexicographic, AtomContext, AtomOrder, AtomSet};
use super::nbb::walk_hereditary;
use super::MobiusVector;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

fn independent_in(ctx: &AtomContext<'_>, b: AtomSet) -> bool {
    let j = ctx.join(b);
    b.iter().all(|p| ctx.join(b.without(p)) != j)
}

/// Every proper subset has a strictly smaller join; dropping one element at a
/// time is enough to check this.
pub fn is_independent(lattice: &FiniteLattice, b: AtomSet) -> Result<bool> {
    Ok(independent_in(&AtomContext::new(lattice)?, b))
}

/// Minimal dependent atom sets, sorted lexicographically.
pub fn enumerate_circuits(lattice: &FiniteLattice) -> Result<Vec<AtomSet>> {
    let ctx = AtomContext::for_enumeration(lattice)?;
    let k = ctx.atom_count();
    let mut independent = Vec::new();
    walk_hereditary(
        &ctx,
        ctx.all(),
        |s, _, _| independent_in(&ctx, s),
        |s, _| independent.push(s),
    );
    let mut out = Vec::new();
    for i in independent {
        let from = 64 - i.0.leading_zeros() as usize;
        for q in from..k {
            let c = i.with(q);
            if !independent_in(&ctx, c)
                && i.iter().all(|p| independent_in(&ctx, c.without(p)))
            {
                out.push(c);
            }
        }
    }
    sort_lexicographic(&mut out);
    Ok(out)
}

fn require_total(order: &AtomOrder) -> Result<()> {
    if order.is_total() {
        Ok(())
    } else {
        Err(Error::NotTotalOrder)
    }
}

fn first_in(order: &AtomOrder, c: AtomSet) -> usize {
    order
        .minimal_in(c)
        .iter()
        .next()
        .expect("nonempty set has a minimal element")
}

/// Each circuit with its ⊴-first atom removed, in the order of the circuits.
pub fn broken_circuits(lattice: &FiniteLattice, total: &AtomOrder) -> Result<Vec<AtomSet>> {
    require_total(total)?;
    Ok(enumerate_circuits(lattice)?
        .into_iter()
        .map(|c| c.without(first_in(total, c)))
        .collect())
}

/// A circuit `C` with `⋁C != ⋁(C ∖ min C)`, if any.
pub fn condition_cprime_witness(lattice: &FiniteLattice, total: &AtomOrder) -> Result<Option<AtomSet>> {
    require_total(total)?;
    let ctx = AtomContext::new(lattice)?;
    Ok(enumerate_circuits(lattice)?
        .into_iter()
        .find(|&c| ctx.join(c) != ctx.join(c.without(first_in(total, c)))))
}

pub fn condition_cprime_holds(lattice: &FiniteLattice, total: &AtomOrder) -> Result<bool> {
    Ok(condition_cprime_witness(lattice, total)?.is_none())
}

fn nbc_sets(lattice: &FiniteLattice, total: &AtomOrder) -> Result<Vec<(AtomSet, usize)>> {
    let broken = broken_circuits(lattice, total)?;
    let ctx = AtomContext::for_enumeration(lattice)?;
    let mut out = Vec::new();
    walk_hereditary(
        &ctx,
        ctx.all(),
        |s, p, _| !broken.iter().any(|bc| bc.contains(p) && bc.is_subset(s)),
        |s, j| out.push((s, j)),
    );
    Ok(out)
}

/// Atom sets joining to `x` that contain no broken circuit, sorted lexicographically.
pub fn enumerate_nbc_bases(lattice: &FiniteLattice, total: &AtomOrder, x: usize) -> Result<Vec<AtomSet>> {
    lattice.check_element(x)?;
    let mut out: Vec<AtomSet> = nbc_sets(lattice, total)?
        .into_iter()
        .filter(|&(_, j)| j == x)
        .map(|(s, _)| s)
        .collect();
    sort_lexicographic(&mut out);
    Ok(out)
}

/// Signed count of NBC bases; refused when some circuit violates `⋁C = ⋁(C ∖ min C)`.
pub fn mobius_nbc_generalized(lattice: &FiniteLattice, total: &AtomOrder) -> Result<MobiusVector> {
    if let Some(c) = condition_cprime_witness(lattice, total)? {
        let ctx = AtomContext::new(lattice)?;
        return Err(Error::ConditionCprimeViolated(ctx.elements(c)));
    }
    let mut values = vec![0i64; lattice.size()];
    for (s, j) in nbc_sets(lattice, total)? {
        values[j] += s.sign();
    }
    MobiusVector::checked(lattice, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::CoverList;
    use crate::mobius::{enumerate_nbb_bases, mobius_recursive};

    /// Π_3: 0̂; atoms 12, 13, 23; 1̂.
    fn pi3() -> FiniteLattice {
        FiniteLattice::from_cover_relations(&CoverList::new(
            5,
            [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        ))
        .unwrap()
    }

    #[test]
    fn pi3_circuits() {
        let l = pi3();
        let o = AtomOrder::total_by_position(&l).unwrap();
        let all = AtomSet::from_positions([0, 1, 2]);
        assert_eq!(enumerate_circuits(&l).unwrap(), vec![all]);
        assert_eq!(broken_circuits(&l, &o).unwrap(), vec![AtomSet::from_positions([1, 2])]);
        assert!(condition_cprime_holds(&l, &o).unwrap());
        let bases = enumerate_nbc_bases(&l, &o, 4).unwrap();
        assert_eq!(bases.len(), 2);
        assert_eq!(bases, enumerate_nbb_bases(&l, &o, 4).unwrap());
        assert_eq!(mobius_nbc_generalized(&l, &o).unwrap(), mobius_recursive(&l));
        assert!(!is_independent(&l, all).unwrap());
    }

    #[test]
    fn boolean_square_has_no_circuits() {
        let c = FiniteLattice::from_cover_relations(&CoverList::new(2, [(0, 1)])).unwrap();
        let b2 = c.direct_product(&c).unwrap();
        assert!(enumerate_circuits(&b2).unwrap().is_empty());
        let o = AtomOrder::total_by_position(&b2).unwrap();
        assert_eq!(enumerate_nbc_bases(&b2, &o, b2.top()).unwrap().len(), 1);
    }

    #[test]
    fn partial_order_rejected() {
        let l = pi3();
        assert_eq!(
            broken_circuits(&l, &AtomOrder::incomparability(&l)),
            Err(Error::NotTotalOrder)
        );
    }

    #[test]
    fn cprime_violation_reports_circuit() {
        // 0̂ < a, b, c; a, b < x; x, c < 1̂ and a ∨ c = b ∨ c = 1̂.
        let l = FiniteLattice::from_cover_relations(&CoverList::new(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (4, 5), (3, 5)],
        ))
        .unwrap();
        // c first: the circuit {a, b, c} minus c joins only to x
        let o = AtomOrder::from_relations(&l, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(enumerate_circuits(&l).unwrap(), vec![AtomSet::from_positions([0, 1, 2])]);
        assert_eq!(
            mobius_nbc_generalized(&l, &o),
            Err(Error::ConditionCprimeViolated(vec![1, 2, 3]))
        );
    }
}
