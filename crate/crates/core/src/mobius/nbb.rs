use super::atoms::{sort_lexicographic, AtomContext, AtomOrder, AtomSet};
use super::MobiusVector;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Visits every member of a hereditary family of atom sets inside `allowed`,
/// exactly once. `admit(set, p, join)` decides whether `set`, obtained by adding
/// position `p` (larger than every other member) to a member, is in the family.
pub(crate) fn walk_hereditary(
    ctx: &AtomContext<'_>,
    allowed: AtomSet,
    mut admit: impl FnMut(AtomSet, usize, usize) -> bool,
    mut visit: impl FnMut(AtomSet, usize),
) {
    let l = ctx.lattice;
    let k = ctx.atom_count();
    visit(AtomSet::EMPTY, l.bottom());
    let mut stack = vec![(AtomSet::EMPTY, l.bottom(), 0usize)];
    while let Some((set, join, from)) = stack.pop() {
        for p in (from..k).rev() {
            if !allowed.contains(p) {
                continue;
            }
            let next = set.with(p);
            let j = l.join(join, ctx.atom(p));
            if admit(next, p, j) {
                visit(next, j);
                stack.push((next, j, p + 1));
            }
        }
    }
}

/// Direct test of the bounded-below property: every `d ∈ D` has an atom
/// `a ⊲ d` with `a < ⋁D`.
pub fn is_bounded_below(lattice: &FiniteLattice, order: &AtomOrder, d: AtomSet) -> Result<bool> {
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    let ctx = AtomContext::new(lattice)?;
    let top = ctx.join(d);
    Ok(d.iter().all(|x| {
        order
            .lower_set(x)
            .iter()
            .any(|a| lattice.lt(ctx.atom(a), top))
    }))
}

/// Per-element masks for the containment test: `eligible[y]` holds every atom
/// `d <= y` that has some `a ⊲ d` with `a < y`. A set `B` contains a BB subset
/// joining to `y` iff `B ∩ eligible[y]` is nonempty and joins to `y`.
pub(crate) struct BbTester {
    eligible: Vec<u64>,
}

impl BbTester {
    pub fn new(ctx: &AtomContext<'_>, order: &AtomOrder) -> Self {
        let l = ctx.lattice;
        let eligible = (0..l.size())
            .map(|y| {
                let mut strict = ctx.below(y);
                if let Some(p) = ctx.position_of(y) {
                    strict = strict.without(p);
                }
                ctx.below(y)
                    .iter()
                    .filter(|&d| order.lower_set(d).0 & strict.0 != 0)
                    .fold(0u64, |m, d| m | 1 << d)
            })
            .collect();
        Self { eligible }
    }

    /// Whether `set` has a BB subset that contains position `p`.
    pub fn has_bb_through(&self, ctx: &AtomContext<'_>, set: AtomSet, p: usize) -> bool {
        (0..self.eligible.len()).any(|y| {
            let d = AtomSet(set.0 & self.eligible[y]);
            d.contains(p) && ctx.join(d) == y
        })
    }

    pub fn has_bb(&self, ctx: &AtomContext<'_>, set: AtomSet) -> bool {
        (0..self.eligible.len()).any(|y| {
            let d = AtomSet(set.0 & self.eligible[y]);
            !d.is_empty() && ctx.join(d) == y
        })
    }
}

/// Whether `set` contains no BB subset.
pub fn is_nbb(lattice: &FiniteLattice, order: &AtomOrder, set: AtomSet) -> Result<bool> {
    let ctx = AtomContext::new(lattice)?;
    Ok(!BbTester::new(&ctx, order).has_bb(&ctx, set))
}

/// Every NBB set with its join, in DFS order.
pub fn enumerate_nbb_sets(lattice: &FiniteLattice, order: &AtomOrder) -> Result<Vec<(AtomSet, usize)>> {
    let ctx = AtomContext::for_enumeration(lattice)?;
    let tester = BbTester::new(&ctx, order);
    let mut out = Vec::new();
    walk_hereditary(
        &ctx,
        ctx.all(),
        |s, p, _| !tester.has_bb_through(&ctx, s, p),
        |s, j| out.push((s, j)),
    );
    Ok(out)
}

/// NBB bases of `x`, sorted lexicographically by atom positions.
pub fn enumerate_nbb_bases(lattice: &FiniteLattice, order: &AtomOrder, x: usize) -> Result<Vec<AtomSet>> {
    lattice.check_element(x)?;
    let ctx = AtomContext::for_enumeration(lattice)?;
    let tester = BbTester::new(&ctx, order);
    let mut out = Vec::new();
    walk_hereditary(
        &ctx,
        ctx.below(x),
        |s, p, _| !tester.has_bb_through(&ctx, s, p),
        |s, j| {
            if j == x {
                out.push(s)
            }
        },
    );
    sort_lexicographic(&mut out);
    Ok(out)
}

/// `μ(x) = Σ (−1)^{|B|}` over NBB bases `B` of `x`.
pub fn mobius_nbb(lattice: &FiniteLattice, order: &AtomOrder) -> Result<MobiusVector> {
    let mut values = vec![0i64; lattice.size()];
    for (s, j) in enumerate_nbb_sets(lattice, order)? {
        values[j] += s.sign();
    }
    MobiusVector::checked(lattice, values)
}

/// Every atom subset joining to `x`, sorted lexicographically.
pub fn crosscut_sets(lattice: &FiniteLattice, x: usize) -> Result<Vec<AtomSet>> {
    lattice.check_element(x)?;
    let ctx = AtomContext::for_enumeration(lattice)?;
    let mut out = Vec::new();
    walk_hereditary(&ctx, ctx.below(x), |_, _, _| true, |s, j| {
        if j == x {
            out.push(s)
        }
    });
    sort_lexicographic(&mut out);
    Ok(out)
}

/// Signed count of all atom subsets by their join.
pub fn mobius_crosscut(lattice: &FiniteLattice) -> Result<MobiusVector> {
    let ctx = AtomContext::for_enumeration(lattice)?;
    let mut values = vec![0i64; lattice.size()];
    walk_hereditary(&ctx, ctx.all(), |_, _, _| true, |s, j| values[j] += s.sign());
    MobiusVector::checked(lattice, values)
}

pub fn incomparability_order(lattice: &FiniteLattice) -> AtomOrder {
    AtomOrder::incomparability(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::CoverList;
    use crate::mobius::mobius_recursive;

    fn seven_element() -> FiniteLattice {
        FiniteLattice::from_cover_relations(&CoverList::new(
            7,
            [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 6), (5, 6)],
        ))
        .unwrap()
    }

    /// b ⊲ a and b ⊲ c, on atom positions a = 0, b = 1, c = 2.
    fn seven_element_order(l: &FiniteLattice) -> AtomOrder {
        AtomOrder::from_relations(l, &[(1, 0), (1, 2)]).unwrap()
    }

    fn all_subsets(k: usize) -> impl Iterator<Item = AtomSet> {
        (0..1u64 << k).map(AtomSet)
    }

    /// NBB by definition: no nonempty subset is BB.
    fn brute_nbb(l: &FiniteLattice, o: &AtomOrder, b: AtomSet) -> bool {
        all_subsets(64 - b.0.leading_zeros() as usize)
            .filter(|d| !d.is_empty() && d.is_subset(b))
            .all(|d| !is_bounded_below(l, o, d).unwrap())
    }

    #[test]
    fn unique_bb_set() {
        let l = seven_element();
        let o = seven_element_order(&l);
        let bb: Vec<AtomSet> = all_subsets(3)
            .filter(|d| !d.is_empty() && is_bounded_below(&l, &o, *d).unwrap())
            .collect();
        assert_eq!(bb, vec![AtomSet::from_positions([0, 2])]);
        assert_eq!(is_bounded_below(&l, &o, AtomSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn seven_element_bases_and_mu() {
        let l = seven_element();
        let o = seven_element_order(&l);
        assert_eq!(
            enumerate_nbb_bases(&l, &o, 4).unwrap(),
            vec![AtomSet::from_positions([0, 1])]
        );
        assert!(enumerate_nbb_bases(&l, &o, 6).unwrap().is_empty());
        let mu = mobius_nbb(&l, &o).unwrap();
        assert_eq!(mu.values(), &[1, -1, -1, -1, 1, 1, 0]);
        assert_eq!(mu, mobius_recursive(&l));
        assert_eq!(mobius_crosscut(&l).unwrap(), mu);
    }

    #[test]
    fn tester_agrees_with_definition() {
        let l = seven_element();
        for o in [
            seven_element_order(&l),
            AtomOrder::incomparability(&l),
            AtomOrder::total_by_position(&l).unwrap(),
            AtomOrder::from_relations(&l, &[(0, 1), (0, 2)]).unwrap(),
        ] {
            let fast: Vec<AtomSet> = enumerate_nbb_sets(&l, &o).unwrap().into_iter().map(|p| p.0).collect();
            for b in all_subsets(3) {
                assert_eq!(fast.contains(&b), brute_nbb(&l, &o, b), "{b:?}");
                assert_eq!(is_nbb(&l, &o, b).unwrap(), brute_nbb(&l, &o, b));
            }
        }
    }

    #[test]
    fn incomparability_gives_crosscut_terms() {
        let l = seven_element();
        let o = incomparability_order(&l);
        assert_eq!(enumerate_nbb_sets(&l, &o).unwrap().len(), 8);
        for x in 0..l.size() {
            assert_eq!(enumerate_nbb_bases(&l, &o, x).unwrap(), crosscut_sets(&l, x).unwrap());
        }
        assert_eq!(crosscut_sets(&l, 6).unwrap().len(), 2);
    }
}
