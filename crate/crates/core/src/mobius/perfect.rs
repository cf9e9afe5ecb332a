use super::atoms::{AtomContext, AtomOrder};
use super::nbb::{walk_hereditary, BbTester};
use super::{mobius_recursive, MobiusVector};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementReport {
    pub element: usize,
    pub mu: i64,
    /// NBB bases of even size.
    pub even: usize,
    /// NBB bases of odd size.
    pub odd: usize,
}

impl ElementReport {
    /// One sign only, and exactly `|μ(x)|` terms.
    pub fn is_perfect(&self) -> bool {
        (self.even == 0 || self.odd == 0) && (self.even + self.odd) as i64 == self.mu.abs()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectReport {
    pub perfect: bool,
    pub elements: Vec<ElementReport>,
}

impl PerfectReport {
    pub fn failures(&self) -> impl Iterator<Item = &ElementReport> {
        self.elements.iter().filter(|r| !r.is_perfect())
    }
}

fn base_parities(ctx: &AtomContext<'_>, order: &AtomOrder) -> Vec<(usize, usize)> {
    let tester = BbTester::new(ctx, order);
    let mut counts = vec![(0usize, 0usize); ctx.lattice.size()];
    walk_hereditary(
        ctx,
        ctx.all(),
        |s, p, _| !tester.has_bb_through(ctx, s, p),
        |s, j| {
            if s.len() % 2 == 0 {
                counts[j].0 += 1
            } else {
                counts[j].1 += 1
            }
        },
    );
    counts
}

fn report_with(ctx: &AtomContext<'_>, mu: &MobiusVector, order: &AtomOrder) -> PerfectReport {
    let elements: Vec<ElementReport> = base_parities(ctx, order)
        .into_iter()
        .enumerate()
        .map(|(x, (even, odd))| ElementReport {
            element: x,
            mu: mu.get(x),
            even,
            odd,
        })
        .collect();
    PerfectReport {
        perfect: elements.iter().all(ElementReport::is_perfect),
        elements,
    }
}

pub fn is_perfect_order(lattice: &FiniteLattice, order: &AtomOrder) -> Result<PerfectReport> {
    let ctx = AtomContext::for_enumeration(lattice)?;
    Ok(report_with(&ctx, &mobius_recursive(lattice), order))
}

/// Tries every relation set on the atoms in order of increasing size (pairs in
/// lexicographic order within a size), keeps the strict partial orders, and
/// returns the first perfect one. `budget` bounds the number of relation sets
/// examined; running out yields `BudgetExhausted`, finishing the search yields
/// `ProvedNone`.
pub fn search_perfect_order(lattice: &FiniteLattice, budget: usize) -> Result<AtomOrder> {
    let ctx = AtomContext::for_enumeration(lattice)?;
    let mu = mobius_recursive(lattice);
    let k = ctx.atom_count();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|a| (0..k).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let max_edges = k * k.saturating_sub(1) / 2;
    let mut examined = 0usize;
    for e in 0..=max_edges {
        let mut idx: Vec<usize> = (0..e).collect();
        loop {
            examined += 1;
            if examined > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            let mut below = vec![0u64; k];
            for &i in &idx {
                let (a, b) = pairs[i];
                below[b] |= 1 << a;
            }
            let transitive = (0..k).all(|b| {
                let row = below[b];
                super::AtomSet(row).iter().all(|a| below[a] & !row == 0)
            });
            if transitive {
                let order = AtomOrder::from_rows_unchecked(lattice.atoms().to_vec(), below);
                if report_with(&ctx, &mu, &order).perfect {
                    return Ok(order);
                }
            }
            if !next_combination(&mut idx, pairs.len()) {
                break;
            }
        }
    }
    Err(Error::ProvedNone)
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..r {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
