use std::ops::ControlFlow;

use super::chains::{
    generalized_rank, induced_atom_order, is_left_modular_element, level_condition_holds,
    levels_from_chain, walk_chains, LevelPartition, MaximalChain,
};
use super::polynomial::IntegerPolynomial;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::mobius::{enumerate_circuits, enumerate_nbb_sets, mobius_recursive, sort_lexicographic, AtomSet};

/// A maximal chain of left-modular elements that satisfies the level condition.
/// Only the checks in this module construct one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LlWitness {
    chain: MaximalChain,
    levels: LevelPartition,
}

impl LlWitness {
    pub fn chain(&self) -> &MaximalChain {
        &self.chain
    }

    pub fn levels(&self) -> &LevelPartition {
        &self.levels
    }
}

/// Checks one chain for both conditions.
pub fn ll_witness_for_chain(lattice: &FiniteLattice, chain: &MaximalChain) -> Option<LlWitness> {
    let lm = chain.elements().iter().all(|&x| is_left_modular_element(lattice, x));
    (lm && level_condition_holds(lattice, chain)).then(|| LlWitness {
        chain: chain.clone(),
        levels: levels_from_chain(lattice, chain),
    })
}

/// Walks the left-modular maximal chains in search order and returns the first
/// one satisfying the level condition.
pub fn is_ll(lattice: &FiniteLattice) -> Option<LlWitness> {
    let mut found = None;
    walk_chains(
        lattice,
        |x| is_left_modular_element(lattice, x),
        |path| {
            let chain = MaximalChain::new(lattice, path.to_vec()).expect("walk yields maximal chains");
            if level_condition_holds(lattice, &chain) {
                found = Some(LlWitness {
                    levels: levels_from_chain(lattice, &chain),
                    chain,
                });
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    found
}

/// `χ(L, t) = Σ_x μ(0̂, x) t^{n − ρ(x)}` with `ρ` the generalized rank from `chain`
/// and `n` its length.
pub fn characteristic_polynomial(lattice: &FiniteLattice, chain: &MaximalChain) -> IntegerPolynomial {
    let mu = mobius_recursive(lattice);
    let rho = generalized_rank(lattice, chain);
    let n = chain.length();
    let mut c = vec![0i64; n + 1];
    for x in 0..lattice.size() {
        c[n - rho[x]] += mu.get(x);
    }
    IntegerPolynomial::new(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// The summation over elements.
    pub chi: IntegerPolynomial,
    /// `∏ (t − |A_i|)`.
    pub product: IntegerPolynomial,
    /// Level sizes, ascending.
    pub roots: Vec<i64>,
    pub equal: bool,
}

/// Compares the element sum with the product over level sizes. Requires a
/// witness produced for this very chain.
pub fn ll_factorization_check(
    lattice: &FiniteLattice,
    chain: &MaximalChain,
    witness: Option<&LlWitness>,
) -> Result<Factorization> {
    let w = witness
        .filter(|w| &w.chain == chain)
        .ok_or(Error::PreconditionNotVerified)?;
    let chi = characteristic_polynomial(lattice, chain);
    let mut roots: Vec<i64> = w.levels.sizes().into_iter().map(|s| s as i64).collect();
    roots.sort_unstable();
    let product = IntegerPolynomial::from_roots(&roots);
    let equal = chi == product;
    Ok(Factorization { chi, product, roots, equal })
}

/// Atom sets with at most one member per level, sorted.
pub fn level_transversals(levels: &LevelPartition) -> Vec<AtomSet> {
    let mut out = vec![AtomSet::EMPTY];
    for lv in levels.levels() {
        let extra: Vec<AtomSet> = out
            .iter()
            .flat_map(|&s| lv.iter().map(move |&p| s.with(p)))
            .collect();
        out.extend(extra);
    }
    sort_lexicographic(&mut out);
    out
}

/// Whether the NBB sets of the induced order are exactly the level transversals.
pub fn nbb_level_characterization(lattice: &FiniteLattice, witness: &LlWitness) -> Result<bool> {
    let order = induced_atom_order(&witness.levels)?;
    let mut nbb: Vec<AtomSet> = enumerate_nbb_sets(lattice, &order)?
        .into_iter()
        .map(|(s, _)| s)
        .collect();
    sort_lexicographic(&mut nbb);
    Ok(nbb == level_transversals(&witness.levels))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDifference {
    pub element: usize,
    pub generalized: usize,
    pub ordinary: usize,
    pub mu: i64,
}

/// Elements whose generalized and ordinary ranks differ; `None` when the lattice
/// is not ranked.
pub fn rank_comparison(lattice: &FiniteLattice, chain: &MaximalChain) -> Option<Vec<RankDifference>> {
    let ordinary = lattice.rank_function()?;
    let generalized = generalized_rank(lattice, chain);
    let mu = mobius_recursive(lattice);
    Some(
        (0..lattice.size())
            .filter(|&x| generalized[x] != ordinary[x])
            .map(|x| RankDifference {
                element: x,
                generalized: generalized[x],
                ordinary: ordinary[x],
                mu: mu.get(x),
            })
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitLevelCheck {
    /// Every circuit with a unique maximal atom under the induced order keeps its
    /// join when that atom is removed.
    pub hypothesis: bool,
    /// The level condition for the chain.
    pub conclusion: bool,
    /// A circuit violating the hypothesis.
    pub counterexample: Option<AtomSet>,
}

impl CircuitLevelCheck {
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

pub fn level_condition_from_circuits(lattice: &FiniteLattice, chain: &MaximalChain) -> Result<CircuitLevelCheck> {
    let levels = levels_from_chain(lattice, chain);
    let order = induced_atom_order(&levels)?;
    let join = |s: AtomSet| lattice.join_set(s.iter().map(|p| lattice.atoms()[p]));
    let counterexample = enumerate_circuits(lattice)?.into_iter().find(|&c| {
        let maxima: Vec<usize> = c
            .iter()
            .filter(|&p| c.iter().all(|q| !order.strictly_below(p, q)))
            .collect();
        maxima.len() == 1 && join(c) != join(c.without(maxima[0]))
    });
    Ok(CircuitLevelCheck {
        hypothesis: counterexample.is_none(),
        conclusion: level_condition_holds(lattice, chain),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, chain, partition_lattice, shuffle_poset, tamari_lattice};
    use crate::mobius::enumerate_nbb_bases;

    #[test]
    fn shuffle_w21_factors() {
        let l = shuffle_poset(2, 1).unwrap().lattice;
        let w = is_ll(&l).expect("LL");
        let f = ll_factorization_check(&l, w.chain(), Some(&w)).unwrap();
        assert!(f.equal);
        assert_eq!(f.roots, [1, 1, 3]);
        assert_eq!(f.chi.to_string(), "t^3-5t^2+7t-3");
        assert!(nbb_level_characterization(&l, &w).unwrap());
        assert!(!l.is_semimodular());
    }

    #[test]
    fn factorization_needs_a_witness() {
        let l = boolean_lattice(2).unwrap();
        let c = MaximalChain::new(&l, vec![0, 1, 3]).unwrap();
        assert_eq!(ll_factorization_check(&l, &c, None), Err(Error::PreconditionNotVerified));
        let other = ll_witness_for_chain(&l, &MaximalChain::new(&l, vec![0, 2, 3]).unwrap()).unwrap();
        assert_eq!(ll_factorization_check(&l, &c, Some(&other)), Err(Error::PreconditionNotVerified));
    }

    #[test]
    fn tamari_t3() {
        let l = tamari_lattice(3).unwrap().lattice;
        let w = is_ll(&l).unwrap();
        let f = ll_factorization_check(&l, w.chain(), Some(&w)).unwrap();
        assert!(f.equal);
        assert_eq!(f.roots, [0, 1, 1]);
    }

    #[test]
    fn boolean_b3() {
        let l = boolean_lattice(3).unwrap();
        let w = is_ll(&l).unwrap();
        let chi = characteristic_polynomial(&l, w.chain());
        assert_eq!(chi, IntegerPolynomial::from_roots(&[1, 1, 1]));
        assert_eq!(rank_comparison(&l, w.chain()).unwrap(), []);
    }

    #[test]
    fn partition_pi3() {
        let l = partition_lattice(3).unwrap().lattice;
        let w = is_ll(&l).unwrap();
        let f = ll_factorization_check(&l, w.chain(), Some(&w)).unwrap();
        assert!(f.equal);
        assert_eq!(f.roots, [1, 2]);
    }

    #[test]
    fn chain_ranks_differ_only_where_mu_vanishes() {
        let l = chain(3).unwrap();
        let w = is_ll(&l).unwrap();
        let diff = rank_comparison(&l, w.chain()).unwrap();
        assert_eq!(diff.iter().map(|d| d.element).collect::<Vec<_>>(), [2, 3]);
        assert!(diff.iter().all(|d| d.mu == 0));
    }

    #[test]
    fn nbb_bases_have_generalized_rank_size() {
        let l = shuffle_poset(2, 1).unwrap().lattice;
        let w = is_ll(&l).unwrap();
        let order = induced_atom_order(w.levels()).unwrap();
        let rho = generalized_rank(&l, w.chain());
        for x in 0..l.size() {
            for b in enumerate_nbb_bases(&l, &order, x).unwrap() {
                assert_eq!(b.len(), rho[x]);
            }
        }
    }

    #[test]
    fn circuits_imply_levels_in_w21() {
        let l = shuffle_poset(2, 1).unwrap().lattice;
        let w = is_ll(&l).unwrap();
        let check = level_condition_from_circuits(&l, w.chain()).unwrap();
        assert!(check.hypothesis && check.conclusion);
        assert!(check.implication_holds());
    }
}
