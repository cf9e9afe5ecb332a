mod common;

use latmu_core::families::{
    composition_join, partition_join, partition_reflection, shuffle_join, shuffle_poset,
    tamari_join, tamari_lattice, tamari_meet, BracketVector, Composition, IntegerPartition,
};
use latmu_core::lattice::io::{parse_lattice, write_lattice};
use latmu_core::mobius::{
    core, enumerate_coreless_sets, enumerate_nbb_sets, is_nbb, mobius_coreless, mobius_crosscut,
    mobius_nbb, mobius_recursive, selector_from_order, AtomSelector, AtomSet, MobiusVector,
};
use latmu_core::structure::{
    characteristic_polynomial, find_left_modular_chain, find_supersolvable_chain,
    generalized_rank, induced_atom_order, is_left_modular_element, is_ll,
    level_condition_from_circuits, level_condition_holds, level_transversals,
    levels_from_chain, ll_factorization_check, longest_chain_lengths, IntegerPolynomial,
    MaximalChain,
};
use latmu_core::{AtomOrder, FiniteLattice};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lattice_from(seed: u64, max_size: usize) -> (FiniteLattice, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = common::random_lattice(&mut rng, max_size, 10);
    (l, rng)
}

fn atom_set(l: &FiniteLattice, s: AtomSet) -> Vec<usize> {
    s.iter().map(|p| l.atoms()[p]).collect()
}

fn all_chains(l: &FiniteLattice) -> Vec<MaximalChain> {
    fn go(l: &FiniteLattice, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == l.top() {
            out.push(path.clone());
            return;
        }
        for &c in l.upper_covers(x) {
            path.push(c);
            go(l, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(l, &mut vec![l.bottom()], &mut out);
    out.into_iter().map(|c| MaximalChain::new(l, c).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn joins_and_meets_are_bounds(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 30);
        let n = l.size();
        for x in 0..n {
            prop_assert!(l.leq(l.bottom(), x) && l.leq(x, l.top()));
            for y in 0..n {
                let j = l.join(x, y);
                let m = l.meet(x, y);
                prop_assert!(l.leq(x, j) && l.leq(y, j) && l.leq(m, x) && l.leq(m, y));
                for z in 0..n {
                    if l.leq(x, z) && l.leq(y, z) {
                        prop_assert!(l.leq(j, z));
                    }
                    if l.leq(z, x) && l.leq(z, y) {
                        prop_assert!(l.leq(z, m));
                    }
                }
                prop_assert_eq!(l.meet(x, l.join(x, y)), x);
                prop_assert_eq!(l.join(x, l.meet(x, y)), x);
            }
        }
        let covers_of_bottom: Vec<usize> = (0..n).filter(|&x| l.covers(l.bottom(), x)).collect();
        prop_assert_eq!(l.atoms(), &covers_of_bottom[..]);
    }

    #[test]
    fn file_format_round_trips(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 30);
        let text = write_lattice(&l);
        let again = parse_lattice(&text).unwrap();
        prop_assert_eq!(write_lattice(&again), text);
        prop_assert_eq!(mobius_recursive(&again), mobius_recursive(&l));
    }

    #[test]
    fn every_method_matches_the_oracle(seed in any::<u64>()) {
        let (l, mut rng) = lattice_from(seed, 30);
        let oracle = common::mobius_oracle(&l);
        prop_assert_eq!(mobius_recursive(&l).values().to_vec(), oracle.clone());
        prop_assert_eq!(mobius_crosscut(&l).unwrap().values().to_vec(), oracle.clone());
        let o = common::random_atom_order(&mut rng, &l);
        prop_assert_eq!(mobius_nbb(&l, &o).unwrap().values().to_vec(), oracle.clone());
        let sel = selector_from_order(&l, &o).unwrap();
        prop_assert_eq!(mobius_coreless(&l, &sel).unwrap().values().to_vec(), oracle.clone());
    }

    #[test]
    fn kronecker_check_rejects_perturbations(seed in any::<u64>(), bump in 1i64..5) {
        let (l, mut rng) = lattice_from(seed, 30);
        let mut v = common::mobius_oracle(&l);
        let x = rng.gen_range(0..l.size());
        v[x] += bump;
        prop_assert!(MobiusVector::checked(&l, v).is_err());
    }

    #[test]
    fn nbb_sets_are_hereditary_and_exact(seed in any::<u64>()) {
        let (l, mut rng) = lattice_from(seed, 24);
        let o = common::random_atom_order(&mut rng, &l);
        let k = l.atoms().len();
        let listed: std::collections::BTreeSet<u64> =
            enumerate_nbb_sets(&l, &o).unwrap().into_iter().map(|(s, j)| {
                assert_eq!(j, l.join_set(atom_set(&l, s)));
                s.0
            }).collect();
        for bits in 0u64..1 << k {
            let s = AtomSet(bits);
            let nbb = is_nbb(&l, &o, s).unwrap();
            prop_assert_eq!(nbb, listed.contains(&bits));
            if nbb {
                for p in s.iter() {
                    prop_assert!(is_nbb(&l, &o, s.without(p)).unwrap());
                }
            }
        }
    }

    #[test]
    fn coreless_sets_for_any_selector(seed in any::<u64>()) {
        let (l, mut rng) = lattice_from(seed, 24);
        let k = l.atoms().len();
        let below = |x: usize| AtomSet::from_positions((0..k).filter(|&p| l.leq(l.atoms()[p], x)));
        let selection: Vec<AtomSet> = (0..l.size())
            .map(|x| {
                let b = below(x);
                let kept = AtomSet(b.0 & rng.gen::<u64>());
                if kept.is_empty() && !b.is_empty() {
                    AtomSet::singleton(b.iter().next().unwrap())
                } else {
                    kept
                }
            })
            .collect();
        let sel = AtomSelector::new(&l, selection).unwrap();
        prop_assert_eq!(mobius_coreless(&l, &sel).unwrap().values().to_vec(), common::mobius_oracle(&l));
        // a set is coreless iff it has no nonempty subset C with C ∩ M(x) = ∅ for all x >= ⋁C
        let removed = |c: AtomSet| {
            let j = l.join_set(atom_set(&l, c));
            (0..l.size()).filter(|&x| l.leq(j, x)).fold(0u64, |m, x| m | sel.get(x).0)
        };
        let listed: std::collections::BTreeSet<u64> =
            enumerate_coreless_sets(&l, &sel).unwrap().into_iter().map(|(s, _)| s.0).collect();
        for bits in 0u64..1 << k {
            let fixed_subset = (1..=bits).filter(|c| c & !bits == 0).any(|c| c & removed(AtomSet(c)) == 0);
            prop_assert_eq!(!fixed_subset, listed.contains(&bits));
            prop_assert_eq!(core(&l, &sel, AtomSet(bits)).unwrap().is_empty(), !fixed_subset);
        }
    }

    #[test]
    fn order_selectors_make_coreless_equal_nbb(seed in any::<u64>()) {
        let (l, mut rng) = lattice_from(seed, 30);
        let o = common::random_atom_order(&mut rng, &l);
        let sel = selector_from_order(&l, &o).unwrap();
        let mut a: Vec<u64> = enumerate_nbb_sets(&l, &o).unwrap().into_iter().map(|(s, _)| s.0).collect();
        let mut b: Vec<u64> = enumerate_coreless_sets(&l, &sel).unwrap().into_iter().map(|(s, _)| s.0).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn atom_orders_are_strict_partial_orders(seed in any::<u64>()) {
        let (l, mut rng) = lattice_from(seed, 30);
        let o = common::random_atom_order(&mut rng, &l);
        let k = o.len();
        for a in 0..k {
            prop_assert!(!o.strictly_below(a, a));
            for b in 0..k {
                for c in 0..k {
                    if o.strictly_below(a, b) && o.strictly_below(b, c) {
                        prop_assert!(o.strictly_below(a, c));
                    }
                }
            }
        }
        let lin = o.linear_extension();
        prop_assert!(lin.is_total() && o.is_extended_by(&lin));
        let rebuilt = AtomOrder::from_relations(&l, &o.cover_relations()).unwrap();
        prop_assert_eq!(rebuilt, o);
    }

    #[test]
    fn products_multiply_mobius(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, _) = lattice_from(s1, 8);
        let (b, _) = lattice_from(s2, 8);
        let p = a.direct_product(&b).unwrap();
        let mu = mobius_recursive(&p);
        prop_assert_eq!(
            mu.get(p.top()),
            mobius_recursive(&a).get(a.top()) * mobius_recursive(&b).get(b.top())
        );
    }

    #[test]
    fn semimodular_lattices_satisfy_the_level_condition(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 20);
        if l.is_semimodular() {
            for c in all_chains(&l) {
                prop_assert!(level_condition_holds(&l, &c));
            }
        }
    }

    #[test]
    fn supersolvable_implies_left_modular(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 20);
        if let Some(c) = find_supersolvable_chain(&l).unwrap() {
            prop_assert!(c.elements().iter().all(|&x| is_left_modular_element(&l, x)));
            prop_assert!(l.is_ranked());
        }
    }

    #[test]
    fn ll_lattices_factor(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 30);
        if let Some(w) = is_ll(&l) {
            let f = ll_factorization_check(&l, w.chain(), Some(&w)).unwrap();
            prop_assert!(f.equal, "chi {} product {}", f.chi, f.product);
            let order = induced_atom_order(w.levels()).unwrap();
            let mut nbb: Vec<AtomSet> = enumerate_nbb_sets(&l, &order).unwrap().into_iter().map(|(s, _)| s).collect();
            latmu_core::mobius::sort_lexicographic(&mut nbb);
            prop_assert_eq!(nbb.clone(), level_transversals(w.levels()));
            let rho = generalized_rank(&l, w.chain());
            for (s, j) in enumerate_nbb_sets(&l, &order).unwrap() {
                prop_assert_eq!(s.len(), rho[j]);
                // each atom below the join shares a level with a member of the set
                for (p, &a) in l.atoms().iter().enumerate() {
                    if l.leq(a, j) {
                        let lv = w.levels().level_of(p);
                        prop_assert!(s.iter().any(|q| w.levels().level_of(q) == lv));
                    }
                }
            }
        }
    }

    #[test]
    fn same_level_atoms_sit_over_an_earlier_atom(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 30);
        if let Some(c) = find_left_modular_chain(&l) {
            let lv = levels_from_chain(&l, &c);
            let atoms = l.atoms();
            for level in lv.levels() {
                for (i, &p) in level.iter().enumerate() {
                    for &q in &level[i + 1..] {
                        let j = l.join(atoms[p], atoms[q]);
                        let earlier = (0..atoms.len())
                            .any(|r| lv.level_of(r) < lv.level_of(p) && l.leq(atoms[r], j));
                        prop_assert!(earlier);
                    }
                }
            }
        }
    }

    #[test]
    fn atomic_left_modular_rank_is_longest_chain(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 30);
        if l.is_atomic() {
            if let Some(c) = find_left_modular_chain(&l) {
                prop_assert_eq!(generalized_rank(&l, &c), longest_chain_lengths(&l));
            }
        }
    }

    #[test]
    fn circuit_hypothesis_implies_level_condition(seed in any::<u64>()) {
        let (l, mut rng) = lattice_from(seed, 24);
        let chains = all_chains(&l);
        let c = &chains[rng.gen_range(0..chains.len())];
        prop_assert!(level_condition_from_circuits(&l, c).unwrap().implication_holds());
    }

    #[test]
    fn characteristic_polynomial_at_one_vanishes(seed in any::<u64>()) {
        let (l, _) = lattice_from(seed, 30);
        let c = all_chains(&l).swap_remove(0);
        // Σ μ(x) over the whole lattice is 0 unless the lattice is a point
        prop_assert_eq!(characteristic_polynomial(&l, &c).eval(1), 0);
    }

    #[test]
    fn polynomial_products(a in prop::collection::vec(-4i64..5, 0..6), b in prop::collection::vec(-4i64..5, 0..6)) {
        let pa = IntegerPolynomial::from_roots(&a);
        let pb = IntegerPolynomial::from_roots(&b);
        let both: Vec<i64> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(&pa * &pb, IntegerPolynomial::from_roots(&both));
        prop_assert_eq!(&pa * &pb, &pb * &pa);
        for &r in &both {
            prop_assert_eq!((&pa * &pb).eval(r), 0);
        }
    }

    #[test]
    fn partition_reflection_is_least_dominating(parts in prop::collection::vec(1u32..5, 1..6)) {
        let c = Composition::new(parts.clone()).unwrap();
        let r = partition_reflection(&c);
        let n: u32 = parts.iter().sum();
        let prefix = |v: &[u32], k: usize| v.iter().take(k).sum::<u32>();
        let above = |p: &[u32]| (1..=parts.len().max(p.len())).all(|k| prefix(p, k) >= prefix(&parts, k));
        prop_assert!(above(r.parts()));
        for p in all_partitions(n) {
            if above(&p) {
                prop_assert!(r.dominated_by(&IntegerPartition::new(p).unwrap()));
            }
        }
    }

    #[test]
    fn partition_join_via_compositions(a in 0usize..30, b in 0usize..30) {
        let ps = all_partitions(8);
        let (x, y) = (IntegerPartition::new(ps[a % ps.len()].clone()).unwrap(), IntegerPartition::new(ps[b % ps.len()].clone()).unwrap());
        let j = partition_join(&x, &y).unwrap();
        let via = partition_reflection(&composition_join(&x.as_composition(), &y.as_composition()).unwrap());
        prop_assert_eq!(&j, &via);
        prop_assert!(x.dominated_by(&j) && y.dominated_by(&j));
    }

    #[test]
    fn tamari_join_and_meet_are_bounds(i in 0usize..132, k in 0usize..132) {
        let t = tamari_lattice(6).unwrap();
        let (u, v) = (t.element(i % t.elements.len()), t.element(k % t.elements.len()));
        let j = tamari_join(u, v).unwrap();
        let m = tamari_meet(u, v).unwrap();
        prop_assert!(u.leq(&j) && v.leq(&j) && m.leq(u) && m.leq(v));
        for w in &t.elements {
            if u.leq(w) && v.leq(w) {
                prop_assert!(j.leq(w));
            }
            if w.leq(u) && w.leq(v) {
                prop_assert!(w.leq(&m));
            }
        }
    }

    #[test]
    fn shuffle_joins_are_least_upper_bounds(i in 0usize..1000, k in 0usize..1000) {
        let f = shuffle_poset(2, 3).unwrap();
        let (u, v) = (f.element(i % f.elements.len()), f.element(k % f.elements.len()));
        let j = shuffle_join(u, v).unwrap();
        prop_assert_eq!(&j, &shuffle_join(v, u).unwrap());
        prop_assert!(u.leq(&j) && v.leq(&j));
        for w in &f.elements {
            if u.leq(w) && v.leq(w) {
                prop_assert!(j.leq(w));
            }
        }
    }
}

/// Partitions of `n` as weakly decreasing part lists.
fn all_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn bracket_vectors_reject_crossings() {
    assert!(BracketVector::new(vec![1, 1, 2]).is_err());
    assert!(BracketVector::new(vec![1, 2, 1]).is_ok());
}
