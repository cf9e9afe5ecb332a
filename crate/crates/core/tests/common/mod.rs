#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use latmu_core::lattice::io::parse_lattice;
use latmu_core::{AtomOrder, CoverList, FiniteLattice};
use rand::seq::SliceRandom;
use rand::Rng;

/// Intersection closure of `generators` plus the whole ground set, or `None` once
/// it exceeds `limit` sets.
fn closure_sets(ground: usize, generators: &[u32], limit: usize) -> Option<Vec<u32>> {
    let full = (1u32 << ground) - 1;
    let mut sets: BTreeSet<u32> = generators.iter().map(|g| g & full).collect();
    sets.insert(full);
    loop {
        let v: Vec<u32> = sets.iter().copied().collect();
        let before = sets.len();
        for &a in &v {
            for &b in &v {
                sets.insert(a & b);
            }
            if sets.len() > limit {
                return None;
            }
        }
        if sets.len() == before {
            return Some(v);
        }
    }
}

/// Lattice of a closure system: the given subsets of a ground set closed under
/// intersection, plus the whole ground set, ordered by inclusion.
pub fn closure_lattice(ground: usize, generators: &[u32]) -> FiniteLattice {
    let v = closure_sets(ground, generators, usize::MAX).unwrap();
    lattice_of_sets(&v)
}

fn lattice_of_sets(v: &[u32]) -> FiniteLattice {
    let lt = |a: u32, b: u32| a != b && a & !b == 0;
    let mut covers = Vec::new();
    for (i, &a) in v.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            if lt(a, b) && !v.iter().any(|&c| lt(a, c) && lt(c, b)) {
                covers.push((i, j));
            }
        }
    }
    FiniteLattice::from_cover_relations(&CoverList::new(v.len(), covers)).expect("closure systems are lattices")
}

/// A random closure-system lattice with at most `max_size` elements and
/// `max_atoms` atoms. Sizes are spread by first drawing a target size.
pub fn random_lattice(rng: &mut impl Rng, max_size: usize, max_atoms: usize) -> FiniteLattice {
    let target = rng.gen_range(2..=max_size);
    let low = target.saturating_sub(5).max(2);
    loop {
        let ground = rng.gen_range(2..=max_atoms.clamp(2, 12));
        let count = rng.gen_range(1..=2 + target / 2);
        let gens: Vec<u32> = (0..count)
            .map(|_| {
                let density: f64 = rng.gen_range(0.1..0.9);
                (0..ground).filter(|_| rng.gen_bool(density)).fold(0, |m, i| m | 1 << i)
            })
            .collect();
        let Some(v) = closure_sets(ground, &gens, target) else {
            continue;
        };
        if v.len() < low {
            continue;
        }
        let l = lattice_of_sets(&v);
        if l.atoms().len() <= max_atoms {
            return l;
        }
    }
}

/// A random strict partial order on the atoms: the transitive closure of a random
/// subset of the relations of a random linear order.
pub fn random_atom_order(rng: &mut impl Rng, l: &FiniteLattice) -> AtomOrder {
    let k = l.atoms().len();
    let mut perm: Vec<usize> = (0..k).collect();
    perm.shuffle(rng);
    let density: f64 = rng.gen();
    let mut rels = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(density) {
                rels.push((perm[i], perm[j]));
            }
        }
    }
    AtomOrder::from_relations(l, &rels).expect("relations follow a linear arrangement")
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture(name: &str) -> FiniteLattice {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture file");
    parse_lattice(&text).expect("fixture parses")
}

/// Brute-force μ(0̂, x): the defining recursion over explicit down-sets.
pub fn mobius_oracle(l: &FiniteLattice) -> Vec<i64> {
    let n = l.size();
    let mut mu = vec![0i64; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| l.leq(y, x)).count());
    for x in order {
        mu[x] = if x == l.bottom() {
            1
        } else {
            -(0..n).filter(|&y| y != x && l.leq(y, x)).map(|y| mu[y]).sum::<i64>()
        };
    }
    mu
}
