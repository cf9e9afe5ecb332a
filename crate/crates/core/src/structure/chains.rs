use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::mobius::{AtomOrder, MAX_ATOMS};

/// `0̂ = x_0 ⋖ x_1 ⋖ … ⋖ x_n = 1̂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaximalChain {
    elements: Vec<usize>,
}

impl MaximalChain {
    pub fn new(lattice: &FiniteLattice, elements: Vec<usize>) -> Result<Self> {
        for &e in &elements {
            lattice.check_element(e)?;
        }
        if elements.first() != Some(&lattice.bottom()) || elements.last() != Some(&lattice.top()) {
            return Err(Error::InvalidChain("must start at the bottom and end at the top".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| !lattice.covers(w[0], w[1])) {
            return Err(Error::InvalidChain(format!(
                "{} is not covered by {}",
                lattice.label(w[0]),
                lattice.label(w[1])
            )));
        }
        Ok(Self { elements })
    }

    /// Elements separated by `<`, each given by label or index.
    pub fn parse(lattice: &FiniteLattice, text: &str) -> Result<Self> {
        let elements = text
            .split('<')
            .map(|t| {
                let t = t.trim();
                lattice
                    .find_element(t)
                    .ok_or_else(|| Error::InvalidChain(format!("unknown element `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Number of cover steps `n`.
    pub fn length(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn labels(&self, lattice: &FiniteLattice) -> Vec<String> {
        self.elements.iter().map(|&e| lattice.label(e)).collect()
    }
}

/// A pair `y <= z` with `y ∨ (x ∧ z) != (y ∨ x) ∧ z`.
pub fn left_modularity_witness(lattice: &FiniteLattice, x: usize) -> Option<(usize, usize)> {
    (0..lattice.size()).find_map(|z| {
        let xz = lattice.meet(x, z);
        lattice
            .down_set(z)
            .find(|&y| lattice.join(y, xz) != lattice.meet(lattice.join(y, x), z))
            .map(|y| (y, z))
    })
}

pub fn is_left_modular_element(lattice: &FiniteLattice, x: usize) -> bool {
    left_modularity_witness(lattice, x).is_none()
}

/// Depth-first walk over maximal chains whose elements all pass `allowed`,
/// taking upper covers in increasing index order. `allowed` is called at most
/// once per element.
pub(crate) fn walk_chains(
    lattice: &FiniteLattice,
    allowed: impl FnMut(usize) -> bool,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    struct Walk<'a, A> {
        lattice: &'a FiniteLattice,
        allowed: A,
        cache: Vec<Option<bool>>,
        dead: Vec<bool>,
        path: Vec<usize>,
    }

    impl<A: FnMut(usize) -> bool> Walk<'_, A> {
        fn ok(&mut self, x: usize) -> bool {
            *self.cache[x].get_or_insert_with(|| (self.allowed)(x))
        }

        /// Returns whether any chain through the current path reached the top.
        fn go(&mut self, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> (bool, ControlFlow<()>) {
            let x = *self.path.last().unwrap();
            if x == self.lattice.top() {
                return (true, visit(&self.path));
            }
            let mut reached = false;
            let lattice = self.lattice;
            for &c in lattice.upper_covers(x) {
                if self.dead[c] || !self.ok(c) {
                    continue;
                }
                self.path.push(c);
                let (r, flow) = self.go(visit);
                self.path.pop();
                reached |= r;
                if flow.is_break() {
                    return (true, flow);
                }
            }
            if !reached {
                self.dead[x] = true;
            }
            (reached, ControlFlow::Continue(()))
        }
    }

    let mut w = Walk {
        lattice,
        allowed,
        cache: vec![None; lattice.size()],
        dead: vec![false; lattice.size()],
        path: vec![lattice.bottom()],
    };
    if w.ok(lattice.bottom()) {
        let _ = w.go(&mut visit);
    }
}

/// The first maximal chain (by the walk order) all of whose elements pass `allowed`.
pub(crate) fn first_chain(lattice: &FiniteLattice, allowed: impl FnMut(usize) -> bool) -> Option<MaximalChain> {
    let mut found = None;
    walk_chains(lattice, allowed, |path| {
        found = Some(MaximalChain { elements: path.to_vec() });
        ControlFlow::Break(())
    });
    found
}

/// A maximal chain of left-modular elements, searched depth-first from `0̂`
/// preferring lower indices.
pub fn find_left_modular_chain(lattice: &FiniteLattice) -> Option<MaximalChain> {
    first_chain(lattice, |x| is_left_modular_element(lattice, x))
}

/// Length of the longest chain from `0̂` to each element.
pub fn longest_chain_lengths(lattice: &FiniteLattice) -> Vec<usize> {
    let mut longest = vec![0usize; lattice.size()];
    for &x in lattice.linear_extension() {
        for &y in lattice.lower_covers(x) {
            longest[x] = longest[x].max(longest[y] + 1);
        }
    }
    longest
}

/// Atoms split by the first chain element above them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPartition {
    atom_ids: Vec<usize>,
    level_of: Vec<usize>,
    levels: Vec<Vec<usize>>,
}

impl LevelPartition {
    /// `levels()[i]` holds the atom positions of `A_{i+1}`.
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// 0-based level of the atom at `position`.
    pub fn level_of(&self, position: usize) -> usize {
        self.level_of[position]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn atom_ids(&self) -> &[usize] {
        &self.atom_ids
    }
}

pub fn levels_from_chain(lattice: &FiniteLattice, chain: &MaximalChain) -> LevelPartition {
    let xs = chain.elements();
    let mut levels = vec![Vec::new(); chain.length()];
    let level_of: Vec<usize> = lattice
        .atoms()
        .iter()
        .enumerate()
        .map(|(p, &a)| {
            let i = (1..xs.len())
                .find(|&i| lattice.leq(a, xs[i]))
                .expect("every atom is below the top");
            levels[i - 1].push(p);
            i - 1
        })
        .collect();
    LevelPartition {
        atom_ids: lattice.atoms().to_vec(),
        level_of,
        levels,
    }
}

/// `a ⊲ b` iff `a` lies in an earlier level than `b`.
pub fn induced_atom_order(levels: &LevelPartition) -> Result<AtomOrder> {
    let k = levels.atom_ids.len();
    if k > MAX_ATOMS {
        return Err(Error::TooManyAtoms(k, MAX_ATOMS));
    }
    let below = (0..k)
        .map(|b| {
            (0..k)
                .filter(|&a| levels.level_of[a] < levels.level_of[b])
                .fold(0u64, |m, a| m | 1 << a)
        })
        .collect();
    Ok(AtomOrder::from_rows_unchecked(levels.atom_ids.clone(), below))
}

/// Number of levels holding an atom below each element.
pub fn generalized_rank(lattice: &FiniteLattice, chain: &MaximalChain) -> Vec<usize> {
    let levels = levels_from_chain(lattice, chain);
    (0..lattice.size())
        .map(|x| {
            levels
                .levels()
                .iter()
                .filter(|lv| lv.iter().any(|&p| lattice.leq(lattice.atoms()[p], x)))
                .count()
        })
        .collect()
}

/// An atom below the join of atoms taken one each from strictly later levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelViolation {
    pub atom: usize,
    pub later: Vec<usize>,
}

pub fn level_condition_witness(lattice: &FiniteLattice, chain: &MaximalChain) -> Option<LevelViolation> {
    let levels = levels_from_chain(lattice, chain);
    let atoms = lattice.atoms();

    // States are (next level, join so far); a state seen once need not be revisited.
    fn search(
        lattice: &FiniteLattice,
        levels: &LevelPartition,
        a: usize,
        j: usize,
        join: usize,
        seen: &mut HashSet<(usize, usize)>,
        picked: &mut Vec<usize>,
    ) -> bool {
        if j == levels.len() || !seen.insert((j, join)) {
            return false;
        }
        for &p in &levels.levels()[j] {
            let b = lattice.atoms()[p];
            let next = lattice.join(join, b);
            picked.push(b);
            if lattice.leq(a, next) || search(lattice, levels, a, j + 1, next, seen, picked) {
                return true;
            }
            picked.pop();
        }
        search(lattice, levels, a, j + 1, join, seen, picked)
    }

    for (p, &a) in atoms.iter().enumerate() {
        let mut seen = HashSet::new();
        let mut picked = Vec::new();
        let start = levels.level_of(p) + 1;
        if search(lattice, &levels, a, start, lattice.bottom(), &mut seen, &mut picked) {
            return Some(LevelViolation { atom: a, later: picked });
        }
    }
    None
}

pub fn level_condition_holds(lattice: &FiniteLattice, chain: &MaximalChain) -> bool {
    level_condition_witness(lattice, chain).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, chain, shuffle_poset, tamari_lattice, BracketVector};

    #[test]
    fn chain_validation() {
        let b2 = boolean_lattice(2).unwrap();
        assert!(MaximalChain::parse(&b2, "{} < {1} < {1,2}").is_ok());
        assert!(matches!(MaximalChain::parse(&b2, "{} < {1,2}"), Err(Error::InvalidChain(_))));
        assert!(matches!(MaximalChain::parse(&b2, "{1} < {1,2}"), Err(Error::InvalidChain(_))));
        assert!(matches!(MaximalChain::parse(&b2, "{} < {7}"), Err(Error::InvalidChain(_))));
    }

    #[test]
    fn distributive_elements_are_left_modular() {
        let b3 = boolean_lattice(3).unwrap();
        assert!((0..b3.size()).all(|x| is_left_modular_element(&b3, x)));
    }

    #[test]
    fn tamari_chain() {
        let t = tamari_lattice(3).unwrap();
        let x = t.index_of(&BracketVector::new(vec![1, 2, 2]).unwrap()).unwrap();
        assert!(is_left_modular_element(&t.lattice, x));
        let c = find_left_modular_chain(&t.lattice).unwrap();
        assert_eq!(c.labels(&t.lattice), ["(1,1,1)", "(1,2,1)", "(1,2,2)", "(1,2,3)"]);
        let lv = levels_from_chain(&t.lattice, &c);
        assert_eq!(lv.sizes(), [1, 0, 1]);
    }

    #[test]
    fn chain_lattice_is_its_own_chain() {
        let c = chain(3).unwrap();
        let m = find_left_modular_chain(&c).unwrap();
        assert_eq!(m.elements(), &[0, 1, 2, 3]);
        assert_eq!(generalized_rank(&c, &m), [0, 1, 1, 1]);
    }

    #[test]
    fn shuffle_levels() {
        let f = shuffle_poset(2, 1).unwrap();
        let l = &f.lattice;
        let c = MaximalChain::parse(l, "de < e < ∅ < D").unwrap();
        assert_eq!(levels_from_chain(l, &c).sizes(), [1, 1, 3]);
        assert!(level_condition_holds(l, &c));
        let o = induced_atom_order(&levels_from_chain(l, &c)).unwrap();
        assert_eq!(o.relation_count(), 1 + 3 + 3);
    }

    #[test]
    fn level_condition_fails_in_w22() {
        let f = shuffle_poset(2, 2).unwrap();
        let l = &f.lattice;
        let c = MaximalChain::parse(l, "de < e < ∅ < D < DE").unwrap();
        let v = level_condition_witness(l, &c).expect("a violation");
        assert!(l.leq(v.atom, l.join_set(v.later.iter().copied())));
    }

    #[test]
    fn levels_of_boolean_chain() {
        let b2 = boolean_lattice(2).unwrap();
        let c = find_left_modular_chain(&b2).unwrap();
        assert_eq!(levels_from_chain(&b2, &c).sizes(), [1, 1]);
    }
}
