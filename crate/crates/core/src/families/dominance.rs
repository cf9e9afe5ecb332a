//! Integer partitions under dominance, with the closed form for μ on upper intervals.

use std::fmt;

use super::{check_range, Family};
use crate::error::{Error, Result};
use crate::mobius::AtomOrder;

pub const MAX_DOMINANCE_N: usize = 12;

/// A sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

fn parse_parts(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|t| t.trim().parse::<u32>().ok().filter(|&p| p > 0))
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| Error::InvalidPartition(format!("`{text}` is not a list of positive parts")))
}

fn write_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// `|λ|_k` for `k = 0..=len`.
fn prefix_sums(parts: &[u32]) -> Vec<u32> {
    std::iter::once(0)
        .chain(parts.iter().scan(0, |s, &p| {
            *s += p;
            Some(*s)
        }))
        .collect()
}

fn prefix_at(sums: &[u32], k: usize) -> u32 {
    sums[k.min(sums.len() - 1)]
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has no parts or a zero part")));
        }
        Ok(Self { parts })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_parts(text)?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_parts(text)?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `self <= other` in dominance: every prefix sum of `other` is at least ours.
    pub fn dominated_by(&self, other: &IntegerPartition) -> bool {
        let (a, b) = (prefix_sums(&self.parts), prefix_sums(&other.parts));
        let len = a.len().max(b.len());
        (0..len).all(|k| prefix_at(&a, k) <= prefix_at(&b, k))
    }

    /// `β_k` with `β_0 = ∞` and `β_k = 0` past the end; `k` is 1-based.
    fn part(&self, k: usize) -> u32 {
        match k {
            0 => u32::MAX,
            k if k <= self.parts.len() => self.parts[k - 1],
            _ => 0,
        }
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

fn from_prefix_sums(sums: &[u32]) -> Vec<u32> {
    let mut parts: Vec<u32> = sums.windows(2).map(|w| w[1] - w[0]).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// `|λ ∨ ν|_k = max(|λ|_k, |ν|_k)`.
pub fn composition_join(a: &Composition, b: &Composition) -> Result<Composition> {
    if a.n() != b.n() {
        return Err(Error::NotSameN(a.n() as usize, b.n() as usize));
    }
    let (pa, pb) = (prefix_sums(&a.parts), prefix_sums(&b.parts));
    let len = pa.len().max(pb.len());
    let sums: Vec<u32> = (0..len).map(|k| prefix_at(&pa, k).max(prefix_at(&pb, k))).collect();
    Ok(Composition {
        parts: from_prefix_sums(&sums),
    })
}

/// The least partition dominating `c`. Prefix sums are raised to the smallest
/// integer concave majorant: whenever a part exceeds its predecessor, the prefix
/// sum between them is lifted to the least value any concave majorant must take.
pub fn partition_reflection(c: &Composition) -> IntegerPartition {
    let mut s = prefix_sums(&c.parts);
    let mut changed = true;
    while changed {
        changed = false;
        for k in 1..s.len() - 1 {
            let need = (s[k - 1] + s[k + 1]).div_ceil(2);
            if s[k] < need {
                s[k] = need;
                changed = true;
            }
        }
    }
    IntegerPartition {
        parts: from_prefix_sums(&s),
    }
}

pub fn partition_join(a: &IntegerPartition, b: &IntegerPartition) -> Result<IntegerPartition> {
    Ok(partition_reflection(&composition_join(
        &a.as_composition(),
        &b.as_composition(),
    )?))
}

/// All partitions of `n`, largest first part first.
pub(crate) fn partitions_of(n: u32) -> Vec<IntegerPartition> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if left == 0 {
            out.push(IntegerPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// P_n under dominance, labelled by comma-separated parts.
pub fn dominance_lattice(n: usize) -> Result<Family<IntegerPartition>> {
    check_range("dominance lattice n", n, 1, MAX_DOMINANCE_N)?;
    Family::build(partitions_of(n as u32), IntegerPartition::dominated_by)
}

/// The interval `[β, λ]` of P_n as a lattice in its own right.
pub fn dominance_interval(
    beta: &IntegerPartition,
    lambda: &IntegerPartition,
) -> Result<Family<IntegerPartition>> {
    check_pair(beta, lambda)?;
    let elements = partitions_of(beta.n())
        .into_iter()
        .filter(|p| beta.dominated_by(p) && p.dominated_by(lambda))
        .collect();
    Family::build(elements, IntegerPartition::dominated_by)
}

fn check_pair(beta: &IntegerPartition, lambda: &IntegerPartition) -> Result<()> {
    if beta.n() != lambda.n() {
        return Err(Error::NotSameN(beta.n() as usize, lambda.n() as usize));
    }
    if !beta.dominated_by(lambda) {
        return Err(Error::NotComparable(0, 0));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomKind {
    /// Move one square from row `i + 1` up to row `i`; neither row is in a wall.
    Adjacent,
    /// Move one square from the bottom row of a wall to its top row.
    Wall,
}

/// An atom of `[β, 1̂]`: a square moved from row `from` up to row `to` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceAtomInfo {
    pub kind: AtomKind,
    pub from: usize,
    pub to: usize,
    /// `{k : |α|_k != |β|_k}` as an inclusive range.
    pub critical: (usize, usize),
    pub special: bool,
    pub partition: IntegerPartition,
}

impl DominanceAtomInfo {
    pub fn critical_contains(&self, k: usize) -> bool {
        self.critical.0 <= k && k <= self.critical.1
    }
}

fn moved(beta: &IntegerPartition, from: usize, to: usize) -> IntegerPartition {
    let mut parts = beta.parts.clone();
    parts[to - 1] += 1;
    parts[from - 1] -= 1;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    IntegerPartition { parts }
}

/// Atoms of `[β, 1̂]` in order of their critical intervals.
pub fn dominance_atoms(beta: &IntegerPartition) -> Vec<DominanceAtomInfo> {
    let r = beta.parts.len();
    let b = |k: usize| beta.part(k);
    let mut out = Vec::new();
    let mut i = 1;
    while i <= r {
        let mut j = i;
        while j < r && b(j + 1) == b(i) {
            j += 1;
        }
        if j > i {
            out.push(DominanceAtomInfo {
                kind: AtomKind::Wall,
                from: j,
                to: i,
                critical: (i, j - 1),
                special: false,
                partition: moved(beta, j, i),
            });
        }
        i = j + 1;
    }
    for i in 1..r {
        if b(i - 1) > b(i) && b(i) > b(i + 1) && b(i + 1) > b(i + 2) {
            out.push(DominanceAtomInfo {
                kind: AtomKind::Adjacent,
                from: i + 1,
                to: i,
                critical: (i, i),
                special: false,
                partition: moved(beta, i + 1, i),
            });
        }
    }
    out.sort_by_key(|a| a.critical);
    out
}

/// The atoms of `[β, λ]` with special flags, their special runs, and the data of
/// the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalAnalysis {
    /// Atoms `<= λ`, in critical-interval order.
    pub atoms: Vec<DominanceAtomInfo>,
    /// Whether the atoms join to `λ`.
    pub atoms_join_to_top: bool,
    /// Maximal runs of consecutive special atoms, as indices into `atoms`.
    pub runs: Vec<Vec<usize>>,
    /// Number of runs with length congruent to 0, 1, 2 mod 3.
    pub run_counts: [usize; 3],
    /// `σ_{3i+2}` members of the runs.
    pub s2: Vec<usize>,
    /// `σ_{3i+1} ⊲ σ_{3i}` and `σ_{3i+1} ⊲ σ_{3i+2}` as index pairs.
    pub relations: Vec<(usize, usize)>,
}

impl IntervalAnalysis {
    /// The closed form for `μ(β, λ)`.
    pub fn mobius(&self) -> i64 {
        if !self.atoms_join_to_top || self.run_counts[1] >= 1 {
            return 0;
        }
        let nonspecial = self.atoms.iter().filter(|a| !a.special).count();
        if (nonspecial + self.run_counts[2]) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `A ∖ S_2` when the atoms join to `λ` and no run has length 1 mod 3.
    pub fn predicted_base(&self) -> Option<Vec<usize>> {
        (self.atoms_join_to_top && self.run_counts[1] == 0)
            .then(|| (0..self.atoms.len()).filter(|i| !self.s2.contains(i)).collect())
    }
}

pub fn interval_analysis(beta: &IntegerPartition, lambda: &IntegerPartition) -> Result<IntervalAnalysis> {
    check_pair(beta, lambda)?;
    let mut atoms: Vec<DominanceAtomInfo> = dominance_atoms(beta)
        .into_iter()
        .filter(|a| a.partition.dominated_by(lambda))
        .collect();
    let mut join = beta.clone();
    for a in &atoms {
        join = partition_join(&join, &a.partition)?;
    }
    let atoms_join_to_top = &join == lambda;
    let has_adjacent_at = |atoms: &[DominanceAtomInfo], k: usize| {
        atoms.iter().any(|a| a.kind == AtomKind::Adjacent && a.to == k)
    };
    let special: Vec<bool> = atoms
        .iter()
        .map(|a| {
            let k = a.to;
            a.kind == AtomKind::Adjacent
                && beta.part(k) == beta.part(k + 1) + 1
                && has_adjacent_at(&atoms, k + 1)
                && k >= 2
                && has_adjacent_at(&atoms, k - 1)
        })
        .collect();
    for (a, s) in atoms.iter_mut().zip(&special) {
        a.special = *s;
    }
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for (i, &s) in special.iter().enumerate() {
        if !s {
            continue;
        }
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == i => run.push(i),
            _ => runs.push(vec![i]),
        }
    }
    let mut run_counts = [0usize; 3];
    let mut s2 = Vec::new();
    let mut relations = Vec::new();
    for run in &runs {
        let q = run.len();
        run_counts[q % 3] += 1;
        // σ_t for t in 0..=q+1; σ_0 and σ_{q+1} are the neighbours of the run
        let sigma = |t: usize| run[0] + t - 1;
        for t in 1..=q {
            if t % 3 == 2 {
                s2.push(sigma(t));
            }
            if t % 3 == 1 {
                relations.push((sigma(t), sigma(t - 1)));
                relations.push((sigma(t), sigma(t + 1)));
            }
        }
    }
    Ok(IntervalAnalysis {
        atoms,
        atoms_join_to_top,
        runs,
        run_counts,
        s2,
        relations,
    })
}

/// `μ(β, λ)` from the closed form.
pub fn dominance_mobius(beta: &IntegerPartition, lambda: &IntegerPartition) -> Result<i64> {
    Ok(interval_analysis(beta, lambda)?.mobius())
}

/// The interval `[β, λ]` together with the run order on its atoms, and the analysis
/// whose atom `i` sits at position `positions[i]` of the interval's atom list.
pub fn dominance_atom_order(
    beta: &IntegerPartition,
    lambda: &IntegerPartition,
) -> Result<(Family<IntegerPartition>, AtomOrder, IntervalAnalysis, Vec<usize>)> {
    let family = dominance_interval(beta, lambda)?;
    let analysis = interval_analysis(beta, lambda)?;
    let atoms = family.lattice.atoms();
    let positions: Vec<usize> = analysis
        .atoms
        .iter()
        .map(|a| {
            let e = family.index_of(&a.partition).expect("atom lies in the interval");
            atoms.binary_search(&e).expect("cover of the bottom is an atom")
        })
        .collect();
    let rels: Vec<(usize, usize)> = analysis
        .relations
        .iter()
        .map(|&(a, b)| (positions[a], positions[b]))
        .collect();
    let order = AtomOrder::from_relations(&family.lattice, &rels)?;
    Ok((family, order, analysis, positions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::{mobius_crosscut, mobius_recursive};

    fn p(s: &str) -> IntegerPartition {
        IntegerPartition::parse(s).unwrap()
    }

    /// Least upper bound by scanning every partition of n.
    fn brute_join(a: &IntegerPartition, b: &IntegerPartition) -> IntegerPartition {
        let ups: Vec<IntegerPartition> = partitions_of(a.n())
            .into_iter()
            .filter(|x| a.dominated_by(x) && b.dominated_by(x))
            .collect();
        ups.iter().find(|x| ups.iter().all(|y| x.dominated_by(y))).unwrap().clone()
    }

    #[test]
    fn reflection_examples() {
        let r = |s: &str| partition_reflection(&Composition::parse(s).unwrap()).to_string();
        assert_eq!(r("1,3"), "2,2");
        assert_eq!(r("1,1,3"), "2,2,1");
        assert_eq!(r("3,2,1"), "3,2,1");
        assert_eq!(r("1,1,1,5"), "2,2,2,2");
    }

    #[test]
    fn reflection_is_least_dominating_partition() {
        for n in 1..=7u32 {
            let comps = compositions_of(n);
            let parts = partitions_of(n);
            for c in &comps {
                let r = partition_reflection(c);
                let cs = prefix_sums(&c.parts);
                let above = |x: &IntegerPartition| {
                    let xs = prefix_sums(&x.parts);
                    (0..cs.len()).all(|k| prefix_at(&xs, k) >= cs[k])
                };
                assert!(above(&r));
                assert!(parts.iter().filter(|x| above(x)).all(|x| r.dominated_by(x)));
            }
        }
    }

    fn compositions_of(n: u32) -> Vec<Composition> {
        (0..1u32 << (n - 1))
            .map(|cuts| {
                let mut parts = vec![1u32];
                for i in 0..n - 1 {
                    if cuts >> i & 1 == 1 {
                        parts.push(1);
                    } else {
                        *parts.last_mut().unwrap() += 1;
                    }
                }
                Composition { parts }
            })
            .collect()
    }

    #[test]
    fn joins_match_brute_force() {
        for n in 1..=8u32 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    assert_eq!(partition_join(a, b).unwrap(), brute_join(a, b));
                }
            }
        }
        assert!(matches!(
            composition_join(&Composition::parse("1,2").unwrap(), &Composition::parse("4").unwrap()),
            Err(Error::NotSameN(3, 4))
        ));
    }

    #[test]
    fn atoms_are_covers() {
        for n in 1..=8 {
            let f = dominance_lattice(n).unwrap();
            for (i, beta) in f.elements.iter().enumerate() {
                let mut got: Vec<usize> = dominance_atoms(beta)
                    .iter()
                    .map(|a| f.index_of(&a.partition).unwrap())
                    .collect();
                got.sort_unstable();
                assert_eq!(got, f.lattice.upper_covers(i), "{beta}");
            }
        }
        let a = dominance_atoms(&p("1,1,1,1"));
        assert_eq!(a.len(), 1);
        assert_eq!((a[0].from, a[0].to, a[0].critical), (4, 1, (1, 3)));
        assert_eq!(a[0].partition, p("2,1,1"));
    }

    #[test]
    fn mobius_in_p6_is_local() {
        let f = dominance_lattice(6).unwrap();
        let mu = mobius_crosscut(&f.lattice).unwrap();
        let mut nonzero: Vec<String> = (0..f.lattice.size())
            .filter(|&x| mu.get(x) != 0)
            .map(|x| f.lattice.label(x))
            .collect();
        nonzero.sort();
        assert_eq!(nonzero, ["1,1,1,1,1,1", "2,1,1,1,1"]);
    }

    #[test]
    fn closed_form_matches_recursion_in_p6() {
        let f = dominance_lattice(6).unwrap();
        let l = &f.lattice;
        for b in 0..l.size() {
            for lam in l.up_set(b).collect::<Vec<_>>() {
                let (sub, map) = l.interval(b, lam).unwrap();
                let top = map.iter().position(|&x| x == lam).unwrap();
                assert_eq!(
                    dominance_mobius(&f.elements[b], &f.elements[lam]).unwrap(),
                    mobius_recursive(&sub).get(top),
                    "{} {}",
                    f.elements[b],
                    f.elements[lam]
                );
            }
        }
        assert_eq!(dominance_mobius(&p("3,1,1,1"), &p("3,1,1,1")).unwrap(), 1);
        assert!(matches!(dominance_mobius(&p("4,2"), &p("3,1,1,1")), Err(Error::NotComparable(..))));
    }
}
