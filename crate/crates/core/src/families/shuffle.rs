//! Shuffles of a subword of `x = d e f …` with a subword of `y = D E F …`.

use std::fmt;

use super::{check_range, Family};
use crate::error::{Error, Result};
use crate::mobius::AtomOrder;

const X_LETTERS: &[u8] = b"defghij";
const Y_LETTERS: &[u8] = b"DEFGHIJ";
pub const MAX_SHUFFLE_LETTERS: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X(u8),
    Y(u8),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShuffleWord {
    letters: Vec<Letter>,
}

impl ShuffleWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Reads a word such as `dDEe`; `∅` or the empty string is the empty word.
    pub fn parse(text: &str, m: usize, n: usize) -> Result<Self> {
        let bad = |why: &str| Error::InvalidShuffleWord(format!("{text}: {why}"));
        let mut letters = Vec::new();
        if text != "∅" {
            for ch in text.bytes() {
                let l = if let Some(i) = X_LETTERS[..m].iter().position(|&c| c == ch) {
                    Letter::X(i as u8)
                } else if let Some(j) = Y_LETTERS[..n].iter().position(|&c| c == ch) {
                    Letter::Y(j as u8)
                } else {
                    return Err(bad("unknown letter"));
                };
                letters.push(l);
            }
        }
        let w = Self { letters };
        let xs: Vec<u8> = w.x_letters().collect();
        let ys: Vec<u8> = w.y_letters().collect();
        if xs.windows(2).any(|p| p[0] >= p[1]) || ys.windows(2).any(|p| p[0] >= p[1]) {
            return Err(bad("letters out of order or repeated"));
        }
        Ok(w)
    }

    fn x_letters(&self) -> impl Iterator<Item = u8> + '_ {
        self.letters.iter().filter_map(|l| match l {
            Letter::X(i) => Some(*i),
            _ => None,
        })
    }

    fn y_letters(&self) -> impl Iterator<Item = u8> + '_ {
        self.letters.iter().filter_map(|l| match l {
            Letter::Y(j) => Some(*j),
            _ => None,
        })
    }

    fn x_mask(&self) -> u32 {
        self.x_letters().fold(0, |m, i| m | 1 << i)
    }

    fn y_mask(&self) -> u32 {
        self.y_letters().fold(0, |m, j| m | 1 << j)
    }

    fn restricted(&self, xs: u32, ys: u32) -> Vec<Letter> {
        self.letters
            .iter()
            .copied()
            .filter(|l| match *l {
                Letter::X(i) => xs >> i & 1 == 1,
                Letter::Y(j) => ys >> j & 1 == 1,
            })
            .collect()
    }

    fn position(&self, l: Letter) -> Option<usize> {
        self.letters.iter().position(|&c| c == l)
    }

    /// `(m − |w_x|) + |w_y|`
    pub fn rank(&self, m: usize) -> usize {
        m - self.x_letters().count() + self.y_letters().count()
    }

    /// `self <= other`: `other` keeps a subset of the x-letters, has a superset of the
    /// y-letters, and the two words agree on the letters they share.
    pub fn leq(&self, other: &ShuffleWord) -> bool {
        let (vx, vy, wx, wy) = (self.x_mask(), self.y_mask(), other.x_mask(), other.y_mask());
        wx & !vx == 0 && vy & !wy == 0 && self.restricted(wx, vy) == other.restricted(wx, vy)
    }
}

impl fmt::Display for ShuffleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("∅");
        }
        for l in &self.letters {
            let c = match *l {
                Letter::X(i) => X_LETTERS[i as usize],
                Letter::Y(j) => Y_LETTERS[j as usize],
            };
            write!(f, "{}", c as char)?;
        }
        Ok(())
    }
}

/// Every interleaving of `a` and `b`.
fn interleavings(a: &[Letter], b: &[Letter]) -> Vec<Vec<Letter>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in interleavings(&a[1..], b) {
        rest.insert(0, a[0]);
        out.push(rest);
    }
    for mut rest in interleavings(a, &b[1..]) {
        rest.insert(0, b[0]);
        out.push(rest);
    }
    out
}

fn subword(mask: u32, len: usize, make: fn(u8) -> Letter) -> Vec<Letter> {
    (0..len as u8).filter(|i| mask >> i & 1 == 1).map(make).collect()
}

/// W_{m,n}, bottom `x`, top `y`.
pub fn shuffle_poset(m: usize, n: usize) -> Result<Family<ShuffleWord>> {
    check_range("shuffle letters m+n", m + n, 0, MAX_SHUFFLE_LETTERS)?;
    let mut elements = Vec::new();
    for xs in 0..1u32 << m {
        for ys in 0..1u32 << n {
            let a = subword(xs, m, Letter::X);
            let b = subword(ys, n, Letter::Y);
            elements.extend(interleavings(&a, &b).into_iter().map(|letters| ShuffleWord { letters }));
        }
    }
    Family::build(elements, ShuffleWord::leq)
}

/// x-letters common to `u` and `v` that occur before some `y_i` in one word and
/// after some `y_j`, `i <= j`, in the other.
pub fn crossed_letters(u: &ShuffleWord, v: &ShuffleWord) -> Vec<Letter> {
    let common = u.x_mask() & v.x_mask();
    let crossed_one_way = |a: &ShuffleWord, b: &ShuffleWord, x: Letter| {
        let (pa, pb) = (a.position(x).unwrap(), b.position(x).unwrap());
        a.y_letters()
            .filter(|&i| a.position(Letter::Y(i)).unwrap() > pa)
            .any(|i| b.y_letters().any(|j| i <= j && b.position(Letter::Y(j)).unwrap() < pb))
    };
    (0..32u8)
        .filter(|i| common >> i & 1 == 1)
        .map(Letter::X)
        .filter(|&x| crossed_one_way(u, v, x) || crossed_one_way(v, u, x))
        .collect()
}

/// The least word above `u` and `v`: its x-letters are the uncrossed common ones,
/// its y-letters the union.
pub fn shuffle_join(u: &ShuffleWord, v: &ShuffleWord) -> Result<ShuffleWord> {
    let crossed = crossed_letters(u, v)
        .into_iter()
        .fold(0u32, |m, l| if let Letter::X(i) = l { m | 1 << i } else { m });
    let xs = u.x_mask() & v.x_mask() & !crossed;
    let ys = u.y_mask() | v.y_mask();
    let a = subword(xs, 32, Letter::X);
    let b = subword(ys, 32, Letter::Y);
    let mut found = interleavings(&a, &b)
        .into_iter()
        .map(|letters| ShuffleWord { letters })
        .filter(|w| u.leq(w) && v.leq(w));
    match (found.next(), found.next()) {
        (Some(w), None) => Ok(w),
        _ => Err(Error::InvalidShuffleWord(format!("no unique join of {u} and {v}"))),
    }
}

/// Every deletion atom below every insertion atom, nothing else.
pub fn shuffle_atom_order(family: &Family<ShuffleWord>) -> Result<AtomOrder> {
    let is_insertion: Vec<bool> = family
        .atom_elements()
        .into_iter()
        .map(|w| w.y_letters().next().is_some())
        .collect();
    AtomOrder::from_predicate(&family.lattice, |a, b| !is_insertion[a] && is_insertion[b])
}
