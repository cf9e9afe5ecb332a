//! Tamari lattices via left bracket vectors and parenthesizations.

use std::fmt;

use super::{check_range, Family};
use crate::error::{Error, Result};

pub const MAX_TAMARI_N: usize = 9;

/// `(v_1, …, v_n)` with `1 <= v_i <= i` and the ranges `[v_i, i]` pairwise nested or disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BracketVector(Vec<usize>);

fn overlap(v: &[usize], i: usize, j: usize) -> bool {
    // ranges [v_i, i] and [v_j, j] with i < j cross when v_i < v_j <= i
    v[i - 1] < v[j - 1] && v[j - 1] <= i
}

impl BracketVector {
    pub fn new(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        let bad = (1..=n).any(|i| v[i - 1] < 1 || v[i - 1] > i)
            || (1..=n).any(|j| (1..j).any(|i| overlap(&v, i, j)));
        if bad {
            return Err(Error::InvalidBracketVector(v));
        }
        Ok(Self(v))
    }

    /// Reads `(1,2,3)` or `1,2,3`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let v = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<usize>, _>>()
            .map_err(|_| Error::InvalidBracketVector(Vec::new()))?;
        Self::new(v)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise comparison.
    pub fn leq(&self, other: &BracketVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for BracketVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Every bracket vector of length `n`, in lexicographic order.
pub(crate) fn all_bracket_vectors(n: usize) -> Vec<BracketVector> {
    fn rec(v: &mut Vec<usize>, n: usize, out: &mut Vec<BracketVector>) {
        let j = v.len() + 1;
        if j > n {
            out.push(BracketVector(v.clone()));
            return;
        }
        for x in 1..=j {
            v.push(x);
            if (1..j).all(|i| !overlap(v, i, j)) {
                rec(v, n, out);
            }
            v.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// T_n on bracket vectors of length `n` under the componentwise order.
pub fn tamari_lattice(n: usize) -> Result<Family<BracketVector>> {
    check_range("tamari n", n, 1, MAX_TAMARI_N)?;
    Family::build(all_bracket_vectors(n), BracketVector::leq)
}

fn same_len(v: &BracketVector, w: &BracketVector) -> Result<()> {
    if v.len() != w.len() {
        return Err(Error::NotSameN(v.len(), w.len()));
    }
    Ok(())
}

/// Componentwise maximum.
pub fn tamari_join(v: &BracketVector, w: &BracketVector) -> Result<BracketVector> {
    same_len(v, w)?;
    BracketVector::new(v.0.iter().zip(&w.0).map(|(a, b)| *a.max(b)).collect())
}

/// With `m_i = min(v_i, w_i)`: `l_i = min(m_i, l_{m_i}, …, l_{i−1})`.
pub fn tamari_meet(v: &BracketVector, w: &BracketVector) -> Result<BracketVector> {
    same_len(v, w)?;
    let mut l: Vec<usize> = Vec::with_capacity(v.len());
    for i in 1..=v.len() {
        let m = v.0[i - 1].min(w.0[i - 1]);
        let low = l[m - 1..i - 1].iter().copied().min().unwrap_or(m).min(m);
        l.push(low);
    }
    BracketVector::new(l)
}

/// A full binary tree on leaves `x_1 … x_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Parenthesization {
    Leaf(usize),
    Pair(Box<Parenthesization>, Box<Parenthesization>),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Leaf(usize),
}

impl Parenthesization {
    /// Reads strings such as `((x1x2)x3)`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParenthesization(text.to_string());
        let tokens = tokenize(text).ok_or_else(bad)?;
        let mut pos = 0;
        let tree = parse_tree(&tokens, &mut pos).ok_or_else(bad)?;
        if pos != tokens.len() {
            return Err(bad());
        }
        let mut leaves = Vec::new();
        tree.collect_leaves(&mut leaves);
        if leaves.iter().enumerate().any(|(i, &x)| x != i + 1) {
            return Err(bad());
        }
        Ok(tree)
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Self::Leaf(i) => out.push(*i),
            Self::Pair(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            Self::Leaf(_) => 0,
            Self::Pair(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn tokens(&self, out: &mut Vec<Token>) {
        match self {
            Self::Leaf(i) => out.push(Token::Leaf(*i)),
            Self::Pair(a, b) => {
                out.push(Token::Open);
                a.tokens(out);
                b.tokens(out);
                out.push(Token::Close);
            }
        }
    }
}

fn tokenize(text: &str) -> Option<Vec<Token>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'(' => out.push(Token::Open),
            b')' => out.push(Token::Close),
            b'x' => {
                let start = i + 1;
                let mut end = start;
                while end < b.len() && b[end].is_ascii_digit() {
                    end += 1;
                }
                out.push(Token::Leaf(text[start..end].parse().ok()?));
                i = end;
                continue;
            }
            c if c.is_ascii_whitespace() => {}
            _ => return None,
        }
        i += 1;
    }
    Some(out)
}

fn parse_tree(tokens: &[Token], pos: &mut usize) -> Option<Parenthesization> {
    match *tokens.get(*pos)? {
        Token::Leaf(i) => {
            *pos += 1;
            Some(Parenthesization::Leaf(i))
        }
        Token::Open => {
            *pos += 1;
            let a = parse_tree(tokens, pos)?;
            let b = parse_tree(tokens, pos)?;
            (tokens.get(*pos) == Some(&Token::Close)).then_some(())?;
            *pos += 1;
            Some(Parenthesization::Pair(Box::new(a), Box::new(b)))
        }
        Token::Close => None,
    }
}

impl fmt::Display for Parenthesization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf(i) => write!(f, "x{i}"),
            Self::Pair(a, b) => write!(f, "({a}{b})"),
        }
    }
}

/// For each `i <= n`: walk left from `x_i`, counting leaves (including `x_i`) and
/// left parentheses; when the counts agree, `v_i` is the last leaf passed.
pub fn bracket_vector_of(p: &Parenthesization) -> Result<BracketVector> {
    let mut tokens = Vec::new();
    p.tokens(&mut tokens);
    let n = p.size();
    let mut v = Vec::with_capacity(n);
    for i in 1..=n {
        let start = tokens
            .iter()
            .position(|&t| t == Token::Leaf(i))
            .ok_or_else(|| Error::InvalidParenthesization(p.to_string()))?;
        let (mut leaves, mut opens, mut last) = (1usize, 0usize, i);
        let mut found = None;
        for t in tokens[..start].iter().rev() {
            match *t {
                Token::Leaf(k) => {
                    leaves += 1;
                    last = k;
                }
                Token::Open => {
                    opens += 1;
                    if opens == leaves {
                        found = Some(last);
                        break;
                    }
                }
                Token::Close => {}
            }
        }
        v.push(found.ok_or_else(|| Error::InvalidParenthesization(p.to_string()))?);
    }
    BracketVector::new(v)
}

/// Inverse of [`bracket_vector_of`]: the leaves `[a, b]` split after the largest
/// `k < b` with `v_k = a`.
pub fn parenthesization_of(v: &BracketVector) -> Result<Parenthesization> {
    fn build(v: &[usize], a: usize, b: usize) -> Option<Parenthesization> {
        if a == b {
            return Some(Parenthesization::Leaf(a));
        }
        let k = (a..b).rev().find(|&k| v[k - 1] == a)?;
        Some(Parenthesization::Pair(
            Box::new(build(v, a, k)?),
            Box::new(build(v, k + 1, b)?),
        ))
    }
    let bad = || Error::InvalidBracketVector(v.0.clone());
    let tree = build(&v.0, 1, v.len() + 1).ok_or_else(bad)?;
    if bracket_vector_of(&tree)? != *v {
        return Err(bad());
    }
    Ok(tree)
}

/// Every tree obtained by one rotation `((AB)C) → (A(BC))`.
pub fn rotation_covers(p: &Parenthesization) -> Vec<Parenthesization> {
    use Parenthesization::*;
    let mut out = Vec::new();
    if let Pair(l, c) = p {
        if let Pair(a, b) = l.as_ref() {
            out.push(Pair(a.clone(), Box::new(Pair(b.clone(), c.clone()))));
        }
        for l2 in rotation_covers(l) {
            out.push(Pair(Box::new(l2), c.clone()));
        }
        for c2 in rotation_covers(c) {
            out.push(Pair(l.clone(), Box::new(c2)));
        }
    }
    out
}

/// Edges `{i + 1, v_i}` on vertices `1..=n+1`, each as `(smaller, larger)`, sorted.
pub fn tamari_tree_of(v: &BracketVector) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = v
        .0
        .iter()
        .enumerate()
        .map(|(i, &x)| (x.min(i + 2), x.max(i + 2)))
        .collect();
    edges.sort_unstable();
    edges
}
