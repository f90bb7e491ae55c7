//! `K_n` and `J_n` via the block formulation.
//!
//! A block `h_{[i,j]}` (`i ≥ j`) stands for `h_i h_{i-1} … h_j`. A block word
//! is rewritten at its leftmost redex until none remains; the result is the
//! Jones normal form `c^l h_{[b_1,a_1]} … h_{[b_k,a_k]}` with both index
//! sequences strictly increasing.
//!
//! Directed rules, for adjacent blocks `h_{[i,j]} h_{[k,l]}` with `i ≥ k` or
//! `j ≥ l`:
//!
//! | condition                | rule     | result                              |
//! |--------------------------|----------|-------------------------------------|
//! | `j ≥ k + 2`              | (h I)    | `h_{[k,l]} h_{[i,j]}`               |
//! | `|k − j| = 1`            | (h II)   | `h_{[i,l]}`                         |
//! | `k = j`                  | (hc II)  | `c h_{[i,l]}`                       |
//! | `k ≥ j+2`, `i≥k`, `j≥l`  | (h III.1)| `h_{[k-2,l]} h_{[i,j+2]}`           |
//! | `k ≥ j+2`, `i<k`, `j≥l`  | (h III.2)| `h_{[i,l]} h_{[k,j+2]}`             |
//! | `k ≥ j+2`, `i≥k`, `j<l`  | (h III.3)| `h_{[k-2,j]} h_{[i,l]}`             |
//!
//! plus `h_{[i,j]} c → c h_{[i,j]}` (hc I) and removal of units (1).

use std::fmt;

use crate::error::{Error, Result};
use crate::term::{Gen, Term, Theory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockItem {
    /// `h_{[i,j]}` with `i ≥ j ≥ 1`.
    Block(usize, usize),
    Circle,
    Unit,
}

impl fmt::Display for BlockItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockItem::Block(i, j) => write!(f, "h[{i},{j}]"),
            BlockItem::Circle => f.write_str("c"),
            BlockItem::Unit => f.write_str("1"),
        }
    }
}

pub type BlockWord = Vec<BlockItem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockRule {
    HI,
    HII,
    HcI,
    HcII,
    HIII1,
    HIII2,
    HIII3,
    Unit,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JonesNf {
    pub circles: u64,
    /// `(b, a)` pairs for the blocks `h_{[b,a]}`.
    pub blocks: Vec<(usize, usize)>,
}

impl JonesNf {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn is_well_formed(&self) -> bool {
        self.blocks.iter().all(|&(b, a)| b >= a && a >= 1)
            && self.blocks.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1)
    }

    pub fn without_circles(&self) -> JonesNf {
        JonesNf {
            circles: 0,
            blocks: self.blocks.clone(),
        }
    }

    /// The diapsis word `c^l h_{b_1} … h_{a_1} …`.
    pub fn to_gens(&self) -> Vec<Gen> {
        let mut gens: Vec<Gen> = (0..self.circles).map(|_| Gen::Circle).collect();
        for &(b, a) in &self.blocks {
            gens.extend((a..=b).rev().map(Gen::Diapsis));
        }
        gens
    }

    pub fn to_term(&self, theory: Theory) -> Term {
        Term {
            gens: self.to_gens(),
            theory,
        }
    }

    pub fn to_block_word(&self) -> BlockWord {
        let mut w: BlockWord = (0..self.circles).map(|_| BlockItem::Circle).collect();
        w.extend(self.blocks.iter().map(|&(b, a)| BlockItem::Block(b, a)));
        w
    }

    pub fn max_index(&self) -> usize {
        self.blocks.iter().map(|b| b.0).max().unwrap_or(0)
    }
}

impl fmt::Display for JonesNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.to_gens();
        if gens.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            g.fmt(f)?;
        }
        Ok(())
    }
}

fn block_redex(i: usize, j: usize, k: usize, l: usize) -> bool {
    i >= k || j >= l
}

/// Rewrites the pair starting at `pos` if it is a redex.
fn rewrite_at(word: &mut BlockWord, pos: usize) -> Option<BlockRule> {
    use BlockItem::*;
    let (x, y) = (word[pos], word[pos + 1]);
    match (x, y) {
        (Unit, _) => {
            word.remove(pos);
            Some(BlockRule::Unit)
        }
        (_, Unit) => {
            word.remove(pos + 1);
            Some(BlockRule::Unit)
        }
        (Block(..), Circle) => {
            word.swap(pos, pos + 1);
            Some(BlockRule::HcI)
        }
        (Block(i, j), Block(k, l)) if block_redex(i, j, k, l) => {
            let (rule, repl): (BlockRule, Vec<BlockItem>) = if j >= k + 2 {
                (BlockRule::HI, vec![Block(k, l), Block(i, j)])
            } else if k + 1 == j || j + 1 == k {
                (BlockRule::HII, vec![Block(i, l)])
            } else if k == j {
                (BlockRule::HcII, vec![Circle, Block(i, l)])
            } else if i >= k && j >= l {
                (BlockRule::HIII1, vec![Block(k - 2, l), Block(i, j + 2)])
            } else if j >= l {
                (BlockRule::HIII2, vec![Block(i, l), Block(k, j + 2)])
            } else {
                (BlockRule::HIII3, vec![Block(k - 2, j), Block(i, l)])
            };
            word.splice(pos..pos + 2, repl);
            Some(rule)
        }
        _ => None,
    }
}

/// Applies one rewrite at the leftmost redex, if any.
pub fn step(word: &mut BlockWord) -> Option<BlockRule> {
    if word.len() < 2 {
        return None;
    }
    (0..word.len() - 1).find_map(|pos| rewrite_at(word, pos))
}

/// Reduces a block word to normal form, calling `on_step` after each rewrite
/// with the rule used and the new word.
pub fn reduce_with(mut word: BlockWord, mut on_step: impl FnMut(BlockRule, &BlockWord)) -> JonesNf {
    while let Some(rule) = step(&mut word) {
        on_step(rule, &word);
    }
    let mut nf = JonesNf::unit();
    for item in word {
        match item {
            BlockItem::Circle => nf.circles += 1,
            BlockItem::Block(i, j) => nf.blocks.push((i, j)),
            BlockItem::Unit => {}
        }
    }
    nf
}

/// The complexity measure `(n_1, n_2)`: `n_1` sums the block weights
/// `i − j + 2`; `n_2` sums, per block, the blocks to its right it is in
/// redex relation with, per circle the blocks to its left, plus the number
/// of units.
pub fn measure_kn(word: &[BlockItem]) -> (usize, usize) {
    let mut n1 = 0;
    let mut n2 = 0;
    let mut blocks_seen = 0;
    for (p, item) in word.iter().enumerate() {
        match *item {
            BlockItem::Block(i, j) => {
                n1 += i - j + 2;
                n2 += word[p + 1..]
                    .iter()
                    .filter(|it| matches!(**it, BlockItem::Block(k, l) if block_redex(i, j, k, l)))
                    .count();
                blocks_seen += 1;
            }
            BlockItem::Circle => n2 += blocks_seen,
            BlockItem::Unit => n2 += 1,
        }
    }
    (n1, n2)
}

/// Reads a `Kn`/`Jn` term as a block word of singular blocks.
pub fn to_block_word(t: &Term) -> Result<BlockWord> {
    let n = t.theory.strands().ok_or_else(|| Error::Theory {
        gen: t.to_string(),
        theory: t.theory.to_string(),
    })?;
    t.gens
        .iter()
        .map(|g| match g {
            Gen::Diapsis(i) if *i >= 1 && *i < n => Ok(BlockItem::Block(*i, *i)),
            Gen::Diapsis(i) => Err(Error::IndexRange {
                what: "diapsis",
                index: *i,
                max: n.saturating_sub(1),
            }),
            Gen::Circle => Ok(BlockItem::Circle),
            Gen::Unit => Ok(BlockItem::Unit),
            g => Err(Error::Theory {
                gen: g.to_string(),
                theory: t.theory.to_string(),
            }),
        })
        .collect()
}

pub fn normalize_kn(t: &Term) -> Result<JonesNf> {
    Ok(reduce_with(to_block_word(t)?, |_, _| {}))
}

fn check_same_n(t: &Term, u: &Term, n: usize) -> Result<()> {
    for x in [t, u] {
        match x.theory.strands() {
            Some(m) if m == n => {}
            _ => {
                return Err(Error::Invalid(format!(
                    "term {x} is not a term of K{n}/J{n}"
                )))
            }
        }
    }
    Ok(())
}

pub fn eq_kn(t: &Term, u: &Term, n: usize) -> Result<bool> {
    check_same_n(t, u, n)?;
    Ok(normalize_kn(t)? == normalize_kn(u)?)
}

pub fn eq_jn(t: &Term, u: &Term, n: usize) -> Result<bool> {
    check_same_n(t, u, n)?;
    Ok(normalize_kn(t)?.without_circles() == normalize_kn(u)?.without_circles())
}

/// All circle-free Jones normal forms of `K_n`, in lexicographic order of
/// their block lists.
pub fn jones_forms(n: usize) -> Vec<JonesNf> {
    fn extend(
        n: usize,
        last: Option<(usize, usize)>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<JonesNf>,
    ) {
        out.push(JonesNf {
            circles: 0,
            blocks: acc.clone(),
        });
        let (b0, a0) = last.map_or((0, 0), |(b, a)| (b, a));
        for a in a0 + 1..n {
            for b in (b0 + 1).max(a)..n {
                acc.push((b, a));
                extend(n, Some((b, a)), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}
