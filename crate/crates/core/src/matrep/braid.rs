use std::fmt;

use super::matrix::Matrix;
use super::rep::{checked_pow, h_mat_limited, DEFAULT_MAX_DIM};
use super::scalar::{QExt, Rat, Scalar};
use crate::error::{Error, Result};

/// A braid word: `(i, inverted)` for `σ_i` or `σ_i^{−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BraidWord(pub Vec<(usize, bool)>);

impl BraidWord {
    /// Parses whitespace-separated `s1`, `s2!`, ...; an empty input or `1` is
    /// the trivial braid.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut pos = 0;
        for tok in text.split_whitespace() {
            let at = text[pos..].find(tok).map_or(pos, |o| pos + o);
            pos = at + tok.len();
            if tok == "1" {
                continue;
            }
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::parse(at, format!("expected s<i> or s<i>!, found '{tok}'")))?;
            let (num, inv) = match body.strip_suffix('!') {
                Some(n) => (n, true),
                None => (body, false),
            };
            let i: usize = num
                .parse()
                .map_err(|_| Error::parse(at, format!("bad braid generator '{tok}'")))?;
            if i == 0 {
                return Err(Error::parse(at, "braid generators start at s1"));
            }
            out.push((i, inv));
        }
        Ok(BraidWord(out))
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|g| g.0).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        BraidWord(self.0.iter().rev().map(|&(i, inv)| (i, !inv)).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|&(i, inv)| format!("s{i}{}", if inv { "!" } else { "" }))
            .collect();
        f.write_str(&toks.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl std::str::FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            _ => Err(Error::Invalid(format!("branch must be '+' or '-', found '{s}'"))),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

/// The coefficients of `ρ(σ) = αh + βI` and `ρ(σ^{−1}) = α^{−1}h + β^{−1}I`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidParams {
    pub p: usize,
    pub n: usize,
    pub alpha: QExt,
    pub beta: QExt,
    pub max_dim: usize,
}

impl BraidParams {
    pub fn new(p: usize, n: usize, alpha: QExt, branch: Branch) -> Result<Self> {
        if p < 2 {
            return Err(Error::Invalid("p must be at least 2".into()));
        }
        if alpha.is_zero() {
            return Err(Error::Invalid("alpha must be nonzero".into()));
        }
        let d = (p * p) as i64 - 4;
        let disc = QExt::sqrt(d);
        if alpha.d() != 0 && disc.d() != alpha.d() {
            return Err(Error::Invalid(format!("alpha {alpha} is not in Q(√{d})")));
        }
        let half = QExt::rational(Rat::new(1.into(), 2.into()));
        let minus_p = QExt::from_int(-(p as i64));
        // β = α·r̄, r̄ the other root of x² + px + 1
        let r_bar = match branch {
            Branch::Plus => minus_p.sub(&disc),
            Branch::Minus => minus_p.add(&disc),
        }
        .mul(&half);
        let beta = alpha.mul(&r_bar);
        Ok(BraidParams {
            p,
            n,
            alpha,
            beta,
            max_dim: DEFAULT_MAX_DIM,
        })
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }

    pub fn dim(&self) -> Result<usize> {
        checked_pow(self.p, self.n, self.max_dim)
    }

    fn generator(&self, i: usize, inv: bool) -> Result<Matrix<QExt>> {
        let h = h_mat_limited(self.p, self.n, i, self.max_dim)
            .map_err(|_| Error::IndexRange {
                what: "braid generator",
                index: i,
                max: self.n.saturating_sub(1),
            })?
            .map(|v| QExt::rational(v.clone()));
        let (a, b) = if inv {
            (
                self.alpha.inv().expect("alpha is nonzero"),
                self.beta.inv().expect("beta is nonzero"),
            )
        } else {
            (self.alpha.clone(), self.beta.clone())
        };
        let dim = h.rows();
        h.scale(&a).add(&Matrix::identity(dim).scale(&b))
    }

    pub fn rho(&self, w: &BraidWord) -> Result<Matrix<QExt>> {
        let dim = self.dim()?;
        if w.max_index() >= self.n {
            return Err(Error::IndexRange {
                what: "braid generator",
                index: w.max_index(),
                max: self.n.saturating_sub(1),
            });
        }
        let mut cache: Vec<[Option<Matrix<QExt>>; 2]> = vec![[None, None]; self.n];
        let mut acc = Matrix::identity(dim);
        for &(i, inv) in &w.0 {
            let slot = &mut cache[i][inv as usize];
            if slot.is_none() {
                *slot = Some(self.generator(i, inv)?);
            }
            acc = acc.mul(slot.as_ref().expect("built above"))?;
        }
        Ok(acc)
    }
}

/// `ρ(w)` in the Temperley–Lieb representation on `(F^p)^{⊗n}`.
pub fn braid_rho(p: usize, n: usize, w: &BraidWord, alpha: QExt, branch: Branch) -> Result<Matrix<QExt>> {
    BraidParams::new(p, n, alpha, branch)?.rho(w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidReport {
    pub relations: Vec<RelationCheck>,
    /// Extra identities showing the representation is not faithful.
    pub witnesses: Vec<RelationCheck>,
}

impl BraidReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().chain(&self.witnesses).all(|r| r.holds)
    }
}

impl fmt::Display for BraidReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.relations {
            writeln!(f, "{}: {}", r.name, if r.holds { "pass" } else { "FAIL" })?;
        }
        for r in &self.witnesses {
            writeln!(f, "witness {}: {}", r.name, if r.holds { "holds" } else { "fails" })?;
        }
        Ok(())
    }
}

fn word(gens: &[(usize, bool)]) -> BraidWord {
    BraidWord(gens.to_vec())
}

fn same(params: &BraidParams, lhs: &[(usize, bool)], rhs: &[(usize, bool)]) -> Result<bool> {
    Ok(params.rho(&word(lhs))? == params.rho(&word(rhs))?)
}

/// Checks far commutation, invertibility and the braid relation as exact
/// matrix identities. Each relation builds its own generators so that only a
/// handful of large matrices are alive at once.
pub fn check_braid_relations(p: usize, n: usize, alpha: QExt, branch: Branch) -> Result<BraidReport> {
    let params = BraidParams::new(p, n, alpha, branch)?;
    check_with(&params)
}

pub fn check_with(params: &BraidParams) -> Result<BraidReport> {
    let n = params.n;
    params.dim()?;
    let mut relations = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            relations.push(RelationCheck {
                name: format!("s{i} s{j} = s{j} s{i}"),
                holds: same(params, &[(i, false), (j, false)], &[(j, false), (i, false)])?,
            });
        }
    }
    for i in 1..n {
        let id = params.rho(&BraidWord::default())?;
        let a = params.rho(&word(&[(i, false), (i, true)]))? == id;
        let b = params.rho(&word(&[(i, true), (i, false)]))? == id;
        relations.push(RelationCheck {
            name: format!("s{i} s{i}! = s{i}! s{i} = 1"),
            holds: a && b,
        });
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        relations.push(RelationCheck {
            name: format!("s{i} s{j} s{i} = s{j} s{i} s{j}"),
            holds: same(
                params,
                &[(i, false), (j, false), (i, false)],
                &[(j, false), (i, false), (j, false)],
            )?,
        });
    }
    let mut witnesses = Vec::new();
    if params.p == 2 && n >= 2 {
        let dim = params.dim()?;
        let a2 = params.alpha.mul(&params.alpha);
        let sq = params.rho(&word(&[(1, false), (1, false)]))?;
        witnesses.push(RelationCheck {
            name: "s1 s1 = alpha^2 I".into(),
            holds: sq == Matrix::identity(dim).scale(&a2),
        });
        if n >= 3 {
            let w = params.rho(&word(&[(1, false), (1, false), (2, true), (2, true)]))?;
            witnesses.push(RelationCheck {
                name: "s1 s1 s2! s2! = 1".into(),
                holds: w == Matrix::identity(dim),
            });
        }
    }
    Ok(BraidReport { relations, witnesses })
}

/// Free group element over `x_1..x_n`, letters `±i`, freely reduced.
type FreeWord = Vec<i32>;

fn push_reduced(w: &mut FreeWord, x: i32) {
    if w.last() == Some(&-x) {
        w.pop();
    } else {
        w.push(x);
    }
}

fn invert(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|x| -x).collect()
}

/// Artin's action of one generator on a free group word.
fn act(gen: (usize, bool), w: &[i32]) -> FreeWord {
    let (i, inv) = (gen.0 as i32, gen.1);
    let image = |x: i32| -> FreeWord {
        match (x, inv) {
            (x, false) if x == i => vec![i, i + 1, -i],
            (x, false) if x == i + 1 => vec![i],
            (x, true) if x == i => vec![i + 1],
            (x, true) if x == i + 1 => vec![-(i + 1), i, i + 1],
            (x, _) => vec![x],
        }
    };
    let mut out = Vec::new();
    for &x in w {
        let img = if x > 0 { image(x) } else { invert(&image(-x)) };
        for y in img {
            push_reduced(&mut out, y);
        }
    }
    out
}

/// Whether a braid acts trivially on the free group; the action is
/// faithful, so this decides triviality in the braid group.
pub fn is_trivial_braid(w: &BraidWord, n: usize) -> bool {
    (1..=n as i32).all(|x| {
        let mut img = vec![x];
        // apply the rightmost letter first: (uv)·x = u·(v·x)
        for &g in w.0.iter().rev() {
            img = act(g, &img);
        }
        img == vec![x]
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSearch {
    pub max_len: usize,
    pub words_checked: usize,
    /// Nontrivial braids with `ρ(w) = I`, shortest first.
    pub kernel: Vec<BraidWord>,
}

/// Searches freely reduced braid words up to `max_len` for nontrivial
/// elements of the kernel of `ρ`. An empty result says nothing about
/// faithfulness.
pub fn search_kernel(params: &BraidParams, max_len: usize, limit: usize) -> Result<KernelSearch> {
    let dim = params.dim()?;
    let n = params.n;
    let mut gens = Vec::new();
    for i in 1..n {
        for inv in [false, true] {
            gens.push(((i, inv), params.generator(i, inv)?));
        }
    }
    let id = Matrix::identity(dim);
    let mut out = KernelSearch {
        max_len,
        words_checked: 0,
        kernel: Vec::new(),
    };
    let mut layer: Vec<(BraidWord, Matrix<QExt>)> = vec![(BraidWord::default(), id.clone())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, m) in &layer {
            for (g, gm) in &gens {
                if w.0.last() == Some(&(g.0, !g.1)) {
                    continue;
                }
                let mut w2 = w.clone();
                w2.0.push(*g);
                let m2 = m.mul(gm)?;
                out.words_checked += 1;
                if m2 == id && !is_trivial_braid(&w2, n) && out.kernel.len() < limit {
                    out.kernel.push(w2.clone());
                }
                next.push((w2, m2));
            }
        }
        if out.kernel.len() >= limit {
            break;
        }
        layer = next;
    }
    Ok(out)
}
