//! Friezes at the `K`/`J` level: non-crossing perfect matchings between a
//! top and a bottom row of points, together with a count of closed loops.
//!
//! Matchings are stored trimmed: the tail pair `(B_bottom, T_top)` is never
//! present. Any frieze is implicitly continued to the right by transversals
//! `(B_{bottom+i}, T_{top+i})`.

mod generate;
mod invariants;
mod render;

use std::fmt;

use crate::error::{Error, Result};
use crate::term::{Gen, Term};

pub use generate::{enumerate_jn, enumerate_jn_via_jones, matching_to_term};
pub use invariants::{
    balance, collapse_modulus, covering_count, crown_pair, cups_caps, slope_sequences, span,
};
pub use render::{render, render_ascii, render_svg, RenderFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Bot(usize),
    Top(usize),
}

impl End {
    pub fn index(self) -> usize {
        match self {
            End::Bot(i) | End::Top(i) => i,
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, End::Top(_))
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            End::Bot(i) => write!(f, "B{i}"),
            End::Top(i) => write!(f, "T{i}"),
        }
    }
}

/// A perfect non-crossing matching. `top[i]` is the partner of `T_{i+1}`,
/// `bottom[j]` the partner of `B_{j+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    top: Vec<End>,
    bottom: Vec<End>,
}

impl Matching {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a matching from its pairs, checking that it is perfect and
    /// non-crossing, and trims it.
    pub fn from_pairs(top: usize, bottom: usize, pairs: &[(End, End)]) -> Result<Self> {
        let mut t: Vec<Option<End>> = vec![None; top];
        let mut b: Vec<Option<End>> = vec![None; bottom];
        for &(x, y) in pairs {
            if x == y {
                return Err(Error::Frieze(format!("point {x} paired with itself")));
            }
            for (p, q) in [(x, y), (y, x)] {
                let slot = match p {
                    End::Top(i) if i >= 1 && i <= top => &mut t[i - 1],
                    End::Bot(i) if i >= 1 && i <= bottom => &mut b[i - 1],
                    _ => return Err(Error::Frieze(format!("point {p} out of range"))),
                };
                if slot.is_some() {
                    return Err(Error::Frieze(format!("point {p} paired twice")));
                }
                *slot = Some(q);
            }
        }
        let unpaired = |v: &[Option<End>], mk: fn(usize) -> End| {
            v.iter().position(Option::is_none).map(|i| mk(i + 1))
        };
        if let Some(p) = unpaired(&t, End::Top).or_else(|| unpaired(&b, End::Bot)) {
            return Err(Error::Frieze(format!("point {p} is unpaired")));
        }
        let m = Matching {
            top: t.into_iter().flatten().collect(),
            bottom: b.into_iter().flatten().collect(),
        };
        if !m.is_noncrossing() {
            return Err(Error::Frieze("threads cross".into()));
        }
        Ok(m.trimmed())
    }

    pub(crate) fn from_partners(top: Vec<End>, bottom: Vec<End>) -> Self {
        Matching { top, bottom }
    }

    pub fn top(&self) -> usize {
        self.top.len()
    }

    pub fn bottom(&self) -> usize {
        self.bottom.len()
    }

    pub fn partner(&self, e: End) -> End {
        match e {
            End::Top(i) if i > self.top.len() => End::Bot(i - self.top.len() + self.bottom.len()),
            End::Bot(j) if j > self.bottom.len() => End::Top(j - self.bottom.len() + self.top.len()),
            End::Top(i) => self.top[i - 1],
            End::Bot(j) => self.bottom[j - 1],
        }
    }

    /// Pairs with the smaller end first, sorted.
    pub fn pairs(&self) -> Vec<(End, End)> {
        let ends = (1..=self.top.len())
            .map(End::Top)
            .chain((1..=self.bottom.len()).map(End::Bot));
        let mut out: Vec<(End, End)> = ends
            .filter_map(|e| {
                let p = self.partner(e);
                (e < p).then_some((e, p))
            })
            .collect();
        out.sort();
        out
    }

    pub fn cups(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.top.iter().enumerate().filter_map(|(i, p)| match *p {
            End::Top(j) if j > i + 1 => Some((i + 1, j)),
            _ => None,
        })
    }

    pub fn caps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bottom.iter().enumerate().filter_map(|(i, p)| match *p {
            End::Bot(j) if j > i + 1 => Some((i + 1, j)),
            _ => None,
        })
    }

    /// Transversal threads as `(bottom, top)` index pairs.
    pub fn transversals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bottom.iter().enumerate().filter_map(|(i, p)| match *p {
            End::Top(j) => Some((i + 1, j)),
            _ => None,
        })
    }

    pub fn is_square(&self) -> bool {
        self.top.len() == self.bottom.len()
    }

    /// Checks nesting on the boundary cycle `B_1, …, B_m, T_n, …, T_1`.
    pub fn is_noncrossing(&self) -> bool {
        let m = self.bottom.len();
        let n = self.top.len();
        let pos = |e: End| match e {
            End::Bot(j) => j - 1,
            End::Top(i) => m + n - i,
        };
        let mut stack = Vec::new();
        for p in 0..m + n {
            let e = if p < m { End::Bot(p + 1) } else { End::Top(m + n - p) };
            let q = pos(self.partner(e));
            if q > p {
                stack.push(q);
            } else if stack.pop() != Some(p) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Adds `k` tail transversals.
    pub fn padded(&self, k: usize) -> Matching {
        let (n, m) = (self.top.len(), self.bottom.len());
        let mut out = self.clone();
        for i in 1..=k {
            out.top.push(End::Bot(m + i));
            out.bottom.push(End::Top(n + i));
        }
        out
    }

    pub fn trimmed(mut self) -> Matching {
        while let (Some(&End::Bot(j)), Some(&End::Top(i))) = (self.top.last(), self.bottom.last()) {
            if i != self.top.len() || j != self.bottom.len() {
                break;
            }
            self.top.pop();
            self.bottom.pop();
        }
        self
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, y)) in self.pairs().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FriezeK {
    pub matching: Matching,
    pub loops: u64,
}

impl FriezeK {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn circle() -> Self {
        FriezeK {
            matching: Matching::empty(),
            loops: 1,
        }
    }
}

impl fmt::Display for FriezeK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} loops={}", self.matching, self.loops)
    }
}

fn verticals(k: usize) -> (Vec<End>, Vec<End>) {
    ((1..=k).map(End::Bot).collect(), (1..=k).map(End::Top).collect())
}

/// The frieze of a single generator.
pub fn gen_frieze(g: &Gen) -> Result<FriezeK> {
    let matching = match *g {
        Gen::Unit => Matching::empty(),
        Gen::Circle => return Ok(FriezeK::circle()),
        Gen::Cup(k) | Gen::Cap(k) | Gen::Diapsis(k) if k == 0 => {
            return Err(Error::IndexRange {
                what: "generator",
                index: 0,
                max: usize::MAX,
            })
        }
        Gen::Cup(k) => {
            let (mut top, bottom) = verticals(k - 1);
            top.extend([End::Top(k + 1), End::Top(k)]);
            Matching::from_partners(top, bottom)
        }
        Gen::Cap(k) => {
            let (top, mut bottom) = verticals(k - 1);
            bottom.extend([End::Bot(k + 1), End::Bot(k)]);
            Matching::from_partners(top, bottom)
        }
        Gen::Diapsis(k) => {
            let (mut top, mut bottom) = verticals(k - 1);
            top.extend([End::Top(k + 1), End::Top(k)]);
            bottom.extend([End::Bot(k + 1), End::Bot(k)]);
            Matching::from_partners(top, bottom)
        }
        Gen::Ext(ref e) => {
            return Err(Error::Frieze(format!(
                "extended generator {e} has no K-level frieze"
            )))
        }
    };
    Ok(FriezeK { matching, loops: 0 })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Node {
    Up(usize),
    Down(usize),
    Mid(usize),
}

/// Stacks `upper` on top of `lower`.
pub fn compose(upper: &FriezeK, lower: &FriezeK) -> FriezeK {
    let w = upper.matching.bottom().max(lower.matching.top());
    let up = upper.matching.padded(w - upper.matching.bottom());
    let low = lower.matching.padded(w - lower.matching.top());

    // one step inside `up` (for Up/Mid) or `low` (for Down/Mid)
    let via_up = |e: End| match e {
        End::Top(i) => Node::Up(i),
        End::Bot(j) => Node::Mid(j),
    };
    let via_low = |e: End| match e {
        End::Top(i) => Node::Mid(i),
        End::Bot(j) => Node::Down(j),
    };
    let mut seen = vec![false; w + 1];
    let mut follow = |start: Node| -> End {
        let mut node = start;
        let mut in_up = matches!(start, Node::Up(_));
        loop {
            node = match node {
                Node::Up(i) => via_up(up.partner(End::Top(i))),
                Node::Down(j) => via_low(low.partner(End::Bot(j))),
                Node::Mid(k) if in_up => via_up(up.partner(End::Bot(k))),
                Node::Mid(k) => via_low(low.partner(End::Top(k))),
            };
            match node {
                Node::Up(i) if node != start => return End::Top(i),
                Node::Down(j) if node != start => return End::Bot(j),
                Node::Mid(k) => {
                    seen[k] = true;
                    in_up = !in_up;
                }
                _ => unreachable!("boundary points have one thread"),
            }
        }
    };
    let top: Vec<End> = (1..=up.top()).map(|i| follow(Node::Up(i))).collect();
    let bottom: Vec<End> = (1..=low.bottom()).map(|j| follow(Node::Down(j))).collect();

    let mut loops = upper.loops + lower.loops;
    for k in 1..=w {
        if seen[k] {
            continue;
        }
        loops += 1;
        let mut node = k;
        let mut in_up = true;
        loop {
            seen[node] = true;
            let next = if in_up {
                up.partner(End::Bot(node))
            } else {
                low.partner(End::Top(node))
            };
            node = next.index();
            in_up = !in_up;
            if node == k {
                break;
            }
        }
    }
    FriezeK {
        matching: Matching::from_partners(top, bottom).trimmed(),
        loops,
    }
}

/// The frieze of a term; the leftmost generator is the lowest layer.
pub fn eval_term(t: &Term) -> Result<FriezeK> {
    eval_gens(&t.gens)
}

pub fn eval_gens(gens: &[Gen]) -> Result<FriezeK> {
    let mut acc = FriezeK::unit();
    for g in gens {
        acc = compose(&gen_frieze(g)?, &acc);
    }
    Ok(acc)
}

pub fn eq_frieze(a: &FriezeK, b: &FriezeK, ignore_loops: bool) -> bool {
    a.matching == b.matching && (ignore_loops || a.loops == b.loops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{parse_term, Theory};

    fn ev(s: &str, th: Theory) -> FriezeK {
        eval_term(&parse_term(s, th).unwrap()).unwrap()
    }

    fn m(top: usize, bottom: usize, pairs: &[(End, End)]) -> Matching {
        Matching::from_pairs(top, bottom, pairs).unwrap()
    }

    use End::{Bot as B, Top as T};

    #[test]
    fn generator_friezes() {
        let cup = gen_frieze(&Gen::Cup(1)).unwrap();
        assert_eq!(cup.matching, m(2, 0, &[(T(1), T(2))]));
        assert_eq!((cup.matching.top(), cup.matching.bottom()), (2, 0));
        assert_eq!(gen_frieze(&Gen::Circle).unwrap(), FriezeK::circle());
        let h2 = gen_frieze(&Gen::Diapsis(2)).unwrap();
        assert_eq!(h2.matching, m(3, 3, &[(T(2), T(3)), (B(2), B(3)), (B(1), T(1))]));
        assert_eq!(h2.matching.to_string(), "{(B1,T1),(B2,B3),(T2,T3)}");
    }

    #[test]
    fn compose_examples() {
        let cap1 = gen_frieze(&Gen::Cap(1)).unwrap();
        let cup1 = gen_frieze(&Gen::Cup(1)).unwrap();
        assert_eq!(compose(&cap1, &cup1), FriezeK::circle());
        let h2 = gen_frieze(&Gen::Diapsis(2)).unwrap();
        assert_eq!(compose(&h2, &FriezeK::unit()), h2);
        assert_eq!(compose(&FriezeK::unit(), &h2), h2);
        let h1 = gen_frieze(&Gen::Diapsis(1)).unwrap();
        assert_eq!(
            compose(&h2, &h1).matching,
            m(3, 3, &[(T(2), T(3)), (B(1), B(2)), (B(3), T(1))])
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(ev("1", Theory::K), FriezeK::unit());
        let f = ev("n1 u1 n1 u1", Theory::K);
        assert_eq!(f.matching, m(2, 2, &[(T(1), T(2)), (B(1), B(2))]));
        assert_eq!(f.loops, 1);
        assert_eq!(ev("u1 n2", Theory::K), FriezeK::unit());
        assert!(eval_term(&parse_term("C1^()", Theory::L).unwrap()).is_err());
    }

    #[test]
    fn eq_frieze_examples() {
        let a = ev("u1 n1", Theory::K);
        assert!(eq_frieze(&a, &ev("u2 n2", Theory::K), false));
        assert!(!eq_frieze(&a, &FriezeK::unit(), false));
        assert!(eq_frieze(&a, &FriezeK::unit(), true));
    }

    #[test]
    fn rejects_bad_matchings() {
        assert!(Matching::from_pairs(2, 2, &[(T(1), B(2)), (T(2), B(1))]).is_err());
        assert!(Matching::from_pairs(2, 0, &[(T(1), T(1))]).is_err());
        assert!(Matching::from_pairs(3, 1, &[(T(1), T(2))]).is_err());
        assert!(Matching::from_pairs(4, 0, &[(T(1), T(3)), (T(2), T(4))]).is_err());
        // tail pairs are trimmed
        let id = Matching::from_pairs(2, 2, &[(T(1), B(1)), (T(2), B(2))]).unwrap();
        assert_eq!(id, Matching::empty());
    }

    #[test]
    fn partner_beyond_support_follows_tails() {
        let cup = gen_frieze(&Gen::Cup(1)).unwrap().matching;
        assert_eq!(cup.partner(End::Top(3)), End::Bot(1));
        assert_eq!(cup.partner(End::Bot(2)), End::Top(4));
    }
}
