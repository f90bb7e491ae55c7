//! Surface terms and the extended `a`/`b`/`c` alphabet.
//!
//! Terms are flat generator sequences; multiplication is concatenation, which
//! builds in associativity and the unit laws.

use std::fmt;

use crate::error::{Error, Result};
use crate::ordinal::CircularForm;

/// The theory a term is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    L,
    K,
    J,
    Kn(usize),
    Jn(usize),
}

impl Theory {
    pub fn is_finite(self) -> bool {
        matches!(self, Theory::Kn(_) | Theory::Jn(_))
    }

    /// The strand count `n` for `Kn`/`Jn`.
    pub fn strands(self) -> Option<usize> {
        match self {
            Theory::Kn(n) | Theory::Jn(n) => Some(n),
            _ => None,
        }
    }

    /// The ω-theory a finite theory embeds into.
    pub fn embedded(self) -> Theory {
        match self {
            Theory::Kn(_) => Theory::K,
            Theory::Jn(_) => Theory::J,
            t => t,
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theory::L => f.write_str("L"),
            Theory::K => f.write_str("K"),
            Theory::J => f.write_str("J"),
            Theory::Kn(n) => write!(f, "K{n}"),
            Theory::Jn(n) => write!(f, "J{n}"),
        }
    }
}

/// An extended generator `a_k^α`, `b_k^α` or `c_k^α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtGen {
    A(usize, CircularForm),
    B(usize, CircularForm),
    C(usize, CircularForm),
}

pub type ExtWord = Vec<ExtGen>;

impl ExtGen {
    pub fn index(&self) -> usize {
        match self {
            ExtGen::A(k, _) | ExtGen::B(k, _) | ExtGen::C(k, _) => *k,
        }
    }

    pub fn form(&self) -> &CircularForm {
        match self {
            ExtGen::A(_, f) | ExtGen::B(_, f) | ExtGen::C(_, f) => f,
        }
    }
}

impl fmt::Display for ExtGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (letter, k, form) = match self {
            ExtGen::A(k, a) => ('a', k, a),
            ExtGen::B(k, a) => ('b', k, a),
            ExtGen::C(k, a) => ('C', k, a),
        };
        if form.is_zero() {
            write!(f, "{letter}{k}^e")
        } else {
            write!(f, "{letter}{k}^{form}")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    Cup(usize),
    Cap(usize),
    Circle,
    Diapsis(usize),
    Unit,
    Ext(ExtGen),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Cup(k) => write!(f, "u{k}"),
            Gen::Cap(k) => write!(f, "n{k}"),
            Gen::Circle => f.write_str("c"),
            Gen::Diapsis(i) => write!(f, "h{i}"),
            Gen::Unit => f.write_str("1"),
            Gen::Ext(g) => g.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub gens: Vec<Gen>,
    pub theory: Theory,
}

impl Term {
    /// Builds a term, validating every generator against the theory.
    pub fn new(gens: Vec<Gen>, theory: Theory) -> Result<Self> {
        for g in &gens {
            check_gen(g, theory)?;
        }
        Ok(Term { gens, theory })
    }

    pub fn unit(theory: Theory) -> Self {
        Term {
            gens: Vec::new(),
            theory,
        }
    }

    pub fn parse(text: &str, theory: Theory) -> Result<Self> {
        parse_term(text, theory)
    }

    pub fn concat(&self, other: &Term) -> Term {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Term {
            gens,
            theory: self.theory,
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            g.fmt(f)?;
        }
        Ok(())
    }
}

fn check_gen(g: &Gen, theory: Theory) -> Result<()> {
    let reject = || {
        Err(Error::Theory {
            gen: g.to_string(),
            theory: theory.to_string(),
        })
    };
    let positive = |what: &'static str, k: usize| {
        if k == 0 {
            Err(Error::IndexRange {
                what,
                index: 0,
                max: usize::MAX,
            })
        } else {
            Ok(())
        }
    };
    match (theory, g) {
        (Theory::Kn(n) | Theory::Jn(n), Gen::Diapsis(i)) => {
            if *i == 0 || *i + 1 > n {
                Err(Error::IndexRange {
                    what: "diapsis",
                    index: *i,
                    max: n.saturating_sub(1),
                })
            } else {
                Ok(())
            }
        }
        (Theory::Kn(_) | Theory::Jn(_), Gen::Circle | Gen::Unit) => Ok(()),
        (Theory::Kn(_) | Theory::Jn(_), _) => reject(),
        (_, Gen::Diapsis(_)) => reject(),
        (Theory::L, Gen::Circle) => reject(),
        (Theory::K | Theory::J, Gen::Ext(_)) => reject(),
        (_, Gen::Cup(k)) => positive("cup", *k),
        (_, Gen::Cap(k)) => positive("cap", *k),
        (_, Gen::Ext(e)) => positive("extended generator", e.index()),
        _ => Ok(()),
    }
}

/// Parses the whitespace-separated term grammar. Diapsides in an ω-theory
/// are replaced by their cap-cup expansion.
pub fn parse_term(text: &str, theory: Theory) -> Result<Term> {
    let mut gens = Vec::new();
    let mut saw_token = false;
    for (pos, tok) in tokens(text) {
        saw_token = true;
        let g = parse_token(tok, pos)?;
        match (theory.is_finite(), g) {
            (false, Gen::Diapsis(i)) => {
                if i == 0 {
                    return Err(Error::parse(pos, "indices start at 1"));
                }
                gens.push(Gen::Cap(i));
                gens.push(Gen::Cup(i));
            }
            (_, g) => gens.push(g),
        }
    }
    if !saw_token {
        return Err(Error::parse(0, "empty term; write 1 for the unit"));
    }
    // a lone "1" is the empty word
    gens.retain(|g| *g != Gen::Unit);
    Term::new(gens, theory)
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let base = text.as_ptr() as usize;
    text.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - base, t))
}

fn parse_index(s: &str, pos: usize) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(pos, format!("expected an index, found {s:?}")));
    }
    let k: usize = s
        .parse()
        .map_err(|_| Error::parse(pos, format!("index {s:?} too large")))?;
    if k == 0 {
        return Err(Error::parse(pos, "indices start at 1"));
    }
    Ok(k)
}

fn parse_token(tok: &str, pos: usize) -> Result<Gen> {
    match tok {
        "1" => return Ok(Gen::Unit),
        "c" => return Ok(Gen::Circle),
        _ => {}
    }
    let (head, rest) = tok.split_at(1);
    match head {
        "u" => Ok(Gen::Cup(parse_index(rest, pos + 1)?)),
        "n" => Ok(Gen::Cap(parse_index(rest, pos + 1)?)),
        "h" => Ok(Gen::Diapsis(parse_index(rest, pos + 1)?)),
        "a" | "b" | "C" => {
            let Some((idx, word)) = rest.split_once('^') else {
                return Err(Error::parse(pos, format!("expected '^' in {tok:?}")));
            };
            let k = parse_index(idx, pos + 1)?;
            let form_pos = pos + 2 + idx.len();
            let form = if word == "e" {
                CircularForm::zero()
            } else {
                CircularForm::parse_pword(word).map_err(|e| match e {
                    Error::Parse { pos: p, msg } => Error::Parse {
                        pos: form_pos + p,
                        msg,
                    },
                    e => e,
                })?
            };
            Ok(Gen::Ext(match head {
                "a" => ExtGen::A(k, form),
                "b" => ExtGen::B(k, form),
                _ => ExtGen::C(k, form),
            }))
        }
        _ => Err(Error::parse(pos, format!("unknown token {tok:?}"))),
    }
}

/// Replaces every diapsis `h_i` by `∩_i ∪_i`, moving `Kn`/`Jn` terms into
/// `K`/`J`.
pub fn embed_diapsides(t: &Term) -> Term {
    let mut gens = Vec::with_capacity(t.gens.len());
    for g in &t.gens {
        match g {
            Gen::Diapsis(i) => {
                gens.push(Gen::Cap(*i));
                gens.push(Gen::Cup(*i));
            }
            g => gens.push(g.clone()),
        }
    }
    Term {
        gens,
        theory: t.theory.embedded(),
    }
}

/// Reads an `L` term in the extended alphabet: `∪_k = a_k^0`, `∩_k = b_k^0`.
pub fn to_extword(t: &Term) -> Result<ExtWord> {
    let mut out = Vec::with_capacity(t.gens.len());
    for g in &t.gens {
        match g {
            Gen::Cup(k) => out.push(ExtGen::A(*k, CircularForm::zero())),
            Gen::Cap(k) => out.push(ExtGen::B(*k, CircularForm::zero())),
            Gen::Unit => {}
            Gen::Ext(e) => out.push(e.clone()),
            Gen::Circle | Gen::Diapsis(_) => {
                return Err(Error::Theory {
                    gen: g.to_string(),
                    theory: "L (extended alphabet)".into(),
                })
            }
        }
    }
    Ok(out)
}

/// Expands an extended generator into cups and caps:
/// `c_k^α = ∪_k c_{k+1}^{α_1} ∩_k … ∪_k c_{k+1}^{α_n} ∩_k`,
/// `a_k^α = ∪_k c_{k+1}^α`, `b_k^α = c_{k+1}^α ∩_k`.
pub fn from_extgen(g: &ExtGen) -> Term {
    let mut gens = Vec::new();
    expand_into(g, &mut gens);
    Term {
        gens,
        theory: Theory::L,
    }
}

fn expand_into(g: &ExtGen, out: &mut Vec<Gen>) {
    match g {
        ExtGen::A(k, alpha) => {
            out.push(Gen::Cup(*k));
            expand_circles(*k + 1, alpha, out);
        }
        ExtGen::B(k, alpha) => {
            expand_circles(*k + 1, alpha, out);
            out.push(Gen::Cap(*k));
        }
        ExtGen::C(k, alpha) => expand_circles(*k, alpha, out),
    }
}

fn expand_circles(k: usize, alpha: &CircularForm, out: &mut Vec<Gen>) {
    for e in alpha.exponents() {
        out.push(Gen::Cup(k));
        expand_circles(k + 1, e, out);
        out.push(Gen::Cap(k));
    }
}

/// Expands every extended generator of a term into cups and caps.
pub fn expand_ext(t: &Term) -> Term {
    let mut gens = Vec::with_capacity(t.gens.len());
    for g in &t.gens {
        match g {
            Gen::Ext(e) => expand_into(e, &mut gens),
            g => gens.push(g.clone()),
        }
    }
    Term {
        gens,
        theory: t.theory,
    }
}

/// Expands an extended word into an `L` term over cups and caps.
pub fn expand_extword(w: &[ExtGen]) -> Term {
    let mut gens = Vec::new();
    for g in w {
        expand_into(g, &mut gens);
    }
    Term {
        gens,
        theory: Theory::L,
    }
}
