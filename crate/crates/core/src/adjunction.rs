//! Arrow terms of the free self-adjunctions `L_c`, `K_c`, `J_c`, and their
//! translation to and from the monoid words.

use std::fmt;

use crate::error::{Error, Result};
use crate::normalize::{eq_j, eq_k, eq_l};
use crate::term::{embed_diapsides, expand_ext, Gen, Term, Theory};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ArrowTerm {
    Id(usize),
    /// `φ_n : n+2 → n`
    Phi(usize),
    /// `γ_n : n → n+2`
    Gamma(usize),
    /// `F f : m+1 → n+1`
    F(Box<ArrowTerm>),
    /// `g ∘ f`, `f` applied first.
    Comp(Box<ArrowTerm>, Box<ArrowTerm>),
}

impl ArrowTerm {
    pub fn f(t: ArrowTerm) -> Self {
        ArrowTerm::F(Box::new(t))
    }

    pub fn f_pow(t: ArrowTerm, k: usize) -> Self {
        (0..k).fold(t, |acc, _| ArrowTerm::f(acc))
    }

    pub fn comp(g: ArrowTerm, f: ArrowTerm) -> Self {
        ArrowTerm::Comp(Box::new(g), Box::new(f))
    }

    /// `κ_a = φ_a ∘ γ_a`.
    pub fn kappa(a: usize) -> Self {
        ArrowTerm::comp(ArrowTerm::Phi(a), ArrowTerm::Gamma(a))
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_arrow(text)
    }

    /// `(source, target)`.
    pub fn type_of(&self) -> Result<(usize, usize)> {
        type_of(self)
    }
}

pub fn type_of(f: &ArrowTerm) -> Result<(usize, usize)> {
    Ok(match f {
        ArrowTerm::Id(n) => (*n, *n),
        ArrowTerm::Phi(n) => (n + 2, *n),
        ArrowTerm::Gamma(n) => (*n, n + 2),
        ArrowTerm::F(g) => {
            let (m, n) = type_of(g)?;
            (m + 1, n + 1)
        }
        ArrowTerm::Comp(g, h) => {
            let (k, l) = type_of(g)?;
            let (m, n) = type_of(h)?;
            if n != k {
                return Err(Error::Type(format!(
                    "cannot compose {g}: {k}→{l} after {h}: {m}→{n}"
                )));
            }
            (m, l)
        }
    })
}

impl fmt::Display for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowTerm::Id(n) => write!(f, "id {n}"),
            ArrowTerm::Phi(n) => write!(f, "phi {n}"),
            ArrowTerm::Gamma(n) => write!(f, "gamma {n}"),
            ArrowTerm::F(g) => write!(f, "F({g})"),
            ArrowTerm::Comp(g, h) if matches!(**h, ArrowTerm::Comp(..)) => write!(f, "{g} . ({h})"),
            ArrowTerm::Comp(g, h) => write!(f, "{g} . {h}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(x) => Err(Error::parse(self.pos, format!("expected '{c}', found '{x}'"))),
            None => Err(Error::parse(self.pos, format!("expected '{c}', found end of input"))),
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn number(&mut self) -> Result<usize> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let w = self.word();
        w.parse()
            .map_err(|_| Error::parse(start, format!("expected a natural number, found '{w}'")))
    }

    fn expr(&mut self) -> Result<ArrowTerm> {
        let mut t = self.atom()?;
        while self.peek() == Some('.') {
            self.pos += 1;
            let rhs = self.atom()?;
            t = ArrowTerm::comp(t, rhs);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<ArrowTerm> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let t = self.expr()?;
            self.expect(')')?;
            return Ok(t);
        }
        let start = self.pos;
        match self.word() {
            "id" => Ok(ArrowTerm::Id(self.number()?)),
            "phi" => Ok(ArrowTerm::Phi(self.number()?)),
            "gamma" => Ok(ArrowTerm::Gamma(self.number()?)),
            "F" => {
                let k = if self.peek() == Some('^') {
                    self.pos += 1;
                    self.number()?
                } else {
                    1
                };
                self.expect('(')?;
                let t = self.expr()?;
                self.expect(')')?;
                Ok(ArrowTerm::f_pow(t, k))
            }
            "" => Err(Error::parse(start, "expected an arrow term")),
            w => Err(Error::parse(start, format!("unknown arrow '{w}'"))),
        }
    }
}

/// Parses `id N`, `phi N`, `gamma N`, `F(t)`, `F^k(t)`, `t . t` and
/// parentheses; `.` associates to the left.
pub fn parse_arrow(text: &str) -> Result<ArrowTerm> {
    let mut p = Parser { src: text, pos: 0 };
    let t = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(t)
}

fn psi_into(f: &ArrowTerm, out: &mut Vec<Gen>) {
    match f {
        ArrowTerm::Id(_) => out.push(Gen::Unit),
        ArrowTerm::Phi(n) => out.push(Gen::Cup(n + 1)),
        ArrowTerm::Gamma(n) => out.push(Gen::Cap(n + 1)),
        ArrowTerm::F(g) => psi_into(g, out),
        ArrowTerm::Comp(g, h) => {
            psi_into(g, out);
            psi_into(h, out);
        }
    }
}

/// The word of an arrow term; `F` is erased and `g ∘ f` becomes `ψ(g)ψ(f)`.
pub fn psi(f: &ArrowTerm) -> Term {
    let mut gens = Vec::new();
    psi_into(f, &mut gens);
    Term {
        gens,
        theory: Theory::L,
    }
}

/// `g ∗ f`: the composite after padding the lower interface with `F`.
pub fn star(g: &ArrowTerm, f: &ArrowTerm) -> Result<ArrowTerm> {
    let (_, n) = type_of(f)?;
    let (k, _) = type_of(g)?;
    Ok(if n <= k {
        ArrowTerm::comp(g.clone(), ArrowTerm::f_pow(f.clone(), k - n))
    } else {
        ArrowTerm::comp(ArrowTerm::f_pow(g.clone(), n - k), f.clone())
    })
}

fn chi_gen(g: &Gen) -> Result<ArrowTerm> {
    Ok(match *g {
        Gen::Cup(k) if k >= 1 => ArrowTerm::Phi(k - 1),
        Gen::Cap(k) if k >= 1 => ArrowTerm::Gamma(k - 1),
        Gen::Unit => ArrowTerm::Id(0),
        Gen::Circle => ArrowTerm::kappa(0),
        ref other => {
            return Err(Error::Theory {
                gen: other.to_string(),
                theory: "arrow terms".into(),
            })
        }
    })
}

/// The arrow term of a word: generators are translated one by one and
/// combined with `∗` from the left. Diapsides and extended generators are
/// expanded first; a circle is read as `κ_0`.
pub fn chi(t: &Term) -> Result<ArrowTerm> {
    let word = expand_ext(&embed_diapsides(t));
    let mut it = word.gens.iter();
    let Some(first) = it.next() else {
        return Ok(ArrowTerm::Id(0));
    };
    let mut acc = chi_gen(first)?;
    for g in it {
        acc = star(&acc, &chi_gen(g)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub equal: bool,
    /// Why the answer is `false` without consulting the monoid.
    pub reason: Option<String>,
    /// Set for `L_c` at type `(0, 0)`, where the criterion rests on a fact
    /// whose proof is not reproduced here.
    pub caveat: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    L,
    K,
    J,
}

pub fn eq_arrow(f: &ArrowTerm, g: &ArrowTerm, level: Level) -> Result<Verdict> {
    let tf = type_of(f)?;
    let tg = type_of(g)?;
    if tf != tg {
        return Ok(Verdict {
            equal: false,
            reason: Some(format!(
                "types differ: {}→{} vs {}→{}",
                tf.0, tf.1, tg.0, tg.1
            )),
            caveat: false,
        });
    }
    let (pf, pg) = (psi(f), psi(g));
    let equal = match level {
        Level::L => eq_l(&pf, &pg)?,
        Level::K => eq_k(&pf, &pg),
        Level::J => eq_j(&pf, &pg),
    };
    Ok(Verdict {
        equal,
        reason: None,
        caveat: level == Level::L && tf == (0, 0),
    })
}

pub fn eq_kc(f: &ArrowTerm, g: &ArrowTerm) -> Result<Verdict> {
    eq_arrow(f, g, Level::K)
}

pub fn eq_jc(f: &ArrowTerm, g: &ArrowTerm) -> Result<Verdict> {
    eq_arrow(f, g, Level::J)
}

pub fn eq_lc(f: &ArrowTerm, g: &ArrowTerm) -> Result<Verdict> {
    eq_arrow(f, g, Level::L)
}
