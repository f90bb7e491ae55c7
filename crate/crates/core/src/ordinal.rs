//! Circular forms: nested multisets of circles, read as ordinals below
//! epsilon-zero in Cantor normal form.
//!
//! A form is stored as its exponent list `α_1 ≥ … ≥ α_n`, standing for
//! `ω^α_1 + … + ω^α_n`. The list is kept sorted at construction time, so
//! structural equality coincides with ordinal equality, and the derived
//! lexicographic `Ord` coincides with the ordinal order. The textual form is
//! the parenthetical word: `ι(ω^α_1 + … + ω^α_n) = (ι(α_1))…(ι(α_n))`.
//! Ordinals never appear separately from this representation, so the
//! isomorphism between the two views is the identity on data.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CircularForm {
    exponents: Vec<CircularForm>,
}

impl CircularForm {
    /// The empty form; the ordinal 0.
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::omega_pow(Self::zero())
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// The finite ordinal `n`, i.e. `n` side-by-side empty circles.
    pub fn from_nat(n: usize) -> Self {
        Self {
            exponents: vec![Self::zero(); n],
        }
    }

    /// Builds a form from arbitrary exponents, sorting them into Cantor
    /// normal form.
    pub fn from_exponents(mut exponents: Vec<CircularForm>) -> Self {
        exponents.sort_by(|a, b| b.cmp(a));
        Self { exponents }
    }

    /// `ω^α`: a single circle enclosing `α`.
    pub fn omega_pow(alpha: CircularForm) -> Self {
        Self {
            exponents: vec![alpha],
        }
    }

    pub fn exponents(&self) -> &[CircularForm] {
        &self.exponents
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    /// The Hessenberg natural sum `α♯β`: merge of the exponent lists.
    pub fn nat_sum(&self, other: &CircularForm) -> CircularForm {
        let mut merged = Vec::with_capacity(self.exponents.len() + other.exponents.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exponents.len() && j < other.exponents.len() {
            if self.exponents[i] >= other.exponents[j] {
                merged.push(self.exponents[i].clone());
                i += 1;
            } else {
                merged.push(other.exponents[j].clone());
                j += 1;
            }
        }
        merged.extend_from_slice(&self.exponents[i..]);
        merged.extend_from_slice(&other.exponents[j..]);
        CircularForm { exponents: merged }
    }

    /// Total number of circles, i.e. the number of `(` in the word. This is
    /// the collapse of a circular form to a plain circle count.
    pub fn circle_count(&self) -> usize {
        self.exponents.iter().map(|e| 1 + e.circle_count()).sum()
    }

    /// Nesting depth: 0 for the empty form.
    pub fn depth(&self) -> usize {
        self.exponents
            .iter()
            .map(|e| 1 + e.depth())
            .max()
            .unwrap_or(0)
    }

    pub fn parse_pword(text: &str) -> Result<Self> {
        let mut stack: Vec<Vec<CircularForm>> = vec![Vec::new()];
        for (pos, ch) in text.char_indices() {
            match ch {
                '(' => stack.push(Vec::new()),
                ')' => {
                    if stack.len() == 1 {
                        return Err(Error::parse(pos, "unmatched ')'"));
                    }
                    let inner = stack.pop().expect("stack holds the root frame");
                    stack
                        .last_mut()
                        .expect("root frame")
                        .push(CircularForm::from_exponents(inner));
                }
                other => {
                    return Err(Error::parse(
                        pos,
                        format!("unexpected character {other:?} in parenthetical word"),
                    ))
                }
            }
        }
        if stack.len() != 1 {
            return Err(Error::parse(text.len(), "unclosed '('"));
        }
        Ok(CircularForm::from_exponents(stack.pop().unwrap()))
    }

    pub fn to_pword(&self) -> String {
        let mut out = String::new();
        self.write_pword(&mut out);
        out
    }

    fn write_pword(&self, out: &mut String) {
        for e in &self.exponents {
            out.push('(');
            e.write_pword(out);
            out.push(')');
        }
    }

    /// Every way of writing this form as `α♯β`, as `(α, β)` pairs without
    /// repetition. Exponential in the number of exponents; meant for small
    /// forms.
    pub fn splits(&self) -> Vec<(CircularForm, CircularForm)> {
        let n = self.exponents.len();
        let mut out: Vec<(CircularForm, CircularForm)> = Vec::new();
        for mask in 0u64..(1u64 << n.min(16)) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, e) in self.exponents.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(e.clone());
                } else {
                    right.push(e.clone());
                }
            }
            let pair = (
                CircularForm { exponents: left },
                CircularForm { exponents: right },
            );
            if !out.contains(&pair) {
                out.push(pair);
            }
        }
        out
    }
}

pub fn nat_sum(a: &CircularForm, b: &CircularForm) -> CircularForm {
    a.nat_sum(b)
}

pub fn omega_pow(a: CircularForm) -> CircularForm {
    CircularForm::omega_pow(a)
}

pub fn cmp(a: &CircularForm, b: &CircularForm) -> Ordering {
    a.cmp(b)
}

pub fn parse_pword(text: &str) -> Result<CircularForm> {
    CircularForm::parse_pword(text)
}

pub fn print_pword(a: &CircularForm) -> String {
    a.to_pword()
}

pub fn circle_count(a: &CircularForm) -> usize {
    a.circle_count()
}

impl FromStr for CircularForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_pword(s)
    }
}

impl fmt::Display for CircularForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pword())
    }
}

impl fmt::Debug for CircularForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("e")
        } else {
            f.write_str(&self.to_pword())
        }
    }
}
