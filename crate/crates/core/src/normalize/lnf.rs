//! Normal forms in `L_ω`, computed in the extended `a`/`b`/`c` alphabet.
//!
//! An [`Lnf`] is the word `b_{j_1}^{β_1}…b_{j_m}^{β_m} c_{k_1}^{γ_1}…c_{k_l}^{γ_l}
//! a_{i_1}^{α_1}…a_{i_n}^{α_n}` with `j` strictly decreasing, `k` and `i`
//! strictly increasing and every `γ ≠ 0`. Normalization is a fold of
//! [`lnf_append`]: each incoming generator is moved into place through the
//! existing normal form, every step being one of the defining equations
//! (`aa`, `bb`, `c1`, `c2`, `cc`, `ab1`–`ab3.3`, `ac1`–`ac3`, `bc1`–`bc3`).
//! Each append either terminates after one right-to-left pass, or consumes
//! an `a` entry by annihilation and re-appends strictly fewer `a` entries, so
//! the fold terminates by structural recursion.

use std::fmt;

use crate::error::Result;
use crate::ordinal::CircularForm;
use crate::term::{to_extword, ExtGen, ExtWord, Term};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Lnf {
    pub b_part: Vec<(usize, CircularForm)>,
    pub c_part: Vec<(usize, CircularForm)>,
    pub a_part: Vec<(usize, CircularForm)>,
}

impl Lnf {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn is_unit(&self) -> bool {
        self.b_part.is_empty() && self.c_part.is_empty() && self.a_part.is_empty()
    }

    /// The normal form as a word in the extended alphabet.
    pub fn to_extword(&self) -> ExtWord {
        let mut w = Vec::with_capacity(self.b_part.len() + self.c_part.len() + self.a_part.len());
        w.extend(self.b_part.iter().map(|(k, f)| ExtGen::B(*k, f.clone())));
        w.extend(self.c_part.iter().map(|(k, f)| ExtGen::C(*k, f.clone())));
        w.extend(self.a_part.iter().map(|(k, f)| ExtGen::A(*k, f.clone())));
        w
    }

    /// Checks the shape invariants of the normal form.
    pub fn is_well_formed(&self) -> bool {
        let idx_ok = |k: &usize| *k >= 1;
        self.b_part.windows(2).all(|w| w[0].0 > w[1].0)
            && self.c_part.windows(2).all(|w| w[0].0 < w[1].0)
            && self.a_part.windows(2).all(|w| w[0].0 < w[1].0)
            && self.c_part.iter().all(|(_, g)| !g.is_zero())
            && self.b_part.iter().map(|e| &e.0).all(idx_ok)
            && self.c_part.iter().map(|e| &e.0).all(idx_ok)
            && self.a_part.iter().map(|e| &e.0).all(idx_ok)
    }

    /// Total number of circles hidden in the ordinal annotations.
    pub fn circle_count(&self) -> usize {
        self.b_part
            .iter()
            .chain(&self.c_part)
            .chain(&self.a_part)
            .map(|(_, f)| f.circle_count())
            .sum()
    }

    fn append(&mut self, g: ExtGen) {
        match g {
            ExtGen::A(k, alpha) => self.push_a(k, alpha),
            ExtGen::C(k, gamma) => self.push_c(k, gamma),
            ExtGen::B(k, beta) => self.push_b(k, beta),
        }
    }

    // (aa): a_i a_k = a_k a_{i+2} for k ≤ i
    fn push_a(&mut self, k: usize, alpha: CircularForm) {
        let mut pos = self.a_part.len();
        while pos > 0 && self.a_part[pos - 1].0 >= k {
            self.a_part[pos - 1].0 += 2;
            pos -= 1;
        }
        self.a_part.insert(pos, (k, alpha));
    }

    fn push_c(&mut self, mut k: usize, gamma: CircularForm) {
        // (c1)
        if gamma.is_zero() {
            return;
        }
        for pos in (0..self.a_part.len()).rev() {
            let i = self.a_part[pos].0;
            if k <= i {
                // (ac1)
            } else if k == i + 1 {
                // (ac3)
                let merged = self.a_part[pos].1.nat_sum(&gamma);
                self.a_part[pos].1 = merged;
                return;
            } else {
                // (ac2)
                k -= 2;
            }
        }
        self.merge_c(k, gamma);
    }

    // (cc) and (c2)
    fn merge_c(&mut self, k: usize, gamma: CircularForm) {
        match self.c_part.binary_search_by_key(&k, |e| e.0) {
            Ok(pos) => {
                let merged = self.c_part[pos].1.nat_sum(&gamma);
                self.c_part[pos].1 = merged;
            }
            Err(pos) => self.c_part.insert(pos, (k, gamma)),
        }
    }

    fn push_b(&mut self, mut k: usize, mut beta: CircularForm) {
        for pos in (0..self.a_part.len()).rev() {
            let i = self.a_part[pos].0;
            if k >= i + 2 {
                // (ab1)
                k -= 2;
            } else if i >= k + 2 {
                // (ab2)
                self.a_part[pos].0 -= 2;
            } else {
                let crossed = self.a_part.split_off(pos + 1);
                let (_, alpha) = self.a_part.pop().expect("entry at pos");
                if k == i + 1 {
                    // (ab3.1)
                    self.push_c(i, beta);
                    self.push_c(i + 1, alpha);
                } else if i == k + 1 {
                    // (ab3.2)
                    self.push_c(k, alpha);
                    self.push_c(k + 1, beta);
                } else {
                    // (ab3.3)
                    self.push_c(k, CircularForm::omega_pow(alpha.nat_sum(&beta)));
                }
                for (j, a) in crossed {
                    self.push_a(j, a);
                }
                return;
            }
        }

        let mut absorbed = false;
        for entry in self.c_part.iter_mut().rev() {
            if entry.0 <= k {
                // (bc1)
            } else if entry.0 == k + 1 {
                // (bc3)
                beta = std::mem::take(&mut entry.1).nat_sum(&beta);
                absorbed = true;
            } else {
                // (bc2)
                entry.0 -= 2;
            }
        }
        if absorbed || self.c_part.windows(2).any(|w| w[0].0 >= w[1].0) {
            let old = std::mem::take(&mut self.c_part);
            for (j, g) in old {
                if !g.is_zero() {
                    self.merge_c(j, g);
                }
            }
        }

        // (bb): b_j b_k = b_{k+2} b_j for j ≤ k
        let mut pos = self.b_part.len();
        while pos > 0 && self.b_part[pos - 1].0 <= k {
            k += 2;
            pos -= 1;
        }
        self.b_part.insert(pos, (k, beta));
    }
}

impl fmt::Display for Lnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.to_extword();
        if w.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in w.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            g.fmt(f)?;
        }
        Ok(())
    }
}

/// The normal form of `nf · g`.
pub fn lnf_append(nf: &Lnf, g: &ExtGen) -> Lnf {
    let mut out = nf.clone();
    out.append(g.clone());
    out
}

pub fn normalize_ext(word: &[ExtGen]) -> Lnf {
    let mut nf = Lnf::unit();
    for g in word {
        nf.append(g.clone());
    }
    nf
}

/// The `L_ω` normal form of a term. Diapsides must already be embedded
/// (terms parsed in `L` are); circles are rejected.
pub fn normalize_l(t: &Term) -> Result<Lnf> {
    Ok(normalize_ext(&to_extword(t)?))
}

pub fn eq_l(t: &Term, u: &Term) -> Result<bool> {
    Ok(normalize_l(t)? == normalize_l(u)?)
}
