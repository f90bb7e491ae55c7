//! `K`-normal forms `∩_{j_1}…∩_{j_m} c^l ∪_{i_1}…∪_{i_n}` for `K_ω` and `J_ω`.

use std::fmt;

use crate::normalize::lnf::Lnf;
use crate::term::{embed_diapsides, expand_ext, Gen, Term};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Knf {
    /// Strictly decreasing.
    pub caps: Vec<usize>,
    pub circles: u64,
    /// Strictly increasing.
    pub cups: Vec<usize>,
}

impl Knf {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn is_well_formed(&self) -> bool {
        self.caps.windows(2).all(|w| w[0] > w[1])
            && self.cups.windows(2).all(|w| w[0] < w[1])
            && self.caps.iter().chain(&self.cups).all(|&k| k >= 1)
    }

    /// The same form with the circle count dropped, as used by `J_ω`.
    pub fn without_circles(&self) -> Knf {
        Knf {
            circles: 0,
            ..self.clone()
        }
    }

    pub fn to_term_gens(&self) -> Vec<Gen> {
        let mut gens: Vec<Gen> = self.caps.iter().map(|&k| Gen::Cap(k)).collect();
        gens.extend((0..self.circles).map(|_| Gen::Circle));
        gens.extend(self.cups.iter().map(|&k| Gen::Cup(k)));
        gens
    }

    fn append(&mut self, g: &Gen) {
        match g {
            Gen::Circle => self.circles += 1,
            Gen::Unit => {}
            Gen::Cup(k) => self.push_cup(*k),
            Gen::Cap(k) => self.push_cap(*k),
            Gen::Diapsis(i) => {
                self.push_cap(*i);
                self.push_cup(*i);
            }
            Gen::Ext(e) => {
                for g in crate::term::from_extgen(e).gens {
                    self.append(&g);
                }
            }
        }
    }

    // (cup): ∪_i ∪_k = ∪_k ∪_{i+2} for k ≤ i
    fn push_cup(&mut self, k: usize) {
        let mut pos = self.cups.len();
        while pos > 0 && self.cups[pos - 1] >= k {
            self.cups[pos - 1] += 2;
            pos -= 1;
        }
        self.cups.insert(pos, k);
    }

    fn push_cap(&mut self, mut k: usize) {
        for pos in (0..self.cups.len()).rev() {
            let i = self.cups[pos];
            if k >= i + 2 {
                // (cup-cap 1)
                k -= 2;
            } else if i >= k + 2 {
                // (cup-cap 2)
                self.cups[pos] -= 2;
            } else {
                // (cup-cap 3) annihilates; ∪_k ∩_k is the circle
                if i == k {
                    self.circles += 1;
                }
                let crossed = self.cups.split_off(pos + 1);
                self.cups.pop();
                for j in crossed {
                    self.push_cup(j);
                }
                return;
            }
        }
        // (cap): ∩_j ∩_k = ∩_{k+2} ∩_j for j ≤ k
        let mut pos = self.caps.len();
        while pos > 0 && self.caps[pos - 1] <= k {
            k += 2;
            pos -= 1;
        }
        self.caps.insert(pos, k);
    }
}

impl fmt::Display for Knf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.to_term_gens();
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

pub fn knf_append(nf: &Knf, g: &Gen) -> Knf {
    let mut out = nf.clone();
    out.append(g);
    out
}

pub fn normalize_gens(gens: &[Gen]) -> Knf {
    let mut nf = Knf::unit();
    for g in gens {
        nf.append(g);
    }
    nf
}

/// The `K`-normal form of a term of any theory: diapsides are read as
/// `∩_i ∪_i` and extended generators are expanded.
pub fn normalize_k(t: &Term) -> Knf {
    normalize_gens(&expand_ext(&embed_diapsides(t)).gens)
}

pub fn eq_k(t: &Term, u: &Term) -> bool {
    normalize_k(t) == normalize_k(u)
}

pub fn eq_j(t: &Term, u: &Term) -> bool {
    normalize_k(t).without_circles() == normalize_k(u).without_circles()
}

/// Collapses an `L_ω` normal form to its `K_ω` normal form: ordinals become
/// circle counts, lower indices of circles are forgotten.
pub fn collapse_lnf(nf: &Lnf) -> Knf {
    Knf {
        caps: nf.b_part.iter().map(|e| e.0).collect(),
        circles: nf.circle_count() as u64,
        cups: nf.a_part.iter().map(|e| e.0).collect(),
    }
}
