use crate::error::{Error, Result};
use crate::normalize::eq_j;
use crate::term::Term;

use super::{eval_term, End, FriezeK, Matching};

pub fn cups_caps(f: &FriezeK) -> (usize, usize) {
    (f.matching.cups().count(), f.matching.caps().count())
}

/// `|cups(t) − cups(u) + caps(u) − caps(t)|`.
pub fn balance(t: &Term, u: &Term) -> Result<usize> {
    let (cu_t, ca_t) = cups_caps(&eval_term(t)?);
    let (cu_u, ca_u) = cups_caps(&eval_term(u)?);
    let v = (cu_t + ca_u) as i64 - (cu_u + ca_t) as i64;
    Ok(v.unsigned_abs() as usize)
}

/// The modulus `β` of the cyclic monoid `J_ω` collapses to when `t = u` is
/// added, for an equation that does not already hold.
pub fn collapse_modulus(t: &Term, u: &Term) -> Result<usize> {
    if eq_j(t, u) {
        return Err(Error::NoCollapse);
    }
    balance(t, u)
}

fn require_square(m: &Matching) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Frieze(format!(
            "frieze of type ({}, {}) has no square type",
            m.top(),
            m.bottom()
        )))
    }
}

pub fn span(f: &FriezeK) -> Result<usize> {
    let m = &f.matching;
    require_square(m)?;
    Ok(m.pairs()
        .iter()
        .map(|(x, y)| x.index().abs_diff(y.index()))
        .sum())
}

/// Top slope points `a_i` and bottom slope points `b_i + 1`, both sorted.
pub fn slope_sequences(f: &FriezeK) -> Result<(Vec<usize>, Vec<usize>)> {
    let m = &f.matching;
    require_square(m)?;
    let tops = (1..=m.top())
        .filter(|&i| m.partner(End::Top(i)).index() > i)
        .collect();
    let bots = (1..=m.bottom())
        .filter(|&j| m.partner(End::Bot(j)).index() < j)
        .map(|j| j - 1)
        .collect();
    Ok((tops, bots))
}

/// The innermost transversal `(B_k, T_l)`, tails included, enclosing every
/// cup and every cap. Cup- and cap-free friezes give `(1, 1)`.
pub fn crown_pair(f: &FriezeK) -> (usize, usize) {
    let m = &f.matching;
    let max_cup = m.cups().map(|c| c.1).max().unwrap_or(0);
    let max_cap = m.caps().map(|c| c.1).max().unwrap_or(0);
    // every cup and cap lies within the support, so the first tail encloses them
    m.transversals()
        .find(|&(k, l)| k > max_cap && l > max_cup)
        .unwrap_or((m.bottom() + 1, m.top() + 1))
}

/// Number of threads covering `(j, j+1)` in a square matching padded to
/// width at least `j + 1`.
pub fn covering_count(m: &Matching, j: usize) -> Result<usize> {
    require_square(m)?;
    let padded = m.padded((j + 1).saturating_sub(m.top()));
    Ok(padded
        .pairs()
        .iter()
        .filter(|(x, y)| x.index().min(y.index()) <= j && x.index().max(y.index()) > j)
        .count())
}
