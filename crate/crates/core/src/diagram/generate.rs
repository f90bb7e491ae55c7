use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::normalize::jones_forms;
use crate::term::{Gen, Term, Theory};

use super::{eval_gens, End, FriezeK, Matching};

fn covers(x: End, y: End, j: usize) -> bool {
    x.index().min(y.index()) <= j && x.index().max(y.index()) > j
}

/// Splits off the topmost diapsis `H_j` of a loop-free square matching of
/// width `n`, returning `j` and the remaining matching, or `None` for the
/// identity.
fn peel(m: &Matching, n: usize) -> Option<(usize, Matching)> {
    let m = m.padded(n - m.top());
    let j = m.cups().filter(|c| c.1 == c.0 + 1).map(|c| c.0).max()?;
    let cup = (End::Top(j), End::Top(j + 1));
    let others: Vec<(End, End)> = m
        .pairs()
        .into_iter()
        .filter(|&p| p != cup && covers(p.0, p.1, j))
        .collect();

    // each thread as (p, x), (q, y) with p < q
    let oriented = |&(a, b): &(End, End)| if a.index() <= b.index() { (a, b) } else { (b, a) };
    let pick = |pred: &dyn Fn(End, End) -> bool, max_p: bool| {
        let it = others.iter().map(oriented).filter(|&(a, b)| pred(a, b));
        if max_p {
            it.max_by_key(|t| t.0.index())
        } else {
            it.min_by_key(|t| t.0.index())
        }
    };
    let xi = pick(&|a, b| a.is_top() && b.is_top(), true)
        .or_else(|| pick(&|a, b| a.is_top() && !b.is_top(), true))
        .or_else(|| pick(&|a, b| !a.is_top() && b.is_top(), false))
        .or_else(|| pick(&|a, b| !a.is_top() && !b.is_top(), false))
        .expect("an even number of threads covers every gap");

    let mut pairs: Vec<(End, End)> = m
        .pairs()
        .into_iter()
        .filter(|&p| p != cup && oriented(&p) != xi)
        .collect();
    pairs.push((xi.0, End::Top(j)));
    pairs.push((End::Top(j + 1), xi.1));
    let rest = Matching::from_pairs(n, n, &pairs).expect("replacement keeps the matching planar");
    Some((j, rest))
}

/// Reads a frieze of width `n` back as a word of `K_n`: circles first, then
/// diapsides whose frieze composite is the given matching.
pub fn matching_to_term(f: &FriezeK, n: usize) -> Result<Term> {
    let m = &f.matching;
    if !m.is_square() || m.top() > n {
        return Err(Error::Frieze(format!(
            "frieze of type ({}, {}) is not realizable within width {n}",
            m.top(),
            m.bottom()
        )));
    }
    let mut js = Vec::new();
    let mut cur = m.clone();
    while let Some((j, rest)) = peel(&cur, n) {
        js.push(j);
        cur = rest;
    }
    let mut gens: Vec<Gen> = (0..f.loops).map(|_| Gen::Circle).collect();
    gens.extend(js.into_iter().rev().map(Gen::Diapsis));
    Term::new(gens, Theory::Kn(n))
}

/// All trimmed non-crossing perfect matchings of square type `n`, by direct
/// enumeration of chord diagrams on the boundary cycle.
pub fn enumerate_jn(n: usize) -> Vec<Matching> {
    // positions 0..2n: B_1..B_n then T_n..T_1
    let end = |p: usize| if p < n { End::Bot(p + 1) } else { End::Top(2 * n - p) };
    fn chords(lo: usize, hi: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if lo >= hi {
            out.push(acc.clone());
            return;
        }
        let mut k = lo + 1;
        while k < hi {
            // pair lo with k, fill the inside, then the outside
            let mut inner = Vec::new();
            chords(lo + 1, k, &mut Vec::new(), &mut inner);
            for inside in inner {
                let mark = acc.len();
                acc.push((lo, k));
                acc.extend(inside);
                chords(k + 1, hi, acc, out);
                acc.truncate(mark);
            }
            k += 2;
        }
    }
    let mut raw = Vec::new();
    chords(0, 2 * n, &mut Vec::new(), &mut raw);
    let set: BTreeSet<Matching> = raw
        .into_iter()
        .map(|cs| {
            let pairs: Vec<(End, End)> = cs.into_iter().map(|(a, b)| (end(a), end(b))).collect();
            Matching::from_pairs(n, n, &pairs).expect("chord diagrams are planar")
        })
        .collect();
    set.into_iter().collect()
}

/// The same set, as the friezes of the circle-free Jones normal forms.
pub fn enumerate_jn_via_jones(n: usize) -> Vec<Matching> {
    let set: BTreeSet<Matching> = jones_forms(n)
        .iter()
        .map(|nf| eval_gens(&nf.to_gens()).expect("diapsis words evaluate").matching)
        .collect();
    set.into_iter().collect()
}
