//! Single applications of the defining equations, in either direction.
//!
//! Each `*_neighbors` function returns every word obtained from the input
//! by one equation instance at one position. Rewrites that insert material
//! out of nothing (`c_k^0`, `∪_k ∩_{k±1}`, `h_i h_{i±1} h_i`, ...) use
//! indices up to two beyond the largest index present.

use crate::ordinal::CircularForm;
use crate::term::{ExtGen, ExtWord, Gen};

fn replace<T: Clone>(w: &[T], pos: usize, len: usize, with: Vec<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(w.len() + with.len());
    out.extend_from_slice(&w[..pos]);
    out.extend(with);
    out.extend_from_slice(&w[pos + len..]);
    out
}

fn ext_index(g: &ExtGen) -> usize {
    match g {
        ExtGen::A(k, _) | ExtGen::B(k, _) | ExtGen::C(k, _) => *k,
    }
}

/// Neighbors of an `L_ω` word in the extended alphabet.
pub fn l_neighbors(w: &[ExtGen]) -> Vec<ExtWord> {
    use ExtGen::{A, B, C};
    let bound = w.iter().map(ext_index).max().unwrap_or(0) + 2;
    let mut out = Vec::new();

    for pos in 0..w.len() {
        match &w[pos] {
            // (c1) left to right
            C(_, g) if g.is_zero() => out.push(replace(w, pos, 1, vec![])),
            _ => {}
        }
        match &w[pos] {
            // (c2) right to left
            C(k, g) => {
                for (x, y) in g.splits() {
                    out.push(replace(w, pos, 1, vec![C(*k, x), C(*k, y)]));
                }
                // (ab3.3) right to left
                if g.exponents().len() == 1 {
                    for (x, y) in g.exponents()[0].splits() {
                        out.push(replace(w, pos, 1, vec![A(*k, x), B(*k, y)]));
                    }
                }
            }
            // (ac3) right to left
            A(k, d) => {
                for (x, y) in d.splits() {
                    out.push(replace(w, pos, 1, vec![A(*k, x), C(k + 1, y)]));
                }
            }
            // (bc3) right to left
            B(k, d) => {
                for (x, y) in d.splits() {
                    out.push(replace(w, pos, 1, vec![C(k + 1, x), B(*k, y)]));
                }
            }
        }
    }

    // (c1) right to left
    for pos in 0..=w.len() {
        for k in 1..=bound {
            out.push(replace(w, pos, 0, vec![C(k, CircularForm::zero())]));
        }
    }

    for pos in 0..w.len().saturating_sub(1) {
        let (x, y) = (&w[pos], &w[pos + 1]);
        let mut put = |with: Vec<ExtGen>| out.push(replace(w, pos, 2, with));
        match (x, y) {
            (A(k, a), A(l, b)) => {
                // (aa)
                if l <= k {
                    put(vec![A(*l, b.clone()), A(k + 2, a.clone())]);
                }
                if *l >= k + 2 {
                    put(vec![A(l - 2, b.clone()), A(*k, a.clone())]);
                }
            }
            (B(l, a), B(k, b)) => {
                // (bb)
                if l <= k {
                    put(vec![B(k + 2, b.clone()), B(*l, a.clone())]);
                }
                if *l >= k + 2 {
                    put(vec![B(*k, b.clone()), B(l - 2, a.clone())]);
                }
            }
            (C(k, a), C(l, b)) => {
                if k == l {
                    // (c2)
                    put(vec![C(*k, a.nat_sum(b))]);
                } else {
                    // (cc)
                    put(vec![C(*l, b.clone()), C(*k, a.clone())]);
                }
                if *l == k + 1 {
                    // (ab3.1) and (ab3.2) right to left
                    put(vec![A(*k, b.clone()), B(*l, a.clone())]);
                    put(vec![A(*l, a.clone()), B(*k, b.clone())]);
                }
            }
            (A(i, a), B(j, b)) => {
                if *j >= i + 2 {
                    // (ab1)
                    put(vec![B(j - 2, b.clone()), A(*i, a.clone())]);
                } else if *i >= j + 2 {
                    // (ab2)
                    put(vec![B(*j, b.clone()), A(i - 2, a.clone())]);
                } else if *j == i + 1 {
                    // (ab3.1)
                    put(vec![C(*i, b.clone()), C(*j, a.clone())]);
                } else if *i == j + 1 {
                    // (ab3.2)
                    put(vec![C(*j, a.clone()), C(*i, b.clone())]);
                } else {
                    // (ab3.3)
                    put(vec![C(*i, CircularForm::omega_pow(a.nat_sum(b)))]);
                }
            }
            (B(k, b), A(l, a)) => {
                // (ab1) and (ab2) right to left
                if l <= k {
                    put(vec![A(*l, a.clone()), B(k + 2, b.clone())]);
                }
                if k <= l {
                    put(vec![A(l + 2, a.clone()), B(*k, b.clone())]);
                }
            }
            (A(i, a), C(j, g)) => {
                if j <= i {
                    // (ac1)
                    put(vec![C(*j, g.clone()), A(*i, a.clone())]);
                } else if *j >= i + 2 {
                    // (ac2)
                    put(vec![C(j - 2, g.clone()), A(*i, a.clone())]);
                } else {
                    // (ac3)
                    put(vec![A(*i, a.nat_sum(g))]);
                }
            }
            (C(j, g), A(i, a)) => {
                // (ac1) and (ac2) right to left
                if j <= i {
                    put(vec![A(*i, a.clone()), C(*j, g.clone())]);
                }
                if i <= j {
                    put(vec![A(*i, a.clone()), C(j + 2, g.clone())]);
                }
            }
            (C(j, g), B(i, b)) => {
                if j <= i {
                    // (bc1)
                    put(vec![B(*i, b.clone()), C(*j, g.clone())]);
                } else if *j >= i + 2 {
                    // (bc2)
                    put(vec![B(*i, b.clone()), C(j - 2, g.clone())]);
                } else {
                    // (bc3)
                    put(vec![B(*i, g.nat_sum(b))]);
                }
            }
            (B(i, b), C(j, g)) => {
                // (bc1) and (bc2) right to left
                if j <= i {
                    put(vec![C(*j, g.clone()), B(*i, b.clone())]);
                }
                if i <= j {
                    put(vec![C(j + 2, g.clone()), B(*i, b.clone())]);
                }
            }
        }
    }
    out
}

fn gen_index(g: &Gen) -> usize {
    match g {
        Gen::Cup(k) | Gen::Cap(k) | Gen::Diapsis(k) => *k,
        _ => 0,
    }
}

/// Neighbors of a `K_ω` word over cups, caps, circles and units.
pub fn k_neighbors(w: &[Gen]) -> Vec<Vec<Gen>> {
    use Gen::{Cap, Circle, Cup, Unit};
    let bound = w.iter().map(gen_index).max().unwrap_or(0) + 2;
    let mut out = Vec::new();

    for pos in 0..w.len() {
        match w[pos] {
            Unit => out.push(replace(w, pos, 1, vec![])),
            Circle => {
                for k in 1..=bound {
                    out.push(replace(w, pos, 1, vec![Cup(k), Cap(k)]));
                }
            }
            _ => {}
        }
    }
    // (cup-cap 3) right to left
    for pos in 0..=w.len() {
        for k in 1..=bound {
            out.push(replace(w, pos, 0, vec![Cup(k), Cap(k + 1)]));
            out.push(replace(w, pos, 0, vec![Cup(k + 1), Cap(k)]));
        }
    }

    for pos in 0..w.len().saturating_sub(1) {
        let mut put = |with: Vec<Gen>| out.push(replace(w, pos, 2, with));
        match (w[pos].clone(), w[pos + 1].clone()) {
            (Circle, g) if g != Circle => put(vec![g, Circle]),
            (g, Circle) if g != Circle => put(vec![Circle, g]),
            (Cup(k), Cup(l)) => {
                if l <= k {
                    put(vec![Cup(l), Cup(k + 2)]);
                }
                if l >= k + 2 {
                    put(vec![Cup(l - 2), Cup(k)]);
                }
            }
            (Cap(l), Cap(k)) => {
                if l <= k {
                    put(vec![Cap(k + 2), Cap(l)]);
                }
                if l >= k + 2 {
                    put(vec![Cap(k), Cap(l - 2)]);
                }
            }
            (Cup(i), Cap(j)) => {
                if j >= i + 2 {
                    put(vec![Cap(j - 2), Cup(i)]);
                } else if i >= j + 2 {
                    put(vec![Cap(j), Cup(i - 2)]);
                } else if i != j {
                    put(vec![]);
                } else {
                    // (cup-cap 4) and the circle abbreviation
                    put(vec![Circle]);
                    put(vec![Cup(i + 1), Cap(i + 1)]);
                    if i > 1 {
                        put(vec![Cup(i - 1), Cap(i - 1)]);
                    }
                }
            }
            (Cap(k), Cup(l)) => {
                // (cup-cap 1) and (cup-cap 2) right to left
                if l <= k {
                    put(vec![Cup(l), Cap(k + 2)]);
                }
                if k <= l {
                    put(vec![Cup(l + 2), Cap(k)]);
                }
            }
            _ => {}
        }
    }
    out
}

/// Neighbors of a `K_n` word over diapsides, circles and units.
pub fn kn_neighbors(w: &[Gen], n: usize) -> Vec<Vec<Gen>> {
    use Gen::{Circle, Diapsis, Unit};
    let mut out = Vec::new();
    let in_range = |i: usize| i >= 1 && i < n;

    for pos in 0..w.len() {
        match w[pos] {
            Unit => out.push(replace(w, pos, 1, vec![])),
            // (h2) right to left
            Diapsis(i) => {
                for j in [i.wrapping_sub(1), i + 1] {
                    if in_range(j) {
                        out.push(replace(w, pos, 1, vec![Diapsis(i), Diapsis(j), Diapsis(i)]));
                    }
                }
            }
            _ => {}
        }
    }

    for pos in 0..w.len().saturating_sub(1) {
        let mut put = |with: Vec<Gen>| out.push(replace(w, pos, 2, with));
        match (w[pos].clone(), w[pos + 1].clone()) {
            // (hc1)
            (Diapsis(i), Circle) => put(vec![Circle, Diapsis(i)]),
            (Circle, Diapsis(i)) => {
                put(vec![Diapsis(i), Circle]);
                // (hc2) right to left
                put(vec![Diapsis(i), Diapsis(i)]);
            }
            (Diapsis(i), Diapsis(j)) => {
                if i.abs_diff(j) >= 2 {
                    // (h1)
                    put(vec![Diapsis(j), Diapsis(i)]);
                } else if i == j {
                    // (hc2)
                    put(vec![Circle, Diapsis(i)]);
                }
            }
            _ => {}
        }
    }

    for pos in 0..w.len().saturating_sub(2) {
        if let (Diapsis(i), Diapsis(j), Diapsis(k)) = (w[pos].clone(), w[pos + 1].clone(), w[pos + 2].clone()) {
            if i == k && i.abs_diff(j) == 1 {
                out.push(replace(w, pos, 3, vec![Diapsis(i)]));
            }
        }
    }
    out
}
