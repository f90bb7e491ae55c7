use num_traits::{One, Zero};

use super::matrix::{rank, Matrix};
use super::scalar::Rat;
use crate::adjunction::ArrowTerm;
use crate::error::{Error, Result};
use crate::normalize::{jones_forms, JonesNf};
use crate::term::{embed_diapsides, expand_ext, Gen, Term};

/// Largest matrix side built by default.
pub const DEFAULT_MAX_DIM: usize = 2048;

/// `p^e`, refusing values above `max_dim`.
pub fn checked_pow(p: usize, e: usize, max_dim: usize) -> Result<usize> {
    let mut v: usize = 1;
    for _ in 0..e {
        v = v
            .checked_mul(p)
            .filter(|&x| x <= max_dim)
            .ok_or_else(|| Error::Limit(format!("{p}^{e} exceeds the dimension cap {max_dim}")))?;
    }
    if v > max_dim {
        return Err(Error::Limit(format!("{p}^{e} exceeds the dimension cap {max_dim}")));
    }
    Ok(v)
}

fn rat(n: usize) -> Rat {
    Rat::from_integer(n.into())
}

/// The `1 × p²` row with a one at every position `(i−1)p + i`.
pub fn e_row(p: usize) -> Matrix<Rat> {
    Matrix::from_fn(1, p * p, |_, c| {
        if c / p == c % p {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// `φ_m = E_p ⊗ 1_m`, an `m × p²m` matrix.
pub fn phi_mat(p: usize, m: usize) -> Matrix<Rat> {
    e_row(p).kron(&Matrix::identity(m))
}

/// `γ_m`, the transpose of `φ_m`.
pub fn gamma_mat(p: usize, m: usize) -> Matrix<Rat> {
    phi_mat(p, m).transpose()
}

fn check_p(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::Invalid("p must be positive".into()));
    }
    Ok(())
}

/// `h_k^n = 1_{p^{n−k−1}} ⊗ E_p′E_p ⊗ 1_{p^{k−1}}`.
pub fn h_mat(p: usize, n: usize, k: usize) -> Result<Matrix<Rat>> {
    h_mat_limited(p, n, k, DEFAULT_MAX_DIM)
}

pub fn h_mat_limited(p: usize, n: usize, k: usize, max_dim: usize) -> Result<Matrix<Rat>> {
    check_p(p)?;
    if k < 1 || k + 1 > n {
        return Err(Error::IndexRange {
            what: "diapsis",
            index: k,
            max: n.saturating_sub(1),
        });
    }
    checked_pow(p, n, max_dim)?;
    let e = e_row(p);
    let core = e.transpose().mul(&e)?;
    Ok(core
        .pad(p.pow((n - k - 1) as u32))
        .kron(&Matrix::identity(p.pow((k - 1) as u32))))
}

/// The matrix of a `K_n` word: diapsides go to `h_k^n`, the circle to `p·1`.
pub fn rep_kn(p: usize, n: usize, t: &Term) -> Result<Matrix<Rat>> {
    rep_kn_limited(p, n, &t.gens, DEFAULT_MAX_DIM)
}

pub fn rep_kn_limited(p: usize, n: usize, gens: &[Gen], max_dim: usize) -> Result<Matrix<Rat>> {
    check_p(p)?;
    let dim = checked_pow(p, n, max_dim)?;
    let mut hs: Vec<Option<Matrix<Rat>>> = vec![None; n];
    let mut acc = Matrix::identity(dim);
    let mut circles = 0usize;
    for g in gens {
        match *g {
            Gen::Diapsis(k) => {
                if hs.get(k).is_none() || k == 0 {
                    return Err(Error::IndexRange {
                        what: "diapsis",
                        index: k,
                        max: n.saturating_sub(1),
                    });
                }
                if hs[k].is_none() {
                    hs[k] = Some(h_mat_limited(p, n, k, max_dim)?);
                }
                acc = acc.mul(hs[k].as_ref().expect("built above"))?;
            }
            Gen::Circle => circles += 1,
            Gen::Unit => {}
            ref other => {
                return Err(Error::Theory {
                    gen: other.to_string(),
                    theory: format!("K{n}"),
                })
            }
        }
    }
    // circles are central
    if circles > 0 {
        acc = acc.scale(&rat(p).pow(circles as i32));
    }
    Ok(acc)
}

pub fn rep_jones(p: usize, n: usize, nf: &JonesNf) -> Result<Matrix<Rat>> {
    rep_kn_limited(p, n, &nf.to_gens(), DEFAULT_MAX_DIM)
}

/// `H_p` on arrow terms: `φ_m ↦ φ_{p^m}`, `γ_m ↦ γ_{p^m}`, `F ↦ 1_p ⊗ −`.
pub fn h_eval(p: usize, f: &ArrowTerm) -> Result<Matrix<Rat>> {
    check_p(p)?;
    f.type_of()?;
    h_eval_inner(p, f)
}

fn h_eval_inner(p: usize, f: &ArrowTerm) -> Result<Matrix<Rat>> {
    let dim = |m: usize| checked_pow(p, m, DEFAULT_MAX_DIM);
    Ok(match f {
        ArrowTerm::Id(m) => Matrix::identity(dim(*m)?),
        ArrowTerm::Phi(m) => {
            dim(m + 2)?;
            phi_mat(p, dim(*m)?)
        }
        ArrowTerm::Gamma(m) => {
            dim(m + 2)?;
            gamma_mat(p, dim(*m)?)
        }
        ArrowTerm::F(g) => h_eval_inner(p, g)?.pad(p),
        ArrowTerm::Comp(g, h) => h_eval_inner(p, g)?.mul(&h_eval_inner(p, h)?)?,
    })
}

/// `B ∗ A`: compose after padding the smaller interface with `1_{p^j} ⊗ −`.
pub fn mat_star(b: &Matrix<Rat>, a: &Matrix<Rat>) -> Result<Matrix<Rat>> {
    let (n, k) = (a.rows(), b.cols());
    if n <= k {
        if k % n != 0 {
            return Err(Error::Dimension(format!("{k} is not a multiple of {n}")));
        }
        b.mul(&a.pad(k / n))
    } else {
        if n % k != 0 {
            return Err(Error::Dimension(format!("{n} is not a multiple of {k}")));
        }
        b.pad(n / k).mul(a)
    }
}

/// `η_p` on words of `L_ω`/`K_ω`/`J_ω`: `∪_k ↦ φ_{p^{k−1}}`, `∩_k ↦ γ_{p^{k−1}}`,
/// products via `∗`.
pub fn eta(p: usize, t: &Term) -> Result<Matrix<Rat>> {
    check_p(p)?;
    let word = expand_ext(&embed_diapsides(t));
    let mut acc = Matrix::identity(1);
    for g in &word.gens {
        let m = match *g {
            Gen::Cup(k) => {
                checked_pow(p, k + 1, DEFAULT_MAX_DIM)?;
                phi_mat(p, p.pow((k - 1) as u32))
            }
            Gen::Cap(k) => {
                checked_pow(p, k + 1, DEFAULT_MAX_DIM)?;
                gamma_mat(p, p.pow((k - 1) as u32))
            }
            Gen::Circle => Matrix::from_fn(1, 1, |_, _| rat(p)),
            Gen::Unit => continue,
            ref other => {
                return Err(Error::Theory {
                    gen: other.to_string(),
                    theory: "eta".into(),
                })
            }
        };
        acc = mat_star(&acc, &m)?;
    }
    Ok(acc)
}

fn log_p(p: usize, x: usize) -> Option<u32> {
    if p < 2 {
        return (x == 1).then_some(0);
    }
    let mut e = 0;
    let mut v = 1usize;
    while v < x {
        v = v.checked_mul(p)?;
        e += 1;
    }
    (v == x).then_some(e)
}

/// `A ≡^J B`: equal up to padding with `1_{p^k} ⊗ −` and a factor `p^m`
/// on either side.
pub fn equiv_j(p: usize, a: &Matrix<Rat>, b: &Matrix<Rat>) -> Result<bool> {
    if p < 2 {
        return Err(Error::Invalid("p must be at least 2".into()));
    }
    let dims = [a.rows(), a.cols(), b.rows(), b.cols()];
    let logs: Vec<u32> = dims
        .iter()
        .map(|&x| {
            log_p(p, x).ok_or_else(|| Error::Dimension(format!("{x} is not a power of {p}")))
        })
        .collect::<Result<_>>()?;
    let (ra, ca, rb, cb) = (logs[0] as i64, logs[1] as i64, logs[2] as i64, logs[3] as i64);
    if ra - rb != ca - cb {
        return Ok(false);
    }
    let (a2, b2) = if ra >= rb {
        (a.clone(), b.pad(p.pow((ra - rb) as u32)))
    } else {
        (a.pad(p.pow((rb - ra) as u32)), b.clone())
    };
    let first = a2.entries().iter().position(|v| !v.is_zero());
    let Some(i) = first else {
        return Ok(b2.is_zero());
    };
    let (x, y) = (&a2.entries()[i], &b2.entries()[i]);
    if y.is_zero() {
        return Ok(false);
    }
    let ratio = y / x;
    let is_power = |r: &Rat| {
        r.is_integer()
            && r.numer() > &num_bigint::BigInt::zero()
            && r.numer()
                .to_string()
                .parse::<usize>()
                .ok()
                .and_then(|v| log_p(p, v))
                .is_some()
    };
    if !is_power(&ratio) && !is_power(&ratio.recip()) {
        return Ok(false);
    }
    Ok(a2.scale(&ratio) == b2)
}

/// Whether the matrices of the circle-free Jones normal forms of `K_n` are
/// linearly independent, together with the rank found.
pub fn independence_check(p: usize, n: usize) -> Result<(bool, usize)> {
    independence_check_limited(p, n, DEFAULT_MAX_DIM)
}

pub fn independence_check_limited(p: usize, n: usize, max_dim: usize) -> Result<(bool, usize)> {
    let dim = checked_pow(p, n, max_dim)?;
    let forms = jones_forms(n);
    let mut flat = Vec::with_capacity(forms.len());
    for nf in &forms {
        flat.push(rep_kn_limited(p, n, &nf.to_gens(), max_dim)?.entries().to_vec());
    }
    let m = Matrix::from_rows(flat)?;
    debug_assert_eq!(m.cols(), dim * dim);
    let r = rank(&m);
    Ok((r == forms.len(), r))
}
