use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Exact field elements used as matrix entries.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rat(r: Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    let bad = || Error::Invalid(format!("not a rational number: '{text}'"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

fn square_root(d: i64) -> Option<i64> {
    if d < 0 {
        return None;
    }
    let s = (d as f64).sqrt().round() as i64;
    (s - 1..=s + 1).find(|&r| r >= 0 && r * r == d)
}

/// `a + b√d`. Values with `b = 0` carry `d = 0`; a perfect square `d` is
/// folded into `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QExt {
    a: Rat,
    b: Rat,
    d: i64,
}

impl QExt {
    pub fn new(a: Rat, b: Rat, d: i64) -> Self {
        match square_root(d) {
            Some(s) => QExt {
                a: a + b * Rat::from_integer(s.into()),
                b: Zero::zero(),
                d: 0,
            },
            None if Zero::is_zero(&b) => QExt { a, b, d: 0 },
            None => QExt { a, b, d },
        }
    }

    pub fn rational(a: Rat) -> Self {
        QExt {
            a,
            b: Zero::zero(),
            d: 0,
        }
    }

    /// `√d`.
    pub fn sqrt(d: i64) -> Self {
        QExt::new(Zero::zero(), One::one(), d)
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    fn common_d(&self, other: &Self) -> i64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (d, e) => {
                assert_eq!(d, e, "mixing quadratic extensions");
                d
            }
        }
    }

    pub fn conj(&self) -> Self {
        QExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Scalar for QExt {
    fn zero() -> Self {
        QExt::rational(Zero::zero())
    }
    fn one() -> Self {
        QExt::rational(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        let d = self.common_d(o);
        QExt::new(&self.a + &o.a, &self.b + &o.b, d)
    }
    fn mul(&self, o: &Self) -> Self {
        let d = self.common_d(o);
        let dd = Rat::from_integer(d.into());
        QExt::new(
            &self.a * &o.a + &self.b * &o.b * dd,
            &self.a * &o.b + &o.a * &self.b,
            d,
        )
    }
    fn neg(&self) -> Self {
        QExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        let norm = &self.a * &self.a - &self.b * &self.b * Rat::from_integer(self.d.into());
        let c = self.conj();
        Some(QExt::new(&c.a / &norm, &c.b / &norm, self.d))
    }
    fn from_rat(r: Rat) -> Self {
        QExt::rational(r)
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            return f.write_str(&fmt_rat(&self.a));
        }
        let coef = |b: &Rat| {
            if b.is_one() {
                String::new()
            } else {
                fmt_rat(b)
            }
        };
        if Zero::is_zero(&self.a) {
            if (-&self.b).is_one() {
                return write!(f, "-√{}", self.d);
            }
            return write!(f, "{}√{}", coef(&self.b), self.d);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}√{}", fmt_rat(&self.a), coef(&-&self.b), self.d)
        } else {
            write!(f, "{}+{}√{}", fmt_rat(&self.a), coef(&self.b), self.d)
        }
    }
}

/// Renders a rational entry as `a` or `a/b`.
pub fn rat_to_string(r: &Rat) -> String {
    fmt_rat(r)
}

/// Integer value of a rational known to be integral and small.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    r.is_integer().then(|| r.numer().to_i64()).flatten()
}
