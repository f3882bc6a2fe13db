use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Q {
    ratio(1, 2)
}

pub fn midpoint(a: &Q, b: &Q) -> Q {
    (a + b) / int(2)
}

/// Least positive common multiple of two positive rationals.
pub fn lcm(a: &Q, b: &Q) -> Q {
    let num = a.numer().lcm(b.numer());
    let den = a.denom().gcd(b.denom());
    Q::new(num, den)
}

/// `⌈x / p⌉` for positive `p`.
pub fn ceil_div(x: &Q, p: &Q) -> BigInt {
    (x / p).ceil().to_integer()
}

/// `⌊x / p⌋` for positive `p`.
pub fn floor_div(x: &Q, p: &Q) -> BigInt {
    (x / p).floor().to_integer()
}

/// `x mod p` in `[0, p)`.
pub fn modulo(x: &Q, p: &Q) -> Q {
    x - p * Q::from_integer(floor_div(x, p))
}

pub fn times(p: &Q, k: &BigInt) -> Q {
    p * Q::from_integer(k.clone())
}

/// `p/q` in lowest terms, or a bare integer.
pub fn format(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q`, `-p/q` or an integer.
pub fn parse(s: &str) -> Option<Q> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str, signed: bool| {
        let t = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n, true) || !valid(d, false) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

/// An interval endpoint: a rational or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(Q),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Bound::Finite(q) => Some(q),
            _ => None,
        }
    }
}

impl From<Q> for Bound {
    fn from(q: Q) -> Self {
        Bound::Finite(q)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(q) => f.write_str(&format(q)),
        }
    }
}
