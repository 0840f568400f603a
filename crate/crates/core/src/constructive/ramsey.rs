//! Ramsey upper bounds and the layer independence bounds built from them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound on `R(n1, n2)` from `R(a, b) ≤ R(a-1, b) + R(a, b-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyBound {
    pub n1: usize,
    pub n2: usize,
    #[serde(serialize_with = "as_decimal")]
    pub value: BigUint,
    /// The bound equals the Ramsey number (`min(n1, n2) ≤ 2`, or `(3, 3)`).
    pub exact: bool,
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `C(top, k)` for a small `k`.
fn binomial(top: &BigUint, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (top - BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}

/// The binomial closed form `C(n1+n2-2, n1-1)` of the recursion with
/// `R(1, k) = R(k, 1) = 1`.
pub fn ramsey_upper(n1: usize, n2: usize) -> Result<RamseyBound> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidInput(format!(
            "Ramsey arguments must be positive, got ({n1}, {n2})"
        )));
    }
    let (small, large) = (n1.min(n2), n1.max(n2));
    let value = binomial(&BigUint::from(small + large - 2), small - 1);
    let exact = small <= 2 || (n1, n2) == (3, 3);
    Ok(RamseyBound { n1, n2, value, exact })
}

fn ramsey_upper_big(n: usize, m: &BigUint) -> BigUint {
    // C(n + m - 2, n - 1), symmetric in its arguments
    binomial(&(m + BigUint::from(n) - 2u32), n - 1)
}

/// Brute force: every graph on 6 labelled vertices has a triangle or an
/// independent 3-set, and the pentagon has neither.
pub fn verify_ramsey_33() -> bool {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let triples: Vec<[usize; 3]> = (0..6)
        .flat_map(|a| (a + 1..6).flat_map(move |b| (b + 1..6).map(move |c| [a, b, c])))
        .collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let tri_bits: Vec<[usize; 3]> = triples
        .iter()
        .map(|&[a, b, c]| [index(a, b), index(a, c), index(b, c)])
        .collect();
    let all_six = (0u32..1 << 15).all(|edges| {
        tri_bits.iter().any(|t| {
            let on = t.iter().filter(|&&e| edges >> e & 1 == 1).count();
            on == 0 || on == 3
        })
    });
    all_six && pentagon_is_ramsey_free()
}

fn pentagon_is_ramsey_free() -> bool {
    let adj = |a: usize, b: usize| (a + 1) % 5 == b || (b + 1) % 5 == a;
    (0..5).all(|a| {
        (a + 1..5).all(|b| {
            (b + 1..5).all(|c| {
                let on = [adj(a, b), adj(a, c), adj(b, c)].iter().filter(|&&x| x).count();
                on != 0 && on != 3
            })
        })
    })
}

/// Above this bit length a layer bound is no longer computed; the entry
/// becomes [`Bound::AtLeast`] the last computed value.
pub const BOUND_BIT_CAP: u64 = 1 << 16;

/// A layer bound. Very large values are replaced by a lower bound on the true
/// value, which keeps `admits` sound: anything below a lower bound of the
/// bound is below the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Exact(BigUint),
    AtLeast(BigUint),
}

impl Bound {
    pub fn value(&self) -> &BigUint {
        match self {
            Bound::Exact(v) | Bound::AtLeast(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Bound::Exact(_))
    }

    /// `k` is certainly at most the bound.
    pub fn admits(&self, k: usize) -> bool {
        BigUint::from(k) <= *self.value()
    }

    pub fn to_usize(&self) -> Option<usize> {
        match self {
            Bound::Exact(v) => v.to_usize(),
            Bound::AtLeast(_) => None,
        }
    }

    /// Sum of bounds; inexact if any term is.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a Bound>) -> Bound {
        let mut total = BigUint::default();
        let mut exact = true;
        for t in terms {
            total += t.value();
            exact &= t.is_exact();
        }
        if exact {
            Bound::Exact(total)
        } else {
            Bound::AtLeast(total)
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.value().to_string();
        if let Bound::AtLeast(_) = self {
            f.write_str(">=")?;
        }
        if digits.len() <= 40 {
            f.write_str(&digits)
        } else {
            write!(f, "{}.{}e{}", &digits[..1], &digits[1..8], digits.len() - 1)
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Margin `max(⌈(n²-n-2)/2⌉, n)` kept at each end of the spine.
pub fn spine_margin(n: usize) -> usize {
    ((n * n - n - 2).div_ceil(2)).max(n)
}

/// Independence bounds for layers `0..2·margin`: the first is
/// `2⌈margin/2⌉`, then `a ↦ (n-1)·R_ub(n, a+1) - 1`.
pub fn alpha_sequence(n: usize) -> Result<Vec<Bound>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n must be at least 2, got {n}")));
    }
    let margin = spine_margin(n);
    let mut seq = Vec::with_capacity(2 * margin);
    seq.push(Bound::Exact(BigUint::from(2 * margin.div_ceil(2))));
    while seq.len() < 2 * margin {
        let prev = seq.last().expect("nonempty");
        let next = match prev {
            // the sequence is nondecreasing after the first entry
            Bound::AtLeast(v) => Bound::AtLeast(v.clone()),
            Bound::Exact(v) if v.bits().saturating_mul(n as u64 - 1) > BOUND_BIT_CAP => {
                Bound::AtLeast(v.clone())
            }
            Bound::Exact(v) => {
                let r = ramsey_upper_big(n, &(v + 1u32));
                Bound::Exact(r * BigUint::from(n - 1) - 1u32)
            }
        };
        seq.push(next);
    }
    Ok(seq)
}
