//! Generators for the parameterised graph families.
//!
//! Every generator uses a fixed labelling so callers can address named
//! vertices by formula:
//!
//! * `Complete(n)`, `Path(n)`, `Cycle(n)`: vertices `0..n`, path and cycle
//!   edges `i ~ i+1` (and `n-1 ~ 0` for the cycle).
//! * `Star(n)` (`K_{1,n}`, order `n+1`): centre `0`, leaves `1..=n`.
//! * `KStar(m)`: clique vertex `x_i ↦ i-1`, pendant `y_i ↦ m+i-1`.
//! * `F1..F4(m,n)`: `x_1 ↦ 0`, `x_2 ↦ 1`, `y_i ↦ 1+i`, `z_i ↦ 1+m+i`.
//! * `H1..H4(s,t)`: `u^(j)_i ↦ (i-1)t + (j-1)`, `v_i ↦ st + 2(i-1)`,
//!   `w_i ↦ st + 2(i-1) + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Symbolic descriptor of a graph family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`: the star with `n` leaves.
    Star(usize),
    /// `K*_m`: a clique on `x_1..x_m` with a pendant `y_i` at each `x_i`.
    KStar(usize),
    F1(usize, usize),
    F2(usize, usize),
    F3(usize, usize),
    F4(usize, usize),
    H1(usize, usize),
    H2(usize, usize),
    H3(usize, usize),
    H4(usize, usize),
}

use FamilySpec::*;

impl FamilySpec {
    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidSpec {
            spec: self.to_string(),
            reason: reason.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Complete(n) | Path(n) | Star(n) | KStar(n) if n < 1 => {
                Err(self.invalid("parameter must be at least 1"))
            }
            Cycle(n) if n < 3 => Err(self.invalid("cycle length must be at least 3")),
            F1(m, n) | F2(m, n) | F3(m, n) | F4(m, n) if m < 1 || n < 1 => {
                Err(self.invalid("m and n must be at least 1"))
            }
            H1(s, t) | H2(s, t) | H3(s, t) | H4(s, t) if s < 2 || t < 3 => {
                Err(self.invalid("s must be at least 2 and t at least 3"))
            }
            _ => Ok(()),
        }
    }

    /// `(|V|, |E|)` by closed formula.
    pub fn order_and_size(&self) -> Result<(usize, usize)> {
        self.validate()?;
        Ok(match *self {
            Complete(n) => (n, n * (n - 1) / 2),
            Path(n) => (n, n - 1),
            Cycle(n) => (n, n),
            Star(n) => (n + 1, n),
            KStar(m) => (2 * m, m * (m - 1) / 2 + m),
            F1(m, n) => (m + n + 2, m + n + 1),
            F2(m, n) => (m + n + 2, m + n + 2),
            F3(m, n) => (m + n + 2, m + n + 2),
            F4(m, n) => (m + n + 2, m + n + 3),
            H1(s, t) => (s * t + 2 * (s - 1), s * (t - 1) + 3 * (s - 1)),
            H2(s, t) => (s * t + 2 * (s - 1), s * (t - 1) + 4 * (s - 1)),
            H3(s, t) => (s * t + 2 * (s - 1), s * (t - 1) + 4 * (s - 1)),
            H4(s, t) => (s * t + 2 * (s - 1), s * (t - 1) + 5 * (s - 1)),
        })
    }

    pub fn generate(&self) -> Result<Graph> {
        let (order, _) = self.order_and_size()?;
        let mut g = Graph::empty(order);
        let mut edge = |u: usize, v: usize| g.add_edge(u, v).expect("labels in range");
        match *self {
            Complete(n) => {
                for u in 0..n {
                    for v in u + 1..n {
                        edge(u, v);
                    }
                }
            }
            Path(n) => (1..n).for_each(|i| edge(i - 1, i)),
            Cycle(n) => (0..n).for_each(|i| edge(i, (i + 1) % n)),
            Star(n) => (1..=n).for_each(|leaf| edge(0, leaf)),
            KStar(m) => {
                for i in 0..m {
                    for j in i + 1..m {
                        edge(i, j);
                    }
                    edge(i, m + i);
                }
            }
            F1(m, n) | F2(m, n) | F3(m, n) | F4(m, n) => {
                let (x1, x2) = (0, 1);
                let y = |i: usize| 1 + i;
                let z = |i: usize| 1 + m + i;
                if matches!(self, F1(..) | F2(..)) {
                    edge(x1, x2);
                    edge(x1, y(1));
                    edge(x1, z(1));
                } else {
                    edge(x1, y(1));
                    edge(x1, z(1));
                    edge(x2, y(1));
                    edge(x2, z(1));
                }
                (1..m).for_each(|i| edge(y(i), y(i + 1)));
                (1..n).for_each(|i| edge(z(i), z(i + 1)));
                if matches!(self, F2(..) | F4(..)) {
                    edge(y(1), z(1));
                }
            }
            H1(s, t) | H2(s, t) | H3(s, t) | H4(s, t) => {
                let u = |i, j| h_u(s, t, i, j);
                for i in 1..=s {
                    (1..t).for_each(|j| edge(u(i, j), u(i, j + 1)));
                }
                for i in 1..s {
                    let (v, w) = (h_v(s, t, i), h_w(s, t, i));
                    edge(v, u(i, t));
                    edge(v, u(i + 1, 1));
                    if matches!(self, H1(..) | H2(..)) {
                        edge(v, w);
                    } else {
                        edge(w, u(i, t));
                        edge(w, u(i + 1, 1));
                    }
                    if matches!(self, H2(..) | H4(..)) {
                        edge(u(i, t), u(i + 1, 1));
                    }
                }
            }
        }
        Ok(g)
    }
}

/// Label of `u^(j)_i` in `H^(k)_{s,t}` (1-based `i`, `j`).
pub fn h_u(_s: usize, t: usize, i: usize, j: usize) -> usize {
    (i - 1) * t + (j - 1)
}

/// Label of `v_i` in `H^(k)_{s,t}`.
pub fn h_v(s: usize, t: usize, i: usize) -> usize {
    s * t + 2 * (i - 1)
}

/// Label of `w_i` in `H^(k)_{s,t}`.
pub fn h_w(s: usize, t: usize, i: usize) -> usize {
    s * t + 2 * (i - 1) + 1
}

/// Label of `y_i` in `F^(k)_{m,n}`.
pub fn f_y(i: usize) -> usize {
    1 + i
}

/// Label of `z_i` in `F^(k)_{m,n}`.
pub fn f_z(m: usize, i: usize) -> usize {
    1 + m + i
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.generate()
}

pub fn order_and_size(spec: &FamilySpec) -> Result<(usize, usize)> {
    spec.order_and_size()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Complete(n) => write!(f, "K({n})"),
            Path(n) => write!(f, "P({n})"),
            Cycle(n) => write!(f, "C({n})"),
            Star(n) => write!(f, "S({n})"),
            KStar(m) => write!(f, "Kstar({m})"),
            F1(m, n) => write!(f, "F1({m},{n})"),
            F2(m, n) => write!(f, "F2({m},{n})"),
            F3(m, n) => write!(f, "F3({m},{n})"),
            F4(m, n) => write!(f, "F4({m},{n})"),
            H1(s, t) => write!(f, "H1({s},{t})"),
            H2(s, t) => write!(f, "H2({s},{t})"),
            H3(s, t) => write!(f, "H3({s},{t})"),
            H4(s, t) => write!(f, "H4({s},{t})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `K(n)`, `P(n)`, `C(n)`, `S(n)`, `Kstar(m)`, `F1(m,n)`..`F4(m,n)`
    /// and `H1(s,t)`..`H4(s,t)`; case-insensitive, whitespace ignored.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidSpec {
            spec: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        let open = compact.find('(').ok_or_else(|| bad("missing `(`"))?;
        let body = compact[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| bad("missing closing `)`"))?;
        let args = body
            .split(',')
            .map(|a| a.parse::<usize>().map_err(|_| bad("parameters must be nonnegative integers")))
            .collect::<Result<Vec<_>>>()?;
        let one = |f: fn(usize) -> FamilySpec| match args[..] {
            [a] => Ok(f(a)),
            _ => Err(bad("expected one parameter")),
        };
        let two = |f: fn(usize, usize) -> FamilySpec| match args[..] {
            [a, b] => Ok(f(a, b)),
            _ => Err(bad("expected two parameters")),
        };
        let spec = match &compact[..open] {
            "k" => one(Complete),
            "p" => one(Path),
            "c" => one(Cycle),
            "s" => one(Star),
            "kstar" | "k*" => one(KStar),
            "f1" => two(F1),
            "f2" => two(F2),
            "f3" => two(F3),
            "f4" => two(F4),
            "h1" => two(H1),
            "h2" => two(H2),
            "h3" => two(H3),
            "h4" => two(H4),
            _ => Err(bad("unknown family")),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}
