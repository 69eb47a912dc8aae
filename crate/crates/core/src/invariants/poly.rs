//! Polynomials on `Hom(S,V) ⊕ Hom(V,S) ⊕ End(S)` with `dim S = 2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector over the `4n + 4` coordinates.
pub type Monomial = Vec<u8>;

/// Sparse polynomial with integer coefficients.
pub type Poly = BTreeMap<Monomial, i64>;

/// Coordinates `x_{ia}` (rows of `x`), `y_{ai}` (columns of `y`) and `p_{ab}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRingSpec {
    pub n: usize,
}

impl PolyRingSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("n must be positive".into()));
        }
        Ok(PolyRingSpec { n })
    }

    pub fn num_vars(&self) -> usize {
        4 * self.n + 4
    }

    pub fn x(&self, i: usize, a: usize) -> usize {
        2 * i + a
    }

    pub fn y(&self, a: usize, i: usize) -> usize {
        2 * self.n + 2 * i + a
    }

    pub fn p(&self, a: usize, b: usize) -> usize {
        4 * self.n + 2 * a + b
    }

    pub fn var(&self, v: usize) -> Poly {
        let mut m = vec![0; self.num_vars()];
        m[v] = 1;
        Poly::from([(m, 1)])
    }

    pub fn one(&self) -> Poly {
        Poly::from([(vec![0; self.num_vars()], 1)])
    }

    /// Torus weight `(w₁, w₂)` of a monomial: `x_{ia}` has `−ε_a`,
    /// `y_{ai}` has `+ε_a`, `p_{ab}` has `ε_a − ε_b`.
    pub fn weight(&self, m: &[u8]) -> [i32; 2] {
        let mut w = [0i32; 2];
        for i in 0..self.n {
            for a in 0..2 {
                w[a] -= m[self.x(i, a)] as i32;
                w[a] += m[self.y(a, i)] as i32;
            }
        }
        for a in 0..2 {
            for b in 0..2 {
                let e = m[self.p(a, b)] as i32;
                w[a] += e;
                w[b] -= e;
            }
        }
        w
    }

    pub fn multidegree(&self, m: &[u8]) -> Multidegree {
        Multidegree {
            dx: (0..self.n)
                .map(|i| (m[self.x(i, 0)] + m[self.x(i, 1)]) as u32)
                .collect(),
            dy: (0..self.n)
                .map(|i| (m[self.y(0, i)] + m[self.y(1, i)]) as u32)
                .collect(),
            dp: (0..2)
                .flat_map(|a| (0..2).map(move |b| (a, b)))
                .map(|(a, b)| m[self.p(a, b)] as u32)
                .sum(),
        }
    }

    /// All monomials of a multidegree, in lexicographic order.
    pub fn monomials(&self, d: &Multidegree) -> Vec<Monomial> {
        let mut out = vec![vec![0u8; self.num_vars()]];
        let mut blocks: Vec<(Vec<usize>, u32)> = Vec::new();
        for i in 0..self.n {
            blocks.push((vec![self.x(i, 0), self.x(i, 1)], d.dx[i]));
            blocks.push((vec![self.y(0, i), self.y(1, i)], d.dy[i]));
        }
        blocks.push((
            vec![self.p(0, 0), self.p(0, 1), self.p(1, 0), self.p(1, 1)],
            d.dp,
        ));
        for (vars, deg) in blocks {
            let splits = compositions(deg, vars.len());
            out = out
                .into_iter()
                .flat_map(|m| {
                    let vars = &vars;
                    splits.iter().map(move |c| {
                        let mut m = m.clone();
                        for (&v, &e) in vars.iter().zip(c) {
                            m[v] = e as u8;
                        }
                        m
                    })
                })
                .collect();
        }
        out.sort();
        out
    }

    /// Number of monomials of a multidegree, without listing them.
    pub fn block_size(&self, d: &Multidegree) -> usize {
        let mut size: usize = 1;
        for &e in d.dx.iter().chain(&d.dy) {
            size = size.saturating_mul(e as usize + 1);
        }
        let p = d.dp as usize;
        size.saturating_mul((p + 1) * (p + 2) * (p + 3) / 6)
    }

    /// Image of the coordinate `v` under `E_{cd} ∈ gl₂`, acting by
    /// `x ↦ −xX`, `y ↦ Xy`, `p ↦ Xp − pX`.
    fn derivation_image(&self, c: usize, d: usize, v: usize) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            if v == self.x(i, d) {
                out.push((self.x(i, c), -1));
            }
            if v == self.y(c, i) {
                out.push((self.y(d, i), 1));
            }
        }
        for b in 0..2 {
            if v == self.p(c, b) {
                out.push((self.p(d, b), 1));
            }
        }
        for a in 0..2 {
            if v == self.p(a, d) {
                out.push((self.p(a, c), -1));
            }
        }
        out
    }

    /// `E_{cd}` as a derivation on polynomials.
    pub fn apply_gl(&self, c: usize, d: usize, f: &Poly) -> Poly {
        let mut out = Poly::new();
        for (m, &coef) in f {
            for v in 0..self.num_vars() {
                let e = m[v];
                if e == 0 {
                    continue;
                }
                for (w, s) in self.derivation_image(c, d, v) {
                    let mut m2 = m.clone();
                    m2[v] -= 1;
                    m2[w] += 1;
                    *out.entry(m2).or_insert(0) += coef * s * e as i64;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .rev()
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

pub fn mul(f: &Poly, g: &Poly) -> Poly {
    let mut out = Poly::new();
    for (a, &ca) in f {
        for (b, &cb) in g {
            let m: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn add(f: &Poly, g: &Poly, s: i64) -> Poly {
    let mut out = f.clone();
    for (m, &c) in g {
        *out.entry(m.clone()).or_insert(0) += s * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Degrees in the rows of `x`, the columns of `y`, and in `p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Multidegree {
    pub dx: Vec<u32>,
    pub dy: Vec<u32>,
    pub dp: u32,
}

impl Multidegree {
    pub fn zero(n: usize) -> Self {
        Multidegree {
            dx: vec![0; n],
            dy: vec![0; n],
            dp: 0,
        }
    }

    pub fn total(&self) -> u32 {
        self.dx.iter().sum::<u32>() + self.dy.iter().sum::<u32>() + self.dp
    }

    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        let sub = |a: &[u32], b: &[u32]| -> Option<Vec<u32>> {
            a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
        };
        Some(Multidegree {
            dx: sub(&self.dx, &other.dx)?,
            dy: sub(&self.dy, &other.dy)?,
            dp: self.dp.checked_sub(other.dp)?,
        })
    }

    /// Every multidegree with `n` rows and total degree at most `max`.
    pub fn all_up_to(n: usize, max: u32) -> Vec<Multidegree> {
        let mut out = Vec::new();
        for t in 0..=max {
            for c in compositions(t, 2 * n + 1) {
                out.push(Multidegree {
                    dx: c[..n].to_vec(),
                    dy: c[n..2 * n].to_vec(),
                    dp: c[2 * n],
                });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "x({}) y({}) p{}", join(&self.dx), join(&self.dy), self.dp)
    }
}
