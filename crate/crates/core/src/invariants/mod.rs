//! Bounded check that the `GL(S)`-invariants of `Hom(S,V) ⊕ Hom(V,S) ⊕
//! End(S)` are generated by the entries of `xy`, `xpy`, `det p` and `tr p`.
//!
//! Both sides are computed block by block in the `(rows of x, columns of y,
//! degree in p)` multigrading, with exact arithmetic.

pub mod linalg;
pub mod poly;

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use poly::{Multidegree, Poly, PolyRingSpec};

pub const DEFAULT_BLOCK_LIMIT: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub multidegree: Multidegree,
    #[serde(skip)]
    pub poly: Poly,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub ring: PolyRingSpec,
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    /// Entries of `xy` and `xpy`, then `det p`, `tr p`.
    pub fn standard(ring: PolyRingSpec) -> Self {
        let n = ring.n;
        let r = &ring;
        let mut generators = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut f = Poly::new();
                for a in 0..2 {
                    f = poly::add(&f, &poly::mul(&r.var(r.x(i, a)), &r.var(r.y(a, j))), 1);
                }
                generators.push(ring.generator(format!("(xy)[{i},{j}]"), f));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut f = Poly::new();
                for a in 0..2 {
                    for b in 0..2 {
                        let t = poly::mul(
                            &poly::mul(&r.var(r.x(i, a)), &r.var(r.p(a, b))),
                            &r.var(r.y(b, j)),
                        );
                        f = poly::add(&f, &t, 1);
                    }
                }
                generators.push(ring.generator(format!("(xpy)[{i},{j}]"), f));
            }
        }
        let det = poly::add(
            &poly::mul(&r.var(r.p(0, 0)), &r.var(r.p(1, 1))),
            &poly::mul(&r.var(r.p(0, 1)), &r.var(r.p(1, 0))),
            -1,
        );
        generators.push(ring.generator("det p".into(), det));
        let tr = poly::add(&r.var(r.p(0, 0)), &r.var(r.p(1, 1)), 1);
        generators.push(ring.generator("tr p".into(), tr));
        GeneratorSet { ring, generators }
    }

    /// The same set with the named generators removed.
    pub fn without(mut self, names: &[&str]) -> Self {
        self.generators.retain(|g| !names.contains(&g.name.as_str()));
        self
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Names of generators not killed by `E₁₂`, `E₂₁`, `E₁₁`, `E₂₂`.
    pub fn non_invariant(&self) -> Vec<String> {
        self.generators
            .iter()
            .filter(|g| {
                (0..2)
                    .flat_map(|c| (0..2).map(move |d| (c, d)))
                    .any(|(c, d)| !self.ring.apply_gl(c, d, &g.poly).is_empty())
            })
            .map(|g| g.name.clone())
            .collect()
    }
}

impl PolyRingSpec {
    fn generator(&self, name: String, poly: Poly) -> Generator {
        let m = poly.keys().next().expect("generator is nonzero");
        Generator {
            name,
            multidegree: self.multidegree(m),
            poly,
        }
    }

    fn check_block(&self, d: &Multidegree, limit: usize) -> Result<()> {
        if d.dx.len() != self.n || d.dy.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "multidegree {d} does not have {} rows",
                self.n
            )));
        }
        let size = self.block_size(d);
        if size > limit {
            return Err(Error::BlockTooLarge {
                multidegree: d.to_string(),
                size,
                limit,
            });
        }
        Ok(())
    }
}

fn to_rational(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Dimension of the invariants in one multidegree: the weight-zero
/// monomials modulo the image constraints of `E₁₂` and `E₂₁`.
pub fn invariant_dimension(ring: &PolyRingSpec, d: &Multidegree, limit: usize) -> Result<usize> {
    ring.check_block(d, limit)?;
    let zero: Vec<_> = ring
        .monomials(d)
        .into_iter()
        .filter(|m| ring.weight(m) == [0, 0])
        .collect();
    if zero.is_empty() {
        return Ok(0);
    }
    // Columns: weight-zero monomials. Rows: monomials of weight ±(ε₁ − ε₂)
    // reached by E₁₂ and E₂₁.
    let mut row_index: BTreeMap<(usize, Vec<u8>), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for (col, m) in zero.iter().enumerate() {
        let f = Poly::from([(m.clone(), 1)]);
        for (op, (c, dd)) in [(0, 1), (1, 0)].into_iter().enumerate() {
            for (m2, coef) in ring.apply_gl(c, dd, &f) {
                let next = row_index.len();
                let row = *row_index.entry((op, m2)).or_insert(next);
                entries.push((row, col, coef));
            }
        }
    }
    let mut rows = vec![vec![to_rational(0); zero.len()]; row_index.len()];
    for (r, c, v) in entries {
        rows[r][c] += to_rational(v);
    }
    Ok(zero.len() - linalg::rank(rows))
}

/// Ways of writing `d` as a sum of generator multidegrees, as multisets of
/// generator indices.
fn factorizations(gens: &[Generator], d: &Multidegree) -> Vec<Vec<usize>> {
    fn go(
        gens: &[Generator],
        d: &Multidegree,
        start: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if d.total() == 0 {
            out.push(prefix.clone());
            return;
        }
        for (i, g) in gens.iter().enumerate().skip(start) {
            if g.multidegree.total() == 0 {
                continue;
            }
            if let Some(rest) = d.checked_sub(&g.multidegree) {
                prefix.push(i);
                go(gens, &rest, i, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(gens, d, 0, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the span of all products of generators in multidegree `d`.
pub fn subalgebra_dimension(gens: &GeneratorSet, d: &Multidegree, limit: usize) -> Result<usize> {
    let ring = &gens.ring;
    ring.check_block(d, limit)?;
    let products: Vec<Poly> = factorizations(&gens.generators, d)
        .into_iter()
        .map(|f| {
            f.iter()
                .fold(ring.one(), |acc, &i| poly::mul(&acc, &gens.generators[i].poly))
        })
        .collect();
    if products.is_empty() {
        return Ok(0);
    }
    let mut col_index: BTreeMap<&[u8], usize> = BTreeMap::new();
    for p in &products {
        for m in p.keys() {
            let next = col_index.len();
            col_index.entry(m.as_slice()).or_insert(next);
        }
    }
    let rows = products
        .iter()
        .map(|p| {
            let mut row = vec![to_rational(0); col_index.len()];
            for (m, &c) in p {
                row[col_index[m.as_slice()]] = to_rational(c);
            }
            row
        })
        .collect();
    Ok(linalg::rank(rows))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockResult {
    pub multidegree: Multidegree,
    pub invariant_dim: usize,
    pub subalgebra_dim: usize,
}

impl BlockResult {
    pub fn agrees(&self) -> bool {
        self.invariant_dim == self.subalgebra_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub n: usize,
    pub max_total_degree: u32,
    pub generators: Vec<String>,
    pub non_invariant_generators: Vec<String>,
    pub blocks: Vec<BlockResult>,
    pub discrepancies: Vec<BlockResult>,
}

impl GeneratorReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty() && self.non_invariant_generators.is_empty()
    }
}

/// Compares invariants and the generated subalgebra in every multidegree of
/// total degree at most `max_total_degree`. Blocks run in parallel; the
/// report is sorted by multidegree.
pub fn verify_generators(gens: &GeneratorSet, max_total_degree: u32, limit: usize) -> Result<GeneratorReport> {
    let ring = gens.ring;
    let mut blocks: Vec<BlockResult> = Multidegree::all_up_to(ring.n, max_total_degree)
        .into_par_iter()
        .map(|d| {
            Ok(BlockResult {
                invariant_dim: invariant_dimension(&ring, &d, limit)?,
                subalgebra_dim: subalgebra_dimension(gens, &d, limit)?,
                multidegree: d,
            })
        })
        .collect::<Result<_>>()?;
    blocks.sort_by(|a, b| {
        (a.multidegree.total(), &a.multidegree).cmp(&(b.multidegree.total(), &b.multidegree))
    });
    let discrepancies = blocks.iter().filter(|b| !b.agrees()).cloned().collect();
    Ok(GeneratorReport {
        n: ring.n,
        max_total_degree,
        generators: gens.generators.iter().map(|g| g.name.clone()).collect(),
        non_invariant_generators: gens.non_invariant(),
        blocks,
        discrepancies,
    })
}
