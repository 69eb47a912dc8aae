//! Exact character algebra for products of general linear groups.
//!
//! Everything is computed from torus weight multisets: irreducible
//! characters are expanded into their torus weights (Gelfand–Tsetlin
//! patterns), arithmetic happens on the multisets, and results are
//! decomposed back into irreducibles by highest-weight stripping. Nothing
//! (Littlewood–Richardson numbers, plethysms, Cauchy decompositions) is
//! tabulated.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::weight::{is_dominant, partitions_in_box, Weight};

/// A finite multiset of torus weights, with signed multiplicities so that
/// virtual characters can be represented. Weights of a product group
/// `GL_{k_1} × … × GL_{k_r}` are stored concatenated, block by block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCharacter {
    ranks: Vec<usize>,
    weights: BTreeMap<Vec<i32>, i64>,
}

impl TorusCharacter {
    pub fn new(ranks: Vec<usize>) -> Self {
        TorusCharacter {
            ranks,
            weights: BTreeMap::new(),
        }
    }

    pub fn from_weights<I>(ranks: Vec<usize>, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<i32>>,
    {
        let total: usize = ranks.iter().sum();
        let mut out = TorusCharacter::new(ranks);
        for w in weights {
            if w.len() != total {
                return Err(Error::InvalidParameters(format!(
                    "torus weight {w:?} does not have length {total}"
                )));
            }
            out.add(w, 1);
        }
        Ok(out)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, i64)> {
        self.weights.iter().map(|(w, &c)| (w, c))
    }

    pub fn multiplicity(&self, w: &[i32]) -> i64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    /// Signed cardinality: the (virtual) dimension.
    pub fn cardinality(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn add(&mut self, w: Vec<i32>, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.weights.entry(w);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn add_scaled(&mut self, other: &TorusCharacter, c: i64) {
        for (w, m) in other.iter() {
            self.add(w.clone(), c * m);
        }
    }

    /// Character of the tensor product (convolution of multisets).
    pub fn convolve(&self, other: &TorusCharacter) -> Result<TorusCharacter> {
        check_ranks(&self.ranks, &other.ranks)?;
        let mut out = TorusCharacter::new(self.ranks.clone());
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add(a.iter().zip(b).map(|(x, y)| x + y).collect(), ca * cb);
            }
        }
        Ok(out)
    }

    /// External tensor product onto the product group with concatenated ranks.
    pub fn outer(&self, other: &TorusCharacter) -> TorusCharacter {
        let mut ranks = self.ranks.clone();
        ranks.extend_from_slice(&other.ranks);
        let mut out = TorusCharacter::new(ranks);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add(w, ca * cb);
            }
        }
        out
    }

    /// Pushes every weight through `f`, e.g. restriction along a map of tori.
    pub fn map_weights<F>(&self, ranks: Vec<usize>, f: F) -> TorusCharacter
    where
        F: Fn(&[i32]) -> Vec<i32>,
    {
        let mut out = TorusCharacter::new(ranks);
        for (w, c) in self.iter() {
            out.add(f(w), c);
        }
        out
    }

    fn check_genuine(&self) -> Result<()> {
        match self.weights.iter().find(|(_, &c)| c < 0) {
            Some((w, &c)) => Err(Error::NegativeMultiplicity {
                weight: format!("{w:?}"),
                multiplicity: c,
            }),
            None => Ok(()),
        }
    }

    /// Torus weights of `Λ^m`: the `m`-th elementary symmetric combination.
    pub fn exterior_power(&self, m: usize) -> Result<TorusCharacter> {
        self.check_genuine()?;
        Ok(self.power_series(m, binomial)
            .pop()
            .expect("power series has m + 1 entries"))
    }

    /// Torus weights of `Sym^m`: the `m`-th complete homogeneous combination.
    pub fn symmetric_power(&self, m: usize) -> Result<TorusCharacter> {
        self.check_genuine()?;
        Ok(self
            .power_series(m, |c, t| binomial(c + t - 1, t))
            .pop()
            .expect("power series has m + 1 entries"))
    }

    /// All exterior powers `Λ^0 … Λ^dim`.
    pub fn exterior_powers(&self) -> Result<Vec<TorusCharacter>> {
        self.check_genuine()?;
        let dim = self.cardinality() as usize;
        Ok(self.power_series(dim, binomial))
    }

    // Degree-by-degree product of ∏_v (Σ_t coeff(c_v, t) e^{t v}) truncated at m.
    fn power_series<F>(&self, m: usize, coeff: F) -> Vec<TorusCharacter>
    where
        F: Fn(u64, u64) -> u64,
    {
        let width: usize = self.ranks.iter().sum();
        let mut series: Vec<TorusCharacter> = (0..=m)
            .map(|_| TorusCharacter::new(self.ranks.clone()))
            .collect();
        series[0].add(vec![0; width], 1);
        for (v, c) in self.iter() {
            let c = c as u64;
            for j in (1..=m).rev() {
                let mut acc = TorusCharacter::new(self.ranks.clone());
                for t in 1..=j {
                    let k = coeff(c, t as u64);
                    if k == 0 {
                        continue;
                    }
                    for (w, cw) in series[j - t].iter() {
                        let shifted = w
                            .iter()
                            .zip(v)
                            .map(|(a, b)| a + (t as i32) * b)
                            .collect();
                        acc.add(shifted, cw * k as i64);
                    }
                }
                series[j].add_scaled(&acc, 1);
            }
        }
        series
    }

    /// True when the multiset is invariant under permuting coordinates
    /// within each block.
    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(w, c)| {
            let mut offset = 0;
            for &r in &self.ranks {
                for i in offset..offset + r.saturating_sub(1) {
                    let mut s = w.clone();
                    s.swap(i, i + 1);
                    if self.multiplicity(&s) != c {
                        return false;
                    }
                }
                offset += r;
            }
            true
        })
    }
}

/// A virtual character of `GL_{k_1} × … × GL_{k_r}`: a finite map from
/// tuples of dominant weights to nonzero integer multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    ranks: Vec<usize>,
    terms: BTreeMap<Vec<Weight>, i64>,
}

impl Character {
    pub fn zero(ranks: Vec<usize>) -> Self {
        Character {
            ranks,
            terms: BTreeMap::new(),
        }
    }

    pub fn trivial(ranks: Vec<usize>) -> Self {
        let key = ranks.iter().map(|&r| Weight::zero(r)).collect();
        let mut c = Character::zero(ranks);
        c.terms.insert(key, 1);
        c
    }

    /// The irreducible `S^{w_1} ⊠ … ⊠ S^{w_r}`.
    pub fn irreducible(factors: Vec<Weight>) -> Self {
        let ranks = factors.iter().map(Weight::rank).collect();
        let mut c = Character::zero(ranks);
        c.terms.insert(factors, 1);
        c
    }

    /// Single-factor irreducible `S^w` of `GL_k`.
    pub fn gl(w: Weight) -> Self {
        Character::irreducible(vec![w])
    }

    pub fn from_terms<I>(ranks: Vec<usize>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Weight>, i64)>,
    {
        let mut c = Character::zero(ranks);
        for (key, m) in terms {
            c.add_term(key, m)?;
        }
        Ok(c)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Weight>, i64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    /// Number of distinct irreducible summands.
    pub fn num_summands(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, key: &[Weight]) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: Vec<Weight>, m: i64) -> Result<()> {
        let ranks: Vec<usize> = key.iter().map(Weight::rank).collect();
        check_ranks(&self.ranks, &ranks)?;
        if m == 0 {
            return Ok(());
        }
        let e = self.terms.entry(key).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    pub fn plus(&self, other: &Character) -> Result<Character> {
        check_ranks(&self.ranks, &other.ranks)?;
        let mut out = self.clone();
        for (k, m) in other.iter() {
            out.add_term(k.clone(), m)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, c: i64) -> Character {
        let mut out = Character::zero(self.ranks.clone());
        if c != 0 {
            out.terms = self.terms.iter().map(|(k, m)| (k.clone(), m * c)).collect();
        }
        out
    }

    /// True when no multiplicity is negative.
    pub fn is_genuine(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// Signed dimension.
    pub fn dim(&self) -> i64 {
        self.iter()
            .map(|(k, m)| m * k.iter().map(|w| schur_dim(w) as i64).product::<i64>())
            .sum()
    }

    pub fn torus(&self) -> TorusCharacter {
        let mut out = TorusCharacter::new(self.ranks.clone());
        let mut cache = HashMap::new();
        for (k, m) in self.iter() {
            out.add_scaled(&product_torus(k, &mut cache), m);
        }
        out
    }

    /// External tensor product onto the product of both groups.
    pub fn outer(&self, other: &Character) -> Character {
        let mut ranks = self.ranks.clone();
        ranks.extend_from_slice(&other.ranks);
        let mut out = Character::zero(ranks);
        for (a, ma) in self.iter() {
            for (b, mb) in other.iter() {
                let mut key = a.clone();
                key.extend(b.iter().cloned());
                *out.terms.entry(key).or_insert(0) += ma * mb;
            }
        }
        out.terms.retain(|_, v| *v != 0);
        out
    }

    /// Multiplies every term by `(det)^t` on factor `factor`.
    pub fn twist(&self, factor: usize, t: i32) -> Character {
        let mut out = Character::zero(self.ranks.clone());
        for (k, m) in self.iter() {
            let mut key = k.clone();
            key[factor] = key[factor].twist(t);
            out.terms.insert(key, m);
        }
        out
    }

    /// The distinct weights that occur on one factor.
    pub fn factor_contents(&self, factor: usize) -> std::collections::BTreeSet<Weight> {
        self.terms.keys().map(|k| k[factor].clone()).collect()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}·")?;
            }
            let parts: Vec<String> = k.iter().map(Weight::to_string).collect();
            write!(f, "{}", parts.join("⊠"))?;
        }
        Ok(())
    }
}

fn check_ranks(left: &[usize], right: &[usize]) -> Result<()> {
    if left != right {
        return Err(Error::RankMismatch {
            left: left.to_vec(),
            right: right.to_vec(),
        });
    }
    Ok(())
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Weyl dimension formula `∏_{i<j} (w_i − w_j + j − i)/(j − i)`.
pub fn schur_dim(w: &Weight) -> u64 {
    let p = w.parts();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            num *= (p[i] - p[j]) as i128 + (j - i) as i128;
            den *= (j - i) as i128;
        }
    }
    (num / den) as u64
}

/// Full multiset of torus weights of `S^w`.
///
/// The weight is first shifted to a partition by a power of det, the
/// weights are enumerated from Gelfand–Tsetlin patterns (equivalently
/// semistandard tableaux), and the shift is undone.
pub fn torus_weights(w: &Weight) -> TorusCharacter {
    let (lambda, t) = w.normalized();
    let mut memo = HashMap::new();
    let raw = gt_weights(lambda.parts(), &mut memo);
    let mut out = TorusCharacter::new(vec![w.rank()]);
    for (mu, c) in raw.iter() {
        out.add(mu.iter().map(|x| x + t).collect(), *c);
    }
    out
}

type WeightTable = BTreeMap<Vec<i32>, i64>;

fn gt_weights(lambda: &[i32], memo: &mut HashMap<Vec<i32>, WeightTable>) -> WeightTable {
    if let Some(hit) = memo.get(lambda) {
        return hit.clone();
    }
    let mut out = WeightTable::new();
    match lambda.len() {
        0 => {
            out.insert(Vec::new(), 1);
        }
        1 => {
            out.insert(lambda.to_vec(), 1);
        }
        k => {
            let total: i32 = lambda.iter().sum();
            let mut mu = vec![0; k - 1];
            interlacing(lambda, 0, &mut mu, &mut |mu| {
                let last = total - mu.iter().sum::<i32>();
                for (w, c) in gt_weights(mu, memo) {
                    let mut w = w;
                    w.push(last);
                    *out.entry(w).or_insert(0) += c;
                }
            });
        }
    }
    memo.insert(lambda.to_vec(), out.clone());
    out
}

fn interlacing<F: FnMut(&[i32])>(lambda: &[i32], i: usize, mu: &mut Vec<i32>, f: &mut F) {
    if i == mu.len() {
        f(mu);
        return;
    }
    for v in lambda[i + 1]..=lambda[i] {
        mu[i] = v;
        interlacing(lambda, i + 1, mu, f);
    }
}

fn product_torus(
    key: &[Weight],
    cache: &mut HashMap<Weight, TorusCharacter>,
) -> TorusCharacter {
    let mut acc = TorusCharacter::new(Vec::new());
    acc.add(Vec::new(), 1);
    for w in key {
        let t = cache.entry(w.clone()).or_insert_with(|| torus_weights(w));
        acc = acc.outer(t);
    }
    acc
}

/// Decomposes a symmetric torus multiset into irreducibles by repeatedly
/// stripping the character of the lexicographically greatest weight.
/// Negative multiplicities are allowed.
pub fn decompose(tw: &TorusCharacter) -> Result<Character> {
    let ranks = tw.ranks.clone();
    let mut rest = tw.clone();
    let mut out = Character::zero(ranks.clone());
    let mut cache = HashMap::new();
    while let Some((top, &c)) = rest.weights.iter().next_back() {
        let top = top.clone();
        let mut key = Vec::with_capacity(ranks.len());
        let mut offset = 0;
        for &r in &ranks {
            let block = &top[offset..offset + r];
            if !is_dominant(block) {
                return Err(Error::NotSymmetric(top));
            }
            key.push(Weight::new(block.to_vec())?);
            offset += r;
        }
        rest.add_scaled(&product_torus(&key, &mut cache), -c);
        out.terms.insert(key, c);
    }
    Ok(out)
}

/// Character of the tensor product, via torus-weight convolution.
pub fn tensor(a: &Character, b: &Character) -> Result<Character> {
    check_ranks(&a.ranks, &b.ranks)?;
    decompose(&a.torus().convolve(&b.torus())?)
}

/// Character of `Λ^m` of a genuine representation.
pub fn exterior_power(m: usize, c: &Character) -> Result<Character> {
    if !c.is_genuine() {
        return Err(negative(c));
    }
    decompose(&c.torus().exterior_power(m)?)
}

/// Character of `Sym^m` of a genuine representation.
pub fn symmetric_power(m: usize, c: &Character) -> Result<Character> {
    if !c.is_genuine() {
        return Err(negative(c));
    }
    decompose(&c.torus().symmetric_power(m)?)
}

fn negative(c: &Character) -> Error {
    let (k, m) = c
        .iter()
        .find(|(_, m)| *m < 0)
        .expect("caller checked for a negative multiplicity");
    Error::NegativeMultiplicity {
        weight: k.iter().map(Weight::to_string).collect::<Vec<_>>().join("⊠"),
        multiplicity: m,
    }
}

/// `(w_1,…,w_k) ↦ (−w_k,…,−w_1)` on every factor of every key.
pub fn dualize(c: &Character) -> Character {
    let mut out = Character::zero(c.ranks.clone());
    for (k, m) in c.iter() {
        out.terms.insert(k.iter().map(Weight::dual).collect(), m);
    }
    out
}

/// The summands `S^λ A ⊗ S^{λ'} B` of `Λ^m(A ⊗ B)` for `rank A = rank_a`,
/// `dim B = dim_b`, each occurring once.
pub fn cauchy_exterior(m: usize, rank_a: usize, dim_b: usize) -> Vec<(Weight, Weight)> {
    partitions_in_box(m as i32, rank_a, dim_b as i32)
        .into_iter()
        .map(|lambda| {
            let a = Weight::from_partition(&lambda, rank_a).expect("rows bounded by rank_a");
            let conj = a.conjugate_partition();
            let b = Weight::from_partition(&conj, dim_b).expect("width bounded by dim_b");
            (a, b)
        })
        .collect()
}
