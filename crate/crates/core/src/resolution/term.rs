use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chars::{schur_dim, Character};
use crate::error::{Error, Result};
use crate::weight::Weight;

/// One equivariant summand of a resolution: an irreducible
/// `S^{γ_1}(F_1) ⊗ … ⊗ (det F_1)^{a_1} ⊗ …` placed in homological degree
/// `hdeg` with R-charge `rcharge`.
///
/// The Schur data is stored normalised (last part zero), the remaining
/// powers of det are kept in `twist`, so the representation is unique.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BundleTerm {
    factors: Vec<Weight>,
    twist: Vec<i32>,
    hdeg: i32,
    rcharge: i32,
}

impl BundleTerm {
    /// Builds a term from the full (un-normalised) weight on each factor.
    pub fn new(full: Vec<Weight>, hdeg: i32, rcharge: i32) -> Self {
        let (factors, twist) = full.iter().map(Weight::normalized).unzip();
        BundleTerm {
            factors,
            twist,
            hdeg,
            rcharge,
        }
    }

    pub fn factors(&self) -> &[Weight] {
        &self.factors
    }

    pub fn twist(&self) -> &[i32] {
        &self.twist
    }

    pub fn hdeg(&self) -> i32 {
        self.hdeg
    }

    pub fn rcharge(&self) -> i32 {
        self.rcharge
    }

    /// Position on the page once R-charge is taken into account: a map of
    /// R-charge `r` has degree one when its source sits `r − 1` columns to
    /// the right of its target.
    pub fn column(&self) -> i32 {
        self.hdeg - self.rcharge
    }

    /// Weight on factor `i` with the det twist folded back in.
    pub fn full_weight(&self, i: usize) -> Weight {
        self.factors[i].twist(self.twist[i])
    }

    pub fn full_weights(&self) -> Vec<Weight> {
        (0..self.factors.len()).map(|i| self.full_weight(i)).collect()
    }

    pub fn shifted(&self, dh: i32, dr: i32) -> BundleTerm {
        BundleTerm {
            hdeg: self.hdeg + dh,
            rcharge: self.rcharge + dr,
            ..self.clone()
        }
    }

    pub fn rank(&self) -> u64 {
        self.factors.iter().map(schur_dim).product()
    }

    pub fn character(&self) -> Character {
        Character::irreducible(self.full_weights())
    }

    fn sort_key(&self) -> (i32, i32, &[Weight], &[i32], i32) {
        (
            self.column(),
            self.hdeg,
            &self.factors,
            &self.twist,
            self.rcharge,
        )
    }
}

// Wire form: {s1, s2, twist, hdeg, rcharge}; s2 is absent for single-factor
// (e.g. GL(H)) terms.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    s1: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s2: Option<Weight>,
    twist: Vec<i32>,
    hdeg: i32,
    rcharge: i32,
}

impl Serialize for BundleTerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.factors.is_empty() || self.factors.len() > 2 {
            return Err(serde::ser::Error::custom(
                "bundle terms serialise with one or two factors",
            ));
        }
        TermWire {
            s1: self.factors[0].clone(),
            s2: self.factors.get(1).cloned(),
            twist: self.twist.clone(),
            hdeg: self.hdeg,
            rcharge: self.rcharge,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BundleTerm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = TermWire::deserialize(d)?;
        let mut factors = vec![wire.s1];
        factors.extend(wire.s2);
        if wire.twist.len() != factors.len() {
            return Err(serde::de::Error::custom("twist length must match factor count"));
        }
        let full = factors
            .iter()
            .zip(&wire.twist)
            .map(|(f, &t)| f.twist(t))
            .collect();
        let term = BundleTerm::new(full, wire.hdeg, wire.rcharge);
        if term.factors != factors {
            return Err(serde::de::Error::custom("Schur data is not normalised"));
        }
        Ok(term)
    }
}

/// A complex with its differentials forgotten: a finitely supported,
/// canonically sorted multiset of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTermList {
    label: String,
    ranks: Vec<usize>,
    terms: Vec<BundleTerm>,
}

/// Columns of a complex, left to right, each a sorted multiset of full
/// weights. This is what a displayed table records.
pub type DisplayTable = Vec<Vec<Vec<Weight>>>;

impl GradedTermList {
    pub fn new(label: impl Into<String>, ranks: Vec<usize>) -> Self {
        GradedTermList {
            label: label.into(),
            ranks,
            terms: Vec::new(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn terms(&self) -> &[BundleTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, term: BundleTerm) -> Result<()> {
        let ranks: Vec<usize> = term.factors.iter().map(Weight::rank).collect();
        if ranks != self.ranks {
            return Err(Error::RankMismatch {
                left: self.ranks.clone(),
                right: ranks,
            });
        }
        let pos = self
            .terms
            .partition_point(|t| t.sort_key() <= term.sort_key());
        self.terms.insert(pos, term);
        Ok(())
    }

    pub fn extend<I: IntoIterator<Item = BundleTerm>>(&mut self, terms: I) -> Result<()> {
        for t in terms {
            self.push(t)?;
        }
        Ok(())
    }

    /// Every term moved by `dh` homological degrees and `dr` units of
    /// R-charge.
    pub fn shifted(&self, dh: i32, dr: i32) -> GradedTermList {
        GradedTermList {
            label: self.label.clone(),
            ranks: self.ranks.clone(),
            terms: self.terms.iter().map(|t| t.shifted(dh, dr)).collect(),
        }
    }

    /// `E[−s]`: moves the complex `s` steps to the right.
    pub fn shift(&self, s: i32) -> GradedTermList {
        self.shifted(s, 0)
    }

    pub fn by_column(&self) -> BTreeMap<i32, Vec<&BundleTerm>> {
        let mut out: BTreeMap<i32, Vec<&BundleTerm>> = BTreeMap::new();
        for t in &self.terms {
            out.entry(t.column()).or_default().push(t);
        }
        out
    }

    pub fn by_hdeg(&self) -> BTreeMap<i32, Vec<&BundleTerm>> {
        let mut out: BTreeMap<i32, Vec<&BundleTerm>> = BTreeMap::new();
        for t in &self.terms {
            out.entry(t.hdeg).or_default().push(t);
        }
        out
    }

    /// Page layout with R-charge taken into account, leftmost column first.
    /// Empty interior columns are kept.
    pub fn display_by_column(&self) -> DisplayTable {
        display(self.terms.iter().map(|t| (t.column(), t)))
    }

    /// Ordinary homological layout, highest resolution index on the left.
    pub fn display_by_hdeg(&self) -> DisplayTable {
        display(self.terms.iter().map(|t| (t.hdeg, t)))
    }

    /// `Σ (−1)^column [term]`, the class that term-level cancellation
    /// preserves.
    pub fn euler_character(&self) -> Character {
        signed_sum(&self.ranks, self.terms.iter().map(|t| (t.column(), t)))
    }

    /// `Σ (−1)^hdeg [term]`.
    pub fn euler_character_by_hdeg(&self) -> Character {
        signed_sum(&self.ranks, self.terms.iter().map(|t| (t.hdeg, t)))
    }

    /// Distinct full weights occurring on one factor.
    pub fn factor_contents(&self, factor: usize) -> std::collections::BTreeSet<Weight> {
        self.terms.iter().map(|t| t.full_weight(factor)).collect()
    }
}

fn display<'a, I>(placed: I) -> DisplayTable
where
    I: Iterator<Item = (i32, &'a BundleTerm)>,
{
    let mut cols: BTreeMap<i32, Vec<Vec<Weight>>> = BTreeMap::new();
    for (c, t) in placed {
        cols.entry(c).or_default().push(t.full_weights());
    }
    let (Some(&lo), Some(&hi)) = (cols.keys().next(), cols.keys().next_back()) else {
        return Vec::new();
    };
    (lo..=hi)
        .map(|c| {
            let mut col = cols.remove(&c).unwrap_or_default();
            col.sort();
            col
        })
        .collect()
}

fn signed_sum<'a, I>(ranks: &[usize], placed: I) -> Character
where
    I: Iterator<Item = (i32, &'a BundleTerm)>,
{
    let mut acc = Character::zero(ranks.to_vec());
    for (c, t) in placed {
        let sign = if c.rem_euclid(2) == 0 { 1 } else { -1 };
        acc.add_term(t.full_weights(), sign)
            .expect("terms share the list's ranks");
    }
    acc
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColumnWire {
    column: i32,
    terms: Vec<BundleTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexWire {
    label: String,
    columns: Vec<ColumnWire>,
}

impl Serialize for GradedTermList {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let columns = self
            .by_column()
            .into_iter()
            .map(|(column, terms)| ColumnWire {
                column,
                terms: terms.into_iter().cloned().collect(),
            })
            .collect();
        ComplexWire {
            label: self.label.clone(),
            columns,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedTermList {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = ComplexWire::deserialize(d)?;
        let terms: Vec<BundleTerm> = wire.columns.into_iter().flat_map(|c| c.terms).collect();
        let ranks = terms
            .first()
            .map(|t| t.factors.iter().map(Weight::rank).collect())
            .unwrap_or_default();
        let mut out = GradedTermList::new(wire.label, ranks);
        out.extend(terms).map_err(serde::de::Error::custom)?;
        Ok(out)
    }
}
