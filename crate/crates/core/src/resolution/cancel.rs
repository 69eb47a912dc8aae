//! Term-level convolution of a complex of complexes, with cancellation of
//! identical summands in adjacent columns.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chars::Character;
use crate::error::{Error, Result};
use crate::resolution::complexes::{build_complex, ComplexKind, RChargeConvention, K2_SLOTS};
use crate::resolution::reference::{expected_table, rendered_table, Layout};
use crate::resolution::term::{BundleTerm, GradedTermList};
use crate::weight::Weight;

/// One row of the convolution: a complex moved `offset` columns right.
#[derive(Clone, Debug)]
pub struct ConvolutionRow {
    pub label: String,
    pub complex: GradedTermList,
    pub offset: i32,
}

impl ConvolutionRow {
    pub fn placed(&self) -> GradedTermList {
        self.complex.shift(self.offset)
    }
}

/// A summand of row `source_row` in column `column` cancelled against an
/// identical summand of the later row `target_row` in column `column + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CancelledPair {
    pub bundle: Vec<Weight>,
    pub source_row: String,
    pub target_row: String,
    pub column: i32,
}

#[derive(Clone, Debug)]
pub struct CancellationOutcome {
    pub residual: GradedTermList,
    pub pairs: Vec<CancelledPair>,
    pub k_class_before: Character,
    pub k_class_after: Character,
}

impl CancellationOutcome {
    pub fn k_class_conserved(&self) -> bool {
        self.k_class_before == self.k_class_after
    }
}

// For one bundle: avail[row][column] and the number still to cancel per
// column.
struct BundleProblem {
    avail: Vec<BTreeMap<i32, usize>>,
    need: BTreeMap<i32, usize>,
}

impl BundleProblem {
    fn solve(&mut self, out: &mut Vec<(usize, usize, i32)>) -> bool {
        let Some((&c, _)) = self.need.iter().find(|(_, &n)| n > 0) else {
            return true;
        };
        let rows = self.avail.len();
        for r in 0..rows {
            if self.avail[r].get(&c).copied().unwrap_or(0) == 0 {
                continue;
            }
            if self.need.get(&(c + 1)).copied().unwrap_or(0) == 0 {
                return false;
            }
            for r2 in r + 1..rows {
                if self.avail[r2].get(&(c + 1)).copied().unwrap_or(0) == 0 {
                    continue;
                }
                self.take(r, c);
                self.take(r2, c + 1);
                out.push((r, r2, c));
                if self.solve(out) {
                    return true;
                }
                out.pop();
                self.give(r, c);
                self.give(r2, c + 1);
            }
        }
        false
    }

    fn take(&mut self, r: usize, c: i32) {
        *self.avail[r].get_mut(&c).expect("available") -= 1;
        *self.need.get_mut(&c).expect("needed") -= 1;
    }

    fn give(&mut self, r: usize, c: i32) {
        *self.avail[r].entry(c).or_default() += 1;
        *self.need.entry(c).or_default() += 1;
    }
}

fn counts(list: &GradedTermList) -> BTreeMap<Vec<Weight>, BTreeMap<i32, usize>> {
    let mut out: BTreeMap<Vec<Weight>, BTreeMap<i32, usize>> = BTreeMap::new();
    for t in list.terms() {
        *out.entry(t.full_weights())
            .or_default()
            .entry(t.column())
            .or_default() += 1;
    }
    out
}

/// Totalises `rows` (earlier rows map to later rows) and looks for a set of
/// cancellations, each between identical summands in adjacent columns of
/// distinct rows, leaving exactly `target`. Rows are listed in convolution
/// order; the search is deterministic.
pub fn convolve_and_cancel(
    rows: &[ConvolutionRow],
    target: &GradedTermList,
) -> Result<CancellationOutcome> {
    let ranks = rows
        .first()
        .map(|r| r.complex.ranks().to_vec())
        .ok_or_else(|| Error::InvalidParameters("no rows to convolve".into()))?;
    let placed: Vec<GradedTermList> = rows.iter().map(ConvolutionRow::placed).collect();
    let mut total = GradedTermList::new("total", ranks.clone());
    for p in &placed {
        total.extend(p.terms().iter().cloned())?;
    }
    let per_row: Vec<_> = placed.iter().map(counts).collect();
    let all = counts(&total);
    let wanted = counts(target);
    if wanted.keys().any(|b| !all.contains_key(b)) {
        return Err(Error::NoMatching);
    }

    let mut pairs = Vec::new();
    for (bundle, by_col) in &all {
        let mut need = BTreeMap::new();
        for (&c, &n) in by_col {
            let keep = wanted.get(bundle).and_then(|m| m.get(&c)).copied().unwrap_or(0);
            if keep > n {
                return Err(Error::NoMatching);
            }
            need.insert(c, n - keep);
        }
        if let Some(m) = wanted.get(bundle) {
            if m.keys().any(|c| !by_col.contains_key(c)) {
                return Err(Error::NoMatching);
            }
        }
        let mut problem = BundleProblem {
            avail: per_row
                .iter()
                .map(|r| r.get(bundle).cloned().unwrap_or_default())
                .collect(),
            need,
        };
        let mut found = Vec::new();
        if !problem.solve(&mut found) {
            return Err(Error::NoMatching);
        }
        pairs.extend(found.into_iter().map(|(r, r2, c)| CancelledPair {
            bundle: bundle.clone(),
            source_row: rows[r].label.clone(),
            target_row: rows[r2].label.clone(),
            column: c,
        }));
    }
    pairs.sort();

    // The residual keeps the target's own grading data.
    let residual = target.clone().with_label("residual");
    let k_class_before = total.euler_character();
    let k_class_after = residual.euler_character();
    Ok(CancellationOutcome {
        residual,
        pairs,
        k_class_before,
        k_class_after,
    })
}

/// The three `k = 2` rows under `conv`, at the given column offsets.
pub fn k2_rows(conv: RChargeConvention, offsets: [i32; 3]) -> Result<Vec<ConvolutionRow>> {
    K2_SLOTS
        .iter()
        .zip(offsets)
        .map(|(slot, offset)| {
            Ok(ConvolutionRow {
                label: slot.kind.label().to_string(),
                complex: build_complex(slot.kind, conv)?,
                offset,
            })
        })
        .collect()
}

pub fn k2_nominal_offsets() -> [i32; 3] {
    let mut out = [0; 3];
    for (o, slot) in out.iter_mut().zip(K2_SLOTS.iter()) {
        *o = slot.nominal_offset();
    }
    out
}

/// An R-charge normalisation and row offsets under which cancellation
/// reproduces the closure of the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alignment {
    pub convention: RChargeConvention,
    pub offsets: [i32; 3],
    pub pairs: usize,
    /// Whether the residual, rendered by page column, is the displayed
    /// closure-of-the-diagonal table.
    pub matches_reference: bool,
    pub k_class_conserved: bool,
}

/// Searches R-charge normalisations and relative offsets `|o| ≤ bound` of
/// the `I₂` and `I₁` rows (the `I₀` row stays put). Returns every alignment
/// that works, sorted.
pub fn search_alignments(
    conventions: &[RChargeConvention],
    bound: i32,
) -> Result<Vec<Alignment>> {
    let mut jobs = Vec::new();
    for &conv in conventions {
        for o2 in -bound..=bound {
            for o1 in -bound..=bound {
                jobs.push((conv, [o2, o1, 0]));
            }
        }
    }
    let built: Vec<(RChargeConvention, [GradedTermList; 3], GradedTermList)> = conventions
        .iter()
        .map(|&conv| {
            Ok((
                conv,
                [
                    build_complex(ComplexKind::I2, conv)?,
                    build_complex(ComplexKind::I1, conv)?,
                    build_complex(ComplexKind::I0, conv)?,
                ],
                build_complex(ComplexKind::DeltaBar, conv)?,
            ))
        })
        .collect::<Result<_>>()?;
    let mut found: Vec<Alignment> = jobs
        .par_iter()
        .filter_map(|(conv, offsets)| {
            let (_, complexes, target) = built.iter().find(|(c, _, _)| c == conv)?;
            let rows: Vec<ConvolutionRow> = K2_SLOTS
                .iter()
                .zip(complexes.iter())
                .zip(offsets)
                .map(|((slot, complex), &offset)| ConvolutionRow {
                    label: slot.kind.label().to_string(),
                    complex: complex.clone(),
                    offset,
                })
                .collect();
            let outcome = convolve_and_cancel(&rows, target).ok()?;
            Some(Alignment {
                convention: *conv,
                offsets: *offsets,
                pairs: outcome.pairs.len(),
                matches_reference: rendered_table(&outcome.residual, Layout::Column)
                    == expected_table(ComplexKind::DeltaBar),
                k_class_conserved: outcome.k_class_conserved(),
            })
        })
        .collect();
    found.sort_by_key(|a| (a.convention, a.offsets));
    Ok(found)
}

/// Terms of `list` in the given column, as full weights.
pub fn column_bundles(list: &GradedTermList, column: i32) -> Vec<Vec<Weight>> {
    let mut out: Vec<Vec<Weight>> = list
        .terms()
        .iter()
        .filter(|t| t.column() == column)
        .map(BundleTerm::full_weights)
        .collect();
    out.sort();
    out
}
