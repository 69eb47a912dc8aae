//! Expected tables for the `k = 2` complexes, in the rendered notation.
//! Columns run left to right in page position; entries within a column are
//! unordered.

use serde::{Deserialize, Serialize};

use crate::resolution::complexes::ComplexKind;
use crate::resolution::render::{render_term, Notation};
use crate::resolution::term::GradedTermList;

type Table = &'static [&'static [&'static str]];

const I2: Table = &[
    &["O(-2,2)"],
    &["S1^∨⊗S2(-1,1)"],
    &["Sym^2 S2(-1,0)", "Sym^2 S1^∨(0,1)"],
    &["S1^∨⊗S2"],
    &["O"],
];

const I0: Table = &[
    &["O"],
    &["S1^∨⊗S2"],
    &["Sym^2 S2(-1,0)", "Sym^2 S1^∨(0,1)"],
    &["S1^∨⊗S2(-1,1)"],
    &["O(-2,2)"],
];

const I1: Table = &[
    &["O(-1,1)"],
    &[
        "O",
        "Sym^2 S2(-1,0)",
        "Sym^2 S1^∨(0,1)",
        "O(-1,1)",
        "O(-2,2)",
    ],
    &[
        "S1^∨⊗S2",
        "S1^∨⊗S2",
        "S1^∨⊗S2(-1,1)",
        "S1^∨⊗S2(-1,1)",
    ],
    &[
        "O",
        "Sym^2 S2(-1,0)",
        "Sym^2 S1^∨(0,1)",
        "O(-1,1)",
        "O(-2,2)",
    ],
    &["O(-1,1)"],
];

const OC: Table = &[
    &["O", "O(-1,1)"],
    &["S1^∨⊗S2"],
    &["S1^∨⊗S2"],
    &["O", "O(-1,1)"],
];

const DELTA_BAR: Table = &[
    &["O", "O(-1,1)"],
    &["S1^∨⊗S2", "O", "O(-1,1)"],
    &["S1^∨⊗S2", "S1^∨⊗S2"],
    &["O", "O(-1,1)", "S1^∨⊗S2"],
    &["O", "O(-1,1)"],
];

/// `F₃ → F₂ → F₁ → F₀` over `GL(H)`, homological order.
const WEYMAN_GL_H: Table = &[
    &["(det H)^-2"],
    &["H^∨(det H)^-1", "(det H)^-1"],
    &["(det H)^-1", "Λ^3 H^∨"],
    &["O"],
];

/// The same after `H = Hom(S₂, S₁)`, homological order, ignoring R-charge.
const OC_BY_HDEG: Table = &[
    &["O(-1,1)"],
    &["S1^∨⊗S2", "O(-1,1)"],
    &["O", "S1^∨⊗S2"],
    &["O"],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layout {
    /// Page position `hdeg − rcharge`.
    Column,
    /// Homological degree only.
    Hdeg,
}

pub fn expected_table(kind: ComplexKind) -> Vec<Vec<String>> {
    owned(match kind {
        ComplexKind::I0 => I0,
        ComplexKind::I1 => I1,
        ComplexKind::I2 => I2,
        ComplexKind::Oc => OC,
        ComplexKind::DeltaBar => DELTA_BAR,
    })
}

pub fn expected_weyman() -> Vec<Vec<String>> {
    owned(WEYMAN_GL_H)
}

pub fn expected_oc_by_hdeg() -> Vec<Vec<String>> {
    owned(OC_BY_HDEG)
}

fn owned(t: Table) -> Vec<Vec<String>> {
    normalize(
        t.iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect(),
    )
}

fn normalize(mut t: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for c in &mut t {
        c.sort();
    }
    t
}

/// Rendered columns of `list`, left to right, each sorted. Empty interior
/// columns are kept.
pub fn rendered_table(list: &GradedTermList, layout: Layout) -> Vec<Vec<String>> {
    let notation = Notation::for_ranks(list.ranks());
    let placed: Vec<(i32, String)> = list
        .terms()
        .iter()
        .map(|t| {
            let pos = match layout {
                Layout::Column => t.column(),
                Layout::Hdeg => t.hdeg(),
            };
            (pos, render_term(t, &notation))
        })
        .collect();
    let (Some(lo), Some(hi)) = (
        placed.iter().map(|p| p.0).min(),
        placed.iter().map(|p| p.0).max(),
    ) else {
        return Vec::new();
    };
    normalize(
        (lo..=hi)
            .map(|c| {
                placed
                    .iter()
                    .filter(|p| p.0 == c)
                    .map(|p| p.1.clone())
                    .collect()
            })
            .collect(),
    )
}

/// First column where two tables differ, with both entries.
pub fn first_difference(
    got: &[Vec<String>],
    want: &[Vec<String>],
) -> Option<(usize, Vec<String>, Vec<String>)> {
    (0..got.len().max(want.len())).find_map(|i| {
        let g = got.get(i).cloned().unwrap_or_default();
        let w = want.get(i).cloned().unwrap_or_default();
        (g != w).then_some((i, g, w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::complexes::{build_complex, RChargeConvention};
    use crate::resolution::weyman::{weyman_resolution, SpringerDatum};

    #[test]
    fn all_k2_tables_match() {
        for kind in ComplexKind::ALL {
            let list = build_complex(kind, RChargeConvention::STANDARD).unwrap();
            let got = rendered_table(&list, Layout::Column);
            assert_eq!(first_difference(&got, &expected_table(kind)), None, "{kind}");
        }
    }

    #[test]
    fn weyman_tables_match() {
        let gl_h = weyman_resolution(&SpringerDatum::planes(2)).unwrap();
        assert_eq!(rendered_table(&gl_h, Layout::Hdeg), expected_weyman());
        let oc = build_complex(ComplexKind::Oc, RChargeConvention::STANDARD).unwrap();
        assert_eq!(rendered_table(&oc, Layout::Hdeg), expected_oc_by_hdeg());
    }

    #[test]
    fn uniform_weight_one_breaks_i1() {
        let list = build_complex(ComplexKind::I1, RChargeConvention::uniform(1)).unwrap();
        assert_ne!(
            rendered_table(&list, Layout::Column),
            expected_table(ComplexKind::I1)
        );
    }
}
