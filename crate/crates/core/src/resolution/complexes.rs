//! The `k = 2` complexes: the Koszul resolutions of `O_{I₂}` and `O_{I₀}`,
//! the pushed-down resolution of `(π₁)_* O_{I₁}`, and the resolution of the
//! structure sheaf of the closure of the diagonal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bott::{relative_bott_push, FlagBundleWeight};
use crate::chars::{decompose, dualize, Character, TorusCharacter};
use crate::error::{Error, Result};
use crate::resolution::koszul::{hom_s2_s1, koszul_terms};
use crate::resolution::term::{BundleTerm, GradedTermList};
use crate::resolution::weyman::resolve_oc;
use crate::weight::Weight;

/// R-charge bookkeeping. `p_weight` is the R-charge of the endomorphism
/// coordinates `p`, hence of every section linear in `p`. The `I₁`
/// sections can be overridden separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RChargeConvention {
    pub p_weight: i32,
    pub i1_section_charge: Option<i32>,
}

impl RChargeConvention {
    /// `p` has weight 2, so the superpotential has weight 2.
    pub const STANDARD: RChargeConvention = RChargeConvention {
        p_weight: 2,
        i1_section_charge: None,
    };

    pub fn uniform(p_weight: i32) -> Self {
        RChargeConvention {
            p_weight,
            i1_section_charge: None,
        }
    }

    /// The normalisations tried by the automatic search: uniform weights 1
    /// and 2, and weight 2 with the `I₁` sections charged 1.
    pub fn candidates() -> Vec<RChargeConvention> {
        vec![
            RChargeConvention::uniform(1),
            RChargeConvention::uniform(2),
            RChargeConvention {
                p_weight: 2,
                i1_section_charge: Some(1),
            },
        ]
    }

    pub fn i1_linear_section(&self) -> i32 {
        self.i1_section_charge.unwrap_or(self.p_weight)
    }
}

impl fmt::Display for RChargeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p-weight={}", self.p_weight)?;
        if let Some(c) = self.i1_section_charge {
            write!(f, ",i1-sections={c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ComplexKind {
    I0,
    I1,
    I2,
    #[serde(rename = "OC")]
    Oc,
    DeltaBar,
}

impl ComplexKind {
    pub const ALL: [ComplexKind; 5] = [
        ComplexKind::I2,
        ComplexKind::I1,
        ComplexKind::I0,
        ComplexKind::Oc,
        ComplexKind::DeltaBar,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            ComplexKind::I0 => "I0",
            ComplexKind::I1 => "I1",
            ComplexKind::I2 => "I2",
            ComplexKind::Oc => "OC",
            ComplexKind::DeltaBar => "DeltaBar",
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i0" => Ok(ComplexKind::I0),
            "i1" => Ok(ComplexKind::I1),
            "i2" => Ok(ComplexKind::I2),
            "oc" | "resolveoc" => Ok(ComplexKind::Oc),
            "deltabar" | "delta-bar" | "delta_bar" => Ok(ComplexKind::DeltaBar),
            other => Err(Error::InvalidParameters(format!("unknown complex {other:?}"))),
        }
    }
}

pub fn build_complex(which: ComplexKind, conv: RChargeConvention) -> Result<GradedTermList> {
    let list = match which {
        // a ∈ Γ(Hom(S₂, S₁)) has R-charge zero.
        ComplexKind::I2 => koszul_terms(&hom_s2_s1(), 0)?,
        // ap₂ − p₁a is linear in p.
        ComplexKind::I0 => koszul_terms(&hom_s2_s1(), conv.p_weight)?,
        ComplexKind::I1 => i1_pushdown(conv)?,
        ComplexKind::Oc => resolve_oc(conv.p_weight)?,
        ComplexKind::DeltaBar => {
            let oc = resolve_oc(conv.p_weight)?;
            trace_cone(&oc, conv.p_weight)?
        }
    };
    Ok(list.with_label(which.label()))
}

/// Cone on a map `X → X` of R-charge `r`: the source copy sits one
/// homological step up with R-charge lowered by `r`.
pub fn trace_cone(x: &GradedTermList, r: i32) -> Result<GradedTermList> {
    let mut out = x.clone();
    out.extend(x.shifted(-1, -r).terms().iter().cloned())?;
    Ok(out)
}

fn wt(p: &[i32]) -> Weight {
    Weight::new(p.to_vec()).expect("dominant literal")
}

/// A section of a bundle on `Fl(1,2,V) × Gr(V,2)`, written over
/// `GL(S′) × GL(S₁/S′) × GL(S₂)`.
#[derive(Clone, Debug)]
pub struct FlagSection {
    pub bundle: Character,
    pub rcharge: i32,
}

/// The three sections cutting out `I₁`: `p₁ ∈ Hom(S′, S₁/S′)`,
/// `a₂p₂ − p₁a₂ ∈ Hom(S₂, S′)` and `a₂ ∈ Hom(S₂, S₁/S′)`.
pub fn i1_sections(conv: RChargeConvention) -> Vec<FlagSection> {
    let r = conv.i1_linear_section();
    vec![
        FlagSection {
            bundle: Character::irreducible(vec![wt(&[-1]), wt(&[1]), wt(&[0, 0])]),
            rcharge: r,
        },
        FlagSection {
            bundle: Character::irreducible(vec![wt(&[1]), wt(&[0]), wt(&[0, -1])]),
            rcharge: r,
        },
        FlagSection {
            bundle: Character::irreducible(vec![wt(&[0]), wt(&[1]), wt(&[0, -1])]),
            rcharge: 0,
        },
    ]
}

/// Tensor product of the Koszul complexes of `sections`, pushed down along
/// `Fl(1,2,V) → Gr(2,V)`. A summand with Koszul degree `J` and fibre
/// cohomology in degree `q` lands in homological degree `q − J`.
pub fn flag_pushdown(sections: &[FlagSection]) -> Result<GradedTermList> {
    let ranks = vec![1, 1, 2];
    let powers: Vec<Vec<TorusCharacter>> = sections
        .iter()
        .map(|s| dualize(&s.bundle).torus().exterior_powers())
        .collect::<Result<_>>()?;
    let mut list = GradedTermList::new("pushdown", vec![2, 2]);
    let mut index = vec![0usize; sections.len()];
    loop {
        let mut tw = TorusCharacter::new(ranks.clone());
        tw.add(vec![0; 4], 1);
        for (s, &j) in index.iter().enumerate() {
            tw = tw.convolve(&powers[s][j])?;
        }
        let koszul_degree: i32 = index.iter().sum::<usize>() as i32;
        let rcharge: i32 = index
            .iter()
            .zip(sections)
            .map(|(&j, s)| j as i32 * s.rcharge)
            .sum();
        for (key, m) in decompose(&tw)?.iter() {
            let w = FlagBundleWeight {
                sub: key[0].clone(),
                quot: key[1].clone(),
                spectators: vec![key[2].clone()],
            };
            for summand in relative_bott_push(&w)? {
                for _ in 0..m {
                    list.push(BundleTerm::new(
                        vec![summand.s1.clone(), summand.spectators[0].clone()],
                        summand.degree as i32 - koszul_degree,
                        -rcharge,
                    ))?;
                }
            }
        }
        // odometer over the exterior degrees
        let mut pos = 0;
        loop {
            if pos == index.len() {
                return Ok(list);
            }
            index[pos] += 1;
            if index[pos] < powers[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

fn i1_pushdown(conv: RChargeConvention) -> Result<GradedTermList> {
    flag_pushdown(&i1_sections(conv))
}

/// The complex of three kernels, each with its shift `[−(i² + i)]` and its
/// position `i` in the convolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvolutionSlot {
    pub kind: ComplexKind,
    pub shift: i32,
    pub position: i32,
}

impl ConvolutionSlot {
    /// Column offset from `E[−shift]` placed at position `position` of the
    /// totalisation: `shift − position`.
    pub fn nominal_offset(&self) -> i32 {
        self.shift - self.position
    }
}

pub const K2_SLOTS: [ConvolutionSlot; 3] = [
    ConvolutionSlot {
        kind: ComplexKind::I2,
        shift: 6,
        position: 2,
    },
    ConvolutionSlot {
        kind: ComplexKind::I1,
        shift: 2,
        position: 1,
    },
    ConvolutionSlot {
        kind: ComplexKind::I0,
        shift: 0,
        position: 0,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i2_is_the_koszul_complex() {
        let i2 = build_complex(ComplexKind::I2, RChargeConvention::STANDARD).unwrap();
        let k = koszul_terms(&hom_s2_s1(), 0).unwrap();
        assert_eq!(i2.terms(), k.terms());
    }

    #[test]
    fn i0_runs_the_other_way() {
        let i0 = build_complex(ComplexKind::I0, RChargeConvention::STANDARD).unwrap();
        let cols: Vec<i32> = i0.by_column().keys().copied().collect();
        assert_eq!(cols, vec![0, 1, 2, 3, 4]);
        let first = &i0.by_column()[&0];
        assert!(first[0].full_weights().iter().all(|w| w.is_trivial()));
    }

    #[test]
    fn i1_has_thirty_six_dimensions() {
        let i1 = build_complex(ComplexKind::I1, RChargeConvention::STANDARD).unwrap();
        let total: u64 = i1.terms().iter().map(|t| t.rank()).sum();
        assert_eq!(total, 36);
        assert_eq!(i1.by_column().len(), 5);
    }

    #[test]
    fn delta_bar_is_two_copies() {
        let oc = build_complex(ComplexKind::Oc, RChargeConvention::STANDARD).unwrap();
        let db = build_complex(ComplexKind::DeltaBar, RChargeConvention::STANDARD).unwrap();
        assert_eq!(db.len(), 2 * oc.len());
    }

    #[test]
    fn parses_kinds() {
        assert_eq!("deltabar".parse::<ComplexKind>().unwrap(), ComplexKind::DeltaBar);
        assert!("I3".parse::<ComplexKind>().is_err());
    }

    #[test]
    fn nominal_offsets() {
        let offs: Vec<i32> = K2_SLOTS.iter().map(ConvolutionSlot::nominal_offset).collect();
        assert_eq!(offs, vec![4, 1, 0]);
    }
}
