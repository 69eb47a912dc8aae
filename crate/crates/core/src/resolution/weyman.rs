//! Free resolutions by pushing a Koszul complex down from a Springer-type
//! vector bundle over a Grassmannian.
//!
//! For `C̃ = (subbundle)_{Gr(k,H)} → C ⊂ ambient` the terms are
//! `F_i = ⊕_j H^j(Gr, Λ^{i+j} ξ)` with `ξ = (ambient / subbundle)^∨`. The
//! cohomology is taken summand by summand on the Levi `GL(U) × GL(H/U)`
//! and evaluated with Bott's algorithm.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bott::{bott_push, BottResult, GrassmannBundleWeight};
use crate::chars::{decompose, dualize, Character, TorusCharacter};
use crate::error::{Error, Result};
use crate::resolution::term::{BundleTerm, GradedTermList};
use crate::weight::Weight;

/// One graded piece of the ambient representation together with the part
/// of the subbundle lying in it. Coordinates on this piece carry R-charge
/// `rcharge`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerComponent {
    /// A `GL(H)` representation.
    pub ambient: Character,
    /// Schur description of the subbundle in terms of the tautological `U`.
    pub sub: Character,
    pub rcharge: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerDatum {
    pub dim_h: usize,
    pub k: usize,
    pub components: Vec<SpringerComponent>,
}

fn wt(p: &[i32]) -> Weight {
    Weight::new(p.to_vec()).expect("dominant literal")
}

impl SpringerDatum {
    /// `(det U ⊕ U)_{Gr(2,H)} → Λ²H ⊕ H`, `dim H = 4`, with the `Λ²H`
    /// coordinates carrying R-charge `p_weight`.
    pub fn planes(p_weight: i32) -> Self {
        SpringerDatum {
            dim_h: 4,
            k: 2,
            components: vec![
                SpringerComponent {
                    ambient: Character::gl(wt(&[1, 1, 0, 0])),
                    sub: Character::gl(wt(&[1, 1])),
                    rcharge: p_weight,
                },
                SpringerComponent {
                    ambient: Character::gl(wt(&[1, 0, 0, 0])),
                    sub: Character::gl(wt(&[1, 0])),
                    rcharge: 0,
                },
            ],
        }
    }

    pub fn ambient(&self) -> Result<Character> {
        self.components
            .iter()
            .try_fold(Character::zero(vec![self.dim_h]), |acc, c| acc.plus(&c.ambient))
    }

    pub fn subbundle(&self) -> Result<Character> {
        self.components
            .iter()
            .try_fold(Character::zero(vec![self.k]), |acc, c| acc.plus(&c.sub))
    }

    fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k >= self.dim_h {
            return Err(Error::InvalidParameters(format!(
                "Gr({}, {}) is not a Grassmannian of proper subspaces",
                self.k, self.dim_h
            )));
        }
        let sub_dim = self.subbundle()?.dim();
        let amb_dim = self.ambient()?.dim();
        if sub_dim > amb_dim {
            return Err(Error::InvalidParameters(format!(
                "subbundle rank {sub_dim} exceeds ambient dimension {amb_dim}"
            )));
        }
        Ok(())
    }

    /// `ξ_c = (ambient_c / sub_c)^∨` as a Levi character, per component.
    fn xi(&self) -> Result<Vec<Character>> {
        let n = self.dim_h;
        let k = self.k;
        let levi = vec![k, n - k];
        self.components
            .iter()
            .map(|c| {
                let restricted = decompose(&c.ambient.torus().map_weights(levi.clone(), |w| w.to_vec()))?;
                let sub = c.sub.outer(&Character::trivial(vec![n - k]));
                let quotient = restricted.plus(&sub.scaled(-1))?;
                if !quotient.is_genuine() {
                    return Err(Error::InvalidParameters(format!(
                        "subbundle {} is not contained in ambient {}",
                        c.sub, c.ambient
                    )));
                }
                Ok(dualize(&quotient))
            })
            .collect()
    }
}

/// Terms of the minimal `GL(H)`-equivariant free resolution of `O_C`.
///
/// Generators get R-charge `−Σ_c s_c · rcharge_c` where `s_c` is the
/// number of exterior factors taken from component `c`.
pub fn weyman_resolution(d: &SpringerDatum) -> Result<GradedTermList> {
    d.validate()?;
    let xi = d.xi()?;
    let powers: Vec<Vec<TorusCharacter>> = xi
        .iter()
        .map(|x| x.torus().exterior_powers())
        .collect::<Result<_>>()?;

    // (output weight, per-component exterior degrees) -> {cohomological degree: multiplicity}
    let mut contributions: BTreeMap<(Weight, Vec<usize>), BTreeMap<usize, i64>> = BTreeMap::new();
    let levi = vec![d.k, d.dim_h - d.k];
    for grading in multi_indices(&powers.iter().map(Vec::len).collect::<Vec<_>>()) {
        let mut tw = TorusCharacter::new(levi.clone());
        tw.add(vec![0; d.dim_h], 1);
        for (c, &s) in grading.iter().enumerate() {
            tw = tw.convolve(&powers[c][s])?;
        }
        for (key, m) in decompose(&tw)?.iter() {
            let fibre = GrassmannBundleWeight::new(key[0].clone(), key[1].clone())?;
            if let BottResult::Cohomology { degree, weight } = bott_push(&fibre) {
                *contributions
                    .entry((weight, grading.clone()))
                    .or_default()
                    .entry(degree)
                    .or_insert(0) += m;
            }
        }
    }

    let mut list = GradedTermList::new("Weyman", vec![d.dim_h]);
    for ((weight, grading), mut degrees) in contributions {
        let t: usize = grading.iter().sum();
        cancel_adjacent(&mut degrees);
        if degrees.is_empty() {
            continue;
        }
        let ds: Vec<usize> = degrees.keys().copied().collect();
        if ds.len() > 1 || ds[0] > t {
            return Err(Error::MixedDegrees {
                summand: weight.to_string(),
                grading,
                degrees: ds,
            });
        }
        let j = ds[0];
        let rcharge: i32 = grading
            .iter()
            .zip(&d.components)
            .map(|(&s, c)| s as i32 * c.rcharge)
            .sum();
        for _ in 0..degrees[&j] {
            list.push(BundleTerm::new(vec![weight.clone()], -((t - j) as i32), -rcharge))?;
        }
    }
    Ok(list)
}

/// The fibre bundles are only filtered by irreducibles, so Bott on the
/// graded pieces can report the same weight in degrees `j` and `j + 1`; the
/// connecting maps of the filtration cancel such pairs.
fn cancel_adjacent(degrees: &mut BTreeMap<usize, i64>) {
    let ds: Vec<usize> = degrees.keys().copied().collect();
    for j in ds {
        let here = degrees.get(&j).copied().unwrap_or(0);
        let next = degrees.get(&(j + 1)).copied().unwrap_or(0);
        let c = here.min(next);
        if c > 0 {
            *degrees.get_mut(&j).expect("present") -= c;
            *degrees.get_mut(&(j + 1)).expect("present") -= c;
        }
    }
    degrees.retain(|_, m| *m != 0);
}

fn multi_indices(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..b).map(move |i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

/// Torus weights of `H = Hom(S₂, S₁) = S₁ ⊗ S₂^∨` in `GL(S₁) × GL(S₂)`
/// coordinates.
fn hom_basis_weights() -> Vec<[i32; 4]> {
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut v = [0; 4];
            v[i] = 1;
            v[2 + j] = -1;
            out.push(v);
        }
    }
    out
}

/// Substitutes `H = Hom(S₂, S₁)` into a `GL(H)`-equivariant term list
/// (`dim H = 4`) and applies the det twist of the identification
/// `End₀(S₁) ⊕ End₀(S₂) = Λ²H ⊗ (det S₁)^{−1}(det S₂)`: a generator of
/// R-charge `−s · p_weight` picks up `(det S₁)^s (det S₂)^{−s}`.
pub fn specialize_h(list: &GradedTermList, p_weight: i32) -> Result<GradedTermList> {
    if list.ranks() != [4] {
        return Err(Error::RankMismatch {
            left: vec![4],
            right: list.ranks().to_vec(),
        });
    }
    if p_weight == 0 {
        return Err(Error::InvalidParameters("p_weight must be nonzero".into()));
    }
    let basis = hom_basis_weights();
    let mut out = GradedTermList::new(list.label(), vec![2, 2]);
    for term in list.terms() {
        if term.rcharge() % p_weight != 0 {
            return Err(Error::InvalidParameters(format!(
                "R-charge {} is not a multiple of the p weight {p_weight}",
                term.rcharge()
            )));
        }
        let s = -term.rcharge() / p_weight;
        let restricted = term.character().torus().map_weights(vec![2, 2], |c| {
            let mut v = vec![0; 4];
            for (a, &ca) in c.iter().enumerate() {
                for (x, b) in v.iter_mut().zip(basis[a]) {
                    *x += ca * b;
                }
            }
            v
        });
        for (key, m) in decompose(&restricted)?.iter() {
            let full = vec![key[0].twist(s), key[1].twist(-s)];
            for _ in 0..m {
                out.push(BundleTerm::new(full.clone(), term.hdeg(), term.rcharge()))?;
            }
        }
    }
    Ok(out)
}

/// The resolution of `O_C` over `GL(S₁) × GL(S₂)`.
pub fn resolve_oc(p_weight: i32) -> Result<GradedTermList> {
    let gl_h = weyman_resolution(&SpringerDatum::planes(p_weight))?;
    Ok(specialize_h(&gl_h, p_weight)?.with_label("O_C"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OcWeights {
    pub s2: BTreeSet<Weight>,
    pub s1: BTreeSet<Weight>,
}

/// Distinct `GL(S₂)`- and `GL(S₁)`-contents of the `O_C` resolution.
pub fn oc_weights() -> Result<OcWeights> {
    let oc = resolve_oc(2)?;
    Ok(OcWeights {
        s2: oc.factor_contents(1),
        s1: oc.factor_contents(0),
    })
}
