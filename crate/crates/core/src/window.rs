//! Magic windows as explicit finite sets of `GL_k` weights.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chars::{cauchy_exterior, tensor, Character};
use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum WindowFamily {
    /// Grassmannian flop window: `Sym^a S ⊗ det^l`, `l ≥ 0`, `a + l < n − 1`.
    #[serde(rename = "W")]
    GflopW,
    /// Stratified Mukai flop window: `Sym^a S ⊗ det^l`, `l ≥ 0`, `a + l < n`.
    #[serde(rename = "Wprime")]
    MukaiWPrime,
    /// `S^γ S` with `0 ≤ γ_k ≤ … ≤ γ_1 < n`.
    #[serde(rename = "Tseu")]
    Tseu,
}

impl fmt::Display for WindowFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WindowFamily::GflopW => "W",
            WindowFamily::MukaiWPrime => "Wprime",
            WindowFamily::Tseu => "Tseu",
        })
    }
}

impl FromStr for WindowFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "w" | "gflop" | "gflop_w" => Ok(WindowFamily::GflopW),
            "wprime" | "w'" | "mukai" | "mukai_wprime" => Ok(WindowFamily::MukaiWPrime),
            "tseu" => Ok(WindowFamily::Tseu),
            other => Err(Error::InvalidParameters(format!(
                "unknown window family {other:?} (expected W, Wprime or Tseu)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSet {
    pub family: WindowFamily,
    pub k: usize,
    pub n: usize,
    pub members: BTreeSet<Weight>,
}

impl WindowSet {
    pub fn contains(&self, w: &Weight) -> bool {
        self.members.contains(w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members as integer arrays in lexicographic order.
    pub fn sorted_list(&self) -> Vec<Vec<i32>> {
        self.members.iter().map(|w| w.parts().to_vec()).collect()
    }
}

fn check_kn(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!(
            "need 0 < k < n, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// Sym^a S ⊗ det^l ↔ (a + l, l) for GL_2, enumerated from `a + l < bound`.
fn sym_det_window(bound: usize) -> BTreeSet<Weight> {
    let bound = bound as i32;
    let mut out = BTreeSet::new();
    for l in 0..bound {
        for a in 0..bound - l {
            out.insert(Weight::new(vec![a + l, l]).expect("a ≥ 0"));
        }
    }
    out
}

/// All weights `γ` of `GL_k` with `0 ≤ γ_k` and `γ_1 ≤ width`.
pub fn box_weights(k: usize, width: i32) -> BTreeSet<Weight> {
    fn go(k: usize, cap: i32, cur: &mut Vec<i32>, out: &mut BTreeSet<Weight>) {
        if cur.len() == k {
            out.insert(Weight::new(cur.clone()).expect("built decreasing"));
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            go(k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    if width >= 0 {
        go(k, width, &mut Vec::new(), &mut out);
    }
    out
}

pub fn generate(family: WindowFamily, k: usize, n: usize) -> Result<WindowSet> {
    check_kn(k, n)?;
    let members = match family {
        WindowFamily::GflopW if k == 2 => sym_det_window(n - 1),
        WindowFamily::GflopW => box_weights(k, (n - k) as i32),
        WindowFamily::MukaiWPrime if k == 2 => sym_det_window(n),
        WindowFamily::MukaiWPrime => {
            return Err(Error::InvalidParameters(format!(
                "the Wprime window is defined for k = 2 only, got k = {k}"
            )))
        }
        WindowFamily::Tseu => box_weights(k, n as i32 - 1),
    };
    Ok(WindowSet {
        family,
        k,
        n,
        members,
    })
}

pub fn membership(w: &Weight, ws: &WindowSet) -> bool {
    w.rank() == ws.k && ws.contains(w)
}

/// Which exterior algebra realises the restricted Koszul homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KoszulConvention {
    /// `Λ^•(S₂ ⊗ (V/S₁)^∨) = Λ^• Hom(S₂, V/S₁)^∨`.
    #[serde(rename = "hom-dual")]
    HomDual,
    /// `Λ^•(S₂^∨ ⊗ V/S₁) = Λ^• Hom(S₂, V/S₁)`.
    #[serde(rename = "hom")]
    Hom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulRestriction {
    pub k: usize,
    pub n: usize,
    /// The convention whose `S₂`-content equals the Grassmannian window,
    /// if either does.
    pub convention: Option<KoszulConvention>,
    pub weights: BTreeSet<Weight>,
    pub hom_dual_weights: BTreeSet<Weight>,
    pub hom_weights: BTreeSet<Weight>,
}

/// `GL(S₂)`-content of `Λ^• Hom(S₂, V/S₁)^∨` for `rank S₂ = k`,
/// `rank V/S₁ = n − k`, computed summand by summand from the Cauchy
/// decomposition. Both duality conventions are evaluated and the one that
/// reproduces the window is selected and recorded.
pub fn koszul_restriction_weights(k: usize, n: usize) -> Result<KoszulRestriction> {
    check_kn(k, n)?;
    let q = n - k;
    let mut hom_dual = BTreeSet::new();
    let mut hom = BTreeSet::new();
    for m in 0..=k * q {
        for (a, _) in cauchy_exterior(m, k, q) {
            hom.insert(a.dual());
            hom_dual.insert(a);
        }
    }
    let window = generate(WindowFamily::GflopW, k, n)?.members;
    let (convention, weights) = if hom_dual == window {
        (Some(KoszulConvention::HomDual), hom_dual.clone())
    } else if hom == window {
        (Some(KoszulConvention::Hom), hom.clone())
    } else {
        (None, hom_dual.clone())
    };
    Ok(KoszulRestriction {
        k,
        n,
        convention,
        weights,
        hom_dual_weights: hom_dual,
        hom_weights: hom,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetComparison {
    Equal,
    StrictSubset,
    StrictSuperset,
    Incomparable,
}

pub fn compare_sets<T: Ord>(left: &BTreeSet<T>, right: &BTreeSet<T>) -> SetComparison {
    match (left.is_subset(right), right.is_subset(left)) {
        (true, true) => SetComparison::Equal,
        (true, false) => SetComparison::StrictSubset,
        (false, true) => SetComparison::StrictSuperset,
        (false, false) => SetComparison::Incomparable,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorCheck {
    pub n: usize,
    pub factors: Vec<Weight>,
    pub product: BTreeSet<Weight>,
    pub target: BTreeSet<Weight>,
    pub comparison: SetComparison,
}

impl TensorCheck {
    pub fn holds(&self) -> bool {
        self.comparison == SetComparison::Equal
    }
}

/// Irreducibles of `f ⊗ w` over `f ∈ factors`, `w ∈ W(2, n)`, compared with
/// `W'(2, n)`.
pub fn oc_tensor_check_with(factors: &[Weight], n: usize) -> Result<TensorCheck> {
    if n <= 2 {
        return Err(Error::InvalidParameters(format!("need n > 2, got {n}")));
    }
    let window = generate(WindowFamily::GflopW, 2, n)?;
    let target = generate(WindowFamily::MukaiWPrime, 2, n)?.members;
    let mut product = BTreeSet::new();
    for f in factors {
        if f.rank() != 2 {
            return Err(Error::RankMismatch {
                left: vec![2],
                right: vec![f.rank()],
            });
        }
        let fc = Character::gl(f.clone());
        for w in &window.members {
            let t = tensor(&fc, &Character::gl(w.clone()))?;
            product.extend(t.factor_contents(0));
        }
    }
    let comparison = compare_sets(&product, &target);
    Ok(TensorCheck {
        n,
        factors: factors.to_vec(),
        product,
        target,
        comparison,
    })
}

/// The `O_C` weights `{C, S₂, det S₂}`.
pub fn oc_factor_weights() -> Vec<Weight> {
    [[0, 0], [1, 0], [1, 1]]
        .iter()
        .map(|p| Weight::new(p.to_vec()).expect("dominant"))
        .collect()
}

pub fn oc_tensor_check(n: usize) -> Result<TensorCheck> {
    oc_tensor_check_with(&oc_factor_weights(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[i32]) -> Weight {
        Weight::new(p.to_vec()).unwrap()
    }

    fn set(ws: &[&[i32]]) -> BTreeSet<Weight> {
        ws.iter().map(|p| w(p)).collect()
    }

    #[test]
    fn generate_examples() {
        let g = generate(WindowFamily::GflopW, 2, 3).unwrap();
        assert_eq!(g.members, set(&[&[0, 0], &[1, 0], &[1, 1]]));
        let m = generate(WindowFamily::MukaiWPrime, 2, 3).unwrap();
        assert_eq!(
            m.members,
            set(&[&[0, 0], &[1, 0], &[2, 0], &[1, 1], &[2, 1], &[2, 2]])
        );
        let t = generate(WindowFamily::Tseu, 2, 3).unwrap();
        assert_eq!(t.members, m.members);
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(WindowFamily::GflopW, 3, 2).is_err());
        assert!(generate(WindowFamily::Tseu, 0, 2).is_err());
        assert!(generate(WindowFamily::MukaiWPrime, 3, 5).is_err());
    }

    #[test]
    fn membership_examples() {
        let g = generate(WindowFamily::GflopW, 2, 3).unwrap();
        assert!(membership(&w(&[1, 1]), &g));
        assert!(!membership(&w(&[2, 0]), &g));
        assert!(!membership(&w(&[0, 0, 0]), &g));
        let m = generate(WindowFamily::MukaiWPrime, 2, 5).unwrap();
        assert!(membership(&w(&[4, 0]), &m));
        assert!(!membership(&w(&[5, 0]), &m));
    }

    #[test]
    fn koszul_examples() {
        let r = koszul_restriction_weights(2, 3).unwrap();
        assert_eq!(r.weights, set(&[&[0, 0], &[1, 0], &[1, 1]]));
        assert_eq!(r.convention, Some(KoszulConvention::HomDual));
        let r = koszul_restriction_weights(2, 4).unwrap();
        assert_eq!(r.weights, box_weights(2, 2));
        let r = koszul_restriction_weights(1, 2).unwrap();
        assert_eq!(r.weights, set(&[&[0], &[1]]));
    }

    #[test]
    fn tensor_checks() {
        assert!(oc_tensor_check(3).unwrap().holds());
        assert!(oc_tensor_check(4).unwrap().holds());
        let degenerate = oc_tensor_check_with(&[w(&[0, 0])], 4).unwrap();
        assert_eq!(degenerate.comparison, SetComparison::StrictSubset);
        assert!(oc_tensor_check(2).is_err());
    }

    #[test]
    fn sorted_list_is_lexicographic() {
        let g = generate(WindowFamily::GflopW, 2, 4).unwrap();
        let list = g.sorted_list();
        let mut sorted = list.clone();
        sorted.sort();
        assert_eq!(list, sorted);
    }
}
