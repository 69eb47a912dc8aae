//! Borel–Weil–Bott on Grassmannians and single-step relative flag bundles.
//!
//! Conventions: on `Gr(k, V)` with tautological subbundle `S` (rank `k`) and
//! quotient `Q = V/S` (rank `n − k`), the bundle `S^β Q ⊗ S^α S` is pushed
//! using the sequence `μ = (β, α)`. With this ordering `S = O(−1)` on `P¹`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

/// Schur data `S^sub S ⊗ S^quot Q` of an irreducible homogeneous bundle on
/// `Gr(k, n)`, `k = sub.rank()`, `n = k + quot.rank()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannBundleWeight {
    sub: Weight,
    quot: Weight,
}

impl GrassmannBundleWeight {
    pub fn new(sub: Weight, quot: Weight) -> Result<Self> {
        if sub.rank() == 0 || quot.rank() == 0 {
            return Err(Error::InvalidParameters(format!(
                "Gr(k, n) needs 0 < k < n, got k = {}, n = {}",
                sub.rank(),
                sub.rank() + quot.rank()
            )));
        }
        Ok(GrassmannBundleWeight { sub, quot })
    }

    pub fn sub(&self) -> &Weight {
        &self.sub
    }

    pub fn quot(&self) -> &Weight {
        &self.quot
    }

    pub fn k(&self) -> usize {
        self.sub.rank()
    }

    pub fn n(&self) -> usize {
        self.sub.rank() + self.quot.rank()
    }

    /// The concatenated sequence `μ = (quot, sub)`.
    pub fn sequence(&self) -> Vec<i32> {
        let mut mu = self.quot.parts().to_vec();
        mu.extend_from_slice(self.sub.parts());
        mu
    }
}

/// All cohomology of an irreducible homogeneous bundle: either it vanishes,
/// or it is `S^weight V` concentrated in a single degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BottResult {
    Zero,
    Cohomology { degree: usize, weight: Weight },
}

impl BottResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottResult::Zero)
    }

    /// Signed dimension `(−1)^ℓ dim` of the Euler characteristic.
    pub fn euler_dim(&self) -> i64 {
        match self {
            BottResult::Zero => 0,
            BottResult::Cohomology { degree, weight } => {
                let d = crate::chars::schur_dim(weight) as i64;
                if degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }
}

pub fn bott_push(w: &GrassmannBundleWeight) -> BottResult {
    bott_sequence(&w.sequence())
}

/// Bott's algorithm on an arbitrary integer sequence: add `ρ`, detect
/// repeats, sort counting inversions, subtract `ρ`.
pub fn bott_sequence(mu: &[i32]) -> BottResult {
    let n = mu.len();
    let mut shifted: Vec<i32> = mu
        .iter()
        .enumerate()
        .map(|(i, &m)| m + (n - 1 - i) as i32)
        .collect();
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return BottResult::Zero,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    shifted.sort_unstable_by(|a, b| b.cmp(a));
    let parts = shifted
        .iter()
        .enumerate()
        .map(|(i, &s)| s - (n - 1 - i) as i32)
        .collect();
    BottResult::Cohomology {
        degree: inversions,
        weight: Weight::new(parts).expect("sorted ρ-shifted sequence is dominant"),
    }
}

/// Schur data on the flag bundle `Fl(k′, k, V) → Gr(k, V)`: `sub` lives on
/// the rank-`k′` bundle `S′`, `quot` on `S₁/S′`, and `spectators` on any
/// further factors that the fibre does not see.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlagBundleWeight {
    pub sub: Weight,
    pub quot: Weight,
    pub spectators: Vec<Weight>,
}

/// One summand of a relative pushforward: `S^s1 S₁ ⊗ spectators` in the
/// given derived degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelativeSummand {
    pub degree: usize,
    pub s1: Weight,
    pub spectators: Vec<Weight>,
}

/// Derived pushforward along the `Gr(k′, S₁)`-fibration: Bott on the fibre,
/// spectators carried through unchanged.
pub fn relative_bott_push(w: &FlagBundleWeight) -> Result<Vec<RelativeSummand>> {
    let fibre = GrassmannBundleWeight::new(w.sub.clone(), w.quot.clone())?;
    Ok(match bott_push(&fibre) {
        BottResult::Zero => Vec::new(),
        BottResult::Cohomology { degree, weight } => vec![RelativeSummand {
            degree,
            s1: weight,
            spectators: w.spectators.clone(),
        }],
    })
}
