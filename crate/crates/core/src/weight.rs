//! Dominant integral weights of `GL_k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing integer sequence indexing the irreducible `S^γ` of
/// `GL_k`, where `k` is the length. Negative parts are allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<i32>);

impl Weight {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if !is_dominant(&parts) {
            return Err(Error::NotDominant(parts));
        }
        Ok(Weight(parts))
    }

    /// The trivial weight of `GL_rank`.
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `(det)^power` as a weight of `GL_rank`.
    pub fn det(rank: usize, power: i32) -> Self {
        Weight(vec![power; rank])
    }

    /// The standard representation of `GL_rank`.
    pub fn standard(rank: usize) -> Self {
        let mut parts = vec![0; rank];
        if rank > 0 {
            parts[0] = 1;
        }
        Weight(parts)
    }

    /// Pads a partition with zeros up to `rank` parts.
    pub fn from_partition(partition: &[i32], rank: usize) -> Result<Self> {
        if partition.len() > rank {
            return Err(Error::InvalidParameters(format!(
                "partition {partition:?} has more than {rank} rows"
            )));
        }
        let mut parts = partition.to_vec();
        parts.resize(rank, 0);
        Weight::new(parts)
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> i32 {
        self.0.iter().sum()
    }

    /// `(w_1, …, w_k) ↦ (−w_k, …, −w_1)`.
    pub fn dual(&self) -> Self {
        Weight(self.0.iter().rev().map(|p| -p).collect())
    }

    /// Tensor with `(det)^t`.
    pub fn twist(&self, t: i32) -> Self {
        Weight(self.0.iter().map(|p| p + t).collect())
    }

    /// Splits the weight as `λ ⊗ det^t` where `λ` has last part zero.
    pub fn normalized(&self) -> (Weight, i32) {
        let t = self.0.last().copied().unwrap_or(0);
        (self.twist(-t), t)
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// True when all parts are equal, i.e. the weight is a power of det.
    pub fn is_det_power(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Conjugate of a partition (nonnegative weight), as a plain list of
    /// column lengths.
    pub fn conjugate_partition(&self) -> Vec<i32> {
        let first = self.0.first().copied().unwrap_or(0).max(0);
        (1..=first)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as i32)
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i32>::deserialize(d)?;
        Weight::new(parts).map_err(serde::de::Error::custom)
    }
}

pub fn is_dominant(parts: &[i32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// All partitions of `m` with at most `max_rows` rows and first part at most
/// `max_width`, in lexicographically decreasing order.
pub fn partitions_in_box(m: i32, max_rows: usize, max_width: i32) -> Vec<Vec<i32>> {
    fn go(rest: i32, rows: usize, cap: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            go(rest - part, rows - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 0 {
        go(m, max_rows, max_width, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_sequences() {
        assert!(Weight::new(vec![0, 1]).is_err());
        assert!(Weight::new(vec![3, 3, -2]).is_ok());
    }

    #[test]
    fn dual_and_normalize() {
        let w = Weight::new(vec![1, 1]).unwrap();
        assert_eq!(w.dual().parts(), &[-1, -1]);
        let (lam, t) = Weight::new(vec![0, -2]).unwrap().normalized();
        assert_eq!((lam.parts(), t), (&[2, 0][..], -2));
    }

    #[test]
    fn conjugates() {
        let w = Weight::new(vec![3, 1, 0]).unwrap();
        assert_eq!(w.conjugate_partition(), vec![2, 1, 1]);
    }

    #[test]
    fn box_partitions() {
        assert_eq!(partitions_in_box(2, 2, 2), vec![vec![2], vec![1, 1]]);
        assert_eq!(partitions_in_box(0, 2, 2), vec![Vec::<i32>::new()]);
        assert!(partitions_in_box(5, 2, 2).is_empty());
    }
}
