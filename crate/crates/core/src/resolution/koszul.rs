use crate::chars::{decompose, dualize, Character};
use crate::error::{Error, Result};
use crate::resolution::term::{BundleTerm, GradedTermList};

/// Terms of the Koszul resolution of the zero locus of a regular section of
/// `bundle`: `Λ^j(bundle^∨)` in homological degree `−j`, with the generator
/// carrying R-charge `−j · section_rcharge`.
pub fn koszul_terms(bundle: &Character, section_rcharge: i32) -> Result<GradedTermList> {
    if !bundle.is_genuine() {
        let (k, m) = bundle
            .iter()
            .find(|(_, m)| *m < 0)
            .expect("non-genuine character has a negative multiplicity");
        return Err(Error::NegativeMultiplicity {
            weight: format!("{k:?}"),
            multiplicity: m,
        });
    }
    let mut list = GradedTermList::new("Koszul", bundle.ranks().to_vec());
    let powers = dualize(bundle).torus().exterior_powers()?;
    for (j, tw) in powers.iter().enumerate() {
        let j = j as i32;
        for (key, m) in decompose(tw)?.iter() {
            for _ in 0..m {
                list.push(BundleTerm::new(key.clone(), -j, -j * section_rcharge))?;
            }
        }
    }
    Ok(list)
}

/// `Hom(S₂, S₁) = S₁ ⊗ S₂^∨` over `GL(S₁) × GL(S₂)`.
pub fn hom_s2_s1() -> Character {
    use crate::weight::Weight;
    Character::irreducible(vec![
        Weight::new(vec![1, 0]).expect("dominant"),
        Weight::new(vec![0, -1]).expect("dominant"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::binomial;

    #[test]
    fn zero_bundle_gives_structure_sheaf() {
        let list = koszul_terms(&Character::zero(vec![2, 2]), 1).unwrap();
        assert_eq!(list.len(), 1);
        assert!(list.terms()[0].full_weights().iter().all(|w| w.is_trivial()));
        assert_eq!(list.terms()[0].hdeg(), 0);
    }

    #[test]
    fn column_ranks_are_binomial() {
        let list = koszul_terms(&hom_s2_s1(), 0).unwrap();
        for (h, terms) in list.by_hdeg() {
            let total: u64 = terms.iter().map(|t| t.rank()).sum();
            assert_eq!(total, binomial(4, (-h) as u64));
        }
    }

    #[test]
    fn rejects_virtual_bundles() {
        assert!(koszul_terms(&hom_s2_s1().scaled(-1), 0).is_err());
    }
}
