//! Text rendering in the `O(a,b)` / `Sym^2` / `Hom` notation.

use std::fmt::Write;

use crate::resolution::term::{BundleTerm, GradedTermList};
use crate::weight::Weight;

/// How the factors of a term are named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Notation {
    /// `GL(S₁) × GL(S₂)`: `S₁` written through its dual, `S₂` directly, the
    /// det powers collected as `O(a,b) = (det S₁)^a (det S₂)^b`.
    Planes,
    /// A single `GL(H)` factor written through `H^∨` and powers of `det H`.
    Ambient(String),
}

impl Notation {
    pub fn for_ranks(ranks: &[usize]) -> Notation {
        match ranks {
            [_, _] => Notation::Planes,
            _ => Notation::Ambient("H".into()),
        }
    }
}

fn schur_name(lambda: &[i32], base: &str) -> Option<String> {
    let nonzero: Vec<i32> = lambda.iter().copied().filter(|&p| p != 0).collect();
    match nonzero.as_slice() {
        [] => None,
        [1] => Some(base.to_string()),
        [m] => Some(format!("Sym^{m} {base}")),
        ones if ones.iter().all(|&p| p == 1) => Some(format!("Λ^{} {base}", ones.len())),
        _ => {
            let parts: Vec<String> = nonzero.iter().map(i32::to_string).collect();
            Some(format!("S^({}) {base}", parts.join(",")))
        }
    }
}

/// `w = S^μ(F^∨) ⊗ det^t` with `t` the top part.
fn dual_form(w: &Weight, base: &str) -> (Option<String>, i32) {
    let t = w.parts().first().copied().unwrap_or(0);
    let mu: Vec<i32> = w.parts().iter().rev().map(|p| t - p).collect();
    (schur_name(&mu, &format!("{base}^∨")), t)
}

/// `w = S^λ(F) ⊗ det^t` with `t` the bottom part.
fn direct_form(w: &Weight, base: &str) -> (Option<String>, i32) {
    let (lambda, t) = w.normalized();
    (schur_name(lambda.parts(), base), t)
}

pub fn render_term(term: &BundleTerm, notation: &Notation) -> String {
    match notation {
        Notation::Planes if term.factors().len() == 2 => {
            let (p1, a) = dual_form(&term.full_weight(0), "S1");
            let (p2, b) = direct_form(&term.full_weight(1), "S2");
            let pieces: Vec<String> = p1.into_iter().chain(p2).collect();
            let twist = if (a, b) == (0, 0) {
                String::new()
            } else {
                format!("({a},{b})")
            };
            if pieces.is_empty() {
                format!("O{twist}")
            } else {
                format!("{}{twist}", pieces.join("⊗"))
            }
        }
        Notation::Ambient(name) if term.factors().len() == 1 => {
            let (piece, t) = dual_form(&term.full_weight(0), name);
            let det = if t == 0 {
                String::new()
            } else {
                format!("(det {name})^{t}")
            };
            match (piece, det.is_empty()) {
                (None, true) => "O".into(),
                (None, false) => det,
                (Some(p), _) => format!("{p}{det}"),
            }
        }
        _ => {
            let parts: Vec<String> = term.full_weights().iter().map(Weight::to_string).collect();
            format!("S^{}", parts.join("⊠"))
        }
    }
}

/// Column-by-column rendering, leftmost column first.
pub fn render_columns(list: &GradedTermList) -> String {
    let notation = Notation::for_ranks(list.ranks());
    let mut out = String::new();
    let _ = writeln!(out, "{}", list.label());
    for (c, terms) in list.by_column() {
        let names: Vec<String> = terms.iter().map(|t| render_term(t, &notation)).collect();
        let _ = writeln!(out, "  [{c:>3}] {}", names.join(" ⊕ "));
    }
    out
}

/// Homological rendering `F_i → … → F_0`.
pub fn render_resolution(list: &GradedTermList) -> String {
    let notation = Notation::for_ranks(list.ranks());
    let cols: Vec<String> = list
        .by_hdeg()
        .into_values()
        .map(|terms| {
            terms
                .iter()
                .map(|t| render_term(t, &notation))
                .collect::<Vec<_>>()
                .join(" ⊕ ")
        })
        .collect();
    format!("{}: {}", list.label(), cols.join(" → "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[i32]) -> Weight {
        Weight::new(p.to_vec()).unwrap()
    }

    fn planes(a: &[i32], b: &[i32]) -> String {
        render_term(&BundleTerm::new(vec![w(a), w(b)], 0, 0), &Notation::Planes)
    }

    fn ambient(a: &[i32]) -> String {
        render_term(
            &BundleTerm::new(vec![w(a)], 0, 0),
            &Notation::Ambient("H".into()),
        )
    }

    #[test]
    fn plane_notation() {
        assert_eq!(planes(&[0, 0], &[0, 0]), "O");
        assert_eq!(planes(&[-2, -2], &[2, 2]), "O(-2,2)");
        assert_eq!(planes(&[0, -1], &[1, 0]), "S1^∨⊗S2");
        assert_eq!(planes(&[-1, -2], &[2, 1]), "S1^∨⊗S2(-1,1)");
        assert_eq!(planes(&[-1, -1], &[2, 0]), "Sym^2 S2(-1,0)");
        assert_eq!(planes(&[0, -2], &[1, 1]), "Sym^2 S1^∨(0,1)");
    }

    #[test]
    fn ambient_notation() {
        assert_eq!(ambient(&[0, 0, 0, 0]), "O");
        assert_eq!(ambient(&[-2, -2, -2, -2]), "(det H)^-2");
        assert_eq!(ambient(&[-1, -1, -1, -2]), "H^∨(det H)^-1");
        assert_eq!(ambient(&[0, -1, -1, -1]), "Λ^3 H^∨");
    }
}
