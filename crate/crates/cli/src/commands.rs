use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use flopcalc_core::invariants::{verify_generators, GeneratorSet, PolyRingSpec};
use flopcalc_core::resolution::reference::{
    expected_oc_by_hdeg, expected_table, expected_weyman, first_difference, rendered_table, Layout,
};
use flopcalc_core::resolution::{
    build_complex, convolve_and_cancel, k2_rows, render_columns, render_term, search_alignments,
    weyman_resolution, ComplexKind, GradedTermList, Notation, RChargeConvention, SpringerDatum,
};
use flopcalc_core::window::{
    compare_sets, generate, koszul_restriction_weights, oc_tensor_check, WindowFamily,
};
use flopcalc_core::{Error, Report, Result, Weight};

use crate::range::IntRange;
use crate::Format;

pub struct Outcome {
    pub ok: bool,
    text: String,
    json: Value,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    fn report(r: Report) -> Outcome {
        let mut text = String::new();
        let _ = writeln!(text, "claim: {}", r.claim);
        let _ = writeln!(text, "params: {}", r.params);
        let _ = writeln!(text, "verdict: {}", if r.passed() { "PASS" } else { "FAIL" });
        let _ = writeln!(text, "witnesses:");
        if let Value::Object(map) = &r.witnesses {
            for (k, v) in map {
                let _ = writeln!(text, "  {k}: {v}");
            }
        }
        Outcome {
            ok: r.passed(),
            json: serde_json::to_value(&r).expect("serializable"),
            text,
        }
    }
}

fn read_golden<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let raw = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| Error::InvalidParameters(format!("{} is not a valid golden file: {e}", path.display())))
}

/// Window JSON: `{family, k, n, members}` with members as integer arrays.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct WindowWire {
    pub family: WindowFamily,
    pub k: usize,
    pub n: usize,
    pub members: Vec<Vec<i32>>,
}

fn window_wire(family: &str, k: usize, n: usize) -> Result<WindowWire> {
    let family: WindowFamily = family.parse()?;
    let ws = generate(family, k, n)?;
    Ok(WindowWire {
        family,
        k,
        n,
        members: ws.sorted_list(),
    })
}

fn fmt_weights(ws: &[Vec<i32>]) -> String {
    ws.iter()
        .map(|w| {
            let parts: Vec<String> = w.iter().map(i32::to_string).collect();
            format!("({})", parts.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn window_generate(family: &str, k: usize, n: usize) -> Result<Outcome> {
    let wire = window_wire(family, k, n)?;
    let text = format!(
        "{}(k={}, n={}): {} weights\n{}\n",
        wire.family,
        k,
        n,
        wire.members.len(),
        fmt_weights(&wire.members)
    );
    Ok(Outcome {
        ok: true,
        json: serde_json::to_value(&wire).expect("serializable"),
        text,
    })
}

pub fn window_compare(family: &str, k: usize, n: usize, golden: &Path) -> Result<Outcome> {
    let got = window_wire(family, k, n)?;
    let want: WindowWire = read_golden(golden)?;
    let g: BTreeSet<_> = got.members.iter().cloned().collect();
    let w: BTreeSet<_> = want.members.iter().cloned().collect();
    let missing: Vec<_> = w.difference(&g).cloned().collect();
    let extra: Vec<_> = g.difference(&w).cloned().collect();
    let header_ok = (got.family, got.k, got.n) == (want.family, want.k, want.n);
    let ok = header_ok && missing.is_empty() && extra.is_empty();
    Ok(Outcome::report(Report::new(
        "generated window equals golden file",
        json!({"family": got.family, "k": k, "n": n, "golden": golden.display().to_string()}),
        ok,
        json!({"header_matches": header_ok, "missing": missing, "extra": extra}),
    )))
}

fn complex_list(which: &str, p_weight: i32) -> Result<GradedTermList> {
    if which.eq_ignore_ascii_case("weyman") {
        return weyman_resolution(&SpringerDatum::planes(p_weight));
    }
    build_complex(which.parse()?, RChargeConvention::uniform(p_weight))
}

fn render_by_hdeg(list: &GradedTermList) -> String {
    let notation = Notation::for_ranks(list.ranks());
    let mut out = format!("{} (by homological degree)\n", list.label());
    for (h, terms) in list.by_hdeg().into_iter().rev() {
        let names: Vec<String> = terms.iter().map(|t| render_term(t, &notation)).collect();
        let _ = writeln!(out, "  F{:<2} {}", -h, names.join(" ⊕ "));
    }
    out
}

pub fn complex(which: &str, p_weight: i32, by_hdeg: bool, golden: Option<&Path>) -> Result<Outcome> {
    let list = complex_list(which, p_weight)?;
    if let Some(path) = golden {
        let want: GradedTermList = read_golden(path)?;
        let ok = want == list;
        return Ok(Outcome::report(Report::new(
            "complex equals golden file",
            json!({"complex": list.label(), "rcharge_unit": p_weight, "golden": path.display().to_string()}),
            ok,
            json!({"computed_terms": list.len(), "golden_terms": want.len()}),
        )));
    }
    let text = if by_hdeg {
        render_by_hdeg(&list)
    } else {
        render_columns(&list)
    };
    Ok(Outcome {
        ok: true,
        json: serde_json::to_value(&list).expect("serializable"),
        text,
    })
}

pub fn verify_lemma31(k: &IntRange, n: &IntRange) -> Result<Outcome> {
    let mut cases = Vec::new();
    let mut ok = true;
    for k in k.values() {
        for n in n.values() {
            let r = koszul_restriction_weights(k, n)?;
            let window = generate(WindowFamily::GflopW, k, n)?.members;
            let cmp = compare_sets(&r.weights, &window);
            let good = r.weights == window;
            ok &= good;
            cases.push(json!({
                "k": k,
                "n": n,
                "convention": r.convention,
                "weights": r.weights.len(),
                "window": window.len(),
                "comparison": cmp,
            }));
        }
    }
    Ok(Outcome::report(Report::new(
        "restricted Koszul complex has weights exactly the window {γ : 0 ≤ γ_k, γ_1 ≤ n − k}",
        json!({"k": k.to_string(), "n": n.to_string()}),
        ok,
        json!({"cases": cases}),
    )))
}

pub fn verify_prop44(n: &IntRange) -> Result<Outcome> {
    let oc = flopcalc_core::resolution::oc_weights()?;
    let expected: BTreeSet<Weight> = flopcalc_core::window::oc_factor_weights().into_iter().collect();
    let mut ok = oc.s2 == expected;
    let mut cases = Vec::new();
    for n in n.values() {
        let check = oc_tensor_check(n)?;
        ok &= check.holds();
        cases.push(json!({"n": n, "comparison": check.comparison, "product": check.product.len(), "target": check.target.len()}));
    }
    Ok(Outcome::report(Report::new(
        "O_C has S2-weights {C, S2, det S2} and their products with W(2,n) fill Wprime(2,n)",
        json!({"n": n.to_string()}),
        ok,
        json!({"oc_s2_weights": oc.s2, "oc_s1_weights": oc.s1, "cases": cases}),
    )))
}

fn golden_witness(list: &GradedTermList, golden: Option<&Path>) -> Result<(bool, Value)> {
    match golden {
        None => Ok((true, Value::Null)),
        Some(p) => {
            let want: GradedTermList = read_golden(p)?;
            Ok((want == *list, json!(p.display().to_string())))
        }
    }
}

fn table_witness(got: &[Vec<String>], want: &[Vec<String>]) -> (bool, Value) {
    match first_difference(got, want) {
        None => (true, Value::Null),
        Some((i, g, w)) => (false, json!({"column": i, "computed": g, "expected": w})),
    }
}

pub fn verify_resolve_oc(golden: Option<&Path>) -> Result<Outcome> {
    let list = build_complex(ComplexKind::Oc, RChargeConvention::STANDARD)?;
    let (hdeg_ok, hdeg_diff) = table_witness(&rendered_table(&list, Layout::Hdeg), &expected_oc_by_hdeg());
    let (col_ok, col_diff) = table_witness(
        &rendered_table(&list, Layout::Column),
        &expected_table(ComplexKind::Oc),
    );
    let (golden_ok, golden_path) = golden_witness(&list, golden)?;
    Ok(Outcome::report(Report::new(
        "O_C over GL(S1) x GL(S2) is O(-1,1) → Hom(S1,S2) ⊕ O(-1,1) → O ⊕ Hom(S1,S2) → O",
        json!({"rcharge_unit": 2}),
        hdeg_ok && col_ok && golden_ok,
        json!({
            "resolution": flopcalc_core::resolution::render_resolution(&list),
            "hdeg_difference": hdeg_diff,
            "column_difference": col_diff,
            "golden": golden_path,
            "golden_matches": golden_ok,
        }),
    )))
}

pub fn verify_weyman(golden: Option<&Path>) -> Result<Outcome> {
    let list = weyman_resolution(&SpringerDatum::planes(2))?;
    let (ok, diff) = table_witness(&rendered_table(&list, Layout::Hdeg), &expected_weyman());
    let (golden_ok, golden_path) = golden_witness(&list, golden)?;
    Ok(Outcome::report(Report::new(
        "the Springer-type datum (det U ⊕ U) over Gr(2,H) resolves O_C by (det H)^-2 → H^∨(det H)^-1 ⊕ (det H)^-1 → (det H)^-1 ⊕ Λ^3 H^∨ → O",
        json!({"dim_h": 4, "k": 2}),
        ok && golden_ok,
        json!({
            "resolution": flopcalc_core::resolution::render_resolution(&list),
            "difference": diff,
            "golden": golden_path,
            "golden_matches": golden_ok,
        }),
    )))
}

pub fn verify_cancellation(unit: &str, max_offset: i32) -> Result<Outcome> {
    if max_offset < 0 {
        return Err(Error::InvalidParameters("max offset must be nonnegative".into()));
    }
    let conventions = if unit.eq_ignore_ascii_case("auto") {
        RChargeConvention::candidates()
    } else {
        let u: i32 = unit
            .parse()
            .map_err(|_| Error::InvalidParameters(format!("rcharge unit must be auto or an integer, got {unit:?}")))?;
        if u <= 0 {
            return Err(Error::InvalidParameters("rcharge unit must be positive".into()));
        }
        vec![RChargeConvention::uniform(u)]
    };
    let found = search_alignments(&conventions, max_offset)?;
    let mut witnesses = json!({
        "tried": conventions.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "alignments": found.iter().map(|a| json!({
            "convention": a.convention.to_string(),
            "offsets": {"I2": a.offsets[0], "I1": a.offsets[1], "I0": a.offsets[2]},
            "pairs": a.pairs,
            "residual_matches_table": a.matches_reference,
        })).collect::<Vec<_>>(),
    });
    let good = found.iter().find(|a| a.matches_reference);
    let mut ok = good.is_some();
    if let Some(first) = good {
        let rows = k2_rows(first.convention, first.offsets)?;
        let target = build_complex(ComplexKind::DeltaBar, first.convention)?;
        let outcome = convolve_and_cancel(&rows, &target)?;
        let notation = Notation::Planes;
        let pairs: Vec<String> = outcome
            .pairs
            .iter()
            .map(|p| {
                let t = flopcalc_core::BundleTerm::new(p.bundle.clone(), 0, 0);
                format!(
                    "{} {}[{}] → {}[{}]",
                    render_term(&t, &notation),
                    p.source_row,
                    p.column,
                    p.target_row,
                    p.column + 1
                )
            })
            .collect();
        ok &= outcome.k_class_conserved();
        witnesses["normalization"] = json!(first.convention);
        witnesses["cancelled"] = json!(pairs);
        witnesses["k_class_conserved"] = json!(outcome.k_class_conserved());
        witnesses["residual"] = json!(rendered_table(&outcome.residual, Layout::Column));
    }
    Ok(Outcome::report(Report::new(
        "the convolution of I2[-6] → I1[-2] → I0 cancels term by term to the closure of the diagonal",
        json!({"rcharge_unit": unit, "max_offset": max_offset}),
        ok,
        witnesses,
    )))
}

pub fn verify_invariants(n: usize, max_deg: u32, omit: &[String], limit: usize) -> Result<Outcome> {
    if !(1..=3).contains(&n) || max_deg > 8 {
        return Err(Error::InvalidParameters(format!(
            "bounded verification runs for n ≤ 3 and degree ≤ 8, got n = {n}, degree {max_deg}"
        )));
    }
    let ring = PolyRingSpec::new(n)?;
    let omit: Vec<&str> = omit.iter().map(String::as_str).collect();
    let gens = GeneratorSet::standard(ring).without(&omit);
    let report = verify_generators(&gens, max_deg, limit)?;
    let discrepancies: Vec<Value> = report
        .discrepancies
        .iter()
        .map(|b| json!({"multidegree": b.multidegree.to_string(), "invariants": b.invariant_dim, "generated": b.subalgebra_dim}))
        .collect();
    let nonzero = report.blocks.iter().filter(|b| b.invariant_dim > 0).count();
    Ok(Outcome::report(Report::new(
        "entries of xy, xpy, det p and tr p generate the GL(S)-invariants (bounded verification)",
        json!({"n": n, "max_total_degree": max_deg, "omitted": omit}),
        report.passed(),
        json!({
            "generators": report.generators.len(),
            "non_invariant_generators": report.non_invariant_generators,
            "blocks": report.blocks.len(),
            "blocks_with_invariants": nonzero,
            "discrepancies": discrepancies,
        }),
    )))
}

pub fn verify_tseu_eq(n: &IntRange) -> Result<Outcome> {
    let mut ok = true;
    let mut cases = Vec::new();
    let oc = build_complex(ComplexKind::Oc, RChargeConvention::STANDARD)?;
    let db = build_complex(ComplexKind::DeltaBar, RChargeConvention::STANDARD)?;
    for n in n.values() {
        let t = generate(WindowFamily::Tseu, 2, n)?.members;
        let w = generate(WindowFamily::MukaiWPrime, 2, n)?.members;
        let terms_inside = oc.factor_contents(1).is_subset(&t) && db.factor_contents(1).is_subset(&t);
        ok &= t == w && terms_inside;
        cases.push(json!({"n": n, "comparison": compare_sets(&t, &w), "oc_and_delta_bar_terms_inside": terms_inside}));
    }
    Ok(Outcome::report(Report::new(
        "TSEU(2,n) equals Wprime(2,n)",
        json!({"k": 2, "n": n.to_string()}),
        ok,
        json!({"cases": cases}),
    )))
}
