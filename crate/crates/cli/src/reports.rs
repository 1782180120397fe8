//! JSON views of the library's exact report types, plus their
//! human-readable renderings. The JSON document is the primary output;
//! the text form is a formatting layer over the same data.

use serde_json::{json, Value};

use tdpair::conjectures::{ConjectureSuite, SplitTableRow, Verdict, Witness};
use tdpair::forms::{AlgebraExpression, DualIsoReport, FourIsoReport};
use tdpair::pair::{AxiomResult, ParameterArray, SplitData, VerificationReport};
use tdpair::wire;
use tdpair::Matrix;

pub fn axiom_json(axiom: &AxiomResult) -> Value {
    match axiom {
        AxiomResult::Pass => json!({"status": "pass"}),
        AxiomResult::Fail { witness } => json!({"status": "fail", "witness": witness}),
        AxiomResult::Skipped { reason } => json!({"status": "skipped", "reason": reason}),
    }
}

pub fn verification_json(report: &VerificationReport) -> Value {
    let mut doc = json!({
        "dim": report.dim,
        "pass": report.passes(),
        "axioms": {
            "diagonalizable": axiom_json(&report.diagonalizable),
            "a_tridiagonal": axiom_json(&report.a_tridiagonal),
            "astar_tridiagonal": axiom_json(&report.astar_tridiagonal),
            "irreducible": axiom_json(&report.irreducible),
        },
        "algebra_dim": report.algebra_dim,
    });
    if let Some(basis) = &report.invariant_subspace {
        doc["invariant_subspace"] = json!(wire::vectors_to_rows(basis));
    }
    doc
}

pub fn render_verification(report: &VerificationReport) -> String {
    let line = |name: &str, axiom: &AxiomResult| match axiom {
        AxiomResult::Pass => format!("  {name}: pass"),
        AxiomResult::Fail { witness } => format!("  {name}: FAIL — {witness}"),
        AxiomResult::Skipped { reason } => format!("  {name}: skipped ({reason})"),
    };
    let mut out = vec![
        format!(
            "verification ({}x{} pair): {}",
            report.dim,
            report.dim,
            if report.passes() { "pass" } else { "FAIL" }
        ),
        line("axiom 1, both diagonalizable", &report.diagonalizable),
        line("axiom 2, tridiagonal on A-eigenspaces", &report.a_tridiagonal),
        line("axiom 3, tridiagonal on A*-eigenspaces", &report.astar_tridiagonal),
        line("axiom 4, irreducible pair action", &report.irreducible),
        format!("  generated algebra dimension: {}", report.algebra_dim),
    ];
    if let Some(basis) = &report.invariant_subspace {
        out.push(format!(
            "  invariant subspace witness: {:?}",
            wire::vectors_to_rows(basis)
        ));
    }
    out.join("\n")
}

pub fn matrix_json(m: &Matrix) -> Value {
    json!(wire::matrix_to_rows(m))
}

pub fn split_json(split: &SplitData) -> Value {
    json!({
        "theta": wire::scalars_to_strings(&split.theta),
        "theta_star": wire::scalars_to_strings(&split.theta_star),
        "u_dims": split.u_dims(),
        "u_bases": split
            .u_bases
            .iter()
            .map(|b| wire::vectors_to_rows(b))
            .collect::<Vec<_>>(),
    })
}

pub fn parameter_array_json(pa: &ParameterArray) -> Value {
    json!({
        "theta": wire::scalars_to_strings(&pa.theta),
        "theta_star": wire::scalars_to_strings(&pa.theta_star),
        "zeta": wire::scalars_to_strings(&pa.zeta),
    })
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::NotApplicable => "not-applicable",
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::UnequalScalars { left, right } => json!({
            "left": wire::scalar_to_string(left),
            "right": wire::scalar_to_string(right),
        }),
        Witness::VanishingScalar { context } => json!({"vanishing": context}),
        Witness::Matrix(m) => json!({"matrix": wire::matrix_to_rows(m)}),
    }
}

pub fn suite_json(suite: &ConjectureSuite) -> Value {
    json!({
        "all_hold": suite.all_hold(),
        "reports": suite
            .reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "verdict": verdict_str(r.verdict),
                    "items": r
                        .items
                        .iter()
                        .map(|item| {
                            let mut v = json!({
                                "label": item.label,
                                "verdict": verdict_str(item.verdict),
                            });
                            if let Some(w) = &item.witness {
                                v["witness"] = witness_json(w);
                            }
                            v
                        })
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
        "split_sequence_table": split_table_json(&suite.split_table),
    })
}

pub fn split_table_json(rows: &[SplitTableRow]) -> Value {
    json!(rows
        .iter()
        .map(|row| {
            json!({
                "member_order": row.member_order,
                "first_reversed": row.first_reversed,
                "second_reversed": row.second_reversed,
                "zeta": row
                    .zeta
                    .as_ref()
                    .map(|z| wire::scalars_to_strings(z)),
            })
        })
        .collect::<Vec<_>>())
}

pub fn render_suite(suite: &ConjectureSuite) -> String {
    let mut out = Vec::new();
    for r in &suite.reports {
        out.push(format!("  {}: {}", r.id, verdict_str(r.verdict)));
        for item in &r.items {
            if item.verdict == Verdict::Fails {
                out.push(format!("    FAILS: {}", item.label));
                if let Some(w) = &item.witness {
                    out.push(format!("      witness: {}", witness_json(w)));
                }
            }
        }
    }
    out.join("\n")
}

pub fn expression_json(expr: &AlgebraExpression) -> Value {
    json!({
        "words": expr.words,
        "coefficients": wire::scalars_to_strings(&expr.coefficients),
        "display": expr.display(),
    })
}

pub fn four_iso_json(report: &FourIsoReport) -> Value {
    json!({
        "to_negated": matrix_json(&report.to_negated.gamma),
        "to_swapped": matrix_json(&report.to_swapped.gamma),
        "to_negated_swapped": matrix_json(&report.to_negated_swapped.gamma),
    })
}

pub fn dual_iso_json(report: &DualIsoReport) -> Value {
    json!({
        "certificate": matrix_json(&report.certificate.gamma),
        "form_is_certificate": report.form_is_certificate,
    })
}
