//! Executable conjecture checks, run instance by instance.
//!
//! Every check recomputes both sides of its claimed identity through
//! independent routes (split decomposition on one side, traces of projector
//! products on the other) and compares exactly. Verdicts are `Holds`,
//! `Fails` (always with an exact witness), or `NotApplicable` when a
//! hypothesis such as ρ_0 = 1 is not met.

use num::{One, Zero};

use crate::constructions;
use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::poly::Poly;
use crate::linalg::scalar::{self, Scalar};
use crate::pair::{parameter_array_for, split_sequence, ParameterArray, TdPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

/// Exact evidence attached to a failing item.
#[derive(Clone, Debug)]
pub enum Witness {
    UnequalScalars { left: Scalar, right: Scalar },
    VanishingScalar { context: String },
    Matrix(Matrix),
}

#[derive(Clone, Debug)]
pub struct CheckItem {
    pub label: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl CheckItem {
    fn holds(label: impl Into<String>) -> Self {
        CheckItem {
            label: label.into(),
            verdict: Verdict::Holds,
            witness: None,
        }
    }

    fn fails(label: impl Into<String>, witness: Witness) -> Self {
        CheckItem {
            label: label.into(),
            verdict: Verdict::Fails,
            witness: Some(witness),
        }
    }

    fn not_applicable(label: impl Into<String>) -> Self {
        CheckItem {
            label: label.into(),
            verdict: Verdict::NotApplicable,
            witness: None,
        }
    }

    fn equality(label: impl Into<String>, left: Scalar, right: Scalar) -> Self {
        if left == right {
            CheckItem::holds(label)
        } else {
            CheckItem::fails(label, Witness::UnequalScalars { left, right })
        }
    }
}

/// Per-conjecture verdict with itemized evidence.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub id: &'static str,
    pub verdict: Verdict,
    pub items: Vec<CheckItem>,
}

impl ConjectureReport {
    fn from_items(id: &'static str, items: Vec<CheckItem>) -> Self {
        let verdict = if items.iter().any(|i| i.verdict == Verdict::Fails) {
            Verdict::Fails
        } else if !items.is_empty() && items.iter().all(|i| i.verdict == Verdict::NotApplicable) {
            Verdict::NotApplicable
        } else {
            Verdict::Holds
        };
        ConjectureReport { id, verdict, items }
    }

    fn not_applicable(id: &'static str, reason: impl Into<String>) -> Self {
        ConjectureReport {
            id,
            verdict: Verdict::NotApplicable,
            items: vec![CheckItem::not_applicable(reason)],
        }
    }
}

/// The primitive idempotents for the leading eigenvalues of the canonical
/// orderings: the spectral projector of A for θ_0 and of A* for θ*_0.
/// For a Krawtchouk-type pair these are the projectors at d and −d.
pub fn idempotent_e0(pair: &TdPair) -> (Matrix, Matrix) {
    let theta0 = &pair.standard_orderings().theta[0][0];
    let theta_star0 = &pair.standard_orderings().theta_star[1][0];
    let e0 = pair
        .eigen_a()
        .projector_for(theta0)
        .expect("ordering value is an eigenvalue")
        .clone();
    let e0_star = pair
        .eigen_astar()
        .projector_for(theta_star0)
        .expect("ordering value is an eigenvalue")
        .clone();
    (e0, e0_star)
}

fn canonical_parameter_array(pair: &TdPair) -> Result<ParameterArray> {
    let theta = pair.standard_orderings().theta[0].clone();
    let theta_star = pair.standard_orderings().theta_star[1].clone();
    parameter_array_for(pair, &theta, &theta_star)
}

/// Π_{k=1..i} (x_0 − x_k).
fn leading_differences(values: &[Scalar], i: usize) -> Scalar {
    let x0 = &values[0];
    values[1..=i].iter().map(|x| x0 - x).product()
}

/// ζ_i recovered from traces against the primitive idempotents:
///   ζ_i = (θ*_0−θ*_1)···(θ*_0−θ*_i) · tr(τ_i(A)·E*_0)
///   ζ_i = (θ_0−θ_1)···(θ_0−θ_i) · tr(τ*_i(A*)·E_0)
/// with τ_i = (λ−θ_0)···(λ−θ_{i−1}) and the starred analogue.
pub fn zeta_trace_report(pair: &TdPair) -> ConjectureReport {
    const ID: &str = "split-sequence-trace";
    let pa = match canonical_parameter_array(pair) {
        Ok(pa) => pa,
        Err(Error::Rho0NotOne { dim }) => {
            return ConjectureReport::not_applicable(ID, format!("dim U_0 = {dim}"))
        }
        Err(e) => {
            return ConjectureReport::not_applicable(ID, format!("parameter array unavailable: {e}"))
        }
    };
    let (e0, e0_star) = idempotent_e0(pair);
    let d = pa.diameter();
    let mut items = Vec::new();
    for i in 0..=d {
        let tau_i = Poly::from_roots(&pa.theta[..i]);
        let tau_star_i = Poly::from_roots(&pa.theta_star[..i]);
        let via_astar = leading_differences(&pa.theta_star, i)
            * (&tau_i.eval_matrix(pair.a()) * &e0_star).trace();
        items.push(CheckItem::equality(
            format!("zeta_{i} from tr(tau_{i}(A) E*_0)"),
            via_astar,
            pa.zeta[i].clone(),
        ));
        let via_a = leading_differences(&pa.theta, i)
            * (&tau_star_i.eval_matrix(pair.astar()) * &e0).trace();
        items.push(CheckItem::equality(
            format!("zeta_{i} from tr(tau*_{i}(A*) E_0)"),
            via_a,
            pa.zeta[i].clone(),
        ));
    }
    ConjectureReport::from_items(ID, items)
}

/// The trace-ratio form of the same sequence:
///   tr(E_0 E*_0) ≠ 0 and
///   ζ_i = tr(E_0 τ*_i(A*) τ_i(A) E*_0) / tr(E_0 E*_0)
///       = tr(E*_0 τ_i(A) τ*_i(A*) E_0) / tr(E*_0 E_0).
pub fn trace_ratio_report(pair: &TdPair) -> ConjectureReport {
    const ID: &str = "split-sequence-trace-ratio";
    let pa = match canonical_parameter_array(pair) {
        Ok(pa) => pa,
        Err(Error::Rho0NotOne { dim }) => {
            return ConjectureReport::not_applicable(ID, format!("dim U_0 = {dim}"))
        }
        Err(e) => {
            return ConjectureReport::not_applicable(ID, format!("parameter array unavailable: {e}"))
        }
    };
    let (e0, e0_star) = idempotent_e0(pair);
    let denom = (&e0 * &e0_star).trace();
    let mut items = Vec::new();
    if denom.is_zero() {
        items.push(CheckItem::fails(
            "tr(E_0 E*_0) != 0",
            Witness::VanishingScalar {
                context: "tr(E_0 E*_0)".into(),
            },
        ));
        return ConjectureReport::from_items(ID, items);
    }
    items.push(CheckItem::holds("tr(E_0 E*_0) != 0"));
    let denom_rev = (&e0_star * &e0).trace();
    for i in 0..=pa.diameter() {
        let tau_i = Poly::from_roots(&pa.theta[..i]).eval_matrix(pair.a());
        let tau_star_i = Poly::from_roots(&pa.theta_star[..i]).eval_matrix(pair.astar());
        let first = (&(&(&e0 * &tau_star_i) * &tau_i) * &e0_star).trace() / &denom;
        items.push(CheckItem::equality(
            format!("zeta_{i} from tr(E_0 tau*_{i} tau_{i} E*_0)/tr(E_0 E*_0)"),
            first,
            pa.zeta[i].clone(),
        ));
        let second = (&(&(&e0_star * &tau_i) * &tau_star_i) * &e0).trace() / &denom_rev;
        items.push(CheckItem::equality(
            format!("zeta_{i} from tr(E*_0 tau_{i} tau*_{i} E_0)/tr(E*_0 E_0)"),
            second,
            pa.zeta[i].clone(),
        ));
    }
    ConjectureReport::from_items(ID, items)
}

/// One row of the eight-sequence table: which member order and which
/// ordering orientations were used, and the resulting sequence.
#[derive(Clone, Debug)]
pub struct SplitTableRow {
    /// "A,A*" or "A*,A".
    pub member_order: &'static str,
    /// Orientation of the first member's eigenvalue ordering.
    pub first_reversed: bool,
    /// Orientation of the second member's eigenvalue ordering.
    pub second_reversed: bool,
    /// The split sequence, or `None` when dim U_0 ≠ 1 for this combination.
    pub zeta: Option<Vec<Scalar>>,
}

/// The split sequences of A,A* and of A*,A under all four orientation
/// combinations of the canonical orderings — raw data for studying the
/// algebraic relationships between them.
pub fn eight_split_sequences(pair: &TdPair) -> Result<Vec<SplitTableRow>> {
    let theta = pair.standard_orderings().theta[0].clone();
    let theta_star = pair.standard_orderings().theta_star[1].clone();
    let reversed = |v: &[Scalar]| {
        let mut r = v.to_vec();
        r.reverse();
        r
    };
    let swapped = constructions::swap(pair);
    let mut rows = Vec::with_capacity(8);
    for (first_rev, second_rev) in [(false, false), (true, false), (false, true), (true, true)] {
        let t = if first_rev { reversed(&theta) } else { theta.clone() };
        let ts = if second_rev {
            reversed(&theta_star)
        } else {
            theta_star.clone()
        };
        let zeta = match split_sequence(pair, &t, &ts) {
            Ok(z) => Some(z),
            Err(Error::Rho0NotOne { .. }) => None,
            Err(e) => return Err(e),
        };
        rows.push(SplitTableRow {
            member_order: "A,A*",
            first_reversed: first_rev,
            second_reversed: second_rev,
            zeta,
        });
    }
    for (first_rev, second_rev) in [(false, false), (true, false), (false, true), (true, true)] {
        let ts = if first_rev {
            reversed(&theta_star)
        } else {
            theta_star.clone()
        };
        let t = if second_rev { reversed(&theta) } else { theta.clone() };
        let zeta = match split_sequence(&swapped, &ts, &t) {
            Ok(z) => Some(z),
            Err(Error::Rho0NotOne { .. }) => None,
            Err(e) => return Err(e),
        };
        rows.push(SplitTableRow {
            member_order: "A*,A",
            first_reversed: first_rev,
            second_reversed: second_rev,
            zeta,
        });
    }
    Ok(rows)
}

/// Swap symmetry of the split sequence: the sequence of A,A* with respect
/// to (θ; θ*) coincides with the sequence of A*,A with respect to (θ*; θ).
pub fn swap_symmetry_report(pair: &TdPair) -> Result<ConjectureReport> {
    const ID: &str = "split-sequence-swap-symmetry";
    let rows = eight_split_sequences(pair)?;
    let direct = &rows[0];
    let swapped = &rows[4];
    let item = match (&direct.zeta, &swapped.zeta) {
        (Some(a), Some(b)) => {
            if a == b {
                CheckItem::holds("zeta(A,A*; theta, theta*) == zeta(A*,A; theta*, theta)")
            } else {
                let k = a.iter().zip(b).position(|(x, y)| x != y).unwrap_or(0);
                CheckItem::fails(
                    format!("sequences differ first at index {k}"),
                    Witness::UnequalScalars {
                        left: a[k].clone(),
                        right: b[k].clone(),
                    },
                )
            }
        }
        _ => CheckItem::not_applicable("dim U_0 != 1 for one of the combinations"),
    };
    Ok(ConjectureReport::from_items(ID, vec![item]))
}

/// Conditions a parameter array is conjectured to satisfy exactly when it
/// is realized by some pair:
///   (i)  ζ_0 = 1, ζ_d ≠ 0, and the alternating-product sum is nonzero;
///   (ii) the θ_i are pairwise distinct, likewise the θ*_i;
///   (iii) (θ_{i−2}−θ_{i+1})/(θ_{i−1}−θ_i) and its starred companion are
///         equal and independent of i on 2 ≤ i ≤ d−1.
pub fn parameter_array_conditions(pa: &ParameterArray) -> ConjectureReport {
    const ID: &str = "parameter-array-conditions";
    let d = pa.diameter();
    let mut items = Vec::new();

    // (i)
    if pa.zeta[0].is_one() {
        items.push(CheckItem::holds("zeta_0 = 1"));
    } else {
        items.push(CheckItem::fails(
            "zeta_0 = 1",
            Witness::UnequalScalars {
                left: pa.zeta[0].clone(),
                right: Scalar::one(),
            },
        ));
    }
    if pa.zeta[d].is_zero() {
        items.push(CheckItem::fails(
            "zeta_d != 0",
            Witness::VanishingScalar {
                context: format!("zeta_{d}"),
            },
        ));
    } else {
        items.push(CheckItem::holds("zeta_d != 0"));
    }
    let sum: Scalar = (0..=d)
        .map(|i| {
            let tail: Scalar = pa.theta[i + 1..].iter().map(|t| &pa.theta[0] - t).product();
            let tail_star: Scalar = pa.theta_star[i + 1..]
                .iter()
                .map(|t| &pa.theta_star[0] - t)
                .product();
            &pa.zeta[i] * tail * tail_star
        })
        .sum();
    if sum.is_zero() {
        items.push(CheckItem::fails(
            "sum of zeta_i prod(theta_0-theta_k) prod(theta*_0-theta*_k) != 0",
            Witness::VanishingScalar {
                context: "alternating-product sum".into(),
            },
        ));
    } else {
        items.push(CheckItem::holds(
            "sum of zeta_i prod(theta_0-theta_k) prod(theta*_0-theta*_k) != 0",
        ));
    }

    // (ii)
    let distinct = |values: &[Scalar]| {
        for i in 0..values.len() {
            for j in 0..i {
                if values[i] == values[j] {
                    return Some((j, i));
                }
            }
        }
        None
    };
    let mut pairwise_ok = true;
    for (label, values) in [("theta", &pa.theta), ("theta*", &pa.theta_star)] {
        match distinct(values) {
            None => items.push(CheckItem::holds(format!("{label} pairwise distinct"))),
            Some((j, i)) => {
                pairwise_ok = false;
                items.push(CheckItem::fails(
                    format!("{label} pairwise distinct (indices {j}, {i} coincide)"),
                    Witness::UnequalScalars {
                        left: values[j].clone(),
                        right: values[i].clone(),
                    },
                ));
            }
        }
    }

    // (iii) — vacuous for d ≤ 2; needs (ii) for the denominators.
    if d < 3 {
        items.push(CheckItem::holds("eigenvalue ratio condition (vacuous)"));
    } else if !pairwise_ok {
        items.push(CheckItem::not_applicable(
            "eigenvalue ratio condition (denominators vanish)",
        ));
    } else {
        let mut ratios = Vec::new();
        for i in 2..d {
            ratios.push((&pa.theta[i - 2] - &pa.theta[i + 1]) / (&pa.theta[i - 1] - &pa.theta[i]));
            ratios.push(
                (&pa.theta_star[i - 2] - &pa.theta_star[i + 1])
                    / (&pa.theta_star[i - 1] - &pa.theta_star[i]),
            );
        }
        match ratios.iter().find(|r| **r != ratios[0]) {
            None => items.push(CheckItem::holds("eigenvalue ratio condition")),
            Some(bad) => items.push(CheckItem::fails(
                "eigenvalue ratio condition",
                Witness::UnequalScalars {
                    left: ratios[0].clone(),
                    right: (*bad).clone(),
                },
            )),
        }
    }

    ConjectureReport::from_items(ID, items)
}

/// The cubic commutator identities
///   [A,[A,[A,A*]]] = 4[A,A*]   and   [A*,[A*,[A*,A]]] = 4[A*,A],
/// which every Krawtchouk-type pair satisfies exactly.
pub fn dolan_grady_report(pair: &TdPair) -> ConjectureReport {
    const ID: &str = "dolan-grady";
    let mut items = Vec::new();
    let four = scalar::int(4);
    for (x, y, label) in [
        (pair.a(), pair.astar(), "[A,[A,[A,A*]]] = 4[A,A*]"),
        (pair.astar(), pair.a(), "[A*,[A*,[A*,A]]] = 4[A*,A]"),
    ] {
        let inner = x.commutator(y);
        let triple = x.commutator(&x.commutator(&inner));
        let diff = &triple - &inner.scale(&four);
        if diff.is_zero() {
            items.push(CheckItem::holds(label));
        } else {
            items.push(CheckItem::fails(label, Witness::Matrix(diff)));
        }
    }
    ConjectureReport::from_items(ID, items)
}

/// Shape factorization into geometric sums exists, a necessary consequence
/// of the structure theory in the Krawtchouk class and conjectured in
/// general.
pub fn shape_factorization_report(pair: &TdPair) -> ConjectureReport {
    const ID: &str = "shape-factorization";
    let factorizations = crate::pair::shape_factorization(pair.shape());
    let item = if factorizations.is_empty() {
        CheckItem::fails(
            format!("shape {:?} admits no geometric-sum factorization", pair.shape().rho()),
            Witness::VanishingScalar {
                context: "factorization count".into(),
            },
        )
    } else {
        CheckItem::holds(format!(
            "shape {:?} admits {} factorization(s)",
            pair.shape().rho(),
            factorizations.len()
        ))
    };
    ConjectureReport::from_items(ID, vec![item])
}

/// The full per-instance battery.
#[derive(Clone, Debug)]
pub struct ConjectureSuite {
    pub reports: Vec<ConjectureReport>,
    pub split_table: Vec<SplitTableRow>,
}

impl ConjectureSuite {
    pub fn all_hold(&self) -> bool {
        self.reports.iter().all(|r| r.verdict != Verdict::Fails)
    }

    pub fn failures(&self) -> Vec<&ConjectureReport> {
        self.reports
            .iter()
            .filter(|r| r.verdict == Verdict::Fails)
            .collect()
    }
}

/// Run every conjecture check against one verified pair. The cubic
/// commutator identity is only claimed for Krawtchouk-type pairs, so it is
/// reported not-applicable elsewhere.
pub fn run_suite(pair: &TdPair) -> Result<ConjectureSuite> {
    let mut reports = vec![shape_factorization_report(pair)];
    reports.push(zeta_trace_report(pair));
    reports.push(trace_ratio_report(pair));
    reports.push(swap_symmetry_report(pair)?);
    match canonical_parameter_array(pair) {
        Ok(pa) => reports.push(parameter_array_conditions(&pa)),
        Err(Error::Rho0NotOne { dim }) => reports.push(ConjectureReport::not_applicable(
            "parameter-array-conditions",
            format!("dim U_0 = {dim}"),
        )),
        Err(e) => return Err(e),
    }
    if pair.is_krawtchouk() {
        reports.push(dolan_grady_report(pair));
    } else {
        reports.push(ConjectureReport::not_applicable(
            "dolan-grady",
            "pair is not of Krawtchouk type",
        ));
    }
    let split_table = eight_split_sequences(pair)?;
    Ok(ConjectureSuite {
        reports,
        split_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{leonard_krawtchouk, onsager_tensor, transform, ConstructionSpec};
    use crate::linalg::scalar::{frac, int};

    fn k12() -> TdPair {
        leonard_krawtchouk(1, &int(2)).unwrap()
    }

    #[test]
    fn idempotents_of_k12_match_hand_values() {
        let (e0, e0_star) = idempotent_e0(&k12());
        let expected_e0 = Matrix::from_rows(vec![
            vec![frac(1, 2), frac(1, 2)],
            vec![frac(1, 2), frac(1, 2)],
        ]);
        let expected_star = Matrix::from_rows(vec![
            vec![frac(1, 2), int(-1)],
            vec![frac(-1, 4), frac(1, 2)],
        ]);
        assert_eq!(e0, expected_e0);
        assert_eq!(e0_star, expected_star);
        assert_eq!(&e0 * &e0, e0);
        assert_eq!(&e0_star * &e0_star, e0_star);
        assert_eq!(e0.rank(), 1);
        assert_eq!(e0_star.rank(), 1);
    }

    #[test]
    fn point_pair_idempotents_are_identity() {
        let pair = leonard_krawtchouk(0, &int(2)).unwrap();
        let (e0, e0_star) = idempotent_e0(&pair);
        assert_eq!(e0, Matrix::identity(1));
        assert_eq!(e0_star, Matrix::identity(1));
    }

    #[test]
    fn zeta_trace_spot_values_for_k12() {
        // (θ*_0−θ*_1)·tr((A−I)E*_0) = (−2)·(−9/4) = 9/2 = ζ_1.
        let pair = k12();
        let (_, e0_star) = idempotent_e0(&pair);
        let tau1 = pair.a() - &Matrix::identity(2);
        assert_eq!((&tau1 * &e0_star).trace(), frac(-9, 4));
        let report = zeta_trace_report(&pair);
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn trace_ratio_spot_values_for_k12() {
        let pair = k12();
        let (e0, e0_star) = idempotent_e0(&pair);
        assert_eq!((&e0 * &e0_star).trace(), frac(-1, 8));
        let report = trace_ratio_report(&pair);
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn eight_sequences_of_k12() {
        let rows = eight_split_sequences(&k12()).unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0].zeta, Some(vec![int(1), frac(9, 2)]));
        // Swap companion with matching orderings agrees.
        assert_eq!(rows[4].zeta, Some(vec![int(1), frac(9, 2)]));
        for row in &rows {
            let z = row.zeta.as_ref().unwrap();
            assert_eq!(z[0], int(1));
        }
    }

    #[test]
    fn eight_sequences_of_point_pair_all_trivial() {
        let pair = leonard_krawtchouk(0, &int(2)).unwrap();
        for row in eight_split_sequences(&pair).unwrap() {
            assert_eq!(row.zeta, Some(vec![int(1)]));
        }
    }

    #[test]
    fn parameter_array_conditions_for_k12() {
        let pa = crate::pair::parameter_array(&k12()).unwrap();
        let report = parameter_array_conditions(&pa);
        assert_eq!(report.verdict, Verdict::Holds);
        // The displayed sum is 1·(2)(−2) + (9/2)·1 = 1/2.
        let d = pa.diameter();
        let sum: Scalar = (0..=d)
            .map(|i| {
                let t: Scalar = pa.theta[i + 1..].iter().map(|x| &pa.theta[0] - x).product();
                let ts: Scalar = pa.theta_star[i + 1..]
                    .iter()
                    .map(|x| &pa.theta_star[0] - x)
                    .product();
                &pa.zeta[i] * t * ts
            })
            .sum();
        assert_eq!(sum, frac(1, 2));
    }

    #[test]
    fn parameter_array_conditions_reject_forged_zeta() {
        let mut pa = crate::pair::parameter_array(&k12()).unwrap();
        pa.zeta[1] = int(0);
        let report = parameter_array_conditions(&pa);
        assert_eq!(report.verdict, Verdict::Fails);
        assert!(report
            .items
            .iter()
            .any(|i| i.verdict == Verdict::Fails && i.witness.is_some()));
    }

    #[test]
    fn dolan_grady_spot_values_for_k12() {
        let pair = k12();
        let inner = pair.a().commutator(pair.astar());
        let triple = pair.a().commutator(&pair.a().commutator(&inner));
        let expected = Matrix::from_rows(vec![
            vec![int(-6), int(0)],
            vec![int(0), int(6)],
        ]);
        assert_eq!(triple, expected);
        assert_eq!(inner.scale(&int(4)), expected);
        assert_eq!(dolan_grady_report(&pair).verdict, Verdict::Holds);
    }

    #[test]
    fn dolan_grady_on_point_pair_is_trivial() {
        let pair = leonard_krawtchouk(0, &int(7)).unwrap();
        assert_eq!(dolan_grady_report(&pair).verdict, Verdict::Holds);
    }

    #[test]
    fn dolan_grady_on_tensor_pair() {
        let pair = onsager_tensor(&ConstructionSpec::parse("1:2,1:3").unwrap()).unwrap();
        assert_eq!(dolan_grady_report(&pair).verdict, Verdict::Holds);
    }

    #[test]
    fn suite_holds_on_generated_pairs() {
        for spec in ["1:2", "1:2,1:3", "2:2"] {
            let pair = onsager_tensor(&ConstructionSpec::parse(spec).unwrap()).unwrap();
            let suite = run_suite(&pair).unwrap();
            assert!(suite.all_hold(), "failure for {spec}: {:?}", suite.failures());
        }
    }

    #[test]
    fn suite_on_non_krawtchouk_pair_marks_cubic_identity_not_applicable() {
        // Affine-scaled pairs leave the Krawtchouk class but remain TD
        // pairs; the general-pair conjectures still hold for them.
        let pair = transform(&k12(), &int(2), &int(0), &int(1), &int(0)).unwrap();
        let suite = run_suite(&pair).unwrap();
        assert!(suite.all_hold());
        let dg = suite
            .reports
            .iter()
            .find(|r| r.id == "dolan-grady")
            .unwrap();
        assert_eq!(dg.verdict, Verdict::NotApplicable);
        let zt = suite
            .reports
            .iter()
            .find(|r| r.id == "split-sequence-trace")
            .unwrap();
        assert_eq!(zt.verdict, Verdict::Holds);
    }
}
