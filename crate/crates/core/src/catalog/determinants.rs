//! Symbolic reproduction of the determinant arguments that show the
//! one-harmonic systems only admit ξ = 0 off the center.
//!
//! Each check extracts a principal subsystem of −T (T being the one-harmonic
//! coefficient matrix, column j = T(v_j)) from the symbolic algebra, takes its
//! determinant, and compares it with every printed form of that determinant.

use super::{symbolic_instantiate, TypeId};
use crate::exactnum::PolyExpr;
use crate::matrix::Mat;
use crate::solvers::one_harmonic_matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantCheck {
    pub label: &'static str,
    pub ty: TypeId,
    pub computed: PolyExpr,
    /// Printed forms; all of them must equal `computed`.
    pub expected: Vec<PolyExpr>,
}

impl DeterminantCheck {
    pub fn holds(&self) -> bool {
        self.expected.iter().all(|e| *e == self.computed)
    }
}

fn p(s: &str) -> PolyExpr {
    s.parse().unwrap_or_else(|e| panic!("bad expression {s:?}: {e}"))
}

/// −T restricted to rows and columns `idx` (0-based ξ components).
pub(crate) fn one_harmonic_subsystem(ty: TypeId, idx: &[usize]) -> Mat<PolyExpr> {
    let t = one_harmonic_matrix(&symbolic_instantiate(ty)).expect("catalog algebras are orthonormal");
    t.neg().submatrix(idx, idx).expect("indices in range")
}

fn subsystem_det(ty: TypeId, idx: &[usize]) -> PolyExpr {
    one_harmonic_subsystem(ty, idx).det().expect("square")
}

// Δ for A5_6, as printed line by line.
const A56_DELTA: [&str; 4] = [
    "(alpha^2 + beta^2 + gamma^2 + delta^2 + epsilon^2)*((alpha^2 + beta^2 + sigma^2)*(gamma^2 + sigma^2) - beta^2*gamma^2) - (gamma^2 + sigma^2)*(sigma^2*delta^2)",
    "(alpha^2 + beta^2 + gamma^2 + delta^2 + epsilon^2)*((alpha^2 + sigma^2)*(gamma^2 + sigma^2) + beta^2*sigma^2) - (gamma^2 + sigma^2)*(sigma^2*delta^2)",
    "(alpha^2 + beta^2 + gamma^2 + delta^2 + epsilon^2)*(alpha^2*(gamma^2 + sigma^2) + sigma^2*(gamma^2 + sigma^2) + beta^2*sigma^2) - (gamma^2 + sigma^2)*(sigma^2*delta^2)",
    "(alpha^2 + beta^2 + gamma^2 + epsilon^2)*(alpha^2*(gamma^2 + sigma^2) + sigma^2*(gamma^2 + sigma^2) + beta^2*sigma^2) + delta^2*(alpha^2*(gamma^2 + sigma^2) + beta^2*sigma^2)",
];

// Numerator of Δ for A5_3 (the denominator is γ² + δ² + ε²). The last form
// reads "δ²[α² + (γ²+δ²+ε²) + …]" when printed; the sum there must be a
// product for the identity to hold, and that is what is encoded here.
const A53_NUMERATOR: [&str; 3] = [
    "(alpha^2 + beta^2 + gamma^2 + delta^2)*((alpha^2 + beta^2 + epsilon^2)*(gamma^2 + delta^2 + epsilon^2) - beta^2*gamma^2) - delta^2*epsilon^2*(gamma^2 + delta^2 + epsilon^2)",
    "(alpha^2 + beta^2 + gamma^2 + delta^2)*((alpha^2 + epsilon^2)*(gamma^2 + delta^2 + epsilon^2) + beta^2*(delta^2 + epsilon^2)) - delta^2*epsilon^2*(gamma^2 + delta^2 + epsilon^2)",
    "(alpha^2 + beta^2 + gamma^2)*((alpha^2 + epsilon^2)*(gamma^2 + delta^2 + epsilon^2) + beta^2*(delta^2 + epsilon^2)) + delta^2*(alpha^2*(gamma^2 + delta^2 + epsilon^2) + beta^2*(delta^2 + epsilon^2))",
];

/// The literal reading of the last A5_3 form, kept so tests can show it is
/// not an identity.
#[cfg(test)]
const A53_NUMERATOR_AS_PRINTED: &str =
    "(alpha^2 + beta^2 + gamma^2)*((alpha^2 + epsilon^2)*(gamma^2 + delta^2 + epsilon^2) + beta^2*(delta^2 + epsilon^2)) + delta^2*(alpha^2 + (gamma^2 + delta^2 + epsilon^2) + beta^2*(delta^2 + epsilon^2))";

fn reduced_a56_system() -> Mat<PolyExpr> {
    Mat::from_rows(vec![
        vec![
            p("alpha^2 + beta^2 + gamma^2 + delta^2 + epsilon^2"),
            p("delta*sigma"),
        ],
        vec![
            p("sigma*delta*(gamma^2 + sigma^2)"),
            p("(alpha^2 + beta^2 + sigma^2)*(gamma^2 + sigma^2) - beta^2*gamma^2"),
        ],
    ])
    .expect("2x2")
}

pub fn determinant_checks() -> Vec<DeterminantCheck> {
    let check = |label, ty, idx: &[usize], forms: &[&str]| DeterminantCheck {
        label,
        ty,
        computed: subsystem_det(ty, idx),
        expected: forms.iter().map(|s| p(s)).collect(),
    };
    let eps2 = p("epsilon^2");
    vec![
        check(
            "A5_4 system in (x1, x2)",
            TypeId::A54,
            &[0, 1],
            &["(alpha^2 + beta^2)*gamma^2 - (alpha*gamma)^2", "beta^2*gamma^2"],
        ),
        check(
            "A5_4 system in (x3, x4)",
            TypeId::A54,
            &[2, 3],
            &["(alpha^2 + gamma^2)*beta^2 - (alpha*beta)^2", "beta^2*gamma^2"],
        ),
        check(
            "A4_1+A1_I system in (x2, x3)",
            TypeId::A41A1I,
            &[1, 2],
            &[
                "(alpha^2 + gamma^2)*beta^2 - (beta*gamma)^2",
                "alpha^2*beta^2 + gamma^2*beta^2 - beta^2*gamma^2",
                "alpha^2*beta^2",
            ],
        ),
        check(
            "A5_1 system in (x2, x3)",
            TypeId::A51,
            &[1, 2],
            &["(alpha^2 + beta^2)*gamma^2 - (beta*gamma)^2", "alpha^2*gamma^2"],
        ),
        check(
            "A5_2 system in (x2, x3)",
            TypeId::A52,
            &[1, 2],
            &["(alpha^2 + beta^2)*gamma^2 - (beta*gamma)^2", "alpha^2*gamma^2"],
        ),
        DeterminantCheck {
            label: "A5_6 reduced system in (x1, x2)",
            ty: TypeId::A56,
            computed: reduced_a56_system().det().expect("square"),
            expected: A56_DELTA.iter().map(|s| p(s)).collect(),
        },
        DeterminantCheck {
            label: "A5_6 system in (x1, x2, x3, x4)",
            ty: TypeId::A56,
            computed: subsystem_det(TypeId::A56, &[0, 1, 2, 3]),
            expected: A56_DELTA.iter().map(|s| eps2.clone() * p(s)).collect(),
        },
        check(
            "A5_3 system in (x1, x2, x3)",
            TypeId::A53,
            &[0, 1, 2],
            &A53_NUMERATOR,
        ),
    ]
}

/// Runs every check, returning the failing ones.
pub fn verify_determinants() -> Result<(), Vec<DeterminantCheck>> {
    let failed: Vec<_> = determinant_checks().into_iter().filter(|c| !c.holds()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_hold() {
        for c in determinant_checks() {
            assert!(c.holds(), "{}: computed {}", c.label, c.computed);
        }
        assert_eq!(verify_determinants(), Ok(()));
    }

    #[test]
    fn printed_subsystems_match() {
        assert_eq!(
            one_harmonic_subsystem(TypeId::A54, &[0, 1]),
            Mat::from_rows(vec![
                vec![p("alpha^2 + beta^2"), p("alpha*gamma")],
                vec![p("alpha*gamma"), p("gamma^2")],
            ])
            .unwrap()
        );
        assert_eq!(
            one_harmonic_subsystem(TypeId::A56, &[0, 1, 2, 3]),
            Mat::from_rows(vec![
                vec![p("alpha^2+beta^2+gamma^2+delta^2+epsilon^2"), p("delta*sigma"), p("0"), p("0")],
                vec![p("sigma*delta"), p("alpha^2+beta^2+sigma^2"), p("beta*gamma"), p("0")],
                vec![p("0"), p("beta*gamma"), p("gamma^2+delta^2+sigma^2"), p("delta*epsilon")],
                vec![p("0"), p("0"), p("epsilon*delta"), p("epsilon^2")],
            ])
            .unwrap()
        );
        assert_eq!(
            one_harmonic_subsystem(TypeId::A53, &[0, 1, 2]),
            Mat::from_rows(vec![
                vec![p("alpha^2+beta^2+gamma^2+delta^2"), p("delta*epsilon"), p("0")],
                vec![p("delta*epsilon"), p("alpha^2+beta^2+epsilon^2"), p("beta*gamma")],
                vec![p("0"), p("beta*gamma"), p("gamma^2+delta^2+epsilon^2")],
            ])
            .unwrap()
        );
    }

    #[test]
    fn a53_numerator_as_printed_is_not_an_identity() {
        let computed = subsystem_det(TypeId::A53, &[0, 1, 2]);
        assert_ne!(p(A53_NUMERATOR_AS_PRINTED), computed);
    }

    #[test]
    fn a_wrong_form_fails() {
        let mut c = determinant_checks().remove(0);
        c.expected.push(p("beta^2*gamma^2 + 1"));
        assert!(!c.holds());
    }
}
