use std::fmt::Write as _;

use liefields_core::catalog::{determinant_checks, verify_table1, TypeId};

use super::Output;

/// Compares the symbolic operators with the transcribed tables for each
/// selected type, then runs the determinant identities belonging to those
/// types.
pub fn verify_symbolic(types: &[TypeId]) -> Output {
    let mut text = String::new();
    let mut passed = true;
    for &ty in types {
        match verify_table1(ty) {
            Ok(()) => {
                let _ = writeln!(text, "table {ty}: ok");
            }
            Err(mismatches) => {
                passed = false;
                let _ = writeln!(text, "table {ty}: {} mismatching entries", mismatches.len());
                for m in mismatches {
                    let _ = writeln!(text, "  {m}");
                }
            }
        }
    }
    for check in determinant_checks().into_iter().filter(|c| types.contains(&c.ty)) {
        if check.holds() {
            let _ = writeln!(text, "det {}: {} ok", check.label, check.computed);
        } else {
            passed = false;
            let _ = writeln!(text, "det {}: computed {}", check.label, check.computed);
            for e in check.expected.iter().filter(|e| **e != check.computed) {
                let _ = writeln!(text, "  differs from printed form {e}");
            }
        }
    }
    Output { text, passed }
}
