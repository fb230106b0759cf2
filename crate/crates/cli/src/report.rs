//! Serialized form of a field-space analysis, plus the plain-text rendering.

use std::fmt::Write as _;

use liefields_core::exactnum::Rational;
use liefields_core::liealg::FieldVector;
use liefields_core::matrix::AffineSolution;
use liefields_core::solvers::{FieldSpaceReport, Flags, OneHarmonic};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::files::CatalogInfo;

pub const TOOL: &str = "liefields";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

type Basis = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OneHarmonicEntry {
    Computed { basis: Basis },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConcurrentEntry {
    NoSolution,
    Solutions { particular: Vec<String>, nullspace: Basis },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsEntry {
    pub killing_equals_center: bool,
    pub one_harmonic_equals_killing: Option<bool>,
    pub conformal_equals_killing: bool,
    pub concurrent_empty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<CatalogInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub dimension: usize,
    pub lower_central_series: Vec<usize>,
    pub nilpotent: bool,
    pub center: Basis,
    pub killing: Basis,
    pub one_harmonic: OneHarmonicEntry,
    pub conformal: Basis,
    pub concurrent: ConcurrentEntry,
    pub flags: FlagsEntry,
}

fn encode_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn encode(basis: &[FieldVector<Rational>]) -> Basis {
    basis.iter().map(|v| encode_vec(v)).collect()
}

fn decode_vec(at: &str, v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter()
        .map(|s| s.parse().map_err(|e| CliError::format(at, e)))
        .collect()
}

fn decode(at: &str, basis: &Basis) -> Result<Vec<FieldVector<Rational>>, CliError> {
    basis
        .iter()
        .map(|v| decode_vec(at, v).map(FieldVector::new))
        .collect()
}

/// Where an analysed algebra came from.
#[derive(Clone, Debug, Default)]
pub struct Provenance {
    pub name: Option<String>,
    pub catalog: Option<CatalogInfo>,
    pub seed: Option<u64>,
}

impl ReportFile {
    pub fn new(
        report: &FieldSpaceReport,
        dimension: usize,
        lower_central_series: Vec<usize>,
        provenance: Provenance,
    ) -> Self {
        let one_harmonic = match &report.one_harmonic {
            OneHarmonic::Basis(b) => OneHarmonicEntry::Computed { basis: encode(b) },
            OneHarmonic::Skipped => OneHarmonicEntry::Skipped {
                reason: "Gram matrix is not the identity".into(),
            },
        };
        let concurrent = match &report.concurrent {
            AffineSolution::NoSolution => ConcurrentEntry::NoSolution,
            AffineSolution::Solutions {
                particular,
                nullspace,
            } => ConcurrentEntry::Solutions {
                particular: encode_vec(particular),
                nullspace: nullspace.iter().map(|v| encode_vec(v)).collect(),
            },
        };
        let Flags {
            killing_equals_center,
            one_harmonic_equals_killing,
            conformal_equals_killing,
            concurrent_empty,
        } = report.flags;
        ReportFile {
            tool: TOOL.into(),
            version: VERSION.into(),
            name: provenance.name,
            catalog: provenance.catalog,
            seed: provenance.seed,
            dimension,
            nilpotent: lower_central_series.last() == Some(&0),
            lower_central_series,
            center: encode(&report.center),
            killing: encode(&report.killing),
            one_harmonic,
            conformal: encode(&report.conformal),
            concurrent,
            flags: FlagsEntry {
                killing_equals_center,
                one_harmonic_equals_killing,
                conformal_equals_killing,
                concurrent_empty,
            },
        }
    }

    /// Decodes the rational strings back into a [`FieldSpaceReport`].
    pub fn to_report(&self) -> Result<FieldSpaceReport, CliError> {
        let one_harmonic = match &self.one_harmonic {
            OneHarmonicEntry::Computed { basis } => OneHarmonic::Basis(decode("one_harmonic", basis)?),
            OneHarmonicEntry::Skipped { .. } => OneHarmonic::Skipped,
        };
        let concurrent = match &self.concurrent {
            ConcurrentEntry::NoSolution => AffineSolution::NoSolution,
            ConcurrentEntry::Solutions {
                particular,
                nullspace,
            } => AffineSolution::Solutions {
                particular: decode_vec("concurrent.particular", particular)?,
                nullspace: nullspace
                    .iter()
                    .map(|v| decode_vec("concurrent.nullspace", v))
                    .collect::<Result<_, _>>()?,
            },
        };
        let f = self.flags;
        Ok(FieldSpaceReport {
            center: decode("center", &self.center)?,
            killing: decode("killing", &self.killing)?,
            one_harmonic,
            conformal: decode("conformal", &self.conformal)?,
            concurrent,
            flags: Flags {
                killing_equals_center: f.killing_equals_center,
                one_harmonic_equals_killing: f.one_harmonic_equals_killing,
                conformal_equals_killing: f.conformal_equals_killing,
                concurrent_empty: f.concurrent_empty,
            },
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let title = match (&self.catalog, &self.name) {
            (Some(c), _) => {
                let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                if params.is_empty() {
                    c.type_id.clone()
                } else {
                    format!("{} ({})", c.type_id, params.join(", "))
                }
            }
            (None, Some(name)) => name.clone(),
            (None, None) => "algebra".into(),
        };
        let _ = writeln!(out, "{title}, dimension {}", self.dimension);
        let series: Vec<String> = self.lower_central_series.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "lower central series: {} ({})",
            series.join(" > "),
            if self.nilpotent { "nilpotent" } else { "not nilpotent" }
        );
        let _ = writeln!(out, "center:        {}", span(&self.center));
        let _ = writeln!(out, "Killing:       {}", span(&self.killing));
        let one_harmonic = match &self.one_harmonic {
            OneHarmonicEntry::Computed { basis } => span(basis),
            OneHarmonicEntry::Skipped { reason } => format!("skipped ({reason})"),
        };
        let _ = writeln!(out, "one-harmonic:  {one_harmonic}");
        let _ = writeln!(out, "conformal:     {}", span(&self.conformal));
        let concurrent = match &self.concurrent {
            ConcurrentEntry::NoSolution => "none (R_ξ = id has no solution)".to_string(),
            ConcurrentEntry::Solutions {
                particular,
                nullspace,
            } => format!("ξ = ({}) + {}", particular.join(", "), span(nullspace)),
        };
        let _ = writeln!(out, "concurrent:    {concurrent}");
        let yes = |b: bool| if b { "yes" } else { "NO" };
        let f = &self.flags;
        let _ = writeln!(out, "Killing = center:        {}", yes(f.killing_equals_center));
        let _ = writeln!(
            out,
            "one-harmonic = Killing:  {}",
            f.one_harmonic_equals_killing.map_or("skipped", yes)
        );
        let _ = writeln!(out, "conformal = Killing:     {}", yes(f.conformal_equals_killing));
        let _ = writeln!(out, "no concurrent field:     {}", yes(f.concurrent_empty));
        out
    }
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|d| char::from_u32(0x2080 + d.to_digit(10).expect("decimal digit")).expect("subscript digit"))
        .collect()
}

/// Index of the single `1` when `v` is a standard basis vector.
fn standard_index(v: &[String]) -> Option<usize> {
    let mut hit = None;
    for (i, x) in v.iter().enumerate() {
        match x.as_str() {
            "0" => {}
            "1" if hit.is_none() => hit = Some(i),
            _ => return None,
        }
    }
    hit
}

/// `span{v₄, v₅}` for standard basis vectors, explicit coefficient vectors
/// otherwise, `{0}` for the zero space.
pub fn span(basis: &Basis) -> String {
    if basis.is_empty() {
        return "{0}".into();
    }
    let items: Vec<String> = match basis.iter().map(|v| standard_index(v)).collect::<Option<Vec<_>>>() {
        Some(idx) => idx.into_iter().map(|i| format!("v{}", subscript(i + 1))).collect(),
        None => basis.iter().map(|v| format!("({})", v.join(", "))).collect(),
    };
    format!("span{{{}}}", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use liefields_core::catalog::{instantiate, sample_params, TypeId};
    use liefields_core::solvers::analyze;

    fn strs(rows: &[&[&str]]) -> Basis {
        rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
    }

    #[test]
    fn span_rendering() {
        assert_eq!(span(&strs(&[&["0", "0", "0", "1", "0"], &["0", "0", "0", "0", "1"]])), "span{v₄, v₅}");
        assert_eq!(span(&vec![]), "{0}");
        assert_eq!(span(&strs(&[&["1", "-1", "0"]])), "span{(1, -1, 0)}");
        assert_eq!(span(&strs(&[&["0", "2"]])), "span{(0, 2)}");
        assert_eq!(subscript(12), "₁₂");
    }

    #[test]
    fn round_trip_through_json() {
        for ty in TypeId::ALL {
            let params = sample_params(ty, 5, 0, 10).unwrap();
            let alg = instantiate(ty, &params).unwrap();
            let report = analyze(&alg).unwrap();
            let file = ReportFile::new(&report, 5, alg.lower_central_series(), Provenance::default());
            let back: ReportFile = serde_json::from_str(&file.to_json()).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_report().unwrap(), report);
        }
    }

    #[test]
    fn affine_solutions_round_trip() {
        let report = FieldSpaceReport {
            center: vec![],
            killing: vec![],
            one_harmonic: OneHarmonic::Skipped,
            conformal: vec![],
            concurrent: AffineSolution::Solutions {
                particular: vec!["1/2".parse().unwrap()],
                nullspace: vec![vec!["-3".parse().unwrap()]],
            },
            flags: Flags {
                killing_equals_center: true,
                one_harmonic_equals_killing: None,
                conformal_equals_killing: true,
                concurrent_empty: false,
            },
        };
        let file = ReportFile::new(&report, 1, vec![1, 0], Provenance::default());
        let back: ReportFile = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(back.to_report().unwrap(), report);
        assert!(file.to_text().contains("ξ = (1/2) + span{(-3)}"));
    }
}
