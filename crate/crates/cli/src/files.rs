//! On-disk JSON encoding of metric Lie algebras.
//!
//! Indices are 1-based and every scalar is a rational string (`"3"`,
//! `"-1/2"`), so nothing passes through floating point.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use liefields_core::catalog::{ParamAssignment, TypeId};
use liefields_core::exactnum::Rational;
use liefields_core::liealg::MetricLieAlgebra;
use liefields_core::matrix::Mat;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Catalog provenance of an algebra: its type and parameter values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogInfo {
    #[serde(rename = "type")]
    pub type_id: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

impl CatalogInfo {
    pub fn new(ty: TypeId, params: &ParamAssignment) -> Self {
        CatalogInfo {
            type_id: ty.to_string(),
            params: params.iter().map(|(v, r)| (v.name().to_string(), r.to_string())).collect(),
        }
    }
}

/// `[v_i, v_j]` has coefficient `c` on `v_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<CatalogInfo>,
    pub dimension: usize,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
    /// Identity when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
}

fn rational(at: impl Into<String>, text: &str) -> Result<Rational, CliError> {
    text.parse().map_err(|e| CliError::format(at, e))
}

impl AlgebraFile {
    pub fn from_algebra(alg: &MetricLieAlgebra<Rational>) -> Self {
        let mut brackets = Vec::new();
        for ((i, j), coeffs) in alg.structure() {
            for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                brackets.push(BracketRecord {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    c: c.to_string(),
                });
            }
        }
        let gram = (!alg.is_orthonormal()).then(|| {
            alg.gram()
                .to_rows()
                .into_iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect()
        });
        AlgebraFile {
            name: None,
            comment: None,
            catalog: None,
            dimension: alg.dim(),
            brackets,
            gram,
        }
    }

    /// Builds the algebra. Structural problems (indices, duplicates, bad
    /// rationals) are format errors; a Gram matrix that is not positive
    /// definite is a validation error. The Jacobi identity is not checked.
    pub fn to_algebra(&self) -> Result<MetricLieAlgebra<Rational>, CliError> {
        let n = self.dimension;
        let mut alg = match &self.gram {
            None => MetricLieAlgebra::abelian(n),
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CliError::format("gram", format!("expected a {n}x{n} array")));
                }
                let parsed = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(c, x)| rational(format!("gram[{r}][{c}]"), x))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let gram = Mat::from_rows(parsed)?;
                MetricLieAlgebra::with_gram(n, gram)?
            }
        };
        let mut seen = BTreeSet::new();
        for (idx, b) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{idx}]");
            for (name, v) in [("i", b.i), ("j", b.j), ("k", b.k)] {
                if v < 1 || v > n {
                    return Err(CliError::format(
                        format!("{at}.{name}"),
                        format!("index {v} outside 1..={n}"),
                    ));
                }
            }
            if b.i >= b.j {
                return Err(CliError::format(&at, format!("need i < j, got i={} j={}", b.i, b.j)));
            }
            if !seen.insert((b.i, b.j, b.k)) {
                return Err(CliError::format(
                    &at,
                    format!("duplicate entry for [v{}, v{}] on v{}", b.i, b.j, b.k),
                ));
            }
            let c = rational(format!("{at}.c"), &b.c)?;
            alg.add_structure_constant(b.i - 1, b.j - 1, b.k - 1, c)?;
        }
        Ok(alg)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::format(format!("line {} column {}", e.line(), e.column()), e)
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Format { at, message } => CliError::Format {
                at: format!("{}: {at}", path.display()),
                message,
            },
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_json()).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use liefields_core::catalog::{instantiate, sample_params};

    fn parse_err(text: &str) -> String {
        let file = AlgebraFile::parse(text).unwrap();
        file.to_algebra().unwrap_err().to_string()
    }

    #[test]
    fn minimal_file() {
        let f = AlgebraFile::parse(r#"{"dimension": 5}"#).unwrap();
        let alg = f.to_algebra().unwrap();
        assert_eq!(alg.dim(), 5);
        assert_eq!(alg.structure().count(), 0);
        assert!(alg.is_orthonormal());
    }

    #[test]
    fn catalog_instances_round_trip() {
        for ty in TypeId::ALL {
            for i in 0..5 {
                let alg = instantiate(ty, &sample_params(ty, 11, i, 10).unwrap()).unwrap();
                let file = AlgebraFile::from_algebra(&alg);
                let back = AlgebraFile::parse(&file.to_json()).unwrap();
                assert_eq!(back, file);
                assert_eq!(back.to_algebra().unwrap(), alg);
            }
        }
    }

    #[test]
    fn gram_round_trip() {
        let text = r#"{"dimension": 2, "gram": [["2", "1/2"], ["1/2", "1"]],
                       "brackets": [{"i": 1, "j": 2, "k": 2, "c": "-3/4"}]}"#;
        let alg = AlgebraFile::parse(text).unwrap().to_algebra().unwrap();
        let again = AlgebraFile::from_algebra(&alg).to_algebra().unwrap();
        assert_eq!(alg, again);
        assert!(!alg.is_orthonormal());
    }

    #[test]
    fn structural_errors_name_the_field() {
        let base = |b: &str| format!(r#"{{"dimension": 3, "brackets": [{b}]}}"#);
        assert!(parse_err(&base(r#"{"i": 1, "j": 4, "k": 1, "c": "1"}"#)).contains("brackets[0].j"));
        assert!(parse_err(&base(r#"{"i": 0, "j": 2, "k": 1, "c": "1"}"#)).contains("brackets[0].i"));
        assert!(parse_err(&base(r#"{"i": 2, "j": 1, "k": 1, "c": "1"}"#)).contains("need i < j"));
        assert!(parse_err(&base(r#"{"i": 1, "j": 2, "k": 3, "c": "1.5"}"#)).contains("brackets[0].c"));
        assert!(parse_err(&base(
            r#"{"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 1, "j": 2, "k": 3, "c": "2"}"#
        ))
        .contains("duplicate"));
        let e = AlgebraFile::parse(r#"{"dimension": 3, "gram": [["1"]]}"#)
            .unwrap()
            .to_algebra()
            .unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn indefinite_gram_is_a_validation_failure() {
        let e = AlgebraFile::parse(r#"{"dimension": 2, "gram": [["1", "2"], ["2", "1"]]}"#)
            .unwrap()
            .to_algebra()
            .unwrap_err();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn malformed_json_reports_position() {
        let e = AlgebraFile::parse("{\n  \"dimension\": 5,\n  \"brackets\": [1]\n}").unwrap_err();
        assert!(e.to_string().starts_with("line 3"), "{e}");
        assert!(AlgebraFile::parse(r#"{"dimension": 5, "extra": 1}"#).is_err());
        assert!(AlgebraFile::parse(r#"{"dimension": -1}"#).is_err());
    }
}
