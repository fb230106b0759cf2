use std::path::Path;

use liefields_core::solvers;

use super::Output;
use crate::error::CliError;
use crate::files::AlgebraFile;
use crate::report::{Provenance, ReportFile};

/// Validates and analyses the algebra stored at `path`.
pub fn analyze(path: &Path, json: bool) -> Result<Output, CliError> {
    let file = AlgebraFile::read(path)?;
    let alg = file.to_algebra()?;
    alg.jacobi_check().map_err(|v| CliError::Invalid(v.to_string()))?;
    let report = solvers::analyze(&alg)?;
    let provenance = Provenance {
        name: file.name.clone(),
        catalog: file.catalog.clone(),
        seed: None,
    };
    let rf = ReportFile::new(&report, alg.dim(), alg.lower_central_series(), provenance);
    Ok(Output::pass(if json { rf.to_json() } else { rf.to_text() }))
}
