use std::path::Path;

use liefields_core::catalog::{instantiate, ParamAssignment, Sign, TypeId};

use super::Output;
use crate::error::CliError;
use crate::files::{AlgebraFile, CatalogInfo};

/// One line per type: `A5_4: α free, β>0, γ>0`.
pub fn list() -> Output {
    let mut text = String::new();
    for ty in TypeId::ALL {
        let entry = ty.entry();
        let constraints: Vec<String> = entry
            .params
            .iter()
            .map(|&(v, sign)| match sign {
                Sign::Positive => format!("{}>0", v.symbol()),
                Sign::Negative => format!("{}<0", v.symbol()),
                Sign::Free => format!("{} free", v.symbol()),
            })
            .collect();
        let constraints = if constraints.is_empty() {
            "no parameters".to_string()
        } else {
            constraints.join(", ")
        };
        text.push_str(&format!("{ty}: {constraints}\n"));
    }
    Output::pass(text)
}

/// Instantiates a catalog type and writes it to `out`, or returns the file
/// contents when `out` is `None`.
pub fn make(type_id: &str, params: &ParamAssignment, out: Option<&Path>) -> Result<Output, CliError> {
    let ty: TypeId = type_id.parse()?;
    let alg = instantiate(ty, params)?;
    let mut file = AlgebraFile::from_algebra(&alg);
    file.name = Some(ty.to_string());
    file.catalog = Some(CatalogInfo::new(ty, params));
    match out {
        Some(path) => {
            file.write(path)?;
            Ok(Output::pass(format!("wrote {}\n", path.display())))
        }
        None => Ok(Output::pass(file.to_json())),
    }
}
