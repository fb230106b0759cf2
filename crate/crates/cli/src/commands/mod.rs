mod analyze;
mod catalog;
mod verify;
mod verify_symbolic;

pub use analyze::analyze;
pub use catalog::{list as catalog_list, make as catalog_make};
pub use verify::{verify, VerifyOptions};
pub use verify_symbolic::verify_symbolic;

use liefields_core::catalog::TypeId;

use crate::error::{CliError, EXIT_FAILURE, EXIT_OK};

/// What a command prints on stdout and whether its checks passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    pub fn pass(text: String) -> Self {
        Output { text, passed: true }
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_FAILURE
        }
    }
}

/// `all` or a single type id.
pub fn select_types(selector: &str) -> Result<Vec<TypeId>, CliError> {
    if selector == "all" {
        Ok(TypeId::ALL.to_vec())
    } else {
        Ok(vec![selector.parse()?])
    }
}
