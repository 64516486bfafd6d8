//! Pass/fail records produced by the verification routines.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, detail: detail.into() }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Check::pass(name, detail)
        } else {
            Check::fail(name, detail)
        }
    }

    /// A check that passes iff `r` is `Ok`; errors become the detail.
    pub fn from_result<T>(name: impl Into<String>, r: Result<T, crate::Error>, ok: &str) -> Self {
        match r {
            Ok(_) => Check::pass(name, ok),
            Err(e) => Check::fail(name, e.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

/// Collapse many checks into one summary check named `name`, keeping the
/// first few failure details.
pub fn summarize(name: &str, checks: &[Check]) -> Check {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    if failed.is_empty() {
        Check::pass(name, format!("{} checks passed", checks.len()))
    } else {
        let shown: Vec<String> = failed
            .iter()
            .take(5)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        Check::fail(
            name,
            format!("{} of {} failed; {}", failed.len(), checks.len(), shown.join("; ")),
        )
    }
}
