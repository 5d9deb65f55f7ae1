use serde::Serialize;
use serde_json::Value;

/// One named pass/fail entry with diagnostic data.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: Value) -> Self {
        Check { name: name.into(), pass, detail }
    }
}

/// {"N": ..., "m": ..., "checks": [...]}; m is null for reports covering a whole level.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    #[serde(rename = "N")]
    pub n: u64,
    pub m: Option<u64>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(n: u64, m: Option<u64>) -> Self {
        Report { n, m, checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }
}
