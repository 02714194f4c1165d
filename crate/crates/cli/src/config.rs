//! Run configuration for the verifier: quantum-parameter mode, claim
//! selection, output format, and validation of the combination.

use std::fmt;
use std::str::FromStr;

use qcohom::algebra::{CoeffField, Rational};

/// How the quantum parameter is realized during a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QMode {
    /// Exact rational functions in `q`.
    Generic,
    /// `q` pinned to a nonzero rational number.
    Specialized(Rational),
}

impl QMode {
    pub fn coeff_field(&self) -> CoeffField {
        match self {
            QMode::Generic => CoeffField::Generic,
            QMode::Specialized(v) => CoeffField::Specialized(v.clone()),
        }
    }

    /// The `--q` argument spelling that produces this mode.
    pub fn label(&self) -> String {
        match self {
            QMode::Generic => "generic".to_string(),
            QMode::Specialized(v) => v.to_string(),
        }
    }
}

impl FromStr for QMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("generic") {
            return Ok(QMode::Generic);
        }
        let v: Rational = s
            .parse()
            .map_err(|_| format!("expected 'generic' or a rational number, got '{s}'"))?;
        if v == Rational::from_integer(0) {
            return Err("q must be nonzero".to_string());
        }
        Ok(QMode::Specialized(v))
    }
}

/// Identifiers of the individual verification claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
}

impl ClaimId {
    pub const ALL: [ClaimId; 11] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::C1 => "C1",
            ClaimId::C2 => "C2",
            ClaimId::C3 => "C3",
            ClaimId::C4 => "C4",
            ClaimId::C5 => "C5",
            ClaimId::C6 => "C6",
            ClaimId::C7 => "C7",
            ClaimId::C8 => "C8",
            ClaimId::C9 => "C9",
            ClaimId::C10 => "C10",
            ClaimId::C11 => "C11",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown claim '{s}' (expected C1..C11)"))
    }
}

/// Parses `--claims`: `all` or a comma-separated subset, returned in
/// canonical order without duplicates.
pub fn parse_claims(s: &str) -> Result<Vec<ClaimId>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut selected = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let id: ClaimId = part.parse()?;
        if !selected.contains(&id) {
            selected.push(id);
        }
    }
    if selected.is_empty() {
        return Err("claim selection is empty".to_string());
    }
    selected.sort();
    Ok(selected)
}

/// Report serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

impl OutputFormat {
    pub fn label(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Text => "text",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format '{other}' (expected json or text)")),
        }
    }
}

/// Test hooks that deliberately corrupt one claim's input, for exercising
/// the failure path end to end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultInjection {
    None,
    /// Perturb the first relation used by C1 before computing.
    PerturbC1,
}

/// A validated verification run request.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n: usize,
    pub q_mode: QMode,
    pub seed: u64,
    pub trials: usize,
    pub claims: Vec<ClaimId>,
    pub format: OutputFormat,
    /// Allow expensive runs with n >= 5.
    pub big: bool,
    pub fault: FaultInjection,
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n < 2 {
            return Err(format!("n must be at least 2, got {}", self.n));
        }
        if self.n >= 5 && !self.big {
            return Err(format!(
                "n = {} is expensive; pass --big to allow n >= 5",
                self.n
            ));
        }
        if self.claims.is_empty() {
            return Err("claim selection is empty".to_string());
        }
        if self.trials == 0 {
            return Err("trials must be positive".to_string());
        }
        Ok(())
    }
}
