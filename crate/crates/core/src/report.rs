use serde::Serialize;

/// Outcome of a theorem check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Hypotheses pass and the conclusion holds.
    Holds,
    /// Some hypothesis fails; the conclusion was still computed.
    HypothesesFailed,
    /// Hypotheses pass but the conclusion fails. Never expected.
    TheoremViolation,
}

impl Verdict {
    pub fn from_parts(hypotheses_pass: bool, conclusion_holds: bool) -> Self {
        match (hypotheses_pass, conclusion_holds) {
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::TheoremViolation,
            (false, _) => Verdict::HypothesesFailed,
        }
    }

    pub fn is_violation(&self) -> bool {
        *self == Verdict::TheoremViolation
    }

    /// Process exit code: 0 holds, 1 hypotheses fail, 3 violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Holds => 0,
            Verdict::HypothesesFailed => 1,
            Verdict::TheoremViolation => 3,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::HypothesesFailed => "HYPOTHESES_FAILED",
            Verdict::TheoremViolation => "THEOREM_VIOLATION",
        }
    }
}

pub(crate) fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}
