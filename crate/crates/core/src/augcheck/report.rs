use serde::Serialize;

use crate::exactlin::{FieldTag, Vector};
use crate::tmon::Transformation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Final {
    Simple,
    NotSimple,
    Undecidable,
}

impl Final {
    pub fn from_bool(simple: bool) -> Self {
        if simple {
            Final::Simple
        } else {
            Final::NotSimple
        }
    }
}

/// Which criterion settled the group condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupMethod {
    /// At most two points: the augmentation is zero or one dimensional.
    SmallDegree,
    TwoTransitivity,
    TwoHomogeneity,
    Oracle,
}

/// How the verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    /// At most two points.
    SmallDegree,
    /// Neither transitive nor 0-transitive on more than two points.
    Preflight,
    Group,
    ZeroTransitive,
    Conditions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    ConstantMap { element: usize, image: Transformation },
    JClass { class: usize, rank: usize, regular: bool },
    MinimalClasses { classes: Vec<usize> },
    Group { idempotent: usize, points: Vec<usize>, order: usize, method: GroupMethod },
    Rank { rank: usize, required: usize, field: FieldTag },
    Components { count: usize, a: usize, b: usize },
    Congruence { blocks: Vec<Vec<usize>> },
    Orbit { point: usize, orbit: Vec<usize> },
    /// Basis of a proper invariant subspace, coordinates in the augmentation basis.
    Subspace { basis: Vec<Vec<String>> },
}

pub fn subspace_witness(basis: &[Vector]) -> Witness {
    Witness::Subspace { basis: basis.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Condition {
    pub fn not_applicable() -> Self {
        Condition { verdict: Verdict::NotApplicable, witness: None }
    }

    pub fn new(holds: bool, witness: Option<Witness>) -> Self {
        Condition { verdict: Verdict::from_bool(holds), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleOutcome {
    pub field: FieldTag,
    pub verdict: Final,
    /// False when the irreducibility test fell back to an unproven answer.
    pub certified: bool,
    pub method: crate::exactlin::Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Per-condition verdicts and the overall answer for one monoid and field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub field: FieldTag,
    /// Field actually used for ranks and the oracle (ℝ and ℂ use ℚ).
    pub rank_field: FieldTag,
    pub degree: usize,
    pub size: usize,
    pub path: Path,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sink: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preflight: Option<Witness>,
    pub c1: Condition,
    pub c2: Condition,
    pub c3: Condition,
    pub c4: Condition,
    pub c5: Condition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_condition_method: Option<GroupMethod>,
    /// True unless some irreducibility test returned an unproven answer.
    pub certified: bool,
    #[serde(rename = "final")]
    pub final_verdict: Final,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    /// ℚ oracle run to cross-check an ℝ or ℂ verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_cross_check: Option<OracleOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn is_simple(&self) -> bool {
        self.final_verdict == Final::Simple
    }

    pub fn conditions(&self) -> [&Condition; 5] {
        [&self.c1, &self.c2, &self.c3, &self.c4, &self.c5]
    }

    /// Incidence rank recorded for c4, if evaluated.
    pub fn incidence_rank(&self) -> Option<usize> {
        match &self.c4.witness {
            Some(Witness::Rank { rank, .. }) => Some(*rank),
            _ => None,
        }
    }

    pub(crate) fn blank(field: FieldTag, degree: usize, size: usize, path: Path) -> Self {
        CheckReport {
            field,
            rank_field: field.rank_delegate(),
            degree,
            size,
            path,
            sink: None,
            preflight: None,
            c1: Condition::not_applicable(),
            c2: Condition::not_applicable(),
            c3: Condition::not_applicable(),
            c4: Condition::not_applicable(),
            c5: Condition::not_applicable(),
            group_condition_method: None,
            certified: true,
            final_verdict: Final::Undecidable,
            oracle: None,
            agreement: None,
            rational_cross_check: None,
            notes: Vec::new(),
        }
    }
}
