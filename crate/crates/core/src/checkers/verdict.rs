use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::semiring::FiniteSemiring;

/// Identifies the condition a verdict is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionId {
    /// For all `a != b` there are `c, d` with `ca != cb` and `ad != bd`.
    OneSidedSeparation,
    /// For all `a != b` and `e` there are `c, f` with `ca + fe != cb + fe`
    /// and `d, g` with `ad + eg != bd + eg`.
    TranslatedSeparation,
    DownwardDirected,
    /// Zero, least non-zero element, and for all `a` not below `b` some
    /// `c, d` in `S^1` with `cad != 0 = cbd`.
    ZeroSeparation,
    /// As [`ConditionId::ZeroSeparation`] with `c, d` taken from `S`.
    ZeroSeparationInS,
    /// For all `a != b` there are `c, d` with `cad != cbd`.
    TwoSidedSeparation,
    /// The greatest element is neither left nor right absorbing.
    GreatestNotAbsorbing,
}

impl ConditionId {
    pub const ALL: [ConditionId; 7] = [
        ConditionId::OneSidedSeparation,
        ConditionId::TranslatedSeparation,
        ConditionId::DownwardDirected,
        ConditionId::ZeroSeparation,
        ConditionId::ZeroSeparationInS,
        ConditionId::TwoSidedSeparation,
        ConditionId::GreatestNotAbsorbing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConditionId::OneSidedSeparation => "one-sided-separation",
            ConditionId::TranslatedSeparation => "translated-separation",
            ConditionId::DownwardDirected => "downward-directed",
            ConditionId::ZeroSeparation => "zero-separation",
            ConditionId::ZeroSeparationInS => "zero-separation-in-s",
            ConditionId::TwoSidedSeparation => "two-sided-separation",
            ConditionId::GreatestNotAbsorbing => "greatest-not-absorbing",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }
}

/// A quantifier assignment: `kind` says what the elements witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: &'static str,
    pub elements: Vec<(&'static str, usize)>,
}

impl Witness {
    pub(crate) fn new(kind: &'static str, elements: &[(&'static str, usize)]) -> Self {
        Witness {
            kind,
            elements: elements.to_vec(),
        }
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.elements.iter().find(|(n, _)| *n == name).map(|&(_, x)| x)
    }

    pub fn describe(&self, s: &FiniteSemiring) -> String {
        if self.elements.is_empty() {
            return self.kind.to_owned();
        }
        let names: Vec<&str> = self.elements.iter().map(|(n, _)| *n).collect();
        let values: Vec<&str> = self.elements.iter().map(|&(_, x)| s.label(x)).collect();
        format!("{} ({}) = ({})", self.kind, names.join(", "), values.join(", "))
    }

    pub fn to_value(&self, s: &FiniteSemiring) -> Value {
        let mut elements = Map::new();
        for &(name, x) in &self.elements {
            elements.insert(name.to_owned(), Value::String(s.label(x).to_owned()));
        }
        json!({ "kind": self.kind, "elements": elements })
    }
}

/// Outcome of one condition check. A failing verdict carries the first
/// counterexample in lexicographic order of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub condition_id: ConditionId,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ConditionVerdict {
    pub(crate) fn pass(condition_id: ConditionId) -> Self {
        ConditionVerdict {
            condition_id,
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn fail(condition_id: ConditionId, witness: Witness) -> Self {
        ConditionVerdict {
            condition_id,
            holds: false,
            witness: Some(witness),
        }
    }

    pub(crate) fn from_counterexample(condition_id: ConditionId, counterexample: Option<Witness>) -> Self {
        match counterexample {
            None => Self::pass(condition_id),
            Some(w) => Self::fail(condition_id, w),
        }
    }

    pub fn describe_witness(&self, s: &FiniteSemiring) -> String {
        self.witness
            .as_ref()
            .map_or_else(|| "none".to_owned(), |w| w.describe(s))
    }

    /// Labeled form with stable field names.
    pub fn labeled<'a>(&'a self, s: &'a FiniteSemiring) -> LabeledVerdict<'a> {
        LabeledVerdict { verdict: self, s }
    }
}

pub struct LabeledVerdict<'a> {
    verdict: &'a ConditionVerdict,
    s: &'a FiniteSemiring,
}

impl Serialize for LabeledVerdict<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        json!({
            "condition_id": self.verdict.condition_id,
            "holds": self.verdict.holds,
            "witness": self.verdict.witness.as_ref().map(|w| w.to_value(self.s)),
        })
        .serialize(serializer)
    }
}
