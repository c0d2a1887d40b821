//! Named inequality checks producing structured [`Verdict`]s.
//!
//! Checks come in three kinds. [`CheckKind::Proven`] checks encode theorems,
//! so a failing verdict points at a bug. [`CheckKind::Conjecture`] and
//! [`CheckKind::Report`] verdicts are findings: they are surfaced, never
//! treated as errors.

mod chromatic;
mod suite;

use std::fmt;

use serde::Serialize;

pub use chromatic::{chromatic_number, ChromaticResult, CHROMATIC_MAX_N};
pub use suite::{
    check_irreducibility_question, check_maximal_planar, irreducibility_scan, run_suite, summarize,
    Analysis, CheckId, IrreducibilityReport, Suite, SuiteSummary, DEFAULT_REL_TOL,
};

/// Whether a check encodes a theorem or an open statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Proven,
    Conjecture,
    Report,
}

/// Direction of the comparison between `lhs` and `rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    /// Signed slack: non-negative exactly when the relation holds.
    pub fn slack(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Relation::Le => rhs - lhs,
            Relation::Ge => lhs - rhs,
            Relation::Eq => -(lhs - rhs).abs(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

/// Outcome of one check on one graph.
///
/// `holds`, `lhs`, `rhs` and `margin` are `None` when the check is not
/// applicable. `margin` is oriented so that `holds ⟺ margin ≥ −tol`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub graph_id: String,
    pub check_name: &'static str,
    pub applicable: bool,
    pub holds: Option<bool>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub kind: CheckKind,
    pub relation: Relation,
    pub note: String,
}

impl Verdict {
    /// Applicable verdict with `tol = rel_tol · max(1, |lhs|, |rhs|, extra)`.
    pub fn compare(
        id: CheckId,
        graph_id: &str,
        lhs: f64,
        rhs: f64,
        rel_tol: f64,
        extra_scale: f64,
    ) -> Verdict {
        let relation = id.relation();
        let margin = relation.slack(lhs, rhs);
        let tol = rel_tol * 1f64.max(lhs.abs()).max(rhs.abs()).max(extra_scale);
        Verdict {
            graph_id: graph_id.to_owned(),
            check_name: id.name(),
            applicable: true,
            holds: Some(margin >= -tol),
            lhs: Some(lhs),
            rhs: Some(rhs),
            margin: Some(margin),
            kind: id.kind(),
            relation,
            note: String::new(),
        }
    }

    pub fn not_applicable(id: CheckId, graph_id: &str, note: impl Into<String>) -> Verdict {
        Verdict {
            graph_id: graph_id.to_owned(),
            check_name: id.name(),
            applicable: false,
            holds: None,
            lhs: None,
            rhs: None,
            margin: None,
            kind: id.kind(),
            relation: id.relation(),
            note: note.into(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Verdict {
        self.note = note.into();
        self
    }

    /// Applicable and violated.
    pub fn fails(&self) -> bool {
        self.applicable && self.holds == Some(false)
    }

    /// A violated theorem.
    pub fn is_proven_failure(&self) -> bool {
        self.kind == CheckKind::Proven && self.fails()
    }
}
