//! Certificate suite: polynomial identities, positivity chains, sampling and rigidity reductions.

pub mod clifford;
pub mod exprs;
mod identities;
pub mod positivity;
pub mod rigidity;
pub mod sampling;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::polycore::{Poly, PolyError};

pub use clifford::{clifford_check, CliffordReport};
pub use positivity::{verify_case_positivity, ClaimStatus, Method, PositivityReport, Step, StepKind};
pub use rigidity::verify_rigidity_case;
pub use sampling::{sample_configuration, sample_route_agreement, Configuration, Constraint, RouteAgreementReport, SampleReport, SampleSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("infeasible sampling spec: {0}")]
    InfeasibleSpec(String),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("positivity case must be 1..=4, got {0}")]
    UnknownCase(u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityStatus {
    VerifiedZero,
    ResidualNonzero,
    DivisionFailed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub status: IdentityStatus,
    /// Total terms over all residual parts.
    pub residual_term_count: usize,
    pub max_degree: u64,
    pub max_intermediate_terms: usize,
    pub parts: usize,
    /// First failing part and a preview of its residual, or the division error.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn is_verified(&self) -> bool {
        self.status == IdentityStatus::VerifiedZero
    }
}

/// Collects `lhs - rhs` for each part of one identity.
#[derive(Default)]
pub struct Check {
    parts: Vec<(String, Poly)>,
    max_terms: usize,
    max_degree: u64,
}

impl Check {
    fn observe(&mut self, p: &Poly) {
        self.max_terms = self.max_terms.max(p.len());
        self.max_degree = self.max_degree.max(p.degree());
    }

    pub fn equal(&mut self, label: impl Into<String>, lhs: &Poly, rhs: &Poly) {
        self.observe(lhs);
        self.observe(rhs);
        self.parts.push((label.into(), lhs - rhs));
    }

    pub fn zero(&mut self, label: impl Into<String>, p: &Poly) {
        self.observe(p);
        self.parts.push((label.into(), p.clone()));
    }

    fn finish(self, id: &str, outcome: Result<(), PolyError>, elapsed: Duration) -> IdentityReport {
        let residual_term_count = self.parts.iter().map(|(_, r)| r.len()).sum();
        let (status, detail) = match outcome {
            Err(e) => (IdentityStatus::DivisionFailed, Some(e.to_string())),
            Ok(()) => match self.parts.iter().find(|(_, r)| !r.is_zero()) {
                None => (IdentityStatus::VerifiedZero, None),
                Some((label, r)) => {
                    let mut text = r.to_string();
                    if text.len() > 160 {
                        text.truncate(160);
                        text.push_str("...");
                    }
                    (IdentityStatus::ResidualNonzero, Some(format!("{label}: {text}")))
                }
            },
        };
        IdentityReport {
            identity_id: id.to_string(),
            status,
            residual_term_count,
            max_degree: self.max_degree,
            max_intermediate_terms: self.max_terms,
            parts: self.parts.len(),
            detail,
            elapsed,
        }
    }
}

/// Catalog variant. The negative control replaces `3 lambda` by `4 lambda` in LNEW1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CatalogMode {
    pub negative_control: bool,
}

type IdentityFn = fn(&mut Check, usize, CatalogMode) -> Result<(), PolyError>;

struct Entry {
    id: String,
    run: IdentityFn,
    param: usize,
}

fn catalog() -> &'static [Entry] {
    static CAT: OnceLock<Vec<Entry>> = OnceLock::new();
    CAT.get_or_init(|| {
        let mut v: Vec<Entry> = identities::TABLE
            .iter()
            .map(|&(id, run)| Entry { id: id.to_string(), run, param: 0 })
            .collect();
        for r in 1..=5 {
            v.push(Entry { id: format!("LBRIDGE({r})"), run: identities::lbridge, param: r });
        }
        v.push(Entry { id: "RIGIDITY_CASE1".into(), run: rigidity::check_case, param: 1 });
        v.push(Entry { id: "RIGIDITY_CASE2".into(), run: rigidity::check_case, param: 2 });
        v.sort_by(|a, b| a.id.cmp(&b.id));
        v
    })
}

/// All identity ids, sorted.
pub fn identity_ids() -> Vec<String> {
    catalog().iter().map(|e| e.id.clone()).collect()
}

pub fn verify_identity(id: &str) -> Result<IdentityReport, VerifyError> {
    verify_identity_in(id, CatalogMode::default())
}

pub fn verify_identity_in(id: &str, mode: CatalogMode) -> Result<IdentityReport, VerifyError> {
    let entry = catalog().iter().find(|e| e.id == id).ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))?;
    let start = Instant::now();
    let mut check = Check::default();
    let outcome = (entry.run)(&mut check, entry.param, mode);
    Ok(check.finish(&entry.id, outcome, start.elapsed()))
}

/// Runs the selected identities (all when `only` is empty) concurrently; results sorted by id.
pub fn verify_identities(only: &[String], mode: CatalogMode) -> Result<Vec<IdentityReport>, VerifyError> {
    let ids: Vec<String> = if only.is_empty() { identity_ids() } else { only.to_vec() };
    for id in &ids {
        if !catalog().iter().any(|e| &e.id == id) {
            return Err(VerifyError::UnknownIdentity(id.clone()));
        }
    }
    let mut out: Vec<IdentityReport> =
        ids.par_iter().map(|id| verify_identity_in(id, mode)).collect::<Result<_, _>>()?;
    out.sort_by(|a, b| a.identity_id.cmp(&b.identity_id));
    Ok(out)
}

/// Memoized verification status of a standard-catalog identity.
pub(crate) fn identity_holds(id: &str) -> bool {
    static MEMO: OnceLock<Mutex<HashMap<String, bool>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(&v) = memo.lock().expect("memo lock").get(id) {
        return v;
    }
    let v = verify_identity(id).map(|r| r.is_verified()).unwrap_or(false);
    memo.lock().expect("memo lock").insert(id.to_string(), v);
    v
}
