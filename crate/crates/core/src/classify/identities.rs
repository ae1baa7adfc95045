use crate::reference::{PrintedIdentity, ReferenceTables};
use crate::scalar::Poly;

use super::{substitute_all, CurvatureNormalSystem};

/// One printed identity against the engine's polynomial.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub branch: String,
    pub triple: [usize; 3],
    pub printed: Poly,
    pub derived: Poly,
}

impl IdentityCheck {
    pub fn matches(&self) -> bool {
        (&self.derived - &self.printed).is_zero()
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(IdentityCheck::matches)
    }

    pub fn mismatches(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.matches()).collect()
    }
}

pub fn check_identities(system: &CurvatureNormalSystem, identities: &[PrintedIdentity]) -> IdentityReport {
    let checks = identities
        .iter()
        .map(|id| IdentityCheck {
            branch: id.branch.to_string(),
            triple: id.triple,
            printed: id.printed.clone(),
            derived: substitute_all(system.get(id.triple), &id.substitution),
        })
        .collect();
    IdentityReport { checks }
}

/// Checks every published identity of the case analysis.
pub fn verify_printed_identities() -> IdentityReport {
    check_identities(&CurvatureNormalSystem::nil4(), &ReferenceTables::published().identities)
}
