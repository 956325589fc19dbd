//! Check-report records shared by the verification surfaces.

use serde::Serialize;

/// One named check: `pass` iff `lhs` relates to `rhs` as the check demands,
/// judged at `tol`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub tol: f64,
}

impl Check {
    /// |lhs - rhs| <= tol.
    pub fn equality(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            pass: (lhs - rhs).abs() <= tol,
            lhs,
            rhs,
            tol,
        }
    }

    /// lhs >= rhs - tol.
    pub fn at_least(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            pass: lhs >= rhs - tol,
            lhs,
            rhs,
            tol,
        }
    }

    pub fn boolean(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            lhs: if pass { 1.0 } else { 0.0 },
            rhs: 1.0,
            tol: 0.0,
        }
    }
}

/// Report JSON for the connectivity relation suite:
/// `{"graph": spec, "k": int, "checks": [...]}`.
#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityReport {
    pub graph: String,
    pub k: usize,
    pub checks: Vec<Check>,
    /// Convention notes, e.g. a disconnected deletion where alpha = 0 was used.
    pub warnings: Vec<String>,
}

impl ConnectivityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
