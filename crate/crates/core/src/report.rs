use std::fmt;

use crate::linalg::Vector;

/// Failures kept per axiom; the per-axiom failure count stays exact.
pub const DEFAULT_FAILURE_CAP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub axiom: String,
    pub grades: Vec<usize>,
    pub basis: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomTally {
    pub name: String,
    pub evaluated: usize,
    pub failed: usize,
}

/// Outcome of a checker run. Axioms are listed in the order they were first
/// evaluated, which is deterministic for every checker in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    cap: usize,
    tallies: Vec<AxiomTally>,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Default for CheckReport {
    fn default() -> Self {
        Self::new()
    }
}

impl CheckReport {
    pub fn new() -> Self {
        Self::with_cap(DEFAULT_FAILURE_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        CheckReport {
            cap,
            tallies: Vec::new(),
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn tally(&mut self, axiom: &str) -> &mut AxiomTally {
        let pos = match self.tallies.iter().position(|t| t.name == axiom) {
            Some(p) => p,
            None => {
                self.tallies.push(AxiomTally {
                    name: axiom.to_string(),
                    evaluated: 0,
                    failed: 0,
                });
                self.tallies.len() - 1
            }
        };
        &mut self.tallies[pos]
    }

    /// Registers an axiom with no evaluations yet so it shows up in summaries.
    pub fn declare(&mut self, axiom: &str) {
        self.tally(axiom);
    }

    /// Compares both sides of one instance of `axiom`.
    pub fn check(
        &mut self,
        axiom: &str,
        grades: &[usize],
        basis: &[usize],
        lhs: Vector,
        rhs: Vector,
    ) -> bool {
        let ok = lhs == rhs;
        self.record(axiom, grades, basis, ok, lhs, rhs);
        ok
    }

    pub fn check_flag(&mut self, axiom: &str, grades: &[usize], basis: &[usize], ok: bool) -> bool {
        self.record(axiom, grades, basis, ok, Vec::new(), Vec::new());
        ok
    }

    pub fn record(
        &mut self,
        axiom: &str,
        grades: &[usize],
        basis: &[usize],
        ok: bool,
        lhs: Vector,
        rhs: Vector,
    ) {
        let cap = self.cap;
        let tally = self.tally(axiom);
        tally.evaluated += 1;
        if ok {
            return;
        }
        tally.failed += 1;
        if tally.failed <= cap {
            self.failures.push(Failure {
                axiom: axiom.to_string(),
                grades: grades.to_vec(),
                basis: basis.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.merge_prefixed("", other);
    }

    /// Merges another report, prefixing its axiom names (e.g. `"circle: "`).
    pub fn merge_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for t in other.tallies {
            let name = format!("{prefix}{}", t.name);
            let kept_before = self.tally(&name).failed.min(self.cap);
            let tally = self.tally(&name);
            tally.evaluated += t.evaluated;
            tally.failed += t.failed;
            let room = self.cap.saturating_sub(kept_before);
            let incoming = other
                .failures
                .iter()
                .filter(|f| f.axiom == t.name)
                .take(room)
                .cloned()
                .map(|mut f| {
                    f.axiom = name.clone();
                    f
                });
            self.failures.extend(incoming);
        }
        self.notes
            .extend(other.notes.into_iter().map(|n| format!("{prefix}{n}")));
    }

    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|t| t.failed == 0)
    }

    pub fn tallies(&self) -> &[AxiomTally] {
        &self.tallies
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.tallies
            .iter()
            .filter(|t| t.failed > 0)
            .map(|t| t.name.as_str())
            .collect()
    }

    pub fn failure_count(&self, axiom: &str) -> usize {
        self.tallies
            .iter()
            .find(|t| t.name == axiom)
            .map_or(0, |t| t.failed)
    }

    pub fn total_failures(&self) -> usize {
        self.tallies.iter().map(|t| t.failed).sum()
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.tallies.iter().any(|t| t.name == axiom)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tallies {
            let verdict = if t.failed == 0 { "ok" } else { "FAIL" };
            writeln!(
                f,
                "  {verdict:<4} {} ({} checked, {} failed)",
                t.name, t.evaluated, t.failed
            )?;
        }
        for fl in &self.failures {
            let show = |v: &Vector| {
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            };
            writeln!(
                f,
                "       {} at grades {:?}, basis {:?}: lhs [{}] rhs [{}]",
                fl.axiom,
                fl.grades,
                fl.basis,
                show(&fl.lhs),
                show(&fl.rhs)
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
