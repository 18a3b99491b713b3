//! Command outcomes and their text and JSON renderings. Both renderings
//! derive the verdict from [`Outcome::exit_code`].

use std::time::Duration;

use hopfpi::CheckReport;
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_MATH, EXIT_PASS};

#[derive(Debug)]
pub struct Section {
    pub name: String,
    pub report: CheckReport,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub command: String,
    pub sections: Vec<Section>,
    pub messages: Vec<String>,
    pub error: Option<CliError>,
    pub elapsed: Duration,
    /// Document text to print on stdout when no output path was given.
    pub document: Option<String>,
    /// Forces a mathematical failure verdict, e.g. an oracle mismatch.
    pub math_failure: bool,
}

impl Outcome {
    pub fn new(command: impl Into<String>) -> Self {
        Outcome { command: command.into(), ..Default::default() }
    }

    pub fn section(&mut self, name: impl Into<String>, report: CheckReport) {
        self.sections.push(Section { name: name.into(), report });
    }

    pub fn message(&mut self, text: impl Into<String>) {
        self.messages.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.report.passed()) && !self.math_failure
    }

    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(e) => e.exit_code(),
            None if self.passed() => EXIT_PASS,
            None => EXIT_MATH,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self.exit_code() {
            EXIT_PASS => "PASS",
            EXIT_MATH => "FAIL",
            _ => "ERROR",
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for s in &self.sections {
            let v = if s.report.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{v}] {}\n{}", s.name, s.report));
        }
        for m in &self.messages {
            out.push_str(m);
            out.push('\n');
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        out.push_str(&format!(
            "verdict: {} (exit {}) in {} ms\n",
            self.verdict(),
            self.exit_code(),
            self.elapsed.as_millis()
        ));
        out
    }

    pub fn render_json(&self) -> Value {
        let strings = |v: &[hopfpi::Scalar]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let checks: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                json!({
                    "name": s.name,
                    "passed": s.report.passed(),
                    "axioms": s.report.tallies().iter().map(|t| json!({
                        "name": t.name, "evaluated": t.evaluated, "failed": t.failed,
                    })).collect::<Vec<_>>(),
                    "failures": s.report.failures().iter().map(|f| json!({
                        "axiom": f.axiom, "grades": f.grades, "basis": f.basis,
                        "lhs": strings(&f.lhs), "rhs": strings(&f.rhs),
                    })).collect::<Vec<_>>(),
                    "notes": s.report.notes(),
                })
            })
            .collect();
        json!({
            "command": self.command,
            "checks": checks,
            "messages": self.messages,
            "error": self.error.as_ref().map(ToString::to_string),
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "exit_code": self.exit_code(),
            "verdict": self.verdict(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfpi::Field;

    fn failing() -> CheckReport {
        let q = Field::Rational;
        let mut r = CheckReport::new();
        r.check("assoc", &[0], &[1], vec![q.one()], vec![q.zero()]);
        r
    }

    #[test]
    fn verdicts_agree_between_renderings() {
        let mut o = Outcome::new("validate x");
        o.section("ok", CheckReport::new());
        assert_eq!(o.exit_code(), 0);
        assert!(o.render_text().contains("verdict: PASS"));
        assert_eq!(o.render_json()["verdict"], "PASS");

        o.section("bad", failing());
        assert_eq!(o.exit_code(), 1);
        assert!(o.render_text().contains("[FAIL] bad"));
        let j = o.render_json();
        assert_eq!(j["verdict"], "FAIL");
        assert_eq!(j["checks"][1]["failures"][0]["axiom"], "assoc");
        assert_eq!(j["checks"][1]["failures"][0]["rhs"][0], "0");
    }

    #[test]
    fn errors_take_their_own_code() {
        let mut o = Outcome::new("validate missing");
        o.error = Some(CliError::Io { path: "missing".into(), reason: "not found".into() });
        assert_eq!(o.exit_code(), 2);
        assert_eq!(o.verdict(), "ERROR");
        o.error = Some(CliError::Core(hopfpi::Error::NonAbelian("x".into())));
        assert_eq!(o.exit_code(), 1);
        assert!(o.render_text().contains("requires abelian π"));
    }
}
