use std::fmt;

use super::{MachineSpec, Read};

/// Invariant violations (fatal) and informational notes. A spec is
/// well-formed iff `violations` is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn is_well_formed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "  error: {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

pub fn validate_spec(spec: &MachineSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut violation = |msg: String| report.violations.push(msg);

    for q in spec.accept.intersection(&spec.reject) {
        violation(format!("state {q} is both accepting and rejecting"));
    }
    if !spec.stack.contains(spec.bottom) {
        violation(format!(
            "bottom marker {} is not in the stack alphabet {}",
            spec.bottom, spec.stack
        ));
    }

    let query_alphabet = spec.query.as_ref().map(|q| &q.alphabet);
    for (i, t) in spec.transitions.iter().enumerate() {
        let at = format!("transition {} ({} {} {})", i + 1, t.from, t.read, t.top);
        if spec.is_halting(t.from) {
            violation(format!("{at} leaves halting state {}", t.from));
        }
        if let Read::Symbol(s) = t.read {
            if !spec.input.contains(s) {
                violation(format!("{at} reads {s}, not in the input alphabet"));
            }
        }
        if !spec.stack.contains(t.top) {
            violation(format!(
                "{at} expects top {}, not in the stack alphabet",
                t.top
            ));
        }
        if let Some(s) = t.push.iter().find(|s| !spec.stack.contains(**s)) {
            violation(format!("{at} pushes {s}, not in the stack alphabet"));
        }
        if let Some(e) = t.emit {
            if !spec.output.contains(e) {
                violation(format!("{at} emits {e}, not in the output alphabet"));
            }
        }
        match (t.query, query_alphabet) {
            (Some(q), None) => violation(format!(
                "{at} writes query symbol {q} but the machine has no query tape"
            )),
            (Some(q), Some(a)) if !a.contains(q) => violation(format!(
                "{at} writes query symbol {q}, not in the query alphabet"
            )),
            _ => {}
        }
    }

    if let Some(ts) = spec.turing_states() {
        if ts.query == ts.yes || ts.query == ts.no || ts.yes == ts.no {
            violation("query, yes and no states must be distinct".to_string());
        }
        if spec.is_halting(ts.query) {
            violation(format!("query state {} is halting", ts.query));
        }
        if spec.transitions.iter().any(|t| t.from == ts.query) {
            violation(format!("query state {} has outgoing transitions", ts.query));
        }
    }

    if spec
        .transitions
        .iter()
        .any(|t| spec.accept.contains(&t.to) && t.read != Read::RightEnd)
    {
        report.notes.push(
            "some accepting state is entered without reading $; acceptance is by state, so input may remain unread"
                .to_string(),
        );
    }
    report
}
