//! Nondeterministic pushdown transducers and their execution.
//!
//! A [`MachineSpec`] is plain data; [`Machine`] is the validated, indexed
//! form that enumerates the full output set of an input under the linear
//! step budget.

mod engine;
pub mod format;
mod validate;

use std::collections::BTreeSet;
use std::fmt;

pub use engine::{Limits, Machine, QueryRecord, SingleValued, TerminationVerdict};
pub use validate::{validate_spec, ValidationReport};

use crate::error::{Error, Result};
use crate::strings::{Alphabet, Symbol, Word};

/// Finite set of output strings; empty means undefined.
pub type OutputSet = BTreeSet<Word>;

/// Step budget `slope·n + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearBound {
    slope: u64,
    intercept: u64,
}

impl LinearBound {
    pub fn new(slope: u64, intercept: u64) -> Result<LinearBound> {
        if slope + intercept == 0 {
            return Err(Error::InvalidBound { slope, intercept });
        }
        Ok(LinearBound { slope, intercept })
    }

    /// p(n) = n.
    pub fn identity() -> LinearBound {
        LinearBound {
            slope: 1,
            intercept: 0,
        }
    }

    pub fn slope(&self) -> u64 {
        self.slope
    }

    pub fn intercept(&self) -> u64 {
        self.intercept
    }

    pub fn eval(&self, n: usize) -> u64 {
        self.slope
            .saturating_mul(n as u64)
            .saturating_add(self.intercept)
    }

    /// `self ∘ inner`: n ↦ self(inner(n)).
    pub fn after(&self, inner: &LinearBound) -> LinearBound {
        let slope = self.slope * inner.slope;
        let intercept = self.slope * inner.intercept + self.intercept;
        LinearBound {
            slope,
            intercept: if slope + intercept == 0 { 1 } else { intercept },
        }
    }

    /// Pointwise maximum, as a linear bound.
    pub fn max(&self, other: &LinearBound) -> LinearBound {
        LinearBound {
            slope: self.slope.max(other.slope),
            intercept: self.intercept.max(other.intercept),
        }
    }
}

impl fmt::Display for LinearBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}n+{}", self.slope, self.intercept)
    }
}

/// Inner state name.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State(Symbol);

impl State {
    pub fn new(name: &str) -> State {
        State(Symbol::new(name))
    }

    pub fn try_new(name: &str) -> Result<State> {
        Symbol::try_new(name).map(State)
    }

    pub fn name(&self) -> &'static str {
        self.0.as_str()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a transition consumes from the input tape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Read {
    Lambda,
    LeftEnd,
    RightEnd,
    Symbol(Symbol),
}

impl fmt::Display for Read {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Read::Lambda => f.write_str(crate::strings::LAMBDA),
            Read::LeftEnd => f.write_str(crate::strings::LEFT_END),
            Read::RightEnd => f.write_str(crate::strings::RIGHT_END),
            Read::Symbol(s) => write!(f, "{s}"),
        }
    }
}

/// `(from, read, top) -> (to, push, emit[, query])`. `push` replaces the
/// popped top symbol and is written top-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub from: State,
    pub read: Read,
    pub top: Symbol,
    pub to: State,
    pub push: Word,
    pub emit: Option<Symbol>,
    pub query: Option<Symbol>,
}

impl Transition {
    pub fn is_stack_neutral(&self) -> bool {
        self.push.len() == 1 && self.push[0] == self.top
    }
}

/// Distinguished states of a Turing-mode oracle machine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuringStates {
    pub query: State,
    pub yes: State,
    pub no: State,
}

/// Query-tape extension. Without `turing` the machine is many-one: each
/// path writes one query word, checked when the path accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryExt {
    pub alphabet: Alphabet,
    pub turing: Option<TuringStates>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineSpec {
    pub name: String,
    pub input: Alphabet,
    pub stack: Alphabet,
    pub output: Alphabet,
    pub start: State,
    pub bottom: Symbol,
    pub accept: BTreeSet<State>,
    pub reject: BTreeSet<State>,
    pub bound: LinearBound,
    pub transitions: Vec<Transition>,
    pub query: Option<QueryExt>,
}

impl MachineSpec {
    pub fn new(
        name: &str,
        input: Alphabet,
        stack: Alphabet,
        output: Alphabet,
        start: &str,
        bottom: &str,
        bound: LinearBound,
    ) -> MachineSpec {
        MachineSpec {
            name: name.to_string(),
            input,
            stack,
            output,
            start: State::new(start),
            bottom: Symbol::new(bottom),
            accept: BTreeSet::new(),
            reject: BTreeSet::new(),
            bound,
            transitions: Vec::new(),
            query: None,
        }
    }

    pub fn accepting(mut self, states: &[&str]) -> Self {
        self.accept.extend(states.iter().map(|s| State::new(s)));
        self
    }

    pub fn rejecting(mut self, states: &[&str]) -> Self {
        self.reject.extend(states.iter().map(|s| State::new(s)));
        self
    }

    /// Adds a transition. `read` and `emit` take `"λ"`, `"¢"`, `"$"` or a
    /// symbol token; `push` is a space-free word over the stack alphabet
    /// (or `"λ"` to pop).
    pub fn trans(
        mut self,
        from: &str,
        read: &str,
        top: &str,
        to: &str,
        push: &str,
        emit: &str,
    ) -> Self {
        let t = self.make_transition(from, read, top, to, push, emit, crate::strings::LAMBDA);
        self.transitions.push(t);
        self
    }

    /// Like [`MachineSpec::trans`], also writing `query` to the query tape.
    #[allow(clippy::too_many_arguments)]
    pub fn trans_q(
        mut self,
        from: &str,
        read: &str,
        top: &str,
        to: &str,
        push: &str,
        emit: &str,
        query: &str,
    ) -> Self {
        let t = self.make_transition(from, read, top, to, push, emit, query);
        self.transitions.push(t);
        self
    }

    #[allow(clippy::too_many_arguments)]
    fn make_transition(
        &self,
        from: &str,
        read: &str,
        top: &str,
        to: &str,
        push: &str,
        emit: &str,
        query: &str,
    ) -> Transition {
        let opt = |s: &str| {
            (s != crate::strings::LAMBDA).then(|| Symbol::parse_token(s).expect("symbol"))
        };
        Transition {
            from: State::new(from),
            read: format::parse_read(read).expect("read field"),
            top: Symbol::parse_token(top).expect("stack symbol"),
            to: State::new(to),
            push: if push == crate::strings::LAMBDA {
                Word::new()
            } else {
                self.stack
                    .parse_word(push)
                    .expect("push word over the stack alphabet")
            },
            emit: opt(emit),
            query: opt(query),
        }
    }

    pub fn many_one(mut self, alphabet: Alphabet) -> Self {
        self.query = Some(QueryExt {
            alphabet,
            turing: None,
        });
        self
    }

    pub fn turing(mut self, alphabet: Alphabet, query: &str, yes: &str, no: &str) -> Self {
        self.query = Some(QueryExt {
            alphabet,
            turing: Some(TuringStates {
                query: State::new(query),
                yes: State::new(yes),
                no: State::new(no),
            }),
        });
        self
    }

    pub fn is_halting(&self, state: State) -> bool {
        self.accept.contains(&state) || self.reject.contains(&state)
    }

    /// Every state mentioned anywhere in the spec, sorted.
    pub fn states(&self) -> BTreeSet<State> {
        let mut states = BTreeSet::from([self.start]);
        states.extend(self.accept.iter().chain(&self.reject).copied());
        for t in &self.transitions {
            states.insert(t.from);
            states.insert(t.to);
        }
        if let Some(ts) = self.turing_states() {
            states.extend([ts.query, ts.yes, ts.no]);
        }
        states
    }

    pub fn turing_states(&self) -> Option<&TuringStates> {
        self.query.as_ref().and_then(|q| q.turing.as_ref())
    }

    /// The same machine with the roles of `q_yes` and `q_no` exchanged.
    pub fn swap_yes_no(&self) -> MachineSpec {
        let mut spec = self.clone();
        if let Some(ts) = spec.query.as_mut().and_then(|q| q.turing.as_mut()) {
            std::mem::swap(&mut ts.yes, &mut ts.no);
        }
        spec
    }

    /// The same machine with every query-tape write and query state dropped.
    pub fn without_queries(&self) -> MachineSpec {
        let mut spec = self.clone();
        spec.query = None;
        for t in &mut spec.transitions {
            t.query = None;
        }
        spec
    }
}

/// One configuration on a violating path, as rendered for error reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub state: State,
    pub input_position: usize,
    /// Top first.
    pub stack: Word,
    pub output: Word,
    pub query: Word,
    pub steps: u64,
}

/// The shortest prefix of a path that overruns the step budget: every
/// configuration from the initial one through the first over-budget one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolatingPath(pub Vec<PathStep>);

impl ViolatingPath {
    pub fn last_state(&self) -> Option<State> {
        self.0.last().map(|s| s.state)
    }
}

impl fmt::Display for ViolatingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.0 {
            writeln!(
                f,
                "  [{:>3}] {} @{} stack={} out={}",
                step.steps,
                step.state,
                step.input_position,
                step.stack.display_or_unit(),
                step.output.display_or_unit(),
            )?;
        }
        Ok(())
    }
}

/// Validates, indexes and enumerates in one call.
pub fn enumerate_outputs(spec: &MachineSpec, x: &Word) -> Result<OutputSet> {
    Machine::new(spec.clone())?.enumerate(x)
}

pub fn accepts(spec: &MachineSpec, x: &Word) -> Result<bool> {
    Machine::new(spec.clone())?.accepts(x)
}

pub fn check_termination(spec: &MachineSpec, x: &Word) -> Result<TerminationVerdict> {
    Machine::new(spec.clone())?.check_termination(x)
}

pub fn is_single_valued(spec: &MachineSpec, inputs: &[Word]) -> Result<SingleValued> {
    Machine::new(spec.clone())?.is_single_valued(inputs, crate::par::Mode::default())
}

/// True when no transition changes the stack: the finite-automaton
/// restriction.
pub fn is_stack_free(spec: &MachineSpec) -> bool {
    spec.transitions.iter().all(Transition::is_stack_neutral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert!(LinearBound::new(0, 0).is_err());
        let p = LinearBound::new(2, 3).unwrap();
        assert_eq!(p.eval(4), 11);
        let q = LinearBound::new(1, 1).unwrap();
        assert_eq!(p.after(&q).eval(4), p.eval(q.eval(4) as usize));
        assert_eq!(p.max(&q), p);
    }
}
