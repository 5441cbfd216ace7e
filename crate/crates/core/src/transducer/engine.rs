use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{MachineSpec, OutputSet, PathStep, Read, State, ViolatingPath};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::par::{self, Mode};
use crate::strings::{Symbol, Word, LEFT_END, RIGHT_END};

/// Caps on explored configurations and on enumerated string sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_configs: usize,
    pub max_enumeration: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_configs: 10_000_000,
            max_enumeration: 10_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TerminationVerdict {
    Terminates,
    Violates(ViolatingPath),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingleValued {
    Yes,
    No { input: Word, outputs: (Word, Word) },
}

/// One simulated oracle query, with the query tape as left by the answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryRecord {
    pub word: Word,
    pub answer: bool,
    pub tape_cells_after: usize,
    pub head_after: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Halt {
    Running,
    Accept,
    Reject,
}

struct Compiled {
    read: Read,
    top: Symbol,
    to: u32,
    /// Replacement, bottom-most symbol first.
    push_rev: Vec<Symbol>,
    emit: Option<Symbol>,
    query: Option<Symbol>,
}

/// Write-only query tape: the head sits just past the last written cell.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
struct QueryTape {
    cells: Vec<Symbol>,
    head: usize,
}

impl QueryTape {
    fn write(&mut self, s: Symbol) {
        self.cells.push(s);
        self.head += 1;
    }

    fn blank(&mut self) {
        self.cells.clear();
        self.head = 0;
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Config {
    state: u32,
    pos: u32,
    /// Top last.
    stack: Vec<Symbol>,
    output: Vec<Symbol>,
    query: QueryTape,
    steps: u64,
}

struct Node {
    config: Config,
    parent: Option<usize>,
}

pub(crate) enum QueryUse<'a> {
    /// Query tape writes are dropped.
    Ignore,
    /// Many-one: keep the query word of each accepting path.
    Collect,
    Turing(&'a dyn Oracle),
}

struct Outcome {
    accepted: HashSet<(Word, Word)>,
    violation: Option<ViolatingPath>,
    queries: Vec<QueryRecord>,
}

/// A validated, indexed machine.
#[derive(Clone)]
pub struct Machine {
    spec: Arc<MachineSpec>,
    states: Vec<State>,
    halt: Vec<Halt>,
    by_state: Arc<Vec<Vec<Compiled>>>,
    turing: Option<(u32, u32, u32)>,
    left_end: Symbol,
    right_end: Symbol,
    limits: Limits,
}

impl std::fmt::Debug for Machine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Machine({})", self.spec.name)
    }
}

impl Machine {
    pub fn new(spec: MachineSpec) -> Result<Machine> {
        let report = super::validate_spec(&spec);
        if !report.is_well_formed() {
            return Err(Error::InvalidSpec {
                name: spec.name.clone(),
                violations: report.to_string(),
            });
        }
        let states: Vec<State> = spec.states().into_iter().collect();
        let index: HashMap<State, u32> = states
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i as u32))
            .collect();
        let halt = states
            .iter()
            .map(|q| {
                if spec.accept.contains(q) {
                    Halt::Accept
                } else if spec.reject.contains(q) {
                    Halt::Reject
                } else {
                    Halt::Running
                }
            })
            .collect();
        let mut by_state: Vec<Vec<Compiled>> = states.iter().map(|_| Vec::new()).collect();
        for t in &spec.transitions {
            by_state[index[&t.from] as usize].push(Compiled {
                read: t.read,
                top: t.top,
                to: index[&t.to],
                push_rev: t.push.iter().rev().copied().collect(),
                emit: t.emit,
                query: t.query,
            });
        }
        let turing = spec
            .turing_states()
            .map(|ts| (index[&ts.query], index[&ts.yes], index[&ts.no]));
        Ok(Machine {
            spec: Arc::new(spec),
            states,
            halt,
            by_state: Arc::new(by_state),
            turing,
            left_end: Symbol::new(LEFT_END),
            right_end: Symbol::new(RIGHT_END),
            limits: Limits::default(),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Machine {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn spec(&self) -> &MachineSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    /// Every valid output on `x`: outputs of accepting halting
    /// configurations reachable within the step budget.
    pub fn enumerate(&self, x: &Word) -> Result<OutputSet> {
        let outcome = self.explore_checked(x, QueryUse::Ignore)?;
        Ok(outcome.accepted.into_iter().map(|(out, _)| out).collect())
    }

    /// Language recognition, ignoring the output tape.
    pub fn accepts(&self, x: &Word) -> Result<bool> {
        Ok(!self
            .explore_checked(x, QueryUse::Ignore)?
            .accepted
            .is_empty())
    }

    pub fn check_termination(&self, x: &Word) -> Result<TerminationVerdict> {
        self.spec.input.check_word(x)?;
        Ok(match self.explore(x, QueryUse::Ignore)?.violation {
            None => TerminationVerdict::Terminates,
            Some(path) => TerminationVerdict::Violates(path),
        })
    }

    /// Whether every listed input has at most one output; the first
    /// counterexample in list order otherwise.
    pub fn is_single_valued(&self, inputs: &[Word], mode: Mode) -> Result<SingleValued> {
        let hit = par::try_find_first(mode, inputs, |x| {
            let outs = self.enumerate(x)?;
            let mut it = outs.into_iter();
            Ok(match (it.next(), it.next()) {
                (Some(a), Some(b)) => Some((x.clone(), (a, b))),
                _ => None,
            })
        })?;
        Ok(match hit {
            None => SingleValued::Yes,
            Some((input, outputs)) => SingleValued::No { input, outputs },
        })
    }

    pub fn is_stack_free(&self) -> bool {
        super::is_stack_free(&self.spec)
    }

    /// (output, query word) of every accepting path.
    pub(crate) fn run_collect(&self, x: &Word) -> Result<HashSet<(Word, Word)>> {
        Ok(self.explore_checked(x, QueryUse::Collect)?.accepted)
    }

    pub(crate) fn run_turing(
        &self,
        x: &Word,
        oracle: &dyn Oracle,
    ) -> Result<(OutputSet, Vec<QueryRecord>)> {
        let outcome = self.explore_checked(x, QueryUse::Turing(oracle))?;
        let outputs = outcome.accepted.into_iter().map(|(out, _)| out).collect();
        Ok((outputs, outcome.queries))
    }

    fn explore_checked(&self, x: &Word, query_use: QueryUse<'_>) -> Result<Outcome> {
        self.spec.input.check_word(x)?;
        let outcome = self.explore(x, query_use)?;
        match outcome.violation {
            Some(path) => Err(Error::Termination {
                input: x.display_or_unit(),
                budget: self.spec.bound.eval(x.len()),
                path,
            }),
            None => Ok(outcome),
        }
    }

    // Breadth-first by step count. Configurations carry their step count,
    // so duplicates can only meet within one layer.
    fn explore(&self, x: &Word, query_use: QueryUse<'_>) -> Result<Outcome> {
        let mut tape = Vec::with_capacity(x.len() + 2);
        tape.push(self.left_end);
        tape.extend_from_slice(x);
        tape.push(self.right_end);
        let budget = self.spec.bound.eval(x.len());

        let start = Config {
            state: self
                .states
                .binary_search(&self.spec.start)
                .expect("start state indexed") as u32,
            pos: 0,
            stack: vec![self.spec.bottom],
            output: Vec::new(),
            query: QueryTape::default(),
            steps: 0,
        };
        let mut arena = vec![Node {
            config: start,
            parent: None,
        }];
        let mut frontier = vec![0usize];
        let mut outcome = Outcome {
            accepted: HashSet::new(),
            violation: None,
            queries: Vec::new(),
        };
        let mut memo: HashMap<Word, bool> = HashMap::new();
        let mut succ = Vec::new();

        while !frontier.is_empty() {
            let mut layer: HashMap<Config, usize> = HashMap::new();
            let mut next = Vec::new();
            for &idx in &frontier {
                let config = &arena[idx].config;
                match self.halt[config.state as usize] {
                    Halt::Accept => {
                        let query = match query_use {
                            QueryUse::Collect => Word::from(config.query.cells.as_slice()),
                            _ => Word::new(),
                        };
                        outcome
                            .accepted
                            .insert((Word::from(config.output.as_slice()), query));
                        continue;
                    }
                    Halt::Reject => continue,
                    Halt::Running => {}
                }
                succ.clear();
                self.successors(
                    config,
                    &tape,
                    &query_use,
                    &mut memo,
                    &mut outcome.queries,
                    &mut succ,
                )?;
                if succ.is_empty() {
                    continue;
                }
                if config.steps >= budget {
                    let mut path = self.path_to(&arena, idx);
                    path.push(self.snapshot(&succ[0]));
                    outcome.violation = Some(ViolatingPath(path));
                    return Ok(outcome);
                }
                for c in succ.drain(..) {
                    if layer.contains_key(&c) {
                        continue;
                    }
                    if arena.len() >= self.limits.max_configs {
                        return Err(Error::Resource {
                            what: format!(
                                "configurations explored by `{}` on `{}`",
                                self.spec.name,
                                x.display_or_unit()
                            ),
                            cap: self.limits.max_configs,
                        });
                    }
                    arena.push(Node {
                        config: c.clone(),
                        parent: Some(idx),
                    });
                    layer.insert(c, arena.len() - 1);
                    next.push(arena.len() - 1);
                }
            }
            frontier = next;
        }
        Ok(outcome)
    }

    fn successors(
        &self,
        c: &Config,
        tape: &[Symbol],
        query_use: &QueryUse<'_>,
        memo: &mut HashMap<Word, bool>,
        log: &mut Vec<QueryRecord>,
        out: &mut Vec<Config>,
    ) -> Result<()> {
        if let (Some((q_query, q_yes, q_no)), QueryUse::Turing(oracle)) = (self.turing, query_use) {
            if c.state == q_query {
                let word = Word::from(c.query.cells.as_slice());
                let answer = match memo.get(&word) {
                    Some(a) => *a,
                    None => {
                        let a = oracle
                            .contains(&word)
                            .map_err(|e| Error::Oracle(Box::new(e)))?;
                        memo.insert(word.clone(), a);
                        a
                    }
                };
                let mut next = c.clone();
                next.query.blank();
                assert!(
                    next.query.cells.is_empty() && next.query.head == 0,
                    "query tape must be blank with its head on the start cell after an answer"
                );
                log.push(QueryRecord {
                    word,
                    answer,
                    tape_cells_after: next.query.cells.len(),
                    head_after: next.query.head,
                });
                next.state = if answer { q_yes } else { q_no };
                next.steps += 1;
                out.push(next);
                return Ok(());
            }
        }
        let Some(&top) = c.stack.last() else {
            return Ok(());
        };
        for t in &self.by_state[c.state as usize] {
            if t.top != top {
                continue;
            }
            let pos = match t.read {
                Read::Lambda => c.pos,
                Read::LeftEnd | Read::RightEnd | Read::Symbol(_) => {
                    let want = match t.read {
                        Read::LeftEnd => self.left_end,
                        Read::RightEnd => self.right_end,
                        Read::Symbol(s) => s,
                        Read::Lambda => unreachable!(),
                    };
                    if tape.get(c.pos as usize) != Some(&want) {
                        continue;
                    }
                    c.pos + 1
                }
            };
            let mut next = Config {
                state: t.to,
                pos,
                stack: c.stack.clone(),
                output: c.output.clone(),
                query: c.query.clone(),
                steps: c.steps + 1,
            };
            next.stack.pop();
            next.stack.extend_from_slice(&t.push_rev);
            if let Some(e) = t.emit {
                next.output.push(e);
            }
            if let (Some(q), QueryUse::Collect | QueryUse::Turing(_)) = (t.query, query_use) {
                next.query.write(q);
            }
            out.push(next);
        }
        Ok(())
    }

    fn snapshot(&self, c: &Config) -> PathStep {
        PathStep {
            state: self.states[c.state as usize],
            input_position: c.pos as usize,
            stack: c.stack.iter().rev().copied().collect(),
            output: Word::from(c.output.as_slice()),
            query: Word::from(c.query.cells.as_slice()),
            steps: c.steps,
        }
    }

    fn path_to(&self, arena: &[Node], mut idx: usize) -> Vec<PathStep> {
        let mut path = vec![self.snapshot(&arena[idx].config)];
        while let Some(parent) = arena[idx].parent {
            path.push(self.snapshot(&arena[parent].config));
            idx = parent;
        }
        path.reverse();
        path
    }
}
