//! Line-oriented machine files.
//!
//! ```text
//! machine pal_sub
//! input: 0 1
//! stack: Z 0 1
//! output: 0 1
//! start: q0
//! bottom: Z
//! accept: acc
//! reject:
//! bound: 1 6
//! trans: q0 ¢ Z -> skip Z λ
//! trans: push 0 Z -> push 0Z 0
//! ```
//!
//! Oracle machines add `query: <symbols>` (the query alphabet) and, for
//! Turing mode, `qstates: <q_query> <q_yes> <q_no>`; their transitions may
//! carry a seventh field, the query symbol written (or `λ`).
//!
//! A line whose first non-blank character is `#` is a comment. A `#`
//! anywhere else is an ordinary symbol token, so alphabets may contain it.
//! Inside track tokens the padding is `#` and a literal `#` is `\#`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{LinearBound, MachineSpec, QueryExt, Read, State, Transition, TuringStates};
use crate::error::{Error, Result};
use crate::strings::{Alphabet, Symbol, Word, LAMBDA, LEFT_END, RIGHT_END};

pub(crate) fn parse_read(token: &str) -> Result<Read> {
    Ok(match token {
        LAMBDA => Read::Lambda,
        LEFT_END => Read::LeftEnd,
        RIGHT_END => Read::RightEnd,
        other => Read::Symbol(Symbol::parse_token(other)?),
    })
}

#[derive(Default)]
struct Headers {
    name: Option<String>,
    input: Option<Alphabet>,
    stack: Option<Alphabet>,
    output: Option<Alphabet>,
    query: Option<Alphabet>,
    qstates: Option<TuringStates>,
    start: Option<State>,
    bottom: Option<Symbol>,
    accept: Option<BTreeSet<State>>,
    reject: Option<BTreeSet<State>>,
    bound: Option<LinearBound>,
}

pub fn parse(text: &str) -> Result<MachineSpec> {
    let mut headers = Headers::default();
    let mut trans_lines = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if let Some(name) = line.strip_prefix("machine ") {
            headers.name = Some(name.trim().to_string());
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `key: value`, found `{line}`")))?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        let symbols = || -> Result<Alphabet> {
            let syms = tokens
                .iter()
                .map(|t| Symbol::parse_token(t))
                .collect::<Result<Vec<_>>>()?;
            Alphabet::declared(syms)
        };
        let states =
            || -> Result<BTreeSet<State>> { tokens.iter().map(|t| State::try_new(t)).collect() };
        let one = || -> Result<&str> {
            match tokens.as_slice() {
                [t] => Ok(*t),
                _ => Err(Error::InvalidToken(format!(
                    "`{key}` takes exactly one value"
                ))),
            }
        };
        let wrap = |e: Error| err(e.to_string());
        match key.trim() {
            "input" => headers.input = Some(symbols().map_err(wrap)?),
            "stack" => headers.stack = Some(symbols().map_err(wrap)?),
            "output" => headers.output = Some(symbols().map_err(wrap)?),
            "query" => headers.query = Some(symbols().map_err(wrap)?),
            "start" => headers.start = Some(State::try_new(one().map_err(wrap)?).map_err(wrap)?),
            "bottom" => {
                headers.bottom = Some(Symbol::parse_token(one().map_err(wrap)?).map_err(wrap)?)
            }
            "accept" => headers.accept = Some(states().map_err(wrap)?),
            "reject" => headers.reject = Some(states().map_err(wrap)?),
            "bound" => {
                let nums: Vec<u64> = tokens
                    .iter()
                    .map(|t| t.parse::<u64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| err(format!("bad bound: {e}")))?;
                let [a, b] = nums.as_slice() else {
                    return Err(err("`bound` takes two numbers".into()));
                };
                headers.bound = Some(LinearBound::new(*a, *b).map_err(wrap)?);
            }
            "qstates" => {
                let [q, y, n] = tokens.as_slice() else {
                    return Err(err("`qstates` takes three states".into()));
                };
                headers.qstates = Some(TuringStates {
                    query: State::try_new(q).map_err(wrap)?,
                    yes: State::try_new(y).map_err(wrap)?,
                    no: State::try_new(n).map_err(wrap)?,
                });
            }
            "trans" => trans_lines.push((
                line_no,
                tokens.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            )),
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }

    let missing = |what: &str| Error::Parse {
        line: 0,
        message: format!("missing `{what}`"),
    };
    let stack = headers.stack.ok_or_else(|| missing("stack:"))?;
    let query = match (headers.query, headers.qstates) {
        (Some(alphabet), turing) => Some(QueryExt { alphabet, turing }),
        (None, Some(_)) => return Err(missing("query:")),
        (None, None) => None,
    };

    let mut transitions = Vec::with_capacity(trans_lines.len());
    for (line, tokens) in trans_lines {
        let err = |message: String| Error::Parse { line, message };
        let wrap = |e: Error| err(e.to_string());
        let (fields, query_field) = match tokens.as_slice() {
            [q, r, t, arrow, q2, push, emit] if arrow == "->" => ([q, r, t, q2, push, emit], None),
            [q, r, t, arrow, q2, push, emit, qs] if arrow == "->" => {
                ([q, r, t, q2, push, emit], Some(qs))
            }
            _ => {
                return Err(err(
                    "expected `trans: <q> <read> <top> -> <q'> <push> <emit> [<query>]`".into(),
                ))
            }
        };
        let [from, read, top, to, push, emit] = fields;
        let opt = |t: &str| -> Result<Option<Symbol>> {
            if t == LAMBDA {
                Ok(None)
            } else {
                Symbol::parse_token(t).map(Some)
            }
        };
        transitions.push(Transition {
            from: State::try_new(from).map_err(wrap)?,
            read: parse_read(read).map_err(wrap)?,
            top: Symbol::parse_token(top).map_err(wrap)?,
            to: State::try_new(to).map_err(wrap)?,
            push: if push == LAMBDA {
                Word::new()
            } else {
                stack.parse_word(push).map_err(wrap)?
            },
            emit: opt(emit).map_err(wrap)?,
            query: match query_field {
                Some(q) => opt(q).map_err(wrap)?,
                None => None,
            },
        });
    }

    Ok(MachineSpec {
        name: headers.name.ok_or_else(|| missing("machine"))?,
        input: headers.input.ok_or_else(|| missing("input:"))?,
        stack,
        output: headers.output.ok_or_else(|| missing("output:"))?,
        start: headers.start.ok_or_else(|| missing("start:"))?,
        bottom: headers.bottom.ok_or_else(|| missing("bottom:"))?,
        accept: headers.accept.ok_or_else(|| missing("accept:"))?,
        reject: headers.reject.unwrap_or_default(),
        bound: headers.bound.ok_or_else(|| missing("bound:"))?,
        transitions,
        query,
    })
}

pub fn serialize(spec: &MachineSpec) -> String {
    fn list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
        items.into_iter().map(|s| format!(" {s}")).collect()
    }
    let lam = |w: &Word| {
        if w.is_empty() {
            LAMBDA.to_string()
        } else {
            w.to_string()
        }
    };
    let opt = |s: Option<Symbol>| s.map_or(LAMBDA.to_string(), |s| s.to_string());

    let mut out = String::new();
    let _ = writeln!(out, "machine {}", spec.name);
    let _ = writeln!(out, "input:{}", list(spec.input.iter()));
    let _ = writeln!(out, "stack:{}", list(spec.stack.iter()));
    let _ = writeln!(out, "output:{}", list(spec.output.iter()));
    if let Some(q) = &spec.query {
        let _ = writeln!(out, "query:{}", list(q.alphabet.iter()));
        if let Some(ts) = &q.turing {
            let _ = writeln!(out, "qstates: {} {} {}", ts.query, ts.yes, ts.no);
        }
    }
    let _ = writeln!(out, "start: {}", spec.start);
    let _ = writeln!(out, "bottom: {}", spec.bottom);
    let _ = writeln!(out, "accept:{}", list(&spec.accept));
    let _ = writeln!(out, "reject:{}", list(&spec.reject));
    let _ = writeln!(
        out,
        "bound: {} {}",
        spec.bound.slope(),
        spec.bound.intercept()
    );
    for t in &spec.transitions {
        let _ = write!(
            out,
            "trans: {} {} {} -> {} {} {}",
            t.from,
            t.read,
            t.top,
            t.to,
            lam(&t.push),
            opt(t.emit)
        );
        if spec.query.is_some() {
            let _ = write!(out, " {}", opt(t.query));
        }
        out.push('\n');
    }
    out
}
