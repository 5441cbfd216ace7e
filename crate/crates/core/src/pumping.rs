//! Functional pumping: decompositions w = uvxyz, s = abpqr such that
//! a·bⁱ·p·qⁱ·r ∈ f(u·vⁱ·x·yⁱ·z).

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::algebra::FunctionHandle;
use crate::error::{Error, Result};
use crate::par::{self, Mode};
use crate::strings::{Symbol, Word};
use crate::transducer::{Limits, OutputSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PumpingParams {
    pub m: usize,
    pub c: usize,
    pub d: usize,
}

impl PumpingParams {
    pub fn new(m: usize, c: usize, d: usize) -> Result<PumpingParams> {
        if m == 0 {
            return Err(Error::Precondition(
                "pumping constant m must be at least 1".into(),
            ));
        }
        Ok(PumpingParams { m, c, d })
    }

    fn output_window(&self) -> usize {
        self.c * self.m + self.d
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub u: Word,
    pub v: Word,
    pub x: Word,
    pub y: Word,
    pub z: Word,
    pub a: Word,
    pub b: Word,
    pub p: Word,
    pub q: Word,
    pub r: Word,
}

impl Decomposition {
    /// Cuts `w` at `wc` and `s` at `sc`; both cut lists must be
    /// nondecreasing and within bounds.
    pub fn from_cuts(w: &[Symbol], wc: [usize; 4], s: &[Symbol], sc: [usize; 4]) -> Decomposition {
        let part = |t: &[Symbol], i: usize, j: usize| Word::from(&t[i..j]);
        Decomposition {
            u: part(w, 0, wc[0]),
            v: part(w, wc[0], wc[1]),
            x: part(w, wc[1], wc[2]),
            y: part(w, wc[2], wc[3]),
            z: part(w, wc[3], w.len()),
            a: part(s, 0, sc[0]),
            b: part(s, sc[0], sc[1]),
            p: part(s, sc[1], sc[2]),
            q: part(s, sc[2], sc[3]),
            r: part(s, sc[3], s.len()),
        }
    }

    pub fn input(&self) -> Word {
        self.pumped_input(1)
    }

    pub fn output(&self) -> Word {
        self.pumped_output(1)
    }

    pub fn pumped_input(&self, i: usize) -> Word {
        let (v, y) = (Word::repeat(&self.v, i), Word::repeat(&self.y, i));
        Word::concat(&[&self.u, &v, &self.x, &y, &self.z])
    }

    pub fn pumped_output(&self, i: usize) -> Word {
        let (b, q) = (Word::repeat(&self.b, i), Word::repeat(&self.q, i));
        Word::concat(&[&self.a, &b, &self.p, &q, &self.r])
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = Word::display_or_unit;
        write!(
            f,
            "u={} v={} x={} y={} z={} | a={} b={} p={} q={} r={}",
            show(&self.u),
            show(&self.v),
            show(&self.x),
            show(&self.y),
            show(&self.z),
            show(&self.a),
            show(&self.b),
            show(&self.p),
            show(&self.q),
            show(&self.r)
        )
    }
}

/// The lemma condition a decomposition fails first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// (i) |vxy| ≤ m.
    Window,
    /// (ii) |vybq| ≥ 1.
    NonTrivial,
    /// (i') |bq| ≥ 1, used instead of (i) and (ii) in relaxed mode.
    OutputNonTrivial,
    /// (iii) |bq| ≤ c·m + d.
    OutputWindow,
    /// (iv) at the given pump count.
    Pump(usize),
    /// (v) |v| = |b| and |y| = |q|.
    LengthPreserving,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Window => f.write_str("(i) |vxy| ≤ m"),
            Condition::NonTrivial => f.write_str("(ii) |vybq| ≥ 1"),
            Condition::OutputNonTrivial => f.write_str("(i') |bq| ≥ 1"),
            Condition::OutputWindow => f.write_str("(iii) |bq| ≤ c·m + d"),
            Condition::Pump(i) => write!(f, "(iv) at i = {i}"),
            Condition::LengthPreserving => f.write_str("(v) |v| = |b| and |y| = |q|"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PumpOptions {
    /// Pump counts probed by condition (iv).
    pub counts: Vec<usize>,
    pub length_preserving: bool,
    pub relaxed: bool,
}

impl PumpOptions {
    /// Counts 0..=i_max, strict conditions.
    pub fn up_to(i_max: usize) -> PumpOptions {
        PumpOptions {
            counts: (0..=i_max).collect(),
            length_preserving: false,
            relaxed: false,
        }
    }

    pub fn length_preserving(mut self, on: bool) -> PumpOptions {
        self.length_preserving = on;
        self
    }

    pub fn relaxed(mut self, on: bool) -> PumpOptions {
        self.relaxed = on;
        self
    }
}

impl Default for PumpOptions {
    /// i ∈ {0, 2}.
    fn default() -> PumpOptions {
        PumpOptions {
            counts: vec![0, 2],
            length_preserving: false,
            relaxed: false,
        }
    }
}

/// The conditions that do not evaluate `f`.
fn static_failure(
    dec: &Decomposition,
    params: PumpingParams,
    opts: &PumpOptions,
) -> Option<Condition> {
    let bq = dec.b.len() + dec.q.len();
    if opts.relaxed {
        if bq == 0 {
            return Some(Condition::OutputNonTrivial);
        }
    } else {
        if dec.v.len() + dec.x.len() + dec.y.len() > params.m {
            return Some(Condition::Window);
        }
        if dec.v.len() + dec.y.len() + bq == 0 {
            return Some(Condition::NonTrivial);
        }
    }
    if bq > params.output_window() {
        return Some(Condition::OutputWindow);
    }
    if opts.length_preserving && (dec.v.len() != dec.b.len() || dec.y.len() != dec.q.len()) {
        return Some(Condition::LengthPreserving);
    }
    None
}

/// Memoized evaluation of `f` on pumped inputs.
struct Cache<'a> {
    f: &'a FunctionHandle,
    seen: Mutex<HashMap<Word, OutputSet>>,
}

impl<'a> Cache<'a> {
    fn new(f: &'a FunctionHandle) -> Cache<'a> {
        Cache {
            f,
            seen: Mutex::default(),
        }
    }

    fn contains(&self, input: &Word, output: &Word) -> Result<bool> {
        if let Some(set) = self.seen.lock().expect("cache poisoned").get(input) {
            return Ok(set.contains(output));
        }
        let set = self.f.eval(input)?;
        let hit = set.contains(output);
        self.seen
            .lock()
            .expect("cache poisoned")
            .insert(input.clone(), set);
        Ok(hit)
    }
}

fn first_failure(
    cache: &Cache<'_>,
    dec: &Decomposition,
    params: PumpingParams,
    opts: &PumpOptions,
) -> Result<Option<Condition>> {
    if let Some(c) = static_failure(dec, params, opts) {
        return Ok(Some(c));
    }
    for &i in &opts.counts {
        if !cache.contains(&dec.pumped_input(i), &dec.pumped_output(i))? {
            return Ok(Some(Condition::Pump(i)));
        }
    }
    Ok(None)
}

fn require_member(f: &FunctionHandle, w: &Word, s: &Word) -> Result<()> {
    if !f.eval(w)?.contains(s) {
        return Err(Error::Precondition(format!(
            "`{}` is not an output of {} on `{}`",
            s.display_or_unit(),
            f.name(),
            w.display_or_unit()
        )));
    }
    Ok(())
}

/// `None` when `dec` satisfies every condition, otherwise the first one
/// it fails.
pub fn check_decomposition(
    f: &FunctionHandle,
    w: &Word,
    s: &Word,
    dec: &Decomposition,
    params: PumpingParams,
    opts: &PumpOptions,
) -> Result<Option<Condition>> {
    require_member(f, w, s)?;
    if dec.input() != *w || dec.output() != *s {
        return Err(Error::Precondition(format!(
            "decomposition {dec} does not reassemble w and s"
        )));
    }
    first_failure(&Cache::new(f), dec, params, opts)
}

/// All nondecreasing 4-tuples of cut points in 0..=n whose two inner gaps
/// (cut[0]..cut[1] and cut[2]..cut[3]) have total length at most
/// `gap_limit` and whose outer span cut[0]..cut[3] is at most `span_limit`.
fn cuts(n: usize, span_limit: usize, gap_limit: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for c0 in 0..=n {
        for c3 in c0..=n.min(c0 + span_limit) {
            for c1 in c0..=c3 {
                for c2 in c1..=c3 {
                    if (c1 - c0) + (c3 - c2) <= gap_limit {
                        out.push([c0, c1, c2, c3]);
                    }
                }
            }
        }
    }
    out
}

/// Searches all splits in a fixed cut order and returns the first
/// decomposition satisfying every condition for the counts in `opts`.
pub fn search_decomposition(
    f: &FunctionHandle,
    w: &Word,
    s: &Word,
    params: PumpingParams,
    opts: &PumpOptions,
    mode: Mode,
) -> Result<Option<Decomposition>> {
    search_capped(
        f,
        w,
        s,
        params,
        opts,
        mode,
        Limits::default().max_enumeration,
    )
}

pub fn search_capped(
    f: &FunctionHandle,
    w: &Word,
    s: &Word,
    params: PumpingParams,
    opts: &PumpOptions,
    mode: Mode,
    cap: usize,
) -> Result<Option<Decomposition>> {
    if w.len() < params.m {
        return Err(Error::Precondition(format!(
            "|w| = {} is below m = {}",
            w.len(),
            params.m
        )));
    }
    require_member(f, w, s)?;
    let span = if opts.relaxed { w.len() } else { params.m };
    let w_cuts = cuts(w.len(), span, span);
    let s_cuts = cuts(s.len(), s.len(), params.output_window());
    let total = w_cuts.len().saturating_mul(s_cuts.len());
    if total > cap {
        return Err(Error::Resource {
            what: format!("{total} candidate decompositions"),
            cap,
        });
    }
    let cache = Cache::new(f);
    par::try_find_first(mode, &w_cuts, |wc| {
        for sc in &s_cuts {
            let dec = Decomposition::from_cuts(w, *wc, s, *sc);
            if first_failure(&cache, &dec, params, opts)?.is_none() {
                return Ok(Some(dec));
            }
        }
        Ok(None)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub w: Word,
    pub s: Word,
    /// `None` certifies that every split fails at these constants.
    pub found: Option<Decomposition>,
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "w={} s={}: ",
            self.w.display_or_unit(),
            self.s.display_or_unit()
        )?;
        match &self.found {
            Some(dec) => write!(f, "found {dec}"),
            None => f.write_str("none"),
        }
    }
}

/// One line per (w, s) with s ∈ f(w).
pub fn pumping_report(
    f: &FunctionHandle,
    params: PumpingParams,
    w_list: &[Word],
    opts: &PumpOptions,
    mode: Mode,
) -> Result<Vec<ReportLine>> {
    let mut lines = Vec::new();
    for w in w_list {
        let outputs = f.eval(w)?;
        if outputs.is_empty() {
            return Err(Error::Precondition(format!(
                "{} is undefined at `{}`",
                f.name(),
                w.display_or_unit()
            )));
        }
        for s in outputs {
            let found = search_decomposition(f, w, &s, params, opts, mode)?;
            lines.push(ReportLine {
                w: w.clone(),
                s,
                found,
            });
        }
    }
    Ok(lines)
}
