//! Interned symbols and words.
//!
//! A [`Symbol`] is either a plain token (`0`, `Z`, `♮`, `q_acc`) or a track
//! symbol pairing two optional plain symbols, where a missing component is
//! the `#` padding. Symbols are interned once and compared by address, so
//! they are `Copy` and cheap to hash inside configuration sets.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Left endmarker.
pub const LEFT_END: &str = "¢";
/// Right endmarker.
pub const RIGHT_END: &str = "$";
/// Track padding.
pub const PAD: &str = "#";
/// Extension marker.
pub const NATURAL: &str = "♮";
/// Spelling of the empty word in machine files and on the command line.
pub const LAMBDA: &str = "λ";

#[derive(PartialEq, Eq, Hash)]
enum Key {
    Plain(Box<str>),
    Track(Option<Symbol>, Option<Symbol>),
}

struct Data {
    key: Key,
    text: Box<str>,
}

#[derive(Clone, Copy)]
pub struct Symbol(&'static Data);

fn table() -> &'static Mutex<HashMap<Key, &'static Data>> {
    static TABLE: OnceLock<Mutex<HashMap<Key, &'static Data>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

fn intern(key: Key, text: impl FnOnce() -> String) -> Symbol {
    let mut table = table().lock().expect("symbol table poisoned");
    if let Some(data) = table.get(&key) {
        return Symbol(data);
    }
    let text = text().into_boxed_str();
    let stored = match &key {
        Key::Plain(s) => Key::Plain(s.clone()),
        Key::Track(u, l) => Key::Track(*u, *l),
    };
    let data: &'static Data = Box::leak(Box::new(Data { key: stored, text }));
    table.insert(key, data);
    Symbol(data)
}

fn valid_plain(text: &str) -> bool {
    !text.is_empty()
        && text != LAMBDA
        && text != "()"
        && !text
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '⟨' | '⟩' | ',' | '\\'))
}

impl Symbol {
    /// Interns a plain symbol.
    ///
    /// Panics on an invalid token; use [`Symbol::try_new`] for untrusted text.
    pub fn new(text: &str) -> Symbol {
        Symbol::try_new(text).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(text: &str) -> Result<Symbol> {
        if !valid_plain(text) {
            return Err(Error::InvalidToken(text.to_string()));
        }
        Ok(intern(Key::Plain(text.into()), || text.to_string()))
    }

    /// A track symbol `⟨upper,lower⟩`; `None` stands for the `#` padding.
    /// Returns `None` if both components are padding or a component is itself
    /// a track symbol.
    pub fn track(upper: Option<Symbol>, lower: Option<Symbol>) -> Option<Symbol> {
        if upper.is_none() && lower.is_none() {
            return None;
        }
        if upper.is_some_and(|s| s.is_track()) || lower.is_some_and(|s| s.is_track()) {
            return None;
        }
        Some(intern(Key::Track(upper, lower), || {
            format!("⟨{},{}⟩", component_text(upper), component_text(lower))
        }))
    }

    /// Parses a token as written by [`Symbol::as_str`], including track
    /// tokens such as `⟨0,#⟩` or `⟨\#,1⟩` (an escaped literal `#`).
    pub fn parse_token(token: &str) -> Result<Symbol> {
        let Some(inner) = token
            .strip_prefix('⟨')
            .and_then(|rest| rest.strip_suffix('⟩'))
        else {
            return Symbol::try_new(token);
        };
        let bad = || Error::InvalidToken(token.to_string());
        let (upper, lower) = inner.split_once(',').ok_or_else(bad)?;
        let component = |text: &str| -> Result<Option<Symbol>> {
            match text {
                PAD => Ok(None),
                "\\#" => Ok(Some(Symbol::new(PAD))),
                other => Symbol::try_new(other).map(Some).map_err(|_| bad()),
            }
        };
        Symbol::track(component(upper)?, component(lower)?).ok_or_else(bad)
    }

    pub fn as_str(&self) -> &'static str {
        &self.0.text
    }

    pub fn is_track(&self) -> bool {
        matches!(self.0.key, Key::Track(..))
    }

    /// Components of a track symbol; `None` components are padding.
    pub fn track_parts(&self) -> Option<(Option<Symbol>, Option<Symbol>)> {
        match self.0.key {
            Key::Track(u, l) => Some((u, l)),
            Key::Plain(_) => None,
        }
    }

    pub fn is(&self, text: &str) -> bool {
        matches!(&self.0.key, Key::Plain(s) if &**s == text)
    }
}

fn component_text(c: Option<Symbol>) -> &'static str {
    match c {
        None => PAD,
        Some(s) if s.is(PAD) => "\\#",
        Some(s) => s.as_str(),
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Symbol {}

impl Hash for Symbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        std::ptr::hash(self.0, state)
    }
}

// Storage order only; dictionary order lives on `Alphabet`.
impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self == other {
            std::cmp::Ordering::Equal
        } else {
            self.as_str().cmp(other.as_str())
        }
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}'", self.as_str())
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Symbol {
        Symbol::new(c.encode_utf8(&mut [0; 4]))
    }
}

/// A finite string of symbols. The empty word is λ.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub const fn new() -> Word {
        Word(Vec::new())
    }

    /// One symbol per character; convenient for single-character alphabets.
    pub fn from_chars(text: &str) -> Word {
        text.chars().map(Symbol::from).collect()
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol)
    }

    pub fn extend_from(&mut self, other: &[Symbol]) {
        self.0.extend_from_slice(other)
    }

    pub fn concat(parts: &[&[Symbol]]) -> Word {
        Word(parts.iter().flat_map(|p| p.iter().copied()).collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(part: &[Symbol], times: usize) -> Word {
        Word(part.repeat(times))
    }

    /// Rendering used by the CLI, where λ is the token `()`.
    pub fn display_or_unit(&self) -> String {
        if self.is_empty() {
            "()".to_string()
        } else {
            self.to_string()
        }
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Word {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Word {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| f.write_str(s.as_str()))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("λ")
        } else {
            write!(f, "\"{self}\"")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_by_identity() {
        assert_eq!(Symbol::new("0"), Symbol::from('0'));
        assert_ne!(Symbol::new("0"), Symbol::new("1"));
        assert!(Symbol::try_new("a b").is_err());
        assert!(Symbol::try_new("").is_err());
        assert!(Symbol::try_new("λ").is_err());
    }

    #[test]
    fn track_tokens_round_trip() {
        let hash = Symbol::new("#");
        let one = Symbol::new("1");
        for (u, l) in [
            (Some(hash), None),
            (None, Some(one)),
            (Some(one), Some(hash)),
        ] {
            let t = Symbol::track(u, l).unwrap();
            assert_eq!(Symbol::parse_token(t.as_str()).unwrap(), t);
            assert_eq!(t.track_parts(), Some((u, l)));
        }
        assert_eq!(Symbol::track(Some(hash), None).unwrap().as_str(), "⟨\\#,#⟩");
        assert!(Symbol::track(None, None).is_none());
    }

    #[test]
    fn lambda_debug() {
        assert_eq!(format!("{:?}", Word::new()), "λ");
        assert_eq!(Word::new().display_or_unit(), "()");
        assert_eq!(Word::from_chars("01").to_string(), "01");
    }
}
