//! String-level vocabulary: symbols, alphabets, dictionary order, track
//! notation and ♮-extensions.

mod natural;
mod symbol;
mod track;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

pub use natural::{natural_extensions, project_naturals};
pub use symbol::{Symbol, Word, LAMBDA, LEFT_END, NATURAL, PAD, RIGHT_END};
pub use track::{track_pair, TrackedString};

use crate::error::{Error, Result};

/// An ordered finite set of symbols. The listing order is the symbol order
/// used by [`dict_compare`].
#[derive(Clone)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    rank: HashMap<Symbol, usize>,
}

impl Alphabet {
    /// Builds an alphabet that may not contain any reserved symbol
    /// (`¢`, `$`, `#`, `♮`).
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Result<Alphabet> {
        Alphabet::build(symbols, &[LEFT_END, RIGHT_END, PAD, NATURAL])
    }

    /// Like [`Alphabet::new`] but admits `#` and `♮` as ordinary members,
    /// for alphabets that declare them explicitly. Endmarkers stay forbidden.
    pub fn declared(symbols: impl IntoIterator<Item = Symbol>) -> Result<Alphabet> {
        Alphabet::build(symbols, &[LEFT_END, RIGHT_END])
    }

    fn build(symbols: impl IntoIterator<Item = Symbol>, reserved: &[&str]) -> Result<Alphabet> {
        let mut alphabet = Alphabet {
            symbols: Vec::new(),
            rank: HashMap::new(),
        };
        for s in symbols {
            if reserved.iter().any(|r| s.is(r)) {
                return Err(Error::InvalidAlphabet(format!("reserved symbol `{s}`")));
            }
            if alphabet.rank.insert(s, alphabet.symbols.len()).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
            }
            alphabet.symbols.push(s);
        }
        Ok(alphabet)
    }

    /// Single-character symbols, in order. Admits `#` and `♮`.
    pub fn from_chars(chars: &str) -> Result<Alphabet> {
        Alphabet::declared(chars.chars().map(Symbol::from))
    }

    pub fn binary() -> Alphabet {
        Alphabet::from_chars("01").expect("binary alphabet")
    }

    /// All track symbols `⟨σ,τ⟩` for σ in `upper` plus padding and τ in
    /// `lower` plus padding, excluding the all-padding pair.
    pub fn track(upper: &Alphabet, lower: &Alphabet) -> Alphabet {
        let ups = upper.iter().map(Some).chain([None]);
        let symbols: Vec<Symbol> = ups
            .flat_map(|u| lower.iter().map(Some).chain([None]).map(move |l| (u, l)))
            .filter_map(|(u, l)| Symbol::track(u, l))
            .collect();
        Alphabet::declared(symbols).expect("track symbols are distinct")
    }

    /// This alphabet followed by the members of `extra` it lacks.
    pub fn extended(&self, extra: &[Symbol]) -> Alphabet {
        let mut symbols = self.symbols.clone();
        symbols.extend(extra.iter().filter(|s| !self.contains(**s)));
        Alphabet::declared(symbols).expect("extension keeps symbols distinct")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().copied()
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.rank.contains_key(&symbol)
    }

    pub fn rank(&self, symbol: Symbol) -> Option<usize> {
        self.rank.get(&symbol).copied()
    }

    pub fn check_word(&self, word: &[Symbol]) -> Result<()> {
        match word.iter().find(|s| !self.contains(**s)) {
            Some(s) => Err(Error::UnknownSymbol {
                symbol: s.to_string(),
                alphabet: self.to_string(),
            }),
            None => Ok(()),
        }
    }

    /// Splits `text` into members of this alphabet by longest match.
    /// `""`, `()` and `λ` denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() || text == "()" || text == LAMBDA {
            return Ok(Word::new());
        }
        let mut by_len: Vec<Symbol> = self.symbols.clone();
        by_len.sort_by_key(|s| std::cmp::Reverse(s.as_str().len()));
        let mut rest = text;
        let mut word = Word::new();
        while !rest.is_empty() {
            let next = by_len.iter().find(|s| rest.starts_with(s.as_str()));
            match next {
                Some(s) => {
                    word.push(*s);
                    rest = &rest[s.as_str().len()..];
                }
                None => {
                    return Err(Error::UnparsableWord {
                        text: text.to_string(),
                        alphabet: self.to_string(),
                    })
                }
            }
        }
        Ok(word)
    }

    /// Every word of length exactly `len`, in dictionary order.
    pub fn words_of_len(&self, len: usize) -> Vec<Word> {
        let mut words = vec![Word::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w| {
                    self.iter().map(move |s| {
                        let mut next = w.clone();
                        next.push(s);
                        next
                    })
                })
                .collect();
        }
        words
    }

    /// Every word of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|n| self.words_of_len(n)).collect()
    }

    /// |Σ^{≤n}|, saturating.
    pub fn count_up_to(&self, max_len: usize) -> usize {
        let k = self.len();
        let mut total: usize = 0;
        let mut layer: usize = 1;
        for _ in 0..=max_len {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(k);
        }
        total
    }

    /// Dictionary comparison of two words over this alphabet.
    pub fn compare(&self, x: &[Symbol], y: &[Symbol]) -> Result<Ordering> {
        self.check_word(x)?;
        self.check_word(y)?;
        Ok(self.compare_unchecked(x, y))
    }

    pub(crate) fn compare_unchecked(&self, x: &[Symbol], y: &[Symbol]) -> Ordering {
        for (a, b) in x.iter().zip(y) {
            if a != b {
                return self.rank[a].cmp(&self.rank[b]);
            }
        }
        x.len().cmp(&y.len())
    }

    pub fn same_symbols(&self, other: &Alphabet) -> bool {
        self.len() == other.len() && self.iter().all(|s| other.contains(s))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(s.as_str())?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{self}")
    }
}

/// Dictionary order: a proper prefix is smaller, otherwise the first
/// differing symbol decides by its position in the alphabet listing.
pub fn dict_compare(x: &[Symbol], y: &[Symbol], alphabet: &Alphabet) -> Result<Ordering> {
    alphabet.compare(x, y)
}
