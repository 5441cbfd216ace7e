use super::{Symbol, Word};
use crate::error::{Error, Result};

/// Two words stacked symbol by symbol, the shorter padded on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedString {
    pub upper: Word,
    pub lower: Word,
    pub rendered: Word,
}

impl TrackedString {
    /// Reads the components back out of a rendered track word, dropping
    /// padding. Fails if a symbol is not a track symbol.
    pub fn decode(rendered: &[Symbol]) -> Result<TrackedString> {
        let mut upper = Word::new();
        let mut lower = Word::new();
        for s in rendered {
            let (u, l) = s
                .track_parts()
                .ok_or_else(|| Error::InvalidToken(format!("`{s}` is not a track symbol")))?;
            upper.extend_from(u.as_slice());
            lower.extend_from(l.as_slice());
        }
        Ok(TrackedString {
            upper,
            lower,
            rendered: rendered.into(),
        })
    }
}

/// Renders ⟨x,y⟩. Both words must consist of plain (non-track) symbols.
pub fn track_pair(x: &[Symbol], y: &[Symbol]) -> Result<TrackedString> {
    let n = x.len().max(y.len());
    let rendered = (0..n)
        .map(|i| {
            let (u, l) = (x.get(i).copied(), y.get(i).copied());
            Symbol::track(u, l)
                .ok_or_else(|| Error::InvalidToken("track components must be plain symbols".into()))
        })
        .collect::<Result<Word>>()?;
    Ok(TrackedString {
        upper: x.into(),
        lower: y.into(),
        rendered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rendered(x: &str, y: &str) -> String {
        track_pair(&Word::from_chars(x), &Word::from_chars(y))
            .unwrap()
            .rendered
            .to_string()
    }

    #[test]
    fn padding_goes_on_the_shorter_side() {
        assert_eq!(rendered("01", "01"), "⟨0,0⟩⟨1,1⟩");
        assert_eq!(rendered("0", "011"), "⟨0,0⟩⟨#,1⟩⟨#,1⟩");
        assert_eq!(rendered("011", "0"), "⟨0,0⟩⟨1,#⟩⟨1,#⟩");
        assert_eq!(rendered("", ""), "");
    }

    #[test]
    fn literal_hash_is_escaped() {
        assert_eq!(rendered("0#", "1"), "⟨0,1⟩⟨\\#,#⟩");
        let t = track_pair(&Word::from_chars("#"), &Word::new()).unwrap();
        let back = TrackedString::decode(&t.rendered).unwrap();
        assert_eq!(back.upper, Word::from_chars("#"));
        assert!(back.lower.is_empty());
    }

    proptest! {
        #[test]
        fn components_round_trip(x in "[01#♮]{0,7}", y in "[01#♮]{0,7}") {
            let (x, y) = (Word::from_chars(&x), Word::from_chars(&y));
            let t = track_pair(&x, &y).unwrap();
            prop_assert_eq!(t.rendered.len(), x.len().max(y.len()));
            let back = TrackedString::decode(&t.rendered).unwrap();
            prop_assert_eq!(back.upper, x);
            prop_assert_eq!(back.lower, y);
        }
    }
}
