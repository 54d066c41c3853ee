//! Words and cycles over the alphabet `{0, .., k-1}`.
//!
//! Letters are stored as `u16`, so alphabets of up to 2^16 letters are
//! representable. Word equality is positional; two rotations of the same
//! word are different words.

use std::fmt;

use crate::error::{Error, Result};

pub type Letter = u16;

/// Largest supported alphabet size.
pub const MAX_ALPHABET: u32 = 1 << 16;

/// Text rendering of a letter sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One decimal digit per letter, no separators. Only valid for k <= 10.
    Digits,
    /// Decimal letters joined by commas.
    Csv,
}

impl Format {
    /// Digits for small alphabets, comma-separated otherwise.
    pub fn default_for(alphabet_size: u32) -> Format {
        if alphabet_size <= 10 {
            Format::Digits
        } else {
            Format::Csv
        }
    }
}

pub(crate) fn check_alphabet(alphabet_size: u32) -> Result<()> {
    if !(2..=MAX_ALPHABET).contains(&alphabet_size) {
        return Err(Error::InvalidParams(format!("requires 2 <= k <= {MAX_ALPHABET}, got k = {alphabet_size}")));
    }
    Ok(())
}

fn check_letters(letters: &[Letter], alphabet_size: u32) -> Result<()> {
    match letters.iter().find(|&&l| u32::from(l) >= alphabet_size) {
        Some(&l) => Err(Error::LetterOutOfRange { letter: l.into(), alphabet_size }),
        None => Ok(()),
    }
}

/// A nonempty finite word over `{0, .., k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet_size: u32,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet_size: u32) -> Result<Word> {
        check_alphabet(alphabet_size)?;
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        check_letters(&letters, alphabet_size)?;
        Ok(Word { letters, alphabet_size })
    }

    /// Builds a word from letters already known to be valid.
    pub(crate) fn from_trusted(letters: Vec<Letter>, alphabet_size: u32) -> Word {
        debug_assert!(!letters.is_empty());
        debug_assert!(letters.iter().all(|&l| u32::from(l) < alphabet_size));
        Word { letters, alphabet_size }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    /// Sum of the letters.
    pub fn weight(&self) -> u64 {
        self.letters.iter().map(|&l| u64::from(l)).sum()
    }

    /// Drops the first letter and appends it at the end.
    pub fn rotate(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.rotate_left(1);
        Word { letters, alphabet_size: self.alphabet_size }
    }

    /// Reads the word as a multiset over `{1, .., n}`: position `i` (1-based)
    /// appears with multiplicity equal to its letter. Returned sorted.
    pub fn to_multiset(&self) -> Vec<usize> {
        self.letters.iter().enumerate().flat_map(|(i, &l)| std::iter::repeat_n(i + 1, l.into())).collect()
    }

    pub fn parse(input: &str, alphabet_size: u32) -> Result<Word> {
        let letters = parse_letters(input, alphabet_size)?;
        Word::new(letters, alphabet_size)
    }

    pub fn render(&self, format: Format) -> String {
        render_letters(&self.letters, format)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.letters, Format::Csv))
    }
}

/// A cyclic letter sequence whose length-`n` windows are the encoded objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    letters: Vec<Letter>,
    alphabet_size: u32,
    window_length: usize,
}

impl Cycle {
    pub fn new(letters: Vec<Letter>, alphabet_size: u32, window_length: usize) -> Result<Cycle> {
        check_alphabet(alphabet_size)?;
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if window_length == 0 {
            return Err(Error::InvalidParams("window length must be at least 1".into()));
        }
        check_letters(&letters, alphabet_size)?;
        Ok(Cycle { letters, alphabet_size, window_length })
    }

    pub fn parse(input: &str, alphabet_size: u32, window_length: usize) -> Result<Cycle> {
        let letters = parse_letters(input, alphabet_size)?;
        Cycle::new(letters, alphabet_size, window_length)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn window_length(&self) -> usize {
        self.window_length
    }

    /// Letter at a position; indexing is modular.
    pub fn letter_at(&self, index: usize) -> Letter {
        self.letters[index % self.letters.len()]
    }

    /// The length-`n` word read cyclically from `start`.
    pub fn window(&self, start: usize) -> Word {
        let letters = (0..self.window_length).map(|i| self.letter_at(start + i)).collect();
        Word::from_trusted(letters, self.alphabet_size)
    }

    /// All `len()` windows, in order of starting position.
    pub fn windows(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.letters.len()).map(move |i| self.window(i))
    }

    pub fn render(&self, format: Format) -> String {
        render_letters(&self.letters, format)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.letters, Format::default_for(self.alphabet_size)))
    }
}

pub fn render_letters(letters: &[Letter], format: Format) -> String {
    match format {
        Format::Digits if letters.iter().all(|&l| l < 10) => {
            letters.iter().map(|&l| char::from(b'0' + l as u8)).collect()
        }
        _ => {
            let parts: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
            parts.join(",")
        }
    }
}

/// Parses `"0,0,2,5"` or, for alphabets of at most ten letters, `"0025"`.
/// For larger alphabets a string without commas is a single letter.
/// Surrounding braces or parentheses and whitespace are ignored.
pub fn parse_letters(input: &str, alphabet_size: u32) -> Result<Vec<Letter>> {
    let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
    let body = input.trim().trim_start_matches(['{', '(']).trim_end_matches(['}', ')']).trim();
    if body.is_empty() {
        return Err(Error::EmptyWord);
    }
    let raw: Vec<u32> = if body.contains(',') || alphabet_size > 10 {
        body.split(',')
            .map(|part| part.trim().parse::<u32>().map_err(|_| err("expected a decimal letter")))
            .collect::<Result<_>>()?
    } else {
        body.chars().map(|c| c.to_digit(10).ok_or_else(|| err("expected a decimal digit"))).collect::<Result<_>>()?
    };
    raw.into_iter()
        .map(|l| {
            if l >= alphabet_size {
                Err(Error::LetterOutOfRange { letter: l, alphabet_size })
            } else {
                Ok(l as Letter)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[Letter], k: u32) -> Word {
        Word::new(letters.to_vec(), k).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(w(&[0, 0, 0, 2, 2, 5, 5, 5, 3, 3], 6).weight(), 25);
        assert_eq!(w(&[0, 0, 0], 2).weight(), 0);
        assert_eq!(w(&[1, 1, 1, 0], 2).weight(), 3);
    }

    #[test]
    fn window_wraps() {
        let c = Cycle::parse("11101000", 2, 3).unwrap();
        assert_eq!(c.window(6).letters(), &[0, 0, 1]);
        assert_eq!(c.window(0).letters(), &[1, 1, 1]);
        let single = Cycle::new(vec![4], 5, 1).unwrap();
        assert_eq!(single.window(0).letters(), &[4]);
    }

    #[test]
    fn multiset_readout() {
        assert_eq!(w(&[1, 0, 1], 2).to_multiset(), vec![1, 3]);
        assert!(w(&[0, 0, 0, 0], 2).to_multiset().is_empty());
        assert_eq!(w(&[2, 0, 1], 3).to_multiset(), vec![1, 1, 3]);
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(w(&[0, 1, 1], 2).rotate().letters(), &[1, 1, 0]);
        assert_eq!(w(&[3, 3, 3, 0, 0, 2, 2, 2, 2, 5], 6).rotate().letters(), &[3, 3, 0, 0, 2, 2, 2, 2, 5, 3]);
        assert_eq!(w(&[5], 6).rotate().letters(), &[5]);
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(Word::new(vec![], 2), Err(Error::EmptyWord));
        assert!(matches!(Word::new(vec![2], 2), Err(Error::LetterOutOfRange { .. })));
        assert!(Word::new(vec![0], 1).is_err());
        assert!(matches!(Word::parse("012", 11), Err(Error::LetterOutOfRange { .. })));
        assert_eq!(Word::parse("10", 11).unwrap().letters(), &[10]);
        assert!(Word::parse("0,x", 3).is_err());
    }

    #[test]
    fn text_forms() {
        let word = Word::parse("{0,0,0,2,2,5,5,5,3,3}", 6).unwrap();
        assert_eq!(word.render(Format::Digits), "0002255533");
        assert_eq!(word.to_string(), "0,0,0,2,2,5,5,5,3,3");
        assert_eq!(Word::parse("0002255533", 6).unwrap(), word);
        let big = Word::new(vec![12, 0], 13).unwrap();
        assert_eq!(big.render(Format::Digits), "12,0");
    }
}
