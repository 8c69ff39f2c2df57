//! Finite words over the alphabet `{1, ..., n}`.
//!
//! A [`Word`] always carries its ambient degree `n`, so words over different
//! alphabets never compare or combine silently.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::{PartialAlphabetOrder, TotalOrder};

/// A letter of `Σ_n`, always in `1..=n`.
pub type Letter = u8;

/// Largest supported degree. Letter sets are stored as 64-bit masks.
pub const MAX_DEGREE: u8 = 64;

/// A finite (possibly empty) word over `{1, ..., degree}`.
///
/// Ordering on `Word` is the lexicographic order induced by the natural
/// alphabet order `1 < 2 < ... < n`, with a proper prefix smaller than its
/// extensions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    degree: u8,
}

pub(crate) fn check_degree(degree: usize) -> Result<u8> {
    if degree == 0 || degree > MAX_DEGREE as usize {
        return Err(Error::InvalidDegree {
            degree,
            max: MAX_DEGREE,
        });
    }
    Ok(degree as u8)
}

impl Word {
    pub fn new(letters: Vec<Letter>, degree: u8) -> Result<Self> {
        check_degree(degree as usize)?;
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a > degree) {
            return Err(Error::letter(bad, degree));
        }
        Ok(Word { letters, degree })
    }

    /// The empty word `ε` over `Σ_degree`.
    pub fn empty(degree: u8) -> Result<Self> {
        Word::new(Vec::new(), degree)
    }

    /// Builds a word without range checks. Callers guarantee `1 <= a <= degree`.
    pub(crate) fn from_raw(letters: Vec<Letter>, degree: u8) -> Self {
        debug_assert!(letters.iter().all(|&a| a >= 1 && a <= degree));
        Word { letters, degree }
    }

    /// Parses the shared text format: a digit string (`"212313"`), a
    /// comma-separated list (`"1,2,10,3"`), or `-` for the empty word.
    ///
    /// Without an explicit degree the degree is the largest letter present.
    pub fn parse(text: &str, degree: Option<u8>) -> Result<Self> {
        let text = text.trim();
        let letters = parse_letters(text)?;
        let degree = match degree {
            Some(d) => d,
            None => match letters.iter().max() {
                Some(&m) => m,
                None => {
                    return Err(Error::Parse {
                        column: 1,
                        message: "the degree of the empty word must be given explicitly".into(),
                    })
                }
            },
        };
        Word::new(letters, degree)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// `alp(w)` as a bit mask, bit `a - 1` set for every letter `a` present.
    pub(crate) fn mask(&self) -> u64 {
        letter_mask(&self.letters)
    }

    /// `alp(w)`: the distinct letters of the word, in increasing order.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mask = self.mask();
        (1..=self.degree)
            .filter(|&a| mask & bit(a) != 0)
            .collect()
    }

    /// `|alp(w)|`.
    pub fn alphabet_size(&self) -> usize {
        self.mask().count_ones() as usize
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn is_factor_of(&self, other: &Word) -> bool {
        contains(&other.letters, &self.letters)
    }

    /// The conjugate `a_{i+1} ... a_n a_1 ... a_i` (zero-based shift).
    pub fn rotation(&self, shift: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(shift % self.letters.len());
        }
        Word::from_raw(letters, self.degree)
    }

    /// All `|w|` conjugates, starting with `w` itself.
    pub fn conjugates(&self) -> Result<Vec<Word>> {
        if self.is_empty() {
            return Err(Error::EmptyWord("conjugation"));
        }
        Ok((0..self.len()).map(|i| self.rotation(i)).collect())
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_raw(letters, self.degree)
    }

    /// The word obtained by renaming every letter `a` to `image[a - 1]`.
    pub fn renamed(&self, image: &[Letter]) -> Word {
        let letters = self.letters.iter().map(|&a| image[a as usize - 1]).collect();
        Word::from_raw(letters, self.degree)
    }

    /// Appends a letter, checking it against the degree.
    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter == 0 || letter > self.degree {
            return Err(Error::letter(letter, self.degree));
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word::from_raw(self.letters[..len].to_vec(), self.degree)
    }

    /// The factor of the cyclic word starting at `start` with length `len`
    /// (`len` may not exceed `|w|`).
    pub fn cyclic_factor(&self, start: usize, len: usize) -> Word {
        let n = self.len();
        let letters = (0..len).map(|k| self.letters[(start + k) % n]).collect();
        Word::from_raw(letters, self.degree)
    }

    /// Counts the occurrences of `pattern`, overlaps included.
    ///
    /// In linear mode this is `|w|_u`. In cyclic mode it is `|w|^c_u`, the
    /// number of start positions `1..=|w|` at which `u` occurs in `ww`.
    pub fn count_occurrences(&self, pattern: &Word, cyclic: bool) -> Result<usize> {
        self.same_degree(pattern)?;
        if pattern.is_empty() {
            return Err(Error::EmptyWord("occurrence counting"));
        }
        if cyclic {
            if pattern.len() > self.len() {
                return Err(Error::PatternTooLong {
                    pattern: pattern.len(),
                    word: self.len(),
                });
            }
            Ok(cyclic_count(&self.letters, &pattern.letters))
        } else {
            Ok(self
                .letters
                .windows(pattern.len())
                .filter(|w| *w == pattern.letters.as_slice())
                .count())
        }
    }

    /// Whether `u` is a cyclic factor, i.e. a factor of some conjugate.
    pub fn has_cyclic_factor(&self, pattern: &Word) -> bool {
        pattern.degree == self.degree
            && pattern.len() <= self.len()
            && (pattern.is_empty() || cyclic_count(&self.letters, &pattern.letters) > 0)
    }

    /// `⊲_u`: the letters of `u` ranked by their first occurrence.
    pub fn defined_order(&self) -> PartialAlphabetOrder {
        PartialAlphabetOrder::from_raw(first_occurrences(&self.letters), self.degree)
    }

    /// Lexicographic comparison under `order`.
    pub fn compare_lex(&self, other: &Word, order: &TotalOrder) -> Result<Ordering> {
        self.same_degree(other)?;
        if order.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: order.degree(),
                found: self.degree,
            });
        }
        Ok(order.compare(&self.letters, &other.letters))
    }

    pub fn predicates(&self) -> Result<WordPredicates> {
        if self.is_empty() {
            return Err(Error::EmptyWord("word predicates"));
        }
        Ok(WordPredicates {
            primitive: is_primitive(&self.letters),
            unbordered: is_unbordered(&self.letters),
            cyclically_square_free: is_cyclically_square_free(&self.letters),
        })
    }

    pub(crate) fn same_degree(&self, other: &Word) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }
}

/// Basic structural predicates of a non-empty word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WordPredicates {
    /// Not a proper power `u^k`, `k >= 2`.
    pub primitive: bool,
    /// No non-empty proper prefix is also a suffix.
    pub unbordered: bool,
    /// No square `uu` occurs as a cyclic factor.
    pub cyclically_square_free: bool,
}

pub(crate) fn bit(a: Letter) -> u64 {
    1u64 << (a - 1)
}

pub(crate) fn letter_mask(letters: &[Letter]) -> u64 {
    letters.iter().fold(0, |m, &a| m | bit(a))
}

pub(crate) fn first_occurrences(letters: &[Letter]) -> Vec<Letter> {
    let mut seen = 0u64;
    let mut chain = Vec::new();
    for &a in letters {
        if seen & bit(a) == 0 {
            seen |= bit(a);
            chain.push(a);
        }
    }
    chain
}

pub(crate) fn contains(haystack: &[Letter], needle: &[Letter]) -> bool {
    needle.is_empty() || haystack.windows(needle.len()).any(|w| w == needle)
}

/// Occurrences of `pattern` in `ww` starting at positions `0..|w|`.
pub(crate) fn cyclic_count(word: &[Letter], pattern: &[Letter]) -> usize {
    let n = word.len();
    (0..n)
        .filter(|&i| {
            pattern
                .iter()
                .enumerate()
                .all(|(k, &a)| word[(i + k) % n] == a)
        })
        .count()
}

pub(crate) fn is_primitive(letters: &[Letter]) -> bool {
    let n = letters.len();
    (1..n)
        .filter(|p| n % p == 0)
        .all(|p| (0..n).any(|i| letters[i] != letters[(i + p) % n]))
}

fn is_unbordered(letters: &[Letter]) -> bool {
    let n = letters.len();
    (1..n).all(|k| letters[..k] != letters[n - k..])
}

fn is_cyclically_square_free(letters: &[Letter]) -> bool {
    let n = letters.len();
    for half in 1..=n / 2 {
        for i in 0..n {
            if (0..half).all(|k| letters[(i + k) % n] == letters[(i + half + k) % n]) {
                return false;
            }
        }
    }
    true
}

fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    if text == "-" || text.is_empty() {
        return Ok(Vec::new());
    }
    let parse_err = |column: usize, message: String| Error::Parse { column, message };
    if text.contains(',') {
        let mut letters = Vec::new();
        let mut column = 1;
        for field in text.split(',') {
            let trimmed = field.trim();
            let value: u32 = trimmed
                .parse()
                .map_err(|_| parse_err(column, format!("expected a letter, found {trimmed:?}")))?;
            if value == 0 || value > MAX_DEGREE as u32 {
                return Err(parse_err(column, format!("letter {value} is out of range")));
            }
            letters.push(value as Letter);
            column += field.len() + 1;
        }
        Ok(letters)
    } else {
        text.chars()
            .enumerate()
            .map(|(i, c)| match c.to_digit(10) {
                Some(d) if d >= 1 => Ok(d as Letter),
                _ => Err(parse_err(i + 1, format!("expected a digit 1-9, found {c:?}"))),
            })
            .collect()
    }
}

pub(crate) fn format_letters(letters: &[Letter], degree: u8) -> String {
    if letters.is_empty() {
        return "-".to_string();
    }
    if degree <= 9 {
        letters.iter().map(|a| char::from(b'0' + a)).collect()
    } else {
        letters
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Word {
    /// Digit string for degree `<= 9`, comma-separated otherwise; `-` for `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters, self.degree))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s, None)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
