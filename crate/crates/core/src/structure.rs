//! Structure of a verified universal Lyndon word: shortest unrepeated
//! prefixes (the set `MT(w)`), minimal order-defining factors, stretches and
//! the Jackson-type test.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::order::PartialAlphabetOrder;
use crate::verify::{is_ulw, VerifyMode};
use crate::word::{bit, cyclic_count, first_occurrences, letter_mask, Letter, Word};

/// A word that passed the counting test.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ulw {
    word: Word,
}

impl Ulw {
    pub fn new(word: Word) -> Result<Self> {
        let report = is_ulw(&word, VerifyMode::Counting)?;
        match report.witness {
            None => Ok(Ulw { word }),
            Some(witness) => Err(Error::NotUlw {
                word: word.to_string(),
                reason: witness.to_string(),
            }),
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn degree(&self) -> u8 {
        self.word.degree()
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    /// The shortest prefix of the conjugate `w_i` (zero-based) with a single
    /// cyclic occurrence in `w`.
    pub fn shortest_unrepeated_prefix(&self, conjugate: usize) -> Result<Word> {
        let len = self.word.len();
        if conjugate >= len {
            return Err(Error::InvalidCycle(format!(
                "conjugate index {conjugate} is out of range for a word of length {len}"
            )));
        }
        let letters = self.word.letters();
        let rotated: Vec<Letter> = (0..len).map(|k| letters[(conjugate + k) % len]).collect();
        // ε occurs at every position.
        let prefix_len = (0..=len)
            .find(|&l| if l == 0 { len == 1 } else { cyclic_count(letters, &rotated[..l]) == 1 })
            .expect("a primitive word occurs once among its rotations");
        Ok(Word::from_raw(rotated[..prefix_len].to_vec(), self.degree()))
    }

    /// `MT(w)`, listed by conjugate: entry `i` is the shortest unrepeated
    /// prefix of `w_i`.
    pub fn mt(&self) -> Vec<Word> {
        (0..self.word.len())
            .map(|i| {
                self.shortest_unrepeated_prefix(i)
                    .expect("index is in range")
            })
            .collect()
    }

    /// The unique minimal order-defining cyclic factor for `order`.
    ///
    /// Found as the shortest prefix with alphabet `I` of a conjugate whose
    /// order extends `order`; the brute-force search over all cyclic factors
    /// is used if that candidate does not define `order`.
    pub fn minimal_order_defining_word(&self, order: &PartialAlphabetOrder) -> Result<Word> {
        if order.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: order.degree(),
            });
        }
        if let Some(u) = self.minimal_order_defining_prefix(order) {
            if &u.defined_order() == order {
                return Ok(u);
            }
        }
        minimal_order_defining_factor(&self.word, order).ok_or_else(|| Error::NotUlw {
            word: self.word.to_string(),
            reason: format!("no cyclic factor defines {order}"),
        })
    }

    fn minimal_order_defining_prefix(&self, order: &PartialAlphabetOrder) -> Option<Word> {
        let len = self.word.len();
        let letters = self.word.letters();
        let target = letter_mask(order.chain());
        let start = (0..len).find(|&i| {
            let rotated: Vec<Letter> = (0..len).map(|k| letters[(i + k) % len]).collect();
            first_occurrences(&rotated).starts_with(order.chain())
        })?;
        let mut mask = 0;
        let mut prefix_len = 0;
        while mask != target {
            mask |= bit(letters[(start + prefix_len) % len]);
            prefix_len += 1;
            if prefix_len > len {
                return None;
            }
        }
        Some(self.word.cyclic_factor(start, prefix_len))
    }

    /// Every stretch `v` of `w` containing `u` with `alp(v) = alp(u)`.
    pub fn stretch_extensions(&self, u: &Word) -> Result<BTreeSet<Word>> {
        stretch_extensions(&self.word, u)
    }

    /// Whether each permutation of `n - 1` distinct letters occurs exactly
    /// once as a cyclic factor.
    pub fn is_jackson_type(&self) -> bool {
        let n = self.degree() as usize;
        let len = self.word.len();
        let letters = self.word.letters();
        let mut seen = HashSet::with_capacity(len);
        (0..len).all(|i| {
            let window: Vec<Letter> = (0..n - 1).map(|k| letters[(i + k) % len]).collect();
            letter_mask(&window).count_ones() as usize == n - 1 && seen.insert(window)
        })
    }
}

/// Shortest cyclic factor `u` with `⊲_u = order`, found by scanning factors
/// by increasing length.
pub(crate) fn minimal_order_defining_factor(w: &Word, order: &PartialAlphabetOrder) -> Option<Word> {
    let len = w.len();
    (0..=len).find_map(|l| {
        (0..len)
            .map(|i| w.cyclic_factor(i, l))
            .find(|u| &u.defined_order() == order)
    })
}

/// Maximal runs over `alp(u)` around each cyclic occurrence of `u`.
///
/// Flanking letters are read on the cyclic word, so for `w = 12` the factor
/// `1` is flanked by the single `2` on both sides.
pub fn stretch_extensions(w: &Word, u: &Word) -> Result<BTreeSet<Word>> {
    if u.is_empty() || !w.has_cyclic_factor(u) {
        return Err(Error::NotCyclicFactor {
            factor: u.to_string(),
            word: w.to_string(),
        });
    }
    let len = w.len();
    let letters = w.letters();
    let mask = u.mask();
    let mut out = BTreeSet::new();
    if letter_mask(letters) & !mask == 0 {
        return Ok(out);
    }
    let inside = |i: usize| mask & bit(letters[i % len]) != 0;
    for start in 0..len {
        let occurs = u
            .letters()
            .iter()
            .enumerate()
            .all(|(k, &a)| letters[(start + k) % len] == a);
        if !occurs {
            continue;
        }
        let mut left = start + len;
        while inside(left - 1) {
            left -= 1;
        }
        let mut right = start + len + u.len();
        while inside(right) {
            right += 1;
        }
        out.insert(w.cyclic_factor(left % len, right - left));
    }
    Ok(out)
}

/// Checks that whenever `asa` is a cyclic factor with `a ∉ alp(s)`, so is
/// `bsb` for every `b ∉ alp(s)`.
pub fn check_stretch_closure(w: &Word) -> bool {
    let len = w.len();
    let letters = w.letters();
    for start in 0..len {
        let a = letters[start];
        let Some(gap) = (1..len).find(|&d| letters[(start + d) % len] == a) else {
            continue;
        };
        let s: Vec<Letter> = (1..gap).map(|k| letters[(start + k) % len]).collect();
        let s_mask = letter_mask(&s);
        for b in 1..=w.degree() {
            if s_mask & bit(b) != 0 || b == a {
                continue;
            }
            let mut bsb = Vec::with_capacity(gap + 1);
            bsb.push(b);
            bsb.extend_from_slice(&s);
            bsb.push(b);
            if cyclic_count(letters, &bsb) == 0 {
                return false;
            }
        }
    }
    true
}

pub fn shortest_unrepeated_prefix(w: &Word, conjugate: usize) -> Result<Word> {
    Ulw::new(w.clone())?.shortest_unrepeated_prefix(conjugate)
}

pub fn mt(w: &Word) -> Result<Vec<Word>> {
    Ok(Ulw::new(w.clone())?.mt())
}

pub fn minimal_order_defining_word(w: &Word, order: &PartialAlphabetOrder) -> Result<Word> {
    Ulw::new(w.clone())?.minimal_order_defining_word(order)
}

pub fn is_jackson_type(w: &Word) -> Result<bool> {
    Ok(Ulw::new(w.clone())?.is_jackson_type())
}
