//! Exhaustive enumeration of universal Lyndon words and their census.
//!
//! Words are built letter by letter as their own least rotation. A prefix is
//! abandoned as soon as a window of length at most `n + 1` occurs more often
//! than `(n - |alp(u)|)!`, the number of occurrences of `u` in any ULW.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonicalize, CyclicWord, MAX_ISO_DEGREE};
use crate::error::{Error, Result};
use crate::order::factorial;
use crate::structure::Ulw;
use crate::verify::{is_ulw, VerifyMode};
use crate::word::{check_degree, letter_mask, Letter, Word};

/// Largest degree accepted by [`enumerate_ulws`].
pub const MAX_ENUMERATION_DEGREE: u8 = 4;

/// All ULWs of one degree as canonical rotation classes, with class counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UlwCensus {
    pub degree: u8,
    /// Sorted, one least rotation per labeled ULW.
    pub canonical_words: Vec<CyclicWord>,
    pub labeled_count: usize,
    pub iso_class_count: usize,
    /// Isomorphism classes of Jackson type.
    pub jackson_count: usize,
    /// Isomorphism classes not of Jackson type.
    pub non_jackson_count: usize,
}

impl UlwCensus {
    /// Builds a census from arbitrary words of the given degree. Every word
    /// must be a ULW; rotations of one word are merged.
    pub fn from_words<I: IntoIterator<Item = Word>>(degree: u8, words: I) -> Result<Self> {
        check_degree(degree as usize)?;
        let mut canonical = Vec::new();
        for w in words {
            if w.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: w.degree(),
                });
            }
            let ulw = Ulw::new(w)?;
            canonical.push(CyclicWord::new(ulw.word()));
        }
        canonical.sort();
        canonical.dedup();
        UlwCensus::from_canonical(degree, canonical)
    }

    fn from_canonical(degree: u8, canonical_words: Vec<CyclicWord>) -> Result<Self> {
        let mut census = UlwCensus {
            degree,
            labeled_count: canonical_words.len(),
            canonical_words,
            iso_class_count: 0,
            jackson_count: 0,
            non_jackson_count: 0,
        };
        let classes = classify_ulws(&census)?;
        census.iso_class_count = classes.classes.len();
        census.jackson_count = classes.classes.iter().filter(|c| c.jackson).count();
        census.non_jackson_count = census.iso_class_count - census.jackson_count;
        Ok(census)
    }

    /// `labeled=.. iso=.. jackson=.. non_jackson=..`
    pub fn summary(&self) -> String {
        format!(
            "labeled={} iso={} jackson={} non_jackson={}",
            self.labeled_count, self.iso_class_count, self.jackson_count, self.non_jackson_count
        )
    }
}

/// One isomorphism class of a census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub id: usize,
    /// Least rotation over all renamings of the alphabet.
    pub representative: CyclicWord,
    pub jackson: bool,
    /// The labeled classes of the census in this isomorphism class, sorted.
    pub members: Vec<CyclicWord>,
}

impl IsoClass {
    pub fn orbit_size(&self) -> usize {
        self.members.len()
    }
}

/// One census word with its class: the JSON-lines record format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub word: CyclicWord,
    pub iso_class_id: usize,
    pub jackson: bool,
}

/// A census split into isomorphism classes, sorted by representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub degree: u8,
    pub classes: Vec<IsoClass>,
}

impl Classification {
    pub fn jackson_representatives(&self) -> Vec<&CyclicWord> {
        self.representatives(true)
    }

    pub fn non_jackson_representatives(&self) -> Vec<&CyclicWord> {
        self.representatives(false)
    }

    fn representatives(&self, jackson: bool) -> Vec<&CyclicWord> {
        self.classes
            .iter()
            .filter(|c| c.jackson == jackson)
            .map(|c| &c.representative)
            .collect()
    }

    /// One record per labeled word, sorted by word.
    pub fn records(&self) -> Vec<CensusRecord> {
        let mut records: Vec<CensusRecord> = self
            .classes
            .iter()
            .flat_map(|c| {
                c.members.iter().map(|w| CensusRecord {
                    word: w.clone(),
                    iso_class_id: c.id,
                    jackson: c.jackson,
                })
            })
            .collect();
        records.sort_by(|a, b| a.word.cmp(&b.word));
        records
    }
}

/// Groups the census words into isomorphism classes and tests each class for
/// Jackson type. Degrees 1 and 2 count as Jackson.
pub fn classify_ulws(census: &UlwCensus) -> Result<Classification> {
    if census.degree > MAX_ISO_DEGREE {
        return Err(Error::Capacity {
            what: "classification up to isomorphism",
            degree: census.degree,
            max: MAX_ISO_DEGREE,
        });
    }
    let mut groups: BTreeMap<CyclicWord, Vec<CyclicWord>> = BTreeMap::new();
    for w in &census.canonical_words {
        groups
            .entry(canonicalize(w.canonical(), true)?)
            .or_default()
            .push(w.clone());
    }
    let classes = groups
        .into_iter()
        .enumerate()
        .map(|(id, (representative, mut members))| {
            members.sort();
            let ulw = Ulw::new(representative.canonical().clone())?;
            Ok(IsoClass {
                id,
                jackson: ulw.is_jackson_type(),
                representative,
                members,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        degree: census.degree,
        classes,
    })
}

/// Enumerates every ULW of degree `n` up to rotation.
pub fn enumerate_ulws(degree: u8) -> Result<UlwCensus> {
    enumerate_ulws_with_progress(degree, |_, _| {})
}

/// As [`enumerate_ulws`], calling `progress(done, total)` as each subtree of
/// the split search finishes, and once with `done = 0` before the search starts.
pub fn enumerate_ulws_with_progress<F>(degree: u8, progress: F) -> Result<UlwCensus>
where
    F: Fn(usize, usize) + Sync,
{
    check_degree(degree as usize)?;
    if degree > MAX_ENUMERATION_DEGREE {
        return Err(Error::Capacity {
            what: "ULW enumeration",
            degree,
            max: MAX_ENUMERATION_DEGREE,
        });
    }
    let mut root = Searcher::new(degree);
    let split_depth = root.len.min(2 * degree as usize);
    let mut prefixes = Vec::new();
    let mut found = Vec::new();
    root.collect_prefixes(split_depth, &mut prefixes, &mut found);

    let total = prefixes.len();
    let done = AtomicUsize::new(0);
    progress(0, total);
    let deeper: Vec<Vec<Letter>> = prefixes
        .par_iter()
        .flat_map_iter(|prefix| {
            let mut searcher = Searcher::new(degree);
            for &a in prefix {
                assert!(searcher.push(a), "replayed prefix is admissible");
            }
            let mut out = Vec::new();
            searcher.search(&mut out);
            progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
            out
        })
        .collect();
    found.extend(deeper);

    let mut words = Vec::with_capacity(found.len());
    for letters in found {
        let w = Word::from_raw(letters, degree);
        if is_ulw(&w, VerifyMode::Counting)?.is_ulw {
            words.push(CyclicWord::new(&w));
        }
    }
    words.sort();
    words.dedup();
    UlwCensus::from_canonical(degree, words)
}

/// Depth-first search state for one prefix.
struct Searcher {
    degree: u8,
    len: usize,
    letters: Vec<Letter>,
    // FKM period of each prefix; the word stays a prenecklace.
    periods: Vec<usize>,
    // occurrences of each window, indexed by its base-(n+1) code
    counts: Vec<u8>,
    // first letter seen after each window of length at most n
    follower: Vec<Letter>,
    // follower slots set by each push, for undo
    log: Vec<Vec<usize>>,
    budgets: Vec<u8>,
}

impl Searcher {
    fn new(degree: u8) -> Self {
        let n = degree as usize;
        let len = factorial(n);
        let slots = (n + 1).pow(n as u32 + 1);
        Searcher {
            degree,
            len,
            letters: Vec::with_capacity(len),
            periods: Vec::with_capacity(len),
            counts: vec![0; slots],
            follower: vec![0; slots],
            log: Vec::with_capacity(len),
            budgets: (0..=n)
                .map(|k| factorial(n - k).min(u8::MAX as usize) as u8)
                .collect(),
        }
    }

    fn code(&self, window: &[Letter]) -> usize {
        let base = self.degree as usize + 1;
        window.iter().fold(0, |c, &a| c * base + a as usize)
    }

    fn budget(&self, window: &[Letter]) -> u8 {
        self.budgets[letter_mask(window).count_ones() as usize]
    }

    /// Appends `c` if the prefix stays admissible.
    fn push(&mut self, c: Letter) -> bool {
        let n = self.degree as usize;
        let t = self.letters.len();
        if t == self.len {
            return false;
        }
        let period = if t == 0 {
            if c != 1 {
                return false;
            }
            1
        } else {
            let p = self.periods[t - 1];
            let reference = self.letters[t - p];
            match c.cmp(&reference) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Equal => p,
                std::cmp::Ordering::Greater => t + 1,
            }
        };

        self.letters.push(c);
        if has_square_suffix(&self.letters) {
            self.letters.pop();
            return false;
        }
        // If some occurrence of u is followed by a letter of alp(u), every
        // occurrence is: both windows have the same count.
        for m in 1..=n.min(t) {
            let u = &self.letters[t - m..t];
            let f = self.follower[self.code(u)];
            if f != 0 && f != c {
                let mask = letter_mask(u);
                if mask & (1 << (f - 1)) != 0 || mask & (1 << (c - 1)) != 0 {
                    self.letters.pop();
                    return false;
                }
            }
        }
        for m in 1..=(n + 1).min(t + 1) {
            let window = &self.letters[t + 1 - m..];
            if self.counts[self.code(window)] >= self.budget(window) {
                self.letters.pop();
                return false;
            }
        }

        for m in 1..=(n + 1).min(t + 1) {
            let code = self.code(&self.letters[t + 1 - m..]);
            self.counts[code] += 1;
        }
        let mut set = Vec::new();
        for m in 1..=n.min(t) {
            let code = self.code(&self.letters[t - m..t]);
            if self.follower[code] == 0 {
                self.follower[code] = c;
                set.push(code);
            }
        }
        self.log.push(set);
        self.periods.push(period);
        true
    }

    fn pop(&mut self) {
        let n = self.degree as usize;
        let t = self.letters.len() - 1;
        for m in 1..=(n + 1).min(t + 1) {
            let code = self.code(&self.letters[t + 1 - m..]);
            self.counts[code] -= 1;
        }
        for code in self.log.pop().expect("one log entry per letter") {
            self.follower[code] = 0;
        }
        self.periods.pop();
        self.letters.pop();
    }

    fn is_lyndon_leaf(&self) -> bool {
        self.letters.len() == self.len && self.periods.last() == Some(&self.len)
    }

    fn search(&mut self, out: &mut Vec<Vec<Letter>>) {
        if self.letters.len() == self.len {
            if self.is_lyndon_leaf() {
                out.push(self.letters.clone());
            }
            return;
        }
        for c in 1..=self.degree {
            if self.push(c) {
                self.search(out);
                self.pop();
            }
        }
    }

    fn collect_prefixes(&mut self, depth: usize, prefixes: &mut Vec<Vec<Letter>>, found: &mut Vec<Vec<Letter>>) {
        if self.letters.len() == self.len {
            if self.is_lyndon_leaf() {
                found.push(self.letters.clone());
            }
            return;
        }
        if self.letters.len() == depth {
            prefixes.push(self.letters.clone());
            return;
        }
        for c in 1..=self.degree {
            if self.push(c) {
                self.collect_prefixes(depth, prefixes, found);
                self.pop();
            }
        }
    }
}

fn has_square_suffix(w: &[Letter]) -> bool {
    let len = w.len();
    (1..=len / 2).any(|p| w[len - p..] == w[len - 2 * p..len - p])
}
