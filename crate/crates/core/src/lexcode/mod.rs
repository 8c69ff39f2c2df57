//! Lex-codes.
//!
//! A finite set `X` of words is a lex-code of degree `n` when every member is
//! the lexicographic minimum of `X` for exactly one total order on `Σ_n`, and
//! every proper prefix of a member is a prefix of at least two members. It is
//! Hamiltonian when the digraph `S_X` (an edge `x -> y` whenever `x` is a
//! prefix of `ay` for a letter `a`) has a Hamiltonian cycle. Hamiltonian
//! lex-codes are exactly the sets `MT(w)` of universal Lyndon words `w`.

mod refine;
mod search;
mod sx;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{TotalOrder, MAX_ORDER_ENUMERATION_DEGREE};
use crate::structure::Ulw;
use crate::word::{check_degree, Word};

pub use refine::{refine_lex_code, RefinementScript, RefinementState, RefinementStep};
pub use search::{hamiltonian_census, search_hamiltonian_lex_codes, HamiltonianCensus, MAX_SEARCH_DEGREE};
pub use sx::{HamiltonianCycle, HamiltonianCycles, SxDigraph, SxEdge};

/// A validated lex-code, its words kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexCode {
    degree: u8,
    words: Vec<Word>,
}

impl LexCode {
    /// Validates `words` as a lex-code of the given degree.
    pub fn new(words: Vec<Word>, degree: u8) -> Result<Self> {
        let report = validate_lex_code(&words, degree)?;
        if !report.valid {
            let first = report
                .violations
                .first()
                .map(ToString::to_string)
                .unwrap_or_default();
            return Err(Error::InvalidLexCode(first));
        }
        Ok(LexCode::from_sorted(dedup_sorted(words), degree))
    }

    pub(crate) fn from_sorted(words: Vec<Word>, degree: u8) -> Self {
        LexCode { degree, words }
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Longest member length.
    pub fn max_word_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn sx_digraph(&self) -> SxDigraph {
        SxDigraph::new(&self.words, self.degree)
    }

    /// The word `a_0 a_1 ... a_{k-1}` spelled by the witness letters of a
    /// Hamiltonian cycle of `S_X`.
    pub fn synthesize_ulw(&self, cycle: &HamiltonianCycle) -> Result<Word> {
        sx::synthesize(self, &self.sx_digraph(), cycle)
    }

    /// `MT(w)` as a lex-code, together with the Hamiltonian cycle through the
    /// shortest unrepeated prefixes of consecutive conjugates of `w`.
    pub fn from_ulw(ulw: &Ulw) -> Result<(LexCode, HamiltonianCycle)> {
        let mt = ulw.mt();
        let code = LexCode::new(mt.clone(), ulw.degree())?;
        let graph = code.sx_digraph();
        let letters = ulw.word().letters();
        let k = mt.len();
        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let source = graph.vertex_index(&mt[i]).expect("member of MT(w)");
            let target = graph.vertex_index(&mt[(i + 1) % k]).expect("member of MT(w)");
            let edge = SxEdge {
                source,
                target,
                letter: letters[i],
            };
            if !graph.edges().contains(&edge) {
                return Err(Error::InvalidCycle(format!(
                    "{} -> {} is not witnessed by {}",
                    mt[i],
                    mt[(i + 1) % k],
                    letters[i]
                )));
            }
            edges.push(edge);
        }
        let cycle = HamiltonianCycle { edges };
        graph.check_hamiltonian(&cycle)?;
        Ok((code, cycle))
    }
}

impl fmt::Display for LexCode {
    /// One word per line, sorted, `-` standing for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for word in &self.words {
            writeln!(f, "{word}")?;
        }
        Ok(())
    }
}

/// A failed lex-code condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Condition 1: the word is the minimum for no order, or for several.
    MinimizerCount {
        word: Word,
        orders: Vec<TotalOrder>,
    },
    /// Condition 2: a proper prefix shared by fewer than two members.
    UnsharedPrefix { prefix: Word, members: usize },
    /// One member is a proper prefix of another.
    NotPrefixFree { prefix: Word, word: Word },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MinimizerCount { word, orders } => write!(
                f,
                "{word} is the minimum for {} orders instead of exactly one",
                orders.len()
            ),
            Violation::UnsharedPrefix { prefix, members } => write!(
                f,
                "proper prefix {prefix} is a prefix of {members} member(s), at least two required"
            ),
            Violation::NotPrefixFree { prefix, word } => {
                write!(f, "{prefix} is a proper prefix of {word}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LexCodeReport {
    pub valid: bool,
    /// The minimum of the set under each total order.
    pub minimizer_map: Vec<(TotalOrder, Word)>,
    pub violations: Vec<Violation>,
}

fn dedup_sorted(mut words: Vec<Word>) -> Vec<Word> {
    words.sort();
    words.dedup();
    words
}

/// Checks both lex-code conditions and reports every violation found.
pub fn validate_lex_code(words: &[Word], degree: u8) -> Result<LexCodeReport> {
    check_degree(degree as usize)?;
    if degree > MAX_ORDER_ENUMERATION_DEGREE {
        return Err(Error::Capacity {
            what: "lex-code validation",
            degree,
            max: MAX_ORDER_ENUMERATION_DEGREE,
        });
    }
    if words.is_empty() {
        return Err(Error::InvalidLexCode("the set is empty".into()));
    }
    if let Some(w) = words.iter().find(|w| w.degree() != degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: w.degree(),
        });
    }
    let words = dedup_sorted(words.to_vec());

    let mut minimizer_map = Vec::new();
    let mut won: BTreeMap<&Word, Vec<TotalOrder>> = words.iter().map(|w| (w, Vec::new())).collect();
    for order in TotalOrder::all(degree)? {
        let min = words
            .iter()
            .min_by(|a, b| order.compare(a.letters(), b.letters()))
            .expect("the set is not empty");
        won.get_mut(min).expect("minimum is a member").push(order.clone());
        minimizer_map.push((order, min.clone()));
    }

    let mut violations: Vec<Violation> = won
        .into_iter()
        .filter(|(_, orders)| orders.len() != 1)
        .map(|(word, orders)| Violation::MinimizerCount {
            word: word.clone(),
            orders,
        })
        .collect();

    let mut prefixes: Vec<Word> = words
        .iter()
        .flat_map(|w| (0..w.len()).map(move |l| w.prefix(l)))
        .collect();
    prefixes.sort();
    prefixes.dedup();
    for prefix in prefixes {
        let members = words.iter().filter(|w| prefix.is_prefix_of(w)).count();
        if members < 2 {
            violations.push(Violation::UnsharedPrefix { prefix, members });
        }
    }

    for pair in words.windows(2) {
        if pair[0].is_prefix_of(&pair[1]) {
            violations.push(Violation::NotPrefixFree {
                prefix: pair[0].clone(),
                word: pair[1].clone(),
            });
        }
    }

    Ok(LexCodeReport {
        valid: violations.is_empty(),
        minimizer_map,
        violations,
    })
}
