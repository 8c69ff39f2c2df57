use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::canon::CyclicWord;
use crate::error::{Error, Result};
use crate::order::{factorial, TotalOrder};
use crate::word::{check_degree, first_occurrences, Letter, Word};

use super::sx::synthesize;
use super::LexCode;

/// Largest degree accepted by the exhaustive lex-code search.
pub const MAX_SEARCH_DEGREE: u8 = 4;

/// Hamiltonian lex-codes of one degree and the words they synthesize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianCensus {
    pub degree: u8,
    /// Every Hamiltonian lex-code found, sorted.
    pub codes: Vec<LexCode>,
    /// Total number of Hamiltonian cycles over all codes.
    pub cycles: usize,
    /// Canonical rotation classes of the synthesized words.
    pub words: BTreeSet<CyclicWord>,
    /// How many (code, cycle) pairs synthesize each class.
    pub multiplicities: BTreeMap<CyclicWord, usize>,
}

// Orders are indexed into `TotalOrder::all(n)`; cells are bit sets over them.
struct Space {
    degree: u8,
    orders: Vec<TotalOrder>,
    max_len: usize,
}

#[derive(Clone)]
struct Node {
    cells: BTreeMap<Word, u64>,
}

impl Space {
    /// The orders extending the chain of first occurrences of `w`.
    fn extensions(&self, w: &[Letter]) -> u64 {
        let chain = first_occurrences(w);
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, o)| o.ranking().starts_with(&chain))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// All admissible children sets of `x`, one per distinct split.
    fn splits(&self, x: &Word, cell: u64) -> Vec<Vec<(Word, u64)>> {
        let n = self.degree;
        if x.len() + 1 > self.max_len {
            return Vec::new();
        }
        let mut out: Vec<Vec<(Word, u64)>> = Vec::new();
        'gamma: for gamma in 1u32..(1 << n) {
            let mut parts: BTreeMap<Letter, u64> = BTreeMap::new();
            for i in 0..self.orders.len() {
                if cell & (1 << i) == 0 {
                    continue;
                }
                let a = *self.orders[i]
                    .ranking()
                    .iter()
                    .find(|&&a| gamma & (1 << (a - 1)) != 0)
                    .expect("Γ is non-empty");
                *parts.entry(a).or_default() |= 1 << i;
            }
            let mut children = Vec::with_capacity(parts.len());
            for (a, part) in parts {
                let mut letters = x.letters().to_vec();
                letters.push(a);
                if has_square_suffix(&letters) || part != self.extensions(&letters) {
                    continue 'gamma;
                }
                children.push((Word::from_raw(letters, n), part));
            }
            if !out.contains(&children) {
                out.push(children);
            }
        }
        out
    }

    fn expand(&self, node: &Node) -> Option<Vec<Node>> {
        let (x, &cell) = node.cells.iter().find(|(_, &c)| c.count_ones() > 1)?;
        Some(
            self.splits(x, cell)
                .into_iter()
                .map(|children| {
                    let mut cells = node.cells.clone();
                    cells.remove(x);
                    cells.extend(children);
                    Node { cells }
                })
                .collect(),
        )
    }

    fn complete(&self, node: Node, out: &mut Vec<LexCode>) {
        match self.expand(&node) {
            None => {
                let code = LexCode::from_sorted(node.cells.into_keys().collect(), self.degree);
                if code.sx_digraph().find_hamiltonian_cycle().is_some() {
                    out.push(code);
                }
            }
            Some(children) => {
                for child in children {
                    self.complete(child, out);
                }
            }
        }
    }
}

/// Whether `w` ends with a square `uu`.
fn has_square_suffix(w: &[Letter]) -> bool {
    let len = w.len();
    (1..=len / 2).any(|p| w[len - p..] == w[len - 2 * p..len - p])
}

/// Every Hamiltonian lex-code of degree `n` with words of length at most
/// `max_len`, sorted.
///
/// Cells are refined least word first. A branch is kept only when each new
/// cell holds exactly the orders extending the order its word defines and the
/// word has no square factor, which every Hamiltonian lex-code satisfies.
pub fn search_hamiltonian_lex_codes(degree: u8, max_len: usize) -> Result<Vec<LexCode>> {
    check_degree(degree as usize)?;
    if degree > MAX_SEARCH_DEGREE {
        return Err(Error::Capacity {
            what: "lex-code search",
            degree,
            max: MAX_SEARCH_DEGREE,
        });
    }
    let space = Space {
        degree,
        orders: TotalOrder::all(degree)?,
        max_len: max_len.min(factorial(degree as usize)),
    };
    let mut root = Node {
        cells: BTreeMap::new(),
    };
    root.cells.insert(Word::empty(degree)?, (1u64 << space.orders.len()) - 1);

    // Breadth-first until there is enough work to share out.
    let mut frontier = vec![root];
    let mut done = Vec::new();
    while !frontier.is_empty() && frontier.len() < 256 {
        let mut next = Vec::new();
        for node in frontier {
            match space.expand(&node) {
                None => space.complete(node, &mut done),
                Some(children) => next.extend(children),
            }
        }
        frontier = next;
    }
    let rest: Vec<LexCode> = frontier
        .into_par_iter()
        .flat_map_iter(|node| {
            let mut out = Vec::new();
            space.complete(node, &mut out);
            out
        })
        .collect();
    done.extend(rest);
    done.sort_by(|a, b| a.words().cmp(b.words()));
    done.dedup();
    Ok(done)
}

/// Searches all Hamiltonian lex-codes of degree `n` and synthesizes a word
/// from every Hamiltonian cycle of each.
pub fn hamiltonian_census(degree: u8) -> Result<HamiltonianCensus> {
    let codes = search_hamiltonian_lex_codes(degree, factorial(degree as usize))?;
    let per_code: Vec<Result<Vec<CyclicWord>>> = codes
        .par_iter()
        .map(|code| {
            let graph = code.sx_digraph();
            graph
                .hamiltonian_cycles()
                .map(|cycle| Ok(CyclicWord::new(&synthesize(code, &graph, &cycle)?)))
                .collect()
        })
        .collect();
    let mut cycles = 0;
    let mut multiplicities = BTreeMap::new();
    for words in per_code {
        for word in words? {
            cycles += 1;
            *multiplicities.entry(word).or_insert(0) += 1;
        }
    }
    Ok(HamiltonianCensus {
        degree,
        codes,
        cycles,
        words: multiplicities.keys().cloned().collect(),
        multiplicities,
    })
}
