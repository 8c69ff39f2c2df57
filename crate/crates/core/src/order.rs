//! Total and partial orders on the alphabet `Σ_n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{bit, check_degree, Letter};

/// Largest degree for which all `n!` total orders are ever materialized.
pub const MAX_ORDER_ENUMERATION_DEGREE: u8 = 8;

/// A total order on `{1, ..., n}`, stored as its ranking (lowest first).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalOrder {
    ranking: Vec<Letter>,
    // rank[a - 1] = position of letter a in `ranking`
    rank: Vec<u8>,
}

impl TotalOrder {
    pub fn new(ranking: Vec<Letter>) -> Result<Self> {
        let degree = check_degree(ranking.len())?;
        let mut rank = vec![u8::MAX; ranking.len()];
        for (pos, &a) in ranking.iter().enumerate() {
            if a == 0 || a > degree {
                return Err(Error::InvalidOrder(format!(
                    "letter {a} is outside 1..={degree}"
                )));
            }
            if rank[a as usize - 1] != u8::MAX {
                return Err(Error::InvalidOrder(format!("letter {a} is repeated")));
            }
            rank[a as usize - 1] = pos as u8;
        }
        Ok(TotalOrder { ranking, rank })
    }

    /// `1 < 2 < ... < n`.
    pub fn natural(degree: u8) -> Result<Self> {
        TotalOrder::new((1..=degree).collect())
    }

    /// All `n!` orders, in lexicographic order of their rankings.
    pub fn all(degree: u8) -> Result<Vec<TotalOrder>> {
        check_degree(degree as usize)?;
        if degree > MAX_ORDER_ENUMERATION_DEGREE {
            return Err(Error::Capacity {
                what: "order enumeration",
                degree,
                max: MAX_ORDER_ENUMERATION_DEGREE,
            });
        }
        let mut current: Vec<Letter> = (1..=degree).collect();
        let mut out = Vec::with_capacity(factorial(degree as usize));
        loop {
            out.push(TotalOrder::new(current.clone())?);
            if !next_permutation(&mut current) {
                break;
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> u8 {
        self.ranking.len() as u8
    }

    pub fn ranking(&self) -> &[Letter] {
        &self.ranking
    }

    /// Position of `a` in the ranking, `0` for the least letter.
    pub fn rank(&self, a: Letter) -> u8 {
        self.rank[a as usize - 1]
    }

    /// The word with every letter replaced by its rank.
    pub(crate) fn ranks(&self, letters: &[Letter]) -> Vec<u8> {
        letters.iter().map(|&a| self.rank(a)).collect()
    }

    /// Lexicographic comparison of raw letter slices, prefix first.
    pub(crate) fn compare(&self, u: &[Letter], v: &[Letter]) -> Ordering {
        for (&a, &b) in u.iter().zip(v) {
            if a != b {
                return self.rank(a).cmp(&self.rank(b));
            }
        }
        u.len().cmp(&v.len())
    }

    /// The least letter of `letters` under this order.
    pub fn min_of(&self, letters: &[Letter]) -> Option<Letter> {
        letters.iter().copied().min_by_key(|&a| self.rank(a))
    }

    /// Whether `partial ⊆ self`, i.e. the chain is a prefix of the ranking.
    pub fn extends(&self, partial: &PartialAlphabetOrder) -> bool {
        partial.degree() == self.degree() && self.ranking.starts_with(partial.chain())
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_chain(f, &self.ranking)
    }
}

impl fmt::Debug for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TotalOrder({self})")
    }
}

impl FromStr for TotalOrder {
    type Err = Error;

    /// Accepts `2<1<3`, `2,1,3` or, for degree `<= 9`, `213`.
    fn from_str(s: &str) -> Result<Self> {
        TotalOrder::new(parse_chain(s)?)
    }
}

impl Serialize for TotalOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A partial alphabet order with respect to `I ⊆ Σ_n`: a chain on `I` whose
/// letters all precede the (mutually incomparable) letters outside `I`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialAlphabetOrder {
    chain: Vec<Letter>,
    degree: u8,
}

impl PartialAlphabetOrder {
    pub fn new(chain: Vec<Letter>, degree: u8) -> Result<Self> {
        check_degree(degree as usize)?;
        let mut seen = 0u64;
        for &a in &chain {
            if a == 0 || a > degree {
                return Err(Error::InvalidOrder(format!(
                    "letter {a} is outside 1..={degree}"
                )));
            }
            if seen & bit(a) != 0 {
                return Err(Error::InvalidOrder(format!("letter {a} is repeated")));
            }
            seen |= bit(a);
        }
        Ok(PartialAlphabetOrder { chain, degree })
    }

    pub(crate) fn from_raw(chain: Vec<Letter>, degree: u8) -> Self {
        PartialAlphabetOrder { chain, degree }
    }

    pub fn chain(&self) -> &[Letter] {
        &self.chain
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// `|I|`.
    pub fn size(&self) -> usize {
        self.chain.len()
    }

    /// A partial alphabet order of size `n - 1` (or `n`) is total.
    pub fn is_total(&self) -> bool {
        self.chain.len() + 1 >= self.degree as usize
    }

    /// The total order this one determines, when it is total.
    pub fn to_total(&self) -> Option<TotalOrder> {
        if !self.is_total() {
            return None;
        }
        let mut ranking = self.chain.clone();
        if let Some(last) = (1..=self.degree).find(|&a| !ranking.contains(&a)) {
            ranking.push(last);
        }
        TotalOrder::new(ranking).ok()
    }

    /// Every total order `◀` with `self ⊆ ◀`; there are `(n - |I|)!` of them.
    pub fn extensions(&self) -> Vec<TotalOrder> {
        let mut rest: Vec<Letter> = (1..=self.degree)
            .filter(|a| !self.chain.contains(a))
            .collect();
        let mut out = Vec::new();
        loop {
            let mut ranking = self.chain.clone();
            ranking.extend_from_slice(&rest);
            out.push(TotalOrder::new(ranking).expect("chain plus complement is a permutation"));
            if !next_permutation(&mut rest) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for PartialAlphabetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain.is_empty() {
            return f.write_str("-");
        }
        write_chain(f, &self.chain)
    }
}

impl fmt::Debug for PartialAlphabetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialAlphabetOrder({self}; n={})", self.degree)
    }
}

impl Serialize for PartialAlphabetOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn write_chain(f: &mut fmt::Formatter<'_>, chain: &[Letter]) -> fmt::Result {
    for (i, a) in chain.iter().enumerate() {
        if i > 0 {
            f.write_str("<")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

/// Parses `2<1<3`, `2,1,3`, or a digit string.
pub(crate) fn parse_chain(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    let fields: Vec<&str> = if s.contains('<') {
        s.split('<').collect()
    } else if s.contains(',') {
        s.split(',').collect()
    } else {
        s.char_indices().map(|(i, c)| &s[i..i + c.len_utf8()]).collect()
    };
    fields
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.trim()
                .parse::<u8>()
                .ok()
                .filter(|&a| a >= 1)
                .ok_or_else(|| Error::InvalidOrder(format!("field {} ({f:?}) is not a letter", i + 1)))
        })
        .collect()
}

/// Rearranges into the next permutation in lexicographic order; `false` once
/// the last permutation has been reached.
pub(crate) fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_orders() {
        let o: TotalOrder = "2<1<3".parse().unwrap();
        assert_eq!(o.ranking(), &[2, 1, 3]);
        assert_eq!(o, "2,1,3".parse().unwrap());
        assert_eq!(o, "213".parse().unwrap());
        assert_eq!(o.to_string(), "2<1<3");
        assert_eq!(o.rank(2), 0);
        assert_eq!(o.rank(3), 2);
        assert!("2<2<3".parse::<TotalOrder>().is_err());
        assert!("1<4<3".parse::<TotalOrder>().is_err());
        assert!("1<x".parse::<TotalOrder>().is_err());
    }

    #[test]
    fn all_orders_are_distinct_and_sorted() {
        for n in 1..=5u8 {
            let all = TotalOrder::all(n).unwrap();
            assert_eq!(all.len(), factorial(n as usize));
            assert!(all.windows(2).all(|p| p[0] < p[1]));
        }
        assert!(matches!(
            TotalOrder::all(9),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn partial_orders() {
        let p = PartialAlphabetOrder::new(vec![2, 1], 3).unwrap();
        assert!(p.is_total());
        assert_eq!(p.to_total().unwrap().ranking(), &[2, 1, 3]);
        let q = PartialAlphabetOrder::new(vec![3], 4).unwrap();
        assert!(!q.is_total());
        assert_eq!(q.to_total(), None);
        let ext = q.extensions();
        assert_eq!(ext.len(), 6);
        assert!(ext.iter().all(|o| o.extends(&q)));
        let empty = PartialAlphabetOrder::new(vec![], 3).unwrap();
        assert_eq!(empty.extensions().len(), 6);
        assert!(PartialAlphabetOrder::new(vec![1, 1], 3).is_err());
        assert!(PartialAlphabetOrder::new(vec![4], 3).is_err());
    }

    #[test]
    fn min_of_reads_the_earliest_ranked_letter() {
        let o: TotalOrder = "3<1<2".parse().unwrap();
        assert_eq!(o.min_of(&[1, 2]), Some(1));
        assert_eq!(o.min_of(&[1, 3]), Some(3));
        assert_eq!(o.min_of(&[]), None);
    }
}
