//! The three equivalent tests for universal Lyndon words.
//!
//! * [`VerifyMode::Definitional`]: length `n!` and every conjugate is Lyndon
//!   for exactly one order, all `n!` orders being used.
//! * [`VerifyMode::OrderDefining`]: length `n!` and every conjugate defines a
//!   total order for which it is Lyndon.
//! * [`VerifyMode::Counting`]: every cyclic factor `u` occurs exactly
//!   `(n - |alp(u)|)!` times.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lyndon::{is_lyndon_ranks, least_rotation};
use crate::order::{factorial, PartialAlphabetOrder, TotalOrder, MAX_ORDER_ENUMERATION_DEGREE};
use crate::word::{first_occurrences, letter_mask, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    Definitional,
    OrderDefining,
    Counting,
}

impl VerifyMode {
    pub const ALL: [VerifyMode; 3] = [
        VerifyMode::Definitional,
        VerifyMode::OrderDefining,
        VerifyMode::Counting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyMode::Definitional => "definitional",
            VerifyMode::OrderDefining => "order-defining",
            VerifyMode::Counting => "counting",
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VerifyMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse {
                column: 1,
                message: format!("unknown verification mode {s:?}"),
            })
    }
}

/// Why a word failed verification. Conjugate indices are zero-based: index
/// `i` is the rotation starting at the `(i + 1)`-th letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The word does not have length `n!`.
    Length { expected: usize, actual: usize },
    /// A conjugate whose set of Lyndon orders is not a singleton.
    LyndonOrders {
        conjugate_index: usize,
        conjugate: Word,
        orders: Vec<TotalOrder>,
    },
    /// A conjugate whose own order is partial, or for which it is not Lyndon.
    DefinedOrder {
        conjugate_index: usize,
        conjugate: Word,
        defined_order: PartialAlphabetOrder,
        total: bool,
    },
    /// A cyclic factor breaking the occurrence-count identity; it starts the
    /// reported conjugate.
    FactorCount {
        conjugate_index: usize,
        conjugate: Word,
        factor: Word,
        count: usize,
        expected: usize,
    },
}

impl Witness {
    pub fn conjugate(&self) -> Option<&Word> {
        match self {
            Witness::Length { .. } => None,
            Witness::LyndonOrders { conjugate, .. }
            | Witness::DefinedOrder { conjugate, .. }
            | Witness::FactorCount { conjugate, .. } => Some(conjugate),
        }
    }

    pub fn conjugate_index(&self) -> Option<usize> {
        match self {
            Witness::Length { .. } => None,
            Witness::LyndonOrders {
                conjugate_index, ..
            }
            | Witness::DefinedOrder {
                conjugate_index, ..
            }
            | Witness::FactorCount {
                conjugate_index, ..
            } => Some(*conjugate_index),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Length { expected, actual } => {
                write!(f, "length {actual} differs from n! = {expected}")
            }
            Witness::LyndonOrders {
                conjugate, orders, ..
            } => {
                if orders.is_empty() {
                    write!(f, "conjugate {conjugate} is not Lyndon for any order")
                } else {
                    let list: Vec<String> = orders.iter().map(|o| o.to_string()).collect();
                    write!(
                        f,
                        "conjugate {conjugate} is Lyndon for several orders: {}",
                        list.join(", ")
                    )
                }
            }
            Witness::DefinedOrder {
                conjugate,
                defined_order,
                total,
                ..
            } => {
                if *total {
                    write!(
                        f,
                        "conjugate {conjugate} is not Lyndon for the order it defines ({defined_order})"
                    )
                } else {
                    write!(
                        f,
                        "conjugate {conjugate} defines the partial order {defined_order}"
                    )
                }
            }
            Witness::FactorCount {
                factor,
                count,
                expected,
                ..
            } => write!(
                f,
                "cyclic factor {factor} occurs {count} times, expected {expected}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UlwReport {
    pub is_ulw: bool,
    pub mode: VerifyMode,
    pub degree: u8,
    pub length: usize,
    pub witness: Option<Witness>,
}

impl UlwReport {
    fn new(w: &Word, mode: VerifyMode, witness: Option<Witness>) -> Self {
        UlwReport {
            is_ulw: witness.is_none(),
            mode,
            degree: w.degree(),
            length: w.len(),
            witness,
        }
    }
}

/// Tests whether `w` is a universal Lyndon word using the requested
/// characterization. All three modes agree on every input.
pub fn is_ulw(w: &Word, mode: VerifyMode) -> Result<UlwReport> {
    if w.is_empty() {
        return Err(Error::EmptyWord("ULW verification"));
    }
    let witness = match mode {
        VerifyMode::Definitional => definitional_witness(w)?,
        VerifyMode::OrderDefining => order_defining_witness(w),
        VerifyMode::Counting => counting_witness(w),
    };
    Ok(UlwReport::new(w, mode, witness))
}

fn length_witness(w: &Word) -> Option<Witness> {
    let expected = factorial(w.degree() as usize);
    (w.len() != expected).then_some(Witness::Length {
        expected,
        actual: w.len(),
    })
}

fn rotated(letters: &[Letter], shift: usize) -> Vec<Letter> {
    let mut out = letters.to_vec();
    out.rotate_left(shift);
    out
}

/// Assigns to each conjugate index the orders for which it is Lyndon.
///
/// Under a fixed order the only possible Lyndon conjugate is the least
/// rotation, so one scan per order suffices.
pub(crate) fn lyndon_orders_by_conjugate(w: &Word) -> Result<Vec<Vec<TotalOrder>>> {
    let mut per_conjugate = vec![Vec::new(); w.len()];
    for order in TotalOrder::all(w.degree())? {
        let ranks = order.ranks(w.letters());
        let start = least_rotation(&ranks);
        if is_lyndon_ranks(&rotated(&ranks, start)) {
            per_conjugate[start].push(order);
        }
    }
    Ok(per_conjugate)
}

fn definitional_witness(w: &Word) -> Result<Option<Witness>> {
    if w.degree() > MAX_ORDER_ENUMERATION_DEGREE {
        return Err(Error::Capacity {
            what: "definitional verification",
            degree: w.degree(),
            max: MAX_ORDER_ENUMERATION_DEGREE,
        });
    }
    if let Some(witness) = length_witness(w) {
        return Ok(Some(witness));
    }
    let per_conjugate = lyndon_orders_by_conjugate(w)?;
    if per_conjugate.iter().all(|orders| orders.len() == 1) {
        return Ok(None);
    }
    let index = pick_non_lyndon_conjugate(w, &per_conjugate);
    Ok(Some(Witness::LyndonOrders {
        conjugate_index: index,
        conjugate: w.rotation(index),
        orders: per_conjugate[index].clone(),
    }))
}

/// Chooses which irregular conjugate to report.
///
/// With `n!` conjugates and `n!` orders, a conjugate that is Lyndon for two
/// orders forces another one to be Lyndon for none. The reported conjugate is
/// a non-Lyndon one; when a surplus conjugate exists, it is the non-Lyndon
/// conjugate whose own order the surplus conjugate took over.
fn pick_non_lyndon_conjugate(w: &Word, per_conjugate: &[Vec<TotalOrder>]) -> usize {
    let first_empty = per_conjugate.iter().position(Vec::is_empty);
    let first_surplus = per_conjugate.iter().position(|o| o.len() >= 2);
    let (Some(first_empty), Some(surplus)) = (first_empty, first_surplus) else {
        return first_empty.or(first_surplus).unwrap_or(0);
    };
    let own = w.rotation(surplus).defined_order().to_total();
    for taken in &per_conjugate[surplus] {
        if Some(taken) == own.as_ref() {
            continue;
        }
        let victim = (0..w.len()).find(|&i| {
            per_conjugate[i].is_empty()
                && w.rotation(i).defined_order().to_total().as_ref() == Some(taken)
        });
        if let Some(victim) = victim {
            return victim;
        }
    }
    first_empty
}

fn order_defining_witness(w: &Word) -> Option<Witness> {
    if let Some(witness) = length_witness(w) {
        return Some(witness);
    }
    let letters = w.letters();
    (0..w.len()).find_map(|i| {
        let conjugate = rotated(letters, i);
        let defined = PartialAlphabetOrder::from_raw(first_occurrences(&conjugate), w.degree());
        let lyndon = defined
            .to_total()
            .is_some_and(|order| is_lyndon_ranks(&order.ranks(&conjugate)));
        (!lyndon).then(|| Witness::DefinedOrder {
            conjugate_index: i,
            conjugate: w.rotation(i),
            total: defined.is_total(),
            defined_order: defined,
        })
    })
}

/// Checks `|w|^c_u = (n - |alp(u)|)!` length by length.
///
/// Once every factor of some length occurs exactly once, so does every
/// longer factor, and each of those already has at least `n - 1` letters.
fn counting_witness(w: &Word) -> Option<Witness> {
    if let Some(witness) = length_witness(w) {
        return Some(witness);
    }
    let n = w.degree() as usize;
    let len = w.len();
    let doubled: Vec<Letter> = w.letters().iter().chain(w.letters()).copied().collect();
    for factor_len in 1..=len {
        let mut counts: HashMap<&[Letter], usize> = HashMap::with_capacity(len);
        for i in 0..len {
            *counts.entry(&doubled[i..i + factor_len]).or_default() += 1;
        }
        for i in 0..len {
            let factor = &doubled[i..i + factor_len];
            let count = counts[factor];
            let expected = factorial(n - letter_mask(factor).count_ones() as usize);
            if count != expected {
                return Some(Witness::FactorCount {
                    conjugate_index: i,
                    conjugate: w.rotation(i),
                    factor: Word::from_raw(factor.to_vec(), w.degree()),
                    count,
                    expected,
                });
            }
        }
        if counts.len() == len {
            return None;
        }
    }
    None
}

/// Whether the conjugates of `w` define pairwise distinct total orders.
pub fn is_universal_order_word(w: &Word) -> Result<bool> {
    let expected = factorial(w.degree() as usize);
    if w.len() != expected {
        return Err(Error::WrongLength {
            expected,
            actual: w.len(),
        });
    }
    let letters = w.letters();
    let mut seen = std::collections::HashSet::with_capacity(w.len());
    for i in 0..w.len() {
        let defined = PartialAlphabetOrder::from_raw(
            first_occurrences(&rotated(letters, i)),
            w.degree(),
        );
        let fresh = defined.to_total().is_some_and(|order| seen.insert(order));
        if !fresh {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::lyndon_orders;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const REMARK_2: &str = "123412431324134214231432";
    const NON_JACKSON: &str = "123431242314132421343214";
    const ORDER_WORD: &str = "123421323121424314324134";

    #[test]
    fn known_ulws_pass_every_mode() {
        for s in ["1", "12", "212313", "323121", "131232", NON_JACKSON] {
            for mode in VerifyMode::ALL {
                let report = is_ulw(&w(s), mode).unwrap();
                assert!(report.is_ulw, "{s} in {mode}: {:?}", report.witness);
                assert_eq!(report.witness, None);
                assert_eq!(report.length, s.len());
            }
        }
    }

    #[test]
    fn remark_word_is_rejected_in_every_mode() {
        for mode in VerifyMode::ALL {
            let report = is_ulw(&w(REMARK_2), mode).unwrap();
            assert!(!report.is_ulw, "{mode}");
            assert!(report.witness.is_some());
        }
        let report = is_ulw(&w(REMARK_2), VerifyMode::Definitional).unwrap();
        match report.witness.unwrap() {
            Witness::LyndonOrders {
                conjugate_index,
                conjugate,
                orders,
            } => {
                assert_eq!(conjugate.to_string(), "314321234124313241342142");
                assert_eq!(conjugate_index, 19);
                assert!(orders.is_empty());
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn order_defining_witness_is_not_lyndon_for_its_order() {
        let report = is_ulw(&w(REMARK_2), VerifyMode::OrderDefining).unwrap();
        let Some(Witness::DefinedOrder {
            conjugate,
            defined_order,
            total,
            ..
        }) = report.witness
        else {
            panic!("expected a defined-order witness");
        };
        assert!(total);
        let orders = lyndon_orders(&conjugate).unwrap();
        assert!(!orders.contains(&defined_order.to_total().unwrap()));
    }

    #[test]
    fn counting_witness_reports_the_first_bad_factor() {
        let report = is_ulw(&w(REMARK_2), VerifyMode::Counting).unwrap();
        let Some(Witness::FactorCount {
            factor,
            count,
            expected,
            conjugate,
            ..
        }) = report.witness
        else {
            panic!("expected a factor witness");
        };
        // alp(313) = {1, 3}, so (4 - 2)! occurrences are required
        assert_eq!(factor.to_string(), "313");
        assert_eq!((count, expected), (1, 2));
        assert!(factor.is_prefix_of(&conjugate));
    }

    #[test]
    fn wrong_lengths() {
        let short = w("2123");
        for mode in [VerifyMode::Definitional, VerifyMode::OrderDefining] {
            let report = is_ulw(&short, mode).unwrap();
            assert_eq!(
                report.witness,
                Some(Witness::Length {
                    expected: 6,
                    actual: 4
                })
            );
        }
        assert!(!is_ulw(&short, VerifyMode::Counting).unwrap().is_ulw);
        assert!(is_ulw(&Word::parse("-", Some(2)).unwrap(), VerifyMode::Counting).is_err());
    }

    #[test]
    fn reversal_of_a_ulw() {
        let r = w("212313").reversed();
        assert_eq!(r.to_string(), "313212");
        assert!(is_ulw(&r, VerifyMode::Counting).unwrap().is_ulw);
    }

    #[test]
    fn universal_order_words() {
        assert!(is_universal_order_word(&w(ORDER_WORD)).unwrap());
        assert!(!is_ulw(&w(ORDER_WORD), VerifyMode::Counting).unwrap().is_ulw);
        assert!(is_universal_order_word(&w("212313")).unwrap());
        assert!(!is_universal_order_word(&Word::parse("111111", Some(3)).unwrap()).unwrap());
        assert_eq!(
            is_universal_order_word(&w("2123")),
            Err(Error::WrongLength {
                expected: 6,
                actual: 4
            })
        );
    }

    #[test]
    fn mode_names_round_trip() {
        for mode in VerifyMode::ALL {
            assert_eq!(mode.name().parse::<VerifyMode>().unwrap(), mode);
        }
        assert!("fast".parse::<VerifyMode>().is_err());
        let json = serde_json::to_value(is_ulw(&w(REMARK_2), VerifyMode::Counting).unwrap()).unwrap();
        assert_eq!(json["mode"], "counting");
        assert_eq!(json["witness"]["kind"], "factor_count");
        assert_eq!(json["witness"]["factor"], "313");
    }
}
