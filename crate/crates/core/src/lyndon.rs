//! Lyndon words with respect to an arbitrary alphabet order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::order::{TotalOrder, MAX_ORDER_ENUMERATION_DEGREE};
use crate::word::Word;

/// Whether `w` is strictly smaller under `order` than each of its proper
/// conjugates.
///
/// Comparing against conjugates rather than suffixes rejects non-primitive
/// words directly: a power has a conjugate equal to itself.
pub fn is_lyndon(w: &Word, order: &TotalOrder) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord("the Lyndon test"));
    }
    if order.degree() != w.degree() {
        return Err(Error::DegreeMismatch {
            expected: order.degree(),
            found: w.degree(),
        });
    }
    let ranks = order.ranks(w.letters());
    Ok((1..ranks.len()).all(|shift| compare_with_rotation(&ranks, shift) == Ordering::Less))
}

/// Every total order for which `w` is Lyndon, by trying all `n!` orders.
pub fn lyndon_orders(w: &Word) -> Result<Vec<TotalOrder>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("the Lyndon test"));
    }
    if w.degree() > MAX_ORDER_ENUMERATION_DEGREE {
        return Err(Error::Capacity {
            what: "Lyndon order enumeration",
            degree: w.degree(),
            max: MAX_ORDER_ENUMERATION_DEGREE,
        });
    }
    let mut out = Vec::new();
    for order in TotalOrder::all(w.degree())? {
        if is_lyndon(w, &order)? {
            out.push(order);
        }
    }
    Ok(out)
}

/// Compares `s` with its rotation by `shift`.
fn compare_with_rotation(s: &[u8], shift: usize) -> Ordering {
    let n = s.len();
    for k in 0..n {
        let a = s[k];
        let b = s[(k + shift) % n];
        if a != b {
            return a.cmp(&b);
        }
    }
    Ordering::Equal
}

/// Suffix-form Lyndon test on a rank sequence (Duval's scan): `s` is Lyndon
/// iff it is strictly smaller than every proper suffix.
pub(crate) fn is_lyndon_ranks(s: &[u8]) -> bool {
    let n = s.len();
    if n == 0 {
        return false;
    }
    let (mut i, mut j) = (0, 1);
    while j < n && s[i] <= s[j] {
        if s[i] < s[j] {
            i = 0;
        } else {
            i += 1;
        }
        j += 1;
    }
    j == n && i == 0
}

/// Start index of the lexicographically least rotation of `s`; the smallest
/// such index when several rotations tie.
pub(crate) fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Letter;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn o(s: &str) -> TotalOrder {
        s.parse().unwrap()
    }

    fn all_words(degree: u8, len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|p: Vec<Letter>| {
                    (1..=degree).map(move |a| {
                        let mut q = p.clone();
                        q.push(a);
                        q
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&w("123122"), &o("1<3<2")).unwrap());
        assert!(!is_lyndon(&w("123122"), &o("1<2<3")).unwrap());
        assert!(!is_lyndon(&w("11"), &o("1")).unwrap());
        assert!(is_lyndon(&w("1"), &o("1")).unwrap());
        assert!(matches!(
            is_lyndon(&w("12"), &o("1<2<3")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn lyndon_order_sets() {
        let got = lyndon_orders(&w("212313")).unwrap();
        assert_eq!(got, vec![o("2<1<3")]);
        let got = lyndon_orders(&w("313241342142314321234124")).unwrap();
        assert_eq!(got, vec![o("3<1<2<4"), o("3<1<4<2")]);
        assert!(lyndon_orders(&Word::parse("11", Some(2)).unwrap())
            .unwrap()
            .is_empty());
        let nine = Word::parse("123456789", None).unwrap();
        assert!(matches!(lyndon_orders(&nine), Err(Error::Capacity { .. })));
    }

    #[test]
    fn conjugate_and_suffix_forms_agree() {
        for degree in 1..=3u8 {
            let orders = TotalOrder::all(degree).unwrap();
            for len in 1..=6 {
                for letters in all_words(degree, len) {
                    let word = Word::new(letters, degree).unwrap();
                    for order in &orders {
                        let ranks = order.ranks(word.letters());
                        assert_eq!(
                            is_lyndon(&word, order).unwrap(),
                            is_lyndon_ranks(&ranks),
                            "{word} under {order}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        for degree in 1..=3u8 {
            for len in 1..=7 {
                for letters in all_words(degree, len) {
                    let rotations: Vec<Vec<u8>> = (0..len)
                        .map(|i| {
                            let mut r = letters.clone();
                            r.rotate_left(i);
                            r
                        })
                        .collect();
                    let min = rotations.iter().min().unwrap();
                    let first = rotations.iter().position(|r| r == min).unwrap();
                    assert_eq!(least_rotation(&letters), first, "{letters:?}");
                }
            }
        }
    }
}
