//! Canonical representatives of conjugacy and isomorphism classes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lyndon::least_rotation;
use crate::order::{next_permutation, MAX_ORDER_ENUMERATION_DEGREE};
use crate::word::{Letter, Word};

/// Largest degree for canonicalization up to renaming (`n!` renamings).
pub const MAX_ISO_DEGREE: u8 = 6;

/// A cyclic word, stored as its least rotation under `1 < 2 < ... < n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    canonical: Word,
}

impl CyclicWord {
    /// The conjugacy class of `w`.
    pub fn new(w: &Word) -> Self {
        let start = least_rotation(w.letters());
        CyclicWord {
            canonical: w.rotation(start),
        }
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn degree(&self) -> u8 {
        self.canonical.degree()
    }

    pub fn into_word(self) -> Word {
        self.canonical
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({})", self.canonical)
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical.serialize(serializer)
    }
}

/// The least rotation of `w`, or with `up_to_isomorphism` the least rotation
/// over all `n!` letter renamings of `w`.
pub fn canonicalize(w: &Word, up_to_isomorphism: bool) -> Result<CyclicWord> {
    if !up_to_isomorphism {
        return Ok(CyclicWord::new(w));
    }
    if w.degree() > MAX_ISO_DEGREE.min(MAX_ORDER_ENUMERATION_DEGREE) {
        return Err(Error::Capacity {
            what: "canonicalization up to isomorphism",
            degree: w.degree(),
            max: MAX_ISO_DEGREE,
        });
    }
    let mut image: Vec<Letter> = (1..=w.degree()).collect();
    let mut best: Option<Vec<Letter>> = None;
    let mut buf = vec![0; w.len()];
    loop {
        for (dst, &a) in buf.iter_mut().zip(w.letters()) {
            *dst = image[a as usize - 1];
        }
        let start = least_rotation(&buf);
        let candidate: Vec<Letter> = buf[start..].iter().chain(&buf[..start]).copied().collect();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
        if !next_permutation(&mut image) {
            break;
        }
    }
    Ok(CyclicWord {
        canonical: Word::from_raw(best.unwrap_or_default(), w.degree()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn rotation_classes() {
        assert_eq!(canonicalize(&w("212313"), false).unwrap().to_string(), "123132");
        assert_eq!(canonicalize(&w("12"), true).unwrap().to_string(), "12");
        assert_eq!(canonicalize(&w("1"), true).unwrap().to_string(), "1");
        let e = Word::parse("-", Some(2)).unwrap();
        assert_eq!(canonicalize(&e, true).unwrap().canonical().len(), 0);
    }

    #[test]
    fn degree_three_ulws_are_isomorphic() {
        let a = canonicalize(&w("323121"), true).unwrap();
        let b = canonicalize(&w("212313"), true).unwrap();
        let c = canonicalize(&w("131232"), true).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.to_string(), "121323");
        let labeled: std::collections::BTreeSet<_> = ["323121", "212313", "131232"]
            .iter()
            .map(|s| canonicalize(&w(s), false).unwrap())
            .collect();
        assert_eq!(labeled.len(), 3);
    }

    #[test]
    fn iso_guard() {
        let seven = w("1234567");
        assert!(matches!(
            canonicalize(&seven, true),
            Err(Error::Capacity { .. })
        ));
        assert!(canonicalize(&seven, false).is_ok());
    }
}
