use crate::error::{Error, Result};
use crate::word::Word;

/// Whether no word of `words` is a proper prefix of another one.
///
/// The input is treated as a set: repeated entries are ignored.
pub fn is_prefix_code(words: &[Word]) -> Result<bool> {
    if words.iter().any(Word::is_empty) {
        return Err(Error::EmptyWord("a prefix code"));
    }
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort();
    sorted.dedup();
    // A word's extensions sort directly after it.
    Ok(sorted.windows(2).all(|p| !p[0].is_prefix_of(p[1])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(words: &[&str]) -> Vec<Word> {
        words.iter().map(|s| Word::parse(s, Some(3)).unwrap()).collect()
    }

    #[test]
    fn prefix_code_examples() {
        assert!(!is_prefix_code(&set(&["12", "122"])).unwrap());
        assert!(is_prefix_code(&set(&["12", "13", "21", "23", "31", "32"])).unwrap());
        assert!(is_prefix_code(&set(&["1"])).unwrap());
        assert!(is_prefix_code(&set(&["1", "1"])).unwrap());
        assert!(!is_prefix_code(&set(&["112", "2", "11"])).unwrap());
        assert!(is_prefix_code(&set(&["-", "1"])).is_err());
    }
}
