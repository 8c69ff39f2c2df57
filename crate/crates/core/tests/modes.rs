//! The three verification modes agree.

use ulw::{enumerate_ulws, is_ulw, VerifyMode, Word};

fn verdicts(w: &Word) -> [bool; 3] {
    VerifyMode::ALL.map(|mode| is_ulw(w, mode).unwrap().is_ulw)
}

#[test]
fn all_words_of_length_six_over_three_letters() {
    let mut ulws = 0;
    for code in 0..729u32 {
        let letters: Vec<u8> = (0..6).rev().map(|k| (code / 3u32.pow(k) % 3) as u8 + 1).collect();
        let w = Word::new(letters, 3).unwrap();
        let v = verdicts(&w);
        assert!(v.iter().all(|&b| b == v[0]), "{w}: {v:?}");
        ulws += v[0] as usize;
    }
    // three cyclic classes of six rotations each
    assert_eq!(ulws, 18);
}

#[test]
fn degree_four_census_and_perturbations() {
    let census = enumerate_ulws(4).unwrap();
    for w in &census.canonical_words {
        assert_eq!(verdicts(w.canonical()), [true; 3], "{w}");
        // swapping two adjacent letters gives a word every mode must judge alike
        let mut letters = w.canonical().letters().to_vec();
        letters.swap(3, 4);
        let v = verdicts(&Word::new(letters, 4).unwrap());
        assert!(v.iter().all(|&b| b == v[0]), "{w}: {v:?}");
    }
}

#[test]
fn rejected_examples_agree() {
    for s in [
        "123412431324134214231432",
        "123421323121424314324134",
        "121323",
        "123123",
        "1",
        "21",
        "11",
    ] {
        let w: Word = s.parse().unwrap();
        let v = verdicts(&w);
        assert!(v.iter().all(|&b| b == v[0]), "{s}: {v:?}");
    }
}

#[test]
fn short_words_over_larger_alphabets() {
    for (s, n) in [("1", 2), ("12", 3), ("123", 4), ("1", 1), ("12", 2)] {
        let w = Word::parse(s, Some(n)).unwrap();
        let v = verdicts(&w);
        assert!(v.iter().all(|&b| b == v[0]), "{s}/{n}: {v:?}");
        assert_eq!(v[0], s.len() == ulw::factorial(n as usize), "{s}/{n}");
    }
}
