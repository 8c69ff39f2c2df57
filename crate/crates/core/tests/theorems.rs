//! Structural properties checked on every ULW of degrees 3 and 4.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use ulw::jackson::JacksonGraph;
use ulw::lexcode::{hamiltonian_census, validate_lex_code};
use ulw::structure::{check_stretch_closure, stretch_extensions, Ulw};
use ulw::{
    canonicalize, enumerate_ulws, factorial, is_lyndon, is_ulw, CyclicWord, LexCode, UlwCensus,
    VerifyMode, Word,
};

fn census(n: u8) -> &'static UlwCensus {
    static C3: OnceLock<UlwCensus> = OnceLock::new();
    static C4: OnceLock<UlwCensus> = OnceLock::new();
    match n {
        3 => C3.get_or_init(|| enumerate_ulws(3).unwrap()),
        4 => C4.get_or_init(|| enumerate_ulws(4).unwrap()),
        _ => unreachable!(),
    }
}

fn census_words() -> impl Iterator<Item = &'static Word> {
    [3, 4]
        .into_iter()
        .flat_map(|n| census(n).canonical_words.iter().map(CyclicWord::canonical))
}

fn distinct_cyclic_factors(w: &Word) -> BTreeSet<Word> {
    (1..=w.len())
        .flat_map(|len| (0..w.len()).map(move |i| w.cyclic_factor(i, len)))
        .collect()
}

#[test]
fn occurrence_counts_follow_the_alphabet_size() {
    for w in census_words() {
        let n = w.degree() as usize;
        for u in distinct_cyclic_factors(w) {
            let count = w.count_occurrences(&u, true).unwrap();
            assert_eq!(count, factorial(n - u.alphabet_size()), "{w}: {u}");
        }
    }
}

#[test]
fn every_conjugate_is_lyndon_for_its_defined_order() {
    for w in census_words() {
        for c in w.conjugates().unwrap() {
            let order = c.defined_order().to_total().expect("total order");
            assert!(is_lyndon(&c, &order).unwrap(), "{w}: {c}");
        }
    }
}

#[test]
fn factors_missing_a_letter_have_one_stretch() {
    for w in census_words() {
        for u in distinct_cyclic_factors(w) {
            if u.alphabet_size() < w.degree() as usize {
                let stretches = stretch_extensions(w, &u).unwrap();
                assert_eq!(stretches.len(), 1, "{w}: {u} -> {stretches:?}");
            }
        }
    }
}

#[test]
fn stretch_closure_and_square_freeness() {
    for w in census_words() {
        assert!(check_stretch_closure(w), "{w}");
        let p = w.predicates().unwrap();
        assert!(p.cyclically_square_free && p.primitive, "{w}");
    }
}

#[test]
fn census_is_closed_under_reversal() {
    for n in [3, 4] {
        let set: BTreeSet<&CyclicWord> = census(n).canonical_words.iter().collect();
        for w in &set {
            let r = CyclicWord::new(&w.canonical().reversed());
            assert!(set.contains(&r), "{w}");
        }
    }
}

#[test]
fn census_words_pass_every_mode() {
    for w in census_words() {
        for mode in VerifyMode::ALL {
            assert!(is_ulw(w, mode).unwrap().is_ulw, "{w} {mode}");
        }
    }
}

#[test]
fn jackson_words_are_the_eulerian_words() {
    for n in [3, 4] {
        let graph = JacksonGraph::new(n).unwrap();
        let eulerian: BTreeSet<CyclicWord> = graph
            .eulerian_cycles()
            .unwrap()
            .map(|c| CyclicWord::new(&graph.word_from_cycle(&c).unwrap()))
            .collect();
        let jackson: BTreeSet<CyclicWord> = census(n)
            .canonical_words
            .iter()
            .filter(|w| Ulw::new(w.canonical().clone()).unwrap().is_jackson_type())
            .cloned()
            .collect();
        assert_eq!(eulerian, jackson, "degree {n}");
    }
}

/// Whether some cyclic factor `asa` has `a ∉ alp(s)` and `|alp(s)| < n - 2`.
fn has_short_gap(w: &Word) -> bool {
    let n = w.degree() as usize;
    let letters = w.letters();
    let len = letters.len();
    (0..len).any(|i| {
        let a = letters[i];
        let gap = (1..len).find(|&d| letters[(i + d) % len] == a).unwrap();
        let s = w.cyclic_factor(i + 1, gap - 1);
        s.alphabet_size() < n - 2
    })
}

#[test]
fn short_gaps_only_in_non_jackson_words() {
    for w in &census(4).canonical_words {
        let jackson = Ulw::new(w.canonical().clone()).unwrap().is_jackson_type();
        assert_eq!(has_short_gap(w.canonical()), !jackson, "{w}");
    }
}

#[test]
fn jackson_type_is_invariant_under_renaming() {
    let classes = ulw::classify_ulws(census(4)).unwrap();
    for class in &classes.classes {
        for member in &class.members {
            let jackson = Ulw::new(member.canonical().clone()).unwrap().is_jackson_type();
            assert_eq!(jackson, class.jackson, "{member}");
        }
    }
}

#[test]
fn mt_is_a_hamiltonian_lex_code_and_round_trips() {
    for w in census_words() {
        let ulw = Ulw::new(w.clone()).unwrap();
        let mt = ulw.mt();
        let n = w.degree();
        assert!(validate_lex_code(&mt, n).unwrap().valid, "{w}");
        assert!(ulw::is_prefix_code(&mt).unwrap());
        assert_eq!(mt.len(), factorial(n as usize));
        assert!(mt.iter().all(|x| x.len() <= factorial(n as usize)));
        let (code, cycle) = LexCode::from_ulw(&ulw).unwrap();
        assert!(code.sx_digraph().find_hamiltonian_cycle().is_some());
        let back = code.synthesize_ulw(&cycle).unwrap();
        assert_eq!(CyclicWord::new(&back), CyclicWord::new(w));
    }
}

#[test]
fn three_generation_paths_agree_at_degree_three() {
    let direct: BTreeSet<CyclicWord> = census(3).canonical_words.iter().cloned().collect();
    let graph = JacksonGraph::new(3).unwrap();
    let jackson: BTreeSet<CyclicWord> = graph
        .eulerian_cycles()
        .unwrap()
        .map(|c| CyclicWord::new(&graph.word_from_cycle(&c).unwrap()))
        .collect();
    let lexcode = hamiltonian_census(3).unwrap().words;
    assert_eq!(direct, jackson);
    assert_eq!(direct, lexcode);
}

#[test]
fn lexcode_search_matches_the_census_at_degree_four() {
    let census4 = census(4);
    let h = hamiltonian_census(4).unwrap();
    let direct: BTreeSet<CyclicWord> = census4.canonical_words.iter().cloned().collect();
    assert_eq!(h.words, direct);
    for code in &h.codes {
        assert!(validate_lex_code(code.words(), 4).unwrap().valid);
        assert!(code.max_word_len() <= 24);
    }
    for w in &h.words {
        assert!(is_ulw(w.canonical(), VerifyMode::Counting).unwrap().is_ulw);
    }
}

#[test]
fn iso_canonical_forms_are_stable() {
    for w in &census(4).canonical_words {
        let c = canonicalize(w.canonical(), true).unwrap();
        assert_eq!(canonicalize(c.canonical(), true).unwrap(), c);
        let r = canonicalize(&w.canonical().rotation(5), true).unwrap();
        assert_eq!(r, c);
    }
}
