use pmatch::param::{compare_pp, compare_pt, LastOccurrenceWindow};
use pmatch::textgen::{gen_pattern, gen_uniform_text};
use pmatch::{
    bijection_oracle, build_p_failure, naive_p_search, p_equivalent, pkmp_search, prev_encode,
    Alphabet, ComparisonStats, Error, Pattern, Symbol, Text,
};
use proptest::prelude::*;

fn all_strings(sigma: u16, len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..sigma).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

fn sliding_oracle(t: &[Symbol], p: &[Symbol]) -> Vec<usize> {
    if p.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - p.len())
        .filter(|&j| bijection_oracle(p, &t[j..j + p.len()]).unwrap())
        .collect()
}

fn brute_p_failure(p: &[Symbol]) -> Vec<usize> {
    (1..=p.len())
        .map(|i| {
            (0..i)
                .rev()
                .find(|&l| bijection_oracle(&p[..l], &p[i - l..i]).unwrap())
                .unwrap()
        })
        .collect()
}

#[test]
fn p_equivalent_matches_bijection_oracle_exhaustively() {
    for len in 0..=6 {
        let strings = all_strings(3, len);
        for a in &strings {
            for b in &strings {
                assert_eq!(
                    p_equivalent(a, b).unwrap(),
                    bijection_oracle(a, b).unwrap(),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }
}

#[test]
fn p_equivalent_rejects_unequal_lengths() {
    assert!(matches!(
        p_equivalent(&[0, 1], &[0]),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn compare_pt_checks_its_arguments() {
    let pattern = Pattern::from_letters("AB").unwrap();
    let a = prev_encode(&pattern);
    let text = [0, 0];
    let mut window = LastOccurrenceWindow::new(Alphabet::LATIN, 2).unwrap();
    window.push(0);
    let mut stats = ComparisonStats::default();
    assert!(matches!(
        compare_pt(3, 0, &a, &text, &window, &mut stats),
        Err(Error::InvalidArgument(_))
    ));
    // window has only seen index 0
    assert!(matches!(
        compare_pt(2, 1, &a, &text, &window, &mut stats),
        Err(Error::Internal(_))
    ));
    window.push(0);
    assert!(!compare_pt(2, 1, &a, &text, &window, &mut stats).unwrap());
    assert_eq!(stats.symbol_comparisons, 1);
    assert_eq!(stats.aux_lookups, 1);
}

#[test]
fn compare_pp_rejects_j_above_i() {
    let p = Pattern::from_letters("ABA").unwrap();
    let a = prev_encode(&p);
    assert!(compare_pp(3, 1, p.symbols(), &a).unwrap());
    assert!(matches!(
        compare_pp(1, 2, p.symbols(), &a),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        compare_pp(2, 0, p.symbols(), &a),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn naive_spends_more_comparisons_than_automaton_on_random_text() {
    for sigma in [2, 4, 16, 80] {
        for (s, m) in [(1, 8), (2, 32), (3, 256)] {
            let text = gen_uniform_text(20_000, sigma, s).unwrap();
            let pattern = gen_pattern(m, sigma, 100 + s).unwrap();
            let naive = naive_p_search(&text, &pattern).unwrap();
            let auto = pkmp_search(&text, &pattern).unwrap();
            assert_eq!(naive.occurrences, auto.occurrences);
            assert!(
                naive.stats.symbol_comparisons > auto.stats.symbol_comparisons,
                "sigma={sigma} m={m}"
            );
            assert!(auto.stats.symbol_comparisons <= 2 * text.len() as u64);
        }
    }
}

fn inputs(max_n: usize) -> impl Strategy<Value = (u32, Vec<Symbol>, Vec<Symbol>)> {
    (2..=6u32).prop_flat_map(move |sigma| {
        let sym = 0..sigma as Symbol;
        (
            Just(sigma),
            prop::collection::vec(sym.clone(), 1..=max_n),
            prop::collection::vec(sym, 1..=10),
        )
    })
}

proptest! {
    #[test]
    fn searches_agree_with_sliding_oracle((sigma, t, p) in inputs(200)) {
        let a = Alphabet::new(sigma).unwrap();
        let text = Text::new(a, t.clone()).unwrap();
        let pattern = Pattern::new(a, p.clone()).unwrap();
        let expected = sliding_oracle(&t, &p);
        prop_assert_eq!(&naive_p_search(&text, &pattern).unwrap().occurrences, &expected);
        let auto = pkmp_search(&text, &pattern).unwrap();
        prop_assert_eq!(&auto.occurrences, &expected);
        prop_assert!(auto.stats.symbol_comparisons <= 2 * t.len() as u64);
    }

    #[test]
    fn renaming_the_text_changes_nothing((sigma, t, p) in inputs(120), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let a = Alphabet::new(sigma).unwrap();
        let mut perm: Vec<Symbol> = (0..sigma as Symbol).collect();
        perm.shuffle(&mut pmatch::textgen::rng(seed));
        let renamed: Vec<Symbol> = t.iter().map(|&c| perm[c as usize]).collect();
        let pattern = Pattern::new(a, p).unwrap();
        let before = Text::new(a, t).unwrap();
        let after = Text::new(a, renamed).unwrap();
        prop_assert_eq!(
            pkmp_search(&before, &pattern).unwrap().occurrences,
            pkmp_search(&after, &pattern).unwrap().occurrences
        );
        prop_assert_eq!(
            naive_p_search(&before, &pattern).unwrap().occurrences,
            naive_p_search(&after, &pattern).unwrap().occurrences
        );
    }

    #[test]
    fn p_equivalence_is_an_equivalence(
        x in prop::collection::vec(0..4u16, 0..12),
        perm1 in Just((0..4u16).collect::<Vec<_>>()).prop_shuffle(),
        perm2 in Just((0..4u16).collect::<Vec<_>>()).prop_shuffle(),
        z in prop::collection::vec(0..4u16, 12),
    ) {
        let y: Vec<u16> = x.iter().map(|&c| perm1[c as usize]).collect();
        let w: Vec<u16> = y.iter().map(|&c| perm2[c as usize]).collect();
        prop_assert!(p_equivalent(&x, &x).unwrap());
        prop_assert!(p_equivalent(&x, &y).unwrap() && p_equivalent(&y, &x).unwrap());
        prop_assert!(p_equivalent(&x, &w).unwrap());
        let z = &z[..x.len()];
        prop_assert_eq!(p_equivalent(&x, z).unwrap(), p_equivalent(z, &x).unwrap());
    }

    #[test]
    fn p_failure_matches_brute_force(p in prop::collection::vec(0..4u16, 1..40)) {
        let pattern = Pattern::new(Alphabet::new(4).unwrap(), p.clone()).unwrap();
        prop_assert_eq!(build_p_failure(&pattern).as_slice().to_vec(), brute_p_failure(&p));
    }
}
