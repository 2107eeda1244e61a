use braidnf_core::gathering::{gather_step, is_normal_form, nf_to_word, normal_form};
use braidnf_core::oracle::check_rule_instance;
use braidnf_core::oracle::sampling::{mutate, random_word};
use braidnf_core::{aij, check_b3_parity, word_to_crossings, BraidWord, Error, Generator, Sign};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls
            .into_iter()
            .map(|(i, pos)| Generator::new(i, if pos { Sign::Pos } else { Sign::Neg }))
            .collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn any_word() -> impl Strategy<Value = BraidWord> {
    (3usize..=5).prop_flat_map(|n| word(n, 14))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_sound(w in any_word()) {
        let nf = normal_form(&w).unwrap();
        prop_assert!(check_rule_instance(&w, &nf_to_word(&nf)));
    }

    #[test]
    fn normal_form_output_is_a_fixed_point(w in any_word()) {
        let nf = normal_form(&w).unwrap();
        let v = nf_to_word(&nf);
        prop_assert!(is_normal_form(&v));
        prop_assert_eq!(normal_form(&v).unwrap(), nf);
    }

    #[test]
    fn every_gather_step_is_sound(w in any_word()) {
        let n = w.strands();
        let mut cur = w.free_reduce();
        for k in (3..=n).rev() {
            loop {
                match gather_step(&cur, k) {
                    Ok(step) => {
                        prop_assert!(check_rule_instance(&cur, &step.word), "{} -> {}", cur, step.word);
                        cur = step.word;
                    }
                    Err(Error::AlreadyGathered { .. }) => break,
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                }
            }
            // cut off the finished block before moving to the next strand
            let letters = cur.letters();
            let cut = letters
                .iter()
                .scan(k, |p, g| {
                    let big = g.index == *p || g.index + 1 == *p;
                    if g.index == *p { *p += 1 } else if g.index + 1 == *p { *p -= 1 }
                    Some(big)
                })
                .position(|b| b)
                .unwrap_or(letters.len());
            let head = BraidWord::new(n, letters[..cut].to_vec()).unwrap();
            let tail = BraidWord::new(n, letters[cut..].to_vec()).unwrap();
            prop_assert!(tail.letters().iter().all(|g| g.index < k));
            let _ = tail;
            cur = head;
        }
    }

    #[test]
    fn three_strand_parity(w in word(3, 16)) {
        let nf = normal_form(&w).unwrap();
        prop_assert!(check_b3_parity(&nf).unwrap());
    }

    #[test]
    fn blocks_are_permutation_free_for_pure_products(choices in prop::collection::vec((0usize..10, any::<bool>()), 0..6)) {
        let pairs: Vec<(usize, usize)> = (1..=5).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
        let mut w = BraidWord::identity(5);
        for (c, inv) in choices {
            let (i, j) = pairs[c];
            let g = aij(i, j, 5).unwrap();
            let g = if inv { g.inverse() } else { g };
            w = w.concat(&g, false).unwrap();
        }
        let nf = normal_form(&w).unwrap();
        prop_assert_eq!(nf.m() % 2, 0);
        for b in nf.blocks() {
            prop_assert!(b.is_pure());
        }
    }
}

#[test]
fn relation_moves_do_not_change_the_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for n in [3usize, 4, 5] {
        for _ in 0..150 {
            let w = random_word(n, 12, &mut rng);
            let v = mutate(&w, 6, &mut rng);
            assert_eq!(normal_form(&w).unwrap(), normal_form(&v).unwrap(), "{w} vs {v}");
        }
    }
}

#[test]
fn crossing_highs_of_a_normal_form_never_decrease() {
    let mut rng = ChaCha8Rng::seed_from_u64(405);
    for _ in 0..200 {
        let w = random_word(5, 16, &mut rng);
        let c = word_to_crossings(&nf_to_word(&normal_form(&w).unwrap()));
        assert!(c.items().windows(2).all(|p| p[0].high <= p[1].high));
    }
}
