use braidnf_core::artin::{normalize_a_with, reflection_sequence, ArtinStep, SquareReflection};
use braidnf_core::gathering::DEFAULT_STEP_BUDGET;
use braidnf_core::oracle::sampling::{artin_mutate, random_artin_word};
use braidnf_core::{embed_b3, equal_a, normalize_a, ArtinWord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn mutations_keep_the_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let w = random_artin_word(10, &mut rng);
        let v = artin_mutate(&w, 5, &mut rng);
        assert_eq!(normalize_a(&w).unwrap(), normalize_a(&v).unwrap(), "{w} vs {v}");
    }
}

#[test]
fn outputs_are_valid_and_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..300 {
        let w = random_artin_word(12, &mut rng);
        let nf = normalize_a(&w).unwrap();
        assert!(nf.is_valid(), "{nf}");
        assert!(equal_a(&w, &nf.to_word()).unwrap());
        assert_eq!(normalize_a(&nf.to_word()).unwrap(), nf);
    }
}

#[test]
fn steps_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let w = random_artin_word(10, &mut rng);
        let mut bad = Vec::new();
        let mut check = |s: &ArtinStep| {
            if !equal_a(&s.before, &s.after).unwrap() {
                bad.push(s.clone());
            }
        };
        normalize_a_with(&w, DEFAULT_STEP_BUDGET, Some(&mut check)).unwrap();
        assert!(bad.is_empty(), "{:?}", bad);
    }
}

#[test]
fn reflections_multiply_to_the_image() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let w = random_artin_word(9, &mut rng);
        let product = reflection_sequence(&w)
            .iter()
            .rev()
            .fold(SquareReflection::IDENTITY, |acc, r| acc.compose(*r));
        assert_eq!(product, w.image());
        for (r, l) in reflection_sequence(&w).iter().zip(w.letters()) {
            if l.generator == braidnf_core::artin::ArtinGen::A {
                assert!(*r == SquareReflection::A_BAR || *r == SquareReflection::OTHER_DIAGONAL);
            }
        }
    }
}

#[test]
fn embedding_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..100 {
        let u = random_artin_word(6, &mut rng);
        let v = random_artin_word(6, &mut rng);
        assert_eq!(embed_b3(&u.concat(&v)), embed_b3(&u).concat(&embed_b3(&v), false).unwrap());
        assert_eq!(embed_b3(&u.inverse()), embed_b3(&u).inverse());
    }
    assert!(equal_a(&"abab".parse::<ArtinWord>().unwrap(), &"baba".parse().unwrap()).unwrap());
}
