//! Random inputs and relation-move mutations for the test suites.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::artin::{ArtinGen, ArtinLetter, ArtinWord};
use crate::crossing::{crossings_to_word, word_to_crossings, Crossing, CrossingSequence};
use crate::word::{BraidWord, Generator, Sign};

use super::search::neighbours;

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

pub fn random_generator<R: Rng + ?Sized>(strands: usize, rng: &mut R) -> Generator {
    Generator::new(rng.random_range(1..strands), random_sign(rng))
}

/// Uniform letters, not necessarily reduced.
pub fn random_word<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let letters = (0..len).map(|_| random_generator(strands, rng)).collect();
    BraidWord::new(strands, letters).expect("indices drawn in range")
}

pub fn random_reduced_word<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let mut letters: Vec<Generator> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = random_generator(strands, rng);
        if letters.last().is_none_or(|l| !l.is_inverse_of(g)) {
            letters.push(g);
        }
    }
    BraidWord::new(strands, letters).expect("indices drawn in range")
}

/// A braid relator instance at random indices: `x_i x_{i+1} x_i (x_{i+1} x_i x_{i+1})^-1`
/// or a commutator of distant generators, with random sign.
fn random_relator<R: Rng + ?Sized>(strands: usize, rng: &mut R) -> Vec<Generator> {
    let sign = random_sign(rng);
    let distant = strands >= 4 && rng.random_bool(0.5);
    let (lhs, rhs) = if distant {
        let i = rng.random_range(1..strands - 2);
        let j = rng.random_range(i + 2..strands);
        let (a, b) = (Generator::new(i, sign), Generator::new(j, sign));
        (vec![a, b], vec![b, a])
    } else if strands >= 3 {
        let i = rng.random_range(1..strands - 1);
        let (a, b) = (Generator::new(i, sign), Generator::new(i + 1, sign));
        (vec![a, b, a], vec![b, a, b])
    } else {
        let a = Generator::new(1, sign);
        (vec![a], vec![a])
    };
    let (lhs, rhs) = if rng.random_bool(0.5) { (rhs, lhs) } else { (lhs, rhs) };
    lhs.into_iter().chain(rhs.iter().rev().map(|g| g.inverse())).collect()
}

/// One relation move: an in-place relation or cancellation when the word
/// offers one, otherwise insertion of a trivial pair or relator.
pub fn relation_move<R: Rng + ?Sized>(w: &BraidWord, rng: &mut R) -> BraidWord {
    let strands = w.strands();
    let mut letters = w.letters().to_vec();
    match rng.random_range(0..3) {
        0 => {
            let local = neighbours(&letters, strands, 0);
            if let Some(v) = local.choose(rng) {
                letters = v.clone();
            } else {
                insert_pair(&mut letters, strands, rng);
            }
        }
        1 => insert_pair(&mut letters, strands, rng),
        _ => {
            let at = rng.random_range(0..=letters.len());
            letters.splice(at..at, random_relator(strands, rng));
        }
    }
    BraidWord::new(strands, letters).expect("moves keep indices in range")
}

fn insert_pair<R: Rng + ?Sized>(letters: &mut Vec<Generator>, strands: usize, rng: &mut R) {
    let g = random_generator(strands, rng);
    let at = rng.random_range(0..=letters.len());
    letters.splice(at..at, [g, g.inverse()]);
}

pub fn mutate<R: Rng + ?Sized>(w: &BraidWord, moves: usize, rng: &mut R) -> BraidWord {
    (0..moves).fold(w.clone(), |acc, _| relation_move(&acc, rng))
}

pub fn random_crossings<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> CrossingSequence {
    word_to_crossings(&random_word(strands, len, rng))
}

/// Replaces one crossing by a pair of strands that are not adjacent at that
/// point, so the result is always invalid. Needs `strands >= 3` and a
/// non-empty sequence.
pub fn invalid_mutation<R: Rng + ?Sized>(c: &CrossingSequence, rng: &mut R) -> Option<CrossingSequence> {
    if c.strands() < 3 || c.is_empty() {
        return None;
    }
    let at = rng.random_range(0..c.len());
    let prefix = CrossingSequence::new(c.strands(), c.items()[..at].to_vec()).ok()?;
    let arrangement = crossings_to_word(&prefix).ok()?.permutation();
    let labels = arrangement.labels();
    let mut pairs = Vec::new();
    for p in 0..labels.len() {
        for q in p + 2..labels.len() {
            pairs.push((labels[p], labels[q]));
        }
    }
    let &(a, b) = pairs.choose(rng)?;
    let mut items = c.items().to_vec();
    items[at] = Crossing::between(a, b, random_sign(rng));
    CrossingSequence::new(c.strands(), items).ok()
}

pub fn random_artin_word<R: Rng + ?Sized>(len: usize, rng: &mut R) -> ArtinWord {
    let mut letters: Vec<ArtinLetter> = Vec::with_capacity(len);
    while letters.len() < len {
        let gen = if rng.random_bool(0.5) { ArtinGen::A } else { ArtinGen::B };
        let l = ArtinLetter::new(gen, random_sign(rng));
        if letters.last().is_none_or(|t| !t.is_inverse_of(l)) {
            letters.push(l);
        }
    }
    ArtinWord::new(letters)
}

/// One move in `A`: insertion of a trivial pair or of a conjugate-free copy
/// of the relator `abab (baba)^-1` (either orientation and sign), or an
/// in-place `abab <-> baba` substitution when one is present.
pub fn artin_relation_move<R: Rng + ?Sized>(w: &ArtinWord, rng: &mut R) -> ArtinWord {
    let mut letters = w.letters().to_vec();
    let sign = random_sign(rng);
    let a = ArtinLetter::new(ArtinGen::A, sign);
    let b = ArtinLetter::new(ArtinGen::B, sign);
    let abab = [a, b, a, b];
    let baba = [b, a, b, a];
    match rng.random_range(0..3) {
        0 => {
            let sites: Vec<usize> = (0..letters.len().saturating_sub(3))
                .filter(|&i| {
                    let win = &letters[i..i + 4];
                    win == abab || win == baba || win == inv4(abab) || win == inv4(baba)
                })
                .collect();
            if let Some(&i) = sites.choose(rng) {
                let win: Vec<ArtinLetter> = letters[i..i + 4].iter().map(|l| swap_ab(*l)).collect();
                letters.splice(i..i + 4, win);
                return ArtinWord::new(letters);
            }
            insert_artin_pair(&mut letters, rng);
        }
        1 => insert_artin_pair(&mut letters, rng),
        _ => {
            let (x, y) = if rng.random_bool(0.5) { (abab, baba) } else { (baba, abab) };
            let relator: Vec<ArtinLetter> = x.into_iter().chain(y.iter().rev().map(|l| l.inverse())).collect();
            let at = rng.random_range(0..=letters.len());
            letters.splice(at..at, relator);
        }
    }
    ArtinWord::new(letters)
}

fn inv4(w: [ArtinLetter; 4]) -> [ArtinLetter; 4] {
    [w[3].inverse(), w[2].inverse(), w[1].inverse(), w[0].inverse()]
}

/// `abab <-> baba` on a window that alternates with one sign.
fn swap_ab(l: ArtinLetter) -> ArtinLetter {
    let gen = match l.generator {
        ArtinGen::A => ArtinGen::B,
        ArtinGen::B => ArtinGen::A,
    };
    ArtinLetter::new(gen, l.sign)
}

fn insert_artin_pair<R: Rng + ?Sized>(letters: &mut Vec<ArtinLetter>, rng: &mut R) {
    let gen = if rng.random_bool(0.5) { ArtinGen::A } else { ArtinGen::B };
    let l = ArtinLetter::new(gen, random_sign(rng));
    let at = rng.random_range(0..=letters.len());
    letters.splice(at..at, [l, l.inverse()]);
}

pub fn artin_mutate<R: Rng + ?Sized>(w: &ArtinWord, moves: usize, rng: &mut R) -> ArtinWord {
    (0..moves).fold(w.clone(), |acc, _| artin_relation_move(&acc, rng))
}
