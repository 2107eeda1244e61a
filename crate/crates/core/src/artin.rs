//! The Artin group `A = <a, b | abab = baba>`.
//!
//! Letters are classified by reflections in the symmetry group of a square
//! (vertices 1..4): `a` maps to the diagonal reflection `|1,3|`, `b` to
//! `|1,2||3,4|`. The letter at a position carries the reflection
//! `P y P^-1`, where `P` is the image of its prefix. Letters with
//! reflection `|1,3|` are gathered to the front, giving `a^m w1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gathering::{normal_form, DEFAULT_STEP_BUDGET};
use crate::word::{BraidWord, Generator, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArtinGen {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub generator: ArtinGen,
    pub sign: Sign,
}

impl ArtinLetter {
    pub const fn new(generator: ArtinGen, sign: Sign) -> Self {
        ArtinLetter { generator, sign }
    }

    pub fn inverse(self) -> Self {
        ArtinLetter::new(self.generator, -self.sign)
    }

    pub fn is_inverse_of(self, other: ArtinLetter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c {
            'a' => ArtinLetter::new(ArtinGen::A, Sign::Pos),
            'A' => ArtinLetter::new(ArtinGen::A, Sign::Neg),
            'b' => ArtinLetter::new(ArtinGen::B, Sign::Pos),
            'B' => ArtinLetter::new(ArtinGen::B, Sign::Neg),
            _ => return None,
        })
    }

    pub fn to_char(self) -> char {
        match (self.generator, self.sign) {
            (ArtinGen::A, Sign::Pos) => 'a',
            (ArtinGen::A, Sign::Neg) => 'A',
            (ArtinGen::B, Sign::Pos) => 'b',
            (ArtinGen::B, Sign::Neg) => 'B',
        }
    }

    fn image(self) -> SquareReflection {
        match self.generator {
            ArtinGen::A => SquareReflection::A_BAR,
            ArtinGen::B => SquareReflection::B_BAR,
        }
    }
}

fn a(sign: Sign) -> ArtinLetter {
    ArtinLetter::new(ArtinGen::A, sign)
}

fn b(sign: Sign) -> ArtinLetter {
    ArtinLetter::new(ArtinGen::B, sign)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    letters: Vec<ArtinLetter>,
}

impl ArtinWord {
    pub fn new(letters: Vec<ArtinLetter>) -> Self {
        ArtinWord { letters }
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].is_inverse_of(p[1]))
    }

    pub fn free_reduce(&self) -> ArtinWord {
        let mut out: Vec<ArtinLetter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last().is_some_and(|t| t.is_inverse_of(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ArtinWord::new(out)
    }

    pub fn inverse(&self) -> ArtinWord {
        ArtinWord::new(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ArtinWord::new(letters)
    }

    /// `a^m`.
    pub fn a_power(m: i64) -> ArtinWord {
        let sign = if m < 0 { Sign::Neg } else { Sign::Pos };
        ArtinWord::new(vec![a(sign); m.unsigned_abs() as usize])
    }

    /// Image in the symmetry group of the square.
    pub fn image(&self) -> SquareReflection {
        self.letters
            .iter()
            .fold(SquareReflection::IDENTITY, |p, l| p.compose(l.image()))
    }
}

/// Accepts `a A b B`, whitespace ignored.
impl FromStr for ArtinWord {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| ArtinLetter::from_char(c).ok_or_else(|| format!("unexpected character {c:?} in Artin word")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(ArtinWord::new)
    }
}

/// Space-separated letters; empty word prints nothing.
impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// A symmetry of the square, as the images of vertices 1..4 (stored 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareReflection([u8; 4]);

const NAMES: [(SquareReflection, &str); 8] = [
    (SquareReflection::IDENTITY, "1"),
    (SquareReflection([2, 1, 0, 3]), "|1,3|"),
    (SquareReflection([0, 3, 2, 1]), "|2,4|"),
    (SquareReflection([1, 0, 3, 2]), "|1,2||3,4|"),
    (SquareReflection([1, 2, 3, 0]), "|1,3||1,2||3,4|"),
    (SquareReflection([3, 0, 1, 2]), "|1,2||3,4||1,3|"),
    (SquareReflection([3, 2, 1, 0]), "|1,4||2,3|"),
    (SquareReflection([2, 3, 0, 1]), "|1,3||2,4|"),
];

impl SquareReflection {
    pub const IDENTITY: SquareReflection = SquareReflection([0, 1, 2, 3]);
    pub const A_BAR: SquareReflection = SquareReflection([2, 1, 0, 3]);
    pub const B_BAR: SquareReflection = SquareReflection([1, 0, 3, 2]);
    pub const OTHER_DIAGONAL: SquareReflection = SquareReflection([0, 3, 2, 1]);

    pub fn from_images(images: [u8; 4]) -> Option<Self> {
        let s = SquareReflection(images);
        NAMES.iter().any(|(e, _)| *e == s).then_some(s)
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    /// The eight group elements.
    pub fn all() -> [SquareReflection; 8] {
        NAMES.map(|(e, _)| e)
    }

    /// `self ∘ other`.
    pub fn compose(self, other: SquareReflection) -> SquareReflection {
        SquareReflection(other.0.map(|x| self.0[x as usize]))
    }

    pub fn inverse(self) -> SquareReflection {
        let mut r = [0u8; 4];
        for (i, &x) in self.0.iter().enumerate() {
            r[x as usize] = i as u8;
        }
        SquareReflection(r)
    }

    pub fn conjugate(self, by: SquareReflection) -> SquareReflection {
        by.compose(self).compose(by.inverse())
    }
}

impl fmt::Display for SquareReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = NAMES.iter().find(|(e, _)| e == self).map(|(_, n)| *n).unwrap_or("?");
        f.write_str(name)
    }
}

pub fn reflection_sequence(w: &ArtinWord) -> Vec<SquareReflection> {
    let mut prefix = SquareReflection::IDENTITY;
    w.letters
        .iter()
        .map(|l| {
            let r = l.image().conjugate(prefix);
            prefix = prefix.compose(l.image());
            r
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArtinNormalForm {
    pub m: i64,
    pub w1: ArtinWord,
}

impl ArtinNormalForm {
    pub fn to_word(&self) -> ArtinWord {
        ArtinWord::a_power(self.m).concat(&self.w1)
    }

    pub fn is_valid(&self) -> bool {
        if !self.w1.is_reduced() {
            return false;
        }
        // a^m commutes with |1,3|, so the prefix does not matter here
        !reflection_sequence(&self.w1).contains(&SquareReflection::A_BAR)
    }
}

impl fmt::Display for ArtinNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m = {}; w1 = {}", self.m, self.w1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArtinRule {
    /// `b^e b^e a^d`
    R1,
    /// `a^e b^-e a^e`
    R2,
    /// `a^e b^e a^e`
    R3,
    /// `a^e b^-e a^-e`
    R4,
    /// `a^-e b^-e a^e`
    R5,
}

/// Right-hand side for `z1 z2 v`, with `v` the `a`-letter being gathered.
pub fn match_artin_rule(z1: ArtinLetter, z2: ArtinLetter, v: ArtinLetter) -> Option<(ArtinRule, Vec<ArtinLetter>)> {
    use ArtinGen::{A, B};
    if v.generator != A || z2.generator != B {
        return None;
    }
    let d = v.sign;
    match z1.generator {
        B if z1.sign == z2.sign => {
            let e = z1.sign;
            Some((ArtinRule::R1, vec![a(d), b(d), a(d), b(e), b(e), a(-d), b(-d)]))
        }
        A => {
            let (s, t, u) = (z1.sign, z2.sign, v.sign);
            let e = s;
            Some(if t != s && u == s {
                (
                    ArtinRule::R2,
                    vec![b(e), a(e), b(e), a(e), a(e), b(-e), b(-e), a(-e), b(-e)],
                )
            } else if t == s && u == s {
                (ArtinRule::R3, vec![b(e), a(e), b(e), a(e), b(-e)])
            } else if t != s {
                (ArtinRule::R4, vec![b(-e), a(-e), b(-e), a(e), b(e)])
            } else {
                let e = -s;
                (ArtinRule::R5, vec![b(e), a(e), b(-e), a(-e), b(-e)])
            })
        }
        _ => None,
    }
}

/// One gathering rewrite, reported to observers as full words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinStep {
    pub before: ArtinWord,
    pub after: ArtinWord,
    pub rule: ArtinRule,
}

pub fn normalize_a(w: &ArtinWord) -> Result<ArtinNormalForm> {
    normalize_a_with(w, DEFAULT_STEP_BUDGET, None)
}

/// Stack-based gathering. The observer, when given, sees every rule
/// application as a pair of full words.
pub fn normalize_a_with(
    w: &ArtinWord,
    max_steps: usize,
    mut observer: Option<&mut dyn FnMut(&ArtinStep)>,
) -> Result<ArtinNormalForm> {
    let mut rest: Vec<ArtinLetter> = w.letters.iter().rev().copied().collect();
    let mut done: Vec<ArtinLetter> = Vec::new();
    let mut prefix = vec![SquareReflection::IDENTITY];
    // bigs[i]: letters among done[..i] whose reflection is not |1,3|
    let mut bigs = vec![0usize];
    let mut steps = 0usize;

    while let Some(v) = rest.pop() {
        if done.last().is_some_and(|t| t.is_inverse_of(v)) {
            done.pop();
            prefix.pop();
            bigs.pop();
            continue;
        }
        let p = *prefix.last().unwrap();
        let small = v.image().conjugate(p) == SquareReflection::A_BAR;
        let nbig = *bigs.last().unwrap();
        if small && nbig > 0 {
            steps += 1;
            if steps > max_steps {
                return Err(Error::StepBudgetExceeded { budget: max_steps });
            }
            let n = done.len();
            let (rule, rhs) = (n >= 2)
                .then(|| match_artin_rule(done[n - 2], done[n - 1], v))
                .flatten()
                .ok_or(Error::NoRuleMatches { position: n })?;
            let before = observer.as_ref().map(|_| snapshot(&done, Some(v), &rest));
            for _ in 0..2 {
                done.pop();
                prefix.pop();
                bigs.pop();
            }
            rest.extend(rhs.iter().rev());
            if let (Some(obs), Some(before)) = (observer.as_mut(), before) {
                obs(&ArtinStep {
                    before,
                    after: snapshot(&done, None, &rest),
                    rule,
                });
            }
            continue;
        }
        done.push(v);
        prefix.push(p.compose(v.image()));
        bigs.push(nbig + usize::from(!small));
    }

    let split = bigs.iter().skip(1).position(|&n| n > 0).unwrap_or(done.len());
    let m = done[..split].iter().map(|l| l.sign.as_i32() as i64).sum();
    Ok(ArtinNormalForm {
        m,
        w1: ArtinWord::new(done[split..].to_vec()),
    })
}

fn snapshot(done: &[ArtinLetter], current: Option<ArtinLetter>, rest: &[ArtinLetter]) -> ArtinWord {
    let mut letters = done.to_vec();
    letters.extend(current);
    letters.extend(rest.iter().rev());
    ArtinWord::new(letters)
}

/// `a -> x1`, `b -> x2^2` into the three-strand braid group.
pub fn embed_b3(w: &ArtinWord) -> BraidWord {
    let mut letters = Vec::with_capacity(2 * w.len());
    for l in &w.letters {
        match l.generator {
            ArtinGen::A => letters.push(Generator::new(1, l.sign)),
            ArtinGen::B => letters.extend([Generator::new(2, l.sign); 2]),
        }
    }
    BraidWord::new_unchecked(3, letters)
}

/// Equality in `A`, decided through the braid normal form of the embedding.
pub fn equal_a(u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
    Ok(normal_form(&embed_b3(u))? == normal_form(&embed_b3(v))?)
}
