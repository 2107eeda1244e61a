//! Random braids generated directly in normal form.
//!
//! Each block `w_{k+1}` is a random walk of strand `k+1` through the first
//! `k` positions: at each step the walk stops with probability `s`,
//! otherwise it picks uniformly among the letters that cross strand `k+1`
//! and do not undo the previous letter. The generator is ChaCha8, seeded
//! from a `u64`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gathering::NormalForm;
use crate::word::{BraidWord, Generator, Sign};

#[derive(Clone, Debug, PartialEq)]
pub struct RandomParams {
    pub strands: usize,
    /// `s_2, ..., s_N`.
    pub stop: Vec<f64>,
    pub seed: u64,
}

impl RandomParams {
    pub fn new(strands: usize, stop: Vec<f64>, seed: u64) -> Result<Self> {
        let p = RandomParams { strands, stop, seed };
        p.validate()?;
        Ok(p)
    }

    /// Same stop probability for every step.
    pub fn uniform(strands: usize, s: f64, seed: u64) -> Result<Self> {
        Self::new(strands, vec![s; strands.saturating_sub(1)], seed)
    }

    pub fn validate(&self) -> Result<()> {
        if self.strands < 2 {
            return Err(Error::WrongStrandCount {
                expected: 2,
                found: self.strands,
            });
        }
        if self.stop.len() != self.strands - 1 {
            return Err(Error::StopCountMismatch {
                expected: self.strands - 1,
                found: self.stop.len(),
            });
        }
        self.stop.iter().try_for_each(|&s| check_probability(s))
    }
}

fn check_probability(s: f64) -> Result<()> {
    if s > 0.0 && s <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidProbability(s))
    }
}

/// Walk state while building `w_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkState {
    pub k: usize,
    pub letters: Vec<Generator>,
    /// 1-based position of strand `k+1`.
    pub position: usize,
}

impl WalkState {
    pub fn start(k: usize) -> Self {
        WalkState {
            k,
            letters: Vec::new(),
            position: k + 1,
        }
    }

    /// Letters the walk may emit next.
    pub fn allowed(&self) -> Vec<Generator> {
        let p = self.position;
        let last = self.letters.last().copied();
        let mut out = Vec::with_capacity(4);
        for index in [p.wrapping_sub(1), p] {
            if index == 0 || index > self.k {
                continue;
            }
            for sign in [Sign::Pos, Sign::Neg] {
                let g = Generator::new(index, sign);
                if last.is_none_or(|l| !g.is_inverse_of(l)) {
                    out.push(g);
                }
            }
        }
        out
    }

    pub fn push(&mut self, g: Generator) {
        if g.index == self.position {
            self.position += 1;
        } else {
            self.position -= 1;
        }
        self.letters.push(g);
    }
}

/// Random power of `x1`: zero with probability `s`, otherwise a geometric
/// walk away from zero.
pub fn random_power<R: Rng + ?Sized>(s: f64, rng: &mut R) -> Result<i64> {
    check_probability(s)?;
    if rng.random_bool(s) {
        return Ok(0);
    }
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    let mut m = 1i64;
    while !rng.random_bool(s) {
        m += 1;
    }
    Ok(sign * m)
}

/// Random block `w_{k+1}` over `x_1..x_k`, as a word on `strands` strands.
pub fn random_block<R: Rng + ?Sized>(strands: usize, k: usize, s: f64, rng: &mut R) -> Result<BraidWord> {
    check_probability(s)?;
    if k < 2 || k + 1 > strands {
        return Err(Error::StrandOutOfRange {
            strand: k + 1,
            strands,
        });
    }
    let mut state = WalkState::start(k);
    while !rng.random_bool(s) {
        let moves = state.allowed();
        let g = moves[rng.random_range(0..moves.len())];
        state.push(g);
    }
    Ok(BraidWord::new_unchecked(strands, state.letters))
}

pub fn random_braid(params: &RandomParams) -> Result<NormalForm> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    random_braid_with(params.strands, &params.stop, &mut rng)
}

/// As [`random_braid`], drawing from a caller-supplied generator.
pub fn random_braid_with<R: Rng + ?Sized>(strands: usize, stop: &[f64], rng: &mut R) -> Result<NormalForm> {
    let m = random_power(stop[0], rng)?;
    let mut blocks = Vec::with_capacity(strands.saturating_sub(2));
    for k in 2..strands {
        blocks.push(random_block(strands, k, stop[k - 1], rng)?);
    }
    NormalForm::new(strands, m, blocks)
}
