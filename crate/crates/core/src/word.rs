//! Braid words over the Artin generators `x_1, ..., x_{N-1}` of `B_N`.
//!
//! A [`BraidWord`] always carries its strand count `N`. Equality is
//! letter-for-letter; equality in the group is decided by
//! [`crate::gathering::normal_form`].

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn of(value: i64) -> Option<Sign> {
        match value.signum() {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// The letter `x_index^sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub index: usize,
    pub sign: Sign,
}

impl Generator {
    pub const fn new(index: usize, sign: Sign) -> Self {
        Generator { index, sign }
    }

    pub const fn pos(index: usize) -> Self {
        Generator::new(index, Sign::Pos)
    }

    pub const fn neg(index: usize) -> Self {
        Generator::new(index, Sign::Neg)
    }

    /// Token `t` stands for `x_{|t|}^{sign(t)}`.
    pub fn from_int(token: i64) -> Option<Self> {
        let sign = Sign::of(token)?;
        Some(Generator::new(token.unsigned_abs() as usize, sign))
    }

    pub fn to_int(self) -> i64 {
        self.index as i64 * self.sign.as_i32() as i64
    }

    pub fn inverse(self) -> Self {
        Generator::new(self.index, -self.sign)
    }

    pub fn is_inverse_of(self, other: Generator) -> bool {
        self.index == other.index && self.sign != other.sign
    }

    /// Distant generators commute: `|i - j| >= 2`.
    pub fn commutes_with(self, other: Generator) -> bool {
        self.index.abs_diff(other.index) >= 2
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "x{}", self.index),
            Sign::Neg => write!(f, "x{}^-1", self.index),
        }
    }
}

/// Bottom-of-diagram arrangement: entry `p` (0-based here, position `p + 1`
/// in the diagram) is the label of the strand occupying that position, with
/// strands labelled by their top positions `1..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrangement(Vec<usize>);

impl Arrangement {
    pub fn identity(strands: usize) -> Self {
        Arrangement((1..=strands).collect())
    }

    pub fn from_labels(labels: Vec<usize>) -> Option<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l] {
                return None;
            }
            seen[l] = true;
        }
        Some(Arrangement(labels))
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    /// Label at 1-based `position`.
    pub fn at(&self, position: usize) -> usize {
        self.0[position - 1]
    }

    /// 1-based position of strand `label`.
    pub fn position_of(&self, label: usize) -> Option<usize> {
        self.0.iter().position(|&l| l == label).map(|p| p + 1)
    }

    /// Exchange the strands at positions `p` and `p + 1` (1-based).
    pub fn swap_adjacent(&mut self, p: usize) {
        self.0.swap(p - 1, p);
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &l)| l == p + 1)
    }

    /// Arrangement after running `self`'s braid and then `next`'s.
    pub fn then(&self, next: &Arrangement) -> Arrangement {
        Arrangement(next.0.iter().map(|&p| self.0[p - 1]).collect())
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|g| g.index == 0 || g.index >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn new_unchecked(strands: usize, letters: Vec<Generator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.index >= 1 && g.index < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_ints(strands: usize, tokens: &[i64]) -> Result<Self> {
        let letters = tokens
            .iter()
            .map(|&t| Generator::from_int(t).ok_or(Error::ZeroToken))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn to_ints(&self) -> Vec<i64> {
        self.letters.iter().map(|g| g.to_int()).collect()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.letters
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

    /// Deletes adjacent `x_i^e x_i^-e` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord::new_unchecked(self.strands, free_reduce_letters(&self.letters))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::new_unchecked(
            self.strands,
            self.letters.iter().rev().map(|g| g.inverse()).collect(),
        )
    }

    pub fn concat(&self, other: &BraidWord, reduce: bool) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let word = BraidWord::new_unchecked(self.strands, letters);
        Ok(if reduce { word.free_reduce() } else { word })
    }

    pub fn permutation(&self) -> Arrangement {
        let mut arr = Arrangement::identity(self.strands);
        for g in &self.letters {
            arr.swap_adjacent(g.index);
        }
        arr
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

impl fmt::Display for BraidWord {
    /// Human-readable `x`-notation with runs collapsed, e.g. `x1 x3 x2 x1^-2 x2^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == g {
                j += 1;
            }
            let exp = (j - i) as i64 * g.sign.as_i32() as i64;
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "x{}", g.index)?;
            } else {
                write!(f, "x{}^{}", g.index, exp)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Single left-to-right pass with a pending-output stack.
pub(crate) fn free_reduce_letters(letters: &[Generator]) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::with_capacity(letters.len());
    for &g in letters {
        match out.last() {
            Some(&top) if top.is_inverse_of(g) => {
                out.pop();
            }
            _ => out.push(g),
        }
    }
    out
}

/// Artin's pure-braid generator `A_{i,j}`, represented by
/// `x_{j-1} ... x_{i+1} x_i^2 x_{i+1}^-1 ... x_{j-1}^-1`.
pub fn aij(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= strands) {
        return Err(Error::InvalidStrandPair {
            low: i,
            high: j,
            strands,
        });
    }
    let mut letters: Vec<Generator> = (i + 1..j).rev().map(Generator::pos).collect();
    letters.push(Generator::pos(i));
    letters.push(Generator::pos(i));
    letters.extend((i + 1..j).map(Generator::neg));
    Ok(BraidWord::new_unchecked(strands, letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, t: &[i64]) -> BraidWord {
        BraidWord::from_ints(n, t).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w(2, &[1, -1]).free_reduce().is_empty());
        let already = w(4, &[3, -2, -2, 1]);
        assert_eq!(already.free_reduce(), already);
        assert_eq!(w(4, &[1, 2, -2, -1, 3]).free_reduce(), w(4, &[3]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w(4, &[3, -2, -2, 1]).inverse(), w(4, &[-1, 2, 2, -3]));
        assert_eq!(w(3, &[]).inverse(), w(3, &[]));
        assert_eq!(w(2, &[1]).inverse(), w(2, &[-1]));
    }

    #[test]
    fn concat_examples() {
        let x1 = w(3, &[1]);
        assert!(x1.concat(&w(3, &[-1]), true).unwrap().is_empty());
        assert_eq!(x1.concat(&w(3, &[2]), false).unwrap(), w(3, &[1, 2]));
        assert_eq!(
            w(3, &[1, 2]).concat(&w(3, &[-2]), true).unwrap(),
            w(3, &[1])
        );
        assert_eq!(
            x1.concat(&w(4, &[1]), false),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn permutation_examples() {
        assert!(w(5, &[]).permutation().is_identity());
        assert_eq!(w(3, &[1, 2, 1]).permutation().labels(), &[3, 2, 1]);
        assert_eq!(w(4, &[3, -2, -2, 1]).permutation().labels(), &[2, 1, 4, 3]);
    }

    #[test]
    fn purity() {
        assert!(w(3, &[]).is_pure());
        assert!(!w(3, &[1]).is_pure());
        assert!(w(3, &[2, 1, 1, -2]).is_pure());
    }

    #[test]
    fn aij_examples() {
        assert_eq!(aij(3, 4, 4).unwrap(), w(4, &[3, 3]));
        assert_eq!(aij(1, 3, 3).unwrap(), w(3, &[2, 1, 1, -2]));
        assert!(aij(1, 4, 4).unwrap().is_pure());
        assert!(aij(2, 2, 4).is_err());
        assert!(aij(1, 5, 4).is_err());
    }

    #[test]
    fn rejects_out_of_range_letters() {
        assert_eq!(
            BraidWord::from_ints(3, &[3]),
            Err(Error::IndexOutOfRange {
                index: 3,
                strands: 3
            })
        );
        assert_eq!(BraidWord::from_ints(3, &[0]), Err(Error::ZeroToken));
    }

    #[test]
    fn display_collapses_runs() {
        assert_eq!(w(4, &[1, 3, 2, -1, -1, -2]).to_string(), "x1 x3 x2 x1^-2 x2^-1");
        assert_eq!(w(4, &[]).to_string(), "1");
    }
}
