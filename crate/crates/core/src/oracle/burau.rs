//! Unreduced Burau representation with exact coefficients.
//!
//! `x_i` acts as the identity except for the block `[[1-t, t], [1, 0]]` on
//! rows and columns `i, i+1`.

use std::fmt;

use crate::word::{BraidWord, Generator, Sign};

use super::laurent::LaurentPoly;

/// Largest size for which [`BurauMatrix::determinant`] expands.
pub const MAX_DETERMINANT_SIZE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    n: usize,
    /// Row-major.
    entries: Vec<LaurentPoly>,
}

impl BurauMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = LaurentPoly::one();
        }
        BurauMatrix { n, entries }
    }

    pub fn of_generator(n: usize, g: Generator) -> Self {
        let mut m = Self::identity(n);
        m.right_multiply(g);
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 0-based row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.n + c]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// `self := self * burau(g)`; touches only two columns.
    pub fn right_multiply(&mut self, g: Generator) {
        let n = self.n;
        let (i, j) = (g.index - 1, g.index);
        let one = LaurentPoly::one();
        for r in 0..n {
            let a = &self.entries[r * n + i];
            let b = &self.entries[r * n + j];
            let (na, nb) = match g.sign {
                Sign::Pos => {
                    let t = LaurentPoly::t();
                    (&(a * &(&one - &t)) + b, a * &t)
                }
                Sign::Neg => {
                    let ti = LaurentPoly::t_inv();
                    (b * &ti, a + &(b * &(&one - &ti)))
                }
            };
            self.entries[r * n + i] = na;
            self.entries[r * n + j] = nb;
        }
    }

    pub fn mul(&self, other: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let n = self.n;
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let (x, y) = (self.get(r, k), other.get(k, c));
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                entries[r * n + c] = acc;
            }
        }
        BurauMatrix { n, entries }
    }

    /// Leibniz expansion; `None` above [`MAX_DETERMINANT_SIZE`].
    pub fn determinant(&self) -> Option<LaurentPoly> {
        if self.n > MAX_DETERMINANT_SIZE {
            return None;
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut total = LaurentPoly::zero();
        permute(&mut perm, 0, true, &mut |p, even| {
            let mut term = LaurentPoly::one();
            for (r, &c) in p.iter().enumerate() {
                let e = self.get(r, c);
                if e.is_zero() {
                    return;
                }
                term = &term * e;
            }
            total = if even { &total + &term } else { &total - &term };
        });
        Some(total)
    }
}

/// Visits all permutations of `p[k..]` with their parity.
fn permute(p: &mut Vec<usize>, k: usize, even: bool, visit: &mut dyn FnMut(&[usize], bool)) {
    if k == p.len() {
        visit(p, even);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, if i == k { even } else { !even }, visit);
        p.swap(k, i);
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn burau(w: &BraidWord) -> BurauMatrix {
    let mut m = BurauMatrix::identity(w.strands());
    for &g in w.letters() {
        m.right_multiply(g);
    }
    m
}

/// Necessary condition for equality: permutations and Burau images agree.
pub fn check_rule_instance(before: &BraidWord, after: &BraidWord) -> bool {
    before.strands() == after.strands()
        && before.permutation() == after.permutation()
        && burau(before) == burau(after)
}
