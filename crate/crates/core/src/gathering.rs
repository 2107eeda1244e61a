//! The gathering process and the geometric normal form
//! `w = x1^m · w_3 · w_4 ⋯ w_N`, where every crossing of the block `w_k`
//! involves strand `k`.
//!
//! Gathering strand `k` means moving every crossing that does not involve
//! strand `k` ("small") ahead of every crossing that does ("big"). A word is
//! cut as `T·U·V·W`: `T` small, `U` a nonempty run of big letters, `V` the
//! first small letter after `U`. Then `V` either commutes past the last
//! letter of `U`, or the last two letters of `U` together with `V` match one
//! of eight patterns and are replaced by an equal word in which the small
//! crossing comes first. Repeating this for `k = N, N-1, ..., 3` yields the
//! normal form.

use std::fmt;

use crate::crossing::word_to_crossings;
use crate::error::{Error, Result};
use crate::word::{BraidWord, Generator, Sign};

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GatherOptions {
    /// Rule applications allowed per strand before giving up.
    pub max_steps: usize,
}

impl Default for GatherOptions {
    fn default() -> Self {
        GatherOptions {
            max_steps: DEFAULT_STEP_BUDGET,
        }
    }
}

/// Word-level transformation used by a gathering step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordRule {
    /// `z V -> V z` for a distant `V`.
    Commute,
    I1,
    I2,
    I3,
    I4,
    II1,
    II2,
    II3,
    II4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    strands: usize,
    m: i64,
    /// `blocks[k - 3]` is `w_k`.
    blocks: Vec<BraidWord>,
}

impl NormalForm {
    /// Assembles a normal form, checking that each block is reduced and that
    /// every crossing of `w_k` involves strand `k`.
    pub fn new(strands: usize, m: i64, blocks: Vec<BraidWord>) -> Result<Self> {
        let expected = strands.saturating_sub(2);
        if blocks.len() != expected {
            return Err(Error::WrongStrandCount {
                expected: expected + 2,
                found: blocks.len() + 2,
            });
        }
        if strands < 2 && m != 0 {
            return Err(Error::IndexOutOfRange { index: 1, strands });
        }
        for (i, b) in blocks.iter().enumerate() {
            let k = i + 3;
            if b.strands() != strands {
                return Err(Error::StrandMismatch {
                    left: strands,
                    right: b.strands(),
                });
            }
            if !b.is_reduced() || !is_block_for(b.letters(), k) {
                return Err(Error::InvalidBlock { k });
            }
        }
        Ok(NormalForm { strands, m, blocks })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn blocks(&self) -> &[BraidWord] {
        &self.blocks
    }

    /// The block `w_k` for `3 <= k <= N`.
    pub fn block(&self, k: usize) -> Option<&BraidWord> {
        k.checked_sub(3).and_then(|i| self.blocks.get(i))
    }

    pub fn to_word(&self) -> BraidWord {
        nf_to_word(self)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m = {}", self.m)?;
        for (i, b) in self.blocks.iter().enumerate() {
            write!(f, "; w{} = {}", i + 3, b)?;
        }
        Ok(())
    }
}

/// `T·U·V·W` cut of a word relative to a distinguished strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tuvw<'a> {
    pub t: &'a [Generator],
    pub u: &'a [Generator],
    pub v: Generator,
    pub w: &'a [Generator],
}

impl Tuvw<'_> {
    /// 0-based index of `V` in the word.
    pub fn v_index(&self) -> usize {
        self.t.len() + self.u.len()
    }
}

/// Position of strand `k` after crossing `g` from position `p`, or `None` if
/// `g` does not move it.
#[inline]
fn moved(g: Generator, p: usize) -> Option<usize> {
    if g.index == p {
        Some(p + 1)
    } else if g.index + 1 == p {
        Some(p - 1)
    } else {
        None
    }
}

fn is_block_for(letters: &[Generator], k: usize) -> bool {
    let mut p = k;
    letters.iter().all(|&g| match moved(g, p) {
        Some(q) => {
            p = q;
            true
        }
        None => false,
    })
}

/// Finds the first small letter preceded by a big one. `None` means every
/// small crossing already precedes every big one.
pub fn tuvw_decompose(w: &BraidWord, k: usize) -> Option<Tuvw<'_>> {
    let letters = w.letters();
    let mut p = k;
    let mut first_big = None;
    for (idx, &g) in letters.iter().enumerate() {
        match moved(g, p) {
            Some(q) => {
                p = q;
                first_big.get_or_insert(idx);
            }
            None => {
                if let Some(start) = first_big {
                    return Some(Tuvw {
                        t: &letters[..start],
                        u: &letters[start..idx],
                        v: g,
                        w: &letters[idx + 1..],
                    });
                }
            }
        }
    }
    None
}

fn g(index: usize, sign: Sign) -> Generator {
    Generator::new(index, sign)
}

/// Matches `z1 z2 V` (last two letters of `U`, then `V`) against the eight
/// non-commuting configurations and returns the replacement.
pub fn match_word_rule(z1: Generator, z2: Generator, v: Generator) -> Option<(WordRule, Vec<Generator>)> {
    let (s0, s1, s2) = (z1.sign, z2.sign, v.sign);
    if z1.index == v.index && z1.index.abs_diff(z2.index) == 1 {
        if z2.index + 1 == z1.index {
            // x_{i+1} x_i x_{i+1}
            let i = z2.index;
            if s0 == s1 {
                let (e, d) = (s0, s2);
                return Some((WordRule::I2, vec![g(i, d), g(i + 1, e), g(i, e)]));
            }
            if s1 == s2 {
                let (d, e) = (s0, s1);
                return Some((WordRule::I1, vec![g(i, e), g(i + 1, e), g(i, d)]));
            }
            let e = s0;
            return Some((
                WordRule::I4,
                vec![g(i, e), g(i + 1, e), g(i, e), g(i, e), g(i + 1, -e), g(i + 1, -e), g(i, -e)],
            ));
        }
        // x_i x_{i+1} x_i
        let i = z1.index;
        if s0 == s1 {
            let (e, d) = (s0, s2);
            return Some((WordRule::II2, vec![g(i + 1, d), g(i, e), g(i + 1, e)]));
        }
        if s1 == s2 {
            let (d, e) = (s0, s1);
            return Some((WordRule::II1, vec![g(i + 1, e), g(i, e), g(i + 1, d)]));
        }
        let e = s0;
        return Some((
            WordRule::II4,
            vec![g(i + 1, e), g(i, e), g(i + 1, e), g(i + 1, e), g(i, -e), g(i, -e), g(i + 1, -e)],
        ));
    }
    if z1 == z2 && z1.index.abs_diff(v.index) == 1 {
        let (e, d) = (s0, s2);
        if v.index + 1 == z1.index {
            let i = v.index;
            return Some((
                WordRule::I3,
                vec![g(i, d), g(i + 1, d), g(i, e), g(i, e), g(i + 1, -d)],
            ));
        }
        let i = z1.index;
        return Some((
            WordRule::II3,
            vec![g(i + 1, d), g(i, d), g(i + 1, e), g(i + 1, e), g(i, -d)],
        ));
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GatherStep {
    pub word: BraidWord,
    pub rule: WordRule,
}

/// Applies exactly one transformation at the leftmost `T·U·V·W` cut, then
/// freely reduces.
pub fn gather_step(w: &BraidWord, k: usize) -> Result<GatherStep> {
    let cut = tuvw_decompose(w, k).ok_or(Error::AlreadyGathered { strand: k })?;
    let z2 = *cut.u.last().expect("U is nonempty");
    let mut letters = cut.t.to_vec();
    let rule = if cut.v.commutes_with(z2) {
        letters.extend_from_slice(&cut.u[..cut.u.len() - 1]);
        letters.push(cut.v);
        letters.push(z2);
        WordRule::Commute
    } else {
        let position = cut.v_index() + 1;
        if cut.u.len() < 2 {
            return Err(Error::NoRuleMatches { position });
        }
        let z1 = cut.u[cut.u.len() - 2];
        let (rule, rhs) = match_word_rule(z1, z2, cut.v).ok_or(Error::NoRuleMatches { position })?;
        letters.extend_from_slice(&cut.u[..cut.u.len() - 2]);
        letters.extend(rhs);
        rule
    };
    letters.extend_from_slice(cut.w);
    let word = BraidWord::new_unchecked(w.strands(), letters).free_reduce();
    Ok(GatherStep { word, rule })
}

pub fn gather_strand(w: &BraidWord, k: usize) -> Result<(BraidWord, BraidWord)> {
    gather_strand_with(w, k, &GatherOptions::default())
}

/// Gathers all crossings involving strand `k` at the end of the word.
///
/// Returns `(prefix, block)`: `prefix` has only small crossings, `block`
/// only big ones, and `prefix · block` equals `w` in the group.
///
/// The word is streamed through a stack holding the already-gathered
/// `T·U`; a small letter arriving while `U` is nonempty is rewritten against
/// the top of the stack and the replacement is pushed back onto the input.
/// This applies the same transformations as iterating [`gather_step`], with
/// free reduction done as letters meet.
pub fn gather_strand_with(w: &BraidWord, k: usize, opts: &GatherOptions) -> Result<(BraidWord, BraidWord)> {
    let mut rest: Vec<Generator> = w.letters().iter().rev().copied().collect();
    let mut done: Vec<Generator> = Vec::with_capacity(w.len());
    // pos[i]: position of strand k after done[..i]; bigs[i]: big letters in done[..i].
    let mut pos = vec![k];
    let mut bigs = vec![0usize];
    let mut steps = 0usize;

    while let Some(v) = rest.pop() {
        if done.last().is_some_and(|top| top.is_inverse_of(v)) {
            done.pop();
            pos.pop();
            bigs.pop();
            continue;
        }
        let p = *pos.last().unwrap();
        let nbig = *bigs.last().unwrap();
        let next = moved(v, p);
        if next.is_some() || nbig == 0 {
            done.push(v);
            pos.push(next.unwrap_or(p));
            bigs.push(nbig + next.is_some() as usize);
            continue;
        }

        steps += 1;
        if steps > opts.max_steps {
            return Err(Error::StepBudgetExceeded {
                budget: opts.max_steps,
            });
        }
        let z2 = *done.last().unwrap();
        if v.commutes_with(z2) {
            done.pop();
            pos.pop();
            bigs.pop();
            rest.push(z2);
            rest.push(v);
            continue;
        }
        let position = done.len() + 1;
        let len = done.len();
        if len < 2 || bigs[len - 1] == bigs[len - 2] {
            return Err(Error::NoRuleMatches { position });
        }
        let (_, rhs) = match_word_rule(done[len - 2], z2, v).ok_or(Error::NoRuleMatches { position })?;
        for _ in 0..2 {
            done.pop();
            pos.pop();
            bigs.pop();
        }
        rest.extend(rhs.into_iter().rev());
    }

    let split = bigs.iter().position(|&b| b > 0).map_or(done.len(), |i| i - 1);
    let block = done.split_off(split);
    Ok((
        BraidWord::new_unchecked(w.strands(), done),
        BraidWord::new_unchecked(w.strands(), block),
    ))
}

pub fn normal_form(w: &BraidWord) -> Result<NormalForm> {
    normal_form_with(w, &GatherOptions::default())
}

/// Gathers strands `N, N-1, ..., 3` in turn; what remains is `x1^m`.
pub fn normal_form_with(w: &BraidWord, opts: &GatherOptions) -> Result<NormalForm> {
    let n = w.strands();
    let mut prefix = w.free_reduce();
    let mut blocks = vec![BraidWord::identity(n); n.saturating_sub(2)];
    for k in (3..=n).rev() {
        let (p, b) = gather_strand_with(&prefix, k, opts)?;
        blocks[k - 3] = b;
        prefix = p;
    }
    debug_assert!(prefix.letters().iter().all(|g| g.index == 1));
    let m = prefix.letters().iter().map(|g| g.sign.as_i32() as i64).sum();
    Ok(NormalForm {
        strands: n,
        m,
        blocks,
    })
}

/// `x1^m · w_3 ⋯ w_N` as a single word.
pub fn nf_to_word(nf: &NormalForm) -> BraidWord {
    let sign = if nf.m < 0 { Sign::Neg } else { Sign::Pos };
    let mut letters: Vec<Generator> = (0..nf.m.unsigned_abs()).map(|_| g(1, sign)).collect();
    for b in &nf.blocks {
        letters.extend_from_slice(b.letters());
    }
    BraidWord::new_unchecked(nf.strands, letters)
}

/// True iff `w` is reduced and its crossings, read left to right, never
/// return to a lower top strand: `|1,2|`s, then `|.,3|`s, ..., then `|.,N|`s.
pub fn is_normal_form(w: &BraidWord) -> bool {
    w.is_reduced()
        && word_to_crossings(w)
            .items()
            .windows(2)
            .all(|p| p[0].high <= p[1].high)
}

/// Parity law for `B_3`: writing `w_3 = x2^{k_1} x1^{k_2} x2^{k_3} ⋯`, the
/// first run has odd exponent and every later non-terminal run has even
/// exponent; the terminal run is unrestricted.
///
/// After an odd first run strand 3 sits at position 2, and only even runs
/// leave it there; any other exponent would make the next letter a crossing
/// that misses strand 3.
pub fn check_b3_parity(nf: &NormalForm) -> Result<bool> {
    if nf.strands() != 3 {
        return Err(Error::WrongStrandCount {
            expected: 3,
            found: nf.strands(),
        });
    }
    let runs = runs(nf.blocks[0].letters());
    let Some(&(first_index, _)) = runs.first() else {
        return Ok(true);
    };
    if first_index != 2 {
        return Ok(false);
    }
    let last = runs.len() - 1;
    Ok(runs[..last].iter().enumerate().all(|(r, &(_, k))| {
        let odd = k.rem_euclid(2) == 1;
        if r == 0 {
            odd
        } else {
            !odd
        }
    }))
}

/// Maximal runs of equal generator index as `(index, signed length)`.
pub(crate) fn runs(letters: &[Generator]) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = Vec::new();
    for l in letters {
        let s = l.sign.as_i32() as i64;
        match out.last_mut() {
            Some((idx, k)) if *idx == l.index => *k += s,
            _ => out.push((l.index, s)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::aij;

    fn w(n: usize, t: &[i64]) -> BraidWord {
        BraidWord::from_ints(n, t).unwrap()
    }

    #[test]
    fn tuvw_examples() {
        let word = w(3, &[2, 1, 2]);
        let cut = tuvw_decompose(&word, 3).unwrap();
        assert!(cut.t.is_empty());
        assert_eq!(cut.u, &[Generator::pos(2), Generator::pos(1)]);
        assert_eq!(cut.v, Generator::pos(2));
        assert!(cut.w.is_empty());

        assert!(tuvw_decompose(&w(3, &[1, 2, 1]), 3).is_none());
        assert!(tuvw_decompose(&w(3, &[1, 1, 1, 1, 1]), 3).is_none());
    }

    #[test]
    fn gather_step_braid_relation() {
        let step = gather_step(&w(3, &[2, 1, 2]), 3).unwrap();
        assert_eq!(step.rule, WordRule::I2);
        assert_eq!(step.word, w(3, &[1, 2, 1]));
    }

    #[test]
    fn gather_step_commutes_distant_letter() {
        // x3 x3 x1 in B4, k = 4: x1 is small and commutes with x3.
        let step = gather_step(&w(4, &[3, 3, 1]), 4).unwrap();
        assert_eq!(step.rule, WordRule::Commute);
        assert_eq!(step.word, w(4, &[3, 1, 3]));
    }

    #[test]
    fn gather_step_reduces_across_seams() {
        // T = x1^-1, U = x2 x1, V = x2: the I2 output starts with x1, which
        // cancels against T.
        let step = gather_step(&w(3, &[-1, 2, 1, 2]), 3).unwrap();
        assert_eq!(step.word, w(3, &[2, 1]));
        assert!(step.word.is_reduced());
    }

    #[test]
    fn gather_step_on_gathered_word_is_an_error() {
        assert_eq!(
            gather_step(&w(3, &[1, 2]), 3),
            Err(Error::AlreadyGathered { strand: 3 })
        );
    }

    #[test]
    fn gather_strand_examples() {
        let (p, b) = gather_strand(&w(3, &[2, 1, 2]), 3).unwrap();
        assert_eq!((p, b), (w(3, &[1]), w(3, &[2, 1])));
        let (p, b) = gather_strand(&w(3, &[2, 1]), 3).unwrap();
        assert_eq!((p, b), (w(3, &[]), w(3, &[2, 1])));
        let (p, b) = gather_strand(&w(3, &[-1, -1, -1]), 3).unwrap();
        assert_eq!((p, b), (w(3, &[-1, -1, -1]), w(3, &[])));
    }

    #[test]
    fn normal_form_of_example_word() {
        let nf = normal_form(&w(4, &[3, -2, -2, 1])).unwrap();
        assert_eq!(nf.m(), 1);
        assert!(nf.block(3).unwrap().is_empty());
        assert_eq!(nf.block(4).unwrap(), &w(4, &[3, 2, -1, -1, -2]));
        assert_eq!(nf.to_word(), w(4, &[1, 3, 2, -1, -1, -2]));
    }

    #[test]
    fn normal_form_small_cases() {
        for n in 2..6 {
            let nf = normal_form(&w(n, &[1, 1, 1])).unwrap();
            assert_eq!(nf.m(), 3);
            assert!(nf.blocks().iter().all(|b| b.is_empty()));
        }
        let nf = normal_form(&w(3, &[2, 1, 2])).unwrap();
        assert_eq!((nf.m(), nf.block(3).unwrap()), (1, &w(3, &[2, 1])));
        assert_eq!(normal_form(&w(2, &[1, -1, -1])).unwrap().m(), -1);
        let trivial = normal_form(&BraidWord::identity(1)).unwrap();
        assert_eq!((trivial.m(), trivial.blocks().len()), (0, 0));
    }

    #[test]
    fn nf_to_word_examples() {
        let nf = NormalForm::new(4, 1, vec![w(4, &[]), w(4, &[3, 2, -1, -1, -2])]).unwrap();
        assert_eq!(nf_to_word(&nf), w(4, &[1, 3, 2, -1, -1, -2]));
        assert!(nf_to_word(&NormalForm::new(2, 0, vec![]).unwrap()).is_empty());
        let nf = NormalForm::new(3, -2, vec![w(3, &[2])]).unwrap();
        assert_eq!(nf_to_word(&nf), w(3, &[-1, -1, 2]));
    }

    #[test]
    fn normal_form_constructor_rejects_foreign_blocks() {
        assert!(NormalForm::new(3, 0, vec![w(3, &[1])]).is_err());
        assert!(NormalForm::new(3, 0, vec![w(3, &[2, -2])]).is_err());
        assert!(NormalForm::new(4, 0, vec![w(4, &[])]).is_err());
    }

    #[test]
    fn is_normal_form_examples() {
        assert!(is_normal_form(&w(4, &[1, 3, 2, -1, -1, -2])));
        assert!(!is_normal_form(&w(4, &[3, -2, -2, 1])));
        for m in -3i64..=3 {
            for k in -3i64..=3 {
                let mut t: Vec<i64> = vec![m.signum(); m.unsigned_abs() as usize];
                t.extend(vec![2 * k.signum(); k.unsigned_abs() as usize]);
                assert!(is_normal_form(&w(3, &t)), "x1^{m} x2^{k}");
            }
        }
    }

    #[test]
    fn b3_parity_examples() {
        let nf = |b: &[i64]| NormalForm { strands: 3, m: 0, blocks: vec![w(3, b)] };
        assert!(check_b3_parity(&nf(&[2, 1, 1, -2])).unwrap());
        assert!(!check_b3_parity(&nf(&[2, 2, 1])).unwrap());
        assert!(check_b3_parity(&nf(&[])).unwrap());
        // four runs: odd, even, even, terminal
        assert!(check_b3_parity(&nf(&[2, 1, 1, -2, -2, 1])).unwrap());
        assert!(!check_b3_parity(&nf(&[2, 1, 1, 2, 1])).unwrap());
        let b4 = normal_form(&w(4, &[1])).unwrap();
        assert!(check_b3_parity(&b4).is_err());
    }

    #[test]
    fn four_run_b3_block_is_a_normal_form() {
        let block = w(3, &[2, 1, 1, -2, -2, 1]);
        assert!(is_normal_form(&block));
        let nf = normal_form(&block).unwrap();
        assert_eq!(nf.to_word(), block);
    }

    #[test]
    fn aij_is_its_own_normal_form() {
        for n in 2..=5 {
            for j in 2..=n {
                for i in 1..j {
                    let a = aij(i, j, n).unwrap();
                    let nf = normal_form(&a).unwrap();
                    if j == 2 {
                        assert_eq!(nf.m(), 2);
                    } else {
                        assert_eq!(nf.m(), 0);
                        assert_eq!(nf.block(j).unwrap(), &a);
                    }
                    assert_eq!(nf.to_word(), a);
                }
            }
        }
    }

    #[test]
    fn step_budget_guard() {
        let opts = GatherOptions { max_steps: 0 };
        assert_eq!(
            normal_form_with(&w(3, &[2, 1, 2]), &opts),
            Err(Error::StepBudgetExceeded { budget: 0 })
        );
    }
}
