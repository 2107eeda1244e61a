//! Inputs shared by the benchmarks.

use braidnf_core::BraidWord;

/// `(x3^2 x2^2 x1^2 x2^2)^p` in B4, whose normal form grows quickly with `p`.
pub fn blowup_word(p: usize) -> BraidWord {
    let unit = [3, 3, 2, 2, 1, 1, 2, 2];
    let tokens: Vec<i64> = unit.iter().copied().cycle().take(unit.len() * p).collect();
    BraidWord::from_ints(4, &tokens).expect("indices below 4")
}
