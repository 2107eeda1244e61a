//! Bounded breadth-first search over relation moves.

use std::collections::{HashSet, VecDeque};

use crate::word::{BraidWord, Generator, Sign};

use super::burau::check_rule_instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual,
    Unknown,
}

/// Words reachable from `w` in one relation move, no longer than `max_len`.
pub fn neighbours(w: &[Generator], strands: usize, max_len: usize) -> Vec<Vec<Generator>> {
    let mut out = Vec::new();
    let n = w.len();
    for i in 0..n {
        if i + 1 < n {
            let (a, b) = (w[i], w[i + 1]);
            if a.is_inverse_of(b) {
                let mut v = w.to_vec();
                v.drain(i..i + 2);
                out.push(v);
            } else if a.commutes_with(b) {
                let mut v = w.to_vec();
                v.swap(i, i + 1);
                out.push(v);
            }
        }
        if i + 2 < n {
            let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
            if a == c && a.sign == b.sign && a.index.abs_diff(b.index) == 1 {
                let mut v = w.to_vec();
                v[i] = b;
                v[i + 1] = a;
                v[i + 2] = b;
                out.push(v);
            }
        }
    }
    if n + 2 <= max_len {
        for i in 0..=n {
            for index in 1..strands {
                for sign in [Sign::Pos, Sign::Neg] {
                    let g = Generator::new(index, sign);
                    let mut v = w.to_vec();
                    v.splice(i..i, [g, g.inverse()]);
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Decides `u == v` by necessary invariants first, then by searching for a
/// relation-move path from `u v^-1` to the empty word.
pub fn bfs_equal(u: &BraidWord, v: &BraidWord, max_len: usize, max_states: usize) -> Verdict {
    if u.strands() != v.strands() || !check_rule_instance(u, v) {
        return Verdict::NotEqual;
    }
    let start = u
        .concat(&v.inverse(), true)
        .expect("same strand count")
        .into_letters();
    if start.is_empty() {
        return Verdict::Equal;
    }
    let limit = max_len.max(start.len());
    let mut seen: HashSet<Vec<Generator>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for next in neighbours(&w, u.strands(), limit) {
            if next.is_empty() {
                return Verdict::Equal;
            }
            if seen.len() >= max_states {
                return Verdict::Unknown;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Verdict::Unknown
}
