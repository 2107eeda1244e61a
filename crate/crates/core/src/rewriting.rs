//! String rewriting on crossing sequences.
//!
//! Rules, with `k > j, l` throughout:
//!
//! ```text
//! I1   |j,k|^d |l,k|^e |l,j|^e  ->  |l,j|^e |l,k|^e |j,k|^d
//! I2   |j,k|^e |l,k|^e |l,j|^d  ->  |l,j|^d |l,k|^e |j,k|^e
//! I3   |j,k|^e |j,k|^e |l,j|^d  ->  |l,j|^d |l,k|^d |j,k|^e |j,k|^e |l,k|^-d
//! I4   |j,k|^e |l,k|^-e |l,j|^e ->  |l,j|^e |l,k|^e |j,k|^e |j,k|^e |l,k|^-e |l,k|^-e |j,k|^-e
//! COM  |l,k|^e |i,j|^d          ->  |i,j|^d |l,k|^e     (disjoint pairs, max(i,j) < max(l,k))
//! D    |i,j|^e |i,j|^-e         ->  1
//! ```
//!
//! The system terminates and is confluent on valid sequences; its residues
//! are exactly the crossing sequences of normal forms.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crossing::{Crossing, CrossingSequence};
use crate::error::{Error, Result};
use crate::word::Sign;

pub const DEFAULT_REWRITE_BUDGET: usize = 1_000_000;

/// Largest input accepted by [`max_chain_length`].
pub const MAX_CHAIN_INPUT_LEN: usize = 8;
pub const MAX_CHAIN_STRANDS: usize = 4;

/// Rule templates in tie-break order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Template {
    D,
    Com,
    I1,
    I2,
    I3,
    I4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bindings {
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub epsilon: Sign,
    pub delta: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RewriteRule {
    /// `x x^-1 -> 1` on the given crossing `x`.
    Cancel(Crossing),
    /// Moves `second` ahead of `first`.
    Commute { first: Crossing, second: Crossing },
    I1(Bindings),
    I2(Bindings),
    I3(Bindings),
    I4(Bindings),
}

impl RewriteRule {
    pub fn template(&self) -> Template {
        match self {
            RewriteRule::Cancel(_) => Template::D,
            RewriteRule::Commute { .. } => Template::Com,
            RewriteRule::I1(_) => Template::I1,
            RewriteRule::I2(_) => Template::I2,
            RewriteRule::I3(_) => Template::I3,
            RewriteRule::I4(_) => Template::I4,
        }
    }

    /// Number of crossings consumed by the left-hand side.
    pub fn lhs_len(&self) -> usize {
        match self {
            RewriteRule::Cancel(_) | RewriteRule::Commute { .. } => 2,
            _ => 3,
        }
    }

    pub fn lhs(&self) -> Vec<Crossing> {
        match *self {
            RewriteRule::Cancel(x) => vec![x, x.inverse()],
            RewriteRule::Commute { first, second } => vec![first, second],
            RewriteRule::I1(b) => vec![
                cr(b.j, b.k, b.delta),
                cr(b.l, b.k, b.epsilon),
                cr(b.l, b.j, b.epsilon),
            ],
            RewriteRule::I2(b) => vec![
                cr(b.j, b.k, b.epsilon),
                cr(b.l, b.k, b.epsilon),
                cr(b.l, b.j, b.delta),
            ],
            RewriteRule::I3(b) => vec![
                cr(b.j, b.k, b.epsilon),
                cr(b.j, b.k, b.epsilon),
                cr(b.l, b.j, b.delta),
            ],
            RewriteRule::I4(b) => vec![
                cr(b.j, b.k, b.epsilon),
                cr(b.l, b.k, -b.epsilon),
                cr(b.l, b.j, b.epsilon),
            ],
        }
    }

    pub fn rhs(&self) -> Vec<Crossing> {
        match *self {
            RewriteRule::Cancel(_) => Vec::new(),
            RewriteRule::Commute { first, second } => vec![second, first],
            RewriteRule::I1(b) => vec![
                cr(b.l, b.j, b.epsilon),
                cr(b.l, b.k, b.epsilon),
                cr(b.j, b.k, b.delta),
            ],
            RewriteRule::I2(b) => vec![
                cr(b.l, b.j, b.delta),
                cr(b.l, b.k, b.epsilon),
                cr(b.j, b.k, b.epsilon),
            ],
            RewriteRule::I3(b) => vec![
                cr(b.l, b.j, b.delta),
                cr(b.l, b.k, b.delta),
                cr(b.j, b.k, b.epsilon),
                cr(b.j, b.k, b.epsilon),
                cr(b.l, b.k, -b.delta),
            ],
            RewriteRule::I4(b) => {
                let e = b.epsilon;
                vec![
                    cr(b.l, b.j, e),
                    cr(b.l, b.k, e),
                    cr(b.j, b.k, e),
                    cr(b.j, b.k, e),
                    cr(b.l, b.k, -e),
                    cr(b.l, b.k, -e),
                    cr(b.j, b.k, -e),
                ]
            }
        }
    }
}

fn cr(a: usize, b: usize, sign: Sign) -> Crossing {
    Crossing::between(a, b, sign)
}

/// A rule whose left-hand side matches starting at `position` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RewriteSite {
    pub position: usize,
    pub rule: RewriteRule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniform choice among all sites, driven by a ChaCha8 generator.
    SeededRandom(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteOptions {
    pub max_steps: usize,
    /// Whether COM participates.
    pub commute: bool,
}

impl Default for RewriteOptions {
    fn default() -> Self {
        RewriteOptions {
            max_steps: DEFAULT_REWRITE_BUDGET,
            commute: true,
        }
    }
}

/// Rules matching at `pos`, in template order.
fn sites_at(items: &[Crossing], pos: usize, commute: bool, out: &mut Vec<RewriteSite>) {
    let site = |rule| RewriteSite {
        position: pos,
        rule,
    };
    if pos + 1 < items.len() {
        let (a, b) = (items[pos], items[pos + 1]);
        if a.is_inverse_of(&b) {
            out.push(site(RewriteRule::Cancel(a)));
        }
        if commute && !a.shares_strand(&b) && b.high < a.high {
            out.push(site(RewriteRule::Commute {
                first: a,
                second: b,
            }));
        }
    }
    if pos + 2 < items.len() {
        let (c0, c1, c2) = (items[pos], items[pos + 1], items[pos + 2]);
        let (s0, s1, s2) = (c0.sign, c1.sign, c2.sign);
        if c0.same_pair(&c1) {
            // I3: k is the larger strand of the repeated pair.
            let (j, k) = (c0.low, c0.high);
            if s0 == s1 {
                if let Some(l) = c2.partner(j) {
                    if l != k && l < k {
                        let b = Bindings {
                            j,
                            k,
                            l,
                            epsilon: s0,
                            delta: s2,
                        };
                        out.push(site(RewriteRule::I3(b)));
                    }
                }
            }
        } else if let Some(k) = common_strand(&c0, &c1) {
            let j = c0.partner(k).unwrap();
            let l = c1.partner(k).unwrap();
            if k > j && k > l && c2.same_pair(&cr(j, l, Sign::Pos)) {
                if s1 == s2 {
                    out.push(site(RewriteRule::I1(Bindings {
                        j,
                        k,
                        l,
                        epsilon: s1,
                        delta: s0,
                    })));
                }
                if s0 == s1 {
                    out.push(site(RewriteRule::I2(Bindings {
                        j,
                        k,
                        l,
                        epsilon: s0,
                        delta: s2,
                    })));
                }
                if s0 == s2 && s1 == -s0 {
                    out.push(site(RewriteRule::I4(Bindings {
                        j,
                        k,
                        l,
                        epsilon: s0,
                        delta: s0,
                    })));
                }
            }
        }
    }
}

fn common_strand(a: &Crossing, b: &Crossing) -> Option<usize> {
    if b.involves(a.low) {
        Some(a.low)
    } else if b.involves(a.high) {
        Some(a.high)
    } else {
        None
    }
}

pub fn applicable_sites(c: &CrossingSequence) -> Vec<RewriteSite> {
    applicable_sites_with(c, true)
}

/// All matching sites in position order, ties in template order.
pub fn applicable_sites_with(c: &CrossingSequence, commute: bool) -> Vec<RewriteSite> {
    let mut out = Vec::new();
    for pos in 0..c.len() {
        sites_at(c.items(), pos, commute, &mut out);
    }
    out
}

pub fn apply_rule(c: &CrossingSequence, site: &RewriteSite) -> Result<CrossingSequence> {
    let mut candidates = Vec::new();
    sites_at(c.items(), site.position, true, &mut candidates);
    if !candidates.contains(site) {
        return Err(Error::PatternMismatch {
            position: site.position,
        });
    }
    let mut items = c.items().to_vec();
    splice_rule(&mut items, site);
    Ok(CrossingSequence::new_unchecked(c.strands(), items))
}

fn splice_rule(items: &mut Vec<Crossing>, site: &RewriteSite) {
    let end = site.position + site.rule.lhs_len();
    items.splice(site.position..end, site.rule.rhs());
}

pub fn residue(c: &CrossingSequence, strategy: Strategy) -> Result<CrossingSequence> {
    residue_with(c, strategy, &RewriteOptions::default())
}

pub fn residue_with(c: &CrossingSequence, strategy: Strategy, opts: &RewriteOptions) -> Result<CrossingSequence> {
    residue_counted(c, strategy, opts).map(|(r, _)| r)
}

/// Like [`residue_with`], also returning the number of rewrites applied.
pub fn residue_counted(
    c: &CrossingSequence,
    strategy: Strategy,
    opts: &RewriteOptions,
) -> Result<(CrossingSequence, usize)> {
    let mut items = c.items().to_vec();
    let mut steps = 0usize;
    let budget_hit = || Error::StepBudgetExceeded {
        budget: opts.max_steps,
    };
    match strategy {
        Strategy::Leftmost => {
            // No site lies left of the previous one except within the
            // two-crossing window a rewrite can touch.
            let mut from = 0usize;
            let mut buf = Vec::new();
            loop {
                let found = (from..items.len()).find_map(|pos| {
                    buf.clear();
                    sites_at(&items, pos, opts.commute, &mut buf);
                    buf.first().copied()
                });
                let Some(site) = found else { break };
                steps += 1;
                if steps > opts.max_steps {
                    return Err(budget_hit());
                }
                splice_rule(&mut items, &site);
                from = site.position.saturating_sub(2);
            }
        }
        Strategy::Rightmost | Strategy::SeededRandom(_) => {
            let mut rng = match strategy {
                Strategy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
                _ => None,
            };
            let mut sites = Vec::new();
            loop {
                sites.clear();
                for pos in 0..items.len() {
                    sites_at(&items, pos, opts.commute, &mut sites);
                }
                let site = match rng.as_mut() {
                    None => {
                        let Some(last) = sites.last() else { break };
                        let pos = last.position;
                        // smallest template among the rightmost position
                        *sites.iter().find(|s| s.position == pos).unwrap()
                    }
                    Some(rng) => {
                        if sites.is_empty() {
                            break;
                        }
                        sites[rng.random_range(0..sites.len())]
                    }
                };
                steps += 1;
                if steps > opts.max_steps {
                    return Err(budget_hit());
                }
                splice_rule(&mut items, &site);
            }
        }
    }
    Ok((CrossingSequence::new_unchecked(c.strands(), items), steps))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainLength {
    Exact(usize),
    Exceeded,
}

/// Length of the longest rewrite chain starting at `c`, by exhaustive
/// search. Restricted to tiny inputs.
pub fn max_chain_length(c: &CrossingSequence, cap: usize) -> Result<ChainLength> {
    if c.len() > MAX_CHAIN_INPUT_LEN || c.strands() > MAX_CHAIN_STRANDS {
        return Err(Error::InputTooLarge(format!(
            "max_chain_length needs length <= {MAX_CHAIN_INPUT_LEN} and strands <= {MAX_CHAIN_STRANDS}"
        )));
    }
    let mut memo = HashMap::new();
    Ok(match longest(c.items().to_vec(), cap, 0, &mut memo) {
        Some(n) => ChainLength::Exact(n),
        None => ChainLength::Exceeded,
    })
}

/// `None` once some chain passes `cap`.
fn longest(items: Vec<Crossing>, cap: usize, depth: usize, memo: &mut HashMap<Vec<Crossing>, usize>) -> Option<usize> {
    if let Some(&n) = memo.get(&items) {
        return (depth + n <= cap).then_some(n);
    }
    let mut sites = Vec::new();
    for pos in 0..items.len() {
        sites_at(&items, pos, true, &mut sites);
    }
    if sites.is_empty() {
        memo.insert(items, 0);
        return Some(0);
    }
    if depth >= cap {
        return None;
    }
    let mut best = 0;
    for site in &sites {
        let mut next = items.clone();
        splice_rule(&mut next, site);
        best = best.max(1 + longest(next, cap, depth + 1, memo)?);
    }
    memo.insert(items, best);
    Some(best)
}
