//! Braids as sequences of crossings `|r,s|^e`.
//!
//! Each letter of a word is the crossing of the two strands occupying the
//! swapped positions at that moment. Not every sequence of crossings comes
//! from a word; [`validate`] runs the permutation automaton that recognizes
//! the ones that do.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Arrangement, BraidWord, Generator, Sign};

/// `|low,high|^sign`, stored with `low < high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub low: usize,
    pub high: usize,
    pub sign: Sign,
}

impl Crossing {
    pub fn new(low: usize, high: usize, sign: Sign) -> Result<Self> {
        if low == 0 || low >= high {
            return Err(Error::InvalidStrandPair {
                low,
                high,
                strands: high,
            });
        }
        Ok(Crossing { low, high, sign })
    }

    /// Crossing of strands `a` and `b` in either order.
    pub fn between(a: usize, b: usize, sign: Sign) -> Self {
        debug_assert!(a != b && a > 0 && b > 0);
        Crossing {
            low: a.min(b),
            high: a.max(b),
            sign,
        }
    }

    pub fn involves(&self, strand: usize) -> bool {
        self.low == strand || self.high == strand
    }

    pub fn same_pair(&self, other: &Crossing) -> bool {
        self.low == other.low && self.high == other.high
    }

    pub fn is_inverse_of(&self, other: &Crossing) -> bool {
        self.same_pair(other) && self.sign != other.sign
    }

    pub fn shares_strand(&self, other: &Crossing) -> bool {
        other.involves(self.low) || other.involves(self.high)
    }

    /// The strand other than `strand`, if this crossing involves it.
    pub fn partner(&self, strand: usize) -> Option<usize> {
        if self.low == strand {
            Some(self.high)
        } else if self.high == strand {
            Some(self.low)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Crossing {
        Crossing {
            sign: -self.sign,
            ..*self
        }
    }

    /// Rank in `|1,2| < |1,3| < |2,3| < |1,4| < ...` (by `high`, then `low`),
    /// starting at 1.
    pub fn canonical_index(&self) -> usize {
        canonical_index(self)
    }
}

pub fn canonical_index(x: &Crossing) -> usize {
    (x.high - 1) * (x.high - 2) / 2 + x.low
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "|{},{}|", self.low, self.high),
            Sign::Neg => write!(f, "|{},{}|^-1", self.low, self.high),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossingSequence {
    strands: usize,
    items: Vec<Crossing>,
}

impl CrossingSequence {
    pub fn new(strands: usize, items: Vec<Crossing>) -> Result<Self> {
        if let Some(bad) = items
            .iter()
            .find(|c| c.low == 0 || c.low >= c.high || c.high > strands)
        {
            return Err(Error::InvalidStrandPair {
                low: bad.low,
                high: bad.high,
                strands,
            });
        }
        Ok(CrossingSequence { strands, items })
    }

    pub(crate) fn new_unchecked(strands: usize, items: Vec<Crossing>) -> Self {
        CrossingSequence { strands, items }
    }

    pub fn empty(strands: usize) -> Self {
        CrossingSequence {
            strands,
            items: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn items(&self) -> &[Crossing] {
        &self.items
    }

    pub fn into_items(self) -> Vec<Crossing> {
        self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Big,
    Small,
}

/// Position-tracking arrangement with O(1) lookups in both directions.
#[derive(Clone, Debug)]
pub(crate) struct Tracker {
    at: Vec<usize>,
    pos: Vec<usize>,
}

impl Tracker {
    pub(crate) fn new(strands: usize) -> Self {
        Tracker {
            at: (0..=strands).collect(),
            pos: (0..=strands).collect(),
        }
    }

    pub(crate) fn crossing_for(&self, g: Generator) -> Crossing {
        Crossing::between(self.at[g.index], self.at[g.index + 1], g.sign)
    }

    pub(crate) fn swap(&mut self, p: usize) {
        let (a, b) = (self.at[p], self.at[p + 1]);
        self.at.swap(p, p + 1);
        self.pos[a] = p + 1;
        self.pos[b] = p;
    }

    /// Generator realizing `c` here, if its strands are adjacent.
    pub(crate) fn generator_for(&self, c: &Crossing) -> Option<Generator> {
        let (pl, ph) = (self.pos[c.low], self.pos[c.high]);
        if pl.abs_diff(ph) == 1 {
            Some(Generator::new(pl.min(ph), c.sign))
        } else {
            None
        }
    }

    pub(crate) fn arrangement(&self) -> Arrangement {
        Arrangement::from_labels(self.at[1..].to_vec()).expect("tracker holds a permutation")
    }
}

pub fn word_to_crossings(w: &BraidWord) -> CrossingSequence {
    let mut tracker = Tracker::new(w.strands());
    let items = w
        .letters()
        .iter()
        .map(|&g| {
            let c = tracker.crossing_for(g);
            tracker.swap(g.index);
            c
        })
        .collect();
    CrossingSequence::new_unchecked(w.strands(), items)
}

pub fn crossings_to_word(c: &CrossingSequence) -> Result<BraidWord> {
    let mut tracker = Tracker::new(c.strands());
    let mut letters = Vec::with_capacity(c.len());
    for (i, x) in c.items().iter().enumerate() {
        let g = tracker
            .generator_for(x)
            .ok_or(Error::InvalidCrossing { position: i + 1 })?;
        tracker.swap(g.index);
        letters.push(g);
    }
    Ok(BraidWord::new_unchecked(c.strands(), letters))
}

/// Membership in the permutation automaton, run along the single path of `c`.
pub fn validate(c: &CrossingSequence) -> bool {
    final_state(c).is_some()
}

/// Automaton state reached after reading `c`, or `None` if `c` is rejected.
pub fn final_state(c: &CrossingSequence) -> Option<Arrangement> {
    let mut tracker = Tracker::new(c.strands());
    for x in c.items() {
        let g = tracker.generator_for(x)?;
        tracker.swap(g.index);
    }
    Some(tracker.arrangement())
}

pub fn classify(c: &CrossingSequence, k: usize) -> Vec<Label> {
    c.items()
        .iter()
        .map(|x| if x.involves(k) { Label::Big } else { Label::Small })
        .collect()
}

/// Largest strand count for which [`PermutationAutomaton::materialize`] runs.
pub const MAX_MATERIALIZED_STRANDS: usize = 5;

/// Explicit automaton: states are arrangements reachable from the identity,
/// edges are the crossings of adjacent strands (both signs).
#[derive(Debug)]
pub struct PermutationAutomaton {
    strands: usize,
    states: Vec<Arrangement>,
    transitions: Vec<HashMap<Crossing, usize>>,
}

impl PermutationAutomaton {
    pub fn materialize(strands: usize) -> Result<Self> {
        if strands == 0 || strands > MAX_MATERIALIZED_STRANDS {
            return Err(Error::InputTooLarge(format!(
                "automaton materialization supports 1..={MAX_MATERIALIZED_STRANDS} strands, got {strands}"
            )));
        }
        let start = Arrangement::identity(strands);
        let mut index = HashMap::from([(start.clone(), 0usize)]);
        let mut states = vec![start];
        let mut transitions: Vec<HashMap<Crossing, usize>> = Vec::new();
        let mut next = 0;
        while next < states.len() {
            let state = states[next].clone();
            let mut edges = HashMap::new();
            for p in 1..strands {
                let mut target = state.clone();
                target.swap_adjacent(p);
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = states.len();
                        index.insert(target.clone(), id);
                        states.push(target);
                        id
                    }
                };
                for sign in [Sign::Pos, Sign::Neg] {
                    edges.insert(Crossing::between(state.at(p), state.at(p + 1), sign), id);
                }
            }
            transitions.push(edges);
            next += 1;
        }
        Ok(PermutationAutomaton {
            strands,
            states,
            transitions,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state(&self, id: usize) -> &Arrangement {
        &self.states[id]
    }

    pub fn run(&self, c: &CrossingSequence) -> Option<usize> {
        if c.strands() != self.strands {
            return None;
        }
        c.items()
            .iter()
            .try_fold(0usize, |s, x| self.transitions[s].get(x).copied())
    }

    pub fn accepts(&self, c: &CrossingSequence) -> bool {
        self.run(c).is_some()
    }
}
