//! Breadth-first enumeration of the semigroup generated by a machine.
//!
//! Elements are represented by state words; words of length `L + 1` are
//! only formed from representatives of length `L`, since `ρ_u = ρ_v`
//! implies `ρ_{ux} = ρ_{vx}`. Candidates are bucketed by their action on a
//! fixed sample of letter words (a hash, never a proof) and compared with
//! the bucket by bisimulation.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bisim::ProductionEquivalence;
use crate::mealy::MealyMachine;

/// Default element budget.
pub const DEFAULT_CLOSURE_BUDGET: usize = 100_000;
/// Default cap on bisimulation work, in symbols stepped. Equality proofs
/// between long words cost time quadratic in their length, so an infinite
/// semigroup would otherwise take very long to reach the element budget.
pub const DEFAULT_CLOSURE_WORK: u64 = 200_000_000;

const SAMPLE_SEED: u64 = 0x5eed_c105;
const SAMPLE_WORDS: usize = 16;
const SAMPLE_LEN: usize = 20;
const SHORT_TABLE_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ClosureOutcome {
    /// No new element appeared at length `saturated_at`; `order` is exact.
    Finite { order: usize, saturated_at: usize },
    /// A limit was reached before saturation.
    Unknown {
        elements: usize,
        length_reached: usize,
        stopped_by: ClosureLimit,
    },
}

/// Which limit stopped an unfinished closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureLimit {
    Elements,
    Work,
}

/// Limits of [`semigroup_closure_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureLimits {
    pub elements: usize,
    pub work: u64,
}

impl ClosureLimits {
    pub fn elements(elements: usize) -> Self {
        ClosureLimits {
            elements,
            work: DEFAULT_CLOSURE_WORK,
        }
    }
}

impl ClosureOutcome {
    pub fn order(&self) -> Option<usize> {
        match self {
            ClosureOutcome::Finite { order, .. } => Some(*order),
            ClosureOutcome::Unknown { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }
}

/// Enumerates `⟨m⟩_+` up to `budget` elements, with the default work cap.
pub fn semigroup_closure(m: &MealyMachine, budget: usize) -> ClosureOutcome {
    Closure::new(m).run(ClosureLimits::elements(budget))
}

pub fn semigroup_closure_with(m: &MealyMachine, limits: ClosureLimits) -> ClosureOutcome {
    Closure::new(m).run(limits)
}

/// Like [`semigroup_closure`] but also returns the representatives found,
/// in length-lexicographic order.
pub fn semigroup_elements(m: &MealyMachine, budget: usize) -> (ClosureOutcome, Vec<Vec<usize>>) {
    let mut c = Closure::new(m);
    let outcome = c.run(ClosureLimits::elements(budget));
    (outcome, c.all_words())
}

struct Closure<'m> {
    m: &'m MealyMachine,
    /// Sample words, flattened; `offsets[k]..offsets[k + 1]` is word `k`.
    samples: Vec<u32>,
    offsets: Vec<usize>,
    eq: ProductionEquivalence<'m>,
    /// Elements as (parent element, last generator).
    nodes: Vec<(Option<usize>, usize)>,
    /// Symbols spent rebuilding words for comparisons.
    rebuild_work: u64,
}

impl<'m> Closure<'m> {
    fn new(m: &'m MealyMachine) -> Self {
        let words = sample_words(m.letter_count());
        let mut offsets = vec![0];
        let mut samples = Vec::new();
        for w in words {
            samples.extend(w.into_iter().map(|c| c as u32));
            offsets.push(samples.len());
        }
        Closure {
            m,
            samples,
            offsets,
            eq: ProductionEquivalence::new(m),
            nodes: Vec::new(),
            rebuild_work: 0,
        }
    }

    /// Applies `ρ_x` to every sample image.
    fn extend_images(&self, x: usize, images: &[u32]) -> Vec<u32> {
        let mut out = Vec::with_capacity(images.len());
        for k in 0..self.offsets.len() - 1 {
            let mut state = x;
            for &c in &images[self.offsets[k]..self.offsets[k + 1]] {
                let c = c as usize;
                out.push(self.m.output(state, c) as u32);
                state = self.m.next(state, c);
            }
        }
        out
    }

    fn word(&mut self, e: usize) -> Vec<usize> {
        let w = self.rebuild(e);
        self.rebuild_work += w.len() as u64;
        w
    }

    fn rebuild(&self, mut e: usize) -> Vec<usize> {
        let mut w = Vec::new();
        loop {
            let (parent, x) = self.nodes[e];
            w.push(x);
            match parent {
                Some(p) => e = p,
                None => break,
            }
        }
        w.reverse();
        w
    }

    fn run(&mut self, limits: ClosureLimits) -> ClosureOutcome {
        let n = self.m.state_count();
        let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
        let mut length = 1;
        // (element, its sample images); `None` stands for the empty word
        let mut parents: Vec<(Option<usize>, Vec<u32>)> = vec![(None, self.samples.clone())];
        loop {
            let mut next = Vec::new();
            for (parent, images) in parents.drain(..) {
                for x in 0..n {
                    let imgs = self.extend_images(x, &images);
                    let key = fingerprint(&imgs);
                    let members = buckets.get(&key).cloned().unwrap_or_default();
                    if !members.is_empty() {
                        let mut word = parent.map(|p| self.word(p)).unwrap_or_default();
                        word.push(x);
                        let mut known = false;
                        for &e in &members {
                            let other = self.word(e);
                            let spent = self.eq.work() + self.rebuild_work;
                            let Some(left) = limits.work.checked_sub(spent) else {
                                return self.unknown(length, ClosureLimit::Work);
                            };
                            match self.eq.equal_within(&other, &word, self.eq.work() + left) {
                                Some(true) => {
                                    known = true;
                                    break;
                                }
                                Some(false) => {}
                                None => return self.unknown(length, ClosureLimit::Work),
                            }
                        }
                        if known {
                            continue;
                        }
                    }
                    if self.nodes.len() >= limits.elements {
                        return self.unknown(length, ClosureLimit::Elements);
                    }
                    let id = self.nodes.len();
                    self.nodes.push((parent, x));
                    buckets.entry(key).or_default().push(id);
                    next.push((Some(id), imgs));
                }
            }
            if next.is_empty() {
                return ClosureOutcome::Finite {
                    order: self.nodes.len(),
                    saturated_at: length,
                };
            }
            parents = next;
            length += 1;
        }
    }

    fn unknown(&self, length: usize, stopped_by: ClosureLimit) -> ClosureOutcome {
        ClosureOutcome::Unknown {
            elements: self.nodes.len(),
            length_reached: length,
            stopped_by,
        }
    }

    fn all_words(&self) -> Vec<Vec<usize>> {
        (0..self.nodes.len()).map(|e| self.rebuild(e)).collect()
    }
}

fn fingerprint(images: &[u32]) -> u64 {
    let mut h = DefaultHasher::new();
    images.hash(&mut h);
    h.finish()
}

/// All words of the largest length `L` with `k^L ≤ 32`, then a fixed
/// pseudo-random set of longer words.
fn sample_words(k: usize) -> Vec<Vec<usize>> {
    let mut samples = Vec::new();
    if k == 0 {
        return samples;
    }
    let mut len = 1;
    while len < SHORT_TABLE_LIMIT && k.pow(len as u32 + 1) <= SHORT_TABLE_LIMIT {
        len += 1;
    }
    let total = k.pow(len as u32);
    let mut w = vec![0; len];
    for idx in 0..total {
        crate::mealy::decode_word(idx, k, &mut w);
        samples.push(w.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for _ in 0..SAMPLE_WORDS {
        samples.push((0..SAMPLE_LEN).map(|_| rng.gen_range(0..k)).collect());
    }
    samples
}
