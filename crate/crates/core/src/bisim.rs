//! Equality of production functions by bisimulation.
//!
//! `ρ_u = ρ_v` as maps `Σ* → Σ*` iff for every letter `i` the outputs
//! `ρ_u(i)`, `ρ_v(i)` agree and the pair of sections `(δ_i(u), δ_i(v))` is
//! again equal. Sections keep the lengths of `u` and `v`, so the set of
//! reachable pairs is finite and the closure terminates.
//!
//! For invertible machines every `ρ_p` is a bijection of each `Σ^n`, so
//! `ρ_{pu} = ρ_{pv}` iff `ρ_u = ρ_v` and common prefixes are cancelled
//! before a pair is stored. A shortest distinguishing word for a pair still
//! yields a strictly shorter one for its reduced successor, so the closed
//! set remains a proof.

use std::collections::{HashSet, VecDeque};

use crate::mealy::MealyMachine;

type Pair = (Vec<usize>, Vec<usize>);

/// Symbols the memo tables may hold before they are cleared.
const MEMO_SYMBOL_LIMIT: usize = 1 << 23;

/// Bisimulation checker with memo tables shared across queries on one
/// machine.
#[derive(Debug)]
pub struct ProductionEquivalence<'m> {
    machine: &'m MealyMachine,
    equal: HashSet<Pair>,
    unequal: HashSet<Pair>,
    memo_symbols: usize,
    explored: usize,
    work: u64,
    cancel_prefixes: bool,
}

impl<'m> ProductionEquivalence<'m> {
    pub fn new(machine: &'m MealyMachine) -> Self {
        ProductionEquivalence {
            machine,
            equal: HashSet::new(),
            unequal: HashSet::new(),
            memo_symbols: 0,
            explored: 0,
            work: 0,
            cancel_prefixes: machine.is_invertible(),
        }
    }

    /// Number of pairs expanded so far, across all queries.
    pub fn explored_pairs(&self) -> usize {
        self.explored
    }

    /// Symbols stepped through so far, across all queries.
    pub fn work(&self) -> u64 {
        self.work
    }

    fn remember(&mut self, equal: bool, pairs: impl IntoIterator<Item = Pair>) {
        for p in pairs {
            self.memo_symbols += p.0.len() + p.1.len();
            if equal {
                self.equal.insert(p);
            } else {
                self.unequal.insert(p);
            }
        }
        if self.memo_symbols > MEMO_SYMBOL_LIMIT {
            self.equal.clear();
            self.unequal.clear();
            self.memo_symbols = 0;
        }
    }

    /// Whether `ρ_u = ρ_v`.
    pub fn equal(&mut self, u: &[usize], v: &[usize]) -> bool {
        self.equal_within(u, v, u64::MAX).expect("unbounded query")
    }

    /// Like [`equal`](Self::equal), but gives up with `None` once the total
    /// [`work`](Self::work) would exceed `limit`. Nothing is remembered for an
    /// abandoned query.
    pub fn equal_within(&mut self, u: &[usize], v: &[usize], limit: u64) -> Option<bool> {
        if u == v {
            return Some(true);
        }
        let start = self.normalize(u.to_vec(), v.to_vec());
        if start.0 == start.1 {
            return Some(true);
        }
        if self.equal.contains(&start) {
            return Some(true);
        }
        if self.unequal.contains(&start) {
            return Some(false);
        }

        let m = self.machine;
        let mut visited: HashSet<Pair> = HashSet::new();
        let mut queue: VecDeque<Pair> = VecDeque::new();
        visited.insert(start.clone());
        queue.push_back(start.clone());
        while let Some((a, b)) = queue.pop_front() {
            let cost = ((a.len() + b.len()) * m.letter_count()) as u64;
            if self.work.saturating_add(cost) > limit {
                return None;
            }
            self.explored += 1;
            self.work += cost;
            for i in 0..m.letter_count() {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                let oa = m.step_word(&mut a2, i);
                let ob = m.step_word(&mut b2, i);
                if oa != ob {
                    self.remember(false, [start]);
                    return Some(false);
                }
                let next = self.normalize(a2, b2);
                if next.0 == next.1 {
                    continue;
                }
                if self.equal.contains(&next) {
                    continue;
                }
                if self.unequal.contains(&next) {
                    self.remember(false, [start]);
                    return Some(false);
                }
                if visited.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        // the visited set is closed and consistent: a bisimulation
        self.remember(true, visited);
        Some(true)
    }
}

impl ProductionEquivalence<'_> {
    fn normalize(&self, mut a: Vec<usize>, mut b: Vec<usize>) -> Pair {
        if self.cancel_prefixes {
            let common = a.iter().zip(&b).take_while(|(p, q)| p == q).count();
            if common > 0 {
                a.drain(..common);
                b.drain(..common);
            }
        }
        ordered(a, b)
    }
}

fn ordered(a: Vec<usize>, b: Vec<usize>) -> Pair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// `ρ_u = ρ_v` for state words `u`, `v` of `m`.
pub fn equal_production(m: &MealyMachine, u: &[usize], v: &[usize]) -> bool {
    ProductionEquivalence::new(m).equal(u, v)
}
