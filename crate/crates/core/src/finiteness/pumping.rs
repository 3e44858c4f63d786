//! Connected components of the powers of a reversible two-state machine.
//!
//! For such a machine the generated semigroup is infinite iff arbitrarily
//! long words `u` have `u·x` and `u·y` in one component of the next power,
//! and once some power splits up totally every later power does. A level
//! that splits up totally is therefore a finiteness certificate; witnesses
//! at every scanned level are only evidence.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::mealy::MealyMachine;

/// Default deepest level: `2^(level + 1)` power states stay below `10^6`.
pub const DEFAULT_MAX_LEVEL: usize = 18;

/// Components of `M^n` and how they extend into `M^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerLevel {
    pub level: usize,
    /// Component sizes of `M^level` as `(size, how many)`, ascending.
    pub component_sizes: Vec<(usize, usize)>,
    /// Components of `M^{level+1}` grouped as `(parent size in M^level,
    /// own size, how many)`, ascending.
    pub extensions: Vec<(usize, usize, usize)>,
    pub splits_totally: bool,
    /// First `u` (as state ids) with `u·x`, `u·y` in one component.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerTrace {
    pub levels: Vec<PowerLevel>,
}

impl PowerTrace {
    /// Whether every child component size is a multiple of its parent's.
    pub fn divisibility_holds(&self) -> bool {
        self.levels
            .iter()
            .flat_map(|l| &l.extensions)
            .all(|&(p, c, _)| p > 0 && c % p == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PumpingOutcome {
    /// `M^level` splits up totally.
    Finite { level: usize, trace: PowerTrace },
    /// Witness pairs at every scanned level.
    Unknown { trace: PowerTrace },
}

impl PumpingOutcome {
    pub fn trace(&self) -> &PowerTrace {
        match self {
            PumpingOutcome::Finite { trace, .. } | PumpingOutcome::Unknown { trace } => trace,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, PumpingOutcome::Finite { .. })
    }
}

fn check_reversible_two_state(m: &MealyMachine) -> Result<()> {
    if m.state_count() != 2 {
        return Err(Error::PreconditionViolated(format!(
            "pumping scan needs exactly two states, got {}",
            m.state_count()
        )));
    }
    if !m.is_reversible() {
        return Err(Error::PreconditionViolated("pumping scan needs a reversible machine".into()));
    }
    Ok(())
}

/// Scans levels `1..=max_level`, stopping at the first one that splits up
/// totally.
pub fn pumping_scan(m: &MealyMachine, max_level: usize) -> Result<PumpingOutcome> {
    check_reversible_two_state(m)?;
    let mut levels = Vec::new();
    let mut scanner = LevelScanner::new(m);
    for level in 1..=max_level {
        let l = scanner.next_level();
        let splits = l.splits_totally;
        levels.push(l);
        if splits {
            return Ok(PumpingOutcome::Finite {
                level,
                trace: PowerTrace { levels },
            });
        }
    }
    Ok(PumpingOutcome::Unknown {
        trace: PowerTrace { levels },
    })
}

/// Full trace of levels `1..=max_level`, without stopping early.
pub fn power_trace(m: &MealyMachine, max_level: usize) -> Result<PowerTrace> {
    check_reversible_two_state(m)?;
    let mut scanner = LevelScanner::new(m);
    let levels = (1..=max_level).map(|_| scanner.next_level()).collect();
    Ok(PowerTrace { levels })
}

/// Component labels of successive powers, indexed by the base-`|A|` code of
/// the state word.
struct LevelScanner<'m> {
    m: &'m MealyMachine,
    level: usize,
    current: Vec<usize>,
}

impl<'m> LevelScanner<'m> {
    fn new(m: &'m MealyMachine) -> Self {
        let current = component_labels(m, 1);
        LevelScanner { m, level: 1, current }
    }

    fn next_level(&mut self) -> PowerLevel {
        let base = self.m.state_count();
        let n = self.level;
        let child = component_labels(self.m, n + 1);
        let parent_sizes = label_sizes(&self.current);
        let child_sizes = label_sizes(&child);

        let mut parent_of_child = vec![usize::MAX; child_sizes.len()];
        for (v, &c) in child.iter().enumerate() {
            if parent_of_child[c] == usize::MAX {
                parent_of_child[c] = self.current[v / base];
            }
        }
        let mut ext: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (&p, &c) in parent_of_child.iter().zip(&child_sizes) {
            *ext.entry((parent_sizes[p], c)).or_default() += 1;
        }
        let extensions = ext.into_iter().map(|((p, c), k)| (p, c, k)).collect();
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for &s in &parent_sizes {
            *hist.entry(s).or_default() += 1;
        }

        let mut witness = None;
        for u in 0..self.current.len() {
            let first = child[u * base];
            if (1..base).any(|x| child[u * base + x] == first) {
                let mut w = vec![0; n];
                crate::mealy::decode_word(u, base, &mut w);
                witness = Some(w);
                break;
            }
        }

        let level = PowerLevel {
            level: n,
            component_sizes: hist.into_iter().collect(),
            extensions,
            splits_totally: witness.is_none(),
            witness,
        };
        self.current = child;
        self.level += 1;
        level
    }
}

/// Weak component labels of `M^n` (dense, numbered by first state).
fn component_labels(m: &MealyMachine, n: usize) -> Vec<usize> {
    let base = m.state_count();
    let count = base.pow(n as u32);
    let mut uf = UnionFind::new(count);
    let mut word = vec![0; n];
    let mut scratch = vec![0; n];
    for idx in 0..count {
        crate::mealy::decode_word(idx, base, &mut word);
        for i in 0..m.letter_count() {
            scratch.copy_from_slice(&word);
            m.step_word(&mut scratch, i);
            uf.union(idx, crate::mealy::encode_word(&scratch, base));
        }
    }
    uf.labels()
}

fn label_sizes(labels: &[usize]) -> Vec<usize> {
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0; count];
    for &l in labels {
        sizes[l] += 1;
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Automaton;
    use crate::catalog;

    #[test]
    fn adding_machine_dual_has_witnesses_everywhere() {
        let d = catalog::adding_machine().dual();
        assert!(d.is_reversible());
        let out = pumping_scan(&d, 10).unwrap();
        assert!(!out.is_finite());
        assert_eq!(out.trace().levels.len(), 10);
        assert!(out.trace().levels.iter().all(|l| l.witness.is_some()));
        assert!(out.trace().divisibility_holds());
    }

    #[test]
    fn swap_and_identity_splits() {
        let a = Automaton::from_names(&["p", "q"], &["0", "1"], vec![vec![1, 0], vec![0, 1]]).unwrap();
        let m = MealyMachine::with_identity_outputs(a);
        match pumping_scan(&m, 8).unwrap() {
            PumpingOutcome::Finite { level, .. } => assert_eq!(level, 1),
            other => panic!("expected finite, got {other:?}"),
        }
    }

    #[test]
    fn three_states_rejected() {
        let m = MealyMachine::with_identity_outputs(catalog::fig3_pruned_automaton());
        assert!(matches!(pumping_scan(&m, 4), Err(Error::PreconditionViolated(_))));
    }
}
