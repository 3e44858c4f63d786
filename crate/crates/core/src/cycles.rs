//! Cycles of an automaton and their exits.

use std::collections::VecDeque;

use serde::Serialize;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::graph;

/// Transitions `x_1 --i_1--> x_2, …, x_n --i_n--> x_1` through pairwise
/// distinct states. A self-loop is a cycle of length one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cycle {
    pub states: Vec<usize>,
    pub letters: Vec<usize>,
}

impl Cycle {
    /// Checks the cycle against `a`.
    pub fn new(a: &Automaton, states: Vec<usize>, letters: Vec<usize>) -> Result<Cycle> {
        let c = Cycle { states, letters };
        c.check(a)?;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, state: usize) -> bool {
        self.states.contains(&state)
    }

    pub fn position(&self, state: usize) -> Option<usize> {
        self.states.iter().position(|&x| x == state)
    }

    /// Successor of position `k` along the cycle.
    pub fn successor(&self, k: usize) -> usize {
        self.states[(k + 1) % self.len()]
    }

    /// The label read from the state at position `k` (0-based):
    /// `i_k ⋯ i_n i_1 ⋯ i_{k-1}`.
    pub fn label_from(&self, k: usize) -> Option<Vec<usize>> {
        if k >= self.len() {
            return None;
        }
        Some(
            self.letters[k..]
                .iter()
                .chain(&self.letters[..k])
                .copied()
                .collect(),
        )
    }

    /// The same cycle read from the state at position `k`.
    pub fn rotated(&self, k: usize) -> Cycle {
        let mut states = self.states.clone();
        let mut letters = self.letters.clone();
        states.rotate_left(k % self.len().max(1));
        letters.rotate_left(k % self.len().max(1));
        Cycle { states, letters }
    }

    fn check(&self, a: &Automaton) -> Result<()> {
        if self.states.is_empty() {
            return Err(Error::NotACycle("empty".into()));
        }
        if self.states.len() != self.letters.len() {
            return Err(Error::NotACycle("states and letters differ in length".into()));
        }
        for (k, &x) in self.states.iter().enumerate() {
            if x >= a.state_count() || self.letters[k] >= a.letter_count() {
                return Err(Error::NotACycle(format!("symbol out of range at position {k}")));
            }
            if self.states[..k].contains(&x) {
                return Err(Error::NotACycle(format!(
                    "state `{}` repeated",
                    a.states().name(x)
                )));
            }
            if a.next(x, self.letters[k]) != self.successor(k) {
                return Err(Error::NotACycle(format!(
                    "`{}` does not reach `{}` on `{}`",
                    a.states().name(x),
                    a.states().name(self.successor(k)),
                    a.letters().name(self.letters[k])
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitKind {
    External,
    Internal,
}

/// A transition `from --letter--> to` leaving a cycle state other than
/// along the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Exit {
    pub from: usize,
    pub letter: usize,
    pub to: usize,
    pub kind: ExitKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleClass {
    WithExternalExit,
    WithInternalExitOnly,
    WithoutExit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExitReport {
    pub cycle: Cycle,
    pub exits: Vec<Exit>,
    pub classification: CycleClass,
}

/// Examines every (cycle state, letter) pair and lists the exits.
pub fn classify_exits(a: &Automaton, c: &Cycle) -> Result<ExitReport> {
    c.check(a)?;
    let mut exits = Vec::new();
    for (k, &x) in c.states.iter().enumerate() {
        let succ = c.successor(k);
        for i in 0..a.letter_count() {
            let to = a.next(x, i);
            let kind = if !c.contains(to) {
                ExitKind::External
            } else if to != succ {
                ExitKind::Internal
            } else {
                continue;
            };
            exits.push(Exit { from: x, letter: i, to, kind });
        }
    }
    let classification = if exits.iter().any(|e| e.kind == ExitKind::External) {
        CycleClass::WithExternalExit
    } else if exits.is_empty() {
        CycleClass::WithoutExit
    } else {
        CycleClass::WithInternalExitOnly
    };
    Ok(ExitReport {
        cycle: c.clone(),
        exits,
        classification,
    })
}

/// A cycle together with one of its exits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub cycle: Cycle,
    pub exit: Exit,
}

/// Finds a cycle with exit, returned with an external exit, or `None` when
/// every on-cycle state has a single distinct successor.
///
/// The witness is grown from the smallest on-cycle state with two distinct
/// successors: the smallest letter staying in its strongly connected
/// component starts the cycle, a shortest path closes it. An internal exit
/// is then rerouted into an external one.
pub fn has_cycle_with_exit(a: &Automaton) -> Option<CycleWitness> {
    let on_cycle = a.on_cycle_states();
    let succ = a.successors();
    let x = (0..a.state_count()).find(|&x| on_cycle[x] && succ[x].len() >= 2)?;
    let scc = a.scc_labels();
    let cycle = cycle_through(a, x, &scc).expect("on-cycle state lies on a cycle");
    let along = a.next(x, cycle.letters[0]);
    let letter = (0..a.letter_count())
        .find(|&i| a.next(x, i) != along)
        .expect("two distinct successors");
    let to = a.next(x, letter);
    let kind = if cycle.contains(to) {
        ExitKind::Internal
    } else {
        ExitKind::External
    };
    let exit = Exit { from: x, letter, to, kind };
    Some(match kind {
        ExitKind::External => CycleWitness { cycle, exit },
        ExitKind::Internal => {
            let (cycle, exit) = externalize(a, &cycle, &exit).expect("internal exit of the cycle");
            CycleWitness { cycle, exit }
        }
    })
}

/// A simple cycle through `x` inside its strongly connected component,
/// starting with the smallest letter that stays in the component and closed
/// by a shortest path (letters tried in ascending order).
pub fn cycle_through(a: &Automaton, x: usize, scc: &[usize]) -> Option<Cycle> {
    let first = (0..a.letter_count()).find(|&i| scc[a.next(x, i)] == scc[x])?;
    let start = a.next(x, first);
    if start == x {
        return Some(Cycle {
            states: vec![x],
            letters: vec![first],
        });
    }
    // BFS from `start` back to `x` within the component
    let n = a.state_count();
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if v == x {
            break;
        }
        for i in 0..a.letter_count() {
            let w = a.next(v, i);
            if scc[w] == scc[x] && !seen[w] {
                seen[w] = true;
                pred[w] = Some((v, i));
                queue.push_back(w);
            }
        }
    }
    if !seen[x] {
        return None;
    }
    let mut back = Vec::new();
    let mut v = x;
    while v != start {
        let (p, i) = pred[v].expect("bfs tree");
        back.push((p, i));
        v = p;
    }
    back.reverse();
    let mut states = vec![x];
    let mut letters = vec![first];
    for (p, i) in back {
        states.push(p);
        letters.push(i);
    }
    Some(Cycle { states, letters })
}

/// Reroutes a cycle through one of its internal exits.
///
/// For an internal exit `x_k --i--> x_m`, the result is the cycle
/// `x_m → ⋯ → x_k --i--> x_m`; the dropped cycle transition
/// `x_k --i_k--> x_{k+1}` is its external exit.
pub fn externalize(a: &Automaton, c: &Cycle, e: &Exit) -> Result<(Cycle, Exit)> {
    let report = classify_exits(a, c)?;
    if e.kind != ExitKind::Internal || !report.exits.contains(e) {
        return Err(Error::PreconditionViolated(
            "exit is not an internal exit of the cycle".into(),
        ));
    }
    let k = c.position(e.from).expect("exit source on cycle");
    let m = c.position(e.to).expect("internal exit target on cycle");
    let n = c.len();
    let mut states = Vec::new();
    let mut letters = Vec::new();
    let mut p = m;
    while p != k {
        states.push(c.states[p]);
        letters.push(c.letters[p]);
        p = (p + 1) % n;
    }
    states.push(c.states[k]);
    letters.push(e.letter);
    let cycle = Cycle { states, letters };
    let exit = Exit {
        from: c.states[k],
        letter: c.letters[k],
        to: c.successor(k),
        kind: ExitKind::External,
    };
    debug_assert!(classify_exits(a, &cycle)
        .map(|r| r.classification == CycleClass::WithExternalExit && r.exits.contains(&exit))
        .unwrap_or(false));
    Ok((cycle, exit))
}

/// Result of removing the states not reachable from any cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pruned {
    pub automaton: Automaton,
    /// Original id of each kept state.
    pub kept: Vec<usize>,
    /// Original ids of the removed states.
    pub removed: Vec<usize>,
}

impl Pruned {
    /// Kept id of an original state, if it survived.
    pub fn new_id(&self, original: usize) -> Option<usize> {
        self.kept.iter().position(|&x| x == original)
    }
}

/// Keeps exactly the states reachable (possibly trivially) from an on-cycle
/// state.
pub fn prune(a: &Automaton) -> Result<Pruned> {
    let on_cycle = a.on_cycle_states();
    let sources = (0..a.state_count()).filter(|&x| on_cycle[x]);
    let keep = graph::reachable_from(&a.successors(), sources);
    let (automaton, kept) = a.induced(&keep)?;
    let removed = (0..a.state_count()).filter(|&x| !keep[x]).collect();
    Ok(Pruned {
        automaton,
        kept,
        removed,
    })
}

/// Whether `from --letter--> δ_letter(from)` lies on some cycle.
pub fn transition_on_cycle(a: &Automaton, from: usize, letter: usize) -> bool {
    let scc = a.scc_labels();
    scc[from] == scc[a.next(from, letter)]
}

/// A cycle whose external exit leads to a state that cannot return to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoReturnWitness {
    pub cycle: Cycle,
    pub exit: Exit,
}

/// Searches transitions in declaration order (state, then letter) for one
/// leaving a cyclic strongly connected component; the cycle is grown through
/// its source. Such a transition exists iff some transition of a pruned
/// automaton lies on no cycle.
pub fn find_no_return_exit(a: &Automaton) -> Option<NoReturnWitness> {
    let on_cycle = a.on_cycle_states();
    let scc = a.scc_labels();
    for x in 0..a.state_count() {
        if !on_cycle[x] {
            continue;
        }
        for i in 0..a.letter_count() {
            let y = a.next(x, i);
            if scc[y] != scc[x] {
                let cycle = cycle_through(a, x, &scc).expect("on-cycle state");
                return Some(NoReturnWitness {
                    cycle,
                    exit: Exit {
                        from: x,
                        letter: i,
                        to: y,
                        kind: ExitKind::External,
                    },
                });
            }
        }
    }
    None
}

/// Whether any state of `targets` is reachable from `from`.
pub fn reaches_any(a: &Automaton, from: usize, targets: &[usize]) -> bool {
    let seen = graph::reachable_from(&a.successors(), [from]);
    targets.iter().any(|&t| seen[t])
}
