//! Complete deterministic automata `(A, Σ, δ)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, UnionFind};
use crate::symbols::SymbolTable;

/// A violated well-formedness condition, reported by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    EmptyStateset,
    AlphabetTooSmall { size: usize },
    DuplicateState { state: String },
    DuplicateLetter { letter: String },
    UnknownState { state: String },
    UnknownLetter { letter: String },
    Incomplete { state: String, letter: String },
    Nondeterministic { state: String, letter: String },
    MissingOutput { state: String, letter: String },
    UnexpectedOutput { state: String, letter: String },
}

impl Diagnostic {
    /// Fatal diagnostics prevent construction. A one-letter alphabet is
    /// constructible (duals of one-state machines have one) but flagged.
    pub fn is_fatal(&self) -> bool {
        !matches!(self, Diagnostic::AlphabetTooSmall { .. })
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::EmptyStateset => write!(f, "empty stateset"),
            Diagnostic::AlphabetTooSmall { size } => {
                write!(f, "alphabet too small: {size} letter(s), at least 2 required")
            }
            Diagnostic::DuplicateState { state } => write!(f, "duplicate state `{state}`"),
            Diagnostic::DuplicateLetter { letter } => write!(f, "duplicate letter `{letter}`"),
            Diagnostic::UnknownState { state } => write!(f, "unknown state `{state}`"),
            Diagnostic::UnknownLetter { letter } => write!(f, "unknown letter `{letter}`"),
            Diagnostic::Incomplete { state, letter } => {
                write!(f, "incomplete: no transition from `{state}` on `{letter}`")
            }
            Diagnostic::Nondeterministic { state, letter } => {
                write!(f, "nondeterministic: several transitions from `{state}` on `{letter}`")
            }
            Diagnostic::MissingOutput { state, letter } => {
                write!(f, "missing output for `{state}` on `{letter}`")
            }
            Diagnostic::UnexpectedOutput { state, letter } => {
                write!(f, "output given for `{state}` on `{letter}` in a plain automaton")
            }
        }
    }
}

/// Stateset, alphabet and one total transition function per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    states: SymbolTable,
    letters: SymbolTable,
    /// `delta[letter][state]`
    delta: Vec<Vec<usize>>,
}

impl Automaton {
    /// Builds an automaton from interned tables and `delta[letter][state]`.
    pub fn from_table(states: SymbolTable, letters: SymbolTable, delta: Vec<Vec<usize>>) -> Result<Self> {
        let mut diags = Vec::new();
        if states.is_empty() {
            diags.push(Diagnostic::EmptyStateset);
        }
        if delta.len() != letters.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} transition functions for {} letters",
                delta.len(),
                letters.len()
            )));
        }
        for (i, row) in delta.iter().enumerate() {
            if row.len() != states.len() {
                for x in row.len()..states.len() {
                    diags.push(Diagnostic::Incomplete {
                        state: states.name(x).to_string(),
                        letter: letters.name(i).to_string(),
                    });
                }
            }
            if let Some(&bad) = row.iter().find(|&&y| y >= states.len()) {
                return Err(Error::UnknownSymbol {
                    index: bad,
                    size: states.len(),
                });
            }
        }
        if !diags.is_empty() {
            return Err(Error::Invalid(diags));
        }
        Ok(Automaton { states, letters, delta })
    }

    /// Convenience constructor from names and `delta[letter][state]`.
    pub fn from_names(states: &[&str], letters: &[&str], delta: Vec<Vec<usize>>) -> Result<Self> {
        let st = SymbolTable::new(states.iter().copied()).map_err(|s| {
            Error::Invalid(vec![Diagnostic::DuplicateState { state: s }])
        })?;
        let lt = SymbolTable::new(letters.iter().copied()).map_err(|l| {
            Error::Invalid(vec![Diagnostic::DuplicateLetter { letter: l }])
        })?;
        Automaton::from_table(st, lt, delta)
    }

    pub fn states(&self) -> &SymbolTable {
        &self.states
    }

    pub fn letters(&self) -> &SymbolTable {
        &self.letters
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    /// `δ_letter(state)`
    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.delta[letter][state]
    }

    /// The transition function of one letter, indexed by state.
    pub fn transition_function(&self, letter: usize) -> &[usize] {
        &self.delta[letter]
    }

    pub fn delta_table(&self) -> &[Vec<usize>] {
        &self.delta
    }

    /// Diagnostics for a constructed automaton; empty means valid.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut diags = Vec::new();
        if self.states.is_empty() {
            diags.push(Diagnostic::EmptyStateset);
        }
        if self.letters.len() < 2 {
            diags.push(Diagnostic::AlphabetTooSmall {
                size: self.letters.len(),
            });
        }
        diags
    }

    /// Every transition function is a permutation of the stateset.
    pub fn is_reversible(&self) -> bool {
        self.delta.iter().all(|row| is_permutation(row, self.states.len()))
    }

    /// Successor lists of the underlying digraph, duplicates removed,
    /// in letter order of first appearance.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        (0..self.state_count())
            .map(|x| {
                let mut out: Vec<usize> = Vec::with_capacity(self.letter_count());
                for i in 0..self.letter_count() {
                    let y = self.next(x, i);
                    if !out.contains(&y) {
                        out.push(y);
                    }
                }
                out
            })
            .collect()
    }

    /// Strongly connected component label per state (sinks first).
    pub fn scc_labels(&self) -> Vec<usize> {
        graph::strongly_connected_components(&self.successors())
    }

    /// States lying on some cycle: members of a non-trivial strongly
    /// connected component, or carrying a self-loop.
    pub fn on_cycle_states(&self) -> Vec<bool> {
        let scc = self.scc_labels();
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for &c in &scc {
            *sizes.entry(c).or_default() += 1;
        }
        (0..self.state_count())
            .map(|x| sizes[&scc[x]] > 1 || (0..self.letter_count()).any(|i| self.next(x, i) == x))
            .collect()
    }

    /// Weakly connected components of the underlying digraph.
    pub fn connected_components(&self) -> ComponentPartition {
        let mut uf = UnionFind::new(self.state_count());
        for row in &self.delta {
            for (x, &y) in row.iter().enumerate() {
                uf.union(x, y);
            }
        }
        ComponentPartition::from_labels(&uf.labels())
    }

    /// Keeps only the listed letters (deduplicated, original order).
    pub fn restrict_alphabet(&self, letters: &[usize]) -> Result<Automaton> {
        let mut keep: Vec<usize> = Vec::new();
        for &l in letters {
            if l >= self.letter_count() {
                return Err(Error::UnknownSymbol {
                    index: l,
                    size: self.letter_count(),
                });
            }
            if !keep.contains(&l) {
                keep.push(l);
            }
        }
        keep.sort_unstable();
        let names: Vec<&str> = keep.iter().map(|&l| self.letters.name(l)).collect();
        let lt = SymbolTable::new(names).expect("letter names are unique");
        let delta = keep.iter().map(|&l| self.delta[l].clone()).collect();
        Automaton::from_table(self.states.clone(), lt, delta)
    }

    /// Sub-automaton induced by `keep`, which must be closed under
    /// transitions. Returns the automaton and the old id of each new state.
    pub fn induced(&self, keep: &[bool]) -> Result<(Automaton, Vec<usize>)> {
        let old_ids: Vec<usize> = (0..self.state_count()).filter(|&x| keep[x]).collect();
        if old_ids.is_empty() {
            return Err(Error::EmptyResult);
        }
        let mut new_id = vec![usize::MAX; self.state_count()];
        for (n, &o) in old_ids.iter().enumerate() {
            new_id[o] = n;
        }
        let names: Vec<&str> = old_ids.iter().map(|&x| self.states.name(x)).collect();
        let st = SymbolTable::new(names).expect("state names are unique");
        let mut delta = Vec::with_capacity(self.letter_count());
        for row in &self.delta {
            let mut r = Vec::with_capacity(old_ids.len());
            for &x in &old_ids {
                let y = new_id[row[x]];
                if y == usize::MAX {
                    return Err(Error::PreconditionViolated(format!(
                        "kept state `{}` has a transition leaving the kept set",
                        self.states.name(x)
                    )));
                }
                r.push(y);
            }
            delta.push(r);
        }
        let a = Automaton::from_table(st, self.letters.clone(), delta)?;
        Ok((a, old_ids))
    }
}

pub(crate) fn is_permutation(f: &[usize], n: usize) -> bool {
    if f.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in f {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

/// Disjoint blocks of states covering the stateset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    /// Blocks ordered by smallest member; members ascending.
    pub fn from_labels(labels: &[usize]) -> Self {
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b[0]);
        ComponentPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn block_of(&self, state: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&state))
    }
}

/// Named transitions collected before validation. Used by the parser and by
/// tests that need to express malformed inputs.
#[derive(Debug, Clone, Default)]
pub struct MachineBuilder {
    states: Vec<String>,
    letters: Vec<String>,
    transitions: Vec<(String, String, String, Option<String>)>,
}

impl MachineBuilder {
    pub fn new<S: AsRef<str>>(states: &[S], letters: &[S]) -> Self {
        MachineBuilder {
            states: states.iter().map(|s| s.as_ref().to_string()).collect(),
            letters: letters.iter().map(|s| s.as_ref().to_string()).collect(),
            transitions: Vec::new(),
        }
    }

    pub fn transition(&mut self, from: &str, letter: &str, to: &str) -> &mut Self {
        self.transitions
            .push((from.to_string(), letter.to_string(), to.to_string(), None));
        self
    }

    pub fn mealy_transition(&mut self, from: &str, letter: &str, to: &str, output: &str) -> &mut Self {
        self.transitions.push((
            from.to_string(),
            letter.to_string(),
            to.to_string(),
            Some(output.to_string()),
        ));
        self
    }

    /// All diagnostics for the collected input read as a plain automaton
    /// (`mealy = false`) or as a Mealy machine.
    pub fn validate(&self, mealy: bool) -> Vec<Diagnostic> {
        self.assemble(mealy).err().unwrap_or_default()
    }

    pub fn build_automaton(&self) -> Result<Automaton> {
        self.assemble(false)
            .map(|(a, _)| a)
            .map_err(Error::Invalid)
    }

    pub fn build_mealy(&self) -> Result<crate::MealyMachine> {
        let (a, rho) = self.assemble(true).map_err(Error::Invalid)?;
        crate::MealyMachine::new(a, rho)
    }

    /// Returns the automaton plus `rho[state][letter]` (empty rows for
    /// plain automata), or every fatal diagnostic.
    #[allow(clippy::type_complexity)]
    fn assemble(&self, mealy: bool) -> std::result::Result<(Automaton, Vec<Vec<usize>>), Vec<Diagnostic>> {
        let mut diags = Vec::new();
        let states = match SymbolTable::new(self.states.iter().cloned()) {
            Ok(t) => t,
            Err(s) => {
                diags.push(Diagnostic::DuplicateState { state: s });
                SymbolTable::default()
            }
        };
        let letters = match SymbolTable::new(self.letters.iter().cloned()) {
            Ok(t) => t,
            Err(l) => {
                diags.push(Diagnostic::DuplicateLetter { letter: l });
                SymbolTable::default()
            }
        };
        if self.states.is_empty() {
            diags.push(Diagnostic::EmptyStateset);
        }
        if self.letters.len() < 2 {
            diags.push(Diagnostic::AlphabetTooSmall {
                size: self.letters.len(),
            });
        }
        if diags.iter().any(Diagnostic::is_fatal) {
            return Err(diags);
        }

        let n = states.len();
        let k = letters.len();
        let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; n]; k];
        let mut rho: Vec<Vec<Option<usize>>> = vec![vec![None; k]; n];
        for (from, letter, to, out) in &self.transitions {
            let x = states.id(from);
            let i = letters.id(letter);
            let y = states.id(to);
            let o = out.as_ref().map(|o| letters.id(o));
            if x.is_none() {
                diags.push(Diagnostic::UnknownState { state: from.clone() });
            }
            if y.is_none() {
                diags.push(Diagnostic::UnknownState { state: to.clone() });
            }
            if i.is_none() {
                diags.push(Diagnostic::UnknownLetter { letter: letter.clone() });
            }
            if let (Some(o), Some(name)) = (o, out) {
                if o.is_none() {
                    diags.push(Diagnostic::UnknownLetter { letter: name.clone() });
                }
            }
            let (Some(x), Some(i), Some(y)) = (x, i, y) else {
                continue;
            };
            if delta[i][x].is_some() {
                diags.push(Diagnostic::Nondeterministic {
                    state: from.clone(),
                    letter: letter.clone(),
                });
                continue;
            }
            delta[i][x] = Some(y);
            match (mealy, o) {
                (true, Some(Some(o))) => rho[x][i] = Some(o),
                (true, None) => diags.push(Diagnostic::MissingOutput {
                    state: from.clone(),
                    letter: letter.clone(),
                }),
                (false, Some(_)) => diags.push(Diagnostic::UnexpectedOutput {
                    state: from.clone(),
                    letter: letter.clone(),
                }),
                _ => {}
            }
        }
        for x in 0..n {
            for i in 0..k {
                if delta[i][x].is_none() {
                    diags.push(Diagnostic::Incomplete {
                        state: states.name(x).to_string(),
                        letter: letters.name(i).to_string(),
                    });
                }
            }
        }
        if diags.iter().any(Diagnostic::is_fatal) {
            return Err(diags);
        }
        let delta = delta
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap).collect())
            .collect();
        let rho = if mealy {
            rho.into_iter()
                .map(|row| row.into_iter().map(Option::unwrap).collect())
                .collect()
        } else {
            Vec::new()
        };
        let a = Automaton::from_table(states, letters, delta).map_err(|e| match e {
            Error::Invalid(d) => d,
            other => panic!("unexpected construction error: {other}"),
        })?;
        Ok((a, rho))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn adding_machine_automaton_is_valid() {
        let a = catalog::adding_machine_automaton();
        assert!(a.validate().is_empty());
    }

    #[test]
    fn missing_entry_is_incomplete() {
        let mut b = MachineBuilder::new(&["x", "y"], &["0", "1"]);
        b.transition("x", "0", "y")
            .transition("y", "0", "y")
            .transition("y", "1", "y");
        let diags = b.validate(false);
        assert_eq!(
            diags,
            vec![Diagnostic::Incomplete {
                state: "x".into(),
                letter: "1".into()
            }]
        );
        assert!(diags[0].to_string().starts_with("incomplete"));
        assert!(matches!(b.build_automaton(), Err(Error::Invalid(_))));
    }

    #[test]
    fn duplicate_line_is_nondeterministic() {
        let mut b = MachineBuilder::new(&["x"], &["0", "1"]);
        b.transition("x", "0", "x")
            .transition("x", "0", "x")
            .transition("x", "1", "x");
        assert!(matches!(
            b.validate(false).as_slice(),
            [Diagnostic::Nondeterministic { .. }]
        ));
    }

    #[test]
    fn single_state_self_loops_valid() {
        let a = Automaton::from_names(&["p"], &["0", "1"], vec![vec![0], vec![0]]).unwrap();
        assert!(a.validate().is_empty());
        assert!(a.is_reversible());
    }

    #[test]
    fn reversibility_examples() {
        assert!(!catalog::adding_machine_automaton().is_reversible());
        assert!(!catalog::fig3_automaton().is_reversible());
        assert!(catalog::fig3_pruned_automaton().is_reversible());
    }

    #[test]
    fn one_letter_alphabet_is_flagged_not_fatal() {
        let a = Automaton::from_names(&["p", "q"], &["0"], vec![vec![1, 0]]).unwrap();
        assert_eq!(a.validate(), vec![Diagnostic::AlphabetTooSmall { size: 1 }]);
    }

    #[test]
    fn components() {
        let a = catalog::adding_machine_automaton();
        assert_eq!(a.connected_components().blocks(), &[vec![0, 1]]);
        let f3 = catalog::fig3_automaton();
        assert_eq!(f3.connected_components().len(), 1);

        // two disjoint copies of the adding machine automaton
        let two = Automaton::from_names(
            &["x", "y", "x'", "y'"],
            &["0", "1"],
            vec![vec![1, 1, 3, 3], vec![0, 1, 2, 3]],
        )
        .unwrap();
        assert_eq!(two.connected_components().blocks(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn restrict_keeps_transitions() {
        let a = Automaton::from_names(
            &["p", "q"],
            &["a", "b", "c"],
            vec![vec![1, 0], vec![0, 0], vec![1, 1]],
        )
        .unwrap();
        let r = a.restrict_alphabet(&[2, 0]).unwrap();
        assert_eq!(r.letters().names(), &["a".to_string(), "c".to_string()]);
        assert_eq!(r.transition_function(0), a.transition_function(0));
        assert_eq!(r.transition_function(1), a.transition_function(2));
        let f3 = catalog::fig3_automaton();
        assert_eq!(f3.restrict_alphabet(&[0, 1]).unwrap(), f3);
    }
}
