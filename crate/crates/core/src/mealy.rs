//! Mealy automata `(A, Σ, δ, ρ)`: duals, inverses, powers and the
//! production functions on words.

use crate::automaton::{is_permutation, Automaton};
use crate::error::{Error, Result};
use crate::symbols::SymbolTable;

/// Default cap on the number of states `power` materializes.
pub const DEFAULT_POWER_CAP: usize = 1_000_000;

const INVERSE_SUFFIX: &str = "^-1";

/// A letter-to-letter transducer: an automaton enriched with one output
/// function per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MealyMachine {
    automaton: Automaton,
    /// `rho[state][letter]`
    rho: Vec<Vec<usize>>,
}

impl MealyMachine {
    /// Enriches `automaton` with `rho[state][letter]`.
    pub fn new(automaton: Automaton, rho: Vec<Vec<usize>>) -> Result<Self> {
        if rho.len() != automaton.state_count() {
            return Err(Error::PreconditionViolated(format!(
                "{} output functions for {} states",
                rho.len(),
                automaton.state_count()
            )));
        }
        for row in &rho {
            if row.len() != automaton.letter_count() {
                return Err(Error::PreconditionViolated(
                    "output function not total on the alphabet".into(),
                ));
            }
            if let Some(&bad) = row.iter().find(|&&j| j >= automaton.letter_count()) {
                return Err(Error::UnknownSymbol {
                    index: bad,
                    size: automaton.letter_count(),
                });
            }
        }
        Ok(MealyMachine { automaton, rho })
    }

    /// Every state outputs its input letter.
    pub fn with_identity_outputs(automaton: Automaton) -> Self {
        let rho = vec![(0..automaton.letter_count()).collect(); automaton.state_count()];
        MealyMachine { automaton, rho }
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    pub fn states(&self) -> &SymbolTable {
        self.automaton.states()
    }

    pub fn letters(&self) -> &SymbolTable {
        self.automaton.letters()
    }

    pub fn state_count(&self) -> usize {
        self.automaton.state_count()
    }

    pub fn letter_count(&self) -> usize {
        self.automaton.letter_count()
    }

    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.automaton.next(state, letter)
    }

    /// `ρ_state(letter)`
    #[inline]
    pub fn output(&self, state: usize, letter: usize) -> usize {
        self.rho[state][letter]
    }

    pub fn output_function(&self, state: usize) -> &[usize] {
        &self.rho[state]
    }

    pub fn rho_table(&self) -> &[Vec<usize>] {
        &self.rho
    }

    /// Every output function is a permutation of the alphabet.
    pub fn is_invertible(&self) -> bool {
        self.rho
            .iter()
            .all(|row| is_permutation(row, self.letter_count()))
    }

    pub fn is_reversible(&self) -> bool {
        self.automaton.is_reversible()
    }

    /// The machine and its inverse are both invertible and reversible.
    pub fn is_bireversible(&self) -> bool {
        if !self.is_invertible() || !self.is_reversible() {
            return false;
        }
        let inv = self.inverse().expect("invertible");
        inv.is_invertible() && inv.is_reversible()
    }

    /// The inverse machine: `x⁻¹ --j|i--> y⁻¹` for every `x --i|j--> y`.
    ///
    /// State `x` becomes `x^-1`; a name already ending in `^-1` loses the
    /// suffix, so taking the inverse twice restores the original names.
    pub fn inverse(&self) -> Result<MealyMachine> {
        let n = self.state_count();
        let k = self.letter_count();
        if let Some(x) = (0..n).find(|&x| !is_permutation(&self.rho[x], k)) {
            return Err(Error::NotInvertible {
                state: self.states().name(x).to_string(),
            });
        }
        let names: Vec<String> = self.states().names().iter().map(|s| inverse_name(s)).collect();
        let states = SymbolTable::new(names).expect("inverse naming is injective");
        let mut delta = vec![vec![0; n]; k];
        let mut rho = vec![vec![0; k]; n];
        for x in 0..n {
            for i in 0..k {
                let j = self.rho[x][i];
                delta[j][x] = self.next(x, i);
                rho[x][j] = i;
            }
        }
        let a = Automaton::from_table(states, self.letters().clone(), delta)?;
        MealyMachine::new(a, rho)
    }

    /// The dual machine `(Σ, A, ρ, δ)`: `x --i|j--> y` becomes `i --x|y--> j`.
    pub fn dual(&self) -> MealyMachine {
        let delta = self.rho.clone();
        let n = self.state_count();
        let k = self.letter_count();
        let rho: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..n).map(|x| self.next(x, i)).collect())
            .collect();
        let a = Automaton::from_table(self.letters().clone(), self.states().clone(), delta)
            .expect("dual of a valid machine is well formed");
        MealyMachine { automaton: a, rho }
    }

    /// Feeds `letter` through the state word `u` left to right, replacing
    /// `u` by `δ_letter(u)` in place and returning `ρ_u(letter)`.
    #[inline]
    pub fn step_word(&self, u: &mut [usize], mut letter: usize) -> usize {
        for x in u.iter_mut() {
            let out = self.rho[*x][letter];
            *x = self.automaton.next(*x, letter);
            letter = out;
        }
        letter
    }

    /// `ρ_x(s)` for a single state, written into `out`.
    #[inline]
    pub fn transduce_into(&self, mut state: usize, s: &[usize], out: &mut Vec<usize>) {
        out.clear();
        for &i in s {
            out.push(self.rho[state][i]);
            state = self.automaton.next(state, i);
        }
    }

    /// `ρ_u(s) = ρ_{x_n} ∘ ⋯ ∘ ρ_{x_1}(s)`; the empty state word acts as
    /// the identity.
    pub fn apply_rho(&self, u: &[usize], s: &[usize]) -> Result<Vec<usize>> {
        self.check_states(u)?;
        self.check_letters(s)?;
        let mut cur = s.to_vec();
        let mut buf = Vec::with_capacity(s.len());
        for &x in u {
            self.transduce_into(x, &cur, &mut buf);
            std::mem::swap(&mut cur, &mut buf);
        }
        Ok(cur)
    }

    /// `δ_s(u) = δ_{i_n} ∘ ⋯ ∘ δ_{i_1}(u)`, the dual production function.
    pub fn apply_delta(&self, s: &[usize], u: &[usize]) -> Result<Vec<usize>> {
        self.check_states(u)?;
        self.check_letters(s)?;
        let mut cur = u.to_vec();
        for &i in s {
            self.step_word(&mut cur, i);
        }
        Ok(cur)
    }

    /// The `n`-th power: states are the words of `A^n` (lexicographic
    /// order, first symbol most significant), `δ_i` acts letter-wise
    /// through the word and `ρ_u` is the composed output.
    pub fn power(&self, n: usize) -> Result<MealyMachine> {
        self.power_with_cap(n, DEFAULT_POWER_CAP)
    }

    pub fn power_with_cap(&self, n: usize, cap: usize) -> Result<MealyMachine> {
        if n == 0 {
            return Err(Error::PreconditionViolated("power exponent must be at least 1".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let base = self.state_count();
        let count = (base as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if count > cap as u128 {
            return Err(Error::BudgetExceeded { states: count, cap });
        }
        let count = count as usize;
        let k = self.letter_count();
        let mut names = Vec::with_capacity(count);
        let mut delta = vec![vec![0; count]; k];
        let mut rho = vec![vec![0; k]; count];
        let mut word = vec![0usize; n];
        let mut scratch = vec![0usize; n];
        for idx in 0..count {
            decode_word(idx, base, &mut word);
            names.push(self.states().render_word(&word));
            for i in 0..k {
                scratch.copy_from_slice(&word);
                rho[idx][i] = self.step_word(&mut scratch, i);
                delta[i][idx] = encode_word(&scratch, base);
            }
        }
        let states = SymbolTable::new(names).map_err(|dup| {
            Error::PreconditionViolated(format!("power state name `{dup}` is ambiguous"))
        })?;
        let a = Automaton::from_table(states, self.letters().clone(), delta)?;
        MealyMachine::new(a, rho)
    }

    fn check_states(&self, u: &[usize]) -> Result<()> {
        check_range(u, self.state_count())
    }

    fn check_letters(&self, s: &[usize]) -> Result<()> {
        check_range(s, self.letter_count())
    }
}

fn check_range(word: &[usize], size: usize) -> Result<()> {
    match word.iter().find(|&&c| c >= size) {
        Some(&index) => Err(Error::UnknownSymbol { index, size }),
        None => Ok(()),
    }
}

fn inverse_name(name: &str) -> String {
    match name.strip_suffix(INVERSE_SUFFIX) {
        Some(base) => base.to_string(),
        None => format!("{name}{INVERSE_SUFFIX}"),
    }
}

/// Writes the base-`base` digits of `idx` into `word` (most significant first).
pub fn decode_word(mut idx: usize, base: usize, word: &mut [usize]) {
    for slot in word.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
}

pub fn encode_word(word: &[usize], base: usize) -> usize {
    word.iter().fold(0, |acc, &d| acc * base + d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn w(m: &SymbolTable, s: &str) -> Vec<usize> {
        m.parse_word(s).unwrap()
    }

    #[test]
    fn adding_machine_is_invertible_not_bireversible() {
        let m = catalog::adding_machine();
        assert!(m.is_invertible());
        assert!(!m.is_reversible());
        assert!(!m.is_bireversible());
    }

    #[test]
    fn constant_output_not_invertible() {
        let a = catalog::adding_machine_automaton();
        let m = MealyMachine::new(a, vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert!(!m.is_invertible());
        assert!(matches!(m.inverse(), Err(Error::NotInvertible { state }) if state == "x"));
    }

    #[test]
    fn identity_machine_is_bireversible() {
        let a = Automaton::from_names(&["p"], &["0", "1"], vec![vec![0], vec![0]]).unwrap();
        let m = MealyMachine::with_identity_outputs(a);
        assert!(m.is_invertible());
        assert!(m.is_bireversible());
        let inv = m.inverse().unwrap();
        assert_eq!(inv.states().name(0), "p^-1");
        assert_eq!(inv.rho_table(), m.rho_table());
        assert_eq!(inv.automaton().delta_table(), m.automaton().delta_table());
    }

    #[test]
    fn adding_machine_inverse() {
        let m = catalog::adding_machine();
        let inv = m.inverse().unwrap();
        let (xi, yi) = (inv.states().id("x^-1").unwrap(), inv.states().id("y^-1").unwrap());
        let (l0, l1) = (0, 1);
        // x⁻¹: 1|0 -> y⁻¹, 0|1 -> x⁻¹
        assert_eq!((inv.next(xi, l1), inv.output(xi, l1)), (yi, l0));
        assert_eq!((inv.next(xi, l0), inv.output(xi, l0)), (xi, l1));
        // y⁻¹ loops with identity output
        assert_eq!((inv.next(yi, l0), inv.output(yi, l0)), (yi, l0));
        assert_eq!((inv.next(yi, l1), inv.output(yi, l1)), (yi, l1));
        assert_eq!(inv.inverse().unwrap(), m);
    }

    #[test]
    fn dual_of_adding_machine_is_figure_two() {
        let m = catalog::adding_machine();
        assert_eq!(m.dual(), catalog::adding_machine_dual());
        assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn dual_of_single_state_machine_has_one_letter() {
        let a = Automaton::from_names(&["p"], &["0", "1"], vec![vec![0], vec![0]]).unwrap();
        let d = MealyMachine::with_identity_outputs(a).dual();
        assert_eq!(d.state_count(), 2);
        assert_eq!(d.letter_count(), 1);
        assert!(!d.automaton().validate().is_empty());
    }

    #[test]
    fn apply_rho_binary_addition() {
        let m = catalog::adding_machine();
        let (st, lt) = (m.states().clone(), m.letters().clone());
        let x = w(&st, "x");
        for (input, expected) in [("00", "10"), ("10", "01"), ("01", "11"), ("11", "00")] {
            assert_eq!(m.apply_rho(&x, &w(&lt, input)).unwrap(), w(&lt, expected));
        }
        assert_eq!(m.apply_rho(&[], &w(&lt, "0110")).unwrap(), w(&lt, "0110"));
        assert_eq!(m.apply_rho(&w(&st, "xy"), &w(&lt, "0")).unwrap(), w(&lt, "1"));
        assert!(matches!(m.apply_rho(&[2], &[0]), Err(Error::UnknownSymbol { .. })));
    }

    #[test]
    fn apply_delta_examples() {
        let m = catalog::adding_machine();
        let (st, lt) = (m.states().clone(), m.letters().clone());
        assert_eq!(m.apply_delta(&w(&lt, "0"), &w(&st, "xy")).unwrap(), w(&st, "yy"));
        assert_eq!(m.apply_delta(&[], &w(&st, "xyx")).unwrap(), w(&st, "xyx"));
    }

    #[test]
    fn power_examples() {
        let m = catalog::adding_machine();
        assert_eq!(m.power(1).unwrap(), m);
        let p2 = m.power(2).unwrap();
        assert_eq!(p2.state_count(), 4);
        let xx = p2.states().id("xx").unwrap();
        assert_eq!(p2.output(xx, 0), 0);
        assert!(matches!(m.power_with_cap(21, 1_000_000), Err(Error::BudgetExceeded { .. })));

        let r = MealyMachine::with_identity_outputs(catalog::fig3_pruned_automaton());
        assert!(r.power(2).unwrap().is_reversible());
    }
}
