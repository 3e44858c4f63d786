//! Reference machines used throughout the tests, the corpus and the demo.

use crate::automaton::Automaton;
use crate::mealy::MealyMachine;

/// Underlying automaton of the adding machine: `x --0--> y`, `x --1--> x`,
/// `y` loops on both letters.
pub fn adding_machine_automaton() -> Automaton {
    Automaton::from_names(&["x", "y"], &["0", "1"], vec![vec![1, 1], vec![0, 1]])
        .expect("well formed")
}

/// The adding machine: `ρ_x` swaps the letters, `ρ_y` is the identity.
pub fn adding_machine() -> MealyMachine {
    MealyMachine::new(adding_machine_automaton(), vec![vec![1, 0], vec![0, 1]])
        .expect("well formed")
}

/// Dual of the adding machine, transcribed transition by transition:
/// `0 --y|y--> 0`, `0 --x|y--> 1`, `1 --x|x--> 0`, `1 --y|y--> 1`.
pub fn adding_machine_dual() -> MealyMachine {
    let a = Automaton::from_names(&["0", "1"], &["x", "y"], vec![vec![1, 0], vec![0, 1]])
        .expect("well formed");
    MealyMachine::new(a, vec![vec![1, 1], vec![0, 1]]).expect("well formed")
}

/// Six-state automaton over `{a, b}` illustrating the three kinds of cycle.
pub fn fig3_automaton() -> Automaton {
    Automaton::from_names(
        &["1", "2", "3", "4", "5", "6"],
        &["a", "b"],
        vec![vec![1, 2, 3, 0, 1, 5], vec![1, 2, 0, 3, 5, 5]],
    )
    .expect("well formed")
}

/// [`fig3_automaton`] with state `5` removed; reversible.
pub fn fig3_pruned_automaton() -> Automaton {
    Automaton::from_names(
        &["1", "2", "3", "4", "6"],
        &["a", "b"],
        vec![vec![1, 2, 3, 0, 4], vec![1, 2, 0, 3, 4]],
    )
    .expect("well formed")
}

/// `p --0--> p`, `p --1--> q`, `q --0--> p`, `q --1--> p`: every transition
/// lies on a cycle but the automaton is not reversible.
pub fn two_state_irreversible() -> Automaton {
    Automaton::from_names(&["p", "q"], &["0", "1"], vec![vec![0, 0], vec![1, 0]])
        .expect("well formed")
}
