//! Seeded random automata and enrichments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::mealy::MealyMachine;
use crate::symbols::SymbolTable;

fn state_names(n: usize) -> SymbolTable {
    SymbolTable::new((0..n).map(|k| format!("q{k}"))).expect("unique")
}

fn letter_names(k: usize) -> SymbolTable {
    if k <= 10 {
        SymbolTable::new((0..k).map(|i| i.to_string())).expect("unique")
    } else {
        SymbolTable::new((0..k).map(|i| format!("l{i}"))).expect("unique")
    }
}

fn check_sizes(states: usize, letters: usize) -> Result<()> {
    if states == 0 || letters < 2 {
        return Err(Error::PreconditionViolated(format!(
            "need at least one state and two letters, got {states} and {letters}"
        )));
    }
    Ok(())
}

/// Uniform transition table.
pub fn random_automaton<R: Rng + ?Sized>(rng: &mut R, states: usize, letters: usize) -> Result<Automaton> {
    check_sizes(states, letters)?;
    let delta = (0..letters)
        .map(|_| (0..states).map(|_| rng.gen_range(0..states)).collect())
        .collect();
    Automaton::from_table(state_names(states), letter_names(letters), delta)
}

/// Every transition function a uniform permutation.
pub fn random_reversible_automaton<R: Rng + ?Sized>(
    rng: &mut R,
    states: usize,
    letters: usize,
) -> Result<Automaton> {
    check_sizes(states, letters)?;
    let delta = (0..letters)
        .map(|_| {
            let mut p: Vec<usize> = (0..states).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    Automaton::from_table(state_names(states), letter_names(letters), delta)
}

/// Enriches `a` with uniform permutations of the alphabet.
pub fn random_invertible_enrichment<R: Rng + ?Sized>(rng: &mut R, a: &Automaton) -> MealyMachine {
    let rho = (0..a.state_count())
        .map(|_| {
            let mut p: Vec<usize> = (0..a.letter_count()).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    MealyMachine::new(a.clone(), rho).expect("permutations are total")
}

/// Enriches `a` with uniform (not necessarily bijective) output functions.
pub fn random_enrichment<R: Rng + ?Sized>(rng: &mut R, a: &Automaton) -> MealyMachine {
    let k = a.letter_count();
    let rho = (0..a.state_count())
        .map(|_| (0..k).map(|_| rng.gen_range(0..k)).collect())
        .collect();
    MealyMachine::new(a.clone(), rho).expect("outputs in range")
}

/// Parameters of [`sample_no_exit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleParams {
    pub states: usize,
    pub letters: usize,
    pub seed: u64,
}

/// Samples an automaton with no cycle with exit.
///
/// The last `s ≥ 1` states form sink cycles on which every letter advances
/// to the same successor; each of the first `n - s` states sends every
/// letter to a strictly later state, so they lie on no cycle.
pub fn sample_no_exit(params: SampleParams) -> Result<Automaton> {
    use rand::SeedableRng;
    let SampleParams { states, letters, seed } = params;
    check_sizes(states, letters)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);

    let sinks = rng.gen_range(1..=states);
    let first_sink = states - sinks;
    let mut delta = vec![vec![0; states]; letters];

    // split the sink states into cycles of random lengths
    let mut order: Vec<usize> = (first_sink..states).collect();
    order.shuffle(&mut rng);
    let mut start = 0;
    while start < order.len() {
        let len = rng.gen_range(1..=order.len() - start);
        let cycle = &order[start..start + len];
        for (k, &x) in cycle.iter().enumerate() {
            let succ = cycle[(k + 1) % len];
            for row in delta.iter_mut() {
                row[x] = succ;
            }
        }
        start += len;
    }

    for x in 0..first_sink {
        for row in delta.iter_mut() {
            row[x] = rng.gen_range(x + 1..states);
        }
    }
    Automaton::from_table(state_names(states), letter_names(letters), delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::has_cycle_with_exit;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_have_no_exit_cycle() {
        for seed in 0..200 {
            for states in 1..=6 {
                let a = sample_no_exit(SampleParams { states, letters: 3, seed }).unwrap();
                assert!(has_cycle_with_exit(&a).is_none(), "seed {seed}");
            }
        }
    }

    #[test]
    fn single_state_sample_self_loops() {
        let a = sample_no_exit(SampleParams { states: 1, letters: 2, seed: 7 }).unwrap();
        assert_eq!(a.delta_table(), &[vec![0], vec![0]]);
    }

    #[test]
    fn sampling_is_deterministic() {
        let p = SampleParams { states: 5, letters: 3, seed: 42 };
        assert_eq!(sample_no_exit(p).unwrap(), sample_no_exit(p).unwrap());
    }

    #[test]
    fn reversible_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert!(random_reversible_automaton(&mut rng, 4, 3).unwrap().is_reversible());
        }
    }

    #[test]
    fn bad_sizes_rejected() {
        assert!(sample_no_exit(SampleParams { states: 0, letters: 2, seed: 0 }).is_err());
        assert!(sample_no_exit(SampleParams { states: 2, letters: 1, seed: 0 }).is_err());
    }
}
