//! Choosing invertible production functions that make the generated group
//! infinite, for any automaton with a cycle with exit.
//!
//! [`enrich`] runs the case analysis: prune, then either a cycle with an
//! exit of no return (adding-machine construction), a reversible automaton
//! (two transitions into one state given the same output), or the general
//! case reduced to a two-letter sub-automaton.

use serde::Serialize;

use crate::automaton::Automaton;
use crate::cycles::{self, Cycle, Exit, ExitKind, Pruned};
use crate::error::{Error, Result};
use crate::mealy::MealyMachine;

/// Which construction produced an enrichment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Certificate {
    /// Binary alphabet, cycle with external exit; the exit target swaps
    /// the letters.
    Lemma2Binary,
    /// External exit with no way back; the exit source swaps the exit
    /// letter with the cycle letter.
    Lemma3NoReturn,
    /// Reversible automaton; two transitions into a common state are given
    /// the same output, yielding a reversible, invertible, not bireversible
    /// machine.
    Lemma4Reversible,
    /// Binary construction on a two-letter restriction, completed by the
    /// identity on the remaining letters.
    Theorem1Restricted,
}

impl Certificate {
    pub fn as_str(self) -> &'static str {
        match self {
            Certificate::Lemma2Binary => "Lemma2Binary",
            Certificate::Lemma3NoReturn => "Lemma3NoReturn",
            Certificate::Lemma4Reversible => "Lemma4Reversible",
            Certificate::Theorem1Restricted => "Theorem1Restricted",
        }
    }
}

/// One permutation of the alphabet per state, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enrichment {
    /// `perms[state][letter]`
    pub perms: Vec<Vec<usize>>,
    pub certificate: Certificate,
}

impl Enrichment {
    pub fn apply(&self, a: &Automaton) -> Result<MealyMachine> {
        MealyMachine::new(a.clone(), self.perms.clone())
    }
}

fn identity_perms(states: usize, letters: usize) -> Vec<Vec<usize>> {
    vec![(0..letters).collect(); states]
}

fn transposition(letters: usize, i: usize, j: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..letters).collect();
    p.swap(i, j);
    p
}

fn check_external(a: &Automaton, c: &Cycle, e: &Exit) -> Result<()> {
    let report = cycles::classify_exits(a, c)?;
    if e.kind != ExitKind::External || !report.exits.contains(e) {
        return Err(Error::PreconditionViolated(
            "exit is not an external exit of the cycle".into(),
        ));
    }
    Ok(())
}

/// Binary-alphabet construction: the exit target `y` swaps the two letters,
/// every other state outputs its input.
///
/// With `s` the cycle label from `x = e.from`, the machine maps
/// `s^n · i · c` to `s^n · i · c̄` from `x`.
pub fn enrich_binary_external(a: &Automaton, c: &Cycle, e: &Exit) -> Result<MealyMachine> {
    if a.letter_count() != 2 {
        return Err(Error::PreconditionViolated(format!(
            "binary construction needs a two-letter alphabet, got {}",
            a.letter_count()
        )));
    }
    check_external(a, c, e)?;
    let mut perms = identity_perms(a.state_count(), 2);
    perms[e.to] = vec![1, 0];
    MealyMachine::new(a.clone(), perms)
}

/// Adding-machine construction: with the cycle label from `x = e.from`
/// written `j·t`, `ρ_x` is the transposition `(i j)` of the exit letter and
/// the cycle letter, every other state the identity. The orbit of `(j·t)^n`
/// under `ρ_x` then has `2^n` elements.
pub fn enrich_no_return(a: &Automaton, c: &Cycle, e: &Exit) -> Result<MealyMachine> {
    check_external(a, c, e)?;
    if cycles::reaches_any(a, e.to, &c.states) {
        return Err(Error::PreconditionViolated(format!(
            "the cycle is reachable again from exit target `{}`",
            a.states().name(e.to)
        )));
    }
    let k = c.position(e.from).expect("external exit starts on the cycle");
    let j = c.letters[k];
    let i = e.letter;
    if i == j {
        return Err(Error::PreconditionViolated("exit letter equals cycle letter".into()));
    }
    let mut perms = identity_perms(a.state_count(), a.letter_count());
    perms[e.from] = transposition(a.letter_count(), i, j);
    MealyMachine::new(a.clone(), perms)
}

/// Two distinct states with transitions into a common state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConvergingPair {
    pub x: usize,
    pub letter_x: usize,
    pub y: usize,
    pub letter_y: usize,
    pub z: usize,
}

/// Smallest `x`, then its smallest letter, then the smallest `y ≠ x` and its
/// smallest letter, such that both transitions reach the same state.
pub fn find_converging_pair(a: &Automaton) -> Option<ConvergingPair> {
    for x in 0..a.state_count() {
        for lx in 0..a.letter_count() {
            let z = a.next(x, lx);
            for y in (0..a.state_count()).filter(|&y| y != x) {
                if let Some(ly) = (0..a.letter_count()).find(|&l| a.next(y, l) == z) {
                    return Some(ConvergingPair {
                        x,
                        letter_x: lx,
                        y,
                        letter_y: ly,
                        z,
                    });
                }
            }
        }
    }
    None
}

/// Reversible construction: `ρ_x` stays the identity and `ρ_y` is chosen so
/// that `ρ_y(i_y) = ρ_x(i_x)`; the result is invertible and reversible but
/// its inverse is not reversible.
pub fn enrich_reversible(a: &Automaton) -> Result<MealyMachine> {
    if !a.is_reversible() {
        return Err(Error::PreconditionViolated("automaton is not reversible".into()));
    }
    let pair = find_converging_pair(a).ok_or(Error::NoSuchTriple)?;
    let mut perms = identity_perms(a.state_count(), a.letter_count());
    if pair.letter_x != pair.letter_y {
        perms[pair.y] = transposition(a.letter_count(), pair.letter_x, pair.letter_y);
    }
    MealyMachine::new(a.clone(), perms)
}

/// The path from `x` reading only `i`, up to the cycle it falls into.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IPathResult {
    pub x: usize,
    pub letter: usize,
    /// First state of the path on the `i`-cycle.
    pub y: usize,
    /// The `i`-cycle, read from `y`.
    pub cycle: Cycle,
    /// The state just before `y` on the path.
    pub x_prime: usize,
    /// Minimal `n > 0` with `y = δ_{i^n}(x)`.
    pub n: usize,
}

/// Follows `δ_i` from a state `x` without incoming `i`-transition until a
/// state repeats.
pub fn find_i_path_cycle(a: &Automaton, x: usize, i: usize) -> Result<IPathResult> {
    if x >= a.state_count() || i >= a.letter_count() {
        return Err(Error::PreconditionViolated("state or letter out of range".into()));
    }
    if (0..a.state_count()).any(|z| a.next(z, i) == x) {
        return Err(Error::PreconditionViolated(format!(
            "`{}` has an incoming `{}`-transition",
            a.states().name(x),
            a.letters().name(i)
        )));
    }
    let mut first_seen = vec![usize::MAX; a.state_count()];
    let mut path = vec![x];
    first_seen[x] = 0;
    let mut cur = x;
    let n = loop {
        cur = a.next(cur, i);
        if first_seen[cur] != usize::MAX {
            break first_seen[cur];
        }
        first_seen[cur] = path.len();
        path.push(cur);
    };
    // n > 0 because nothing enters x on i
    let y = path[n];
    let states = path[n..].to_vec();
    let letters = vec![i; states.len()];
    Ok(IPathResult {
        x,
        letter: i,
        y,
        cycle: Cycle { states, letters },
        x_prime: path[n - 1],
        n,
    })
}

/// A permutation per state over the two letters `{i, j}` of the full
/// alphabet, written on those letter ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialPermutations {
    pub letters: [usize; 2],
    /// `perms[state]` maps `letters[0]`, `letters[1]` to letters of the pair.
    pub perms: Vec<[usize; 2]>,
}

/// Extends each partial permutation by the identity outside `{i, j}`.
pub fn complete_permutations(partial: &PartialPermutations, alphabet_size: usize) -> Result<Vec<Vec<usize>>> {
    let [i, j] = partial.letters;
    if i == j || i >= alphabet_size || j >= alphabet_size {
        return Err(Error::PreconditionViolated("letter pair must be two distinct letters".into()));
    }
    partial
        .perms
        .iter()
        .map(|&[pi, pj]| {
            let valid = (pi == i && pj == j) || (pi == j && pj == i);
            if !valid {
                return Err(Error::PreconditionViolated(
                    "partial permutation does not permute the letter pair".into(),
                ));
            }
            let mut p: Vec<usize> = (0..alphabet_size).collect();
            p[i] = pi;
            p[j] = pj;
            Ok(p)
        })
        .collect()
}

/// Where the chosen construction was applied, for checking its
/// postcondition. Ids refer to the input automaton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum EnrichmentWitness {
    NoReturn {
        cycle: Cycle,
        exit: Exit,
    },
    Reversible {
        pair: ConvergingPair,
    },
    Binary {
        cycle: Cycle,
        exit: Exit,
    },
    Restricted {
        start: usize,
        path_letter: usize,
        cycle: Cycle,
        exit: Exit,
        letters: [usize; 2],
    },
}

/// Output of [`enrich`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnrichmentOutcome {
    pub machine: MealyMachine,
    pub enrichment: Enrichment,
    pub witness: EnrichmentWitness,
    /// Original ids of the states removed by pruning (they output the
    /// identity).
    pub pruned: Vec<usize>,
}

/// Forces one construction instead of the automatic case analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Auto,
    Binary,
    NoReturn,
    Reversible,
}

/// Enriches an automaton with a cycle with exit into an invertible Mealy
/// machine generating an infinite group.
pub fn enrich(a: &Automaton) -> Result<EnrichmentOutcome> {
    enrich_with(a, Branch::Auto)
}

pub fn enrich_with(a: &Automaton, branch: Branch) -> Result<EnrichmentOutcome> {
    if cycles::has_cycle_with_exit(a).is_none() {
        return Err(Error::NoExitCycle);
    }
    let pruned = cycles::prune(a)?;
    let p = &pruned.automaton;
    let (perms, certificate, witness) = match branch {
        Branch::Auto => auto_branch(p)?,
        Branch::NoReturn => {
            let w = cycles::find_no_return_exit(p).ok_or_else(|| {
                Error::PreconditionViolated("no cycle has an exit of no return".into())
            })?;
            no_return_branch(p, w.cycle, w.exit)?
        }
        Branch::Reversible => reversible_branch(p)?,
        Branch::Binary => {
            let w = cycles::has_cycle_with_exit(p).expect("pruning keeps cycles with exit");
            let m = enrich_binary_external(p, &w.cycle, &w.exit)?;
            (
                m.rho_table().to_vec(),
                Certificate::Lemma2Binary,
                EnrichmentWitness::Binary {
                    cycle: w.cycle,
                    exit: w.exit,
                },
            )
        }
    };
    lift(a, &pruned, perms, certificate, witness)
}

type BranchResult = Result<(Vec<Vec<usize>>, Certificate, EnrichmentWitness)>;

fn auto_branch(p: &Automaton) -> BranchResult {
    if let Some(w) = cycles::find_no_return_exit(p) {
        return no_return_branch(p, w.cycle, w.exit);
    }
    if p.is_reversible() {
        return reversible_branch(p);
    }
    restricted_branch(p)
}

fn no_return_branch(p: &Automaton, cycle: Cycle, exit: Exit) -> BranchResult {
    let m = enrich_no_return(p, &cycle, &exit)?;
    Ok((
        m.rho_table().to_vec(),
        Certificate::Lemma3NoReturn,
        EnrichmentWitness::NoReturn { cycle, exit },
    ))
}

fn reversible_branch(p: &Automaton) -> BranchResult {
    let m = enrich_reversible(p)?;
    let pair = find_converging_pair(p).expect("checked by enrich_reversible");
    Ok((
        m.rho_table().to_vec(),
        Certificate::Lemma4Reversible,
        EnrichmentWitness::Reversible { pair },
    ))
}

/// Every transition lies on a cycle and the automaton is not reversible.
fn restricted_branch(p: &Automaton) -> BranchResult {
    let (x, i) = (0..p.state_count())
        .flat_map(|x| (0..p.letter_count()).map(move |i| (x, i)))
        .find(|&(x, i)| (0..p.state_count()).all(|z| p.next(z, i) != x))
        .ok_or_else(|| Error::PreconditionViolated("automaton is reversible".into()))?;
    let path = find_i_path_cycle(p, x, i)?;
    let c = &path.cycle;

    // smallest cycle state, then smallest letter, leaving the i-cycle
    let mut on_cycle: Vec<usize> = c.states.clone();
    on_cycle.sort_unstable();
    let exit = on_cycle
        .iter()
        .flat_map(|&s| (0..p.letter_count()).map(move |j| (s, j)))
        .find(|&(s, j)| j != i && !c.contains(p.next(s, j)))
        .map(|(s, j)| Exit {
            from: s,
            letter: j,
            to: p.next(s, j),
            kind: ExitKind::External,
        })
        .ok_or_else(|| Error::PreconditionViolated("the i-cycle has no external exit".into()))?;
    let j = exit.letter;

    let b = p.restrict_alphabet(&[i, j])?;
    // ids inside B: letters keep their relative order
    let (lo, hi) = (i.min(j), i.max(j));
    let to_b = |l: usize| if l == lo { 0 } else { 1 };
    let b_cycle = Cycle {
        states: c.states.clone(),
        letters: c.letters.iter().map(|&l| to_b(l)).collect(),
    };
    let b_exit = Exit {
        letter: to_b(j),
        ..exit
    };
    let mb = enrich_binary_external(&b, &b_cycle, &b_exit)?;
    let partial = PartialPermutations {
        letters: [lo, hi],
        perms: mb
            .rho_table()
            .iter()
            .map(|row| [if row[0] == 0 { lo } else { hi }, if row[1] == 0 { lo } else { hi }])
            .collect(),
    };
    let perms = complete_permutations(&partial, p.letter_count())?;
    Ok((
        perms,
        Certificate::Theorem1Restricted,
        EnrichmentWitness::Restricted {
            start: path.x,
            path_letter: i,
            cycle: c.clone(),
            exit,
            letters: [lo, hi],
        },
    ))
}

/// Maps a construction on the pruned automaton back to the input: removed
/// states output the identity, witness ids are translated.
fn lift(
    a: &Automaton,
    pruned: &Pruned,
    pruned_perms: Vec<Vec<usize>>,
    certificate: Certificate,
    witness: EnrichmentWitness,
) -> Result<EnrichmentOutcome> {
    let mut perms = identity_perms(a.state_count(), a.letter_count());
    for (new, &old) in pruned.kept.iter().enumerate() {
        perms[old] = pruned_perms[new].clone();
    }
    let up = |s: usize| pruned.kept[s];
    let up_cycle = |c: Cycle| Cycle {
        states: c.states.into_iter().map(up).collect(),
        letters: c.letters,
    };
    let up_exit = |e: Exit| Exit {
        from: up(e.from),
        to: up(e.to),
        ..e
    };
    let witness = match witness {
        EnrichmentWitness::NoReturn { cycle, exit } => EnrichmentWitness::NoReturn {
            cycle: up_cycle(cycle),
            exit: up_exit(exit),
        },
        EnrichmentWitness::Binary { cycle, exit } => EnrichmentWitness::Binary {
            cycle: up_cycle(cycle),
            exit: up_exit(exit),
        },
        EnrichmentWitness::Reversible { pair } => EnrichmentWitness::Reversible {
            pair: ConvergingPair {
                x: up(pair.x),
                y: up(pair.y),
                z: up(pair.z),
                ..pair
            },
        },
        EnrichmentWitness::Restricted {
            start,
            path_letter,
            cycle,
            exit,
            letters,
        } => EnrichmentWitness::Restricted {
            start: up(start),
            path_letter,
            cycle: up_cycle(cycle),
            exit: up_exit(exit),
            letters,
        },
    };
    let enrichment = Enrichment { perms, certificate };
    let machine = enrichment.apply(a)?;
    Ok(EnrichmentOutcome {
        machine,
        enrichment,
        witness,
        pruned: pruned.removed.clone(),
    })
}

/// `s^n · i · c` for the binary witness: cycle label from the exit source,
/// repeated `n` times, the exit letter, then `last`.
pub fn binary_witness_word(cycle: &Cycle, exit: &Exit, n: usize, last: usize) -> Vec<usize> {
    let k = cycle.position(exit.from).expect("exit source on cycle");
    let s = cycle.label_from(k).expect("position in range");
    let mut w = Vec::with_capacity(n * s.len() + 2);
    for _ in 0..n {
        w.extend_from_slice(&s);
    }
    w.push(exit.letter);
    w.push(last);
    w
}

/// `(j·t)^n`: the cycle label from the exit source, repeated.
pub fn no_return_witness_word(cycle: &Cycle, exit: &Exit, n: usize) -> Vec<usize> {
    let k = cycle.position(exit.from).expect("exit source on cycle");
    let s = cycle.label_from(k).expect("position in range");
    s.repeat(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::finiteness::orbit_size;

    fn cyc(a: &Automaton, states: &str, letters: &str) -> Cycle {
        let s = a.states().parse_word(states).unwrap();
        let l = a.letters().parse_word(letters).unwrap();
        Cycle::new(a, s, l).unwrap()
    }

    #[test]
    fn binary_on_adding_machine_automaton() {
        let a = catalog::adding_machine_automaton();
        let c = cyc(&a, "x", "1");
        let e = Exit { from: 0, letter: 0, to: 1, kind: ExitKind::External };
        let m = enrich_binary_external(&a, &c, &e).unwrap();
        assert_eq!(m.rho_table(), &[vec![0, 1], vec![1, 0]]);
        for n in 0..=20 {
            for last in 0..2 {
                let input = binary_witness_word(&c, &e, n, last);
                let out = m.apply_rho(&[0], &input).unwrap();
                let mut expected = input.clone();
                *expected.last_mut().unwrap() = 1 - last;
                assert_eq!(out, expected);
            }
        }
    }

    #[test]
    fn binary_on_pruned_figure_three() {
        let a = catalog::fig3_pruned_automaton();
        let c = cyc(&a, "312", "baa");
        let s = |n: &str| a.states().id(n).unwrap();
        let e = Exit { from: s("3"), letter: 0, to: s("4"), kind: ExitKind::External };
        let m = enrich_binary_external(&a, &c, &e).unwrap();
        for z in 0..a.state_count() {
            let expected = if z == s("4") { vec![1, 0] } else { vec![0, 1] };
            assert_eq!(m.output_function(z), expected.as_slice());
        }
        let input = binary_witness_word(&c, &e, 3, 0);
        assert_eq!(a.letters().render_word(&input), "baabaabaaaa");
        let out = m.apply_rho(&[s("3")], &input).unwrap();
        assert_eq!(a.letters().render_word(&out), "baabaabaaab");
    }

    #[test]
    fn binary_rejects_ternary_alphabet() {
        let a = Automaton::from_names(&["p", "q"], &["0", "1", "2"], vec![vec![1, 1], vec![0, 1], vec![0, 1]])
            .unwrap();
        let c = Cycle { states: vec![0], letters: vec![1] };
        let e = Exit { from: 0, letter: 0, to: 1, kind: ExitKind::External };
        assert!(matches!(
            enrich_binary_external(&a, &c, &e),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn no_return_rebuilds_adding_machine() {
        let a = catalog::adding_machine_automaton();
        let c = cyc(&a, "x", "1");
        let e = Exit { from: 0, letter: 0, to: 1, kind: ExitKind::External };
        let m = enrich_no_return(&a, &c, &e).unwrap();
        assert_eq!(m, catalog::adding_machine());
        for n in 1..=16 {
            let w = no_return_witness_word(&c, &e, n);
            assert_eq!(orbit_size(&m, &[0], &w, 1 << 20).unwrap(), Some(1u64 << n));
        }
    }

    #[test]
    fn no_return_rejects_returning_exit() {
        let a = catalog::fig3_pruned_automaton();
        let c = cyc(&a, "123", "aab");
        let e = Exit { from: 2, letter: 0, to: 3, kind: ExitKind::External };
        assert!(matches!(enrich_no_return(&a, &c, &e), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn reversible_on_pruned_figure_three() {
        let a = catalog::fig3_pruned_automaton();
        let s = |n: &str| a.states().id(n).unwrap();
        let pair = find_converging_pair(&a).unwrap();
        assert_eq!(
            pair,
            ConvergingPair { x: s("3"), letter_x: 0, y: s("4"), letter_y: 1, z: s("4") }
        );
        let m = enrich_reversible(&a).unwrap();
        assert_eq!(m.output_function(s("3")), &[0, 1]);
        assert_eq!(m.output_function(s("4")), &[1, 0]);
        assert!(m.is_invertible() && m.is_reversible() && !m.is_bireversible());
    }

    #[test]
    fn reversible_degenerate_has_no_triple() {
        let a = Automaton::from_names(&["p", "q"], &["0", "1"], vec![vec![1, 0], vec![1, 0]]).unwrap();
        assert_eq!(enrich_reversible(&a), Err(Error::NoSuchTriple));
    }

    #[test]
    fn i_path_examples() {
        let am = catalog::adding_machine_automaton();
        let r = find_i_path_cycle(&am, 0, 0).unwrap();
        assert_eq!((r.y, r.n, r.x_prime), (1, 1, 0));
        assert_eq!(r.cycle, Cycle { states: vec![1], letters: vec![0] });

        let t = catalog::two_state_irreversible();
        let r = find_i_path_cycle(&t, 1, 0).unwrap();
        assert_eq!((r.y, r.n, r.x_prime), (0, 1, 1));
        assert_eq!(r.cycle, Cycle { states: vec![0], letters: vec![0] });

        assert!(matches!(find_i_path_cycle(&t, 0, 0), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn completion() {
        let swap = PartialPermutations { letters: [0, 1], perms: vec![[1, 0]] };
        assert_eq!(complete_permutations(&swap, 3).unwrap(), vec![vec![1, 0, 2]]);
        let id = PartialPermutations { letters: [0, 2], perms: vec![[0, 2]] };
        assert_eq!(complete_permutations(&id, 3).unwrap(), vec![vec![0, 1, 2]]);
        let bad = PartialPermutations { letters: [0, 1], perms: vec![[0, 0]] };
        assert!(complete_permutations(&bad, 2).is_err());
    }

    #[test]
    fn theorem_pipeline_examples() {
        let out = enrich(&catalog::adding_machine_automaton()).unwrap();
        assert_eq!(out.enrichment.certificate, Certificate::Lemma3NoReturn);
        assert_eq!(out.machine, catalog::adding_machine());

        let f3 = catalog::fig3_automaton();
        let out = enrich(&f3).unwrap();
        assert_eq!(out.enrichment.certificate, Certificate::Lemma4Reversible);
        assert_eq!(out.pruned, vec![f3.states().id("5").unwrap()]);
        assert!(out.machine.is_invertible());

        let t = catalog::two_state_irreversible();
        let out = enrich(&t).unwrap();
        assert_eq!(out.enrichment.certificate, Certificate::Theorem1Restricted);
        assert_eq!(out.enrichment.perms, vec![vec![0, 1], vec![1, 0]]);
        match out.witness {
            EnrichmentWitness::Restricted { start, path_letter, cycle, exit, .. } => {
                assert_eq!((start, path_letter), (1, 0));
                assert_eq!(cycle, Cycle { states: vec![0], letters: vec![0] });
                assert_eq!((exit.from, exit.letter, exit.to), (0, 1, 1));
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let loops = Automaton::from_names(&["p"], &["0", "1"], vec![vec![0], vec![0]]).unwrap();
        assert_eq!(enrich(&loops), Err(Error::NoExitCycle));
    }
}
