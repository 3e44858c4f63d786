//! Reference implementations used as test oracles. They only use the
//! machine's `next`/`output` tables and deliberately simple algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use mealy::{Automaton, MealyMachine};
use proptest::prelude::*;

/// `ρ_x(s)` by the recursive definition.
pub fn rho_state(m: &MealyMachine, x: usize, s: &[usize]) -> Vec<usize> {
    match s.split_first() {
        None => Vec::new(),
        Some((&i, rest)) => {
            let mut out = vec![m.output(x, i)];
            out.extend(rho_state(m, m.next(x, i), rest));
            out
        }
    }
}

/// `ρ_u = ρ_{x_n} ∘ … ∘ ρ_{x_1}`.
pub fn rho_word(m: &MealyMachine, u: &[usize], s: &[usize]) -> Vec<usize> {
    u.iter().fold(s.to_vec(), |acc, &x| rho_state(m, x, &acc))
}

/// `δ_i(u)` on a state word: each state reads the output of the previous one.
pub fn delta_letter(m: &MealyMachine, u: &[usize], i: usize) -> Vec<usize> {
    let mut letter = i;
    u.iter()
        .map(|&x| {
            let y = m.next(x, letter);
            letter = m.output(x, letter);
            y
        })
        .collect()
}

pub fn words(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |c| {
                    let mut w2 = w.clone();
                    w2.push(c);
                    w2
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(k: usize, len: usize) -> Vec<Vec<usize>> {
    (0..=len).flat_map(|l| words(k, l)).collect()
}

/// Agreement of `ρ_u` and `ρ_v` on every letter word of length `≤ max_len`.
pub fn brute_equal(m: &MealyMachine, u: &[usize], v: &[usize], max_len: usize) -> bool {
    words_up_to(m.letter_count(), max_len)
        .iter()
        .all(|s| rho_word(m, u, s) == rho_word(m, v, s))
}

/// Exact equality by Moore partition refinement over all state words of
/// lengths `|u|` and `|v|`.
pub fn moore_equal(m: &MealyMachine, u: &[usize], v: &[usize]) -> bool {
    let n = m.state_count();
    let k = m.letter_count();
    let mut universe: Vec<Vec<usize>> = words(n, u.len());
    if v.len() != u.len() {
        universe.extend(words(n, v.len()));
    }
    let index: HashMap<Vec<usize>, usize> = universe.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let succ: Vec<Vec<usize>> = universe
        .iter()
        .map(|w| (0..k).map(|i| index[&delta_letter(m, w, i)]).collect())
        .collect();
    let out: Vec<Vec<usize>> = universe
        .iter()
        .map(|w| (0..k).map(|i| rho_word(m, w, &[i])[0]).collect())
        .collect();

    let mut class: Vec<usize> = relabel(&out);
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..universe.len())
            .map(|w| (class[w], succ[w].iter().map(|&t| class[t]).collect()))
            .collect();
        let next = relabel(&sig);
        let count = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if count(&next) == count(&class) {
            break;
        }
        class = next;
    }
    class[index[u]] == class[index[v]]
}

fn relabel<T: std::hash::Hash + Eq + Clone>(keys: &[T]) -> Vec<usize> {
    let mut ids: HashMap<T, usize> = HashMap::new();
    keys.iter()
        .map(|key| {
            let next = ids.len();
            *ids.entry(key.clone()).or_insert(next)
        })
        .collect()
}

/// Moore classes of all nonempty state words of length `≤ max_len`; two
/// words share a class iff their production functions agree.
pub fn moore_classes(m: &MealyMachine, max_len: usize) -> HashMap<Vec<usize>, usize> {
    let k = m.letter_count();
    let universe: Vec<Vec<usize>> = (1..=max_len).flat_map(|l| words(m.state_count(), l)).collect();
    let index: HashMap<Vec<usize>, usize> = universe.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let succ: Vec<Vec<usize>> = universe
        .iter()
        .map(|w| (0..k).map(|i| index[&delta_letter(m, w, i)]).collect())
        .collect();
    let out: Vec<Vec<usize>> = universe
        .iter()
        .map(|w| (0..k).map(|i| rho_word(m, w, &[i])[0]).collect())
        .collect();
    let mut class = relabel(&out);
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..universe.len())
            .map(|w| (class[w], succ[w].iter().map(|&t| class[t]).collect()))
            .collect();
        let next = relabel(&sig);
        let count = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if count(&next) == count(&class) {
            break;
        }
        class = next;
    }
    universe.into_iter().zip(class).collect()
}

/// Semigroup order by naive BFS over state words of length `≤ max_len`;
/// `None` past `cap` elements or if the words of length `max_len` still
/// produce new elements.
pub fn naive_semigroup_order(m: &MealyMachine, cap: usize, max_len: usize) -> Option<usize> {
    let classes = moore_classes(m, max_len);
    let mut seen: HashSet<usize> = HashSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 0..m.state_count() {
                let mut c = w.clone();
                c.push(x);
                if c.len() > max_len {
                    return None;
                }
                if seen.insert(classes[&c]) {
                    if seen.len() > cap {
                        return None;
                    }
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    Some(seen.len())
}

/// Orbit size by plain iteration.
pub fn naive_orbit(m: &MealyMachine, g: &[usize], s: &[usize]) -> usize {
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut cur = s.to_vec();
    while !seen.contains(&cur) {
        seen.push(cur.clone());
        cur = rho_word(m, g, &cur);
    }
    seen.len()
}

/// Weakly connected components of `M^len`, as sets of state words.
pub fn power_components(m: &MealyMachine, len: usize) -> Vec<BTreeSet<Vec<usize>>> {
    let all = words(m.state_count(), len);
    let mut adj: HashMap<Vec<usize>, Vec<Vec<usize>>> = all.iter().map(|w| (w.clone(), Vec::new())).collect();
    for w in &all {
        for i in 0..m.letter_count() {
            let t = delta_letter(m, w, i);
            adj.get_mut(w).unwrap().push(t.clone());
            adj.get_mut(&t).unwrap().push(w.clone());
        }
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut comps = Vec::new();
    for w in &all {
        if seen.contains(w) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w.clone());
        while let Some(x) = queue.pop_front() {
            for y in &adj[&x] {
                if seen.insert(y.clone()) {
                    queue.push_back(y.clone());
                }
            }
            comp.insert(x);
        }
        comps.push(comp);
    }
    comps
}

/// States reachable from `from` by directed paths (including `from`).
pub fn reachable(a: &Automaton, from: usize) -> HashSet<usize> {
    let mut seen = HashSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for i in 0..a.letter_count() {
            let y = a.next(x, i);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// On a cycle iff some successor reaches back.
pub fn on_cycle(a: &Automaton, x: usize) -> bool {
    (0..a.letter_count()).any(|i| reachable(a, a.next(x, i)).contains(&x))
}

/// Cycle with exit exists iff some on-cycle state has two distinct
/// successors.
pub fn has_exit_cycle(a: &Automaton) -> bool {
    (0..a.state_count()).any(|x| {
        on_cycle(a, x) && (0..a.letter_count()).map(|i| a.next(x, i)).collect::<HashSet<_>>().len() > 1
    })
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn automaton(n: usize, k: usize, delta: Vec<Vec<usize>>) -> Automaton {
    let s = names("q", n);
    let l = names("l", k);
    let s: Vec<&str> = s.iter().map(String::as_str).collect();
    let l: Vec<&str> = l.iter().map(String::as_str).collect();
    Automaton::from_names(&s, &l, delta).unwrap()
}

pub fn permutation(k: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..k).collect::<Vec<_>>()).prop_shuffle()
}

pub fn arb_automaton(states: std::ops::RangeInclusive<usize>, letters: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Automaton> {
    (states, letters).prop_flat_map(|(n, k)| {
        prop::collection::vec(prop::collection::vec(0..n, n), k).prop_map(move |d| automaton(n, k, d))
    })
}

pub fn arb_reversible(states: std::ops::RangeInclusive<usize>, letters: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Automaton> {
    (states, letters).prop_flat_map(|(n, k)| {
        prop::collection::vec(permutation(n), k).prop_map(move |d| automaton(n, k, d))
    })
}

pub fn arb_mealy(states: std::ops::RangeInclusive<usize>, letters: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = MealyMachine> {
    arb_automaton(states, letters).prop_flat_map(|a| {
        let (n, k) = (a.state_count(), a.letter_count());
        prop::collection::vec(prop::collection::vec(0..k, k), n).prop_map(move |rho| MealyMachine::new(a.clone(), rho).unwrap())
    })
}

pub fn arb_invertible(states: std::ops::RangeInclusive<usize>, letters: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = MealyMachine> {
    arb_automaton(states, letters).prop_flat_map(|a| {
        let (n, k) = (a.state_count(), a.letter_count());
        prop::collection::vec(permutation(k), n).prop_map(move |rho| MealyMachine::new(a.clone(), rho).unwrap())
    })
}

/// A machine together with a state word.
pub fn state_word(m: &MealyMachine, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..m.state_count(), 0..=max_len)
}
