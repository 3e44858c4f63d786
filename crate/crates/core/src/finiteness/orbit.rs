use std::collections::HashSet;

use crate::error::Result;
use crate::mealy::MealyMachine;

/// Size of `{ρ_g^k(s) : k ≥ 0}`, iterating until the first repeat.
/// Returns `None` once more than `cap` distinct words have been seen.
pub fn orbit_size(m: &MealyMachine, g: &[usize], s: &[usize], cap: u64) -> Result<Option<u64>> {
    // validates symbols
    m.apply_rho(g, s)?;
    if g.is_empty() {
        return Ok(Some(1));
    }
    let mut cur = s.to_vec();
    let mut buf = Vec::with_capacity(s.len());
    let mut tmp = Vec::with_capacity(s.len());
    if m.is_invertible() {
        // ρ_g permutes Σ^|s|, so the orbit is the cycle through `s`
        let mut size = 0u64;
        loop {
            size += 1;
            if size > cap {
                return Ok(None);
            }
            buf.clear();
            buf.extend_from_slice(&cur);
            for &x in g {
                m.transduce_into(x, &buf, &mut tmp);
                std::mem::swap(&mut buf, &mut tmp);
            }
            std::mem::swap(&mut cur, &mut buf);
            if cur == s {
                return Ok(Some(size));
            }
        }
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    loop {
        if !seen.insert(cur.clone()) {
            return Ok(Some(seen.len() as u64));
        }
        if seen.len() as u64 > cap {
            return Ok(None);
        }
        buf.clear();
        buf.extend_from_slice(&cur);
        for &x in g {
            m.transduce_into(x, &buf, &mut tmp);
            std::mem::swap(&mut buf, &mut tmp);
        }
        std::mem::swap(&mut cur, &mut buf);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn adding_machine_orbits() {
        let m = catalog::adding_machine();
        assert_eq!(orbit_size(&m, &[0], &[0; 8], 1 << 20).unwrap(), Some(256));
        assert_eq!(orbit_size(&m, &[], &[0; 8], 1 << 20).unwrap(), Some(1));
        assert_eq!(orbit_size(&m, &[1], &[0, 1, 1], 1 << 20).unwrap(), Some(1));
        assert_eq!(orbit_size(&m, &[0], &[0; 8], 100).unwrap(), None);
    }

    #[test]
    fn non_invertible_orbits_count_the_tail() {
        let a = crate::Automaton::from_names(&["p"], &["0", "1", "2"], vec![vec![0], vec![0], vec![0]]).unwrap();
        let m = MealyMachine::new(a, vec![vec![1, 2, 1]]).unwrap();
        // 0 -> 1 -> 2 -> 1
        assert_eq!(orbit_size(&m, &[0], &[0], 10).unwrap(), Some(3));
    }
}
