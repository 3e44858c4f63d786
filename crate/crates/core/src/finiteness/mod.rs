//! Certificates and bounded searches for (in)finiteness of the generated
//! (semi)group.
//!
//! A machine generates a finite semigroup iff its dual does, and an
//! invertible machine generates a finite group iff it generates a finite
//! semigroup; [`decide`] uses both to run every check on the machine and on
//! its dual. `Finite` and `Infinite` verdicts are only issued on sound
//! grounds. Orbit growth and pumping witnesses are kept as evidence.

mod closure;
mod orbit;
mod pumping;

use serde::Serialize;

pub use self::closure::{
    semigroup_closure, semigroup_closure_with, semigroup_elements, ClosureLimit, ClosureLimits, ClosureOutcome,
    DEFAULT_CLOSURE_BUDGET, DEFAULT_CLOSURE_WORK,
};
pub use self::orbit::orbit_size;
pub use self::pumping::{power_trace, pumping_scan, PowerLevel, PowerTrace, PumpingOutcome, DEFAULT_MAX_LEVEL};
pub use crate::random::{sample_no_exit, SampleParams};

use crate::automaton::Automaton;
use crate::cycles;
use crate::enrichment;
use crate::mealy::MealyMachine;

/// Default orbit cap.
pub const DEFAULT_ORBIT_CAP: u64 = 1 << 20;
/// Default longest power `c^n` probed for orbit evidence.
pub const DEFAULT_ORBIT_MAX_LEN: usize = 16;

/// Which machine a check ran on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Machine,
    Dual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum FiniteCertificate {
    /// The automaton on `side` has no cycle with exit, so any enrichment of
    /// it generates a finite semigroup.
    Structural { side: Side },
    /// A power of the two-state reversible machine on `side` splits up
    /// totally.
    Splitting { side: Side, level: usize },
    /// Exhaustive closure on `side` saturated with `order` elements.
    Closure { side: Side, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum InfiniteCertificate {
    /// Invertible and reversible but not bireversible.
    F4 { side: Side },
    /// Produced by an enrichment construction.
    EnrichmentConstruction { construction: enrichment::Certificate },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Finite {
        certificate: FiniteCertificate,
        /// Order of the semigroup generated by the machine itself, when its
        /// closure saturated within budget.
        order: Option<usize>,
    },
    Infinite {
        certificate: InfiniteCertificate,
    },
    Unknown {
        evidence: Box<Evidence>,
    },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Finite { .. } => "Finite",
            Verdict::Infinite { .. } => "Infinite",
            Verdict::Unknown { .. } => "Unknown",
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Verdict::Finite { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Verdict::Infinite { .. })
    }

    pub fn certificate_tag(&self) -> &'static str {
        match self {
            Verdict::Finite { certificate, .. } => match certificate {
                FiniteCertificate::Structural { .. } => "Structural",
                FiniteCertificate::Splitting { .. } => "Splitting",
                FiniteCertificate::Closure { .. } => "Closure",
            },
            Verdict::Infinite { certificate } => match certificate {
                InfiniteCertificate::F4 { .. } => "F4",
                InfiniteCertificate::EnrichmentConstruction { .. } => "EnrichmentConstruction",
            },
            Verdict::Unknown { .. } => "None",
        }
    }
}

/// Orbit sizes of `ρ_x` on `c^n`, `n = 1, 2, …`; `None` past the cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitTrace {
    pub generator: usize,
    pub letter: usize,
    pub sizes: Vec<Option<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PumpingEvidence {
    pub side: Side,
    pub outcome: PumpingOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureEvidence {
    pub side: Side,
    pub outcome: ClosureOutcome,
}

/// Everything gathered when no certificate applied. Both automata have a
/// cycle with exit and neither side passes the F4 check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub pumping: Vec<PumpingEvidence>,
    pub closure: ClosureEvidence,
    pub orbits: Vec<OrbitTrace>,
}

/// Search limits of [`decide`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecideConfig {
    pub budget: usize,
    /// Bisimulation work cap of the closure, in symbols stepped.
    pub work: u64,
    pub max_level: usize,
    pub orbit_cap: u64,
    pub orbit_max_len: usize,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            budget: DEFAULT_CLOSURE_BUDGET,
            work: DEFAULT_CLOSURE_WORK,
            max_level: DEFAULT_MAX_LEVEL,
            orbit_cap: DEFAULT_ORBIT_CAP,
            orbit_max_len: DEFAULT_ORBIT_MAX_LEN,
        }
    }
}

/// Finite for every choice of production functions iff the automaton has
/// no cycle with exit.
pub fn check_no_exit_finite(a: &Automaton) -> Option<FiniteCertificate> {
    cycles::has_cycle_with_exit(a)
        .is_none()
        .then_some(FiniteCertificate::Structural { side: Side::Machine })
}

/// Infinite group when invertible and reversible but not bireversible.
pub fn f4_check(m: &MealyMachine) -> Option<InfiniteCertificate> {
    (m.is_invertible() && m.is_reversible() && !m.is_bireversible())
        .then_some(InfiniteCertificate::F4 { side: Side::Machine })
}

/// Verdict for a machine produced by [`enrichment::enrich`]: every
/// construction guarantees an infinite group, so the outcome is its own
/// certificate.
pub fn enrichment_verdict(out: &enrichment::EnrichmentOutcome) -> Verdict {
    Verdict::Infinite {
        certificate: InfiniteCertificate::EnrichmentConstruction {
            construction: out.enrichment.certificate,
        },
    }
}

/// Runs, in order: the structural check, the F4 check, the pumping scan and
/// the bounded closure, each on the machine and its dual. The first
/// certificate wins.
pub fn decide(m: &MealyMachine, config: &DecideConfig) -> Verdict {
    let dual = m.dual();
    let sides = [(Side::Machine, m), (Side::Dual, &dual)];

    let limits = ClosureLimits {
        elements: config.budget,
        work: config.work,
    };
    let finite_with_order = |certificate: FiniteCertificate| {
        let order = match &certificate {
            FiniteCertificate::Closure { side: Side::Machine, order } => Some(*order),
            _ => semigroup_closure_with(m, limits).order(),
        };
        Verdict::Finite { certificate, order }
    };

    for &(side, machine) in &sides {
        if check_no_exit_finite(machine.automaton()).is_some() {
            return finite_with_order(FiniteCertificate::Structural { side });
        }
    }

    for &(side, machine) in &sides {
        if f4_check(machine).is_some() {
            return Verdict::Infinite {
                certificate: InfiniteCertificate::F4 { side },
            };
        }
    }

    let mut pumping = Vec::new();
    for &(side, machine) in &sides {
        if machine.state_count() != 2 || !machine.is_reversible() {
            continue;
        }
        let outcome = pumping_scan(machine, config.max_level).expect("preconditions checked");
        if let PumpingOutcome::Finite { level, .. } = outcome {
            return finite_with_order(FiniteCertificate::Splitting { side, level });
        }
        pumping.push(PumpingEvidence { side, outcome });
    }

    // closure on the side with fewer generators
    let (side, machine) = if dual.state_count() < m.state_count() {
        sides[1]
    } else {
        sides[0]
    };
    let outcome = semigroup_closure_with(machine, limits);
    if let ClosureOutcome::Finite { order, .. } = outcome {
        return finite_with_order(FiniteCertificate::Closure { side, order });
    }

    Verdict::Unknown {
        evidence: Box::new(Evidence {
            pumping,
            closure: ClosureEvidence { side, outcome },
            orbits: orbit_evidence(m, config),
        }),
    }
}

/// Orbit sizes of every generator on the powers of every letter.
pub fn orbit_evidence(m: &MealyMachine, config: &DecideConfig) -> Vec<OrbitTrace> {
    let mut traces = Vec::new();
    for x in 0..m.state_count() {
        for c in 0..m.letter_count() {
            let mut sizes = Vec::with_capacity(config.orbit_max_len);
            let mut capped = false;
            for n in 1..=config.orbit_max_len {
                if capped {
                    sizes.push(None);
                    continue;
                }
                let size = orbit_size(m, &[x], &vec![c; n], config.orbit_cap).expect("symbols in range");
                capped = size.is_none();
                sizes.push(size);
            }
            traces.push(OrbitTrace {
                generator: x,
                letter: c,
                sizes,
            });
        }
    }
    traces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enrichment::enrich_reversible;

    fn quick() -> DecideConfig {
        DecideConfig {
            budget: 2_000,
            max_level: 10,
            ..DecideConfig::default()
        }
    }

    #[test]
    fn structural_examples() {
        let loops = Automaton::from_names(&["p", "q"], &["0", "1"], vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(check_no_exit_finite(&loops).is_some());
        assert!(check_no_exit_finite(&catalog::fig3_automaton()).is_none());
        // only the no-exit sink component of figure three
        let six = Automaton::from_names(&["6"], &["a", "b"], vec![vec![0], vec![0]]).unwrap();
        assert!(check_no_exit_finite(&six).is_some());
    }

    #[test]
    fn f4_examples() {
        let m = enrich_reversible(&catalog::fig3_pruned_automaton()).unwrap();
        assert!(f4_check(&m).is_some());
        assert!(f4_check(&catalog::adding_machine()).is_none());
        let id = MealyMachine::with_identity_outputs(catalog::fig3_pruned_automaton());
        assert!(f4_check(&id).is_none());
    }

    #[test]
    fn decide_identity_is_finite_of_order_one() {
        let a = Automaton::from_names(&["p"], &["0", "1"], vec![vec![0], vec![0]]).unwrap();
        let v = decide(&MealyMachine::with_identity_outputs(a), &quick());
        match v {
            Verdict::Finite { order, .. } => assert_eq!(order, Some(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decide_f4_machine_is_infinite() {
        let m = enrich_reversible(&catalog::fig3_pruned_automaton()).unwrap();
        assert_eq!(
            decide(&m, &quick()),
            Verdict::Infinite { certificate: InfiniteCertificate::F4 { side: Side::Machine } }
        );
    }

    #[test]
    fn decide_adding_machine_is_unknown_with_evidence() {
        let cfg = DecideConfig { budget: 500, max_level: 8, ..DecideConfig::default() };
        let Verdict::Unknown { evidence } = decide(&catalog::adding_machine(), &cfg) else {
            panic!("expected unknown");
        };
        let x_on_zero = evidence.orbits.iter().find(|o| o.generator == 0 && o.letter == 0).unwrap();
        for (k, size) in x_on_zero.sizes.iter().enumerate() {
            assert_eq!(*size, Some(1u64 << (k + 1)));
        }
        let dual_scan = evidence.pumping.iter().find(|p| p.side == Side::Dual).unwrap();
        assert_eq!(dual_scan.outcome.trace().levels.len(), 8);
        assert!(dual_scan.outcome.trace().levels.iter().all(|l| l.witness.is_some()));
    }

    #[test]
    fn enrichment_outcomes_certify_themselves() {
        let out = crate::enrichment::enrich(&catalog::adding_machine_automaton()).unwrap();
        let v = enrichment_verdict(&out);
        assert_eq!(v.certificate_tag(), "EnrichmentConstruction");
        assert!(v.is_infinite());
    }
}
