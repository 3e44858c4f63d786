//! Mealy automata and the (semi)groups they generate.
//!
//! The crate covers the structural side (duals, inverses, powers, production
//! functions, bisimulation equality), cycles with exits, the enrichment
//! constructions that turn any automaton with a cycle with exit into an
//! invertible machine generating an infinite group, and sound but bounded
//! finiteness checks.

pub mod automaton;
pub mod bisim;
pub mod catalog;
pub mod cycles;
pub mod dot;
pub mod enrichment;
pub mod error;
pub mod finiteness;
pub mod format;
pub mod graph;
pub mod mealy;
pub mod random;
pub mod report;
pub mod symbols;

pub use automaton::{Automaton, ComponentPartition, Diagnostic, MachineBuilder};
pub use bisim::{equal_production, ProductionEquivalence};
pub use cycles::{Cycle, CycleClass, Exit, ExitKind, ExitReport};
pub use enrichment::{enrich, Certificate, Enrichment};
pub use error::{Error, Result};
pub use finiteness::{decide, DecideConfig, Verdict};
pub use format::{parse, Machine};
pub use mealy::MealyMachine;
pub use symbols::SymbolTable;
