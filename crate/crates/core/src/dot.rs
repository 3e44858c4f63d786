//! Graphviz export. Edges are labeled `i` for automata and `i|j` for Mealy
//! machines, one edge per transition.

use std::fmt::Write;

use crate::automaton::Automaton;
use crate::format::Machine;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(machine: &Machine) -> String {
    let a: &Automaton = machine.automaton();
    let mut out = String::from("digraph machine {\n  rankdir=LR;\n  node [shape=circle];\n");
    for x in 0..a.state_count() {
        let _ = writeln!(out, "  {};", quote(a.states().name(x)));
    }
    for x in 0..a.state_count() {
        for i in 0..a.letter_count() {
            let label = match machine {
                Machine::Automaton(_) => a.letters().name(i).to_string(),
                Machine::Mealy(m) => format!("{}|{}", a.letters().name(i), a.letters().name(m.output(x, i))),
            };
            let _ = writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(a.states().name(x)),
                quote(a.states().name(a.next(x, i))),
                quote(&label)
            );
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn adding_machine_edges() {
        let dot = export_dot(&Machine::Mealy(catalog::adding_machine()));
        assert!(dot.contains("\"x\" -> \"y\" [label=\"0|1\"];"));
        assert_eq!(dot.matches("->").count(), 4);
    }

    #[test]
    fn fig3_node_count() {
        let dot = export_dot(&Machine::Automaton(catalog::fig3_automaton()));
        let nodes = dot.lines().filter(|l| l.ends_with(';') && !l.contains("->") && !l.contains('=')).count();
        assert_eq!(nodes, 6);
        assert_eq!(dot.matches("->").count(), 12);
    }
}
