//! The line-based text format for automata and Mealy machines.
//!
//! ```text
//! mealy
//! states: x y
//! alphabet: 0 1
//! x 0 -> y | 1
//! x 1 -> x | 0
//! y 0 -> y | 0
//! y 1 -> y | 1
//! ```
//!
//! A plain `automaton` document has the same shape without `| j`. Tokens are
//! separated by whitespace and `#` starts a comment.

use std::fmt::Write;

use crate::automaton::{Automaton, MachineBuilder};
use crate::error::{Error, Result};
use crate::mealy::MealyMachine;

/// A parsed document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Machine {
    Automaton(Automaton),
    Mealy(MealyMachine),
}

impl Machine {
    pub fn automaton(&self) -> &Automaton {
        match self {
            Machine::Automaton(a) => a,
            Machine::Mealy(m) => m.automaton(),
        }
    }

    pub fn as_mealy(&self) -> Option<&MealyMachine> {
        match self {
            Machine::Automaton(_) => None,
            Machine::Mealy(m) => Some(m),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Machine::Automaton(_) => "automaton",
            Machine::Mealy(_) => "mealy",
        }
    }

    /// Canonical document text.
    pub fn print(&self) -> String {
        match self {
            Machine::Automaton(a) => print_automaton(a),
            Machine::Mealy(m) => print_mealy(m),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn check_name(line: usize, name: &str) -> Result<()> {
    if name == "->" || name == "|" || name.contains(':') {
        return Err(syntax(line, format!("`{name}` is not a valid name")));
    }
    Ok(())
}

fn declaration<'t>(line: usize, text: &'t str, key: &str) -> Result<Vec<&'t str>> {
    let rest = text
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| syntax(line, format!("expected `{key}: ...`")))?;
    let names: Vec<&str> = rest.split_whitespace().collect();
    for n in &names {
        check_name(line, n)?;
    }
    Ok(names)
}

/// Parses an `automaton` or `mealy` document. Syntax errors carry a line
/// number; well-formedness problems are reported as [`Error::Invalid`].
pub fn parse(text: &str) -> Result<Machine> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| syntax(1, "empty document"))?;
    let mealy = match header {
        "mealy" => true,
        "automaton" => false,
        other => return Err(syntax(line, format!("expected `automaton` or `mealy`, found `{other}`"))),
    };
    let (line, text) = lines.next().ok_or_else(|| syntax(line, "missing `states:` line"))?;
    let states = declaration(line, text, "states")?;
    let (line, text) = lines.next().ok_or_else(|| syntax(line, "missing `alphabet:` line"))?;
    let letters = declaration(line, text, "alphabet")?;

    let mut builder = MachineBuilder::new(&states, &letters);
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        match (mealy, tokens.as_slice()) {
            (false, [x, i, "->", y]) => {
                builder.transition(x, i, y);
            }
            (true, [x, i, "->", y, "|", j]) => {
                builder.mealy_transition(x, i, y, j);
            }
            (false, [_, _, "->", _, "|", _]) => {
                return Err(syntax(line, "output `| j` in an automaton document"));
            }
            (true, [_, _, "->", _]) => {
                return Err(syntax(line, "missing output `| j` in a mealy document"));
            }
            (true, _) => return Err(syntax(line, "expected `state letter -> state | letter`")),
            (false, _) => return Err(syntax(line, "expected `state letter -> state`")),
        }
    }
    if mealy {
        builder.build_mealy().map(Machine::Mealy)
    } else {
        builder.build_automaton().map(Machine::Automaton)
    }
}

fn header(out: &mut String, kind: &str, a: &Automaton) {
    let _ = writeln!(out, "{kind}");
    let _ = writeln!(out, "states: {}", a.states().names().join(" "));
    let _ = writeln!(out, "alphabet: {}", a.letters().names().join(" "));
}

/// Canonical text: declaration order, state-major, one transition per line.
pub fn print_automaton(a: &Automaton) -> String {
    let mut out = String::new();
    header(&mut out, "automaton", a);
    for x in 0..a.state_count() {
        for i in 0..a.letter_count() {
            let _ = writeln!(
                out,
                "{} {} -> {}",
                a.states().name(x),
                a.letters().name(i),
                a.states().name(a.next(x, i))
            );
        }
    }
    out
}

pub fn print_mealy(m: &MealyMachine) -> String {
    let a = m.automaton();
    let mut out = String::new();
    header(&mut out, "mealy", a);
    for x in 0..a.state_count() {
        for i in 0..a.letter_count() {
            let _ = writeln!(
                out,
                "{} {} -> {} | {}",
                a.states().name(x),
                a.letters().name(i),
                a.states().name(a.next(x, i)),
                a.letters().name(m.output(x, i))
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Diagnostic;
    use crate::catalog;

    const ADDING: &str = "\
mealy
states: x y
alphabet: 0 1
x 0 -> y | 1
x 1 -> x | 0
y 0 -> y | 0
y 1 -> y | 1
";

    #[test]
    fn adding_machine_document() {
        let m = parse(ADDING).unwrap();
        assert_eq!(m, Machine::Mealy(catalog::adding_machine()));
        assert_eq!(m.print(), ADDING);
    }

    #[test]
    fn comments_blank_lines_and_any_order() {
        let text = "# the odometer\n\nmealy\nstates: x y   # two states\nalphabet: 0 1\n\
                    y 1 -> y | 1\nx 1 -> x | 0\ny 0 -> y | 0\nx 0 -> y | 1\n";
        assert_eq!(parse(text).unwrap().print(), ADDING);
    }

    #[test]
    fn duplicate_line_is_nondeterministic() {
        let text = format!("{ADDING}x 0 -> x | 0\n");
        match parse(&text) {
            Err(Error::Invalid(d)) => assert!(d.iter().any(|d| matches!(d, Diagnostic::Nondeterministic { .. }))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_line_is_incomplete() {
        let text = ADDING.replace("x 1 -> x | 0\n", "");
        match parse(&text) {
            Err(Error::Invalid(d)) => assert!(d.contains(&Diagnostic::Incomplete {
                state: "x".into(),
                letter: "1".into()
            })),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn automaton_with_outputs_is_a_syntax_error() {
        let text = "automaton\nstates: x y\nalphabet: 0 1\nx 0 -> y | 1\n";
        assert!(matches!(parse(text), Err(Error::Parse { line: 4, .. })));
    }

    #[test]
    fn bad_header() {
        assert!(matches!(parse("transducer\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("mealy\nalphabet: 0 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn inverse_names_round_trip() {
        let inv = catalog::adding_machine().inverse().unwrap();
        let text = print_mealy(&inv);
        assert!(text.contains("x^-1 1 -> y^-1 | 0"));
        assert_eq!(parse(&text).unwrap(), Machine::Mealy(inv));
    }

    #[test]
    fn automaton_round_trip() {
        let a = catalog::fig3_automaton();
        let text = print_automaton(&a);
        assert_eq!(text.lines().count(), 3 + 12);
        assert_eq!(parse(&text).unwrap(), Machine::Automaton(a));
    }
}
