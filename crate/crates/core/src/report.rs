//! Structured reports with JSON and text renderings.
//!
//! Symbol ids inside a payload are rendered as names wherever a view helper
//! exists; nested certificate data uses 0-based declaration indices.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::automaton::Automaton;
use crate::cycles::{self, Cycle, Exit, ExitReport};
use crate::enrichment::{EnrichmentOutcome, EnrichmentWitness};
use crate::finiteness::{DecideConfig, Verdict};
use crate::format::Machine;

/// Counts and predicate flags of the analysed machine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MachineSummary {
    pub kind: &'static str,
    pub states: usize,
    pub letters: usize,
    pub reversible: bool,
    /// `None` for plain automata.
    pub invertible: Option<bool>,
    pub bireversible: Option<bool>,
    pub has_cycle_with_exit: bool,
    pub components: usize,
}

impl MachineSummary {
    pub fn of(machine: &Machine) -> Self {
        let a = machine.automaton();
        let m = machine.as_mealy();
        MachineSummary {
            kind: machine.kind(),
            states: a.state_count(),
            letters: a.letter_count(),
            reversible: a.is_reversible(),
            invertible: m.map(|m| m.is_invertible()),
            bireversible: m.map(|m| m.is_bireversible()),
            has_cycle_with_exit: cycles::has_cycle_with_exit(a).is_some(),
            components: a.connected_components().len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub machine: Option<MachineSummary>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub payload: Value,
    /// A machine document produced by the command.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub document: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            machine: None,
            payload: Value::Null,
            document: None,
        }
    }

    pub fn parameter(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn machine(mut self, summary: MachineSummary) -> Self {
        self.machine = Some(summary);
        self
    }

    pub fn payload(mut self, payload: Value) -> Self {
        self.payload = payload;
        self
    }

    pub fn document(mut self, text: String) -> Self {
        self.document = Some(text);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// The document (if any) verbatim, followed by every other field as
    /// `key: value` lines. Those lines are `#` comments when a document is
    /// present, so the output still parses.
    pub fn to_text(&self) -> String {
        let mut fields = serde_json::to_value(self).expect("reports serialize");
        let doc = fields.as_object_mut().and_then(|o| o.remove("document"));
        let mut lines = Vec::new();
        flatten(&fields, "", &mut lines);
        let mut out = String::new();
        let prefix = match &doc {
            Some(Value::String(d)) => {
                out.push_str(d);
                "# "
            }
            _ => "",
        };
        for l in lines {
            let _ = writeln!(out, "{prefix}{l}");
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn flatten(v: &Value, path: &str, out: &mut Vec<String>) {
    if let Some(s) = scalar(v) {
        out.push(format!("{path}: {s}"));
        return;
    }
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                flatten(item, &join(k), out);
            }
        }
        Value::Array(items) => {
            for (k, item) in items.iter().enumerate() {
                flatten(item, &join(&k.to_string()), out);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

pub fn cycle_view(a: &Automaton, c: &Cycle) -> Value {
    json!({
        "states": c.states.iter().map(|&x| a.states().name(x)).collect::<Vec<_>>(),
        "letters": c.letters.iter().map(|&i| a.letters().name(i)).collect::<Vec<_>>(),
    })
}

pub fn exit_view(a: &Automaton, e: &Exit) -> Value {
    json!({
        "from": a.states().name(e.from),
        "letter": a.letters().name(e.letter),
        "to": a.states().name(e.to),
        "kind": e.kind,
    })
}

pub fn exit_report_view(a: &Automaton, r: &ExitReport) -> Value {
    json!({
        "cycle": cycle_view(a, &r.cycle),
        "exits": r.exits.iter().map(|e| exit_view(a, e)).collect::<Vec<_>>(),
        "classification": r.classification,
    })
}

pub fn enrichment_view(a: &Automaton, out: &EnrichmentOutcome) -> Value {
    let letters = a.letters();
    let perms: serde_json::Map<String, Value> = out
        .enrichment
        .perms
        .iter()
        .enumerate()
        .map(|(x, p)| {
            let images: Vec<&str> = p.iter().map(|&j| letters.name(j)).collect();
            (a.states().name(x).to_string(), json!(images))
        })
        .collect();
    let witness = match &out.witness {
        EnrichmentWitness::NoReturn { cycle, exit } | EnrichmentWitness::Binary { cycle, exit } => json!({
            "cycle": cycle_view(a, cycle),
            "exit": exit_view(a, exit),
        }),
        EnrichmentWitness::Reversible { pair } => json!({
            "x": a.states().name(pair.x),
            "letter_x": letters.name(pair.letter_x),
            "y": a.states().name(pair.y),
            "letter_y": letters.name(pair.letter_y),
            "z": a.states().name(pair.z),
        }),
        EnrichmentWitness::Restricted {
            start,
            path_letter,
            cycle,
            exit,
            letters: pair,
        } => json!({
            "start": a.states().name(*start),
            "path_letter": letters.name(*path_letter),
            "cycle": cycle_view(a, cycle),
            "exit": exit_view(a, exit),
            "letters": [letters.name(pair[0]), letters.name(pair[1])],
        }),
    };
    let branch = serde_json::to_value(&out.witness).expect("serializes")["branch"].clone();
    json!({
        "certificate": out.enrichment.certificate.as_str(),
        "branch": branch,
        "witness": witness,
        "pruned": out.pruned.iter().map(|&x| a.states().name(x)).collect::<Vec<_>>(),
        "outputs": perms,
    })
}

pub fn verdict_view(v: &Verdict, config: &DecideConfig) -> Value {
    let order = match v {
        Verdict::Finite { order, .. } => json!(order),
        _ => Value::Null,
    };
    json!({
        "verdict": v.kind(),
        "certificate": v.certificate_tag(),
        "order": order,
        "config": config,
        "details": v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enrichment::enrich;

    #[test]
    fn summary_of_adding_machine() {
        let s = MachineSummary::of(&Machine::Mealy(catalog::adding_machine()));
        assert_eq!(s.states, 2);
        assert_eq!(s.invertible, Some(true));
        assert_eq!(s.bireversible, Some(false));
        assert!(!s.reversible);
        assert!(s.has_cycle_with_exit);
        assert_eq!(s.components, 1);
    }

    #[test]
    fn text_and_json_carry_the_same_tags() {
        let a = catalog::adding_machine_automaton();
        let out = enrich(&a).unwrap();
        let r = Report::new("enrich")
            .payload(enrichment_view(&a, &out))
            .document(crate::format::print_mealy(&out.machine));
        let text = r.to_text();
        let json = r.to_json();
        assert!(text.contains("# payload.certificate: Lemma3NoReturn"));
        assert!(json.contains("\"certificate\": \"Lemma3NoReturn\""));
        // text output remains a parseable document
        assert_eq!(
            crate::format::parse(&text).unwrap(),
            Machine::Mealy(catalog::adding_machine())
        );
    }

    #[test]
    fn flatten_nested() {
        let mut out = Vec::new();
        flatten(&json!({"a": {"b": [1, 2]}, "c": [{"d": null}]}), "", &mut out);
        assert_eq!(out, vec!["a.b: [1, 2]", "c.0.d: none"]);
    }
}
