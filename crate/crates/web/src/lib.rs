//! WebAssembly bindings for the browser demo. Every entry point takes a
//! machine document and returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write;

use mealy::finiteness::{self, DecideConfig};
use mealy::format::{self, Machine};
use mealy::report::{self, MachineSummary};
use mealy::{catalog, cycles, enrichment};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Closure work cap used in the browser, where a long search freezes the page.
pub const WEB_CLOSURE_WORK: u64 = 20_000_000;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn parse(text: &str) -> Result<Machine, String> {
    format::parse(text).map_err(|e| e.to_string())
}

/// Predicate flags, the cycle-with-exit witness with its exit report, and
/// a drawing of the machine.
pub fn analyze_value(text: &str) -> Result<Value, String> {
    let machine = parse(text)?;
    let a = machine.automaton();
    let witness = match cycles::has_cycle_with_exit(a) {
        Some(w) => {
            let r = cycles::classify_exits(a, &w.cycle).map_err(|e| e.to_string())?;
            json!({
                "cycle": report::cycle_view(a, &w.cycle),
                "exit": report::exit_view(a, &w.exit),
                "report": report::exit_report_view(a, &r),
            })
        }
        None => Value::Null,
    };
    Ok(json!({
        "machine": MachineSummary::of(&machine),
        "witness": witness,
        "svg": svg(&machine),
    }))
}

/// Enriches the underlying automaton and returns the certificate, the new
/// machine document and its drawing.
pub fn enrich_value(text: &str) -> Result<Value, String> {
    let machine = parse(text)?;
    let a = machine.automaton();
    let out = enrichment::enrich(a).map_err(|e| e.to_string())?;
    let enriched = Machine::Mealy(out.machine.clone());
    Ok(json!({
        "enrichment": report::enrichment_view(a, &out),
        "document": enriched.print(),
        "svg": svg(&enriched),
    }))
}

/// Runs the decision pipeline with a browser-sized work cap.
pub fn finiteness_value(text: &str, budget: usize, max_level: usize) -> Result<Value, String> {
    let machine = parse(text)?;
    let m = machine
        .as_mealy()
        .ok_or("finiteness needs a mealy document, not a bare automaton")?;
    let config = DecideConfig {
        budget,
        max_level,
        work: WEB_CLOSURE_WORK,
        ..DecideConfig::default()
    };
    let verdict = finiteness::decide(m, &config);
    Ok(report::verdict_view(&verdict, &config))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    respond(analyze_value(text))
}

#[wasm_bindgen]
pub fn enrich(text: &str) -> String {
    respond(enrich_value(text))
}

#[wasm_bindgen]
pub fn finiteness(text: &str, budget: u32, max_level: u32) -> String {
    respond(finiteness_value(text, budget as usize, max_level as usize))
}

/// Example documents by name: `adding-machine`, `figure-3`, `two-state`.
#[wasm_bindgen]
pub fn example(name: &str) -> String {
    match name {
        "adding-machine" => format::print_mealy(&catalog::adding_machine()),
        "figure-3" => format::print_automaton(&catalog::fig3_automaton()),
        "two-state" => format::print_automaton(&catalog::two_state_irreversible()),
        _ => String::new(),
    }
}

const SIZE: f64 = 360.0;
const NODE_RADIUS: f64 = 18.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// States on a circle; parallel transitions share one edge whose label
/// lists them all.
pub fn svg(machine: &Machine) -> String {
    let a = machine.automaton();
    let n = a.state_count();
    let center = SIZE / 2.0;
    let ring = if n == 1 { 0.0 } else { SIZE / 2.0 - 50.0 };
    let pos: Vec<(f64, f64)> = (0..n)
        .map(|x| {
            let t = 2.0 * PI * x as f64 / n as f64 - PI / 2.0;
            (center + ring * t.cos(), center + ring * t.sin())
        })
        .collect();

    let mut labels: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for x in 0..n {
        for i in 0..a.letter_count() {
            let letter = a.letters().name(i);
            let label = match machine.as_mealy() {
                Some(m) => format!("{letter}|{}", a.letters().name(m.output(x, i))),
                None => letter.to_string(),
            };
            labels.entry((x, a.next(x, i))).or_default().push(label);
        }
    }

    let mut out = String::new();
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    out.push_str(
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>"#,
    );
    for (&(x, y), names) in &labels {
        let text = escape(&names.join(", "));
        let (x0, y0) = pos[x];
        if x == y {
            // loop drawn outward from the center
            let (dx, dy) = outward(x0 - center, y0 - center);
            let (cx, cy) = (x0 + dx * 30.0, y0 + dy * 30.0);
            let _ = write!(
                out,
                r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="14" fill="none" stroke="black"/><text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{text}</text>"#,
                x0 + dx * 52.0,
                y0 + dy * 52.0 + 4.0,
            );
            continue;
        }
        let (x1, y1) = pos[y];
        let (dx, dy) = outward(x1 - x0, y1 - y0);
        // bend to the right so opposite edges do not overlap
        let (mx, my) = ((x0 + x1) / 2.0 - dy * 20.0, (y0 + y1) / 2.0 + dx * 20.0);
        let (sx, sy) = (x0 + dx * NODE_RADIUS, y0 + dy * NODE_RADIUS);
        let (ex, ey) = (x1 - dx * NODE_RADIUS, y1 - dy * NODE_RADIUS);
        let _ = write!(
            out,
            r#"<path d="M{sx:.1},{sy:.1} Q{mx:.1},{my:.1} {ex:.1},{ey:.1}" fill="none" stroke="black" marker-end="url(#arrow)"/><text x="{mx:.1}" y="{my:.1}" font-size="11" text-anchor="middle">{text}</text>"#
        );
    }
    for (x, &(px, py)) in pos.iter().enumerate() {
        let _ = write!(
            out,
            r#"<circle cx="{px:.1}" cy="{py:.1}" r="{NODE_RADIUS}" fill="white" stroke="black"/><text x="{px:.1}" y="{:.1}" font-size="13" text-anchor="middle">{}</text>"#,
            py + 4.0,
            escape(a.states().name(x)),
        );
    }
    out.push_str("</svg>");
    out
}

fn outward(dx: f64, dy: f64) -> (f64, f64) {
    let len = (dx * dx + dy * dy).sqrt();
    if len == 0.0 {
        (0.0, -1.0)
    } else {
        (dx / len, dy / len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn analyze_figure_three() {
        let v = value(analyze(&example("figure-3")));
        assert_eq!(v["machine"]["states"], 6);
        assert_eq!(v["witness"]["exit"]["kind"], "external");
        let svg = v["svg"].as_str().unwrap();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>"));
        assert_eq!(svg.matches("r=\"18\"").count(), 6);
    }

    #[test]
    fn enrich_rebuilds_the_adding_machine() {
        let underlying = format::print_automaton(&catalog::adding_machine_automaton());
        let v = value(enrich(&underlying));
        assert_eq!(v["enrichment"]["certificate"], "Lemma3NoReturn");
        assert_eq!(v["document"], example("adding-machine"));
        assert!(v["svg"].as_str().unwrap().contains("0|1"));
    }

    #[test]
    fn finiteness_verdicts() {
        let v = value(finiteness(&example("adding-machine"), 500, 6));
        assert_eq!(v["verdict"], "Unknown");
        let identity = format::print_mealy(&mealy::MealyMachine::with_identity_outputs(catalog::fig3_automaton()));
        let v = value(finiteness(&identity, 500, 6));
        assert_eq!(v["verdict"], "Finite");
        assert_eq!(v["order"], 1);
    }

    #[test]
    fn errors_are_json() {
        let v = value(analyze("nonsense"));
        assert!(v["error"].as_str().unwrap().contains("line 1"));
        let v = value(finiteness(&example("figure-3"), 10, 2));
        assert!(v["error"].is_string());
        let no_exit = "automaton\nstates: s\nalphabet: a b\ns a -> s\ns b -> s\n";
        assert!(value(enrich(no_exit))["error"].is_string());
    }

    #[test]
    fn labels_are_escaped() {
        let text = "automaton\nstates: <p>\nalphabet: 0 1\n<p> 0 -> <p>\n<p> 1 -> <p>\n";
        let v = value(analyze(text));
        assert!(v["svg"].as_str().unwrap().contains("&lt;p&gt;"));
    }
}
