//! Text and JSON rendering of results.
//!
//! JSON documents are emitted with a fixed field order and map keys in
//! generator order, so identical inputs produce identical bytes. Words are
//! always rendered as `x<k>`/`x<k>^-1` tokens, cyclic words in canonical
//! rotation.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use tcurve_core::models::ModelClass;
use tcurve_core::oracle::Exploration;
use tcurve_core::words::CyclicWord;
use tcurve_core::{OccurrenceReport, Verdict};

use crate::input::InputDocument;

fn render_words(words: &[CyclicWord]) -> Vec<String> {
    words.iter().map(|w| w.to_string()).collect()
}

struct Occurrences<'a>(&'a OccurrenceReport);

impl Serialize for Occurrences<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            pos: usize,
            neg: usize,
        }
        let mut map = serializer.serialize_map(Some(self.0.genus()))?;
        for (index, pos, neg) in self.0.iter() {
            map.serialize_entry(&index.to_string(), &Entry { pos, neg })?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TraceStep {
    #[serde(rename = "move")]
    mv: String,
    length_after: usize,
}

#[derive(Serialize)]
struct VerdictDoc<'a> {
    genus: usize,
    input_words: Vec<String>,
    s_min: Vec<String>,
    trace: Vec<TraceStep>,
    occurrences: Occurrences<'a>,
    criterion_holds: bool,
    interpretation: &'static str,
}

/// The machine-readable verdict document, one line of JSON.
pub fn verdict_json(doc: &InputDocument, v: &Verdict) -> String {
    let body = VerdictDoc {
        genus: v.genus,
        input_words: doc.words.iter().map(|w| w.to_string()).collect(),
        s_min: render_words(v.s_min.reduced()),
        trace: v
            .trace
            .steps
            .iter()
            .map(|s| TraceStep {
                mv: s.mv.to_string(),
                length_after: s.length_after,
            })
            .collect(),
        occurrences: Occurrences(&v.occurrences),
        criterion_holds: v.criterion_holds,
        interpretation: v.interpretation.token(),
    };
    let mut out = serde_json::to_string(&body).expect("serialization cannot fail");
    out.push('\n');
    out
}

fn push_trace(out: &mut String, v: &Verdict) {
    let steps = &v.trace.steps;
    out.push_str(&format!(
        "reduction trace ({} step{})\n",
        steps.len(),
        plural(steps.len())
    ));
    let mut prev = v.input.length();
    for (i, step) in steps.iter().enumerate() {
        out.push_str(&format!(
            "  step {}: {} | length {} -> {}\n",
            i + 1,
            step.mv,
            prev,
            step.length_after
        ));
        prev = step.length_after;
    }
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

/// Human-readable verdict report.
pub fn verdict_text(doc: &InputDocument, v: &Verdict, include_trace: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("source: {}\n", doc.source));
    out.push_str(&format!("genus: {}\n", v.genus));
    out.push_str(&format!("input words ({}):\n", doc.words.len()));
    for w in &doc.words {
        out.push_str(&format!("  {w}\n"));
    }
    out.push_str(&format!(
        "S_min (length {}): {}\n",
        v.s_min.length(),
        v.s_min
    ));
    if include_trace {
        push_trace(&mut out, v);
    }
    out.push_str("occurrences (x_i / x_i^-1):\n");
    for (index, pos, neg) in v.occurrences.iter() {
        out.push_str(&format!("  x{index}: {pos}/{neg}\n"));
    }
    out.push_str(&format!(
        "criterion: {}\n",
        if v.criterion_holds { "holds" } else { "fails" }
    ));
    out.push_str(&format!("interpretation: {}\n", v.interpretation.token()));
    out
}

/// Report for the `reduce` command: the minimal set plus the trace.
pub fn reduce_text(doc: &InputDocument, v: &Verdict) -> String {
    let mut out = String::new();
    out.push_str(&format!("source: {}\n", doc.source));
    out.push_str(&format!("genus: {}\n", v.genus));
    out.push_str(&format!("input length: {}\n", v.input.length()));
    out.push_str(&format!(
        "S_min (length {}): {}\n",
        v.s_min.length(),
        v.s_min
    ));
    push_trace(&mut out, v);
    out
}

/// Everything the `oracle` command established.
pub struct CertificationReport {
    pub length_cap: usize,
    pub node_budget: usize,
    pub exploration: Exploration,
    pub greedy_matches_minimum: bool,
    pub minimal_forms_agree_on_condition: bool,
    pub minimal_level_connected: bool,
}

#[derive(Serialize)]
struct OracleDoc {
    genus: usize,
    input_words: Vec<String>,
    length_cap: usize,
    node_budget: usize,
    visited_count: usize,
    global_min_length: usize,
    minimal_forms: Vec<Vec<String>>,
    greedy_matches_minimum: bool,
    minimal_forms_agree_on_condition: bool,
    minimal_level_connected: bool,
}

pub fn oracle_json(doc: &InputDocument, report: &CertificationReport) -> String {
    let body = OracleDoc {
        genus: doc.genus,
        input_words: doc.words.iter().map(|w| w.to_string()).collect(),
        length_cap: report.length_cap,
        node_budget: report.node_budget,
        visited_count: report.exploration.visited_count,
        global_min_length: report.exploration.global_min_length,
        minimal_forms: report
            .exploration
            .minimal_forms
            .iter()
            .map(|f| render_words(f.reduced()))
            .collect(),
        greedy_matches_minimum: report.greedy_matches_minimum,
        minimal_forms_agree_on_condition: report.minimal_forms_agree_on_condition,
        minimal_level_connected: report.minimal_level_connected,
    };
    let mut out = serde_json::to_string(&body).expect("serialization cannot fail");
    out.push('\n');
    out
}

pub fn oracle_text(doc: &InputDocument, report: &CertificationReport) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    out.push_str(&format!("source: {}\n", doc.source));
    out.push_str(&format!("genus: {}\n", doc.genus));
    out.push_str(&format!("input length: {}\n", doc.to_set().length()));
    out.push_str(&format!("length cap: {}\n", report.length_cap));
    out.push_str(&format!("node budget: {}\n", report.node_budget));
    out.push_str(&format!(
        "visited states: {}\n",
        report.exploration.visited_count
    ));
    out.push_str(&format!(
        "global minimum length: {}\n",
        report.exploration.global_min_length
    ));
    out.push_str(&format!(
        "minimal forms ({}):\n",
        report.exploration.minimal_forms.len()
    ));
    for form in &report.exploration.minimal_forms {
        out.push_str(&format!("  {form}\n"));
    }
    out.push_str(&format!(
        "greedy reduction matches the exhaustive minimum: {}\n",
        yes_no(report.greedy_matches_minimum)
    ));
    out.push_str(&format!(
        "all minimal forms agree on the occurrence condition: {}\n",
        yes_no(report.minimal_forms_agree_on_condition)
    ));
    out.push_str(&format!(
        "minimal forms mutually reachable at the minimal level: {}\n",
        yes_no(report.minimal_level_connected)
    ));
    out
}

#[derive(Serialize)]
struct ModelEntry {
    representative: Vec<String>,
    orbit_size: usize,
}

#[derive(Serialize)]
struct ModelsDoc<'a> {
    genus: usize,
    classes: Vec<ModelEntry>,
    note: Option<&'a str>,
}

pub fn models_json(genus: usize, classes: &[ModelClass], note: Option<&str>) -> String {
    let body = ModelsDoc {
        genus,
        classes: classes
            .iter()
            .map(|c| ModelEntry {
                representative: render_words(&c.representative),
                orbit_size: c.orbit_size,
            })
            .collect(),
        note,
    };
    let mut out = serde_json::to_string(&body).expect("serialization cannot fail");
    out.push('\n');
    out
}

pub fn models_text(genus: usize, classes: &[ModelClass], note: Option<&str>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "genus {genus}: {} class{}\n",
        classes.len(),
        if classes.len() == 1 { "" } else { "es" }
    ));
    for class in classes {
        let words = render_words(&class.representative);
        out.push_str(&format!(
            "  {{{}}} | orbit {}\n",
            words.join(", "),
            class.orbit_size
        ));
    }
    if let Some(note) = note {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}
