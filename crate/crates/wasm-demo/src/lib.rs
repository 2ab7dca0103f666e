//! Browser bindings for the demo page in `www/`. Every export takes the text
//! formats the CLI reads and returns a JSON string; errors come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use nicecolor::format::{color_name, parse_instance, parse_portfolios};
use nicecolor::generate::{random_rows, render_rows, rng, special_rows};
use nicecolor::predicates::is_c_fair;
use nicecolor::scheduler::make_schedule;
use nicecolor::{is_special, partialize, solve, to_hypergraph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// Fairness, the special pattern and a nice coloring (total and trimmed) of
/// an instance.
#[wasm_bindgen]
pub fn check_instance(text: &str, colors: u32) -> String {
    respond(check(text, colors))
}

fn check(text: &str, colors: u32) -> Result<Value, String> {
    if colors == 0 {
        return Err("at least one color is needed".into());
    }
    let (ts, alphabet) = parse_instance(text).map_err(|e| e.to_string())?;
    let special = if ts.k() == 3 {
        Some(is_special(&ts).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let coloring = solve(&ts, colors).map_err(|e| e.to_string())?;
    let names = |col: &nicecolor::Coloring| -> Vec<Option<String>> {
        col.assignment()
            .iter()
            .map(|a| a.map(|c| color_name(c, colors)))
            .collect()
    };
    let partial = match &coloring {
        Some(col) => Some(partialize(&ts, col, &[]).map_err(|e| e.to_string())?),
        None => None,
    };
    let tuples: Vec<Vec<&str>> = ts
        .iter()
        .map(|t| t.iter().map(|&e| alphabet.token(e)).collect())
        .collect();
    Ok(json!({
        "tuples": tuples,
        "fair": is_c_fair(&ts, colors as usize),
        "special": special,
        "colorable": coloring.is_some(),
        "coloring": coloring.as_ref().map(names),
        "partial": partial.as_ref().map(names),
    }))
}

/// The hypergraph with one vertex per tuple and one edge per element, listing
/// the tuples that avoid it.
#[wasm_bindgen]
pub fn hypergraph_view(text: &str) -> String {
    respond(hypergraph(text))
}

fn hypergraph(text: &str) -> Result<Value, String> {
    let (ts, alphabet) = parse_instance(text).map_err(|e| e.to_string())?;
    let h = to_hypergraph(&ts);
    let edges: Vec<Value> = h
        .edges()
        .iter()
        .enumerate()
        .map(|(i, edge)| {
            json!({
                "element": alphabet.token(i as u32 + 1),
                "vertices": edge.iter().map(|v| v + 1).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "vertices": h.n_vertices(),
        "degree": h.degrees().first().copied(),
        "edges": edges,
    }))
}

/// Groups of three and four with a three-round presentation order, or the
/// reason none exists.
#[wasm_bindgen]
pub fn schedule_teams(text: &str) -> String {
    respond(schedule(text))
}

fn schedule(text: &str) -> Result<Value, String> {
    let (portfolios, alphabet) = parse_portfolios(text).map_err(|e| e.to_string())?;
    match make_schedule(&portfolios) {
        Ok(s) => {
            let doc = s.document(&portfolios, |p| alphabet.token(p).to_owned());
            serde_json::to_value(doc).map_err(|e| e.to_string())
        }
        Err(reason) => Ok(json!({ "infeasible": reason.to_string() })),
    }
}

/// A seeded random or special instance in the text format.
#[wasm_bindgen]
pub fn generate_instance(n: usize, m: usize, seed: u64, special: bool) -> String {
    let mut rng = rng(seed);
    if special {
        if n < 4 || m < 5 {
            return String::new();
        }
        render_rows(&special_rows(&mut rng, n, m))
    } else {
        if m < 3 {
            return String::new();
        }
        render_rows(&random_rows(&mut rng, n, m, 3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn four_triples() {
        let v = parse(&check_instance("1 2 3\n1 4 5\n2 4 5\n6 7 8\n", 2));
        assert_eq!(v["fair"], true);
        assert_eq!(v["special"], false);
        assert_eq!(v["colorable"], false);
        assert!(v["coloring"].is_null());
    }

    #[test]
    fn disjoint_triples_get_colors() {
        let text = "a b c\nd e f\ng h i\nj k l\n";
        let v = parse(&check_instance(text, 2));
        assert_eq!(v["colorable"], true);
        let colors = v["coloring"].as_array().unwrap();
        assert_eq!(colors.len(), 4);
        assert!(colors.iter().any(|c| c == "red") && colors.iter().any(|c| c == "blue"));
        assert_eq!(v["tuples"][1], json!(["d", "e", "f"]));
    }

    #[test]
    fn errors_are_json() {
        let v = parse(&check_instance("1 2 3\n1 2\n", 2));
        assert!(v["error"].as_str().unwrap().contains("line 2"));
        assert!(parse(&check_instance("1 2 3\n", 0))["error"].is_string());
    }

    #[test]
    fn hypergraph_edges() {
        let v = parse(&hypergraph_view("1 2 3\n1 4 5\n"));
        assert_eq!(v["vertices"], 2);
        assert_eq!(v["degree"], 2);
        assert_eq!(v["edges"][1], json!({"element": "2", "vertices": [2]}));
    }

    #[test]
    fn schedules() {
        let v = parse(&schedule_teams("a 1 2 3\nb 4 5 6\nc 7 8 9\n"));
        assert_eq!(v["groups"][0]["teams"], json!(["a", "b", "c"]));
        let v = parse(&schedule_teams("a 1 2 3\nb 4 5 6\n"));
        assert!(v["infeasible"].is_string());
    }

    #[test]
    fn generated_text_parses() {
        let text = generate_instance(10, 9, 4, true);
        assert_eq!(text.lines().count(), 10);
        assert_eq!(parse(&check_instance(&text, 2))["special"], true);
        assert_eq!(generate_instance(5, 9, 1, false), generate_instance(5, 9, 1, false));
    }
}
