//! PD-code and JSON parsing for diagrams.

use super::{Dart, Diagram};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed record `{0}`")]
    MalformedRecord(String),
    #[error("edge label {0} is used {1} times, expected exactly 2")]
    EdgeLabelNotUsedTwice(String, usize),
    #[error("the map is not a sphere embedding (Euler check failed)")]
    NonSphericalEmbedding,
}

/// Parses PD-code text: whitespace-separated `X(a,b,c,d)` records (edge
/// labels counterclockwise, first slot on the under-strand) and `O` tokens
/// for crossingless circles. Lines starting with `#` are comments.
pub fn parse_diagram(text: &str) -> Result<Diagram, ParseError> {
    let mut slots_by_label: HashMap<String, Vec<Dart>> = HashMap::new();
    let mut order: Vec<String> = Vec::new();
    let mut n_crossings = 0usize;
    let mut free_loops = 0usize;

    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            if token == "O" {
                free_loops += 1;
                continue;
            }
            let inner = token
                .strip_prefix("X(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| ParseError::MalformedRecord(token.to_string()))?;
            let labels: Vec<&str> = inner.split(',').collect();
            if labels.len() != 4 || labels.iter().any(|l| l.is_empty()) {
                return Err(ParseError::MalformedRecord(token.to_string()));
            }
            let c = n_crossings;
            n_crossings += 1;
            for (slot, label) in labels.iter().enumerate() {
                let entry = slots_by_label.entry(label.to_string()).or_insert_with(|| {
                    order.push(label.to_string());
                    Vec::new()
                });
                entry.push(Diagram::dart(c, slot));
            }
        }
    }

    let mut pairing = vec![usize::MAX; 4 * n_crossings];
    for label in &order {
        let darts = &slots_by_label[label];
        if darts.len() != 2 {
            return Err(ParseError::EdgeLabelNotUsedTwice(
                label.clone(),
                darts.len(),
            ));
        }
        pairing[darts[0]] = darts[1];
        pairing[darts[1]] = darts[0];
    }
    if pairing.contains(&usize::MAX) {
        // Unreachable: every slot received exactly one label.
        return Err(ParseError::NonSphericalEmbedding);
    }
    // Self-paired darts (a label twice on the same slot) cannot happen, but an
    // edge joining opposite slots of one crossing makes the map toroidal; the
    // Euler check below catches that.
    for (d, &e) in pairing.iter().enumerate() {
        if d == e {
            return Err(ParseError::NonSphericalEmbedding);
        }
    }
    let diagram = Diagram {
        pairing,
        under_axis: vec![0; n_crossings],
        free_loops,
    };
    if !diagram.is_spherical() {
        return Err(ParseError::NonSphericalEmbedding);
    }
    Ok(diagram)
}

/// Parses the JSON mirror `{"crossings":[[a,b,c,d],...],"free_loops":n}`.
pub fn parse_diagram_json(text: &str) -> Result<Diagram, ParseError> {
    #[derive(serde::Deserialize)]
    struct Raw {
        crossings: Vec<[u64; 4]>,
        #[serde(default)]
        free_loops: usize,
    }
    let raw: Raw =
        serde_json::from_str(text).map_err(|e| ParseError::MalformedRecord(e.to_string()))?;
    let mut pd = String::new();
    for x in &raw.crossings {
        pd.push_str(&format!("X({},{},{},{}) ", x[0], x[1], x[2], x[3]));
    }
    for _ in 0..raw.free_loops {
        pd.push_str("O ");
    }
    parse_diagram(&pd)
}
