//! Plain-text poset descriptions.
//!
//! One cover per line as `lower < upper`; a line holding a single name
//! declares an element (needed for isolated elements). `#` starts a comment.
//! Elements are numbered in order of first appearance.
//!
//! ```text
//! # a three-element "V"
//! a < c
//! b < c
//! ```

use std::collections::HashMap;

use thiserror::Error;

use super::{Poset, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetTextError {
    #[error("line {line}: {message}: `{text}`")]
    Syntax {
        line: usize,
        text: String,
        message: String,
    },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| !c.is_whitespace() && c != '<' && c != '#')
}

/// Parses the text format into a poset.
pub fn parse_poset(text: &str) -> Result<Poset, PosetTextError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut covers = Vec::new();
    let mut intern = |name: &str, labels: &mut Vec<String>| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| {
            labels.push(name.to_string());
            labels.len() - 1
        })
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: &str| PosetTextError::Syntax {
            line: lineno + 1,
            text: raw.trim().to_string(),
            message: message.to_string(),
        };
        let parts: Vec<&str> = line.split('<').map(str::trim).collect();
        match parts.as_slice() {
            [single] => {
                if !valid_name(single) {
                    return Err(syntax("expected an element name"));
                }
                intern(single, &mut labels);
            }
            [lower, upper] => {
                if !valid_name(lower) || !valid_name(upper) {
                    return Err(syntax("expected `lower < upper` with bare names"));
                }
                let lo = intern(lower, &mut labels);
                let hi = intern(upper, &mut labels);
                covers.push((lo, hi));
            }
            _ => return Err(syntax("expected one `<` per line")),
        }
    }
    Ok(Poset::from_covers(labels, &covers)?)
}

/// Writes a poset in the text format: isolated elements first, then covers.
pub fn write_poset(poset: &Poset) -> String {
    let mut out = String::new();
    for x in 0..poset.len() {
        if poset.upper_covers(x).is_empty() && poset.lower_covers(x).is_empty() {
            out.push_str(poset.label(x));
            out.push('\n');
        }
    }
    for (a, b) in poset.covers() {
        out.push_str(&format!("{} < {}\n", poset.label(a), poset.label(b)));
    }
    out
}
