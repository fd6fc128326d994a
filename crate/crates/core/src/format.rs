//! Plain-text structure files.
//!
//! ```text
//! # Three atoms over 0
//! elements: 0 a b c
//! covers:
//! 0 < a
//! 0 < b
//! 0 < c
//! ```
//!
//! Element names are whitespace separated and may continue on the lines
//! after `elements:` up to `covers:`. Declaration order is significant.
//! `#` starts a comment; blank lines are ignored.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::{MeetSemilattice, Poset};

#[derive(PartialEq)]
enum Section {
    Start,
    Elements,
    Covers,
}

fn at_line(line: usize, source: Error) -> Error {
    Error::AtLine {
        line,
        source: Box::new(source),
    }
}

pub fn parse_structure(text: &str) -> Result<MeetSemilattice> {
    let mut section = Section::Start;
    let mut names: Vec<String> = Vec::new();
    let mut declared: HashMap<String, usize> = HashMap::new();
    let mut elements_line = 0;
    let mut covers: Vec<(usize, usize)> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("elements:") {
            if section != Section::Start {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "`elements:` must come first and only once".into(),
                });
            }
            section = Section::Elements;
            elements_line = line_no;
            for name in rest.split_whitespace() {
                if declared.insert(name.to_owned(), names.len()).is_some() {
                    return Err(at_line(line_no, Error::DuplicateElement(name.to_owned())));
                }
                names.push(name.to_owned());
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("covers:") {
            if section != Section::Elements {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "`covers:` must follow `elements:`".into(),
                });
            }
            section = Section::Covers;
            if !rest.trim().is_empty() {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "cover pairs go on their own lines".into(),
                });
            }
            continue;
        }
        match section {
            Section::Start => {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "expected `elements:`".into(),
                })
            }
            Section::Elements => {
                for name in line.split_whitespace() {
                    if declared.insert(name.to_owned(), names.len()).is_some() {
                        return Err(at_line(line_no, Error::DuplicateElement(name.to_owned())));
                    }
                    names.push(name.to_owned());
                }
            }
            Section::Covers => {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let [lo, "<", hi] = parts.as_slice() else {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: format!("expected `lower < upper`, found `{line}`"),
                    });
                };
                let lookup = |name: &str| {
                    declared
                        .get(name)
                        .copied()
                        .ok_or_else(|| at_line(line_no, Error::UnknownName(name.to_owned())))
                };
                covers.push((lookup(lo)?, lookup(hi)?));
            }
        }
    }
    if section == Section::Start {
        return Err(Error::Syntax {
            line: 1,
            message: "missing `elements:` section".into(),
        });
    }
    let poset = Poset::from_covers(names, &covers).map_err(|e| match e {
        Error::EmptyCarrier | Error::InvalidName(_) => at_line(elements_line, e),
        other => other,
    })?;
    MeetSemilattice::from_poset(poset)
}

/// Renders a structure file listing the Hasse covers in declaration order.
pub fn render_structure(s: &MeetSemilattice) -> String {
    let mut out = String::new();
    if !s.label().is_empty() {
        out.push_str(&format!("# {}\n", s.label()));
    }
    out.push_str("elements: ");
    out.push_str(&s.names().join(" "));
    out.push_str("\ncovers:\n");
    for (lo, hi) in s.poset().cover_pairs() {
        out.push_str(&format!("{} < {}\n", s.name(lo), s.name(hi)));
    }
    out
}
