//! Text formats: sequences are comma-separated symbols (`1,2,0`, empty for
//! the empty sequence), profiles and stream tuples separate their parts with
//! semicolons (`0,1;1,2`).

use std::fmt;

use colorkit::Sequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// What was being parsed, e.g. `--x`.
    pub field: String,
    pub token: String,
    /// Byte offset of the token within the field.
    pub offset: usize,
    /// Index of the offending entry in its list.
    pub entry: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: invalid symbol {:?} at entry {} (offset {})",
            self.field, self.token, self.entry, self.offset
        )
    }
}

impl std::error::Error for ParseError {}

/// Parses `s` (starting at byte `base` of the full field) as a sequence.
fn symbols_at(field: &str, s: &str, base: usize) -> Result<Vec<u32>, ParseError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = base;
    for (entry, raw) in s.split(',').enumerate() {
        let token = raw.trim();
        match token.parse::<u32>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(ParseError {
                    field: field.to_string(),
                    token: token.to_string(),
                    offset: offset + (raw.len() - raw.trim_start().len()),
                    entry,
                })
            }
        }
        offset += raw.len() + 1;
    }
    Ok(out)
}

pub fn sequence(field: &str, s: &str) -> Result<Sequence, ParseError> {
    symbols_at(field, s, 0).map(Sequence::from)
}

/// Semicolon-separated lists of symbols; an empty part is an empty list.
pub fn lists(field: &str, s: &str) -> Result<Vec<Vec<u32>>, ParseError> {
    let mut out = Vec::new();
    let mut base = 0;
    for part in s.split(';') {
        out.push(symbols_at(field, part, base)?);
        base += part.len() + 1;
    }
    Ok(out)
}

/// One stream per line. A single trailing newline is ignored, so a file of
/// `t` lines gives `t` streams.
pub fn stream_file(field: &str, contents: &str) -> Result<Vec<Sequence>, ParseError> {
    let body = contents.strip_suffix('\n').unwrap_or(contents);
    let mut out = Vec::new();
    let mut base = 0;
    for line in body.split('\n') {
        let line = line.strip_suffix('\r').unwrap_or(line);
        out.push(Sequence::from(symbols_at(field, line, base)?));
        base += line.len() + 1;
    }
    Ok(out)
}
