//! Plain-text rows: `111142113` when every box has capacity 1, and
//! `14·3·123` otherwise.

use crate::crystal::{parse_letters, Element};
use crate::error::{Error, Result};
use crate::evolution::AutomatonState;

pub const SEPARATOR: char = '·';

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Dialect {
    /// Bare digits if all capacities are 1, dotted words otherwise.
    #[default]
    Auto,
    Digits,
    Dotted,
}

impl std::str::FromStr for Dialect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Dialect::Auto),
            "digits" => Ok(Dialect::Digits),
            "dotted" => Ok(Dialect::Dotted),
            _ => Err(Error::Parse(format!("unknown dialect {s:?} (auto, digits, dotted)"))),
        }
    }
}

pub fn render_boxes(boxes: &[Element], dialect: Dialect) -> String {
    let digits = match dialect {
        Dialect::Auto => boxes.iter().all(|b| b.capacity() == 1),
        Dialect::Digits => true,
        Dialect::Dotted => false,
    };
    let words: Vec<String> = boxes.iter().map(Element::word).collect();
    if digits {
        words.concat()
    } else {
        words.join(&SEPARATOR.to_string())
    }
}

pub fn render_state(s: &AutomatonState, dialect: Dialect) -> String {
    render_boxes(s.boxes(), dialect)
}

/// Reads one row. With a separator (`·`, `⊗`, `.`, `*` or blanks) each word
/// is a box; without one every letter is a box of capacity 1.
pub fn parse_row(row: &str, rank: usize) -> Result<Vec<Element>> {
    let row = row.trim();
    let is_sep = |c: char| matches!(c, '·' | '⊗' | '.' | '*') || c.is_whitespace();
    if row.is_empty() {
        return Ok(Vec::new());
    }
    if row.chars().any(is_sep) {
        row.split(is_sep).filter(|w| !w.is_empty()).map(|w| Element::from_word(w, rank)).collect()
    } else {
        parse_letters(row)?.into_iter().map(|l| Element::from_letters([l], rank)).collect()
    }
}

pub fn parse_state(row: &str, rank: usize, window_start: i64, default_capacity: u32) -> Result<AutomatonState> {
    AutomatonState::new(rank, window_start, parse_row(row, rank)?, default_capacity)
}
