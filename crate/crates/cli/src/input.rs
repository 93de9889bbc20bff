//! The tangency-data file format.
//!
//! Line oriented; `#` starts a comment running to the end of the line and
//! blank lines are ignored. The first significant line must be `genus <g>`.
//! Every following significant line is one word, one of:
//!
//! - whitespace-separated tokens `x<digits>` or `x<digits>^-1`,
//! - a single contiguous run of ASCII letters where `a`..`z` mean
//!   `x1`..`x26` and `A`..`Z` their inverses,
//! - the literal `1`, an empty word recording an inessential curve.
//!
//! Mixing token and compact spellings inside one word is rejected.

use tcurve_core::{Letter, TangencySet, Word};

/// A parsed input file, validated against its own genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    /// Where the text came from, for error messages and reports.
    pub source: String,
    pub genus: usize,
    /// The word lines as written (comments stripped, trimmed).
    pub word_lines: Vec<String>,
    pub words: Vec<Word>,
}

impl InputDocument {
    /// The validated tangency set; cannot fail after parsing.
    pub fn to_set(&self) -> TangencySet {
        TangencySet::new(self.genus, self.words.clone()).expect("parsing validated every index")
    }

    /// Canonical text form: token spelling, one word per line. Parsing the
    /// result reproduces this document up to the original spellings.
    pub fn render(&self) -> String {
        let mut out = format!("genus {}\n", self.genus);
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected `genus <g>` as the first significant line")]
    MissingGenus,
    #[error("malformed word token `{0}`")]
    MalformedWord(String),
    #[error("generator index {index} out of range for genus {genus}")]
    IndexOutOfRange { index: usize, genus: usize },
}

/// A parse failure, positioned at a 1-based line of the source.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{source_name}:{line}: {kind}")]
pub struct ParseError {
    pub source_name: String,
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Parses a whole document.
pub fn parse(text: &str, source_name: &str) -> Result<InputDocument, ParseError> {
    let err = |line, kind| ParseError {
        source_name: source_name.into(),
        line,
        kind,
    };
    let mut genus: Option<usize> = None;
    let mut word_lines = Vec::new();
    let mut words = Vec::new();
    let mut last_line = 0;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match genus {
            None => {
                let mut parts = content.split_whitespace();
                let ok = parts.next() == Some("genus");
                let g = parts.next().and_then(|t| t.parse::<usize>().ok());
                match (ok, g, parts.next()) {
                    (true, Some(g), None) => genus = Some(g),
                    _ => return Err(err(line_no, ParseErrorKind::MissingGenus)),
                }
            }
            Some(g) => {
                let word = parse_word_line(content).map_err(|kind| err(line_no, kind))?;
                for &l in word.letters() {
                    if l.index() > g {
                        return Err(err(
                            line_no,
                            ParseErrorKind::IndexOutOfRange {
                                index: l.index(),
                                genus: g,
                            },
                        ));
                    }
                }
                word_lines.push(content.to_string());
                words.push(word);
            }
        }
    }
    let genus = genus.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingGenus))?;
    Ok(InputDocument {
        source: source_name.into(),
        genus,
        word_lines,
        words,
    })
}

/// One word line, already trimmed and nonempty.
fn parse_word_line(content: &str) -> Result<Word, ParseErrorKind> {
    if content == "1" {
        return Ok(Word::empty());
    }
    let pieces: Vec<&str> = content.split_whitespace().collect();
    if pieces.len() == 1 {
        let piece = pieces[0];
        if let Some(letter) = parse_token(piece) {
            return letter_checked(letter, piece).map(|l| Word::from_letters(vec![l]));
        }
        if piece.bytes().all(|b| b.is_ascii_alphabetic()) {
            return parse_compact(piece);
        }
        return Err(ParseErrorKind::MalformedWord(piece.to_string()));
    }
    let mut letters = Vec::with_capacity(pieces.len());
    for piece in pieces {
        let letter =
            parse_token(piece).ok_or_else(|| ParseErrorKind::MalformedWord(piece.to_string()))?;
        letters.push(letter_checked(letter, piece)?);
    }
    Ok(Word::from_letters(letters))
}

/// `x<digits>` or `x<digits>^-1`; returns the index and sign without range
/// checking. `None` when the shape does not match.
fn parse_token(piece: &str) -> Option<(usize, bool)> {
    let rest = piece.strip_prefix('x')?;
    let (digits, positive) = match rest.strip_suffix("^-1") {
        Some(d) => (d, false),
        None => (rest, true),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: usize = digits.parse().ok()?;
    Some((index, positive))
}

fn letter_checked((index, positive): (usize, bool), piece: &str) -> Result<Letter, ParseErrorKind> {
    if index == 0 {
        // `x0` fits the token shape but names nothing.
        return Err(ParseErrorKind::MalformedWord(piece.to_string()));
    }
    Ok(if positive {
        Letter::positive(index)
    } else {
        Letter::negative(index)
    })
}

fn parse_compact(piece: &str) -> Result<Word, ParseErrorKind> {
    let letters = piece
        .bytes()
        .map(|b| {
            if b.is_ascii_lowercase() {
                Letter::positive((b - b'a') as usize + 1)
            } else {
                Letter::negative((b - b'A') as usize + 1)
            }
        })
        .collect();
    Ok(Word::from_letters(letters))
}
