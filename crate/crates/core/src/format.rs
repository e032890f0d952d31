//! Sequence-set files.
//!
//! Text form:
//!
//! ```text
//! q=2 rows=4 len=14
//! 00110001010010
//! ...
//! ```
//!
//! The header may end with ` note=<free text>`. Each data line holds exactly
//! `len` exponent digits (so `q <= 10`); for binary sets `0` is `+1` and `1` is
//! `-1`. Lines end in `\n` and carry no trailing whitespace.
//!
//! JSON form: `{"q": 2, "rows": [[0, 0, 1, ...], ...], "note": "..."}`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Alphabet, Sequence};
use crate::error::{Error, Result};
use crate::verify::ComplementarySet;

/// A parsed file: the (unverified) set plus its optional note.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFile {
    pub set: ComplementarySet,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetRecord {
    pub q: u32,
    pub rows: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SetRecord {
    pub fn from_set(set: &ComplementarySet, note: Option<&str>) -> Self {
        SetRecord {
            q: set.alphabet().q(),
            rows: set.rows().iter().map(|r| r.exponents().to_vec()).collect(),
            note: note.map(str::to_owned),
        }
    }

    pub fn into_set_file(self) -> Result<SetFile> {
        let alphabet = Alphabet::new(self.q)?;
        let rows = self
            .rows
            .into_iter()
            .map(|r| Sequence::new(alphabet, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(SetFile {
            set: ComplementarySet::new(rows)?,
            note: self.note,
        })
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Text form of a set. Fails for `q > 10`.
pub fn to_text(set: &ComplementarySet, note: Option<&str>) -> Result<String> {
    let q = set.alphabet().q();
    if q > 10 {
        return Err(Error::UnsupportedAlphabet(q));
    }
    let mut out = format!("q={q} rows={} len={}", set.size(), set.length());
    if let Some(note) = note {
        out.push_str(" note=");
        out.push_str(note.trim_end());
    }
    out.push('\n');
    for row in set.rows() {
        out.extend(
            row.exponents()
                .iter()
                .map(|&t| char::from_digit(t, 10).expect("q <= 10")),
        );
        out.push('\n');
    }
    Ok(out)
}

pub fn to_json(set: &ComplementarySet, note: Option<&str>) -> String {
    serde_json::to_string(&SetRecord::from_set(set, note)).expect("records always serialize")
}

fn header_field(line: usize, token: Option<(usize, &str)>, key: &str) -> Result<usize> {
    let (col, token) =
        token.ok_or_else(|| parse_err(line, 1, format!("missing '{key}=' field")))?;
    let value = token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| {
            parse_err(
                line,
                col,
                format!("expected '{key}=<int>', found '{token}'"),
            )
        })?;
    value.parse().map_err(|_| {
        parse_err(
            line,
            col + key.len() + 1,
            format!("'{value}' is not an integer"),
        )
    })
}

/// Splits on single spaces, reporting 1-based columns.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut col = 1;
    s.split(' ').map(move |t| {
        let out = (col, t);
        col += t.chars().count() + 1;
        out
    })
}

pub fn parse_text(text: &str) -> Result<SetFile> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or_default();
    let (fields, note) = match header.find(" note=") {
        Some(at) => (&header[..at], Some(header[at + 6..].to_owned())),
        None => (header, None),
    };
    let mut toks = tokens(fields);
    let q = header_field(1, toks.next(), "q")?;
    let rows = header_field(1, toks.next(), "rows")?;
    let len = header_field(1, toks.next(), "len")?;
    if let Some((col, extra)) = toks.next() {
        return Err(parse_err(
            1,
            col,
            format!("unexpected header field '{extra}'"),
        ));
    }
    if q == 0 || q > 10 {
        return Err(parse_err(
            1,
            1,
            format!("q={q} is outside the text format range 1..=10"),
        ));
    }
    if rows == 0 || len == 0 {
        return Err(parse_err(1, 1, "rows and len must be positive"));
    }
    let alphabet = Alphabet::new(q as u32)?;
    let mut seqs = Vec::with_capacity(rows);
    for r in 0..rows {
        let line_no = r + 2;
        let line = lines.next().ok_or_else(|| {
            parse_err(line_no, 1, format!("expected {rows} data lines, found {r}"))
        })?;
        let mut exps = Vec::with_capacity(len);
        for (i, ch) in line.chars().enumerate() {
            let t = ch.to_digit(10).filter(|&t| t < q as u32).ok_or_else(|| {
                parse_err(
                    line_no,
                    i + 1,
                    format!("'{ch}' is not an exponent for q={q}"),
                )
            })?;
            exps.push(t);
        }
        if exps.len() != len {
            return Err(parse_err(
                line_no,
                exps.len().min(len) + 1,
                format!("expected {len} symbols, found {}", exps.len()),
            ));
        }
        seqs.push(Sequence::new(alphabet, exps)?);
    }
    let rest: Vec<&str> = lines.collect();
    if let Some(extra) = rest.iter().position(|l| !l.is_empty()) {
        return Err(parse_err(
            rows + 2 + extra,
            1,
            "unexpected data after the last row",
        ));
    }
    Ok(SetFile {
        set: ComplementarySet::new(seqs)?,
        note,
    })
}

pub fn parse_json(text: &str) -> Result<SetFile> {
    let record: SetRecord =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    record.into_set_file()
}

/// Picks the JSON parser when the text starts with `{`.
pub fn parse(text: &str) -> Result<SetFile> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn read_file(path: &std::path::Path) -> Result<SetFile> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "q=2 rows=2 len=4\n0010\n0001\n";

    #[test]
    fn text_round_trip() {
        let f = parse_text(EXAMPLE).unwrap();
        assert_eq!(f.set.rows()[0].pretty(), "++-+");
        assert_eq!(to_text(&f.set, None).unwrap(), EXAMPLE);
    }

    #[test]
    fn note_is_kept() {
        let text = "q=4 rows=1 len=3 note=derived-search: length 3\n002\n";
        let f = parse_text(text).unwrap();
        assert_eq!(f.note.as_deref(), Some("derived-search: length 3"));
        assert_eq!(to_text(&f.set, f.note.as_deref()).unwrap(), text);
    }

    #[test]
    fn json_round_trip() {
        let f = parse_text(EXAMPLE).unwrap();
        let json = to_json(&f.set, Some("x"));
        assert_eq!(json, r#"{"q":2,"rows":[[0,0,1,0],[0,0,0,1]],"note":"x"}"#);
        assert_eq!(
            parse(&json).unwrap(),
            SetFile {
                note: Some("x".into()),
                ..f
            }
        );
    }

    #[test]
    fn errors_carry_positions() {
        let bad_symbol = "q=2 rows=2 len=4\n0010\n0021\n";
        assert_eq!(
            parse_text(bad_symbol),
            Err(parse_err(3, 3, "'2' is not an exponent for q=2"))
        );
        let short = "q=2 rows=2 len=4\n0010\n001\n";
        assert!(matches!(
            parse_text(short),
            Err(Error::Parse {
                line: 3,
                column: 4,
                ..
            })
        ));
        let trailing = "q=2 rows=2 len=4\n0010\n0001 \n";
        assert!(matches!(
            parse_text(trailing),
            Err(Error::Parse {
                line: 3,
                column: 5,
                ..
            })
        ));
        let missing = "q=2 rows=3 len=4\n0010\n0001\n";
        assert!(matches!(
            parse_text(missing),
            Err(Error::Parse { line: 4, .. })
        ));
        let header = "q=2 rows=x len=4\n";
        assert!(matches!(
            parse_text(header),
            Err(Error::Parse {
                line: 1,
                column: 10,
                ..
            })
        ));
        let extra = "q=2 rows=1 len=1\n0\n1\n";
        assert!(matches!(
            parse_text(extra),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn large_alphabets_have_no_text_form() {
        let s = Sequence::from_exponents(12, &[11]).unwrap();
        let set = ComplementarySet::new(vec![s]).unwrap();
        assert_eq!(to_text(&set, None), Err(Error::UnsupportedAlphabet(12)));
        let json = to_json(&set, None);
        assert_eq!(parse(&json).unwrap().set, set);
    }
}
