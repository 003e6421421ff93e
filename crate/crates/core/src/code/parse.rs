//! Text grammar for codes.
//!
//! ```text
//! n=4
//! {};{1};{1,2}
//! 123
//! ```
//!
//! An optional `n=<int>` header comes first. Codewords are written in brace
//! form (`{}`, `{3}`, `{1,2,10}`) or, when every index is at most 9, as a
//! compact digit string (`12`). Codewords are separated by `;` or newlines.

use super::codeword::{check_n, Code, MAX_NEURONS};
use crate::error::{Error, Result};

fn parse_index(tok: &str) -> Result<usize> {
    let i: usize = tok
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad neuron index {tok:?}")))?;
    if i == 0 || i > MAX_NEURONS {
        return Err(Error::NeuronIndex {
            index: i,
            max: MAX_NEURONS,
        });
    }
    Ok(i)
}

enum Token {
    Brace(Vec<usize>),
    Compact(Vec<usize>),
}

fn parse_token(tok: &str) -> Result<Token> {
    if let Some(inner) = tok.strip_prefix('{') {
        let inner = inner
            .strip_suffix('}')
            .ok_or_else(|| Error::Parse(format!("unterminated codeword {tok:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Token::Brace(Vec::new()));
        }
        let idx = inner
            .split(',')
            .map(parse_index)
            .collect::<Result<Vec<_>>>()?;
        return Ok(Token::Brace(idx));
    }
    if !tok.chars().all(|ch| ch.is_ascii_digit()) {
        return Err(Error::Parse(format!("unexpected token {tok:?}")));
    }
    let idx = tok
        .chars()
        .map(|ch| match ch.to_digit(10).unwrap() as usize {
            0 => Err(Error::NeuronIndex {
                index: 0,
                max: MAX_NEURONS,
            }),
            d => Ok(d),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Token::Compact(idx))
}

/// Parses a code from text. Without an `n=` header the neuron count is the
/// largest index mentioned (at least 1).
pub fn parse_code(text: &str) -> Result<Code> {
    let mut header: Option<usize> = None;
    let mut tokens = Vec::new();
    for (k, raw) in text.split([';', '\n']).enumerate() {
        let tok: String = raw.chars().filter(|ch| !ch.is_whitespace()).collect();
        if tok.is_empty() {
            continue;
        }
        if let Some(v) = tok.strip_prefix("n=") {
            if header.is_some() || !tokens.is_empty() {
                return Err(Error::Parse(format!(
                    "header must come first (item {})",
                    k + 1
                )));
            }
            let n: usize = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad header {tok:?}")))?;
            check_n(n)?;
            header = Some(n);
            continue;
        }
        tokens.push(parse_token(&tok)?);
    }
    if tokens.is_empty() {
        return Err(Error::EmptyCode);
    }

    let max_seen = tokens
        .iter()
        .flat_map(|t| match t {
            Token::Brace(v) | Token::Compact(v) => v.iter().copied(),
        })
        .max()
        .unwrap_or(0);
    let n = match header {
        Some(n) => {
            if max_seen > n {
                return Err(Error::NeuronIndex {
                    index: max_seen,
                    max: n,
                });
            }
            n
        }
        None => max_seen.max(1),
    };
    if n > 9 && tokens.iter().any(|t| matches!(t, Token::Compact(_))) {
        return Err(Error::Parse("compact digit codewords need n <= 9".into()));
    }
    let lists = tokens.into_iter().map(|t| match t {
        Token::Brace(v) | Token::Compact(v) => v,
    });
    Code::from_lists(n, lists)
}
