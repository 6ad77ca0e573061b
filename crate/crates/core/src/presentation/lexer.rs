use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Str(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    Comma,
    Tensor,
    Sep,
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

fn continues_line(t: &Tok) -> bool {
    matches!(t, Tok::Plus | Tok::Minus | Tok::Star | Tok::Slash | Tok::Caret | Tok::Eq | Tok::Comma | Tok::Tensor)
}

/// Splits source text into tokens. Newlines act as separators except inside
/// parentheses or after a binary operator.
pub fn lex(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out: Vec<Token> = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let mut depth = 0i32;
    let err = |line, col, msg: String| Error::Syntax { line, col, msg };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let push = |tok: Tok, out: &mut Vec<Token>| out.push(Token { tok, line: l0, col: c0 });
        match c {
            '\n' => {
                let suppressed = depth > 0 || out.last().is_some_and(|t| continues_line(&t.tok));
                if !suppressed && !out.last().is_some_and(|t| t.tok == Tok::Sep) {
                    push(Tok::Sep, &mut out);
                }
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            ' ' | '\t' | '\r' => {}
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            ';' => {
                if !out.last().is_some_and(|t| t.tok == Tok::Sep) {
                    push(Tok::Sep, &mut out);
                }
            }
            '(' if chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') => {
                push(Tok::Tensor, &mut out);
                i += 3;
                col += 3;
                continue;
            }
            '⊗' => push(Tok::Tensor, &mut out),
            '(' => {
                depth += 1;
                push(Tok::LParen, &mut out);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err(line, col, "unbalanced `)`".into()));
                }
                push(Tok::RParen, &mut out);
            }
            '+' => push(Tok::Plus, &mut out),
            '-' | '−' => push(Tok::Minus, &mut out),
            '*' | '·' => push(Tok::Star, &mut out),
            '/' => push(Tok::Slash, &mut out),
            '^' => push(Tok::Caret, &mut out),
            '=' => push(Tok::Eq, &mut out),
            ',' => push(Tok::Comma, &mut out),
            '"' => {
                let mut s = String::new();
                let mut j = i + 1;
                while j < chars.len() && chars[j] != '"' {
                    if chars[j] == '\n' {
                        return Err(err(line, col, "unterminated string".into()));
                    }
                    s.push(chars[j]);
                    j += 1;
                }
                if j == chars.len() {
                    return Err(err(line, col, "unterminated string".into()));
                }
                push(Tok::Str(s), &mut out);
                col += j + 1 - i;
                i = j + 1;
                continue;
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                push(Tok::Int(chars[i..j].iter().collect()), &mut out);
                col += j - i;
                i = j;
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_' || chars[j] == '\'') {
                    j += 1;
                }
                push(Tok::Ident(chars[i..j].iter().collect()), &mut out);
                col += j - i;
                i = j;
                continue;
            }
            other => return Err(err(line, col, format!("unexpected character `{}`", other))),
        }
        i += 1;
        col += 1;
    }
    if depth != 0 {
        return Err(err(line, col, "unbalanced `(`".into()));
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn tensor_and_newlines() {
        assert_eq!(
            toks("delta z = z (x) 1 +\n 1 (x) z\nrel z*z = 0"),
            vec![
                Tok::Ident("delta".into()),
                Tok::Ident("z".into()),
                Tok::Eq,
                Tok::Ident("z".into()),
                Tok::Tensor,
                Tok::Int("1".into()),
                Tok::Plus,
                Tok::Int("1".into()),
                Tok::Tensor,
                Tok::Ident("z".into()),
                Tok::Sep,
                Tok::Ident("rel".into()),
                Tok::Ident("z".into()),
                Tok::Star,
                Tok::Ident("z".into()),
                Tok::Eq,
                Tok::Int("0".into()),
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn positions() {
        let e = lex("gen x odd\n  $").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, col: 3, .. }));
    }
}
