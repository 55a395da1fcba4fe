use crate::error::ExprError;

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    /// `*` with whitespace or an operator before it: product.
    Times,
    /// `*` glued to the preceding operand: involution.
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub pos: usize,
}

fn ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub fn lex(src: &str) -> Result<Vec<Token>, ExprError> {
    let mut out: Vec<Token> = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < src.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let glued = i > 0 && !(bytes[i - 1] as char).is_whitespace();
        let t = match c {
            '0'..='9' => {
                let j = src[i..].find(|c: char| !c.is_ascii_digit()).map_or(src.len(), |n| i + n);
                let t = Tok::Int(src[i..j].to_string());
                out.push(Token { tok: t, pos: i });
                i = j;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i;
                while j < src.len() && ident_char(bytes[j] as char) {
                    j += 1;
                }
                // the sphere generator x-1
                if &src[i..j] == "x" && src[j..].starts_with("-1") && !src[j + 2..].starts_with(|c: char| c.is_ascii_digit()) {
                    j += 2;
                }
                out.push(Token { tok: Tok::Ident(src[i..j].to_string()), pos: i });
                i = j;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => {
                let after_operand = glued
                    && out.last().is_some_and(|t| matches!(t.tok, Tok::Ident(_) | Tok::Int(_) | Tok::RParen | Tok::Star));
                if after_operand {
                    Tok::Star
                } else {
                    Tok::Times
                }
            }
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ch => return Err(ExprError::Lex { pos: i, ch }),
        };
        out.push(Token { tok: t, pos: i });
        i += 1;
    }
    Ok(out)
}
