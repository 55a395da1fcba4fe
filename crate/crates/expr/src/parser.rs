//! expr   = term (('+' | '-') term)*
//! term   = unary (('*' | '/' | <juxtaposition>) unary)*
//! unary  = '-' unary | power
//! power  = post ('^' '-'? int)?
//! post   = atom '*'*            (a '*' glued to its operand)
//! atom   = int | ident | 'sqrt' '(' expr ')' | '(' expr ')'

use qiso_scalars::{BigInt, BigRational};

use crate::ast::Expr;
use crate::error::ExprError;
use crate::lexer::{lex, Tok, Token};

struct Parser {
    toks: Vec<Token>,
    i: usize,
    end: usize,
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0, end: src.len() };
    if p.toks.is_empty() {
        return Err(ExprError::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(ExprError::Syntax { pos: t.pos, msg: format!("unexpected {:?}", t.tok) });
    }
    Ok(e)
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.i)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek().is_some_and(|x| &x.tok == t) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek().map(|t| &t.tok), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.unary()?;
        loop {
            if self.eat(&Tok::Times) {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.peek().is_some_and(|t| t.tok == Tok::Slash) {
                let pos = self.pos();
                self.i += 1;
                e = Expr::Div(Box::new(e), Box::new(self.unary()?), pos);
            } else if self.starts_atom() {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.post()?;
        let pos = self.pos();
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let neg = self.eat(&Tok::Minus);
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Int(s)) => {
                self.i += 1;
                let k: i64 = s.parse().map_err(|_| ExprError::Syntax { pos, msg: "exponent too large".into() })?;
                Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }, pos))
            }
            _ => Err(ExprError::Syntax { pos: self.pos(), msg: "expected an integer exponent".into() }),
        }
    }

    fn post(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.atom()?;
        while self.eat(&Tok::Star) {
            e = Expr::Star(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        let Some(t) = self.peek().cloned() else {
            return Err(ExprError::Syntax { pos, msg: "unexpected end of input".into() });
        };
        self.i += 1;
        match t.tok {
            Tok::Int(s) => {
                let n: BigInt = s.parse().expect("lexer yields digits");
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Tok::Ident(name) if name == "sqrt" && self.peek().is_some_and(|t| t.tok == Tok::LParen) => {
                self.i += 1;
                let e = self.expr()?;
                self.close(pos)?;
                Ok(Expr::Sqrt(Box::new(e), pos))
            }
            Tok::Ident(name) => Ok(Expr::Ident { name, pos }),
            Tok::LParen => {
                let e = self.expr()?;
                self.close(pos)?;
                Ok(e)
            }
            other => Err(ExprError::Syntax { pos, msg: format!("unexpected {other:?}") }),
        }
    }

    fn close(&mut self, open: usize) -> Result<(), ExprError> {
        if self.eat(&Tok::RParen) {
            Ok(())
        } else {
            Err(ExprError::Syntax { pos: self.pos(), msg: format!("unclosed parenthesis opened at {open}") })
        }
    }
}
