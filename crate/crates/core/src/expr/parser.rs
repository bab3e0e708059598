//! Recursive descent over the token stream.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | power
//! power  := atom ("^" factor)?
//! atom   := NUMBER | "u" | FN "(" expr ")" | "(" expr ")"
//! ```

use super::lexer::{Token, TokenKind};
use super::{BinOp, Expr, Func, ParseError};

pub fn parse_tokens(tokens: &[Token], src_len: usize) -> Result<Expr, ParseError> {
    let mut p = Parser {
        tokens,
        pos: 0,
        src_len,
    };
    let e = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(ParseError {
            offset: tok.offset,
            expected: "an operator or end of input".into(),
            found: tok.kind.describe(),
        });
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    src_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn error(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(tok) => ParseError {
                offset: tok.offset,
                expected: expected.into(),
                found: tok.kind.describe(),
            },
            None => ParseError {
                offset: self.src_len,
                expected: expected.into(),
                found: "end of input".into(),
            },
        }
    }

    fn expect(&mut self, kind: &TokenKind, expected: &str) -> Result<(), ParseError> {
        if self.peek_kind() == Some(kind) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek_kind() {
                Some(TokenKind::Plus) => BinOp::Add,
                Some(TokenKind::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek_kind() {
                Some(TokenKind::Star) => BinOp::Mul,
                Some(TokenKind::Slash) => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek_kind() == Some(&TokenKind::Minus) {
            self.pos += 1;
            let inner = self.factor()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek_kind() == Some(&TokenKind::Caret) {
            self.pos += 1;
            let exponent = self.factor()?;
            return Ok(Expr::binary(BinOp::Pow, base, exponent));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("an expression"));
        };
        match tok.kind {
            TokenKind::Number(x) => {
                self.pos += 1;
                Ok(Expr::Number(x))
            }
            TokenKind::Ident(ref name) if name == "u" => {
                self.pos += 1;
                Ok(Expr::Var)
            }
            TokenKind::Ident(ref name) => {
                let Some(func) = Func::from_name(name) else {
                    return Err(ParseError {
                        offset: tok.offset,
                        expected: format!("`u` or one of {}", Func::whitelist()),
                        found: tok.kind.describe(),
                    });
                };
                self.pos += 1;
                self.expect(&TokenKind::LParen, "`(` after function name")?;
                if self.peek_kind() == Some(&TokenKind::RParen) {
                    return Err(self.error(&format!("exactly one argument to {}", func.name())));
                }
                let arg = self.expr()?;
                if self.peek_kind() == Some(&TokenKind::Comma) {
                    return Err(self.error(&format!("`)`: {} takes exactly one argument", func.name())));
                }
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error("an expression")),
        }
    }
}
