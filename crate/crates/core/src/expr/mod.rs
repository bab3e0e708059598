//! Scalar expressions in one variable `u`.
//!
//! Curve components are written as plain text such as
//! `u*cosh(u) - sinh(u)` and evaluated to jets of any order.
//!
//! Precedence, loosest first: `+ -`, then `* /`, then unary minus, then `^`
//! (right associative). Unary minus therefore applies to a whole power:
//! `-u^2` is `-(u^2)`, while `(-u)^2` needs the parentheses. There is no
//! implicit multiplication; `2u` is rejected.
//!
//! Functions: `sin cos sinh cosh tanh exp ln sqrt abs`, each with exactly
//! one argument.

use std::fmt;

use thiserror::Error;

use crate::jet::{Jet, JetError, ScaledJet};
use crate::tolerance::ToleranceSpec;

mod lexer;
mod parser;

pub use lexer::{tokenize, Token, TokenKind};

#[derive(Debug, Clone, PartialEq, Error)]
#[error("parse error at byte {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("cannot evaluate `{path}` at u = {u}: {source}")]
pub struct EvalError {
    /// The innermost subexpression whose evaluation failed.
    pub path: String,
    pub u: f64,
    #[source]
    pub source: JetError,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    const ALL: [Func; 9] = [
        Func::Sin,
        Func::Cos,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    fn whitelist() -> String {
        Func::ALL.map(Func::name).join(", ")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(f64),
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Tokenizes and parses `src`.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(src)?;
    parser::parse_tokens(&tokens, src.len())
}

impl std::str::FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl Expr {
    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Binary(BinOp::Pow, ..) => 4,
            Expr::Number(x) if *x < 0.0 => 3,
            Expr::Number(_) | Expr::Var | Expr::Call(..) => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Number(x) => write!(f, "{x}"),
            Expr::Var => write!(f, "u"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_at(f, 3)
            }
            Expr::Call(func, arg) => {
                write!(f, "{}(", func.name())?;
                arg.fmt_at(f, 0)?;
                write!(f, ")")
            }
            Expr::Binary(op, l, r) => {
                let (lp, rp) = match op {
                    BinOp::Add | BinOp::Sub => (1, 2),
                    BinOp::Mul | BinOp::Div => (2, 3),
                    BinOp::Pow => (5, 3),
                };
                l.fmt_at(f, lp)?;
                if *op == BinOp::Pow {
                    write!(f, "^")?;
                } else {
                    write!(f, " {} ", op.symbol())?;
                }
                r.fmt_at(f, rp)
            }
        }
    }

    /// Plain floating-point evaluation.
    pub fn eval(&self, u: f64) -> Result<f64, EvalError> {
        let fail = |e: &Expr, source| EvalError {
            path: e.to_string(),
            u,
            source,
        };
        Ok(match self {
            Expr::Number(x) => *x,
            Expr::Var => u,
            Expr::Neg(e) => -e.eval(u)?,
            Expr::Call(func, arg) => {
                let x = arg.eval(u)?;
                match func {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Sinh => x.sinh(),
                    Func::Cosh => x.cosh(),
                    Func::Tanh => x.tanh(),
                    Func::Exp => x.exp(),
                    Func::Ln if x <= 0.0 => return Err(fail(self, JetError::Domain { op: "ln", value: x })),
                    Func::Ln => x.ln(),
                    Func::Sqrt if x < 0.0 => return Err(fail(self, JetError::Domain { op: "sqrt", value: x })),
                    Func::Sqrt => x.sqrt(),
                    Func::Abs => x.abs(),
                }
            }
            Expr::Binary(op, l, r) => {
                let a = l.eval(u)?;
                let b = r.eval(u)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div if b == 0.0 => return Err(fail(self, JetError::DivisionBySingularJet { lead: b })),
                    BinOp::Div => a / b,
                    BinOp::Pow if b.fract() == 0.0 => a.powi(b as i32),
                    BinOp::Pow if a <= 0.0 => {
                        return Err(fail(
                            self,
                            JetError::Domain {
                                op: "pow with non-integer exponent",
                                value: a,
                            },
                        ))
                    }
                    BinOp::Pow => a.powf(b),
                }
            }
        })
    }

    /// Jet of the denoted function at `u0`.
    pub fn eval_jet(&self, u0: f64, order: usize) -> Result<Jet, EvalError> {
        Ok(self.eval_scaled(u0, order, &ToleranceSpec::default())?.value)
    }

    /// Jet together with the summand-magnitude bound used by zero tests.
    pub fn eval_scaled(&self, u0: f64, order: usize, tol: &ToleranceSpec) -> Result<ScaledJet, EvalError> {
        let wrap = |e: &Expr, r: Result<ScaledJet, JetError>| {
            r.map_err(|source| EvalError {
                path: e.to_string(),
                u: u0,
                source,
            })
        };
        match self {
            Expr::Number(x) => Ok(ScaledJet::constant(*x, order)),
            Expr::Var => {
                if order == 0 {
                    Ok(ScaledJet::constant(u0, 0))
                } else {
                    Ok(ScaledJet::variable(u0, order))
                }
            }
            Expr::Neg(e) => Ok(-e.eval_scaled(u0, order, tol)?),
            Expr::Call(func, arg) => {
                let x = arg.eval_scaled(u0, order, tol)?;
                let r = match func {
                    Func::Sin => Ok(x.sin()),
                    Func::Cos => Ok(x.cos()),
                    Func::Sinh => Ok(x.sinh()),
                    Func::Cosh => Ok(x.cosh()),
                    Func::Tanh => Ok(x.tanh()),
                    Func::Exp => Ok(x.exp()),
                    Func::Ln => x.ln(),
                    Func::Sqrt => x.sqrt(),
                    Func::Abs => x.abs(tol),
                };
                wrap(self, r)
            }
            Expr::Binary(op, l, r) => {
                let a = l.eval_scaled(u0, order, tol)?;
                let b = r.eval_scaled(u0, order, tol)?;
                match op {
                    BinOp::Add => Ok(&a + &b),
                    BinOp::Sub => Ok(&a - &b),
                    BinOp::Mul => Ok(&a * &b),
                    BinOp::Div => wrap(self, a.try_div_with(&b, tol)),
                    BinOp::Pow => wrap(self, a.pow_jet(&b)),
                }
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(s: &str) -> Expr {
        parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    fn num(x: f64) -> Expr {
        Expr::Number(x)
    }

    #[test]
    fn precedence_shapes() {
        assert_eq!(
            p("u^3/3"),
            Expr::binary(BinOp::Div, Expr::binary(BinOp::Pow, Expr::Var, num(3.0)), num(3.0))
        );
        assert_eq!(
            p("-u^2"),
            Expr::Neg(Box::new(Expr::binary(BinOp::Pow, Expr::Var, num(2.0))))
        );
        assert_eq!(
            p("2^-1"),
            Expr::binary(BinOp::Pow, num(2.0), Expr::Neg(Box::new(num(1.0))))
        );
        assert_eq!(p("2+3*4").eval(0.0).unwrap(), 14.0);
        assert_eq!(p("2^3^2").eval(0.0).unwrap(), 512.0);
        assert_eq!(p("8/4/2").eval(0.0).unwrap(), 1.0);
        assert_eq!(p("1-2-3").eval(0.0).unwrap(), -4.0);
        assert_eq!(p("-u^2").eval(3.0).unwrap(), -9.0);
        assert_eq!(p("(-u)^2").eval(3.0).unwrap(), 9.0);
        assert_eq!(p("2*-u").eval(3.0).unwrap(), -6.0);
    }

    #[test]
    fn parse_errors() {
        let arity = parse("sin()").unwrap_err();
        assert_eq!(arity.offset, 4);
        assert!(arity.expected.contains("one argument"));
        assert!(parse("sin(u, u)").unwrap_err().expected.contains("one argument"));
        assert_eq!(parse("(u").unwrap_err().found, "end of input");
        assert_eq!(parse("u)").unwrap_err().offset, 1);
        let unknown = parse("foo(u)").unwrap_err();
        assert_eq!(unknown.offset, 0);
        assert!(unknown.expected.contains("sqrt"));
        assert!(parse("x + 1").is_err());
        assert!(parse("2u").is_err());
        assert!(parse("sin u").is_err());
        assert!(parse("").is_err());
        assert!(parse("u +").is_err());
        assert!(parse("u;").is_err());
    }

    #[test]
    fn jet_evaluation() {
        let x2 = p("u*sinh(u) - cosh(u) + 1").eval_jet(0.0, 6).unwrap();
        assert_eq!(x2.derivative(0), 0.0);
        assert_eq!(x2.derivative(1), 0.0);
        assert_relative_eq!(x2.derivative(2), 1.0, max_relative = 1e-15);

        assert_eq!(p("u").eval_jet(7.0, 6).unwrap(), Jet::variable(7.0, 6));

        let beta = p("u*sqrt(1-u^2)").eval_jet(0.0, 6).unwrap();
        assert_relative_eq!(beta.derivative(1), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn order_zero_matches_plain_eval() {
        for s in [
            "u*cosh(u) - sinh(u)",
            "u/sqrt(1-u^2)",
            "exp(-u^2)*tanh(u)",
            "abs(u - 3)^1.5",
            "ln(2 + sin(u))",
        ] {
            let e = p(s);
            for u in [-0.7, 0.1, 0.55] {
                let plain = e.eval(u).unwrap();
                let jet = e.eval_jet(u, 0).unwrap().value();
                assert!((plain - jet).abs() <= 1e-15 * plain.abs().max(1.0), "{s} at {u}");
            }
        }
    }

    #[test]
    fn evaluation_errors_carry_path() {
        let err = p("1 + sqrt(u - 2)").eval_jet(0.0, 3).unwrap_err();
        assert_eq!(err.path, "sqrt(u - 2)");
        assert!(matches!(err.source, JetError::Domain { op: "sqrt", .. }));

        let err = p("u / sinh(u)").eval_jet(0.0, 3).unwrap_err();
        assert!(matches!(err.source, JetError::DivisionBySingularJet { .. }));

        assert!(p("abs(u)").eval_jet(0.0, 2).is_err());
        assert!(p("abs(u)").eval_jet(-0.5, 2).is_ok());
        assert!(p("u^0.5").eval_jet(-1.0, 2).is_err());
        assert!(p("u^3").eval_jet(-1.0, 2).is_ok());
        assert!(p("u^u").eval_jet(2.0, 3).is_ok());
    }

    #[test]
    fn display_round_trip() {
        let corpus = [
            "u",
            "-u^2",
            "(-u)^2",
            "2^3^2",
            "(2^3)^2",
            "1 - (2 - 3)",
            "1 - 2 - 3",
            "a",
        ];
        for s in corpus.iter().filter(|s| **s != "a") {
            let e = p(s);
            let printed = e.to_string();
            assert_eq!(p(&printed), e, "{s} -> {printed}");
        }
        assert_eq!(p("-u^2").to_string(), "-u^2");
        assert_eq!(p("(-u)^2").to_string(), "(-u)^2");
        assert_eq!(p("u*(1+u)").to_string(), "u * (1 + u)");
    }
}
