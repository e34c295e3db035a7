//! Scalar and linear-combination expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'alpha' | name | '(' expr ')'
//! ```
//!
//! `alpha` is the formal parameter and is only legal over `Q(alpha)`.
//! Names resolve to basis vectors; scalars and vectors mix linearly.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::field::{FieldElement, FieldKind};

use super::ParseError;

/// A parsed value: scalar or coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(FieldElement),
    Vector(Vec<FieldElement>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

struct Lexed {
    tok: Tok,
    col: usize,
}

/// Context for evaluating expressions.
pub struct ExprContext<'a> {
    pub kind: FieldKind,
    pub basis: &'a [String],
    pub line: usize,
    /// Column of the first character of the expression text, 1-based.
    pub column: usize,
}

impl<'a> ExprContext<'a> {
    pub fn scalars(kind: FieldKind) -> Self {
        ExprContext {
            kind,
            basis: &[],
            line: 1,
            column: 1,
        }
    }

    fn err(&self, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column + col,
            message: msg.into(),
        }
    }

    /// Evaluate `text` to a value.
    pub fn eval(&self, text: &str) -> Result<Value, ParseError> {
        let toks = self.lex(text)?;
        let mut p = Parser {
            ctx: self,
            toks,
            pos: 0,
            end_col: text.len(),
        };
        if p.toks.is_empty() {
            return Err(self.err(0, "empty expression"));
        }
        let v = p.expr()?;
        if let Some(t) = p.toks.get(p.pos) {
            return Err(self.err(t.col, format!("unexpected token {}", show(&t.tok))));
        }
        Ok(v)
    }

    pub fn scalar(&self, text: &str) -> Result<FieldElement, ParseError> {
        match self.eval(text)? {
            Value::Scalar(s) => Ok(s),
            Value::Vector(_) => Err(self.err(0, "expected a scalar, found a basis combination")),
        }
    }

    /// A coordinate vector; the scalar `0` is accepted as the zero vector.
    pub fn vector(&self, text: &str) -> Result<Vec<FieldElement>, ParseError> {
        match self.eval(text)? {
            Value::Vector(v) => Ok(v),
            Value::Scalar(s) if s.is_zero() => Ok(vec![FieldElement::zero(self.kind); self.basis.len()]),
            Value::Scalar(_) => Err(self.err(0, "expected a linear combination of basis names")),
        }
    }

    fn lex(&self, text: &str) -> Result<Vec<Lexed>, ParseError> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (col, c) = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push(Lexed {
                    tok: Tok::Num(s.parse().expect("digits")),
                    col,
                });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'') {
                    i += 1;
                }
                out.push(Lexed {
                    tok: Tok::Ident(chars[start..i].iter().map(|&(_, c)| c).collect()),
                    col,
                });
            } else if "+-*/^()".contains(c) {
                out.push(Lexed { tok: Tok::Op(c), col });
                i += 1;
            } else {
                return Err(self.err(col, format!("unexpected character `{c}`")));
            }
        }
        Ok(out)
    }
}

fn show(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Op(c) => format!("`{c}`"),
    }
}

struct Parser<'c, 'a> {
    ctx: &'c ExprContext<'a>,
    toks: Vec<Lexed>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_, '_> {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Lexed { tok: Tok::Op(c), .. }) => Some(*c),
            _ => None,
        }
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            let col = self.col();
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.combine(acc, rhs, op, col)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            let col = self.col();
            self.pos += 1;
            let rhs = self.unary()?;
            acc = self.combine(acc, rhs, op, col)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(negate(self.unary()?))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        let col = self.col();
        self.pos += 1;
        let negative = if self.peek_op() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let exp = match self.toks.get(self.pos) {
            Some(Lexed { tok: Tok::Num(n), .. }) => u32::try_from(n.clone())
                .map_err(|_| self.ctx.err(col, "exponent too large"))?,
            _ => return Err(self.ctx.err(self.col(), "expected an integer exponent")),
        };
        self.pos += 1;
        let Value::Scalar(s) = base else {
            return Err(self.ctx.err(col, "cannot raise a basis combination to a power"));
        };
        let p = s.pow(exp);
        if negative {
            p.inv()
                .map(Value::Scalar)
                .ok_or_else(|| self.ctx.err(col, "division by zero"))
        } else {
            Ok(Value::Scalar(p))
        }
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let col = self.col();
        let Some(t) = self.toks.get(self.pos) else {
            return Err(self.ctx.err(col, "unexpected end of expression"));
        };
        let kind = self.ctx.kind;
        let v = match &t.tok {
            Tok::Num(n) => Value::Scalar(FieldElement::from_rational(kind, BigRational::from_integer(n.clone()))),
            Tok::Ident(name) if name == "alpha" => {
                if kind != FieldKind::RationalFunction {
                    return Err(self.ctx.err(col, "`alpha` is only available over Q(alpha)"));
                }
                Value::Scalar(FieldElement::alpha())
            }
            Tok::Ident(name) => {
                let Some(i) = self.ctx.basis.iter().position(|b| b == name) else {
                    return Err(self.ctx.err(col, format!("unknown basis name `{name}`")));
                };
                let mut v = vec![FieldElement::zero(kind); self.ctx.basis.len()];
                v[i] = FieldElement::one(kind);
                Value::Vector(v)
            }
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.ctx.err(self.col(), "expected `)`"));
                }
                self.pos += 1;
                return Ok(inner);
            }
            other => return Err(self.ctx.err(col, format!("unexpected token {}", show(other)))),
        };
        self.pos += 1;
        Ok(v)
    }

    fn combine(&self, a: Value, b: Value, op: char, col: usize) -> Result<Value, ParseError> {
        use Value::*;
        let err = |m: &str| self.ctx.err(col, m);
        Ok(match (op, a, b) {
            ('+', Scalar(x), Scalar(y)) => Scalar(x + y),
            ('-', Scalar(x), Scalar(y)) => Scalar(x - y),
            ('+', Vector(x), Vector(y)) => Vector(x.iter().zip(&y).map(|(p, q)| p + q).collect()),
            ('-', Vector(x), Vector(y)) => Vector(x.iter().zip(&y).map(|(p, q)| p - q).collect()),
            // a zero scalar is also the zero vector
            ('+' | '-', Vector(x), Scalar(s)) if s.is_zero() => Vector(x),
            ('+', Scalar(s), Vector(y)) if s.is_zero() => Vector(y),
            ('-', Scalar(s), Vector(y)) if s.is_zero() => Vector(y.iter().map(|q| -q).collect()),
            ('+' | '-', _, _) => return Err(err("cannot add a scalar to a basis combination")),
            ('*', Scalar(x), Scalar(y)) => Scalar(x * y),
            ('*', Scalar(s), Vector(v)) | ('*', Vector(v), Scalar(s)) => {
                Vector(v.iter().map(|q| &s * q).collect())
            }
            ('*', Vector(_), Vector(_)) => return Err(err("cannot multiply two basis combinations")),
            ('/', a, Scalar(s)) => {
                let inv = s.inv().ok_or_else(|| err("division by zero"))?;
                match a {
                    Scalar(x) => Scalar(x * inv),
                    Vector(v) => Vector(v.iter().map(|q| q * &inv).collect()),
                }
            }
            ('/', _, Vector(_)) => return Err(err("cannot divide by a basis combination")),
            _ => unreachable!("operator set is closed"),
        })
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(s) => Value::Scalar(-s),
        Value::Vector(v) => Value::Vector(v.iter().map(|q| -q).collect()),
    }
}

/// Parse a scalar literal such as `3`, `-1/2` or `(alpha+1)/2`.
pub fn parse_scalar(text: &str, kind: FieldKind) -> Result<FieldElement, ParseError> {
    ExprContext::scalars(kind).scalar(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const QA: FieldKind = FieldKind::RationalFunction;

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("2/4", FieldKind::Rational).unwrap().to_string(), "1/2");
        assert_eq!(parse_scalar("-1/-3", FieldKind::Rational).unwrap().to_string(), "1/3");
        assert_eq!(parse_scalar("(alpha+1)/2", QA).unwrap().to_string(), "1/2*alpha + 1/2");
        assert_eq!(parse_scalar("(alpha^2-1)/(alpha-1)", QA).unwrap().to_string(), "alpha + 1");
        assert_eq!(parse_scalar("alpha^-1", QA).unwrap().to_string(), "1/(alpha)");
    }

    #[test]
    fn alpha_rejected_over_q() {
        let e = parse_scalar("alpha", FieldKind::Rational).unwrap_err();
        assert!(e.to_string().contains("Q(alpha)"));
    }

    #[test]
    fn division_by_zero() {
        assert!(parse_scalar("1/(alpha-alpha)", QA).is_err());
    }

    #[test]
    fn linear_combinations() {
        let basis: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let ctx = ExprContext {
            kind: QA,
            basis: &basis,
            line: 3,
            column: 7,
        };
        let v = ctx.vector("z + alpha*x").unwrap();
        assert_eq!(v[0], FieldElement::alpha());
        assert!(v[1].is_zero());
        assert!(v[2].is_one());
        assert_eq!(ctx.vector("0").unwrap().len(), 3);
        assert_eq!(ctx.vector("-(x - y)/2").unwrap()[1].to_string(), "1/2");

        let err = ctx.vector("x + w").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                line: 3,
                column: 11,
                message: "unknown basis name `w`".into()
            }
        );
        assert!(ctx.vector("x + 1").is_err());
        assert!(ctx.vector("x * y").is_err());
    }
}
