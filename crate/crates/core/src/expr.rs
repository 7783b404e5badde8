//! Small arithmetic expression parser.
//!
//! One grammar serves two readers: the user-facing scalar syntax (rational
//! expressions in `t`) and the affine parameter maps of the identity catalog
//! (`"(1+b-c-n)/2"` over named parameters).

use num_bigint::BigInt;

use crate::affine::AffineExpr;
use crate::field::{ParseError, Polynomial, RatFun, Rational};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Expr {
    Num(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
            }
            out.push(Token::Num(digits.parse().expect("ascii digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                name.push(d);
                chars.next();
            }
            out.push(Token::Ident(name));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            chars.next();
        } else {
            return Err(ParseError::UnexpectedChar(c, i));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek_op() {
                Some(op @ ('*' | '/')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = if op == '*' {
                        Expr::Mul(Box::new(lhs), Box::new(rhs))
                    } else {
                        Expr::Div(Box::new(lhs), Box::new(rhs))
                    };
                }
                // implicit multiplication: `3t`, `2n`, `2(a+1)`
                None if matches!(
                    (self.tokens.get(self.pos.wrapping_sub(1)), self.tokens.get(self.pos)),
                    (Some(Token::Num(_)), Some(Token::Ident(_)))
                ) =>
                {
                    let rhs = self.unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let exp = match self.tokens.get(self.pos) {
                Some(Token::Num(k)) => u32::try_from(k).map_err(|_| ParseError::BadExponent)?,
                _ => return Err(ParseError::BadExponent),
            };
            if exp > 4096 {
                return Err(ParseError::BadExponent);
            }
            self.pos += 1;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let tok = self.tokens.get(self.pos).cloned().ok_or(ParseError::UnexpectedEnd)?;
        self.pos += 1;
        match tok {
            Token::Num(v) => Ok(Expr::Num(v)),
            Token::Ident(name) => Ok(Expr::Var(name)),
            Token::Op('(') => {
                let inner = self.expr()?;
                match self.tokens.get(self.pos) {
                    Some(Token::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Token::Op(c) => Err(ParseError::UnexpectedToken(c.to_string())),
        }
    }
}

impl Expr {
    pub(crate) fn parse(s: &str) -> Result<Expr, ParseError> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(ParseError::UnexpectedEnd);
        }
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if let Some(t) = p.tokens.get(p.pos) {
            return Err(ParseError::UnexpectedToken(format!("{t:?}")));
        }
        Ok(e)
    }

    /// Interprets the expression in Q(t); the only variable allowed is `t`.
    pub(crate) fn to_ratfun(&self) -> Result<RatFun, ParseError> {
        Ok(match self {
            Expr::Num(v) => RatFun::constant(Rational::from(v.clone())),
            Expr::Var(name) if name == "t" => RatFun::t(),
            Expr::Var(name) => return Err(ParseError::UnknownVariable(name.clone())),
            Expr::Neg(e) => e.to_ratfun()?.neg(),
            Expr::Add(a, b) => a.to_ratfun()?.checked_add(&b.to_ratfun()?)?,
            Expr::Sub(a, b) => a.to_ratfun()?.checked_sub(&b.to_ratfun()?)?,
            Expr::Mul(a, b) => a.to_ratfun()?.checked_mul(&b.to_ratfun()?)?,
            Expr::Div(a, b) => a.to_ratfun()?.checked_div(&b.to_ratfun()?).map_err(|_| ParseError::ZeroDenominator)?,
            Expr::Pow(base, k) => {
                let b = base.to_ratfun()?;
                let mut acc = RatFun::from_poly(Polynomial::one());
                for _ in 0..*k {
                    acc = acc.checked_mul(&b)?;
                }
                acc
            }
        })
    }

    /// Interprets the expression as an affine form in `vars` and the formal
    /// symbol `n`.
    pub(crate) fn to_affine(&self, vars: &[&str]) -> Result<AffineExpr, ParseError> {
        let arity = vars.len();
        Ok(match self {
            Expr::Num(v) => AffineExpr::constant(arity, Rational::from(v.clone())),
            Expr::Var(name) if name == "n" => AffineExpr::n(arity),
            Expr::Var(name) => match vars.iter().position(|v| v == name) {
                Some(i) => AffineExpr::var(arity, i),
                None => return Err(ParseError::UnknownVariable(name.clone())),
            },
            Expr::Neg(e) => e.to_affine(vars)?.scale(&-Rational::one()),
            Expr::Add(a, b) => a.to_affine(vars)?.add(&b.to_affine(vars)?),
            Expr::Sub(a, b) => a.to_affine(vars)?.sub(&b.to_affine(vars)?),
            Expr::Mul(a, b) => {
                let (a, b) = (a.to_affine(vars)?, b.to_affine(vars)?);
                if let Some(c) = a.as_constant() {
                    b.scale(&c)
                } else if let Some(c) = b.as_constant() {
                    a.scale(&c)
                } else {
                    return Err(ParseError::NotAffine(format!("{self:?}")));
                }
            }
            Expr::Div(a, b) => {
                let c = b.to_affine(vars)?.as_constant().ok_or_else(|| ParseError::NotAffine(format!("{self:?}")))?;
                let inv = c.recip().map_err(|_| ParseError::ZeroDenominator)?;
                a.to_affine(vars)?.scale(&inv)
            }
            Expr::Pow(base, k) => {
                let b = base.to_affine(vars)?;
                match (b.as_constant(), k) {
                    (_, 0) => AffineExpr::constant(arity, Rational::one()),
                    (_, 1) => b,
                    (Some(c), k) => AffineExpr::constant(arity, c.pow(*k as i32)?),
                    (None, _) => return Err(ParseError::NotAffine(format!("{self:?}"))),
                }
            }
        })
    }
}
