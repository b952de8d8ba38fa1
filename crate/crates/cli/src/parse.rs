//! The expression language of the calculator.
//!
//! ```text
//! element := term (('+'|'-') term)* ;
//! term    := [scalar ['*']] factor* ;       # juxtaposition is the product
//! factor  := atom ['^' int] ["'"] ;         # postfix ' is the adjoint
//! atom    := 'u' | 'w(' nat ')' | '(' element ')' ;
//! scalar  := ['-'] (nat ['/' nat] ['i'] | 'i') ;
//! ```
//!
//! A term must contain a scalar or at least one factor; a bare scalar such
//! as `1` or `i` is a valid term. Laurent polynomials use the same scalars
//! with the single atom `Z`, e.g. `1/2*Z^-3 + i*Z^2`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use qn_core::{Element, GaussianRational, LaurentPoly, Monomial, Positive};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// A syntax error with the byte position it was detected at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// An evaluation error (the expression parsed but denotes nothing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "evaluation error: {}", self.message)
    }
}

impl std::error::Error for EvalError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Prime,
    LParen,
    RParen,
    Slash,
    Comma,
    Nat(BigInt),
    U,
    W,
    I,
    Z,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '\'' => Tok::Prime,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '/' => Tok::Slash,
            ',' => Tok::Comma,
            'u' => Tok::U,
            'w' => Tok::W,
            'i' => Tok::I,
            'Z' => Tok::Z,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let nat: BigInt = text[start..i].parse().expect("digits parse");
                out.push((Tok::Nat(nat), start));
                continue;
            }
            other => return err(i, format!("unexpected character '{other}'")),
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Syntax tree
// ---------------------------------------------------------------------------

/// Abstract syntax of the expression language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(GaussianRational),
    U,
    W(Positive),
    Adjoint(Box<Expr>),
    Pow(Box<Expr>, BigInt),
    Product(Vec<Expr>),
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            err(self.here(), format!("expected {what}"))
        }
    }

    fn parse_nat(&mut self, what: &str) -> Result<BigInt, ParseError> {
        if matches!(self.peek(), Some(Tok::Nat(_))) {
            match self.bump() {
                Some(Tok::Nat(n)) => Ok(n),
                _ => unreachable!("peeked a number"),
            }
        } else {
            err(self.here(), format!("expected {what}"))
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, ParseError> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.parse_nat("an integer exponent")?;
        Ok(if negative { -n } else { n })
    }

    /// `nat ['/' nat] ['i'] | 'i'`, sign handled by the caller.
    fn parse_scalar(&mut self) -> Result<GaussianRational, ParseError> {
        if self.peek() == Some(&Tok::I) {
            self.pos += 1;
            return Ok(GaussianRational::i());
        }
        let numer = self.parse_nat("a number")?;
        let denom = if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let at = self.here();
            let d = self.parse_nat("a denominator")?;
            if d.is_zero() {
                return err(at, "zero denominator");
            }
            d
        } else {
            BigInt::from(1)
        };
        let value = BigRational::new(numer, denom);
        if self.peek() == Some(&Tok::I) {
            self.pos += 1;
            Ok(GaussianRational::new(BigRational::zero(), value))
        } else {
            Ok(GaussianRational::from_rational(value))
        }
    }

    fn scalar_ahead(&self) -> bool {
        matches!(self.peek(), Some(Tok::Nat(_)) | Some(Tok::I))
    }

    fn atom_ahead(&self) -> bool {
        matches!(self.peek(), Some(Tok::U) | Some(Tok::W) | Some(Tok::LParen))
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::U) => {
                self.pos += 1;
                Ok(Expr::U)
            }
            Some(Tok::W) => {
                self.pos += 1;
                self.expect(Tok::LParen, "'(' after w")?;
                let at = self.here();
                let index = self.parse_nat("an isometry index")?;
                self.expect(Tok::RParen, "')'")?;
                match Positive::new(index) {
                    Some(p) => Ok(Expr::W(p)),
                    None => err(at, "w index must be at least 1"),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.parse_element()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => err(self.here(), "expected 'u', 'w(..)' or '('"),
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exponent = self.parse_int()?;
            e = Expr::Pow(Box::new(e), exponent);
        }
        if self.peek() == Some(&Tok::Prime) {
            self.pos += 1;
            e = Expr::Adjoint(Box::new(e));
        }
        Ok(e)
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut parts: Vec<Expr> = Vec::new();
        if self.scalar_ahead() {
            parts.push(Expr::Scalar(self.parse_scalar()?));
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                if !self.atom_ahead() {
                    return err(self.here(), "expected a factor after '*'");
                }
            }
        }
        while self.atom_ahead() {
            parts.push(self.parse_factor()?);
        }
        match parts.len() {
            0 => err(self.here(), "expected a term"),
            1 => Ok(parts.pop().expect("one part")),
            _ => Ok(Expr::Product(parts)),
        }
    }

    fn parse_signed_term(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Ok(Expr::Neg(Box::new(self.parse_term()?)))
        } else {
            if self.peek() == Some(&Tok::Plus) {
                self.pos += 1;
            }
            self.parse_term()
        }
    }

    fn parse_element(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.parse_signed_term()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    terms.push(self.parse_term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    terms.push(Expr::Neg(Box::new(self.parse_term()?)));
                }
                _ => break,
            }
        }
        if terms.len() == 1 {
            Ok(terms.pop().expect("one term"))
        } else {
            Ok(Expr::Sum(terms))
        }
    }
}

/// Parses an expression in the generators `u`, `w(m)`.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let e = parser.parse_element()?;
    if parser.peek().is_some() {
        return err(parser.here(), "unexpected trailing input");
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Inverts a single-term element `c * u^k`; everything else is rejected.
fn invert(e: &Element) -> Result<Element, EvalError> {
    let mut terms = e.terms();
    let (mono, coeff) = match (terms.next(), terms.next()) {
        (Some(first), None) => first,
        _ => {
            return Err(EvalError {
                message: "negative power of a non-invertible element".into(),
            })
        }
    };
    if !mono.m().is_one() || !mono.n().is_one() {
        return Err(EvalError {
            message: "negative power of a non-unitary element".into(),
        });
    }
    let inv_coeff = coeff.recip().expect("stored coefficients are nonzero");
    Ok(Element::with_coeff(mono.star(), inv_coeff))
}

/// Evaluates a syntax tree to a canonical element of the word algebra.
pub fn eval(expr: &Expr) -> Result<Element, EvalError> {
    match expr {
        Expr::Scalar(c) => Ok(Element::scalar(c.clone())),
        Expr::U => Ok(Element::from(Monomial::u())),
        Expr::W(m) => Ok(Element::from(Monomial::w(m.clone()))),
        Expr::Adjoint(inner) => Ok(eval(inner)?.star()),
        Expr::Pow(base, exponent) => {
            let v = eval(base)?;
            let magnitude = exponent.magnitude().to_u64().ok_or_else(|| EvalError {
                message: "exponent out of range".into(),
            })?;
            if exponent.sign() == num_bigint::Sign::Minus {
                Ok(invert(&v)?.pow(magnitude))
            } else {
                Ok(v.pow(magnitude))
            }
        }
        Expr::Product(parts) => {
            let mut acc = Element::one();
            for p in parts {
                acc = acc.mul(&eval(p)?);
            }
            Ok(acc)
        }
        Expr::Sum(terms) => {
            let mut acc = Element::zero();
            for t in terms {
                acc = acc.add(&eval(t)?);
            }
            Ok(acc)
        }
        Expr::Neg(inner) => Ok(eval(inner)?.neg()),
    }
}

/// One-step convenience: parse then evaluate.
pub fn eval_str(text: &str) -> Result<Element, String> {
    let expr = parse(text).map_err(|e| e.to_string())?;
    eval(&expr).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// Parses the polynomial syntax: terms `c*Z^k` joined by `+`/`-`.
pub fn parse_poly(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let mut out = LaurentPoly::zero();
    let mut first = true;
    loop {
        let negative = match parser.peek() {
            Some(Tok::Minus) => {
                parser.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                parser.pos += 1;
                false
            }
            None if !first => break,
            _ if first => false,
            _ => return err(parser.here(), "expected '+' or '-'"),
        };
        first = false;

        let mut coeff = None;
        if parser.scalar_ahead() {
            coeff = Some(parser.parse_scalar()?);
            if parser.peek() == Some(&Tok::Star) {
                parser.pos += 1;
                if parser.peek() != Some(&Tok::Z) {
                    return err(parser.here(), "expected Z after '*'");
                }
            }
        }
        let mut exponent = BigInt::zero();
        let mut has_var = false;
        if parser.peek() == Some(&Tok::Z) {
            parser.pos += 1;
            has_var = true;
            exponent = BigInt::from(1);
            if parser.peek() == Some(&Tok::Caret) {
                parser.pos += 1;
                exponent = parser.parse_int()?;
            }
        }
        let coeff = match (coeff, has_var) {
            (Some(c), _) => c,
            (None, true) => GaussianRational::one(),
            (None, false) => return err(parser.here(), "expected a polynomial term"),
        };
        let coeff = if negative {
            &GaussianRational::zero() - &coeff
        } else {
            coeff
        };
        out = out.add(&LaurentPoly::monomial(exponent, coeff));
        match parser.peek() {
            None => break,
            Some(Tok::Plus) | Some(Tok::Minus) => continue,
            _ => return err(parser.here(), "unexpected trailing input"),
        }
    }
    Ok(out)
}
