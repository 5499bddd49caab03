//! Text grammars for polynomials and forms.
//!
//! Polynomials are sums of terms `c * x1^e1 * ... * xn^en` with exact
//! rationals written `p/q`; exponents may be negative. Forms extend terms
//! with wedge factors `dlog(xj)` and `d(xj)` joined by `^`, with the
//! coefficient parenthesized when it has several terms. The printers in
//! [`crate::laurent`] and [`crate::forms`] emit exactly this grammar.

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::forms::{LogForm, Wedge};
use crate::laurent::{Exponents, LaurentPoly, Rational};
use crate::modulus::ModulusPair;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Var(usize),
    DLog(usize),
    D(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            at: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap()
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string()
    }

    /// Parse `(xj)` after `d` or `dlog`.
    fn covector_index(&mut self) -> Result<usize> {
        self.skip_ws();
        if self.pos >= self.src.len() || self.src[self.pos] != b'(' {
            return Err(self.error("expected '(' after differential"));
        }
        self.pos += 1;
        self.skip_ws();
        let name = self.ident();
        let j = var_index(&name).ok_or_else(|| self.error("expected a variable like x1"))?;
        self.skip_ws();
        if self.pos >= self.src.len() || self.src[self.pos] != b')' {
            return Err(self.error("expected ')'"));
        }
        self.pos += 1;
        Ok(j)
    }

    fn next(&mut self) -> Result<Option<Token>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Token::Plus
            }
            b'-' => {
                self.pos += 1;
                Token::Minus
            }
            b'*' => {
                self.pos += 1;
                Token::Star
            }
            b'^' => {
                self.pos += 1;
                Token::Caret
            }
            b'/' => {
                self.pos += 1;
                Token::Slash
            }
            b'(' => {
                self.pos += 1;
                Token::LParen
            }
            b')' => {
                self.pos += 1;
                Token::RParen
            }
            b'0'..=b'9' => Token::Number(self.number()),
            _ if c.is_ascii_alphabetic() => {
                let name = self.ident();
                if name == "dlog" {
                    Token::DLog(self.covector_index()?)
                } else if name == "d" {
                    Token::D(self.covector_index()?)
                } else if let Some(j) = var_index(&name) {
                    Token::Var(j)
                } else {
                    return Err(self.error(format!("unknown symbol {name:?}")));
                }
            }
            _ => return Err(self.error(format!("unexpected character {:?}", c as char))),
        };
        Ok(Some(tok))
    }
}

/// `x7` -> 6 (variables are 1-indexed in text).
fn var_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('x')?;
    let k: usize = rest.parse().ok()?;
    if k == 0 {
        None
    } else {
        Some(k - 1)
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<Option<Token>>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            lexer: Lexer::new(src),
            peeked: None,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.lexer.error(message)
    }

    fn peek(&mut self) -> Result<Option<&Token>> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next()?);
        }
        Ok(self.peeked.as_ref().unwrap().as_ref())
    }

    fn advance(&mut self) -> Result<Option<Token>> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lexer.next(),
        }
    }

    /// A signed rational or integer literal.
    fn rational_tail(&mut self, numer: BigInt) -> Result<Rational> {
        if matches!(self.peek()?, Some(Token::Slash)) {
            self.advance()?;
            match self.advance()? {
                Some(Token::Number(d)) => Ok(Rational::new(numer, d)),
                _ => Err(self.error("expected denominator")),
            }
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    /// An integer exponent after `^`, with optional sign.
    fn exponent(&mut self) -> Result<i64> {
        let mut sign = 1i64;
        if matches!(self.peek()?, Some(Token::Minus)) {
            self.advance()?;
            sign = -1;
        }
        match self.advance()? {
            Some(Token::Number(n)) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| self.error("exponent out of range"))?;
                Ok(sign * v)
            }
            _ => Err(self.error("expected exponent")),
        }
    }

    /// One product of scalar factors and covector factors.
    fn product(
        &mut self,
        vars: usize,
        allow_covectors: bool,
    ) -> Result<(LaurentPoly, Vec<(bool, usize)>)> {
        let mut coeff = LaurentPoly::one(vars);
        let mut covectors: Vec<(bool, usize)> = Vec::new();
        loop {
            match self.advance()? {
                Some(Token::Number(n)) => {
                    let c = self.rational_tail(n)?;
                    coeff = coeff.scale(&c);
                }
                Some(Token::Var(j)) => {
                    if j >= vars {
                        return Err(self.error(format!(
                            "variable x{} exceeds the ambient count {}",
                            j + 1,
                            vars
                        )));
                    }
                    let e = if matches!(self.peek()?, Some(Token::Caret)) {
                        self.advance()?;
                        self.exponent()?
                    } else {
                        1
                    };
                    coeff = coeff.mul_monomial(&Exponents::delta(vars, j).scaled(e));
                }
                Some(Token::DLog(j)) | Some(Token::D(j)) if !allow_covectors => {
                    let _ = j;
                    return Err(self.error("differentials are not allowed in a polynomial"));
                }
                Some(Token::DLog(j)) => {
                    if j >= vars {
                        return Err(self.error("covector index out of range"));
                    }
                    covectors.push((true, j));
                }
                Some(Token::D(j)) => {
                    if j >= vars {
                        return Err(self.error("covector index out of range"));
                    }
                    covectors.push((false, j));
                }
                Some(Token::LParen) if allow_covectors => {
                    // Parenthesized polynomial coefficient.
                    let inner = self.sum(vars, false)?;
                    match self.advance()? {
                        Some(Token::RParen) => {}
                        _ => return Err(self.error("expected ')'")),
                    }
                    let (p, _) = inner;
                    coeff = &coeff * &p;
                }
                _ => return Err(self.error("expected a factor")),
            }
            match self.peek()? {
                Some(Token::Star) | Some(Token::Caret) => {
                    self.advance()?;
                }
                _ => break,
            }
        }
        Ok((coeff, covectors))
    }

    /// A sum of products; covector lists are returned per term.
    #[allow(clippy::type_complexity)]
    fn sum(
        &mut self,
        vars: usize,
        allow_covectors: bool,
    ) -> Result<(LaurentPoly, Vec<(LaurentPoly, Vec<(bool, usize)>)>)> {
        let mut terms = Vec::new();
        let mut scalar_total = LaurentPoly::zero(vars);
        let mut negate = false;
        loop {
            // Leading signs of the term, also covering `+ -3/2 * x1`.
            while matches!(self.peek()?, Some(Token::Minus)) {
                self.advance()?;
                negate = !negate;
            }
            let (mut coeff, covectors) = self.product(vars, allow_covectors)?;
            if negate {
                coeff = coeff.neg_ref();
            }
            if covectors.is_empty() {
                scalar_total = &scalar_total + &coeff;
            }
            terms.push((coeff, covectors));
            match self.peek()? {
                Some(Token::Plus) => {
                    self.advance()?;
                    negate = false;
                }
                Some(Token::Minus) => {
                    self.advance()?;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok((scalar_total, terms))
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.advance()? {
            None => Ok(()),
            Some(t) => Err(self.error(format!("unexpected trailing token {t:?}"))),
        }
    }
}

impl LaurentPoly {
    fn neg_ref(&self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

/// Parse a polynomial over `vars` ambient variables.
pub fn parse_poly(input: &str, vars: usize) -> Result<LaurentPoly> {
    let mut p = Parser::new(input);
    let (scalar, _) = p.sum(vars, false)?;
    p.expect_end()?;
    Ok(scalar)
}

/// Parse a form over a pair, converting `d`/`dlog` factors into the log
/// basis of the pair's support. All terms must share one degree.
pub fn parse_form(input: &str, pair: &ModulusPair) -> Result<LogForm> {
    let vars = pair.vars();
    let mut p = Parser::new(input);
    let (_, terms) = p.sum(vars, true)?;
    p.expect_end()?;
    let degree = terms
        .first()
        .map(|(_, cov)| cov.len())
        .unwrap_or(0);
    let mut out = LogForm::zero(pair, degree);
    for (coeff, covectors) in terms {
        if covectors.len() != degree {
            return Err(Error::Incompatible(format!(
                "mixed degrees in one form: {} and {}",
                degree,
                covectors.len()
            )));
        }
        let mut piece = LogForm::scalar(pair, coeff);
        for (is_log, j) in covectors {
            // Rewrite into the canonical covector of the support.
            let canonical = pair.in_support(j);
            let mut shift = Exponents::zero(vars);
            if is_log && !canonical {
                shift = Exponents::delta(vars, j).neg();
            } else if !is_log && canonical {
                shift = Exponents::delta(vars, j);
            }
            let covector = LogForm::term(
                pair,
                Wedge::from_indices(&[j]),
                LaurentPoly::monomial(vars, shift, Rational::one()),
            );
            piece = piece.wedge(&covector)?;
        }
        out = match out.add(&piece) {
            Ok(sum) => sum,
            Err(_) => {
                return Err(Error::Incompatible(
                    "mixed degrees in one form".into(),
                ))
            }
        };
    }
    Ok(out)
}
