//! Text syntax for scalars and matrices.
//!
//! Scalars: exact rationals (`3/2`), the infinitesimal `eps`, the neutrix
//! atoms `o` (infinitesimals), `L` (limited), `R` (the real line), `0n` (the
//! trivial group), combined with `+ - * / ^` and parentheses. Exponents are
//! rational: `eps^2`, `eps^(1/2)`, `eps^(-1)`. Matrices are bracketed rows of
//! comma-separated scalars: `[[1+o, 0], [eps, 1]]`.
//!
//! Rendering uses the same grammar, so values round-trip.

use crate::error::{Error, Result};
use crate::external::ExternalNumber;
use crate::matrix::FlexMatrix;
use crate::neutrix::Neutrix;
use crate::nsreal::NSReal;
use crate::poly::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Number(BigInt),
    Eps,
    Oslash,
    Pound,
    Line,
    ZeroNeutrix,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
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

    fn error(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let mut end = self.pos;
                    while end < self.src.len() && self.src[end].is_ascii_digit() {
                        end += 1;
                    }
                    let digits = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                    if end < self.src.len() && self.src[end] == b'n' {
                        if digits == "0" {
                            out.push((start, Token::ZeroNeutrix));
                            self.pos = end + 1;
                            continue;
                        }
                        return Err(self.error(start, "only `0n` names the trivial neutrix"));
                    }
                    let value: BigInt = digits.parse().expect("digits");
                    out.push((start, Token::Number(value)));
                    self.pos = end;
                }
                b'a'..=b'z' | b'A'..=b'Z' => {
                    let mut end = self.pos;
                    while end < self.src.len()
                        && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                    {
                        end += 1;
                    }
                    let word = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                    let tok = match word {
                        "eps" => Token::Eps,
                        "o" => Token::Oslash,
                        "L" => Token::Pound,
                        "R" => Token::Line,
                        _ => return Err(self.error(start, format!("unknown symbol `{word}`"))),
                    };
                    out.push((start, tok));
                    self.pos = end;
                }
                b'+' => {
                    out.push((start, Token::Plus));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((start, Token::Minus));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((start, Token::Star));
                    self.pos += 1;
                }
                b'/' => {
                    out.push((start, Token::Slash));
                    self.pos += 1;
                }
                b'^' => {
                    out.push((start, Token::Caret));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((start, Token::LParen));
                    self.pos += 1;
                }
                b')' => {
                    out.push((start, Token::RParen));
                    self.pos += 1;
                }
                b'[' => {
                    out.push((start, Token::LBracket));
                    self.pos += 1;
                }
                b']' => {
                    out.push((start, Token::RBracket));
                    self.pos += 1;
                }
                b',' => {
                    out.push((start, Token::Comma));
                    self.pos += 1;
                }
                other => {
                    return Err(
                        self.error(start, format!("unexpected character `{}`", other as char))
                    )
                }
            }
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
    len: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            tokens: Lexer::new(src).tokens()?,
            index: 0,
            len: src.len(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.index)
            .map(|(p, _)| *p)
            .unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.index).map(|(_, t)| t.clone());
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            _ => Err(Error::Syntax {
                pos,
                msg: format!("expected {what}"),
            }),
        }
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.index += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ExternalNumber> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Token::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ExternalNumber> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Token::Star) {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(&Token::Slash) {
                acc = acc.div(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<ExternalNumber> {
        if self.eat(&Token::Minus) {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            let pos = self.pos();
            let exp = self.exponent()?;
            return apply_power(&base, &exp, pos);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExternalNumber> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Number(n)) => Ok(ExternalNumber::from_real(NSReal::from_rat(
                Rat::from_integer(n),
            ))),
            Some(Token::Eps) => Ok(ExternalNumber::from_real(NSReal::eps())),
            Some(Token::Oslash) => Ok(ExternalNumber::from_neutrix(Neutrix::oslash())),
            Some(Token::Pound) => Ok(ExternalNumber::from_neutrix(Neutrix::pound())),
            Some(Token::Line) => Ok(ExternalNumber::from_neutrix(Neutrix::Line)),
            Some(Token::ZeroNeutrix) => Ok(ExternalNumber::zero()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(Error::Syntax {
                pos,
                msg: "expected a number, `eps`, a neutrix atom, or `(`".into(),
            }),
        }
    }

    /// Exponents are rational constants: `2`, `-1`, `(1/2)`, `(-3/2)`.
    fn exponent(&mut self) -> Result<Rat> {
        let pos = self.pos();
        let negate = self.eat(&Token::Minus);
        let value = match self.bump() {
            Some(Token::Number(n)) => {
                if self.eat(&Token::Slash) {
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Token::Number(d)) if !d.is_zero() => Rat::new(n, d),
                        _ => {
                            return Err(Error::Syntax {
                                pos: dpos,
                                msg: "expected a nonzero integer denominator".into(),
                            })
                        }
                    }
                } else {
                    Rat::from_integer(n)
                }
            }
            Some(Token::LParen) => {
                let inner = self.exponent()?;
                self.expect(Token::RParen, "`)`")?;
                inner
            }
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: "expected a rational exponent".into(),
                })
            }
        };
        Ok(if negate { -value } else { value })
    }

    fn matrix(&mut self) -> Result<FlexMatrix> {
        self.expect(Token::LBracket, "`[`")?;
        let mut rows = Vec::new();
        loop {
            self.expect(Token::LBracket, "`[`")?;
            let mut row = vec![self.expr()?];
            while self.eat(&Token::Comma) {
                row.push(self.expr()?);
            }
            self.expect(Token::RBracket, "`]`")?;
            rows.push(row);
            if !self.eat(&Token::Comma) {
                break;
            }
        }
        self.expect(Token::RBracket, "`]`")?;
        FlexMatrix::from_rows(rows)
    }

    fn finish(&self) -> Result<()> {
        if self.index < self.tokens.len() {
            return Err(Error::Syntax {
                pos: self.pos(),
                msg: "trailing input".into(),
            });
        }
        Ok(())
    }
}

/// Cap on repeated-multiplication powers; larger requests fail loudly
/// instead of building huge exact values.
const MAX_POWER: u32 = 512;

fn apply_power(base: &ExternalNumber, exp: &Rat, pos: usize) -> Result<ExternalNumber> {
    if exp.denom().is_one() {
        let k = exp.numer();
        let magnitude: u32 = k
            .abs()
            .try_into()
            .ok()
            .filter(|m| *m <= MAX_POWER)
            .ok_or_else(|| {
                Error::Resource(format!("exponent {k} exceeds the power budget {MAX_POWER}"))
            })?;
        let _ = pos;
        if k.is_negative() {
            return Ok(base.inv()?.powi(magnitude));
        }
        return Ok(base.powi(magnitude));
    }
    // fractional exponents act on real monomials only
    if base.is_real() {
        return Ok(ExternalNumber::from_real(base.rep().pow_rat(exp)?));
    }
    Err(Error::Domain(format!(
        "fractional power of a value with a neutrix part: ({base})^({exp})"
    )))
}

/// Parse a scalar expression into an external number.
pub fn parse_scalar(text: &str) -> Result<ExternalNumber> {
    let mut p = Parser::new(text)?;
    let value = p.expr()?;
    p.finish()?;
    Ok(value)
}

/// Parse a bracketed matrix of scalar expressions.
pub fn parse_matrix(text: &str) -> Result<FlexMatrix> {
    let mut p = Parser::new(text)?;
    let value = p.matrix()?;
    p.finish()?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neutrix::NeutrixBase;
    use crate::poly::{rat, rat_int};

    #[test]
    fn scalar_atoms() {
        assert_eq!(
            parse_scalar("1 + o").unwrap(),
            ExternalNumber::new(NSReal::one(), Neutrix::oslash())
        );
        assert_eq!(parse_scalar("0n").unwrap(), ExternalNumber::zero());
        assert_eq!(
            parse_scalar("R").unwrap(),
            ExternalNumber::from_neutrix(Neutrix::Line)
        );
        assert_eq!(
            parse_scalar("3/2 * eps^(1/2)").unwrap(),
            ExternalNumber::from_real(NSReal::monomial(rat(3, 2), rat(1, 2)))
        );
        assert_eq!(
            parse_scalar("2 + eps*L").unwrap(),
            ExternalNumber::new(
                NSReal::from_int(2),
                Neutrix::scaled(rat_int(1), NeutrixBase::Pound)
            )
        );
        assert_eq!(
            parse_scalar("-1 + eps^2*o").unwrap(),
            ExternalNumber::new(
                NSReal::from_int(-1),
                Neutrix::scaled(rat_int(2), NeutrixBase::Oslash)
            )
        );
    }

    #[test]
    fn sqrt_eps_lies_between_the_neutrices() {
        let x = parse_scalar("eps^(1/2)").unwrap();
        assert!(Neutrix::oslash().contains(x.rep()));
        assert!(!Neutrix::scaled(rat_int(1), NeutrixBase::Pound).contains(x.rep()));
    }

    #[test]
    fn powers_and_inverses() {
        assert_eq!(
            parse_scalar("eps^-1").unwrap(),
            ExternalNumber::from_real(NSReal::eps().inv().unwrap())
        );
        assert_eq!(
            parse_scalar("(1+eps)^2").unwrap(),
            parse_scalar("1 + 2*eps + eps^2").unwrap()
        );
        assert!(matches!(parse_scalar("1/0n"), Err(Error::NotZeroless(_))));
        assert!(matches!(
            parse_scalar("(1+o)^(1/2)"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn resource_budgets_fail_loudly() {
        assert!(matches!(
            parse_scalar("(1+eps)^4000"),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            parse_scalar("eps^(1/8192)"),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let Err(Error::Syntax { pos, .. }) = parse_scalar("1 + $") else {
            panic!("expected a syntax error");
        };
        assert_eq!(pos, 4);
        assert!(parse_scalar("1 +").is_err());
        assert!(parse_scalar("1 2").is_err());
        assert!(parse_scalar("5n").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("[[1+o, 0, 0], [0, 1, 1+eps], [0, 1, 1]]").unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.cols(), 3);
        assert_eq!(
            m.get(0, 0),
            &ExternalNumber::new(NSReal::one(), Neutrix::oslash())
        );
        assert!(parse_matrix("[[1, 2], [3]]").is_err());
        assert!(parse_matrix("[]").is_err());
    }

    #[test]
    fn rendering_round_trips() {
        let samples = [
            "1 + o",
            "0n",
            "R",
            "L",
            "eps^(1/2)",
            "-1 + eps^2*o",
            "2 + eps*L",
            "eps^(-1)*o",
            "(1)/(1 + eps)",
            "3/2",
            "1 - eps",
        ];
        for s in samples {
            let v = parse_scalar(s).unwrap();
            let rendered = v.to_string();
            let reparsed = parse_scalar(&rendered)
                .unwrap_or_else(|e| panic!("rendered `{rendered}` does not parse: {e}"));
            assert_eq!(v, reparsed, "round trip of `{s}` via `{rendered}`");
        }
        let m = parse_matrix("[[1+o, 0], [eps, eps^(-1) + eps*L]]").unwrap();
        let rendered = m.to_string();
        assert_eq!(parse_matrix(&rendered).unwrap(), m);
    }
}
