//! Parser for the polynomial text format.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)?
//! atom     := rational | 'x' nat | '(' expr ')' | '[' expr ',' expr ']'
//! rational := ['-'] nat ['/' nat]
//! ```
//!
//! Whitespace is ignored, `[a,b]` expands to `a*b - b*a`, and juxtaposition
//! without `*` is rejected.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::scalar::Scalar;

/// Parses `text` as a polynomial in `nvars` variables.
pub fn parse(text: &str, nvars: usize) -> Result<NcPoly> {
    if nvars < 1 {
        return Err(Error::NoVariables);
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("expected an operator or end of input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small_nat(&mut self) -> Result<usize> {
        let at = self.pos;
        let n = self.nat()?;
        usize::try_from(&n).map_err(|_| Error::Syntax { pos: at, msg: "number too large".into() })
    }

    fn expr(&mut self) -> Result<NcPoly> {
        let negate = self.peek() == Some(b'-') && !self.next_is_digit_after_minus();
        if negate {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn next_is_digit_after_minus(&self) -> bool {
        let mut i = self.pos + 1;
        while i < self.src.len() && self.src[i].is_ascii_whitespace() {
            i += 1;
        }
        self.src.get(i).is_some_and(u8::is_ascii_digit)
    }

    fn term(&mut self) -> Result<NcPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.small_nat()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NcPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                Ok(a.commutator(&b))
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.small_nat()?;
                if i == 0 || i > self.nvars {
                    return Err(Error::VariableOutOfRange { index: i, nvars: self.nvars });
                }
                Ok(NcPoly::var(self.nvars, i - 1))
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let neg = self.eat(b'-');
                let num = self.nat()?;
                let den = if self.eat(b'/') {
                    let at = self.pos;
                    let d = self.nat()?;
                    if d == BigInt::from(0) {
                        return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let mut c = Scalar::new(num, den);
                if neg {
                    c = -c;
                }
                Ok(NcPoly::constant(self.nvars, c))
            }
            Some(_) => Err(self.err("expected a number, variable, '(' or '['")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
