//! Expressions over F_q(x)[y]: integers (reduced mod p), x, y, the generator
//! symbol of F_q, + − * / ^ and parentheses. No implicit multiplication.

use crate::algebra::{Fq, Poly, GEN_SYMBOL};
use crate::error::{Error, Result};
use crate::forms::CubicInput;
use crate::ratfunc::RatFn;

/// A polynomial in y with coefficients in F_q(x), low to high, trimmed.
type YPoly = Vec<RatFn>;

fn trim(mut v: YPoly) -> YPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn add(a: &YPoly, b: &YPoly, fq: &Fq, sign: bool) -> YPoly {
    let n = a.len().max(b.len());
    let z = RatFn::zero(fq);
    trim(
        (0..n)
            .map(|i| {
                let (x, y) = (a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z));
                if sign {
                    x.add(y)
                } else {
                    x.sub(y)
                }
            })
            .collect(),
    )
}

fn mul(a: &YPoly, b: &YPoly, fq: &Fq) -> YPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RatFn::zero(fq); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(out)
}

struct Parser<'a> {
    fq: &'a Fq,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<YPoly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = add(&acc, &rhs, self.fq, op == '+');
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<YPoly> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                mul(&acc, &rhs, self.fq)
            } else {
                match rhs.as_slice() {
                    [] => return self.err(at, "division by zero"),
                    [c] => acc.iter().map(|a| a.div(c)).collect(),
                    _ => return self.err(at, "division by an expression in y"),
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<YPoly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.iter().map(|c| c.neg()).collect())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer exponent");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let Ok(e) = digits.parse::<i64>() else {
            return self.err(start, "exponent too large");
        };
        if paren {
            if self.peek() != Some(')') {
                return self.err(self.pos, "expected ')'");
            }
            self.pos += 1;
        }
        Ok(if neg { -e } else { e })
    }

    fn power(&mut self) -> Result<YPoly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        let at = self.pos;
        self.pos += 1;
        let e = self.exponent()?;
        match base.as_slice() {
            [] if e <= 0 => self.err(at, "zero to a non-positive power"),
            [] => Ok(base),
            [c] => Ok(vec![c.pow(e)]),
            _ if e < 0 => self.err(at, "negative power of an expression in y"),
            _ => {
                let mut acc = vec![RatFn::one(self.fq)];
                for _ in 0..e {
                    acc = mul(&acc, &base, self.fq);
                }
                Ok(acc)
            }
        }
    }

    fn atom(&mut self) -> Result<YPoly> {
        let fq = self.fq;
        let at = match self.peek() {
            None => return self.err(self.pos, "unexpected end of input"),
            Some(_) => self.pos,
        };
        let c = self.chars[at];
        self.pos += 1;
        let constant = |v: RatFn| Ok(trim(vec![v]));
        match c {
            '(' => {
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            'x' => constant(RatFn::x(fq)),
            'y' => Ok(vec![RatFn::zero(fq), RatFn::one(fq)]),
            c if c == GEN_SYMBOL && fq.n() > 1 => constant(RatFn::constant(fq, fq.generator())),
            c if c.is_ascii_digit() => {
                let mut v: u128 = c.to_digit(10).unwrap() as u128;
                while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
                    v = (v * 10 + d as u128) % fq.p() as u128;
                    self.pos += 1;
                }
                constant(RatFn::int(fq, (v % fq.p() as u128) as i64))
            }
            _ => self.err(at, format!("unexpected '{c}'")),
        }
    }
}

/// Parse an expression into a polynomial in y.
fn parse_ypoly(text: &str, fq: &Fq) -> Result<YPoly> {
    let mut p = Parser {
        fq,
        chars: text.chars().collect(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        let c = p.chars[p.pos];
        return p.err(p.pos, format!("unexpected '{c}'"));
    }
    Ok(v)
}

/// Parse "y^3 + e*y^2 + f*y + g" into its coefficients.
pub fn parse_cubic(text: &str, fq: &Fq) -> Result<CubicInput> {
    let v = parse_ypoly(text, fq)?;
    if v.len() != 4 || !v[3].is_one() {
        return Err(Error::NotMonicCubic);
    }
    Ok(CubicInput::new(v[2].clone(), v[1].clone(), v[0].clone()))
}

/// Parse a rational function of x.
pub fn parse_ratfn(text: &str, fq: &Fq) -> Result<RatFn> {
    let v = parse_ypoly(text, fq)?;
    match v.len() {
        0 => Ok(RatFn::zero(fq)),
        1 => Ok(v[0].clone()),
        _ => Err(Error::Syntax {
            pos: 0,
            msg: "expected an expression in x only".into(),
        }),
    }
}

/// Parse a polynomial in x.
pub fn parse_poly(text: &str, fq: &Fq) -> Result<Poly> {
    let r = parse_ratfn(text, fq)?;
    if !r.is_poly() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "expected a polynomial".into(),
        });
    }
    Ok(r.num().clone())
}
