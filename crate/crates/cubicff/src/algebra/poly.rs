//! Dense univariate polynomials over F_q.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Rem, Sub};

use super::field::{Fe, Fq};

/// A polynomial in F_q[x], coefficients stored low to high with no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    fq: Fq,
    c: Vec<Fe>,
}

impl Poly {
    pub fn zero(fq: &Fq) -> Poly {
        Poly {
            fq: fq.clone(),
            c: Vec::new(),
        }
    }

    pub fn one(fq: &Fq) -> Poly {
        Poly::constant(fq, Fe::ONE)
    }

    pub fn constant(fq: &Fq, c: Fe) -> Poly {
        Poly::from_coeffs(fq, vec![c])
    }

    /// The indeterminate x.
    pub fn x(fq: &Fq) -> Poly {
        Poly::monomial(fq, Fe::ONE, 1)
    }

    /// c·x^d.
    pub fn monomial(fq: &Fq, c: Fe, d: usize) -> Poly {
        let mut v = vec![Fe::ZERO; d + 1];
        v[d] = c;
        Poly::from_coeffs(fq, v)
    }

    pub fn from_coeffs(fq: &Fq, c: Vec<Fe>) -> Poly {
        let mut p = Poly { fq: fq.clone(), c };
        p.trim();
        p
    }

    /// Coefficients given as integers in the prime field, low to high.
    pub fn from_ints(fq: &Fq, c: &[i64]) -> Poly {
        Poly::from_coeffs(fq, c.iter().map(|&v| fq.from_int(v)).collect())
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|c| c.is_zero()) {
            self.c.pop();
        }
    }

    pub fn field(&self) -> &Fq {
        &self.fq
    }

    /// Degree, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree as an integer with −1 standing in for −∞; handy in bounds.
    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == Fe::ONE
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.c.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Fe {
        self.c.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == Fe::ONE
    }

    fn binop(&self, o: &Poly, f: impl Fn(Fe, Fe) -> Fe) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| f(self.coeff(i), o.coeff(i))).collect();
        Poly::from_coeffs(&self.fq, c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.binop(o, |a, b| self.fq.add(a, b))
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.binop(o, |a, b| self.fq.sub(a, b))
    }

    pub fn neg(&self) -> Poly {
        Poly::from_coeffs(&self.fq, self.c.iter().map(|&a| self.fq.neg(a)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.fq);
        }
        let k = &self.fq;
        let mut out = vec![Fe::ZERO; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::from_coeffs(k, out)
    }

    pub fn scale(&self, s: Fe) -> Poly {
        Poly::from_coeffs(
            &self.fq,
            self.c.iter().map(|&a| self.fq.mul(a, s)).collect(),
        )
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Fe::ZERO; k];
        c.extend_from_slice(&self.c);
        Poly {
            fq: self.fq.clone(),
            c,
        }
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.deg().expect("division by the zero polynomial");
        let k = &self.fq;
        if self.c.len() <= dd {
            return (Poly::zero(k), self.clone());
        }
        let inv = k.inv(d.lc());
        let mut r = self.c.clone();
        let mut quo = vec![Fe::ZERO; self.c.len() - dd];
        for i in (dd..r.len()).rev() {
            let coef = r[i];
            if coef.is_zero() {
                continue;
            }
            let t = k.mul(coef, inv);
            quo[i - dd] = t;
            for j in 0..=dd {
                r[i - dd + j] = k.sub(r[i - dd + j], k.mul(t, d.c[j]));
            }
        }
        r.truncate(dd);
        (Poly::from_coeffs(k, quo), Poly::from_coeffs(k, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Quotient; the caller asserts exact divisibility in debug builds.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// True when `d` divides `self`.
    pub fn divisible_by(&self, d: &Poly) -> bool {
        self.rem(d).is_zero()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.fq.inv(self.lc()))
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s·self + t·o = g, g the monic gcd.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let k = &self.fq;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(k), Poly::zero(k));
        let (mut t0, mut t1) = (Poly::zero(k), Poly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let s = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = k.inv(r0.lc());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// Inverse modulo `m`, if `self` is a unit there.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        if g.is_one() {
            Some(s.rem(m))
        } else if m.deg() == Some(0) {
            Some(Poly::zero(&self.fq))
        } else {
            None
        }
    }

    pub fn mul_mod(&self, o: &Poly, m: &Poly) -> Poly {
        self.mul(o).rem(m)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.fq);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.fq).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let k = &self.fq;
        self.c
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// Evaluate at a polynomial argument modulo `m`.
    pub fn eval_mod(&self, x: &Poly, m: &Poly) -> Poly {
        let k = &self.fq;
        self.c.iter().rev().fold(Poly::zero(k), |acc, &c| {
            acc.mul_mod(x, m).add(&Poly::constant(k, c)).rem(m)
        })
    }

    pub fn derivative(&self) -> Poly {
        let k = &self.fq;
        let c = (1..self.c.len())
            .map(|i| k.mul(self.c[i], k.from_int((i % k.p() as usize) as i64)))
            .collect();
        Poly::from_coeffs(k, c)
    }

    /// p-th root of a polynomial in x^p (coefficient-wise inverse Frobenius).
    pub fn pth_root(&self) -> Poly {
        let k = &self.fq;
        let p = k.p() as usize;
        let e = (k.q() / k.p()) as u64;
        let c = (0..self.c.len())
            .step_by(p)
            .map(|i| {
                debug_assert!((1..p).all(|j| self.coeff(i + j).is_zero()));
                k.pow(self.c[i], e)
            })
            .collect();
        Poly::from_coeffs(k, c)
    }

    /// Largest e with π^e | self, for nonzero self and nonconstant π.
    pub fn multiplicity(&self, pi: &Poly) -> u32 {
        let mut e = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(pi);
            if !r.is_zero() {
                return e;
            }
            cur = q;
            e += 1;
        }
    }

    /// Format with the given variable name; coefficients use the F_q printer.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let k = &self.fq;
        let mut terms = Vec::new();
        for i in (0..self.c.len()).rev() {
            let c = self.c[i];
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = k.fmt_elem(c);
            let cs = if cs.contains('+') {
                format!("({cs})")
            } else {
                cs
            };
            terms.push(match (c == Fe::ONE, i) {
                (_, 0) => cs,
                (true, _) => mono,
                (false, _) => format!("{cs}*{mono}"),
            });
        }
        terms.join("+")
    }
}

impl PartialEq for Poly {
    fn eq(&self, o: &Poly) -> bool {
        self.c == o.c
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.c.hash(h);
    }
}

/// Order by degree, then coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, o: &Poly) -> Ordering {
        self.c
            .len()
            .cmp(&o.c.len())
            .then_with(|| self.c.iter().rev().cmp(o.c.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, o: &Poly) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.fmt_var("x"))
    }
}

// Operators are provided on references only, so that method calls like `a.mul(&b)`
// on owned values resolve to the inherent methods.
macro_rules! poly_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                Poly::$f(self, o)
            }
        }
    };
}

poly_binop!(Add, add, add);
poly_binop!(Sub, sub, sub);
poly_binop!(Mul, mul, mul);
poly_binop!(Rem, rem, rem);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}
