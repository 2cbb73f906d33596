//! The rational function field F_q(x), its places, and root extraction in it.

mod place;
mod roots;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::algebra::{Fe, Fq, Poly};
use crate::error::{Error, Result};

pub use place::Place;
pub use roots::{solve_quadratic, sqrt_ratfn, PartialFractions, PfTerm};

/// A reduced fraction num/den with den monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// Normalize num/den. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> RatFn {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFn::zero(num.field());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.exact_div(&g), den.exact_div(&g));
        let lc = d.lc();
        if lc != Fe::ONE {
            let inv = n.field().inv(lc);
            n = n.scale(inv);
            d = d.scale(inv);
        }
        RatFn { num: n, den: d }
    }

    /// num/den already coprime: only make the denominator monic.
    fn from_coprime(num: Poly, den: Poly) -> RatFn {
        if num.is_zero() {
            return RatFn::zero(num.field());
        }
        let lc = den.lc();
        if lc == Fe::ONE {
            return RatFn { num, den };
        }
        let inv = num.field().inv(lc);
        RatFn {
            num: num.scale(inv),
            den: den.scale(inv),
        }
    }

    pub fn from_poly(p: Poly) -> RatFn {
        let den = Poly::one(p.field());
        RatFn { num: p, den }
    }

    pub fn zero(fq: &Fq) -> RatFn {
        RatFn::from_poly(Poly::zero(fq))
    }

    pub fn one(fq: &Fq) -> RatFn {
        RatFn::from_poly(Poly::one(fq))
    }

    pub fn constant(fq: &Fq, c: Fe) -> RatFn {
        RatFn::from_poly(Poly::constant(fq, c))
    }

    pub fn int(fq: &Fq, v: i64) -> RatFn {
        RatFn::constant(fq, fq.from_int(v))
    }

    pub fn x(fq: &Fq) -> RatFn {
        RatFn::from_poly(Poly::x(fq))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &Fq {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    /// deg num − deg den, i.e. −v_∞. Panics on zero.
    pub fn deg(&self) -> i64 {
        assert!(!self.is_zero(), "degree of zero rational function");
        self.num.degree() - self.den.degree()
    }

    // Henrici's cancellations: gcds of the small factors instead of the products.
    pub fn add(&self, o: &RatFn) -> RatFn {
        let g = self.den.gcd(&o.den);
        let (d1, d2) = (self.den.exact_div(&g), o.den.exact_div(&g));
        let t = self.num.mul(&d2).add(&o.num.mul(&d1));
        if g.is_one() {
            return RatFn::from_coprime(t, d1.mul(&d2));
        }
        let g2 = t.gcd(&g);
        RatFn::from_coprime(t.exact_div(&g2), d1.mul(&o.den.exact_div(&g2)))
    }

    pub fn sub(&self, o: &RatFn) -> RatFn {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero(self.field());
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        RatFn::from_coprime(
            self.num.exact_div(&g1).mul(&o.num.exact_div(&g2)),
            self.den.exact_div(&g2).mul(&o.den.exact_div(&g1)),
        )
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> RatFn {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFn::new(self.den.clone(), self.num.clone())
    }

    /// Quotient. Panics if `o` is zero.
    pub fn div(&self, o: &RatFn) -> RatFn {
        self.mul(&o.inv())
    }

    pub fn scale(&self, c: Fe) -> RatFn {
        RatFn::new(self.num.scale(c), self.den.clone())
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFn {
        RatFn::new(self.num.mul(p), self.den.clone())
    }

    pub fn div_poly(&self, p: &Poly) -> RatFn {
        RatFn::new(self.num.clone(), self.den.mul(p))
    }

    /// Integer power; negative exponents invert (panics on zero).
    pub fn pow(&self, e: i64) -> RatFn {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs();
        RatFn {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
    }

    /// Exact valuation at a place.
    pub fn valuation(&self, pl: &Place) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(match pl {
            Place::Infinity => -self.deg(),
            Place::Finite(pi) => {
                self.num.multiplicity(pi) as i64 - self.den.multiplicity(pi) as i64
            }
        })
    }

    /// Valuation with +∞ for zero, as `None`.
    pub fn val(&self, pl: &Place) -> Option<i64> {
        self.valuation(pl).ok()
    }

    /// Image in the residue field at `pl`: a polynomial reduced mod π, or a
    /// constant at infinity.
    pub fn residue_at(&self, pl: &Place) -> Result<Poly> {
        let fq = self.field();
        if self.is_zero() {
            return Ok(Poly::zero(fq));
        }
        let v = self.valuation(pl)?;
        if v < 0 {
            return Err(Error::NegativeValuation);
        }
        if v > 0 {
            return Ok(Poly::zero(fq));
        }
        Ok(match pl {
            Place::Infinity => Poly::constant(fq, fq.div(self.num.lc(), self.den.lc())),
            Place::Finite(pi) => {
                let inv = self.den.inv_mod(pi).expect("denominator is a unit at pl");
                self.num.mul_mod(&inv, pi)
            }
        })
    }

    /// Finite places where the valuation is nonzero, with that valuation, sorted.
    pub fn finite_support(&self) -> Vec<(Place, i64)> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out: Vec<(Place, i64)> = self
            .num
            .factor()
            .factors
            .into_iter()
            .map(|(f, e)| (Place::Finite(f), e as i64))
            .chain(
                self.den
                    .factor()
                    .factors
                    .into_iter()
                    .map(|(f, e)| (Place::Finite(f), -(e as i64))),
            )
            .collect();
        out.sort();
        out
    }

    /// Every place (infinity last) where the valuation is nonzero.
    pub fn support(&self) -> Vec<(Place, i64)> {
        let mut out = self.finite_support();
        if !self.is_zero() && self.deg() != 0 {
            out.push((Place::Infinity, -self.deg()));
        }
        out
    }

    /// Finite poles with their (negative) valuations.
    pub fn finite_poles(&self) -> Vec<(Place, i64)> {
        let mut out: Vec<(Place, i64)> = self
            .den
            .factor()
            .factors
            .into_iter()
            .map(|(f, e)| (Place::Finite(f), -(e as i64)))
            .collect();
        out.sort();
        out
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let n = self.num.fmt_var(var);
        if self.den.is_one() {
            return n;
        }
        let n = if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({n})")
        } else {
            n
        };
        let d = self.den.fmt_var(var);
        let d = if d.contains(['+', '*', '^']) {
            format!("({d})")
        } else {
            d
        };
        format!("{n}/{d}")
    }
}

/// Order by numerator, then denominator.
impl Ord for RatFn {
    fn cmp(&self, o: &RatFn) -> Ordering {
        self.num.cmp(&o.num).then_with(|| self.den.cmp(&o.den))
    }
}

impl PartialOrd for RatFn {
    fn partial_cmp(&self, o: &RatFn) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

macro_rules! ratfn_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&RatFn> for &RatFn {
            type Output = RatFn;
            fn $m(self, o: &RatFn) -> RatFn {
                RatFn::$m(self, o)
            }
        }
    };
}

ratfn_binop!(Add, add);
ratfn_binop!(Sub, sub);
ratfn_binop!(Mul, mul);
ratfn_binop!(Div, div);

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn::neg(self)
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> RatFn {
        RatFn::from_poly(p)
    }
}
