//! Partial fractions and root extraction (square, cube, quadratic) in F_q(x).

use super::RatFn;
use crate::algebra::{Fe, Poly};
use crate::reduction::as_reduce;

/// One term t/π^k of a partial fraction decomposition, deg t < deg π.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfTerm {
    pub pi: Poly,
    pub k: u32,
    pub t: Poly,
}

/// a = poly_part + Σ t/π^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub poly_part: Poly,
    pub terms: Vec<PfTerm>,
}

impl PartialFractions {
    /// Resum the decomposition.
    pub fn sum(&self) -> RatFn {
        self.terms
            .iter()
            .fold(RatFn::from_poly(self.poly_part.clone()), |acc, term| {
                acc.add(&RatFn::new(term.t.clone(), term.pi.pow(term.k as u64)))
            })
    }
}

/// The monic n-th root of a monic polynomial, when it is an n-th power.
fn monic_nth_root(f: &Poly, n: u32) -> Option<Poly> {
    let mut root = Poly::one(f.field());
    for (s, e) in f.squarefree() {
        if e % n != 0 {
            return None;
        }
        root = root.mul(&s.pow((e / n) as u64));
    }
    Some(root)
}

impl RatFn {
    /// Decompose over the irreducible factors of the denominator, terms sorted
    /// by place and then by decreasing exponent.
    pub fn partial_fractions(&self) -> PartialFractions {
        let (poly_part, r) = self.num().div_rem(self.den());
        let mut terms = Vec::new();
        if !r.is_zero() {
            for (pi, e) in self.den().factor().factors {
                let pe = pi.pow(e as u64);
                let cofactor = self.den().exact_div(&pe);
                let inv = cofactor.inv_mod(&pe).expect("coprime factors");
                let mut a = r.mul_mod(&inv, &pe);
                // π-adic digits of a give the numerators from the top exponent down.
                let mut k = e;
                while !a.is_zero() {
                    let (q, t) = a.div_rem(&pi);
                    if !t.is_zero() {
                        terms.push(PfTerm {
                            pi: pi.clone(),
                            k,
                            t,
                        });
                    }
                    a = q;
                    k -= 1;
                }
            }
        }
        terms.sort_by(|a, b| a.pi.cmp(&b.pi).then(b.k.cmp(&a.k)));
        PartialFractions { poly_part, terms }
    }

    /// An n-th root, when one exists; the constant factor is the least root in F_q.
    pub fn nth_root(&self, n: u32) -> Option<RatFn> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let fq = self.field();
        let lc = self.num().lc();
        let u = fq.const_nth_root(lc, n as u64)?;
        let num = monic_nth_root(&self.num().scale(fq.inv(lc)), n)?;
        let den = monic_nth_root(self.den(), n)?;
        Some(RatFn::new(num.scale(u), den))
    }

    /// Square root, absent when `self` is not a square. Unique in characteristic 2.
    pub fn sqrt(&self) -> Option<RatFn> {
        self.nth_root(2)
    }

    /// Split a = u·b³ with u ∈ F_q* and b monic over monic, when every exponent
    /// of a is divisible by 3.
    pub fn cube_unit_decompose(&self) -> Option<(Fe, RatFn)> {
        if self.is_zero() {
            return None;
        }
        let fq = self.field();
        let lc = self.num().lc();
        let num = monic_nth_root(&self.num().scale(fq.inv(lc)), 3)?;
        let den = monic_nth_root(self.den(), 3)?;
        Some((lc, RatFn::new(num, den)))
    }
}

/// A root of X² + a1·X + a0 in F_q(x), the one with least numerator.
pub fn solve_quadratic(a1: &RatFn, a0: &RatFn) -> Option<RatFn> {
    let fq = a1.field();
    let roots = if fq.p() != 2 {
        let disc = a1.mul(a1).sub(&a0.scale(fq.from_int(4)));
        let s = disc.sqrt()?;
        let half = fq.inv(fq.from_int(2));
        let minus = a1.neg();
        [minus.add(&s).scale(half), minus.sub(&s).scale(half)]
    } else if a1.is_zero() {
        let r = a0.sqrt()?;
        [r.clone(), r]
    } else {
        // X = a1·W turns the equation into W² + W = a0/a1².
        let c = a0.div(&a1.mul(a1));
        let red = as_reduce(&c, 2);
        let b = &red.b;
        if !b.is_constant() {
            return None;
        }
        let z = fq.solve_const_artin_schreier(b.num().coeff(0))?;
        // b = c + η² + η, so W = z + η solves W² + W = c.
        let w = RatFn::constant(fq, z).add(&red.shift);
        let r = a1.mul(&w);
        [r.add(a1), r]
    };
    let [r1, r2] = roots;
    let best = if r1 <= r2 { r1 } else { r2 };
    debug_assert!(best.mul(&best).add(&a1.mul(&best)).add(a0).is_zero());
    Some(best)
}

/// The same as [`RatFn::sqrt`], as a free function.
pub fn sqrt_ratfn(a: &RatFn) -> Option<RatFn> {
    a.sqrt()
}
