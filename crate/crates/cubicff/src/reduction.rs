//! Artin–Schreier reduction (r = p) and its generalization for X³ + aX + a² in
//! characteristic 3: change the parameter within its class until every pole
//! order is prime to r.

use crate::algebra::{poly_crt, residue_root, Fe, Fq, Poly};
use crate::ratfunc::{Place, RatFn};

/// z = scale·y + offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub scale: RatFn,
    pub offset: RatFn,
}

impl AffineMap {
    pub fn identity(a: &RatFn) -> AffineMap {
        AffineMap {
            scale: RatFn::one(a.field()),
            offset: RatFn::zero(a.field()),
        }
    }

    /// The map `self` followed by `then`.
    pub fn then(&self, then: &AffineMap) -> AffineMap {
        AffineMap {
            scale: then.scale.mul(&self.scale),
            offset: then.scale.mul(&self.offset).add(&then.offset),
        }
    }
}

/// One reduction pass: the correction w subtracted at `place`, built from the
/// residue-field root `m` with exponent λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub place: Place,
    pub m: Poly,
    pub lambda: i64,
    pub w: RatFn,
}

/// Result of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASReduced {
    /// The reduced parameter.
    pub b: RatFn,
    /// η with b = a + η^r − η (Artin–Schreier case; zero for `gas_reduce`).
    pub shift: RatFn,
    /// The generator change y ↦ z with z a root of X³ + bX + b² (`gas_reduce` only).
    pub map: Option<AffineMap>,
    pub history: Vec<ReductionStep>,
    /// Set by `gas_reduce` when no global parameter is reduced at infinity: the
    /// pole order at infinity of a parameter reduced there only (0 if none).
    pub infinity_local_degree: Option<i64>,
}

impl ASReduced {
    /// Pole order at infinity of a parameter reduced at infinity (0 if none).
    pub fn degree_at_infinity(&self) -> i64 {
        self.infinity_local_degree.unwrap_or(self.b.deg().max(0))
    }
}

/// True when every pole order of `b`, infinity included, is prime to r.
pub fn is_reduced(b: &RatFn, r: i64) -> bool {
    if b.is_zero() {
        return true;
    }
    b.support().iter().all(|(_, v)| *v >= 0 || v % r != 0)
}

/// Leading coefficient of the Laurent expansion of `a` at the finite place π,
/// where v_π(a) = −k.
fn leading_residue(a: &RatFn, pi: &Poly, k: i64) -> Poly {
    a.mul_poly(&pi.pow(k as u64))
        .residue_at(&Place::Finite(pi.clone()))
        .expect("pole order k")
}

/// Ratio of leading coefficients, as a constant.
fn leading_coeff(a: &RatFn) -> crate::algebra::Fe {
    a.field().div(a.num().lc(), a.den().lc())
}

/// Artin–Schreier reduction of `a` for r = p: returns b = a + η^r − η with every
/// pole order of b prime to r.
pub fn as_reduce(a: &RatFn, r: u32) -> ASReduced {
    let fq = a.field().clone();
    assert_eq!(r, fq.p(), "Artin–Schreier reduction needs r = p");
    let ri = r as i64;
    let mut cur = a.clone();
    let mut eta = RatFn::zero(&fq);
    let mut history = Vec::new();
    if a.is_zero() {
        return ASReduced {
            b: cur,
            shift: eta,
            map: None,
            history,
            infinity_local_degree: None,
        };
    }
    // Corrections only have poles at the place being treated, so the finite pole
    // set never grows.
    for (pl, _) in a.finite_poles() {
        let Place::Finite(pi) = &pl else {
            unreachable!()
        };
        while let Some(v) = cur.val(&pl) {
            if v >= 0 || v % ri != 0 {
                break;
            }
            let lambda = -v / ri;
            let t0 = leading_residue(&cur, pi, -v);
            let m = residue_root(pi, &t0, r as u64, 1).expect("p-th roots exist");
            let w = RatFn::new(m.clone(), pi.pow(lambda as u64));
            cur = cur.sub(&w.pow(ri)).add(&w);
            eta = eta.sub(&w);
            history.push(ReductionStep {
                place: pl.clone(),
                m,
                lambda,
                w,
            });
        }
    }
    while !cur.is_zero() && cur.deg() > 0 && cur.deg() % ri == 0 {
        let t = cur.deg() / ri;
        let beta = fq
            .const_nth_root(leading_coeff(&cur), r as u64)
            .expect("p-th roots exist");
        let m = Poly::monomial(&fq, beta, t as usize);
        let w = RatFn::from_poly(m.clone());
        cur = cur.sub(&w.pow(ri)).add(&w);
        eta = eta.sub(&w);
        history.push(ReductionStep {
            place: Place::Infinity,
            m,
            lambda: t,
            w,
        });
    }
    debug_assert_eq!(cur, a.add(&eta.pow(ri)).sub(&eta));
    ASReduced {
        b: cur,
        shift: eta,
        map: None,
        history,
        infinity_local_degree: None,
    }
}

/// One generator change of X³ + aX + a²: with N = a² + w³ + aw the element
/// z = (N/a²)(y − w) has minimal polynomial X³ + a₂X + a₂², a₂ = N²/a³.
fn gas_step(a: &RatFn, w: &RatFn) -> (RatFn, AffineMap) {
    let a2 = a.mul(a);
    let n = a2.add(&w.pow(3)).add(&a.mul(w));
    let scale = n.div(&a2);
    let map = AffineMap {
        offset: scale.mul(w).neg(),
        scale,
    };
    (n.mul(&n).div(&a.pow(3)), map)
}

/// ∏ Q^⌈k/2⌉ over the factors Q^k of `p`; a squarefree decomposition is enough.
fn half_power(p: &Poly, round_up: bool) -> Poly {
    p.monic()
        .squarefree()
        .into_iter()
        .fold(Poly::one(p.field()), |acc, (s, k)| {
            acc.mul(&s.pow(((k + round_up as u32) / 2) as u64))
        })
}

/// Generalized Artin–Schreier reduction in characteristic 3.
///
/// Finite places are always reduced globally. At infinity a global correction
/// exists only when the degree budget allows it; otherwise `infinity_local`
/// carries a parameter reduced at infinity.
pub fn gas_reduce(a: &RatFn) -> ASReduced {
    let fq = a.field().clone();
    assert_eq!(fq.p(), 3, "generalized reduction is for characteristic 3");
    assert!(!a.is_zero(), "gas_reduce needs a nonzero parameter");
    let mut cur = a.clone();
    let mut map = AffineMap::identity(a);
    let mut history = Vec::new();
    for (pl, _) in a.finite_poles() {
        let Place::Finite(pi) = &pl else {
            unreachable!()
        };
        loop {
            let v = cur.val(&pl).expect("nonzero");
            if v >= 0 || v % 3 != 0 {
                break;
            }
            let lambda = -v / 3;
            let t0 = leading_residue(&cur, pi, -v);
            let m = residue_root(pi, &t0.mul_mod(&t0, pi), 3, -1).expect("cube roots exist");
            // Keep the other finite places reduced: w must vanish to order ⌈k/2⌉
            // at every zero of order k.
            let pairs = [
                (m, pi.clone()),
                (Poly::zero(&fq), half_power(cur.num(), true)),
            ];
            let big_m = poly_crt(&pairs).expect("zeros and poles are coprime");
            let w = RatFn::new(big_m.clone(), pi.pow(2 * lambda as u64));
            let before = v;
            let (next, step) = gas_step(&cur, &w);
            cur = next;
            map = map.then(&step);
            debug_assert!(cur.val(&pl).unwrap() > before);
            history.push(ReductionStep {
                place: pl.clone(),
                m: big_m,
                lambda,
                w,
            });
        }
    }
    let mut infinity_local_degree = None;
    while cur.deg() > 0 && cur.deg() % 3 == 0 {
        let t = cur.deg() / 3;
        let beta = fq
            .const_nth_root(fq.neg(fq.pow(leading_coeff(&cur), 2)), 3)
            .expect("cube roots exist in characteristic 3");
        let z = half_power(cur.num(), true);
        let pd = half_power(cur.den(), false);
        let deg_h = 2 * t - z.degree() + pd.degree();
        if deg_h < 0 {
            infinity_local_degree = Some(degree_after_local_reduction(&cur));
            break;
        }
        let h = Poly::monomial(&fq, beta, deg_h as usize);
        let w = RatFn::new(z.mul(&h), pd);
        let (next, step) = gas_step(&cur, &w);
        debug_assert!(next.deg() < cur.deg());
        cur = next;
        map = map.then(&step);
        history.push(ReductionStep {
            place: Place::Infinity,
            m: h,
            lambda: t,
            w,
        });
    }
    ASReduced {
        b: cur,
        shift: RatFn::zero(&fq),
        map: Some(map),
        history,
        infinity_local_degree,
    }
}

/// Truncated Laurent series at infinity: the coefficients of x^top, x^(top−1), …
#[derive(Clone, Debug)]
struct Series {
    top: i64,
    c: Vec<Fe>,
}

impl Series {
    fn low(&self) -> i64 {
        self.top - self.c.len() as i64 + 1
    }

    /// Drop leading zeros; the known precision `low` is unchanged.
    fn normalize(mut self) -> Series {
        let k = self.c.iter().take_while(|c| c.is_zero()).count();
        self.c.drain(..k);
        self.top -= k as i64;
        self
    }

    fn from_poly(p: &Poly, len: usize) -> Series {
        let fq = p.field();
        let d = p.degree();
        let c = (0..len as i64)
            .map(|i| {
                if d - i >= 0 {
                    p.coeff((d - i) as usize)
                } else {
                    fq.zero()
                }
            })
            .collect();
        Series { top: d, c }
    }

    fn from_ratfn(r: &RatFn, len: usize) -> Series {
        Series::from_poly(r.num(), len)
            .mul(&Series::from_poly(r.den(), len).inv(r.field()), r.field())
    }

    fn add(&self, o: &Series, fq: &Fq) -> Series {
        let top = self.top.max(o.top);
        let low = self.low().max(o.low());
        let at = |s: &Series, e: i64| {
            let i = s.top - e;
            if i >= 0 && (i as usize) < s.c.len() {
                s.c[i as usize]
            } else {
                fq.zero()
            }
        };
        let c = (0..(top - low + 1).max(0))
            .map(|i| fq.add(at(self, top - i), at(o, top - i)))
            .collect();
        Series {
            top: top.max(low - 1),
            c,
        }
        .normalize()
    }

    /// Both factors normalized and nonzero.
    fn mul(&self, o: &Series, fq: &Fq) -> Series {
        let n = self.c.len().min(o.c.len());
        let c = (0..n)
            .map(|k| {
                (0..=k).fold(fq.zero(), |acc, i| {
                    fq.add(acc, fq.mul(self.c[i], o.c[k - i]))
                })
            })
            .collect();
        Series {
            top: self.top + o.top,
            c,
        }
    }

    /// Normalized and nonzero.
    fn inv(&self, fq: &Fq) -> Series {
        let u = fq.inv(self.c[0]);
        let mut b: Vec<Fe> = vec![u];
        for k in 1..self.c.len() {
            let s = (1..=k).fold(fq.zero(), |acc, i| fq.add(acc, fq.mul(self.c[i], b[k - i])));
            b.push(fq.neg(fq.mul(u, s)));
        }
        Series {
            top: -self.top,
            c: b,
        }
    }
}

/// Reduce `a` at infinity only and return the resulting pole order there.
///
/// Exact generator changes blow up at the finite places, so the steps run on
/// Laurent series. A step lowering the degree from d to d′ costs (d − d′)/2
/// terms of relative precision, so deg a + 3 terms always suffice.
fn degree_after_local_reduction(a: &RatFn) -> i64 {
    let fq = a.field().clone();
    let len = (a.deg().max(0) + 3) as usize;
    let mut s = Series::from_ratfn(a, len).normalize();
    loop {
        if s.c.is_empty() || s.top <= 0 {
            return 0;
        }
        if s.top % 3 != 0 {
            return s.top;
        }
        let t = s.top / 3;
        let beta = fq
            .const_nth_root(fq.neg(fq.pow(s.c[0], 2)), 3)
            .expect("cube roots exist in characteristic 3");
        let mut wc = vec![fq.zero(); len];
        wc[0] = beta;
        let w = Series { top: 2 * t, c: wc };
        let s2 = s.mul(&s, &fq);
        let n = s2
            .add(&w.mul(&w, &fq).mul(&w, &fq), &fq)
            .add(&s.mul(&w, &fq), &fq);
        if n.c.is_empty() {
            return 0;
        }
        s = n.mul(&n, &fq).mul(&s2.mul(&s, &fq).inv(&fq), &fq);
    }
}
