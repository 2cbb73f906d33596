//! Reduction of an irreducible cubic to one of the three one-parameter forms,
//! the purity test for X³ − 3X − a, and the Galois and constant-field criteria.

use std::fmt;

use crate::algebra::{monic_irreducibles, Fq, Poly};
use crate::cubic::{Cubic, Elem};
use crate::error::{Error, Result};
use crate::ratfunc::{solve_quadratic, RatFn};

/// y³ + e·y² + f·y + g over F_q(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicInput {
    pub fq: Fq,
    pub e: RatFn,
    pub f: RatFn,
    pub g: RatFn,
}

impl CubicInput {
    pub fn new(e: RatFn, f: RatFn, g: RatFn) -> CubicInput {
        CubicInput {
            fq: e.field().clone(),
            e,
            f,
            g,
        }
    }

    pub fn cubic(&self) -> Cubic {
        Cubic::new(self.g.clone(), self.f.clone(), self.e.clone())
    }
}

/// The canonical forms: X³ − a and X³ − 3X − a (p ≠ 3), X³ + aX + a² (p = 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalForm {
    Pure(RatFn),
    Impure(RatFn),
    CharThree(RatFn),
}

impl CanonicalForm {
    pub fn param(&self) -> &RatFn {
        match self {
            CanonicalForm::Pure(a) | CanonicalForm::Impure(a) | CanonicalForm::CharThree(a) => a,
        }
    }

    pub fn cubic(&self) -> Cubic {
        match self {
            CanonicalForm::Pure(a) => Cubic::pure(a),
            CanonicalForm::Impure(a) => Cubic::impure(a),
            CanonicalForm::CharThree(a) => Cubic::char3(a),
        }
    }

    /// "pure", "impure" or "char3".
    pub fn name(&self) -> &'static str {
        match self {
            CanonicalForm::Pure(_) => "pure",
            CanonicalForm::Impure(_) => "impure",
            CanonicalForm::CharThree(_) => "char3",
        }
    }

    /// The form as an input cubic in y.
    pub fn as_input(&self) -> CubicInput {
        let [c0, c1, c2] = self.cubic().c;
        CubicInput::new(c2, c1, c0)
    }
}

/// z = (u1·y + u0)/(w1·y + w0), normalized so that w1 = 1, or w1 = 0 and w0 = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    pub u1: RatFn,
    pub u0: RatFn,
    pub w1: RatFn,
    pub w0: RatFn,
}

impl GeneratorMap {
    pub fn new(u1: RatFn, u0: RatFn, w1: RatFn, w0: RatFn) -> GeneratorMap {
        let lead = if w1.is_zero() { w0.clone() } else { w1.clone() };
        assert!(!lead.is_zero(), "degenerate generator map");
        let inv = lead.inv();
        GeneratorMap {
            u1: u1.mul(&inv),
            u0: u0.mul(&inv),
            w1: w1.mul(&inv),
            w0: w0.mul(&inv),
        }
    }

    pub fn identity(fq: &Fq) -> GeneratorMap {
        let (o, z) = (RatFn::one(fq), RatFn::zero(fq));
        GeneratorMap::new(o.clone(), z.clone(), z, o)
    }

    /// z = scale·y + offset.
    pub fn affine(scale: &RatFn, offset: &RatFn) -> GeneratorMap {
        let fq = scale.field();
        GeneratorMap::new(
            scale.clone(),
            offset.clone(),
            RatFn::zero(fq),
            RatFn::one(fq),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.u1.is_one() && self.u0.is_zero() && self.w1.is_zero() && self.w0.is_one()
    }

    /// Apply `self`, then `then`.
    pub fn then(&self, then: &GeneratorMap) -> GeneratorMap {
        let (a, b) = (then, self);
        GeneratorMap::new(
            a.u1.mul(&b.u1).add(&a.u0.mul(&b.w1)),
            a.u1.mul(&b.u0).add(&a.u0.mul(&b.w0)),
            a.w1.mul(&b.u1).add(&a.w0.mul(&b.w1)),
            a.w1.mul(&b.u0).add(&a.w0.mul(&b.w0)),
        )
    }

    /// The image of y under the map, as an element of the algebra of `cubic`.
    pub fn image(&self, cubic: &Cubic) -> Option<Elem> {
        let y = cubic.gen();
        let num = cubic.add(&cubic.scale(&y, &self.u1), &cubic.constant(&self.u0));
        let den = cubic.add(&cubic.scale(&y, &self.w1), &cubic.constant(&self.w0));
        Some(cubic.mul(&num, &cubic.inv(&den)?))
    }

    /// True when the image of a root of `input` is a root of `target`.
    pub fn is_sound(&self, input: &Cubic, target: &Cubic) -> bool {
        match self.image(input) {
            Some(z) => Cubic::is_zero(&input.eval_cubic(target, &z)),
            None => false,
        }
    }
}

fn coeff_str(c: &RatFn) -> String {
    let s = c.to_string();
    if s.contains(['+', '/']) || (s.contains('*') && !c.is_poly()) {
        format!("({s})")
    } else {
        s
    }
}

fn linear_str(u1: &RatFn, u0: &RatFn) -> String {
    let mut parts = Vec::new();
    if !u1.is_zero() {
        parts.push(if u1.is_one() {
            "y".to_string()
        } else {
            format!("{}*y", coeff_str(u1))
        });
    }
    if !u0.is_zero() || parts.is_empty() {
        parts.push(coeff_str(u0));
    }
    parts.join("+")
}

impl fmt::Display for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = linear_str(&self.u1, &self.u0);
        if self.w1.is_zero() {
            return write!(f, "z = {num}");
        }
        let num = if num.contains('+') {
            format!("({num})")
        } else {
            num
        };
        write!(f, "z = {num}/({})", linear_str(&self.w1, &self.w0))
    }
}

/// True when the monic cubic has a root in F_q(x).
///
/// After scaling to an integral cubic a root must be a polynomial of bounded
/// degree. Roots modulo a place π not dividing the discriminant are simple, so
/// they Hensel-lift; the lift to a high enough power of π is the only
/// candidate for a polynomial root.
pub fn has_root(cubic: &Cubic) -> bool {
    let fq = cubic.c[0].field().clone();
    let d = cubic.c.iter().fold(Poly::one(&fq), |acc, c| {
        let g = acc.gcd(c.den());
        acc.mul(&c.den().exact_div(&g))
    });
    let dr = RatFn::from_poly(d);
    let scaled: Vec<Poly> = (0..3)
        .map(|i| {
            let v = cubic.c[i].mul(&dr.pow(3 - i as i64));
            debug_assert!(v.is_poly());
            v.num().clone()
        })
        .collect();
    let (c0, c1, c2) = (&scaled[0], &scaled[1], &scaled[2]);
    if c0.is_zero() {
        return true;
    }
    let monic = |x: &Poly, m: &Poly| -> Poly {
        // X³ + c2 X² + c1 X + c0 evaluated at x modulo m (m zero: exact).
        let terms = [c0.clone(), c1.mul(x), c2.mul(&x.mul(x)), x.mul(x).mul(x)];
        let s = terms.iter().fold(Poly::zero(&fq), |acc, t| acc.add(t));
        if m.is_zero() {
            s
        } else {
            s.rem(m)
        }
    };
    let int_cubic = Cubic::new(
        RatFn::from_poly(c0.clone()),
        RatFn::from_poly(c1.clone()),
        RatFn::from_poly(c2.clone()),
    );
    let disc = int_cubic.discriminant();
    if disc.is_zero() {
        if fq.p() == 3 && c1.is_zero() && c2.is_zero() {
            return RatFn::from_poly(c0.neg()).nth_root(3).is_some();
        }
        return true;
    }
    let disc = disc.num().clone();
    let bound = [c2.degree(), (c1.degree() + 1) / 2, (c0.degree() + 2) / 3]
        .into_iter()
        .max()
        .unwrap()
        .max(0);
    let pi = (1..)
        .find_map(|deg| monic_irreducibles(&fq, deg).find(|pi| !disc.divisible_by(pi)))
        .expect("some place avoids the discriminant");
    let dpi = pi.degree();
    let deriv = |x: &Poly, m: &Poly| -> Poly {
        let three = Poly::constant(&fq, fq.from_int(3));
        let two = Poly::constant(&fq, fq.from_int(2));
        three.mul(&x.mul(x)).add(&two.mul(c2).mul(x)).add(c1).rem(m)
    };
    let residue_roots: Vec<Poly> = if dpi == 1 {
        let t = fq.neg(pi.coeff(0));
        let reduced = Poly::from_coeffs(&fq, vec![c0.eval(t), c1.eval(t), c2.eval(t), fq.one()]);
        reduced
            .roots()
            .into_iter()
            .map(|r| Poly::constant(&fq, r))
            .collect()
    } else {
        residue_classes(&fq, dpi as usize)
            .filter(|r| monic(r, &pi).is_zero())
            .collect()
    };
    for r0 in residue_roots {
        let mut r = r0;
        let mut modulus = pi.clone();
        let mut k = 1;
        while k * dpi <= bound {
            modulus = modulus.mul(&modulus);
            k *= 2;
            let fr = monic(&r, &modulus);
            let inv = deriv(&r, &modulus).inv_mod(&modulus).expect("simple root");
            r = r.sub(&fr.mul_mod(&inv, &modulus)).rem(&modulus);
        }
        if monic(&r, &Poly::zero(&fq)).is_zero() {
            return true;
        }
    }
    false
}

/// Every polynomial of degree < d, i.e. the residue classes modulo a degree-d place.
fn residue_classes(fq: &Fq, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = fq.q() as u64;
    (0..q.pow(d as u32)).map(move |mut k| {
        let c = (0..d)
            .map(|_| {
                let e = fq.elem((k % q) as u32);
                k /= q;
                e
            })
            .collect();
        Poly::from_coeffs(fq, c)
    })
}

/// Validate irreducibility and separability, then reduce to a canonical form.
pub fn classify(input: &CubicInput) -> Result<(CanonicalForm, GeneratorMap)> {
    let fq = &input.fq;
    if has_root(&input.cubic()) {
        return Err(Error::ReducibleInput);
    }
    let (e, f, g) = (&input.e, &input.f, &input.g);
    let k = |v: i64| RatFn::int(fq, v);
    if fq.p() != 3 {
        if e.is_zero() && f == &k(-3) {
            return Ok((CanonicalForm::Impure(g.neg()), GeneratorMap::identity(fq)));
        }
        let g3 = g.mul(&k(3));
        if e.mul(&g3) == f.mul(f) {
            let den = f.pow(3).sub(&g.mul(g).mul(&k(27)));
            assert!(!den.is_zero(), "denominator vanishes on irreducible input");
            let a = g.pow(3).mul(&k(27)).div(&den);
            let map = GeneratorMap::new(g3.clone(), RatFn::zero(fq), f.clone(), g3);
            return Ok((CanonicalForm::Pure(a), map));
        }
        let s = g
            .mul(g)
            .mul(&k(27))
            .sub(&e.mul(f).mul(g).mul(&k(9)))
            .add(&f.pow(3).mul(&k(2)));
        assert!(
            !s.is_zero(),
            "27g² − 9efg + 2f³ vanishes on irreducible input"
        );
        let t = e.mul(&g3).sub(&f.mul(f));
        let a = k(-2).add(&s.mul(&s).div(&t.pow(3)).neg());
        let u1 = e
            .mul(f)
            .mul(g)
            .mul(&k(6))
            .sub(&f.pow(3))
            .sub(&g.mul(g).mul(&k(27)))
            .neg();
        let u0 = g3.mul(&t);
        let map = GeneratorMap::new(u1, u0, t.mul(f), t.mul(&g3));
        return Ok((CanonicalForm::Impure(a), map));
    }
    match (e.is_zero(), f.is_zero()) {
        (true, true) => Err(Error::InseparableInput),
        (true, false) => {
            let a = g.mul(g).div(&f.pow(3));
            let map = GeneratorMap::affine(&g.div(&f.mul(f)), &RatFn::zero(fq));
            Ok((CanonicalForm::CharThree(a), map))
        }
        (false, true) => {
            let a = g.div(&e.pow(3));
            let z = RatFn::zero(fq);
            let map = GeneratorMap::new(z.clone(), g.clone(), e.mul(e), z);
            Ok((CanonicalForm::CharThree(a), map))
        }
        (false, false) => {
            let n = f
                .mul(f)
                .mul(&e.mul(e))
                .neg()
                .add(&g.mul(&e.pow(3)))
                .add(&f.pow(3));
            assert!(
                !n.is_zero(),
                "−f²e² + ge³ + f³ vanishes on irreducible input"
            );
            let a = n.div(&e.pow(6));
            let e4 = e.pow(4);
            let map = GeneratorMap::new(RatFn::zero(fq), n, e4.mul(e), e4.mul(f).neg());
            Ok((CanonicalForm::CharThree(a), map))
        }
    }
}

/// For X³ − 3X − a with p ≠ 3: a root c of X² + aX + 1 in F_q(x), if any, and the
/// map U = (cY − 1)/(Y − c) with U³ = c.
pub fn purity_test(a: &RatFn) -> Option<(RatFn, GeneratorMap)> {
    let fq = a.field();
    assert_ne!(fq.p(), 3, "purity test is for p ≠ 3");
    let c = solve_quadratic(a, &RatFn::one(fq))?;
    let map = GeneratorMap::new(c.clone(), RatFn::int(fq, -1), RatFn::one(fq), c.neg());
    Some((c, map))
}

/// Galois criterion for each form.
pub fn is_galois(form: &CanonicalForm) -> bool {
    match form {
        CanonicalForm::Pure(a) => a.field().q() % 3 == 1,
        CanonicalForm::Impure(a) => {
            let fq = a.field();
            if fq.p() == 2 {
                solve_quadratic(a, &RatFn::one(fq).add(&a.mul(a))).is_some()
            } else {
                let d = a.mul(a).sub(&RatFn::int(fq, 4)).mul(&RatFn::int(fq, -27));
                d.sqrt().is_some()
            }
        }
        CanonicalForm::CharThree(a) => a.neg().sqrt().is_some(),
    }
}

/// X³ − a defines a constant field extension exactly when a = u·b³.
pub fn is_constant_pure(a: &RatFn) -> bool {
    a.cube_unit_decompose().is_some()
}
