//! Arithmetic in the cubic algebra K[y]/(y³ + c₂y² + c₁y + c₀), K = F_q(x).

use crate::ratfunc::RatFn;

/// A monic cubic over K, coefficients low to high: y³ + c[2]y² + c[1]y + c[0].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cubic {
    pub c: [RatFn; 3],
}

/// An element e[0] + e[1]y + e[2]y² of the algebra.
pub type Elem = [RatFn; 3];

impl Cubic {
    pub fn new(c0: RatFn, c1: RatFn, c2: RatFn) -> Cubic {
        Cubic { c: [c0, c1, c2] }
    }

    /// X³ − a.
    pub fn pure(a: &RatFn) -> Cubic {
        let z = RatFn::zero(a.field());
        Cubic::new(a.neg(), z.clone(), z)
    }

    /// X³ − 3X − a.
    pub fn impure(a: &RatFn) -> Cubic {
        let fq = a.field();
        Cubic::new(a.neg(), RatFn::int(fq, -3), RatFn::zero(fq))
    }

    /// X³ + aX + a².
    pub fn char3(a: &RatFn) -> Cubic {
        Cubic::new(a.mul(a), a.clone(), RatFn::zero(a.field()))
    }

    pub fn zero(&self) -> Elem {
        let z = RatFn::zero(self.c[0].field());
        [z.clone(), z.clone(), z]
    }

    pub fn one(&self) -> Elem {
        let mut e = self.zero();
        e[0] = RatFn::one(self.c[0].field());
        e
    }

    /// The class of y.
    pub fn gen(&self) -> Elem {
        let mut e = self.zero();
        e[1] = RatFn::one(self.c[0].field());
        e
    }

    pub fn constant(&self, k: &RatFn) -> Elem {
        let mut e = self.zero();
        e[0] = k.clone();
        e
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        [a[0].add(&b[0]), a[1].add(&b[1]), a[2].add(&b[2])]
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        [a[0].sub(&b[0]), a[1].sub(&b[1]), a[2].sub(&b[2])]
    }

    pub fn scale(&self, a: &Elem, k: &RatFn) -> Elem {
        [a[0].mul(k), a[1].mul(k), a[2].mul(k)]
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let fq = self.c[0].field();
        let mut prod = vec![RatFn::zero(fq); 5];
        for i in 0..3 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if !b[j].is_zero() {
                    prod[i + j] = prod[i + j].add(&a[i].mul(&b[j]));
                }
            }
        }
        // y³ = −(c₂y² + c₁y + c₀).
        for k in (3..5).rev() {
            let t = std::mem::replace(&mut prod[k], RatFn::zero(fq));
            if t.is_zero() {
                continue;
            }
            for i in 0..3 {
                prod[k - 3 + i] = prod[k - 3 + i].sub(&t.mul(&self.c[i]));
            }
        }
        [prod[0].clone(), prod[1].clone(), prod[2].clone()]
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Matrix of multiplication by `a` on the basis 1, y, y² (column j is a·y^j).
    fn mult_matrix(&self, a: &Elem) -> [[RatFn; 3]; 3] {
        let mut cols = Vec::with_capacity(3);
        let mut cur = a.clone();
        for _ in 0..3 {
            cols.push(cur.clone());
            cur = self.mul(&cur, &self.gen());
        }
        let m = |i: usize, j: usize| cols[j][i].clone();
        [
            [m(0, 0), m(0, 1), m(0, 2)],
            [m(1, 0), m(1, 1), m(1, 2)],
            [m(2, 0), m(2, 1), m(2, 2)],
        ]
    }

    /// (s₀, s₁, s₂) with X³ + s₂X² + s₁X + s₀ the characteristic polynomial of `a`.
    pub fn char_poly(&self, a: &Elem) -> [RatFn; 3] {
        let m = self.mult_matrix(a);
        let tr = m[0][0].add(&m[1][1]).add(&m[2][2]);
        let minor = |i: usize, j: usize| m[i][i].mul(&m[j][j]).sub(&m[i][j].mul(&m[j][i]));
        let s1 = minor(0, 1).add(&minor(0, 2)).add(&minor(1, 2));
        [det3(&m).neg(), s1, tr.neg()]
    }

    pub fn trace(&self, a: &Elem) -> RatFn {
        self.char_poly(a)[2].neg()
    }

    pub fn norm(&self, a: &Elem) -> RatFn {
        self.char_poly(a)[0].neg()
    }

    /// Inverse via Cayley–Hamilton; `None` for zero divisors.
    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        let [s0, s1, s2] = self.char_poly(a);
        if s0.is_zero() {
            return None;
        }
        // a(a² + s₂a + s₁) = −s₀.
        let a2 = self.mul(a, a);
        let inner = self.add(&self.add(&a2, &self.scale(a, &s2)), &self.constant(&s1));
        Some(self.scale(&inner, &s0.inv().neg()))
    }

    /// Evaluate a monic cubic X³ + k₂X² + k₁X + k₀ at `a`.
    pub fn eval_cubic(&self, other: &Cubic, a: &Elem) -> Elem {
        let a2 = self.mul(a, a);
        let a3 = self.mul(&a2, a);
        let mut out = self.add(&a3, &self.scale(&a2, &other.c[2]));
        out = self.add(&out, &self.scale(a, &other.c[1]));
        self.add(&out, &self.constant(&other.c[0]))
    }

    /// The discriminant of the cubic.
    pub fn discriminant(&self) -> RatFn {
        let [c0, c1, c2] = &self.c;
        let fq = c0.field();
        let k = |v: i64| RatFn::int(fq, v);
        // 18abcd − 4b³d + b²c² − 4ac³ − 27a²d² with a = 1, b = c₂, c = c₁, d = c₀.
        c2.mul(c1)
            .mul(c0)
            .mul(&k(18))
            .sub(&c2.pow(3).mul(c0).mul(&k(4)))
            .add(&c2.pow(2).mul(&c1.pow(2)))
            .sub(&c1.pow(3).mul(&k(4)))
            .sub(&c0.pow(2).mul(&k(27)))
    }

    pub fn is_zero(a: &Elem) -> bool {
        a.iter().all(|c| c.is_zero())
    }
}

/// Determinant of a 3×3 matrix over K.
pub fn det3(m: &[[RatFn; 3]; 3]) -> RatFn {
    let t = |a: &RatFn, b: &RatFn, c: &RatFn, d: &RatFn| a.mul(b).sub(&c.mul(d));
    m[0][0]
        .mul(&t(&m[1][1], &m[2][2], &m[1][2], &m[2][1]))
        .sub(&m[0][1].mul(&t(&m[1][0], &m[2][2], &m[1][2], &m[2][0])))
        .add(&m[0][2].mul(&t(&m[1][0], &m[2][1], &m[1][1], &m[2][0])))
}
