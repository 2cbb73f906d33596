//! Factorization over F_q: squarefree split, distinct-degree split, and
//! randomized equal-degree splitting (trace map in characteristic 2).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{prime_factors, Fe, Fq};
use super::poly::Poly;

/// `unit · ∏ factor^exp` with monic irreducible factors sorted by (degree, lex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Fe,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiply everything back together.
    pub fn product(&self, fq: &Fq) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(fq, self.unit), |acc, (f, e)| {
                acc.mul(&f.pow(*e as u64))
            })
    }
}

impl Poly {
    /// Factor a nonzero polynomial using the seed carried by its field.
    pub fn factor(&self) -> Factorization {
        self.factor_seeded(self.field().seed())
    }

    /// Factor a nonzero polynomial. Panics on zero.
    pub fn factor_seeded(&self, seed: u64) -> Factorization {
        assert!(!self.is_zero(), "factorization of the zero polynomial");
        let unit = self.lc();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (sf, e) in self.monic().squarefree() {
            for (g, d) in sf.distinct_degree() {
                for f in g.equal_degree(d, &mut rng) {
                    factors.push((f, e));
                }
            }
        }
        factors.sort();
        Factorization { unit, factors }
    }

    /// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with
    /// self = ∏ s_i^i, each s_i squarefree and nonconstant.
    pub fn squarefree(&self) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let p = self.field().p();
        let d = self.derivative();
        let mut c = self.gcd(&d);
        let mut w = self.exact_div(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.exact_div(&y);
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.exact_div(&w);
        }
        if !c.is_one() {
            for (s, e) in c.pth_root().squarefree() {
                out.push((s, e * p));
            }
        }
        out
    }

    /// x^(q^k) mod self, for k ≥ 0, by repeated q-th powers.
    fn frobenius_x(&self, k: u32) -> Poly {
        let q = self.field().q() as u64;
        let mut h = Poly::x(self.field()).rem(self);
        for _ in 0..k {
            h = h.pow_mod(q, self);
        }
        h
    }

    /// Distinct-degree split of a monic squarefree polynomial: (g_d, d) with
    /// g_d the product of all irreducible factors of degree d.
    pub fn distinct_degree(&self) -> Vec<(Poly, usize)> {
        let fq = self.field().clone();
        let q = fq.q() as u64;
        let mut out = Vec::new();
        let mut f = self.clone();
        let x = Poly::x(&fq);
        let mut h = x.clone();
        let mut d = 1;
        while f.deg().unwrap_or(0) >= 2 * d {
            h = h.pow_mod(q, &f);
            let g = f.gcd(&h.sub(&x));
            if !g.is_one() {
                f = f.exact_div(&g);
                h = h.rem(&f);
                out.push((g, d));
            }
            d += 1;
        }
        if let Some(df) = f.deg() {
            if df > 0 {
                out.push((f, df));
            }
        }
        out
    }

    /// Split a monic squarefree product of degree-d irreducibles.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let n = self.deg().unwrap_or(0);
        if n == 0 {
            return Vec::new();
        }
        if n == d {
            return vec![self.clone()];
        }
        let fq = self.field().clone();
        loop {
            let a = Poly::from_coeffs(&fq, (0..n).map(|_| Fe(rng.gen_range(0..fq.q()))).collect());
            if a.is_constant() {
                continue;
            }
            let g = self.gcd(&a);
            if !g.is_one() && g.deg() != Some(n) {
                return self.split_and_recurse(g, d, rng);
            }
            let b = if fq.p() == 2 {
                // Absolute trace to F_2 of a in F_{q^d}.
                let steps = fq.n() as usize * d;
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..steps {
                    t = t.mul_mod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // a^((q^d−1)/2) as the norm a^((q^d−1)/(q−1)) raised to (q−1)/2.
                let q = fq.q() as u64;
                let mut conj = a.rem(self);
                let mut norm = conj.clone();
                for _ in 1..d {
                    conj = conj.pow_mod(q, self);
                    norm = norm.mul_mod(&conj, self);
                }
                norm.pow_mod((q - 1) / 2, self).sub(&Poly::one(&fq))
            };
            let g = self.gcd(&b);
            if !g.is_one() && g.deg() != Some(n) {
                return self.split_and_recurse(g, d, rng);
            }
        }
    }

    fn split_and_recurse(&self, g: Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let h = self.exact_div(&g);
        let mut out = g.equal_degree(d, rng);
        out.extend(h.equal_degree(d, rng));
        out
    }

    /// Rabin's test. Constants are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.deg() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let x = Poly::x(self.field());
        for r in prime_factors(n as u64) {
            let h = f.frobenius_x((n as u64 / r) as u32);
            if !f.gcd(&h.sub(&x)).is_one() {
                return false;
            }
        }
        f.frobenius_x(n as u32) == x.rem(&f)
    }

    /// Distinct roots in F_q, sorted.
    pub fn roots(&self) -> Vec<Fe> {
        if self.is_constant() {
            return Vec::new();
        }
        let f = self.monic();
        let x = Poly::x(self.field());
        let lin = f.gcd(&f.frobenius_x(1).sub(&x));
        let mut rng = ChaCha8Rng::seed_from_u64(self.field().seed());
        let mut roots: Vec<Fe> = lin
            .equal_degree(1, &mut rng)
            .into_iter()
            .map(|l| self.field().neg(l.coeff(0)))
            .collect();
        roots.sort();
        roots
    }
}

/// Monic polynomials of exact degree d over F_q, in increasing canonical order.
pub fn monic_polys(fq: &Fq, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = fq.q() as u64;
    let count = q.checked_pow(d as u32).unwrap_or(u64::MAX);
    (0..count).map(move |mut k| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(Fe((k % q) as u32));
            k /= q;
        }
        c.push(Fe::ONE);
        Poly::from_coeffs(fq, c)
    })
}

/// Monic irreducibles of degree d, in increasing canonical order.
pub fn monic_irreducibles(fq: &Fq, d: usize) -> impl Iterator<Item = Poly> + '_ {
    monic_polys(fq, d).filter(|f| f.is_irreducible())
}
