//! The constant field F_q, q = p^n.
//!
//! An element is its coefficient vector over F_p in the basis 1, w, ..., w^{n-1}
//! (w a root of the defining modulus), packed into one integer
//! `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`. Comparing packed integers is the
//! canonical coefficient-lexicographic order (highest coefficient most
//! significant). Multiplication uses discrete-log tables built at construction.

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order; the log tables take 12 bytes per element.
pub const MAX_ORDER: u64 = 1 << 20;

/// Symbol used when printing or parsing the generator of F_q over F_p.
pub const GEN_SYMBOL: char = 'w';

/// Conway polynomials (coefficients low to high) for the small fields used by default.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

/// An element of F_q; meaningful only together with its [`Fq`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Packed coefficient index, in `0..q`.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Tables and parameters of one finite field. Shared behind [`Fq`].
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    n: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    log: Vec<u32>,
    exp: Vec<u32>,
}

/// Cheap-to-clone handle on a [`FieldCtx`], carrying the factorization seed.
#[derive(Clone, Debug)]
pub struct Fq {
    ctx: Arc<FieldCtx>,
    seed: u64,
}

impl Deref for Fq {
    type Target = FieldCtx;
    fn deref(&self) -> &FieldCtx {
        &self.ctx
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Fq) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx)
            || (self.p == other.p && self.n == other.n && self.modulus == other.modulus)
    }
}

impl Eq for Fq {}

pub(crate) fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Digit-level arithmetic used only while the tables are being built.
struct Raw<'a> {
    p: u32,
    n: usize,
    modulus: &'a [u32],
}

impl Raw<'_> {
    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.n];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn pack(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (p, n) = (self.p as u64, self.n);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for i in 0..n {
            for j in 0..n {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let sub = c * self.modulus[i] as u64 % p;
                prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
            }
        }
        let out: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
        self.pack(&out)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl Fq {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Fq> {
        Fq::new(p, 1)
    }

    /// F_{p^n} with the default modulus: a tabulated Conway polynomial when
    /// available, otherwise the least primitive irreducible polynomial.
    pub fn new(p: u64, n: u32) -> Result<Fq> {
        if n == 1 {
            return Fq::build(p, 1, None);
        }
        Fq::check_params(p, n)?;
        let modulus = match CONWAY
            .iter()
            .find(|(cp, cn, _)| *cp as u64 == p && *cn == n)
        {
            Some((_, _, m)) => m.to_vec(),
            None => least_primitive_modulus(p as u32, n)?,
        };
        Fq::build(p, n, Some(modulus))
    }

    /// F_{p^n} defined by a caller-chosen monic irreducible modulus (coefficients low to high).
    pub fn with_modulus(p: u64, n: u32, modulus: Vec<u32>) -> Result<Fq> {
        if n == 1 {
            return Fq::build(p, 1, None);
        }
        Fq::check_params(p, n)?;
        if modulus.len() != n as usize + 1
            || modulus[n as usize] != 1
            || modulus.iter().any(|&c| c as u64 >= p)
        {
            return Err(Error::BadModulus(n));
        }
        let fp = Fq::prime(p)?;
        let m = crate::algebra::Poly::from_coeffs(&fp, modulus.iter().map(|&c| Fe(c)).collect());
        if !m.is_irreducible() {
            return Err(Error::BadModulus(n));
        }
        Fq::build(p, n, Some(modulus))
    }

    /// F_q for a prime power q, with the default modulus.
    pub fn from_order(q: u64) -> Result<Fq> {
        if q < 2 {
            return Err(Error::NotPrime(q));
        }
        let p = prime_factors(q)[0];
        let (mut n, mut r) = (0u32, q);
        while r % p == 0 {
            r /= p;
            n += 1;
        }
        if r != 1 {
            return Err(Error::NotPrime(q));
        }
        Fq::new(p, n)
    }

    /// Same field with a different seed for randomized factorization.
    pub fn with_seed(&self, seed: u64) -> Fq {
        Fq {
            ctx: Arc::clone(&self.ctx),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn check_params(p: u64, n: u32) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).pow(n);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        Ok(())
    }

    fn build(p: u64, n: u32, modulus: Option<Vec<u32>>) -> Result<Fq> {
        Fq::check_params(p, n)?;
        let q = p.pow(n) as u32;
        let p32 = p as u32;
        let ones = vec![1u32, 1u32];
        let raw = Raw {
            p: p32,
            n: n as usize,
            modulus: modulus.as_deref().unwrap_or(&ones),
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let is_generator = |g: u32| factors.iter().all(|&r| raw.pow(g, order / r) != 1);
        let g = if q == 2 {
            1
        } else if n == 1 {
            (2..q)
                .find(|&g| is_generator(g))
                .expect("F_p has a primitive root")
        } else if is_generator(p32) {
            p32
        } else {
            (2..q)
                .find(|&g| is_generator(g))
                .ok_or(Error::BadModulus(n))?
        };
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = cur;
            log[cur as usize] = i as u32;
            cur = raw.mul(cur, g);
        }
        if cur != 1 {
            return Err(Error::BadModulus(n));
        }
        for i in (q - 1) as usize..exp.len() {
            exp[i] = exp[i - (q - 1) as usize];
        }
        let ctx = FieldCtx {
            p: p32,
            n,
            q,
            modulus,
            log,
            exp,
        };
        Ok(Fq {
            ctx: Arc::new(ctx),
            seed: 0,
        })
    }
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Defining modulus over F_p (low to high), absent for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// The generator w of F_q over F_p (the class of the modulus variable).
    pub fn generator(&self) -> Fe {
        if self.n == 1 {
            Fe::ONE
        } else {
            Fe(self.p)
        }
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    /// Element with the given coefficients (low to high) in the basis 1, w, ...
    pub fn from_digits(&self, digits: &[u32]) -> Fe {
        Fe(digits
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p + c % self.p))
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        let mut a = a.0;
        (0..self.n)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    /// Element with the given packed index, reduced modulo q.
    pub fn elem(&self, index: u32) -> Fe {
        Fe(index % self.q)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.n == 1 {
            let s = a.0 + b.0;
            Fe(if s >= self.p { s - self.p } else { s })
        } else if self.p == 2 {
            Fe(a.0 ^ b.0)
        } else {
            let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
            while x > 0 || y > 0 {
                let d = (x % self.p + y % self.p) % self.p;
                out += d * place;
                place *= self.p;
                x /= self.p;
                y /= self.p;
            }
            Fe(out)
        }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if a.0 == 0 || self.p == 2 {
            a
        } else if self.n == 1 {
            Fe(self.p - a.0)
        } else {
            let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
            while x > 0 {
                let d = x % self.p;
                out += ((self.p - d) % self.p) * place;
                place *= self.p;
                x /= self.p;
            }
            Fe(out)
        }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a.0 != 0, "inverse of zero in F_q");
        let l = self.log[a.0 as usize];
        Fe(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let l = self.log[a.0 as usize] as u64 * (e % (self.q as u64 - 1));
        Fe(self.exp[(l % (self.q as u64 - 1)) as usize])
    }

    /// Frobenius z ↦ z^p.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as u64)
    }

    /// Discrete logarithm to the table generator.
    pub fn log(&self, a: Fe) -> u32 {
        assert!(a.0 != 0, "log of zero");
        self.log[a.0 as usize]
    }

    /// Canonical (least) m-th root of `c`, if one exists.
    pub fn const_nth_root(&self, c: Fe, m: u64) -> Option<Fe> {
        assert!(m > 0, "root degree must be positive");
        if c.0 == 0 {
            return Some(Fe::ZERO);
        }
        let order = self.q as u64 - 1;
        let l = self.log[c.0 as usize] as u64;
        let g = gcd_u64(m % order, order).max(1);
        let g = if m.is_multiple_of(order) { order } else { g };
        if !l.is_multiple_of(g) {
            return None;
        }
        let step = order / g;
        let mg = (m / g) % step.max(1);
        let x0 = if step == 1 {
            0
        } else {
            (l / g) % step * mod_inverse(mg, step) % step
        };
        (0..g)
            .map(|k| Fe(self.exp[((x0 + k * step) % order) as usize]))
            .min()
    }

    /// True when `c` is a square in F_q.
    pub fn is_square(&self, c: Fe) -> bool {
        self.const_nth_root(c, 2).is_some()
    }

    /// Absolute trace to F_p, returned as an integer in `0..p`.
    pub fn abs_trace(&self, c: Fe) -> u32 {
        let mut acc = Fe::ZERO;
        let mut t = c;
        for _ in 0..self.n {
            acc = self.add(acc, t);
            t = self.frobenius(t);
        }
        acc.0
    }

    /// Least z with z^p − z = c, if any.
    pub fn solve_const_artin_schreier(&self, c: Fe) -> Option<Fe> {
        let (p, n) = (self.p as u64, self.n as usize);
        // Columns: images of the basis w^i under z ↦ z^p − z, as F_p vectors.
        let mut rows: Vec<Vec<u64>> = vec![vec![0; n + 1]; n];
        for i in 0..n {
            let basis = Fe((self.p as u64).pow(i as u32) as u32);
            let img = self.sub(self.frobenius(basis), basis);
            for (r, d) in self.digits(img).into_iter().enumerate() {
                rows[r][i] = d as u64;
            }
        }
        for (r, d) in self.digits(c).into_iter().enumerate() {
            rows[r][n] = d as u64;
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(row, pr);
            let inv = mod_inverse(rows[row][col], p);
            for v in rows[row].iter_mut() {
                *v = *v * inv % p;
            }
            for r in 0..n {
                if r != row && rows[r][col] != 0 {
                    let f = rows[r][col];
                    for k in 0..=n {
                        rows[r][k] = (rows[r][k] + p * p - f * rows[row][k]) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if rows[row..].iter().any(|r| r[n] != 0) {
            return None;
        }
        let mut z = vec![0u32; n];
        for (r, &col) in pivots.iter().enumerate() {
            z[col] = rows[r][n] as u32;
        }
        let z0 = self.from_digits(&z);
        // The kernel is F_p; pick the least solution.
        (0..self.p).map(|k| self.add(z0, Fe(k))).min()
    }

    /// Human-readable form: an integer for prime fields, a polynomial in `w` otherwise.
    pub fn fmt_elem(&self, a: Fe) -> String {
        if self.n == 1 {
            return a.0.to_string();
        }
        let d = self.digits(a);
        let mut terms = Vec::new();
        for i in (0..d.len()).rev() {
            let c = d[i];
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => GEN_SYMBOL.to_string(),
                _ => format!("{GEN_SYMBOL}^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m` (requires gcd(a, m) = 1, m ≥ 1).
pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

fn least_primitive_modulus(p: u32, n: u32) -> Result<Vec<u32>> {
    let fp = Fq::prime(p as u64)?;
    let count = (p as u64).pow(n);
    for k in 0..count {
        let mut coeffs: Vec<u32> = Vec::with_capacity(n as usize + 1);
        let mut r = k;
        for _ in 0..n {
            coeffs.push((r % p as u64) as u32);
            r /= p as u64;
        }
        coeffs.push(1);
        if coeffs[0] == 0 {
            continue;
        }
        let m = crate::algebra::Poly::from_coeffs(&fp, coeffs.iter().map(|&c| Fe(c)).collect());
        if !m.is_irreducible() {
            continue;
        }
        let raw = Raw {
            p,
            n: n as usize,
            modulus: &coeffs,
        };
        let order = count - 1;
        if prime_factors(order)
            .iter()
            .all(|&r| raw.pow(p, order / r) != 1)
        {
            return Ok(coeffs);
        }
    }
    Err(Error::BadModulus(n))
}
