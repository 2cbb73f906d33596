//! Root extraction in residue fields F_q[x]/(π) and the Chinese remainder theorem.

use super::field::gcd_u64;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Returns m with deg m < deg π and m^k ≡ sign·t (mod π).
///
/// For k = p the root is the inverse Frobenius image and always exists. For other k
/// a root is found when k is invertible modulo the multiplicative group order.
pub fn residue_root(pi: &Poly, t: &Poly, k: u64, sign: i64) -> Result<Poly> {
    let fq = pi.field();
    let d = pi.deg().ok_or(Error::ZeroArgument)? as u32;
    let c = t.scale(fq.from_int(sign)).rem(pi);
    if c.is_zero() {
        return Ok(c);
    }
    let p = fq.p() as u64;
    let nd = fq.n() * d;
    if k == p {
        // z^(p^(nd)) = z in the residue field, so z^(p^(nd−1)) is the p-th root.
        let mut m = c;
        for _ in 1..nd {
            m = m.pow_mod(p, pi);
        }
        return Ok(m);
    }
    let order = (fq.q() as u128).checked_pow(d).ok_or(Error::NoRoot)? - 1;
    if order > u64::MAX as u128 {
        return Err(Error::NoRoot);
    }
    let order = order as u64;
    if gcd_u64(k % order.max(1), order) != 1 && order > 1 {
        return Err(Error::NoRoot);
    }
    let e = super::field::mod_inverse(k % order.max(1), order.max(1));
    let m = c.pow_mod(e, pi);
    debug_assert!(m.pow_mod(k, pi) == c);
    Ok(m)
}

/// The unique r with deg r < deg ∏ m_i and r ≡ r_i (mod m_i) for every pair.
pub fn poly_crt(pairs: &[(Poly, Poly)]) -> Result<Poly> {
    let Some((r0, m0)) = pairs.first() else {
        return Err(Error::ZeroArgument);
    };
    if m0.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut r = r0.rem(m0);
    let mut m = m0.clone();
    for (ri, mi) in &pairs[1..] {
        if mi.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let inv = m.inv_mod(mi).ok_or(Error::NonCoprimeModuli)?;
        let k = ri.sub(&r).mul_mod(&inv, mi);
        r = r.add(&m.mul(&k));
        m = m.mul(mi);
        r = r.rem(&m);
    }
    Ok(r)
}
