//! Arithmetic in GF(p^k) as polynomial residues.
//!
//! Field elements are encoded as integers in `0..p^k`: the base-`p` digits
//! of the encoding, least significant first, are the coefficients of the
//! residue polynomial in ascending degree order. The modulus is the
//! lexicographically smallest (by that same encoding of its non-leading
//! coefficients) monic irreducible polynomial of degree `k`, which makes
//! every field — and everything built on top of one — deterministic.

use crate::error::{Error, Result};

const MAX_FIELD_SIZE: u64 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A finite field GF(p^k) with `p^k ≤ 2^20`.
#[derive(Clone, Debug)]
pub struct FieldGf {
    p: u64,
    k: u32,
    q: u64,
    /// Non-leading coefficients of the monic modulus, constant term first.
    modulus: Vec<u64>,
    primitive: u64,
}

impl FieldGf {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Constructor(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::Constructor("extension degree must be ≥ 1".into()));
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q
                .checked_mul(p)
                .filter(|&v| v <= MAX_FIELD_SIZE)
                .ok_or_else(|| {
                    Error::Constructor(format!("field size p^k exceeds 2^20 (p={p}, k={k})"))
                })?;
        }
        let modulus = smallest_irreducible(p, k);
        let mut field = FieldGf {
            p,
            k,
            q,
            modulus,
            primitive: 1,
        };
        field.primitive = field.find_primitive();
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field size q = p^k.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Non-leading modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The smallest encoding generating the multiplicative group.
    pub fn primitive(&self) -> u64 {
        self.primitive
    }

    /// Base-`p` digits of an encoding: coefficients of the residue
    /// polynomial, constant term first.
    pub fn decode(&self, a: u64) -> Vec<u64> {
        let mut digits = vec![0; self.k as usize];
        let mut v = a;
        for d in digits.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        digits
    }

    /// Encoding of a coefficient list (constant term first, digits reduced
    /// mod `p`; shorter lists are zero-padded).
    pub fn encode(&self, coeffs: &[u64]) -> u64 {
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c;
        }
        v
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let d: Vec<u64> = self
            .decode(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.encode(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let prod = poly_mul(&self.decode(a), &self.decode(b), self.p);
        let red = poly_rem_by_modulus(&prod, &self.modulus, self.p);
        self.encode(&red)
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        assert_ne!(a, 0, "inverse of zero");
        self.pow(a, self.q - 2)
    }

    /// Frobenius endomorphism x ↦ x^p.
    pub fn frob(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    /// Iterated Frobenius x ↦ x^(p^e).
    pub fn frob_iter(&self, a: u64, e: u32) -> u64 {
        let mut v = a;
        for _ in 0..e {
            v = self.frob(v);
        }
        v
    }

    /// True iff `a` generates the multiplicative group: a^((q-1)/ℓ) ≠ 1 for
    /// every prime ℓ dividing q−1.
    fn is_generator(&self, a: u64) -> bool {
        debug_assert_ne!(a, 0);
        crate::perm::prime_divisors((self.q - 1) as u128)
            .iter()
            .all(|&ell| self.pow(a, (self.q - 1) / ell) != 1)
    }

    fn find_primitive(&self) -> u64 {
        (1..self.q)
            .find(|&a| self.is_generator(a))
            .expect("multiplicative group is cyclic")
    }
}

/// Product of two coefficient vectors over GF(p), ascending degree order.
fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `x^k + Σ modulus[i]·x^i`.
fn poly_rem_by_modulus(a: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len();
    let mut rem = a.to_vec();
    while rem.len() > k {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        rem.pop();
        if lead != 0 {
            // x^deg ≡ -(Σ modulus[i]·x^i)·x^(deg-k)
            for (i, &m) in modulus.iter().enumerate() {
                let idx = deg - k + i;
                let sub = (lead * m) % p;
                rem[idx] = (rem[idx] + p - sub) % p;
            }
        }
    }
    rem.resize(k.max(1), 0);
    rem
}

/// gcd of two polynomials over GF(p) (ascending coefficients, not
/// necessarily monic); returns a possibly non-monic representative.
fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    };
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !(y.len() == 1 && y[0] == 0) {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
        trim(&mut x);
        trim(&mut y);
    }
    x
}

/// Fermat inverse modulo the prime p.
fn mod_inv(x: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = x % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Remainder of `a` by a nonzero, trailing-zero-trimmed polynomial `b`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    };
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while rem.len() > db && !(rem.len() == 1 && rem[0] == 0) {
        let deg = rem.len() - 1;
        let coef = rem[deg] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            let idx = deg - db + i;
            rem[idx] = (rem[idx] + p - coef * bi % p) % p;
        }
        trim(&mut rem);
    }
    rem
}

/// x^(p^e) mod f, computed by repeated squaring in GF(p)[x]/(f).
fn x_pow_p_e(modulus_full: &[u64], p: u64, e: u32) -> Vec<u64> {
    // modulus_full: full monic coefficient vector of f, ascending, degree k.
    let k = modulus_full.len() - 1;
    let non_leading = &modulus_full[..k];
    let mut cur = poly_rem_by_modulus(&[0, 1], non_leading, p);
    for _ in 0..e {
        let mut acc = vec![0u64; k.max(1)];
        acc[0] = 1;
        let mut base = cur.clone();
        let mut exp = p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = poly_rem_by_modulus(&poly_mul(&acc, &base, p), non_leading, p);
            }
            base = poly_rem_by_modulus(&poly_mul(&base, &base, p), non_leading, p);
            exp >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Irreducibility of the monic polynomial with non-leading coefficients
/// `non_leading` (degree k = non_leading.len()) over GF(p):
/// x^(p^k) ≡ x (mod f), and gcd(f, x^(p^(k/ℓ)) − x) = 1 for every prime ℓ | k.
fn is_irreducible(non_leading: &[u64], p: u64) -> bool {
    let k = non_leading.len() as u32;
    let mut full: Vec<u64> = non_leading.to_vec();
    full.push(1);
    // x^(p^k) mod f must equal x mod f
    let xpk = x_pow_p_e(&full, p, k);
    let x_red = poly_rem_by_modulus(&[0, 1], non_leading, p);
    if xpk != x_red {
        return false;
    }
    let mut rem_k = k;
    let mut ell = 2u32;
    let mut prime_ells = Vec::new();
    while ell * ell <= rem_k {
        if rem_k.is_multiple_of(ell) {
            prime_ells.push(ell);
            while rem_k.is_multiple_of(ell) {
                rem_k /= ell;
            }
        }
        ell += 1;
    }
    if rem_k > 1 {
        prime_ells.push(rem_k);
    }
    for ell in prime_ells {
        let d = k / ell;
        let mut g = x_pow_p_e(&full, p, d);
        // g := x^(p^d) − x
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = (g[1] + p - 1) % p;
        let gcd = poly_gcd(&full, &g, p);
        if !(gcd.len() == 1 && gcd[0] != 0) {
            return false;
        }
    }
    true
}

/// Non-leading coefficients (ascending) of the lexicographically smallest
/// monic irreducible polynomial of degree k over GF(p), where "smallest"
/// orders by the integer whose base-p digits are those coefficients.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let mut bound: u64 = 1;
    for _ in 0..k {
        bound *= p;
    }
    for enc in 0..bound {
        let mut coeffs = vec![0u64; k as usize];
        let mut v = enc;
        for c in coeffs.iter_mut() {
            *c = v % p;
            v /= p;
        }
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_are_the_frozen_smallest_irreducibles() {
        // (p, k, expected non-leading coefficients, expected primitive)
        let expected: &[(u64, u32, &[u64], u64)] = &[
            (2, 2, &[1, 1], 2),
            (2, 3, &[1, 1, 0], 2),
            (2, 4, &[1, 1, 0, 0], 2),
            (2, 5, &[1, 0, 1, 0, 0], 2),
            (3, 2, &[1, 0], 4),
            (3, 3, &[1, 2, 0], 3),
            (5, 2, &[2, 0], 6),
        ];
        for &(p, k, coeffs, prim) in expected {
            let f = FieldGf::new(p, k).unwrap();
            assert_eq!(f.modulus(), coeffs, "GF({p},{k}) modulus");
            assert_eq!(f.primitive(), prim, "GF({p},{k}) primitive");
        }
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldGf::new(5, 1).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.inv(2), 3);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.add(4, 3), 2);
    }

    #[test]
    fn gf27_frobenius_fixes_every_element_after_k_steps() {
        let f = FieldGf::new(3, 3).unwrap();
        for a in 0..f.q() {
            assert_eq!(f.pow(a, 27), a);
            assert_eq!(f.frob_iter(a, 3), a);
        }
    }

    #[test]
    fn gf27_primitive_has_order_26() {
        let f = FieldGf::new(3, 3).unwrap();
        let w = f.primitive();
        let mut seen = std::collections::HashSet::new();
        let mut v = 1u64;
        for _ in 0..26 {
            v = f.mul(v, w);
            seen.insert(v);
        }
        assert_eq!(v, 1);
        assert_eq!(seen.len(), 26);
    }

    #[test]
    fn field_axioms_hold_exhaustively_on_gf27() {
        let f = FieldGf::new(3, 3).unwrap();
        let q = f.q();
        for a in 0..q {
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        assert!(FieldGf::new(4, 1).is_err());
        assert!(FieldGf::new(3, 0).is_err());
        assert!(FieldGf::new(2, 21).is_err()); // 2^21 > 2^20
        assert!(FieldGf::new(2, 20).is_ok());
    }
}
