//! Arithmetic in GF(p^m).
//!
//! An element is stored as the integer whose base-p digits are the ascending
//! coefficients of its residue polynomial. Multiplication goes through
//! log/exp tables built once per context.

pub mod conway;
mod embed;
mod text;
pub(crate) mod zp;

pub use embed::{ff_embed, FieldEmbedding};

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

pub type Field = Arc<FieldCtx>;

static NEXT_ID: AtomicU32 = AtomicU32::new(1);

/// Immutable arithmetic context for one field.
#[derive(Debug)]
pub struct FieldCtx {
    id: u32,
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    w: u32,
    // exp has length 2(q-1) so that exp[log a + log b] needs no reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
    // p^t mod (q-1) for t in 0..m
    frob_exp: Vec<u32>,
}

/// A value tagged with the id of the context it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    pub ctx: u32,
    pub value: u32,
}

/// a ↦ a^(p^t) on GF(p^m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusMap {
    pub t: u32,
    pub m: u32,
}

/// δ(a) = γ(σ(a) − a).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InnerDerivation {
    pub sigma: FrobeniusMap,
    pub gamma: FieldElement,
}

impl FrobeniusMap {
    pub fn new(t: u32, m: u32) -> Self {
        FrobeniusMap { t: t % m.max(1), m }
    }

    pub fn identity(m: u32) -> Self {
        FrobeniusMap { t: 0, m }
    }

    pub fn compose(self, other: FrobeniusMap) -> FrobeniusMap {
        FrobeniusMap::new(self.t + other.t, self.m)
    }

    pub fn inverse(self) -> FrobeniusMap {
        FrobeniusMap::new(self.m - self.t, self.m)
    }

    pub fn order(self) -> u32 {
        self.m / gcd_u32(self.m, self.t)
    }

    pub fn is_identity(self) -> bool {
        self.t == 0
    }
}

pub(crate) fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

type Registry = Mutex<HashMap<(u32, u32, Vec<u32>), Field>>;

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds (or fetches the cached) context for GF(p^m). With no modulus the
/// Conway registry is consulted.
pub fn ff_make(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
    if !zp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::BadModulus { expected: 0, got: vec![] });
    }
    let modulus = match modulus {
        Some(c) => {
            if c.len() as u32 != m + 1 || c[m as usize] != 1 || c.iter().any(|&x| x >= p) {
                return Err(Error::BadModulus { expected: m, got: c.to_vec() });
            }
            c.to_vec()
        }
        None => conway::lookup(p, m).ok_or(Error::UnregisteredField { p, m })?,
    };
    let key = (p, m, modulus.clone());
    if let Some(f) = registry().lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    if !zp::is_irreducible(&modulus, p) {
        return Err(Error::Reducible(modulus));
    }
    let ctx = Arc::new(FieldCtx::build(p, m, modulus)?);
    let mut reg = registry().lock().unwrap();
    Ok(reg.entry(key).or_insert(ctx).clone())
}

/// Registry field GF(p^m) with its default modulus.
pub fn field(p: u32, m: u32) -> Result<Field> {
    ff_make(p, m, None)
}

/// Registry field of order q.
pub fn field_of_order(q: u32) -> Result<Field> {
    let (p, m) = prime_power(q).ok_or(Error::BadParameters(format!("{q} is not a prime power")))?;
    field(p, m)
}

pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

impl FieldCtx {
    fn build(p: u32, m: u32, modulus: Vec<u32>) -> Result<FieldCtx> {
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= 1 << 20)
            .ok_or_else(|| Error::BadParameters(format!("GF({p}^{m}) is too large")))?;
        let n = (q - 1) as usize;
        let slow_mul = |a: u32, b: u32| -> u32 {
            let prod = zp::mul_mod(&digits(a, p, m), &digits(b, p, m), &modulus, p);
            undigits(&prod, p)
        };
        let order_is_full = |g: u32| -> bool {
            let mut acc = 1u32;
            for i in 1..=n {
                acc = slow_mul(acc, g);
                if acc == 1 {
                    return i == n;
                }
            }
            false
        };
        // residue class of x when it is primitive, otherwise the smallest primitive value
        let preferred = if m == 1 { None } else { Some(p) };
        let w = preferred
            .filter(|&g| order_is_full(g))
            .or_else(|| (1..q).find(|&g| order_is_full(g)))
            .expect("a finite field has a primitive element");
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for i in 0..n {
            exp[i] = acc;
            exp[i + n] = acc;
            log[acc as usize] = i as u32;
            acc = slow_mul(acc, w);
        }
        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a, p, m).iter().map(|&x| (p - x) % p).collect();
                undigits(&d, p)
            })
            .collect();
        let add = (p != 2 && q <= 256).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_digits(a, b, p, m);
                }
            }
            t
        });
        let frob_exp = (0..m)
            .map(|t| {
                let mut e = 1u64;
                for _ in 0..t {
                    e = e * p as u64 % n.max(1) as u64;
                }
                e as u32
            })
            .collect();
        Ok(FieldCtx {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            p,
            m,
            q,
            modulus,
            w,
            exp,
            log,
            neg,
            add,
            frob_exp,
        })
    }

    pub fn id(&self) -> u32 {
        self.id
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Raw value of the primitive element.
    pub fn w_raw(&self) -> u32 {
        self.w
    }

    pub fn elem(&self, value: u32) -> FieldElement {
        debug_assert!(value < self.q);
        FieldElement { ctx: self.id, value }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }
    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }
    pub fn w(&self) -> FieldElement {
        self.elem(self.w)
    }

    /// w^k for any integer k.
    pub fn w_pow(&self, k: i64) -> FieldElement {
        self.elem(self.exp_raw(k))
    }

    pub fn exp_raw(&self, k: i64) -> u32 {
        let n = (self.q - 1) as i64;
        self.exp[k.rem_euclid(n) as usize]
    }

    /// Discrete log of a nonzero raw value.
    pub fn log_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.log[a as usize]
    }

    /// Residue coefficients (ascending, length m).
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.value, self.p, self.m)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<FieldElement> {
        if c.len() as u32 != self.m || c.iter().any(|&x| x >= self.p) {
            return Err(Error::BadParameters(format!("bad residue vector {c:?}")));
        }
        Ok(self.elem(undigits(c, self.p)))
    }

    /// Sort key ordering elements as 0, 1, w, w^2, ...
    pub fn sort_key(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            1 + self.log[a as usize]
        }
    }

    pub fn all(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|v| self.elem(v))
    }

    // ---- raw arithmetic on values of this field ----

    #[inline]
    pub fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if let Some(t) = &self.add {
            t[(a * self.q + b) as usize]
        } else {
            add_digits(a, b, self.p, self.m)
        }
    }

    #[inline]
    pub fn neg_raw(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    #[inline]
    pub fn inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let n = self.q - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }

    pub fn div_raw(&self, a: u32, b: u32) -> u32 {
        self.mul_raw(a, self.inv_raw(b))
    }

    pub fn pow_raw(&self, a: u32, k: i64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as i64;
        let e = (self.log[a as usize] as i64 * k.rem_euclid(n)).rem_euclid(n);
        self.exp[e as usize]
    }

    /// a^(p^t).
    #[inline]
    pub fn frob_raw(&self, a: u32, t: u32) -> u32 {
        if a == 0 || t.is_multiple_of(self.m) {
            return a;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] as u64 * self.frob_exp[(t % self.m) as usize] as u64) % n as u64;
        self.exp[e as usize]
    }

    // ---- checked arithmetic on tagged elements ----

    fn own(&self, a: FieldElement) -> Result<u32> {
        if a.ctx == self.id {
            Ok(a.value)
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.elem(self.add_raw(self.own(a)?, self.own(b)?)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.elem(self.sub_raw(self.own(a)?, self.own(b)?)))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        Ok(self.elem(self.neg_raw(self.own(a)?)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.elem(self.mul_raw(self.own(a)?, self.own(b)?)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        match self.own(a)? {
            0 => Err(Error::DivisionByZero),
            v => Ok(self.elem(self.inv_raw(v))),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let b = self.inv(b)?;
        self.mul(a, b)
    }

    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        let v = self.own(a)?;
        if v == 0 && k < 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.elem(self.pow_raw(v, k)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u32> {
        let v = self.own(a)?;
        if v == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(n / gcd_u32(n, self.log[v as usize]))
    }

    pub fn frobenius(&self, t: u32) -> FrobeniusMap {
        FrobeniusMap::new(t, self.m)
    }

    pub fn frobenius_apply(&self, f: FrobeniusMap, a: FieldElement) -> Result<FieldElement> {
        if f.m != self.m {
            return Err(Error::CtxMismatch);
        }
        Ok(self.elem(self.frob_raw(self.own(a)?, f.t)))
    }

    pub fn derivation(&self, t: u32, gamma: FieldElement) -> Result<InnerDerivation> {
        self.own(gamma)?;
        Ok(InnerDerivation { sigma: self.frobenius(t), gamma })
    }

    pub fn derivation_apply(&self, d: InnerDerivation, a: FieldElement) -> Result<FieldElement> {
        let g = self.own(d.gamma)?;
        let s = self.frobenius_apply(d.sigma, a)?;
        Ok(self.elem(self.mul_raw(g, self.sub_raw(s.value, a.value))))
    }
}

fn digits(mut a: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn add_digits(mut a: u32, mut b: u32, p: u32, m: u32) -> u32 {
    let (mut out, mut place) = (0, 1);
    for _ in 0..m {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}
