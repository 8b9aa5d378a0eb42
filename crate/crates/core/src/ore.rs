//! The skew polynomial ring F_q[x; σ, δ] with σ = Frobenius^t and the inner
//! derivation δ(a) = γ(σ(a) − a). Multiplication follows x·r = σ(r)x + δ(r).

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldEmbedding, FrobeniusMap, InnerDerivation};
use crate::polytext;
use std::fmt;
use std::sync::Arc;

/// Identifies a ring: field context, Frobenius exponent and γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingKey {
    pub field: u32,
    pub t: u32,
    pub gamma: u32,
}

#[derive(Debug)]
pub struct OreRing {
    field: Field,
    t: u32,
    gamma: u32,
    sigma: Vec<u32>,
    sigma_inv: Vec<u32>,
    delta: Vec<u32>,
}

pub type Ring = Arc<OreRing>;

/// Dense ascending coefficients, trailing zeros trimmed. Empty means zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrePoly {
    key: RingKey,
    c: Vec<u32>,
}

/// A class in R/Rf, represented by its right remainder modulo f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElem {
    pub modulus: OrePoly,
    pub rep: OrePoly,
}

fn trim(mut c: Vec<u32>) -> Vec<u32> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

impl OrePoly {
    pub fn key(&self) -> RingKey {
        self.key
    }
    pub fn coeffs(&self) -> &[u32] {
        &self.c
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }
    pub fn coeff(&self, i: usize) -> u32 {
        self.c.get(i).copied().unwrap_or(0)
    }
    pub fn lead(&self) -> u32 {
        self.c.last().copied().unwrap_or(0)
    }
    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }
    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.c.iter().filter(|&&v| v != 0).count()
    }
}

impl OreRing {
    /// Builds F_q[x; θ^t, δ_γ]. γ is ignored (set to 0) when σ is the identity.
    pub fn new(field: &Field, t: u32, gamma: u32) -> Result<Ring> {
        if gamma >= field.q() {
            return Err(Error::CtxMismatch);
        }
        let t = t % field.m();
        let gamma = if t == 0 { 0 } else { gamma };
        let q = field.q();
        let sigma: Vec<u32> = (0..q).map(|a| field.frob_raw(a, t)).collect();
        let sigma_inv: Vec<u32> = (0..q).map(|a| field.frob_raw(a, field.m() - t)).collect();
        let delta = (0..q).map(|a| field.mul_raw(gamma, field.sub_raw(sigma[a as usize], a))).collect();
        Ok(Arc::new(OreRing { field: field.clone(), t, gamma, sigma, sigma_inv, delta }))
    }

    /// Commutative ring F_q[x].
    pub fn commutative(field: &Field) -> Ring {
        Self::new(field, 0, 0).expect("zero gamma is valid")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn t(&self) -> u32 {
        self.t
    }
    pub fn gamma(&self) -> u32 {
        self.gamma
    }
    pub fn key(&self) -> RingKey {
        RingKey { field: self.field.id(), t: self.t, gamma: self.gamma }
    }
    pub fn sigma_map(&self) -> FrobeniusMap {
        self.field.frobenius(self.t)
    }
    pub fn derivation(&self) -> InnerDerivation {
        InnerDerivation { sigma: self.sigma_map(), gamma: self.field.elem(self.gamma) }
    }
    pub fn has_derivation(&self) -> bool {
        self.gamma != 0
    }

    #[inline]
    pub fn sigma(&self, a: u32) -> u32 {
        self.sigma[a as usize]
    }
    #[inline]
    pub fn sigma_inv(&self, a: u32) -> u32 {
        self.sigma_inv[a as usize]
    }
    #[inline]
    pub fn delta(&self, a: u32) -> u32 {
        self.delta[a as usize]
    }
    /// σ^k for any integer k.
    pub fn sigma_pow(&self, a: u32, k: i64) -> u32 {
        let m = self.field.m() as i64;
        self.field.frob_raw(a, (self.t as i64 * k).rem_euclid(m) as u32)
    }

    /// Same t with γ embedded, over the registry field GF(q^e).
    pub fn extend(&self, e: u32) -> Result<(Ring, FieldEmbedding)> {
        let emb = if e == 1 { FieldEmbedding::identity(&self.field) } else { FieldEmbedding::new(&self.field, e)? };
        let ring = OreRing::new(&emb.to, self.t, emb.apply_raw(self.gamma))?;
        Ok((ring, emb))
    }

    // ---- construction ----

    pub fn poly(&self, c: Vec<u32>) -> OrePoly {
        debug_assert!(c.iter().all(|&v| v < self.field.q()));
        OrePoly { key: self.key(), c: trim(c) }
    }

    pub fn poly_elems(&self, c: &[FieldElement]) -> Result<OrePoly> {
        let id = self.field.id();
        if c.iter().any(|e| e.ctx != id) {
            return Err(Error::CtxMismatch);
        }
        Ok(self.poly(c.iter().map(|e| e.value).collect()))
    }

    pub fn zero(&self) -> OrePoly {
        self.poly(Vec::new())
    }
    pub fn one(&self) -> OrePoly {
        self.poly(vec![1])
    }
    pub fn x(&self) -> OrePoly {
        self.poly(vec![0, 1])
    }
    pub fn constant(&self, a: u32) -> OrePoly {
        self.poly(vec![a])
    }
    pub fn monomial(&self, a: u32, k: usize) -> OrePoly {
        let mut c = vec![0; k + 1];
        c[k] = a;
        self.poly(c)
    }
    /// x − a.
    pub fn linear(&self, a: u32) -> OrePoly {
        self.poly(vec![self.field.neg_raw(a), 1])
    }
    /// x^n − a.
    pub fn binomial(&self, n: usize, a: u32) -> OrePoly {
        let mut c = vec![0; n + 1];
        c[0] = self.field.neg_raw(a);
        c[n] = 1;
        self.poly(c)
    }

    /// Maps a polynomial of `base` into this ring through `emb`.
    pub fn embed_poly(&self, emb: &FieldEmbedding, f: &OrePoly) -> OrePoly {
        self.poly(f.c.iter().map(|&v| emb.apply_raw(v)).collect())
    }

    fn check(&self, f: &OrePoly) -> Result<()> {
        if f.key == self.key() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    // ---- additive structure ----

    pub fn add(&self, f: &OrePoly, g: &OrePoly) -> Result<OrePoly> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.poly(self.add_raw(&f.c, &g.c)))
    }

    pub fn sub(&self, f: &OrePoly, g: &OrePoly) -> Result<OrePoly> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.poly(self.sub_raw(&f.c, &g.c)))
    }

    pub fn neg(&self, f: &OrePoly) -> OrePoly {
        self.poly(f.c.iter().map(|&v| self.field.neg_raw(v)).collect())
    }

    /// a·f (scalar on the left, no twisting).
    pub fn scale_left(&self, a: u32, f: &OrePoly) -> OrePoly {
        self.poly(f.c.iter().map(|&v| self.field.mul_raw(a, v)).collect())
    }

    /// Normalises to leading coefficient 1 by a left scalar.
    pub fn monic(&self, f: &OrePoly) -> OrePoly {
        match f.lead() {
            0 | 1 => f.clone(),
            l => self.scale_left(self.field.inv_raw(l), f),
        }
    }

    fn add_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| self.field.add_raw(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect()
    }

    fn sub_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| self.field.sub_raw(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect()
    }

    // ---- multiplication ----

    /// x·h for a raw coefficient vector.
    pub(crate) fn mul_x_raw(&self, h: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; h.len() + 1];
        for (j, &c) in h.iter().enumerate() {
            if c == 0 {
                continue;
            }
            out[j + 1] = self.field.add_raw(out[j + 1], self.sigma(c));
            if self.gamma != 0 {
                out[j] = self.field.add_raw(out[j], self.delta(c));
            }
        }
        out
    }

    pub(crate) fn mul_raw(&self, f: &[u32], g: &[u32]) -> Vec<u32> {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let fld = &self.field;
        let mut out = vec![0u32; f.len() + g.len() - 1];
        let mut h = g.to_vec();
        for (i, &a) in f.iter().enumerate() {
            if i > 0 {
                h = self.mul_x_raw(&h);
            }
            if a == 0 {
                continue;
            }
            for (j, &b) in h.iter().enumerate() {
                out[j] = fld.add_raw(out[j], fld.mul_raw(a, b));
            }
        }
        trim(out)
    }

    pub fn mul(&self, f: &OrePoly, g: &OrePoly) -> Result<OrePoly> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.poly(self.mul_raw(&f.c, &g.c)))
    }

    pub fn pow(&self, f: &OrePoly, k: u32) -> Result<OrePoly> {
        self.check(f)?;
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    // ---- division ----

    /// f = quot·g + rem with deg rem < deg g.
    pub fn right_divmod(&self, f: &OrePoly, g: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check(f)?;
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let (q, r) = self.right_divmod_raw(&f.c, &g.c);
        Ok((self.poly(q), self.poly(r)))
    }

    pub(crate) fn right_divmod_raw(&self, f: &[u32], g: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let fld = &self.field;
        let e = g.len() - 1;
        if f.len() <= e {
            return (Vec::new(), f.to_vec());
        }
        let span = f.len() - 1 - e;
        // shifted[j] = x^j · g
        let mut shifted = Vec::with_capacity(span + 1);
        shifted.push(g.to_vec());
        for j in 1..=span {
            let next = self.mul_x_raw(&shifted[j - 1]);
            shifted.push(next);
        }
        let mut r = f.to_vec();
        let mut quot = vec![0u32; span + 1];
        for d in (e..f.len()).rev() {
            let c = r[d];
            if c == 0 {
                continue;
            }
            let j = d - e;
            let u = fld.div_raw(c, shifted[j][d]);
            quot[j] = u;
            for (i, &s) in shifted[j].iter().enumerate() {
                r[i] = fld.sub_raw(r[i], fld.mul_raw(u, s));
            }
        }
        r.truncate(e);
        (trim(quot), trim(r))
    }

    /// Right remainder of f modulo g.
    pub fn rem(&self, f: &OrePoly, g: &OrePoly) -> Result<OrePoly> {
        Ok(self.right_divmod(f, g)?.1)
    }

    pub fn right_divides(&self, g: &OrePoly, f: &OrePoly) -> Result<bool> {
        Ok(self.rem(f, g)?.is_zero())
    }

    /// f = g·quot + rem with deg rem < deg g.
    pub fn left_divmod(&self, f: &OrePoly, g: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check(f)?;
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let fld = &self.field;
        let e = g.deg();
        let lead_inv = fld.inv_raw(g.lead());
        let mut r = f.c.clone();
        let mut quot = vec![0u32; f.c.len().saturating_sub(e)];
        while r.len() > e {
            let d = r.len() - 1;
            let j = d - e;
            // g · (u x^j) has leading term g_e σ^e(u) x^d
            let u = self.sigma_pow(fld.mul_raw(lead_inv, r[d]), -(e as i64));
            quot[j] = fld.add_raw(quot[j], u);
            let mut term = vec![0u32; j + 1];
            term[j] = u;
            let prod = self.mul_raw(&g.c, &term);
            r = trim(self.sub_raw(&r, &prod));
        }
        Ok((self.poly(quot), self.poly(r)))
    }

    // ---- gcd / lcm ----

    /// Monic greatest common right divisor.
    pub fn rgcd(&self, f: &OrePoly, g: &OrePoly) -> Result<OrePoly> {
        self.check(f)?;
        self.check(g)?;
        if f.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b)?;
            a = b;
            b = r;
        }
        Ok(self.monic(&a))
    }

    /// Monic least common left multiple (zero if either input is zero).
    pub fn lclm(&self, f: &OrePoly, g: &OrePoly) -> Result<OrePoly> {
        self.check(f)?;
        self.check(g)?;
        if f.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        if f.is_zero() || g.is_zero() {
            return Ok(self.zero());
        }
        // r_i = s_i f + t_i g; stop when r vanishes, then s·f is the lclm
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        while !r1.is_zero() {
            let (q, r) = self.right_divmod(&r0, &r1)?;
            let s = self.sub(&s0, &self.mul(&q, &s1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        self.mul(&s1, f).map(|p| self.monic(&p))
    }

    // ---- norms and evaluation ----

    /// N_{i+1}(a) = σ(N_i(a))·a + δ(N_i(a)), N_0 = 1.
    pub fn norm_raw(&self, i: usize, a: u32) -> u32 {
        let mut n = 1u32;
        for _ in 0..i {
            n = self.norm_step(n, a);
        }
        n
    }

    #[inline]
    pub(crate) fn norm_step(&self, n: u32, a: u32) -> u32 {
        self.field.add_raw(self.field.mul_raw(self.sigma(n), a), self.delta(n))
    }

    pub fn norm(&self, i: usize, a: FieldElement) -> Result<FieldElement> {
        if a.ctx != self.field.id() {
            return Err(Error::CtxMismatch);
        }
        Ok(self.field.elem(self.norm_raw(i, a.value)))
    }

    /// Classical norm a·σ(a)···σ^{i−1}(a), ignoring δ.
    pub fn classical_norm_raw(&self, i: usize, a: u32) -> u32 {
        let mut n = 1u32;
        for _ in 0..i {
            n = self.field.mul_raw(self.sigma(n), a);
        }
        n
    }

    /// Σ f_i N_i(a).
    pub fn skew_eval_raw(&self, f: &[u32], a: u32) -> u32 {
        let mut n = 1u32;
        let mut acc = 0u32;
        for (i, &c) in f.iter().enumerate() {
            if i > 0 {
                n = self.norm_step(n, a);
            }
            acc = self.field.add_raw(acc, self.field.mul_raw(c, n));
        }
        acc
    }

    pub fn skew_eval(&self, f: &OrePoly, a: FieldElement) -> Result<FieldElement> {
        self.check(f)?;
        if a.ctx != self.field.id() {
            return Err(Error::CtxMismatch);
        }
        Ok(self.field.elem(self.skew_eval_raw(&f.c, a.value)))
    }

    // ---- quotient ring R/Rf ----

    pub fn quotient(&self, f: &OrePoly, p: &OrePoly) -> Result<QuotientElem> {
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(QuotientElem { modulus: f.clone(), rep: self.rem(p, f)? })
    }

    /// Left inverse of x and the twisted right companion, both modulo Rf.
    /// Returns (α, β) with α·x ≡ 1 and x·β ≡ 1 + δ'(β).
    pub fn lemma41_inverses(&self, f: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check(f)?;
        if f.is_zero() || !f.is_monic() {
            return Err(Error::NotMonic);
        }
        if f.deg() == 0 {
            return Err(Error::DegreeOutOfRange { deg: 0, n: 0 });
        }
        if f.coeff(0) == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let fld = &self.field;
        // f = x^n − f_{n−1}x^{n−1} − … − f_0, so f_0 = −c_0
        let f0_inv = fld.inv_raw(fld.neg_raw(f.coeff(0)));
        let alpha: Vec<u32> = (1..f.c.len()).map(|j| fld.mul_raw(f0_inv, f.c[j])).collect();
        let beta: Vec<u32> = alpha.iter().map(|&a| self.sigma_inv(a)).collect();
        Ok((self.poly(alpha), self.poly(beta)))
    }

    /// Coefficientwise δ.
    pub fn delta_coeffwise(&self, f: &OrePoly) -> OrePoly {
        self.poly(f.c.iter().map(|&v| self.delta(v)).collect())
    }

    /// Returns (r, r·c mod f) with r = α^{k0}·b_{k0}^{-1}, where b_{k0}x^{k0}
    /// is the lowest nonzero term of c.
    pub fn lemma42_normalize(&self, f: &OrePoly, c: &OrePoly) -> Result<(OrePoly, QuotientElem)> {
        self.check(c)?;
        if f.coeff(0) == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let c = self.rem(c, f)?;
        let k0 = c.c.iter().position(|&v| v != 0).ok_or(Error::ZeroInput)?;
        let (alpha, _) = self.lemma41_inverses(f)?;
        let a_pow = self.pow(&alpha, k0 as u32)?;
        let r = self.mul(&a_pow, &self.constant(self.field.inv_raw(c.c[k0])))?;
        let rc = self.quotient(f, &self.mul(&r, &c)?)?;
        Ok((r, rc))
    }

    // ---- text ----

    pub fn parse(&self, s: &str) -> Result<OrePoly> {
        let terms = polytext::parse_terms(&self.field, s, &["x"])?;
        let deg = terms.iter().map(|t| t.exps[0] as usize).max().unwrap_or(0);
        let mut c = vec![0u32; deg + 1];
        for t in terms {
            let i = t.exps[0] as usize;
            c[i] = self.field.add_raw(c[i], t.coef);
        }
        Ok(self.poly(c))
    }

    /// Descending form `x^2 + w^3*x + w^4`.
    pub fn format(&self, f: &OrePoly) -> String {
        self.format_with(f, false)
    }

    /// Table form `x^2+w^3x+w^4`.
    pub fn format_compact(&self, f: &OrePoly) -> String {
        self.format_with(f, true)
    }

    fn format_with(&self, f: &OrePoly, compact: bool) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = (0..f.c.len())
            .rev()
            .filter(|&i| f.c[i] != 0)
            .map(|i| {
                let mono = polytext::monomial(&["x"], &[i as u32], compact);
                polytext::term(&self.field, f.c[i], &mono, compact)
            })
            .collect();
        parts.join(if compact { "+" } else { " + " })
    }

    /// Display helper bound to this ring.
    pub fn show<'a>(&'a self, f: &'a OrePoly) -> impl fmt::Display + 'a {
        struct D<'a>(&'a OreRing, &'a OrePoly);
        impl fmt::Display for D<'_> {
            fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
                out.write_str(&self.0.format(self.1))
            }
        }
        D(self, f)
    }

    /// Every monic polynomial of degree d, in canonical order (coefficients
    /// c_0..c_{d−1} read as base-q digits, c_0 least significant).
    pub fn monic_of_degree(&self, d: usize, index: u64) -> OrePoly {
        let q = self.field.q() as u64;
        let mut c = Vec::with_capacity(d + 1);
        let mut v = index;
        for _ in 0..d {
            c.push((v % q) as u32);
            v /= q;
        }
        c.push(1);
        self.poly(c)
    }
}
