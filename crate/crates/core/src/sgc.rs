//! Skew generalized cyclic codes: univariate codes generated by a right
//! divisor g, their parity structure, and the separable 2D construction.

use crate::bivar::{shift_closure_check, Array2D, BiOrePoly, BiOreRing, ClosureReport, PseudoLinearMap};
use crate::code::{CodeParams, GenMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ore::{OrePoly, OreRing, Ring};
use crate::par::Workers;
use serde::Serialize;

/// Code with rows x^i·g, i = 0..n−deg g−1.
#[derive(Clone, Debug)]
pub struct SgcCode {
    pub ring: Ring,
    pub g: OrePoly,
    pub n: usize,
    pub gen: GenMatrix,
    pub params: CodeParams,
}

pub fn sgc_from_generator(ring: &Ring, g: &OrePoly, n: usize) -> Result<SgcCode> {
    if g.is_zero() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let deg = g.deg();
    if deg > n {
        return Err(Error::DegreeOutOfRange { deg, n });
    }
    let k = n - deg;
    let mut rows = Vec::with_capacity(k);
    let mut cur = g.coeffs().to_vec();
    for i in 0..k {
        if i > 0 {
            cur = ring.mul_x_raw(&cur);
        }
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
    }
    let gen = GenMatrix::new(ring.field(), n, rows)?;
    Ok(SgcCode { ring: ring.clone(), g: g.clone(), n, gen, params: CodeParams { n, k, d: None } })
}

impl SgcCode {
    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn is_mds(&self) -> bool {
        self.gen.is_mds()
    }

    pub fn min_distance(&self, budget: u64, workers: Workers) -> Result<usize> {
        self.gen.min_distance_with(budget, workers)
    }

    /// Fills in d.
    pub fn with_distance(mut self, budget: u64, workers: Workers) -> Result<Self> {
        self.params.d = Some(self.min_distance(budget, workers)?);
        Ok(self)
    }

    /// Coefficient vector of u·g padded to length n (deg u < k).
    pub fn encode(&self, u: &OrePoly) -> Result<Vec<u32>> {
        if u.deg() >= self.k().max(1) && !u.is_zero() {
            return Err(Error::DegreeOutOfRange { deg: u.deg(), n: self.k() });
        }
        let mut v = self.ring.mul(u, &self.g)?.coeffs().to_vec();
        v.resize(self.n, 0);
        Ok(v)
    }

    pub fn a_set(&self) -> Vec<u32> {
        divisor_targets(&self.ring, &self.g, self.n)
    }

    pub fn record(&self) -> SgcRecord {
        let fld = self.ring.field();
        SgcRecord {
            q: fld.q(),
            t: self.ring.t(),
            gamma: fld.format_raw(self.ring.gamma()),
            n: self.n,
            k: self.k(),
            d: self.params.d,
            g: self.ring.format_compact(&self.g),
            a_set: format_set(fld, &self.a_set()),
            mds: self.params.d.map(|d| d + self.k() == self.n + 1).unwrap_or_else(|| self.is_mds()),
        }
    }
}

/// Table record for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SgcRecord {
    pub q: u32,
    pub t: u32,
    pub gamma: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub g: String,
    pub a_set: String,
    pub mds: bool,
}

impl SgcRecord {
    pub const TSV_HEADER: &'static str = "q\tt\tgamma\tn\tk\td\tg\ta_set";

    pub fn tsv(&self) -> String {
        let d = self.d.map(|d| d.to_string()).unwrap_or_else(|| "?".into());
        format!("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}", self.q, self.t, self.gamma, self.n, self.k, d, self.g, self.a_set)
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

pub const NONE_SYMBOL: &str = "∄";

/// Comma-joined set sorted by discrete log, or ∄ when empty.
pub fn format_set(field: &Field, set: &[u32]) -> String {
    if set.is_empty() {
        return NONE_SYMBOL.into();
    }
    let mut s = set.to_vec();
    s.sort_by_key(|&a| field.sort_key(a));
    s.iter().map(|&a| field.format_raw(a)).collect::<Vec<_>>().join(",")
}

/// All nonzero a with x^n − a in R·g.
///
/// Right division is left-linear, so x^n − a ≡ rem(x^n) − a; the set is
/// {rem(x^n)} when that remainder is a nonzero constant and empty otherwise.
pub fn divisor_targets(ring: &OreRing, g: &OrePoly, n: usize) -> Vec<u32> {
    let q = ring.field().q();
    if g.deg() == 0 {
        return (1..q).collect();
    }
    let r = x_power_rem(ring, g, n);
    match r.as_slice() {
        [a] if *a != 0 => vec![*a],
        _ => Vec::new(),
    }
}

/// Right remainder of x^n modulo a monic g of degree ≥ 1.
pub(crate) fn x_power_rem(ring: &OreRing, g: &OrePoly, n: usize) -> Vec<u32> {
    let fld = ring.field();
    let e = g.deg();
    let gc = g.coeffs();
    let mut r = vec![1u32];
    for _ in 0..n {
        let mut next = ring.mul_x_raw(&r);
        if next.len() > e {
            // leading term c·x^e: subtract c·g
            let c = next[e];
            for (i, &gi) in gc.iter().enumerate().take(e) {
                next[i] = fld.sub_raw(next[i], fld.mul_raw(c, gi));
            }
            next.truncate(e);
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        r = next;
    }
    r
}

/// Parity data for a two-sided factorization f = h·g = g·h'.
#[derive(Clone, Debug)]
pub struct CofactorParity {
    pub h_prime: OrePoly,
    /// Rows T_f^i(h̄') for i = 0..n−1.
    pub shifts: GenMatrix,
    /// Independent columns of `shifts`, written as rows.
    pub h: GenMatrix,
}

pub fn cofactor_parity(ring: &Ring, f: &OrePoly, g: &OrePoly) -> Result<CofactorParity> {
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.coeff(0) == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    let (_, rr) = ring.right_divmod(f, g)?;
    let (h_prime, lr) = ring.left_divmod(f, g)?;
    if !rr.is_zero() || !lr.is_zero() {
        return Err(Error::NotTwoSidedDivisor);
    }
    let n = f.deg();
    let t = PseudoLinearMap::from_modulus(ring, f)?;
    let mut v = h_prime.coeffs().to_vec();
    v.resize(n, 0);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        if i > 0 {
            v = t.apply(&v)?;
        }
        rows.push(v.clone());
    }
    let shifts = GenMatrix::new(ring.field(), n, rows)?;
    let mut chosen: Vec<Vec<u32>> = Vec::new();
    for j in 0..n {
        let col: Vec<u32> = shifts.rows.iter().map(|r| r[j]).collect();
        let mut trial = chosen.clone();
        trial.push(col.clone());
        if GenMatrix::new(ring.field(), n, trial)?.rank() == chosen.len() + 1 {
            chosen.push(col);
        }
    }
    let h = GenMatrix::new(ring.field(), n, chosen)?;
    Ok(CofactorParity { h_prime, shifts, h })
}

/// ((M^t)_{σ^{-1}}, σ^{-1}, −σ^{-1}δ). The last map is the inner derivation
/// of σ^{-1} with parameter σ^{-1}(γ).
pub fn dual_transform(t: &PseudoLinearMap) -> PseudoLinearMap {
    let fld = &t.field;
    let m = fld.m();
    let inv_t = (m - t.t % m) % m;
    let n = t.dim();
    let mt = (0..n).map(|i| (0..n).map(|j| fld.frob_raw(t.m[j][i], inv_t)).collect()).collect();
    PseudoLinearMap { field: fld.clone(), m: mt, t: inv_t, gamma: fld.frob_raw(t.gamma, inv_t) }
}

/// Whether T maps every row of `code` back into its row space.
pub fn is_invariant(code: &GenMatrix, t: &PseudoLinearMap) -> Result<bool> {
    for r in &code.rows {
        if !code.contains(&t.apply(r)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Separable 2D code generated by g modulo (f1(x1), f2(x2)).
#[derive(Clone, Debug)]
pub struct Sgc2dCode {
    pub ring: crate::bivar::BiRing,
    pub g: BiOrePoly,
    pub f1: OrePoly,
    pub f2: OrePoly,
    pub s: usize,
    pub l: usize,
    pub gen: GenMatrix,
    pub params: CodeParams,
    pub expected_k: usize,
    pub closure: ClosureReport,
}

impl Sgc2dCode {
    pub fn rank_matches(&self) -> bool {
        self.params.k == self.expected_k
    }
}

pub fn sgc2d_from_generator(
    ring: &crate::bivar::BiRing,
    f1: &OrePoly,
    f2: &OrePoly,
    g: &BiOrePoly,
) -> Result<Sgc2dCode> {
    let (s, l) = (f1.deg(), f2.deg());
    let (k1, k2) = g.lexdeg()?;
    if k1 as usize >= s.max(1) || k2 as usize >= l.max(1) {
        return Err(Error::LexdegOutOfRange { lexdeg: (k1, k2), s, l });
    }
    let field = ring.field().clone();
    let mut rows = Vec::new();
    for j in 0..(l - k2 as usize) as u32 {
        for i in 0..(s - k1 as usize) as u32 {
            let p = ring.mul(&ring.monomial(1, i, j), g)?;
            let red = ring.reduce_pair(f1, f2, &p)?;
            rows.push(ring.gamma_f_inv(&red, s, l)?.flat().to_vec());
        }
    }
    let gen = GenMatrix::new(&field, s * l, rows)?;
    let k = gen.rank();
    let spans: Vec<Array2D> = gen
        .rows
        .iter()
        .map(|r| Array2D::from_flat(&field, s, l, r.clone()))
        .collect::<Result<_>>()?;
    let t_row = PseudoLinearMap::from_modulus(&ring.univariate(2), &rebase(&ring.univariate(2), f2))?;
    let t_col = PseudoLinearMap::from_modulus(&ring.univariate(1), &rebase(&ring.univariate(1), f1))?;
    let closure = shift_closure_check(&spans, &t_row, &t_col)?;
    Ok(Sgc2dCode {
        ring: ring.clone(),
        g: g.clone(),
        f1: f1.clone(),
        f2: f2.clone(),
        s,
        l,
        gen,
        params: CodeParams { n: s * l, k, d: None },
        expected_k: (s - k1 as usize) * (l - k2 as usize),
        closure,
    })
}

fn rebase(ring: &OreRing, f: &OrePoly) -> OrePoly {
    ring.poly(f.coeffs().to_vec())
}

/// F_q[x1;σ1][x2;σ2] with σ_i = Frobenius^{t_i}.
pub fn bivariate(field: &Field, t1: u32, t2: u32) -> crate::bivar::BiRing {
    BiOreRing::new(field, t1, t2)
}
