//! Bivariate skew polynomials F_q[x1; σ1][x2; σ2] with commuting variables,
//! s×l arrays, companion matrices and pseudo-linear maps.

use crate::code::GenMatrix;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::ore::{OrePoly, OreRing, Ring};
use crate::polytext;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug)]
pub struct BiOreRing {
    field: Field,
    t1: u32,
    t2: u32,
}

pub type BiRing = Arc<BiOreRing>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BiRingKey {
    pub field: u32,
    pub t1: u32,
    pub t2: u32,
}

/// Sparse terms keyed by (a1, a2); BTreeMap order is the lex order with x1 dominant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiOrePoly {
    key: BiRingKey,
    terms: BTreeMap<(u32, u32), u32>,
}

impl BiOrePoly {
    pub fn key(&self) -> BiRingKey {
        self.key
    }
    pub fn terms(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coeff(&self, a1: u32, a2: u32) -> u32 {
        self.terms.get(&(a1, a2)).copied().unwrap_or(0)
    }
    /// Greatest exponent pair of the support.
    pub fn lexdeg(&self) -> Result<(u32, u32)> {
        self.terms.keys().next_back().copied().ok_or(Error::ZeroPolynomial)
    }
}

impl BiOreRing {
    pub fn new(field: &Field, t1: u32, t2: u32) -> BiRing {
        let m = field.m();
        Arc::new(BiOreRing { field: field.clone(), t1: t1 % m, t2: t2 % m })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn t1(&self) -> u32 {
        self.t1
    }
    pub fn t2(&self) -> u32 {
        self.t2
    }
    pub fn key(&self) -> BiRingKey {
        BiRingKey { field: self.field.id(), t1: self.t1, t2: self.t2 }
    }

    /// Univariate ring of the variable x_i (1 or 2).
    pub fn univariate(&self, i: u8) -> Ring {
        let t = if i == 1 { self.t1 } else { self.t2 };
        OreRing::new(&self.field, t, 0).expect("zero gamma is valid")
    }

    fn twist(&self, c: u32, i: u32, j: u32) -> u32 {
        let m = self.field.m() as u64;
        let e = (self.t1 as u64 * i as u64 + self.t2 as u64 * j as u64) % m;
        self.field.frob_raw(c, e as u32)
    }

    fn check(&self, f: &BiOrePoly) -> Result<()> {
        if f.key == self.key() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = ((u32, u32), u32)>) -> BiOrePoly {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let slot: &mut u32 = map.entry(e).or_insert(0);
            *slot = self.field.add_raw(*slot, c);
        }
        map.retain(|_, c| *c != 0);
        BiOrePoly { key: self.key(), terms: map }
    }

    pub fn zero(&self) -> BiOrePoly {
        self.from_terms([])
    }
    pub fn one(&self) -> BiOrePoly {
        self.from_terms([((0, 0), 1)])
    }
    pub fn monomial(&self, c: u32, a1: u32, a2: u32) -> BiOrePoly {
        self.from_terms([((a1, a2), c)])
    }

    /// Lifts a univariate polynomial into the variable x_i.
    pub fn lift(&self, f: &OrePoly, var: u8) -> BiOrePoly {
        self.from_terms(f.coeffs().iter().enumerate().map(|(k, &c)| {
            let e = if var == 1 { (k as u32, 0) } else { (0, k as u32) };
            (e, c)
        }))
    }

    pub fn add(&self, f: &BiOrePoly, g: &BiOrePoly) -> Result<BiOrePoly> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.from_terms(f.terms.iter().chain(&g.terms).map(|(&e, &c)| (e, c))))
    }

    pub fn sub(&self, f: &BiOrePoly, g: &BiOrePoly) -> Result<BiOrePoly> {
        self.check(g)?;
        let neg = self.from_terms(g.terms.iter().map(|(&e, &c)| (e, self.field.neg_raw(c))));
        self.add(f, &neg)
    }

    /// (a x1^i x2^j)(b x1^k x2^l) = a σ1^i σ2^j(b) x1^{i+k} x2^{j+l}.
    pub fn mul(&self, f: &BiOrePoly, g: &BiOrePoly) -> Result<BiOrePoly> {
        self.check(f)?;
        self.check(g)?;
        let fld = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() * g.terms.len());
        for (&(i, j), &a) in &f.terms {
            for (&(k, l), &b) in &g.terms {
                out.push(((i + k, j + l), fld.mul_raw(a, self.twist(b, i, j))));
            }
        }
        Ok(self.from_terms(out))
    }

    /// Checks that the pair (f1(x1), f2(x2)) reduces consistently: the
    /// S-polynomial x2^l f1 − x1^s f2 must reduce to zero.
    pub fn moduli_commute(&self, f1: &OrePoly, f2: &OrePoly) -> bool {
        let (s, l) = (f1.deg(), f2.deg());
        let fld = &self.field;
        let m = fld.m();
        let s1 = |c: u32, k: usize| fld.frob_raw(c, ((self.t1 as u64 * k as u64) % m as u64) as u32);
        let s2 = |c: u32, k: usize| fld.frob_raw(c, ((self.t2 as u64 * k as u64) % m as u64) as u32);
        (0..s).all(|k| {
            (0..l).all(|j| {
                let a = f1.coeff(k);
                let b = f2.coeff(j);
                fld.mul_raw(s1(b, s), s2(a, j)) == fld.mul_raw(s2(a, l), s1(b, k))
            })
        })
    }

    /// Representative of c modulo B f1 + B f2 with x1-degree < s and x2-degree < l.
    pub fn reduce_pair(&self, f1: &OrePoly, f2: &OrePoly, c: &BiOrePoly) -> Result<BiOrePoly> {
        self.check(c)?;
        if !f1.is_monic() || !f2.is_monic() {
            return Err(Error::NotMonic);
        }
        if !self.moduli_commute(f1, f2) {
            return Err(Error::NonCommutingModuli);
        }
        let fld = &self.field;
        let (s, l) = (f1.deg() as u32, f2.deg() as u32);
        let mut terms = c.terms.clone();
        // x1 first, highest x1-degree first
        while let Some((&(a, b), &coef)) = terms.iter().rev().find(|(&(a, _), _)| a >= s) {
            terms.remove(&(a, b));
            for (k, &fk) in f1.coeffs()[..s as usize].iter().enumerate() {
                if fk == 0 {
                    continue;
                }
                let v = fld.neg_raw(fld.mul_raw(coef, self.twist(fk, a - s, b)));
                add_term(fld, &mut terms, (a - s + k as u32, b), v);
            }
        }
        while let Some((&(a, b), &coef)) = terms.iter().filter(|(&(_, b), _)| b >= l).max_by_key(|(&(_, b), _)| b) {
            terms.remove(&(a, b));
            for (j, &fj) in f2.coeffs()[..l as usize].iter().enumerate() {
                if fj == 0 {
                    continue;
                }
                let v = fld.neg_raw(fld.mul_raw(coef, self.twist(fj, a, b - l)));
                add_term(fld, &mut terms, (a, b - l + j as u32), v);
            }
        }
        Ok(BiOrePoly { key: self.key(), terms })
    }

    /// Array entry (i, j) becomes the coefficient of x1^i x2^j.
    pub fn gamma_f(&self, arr: &Array2D, f1: &OrePoly, f2: &OrePoly) -> Result<BiOrePoly> {
        if arr.s != f1.deg() {
            return Err(Error::DimensionMismatch { expected: f1.deg(), got: arr.s });
        }
        if arr.l != f2.deg() {
            return Err(Error::DimensionMismatch { expected: f2.deg(), got: arr.l });
        }
        Ok(self.from_terms(
            (0..arr.s).flat_map(|i| (0..arr.l).map(move |j| ((i as u32, j as u32), arr.get(i, j)))),
        ))
    }

    pub fn gamma_f_inv(&self, c: &BiOrePoly, s: usize, l: usize) -> Result<Array2D> {
        self.check(c)?;
        let mut arr = Array2D::zeros(&self.field, s, l);
        for (&(a, b), &v) in &c.terms {
            if a as usize >= s {
                return Err(Error::DimensionMismatch { expected: s, got: a as usize + 1 });
            }
            if b as usize >= l {
                return Err(Error::DimensionMismatch { expected: l, got: b as usize + 1 });
            }
            arr.set(a as usize, b as usize, v);
        }
        Ok(arr)
    }

    pub fn parse(&self, s: &str) -> Result<BiOrePoly> {
        let terms = polytext::parse_terms(&self.field, s, &["x1", "x2"])?;
        Ok(self.from_terms(terms.into_iter().map(|t| ((t.exps[0], t.exps[1]), t.coef))))
    }

    /// Descending lex order, e.g. `x1^2*x2 + w*x1 + 1`.
    pub fn format(&self, f: &BiOrePoly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        f.terms
            .iter()
            .rev()
            .map(|(&(a, b), &c)| {
                let mono = polytext::monomial(&["x1", "x2"], &[a, b], false);
                polytext::term(&self.field, c, &mono, false)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn add_term(fld: &Field, terms: &mut BTreeMap<(u32, u32), u32>, e: (u32, u32), v: u32) {
    let cur = terms.get(&e).copied().unwrap_or(0);
    let nv = fld.add_raw(cur, v);
    if nv == 0 {
        terms.remove(&e);
    } else {
        terms.insert(e, nv);
    }
}

/// An s×l array over F_q.
#[derive(Clone, Debug)]
pub struct Array2D {
    pub field: Field,
    pub s: usize,
    pub l: usize,
    entries: Vec<u32>,
}

impl PartialEq for Array2D {
    fn eq(&self, o: &Self) -> bool {
        self.field.id() == o.field.id() && self.s == o.s && self.l == o.l && self.entries == o.entries
    }
}

impl Array2D {
    pub fn zeros(field: &Field, s: usize, l: usize) -> Self {
        Array2D { field: field.clone(), s, l, entries: vec![0; s * l] }
    }

    pub fn from_flat(field: &Field, s: usize, l: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != s * l {
            return Err(Error::DimensionMismatch { expected: s * l, got: entries.len() });
        }
        Ok(Array2D { field: field.clone(), s, l, entries })
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.l + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.l + j] = v;
    }
    pub fn element(&self, i: usize, j: usize) -> FieldElement {
        self.field.elem(self.get(i, j))
    }
    /// Row-major flattening.
    pub fn flat(&self) -> &[u32] {
        &self.entries
    }
    pub fn row(&self, i: usize) -> Vec<u32> {
        self.entries[i * self.l..(i + 1) * self.l].to_vec()
    }
    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.s).map(|i| self.get(i, j)).collect()
    }

    pub fn add(&self, o: &Array2D) -> Result<Array2D> {
        if (self.s, self.l) != (o.s, o.l) {
            return Err(Error::DimensionMismatch { expected: self.s * self.l, got: o.s * o.l });
        }
        let e = self.entries.iter().zip(&o.entries).map(|(&a, &b)| self.field.add_raw(a, b)).collect();
        Ok(Array2D { entries: e, ..self.clone() })
    }

    pub fn to_text(&self) -> String {
        (0..self.s)
            .map(|i| self.row(i).iter().map(|&v| self.field.format_raw(v)).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(field: &Field, s: &str) -> Result<Array2D> {
        let g = GenMatrix::parse(field, s)?;
        let rows = g.rows.len();
        Array2D::from_flat(field, rows, g.n, g.rows.concat())
    }
}

/// Companion matrix: ones on the superdiagonal, last row −f_0 … −f_{n−1}.
pub fn companion(ring: &OreRing, f: &OrePoly) -> Result<Vec<Vec<u32>>> {
    if f.is_zero() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    let fld = ring.field();
    let mut m = vec![vec![0u32; n]; n];
    for (i, row) in m.iter_mut().enumerate().take(n.saturating_sub(1)) {
        row[i + 1] = 1;
    }
    if let Some(last) = m.last_mut() {
        for (j, v) in last.iter_mut().enumerate() {
            *v = fld.neg_raw(f.coeff(j));
        }
    }
    Ok(m)
}

/// T(v) = σ(v)·M + δ(v) with σ = Frobenius^t and δ(a) = γ(σ(a) − a).
#[derive(Clone, Debug)]
pub struct PseudoLinearMap {
    pub field: Field,
    pub m: Vec<Vec<u32>>,
    pub t: u32,
    pub gamma: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub row_closed: bool,
    pub col_closed: bool,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.row_closed && self.col_closed
    }
}

impl PseudoLinearMap {
    pub fn new(field: &Field, m: Vec<Vec<u32>>, t: u32, gamma: u32) -> Result<Self> {
        let n = m.len();
        if let Some(r) = m.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
        let t = t % field.m();
        let gamma = if t == 0 { 0 } else { gamma };
        Ok(PseudoLinearMap { field: field.clone(), m, t, gamma })
    }

    /// The map v ↦ x·v mod f of a univariate ring.
    pub fn from_modulus(ring: &OreRing, f: &OrePoly) -> Result<Self> {
        Self::new(ring.field(), companion(ring, f)?, ring.t(), ring.gamma())
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn sigma(&self, a: u32) -> u32 {
        self.field.frob_raw(a, self.t)
    }

    pub fn delta(&self, a: u32) -> u32 {
        self.field.mul_raw(self.gamma, self.field.sub_raw(self.sigma(a), a))
    }

    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: v.len() });
        }
        let fld = &self.field;
        let sv: Vec<u32> = v.iter().map(|&a| self.sigma(a)).collect();
        Ok((0..n)
            .map(|j| {
                let lin = (0..n).fold(0, |acc, i| fld.add_raw(acc, fld.mul_raw(sv[i], self.m[i][j])));
                fld.add_raw(lin, self.delta(v[j]))
            })
            .collect())
    }
}

/// Applies `t_row` to each row and `t_col` to each column of every spanning
/// array, and reports whether the results stay in the span.
pub fn shift_closure_check(
    span: &[Array2D],
    t_row: &PseudoLinearMap,
    t_col: &PseudoLinearMap,
) -> Result<ClosureReport> {
    let Some(first) = span.first() else {
        return Ok(ClosureReport { row_closed: true, col_closed: true });
    };
    let (s, l, field) = (first.s, first.l, first.field.clone());
    if t_row.dim() != l {
        return Err(Error::DimensionMismatch { expected: l, got: t_row.dim() });
    }
    if t_col.dim() != s {
        return Err(Error::DimensionMismatch { expected: s, got: t_col.dim() });
    }
    let code = GenMatrix::new(&field, s * l, span.iter().map(|a| a.flat().to_vec()).collect())?;
    let mut row_closed = true;
    let mut col_closed = true;
    for a in span {
        let mut r = Array2D::zeros(&field, s, l);
        for i in 0..s {
            for (j, v) in t_row.apply(&a.row(i))?.into_iter().enumerate() {
                r.set(i, j, v);
            }
        }
        row_closed &= code.contains(r.flat());
        let mut c = Array2D::zeros(&field, s, l);
        for j in 0..l {
            for (i, v) in t_col.apply(&a.column(j))?.into_iter().enumerate() {
                c.set(i, j, v);
            }
        }
        col_closed &= code.contains(c.flat());
    }
    Ok(ClosureReport { row_closed, col_closed })
}
