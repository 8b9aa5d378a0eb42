//! Linear block codes over F_q given by generator matrices.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::par::Workers;
use serde::Serialize;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Rows of equal length n; the code is their row space.
#[derive(Clone, Debug)]
pub struct GenMatrix {
    pub field: Field,
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    pub matrix: GenMatrix,
    pub pivots: Vec<usize>,
}

pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

impl PartialEq for GenMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.id() == other.field.id() && self.n == other.n && self.rows == other.rows
    }
}

impl GenMatrix {
    pub fn new(field: &Field, n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
        Ok(GenMatrix { field: field.clone(), n, rows })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        Self::new(field, n, rows)
    }

    pub fn k_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        let f = &self.field;
        a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add_raw(acc, f.mul_raw(x, y)))
    }

    /// Row-major text, entries comma separated and rows separated by `;`.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| self.field.format_raw(v)).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for row in s.split(';') {
            let mut r = Vec::new();
            let mut o = offset;
            for tok in row.split(',') {
                let lead = tok.len() - tok.trim_start().len();
                r.push(field.parse_at(tok.trim(), o + lead)?.value);
                o += tok.len() + 1;
            }
            rows.push(r);
            offset += row.len() + 1;
        }
        Self::from_rows(field, rows)
    }

    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.n {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| m[i][col] != 0) else { continue };
            m.swap(r, p);
            let inv = f.inv_raw(m[r][col]);
            for v in m[r].iter_mut() {
                *v = f.mul_raw(*v, inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && row[col] != 0 {
                    let c = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = f.sub_raw(*x, f.mul_raw(c, y));
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        m.truncate(r);
        Rref {
            rank: r,
            matrix: GenMatrix { field: self.field.clone(), n: self.n, rows: m },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Same row space (canonical RREF comparison).
    pub fn same_code(&self, other: &GenMatrix) -> bool {
        self.field.id() == other.field.id() && self.n == other.n && self.rref().matrix.rows == other.rref().matrix.rows
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let base = self.rank();
        let mut ext = self.clone();
        ext.rows.push(v.to_vec());
        ext.rank() == base
    }

    /// Basis of the Euclidean dual.
    pub fn dual(&self) -> GenMatrix {
        let f = &self.field;
        let red = self.rref();
        let free: Vec<usize> = (0..self.n).filter(|c| !red.pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.n];
                v[fc] = 1;
                for (i, &pc) in red.pivots.iter().enumerate() {
                    v[pc] = f.neg_raw(red.matrix.rows[i][fc]);
                }
                v
            })
            .collect();
        GenMatrix { field: self.field.clone(), n: self.n, rows }
    }

    /// True iff every set of k columns of the reduced generator is independent.
    pub fn is_mds(&self) -> bool {
        let red = self.rref();
        let k = red.rank;
        if k == 0 {
            return false;
        }
        let rows = &red.matrix.rows;
        let mut cols: Vec<usize> = (0..k).collect();
        loop {
            if !self.columns_independent(rows, &cols) {
                return false;
            }
            // next k-subset in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                if cols[i] < self.n - k + i {
                    break;
                }
                if i == 0 {
                    return true;
                }
            }
            cols[i] += 1;
            for j in i + 1..k {
                cols[j] = cols[j - 1] + 1;
            }
        }
    }

    fn columns_independent(&self, rows: &[Vec<u32>], cols: &[usize]) -> bool {
        let f = &self.field;
        let k = cols.len();
        let mut m: Vec<Vec<u32>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        for c in 0..k {
            let Some(p) = (c..k).find(|&i| m[i][c] != 0) else { return false };
            m.swap(c, p);
            let inv = f.inv_raw(m[c][c]);
            for i in c + 1..k {
                if m[i][c] != 0 {
                    let factor = f.mul_raw(m[i][c], inv);
                    let (top, rest) = m.split_at_mut(i);
                    for (x, &y) in rest[0][c..k].iter_mut().zip(&top[c][c..k]) {
                        *x = f.sub_raw(*x, f.mul_raw(factor, y));
                    }
                }
            }
        }
        true
    }

    /// Exact minimum distance with the default budget and all workers.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with(DEFAULT_BUDGET, Workers::default())
    }

    /// Exact minimum distance. Full message enumeration (up to scalars) when
    /// q^k fits the budget, otherwise information-set enumeration by
    /// increasing message weight.
    pub fn min_distance_with(&self, budget: u64, workers: Workers) -> Result<usize> {
        let red = self.rref();
        let k = red.rank;
        if k == 0 {
            return Err(Error::ZeroInput);
        }
        let q = self.field.q() as u64;
        let full = (q as f64).powi(k as i32) <= budget as f64;
        if full {
            Ok(full_enumeration(&red.matrix, workers))
        } else {
            info_set_enumeration(&red, budget, workers)
        }
    }

    /// Information-set tier only, regardless of the size of q^k.
    pub fn min_distance_info_set(&self, budget: u64, workers: Workers) -> Result<usize> {
        let red = self.rref();
        if red.rank == 0 {
            return Err(Error::ZeroInput);
        }
        info_set_enumeration(&red, budget, workers)
    }

    /// Checks d ≥ bound without necessarily finishing the enumeration.
    pub fn distance_at_least(&self, bound: usize, budget: u64, workers: Workers) -> Result<bool> {
        match self.min_distance_with(budget, workers) {
            Ok(d) => Ok(d >= bound),
            Err(Error::BudgetExceeded { lower, .. }) if lower >= bound => Ok(true),
            Err(Error::BudgetExceeded { upper, .. }) if upper < bound => Ok(false),
            Err(e) => Err(e),
        }
    }

    pub fn params(&self) -> CodeParams {
        CodeParams { n: self.n, k: self.rank(), d: None }
    }
}

// digit s ↦ field value: 0, w^0, w^1, ...
fn digit_values(field: &Field) -> Vec<u32> {
    let q = field.q();
    std::iter::once(0).chain((0..q - 1).map(|i| field.exp_raw(i as i64))).collect()
}

/// Minimum weight over all messages whose last nonzero entry is 1.
fn full_enumeration(basis: &GenMatrix, workers: Workers) -> usize {
    let f = &basis.field;
    let q = f.q() as usize;
    let k = basis.rows.len();
    let n = basis.n;
    let vals = digit_values(f);
    // step[j][s] = (val(s+1) − val(s))·row_j, wrapping at the last digit
    let step: Vec<Vec<Vec<u32>>> = basis
        .rows
        .iter()
        .map(|row| {
            (0..q)
                .map(|s| {
                    let diff = f.sub_raw(vals[(s + 1) % q], vals[s]);
                    row.iter().map(|&x| f.mul_raw(diff, x)).collect()
                })
                .collect()
        })
        .collect();
    // tasks: (lead position, prefix of the top free digits)
    let mut tasks = Vec::new();
    for lead in 0..k {
        let pdig = lead.min(2);
        for prefix in 0..q.pow(pdig as u32) {
            tasks.push((lead, pdig, prefix));
        }
    }
    let mins = workers.map(&tasks, |&(lead, pdig, prefix)| {
        let mut cw = basis.rows[lead].clone();
        let mut pv = prefix;
        for j in (lead - pdig)..lead {
            let v = vals[pv % q];
            pv /= q;
            for (c, &x) in cw.iter_mut().zip(&basis.rows[j]) {
                *c = f.add_raw(*c, f.mul_raw(v, x));
            }
        }
        let low = lead - pdig;
        let mut digits = vec![0usize; low];
        let mut best = weight(&cw);
        loop {
            // odometer increment on the low digits
            let mut j = 0;
            loop {
                if j == low {
                    return best;
                }
                let s = digits[j];
                for (c, &x) in cw.iter_mut().zip(&step[j][s]) {
                    *c = f.add_raw(*c, x);
                }
                digits[j] = (s + 1) % q;
                if digits[j] != 0 {
                    break;
                }
                j += 1;
            }
            let w = weight(&cw);
            if w < best {
                best = w;
            }
        }
    });
    mins.into_iter().min().unwrap_or(n)
}

fn info_set_enumeration(red: &Rref, budget: u64, workers: Workers) -> Result<usize> {
    let basis = &red.matrix;
    let f = &basis.field;
    let k = red.rank;
    let n = basis.n;
    let q = f.q() as u64;
    let nonzero: Vec<u32> = (0..q as u32 - 1).map(|i| f.exp_raw(i as i64)).collect();
    let mut upper = basis.rows.iter().map(|r| weight(r)).min().unwrap_or(n);
    let mut lower = 1usize;
    let mut spent = 0u64;
    for w in 1..=k {
        if upper <= lower {
            break;
        }
        // projective messages of weight w: C(k,w)(q−1)^(w−1)
        let supports = combinations(k, w);
        let per = (q - 1).pow(w as u32 - 1);
        let cost = supports.len() as u64 * per;
        if spent + cost > budget {
            return Err(Error::BudgetExceeded { lower, upper });
        }
        spent += cost;
        let best = workers.map(&supports, |sup| {
            let mut best = usize::MAX;
            for idx in 0..per {
                let mut cw = basis.rows[sup[0]].clone();
                let mut v = idx;
                for &j in &sup[1..] {
                    let c = nonzero[(v % (q - 1)) as usize];
                    v /= q - 1;
                    for (x, &y) in cw.iter_mut().zip(&basis.rows[j]) {
                        *x = f.add_raw(*x, f.mul_raw(c, y));
                    }
                }
                best = best.min(weight(&cw));
            }
            best
        });
        upper = upper.min(best.into_iter().min().unwrap_or(usize::MAX));
        // every message of weight > w has weight ≥ w+1 on the information set
        lower = w + 1;
    }
    Ok(upper)
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}
