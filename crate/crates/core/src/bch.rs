//! Certifiers for BCH-type distance bounds over F_q[x; θ, δ] and the
//! lclm-based MDS constructor.
//!
//! Roots live in the registry extension GF(q^e) with the same Frobenius
//! exponent and γ embedded.

use crate::code::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::field::FieldEmbedding;
use crate::ore::{OrePoly, OreRing, Ring};
use crate::par::Workers;
use crate::sample;
use crate::sgc::{sgc_from_generator, SgcCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Root conditions plus every hypothesis of the theorem.
    Strict,
    /// Root conditions only; diagnostic, carries no guarantee.
    RootsOnly,
}

/// How to read the norms written without θ,δ in the hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormReading {
    Classical,
    Twisted,
}

/// Which point g is evaluated at for exponent L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointConvention {
    /// β_i = N_L^{θ,δ}(β) itself.
    NormValue,
    /// The field power β_i^L.
    NormPower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BchOptions {
    pub mode: Mode,
    pub norms: NormReading,
    pub points: PointConvention,
}

impl Default for BchOptions {
    fn default() -> Self {
        BchOptions { mode: Mode::Strict, norms: NormReading::Classical, points: PointConvention::NormValue }
    }
}

impl BchOptions {
    pub fn mode(mode: Mode) -> Self {
        BchOptions { mode, ..Default::default() }
    }
}

/// β is a raw value of GF(q^e).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BchWitness {
    pub beta: u32,
    pub e: u32,
    pub l: usize,
    pub mvec: Vec<usize>,
    pub delta: usize,
    pub svec: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisResult {
    /// R, H1, H2 or H3.
    pub id: &'static str,
    /// Grid point for R, otherwise (i, direction j, tail...).
    pub index: Vec<usize>,
    pub pass: bool,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BchReport {
    pub mode: Mode,
    pub certified_bound: Option<usize>,
    pub hypothesis_log: Vec<HypothesisResult>,
}

impl BchReport {
    pub fn first_failure(&self) -> Option<&HypothesisResult> {
        self.hypothesis_log.iter().find(|h| !h.pass)
    }
}

struct Ext {
    ring: Ring,
    emb: FieldEmbedding,
}

fn extension(base: &OreRing, w: &BchWitness) -> Result<Ext> {
    let (ring, emb) = base.extend(w.e)?;
    if w.beta >= ring.field().q() {
        return Err(Error::ExtensionTooSmall);
    }
    Ok(Ext { ring, emb })
}

pub fn verify_single(code: &SgcCode, w: &BchWitness, opts: BchOptions) -> Result<BchReport> {
    if w.mvec.len() != 1 {
        return Err(Error::IndexOutOfRange(format!("expected one exponent, got {}", w.mvec.len())));
    }
    if !w.svec.is_empty() {
        return Err(Error::IndexOutOfRange("single witness takes no ranges".into()));
    }
    verify(code, w, opts)
}

pub fn verify_multi(code: &SgcCode, w: &BchWitness, opts: BchOptions) -> Result<BchReport> {
    if w.mvec.len() < 2 {
        return Err(Error::IndexOutOfRange(format!("expected at least two exponents, got {}", w.mvec.len())));
    }
    if w.svec.len() != w.mvec.len() - 1 {
        return Err(Error::IndexOutOfRange(format!(
            "expected {} ranges, got {}",
            w.mvec.len() - 1,
            w.svec.len()
        )));
    }
    verify(code, w, opts)
}

/// Every tail (i_2, ..., i_r) with 0 ≤ i_k ≤ s_k.
fn tails(svec: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in svec {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=s).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn verify(code: &SgcCode, w: &BchWitness, opts: BchOptions) -> Result<BchReport> {
    let ext = extension(&code.ring, w)?;
    let er = &ext.ring;
    let fld = er.field().clone();
    let mut log = Vec::new();
    if w.delta <= 1 {
        return Ok(BchReport { mode: opts.mode, certified_bound: Some(w.delta.max(1)), hypothesis_log: log });
    }
    if w.mvec.iter().all(|&m| m == 0) {
        return Err(Error::MvecAllZero);
    }
    let g = er.embed_poly(&ext.emb, &code.g);
    let tails = tails(&w.svec);
    let tail_sum = |t: &[usize]| -> usize { t.iter().zip(&w.mvec[1..]).map(|(i, m)| i * m).sum() };
    let bound = w.delta + w.svec.iter().sum::<usize>();

    // (R) roots on the grid
    for i1 in 0..=w.delta - 2 {
        for t in &tails {
            let ll = w.l + w.mvec[0] * i1 + tail_sum(t);
            let bi = er.norm_raw(ll, w.beta);
            let point = match opts.points {
                PointConvention::NormValue => bi,
                PointConvention::NormPower => fld.pow_raw(bi, ll as i64),
            };
            let v = er.skew_eval_raw(g.coeffs(), point);
            let mut index = vec![i1];
            index.extend(t);
            log.push(HypothesisResult { id: "R", index, pass: v == 0, value: fld.format_raw(v) });
        }
    }

    if opts.mode == Mode::Strict {
        let norm = |i: usize, a: u32| match opts.norms {
            NormReading::Classical => er.classical_norm_raw(i, a),
            NormReading::Twisted => er.norm_raw(i, a),
        };
        let active: Vec<usize> =
            (0..w.mvec.len()).filter(|&j| j == 0 || w.svec[j - 1] > 0).collect();
        for i in 1..code.n {
            for t in &tails {
                let ll = w.l + w.mvec[0] * i + tail_sum(t);
                let mut index_tail = t.clone();
                for &j in &active {
                    let bm = fld.pow_raw(w.beta, w.mvec[j] as i64);
                    let ni = norm(i, bm);
                    let mut index = vec![i, j + 1];
                    index.append(&mut index_tail.clone());
                    log.push(HypothesisResult { id: "H1", index: index.clone(), pass: ni != 1, value: fld.format_raw(ni) });
                    let (pass, value) = match ll.checked_sub(1) {
                        Some(k) => {
                            let v = norm(k, ni);
                            (v == 1, fld.format_raw(v))
                        }
                        None => (false, "index -1".into()),
                    };
                    log.push(HypothesisResult { id: "H2", index, pass, value });
                }
                let lhs = er.norm_raw(i, er.norm_raw(ll, w.beta));
                let rhs = er.norm_raw(ll, er.norm_raw(i, w.beta));
                let mut index = vec![i, 0];
                index.append(&mut index_tail);
                log.push(HypothesisResult {
                    id: "H3",
                    index,
                    pass: lhs == rhs,
                    value: format!("{} vs {}", fld.format_raw(lhs), fld.format_raw(rhs)),
                });
            }
        }
    }
    let ok = log.iter().all(|h| h.pass);
    Ok(BchReport { mode: opts.mode, certified_bound: ok.then_some(bound), hypothesis_log: log })
}

/// Index range for the first coordinate of the lclm grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RangeConvention {
    /// i_1 = 0..Δ−2, matching the theorems.
    Theorem,
    /// i_1 = 0..Δ as printed in the corollary.
    Corollary,
}

#[derive(Clone, Debug)]
pub enum ConstructOutcome {
    Code { code: Box<SgcCode>, mds: bool },
    CoefficientsOutsideBaseField,
}

#[derive(Clone, Debug)]
pub struct ConstructReport {
    pub exponents: Vec<usize>,
    pub ext_ring: Ring,
    pub g_ext: OrePoly,
    pub outcome: ConstructOutcome,
}

/// g = lclm{x − β^{l + Σ i_k c_k}} over GF(q^e).
#[allow(clippy::too_many_arguments)]
pub fn construct_mds(
    ring: &Ring,
    n: usize,
    beta: u32,
    e: u32,
    l: usize,
    cvec: &[usize],
    delta: usize,
    svec: &[usize],
    range: RangeConvention,
) -> Result<ConstructReport> {
    let q = ring.field().q() as usize;
    if q < n + 1 {
        return Err(Error::BadParameters(format!("need q >= n+1, got q={q}, n={n}")));
    }
    if cvec.is_empty() || cvec.iter().all(|&c| c == 0) {
        return Err(Error::BadParameters("exponent vector is all zero".into()));
    }
    if svec.len() + 1 != cvec.len() {
        return Err(Error::BadParameters(format!("expected {} ranges, got {}", cvec.len() - 1, svec.len())));
    }
    let (er, emb) = ring.extend(e)?;
    if beta >= er.field().q() || beta == 0 {
        return Err(Error::ExtensionTooSmall);
    }
    let top = match range {
        RangeConvention::Theorem => delta.checked_sub(2),
        RangeConvention::Corollary => Some(delta),
    };
    let mut exponents = Vec::new();
    if let Some(top) = top {
        for i1 in 0..=top {
            for t in tails(svec) {
                exponents.push(l + cvec[0] * i1 + t.iter().zip(&cvec[1..]).map(|(i, c)| i * c).sum::<usize>());
            }
        }
    }
    let fld = er.field().clone();
    let mut g = er.one();
    for &x in &exponents {
        let factor = er.linear(fld.pow_raw(beta, x as i64));
        g = er.lclm(&g, &factor)?;
    }
    let base: Option<Vec<u32>> = g.coeffs().iter().map(|&c| emb.preimage_raw(c)).collect();
    let outcome = match base {
        Some(c) if g.deg() <= n => {
            let gb = ring.poly(c);
            let code = sgc_from_generator(ring, &gb, n)?;
            let mds = code.is_mds();
            ConstructOutcome::Code { code: Box::new(code), mds }
        }
        Some(_) => return Err(Error::DegreeOutOfRange { deg: g.deg(), n }),
        None => ConstructOutcome::CoefficientsOutsideBaseField,
    };
    Ok(ConstructReport { exponents, ext_ring: er, g_ext: g, outcome })
}

/// One ring family in the randomized soundness sweep.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SweepRing {
    pub q: u32,
    pub t: u32,
    pub gamma: u32,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub trials: usize,
    pub strict_accepted: usize,
    pub roots_accepted: usize,
    pub checked: usize,
    /// Strict certificates whose bound exceeds the true distance.
    pub violations: Vec<String>,
    /// Strict acceptances with bound ≥ 2, the non-trivial ones.
    pub nontrivial_accepts: usize,
    /// Strict acceptances whose roots-only run disagreed.
    pub monotonicity_failures: usize,
}

/// The standard sweep rings: every γ over F_8 with t = 1, 2, plus F_11 and
/// F_13 with θ = id.
pub fn default_sweep_rings() -> Vec<SweepRing> {
    let mut v = Vec::new();
    for t in [1, 2] {
        for gamma in 0..8 {
            v.push(SweepRing { q: 8, t, gamma });
        }
    }
    v.push(SweepRing { q: 11, t: 0, gamma: 0 });
    v.push(SweepRing { q: 13, t: 0, gamma: 0 });
    v
}

const CHUNK: usize = 64;

/// Randomized soundness sweep. Trials are split into fixed chunks with
/// their own seeds, so the result does not depend on the worker count.
/// Generators always have a nonzero constant term, as right divisors of an
/// f with f_0 ≠ 0 must.
pub fn soundness_sweep(
    rings: &[SweepRing],
    trials: usize,
    seed: u64,
    opts: BchOptions,
    workers: Workers,
) -> Result<SweepReport> {
    let rings: Vec<Ring> = rings
        .iter()
        .map(|r| OreRing::new(&crate::field::field_of_order(r.q)?, r.t, r.gamma))
        .collect::<Result<_>>()?;
    let chunks = trials.div_ceil(CHUNK);
    let parts = workers.map_range(chunks, |c| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (c as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let count = CHUNK.min(trials - c * CHUNK);
        let mut rep = SweepReport::default();
        for _ in 0..count {
            let ring = &rings[rng.random_range(0..rings.len())];
            sweep_trial(ring, opts, &mut rng, &mut rep)?;
        }
        Ok::<_, Error>(rep)
    });
    let mut total = SweepReport::default();
    for p in parts {
        let p = p?;
        total.trials += p.trials;
        total.strict_accepted += p.strict_accepted;
        total.roots_accepted += p.roots_accepted;
        total.checked += p.checked;
        total.nontrivial_accepts += p.nontrivial_accepts;
        total.monotonicity_failures += p.monotonicity_failures;
        total.violations.extend(p.violations);
    }
    Ok(total)
}

fn sweep_trial(ring: &Ring, opts: BchOptions, rng: &mut ChaCha8Rng, rep: &mut SweepReport) -> Result<()> {
    rep.trials += 1;
    let fld = ring.field().clone();
    let q = fld.q();
    let n = rng.random_range(2..=12usize);
    let e = if rng.random_bool(0.5) { 1 } else { 2 };
    let (er, emb) = ring.extend(e)?;
    let beta = rng.random_range(1..er.field().q());
    let l = rng.random_range(0..=4usize);
    let multi = rng.random_bool(0.3);
    let mvec: Vec<usize> = if multi {
        (0..rng.random_range(2..=3)).map(|_| rng.random_range(0..=3)).collect()
    } else {
        vec![rng.random_range(1..=3)]
    };
    let svec: Vec<usize> = (1..mvec.len()).map(|_| rng.random_range(0..=2)).collect();
    let delta = rng.random_range(1..=n.min(5));
    // half the time build g from the required roots so that (R) can pass
    let g = if rng.random_bool(0.5) {
        let mut g = er.one();
        if delta >= 2 {
            for i1 in 0..=delta - 2 {
                for t in tails(&svec) {
                    let ll = l + mvec[0] * i1 + t.iter().zip(&mvec[1..]).map(|(i, m)| i * m).sum::<usize>();
                    g = er.lclm(&g, &er.linear(er.norm_raw(ll, beta)))?;
                }
            }
        }
        let base: Option<Vec<u32>> = g.coeffs().iter().map(|&c| emb.preimage_raw(c)).collect();
        match base {
            Some(c) if g.deg() < n && c[0] != 0 => ring.poly(c),
            _ => random_generator(ring, rng, n),
        }
    } else {
        random_generator(ring, rng, n)
    };
    let code = sgc_from_generator(ring, &g, n)?;
    let w = BchWitness { beta, e, l, mvec: mvec.clone(), delta, svec };
    if w.mvec.iter().all(|&m| m == 0) && delta >= 2 {
        return Ok(());
    }
    let run = |mode| {
        let o = BchOptions { mode, ..opts };
        if multi {
            verify_multi(&code, &w, o)
        } else {
            verify_single(&code, &w, o)
        }
    };
    let strict = run(Mode::Strict)?;
    let roots = run(Mode::RootsOnly)?;
    if roots.certified_bound.is_some() {
        rep.roots_accepted += 1;
    }
    if let Some(bound) = strict.certified_bound {
        rep.strict_accepted += 1;
        if roots.certified_bound != Some(bound) {
            rep.monotonicity_failures += 1;
        }
        if bound >= 2 {
            rep.nontrivial_accepts += 1;
            rep.checked += 1;
            let ok = code.gen.distance_at_least(bound, DEFAULT_BUDGET, Workers::sequential())?;
            if !ok {
                rep.violations.push(format!(
                    "q={q} t={} gamma={} g={} n={n} witness={w:?}",
                    ring.t(),
                    fld.format_raw(ring.gamma()),
                    ring.format(&g)
                ));
            }
        }
    }
    Ok(())
}

fn random_generator(ring: &OreRing, rng: &mut ChaCha8Rng, n: usize) -> OrePoly {
    let d = rng.random_range(1..n);
    sample::monic_unit_constant(rng, ring, d)
}
