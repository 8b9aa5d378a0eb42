use crate::{BchArgs, Cli, Command, Format, Global, ModeArg, NormsArg, PointsArg, RangeArg};
use sgc_core::bch::{
    default_sweep_rings, soundness_sweep, ConstructOutcome, NormReading, PointConvention, RangeConvention,
};
use sgc_core::search::{check_q8_table, example_case, q11_baseline_rows, verify_q11_baseline, write_records, EXAMPLES};
use sgc_core::sgc::is_invariant;
use sgc_core::{
    cofactor_parity, construct_mds, dual_transform, ff_make, field_of_order, mds_table, reproduce_example,
    sgc2d_from_generator, sgc_from_generator, verify_multi, verify_single, write_table, BchOptions, BchWitness,
    BiOreRing, Error, Field, Mode, OrePoly, OreRing, PseudoLinearMap, Ring, TableFormat, Workers,
};
use std::fmt::Write as _;

pub enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Text for the output stream, notes for stderr, and whether a published
/// baseline disagreed.
#[derive(Default)]
pub struct Output {
    pub text: String,
    pub notes: Vec<String>,
    pub diff: bool,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

pub fn emit(g: &Global, text: &str) -> std::io::Result<()> {
    match &g.out {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn workers(g: &Global) -> Workers {
    g.workers.map(Workers::new).unwrap_or_default()
}

fn base_field(g: &Global) -> Res<Field> {
    let modulus = g
        .modulus
        .as_deref()
        .map(|s| {
            s.split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| usage(format!("bad modulus coefficient {c:?}"))))
                .collect::<Res<Vec<u32>>>()
        })
        .transpose()?;
    let (p, m) = match (g.q, g.p, g.m) {
        (Some(q), None, None) => {
            let f = field_of_order(q).or_else(|e| match (&modulus, e) {
                (Some(_), Error::UnregisteredField { p, m }) => ff_make(p, m, modulus.as_deref()),
                (_, e) => Err(e),
            })?;
            if modulus.is_none() {
                return Ok(f);
            }
            (f.p(), f.m())
        }
        (None, Some(p), Some(m)) => (p, m),
        _ => return Err(usage("select a field with --q Q or with --p P --m M")),
    };
    Ok(ff_make(p, m, modulus.as_deref())?)
}

fn ring(g: &Global) -> Res<Ring> {
    let f = base_field(g)?;
    let gamma = f.parse(&g.gamma)?.value;
    if f.m() > 0 && g.theta >= f.m() {
        return Err(usage(format!("--theta must be below m = {}", f.m())));
    }
    if g.theta == 0 && gamma != 0 {
        return Err(usage(
            "--gamma must be 0 when --theta is 0: the derivation gamma*(theta(a) - a) vanishes for theta = id, \
             so a nonzero gamma would describe the same ring under a misleading label",
        ));
    }
    Ok(OreRing::new(&f, g.theta, gamma)?)
}

fn poly(r: &Ring, s: &str) -> Res<OrePoly> {
    Ok(r.parse(s)?)
}

fn elem(f: &Field, s: &str) -> Res<u32> {
    Ok(f.parse(s)?.value)
}

pub fn run(cli: &Cli) -> Res<Output> {
    let g = &cli.global;
    let mut out = Output::default();
    match &cli.command {
        Command::Field { elem: e } => field_info(g, e.as_deref(), &mut out)?,
        Command::Mul { f, g: h } => {
            let r = ring(g)?;
            out.line(r.format(&r.mul(&poly(&r, f)?, &poly(&r, h)?)?));
        }
        Command::Divmod { f, g: h, left } => {
            let r = ring(g)?;
            let (a, b) = (poly(&r, f)?, poly(&r, h)?);
            let (q, rem) = if *left { r.left_divmod(&a, &b)? } else { r.right_divmod(&a, &b)? };
            out.line(format!("q = {}", r.format(&q)));
            out.line(format!("r = {}", r.format(&rem)));
        }
        Command::Gcd { f, g: h } => {
            let r = ring(g)?;
            out.line(r.format(&r.rgcd(&poly(&r, f)?, &poly(&r, h)?)?));
        }
        Command::Lclm { f, g: h } => {
            let r = ring(g)?;
            out.line(r.format(&r.lclm(&poly(&r, f)?, &poly(&r, h)?)?));
        }
        Command::Eval { f, a } => {
            let r = ring(g)?;
            let p = poly(&r, f)?;
            let a = elem(r.field(), a)?;
            out.line(r.field().format_raw(r.skew_eval_raw(p.coeffs(), a)));
        }
        Command::Norm { i, a } => {
            let r = ring(g)?;
            let a = elem(r.field(), a)?;
            let fld = r.field();
            out.line(format!("N_{i} = {}", fld.format_raw(r.norm_raw(*i, a))));
            out.line(format!("classical N_{i} = {}", fld.format_raw(r.classical_norm_raw(*i, a))));
        }
        Command::Code { g: gs, n } => code(g, gs, *n, &mut out)?,
        Command::Dual { f, g: gs } => dual(g, f, gs, &mut out)?,
        Command::Code2d { f1, f2, g: gs, theta2 } => code2d(g, f1, f2, gs, *theta2, &mut out)?,
        Command::Bch(a) => bch(g, a, &mut out)?,
        Command::Sweep { trials, norms, points } => sweep(g, *trials, *norms, *points, &mut out)?,
        Command::ConstructMds { n, beta, e, l, cvec, delta, svec, range } => {
            construct(g, *n, beta, *e, *l, cvec, *delta, svec, *range, &mut out)?
        }
        Command::Table { n_min, n_max, verify } => table(g, *n_min, *n_max, *verify, &mut out)?,
        Command::Examples { id } => examples(g, id, &mut out)?,
    }
    Ok(out)
}

fn field_info(g: &Global, e: Option<&str>, out: &mut Output) -> Res<()> {
    let r = ring(g)?;
    let f = r.field();
    let zp = OreRing::commutative(&ff_make(f.p(), 1, None)?);
    out.line(format!("GF({}) = GF({}^{})", f.q(), f.p(), f.m()));
    out.line(format!("modulus: {}", zp.format(&zp.poly(f.modulus().to_vec())).replace('x', "z")));
    let w = f.w_raw();
    let digits = |a: u32| f.coeffs(f.elem(a)).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    out.line(format!("primitive element: w = [{}] of order {}", digits(w), f.q() - 1));
    let start = match e {
        Some(s) => elem(f, s)?,
        None => w,
    };
    let mut orbit = vec![start];
    loop {
        let next = r.sigma(*orbit.last().unwrap());
        if next == start {
            break;
        }
        orbit.push(next);
    }
    let shown: Vec<String> = orbit.iter().map(|&a| f.format_raw(a)).collect();
    out.line(format!("orbit under a -> a^(p^{}): {}", g.theta, shown.join(" -> ")));
    if g.format != Format::Json {
        out.line("element\tcoefficients");
        for k in 0..f.q() - 1 {
            let a = f.exp_raw(k as i64);
            out.line(format!("{}\t[{}]", f.format_raw(a), digits(a)));
        }
    }
    Ok(())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn code(g: &Global, gs: &str, n: usize, out: &mut Output) -> Res<()> {
    let r = ring(g)?;
    let gp = poly(&r, gs)?;
    let c = sgc_from_generator(&r, &gp, n)?.with_distance(g.budget, workers(g))?;
    let rec = c.record();
    if g.format == Format::Json {
        out.line(rec.json());
        return Ok(());
    }
    out.line(format!("g = {}", r.format(&gp)));
    out.line("G =");
    out.text.push_str(&c.gen.to_text());
    if !out.text.ends_with('\n') {
        out.text.push('\n');
    }
    let d = c.params.d.unwrap_or(0);
    out.line(format!("[{},{},{}]", n, c.k(), d));
    out.line(format!("MDS={}", yes(rec.mds)));
    out.line(format!("a={}", rec.a_set));
    Ok(())
}

fn dual(g: &Global, fs: &str, gs: &str, out: &mut Output) -> Res<()> {
    let r = ring(g)?;
    let (f, gp) = (poly(&r, fs)?, poly(&r, gs)?);
    let cp = cofactor_parity(&r, &f, &gp)?;
    let code = sgc_from_generator(&r, &gp, f.deg())?;
    let orth = code.gen.rows.iter().all(|row| cp.h.rows.iter().all(|h| code.gen.dot(row, h) == 0));
    out.line(format!("h' = {}", r.format(&cp.h_prime)));
    out.line("H =");
    out.text.push_str(&cp.h.to_text());
    if !out.text.ends_with('\n') {
        out.text.push('\n');
    }
    out.line(format!("G*H^t = 0: {}", yes(orth)));
    out.line(format!("rank H = {} (n - k = {})", cp.h.rank(), f.deg() - code.k()));
    let t = PseudoLinearMap::from_modulus(&r, &f)?;
    let inv = is_invariant(&code.gen, &t)?;
    let d = code.gen.dual();
    let dual_inv = d.rows.is_empty() || is_invariant(&d, &dual_transform(&t))?;
    out.line(format!("code invariant under T_f: {}", yes(inv)));
    out.line(format!("dual invariant under the dual transform: {}", yes(dual_inv)));
    Ok(())
}

fn code2d(g: &Global, f1s: &str, f2s: &str, gs: &str, theta2: u32, out: &mut Output) -> Res<()> {
    let f = base_field(g)?;
    if g.gamma != "0" {
        return Err(usage("the 2D construction has no derivation; leave --gamma at 0"));
    }
    if g.theta >= f.m() || theta2 >= f.m() {
        return Err(usage(format!("--theta and --theta2 must be below m = {}", f.m())));
    }
    let b = BiOreRing::new(&f, g.theta, theta2);
    let f1 = b.univariate(1).parse(f1s)?;
    let f2 = b.univariate(2).parse(f2s)?;
    let gp = b.parse(gs)?;
    let c = sgc2d_from_generator(&b, &f1, &f2, &gp)?;
    let d = c.gen.min_distance_with(g.budget, workers(g))?;
    out.line(format!("[{},{},{}]", c.params.n, c.params.k, d));
    out.line(format!("expected k = {} ({})", c.expected_k, if c.rank_matches() { "matches" } else { "differs" }));
    out.line(format!("moduli commute: {}", yes(b.moduli_commute(&f1, &f2))));
    out.line(format!("closed under row shift: {}", yes(c.closure.row_closed)));
    out.line(format!("closed under column shift: {}", yes(c.closure.col_closed)));
    out.line("G =");
    out.text.push_str(&c.gen.to_text());
    if !out.text.ends_with('\n') {
        out.text.push('\n');
    }
    Ok(())
}

fn options(mode: ModeArg, norms: NormsArg, points: PointsArg) -> BchOptions {
    BchOptions {
        mode: match mode {
            ModeArg::Strict => Mode::Strict,
            ModeArg::RootsOnly => Mode::RootsOnly,
        },
        norms: match norms {
            NormsArg::Classical => NormReading::Classical,
            NormsArg::Twisted => NormReading::Twisted,
        },
        points: match points {
            PointsArg::NormValue => PointConvention::NormValue,
            PointsArg::NormPower => PointConvention::NormPower,
        },
    }
}

fn bch(g: &Global, a: &BchArgs, out: &mut Output) -> Res<()> {
    let r = ring(g)?;
    let gp = poly(&r, &a.g)?;
    let code = sgc_from_generator(&r, &gp, a.n)?;
    let (er, _) = r.extend(a.e)?;
    let beta = elem(er.field(), &a.beta)?;
    let w = BchWitness { beta, e: a.e, l: a.l, mvec: a.mvec.clone(), delta: a.delta, svec: a.svec.clone() };
    let opts = options(a.mode, a.norms, a.points);
    let rep = if a.mvec.len() == 1 { verify_single(&code, &w, opts)? } else { verify_multi(&code, &w, opts)? };
    let bound = rep.certified_bound.map(|b| b.to_string()).unwrap_or_else(|| "none".into());
    let distance = if a.distance { Some(code.min_distance(g.budget, workers(g))?) } else { None };
    if g.format == Format::Json {
        for h in &rep.hypothesis_log {
            out.line(serde_json::to_string(h).expect("row serializes"));
        }
        let summary = serde_json::json!({ "mode": rep.mode, "certified_bound": rep.certified_bound, "min_distance": distance });
        out.line(summary.to_string());
        return Ok(());
    }
    out.line("hypothesis\tindex\tvalue\tpass");
    for h in &rep.hypothesis_log {
        let idx: Vec<String> = h.index.iter().map(|i| i.to_string()).collect();
        out.line(format!("{}\t{}\t{}\t{}", h.id, idx.join(","), h.value, if h.pass { "pass" } else { "fail" }));
    }
    out.line(format!("certified_bound: {bound}"));
    if let Some(d) = distance {
        out.line(format!("min_distance: {d}"));
    }
    Ok(())
}

fn sweep(g: &Global, trials: usize, norms: NormsArg, points: PointsArg, out: &mut Output) -> Res<()> {
    let opts = options(ModeArg::Strict, norms, points);
    let rep = soundness_sweep(&default_sweep_rings(), trials, g.seed, opts, workers(g))?;
    out.line(format!("trials: {}", rep.trials));
    out.line(format!("strict accepted: {} ({} with bound >= 2)", rep.strict_accepted, rep.nontrivial_accepts));
    out.line(format!("roots-only accepted: {}", rep.roots_accepted));
    out.line(format!("distance checks: {}", rep.checked));
    out.line(format!("monotonicity failures: {}", rep.monotonicity_failures));
    out.line(format!("violations: {}", rep.violations.len()));
    for v in &rep.violations {
        out.line(format!("  {v}"));
    }
    out.diff = !rep.violations.is_empty();
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn construct(
    g: &Global,
    n: usize,
    beta: &str,
    e: u32,
    l: usize,
    cvec: &[usize],
    delta: usize,
    svec: &[usize],
    range: RangeArg,
    out: &mut Output,
) -> Res<()> {
    let r = ring(g)?;
    let (er, _) = r.extend(e)?;
    let b = elem(er.field(), beta)?;
    let range = match range {
        RangeArg::Theorem => RangeConvention::Theorem,
        RangeArg::Corollary => RangeConvention::Corollary,
    };
    let rep = construct_mds(&r, n, b, e, l, cvec, delta, svec, range)?;
    let ex: Vec<String> = rep.exponents.iter().map(|x| x.to_string()).collect();
    out.line(format!("exponents: {}", ex.join(",")));
    out.line(format!("g over GF({}) = {}", rep.ext_ring.field().q(), rep.ext_ring.format(&rep.g_ext)));
    match rep.outcome {
        ConstructOutcome::Code { code, mds } => {
            out.line(format!("g = {}", r.format(&code.g)));
            out.line(format!("[{},{}]", code.n, code.k()));
            out.line(format!("MDS={}", yes(mds)));
        }
        ConstructOutcome::CoefficientsOutsideBaseField => {
            out.line(format!("coefficients outside GF({})", r.field().q()));
        }
    }
    Ok(())
}

fn table_format(g: &Global) -> TableFormat {
    match g.format {
        Format::Md => TableFormat::Markdown,
        _ => TableFormat::Tsv,
    }
}

fn table(g: &Global, n_min: usize, n_max: Option<usize>, verify: bool, out: &mut Output) -> Res<()> {
    let r = ring(g)?;
    let q = r.field().q();
    if verify {
        if q != 11 || r.t() != 0 {
            return Err(usage("--verify checks the published q = 11 rows; use --q 11 --theta 0"));
        }
        let rows = q11_baseline_rows()?;
        out.text.push_str(&write_table(&rows, table_format(g)));
        let checks = verify_q11_baseline(workers(g))?;
        for c in &checks {
            out.notes.push(format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.label, c.detail));
        }
        out.diff = checks.iter().any(|c| !c.pass);
        return Ok(());
    }
    let n_max = n_max.unwrap_or(q as usize - 1);
    if n_min < 2 || n_max < n_min {
        return Err(usage("need 2 <= --n-min <= --n-max"));
    }
    let t = mds_table(&r, n_min..=n_max, g.budget, workers(g))?;
    match g.format {
        Format::Json => out.text.push_str(&write_records(&t.records)),
        _ => out.text.push_str(&write_table(&t.rows, table_format(g))),
    }
    if q == 8 && r.t() == 1 && r.gamma() == 0 && n_min <= 2 && n_max >= 7 {
        let checks = check_q8_table(&r, &t)?;
        for c in &checks {
            out.notes.push(format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.label, c.detail));
        }
        out.diff = checks.iter().any(|c| !c.pass);
    }
    Ok(())
}

fn examples(g: &Global, id: &str, out: &mut Output) -> Res<()> {
    let cases: Vec<_> = if id == "all" {
        EXAMPLES.iter().collect()
    } else {
        vec![example_case(id).ok_or_else(|| usage(format!("unknown example {id:?}; expected 5.1 to 5.5 or all")))?]
    };
    for case in cases {
        let rep = reproduce_example(case, workers(g))?;
        if g.format == Format::Json {
            out.line(serde_json::to_string(&rep).expect("report serializes"));
        } else {
            out.line(rep.summary());
            for c in &rep.skew_codes {
                let _ = writeln!(out.text, "  [{},{},{}] {}", c.n, c.k, c.d, c.g);
            }
            for d in &rep.diffs {
                let _ = writeln!(out.text, "  diff: {d}");
            }
        }
        out.diff |= !rep.matches();
    }
    Ok(())
}
