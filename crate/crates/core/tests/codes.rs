use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgc_core::code::weight;
use sgc_core::sample;
use sgc_core::sgc::is_invariant;
use sgc_core::{
    cofactor_parity, dual_transform, field_of_order, sgc_from_generator, GenMatrix, OreRing, PseudoLinearMap, Ring,
    Workers,
};

fn two_sided(q: u32) -> Vec<(Ring, sgc_core::OrePoly, sgc_core::OrePoly)> {
    let f = field_of_order(q).unwrap();
    let mut out = Vec::new();
    for r in sample::all_rings(&f).unwrap() {
        for (f, g) in sample::two_sided_instances(&r, 6, 10_000).unwrap() {
            out.push((r.clone(), f, g));
        }
    }
    out
}

#[test]
fn parity_rows_are_orthogonal_to_the_code() {
    let mut checked = 0;
    for q in [4, 8, 9] {
        for (r, f, g) in two_sided(q) {
            let cp = cofactor_parity(&r, &f, &g).unwrap();
            let code = sgc_from_generator(&r, &g, f.deg()).unwrap();
            for row in &code.gen.rows {
                for h in &cp.h.rows {
                    assert_eq!(code.gen.dot(row, h), 0, "f={} g={}", r.format(&f), r.format(&g));
                }
            }
            assert_eq!(r.mul(&g, &cp.h_prime).unwrap(), f);
            checked += 1;
        }
    }
    assert!(checked >= 100, "only {checked} instances");
}

#[test]
fn duals_of_invariant_codes_are_invariant() {
    let mut with_derivation = 0;
    for q in [4, 8, 9] {
        for (r, f, g) in two_sided(q) {
            let t = PseudoLinearMap::from_modulus(&r, &f).unwrap();
            let code = sgc_from_generator(&r, &g, f.deg()).unwrap();
            assert!(is_invariant(&code.gen, &t).unwrap());
            let dual = code.gen.dual();
            if dual.rows.is_empty() {
                continue;
            }
            assert!(is_invariant(&dual, &dual_transform(&t)).unwrap(), "f={} g={}", r.format(&f), r.format(&g));
            if r.has_derivation() {
                with_derivation += 1;
            }
        }
    }
    assert!(with_derivation > 0);
}

#[test]
fn dual_transform_is_an_involution() {
    let f8 = field_of_order(8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = rng.random_range(1..=4);
        let m: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.random_range(0..8)).collect()).collect();
        let t = PseudoLinearMap::new(&f8, m, rng.random_range(0..3), rng.random_range(0..8)).unwrap();
        let tt = dual_transform(&dual_transform(&t));
        assert_eq!((tt.m.clone(), tt.t, tt.gamma), (t.m.clone(), t.t, t.gamma));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pseudo_linearity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f8 = field_of_order(8).unwrap();
        let n = rng.random_range(1..=3);
        let m: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.random_range(0..8)).collect()).collect();
        let t = PseudoLinearMap::new(&f8, m, rng.random_range(0..3), rng.random_range(0..8)).unwrap();
        let u: Vec<u32> = (0..n).map(|_| rng.random_range(0..8)).collect();
        let v: Vec<u32> = (0..n).map(|_| rng.random_range(0..8)).collect();
        let c = rng.random_range(0..8);
        let sum: Vec<u32> = u.iter().zip(&v).map(|(&a, &b)| f8.add_raw(a, b)).collect();
        let tu = t.apply(&u).unwrap();
        let tv = t.apply(&v).unwrap();
        let expect: Vec<u32> = tu.iter().zip(&tv).map(|(&a, &b)| f8.add_raw(a, b)).collect();
        prop_assert_eq!(t.apply(&sum).unwrap(), expect);
        let cu: Vec<u32> = u.iter().map(|&a| f8.mul_raw(c, a)).collect();
        let expect: Vec<u32> = tu.iter().zip(&u).map(|(&a, &b)| f8.add_raw(f8.mul_raw(t.sigma(c), a), f8.mul_raw(t.delta(c), b))).collect();
        prop_assert_eq!(t.apply(&cu).unwrap(), expect);
    }

    #[test]
    fn companion_map_is_left_multiplication_by_x(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rs = sample::all_rings(&field_of_order(8).unwrap()).unwrap();
        let r = &rs[rng.random_range(0..rs.len())];
        let n = rng.random_range(1..=5);
        let f = sample::monic(&mut rng, r, n);
        let t = PseudoLinearMap::from_modulus(r, &f).unwrap();
        let v = sample::poly(&mut rng, r, n);
        let mut vv = v.coeffs().to_vec();
        vv.resize(n, 0);
        let mut expect = r.rem(&r.mul(&r.x(), &v).unwrap(), &f).unwrap().coeffs().to_vec();
        expect.resize(n, 0);
        prop_assert_eq!(t.apply(&vv).unwrap(), expect);
    }

    #[test]
    fn normalized_word_stays_in_the_code(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fld = field_of_order(8).unwrap();
        let r = OreRing::new(&fld, rng.random_range(1..3), rng.random_range(1..8)).unwrap();
        let n = rng.random_range(2..=6);
        let dg = rng.random_range(1..n);
        let g = sample::monic_unit_constant(&mut rng, &r, dg);
        let h = sample::monic(&mut rng, &r, n - g.deg());
        let f = r.mul(&h, &g).unwrap();
        prop_assume!(f.coeff(0) != 0);
        let u = sample::nonzero_poly(&mut rng, &r, n - g.deg());
        let c = r.rem(&r.mul(&u, &g).unwrap(), &f).unwrap();
        prop_assume!(!c.is_zero());
        let (_, rc) = r.lemma42_normalize(&f, &c).unwrap();
        // left multiples of g stay left multiples of g modulo f = h·g
        prop_assert!(r.right_divides(&g, &rc.rep).unwrap());
        if c.coeff(0) != 0 {
            prop_assert_eq!(rc.rep.coeff(0), 1);
            prop_assert_eq!(rc.rep.weight(), c.weight());
        }
    }

    #[test]
    fn codes_from_divisors_are_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rs = sample::all_rings(&field_of_order(8).unwrap()).unwrap();
        let r = &rs[rng.random_range(0..rs.len())];
        let n = rng.random_range(2..=6);
        let dg = rng.random_range(1..n);
        let g = sample::monic(&mut rng, r, dg);
        let h = sample::monic(&mut rng, r, n - g.deg());
        let f = r.mul(&h, &g).unwrap();
        let code = sgc_from_generator(r, &g, n).unwrap();
        let t = PseudoLinearMap::from_modulus(r, &f).unwrap();
        prop_assert!(is_invariant(&code.gen, &t).unwrap());
        prop_assert_eq!(code.gen.rank(), n - g.deg());
    }

    #[test]
    fn mds_flag_matches_distance(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fld = field_of_order(if seed % 2 == 0 { 8 } else { 9 }).unwrap();
        let n = rng.random_range(2..=6);
        let k = rng.random_range(1..=n);
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.random_range(0..fld.q())).collect()).collect();
        let g = GenMatrix::new(&fld, n, rows).unwrap();
        prop_assume!(g.rank() > 0);
        let d = g.min_distance_with(1_000_000, Workers::sequential()).unwrap();
        prop_assert_eq!(g.is_mds(), d == n - g.rank() + 1);
        let best = g.rows.iter().map(|r| weight(r)).filter(|&w| w > 0).min().unwrap();
        prop_assert!(d <= best);
    }
}
