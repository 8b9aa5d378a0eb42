//! Random and structured instance generators for property sweeps.

use crate::error::Result;
use crate::field::Field;
use crate::ore::{OrePoly, OreRing, Ring};
use crate::par::Workers;
use crate::search::enum_right_divisors;
use rand::Rng;

/// Every (t, γ) with 0 ≤ t < m; γ ranges over the field when t ≠ 0 and is
/// 0 when t = 0.
pub fn ring_configs(field: &Field) -> Vec<(u32, u32)> {
    let mut v = vec![(0, 0)];
    for t in 1..field.m() {
        for g in 0..field.q() {
            v.push((t, g));
        }
    }
    v
}

pub fn all_rings(field: &Field) -> Result<Vec<Ring>> {
    ring_configs(field).into_iter().map(|(t, g)| OreRing::new(field, t, g)).collect()
}

/// Uniform coefficients, degree below `len`. May be zero.
pub fn poly<R: Rng>(rng: &mut R, ring: &OreRing, len: usize) -> OrePoly {
    let q = ring.field().q();
    ring.poly((0..len).map(|_| rng.random_range(0..q)).collect())
}

pub fn nonzero_poly<R: Rng>(rng: &mut R, ring: &OreRing, len: usize) -> OrePoly {
    loop {
        let p = poly(rng, ring, len.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn monic<R: Rng>(rng: &mut R, ring: &OreRing, deg: usize) -> OrePoly {
    let q = ring.field().q();
    let mut c: Vec<u32> = (0..deg).map(|_| rng.random_range(0..q)).collect();
    c.push(1);
    ring.poly(c)
}

/// Monic of degree `deg` with a nonzero constant term.
pub fn monic_unit_constant<R: Rng>(rng: &mut R, ring: &OreRing, deg: usize) -> OrePoly {
    let q = ring.field().q();
    let mut p = monic(rng, ring, deg);
    if deg > 0 {
        let mut c = p.coeffs().to_vec();
        c[0] = rng.random_range(1..q);
        p = ring.poly(c);
    }
    p
}

/// Order of σ as an automorphism.
pub fn sigma_order(ring: &OreRing) -> usize {
    ring.sigma_map().order() as usize
}

/// (x + γ)^N − a. With y = x + γ one has y·r = σ(r)·y, so this is central
/// whenever N is a multiple of the order of σ and σ(a) = a.
pub fn central_modulus(ring: &OreRing, n: usize, a: u32) -> Result<OrePoly> {
    let y = ring.add(&ring.x(), &ring.constant(ring.gamma()))?;
    ring.sub(&ring.pow(&y, n as u32)?, &ring.constant(a))
}

/// Right divisors of central moduli, which are two-sided: f = h·g = g·h.
/// Lengths are multiples of the order of σ up to `max_n`.
pub fn two_sided_instances(ring: &Ring, max_n: usize, budget: u64) -> Result<Vec<(OrePoly, OrePoly)>> {
    let fld = ring.field();
    let ord = sigma_order(ring);
    let fixed: Vec<u32> = (1..fld.q()).filter(|&a| ring.sigma(a) == a).collect();
    let mut out = Vec::new();
    let mut n = ord;
    while n <= max_n {
        for &a in &fixed {
            let f = central_modulus(ring, n, a)?;
            if f.coeff(0) == 0 {
                continue;
            }
            for d in 1..n {
                if (fld.q() as u64).pow(d as u32) > budget {
                    break;
                }
                for g in enum_right_divisors(ring, &f, d, budget, Workers::sequential())? {
                    out.push((f.clone(), g));
                }
            }
        }
        n += ord;
    }
    Ok(out)
}
