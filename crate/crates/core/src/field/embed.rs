use super::{field, Field, FieldElement};
use crate::error::{Error, Result};

/// Ring embedding GF(q) → GF(q^e) into the registry field of order q^e.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    pub from: Field,
    pub to: Field,
    pub e: u32,
    map: Vec<u32>,
    back: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl FieldEmbedding {
    pub fn new(from: &Field, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::BadParameters("extension degree must be >= 1".into()));
        }
        let (p, m) = (from.p(), from.m());
        let to = field(p, m * e)?;
        let q = from.q();
        let map: Vec<u32> = if m == 1 {
            // prime field: integers land in the prime subfield
            (0..q).collect()
        } else {
            let r = ((to.q() - 1) / (q - 1)) as i64;
            let modulus = from.modulus();
            let is_root = |z: u32| {
                let mut acc = 0;
                let mut pw = 1;
                for &c in modulus {
                    acc = to.add_raw(acc, to.mul_raw(c, pw));
                    pw = to.mul_raw(pw, z);
                }
                acc == 0
            };
            let zeta = (1..q as i64)
                .map(|j| to.exp_raw(r * j))
                .find(|&z| is_root(z))
                .expect("modulus splits in the subfield of order q");
            (0..q)
                .map(|a| {
                    let mut acc = 0;
                    let mut pw = 1;
                    for c in from.coeffs(from.elem(a)) {
                        acc = to.add_raw(acc, to.mul_raw(c, pw));
                        pw = to.mul_raw(pw, zeta);
                    }
                    acc
                })
                .collect()
        };
        let mut back = vec![NONE; to.q() as usize];
        for (a, &b) in map.iter().enumerate() {
            back[b as usize] = a as u32;
        }
        Ok(FieldEmbedding { from: from.clone(), to, e, map, back })
    }

    /// The identity embedding of a field into itself.
    pub fn identity(from: &Field) -> Self {
        let q = from.q();
        FieldEmbedding {
            from: from.clone(),
            to: from.clone(),
            e: 1,
            map: (0..q).collect(),
            back: (0..q).collect(),
        }
    }

    #[inline]
    pub fn apply_raw(&self, a: u32) -> u32 {
        self.map[a as usize]
    }

    pub fn apply(&self, a: FieldElement) -> Result<FieldElement> {
        if a.ctx != self.from.id() {
            return Err(Error::CtxMismatch);
        }
        Ok(self.to.elem(self.map[a.value as usize]))
    }

    /// Preimage of a target value, if it lies in the image.
    pub fn preimage_raw(&self, b: u32) -> Option<u32> {
        match self.back[b as usize] {
            NONE => None,
            a => Some(a),
        }
    }
}

/// Image of `a` in the registry field GF(q^e).
pub fn ff_embed(from: &Field, a: FieldElement, e: u32) -> Result<FieldElement> {
    FieldEmbedding::new(from, e)?.apply(a)
}
