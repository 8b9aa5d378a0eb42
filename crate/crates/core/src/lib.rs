//! Skew polynomial rings over finite fields and the codes built from them.

pub mod bch;
pub mod bivar;
pub mod code;
pub mod error;
pub mod field;
pub mod ore;
pub mod par;
mod polytext;
pub mod sample;
pub mod search;
pub mod sgc;

pub use bch::{construct_mds, verify_multi, verify_single, BchOptions, BchReport, BchWitness, Mode};
pub use bivar::{companion, shift_closure_check, Array2D, BiOrePoly, BiOreRing, BiRing, ClosureReport, PseudoLinearMap};
pub use code::{CodeParams, GenMatrix, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use field::{ff_embed, ff_make, field, field_of_order, Field, FieldCtx, FieldElement, FieldEmbedding, FrobeniusMap, InnerDerivation};
pub use ore::{OrePoly, OreRing, QuotientElem, Ring, RingKey};
pub use par::Workers;
pub use search::{enum_right_divisors, mds_table, reproduce_example, write_table, TableFormat, TableRow};
pub use sgc::{cofactor_parity, divisor_targets, dual_transform, sgc2d_from_generator, sgc_from_generator, CofactorParity, Sgc2dCode, SgcCode, SgcRecord};
