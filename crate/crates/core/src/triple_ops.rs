//! Triple-level conjunction/disjunction built componentwise from the norm
//! and conorm families, plus the two negations.
//!
//! Two distinct negations coexist: [`complement`] swaps T and F and reflects
//! I through `1 - x`, while [`negation_swap`] swaps T and F and leaves I
//! untouched. Both are involutions; callers pick which one `!` means.

use crate::combinators::{
    component_negate, tconorm_apply, tnorm_apply, ComponentConorm, ComponentNorm,
};
use crate::triple::NeutroTriple;

/// Operator choice for componentwise conjunction/disjunction: `t_op` acts on
/// the truth component under conjunction, `if_op` on indeterminacy and
/// falsehood; the roles swap for disjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NnConfig {
    pub t_op: ComponentNorm,
    pub if_op: ComponentConorm,
}

impl NnConfig {
    pub fn new(t_op: ComponentNorm, if_op: ComponentConorm) -> Self {
        Self { t_op, if_op }
    }
}

impl Default for NnConfig {
    /// Min/max: the only pair that is exactly idempotent.
    fn default() -> Self {
        Self {
            t_op: ComponentNorm::Min,
            if_op: ComponentConorm::Max,
        }
    }
}

/// Conjunction: `(T1 ∧ T2, I1 ∨ I2, F1 ∨ F2)`.
pub fn nnorm(cfg: NnConfig, x: &NeutroTriple, y: &NeutroTriple) -> NeutroTriple {
    NeutroTriple {
        t: tnorm_apply(cfg.t_op, &x.t, &y.t),
        i: tconorm_apply(cfg.if_op, &x.i, &y.i),
        f: tconorm_apply(cfg.if_op, &x.f, &y.f),
    }
}

/// Disjunction: `(T1 ∨ T2, I1 ∧ I2, F1 ∧ F2)`.
pub fn nconorm(cfg: NnConfig, x: &NeutroTriple, y: &NeutroTriple) -> NeutroTriple {
    NeutroTriple {
        t: tconorm_apply(cfg.if_op, &x.t, &y.t),
        i: tnorm_apply(cfg.t_op, &x.i, &y.i),
        f: tnorm_apply(cfg.t_op, &x.f, &y.f),
    }
}

/// Interval complement: `(F, 1 - I, T)`.
pub fn complement(x: &NeutroTriple) -> NeutroTriple {
    NeutroTriple {
        t: x.f.clone(),
        i: component_negate(&x.i),
        f: x.t.clone(),
    }
}

/// Truth/falsehood swap `(F, I, T)`; indeterminacy untouched.
pub fn negation_swap(x: &NeutroTriple) -> NeutroTriple {
    NeutroTriple {
        t: x.f.clone(),
        i: x.i.clone(),
        f: x.t.clone(),
    }
}
