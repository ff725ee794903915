use std::cmp::Ordering;

use serde::Serialize;

use crate::poly::{Monomial, MAX_VARS};

/// Monomial orders used by the engine.
///
/// `LocalDegRevLex` compares by total degree ascending, so `1` is the largest
/// monomial; standard bases under it describe the ideal in the local ring at
/// the origin. `Block` ranks the variables in `elim` (a bitmask of variable
/// indices) above all others, each block ordered by degrevlex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    DegRevLex,
    LocalDegRevLex,
    Block { elim: u32 },
}

impl MonomialOrder {
    pub fn block(elim_indices: &[usize]) -> Self {
        MonomialOrder::Block { elim: elim_indices.iter().fold(0, |acc, &i| acc | (1 << i)) }
    }

    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::LocalDegRevLex)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b, !0)),
            MonomialOrder::LocalDegRevLex => {
                b.degree().cmp(&a.degree()).then_with(|| revlex(a, b, !0))
            }
            MonomialOrder::Block { elim } => {
                degrevlex_masked(a, b, *elim).then_with(|| degrevlex_masked(a, b, !*elim))
            }
        }
    }
}

#[inline]
fn revlex(a: &Monomial, b: &Monomial, mask: u32) -> Ordering {
    let (ea, eb) = (a.raw(), b.raw());
    for i in (0..MAX_VARS).rev() {
        if mask & (1 << i) != 0 && ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

fn degrevlex_masked(a: &Monomial, b: &Monomial, mask: u32) -> Ordering {
    let deg = |m: &Monomial| -> u32 {
        m.raw()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e as u32)
            .sum()
    };
    deg(a).cmp(&deg(b)).then_with(|| revlex(a, b, mask))
}
