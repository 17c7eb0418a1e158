use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebra::{Monomial, MonomialOrder};

/// Orders on the monomials `m·e_i` of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Base order on `m` first; ties broken by position, lower index larger.
    TermOverPosition(MonomialOrder),
    /// Components `< split` dominate components `>= split`; term-over-position
    /// inside each block.
    Elimination { base: MonomialOrder, split: usize },
    /// The order induced by a list of leading terms through an earlier order.
    Schreyer(Arc<SchreyerFrame>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    pub previous: ModuleOrder,
    /// Leading term `(component, monomial)` of each generator.
    pub leads: Vec<(usize, Monomial)>,
}

impl ModuleOrder {
    pub fn base(&self) -> MonomialOrder {
        match self {
            ModuleOrder::TermOverPosition(b) => *b,
            ModuleOrder::Elimination { base, .. } => *base,
            ModuleOrder::Schreyer(frame) => frame.previous.base(),
        }
    }

    pub fn schreyer(previous: ModuleOrder, leads: Vec<(usize, Monomial)>) -> Self {
        ModuleOrder::Schreyer(Arc::new(SchreyerFrame { previous, leads }))
    }

    pub fn cmp(&self, c1: usize, m1: &Monomial, c2: usize, m2: &Monomial) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition(base) => {
                base.cmp(m1, m2).then_with(|| c2.cmp(&c1))
            }
            ModuleOrder::Elimination { base, split } => {
                let b1 = c1 >= *split;
                let b2 = c2 >= *split;
                if b1 != b2 {
                    return if b1 { Ordering::Less } else { Ordering::Greater };
                }
                base.cmp(m1, m2).then_with(|| c2.cmp(&c1))
            }
            ModuleOrder::Schreyer(frame) => {
                let (l1c, l1m) = &frame.leads[c1];
                let (l2c, l2m) = &frame.leads[c2];
                frame
                    .previous
                    .cmp(*l1c, &m1.mul(l1m), *l2c, &m2.mul(l2m))
                    .then_with(|| c2.cmp(&c1))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn position_breaks_ties() {
        let o = ModuleOrder::TermOverPosition(MonomialOrder::DegRevLex);
        assert_eq!(o.cmp(0, &m(&[1, 0]), 1, &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(1, &m(&[2, 0]), 0, &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_blocks() {
        let o = ModuleOrder::Elimination { base: MonomialOrder::DegRevLex, split: 1 };
        assert_eq!(o.cmp(0, &m(&[0, 0]), 1, &m(&[5, 5])), Ordering::Greater);
    }

    #[test]
    fn schreyer_uses_images() {
        let base = ModuleOrder::TermOverPosition(MonomialOrder::DegRevLex);
        // generators with leads x^2 and y^2 in k[x,y]
        let o = ModuleOrder::schreyer(base, vec![(0, m(&[2, 0])), (0, m(&[0, 2]))]);
        // y^2 e_0 -> x^2 y^2 ; x^2 e_1 -> x^2 y^2 : tie, lower index wins
        assert_eq!(o.cmp(0, &m(&[0, 2]), 1, &m(&[2, 0])), Ordering::Greater);
        // y e_0 -> x^2 y vs x e_1 -> x y^2
        assert_eq!(o.cmp(0, &m(&[0, 1]), 1, &m(&[1, 0])), Ordering::Greater);
    }
}
