//! Subfield membership via multiplicative span closure.
//!
//! The smallest rational-linear subspace of a tower containing 1 and a set
//! of generators and closed under multiplication is computed by iterated
//! pairwise products with Gaussian elimination until the dimension
//! stabilizes. Since the tower is a finite-dimensional field, this closure
//! is exactly the subfield generated by the generators.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::tower::{TowerDescriptor, TowerElement};

#[derive(Debug)]
pub struct Subalgebra {
    tower: Arc<TowerDescriptor>,
    space: RowSpace,
}

impl Subalgebra {
    pub fn dimension(&self) -> usize {
        self.space.rank()
    }

    pub fn tower(&self) -> &Arc<TowerDescriptor> {
        &self.tower
    }

    pub fn contains(&self, query: &TowerElement) -> Result<bool> {
        if query.tower().id() != self.tower.id() {
            return Err(Error::TowerMismatch(
                query.tower().id().to_string(),
                self.tower.id().to_string(),
            ));
        }
        Ok(self.space.contains(query.coeffs()))
    }
}

/// Closes `span(1, generators)` under multiplication. Products are taken
/// pairwise over the accumulating basis; each round only multiplies pairs
/// involving an element discovered in the previous round, and the loop
/// stops as soon as the span is multiplication-stable or fills the whole
/// tower.
pub fn subalgebra_closure(
    tower: &Arc<TowerDescriptor>,
    generators: &[TowerElement],
) -> Result<Subalgebra> {
    for g in generators {
        if g.tower().id() != tower.id() {
            return Err(Error::TowerMismatch(
                g.tower().id().to_string(),
                tower.id().to_string(),
            ));
        }
    }
    let mut space = RowSpace::new(tower.dimension());
    let mut basis: Vec<TowerElement> = Vec::new();
    let push = |space: &mut RowSpace, basis: &mut Vec<TowerElement>, e: &TowerElement| {
        if space.insert(e.coeffs().to_vec()) {
            basis.push(e.clone());
        }
    };
    push(&mut space, &mut basis, &TowerElement::one(tower));
    for g in generators {
        push(&mut space, &mut basis, g);
    }

    let mut fresh_from = 0;
    while fresh_from < basis.len() && !space.is_full() {
        let fresh_to = basis.len();
        for i in fresh_from..fresh_to {
            for j in 0..=i {
                let p = basis[i].mul(&basis[j])?;
                push(&mut space, &mut basis, &p);
                if space.is_full() {
                    break;
                }
            }
            if space.is_full() {
                break;
            }
        }
        fresh_from = fresh_to;
    }
    Ok(Subalgebra {
        tower: tower.clone(),
        space,
    })
}

/// Whether `query` lies in the subfield generated by `generators`.
pub fn subalgebra_membership(generators: &[TowerElement], query: &TowerElement) -> Result<bool> {
    let closure = subalgebra_closure(query.tower(), generators)?;
    closure.contains(query)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i64;
    use crate::tower::adjoin_sqrt;

    fn q_sqrt2() -> (Arc<TowerDescriptor>, TowerElement) {
        let q = TowerDescriptor::rationals();
        let two = TowerElement::from_rational(&q, rat_i64(2));
        adjoin_sqrt(&q, &two, "sqrt2").unwrap()
    }

    #[test]
    fn generated_field_contains_inverse() {
        let (_, s) = q_sqrt2();
        let inv = s.inv().unwrap(); // 1/sqrt2
        assert!(subalgebra_membership(&[s], &inv).unwrap());
    }

    #[test]
    fn empty_generators_give_base_field() {
        let (t, s) = q_sqrt2();
        assert!(!subalgebra_membership(&[], &s).unwrap());
        assert!(subalgebra_membership(&[], &TowerElement::from_rational(&t, rat_i64(7))).unwrap());
    }

    #[test]
    fn closure_recovers_sqrt2_from_shifted_generator() {
        // Q(3 + 2*sqrt2) = Q(sqrt2): sqrt2 = (3 + 2*sqrt2 - 3)/2
        let (t, s) = q_sqrt2();
        let g = TowerElement::from_rational(&t, rat_i64(3))
            .add(&s.scale(&rat_i64(2)))
            .unwrap();
        assert!(subalgebra_membership(&[g], &s).unwrap());
    }

    #[test]
    fn generators_belong_and_dimension_divides() {
        let (t1, s) = q_sqrt2();
        let m1 = TowerElement::from_rational(&t1, rat_i64(-1));
        let (t2, z) = adjoin_sqrt(&t1, &m1, "zeta4").unwrap();
        let s = s.embed(&t2).unwrap();
        let gens = vec![s.clone(), z.clone()];
        let closure = subalgebra_closure(&t2, &gens).unwrap();
        for g in &gens {
            assert!(closure.contains(g).unwrap());
        }
        assert_eq!(t2.dimension() % closure.dimension(), 0);
        assert_eq!(closure.dimension(), 4);

        let sub = subalgebra_closure(&t2, &[s]).unwrap();
        assert_eq!(sub.dimension(), 2);
        assert!(!sub.contains(&z).unwrap());
    }

    #[test]
    fn mismatched_towers_are_rejected() {
        let (_, s) = q_sqrt2();
        let q = TowerDescriptor::rationals();
        let one = TowerElement::one(&q);
        assert!(subalgebra_membership(&[one], &s).is_err());
    }
}
