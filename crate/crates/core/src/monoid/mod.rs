//! Finitely generated commutative monoids: presentations, positive cones,
//! tensor products, greatest cancellative images and enveloping groups.
//!
//! Two representations coexist. [`PositiveCone`] is the production path for
//! projection semigroups of the algebras we model (cancellative, embedded in
//! the enveloping group); [`FpMonoid`] is the generic path whose word problem
//! is solved only up to a depth bound, used to exercise the tensor product's
//! universal property on non-cancellative inputs.

mod cone;
mod fp;
pub mod small;
pub mod universal;

pub use cone::{cone_tensor, kron_vec, ConeVec, PositiveCone};
pub use fp::{
    bilinear_image, cancellative_image, congruence_equal, enveloping_group_fp, fp_tensor,
    word_add, words_up_to_degree, CancellationConfig, CancellationStatus, CancellativeImage,
    FpMonoid, Verdict, Word,
};

use crate::ktheory::FgAbGroup;
use crate::Result;

/// A monoid in either representation.
#[derive(Debug, Clone, PartialEq)]
pub enum Monoid {
    Presented(FpMonoid),
    Cone(PositiveCone),
}

/// Tensor product in the Grillet sense. Cone inputs go through the Kronecker
/// construction on generators; presented inputs get the induced-relation
/// presentation; mixed inputs convert the (simplicial, hence free) cone to a
/// presentation first.
pub fn monoid_tensor(a: &Monoid, b: &Monoid) -> Result<Monoid> {
    match (a, b) {
        (Monoid::Cone(s), Monoid::Cone(t)) => Ok(Monoid::Cone(cone_tensor(s, t)?)),
        (Monoid::Presented(s), Monoid::Presented(t)) => Ok(Monoid::Presented(fp_tensor(s, t))),
        (Monoid::Cone(s), Monoid::Presented(t)) => {
            Ok(Monoid::Presented(fp_tensor(&s.to_free_presentation()?, t)))
        }
        (Monoid::Presented(s), Monoid::Cone(t)) => {
            Ok(Monoid::Presented(fp_tensor(s, &t.to_free_presentation()?)))
        }
    }
}

/// Enveloping (Grothendieck) group of either representation.
pub fn enveloping_group(m: &Monoid) -> FgAbGroup {
    match m {
        Monoid::Presented(s) => enveloping_group_fp(s),
        Monoid::Cone(c) => c.enveloping_group(),
    }
}

/// The cancellative tensor product: the greatest cancellative image of the
/// plain tensor product. On cancellative inputs whose tensor product is
/// already cancellative the two constructions agree.
pub fn cancellative_tensor(
    s: &FpMonoid,
    t: &FpMonoid,
    config: &CancellationConfig,
) -> CancellativeImage {
    cancellative_image(&fp_tensor(s, t), config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_tensor_goes_through_free_presentation() {
        let cone = PositiveCone::new(2, vec![vec![1, 0], vec![1, 1]], vec![2, 1]).unwrap();
        let free = FpMonoid::free(2);
        let t = monoid_tensor(&Monoid::Cone(cone), &Monoid::Presented(free)).unwrap();
        match t {
            Monoid::Presented(m) => {
                assert_eq!(m.n_generators(), 4);
                assert!(m.relations().is_empty());
            }
            Monoid::Cone(_) => panic!("expected a presentation"),
        }
    }

    #[test]
    fn enveloping_group_commutes_with_tensor_on_cones() {
        use crate::ktheory::tensor_groups;
        let cone = PositiveCone::new(2, vec![vec![1, 0], vec![1, 1]], vec![2, 1]).unwrap();
        let square = cone_tensor(&cone, &cone).unwrap();
        assert_eq!(
            square.enveloping_group(),
            tensor_groups(&cone.enveloping_group(), &cone.enveloping_group())
        );
    }

    #[test]
    fn cancellative_tensor_agrees_on_cancellative_inputs() {
        // N^2 tensor N^2 is free, so the cancellative quotient adds nothing.
        let free = FpMonoid::free(2);
        let config = CancellationConfig {
            element_degree: 2,
            witness_degree: 2,
            rewrite_depth: 4,
            max_rounds: 4,
        };
        let image = cancellative_tensor(&free, &free, &config);
        assert_eq!(image.status, CancellationStatus::Stable);
        assert!(image.merged_pairs.is_empty());
    }

    #[test]
    fn cancellative_tensor_collapses_absorbing_inputs() {
        // S = N with an absorbing element; its tensor square collapses in
        // the cancellative quotient to something with trivial group.
        let s = FpMonoid::new(2, vec![(vec![1, 1], vec![0, 1]), (vec![0, 2], vec![0, 1])])
            .unwrap();
        let config = CancellationConfig {
            element_degree: 2,
            witness_degree: 2,
            rewrite_depth: 6,
            max_rounds: 6,
        };
        let image = cancellative_tensor(&s, &s, &config);
        assert_eq!(image.status, CancellationStatus::Stable);
        assert_eq!(enveloping_group_fp(&image.monoid), FgAbGroup::trivial());
    }
}
