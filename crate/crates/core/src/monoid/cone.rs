//! Positive cones in `Z^n`: finitely generated submonoids with an order
//! unit. The shipped descriptors are simplicial (linearly independent
//! generators), where membership is one exact linear solve; a bounded
//! enumeration fallback covers non-simplicial test cones.

use num_traits::{One, Signed, Zero};

use crate::ktheory::{smith_normal_form, FgAbGroup, IntMat};
use crate::rat::{int, Rat};
use crate::{Error, Result};

/// An element of the ambient group of a cone.
pub type ConeVec = Vec<i64>;

/// A finitely generated cone in `Z^ambient_rank` with a distinguished order
/// unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveCone {
    ambient_rank: usize,
    generators: Vec<ConeVec>,
    order_unit: ConeVec,
    solver: Option<ConeSolver>,
}

/// Row-reduced solve data for simplicial cones: `transform * generators`
/// is the identity on the pivot rows, so coordinates come from one
/// matrix-vector product.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ConeSolver {
    /// `ambient_rank x ambient_rank` rational row transform.
    transform: Vec<Vec<Rat>>,
    /// Row index of the pivot for each generator.
    pivot_rows: Vec<usize>,
}

const FALLBACK_COEFF_BOUND: i64 = 16;
const ORDER_UNIT_MULTIPLE_BOUND: i64 = 16;

impl PositiveCone {
    pub fn new(ambient_rank: usize, generators: Vec<ConeVec>, order_unit: ConeVec) -> Result<Self> {
        if order_unit.len() != ambient_rank
            || generators.iter().any(|g| g.len() != ambient_rank)
        {
            return Err(Error::DimensionMismatch(format!(
                "cone vectors must have length {ambient_rank}"
            )));
        }
        if generators.is_empty() {
            return Err(Error::InvalidDescriptor("cone needs at least one generator".into()));
        }
        let solver = ConeSolver::build(ambient_rank, &generators);
        let cone = PositiveCone { ambient_rank, generators, order_unit, solver };

        match cone.coordinates_or_bounded(&cone.order_unit)? {
            Some(coords) => {
                // For a simplicial cone the order-unit condition reduces to
                // strictly positive unit coordinates: generator i then sits
                // below ceil(1 / u_i) copies of the unit.
                if cone.is_simplicial() {
                    if coords.iter().any(|c| !c.is_positive()) {
                        return Err(Error::InvalidDescriptor(
                            "order unit must involve every generator of a simplicial cone".into(),
                        ));
                    }
                } else {
                    cone.check_order_unit_bounded()?;
                }
            }
            None => {
                return Err(Error::NotInCone("order unit is not in the cone".into()));
            }
        }
        Ok(cone)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[ConeVec] {
        &self.generators
    }

    pub fn order_unit(&self) -> &ConeVec {
        &self.order_unit
    }

    pub fn is_simplicial(&self) -> bool {
        self.solver.is_some()
    }

    /// Exact generator coordinates of `x` when the cone is simplicial:
    /// `Some` iff `x` is a non-negative integer combination of generators.
    pub fn coordinates(&self, x: &ConeVec) -> Result<Option<Vec<Rat>>> {
        if x.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch(format!(
                "vector has length {}, ambient rank is {}",
                x.len(),
                self.ambient_rank
            )));
        }
        let Some(solver) = &self.solver else {
            return Err(Error::NotSimplicial(
                "exact coordinates need linearly independent generators".into(),
            ));
        };
        let image: Vec<Rat> = solver
            .transform
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .map(|(t, &xi)| t * int(xi))
                    .fold(Rat::zero(), |acc, v| acc + v)
            })
            .collect();
        let coords: Vec<Rat> = solver.pivot_rows.iter().map(|&r| image[r].clone()).collect();
        // Consistency: non-pivot rows of the reduced system must vanish.
        for (r, value) in image.iter().enumerate() {
            if !solver.pivot_rows.contains(&r) && !value.is_zero() {
                return Ok(None);
            }
        }
        let admissible = coords
            .iter()
            .all(|c| c.denom().is_one() && !c.is_negative());
        Ok(if admissible { Some(coords) } else { None })
    }

    /// Membership for simplicial cones: exact and complete.
    pub fn contains(&self, x: &ConeVec) -> Result<bool> {
        Ok(self.coordinates(x)?.is_some())
    }

    /// Membership by bounded enumeration of non-negative combinations;
    /// complete only up to the coefficient bound.
    pub fn contains_bounded(&self, x: &ConeVec, bound: i64) -> Result<bool> {
        if x.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch("vector length mismatch".into()));
        }
        let k = self.generators.len();
        let mut coeffs = vec![0i64; k];
        loop {
            let mut acc = vec![0i64; self.ambient_rank];
            for (c, g) in coeffs.iter().zip(&self.generators) {
                for (a, &gi) in acc.iter_mut().zip(g) {
                    *a += c * gi;
                }
            }
            if acc == *x {
                return Ok(true);
            }
            let mut done = true;
            for slot in coeffs.iter_mut() {
                if *slot < bound {
                    *slot += 1;
                    done = false;
                    break;
                }
                *slot = 0;
            }
            if done {
                return Ok(false);
            }
        }
    }

    fn coordinates_or_bounded(&self, x: &ConeVec) -> Result<Option<Vec<Rat>>> {
        if self.is_simplicial() {
            self.coordinates(x)
        } else if self.contains_bounded(x, FALLBACK_COEFF_BOUND)? {
            Ok(Some(Vec::new()))
        } else {
            Ok(None)
        }
    }

    fn check_order_unit_bounded(&self) -> Result<()> {
        for g in &self.generators {
            let mut dominated = false;
            for k in 1..=ORDER_UNIT_MULTIPLE_BOUND {
                let diff: ConeVec = self
                    .order_unit
                    .iter()
                    .zip(g)
                    .map(|(&u, &gi)| k * u - gi)
                    .collect();
                if self.contains_bounded(&diff, FALLBACK_COEFF_BOUND)? {
                    dominated = true;
                    break;
                }
            }
            if !dominated {
                return Err(Error::InvalidDescriptor(format!(
                    "generator {g:?} is not dominated by any tested multiple of the order unit"
                )));
            }
        }
        Ok(())
    }

    /// Cone order: `x <= y` iff `y - x` is in the cone.
    pub fn le(&self, x: &ConeVec, y: &ConeVec) -> Result<bool> {
        let diff: ConeVec = y.iter().zip(x).map(|(a, b)| a - b).collect();
        self.contains(&diff)
    }

    pub fn add(&self, x: &ConeVec, y: &ConeVec) -> ConeVec {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn zero_vec(&self) -> ConeVec {
        vec![0; self.ambient_rank]
    }

    /// The subgroup of the ambient group generated by the cone, as an
    /// abstract group: free of rank equal to the generator-matrix rank.
    pub fn enveloping_group(&self) -> FgAbGroup {
        let m = IntMat::from_columns(self.ambient_rank, &self.generators);
        FgAbGroup::free(smith_normal_form(&m).rank())
    }

    /// The free presentation of a simplicial cone on its generators.
    pub fn to_free_presentation(&self) -> Result<super::FpMonoid> {
        if !self.is_simplicial() {
            return Err(Error::NotSimplicial(
                "only simplicial cones convert to free presentations".into(),
            ));
        }
        Ok(super::FpMonoid::free(self.generators.len()).with_cancellative_hint(true))
    }
}

impl ConeSolver {
    fn build(ambient: usize, generators: &[ConeVec]) -> Option<ConeSolver> {
        let k = generators.len();
        if k > ambient {
            return None;
        }
        // Row reduce [G | I] over the rationals.
        let mut g: Vec<Vec<Rat>> = (0..ambient)
            .map(|i| generators.iter().map(|col| int(col[i])).collect())
            .collect();
        let mut t: Vec<Vec<Rat>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| int(i64::from(i == j))).collect())
            .collect();
        let mut pivot_rows = Vec::with_capacity(k);
        let mut next_row = 0;
        for col in 0..k {
            let pivot = (next_row..ambient).find(|&r| !g[r][col].is_zero())?;
            g.swap(next_row, pivot);
            t.swap(next_row, pivot);
            let scale = g[next_row][col].clone();
            for v in g[next_row].iter_mut() {
                *v /= scale.clone();
            }
            for v in t[next_row].iter_mut() {
                *v /= scale.clone();
            }
            for r in 0..ambient {
                if r == next_row || g[r][col].is_zero() {
                    continue;
                }
                let factor = g[r][col].clone();
                for c in 0..k {
                    let delta = &factor * &g[next_row][c];
                    g[r][c] -= delta;
                }
                for c in 0..ambient {
                    let delta = &factor * &t[next_row][c];
                    t[r][c] -= delta;
                }
            }
            pivot_rows.push(next_row);
            next_row += 1;
        }
        Some(ConeSolver { transform: t, pivot_rows })
    }
}

/// Kronecker product of two cone vectors, row-major in the left factor.
pub fn kron_vec(a: &ConeVec, b: &ConeVec) -> ConeVec {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y);
        }
    }
    out
}

/// Tensor product of cones: the cone on all Kronecker products of
/// generators, with the Kronecker product of the order units as unit.
pub fn cone_tensor(s: &PositiveCone, t: &PositiveCone) -> Result<PositiveCone> {
    if !s.is_simplicial() || !t.is_simplicial() {
        return Err(Error::NotCancellative(
            "cone tensor products are formed through the group embedding, which needs simplicial factors".into(),
        ));
    }
    let generators: Vec<ConeVec> = s
        .generators()
        .iter()
        .flat_map(|g| t.generators().iter().map(move |h| kron_vec(g, h)))
        .collect();
    PositiveCone::new(
        s.ambient_rank() * t.ambient_rank(),
        generators,
        kron_vec(s.order_unit(), t.order_unit()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew_cone() -> PositiveCone {
        PositiveCone::new(2, vec![vec![1, 0], vec![1, 1]], vec![2, 1]).unwrap()
    }

    #[test]
    fn membership_by_exact_solve() {
        let cone = skew_cone();
        assert!(cone.contains(&vec![2, 1]).unwrap());
        assert!(cone.contains(&vec![0, 0]).unwrap());
        assert!(cone.contains(&vec![3, 1]).unwrap());
        assert!(!cone.contains(&vec![0, 1]).unwrap());
        assert!(!cone.contains(&vec![-1, 0]).unwrap());
        // In the span but with fractional coordinates.
        let half = PositiveCone::new(1, vec![vec![2]], vec![2]).unwrap();
        assert!(!half.contains(&vec![1]).unwrap());
        assert!(half.contains(&vec![4]).unwrap());
    }

    #[test]
    fn membership_matches_bounded_enumeration() {
        let cone = skew_cone();
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let x = vec![a, b];
                assert_eq!(
                    cone.contains(&x).unwrap(),
                    cone.contains_bounded(&x, 8).unwrap(),
                    "disagreement at {x:?}"
                );
            }
        }
    }

    #[test]
    fn non_simplicial_fallback() {
        // Three generators in rank two: (1,0), (0,1), (1,1).
        let cone = PositiveCone::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![1, 1],
        )
        .unwrap();
        assert!(!cone.is_simplicial());
        assert!(cone.contains_bounded(&vec![3, 2], 8).unwrap());
        assert!(!cone.contains_bounded(&vec![-1, 2], 8).unwrap());
        assert!(cone.coordinates(&vec![1, 1]).is_err());
    }

    #[test]
    fn order_unit_must_be_interior() {
        // Unit (1, 0) misses the second generator of the standard cone.
        let err = PositiveCone::new(2, vec![vec![1, 0], vec![0, 1]], vec![1, 0]);
        assert!(err.is_err());
    }

    #[test]
    fn tensor_of_standard_cones() {
        let n2 = PositiveCone::new(2, vec![vec![1, 0], vec![0, 1]], vec![1, 1]).unwrap();
        let square = cone_tensor(&n2, &n2).unwrap();
        assert_eq!(square.ambient_rank(), 4);
        assert_eq!(square.generators().len(), 4);
        assert_eq!(square.order_unit(), &vec![1, 1, 1, 1]);
        assert!(square.contains(&vec![2, 0, 1, 3]).unwrap());
        assert!(!square.contains(&vec![1, -1, 0, 0]).unwrap());
    }

    #[test]
    fn tensor_of_skew_cones_has_kronecker_generators() {
        let cone = skew_cone();
        let square = cone_tensor(&cone, &cone).unwrap();
        let expected: Vec<ConeVec> = vec![
            kron_vec(&vec![1, 0], &vec![1, 0]),
            kron_vec(&vec![1, 0], &vec![1, 1]),
            kron_vec(&vec![1, 1], &vec![1, 0]),
            kron_vec(&vec![1, 1], &vec![1, 1]),
        ];
        assert_eq!(square.generators(), expected.as_slice());
        // Membership oracle: bounded enumeration agrees with the solve on a
        // grid around the cone.
        for x0 in -2i64..=3 {
            for x1 in -2i64..=3 {
                for x2 in -2i64..=3 {
                    for x3 in -2i64..=3 {
                        let x = vec![x0, x1, x2, x3];
                        assert_eq!(
                            square.contains(&x).unwrap(),
                            square.contains_bounded(&x, 4).unwrap(),
                            "disagreement at {x:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cone_tensor_commutes_up_to_kronecker_reindexing() {
        let a = PositiveCone::new(1, vec![vec![2]], vec![2]).unwrap();
        let b = skew_cone();
        let ab = cone_tensor(&a, &b).unwrap();
        let ba = cone_tensor(&b, &a).unwrap();
        let (ra, rb) = (a.ambient_rank(), b.ambient_rank());
        // Coordinate shuffle sending index i*rb + j to j*ra + i.
        let shuffle = |v: &ConeVec| -> ConeVec {
            let mut out = vec![0; v.len()];
            for i in 0..ra {
                for j in 0..rb {
                    out[j * ra + i] = v[i * rb + j];
                }
            }
            out
        };
        let (ka, kb) = (a.generators().len(), b.generators().len());
        for i in 0..ka {
            for j in 0..kb {
                assert_eq!(
                    shuffle(&ab.generators()[i * kb + j]),
                    ba.generators()[j * ka + i]
                );
            }
        }
        assert_eq!(shuffle(ab.order_unit()), *ba.order_unit());
    }

    #[test]
    fn cone_tensor_is_associative_on_the_nose() {
        let a = PositiveCone::new(1, vec![vec![1]], vec![1]).unwrap();
        let b = skew_cone();
        let c = PositiveCone::new(1, vec![vec![3]], vec![3]).unwrap();
        let left = cone_tensor(&cone_tensor(&a, &b).unwrap(), &c).unwrap();
        let right = cone_tensor(&a, &cone_tensor(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn enveloping_group_of_cone_is_free_of_generator_rank() {
        assert_eq!(skew_cone().enveloping_group(), FgAbGroup::free(2));
        let line = PositiveCone::new(3, vec![vec![1, 2, 3]], vec![1, 2, 3]).unwrap();
        assert_eq!(line.enveloping_group(), FgAbGroup::free(1));
    }
}
