//! Finitely generated abelian groups and the Künneth assembly.
//!
//! Groups are kept in a canonical form: invariant factors `d1 | d2 | ... | dk`
//! (each at least 2) followed by one `0` per free summand. Two groups are
//! isomorphic exactly when their canonical factor lists agree, so isomorphism
//! testing is list equality.

pub mod snf;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::monoid::{cone_tensor, PositiveCone};
use crate::{Error, Result};
pub use snf::{kronecker, smith_normal_form, IntMat, LatticeMembership, SmithDecomposition};

/// A finitely generated abelian group in canonical invariant-factor form.
///
/// `0` encodes a free summand, so `Z^2 + Z/6` is `[6, 0, 0]` after
/// normalization (torsion first, factors dividing each other in order).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    factors: Vec<u64>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup { factors: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { factors: vec![0; rank] }
    }

    /// Builds from an arbitrary list of cyclic orders (`0` meaning `Z`,
    /// `1` meaning a trivial summand) and normalizes.
    pub fn from_cyclic_factors(cyclics: &[u64]) -> Self {
        FgAbGroup { factors: normalize_cyclic_factors(cyclics) }
    }

    /// The cokernel of the relation matrix: generators index rows, relations
    /// index columns.
    pub fn from_presentation(relations: &IntMat) -> Self {
        let snf = smith_normal_form(relations);
        let mut cyclics: Vec<u64> = snf
            .invariant_factors()
            .iter()
            .map(|d| {
                d.to_u64()
                    .expect("invariant factor exceeds u64; outside supported desk scale")
            })
            .collect();
        let free = relations.rows() - cyclics.len();
        cyclics.extend(std::iter::repeat(0).take(free));
        FgAbGroup::from_cyclic_factors(&cyclics)
    }

    /// Canonical factor list: torsion chain then zeros.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|&&d| d == 0).count()
    }

    pub fn torsion_factors(&self) -> Vec<u64> {
        self.factors.iter().copied().filter(|&d| d != 0).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion_factors().is_empty()
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut cyclics = self.factors.clone();
        cyclics.extend_from_slice(&other.factors);
        FgAbGroup::from_cyclic_factors(&cyclics)
    }
}

impl std::fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let rank = self.free_rank();
        if rank == 1 {
            parts.push("Z".to_string());
        } else if rank > 1 {
            parts.push(format!("Z^{rank}"));
        }
        for d in self.torsion_factors() {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn normalize_cyclic_factors(cyclics: &[u64]) -> Vec<u64> {
    let free = cyclics.iter().filter(|&&d| d == 0).count();
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in cyclics {
        if d < 2 {
            continue;
        }
        for (p, e) in factorize(d) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    for exps in by_prime.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    let levels = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut chain = Vec::with_capacity(levels + free);
    for j in 0..levels {
        let mut factor: u64 = 1;
        for (p, exps) in &by_prime {
            if let Some(&e) = exps.get(j) {
                factor *= p.pow(e);
            }
        }
        chain.push(factor);
    }
    chain.reverse();
    chain.extend(std::iter::repeat(0).take(free));
    chain
}

/// Tensor product over the integers, computed on invariant factors:
/// `Z ⊗ Z = Z`, `Z ⊗ Z/d = Z/d`, `Z/d ⊗ Z/e = Z/gcd(d, e)`.
pub fn tensor_groups(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    let mut cyclics = Vec::new();
    for &a in g.invariant_factors() {
        for &b in h.invariant_factors() {
            cyclics.push(match (a, b) {
                (0, 0) => 0,
                (0, d) | (d, 0) => d,
                (d, e) => gcd_u64(d, e),
            });
        }
    }
    FgAbGroup::from_cyclic_factors(&cyclics)
}

/// `Tor` on invariant factors: free summands contribute nothing and
/// `Tor(Z/d, Z/e) = Z/gcd(d, e)`.
pub fn tor_groups(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    let mut cyclics = Vec::new();
    for &a in g.torsion_factors().iter() {
        for &b in h.torsion_factors().iter() {
            cyclics.push(gcd_u64(a, b));
        }
    }
    FgAbGroup::from_cyclic_factors(&cyclics)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// The three terms of the Künneth short exact sequence for `A ⊗ A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethReport {
    /// `K0 ⊗ K0 + K1 ⊗ K1`, the injective image.
    pub left_term: FgAbGroup,
    /// `K0` of the tensor product. When the Tor term vanishes this equals
    /// the left term; otherwise the extension is unresolved and this field
    /// carries the split upper bound.
    pub middle_term: FgAbGroup,
    /// `Tor(K0, K1) + Tor(K1, K0)`.
    pub tor_term: FgAbGroup,
    /// True exactly when the Tor term is nonzero; the middle term is then
    /// only a bound and surjectivity arguments are obstructed.
    pub obstruction_present: bool,
}

/// Künneth assembly for a pair of algebras with the given K-groups.
pub fn kunneth_pair(
    k0_left: &FgAbGroup,
    k1_left: &FgAbGroup,
    k0_right: &FgAbGroup,
    k1_right: &FgAbGroup,
) -> KunnethReport {
    let left_term =
        tensor_groups(k0_left, k0_right).direct_sum(&tensor_groups(k1_left, k1_right));
    let tor_term = tor_groups(k0_left, k1_right).direct_sum(&tor_groups(k1_left, k0_right));
    let obstruction_present = !tor_term.is_trivial();
    let middle_term = if obstruction_present {
        left_term.direct_sum(&tor_term)
    } else {
        left_term.clone()
    };
    KunnethReport { left_term, middle_term, tor_term, obstruction_present }
}

/// Künneth assembly for `A ⊗ A`.
pub fn kunneth(k0: &FgAbGroup, k1: &FgAbGroup) -> KunnethReport {
    kunneth_pair(k0, k1, k0, k1)
}

/// Checks that the tensor square of a simplicial cone is exactly the positive
/// cone of the tensor square of its enveloping group under the product order.
///
/// Both inclusions are verified: every Kronecker generator lies in the cone
/// with unit coordinates, and a full grid of coordinate vectors with entries
/// in `[-bound, bound]` is a member exactly when all coordinates are
/// non-negative.
pub fn cone_tensor_check(cone: &PositiveCone, bound: i64) -> Result<bool> {
    if !cone.is_simplicial() {
        return Err(Error::NotSimplicial(
            "cone tensor check requires linearly independent generators".into(),
        ));
    }
    let square = cone_tensor(cone, cone)?;
    let k = cone.generators().len();
    let kk = k * k;

    // Generator inclusion with unit coordinates.
    for (idx, gen) in square.generators().iter().enumerate() {
        match square.coordinates(gen)? {
            Some(coords) => {
                for (j, c) in coords.iter().enumerate() {
                    let expected = if j == idx { 1 } else { 0 };
                    if *c != crate::rat::int(expected) {
                        return Ok(false);
                    }
                }
            }
            None => return Ok(false),
        }
    }

    // Grid of group elements in Kronecker coordinates.
    let mut coords = vec![-bound; kk];
    loop {
        let mut vector = vec![0i64; square.ambient_rank()];
        for (idx, &c) in coords.iter().enumerate() {
            for (pos, &g) in square.generators()[idx].iter().enumerate() {
                vector[pos] += c * g;
            }
        }
        let expected = coords.iter().all(|&c| c >= 0);
        if square.contains(&vector)? != expected {
            return Ok(false);
        }
        // odometer
        let mut done = true;
        for slot in coords.iter_mut() {
            if *slot < bound {
                *slot += 1;
                done = false;
                break;
            }
            *slot = -bound;
        }
        if done {
            break;
        }
    }
    Ok(true)
}
