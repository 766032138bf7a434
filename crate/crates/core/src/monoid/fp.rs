//! Finitely presented commutative monoids and their word problem, solved up
//! to a configurable rewrite depth with an explicit unknown outcome.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;

use crate::ktheory::{FgAbGroup, IntMat, LatticeMembership};
use crate::{Error, Result};

/// An element of a finitely presented monoid: exponents over the generators.
pub type Word = Vec<u32>;

/// A commutative monoid presented by generators and pairs of equal words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMonoid {
    n_generators: usize,
    relations: Vec<(Word, Word)>,
    cancellative_hint: bool,
}

/// Outcome of a bounded word-problem query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Joined by a rewrite chain within the depth bound.
    Equal,
    /// Separated by the enveloping-group image.
    Distinct,
    /// Neither joined within the bound nor separated by an invariant.
    Unknown,
}

impl FpMonoid {
    pub fn new(n_generators: usize, relations: Vec<(Word, Word)>) -> Result<Self> {
        for (u, v) in &relations {
            if u.len() != n_generators || v.len() != n_generators {
                return Err(Error::DimensionMismatch(format!(
                    "relation vectors must have length {n_generators}"
                )));
            }
        }
        Ok(FpMonoid { n_generators, relations, cancellative_hint: false })
    }

    pub fn free(n_generators: usize) -> Self {
        FpMonoid { n_generators, relations: Vec::new(), cancellative_hint: true }
    }

    pub fn with_cancellative_hint(mut self, hint: bool) -> Self {
        self.cancellative_hint = hint;
        self
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn cancellative_hint(&self) -> bool {
        self.cancellative_hint
    }

    pub fn zero_word(&self) -> Word {
        vec![0; self.n_generators]
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.n_generators {
            return Err(Error::DimensionMismatch(format!(
                "word has length {}, monoid has {} generators",
                w.len(),
                self.n_generators
            )));
        }
        Ok(())
    }

    /// Columns are the relation differences; the cokernel is the enveloping
    /// group.
    pub fn relation_lattice(&self) -> IntMat {
        let mut m = IntMat::zero(self.n_generators, self.relations.len());
        for (j, (u, v)) in self.relations.iter().enumerate() {
            for i in 0..self.n_generators {
                m[(i, j)] = BigInt::from(u[i] as i64 - v[i] as i64);
            }
        }
        m
    }
}

pub fn word_add(a: &Word, b: &Word) -> Word {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn word_ge(a: &Word, b: &Word) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

fn word_rewrite(w: &Word, from: &Word, to: &Word) -> Word {
    w.iter().zip(from).zip(to).map(|((x, f), t)| x - f + t).collect()
}

const VISIT_BUDGET: usize = 100_000;

/// Decides equality in the presented quotient at a bounded rewrite depth.
///
/// A bidirectional search over relation applications looks for a chain of at
/// most `depth` steps; failing that, the images in the enveloping group
/// either separate the words or the answer stays `Unknown`.
pub fn congruence_equal(monoid: &FpMonoid, u: &Word, v: &Word, depth: u32) -> Verdict {
    monoid.check_word(u).expect("word length mismatch");
    monoid.check_word(v).expect("word length mismatch");
    if u == v {
        return Verdict::Equal;
    }
    if !monoid.relations.is_empty() && depth > 0 {
        let forward = depth.div_ceil(2);
        let backward = depth / 2;
        let ball_u = rewrite_ball(monoid, u, forward);
        if ball_u.contains(v) {
            return Verdict::Equal;
        }
        if backward > 0 {
            let ball_v = rewrite_ball(monoid, v, backward);
            if ball_u.intersection(&ball_v).next().is_some() {
                return Verdict::Equal;
            }
        }
    }
    let lattice = LatticeMembership::new(&monoid.relation_lattice());
    let diff: Vec<BigInt> = u
        .iter()
        .zip(v)
        .map(|(a, b)| BigInt::from(*a as i64 - *b as i64))
        .collect();
    if lattice.contains(&diff) {
        Verdict::Unknown
    } else {
        Verdict::Distinct
    }
}

fn rewrite_ball(monoid: &FpMonoid, start: &Word, depth: u32) -> HashSet<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier: VecDeque<(Word, u32)> = VecDeque::new();
    frontier.push_back((start.clone(), 0));
    while let Some((w, d)) = frontier.pop_front() {
        if d == depth || seen.len() >= VISIT_BUDGET {
            continue;
        }
        for (u, v) in &monoid.relations {
            for (from, to) in [(u, v), (v, u)] {
                if word_ge(&w, from) {
                    let next = word_rewrite(&w, from, to);
                    if seen.insert(next.clone()) {
                        frontier.push_back((next, d + 1));
                    }
                }
            }
        }
    }
    seen
}

/// All words over `n` generators with total degree at most `degree`,
/// in lexicographic order.
pub fn words_up_to_degree(n: usize, degree: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    enumerate_words(&mut out, &mut current, 0, degree);
    out
}

fn enumerate_words(out: &mut Vec<Word>, current: &mut Word, pos: usize, remaining: u32) {
    if pos == current.len() {
        out.push(current.clone());
        return;
    }
    for take in 0..=remaining {
        current[pos] = take;
        enumerate_words(out, current, pos + 1, remaining - take);
    }
    current[pos] = 0;
}

/// Bounds for the cancellative-image fixpoint search.
#[derive(Debug, Clone)]
pub struct CancellationConfig {
    /// Total degree bound on the element pairs being compared.
    pub element_degree: u32,
    /// Total degree bound on witness candidates.
    pub witness_degree: u32,
    /// Rewrite depth for each word-problem query.
    pub rewrite_depth: u32,
    /// Maximum number of add-and-rescan rounds.
    pub max_rounds: u32,
}

impl Default for CancellationConfig {
    fn default() -> Self {
        CancellationConfig {
            element_degree: 4,
            witness_degree: 4,
            rewrite_depth: 8,
            max_rounds: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CancellationStatus {
    /// A full scan found no witnessed pair left to collapse.
    Stable,
    /// The round budget ran out before the scan stabilized.
    Incomplete,
}

#[derive(Debug, Clone)]
pub struct CancellativeImage {
    pub monoid: FpMonoid,
    pub status: CancellationStatus,
    /// Pairs that were merged, in discovery order.
    pub merged_pairs: Vec<(Word, Word)>,
}

/// Greatest cancellative image: the quotient by `x ~ y` when `x + b = y + b`
/// for some witness `b`, searched within the configured bounds.
pub fn cancellative_image(monoid: &FpMonoid, config: &CancellationConfig) -> CancellativeImage {
    let mut relations = monoid.relations().to_vec();
    let mut merged = Vec::new();
    let elements = words_up_to_degree(monoid.n_generators(), config.element_degree);
    let witnesses = words_up_to_degree(monoid.n_generators(), config.witness_degree);

    for _round in 0..config.max_rounds {
        let current = FpMonoid {
            n_generators: monoid.n_generators(),
            relations: relations.clone(),
            cancellative_hint: false,
        };
        let mut found = Vec::new();
        for (i, x) in elements.iter().enumerate() {
            for y in &elements[i + 1..] {
                if congruence_equal(&current, x, y, config.rewrite_depth) == Verdict::Equal {
                    continue;
                }
                let witnessed = witnesses.iter().any(|b| {
                    congruence_equal(
                        &current,
                        &word_add(x, b),
                        &word_add(y, b),
                        config.rewrite_depth,
                    ) == Verdict::Equal
                });
                if witnessed {
                    found.push((x.clone(), y.clone()));
                }
            }
        }
        if found.is_empty() {
            return CancellativeImage {
                monoid: current.with_cancellative_hint(true),
                status: CancellationStatus::Stable,
                merged_pairs: merged,
            };
        }
        merged.extend(found.iter().cloned());
        relations.extend(found);
    }
    CancellativeImage {
        monoid: FpMonoid {
            n_generators: monoid.n_generators(),
            relations,
            cancellative_hint: false,
        },
        status: CancellationStatus::Incomplete,
        merged_pairs: merged,
    }
}

/// Enveloping (Grothendieck) group of a presented monoid: the cokernel of
/// the relation-difference lattice.
pub fn enveloping_group_fp(monoid: &FpMonoid) -> FgAbGroup {
    FgAbGroup::from_presentation(&monoid.relation_lattice())
}

/// Tensor product of presented monoids: generators are generator pairs and
/// the relations of each factor are imposed against every generator of the
/// other.
pub fn fp_tensor(s: &FpMonoid, t: &FpMonoid) -> FpMonoid {
    let p = s.n_generators();
    let q = t.n_generators();
    let mut relations = Vec::new();
    for (u, v) in s.relations() {
        for j in 0..q {
            relations.push((lift_left(u, j, q), lift_left(v, j, q)));
        }
    }
    for (u, v) in t.relations() {
        for i in 0..p {
            relations.push((lift_right(u, i, p, q), lift_right(v, i, p, q)));
        }
    }
    FpMonoid { n_generators: p * q, relations, cancellative_hint: false }
}

fn lift_left(u: &Word, j: usize, q: usize) -> Word {
    let mut w = vec![0u32; u.len() * q];
    for (i, &e) in u.iter().enumerate() {
        w[i * q + j] = e;
    }
    w
}

fn lift_right(u: &Word, i: usize, p: usize, q: usize) -> Word {
    let mut w = vec![0u32; p * q];
    for (j, &e) in u.iter().enumerate() {
        w[i * q + j] = e;
    }
    w
}

/// The canonical biadditive image of a pair of words in the tensor
/// presentation: exponent `x_i * y_j` on the generator pair `(i, j)`.
pub fn bilinear_image(x: &Word, y: &Word) -> Word {
    let q = y.len();
    let mut w = vec![0u32; x.len() * q];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            w[i * q + j] = xi * yj;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat_union_infinity() -> FpMonoid {
        // Generators a, w with w absorbing: a + w = w and w + w = w.
        FpMonoid::new(2, vec![(vec![1, 1], vec![0, 1]), (vec![0, 2], vec![0, 1])]).unwrap()
    }

    #[test]
    fn reflexivity_at_any_depth() {
        let free = FpMonoid::free(2);
        let w = vec![1, 2];
        assert_eq!(congruence_equal(&free, &w, &w, 0), Verdict::Equal);
        assert_eq!(congruence_equal(&free, &w, &w, 5), Verdict::Equal);
    }

    #[test]
    fn one_relation_application() {
        let m = nat_union_infinity();
        // a + w = w in one step.
        assert_eq!(congruence_equal(&m, &vec![1, 1], &vec![0, 1], 1), Verdict::Equal);
    }

    #[test]
    fn free_generators_are_distinct() {
        let free = FpMonoid::free(2);
        assert_eq!(congruence_equal(&free, &vec![1, 0], &vec![0, 1], 8), Verdict::Distinct);
    }

    #[test]
    fn deep_chains_join_exactly_at_their_length() {
        let m = nat_union_infinity();
        // 3a + w reduces to w in three steps, not two.
        assert_eq!(congruence_equal(&m, &vec![3, 1], &vec![0, 1], 3), Verdict::Equal);
        assert_eq!(congruence_equal(&m, &vec![3, 1], &vec![0, 1], 2), Verdict::Unknown);
    }

    #[test]
    fn unknown_when_depth_exhausted_without_separation() {
        let m = nat_union_infinity();
        // a and the empty word map to the same (trivial) enveloping group
        // element but are not joined by any rewrite.
        let verdict = congruence_equal(&m, &vec![1, 0], &vec![0, 0], 6);
        assert_eq!(verdict, Verdict::Unknown);
    }

    #[test]
    fn cancellative_image_of_free_is_free() {
        let free = FpMonoid::free(3);
        let image = cancellative_image(&free, &CancellationConfig::default());
        assert_eq!(image.status, CancellationStatus::Stable);
        assert!(image.merged_pairs.is_empty());
        assert_eq!(image.monoid.relations().len(), 0);
    }

    #[test]
    fn cancellative_image_of_absorbing_monoid_is_trivial() {
        let m = nat_union_infinity();
        let image = cancellative_image(&m, &CancellationConfig::default());
        assert_eq!(image.status, CancellationStatus::Stable);
        // Everything collapses to the identity: a ~ 0 and w ~ 0 with witness w.
        let q = &image.monoid;
        assert_eq!(congruence_equal(q, &vec![1, 0], &vec![0, 0], 4), Verdict::Equal);
        assert_eq!(congruence_equal(q, &vec![0, 1], &vec![0, 0], 4), Verdict::Equal);
        // Idempotence: a second pass finds nothing new.
        let again = cancellative_image(q, &CancellationConfig::default());
        assert_eq!(again.status, CancellationStatus::Stable);
        assert!(again.merged_pairs.is_empty());
        assert_eq!(enveloping_group_fp(q), FgAbGroup::trivial());
    }

    #[test]
    fn cancellation_law_holds_on_image() {
        let m = nat_union_infinity();
        let image = cancellative_image(&m, &CancellationConfig::default()).monoid;
        let words = words_up_to_degree(2, 3);
        for x in &words {
            for y in &words {
                for b in &words {
                    let xb = word_add(x, b);
                    let yb = word_add(y, b);
                    if congruence_equal(&image, &xb, &yb, 8) == Verdict::Equal {
                        assert_ne!(
                            congruence_equal(&image, x, y, 8),
                            Verdict::Distinct,
                            "cancellation violated at {x:?}, {y:?}, witness {b:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enveloping_groups() {
        assert_eq!(enveloping_group_fp(&FpMonoid::free(1)), FgAbGroup::free(1));
        assert_eq!(enveloping_group_fp(&FpMonoid::free(2)), FgAbGroup::free(2));
        assert_eq!(enveloping_group_fp(&nat_union_infinity()), FgAbGroup::trivial());
    }

    #[test]
    fn tensor_of_free_monoids_is_free() {
        let t = fp_tensor(&FpMonoid::free(2), &FpMonoid::free(2));
        assert_eq!(t.n_generators(), 4);
        assert!(t.relations().is_empty());
    }

    #[test]
    fn tensor_of_free_rank_one() {
        let t = fp_tensor(&FpMonoid::free(1), &FpMonoid::free(1));
        assert_eq!(t.n_generators(), 1);
        assert!(t.relations().is_empty());
    }

    #[test]
    fn brute_force_closure_confirms_no_collapse_in_free_tensor() {
        // Congruence closure over words of total degree <= 6: with no
        // relations every class is a singleton.
        let t = fp_tensor(&FpMonoid::free(2), &FpMonoid::free(2));
        let words = words_up_to_degree(t.n_generators(), 6);
        for (i, x) in words.iter().enumerate() {
            for y in &words[i + 1..] {
                assert_eq!(congruence_equal(&t, x, y, 6), Verdict::Distinct);
            }
        }
    }

    #[test]
    fn tensor_relations_are_induced() {
        let m = nat_union_infinity();
        let t = fp_tensor(&m, &FpMonoid::free(1));
        // (a + w) ⊗ x = w ⊗ x carries over.
        assert_eq!(t.n_generators(), 2);
        assert_eq!(
            congruence_equal(&t, &bilinear_image(&vec![1, 1], &vec![1]), &bilinear_image(&vec![0, 1], &vec![1]), 2),
            Verdict::Equal
        );
    }

    #[test]
    fn bilinearity_is_immediate_on_images() {
        // (x + x') ⊗ y and x ⊗ y + x' ⊗ y agree as words, so equality holds
        // at depth zero.
        let t = fp_tensor(&FpMonoid::free(2), &FpMonoid::free(2));
        let x = vec![1, 0];
        let x2 = vec![0, 2];
        let y = vec![1, 1];
        let lhs = bilinear_image(&word_add(&x, &x2), &y);
        let rhs = word_add(&bilinear_image(&x, &y), &bilinear_image(&x2, &y));
        assert_eq!(congruence_equal(&t, &lhs, &rhs, 0), Verdict::Equal);
    }
}
