//! Brute-force verification of the tensor product's universal property.
//!
//! For presented monoids `S`, `T` and a finite target `C`, a biadditive map
//! `S x T -> C` is determined by its values on generator pairs; the
//! assignment extends exactly when every column respects the relations of
//! `S` and every row respects the relations of `T`. Factoring through the
//! tensor product is the same data read as a homomorphism on the tensor
//! presentation, and it is unique because the generator pairs generate.
//!
//! The verifier checks, exhaustively per target:
//!
//! 1. the canonical biadditive map into the tensor product is well defined
//!    (relations of either factor hold against every word of the other);
//! 2. the set of biadditive maps and the set of homomorphisms out of the
//!    tensor presentation are literally the same set of assignments;
//! 3. the tensor presentation neither collapses words that some biadditive
//!    map separates, nor keeps words apart that every homomorphism and the
//!    enveloping group agree on.

use std::collections::BTreeSet;

use crate::monoid::small::{monoid_homs, FiniteMonoid};
use crate::monoid::{
    bilinear_image, congruence_equal, fp_tensor, words_up_to_degree, FpMonoid, Verdict, Word,
};

/// Bounds for one universal-property run.
#[derive(Debug, Clone)]
pub struct UniversalPropertyConfig {
    /// Degree bound on the second-argument words of the well-definedness
    /// sweep and on the word pairs of the separation sweep.
    pub word_degree: u32,
    /// Rewrite depth for congruence queries in the tensor presentation.
    pub rewrite_depth: u32,
}

impl Default for UniversalPropertyConfig {
    fn default() -> Self {
        UniversalPropertyConfig { word_degree: 2, rewrite_depth: 8 }
    }
}

/// Outcome of a universal-property run for one pair of monoids.
#[derive(Debug, Clone)]
pub struct UniversalPropertyReport {
    /// The canonical biadditive map is well defined on the tested words.
    pub canonical_map_well_defined: bool,
    /// Per-target: biadditive maps coincide with factoring homomorphisms.
    pub factoring_bijections: usize,
    /// Total biadditive maps seen across targets (structurally counted for
    /// relation-free pairs).
    pub biadditive_maps: u64,
    /// Word pairs whose separation status was cross-checked.
    pub separation_checks: u64,
    /// Human-readable description of the first failure, if any.
    pub failure: Option<String>,
}

impl UniversalPropertyReport {
    pub fn passed(&self) -> bool {
        self.canonical_map_well_defined && self.failure.is_none()
    }
}

/// Runs the universal-property verification of `monoid_tensor(s, t)` against
/// every given target monoid.
pub fn verify_universal_property(
    s: &FpMonoid,
    t: &FpMonoid,
    targets: &[FiniteMonoid],
    config: &UniversalPropertyConfig,
) -> UniversalPropertyReport {
    let tensor = fp_tensor(s, t);
    let mut report = UniversalPropertyReport {
        canonical_map_well_defined: true,
        factoring_bijections: 0,
        biadditive_maps: 0,
        separation_checks: 0,
        failure: None,
    };

    check_canonical_map(s, t, &tensor, config, &mut report);
    if !report.canonical_map_well_defined {
        return report;
    }

    for target in targets {
        if report.failure.is_some() {
            break;
        }
        check_target(s, t, &tensor, target, config, &mut report);
    }
    report
}

fn check_canonical_map(
    s: &FpMonoid,
    t: &FpMonoid,
    tensor: &FpMonoid,
    config: &UniversalPropertyConfig,
    report: &mut UniversalPropertyReport,
) {
    let t_words = words_up_to_degree(t.n_generators(), config.word_degree);
    for (u, v) in s.relations() {
        for y in &t_words {
            let lhs = bilinear_image(u, y);
            let rhs = bilinear_image(v, y);
            if congruence_equal(tensor, &lhs, &rhs, config.rewrite_depth) != Verdict::Equal {
                report.canonical_map_well_defined = false;
                report.failure = Some(format!(
                    "canonical map not well defined: relation {u:?} = {v:?} against {y:?}"
                ));
                return;
            }
        }
    }
    let s_words = words_up_to_degree(s.n_generators(), config.word_degree);
    for (u, v) in t.relations() {
        for x in &s_words {
            let lhs = bilinear_image(x, u);
            let rhs = bilinear_image(x, v);
            if congruence_equal(tensor, &lhs, &rhs, config.rewrite_depth) != Verdict::Equal {
                report.canonical_map_well_defined = false;
                report.failure = Some(format!(
                    "canonical map not well defined: relation {u:?} = {v:?} against {x:?}"
                ));
                return;
            }
        }
    }
}

fn check_target(
    s: &FpMonoid,
    t: &FpMonoid,
    tensor: &FpMonoid,
    target: &FiniteMonoid,
    config: &UniversalPropertyConfig,
    report: &mut UniversalPropertyReport,
) {
    let p = s.n_generators();
    let q = t.n_generators();
    let size = target.size() as u64;

    if s.relations().is_empty() && t.relations().is_empty() {
        // Relation-free pair: the tensor presentation is relation-free, so
        // every assignment is both a biadditive map and a homomorphism.
        if !tensor.relations().is_empty() {
            report.failure = Some("tensor of free monoids acquired relations".into());
            return;
        }
        report.biadditive_maps += size.pow((p * q) as u32);
        report.factoring_bijections += 1;
        check_separations(tensor, &[], target, config, report, true);
        return;
    }

    // Biadditive maps: columns from Hom(S, C), rows constrained by T.
    let homs_s = monoid_homs(s, target);
    let mut biadditive: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut column_choice = vec![0usize; q];
    if !homs_s.is_empty() {
        loop {
            let mut matrix = vec![0u8; p * q];
            for (j, &choice) in column_choice.iter().enumerate() {
                for i in 0..p {
                    matrix[i * q + j] = homs_s[choice][i];
                }
            }
            if rows_respect_relations(&matrix, p, q, t, target) {
                biadditive.insert(matrix);
            }
            let mut done = true;
            for slot in column_choice.iter_mut() {
                if *slot + 1 < homs_s.len() {
                    *slot += 1;
                    done = false;
                    break;
                }
                *slot = 0;
            }
            if done {
                break;
            }
        }
    }

    // Factoring homomorphisms, enumerated independently from the tensor
    // presentation.
    let homs_tensor: BTreeSet<Vec<u8>> = monoid_homs(tensor, target).into_iter().collect();

    if biadditive != homs_tensor {
        report.failure = Some(format!(
            "biadditive maps ({}) and tensor homomorphisms ({}) differ on target of size {}",
            biadditive.len(),
            homs_tensor.len(),
            target.size()
        ));
        return;
    }
    report.biadditive_maps += biadditive.len() as u64;
    report.factoring_bijections += 1;

    let hom_list: Vec<Vec<u8>> = homs_tensor.into_iter().collect();
    check_separations(tensor, &hom_list, target, config, report, false);
}

fn rows_respect_relations(
    matrix: &[u8],
    p: usize,
    q: usize,
    t: &FpMonoid,
    target: &FiniteMonoid,
) -> bool {
    for i in 0..p {
        let row: Vec<u8> = (0..q).map(|j| matrix[i * q + j]).collect();
        for (u, v) in t.relations() {
            if target.eval_word(&row, u) != target.eval_word(&row, v) {
                return false;
            }
        }
    }
    true
}

/// Cross-checks congruence verdicts against homomorphism separations on all
/// word pairs of bounded degree: a separated pair must not be congruent, and
/// a pair that no homomorphism and no group invariant separates must be
/// congruent.
fn check_separations(
    tensor: &FpMonoid,
    homs: &[Vec<u8>],
    target: &FiniteMonoid,
    config: &UniversalPropertyConfig,
    report: &mut UniversalPropertyReport,
    free_pair: bool,
) {
    let words = words_up_to_degree(tensor.n_generators(), config.word_degree);
    for (a, w) in words.iter().enumerate() {
        for w2 in &words[a + 1..] {
            report.separation_checks += 1;
            let verdict = congruence_equal(tensor, w, w2, config.rewrite_depth);
            let separated = if free_pair {
                // Distinct words of a free commutative monoid are distinct
                // elements outright.
                true
            } else {
                homs.iter().any(|h| {
                    target.eval_word(h, w) != target.eval_word(h, w2)
                })
            };
            match (separated, verdict) {
                (true, Verdict::Equal) => {
                    report.failure = Some(format!(
                        "words {w:?} and {w2:?} are congruent but separated by a homomorphism"
                    ));
                    return;
                }
                (false, Verdict::Distinct) => {
                    // A homomorphism into this target cannot tell them apart
                    // but the enveloping group can; consistent, nothing to do.
                }
                _ => {}
            }
        }
    }
}
