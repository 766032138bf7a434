//! Finite commutative monoids as addition tables, with exhaustive
//! enumeration up to isomorphism for small orders.
//!
//! These are the target monoids of the universal-property verification:
//! biadditive maps and factoring homomorphisms are enumerated against every
//! commutative monoid of bounded size.

use crate::monoid::{FpMonoid, Word};

/// A commutative monoid on `{0, .., size-1}` with `0` as identity, stored as
/// the full addition table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteMonoid {
    size: u8,
    table: Vec<u8>,
}

impl FiniteMonoid {
    pub fn size(&self) -> u8 {
        self.size
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.table[a as usize * self.size as usize + b as usize]
    }

    pub fn scale(&self, n: u32, a: u8) -> u8 {
        let mut acc = 0u8;
        for _ in 0..n {
            acc = self.add(acc, a);
        }
        acc
    }

    /// Value of a word under an assignment of generators to elements.
    pub fn eval_word(&self, assignment: &[u8], word: &Word) -> u8 {
        let mut acc = 0u8;
        for (gen, &exp) in word.iter().enumerate() {
            acc = self.add(acc, self.scale(exp, assignment[gen]));
        }
        acc
    }

    /// Truncated natural numbers `{0, .., size-1}` with saturating addition.
    pub fn truncated_naturals(size: u8) -> FiniteMonoid {
        assert!(size >= 1);
        let n = size as usize;
        let mut table = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b).min(n - 1) as u8;
            }
        }
        FiniteMonoid { size, table }
    }

    /// The cyclic group of the given order.
    pub fn cyclic(order: u8) -> FiniteMonoid {
        assert!(order >= 1);
        let n = order as usize;
        let mut table = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = ((a + b) % n) as u8;
            }
        }
        FiniteMonoid { size: order, table }
    }

    fn is_associative(&self) -> bool {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Lexicographically least table among relabelings of the non-identity
    /// elements.
    fn canonical_table(&self) -> Vec<u8> {
        let n = self.size as usize;
        let mut best = self.table.clone();
        let mut perm: Vec<u8> = (0..self.size).collect();
        permute_rest(&mut perm, 1, &mut |p| {
            let mut inv = vec![0u8; n];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi as usize] = i as u8;
            }
            let mut relabeled = vec![0u8; n * n];
            for a in 0..n {
                for b in 0..n {
                    relabeled[a * n + b] =
                        p[self.add(inv[a], inv[b]) as usize];
                }
            }
            if relabeled < best {
                best = relabeled;
            }
        });
        best
    }
}

fn permute_rest(perm: &mut Vec<u8>, from: usize, visit: &mut impl FnMut(&[u8])) {
    if from >= perm.len() {
        visit(perm);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        permute_rest(perm, from + 1, visit);
        perm.swap(from, i);
    }
}

/// All commutative monoids with at most `max_size` elements, one per
/// isomorphism class, enumerated by backtracking over commutative addition
/// tables with incremental associativity pruning.
pub fn all_commutative_monoids(max_size: u8) -> Vec<FiniteMonoid> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        enumerate_of_size(size, &mut out);
    }
    out
}

fn enumerate_of_size(size: u8, out: &mut Vec<FiniteMonoid>) {
    let n = size as usize;
    // Cells above the diagonal among non-identity elements, in scan order.
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mut table = vec![0u8; n * n];
    for k in 0..n {
        table[k] = k as u8;
        table[k * n] = k as u8;
    }
    let mut filled = vec![false; n * n];
    for k in 0..n {
        filled[k] = true;
        filled[k * n] = true;
    }
    backtrack(size, &cells, 0, &mut table, &mut filled, out);
}

fn backtrack(
    size: u8,
    cells: &[(usize, usize)],
    at: usize,
    table: &mut Vec<u8>,
    filled: &mut Vec<bool>,
    out: &mut Vec<FiniteMonoid>,
) {
    let n = size as usize;
    if at == cells.len() {
        let candidate = FiniteMonoid { size, table: table.clone() };
        debug_assert!(candidate.is_associative());
        if candidate.table == candidate.canonical_table() {
            out.push(candidate);
        }
        return;
    }
    let (i, j) = cells[at];
    for value in 0..size {
        table[i * n + j] = value;
        table[j * n + i] = value;
        filled[i * n + j] = true;
        filled[j * n + i] = true;
        if partial_associative(n, table, filled) {
            backtrack(size, cells, at + 1, table, filled, out);
        }
        filled[i * n + j] = false;
        filled[j * n + i] = false;
    }
}

/// Checks every associativity instance whose three lookups are all defined.
fn partial_associative(n: usize, table: &[u8], filled: &[bool]) -> bool {
    for a in 0..n {
        for b in 0..n {
            if !filled[a * n + b] {
                continue;
            }
            let ab = table[a * n + b] as usize;
            for c in 0..n {
                if !filled[b * n + c] {
                    continue;
                }
                let bc = table[b * n + c] as usize;
                if !filled[ab * n + c] || !filled[a * n + bc] {
                    continue;
                }
                if table[ab * n + c] != table[a * n + bc] {
                    return false;
                }
            }
        }
    }
    true
}

/// Assignments of the generators of a presented monoid into a finite monoid
/// that respect every relation: the monoid homomorphisms, given by their
/// values on generators.
pub fn monoid_homs(source: &FpMonoid, target: &FiniteMonoid) -> Vec<Vec<u8>> {
    let p = source.n_generators();
    let mut out = Vec::new();
    let mut assignment = vec![0u8; p];
    loop {
        let ok = source.relations().iter().all(|(u, v)| {
            target.eval_word(&assignment, u) == target.eval_word(&assignment, v)
        });
        if ok {
            out.push(assignment.clone());
        }
        let mut done = true;
        for slot in assignment.iter_mut() {
            if *slot + 1 < target.size() {
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
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_for_tiny_orders() {
        assert_eq!(all_commutative_monoids(1).len(), 1);
        let upto2: Vec<_> = all_commutative_monoids(2);
        assert_eq!(upto2.len(), 1 + 2);
        let of3 = all_commutative_monoids(3).len() - upto2.len();
        assert_eq!(of3, 5);
    }

    #[test]
    fn enumerated_tables_are_valid_and_canonical() {
        for m in all_commutative_monoids(4) {
            assert!(m.is_associative());
            for a in 0..m.size() {
                assert_eq!(m.add(0, a), a);
                for b in 0..m.size() {
                    assert_eq!(m.add(a, b), m.add(b, a));
                }
            }
            assert_eq!(m.table, m.canonical_table());
        }
    }

    #[test]
    fn homs_of_free_monoid_are_all_assignments() {
        let free = FpMonoid::free(2);
        let c = FiniteMonoid::cyclic(3);
        assert_eq!(monoid_homs(&free, &c).len(), 9);
    }

    #[test]
    fn homs_respect_relations() {
        // One generator of order dividing 2 inside Z/4: only 0 and 2 work.
        let z2 = FpMonoid::new(1, vec![(vec![2], vec![0])]).unwrap();
        let c4 = FiniteMonoid::cyclic(4);
        let homs = monoid_homs(&z2, &c4);
        assert_eq!(homs, vec![vec![0], vec![2]]);
    }

    #[test]
    fn truncated_naturals_saturate() {
        let t = FiniteMonoid::truncated_naturals(4);
        assert_eq!(t.add(2, 3), 3);
        assert_eq!(t.add(1, 1), 2);
        assert_eq!(t.scale(5, 1), 3);
    }
}
