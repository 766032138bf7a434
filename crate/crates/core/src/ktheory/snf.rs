//! Dense integer matrices and Smith normal form, exact throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix over the integers. Entries are arbitrary precision because
/// elimination can grow intermediate values well past machine words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntMat { rows: r, cols: c, data }
    }

    /// Builds a matrix from columns given as integer vectors.
    pub fn from_columns(ambient: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = IntMat::zero(ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert!(col.len() == ambient, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &x[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a += q * row b
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * &self[(b, j)];
            self[(a, j)] += delta;
        }
    }

    /// col a += q * col b
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = q * &self[(i, b)];
            self[(i, a)] += delta;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Exact; panics on
    /// non-square input.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Display for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal with a
/// divisibility chain on the nonzero diagonal.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in chain order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntMat) -> SmithDecomposition {
    let mut d = m.clone();
    let mut u = IntMat::identity(m.rows());
    let mut v = IntMat::identity(m.cols());
    let n = m.rows().min(m.cols());

    for k in 0..n {
        'pivot: loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in k..d.rows() {
                for j in k..d.cols() {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => d[(i, j)].abs() < d[(bi, bj)].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // Clear column k with truncated quotients; leftover remainders are
            // strictly smaller than the pivot and trigger another round.
            let mut dirty = false;
            for i in k + 1..d.rows() {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, k)] / &d[(k, k)]);
                d.add_row(i, k, &q);
                u.add_row(i, k, &q);
                if !d[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..d.cols() {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(k, j)] / &d[(k, k)]);
                d.add_col(j, k, &q);
                v.add_col(j, k, &q);
                if !d[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Divisibility repair: fold a bad trailing entry into row k and
            // re-run, which replaces the pivot by a gcd.
            let one = BigInt::one();
            for i in k + 1..d.rows() {
                for j in k + 1..d.cols() {
                    if !(&d[(i, j)] % &d[(k, k)]).is_zero() {
                        d.add_row(k, i, &one);
                        u.add_row(k, i, &one);
                        continue 'pivot;
                    }
                }
            }
            if d[(k, k)].is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
            break;
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMat, d: IntMat, v: IntMat) -> SmithDecomposition {
    debug_assert!({
        let n = d.rows().min(d.cols());
        (1..n).all(|i| {
            let prev = &d[(i - 1, i - 1)];
            let cur = &d[(i, i)];
            cur.is_zero() || (!prev.is_zero() && (cur % prev).is_zero())
        })
    });
    SmithDecomposition { u, d, v }
}

/// Decides membership in the sublattice of `Z^p` spanned by the columns of
/// `basis`. Reusable across queries: the Smith form is computed once.
#[derive(Debug, Clone)]
pub struct LatticeMembership {
    u: IntMat,
    diag: Vec<BigInt>,
    rows: usize,
}

impl LatticeMembership {
    pub fn new(basis: &IntMat) -> Self {
        let snf = smith_normal_form(basis);
        LatticeMembership {
            diag: snf.invariant_factors(),
            u: snf.u,
            rows: basis.rows(),
        }
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.rows, "vector length mismatch");
        let y = self.u.mul_vec(x);
        for (i, yi) in y.iter().enumerate() {
            match self.diag.get(i) {
                Some(d) => {
                    if !yi.mod_floor(d).is_zero() {
                        return false;
                    }
                }
                None => {
                    if !yi.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Kronecker product, row-major on both factors.
pub fn kronecker(a: &IntMat, b: &IntMat) -> IntMat {
    let mut out = IntMat::zero(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = &a[(i, j)] * &b[(k, l)];
                }
            }
        }
    }
    out
}
