//! Exact linear algebra over the rationals.
//!
//! All higher layers (hom-space solving, kernels of induced maps, mesh
//! knitting) reduce to three primitives implemented here on dense
//! arbitrary-precision rational matrices:
//!
//! * [`ExactMatrix::rref`] — reduced row echelon form with pivot-column
//!   report, by Gauss-Jordan elimination with exact pivots,
//! * [`ExactMatrix::kernel_basis`] — a basis of the right null space read
//!   off the rref by back-substitution of free columns,
//! * [`ExactMatrix::solve`] — one solution of `m x = b`, or `None` when
//!   the system is inconsistent.
//!
//! Everything is exact: no floating point enters anywhere in the crate.
//! Matrices with zero rows or zero columns are first-class citizens; they
//! show up constantly as hom spaces and zero representations.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the rational `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Parse a rational from `"p"` or `"p/q"` decimal strings.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().ok()?;
            let q: num_bigint::BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => {
            let p: num_bigint::BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Render a rational as `"p"` or `"p/q"` in lowest terms.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense matrix of rationals, row-major. Either dimension may be zero.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| fmt_rat(self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    /// All-zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    /// Build from nested vectors. All rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(
            rows.iter().all(|x| x.len() == c),
            "ragged rows in matrix literal"
        );
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from integer literals; test-friendly.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        *self.at_mut(r, c) = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    /// Matrix product `self * other`. Panics on shape mismatch.
    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = ExactMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Entrywise sum. Panics on shape mismatch.
    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    /// Entrywise difference. Panics on shape mismatch.
    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rat) -> ExactMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> ExactMatrix {
        self.scale(&rat(-1))
    }

    /// Apply the matrix to a column vector.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut s = Rat::zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() {
                        s += self.at(r, c) * &v[c];
                    }
                }
                s
            })
            .collect()
    }

    /// Column `c` as a vector.
    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Row `r` as a vector.
    pub fn row(&self, r: usize) -> Vec<Rat> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<Rat>]) -> ExactMatrix {
        let mut m = ExactMatrix::zero(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for r in 0..rows {
                *m.at_mut(r, c) = col[r].clone();
            }
        }
        m
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = ExactMatrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(r, c) = self.at(r, c).clone();
            }
            for c in 0..other.cols {
                *out.at_mut(r, self.cols + c) = other.at(r, c).clone();
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut out = ExactMatrix::zero(self.rows + other.rows, self.cols);
        out.data[..self.rows * self.cols].clone_from_slice(&self.data);
        out.data[self.rows * self.cols..].clone_from_slice(&other.data);
        out
    }

    /// Block-diagonal sum of two matrices.
    pub fn block_diag(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(r, c) = self.at(r, c).clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                *out.at_mut(self.rows + r, self.cols + c) = other.at(r, c).clone();
            }
        }
        out
    }

    /// Copy a sub-block of `src` into `self` with its top-left corner at
    /// `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, src: &ExactMatrix) {
        assert!(r0 + src.rows <= self.rows && c0 + src.cols <= self.cols);
        for r in 0..src.rows {
            for c in 0..src.cols {
                *self.at_mut(r0 + r, c0 + c) = src.at(r, c).clone();
            }
        }
    }

    /// Extract the sub-block of shape `rows x cols` at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> ExactMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = ExactMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                *out.at_mut(r, c) = self.at(r0 + r, c0 + c).clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the list of pivot columns.
    ///
    /// Pivots are scaled to 1 and cleared above and below, so the result
    /// is the canonical rref; the pivot columns are strictly increasing.
    /// The row rank is `pivots.len()`. Within a column the first row with
    /// the largest absolute numerator ratio is chosen as pivot only in the
    /// sense of "first nonzero" — exact arithmetic needs no pivoting for
    /// stability, only for nonzero-ness.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // find a nonzero entry in this column at or below `row`
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.at(row, col).clone();
            // scale pivot row to make the pivot 1
            for c in col..m.cols {
                let v = m.at(row, c).clone() / &inv;
                *m.at_mut(row, c) = v;
            }
            // clear the column everywhere else
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(row, c).clone() * &f;
                        *m.at_mut(r, c) -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right null space `{x : m x = 0}`.
    ///
    /// Returns one vector per free column of the rref: the free column's
    /// unit entry with the pivot rows back-substituted. An invertible
    /// matrix yields the empty list; a matrix with zero rows yields the
    /// standard basis of its column space.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `m x = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero. Panics if `b.len() != rows`.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "solve: rhs length mismatch");
        let rhs = ExactMatrix::from_columns(self.rows, &[b.to_vec()]);
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref();
        // inconsistent iff some pivot lands in the rhs column
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(i, self.cols).clone();
        }
        Some(x)
    }

    /// Solve `m X = B` column by column; `None` if any column fails.
    pub fn solve_matrix(&self, b: &ExactMatrix) -> Option<ExactMatrix> {
        assert_eq!(b.rows, self.rows, "solve_matrix: rhs row mismatch");
        let mut cols = Vec::with_capacity(b.cols);
        for c in 0..b.cols {
            cols.push(self.solve(&b.column(c))?);
        }
        Some(ExactMatrix::from_columns(self.cols, &cols))
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let inv = self.solve_matrix(&ExactMatrix::identity(self.rows))?;
        if self.mul(&inv) == ExactMatrix::identity(self.rows) {
            Some(inv)
        } else {
            None
        }
    }

    /// Is this square matrix invertible?
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Flatten to a single row-major vector (used as "vec" coordinates).
    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }

    /// Rebuild a matrix from row-major coordinates.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rat>) -> ExactMatrix {
        assert_eq!(data.len(), rows * cols, "from_flat length mismatch");
        ExactMatrix { rows, cols, data }
    }

    /// Maximum absolute value of any entry, for test diagnostics.
    pub fn max_abs(&self) -> Rat {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

/// Rank of the span of a set of vectors (each of length `dim`).
pub fn span_rank(dim: usize, vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(
        vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), dim);
                v.clone()
            })
            .collect(),
    )
    .rank()
}

/// Do two sets of vectors span the same subspace of `Q^dim`?
pub fn same_span(dim: usize, a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    let ra = span_rank(dim, a);
    let rb = span_rank(dim, b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    span_rank(dim, &all) == ra
}

/// Is `v` contained in the span of `basis` (all vectors of length `dim`)?
pub fn in_span(dim: usize, basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    let m = ExactMatrix::from_columns(dim, basis);
    m.solve(v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent rank oracle: fraction-free Bareiss elimination over the
    /// integers. Deliberately shares no code with `rref`; used to pin the
    /// rank of randomly generated matrices.
    fn bareiss_rank(m: &ExactMatrix) -> usize {
        use num_bigint::BigInt;
        // clear denominators row by row
        let mut a: Vec<Vec<BigInt>> = (0..m.rows())
            .map(|r| {
                let mut lcm = BigInt::from(1);
                for c in 0..m.cols() {
                    lcm = num_integer::lcm(lcm, m.at(r, c).denom().clone().max(1.into()));
                }
                (0..m.cols())
                    .map(|c| {
                        let x = m.at(r, c);
                        x.numer() * (&lcm / x.denom())
                    })
                    .collect()
            })
            .collect();
        let rows = a.len();
        let cols = if rows == 0 { 0 } else { a[0].len() };
        let mut rank = 0usize;
        let mut prev = BigInt::from(1);
        let mut row = 0usize;
        for col in 0..cols {
            let Some(p) = (row..rows).find(|&r| a[r][col] != BigInt::from(0)) else {
                continue;
            };
            a.swap(row, p);
            for r in row + 1..rows {
                for c in col + 1..cols {
                    let v = (&a[row][col] * &a[r][c] - &a[r][col] * &a[row][c]) / &prev;
                    a[r][c] = v;
                }
                a[r][col] = BigInt::from(0);
            }
            prev = a[row][col].clone();
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
        rank
    }

    /// Deterministic congruential generator for reproducible "random"
    /// test matrices without pulling in an RNG dependency.
    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self) -> u64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            self.0 >> 33
        }
        fn small(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % ((hi - lo + 1) as u64)) as i64
        }
    }

    fn random_matrix(rng: &mut Lcg, rows: usize, cols: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let n = rng.small(-5, 5);
                let d = rng.small(1, 4);
                m.set(r, c, frac(n, d));
            }
        }
        m
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let (r, p) = ExactMatrix::identity(4).rref();
        assert_eq!(r, ExactMatrix::identity(4));
        assert_eq!(p, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rref_collapses_dependent_rows() {
        let m = ExactMatrix::from_i64(&[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, ExactMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rank_matches_bareiss_oracle_on_fixed_5x7() {
        let mut rng = Lcg(0x5eed);
        for _ in 0..25 {
            let m = random_matrix(&mut rng, 5, 7);
            assert_eq!(m.rank(), bareiss_rank(&m), "disagreement on {m:?}");
        }
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(ExactMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = ExactMatrix::zero(3, 3).kernel_basis();
        assert_eq!(k.len(), 3);
        assert_eq!(span_rank(3, &k), 3);
    }

    #[test]
    fn kernel_respects_known_relation() {
        // x + y = 0, z = 0  =>  kernel spanned by (1, -1, 0)
        let m = ExactMatrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(same_span(3, &k, &[vec![rat(1), rat(-1), rat(0)]]));
    }

    #[test]
    fn kernel_vectors_are_actually_killed() {
        let mut rng = Lcg(0xabc);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4, 6);
            for v in m.kernel_basis() {
                assert!(m.apply(&v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![rat(3), rat(-1), frac(1, 2)];
        assert_eq!(ExactMatrix::identity(3).solve(&b), Some(b));
    }

    #[test]
    fn solve_detects_inconsistency() {
        // rows force x = 1 and x = 2 simultaneously
        let m = ExactMatrix::from_i64(&[&[1, 0], &[1, 0]]);
        assert_eq!(m.solve(&[rat(1), rat(2)]), None);
    }

    #[test]
    fn solve_residual_is_zero_on_consistent_systems() {
        let mut rng = Lcg(0xdef);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4, 6);
            let x0: Vec<Rat> = (0..6).map(|_| frac(rng.small(-3, 3), 1)).collect();
            let b = m.apply(&x0);
            let x = m.solve(&b).expect("consistent by construction");
            assert_eq!(m.apply(&x), b);
        }
    }

    #[test]
    fn empty_shapes_are_usable() {
        let m = ExactMatrix::zero(0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 3);
        let n = ExactMatrix::zero(3, 0);
        assert_eq!(n.rank(), 0);
        assert!(n.kernel_basis().is_empty());
        assert_eq!(n.solve(&[Rat::zero(), Rat::zero(), Rat::zero()]), Some(vec![]));
        // 0x0 products
        let e = ExactMatrix::zero(0, 0);
        assert!(e.mul(&e).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = ExactMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity(2));
        assert_eq!(inv.mul(&m), ExactMatrix::identity(2));
        let s = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..6, r * c).prop_map(move |vals| {
                ExactMatrix::from_flat(r, c, vals.into_iter().map(rat).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity_adds_to_columns(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }
    }
}
