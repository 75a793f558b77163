//! Dense integer matrices over arbitrary-precision integers.
//!
//! Everything that turns a chain complex into groups goes through here:
//! Smith normal form with both transformation matrices (and their inverses),
//! lattice kernels, solving `A x = b` over the integers, and the extraction of
//! a quotient `Λ / D` of two lattices as a canonical abelian group with
//! explicit generator lifts.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::abgroups::FgAbGroup;
use crate::error::Error;

/// A `rows x cols` integer matrix stored row-major. Either dimension may be 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Diagonal `rows x cols` matrix with `diag` on the main diagonal.
    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from row-major data. Fails if the length is not `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                context: "IntMatrix::from_vec",
                expected: (rows, cols),
                found: (data.len(), 1),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Convenience constructor from small integers. Every row must have the same
    /// length; an empty slice gives a `0 x 0` matrix.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
    }

    /// A single column.
    pub fn column_vector(entries: &[BigInt]) -> Self {
        IntMatrix {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        (0..self.cols).map(move |j| self.column(j))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                context: "matrix product",
                expected: (self.cols, rhs.cols),
                found: rhs.shape(),
            });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// `[self | other]`. Row counts must agree.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// `[self ; other]`. Column counts must agree.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal matrix of the given blocks.
    pub fn block_diagonal(blocks: &[IntMatrix]) -> IntMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Sub-matrix of the rows `rows` (in order) and all columns.
    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        Self::from_fn(rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> IntMatrix {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn delete_row(&self, r: usize) -> IntMatrix {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        self.select_rows(&keep)
    }

    pub fn delete_col(&self, c: usize) -> IntMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select_cols(&keep)
    }

    /// Sum of the entries of column `j`.
    pub fn column_sum(&self, j: usize) -> BigInt {
        (0..self.rows).map(|i| &self[(i, j)]).sum()
    }

    /// Reduces every entry of row `i` into `[0, m)` when `moduli[i] > 0`.
    pub fn reduce_rows_mod(&mut self, moduli: &[BigInt]) {
        assert_eq!(moduli.len(), self.rows);
        for (i, m) in moduli.iter().enumerate() {
            if m.is_positive() {
                for j in 0..self.cols {
                    let e = &mut self[(i, j)];
                    *e = e.mod_floor(m);
                }
            }
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, Error> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch {
                context: "determinant",
                expected: (self.rows, self.rows),
                found: self.shape(),
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v / &prev;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Rank over the rationals (equivalently, number of nonzero Smith invariants).
    pub fn rank(&self) -> usize {
        snf(self).rank()
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

    /// `row[dst] += k * row[src]`
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += delta;
        }
    }

    /// `col[dst] += k * col[src]`
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let e = &mut self.data[r * self.cols + j];
            *e = -core::mem::take(e);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let e = &mut self.data[i * self.cols + c];
            *e = -core::mem::take(e);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix shapes do not compose")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", e)?;
            }
        }
        write!(f, "]")
    }
}

/// Smith decomposition `A = U * S * V`.
///
/// `u_inv` and `v_inv` are the exact inverses of `u` and `v`; they are tracked
/// alongside because kernels, images and linear solves all need them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// Nonzero invariant factors in order.
    pub fn invariants(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().take_while(|d| !d.is_zero()).collect()
    }

    /// Full diagonal of `S` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().len()
    }
}

struct SnfState {
    w: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    // Every operation keeps `a = u * w * v` together with the two inverses.

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.w.swap_rows(a, b);
        self.u.swap_cols(a, b);
        self.u_inv.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.w.swap_cols(a, b);
        self.v.swap_rows(a, b);
        self.v_inv.swap_cols(a, b);
    }

    /// `row[dst] += k * row[src]` on the working matrix.
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.w.add_row_multiple(dst, src, k);
        self.u.add_col_multiple(src, dst, &-k);
        self.u_inv.add_row_multiple(dst, src, k);
    }

    /// `col[dst] += k * col[src]` on the working matrix.
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.w.add_col_multiple(dst, src, k);
        self.v.add_row_multiple(src, dst, &-k);
        self.v_inv.add_col_multiple(dst, src, k);
    }

    fn negate_row(&mut self, r: usize) {
        self.w.negate_row(r);
        self.u.negate_col(r);
        self.u_inv.negate_row(r);
    }

    /// Position of the nonzero entry of least absolute value in the trailing
    /// block starting at `(t, t)`; ties go to the lowest row, then column.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.w.rows {
            for j in t..self.w.cols {
                let e = &self.w[(i, j)];
                if e.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => e.magnitude() < self.w[b].magnitude(),
                };
                if better {
                    best = Some((i, j));
                    if e.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }
}

/// Smith normal form by alternating row/column elimination around a
/// least-magnitude pivot, with a divisibility repair before each pivot is
/// accepted. Deterministic for a given input.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = a.shape();
    let mut st = SnfState {
        w: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };

    'outer: for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = st.min_pivot(t) else {
                break 'outer;
            };
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);

            let pivot = st.w[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if st.w[(i, t)].is_zero() {
                    continue;
                }
                let q = &st.w[(i, t)] / &pivot;
                st.add_row(i, t, &-q);
                clean &= st.w[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if st.w[(t, j)].is_zero() {
                    continue;
                }
                let q = &st.w[(t, j)] / &pivot;
                st.add_col(j, t, &-q);
                clean &= st.w[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // divisibility repair: pull an offending row into the pivot row
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !st.w[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => st.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if st.w[(t, t)].is_negative() {
            st.negate_row(t);
        }
    }

    SnfResult {
        u: st.u,
        s: st.w,
        v: st.v,
        u_inv: st.u_inv,
        v_inv: st.v_inv,
    }
}

/// Columns form a basis of the integer kernel `{x : a x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    kernel_from_snf(&snf(a))
}

fn kernel_from_snf(d: &SnfResult) -> IntMatrix {
    let r = d.rank();
    let n = d.v_inv.cols();
    let keep: Vec<usize> = (r..n).collect();
    d.v_inv.select_cols(&keep)
}

/// Columns form a basis of the lattice spanned by the columns of `a`.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let d = snf(a);
    let inv = d.invariants();
    let m = a.rows();
    IntMatrix::from_fn(m, inv.len(), |i, j| &d.u[(i, j)] * &inv[j])
}

/// Some integer solution of `a x = b`, or `None` if there is none.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    solve_with(&snf(a), b)
}

fn solve_with(d: &SnfResult, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), d.u_inv.cols(), "right-hand side length mismatch");
    let w = d.u_inv.mul_vec(b);
    let inv = d.invariants();
    if w[inv.len()..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let n = d.v_inv.cols();
    let mut y = vec![BigInt::zero(); n];
    for (i, s) in inv.iter().enumerate() {
        let (q, r) = w[i].div_rem(s);
        if !r.is_zero() {
            return None;
        }
        y[i] = q;
    }
    Some(d.v_inv.mul_vec(&y))
}

/// Coordinates `c` with `basis * c = v`.
///
/// The columns of `basis` must be linearly independent.
pub fn lattice_coordinates(basis: &IntMatrix, v: &[BigInt]) -> Result<Vec<BigInt>, Error> {
    if v.len() != basis.rows() {
        return Err(Error::ShapeMismatch {
            context: "lattice_coordinates",
            expected: (basis.rows(), 1),
            found: (v.len(), 1),
        });
    }
    let d = snf(basis);
    if d.rank() != basis.cols() {
        return Err(Error::DependentBasis);
    }
    solve_with(&d, v).ok_or(Error::NotInLattice)
}

/// True iff `v` lies in the lattice spanned by the columns of `gens`.
pub fn lattice_contains(gens: &IntMatrix, v: &[BigInt]) -> bool {
    solve(gens, v).is_some()
}

/// A finitely generated abelian group realised as a quotient of two lattices
/// in `Z^ambient_dim`, with one lift per canonical generator and a coordinate
/// map from the numerator lattice onto canonical coordinates.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    group: FgAbGroup,
    ambient_dim: usize,
    lifts: Vec<Vec<BigInt>>,
    basis_snf: SnfResult,
    coord_rows: IntMatrix,
    orders: Vec<BigInt>,
}

impl LatticeQuotient {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// One vector in the numerator lattice per canonical generator.
    pub fn lifts(&self) -> &[Vec<BigInt>] {
        &self.lifts
    }

    /// Canonical coordinates of a numerator-lattice vector; torsion coordinates
    /// are reduced into `[0, order)`.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::ShapeMismatch {
                context: "LatticeQuotient::coordinates",
                expected: (self.ambient_dim, 1),
                found: (v.len(), 1),
            });
        }
        let c = solve_with(&self.basis_snf, v).ok_or(Error::NotInLattice)?;
        let mut y = self.coord_rows.mul_vec(&c);
        for (yi, d) in y.iter_mut().zip(&self.orders) {
            if d.is_positive() {
                *yi = yi.mod_floor(d);
            }
        }
        Ok(y)
    }

    /// Vector representing the element with the given canonical coordinates.
    pub fn element(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.lifts.len());
        let mut out = vec![BigInt::zero(); self.ambient_dim];
        for (c, lift) in coords.iter().zip(&self.lifts) {
            if c.is_zero() {
                continue;
            }
            for (o, l) in out.iter_mut().zip(lift) {
                *o += c * l;
            }
        }
        out
    }
}

/// The quotient of the lattice spanned by `numerator` by the lattice spanned by
/// `denominator`, both given as column sets in `Z^ambient_dim`.
pub fn quotient_group(
    ambient_dim: usize,
    numerator: &IntMatrix,
    denominator: &IntMatrix,
) -> Result<LatticeQuotient, Error> {
    if numerator.rows() != ambient_dim || denominator.rows() != ambient_dim {
        return Err(Error::ShapeMismatch {
            context: "quotient_group",
            expected: (ambient_dim, numerator.cols()),
            found: (numerator.rows(), denominator.rows()),
        });
    }
    let mut basis_snf = snf(numerator);
    let basis = if basis_snf.rank() == numerator.cols() {
        numerator.clone()
    } else {
        let b = image_basis(numerator);
        basis_snf = snf(&b);
        b
    };
    let r = basis.cols();

    let mut rel_cols = Vec::with_capacity(denominator.cols());
    for col in denominator.columns() {
        rel_cols.push(solve_with(&basis_snf, &col).ok_or(Error::ContainmentViolation)?);
    }
    let relations = IntMatrix::from_columns(r, &rel_cols);
    let rd = snf(&relations);
    let inv = rd.invariants();
    let rank_rel = inv.len();

    // free generators first, then torsion in divisibility order
    let mut picked: Vec<(usize, BigInt)> = (rank_rel..r).map(|i| (i, BigInt::zero())).collect();
    picked.extend(
        inv.iter()
            .enumerate()
            .filter(|(_, s)| !s.is_one())
            .map(|(i, s)| (i, s.clone())),
    );

    let lift_basis = &basis * &rd.u;
    let lifts = picked.iter().map(|(i, _)| lift_basis.column(*i)).collect();
    let rows: Vec<usize> = picked.iter().map(|(i, _)| *i).collect();
    let coord_rows = rd.u_inv.select_rows(&rows);
    let orders: Vec<BigInt> = picked.into_iter().map(|(_, d)| d).collect();
    let group = FgAbGroup::from_canonical_parts(
        r - rank_rel,
        inv.into_iter().filter(|s| !s.is_one()).collect(),
    );

    Ok(LatticeQuotient {
        group,
        ambient_dim,
        lifts,
        basis_snf,
        coord_rows,
        orders,
    })
}

/// Lattice `{x in Z^m : out_map x ≡ 0 (mod d)}` where `out_map` is `k x m`.
pub(crate) fn mod_d_cycles(out_map: &IntMatrix, d: &BigInt) -> IntMatrix {
    let (k, m) = out_map.shape();
    let block = out_map.hstack(&IntMatrix::identity(k).scale(d));
    let ker = kernel_basis(&block);
    let first: Vec<usize> = (0..m).collect();
    ker.select_rows(&first)
}

/// `ker(out_map mod d) / im(in_map mod d)` inside `(Z/d)^m`, lifted to `Z^m`.
pub fn mod_d_quotient(
    out_map: &IntMatrix,
    in_map: &IntMatrix,
    d: &BigInt,
) -> Result<LatticeQuotient, Error> {
    if *d < BigInt::from(2) {
        return Err(Error::InvalidParameter("modulus must be at least 2"));
    }
    let m = out_map.cols();
    if in_map.rows() != m {
        return Err(Error::ShapeMismatch {
            context: "mod_d_quotient",
            expected: (m, in_map.cols()),
            found: in_map.shape(),
        });
    }
    let composite = out_map * in_map;
    if composite.entries().iter().any(|e| !e.is_multiple_of(d)) {
        return Err(Error::ChainConditionViolation);
    }
    let cycles = mod_d_cycles(out_map, d);
    let boundaries = in_map.hstack(&IntMatrix::identity(m).scale(d));
    quotient_group(m, &cycles, &boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(a: &IntMatrix) -> SnfResult {
        let d = snf(a);
        assert_eq!(&(&d.u * &d.s) * &d.v, *a);
        assert_eq!(&d.u * &d.u_inv, IntMatrix::identity(a.rows()));
        assert_eq!(&d.v * &d.v_inv, IntMatrix::identity(a.cols()));
        d
    }

    #[test]
    fn snf_of_zero_is_trivial() {
        let d = check_snf(&IntMatrix::from_i64_rows(&[&[0]]));
        assert_eq!(d.s, IntMatrix::from_i64_rows(&[&[0]]));
        assert_eq!(d.u, IntMatrix::identity(1));
        assert_eq!(d.v, IntMatrix::identity(1));
    }

    #[test]
    fn snf_two_by_two() {
        let d = check_snf(&IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]));
        assert_eq!(d.diagonal(), ints(&[2, 4]));
    }

    #[test]
    fn snf_already_reduced() {
        let d = check_snf(&IntMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(d.diagonal(), ints(&[1, 1]));
    }

    #[test]
    fn snf_needs_divisibility_repair() {
        // diag(2, 3) is not in Smith form; the invariants are 1 and 6
        let d = check_snf(&IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(d.diagonal(), ints(&[1, 6]));
    }

    #[test]
    fn snf_handles_empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let d = check_snf(&IntMatrix::zeros(r, c));
            assert!(d.invariants().is_empty());
        }
    }

    #[test]
    fn determinant_small() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]);
        assert_eq!(a.determinant().unwrap(), BigInt::from(-8));
        let b = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(b.determinant().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::zeros(1, 2)), IntMatrix::identity(2));

        let k = kernel_basis(&IntMatrix::from_i64_rows(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        let c = k.column(0);
        assert!(c == ints(&[1, -1]) || c == ints(&[-1, 1]));

        let a = IntMatrix::from_i64_rows(&[&[2, 4]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!((&a * &k).is_zero());
        // the kernel lattice is generated by (2, -1): that vector has coordinate ±1
        let c = lattice_coordinates(&k, &ints(&[2, -1])).unwrap();
        assert_eq!(c[0].magnitude(), &num_bigint::BigUint::one());
    }

    #[test]
    fn coordinates_examples() {
        let id = IntMatrix::identity(2);
        assert_eq!(lattice_coordinates(&id, &ints(&[3, -1])).unwrap(), ints(&[3, -1]));
        let b = IntMatrix::from_i64_rows(&[&[2], &[2]]);
        assert_eq!(lattice_coordinates(&b, &ints(&[4, 4])).unwrap(), ints(&[2]));
        assert_eq!(lattice_coordinates(&b, &ints(&[1, 1])), Err(Error::NotInLattice));
        let dep = IntMatrix::from_i64_rows(&[&[1, 2]]);
        assert_eq!(lattice_coordinates(&dep, &ints(&[1])), Err(Error::DependentBasis));
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_group(
            2,
            &IntMatrix::identity(2),
            &IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]),
        )
        .unwrap();
        assert_eq!(q.group(), &FgAbGroup::cyclic(6u32));

        let q = quotient_group(1, &IntMatrix::identity(1), &IntMatrix::zeros(1, 0)).unwrap();
        assert_eq!(q.group(), &FgAbGroup::free(1));

        let num = IntMatrix::from_i64_rows(&[&[1], &[1]]);
        let den = IntMatrix::from_i64_rows(&[&[2], &[2]]);
        let q = quotient_group(2, &num, &den).unwrap();
        assert_eq!(q.group(), &FgAbGroup::cyclic(2u32));
        assert_eq!(q.coordinates(&ints(&[3, 3])).unwrap(), ints(&[1]));

        let bad = IntMatrix::from_i64_rows(&[&[1], &[0]]);
        assert!(matches!(
            quotient_group(2, &num, &bad),
            Err(Error::ContainmentViolation)
        ));
    }

    #[test]
    fn quotient_lifts_round_trip() {
        let num = IntMatrix::from_i64_rows(&[&[1, 0, 2], &[0, 1, 1], &[1, 1, 0]]);
        let den = IntMatrix::from_i64_rows(&[&[2], &[1], &[3]]);
        let q = quotient_group(3, &num, &den).unwrap();
        for (i, lift) in q.lifts().iter().enumerate() {
            let c = q.coordinates(lift).unwrap();
            let mut e = vec![BigInt::zero(); q.lifts().len()];
            e[i] = BigInt::one();
            assert_eq!(c, e);
        }
    }

    #[test]
    fn mod_d_examples() {
        let four = BigInt::from(4);
        let q = mod_d_quotient(
            &IntMatrix::from_i64_rows(&[&[0]]),
            &IntMatrix::from_i64_rows(&[&[2]]),
            &four,
        )
        .unwrap();
        assert_eq!(q.group(), &FgAbGroup::cyclic(2u32));

        let q = mod_d_quotient(
            &IntMatrix::from_i64_rows(&[&[0]]),
            &IntMatrix::zeros(1, 0),
            &BigInt::from(5),
        )
        .unwrap();
        assert_eq!(q.group(), &FgAbGroup::cyclic(5u32));

        let q = mod_d_quotient(
            &IntMatrix::from_i64_rows(&[&[2]]),
            &IntMatrix::from_i64_rows(&[&[0]]),
            &four,
        )
        .unwrap();
        assert_eq!(q.group(), &FgAbGroup::cyclic(2u32));

        let err = mod_d_quotient(
            &IntMatrix::from_i64_rows(&[&[1]]),
            &IntMatrix::from_i64_rows(&[&[1]]),
            &four,
        );
        assert!(matches!(err, Err(Error::ChainConditionViolation)));
    }

    #[test]
    fn mod_d_of_zero_maps_is_full() {
        let d = BigInt::from(6);
        let q = mod_d_quotient(&IntMatrix::zeros(2, 3), &IntMatrix::zeros(3, 1), &d).unwrap();
        assert_eq!(q.group(), &FgAbGroup::from_canonical_parts(0, ints(&[6, 6, 6])));
    }
}
