//! Exact integer linear algebra: Hermite and Smith normal forms, integer
//! kernels, and sublattices of `Z^n` kept in canonical Hermite form.
//!
//! Conventions. A matrix acts on column vectors and a lattice is the
//! column span of its basis. The canonical (column-style Hermite) form is
//! an upper echelon form read from the bottom: the pivot of a column is its
//! last nonzero row, pivot rows increase strictly from left to right, every
//! pivot is positive and every entry to the right of a pivot (same row,
//! later columns) lies in `[0, pivot)`. Two matrices span the same lattice
//! iff their canonical forms are equal entry-wise.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.data[i * cols + i] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Convenient in tests.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|row| row.iter().map(|&x| x.into())).collect();
        Self::new(r, c, data)
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension(format!("column length differs from {rows}")));
        }
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// Bottom-up column echelon on `cols`, pivoting only on rows `< top`.
/// Column operations are applied to full columns so that any extra rows
/// record the unimodular transform. Returns `(row, column)` pivot pairs in
/// ascending row order, and the indices of columns that vanish on the top
/// rows.
fn echelon(cols: &mut [Vec<BigInt>], top: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut active: Vec<usize> = (0..cols.len()).collect();
    let mut pivots = Vec::new();
    for row in (0..top).rev() {
        loop {
            let best = active
                .iter()
                .copied()
                .filter(|&c| !cols[c][row].is_zero())
                .min_by(|&a, &b| cols[a][row].abs().cmp(&cols[b][row].abs()));
            let Some(piv) = best else { break };
            let mut done = true;
            for &c in &active {
                if c == piv || cols[c][row].is_zero() {
                    continue;
                }
                let q = &cols[c][row] / &cols[piv][row];
                let (src, dst) = pair_mut(cols, piv, c);
                axpy(dst, &q, src);
                if !dst[row].is_zero() {
                    done = false;
                }
            }
            if done {
                if cols[piv][row].is_negative() {
                    for x in cols[piv].iter_mut() {
                        *x = -&*x;
                    }
                }
                active.retain(|&c| c != piv);
                pivots.push((row, piv));
                break;
            }
        }
    }
    pivots.reverse();
    // Reduce entries right of each pivot, lowest pivot first so that later
    // reductions only touch rows that are already final.
    for i in (0..pivots.len()).rev() {
        let (r, ci) = pivots[i];
        for &(_, cj) in &pivots[i + 1..] {
            let q = cols[cj][r].div_floor(&cols[ci][r]);
            if !q.is_zero() {
                let (src, dst) = pair_mut(cols, ci, cj);
                axpy(dst, &q, src);
            }
        }
    }
    (pivots, active)
}

/// `dst -= q * src`
fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// Column-style Hermite normal form, same shape as `m`: the pivot columns
/// first, then zero columns.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut basis = hnf_basis(m).columns();
    basis.resize(m.cols(), vec![BigInt::zero(); m.rows()]);
    IntMatrix::from_columns(m.rows(), &basis).expect("echelon keeps column length")
}

/// The nonzero columns of the Hermite normal form, one per pivot.
pub fn hnf_basis(m: &IntMatrix) -> IntMatrix {
    let mut cols = m.columns();
    let (pivots, _) = echelon(&mut cols, m.rows());
    let basis: Vec<Vec<BigInt>> = pivots.iter().map(|&(_, c)| cols[c].clone()).collect();
    IntMatrix::from_columns(m.rows(), &basis).expect("echelon keeps column length")
}

/// A `Z`-basis (as columns) of `{x in Z^cols : m x = 0}`.
pub fn kernel(m: &IntMatrix) -> IntMatrix {
    let (r, c) = (m.rows(), m.cols());
    let mut cols: Vec<Vec<BigInt>> = (0..c)
        .map(|j| {
            let mut col = m.column(j);
            col.extend((0..c).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            col
        })
        .collect();
    let (_, zero_cols) = echelon(&mut cols, r);
    let basis: Vec<Vec<BigInt>> = zero_cols.iter().map(|&j| cols[j][r..].to_vec()).collect();
    hnf_basis(&IntMatrix::from_columns(c, &basis).expect("kernel columns"))
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// The diagonal form `S`, same shape as the input.
    pub form: IntMatrix,
    /// `d_1 | d_2 | ... | d_k`, `k = min(rows, cols)`, zeros trailing.
    pub invariant_factors: Vec<BigInt>,
    /// Unimodular `P^{-1}` with `m = P^{-1} S Q^{-1}`. Its columns carry the
    /// Smith coordinates back into the ambient coordinates of the rows.
    pub left_inverse: IntMatrix,
}

/// Smith normal form with the left transform tracked.
pub fn snf(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..r).map(|i| m.row(i)).collect();
    // columns of P^{-1}
    let mut pinv: Vec<Vec<BigInt>> = (0..r)
        .map(|j| (0..r).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    let k = r.min(c);
    for t in 0..k {
        let Some((pi, pj)) = min_entry(&a, t) else { break };
        a.swap(t, pi);
        pinv.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                let (src, dst) = pair_mut(&mut a, t, i);
                axpy(dst, &q, src);
                // row_i -= q row_t  =>  pinv col_t += q pinv col_i
                let (pi_col, pt_col) = pair_mut(&mut pinv, i, t);
                axpy(pt_col, &-&q, pi_col);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut() {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let (pi, pj) = min_entry_cross(&a, t);
                a.swap(t, pi);
                pinv.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    // row_t += row_i  =>  pinv col_i -= pinv col_t
                    let (src, dst) = pair_mut(&mut a, i, t);
                    axpy(dst, &BigInt::from(-1), src);
                    let (pt_col, pi_col) = pair_mut(&mut pinv, t, i);
                    axpy(pi_col, &BigInt::one(), pt_col);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in pinv[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let invariant_factors: Vec<BigInt> = (0..k).map(|i| a[i][i].clone()).collect();
    let form = IntMatrix::diagonal(r, c, &invariant_factors);
    let left_inverse = IntMatrix::from_columns(r, &pinv).expect("square transform");
    SmithForm { form, invariant_factors, left_inverse }
}

fn min_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry on row `t` or column `t` (from `t` on).
fn min_entry_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for (i, row) in a.iter().enumerate().skip(t) {
        if !row[t].is_zero() && (a[best.0][best.1].is_zero() || row[t].abs() < a[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..a[t].len() {
        let x = &a[t][j];
        if !x.is_zero() && x.abs() < a[best.0][best.1].abs() {
            best = (t, j);
        }
    }
    best
}

/// A sublattice of `Z^n` stored by its canonical Hermite basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient: usize,
    basis: IntMatrix,
    /// pivot row of each basis column, ascending
    pivots: Vec<usize>,
}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice(n={}, basis={:?})", self.ambient, self.basis)
    }
}

impl IntegerLattice {
    pub fn from_basis_matrix(m: &IntMatrix) -> Self {
        Self::from_hnf(hnf_basis(m))
    }

    fn from_hnf(basis: IntMatrix) -> Self {
        let pivots = (0..basis.cols())
            .map(|j| (0..basis.rows()).rev().find(|&i| !basis.get(i, j).is_zero()).expect("nonzero column"))
            .collect();
        IntegerLattice { ambient: basis.rows(), basis, pivots }
    }

    pub fn from_generators(ambient: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != ambient) {
            return Err(Error::Dimension(format!(
                "generator of length {} in Z^{ambient}",
                g.len()
            )));
        }
        Ok(Self::from_basis_matrix(&IntMatrix::from_columns(ambient, gens)?))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_hnf(IntMatrix::zeros(ambient, 0))
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_hnf(IntMatrix::identity(ambient))
    }

    /// `k Z^n`
    pub fn scaled(ambient: usize, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(ambient);
        }
        let d = vec![k.abs(); ambient];
        Self::from_hnf(IntMatrix::diagonal(ambient, ambient, &d))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        self.basis.columns()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient && (0..self.ambient).all(|i| self.basis.get(i, i).is_one())
    }

    /// `[Z^n : L]` for a full-rank lattice, `None` otherwise.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.ambient).then(|| (0..self.ambient).map(|i| self.basis.get(i, i).clone()).product())
    }

    /// Canonical representative of `v + L`: every pivot coordinate is
    /// brought into `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.check_len(v.len())?;
        let mut w = v.to_vec();
        for (j, &r) in self.pivots.iter().enumerate().rev() {
            let q = w[r].div_floor(self.basis.get(r, j));
            if !q.is_zero() {
                for i in 0..=r {
                    let delta = &q * self.basis.get(i, j);
                    w[i] -= delta;
                }
            }
        }
        Ok(w)
    }

    /// Back-substitution against the Hermite basis.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        self.check_len(v.len())?;
        let mut w = v.to_vec();
        let mut next = self.pivots.len();
        for row in (0..self.ambient).rev() {
            if next > 0 && self.pivots[next - 1] == row {
                next -= 1;
                let (q, rem) = w[row].div_rem(self.basis.get(row, next));
                if !rem.is_zero() {
                    return Ok(false);
                }
                if !q.is_zero() {
                    for i in 0..=row {
                        let delta = &q * self.basis.get(i, next);
                        w[i] -= delta;
                    }
                }
            } else if !w[row].is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> Result<bool> {
        self.check_len(other.ambient)?;
        for j in 0..other.rank() {
            if !self.contains(&other.basis.column(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        self.check_len(other.ambient)?;
        let mut gens = self.generators();
        gens.extend(other.generators());
        IntegerLattice::from_generators(self.ambient, &gens)
    }

    /// Intersection through the kernel of `[A | -B]`.
    pub fn intersect(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        self.check_len(other.ambient)?;
        let (ra, rb) = (self.rank(), other.rank());
        if ra == 0 || rb == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let mut stacked = self.generators();
        stacked.extend(other.generators().into_iter().map(|c| c.into_iter().map(|x| -x).collect()));
        let k = kernel(&IntMatrix::from_columns(self.ambient, &stacked)?);
        let mut gens = Vec::with_capacity(k.cols());
        for col in k.columns() {
            gens.push(self.basis.mul_vec(&col[..ra])?);
        }
        IntegerLattice::from_generators(self.ambient, &gens)
    }

    /// `(Q L) ∩ Z^n`, computed as the kernel of the left annihilator.
    pub fn saturate(&self) -> IntegerLattice {
        let annihilator = kernel(&self.basis.transpose());
        let sat = kernel(&annihilator.transpose());
        IntegerLattice::from_hnf(sat)
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient {
            return Err(Error::Dimension(format!("length {n} against ambient rank {}", self.ambient)));
        }
        Ok(())
    }
}

pub fn ints<T: Into<BigInt> + Copy>(v: &[T]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}
