//! Dense exact matrices and Gaussian elimination over an arbitrary field.
//!
//! Matrix entries only need to be ring elements for products and equality;
//! rank, solving, nullspaces and inverses additionally need division. Ring
//! elements carry their own context (a cyclotomic number knows its field),
//! so zero and one are derived from an existing element rather than from a
//! free-standing constructor.

/// A commutative ring element that can produce the zero and one of its ring.
pub trait RingElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// A field element; `inv_ref` panics on zero (callers check first).
pub trait FieldElem: RingElem {
    fn inv_ref(&self) -> Self;
}

/// Dense row-major matrix. The convention throughout the crate is that a
/// matrix of an operator has columns indexed by source basis vectors:
/// `T e_j = Σ_i M[(i, j)] e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: RingElem> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        let zero = proto.zero_like();
        Mat {
            rows,
            cols,
            data: vec![zero; rows * cols],
        }
    }

    pub fn identity(n: usize, proto: &T) -> Self {
        let mut m = Self::zeros(n, n, proto);
        let one = proto.one_like();
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
    }

    /// Build a matrix whose j-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<T>], proto: &T) -> Self {
        let nrows = cols.first().map_or(0, Vec::len);
        Mat::from_fn(nrows, cols.len(), |i, j| {
            debug_assert_eq!(cols[j].len(), nrows);
            cols[j][i].clone()
        })
        .or_empty(proto)
    }

    fn or_empty(self, _proto: &T) -> Self {
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        if self.rows * rhs.cols == 0 {
            return Mat {
                rows: self.rows,
                cols: rhs.cols,
                data: Vec::new(),
            };
        }
        let proto = self
            .data
            .first()
            .or_else(|| rhs.data.first())
            .expect("an inner dimension of zero leaves no prototype element");
        let mut out = Mat::zeros(self.rows, rhs.cols, proto);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul_ref(b);
                    out[(i, j)] = out[(i, j)].add_ref(&prod);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].add_ref(&rhs[(i, j)])
        })
    }

    pub fn sub(&self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].sub_ref(&rhs[(i, j)])
        })
    }

    pub fn scale(&self, c: &T) -> Mat<T> {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].mul_ref(c))
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        if self.rows == 0 {
            return Vec::new();
        }
        let proto = self.data.first().unwrap_or(&v[0]);
        let mut out = vec![proto.zero_like(); self.rows];
        for j in 0..self.cols {
            if v[j].is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                out[i] = out[i].add_ref(&a.mul_ref(&v[j]));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Mat<T> {
        assert!(self.is_square());
        let proto = self.data.first().expect("pow of empty matrix");
        let mut acc = Mat::identity(self.rows, proto);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero_mat(&self) -> bool {
        self.data.iter().all(RingElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        self.data.iter().enumerate().all(|(idx, v)| {
            let (i, j) = (idx / self.cols, idx % self.cols);
            if i == j {
                v == &v.one_like()
            } else {
                v.is_zero()
            }
        })
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-reduce `m` in place to reduced row echelon form, eliminating columns
/// in the order given by `col_order` (a permutation of a subset of columns;
/// columns not listed are never used as pivots). Returns the pivot columns
/// in elimination order.
pub fn rref_in<T: FieldElem>(m: &mut Mat<T>, col_order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for &col in col_order {
        if row >= m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..m.cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(row, j)].clone();
                m[(row, j)] = tmp;
            }
        }
        let inv = m[(row, col)].inv_ref();
        for j in 0..m.cols {
            m[(row, j)] = m[(row, j)].mul_ref(&inv);
        }
        for i in 0..m.rows {
            if i == row || m[(i, col)].is_zero() {
                continue;
            }
            let f = m[(i, col)].clone();
            for j in 0..m.cols {
                let t = m[(row, j)].mul_ref(&f);
                m[(i, j)] = m[(i, j)].sub_ref(&t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<T: FieldElem>(m: &Mat<T>) -> usize {
    let mut work = m.clone();
    let order: Vec<usize> = (0..m.cols).collect();
    rref_in(&mut work, &order).len()
}

/// Solve `A x = b` for each column b of `rhs`. Returns `None` if any system
/// is inconsistent; free variables are set to zero.
pub fn solve<T: FieldElem>(a: &Mat<T>, rhs: &Mat<T>) -> Option<Mat<T>> {
    assert_eq!(a.rows, rhs.rows);
    let proto = a.data.first().or_else(|| rhs.data.first())?;
    let mut aug = Mat::zeros(a.rows, a.cols + rhs.cols, proto);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..rhs.cols {
            aug[(i, a.cols + j)] = rhs[(i, j)].clone();
        }
    }
    let order: Vec<usize> = (0..a.cols).collect();
    let pivots = rref_in(&mut aug, &order);
    // consistency: no pivot may appear in the rhs block
    for i in pivots.len()..a.rows {
        for j in 0..rhs.cols {
            if !aug[(i, a.cols + j)].is_zero() {
                return None;
            }
        }
    }
    let mut x = Mat::zeros(a.cols, rhs.cols, proto);
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..rhs.cols {
            x[(pc, j)] = aug[(r, a.cols + j)].clone();
        }
    }
    Some(x)
}

/// Nullspace basis of `m`, eliminating columns in the order `col_order`
/// (defaults to left-to-right when `None`). One basis vector per free
/// column, normalized with a 1 in the free coordinate; deterministic.
pub fn nullspace_ordered<T: FieldElem>(m: &Mat<T>, col_order: Option<&[usize]>) -> Vec<Vec<T>> {
    let proto = match m.data.first() {
        Some(p) => p.clone(),
        None => return Vec::new(),
    };
    let default_order: Vec<usize> = (0..m.cols).collect();
    let order = col_order.unwrap_or(&default_order);
    assert_eq!(
        order.len(),
        m.cols,
        "column order must be a full permutation"
    );
    let mut work = m.clone();
    let pivots = rref_in(&mut work, order);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = order
        .iter()
        .copied()
        .filter(|c| !pivot_set.contains(c))
        .collect();
    let one = proto.one_like();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![proto.zero_like(); m.cols];
        v[fc] = one.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = work[(r, fc)].neg_ref();
        }
        basis.push(v);
    }
    basis
}

pub fn nullspace<T: FieldElem>(m: &Mat<T>) -> Vec<Vec<T>> {
    nullspace_ordered(m, None)
}

/// Exact inverse of a square matrix; `None` when singular.
pub fn inverse<T: FieldElem>(m: &Mat<T>) -> Option<Mat<T>> {
    assert!(m.is_square());
    let proto = m.data.first()?;
    let id = Mat::identity(m.rows, proto);
    let x = solve(m, &id)?;
    // a consistent solve of full column rank is a two-sided inverse
    if m.mul(&x).is_identity() {
        Some(x)
    } else {
        None
    }
}

/// Express each column of `vecs` in the span of `basis` (columns).
/// Panics if any vector fails to lie in the span: callers use this when the
/// containment is a structural invariant.
pub fn coords_in_span<T: FieldElem>(basis: &Mat<T>, vecs: &Mat<T>, what: &str) -> Mat<T> {
    match solve(basis, vecs) {
        Some(x) => {
            let recomposed = basis.mul(&x);
            assert!(
                recomposed == *vecs,
                "certified solve failed: {what} not in span"
            );
            x
        }
        None => panic!("certified solve failed: {what} not in span"),
    }
}
