//! Dense exact linear algebra over a [`FieldElement`] field.

use std::fmt;

use crate::field::{DenominatorLog, FieldElement, FieldKind};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    kind: FieldKind,
    data: Vec<FieldElement>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, kind: FieldKind) -> Self {
        Matrix {
            rows,
            cols,
            kind,
            data: vec![FieldElement::zero(kind); rows * cols],
        }
    }

    pub fn identity(n: usize, kind: FieldKind) -> Self {
        Self::scalar(n, FieldElement::one(kind))
    }

    /// `s * id`
    pub fn scalar(n: usize, s: FieldElement) -> Self {
        let kind = s.kind();
        let mut m = Self::zeros(n, n, kind);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    /// Build from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<FieldElement>>, cols: usize, kind: FieldKind) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row.into_iter().map(|x| x.in_kind(kind).unwrap_or(x)));
        }
        Matrix {
            rows: n,
            cols,
            kind,
            data,
        }
    }

    pub fn from_ints(rows: &[&[i64]], kind: FieldKind) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldElement::from_int(kind, x)).collect())
                .collect(),
            cols,
            kind,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    /// `Some(s)` when the matrix is square and equals `s * id`.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        if self.rows != self.cols {
            return None;
        }
        let s = if self.rows == 0 {
            FieldElement::zero(self.kind)
        } else {
            self[(0, 0)].clone()
        };
        for r in 0..self.rows {
            for c in 0..self.cols {
                let expect_diag = r == c;
                let x = &self[(r, c)];
                if (expect_diag && *x != s) || (!expect_diag && !x.is_zero()) {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            kind: self.kind.join(other.kind),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            kind: self.kind.join(other.kind),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &FieldElement) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            kind: self.kind.join(s.kind()),
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let kind = self.kind.join(other.kind);
        let mut out = Matrix::zeros(self.rows, other.cols, kind);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| dot(self.row(r), v, self.kind))
            .collect()
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.kind);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form by Gaussian elimination, first nonzero
    /// entry in each column as pivot.
    pub fn rref(&self) -> Rref {
        self.rref_logged(&mut DenominatorLog::new())
    }

    /// As [`Matrix::rref`], recording every inverted pivot in `log`.
    pub fn rref_logged(&self, log: &mut DenominatorLog) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let pivot = m[(row, col)].clone();
            if !pivot.is_one() {
                log.record_inverse(&pivot);
                let inv = pivot.inv().expect("nonzero pivot");
                for c in col..m.cols {
                    let x = &m[(row, c)];
                    if !x.is_zero() {
                        m[(row, c)] = x * &inv;
                    }
                }
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let x = &m[(row, c)];
                    if !x.is_zero() {
                        let t = &factor * x;
                        m[(r, c)] -= &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column, in RREF.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let r = self.rref();
        kernel_from_rref(&r, self.cols, self.kind)
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.kind);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = FieldElement::one(self.kind);
        }
        let red = aug.rref();
        if red.pivots.iter().take(n).copied().ne(0..n) || red.rank < n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n, self.kind);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red.matrix[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Serialized as a list of rows.
impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;

    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[FieldElement], b: &[FieldElement], kind: FieldKind) -> FieldElement {
    let mut acc = FieldElement::zero(kind);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

fn kernel_from_rref(r: &Rref, cols: usize, kind: FieldKind) -> Vec<Vec<FieldElement>> {
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![FieldElement::zero(kind); cols];
        v[free] = FieldElement::one(kind);
        for (row, &p) in r.pivots.iter().enumerate() {
            v[p] = -&r.matrix[(row, free)];
        }
        basis.push(v);
    }
    // canonical form: RREF of the kernel rows
    canonical_rows(basis, cols, kind)
}

fn canonical_rows(rows: Vec<Vec<FieldElement>>, cols: usize, kind: FieldKind) -> Vec<Vec<FieldElement>> {
    if rows.is_empty() {
        return rows;
    }
    let red = Matrix::from_rows(rows, cols, kind).rref();
    (0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Flat {
    origin: Vec<FieldElement>,
    /// RREF rows; `pivots[i]` is the pivot column of `basis[i]`.
    basis: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

/// An affine subspace `origin + span(basis)`, or the empty set.
///
/// Stored canonically: the basis is in reduced row echelon form and the
/// origin is zero in every basis pivot column, so equal spaces compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    ambient_dim: usize,
    kind: FieldKind,
    flat: Option<Flat>,
}

impl AffineSpace {
    pub fn full(ambient_dim: usize, kind: FieldKind) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![FieldElement::zero(kind); ambient_dim];
                v[i] = FieldElement::one(kind);
                v
            })
            .collect();
        AffineSpace {
            ambient_dim,
            kind,
            flat: Some(Flat {
                origin: vec![FieldElement::zero(kind); ambient_dim],
                basis,
                pivots: (0..ambient_dim).collect(),
            }),
        }
    }

    pub fn empty(ambient_dim: usize, kind: FieldKind) -> Self {
        AffineSpace {
            ambient_dim,
            kind,
            flat: None,
        }
    }

    pub fn point(p: Vec<FieldElement>, kind: FieldKind) -> Self {
        Self::from_parts(p, Vec::new(), kind)
    }

    /// `origin + span(directions)`; the directions may be dependent.
    pub fn from_parts(origin: Vec<FieldElement>, directions: Vec<Vec<FieldElement>>, kind: FieldKind) -> Self {
        let n = origin.len();
        let mut space = AffineSpace {
            ambient_dim: n,
            kind,
            flat: Some(Flat {
                origin,
                basis: canonical_rows(directions, n, kind),
                pivots: Vec::new(),
            }),
        };
        space.canonicalize();
        space
    }

    fn canonicalize(&mut self) {
        let Some(flat) = self.flat.as_mut() else {
            return;
        };
        flat.pivots = flat
            .basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
            .collect();
        for (row, &p) in flat.basis.iter().zip(&flat.pivots) {
            let c = flat.origin[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in flat.origin.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o -= &(&c * x);
                }
            }
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_none()
    }

    /// Dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.flat.as_ref().map(|f| f.basis.len())
    }

    pub fn origin(&self) -> Option<&[FieldElement]> {
        self.flat.as_ref().map(|f| f.origin.as_slice())
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        self.flat.as_ref().map_or(&[], |f| f.basis.as_slice())
    }

    /// `origin + sum_t coeffs[t] * basis[t]`.
    pub fn sample(&self, coeffs: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let flat = self.flat.as_ref()?;
        assert_eq!(coeffs.len(), flat.basis.len());
        let mut p = flat.origin.clone();
        for (c, row) in coeffs.iter().zip(&flat.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in p.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x += &(c * b);
                }
            }
        }
        Some(p)
    }

    /// Whether `p` lies in the space.
    pub fn contains(&self, p: &[FieldElement]) -> bool {
        let Some(flat) = self.flat.as_ref() else {
            return false;
        };
        if p.len() != self.ambient_dim {
            return false;
        }
        // coordinates are read off at the pivots
        let coeffs: Vec<FieldElement> = flat.pivots.iter().map(|&c| p[c].clone()).collect();
        self.sample(&coeffs).as_deref() == Some(p)
    }

    /// Whether every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &AffineSpace) -> bool {
        let Some(flat) = self.flat.as_ref() else {
            return true;
        };
        if !other.contains(&flat.origin) {
            return false;
        }
        flat.basis.iter().all(|b| {
            let moved: Vec<FieldElement> = flat.origin.iter().zip(b).map(|(o, x)| o + x).collect();
            other.contains(&moved)
        })
    }

    /// Intersect with `{x : a x = b}`.
    pub fn intersect(&self, a: &Matrix, b: &[FieldElement]) -> AffineSpace {
        self.intersect_logged(a, b, &mut DenominatorLog::new())
    }

    pub fn intersect_logged(&self, a: &Matrix, b: &[FieldElement], log: &mut DenominatorLog) -> AffineSpace {
        assert_eq!(a.cols(), self.ambient_dim, "constraint width mismatch");
        assert_eq!(a.rows(), b.len(), "constraint height mismatch");
        let Some(flat) = self.flat.as_ref() else {
            return self.clone();
        };
        if a.rows() == 0 {
            return self.clone();
        }
        let kind = self.kind.join(a.kind());
        let d = flat.basis.len();
        // a (o + B^T p) = b  <=>  (a B^T) p = b - a o
        let mut reduced = Matrix::zeros(a.rows(), d, kind);
        let mut rhs = Vec::with_capacity(a.rows());
        for r in 0..a.rows() {
            let row = a.row(r);
            for (t, dir) in flat.basis.iter().enumerate() {
                reduced[(r, t)] = dot(row, dir, kind);
            }
            rhs.push(&b[r] - &dot(row, &flat.origin, kind));
        }
        let sub = solve_affine_logged(&reduced, &rhs, log);
        let Some(sub_flat) = sub.flat else {
            return AffineSpace::empty(self.ambient_dim, kind);
        };
        let expand = |coeffs: &[FieldElement], with_origin: bool| {
            let mut v = if with_origin {
                flat.origin.clone()
            } else {
                vec![FieldElement::zero(kind); self.ambient_dim]
            };
            for (c, dir) in coeffs.iter().zip(&flat.basis) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(dir) {
                    if !y.is_zero() {
                        *x += &(c * y);
                    }
                }
            }
            v
        };
        let origin = expand(&sub_flat.origin, true);
        let dirs = sub_flat.basis.iter().map(|k| expand(k, false)).collect();
        AffineSpace::from_parts(origin, dirs, kind)
    }
}

/// All solutions of `a x = b`.
pub fn solve_affine(a: &Matrix, b: &[FieldElement]) -> AffineSpace {
    solve_affine_logged(a, b, &mut DenominatorLog::new())
}

pub fn solve_affine_logged(a: &Matrix, b: &[FieldElement], log: &mut DenominatorLog) -> AffineSpace {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let kind = b.iter().fold(a.kind(), |k, x| k.join(x.kind()));
    let mut aug = Matrix::zeros(a.rows(), n + 1, kind);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let red = aug.rref_logged(log);
    if red.pivots.last() == Some(&n) {
        return AffineSpace::empty(n, kind);
    }
    let mut origin = vec![FieldElement::zero(kind); n];
    for (row, &p) in red.pivots.iter().enumerate() {
        origin[p] = red.matrix[(row, n)].clone();
    }
    let coeff_part = Rref {
        matrix: red.matrix.clone(),
        rank: red.rank,
        pivots: red.pivots.clone(),
    };
    let basis = kernel_from_rref(&coeff_part, n, kind);
    AffineSpace::from_parts(origin, basis, kind)
}
