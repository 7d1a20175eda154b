//! Exact rational linear algebra.
//!
//! Everything downstream (kernels, images, quotients, subalgebras) is phrased
//! in terms of [`RatMatrix`] and [`Subspace`]. Subspaces are always stored in
//! canonical reduced row echelon form, so equality of subspaces is plain
//! structural equality.

use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational with normalized sign and lowest terms.
pub type Rational = num::BigRational;

/// A coordinate vector over the rationals.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or an integer literal.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Renders as `"p/q"`, or just `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += scale * b;
        }
    }
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Row-major tensor product of coordinate vectors.
pub fn kron_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries".into(),
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from explicit rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row".into(),
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Self::from_rows(rows, columns)?.transpose())
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols, "from_i64 shape");
        Self {
            rows,
            cols,
            entries: values.iter().map(|&v| rat(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product".into(),
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product".into(),
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix sum".into(),
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: add_vectors(&self.entries, &other.entries),
        })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "vertical stack".into(),
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Block diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product, row-major on both factors.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Image (column space) as a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning_rows(self.rows, &self.transpose())
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Canonical reduced row echelon form (pivots scaled to one, pivot columns
/// cleared above and below).
pub fn rref(m: &RatMatrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                a.entries.swap(p * cols + k, r * cols + k);
            }
        }
        let inv = a.get(r, c).recip();
        for k in c..cols {
            let v = &a.entries[r * cols + k] * &inv;
            a.entries[r * cols + k] = v;
        }
        let pivot_row: Vector = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for (k, p) in pivot_row.iter().enumerate().skip(c) {
                if !p.is_zero() {
                    let v = &a.entries[i * cols + k] - &f * p;
                    a.entries[i * cols + k] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    Rref {
        matrix: a,
        pivots,
        rank,
    }
}

/// Null space `{x : m x = 0}` as a subspace of `Q^cols`.
pub fn kernel_basis(m: &RatMatrix) -> Subspace {
    let red = rref(m);
    let cols = m.cols;
    let free: Vec<usize> = (0..cols).filter(|c| !red.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = zero_vector(cols);
        v[f] = Rational::one();
        for (row, &p) in red.pivots.iter().enumerate() {
            v[p] = -red.matrix.get(row, f).clone();
        }
        basis.push(v);
    }
    Subspace::span(cols, &basis).expect("kernel vectors have ambient length")
}

/// Canonical solution of `m x = y` with every free variable set to zero, or
/// `None` when `y` is outside the image.
pub fn preimage(m: &RatMatrix, y: &[Rational]) -> Option<Vector> {
    if y.len() != m.rows {
        return None;
    }
    let mut aug = RatMatrix::zeros(m.rows, m.cols + 1);
    for (r, yr) in y.iter().enumerate() {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, m.cols, yr.clone());
    }
    let red = rref(&aug);
    if red.pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = zero_vector(m.cols);
    for (row, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix.get(row, m.cols).clone();
    }
    Some(x)
}

/// A linear subspace of `Q^ambient_dim`, stored as its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RatMatrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in Q^{}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RatMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RatMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = RatMatrix::from_rows(ambient_dim, vectors)?;
        Ok(Self::from_spanning_rows(ambient_dim, &m))
    }

    /// Row space of `m`.
    pub fn from_spanning_rows(ambient_dim: usize, m: &RatMatrix) -> Self {
        debug_assert_eq!(m.cols, ambient_dim);
        let red = rref(m);
        let basis = RatMatrix {
            rows: red.rank,
            cols: ambient_dim,
            entries: red.matrix.entries[..red.rank * ambient_dim].to_vec(),
        };
        Self {
            ambient_dim,
            basis,
            pivots: red.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: usize, context: &str) -> Result<()> {
        if self.ambient_dim != other {
            return Err(Error::DimensionMismatch {
                context: context.into(),
                expected: self.ambient_dim,
                found: other,
            });
        }
        Ok(())
    }

    /// Residue of `v` after clearing the pivot coordinates with basis rows.
    /// Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let f = out[p].clone();
            if !f.is_zero() {
                add_scaled(&mut out, &-f, self.basis.row(row));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check_ambient(v.len(), "subspace membership")?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim, "subspace containment")?;
        Ok((0..other.dim()).all(|r| is_zero_vector(&self.reduce(other.basis.row(r)))))
    }

    /// First basis vector of `other` that is not contained in `self`.
    pub fn containment_witness(&self, other: &Subspace) -> Option<Vector> {
        (0..other.dim())
            .map(|r| other.basis.row(r))
            .find(|row| !is_zero_vector(&self.reduce(row)))
            .map(<[Rational]>::to_vec)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim, "subspace sum")?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Self::from_spanning_rows(self.ambient_dim, &stacked))
    }

    /// Intersection by the Zassenhaus algorithm: row reduce `[[A, A], [B, 0]]`;
    /// rows whose left half vanishes carry a basis of `A ∩ B` on the right.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim, "subspace intersection")?;
        let n = self.ambient_dim;
        let mut z = RatMatrix::zeros(self.dim() + other.dim(), 2 * n);
        for r in 0..self.dim() {
            for c in 0..n {
                let v = self.basis.get(r, c).clone();
                z.set(r, c, v.clone());
                z.set(r, n + c, v);
            }
        }
        for r in 0..other.dim() {
            for c in 0..n {
                z.set(self.dim() + r, c, other.basis.get(r, c).clone());
            }
        }
        let red = rref(&z);
        let rows: Vec<Vector> = (0..red.rank)
            .filter(|&r| red.pivots[r] >= n)
            .map(|r| red.matrix.row(r)[n..].to_vec())
            .collect();
        Subspace::span(n, &rows)
    }

    /// Image of this subspace under the linear map `m`.
    pub fn map(&self, m: &RatMatrix) -> Result<Subspace> {
        self.check_ambient(m.cols, "subspace image")?;
        let images = m.mul(&self.basis.transpose())?.transpose();
        Ok(Self::from_spanning_rows(m.rows, &images))
    }

    /// Quotient `Q^ambient / self` with a projection and a section.
    pub fn quotient(&self) -> Quotient {
        quotient_by(self)
    }
}

/// Linear data of a quotient space `Q^n / W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// `(n - dim W) x n`, full row rank, kernel exactly `W`.
    pub proj: RatMatrix,
    /// `n x (n - dim W)`, with `proj * section = I`.
    pub section: RatMatrix,
    pub dim: usize,
}

/// Quotient of `Q^ambient_dim` by `w`. The complement is spanned by the
/// standard vectors at the non-pivot columns of `w`.
pub fn quotient(ambient_dim: usize, w: &Subspace) -> Result<Quotient> {
    w.check_ambient(ambient_dim, "quotient")?;
    Ok(quotient_by(w))
}

fn quotient_by(w: &Subspace) -> Quotient {
    let n = w.ambient_dim;
    let free: Vec<usize> = (0..n).filter(|c| !w.pivots.contains(c)).collect();
    let q = free.len();
    let mut proj = RatMatrix::zeros(q, n);
    let mut section = RatMatrix::zeros(n, q);
    for (k, &c) in free.iter().enumerate() {
        proj.set(k, c, Rational::one());
        section.set(c, k, Rational::one());
        for (row, &p) in w.pivots.iter().enumerate() {
            let coeff = w.basis.get(row, c);
            if !coeff.is_zero() {
                proj.set(k, p, -coeff.clone());
            }
        }
    }
    Quotient {
        proj,
        section,
        dim: q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, v: &[i64]) -> RatMatrix {
        RatMatrix::from_i64(rows, cols, v)
    }

    fn vi(v: &[i64]) -> Vector {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = RatMatrix::identity(2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = RatMatrix::zeros(3, 3);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let r = rref(&m(2, 2, &[1, 2, 2, 4]));
        assert_eq!(r.matrix, m(2, 2, &[1, 2, 0, 0]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_scales_pivots() {
        let r = rref(&m(2, 3, &[0, 2, 4, 3, 0, 3]));
        assert_eq!(r.matrix, m(2, 3, &[1, 0, 1, 0, 1, 2]));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_zero());
        assert!(kernel_basis(&RatMatrix::zeros(2, 3)).is_full());
        let k = kernel_basis(&m(1, 2, &[1, 2]));
        assert_eq!(k.dim(), 1);
        // RREF of span{(-2, 1)} is (1, -1/2).
        assert_eq!(k.basis().row(0), &[rat(1), ratio(-1, 2)][..]);
    }

    #[test]
    fn preimage_examples() {
        let y = vi(&[5, -7]);
        assert_eq!(preimage(&RatMatrix::identity(2), &y), Some(y));
        assert_eq!(preimage(&m(2, 2, &[1, 0, 0, 0]), &vi(&[0, 1])), None);
        assert_eq!(preimage(&m(1, 2, &[1, 1]), &vi(&[3])), Some(vi(&[3, 0])));
    }

    #[test]
    fn quotient_extremes() {
        let q = quotient(3, &Subspace::zero(3)).unwrap();
        assert_eq!(q.proj, RatMatrix::identity(3));
        assert_eq!(q.dim, 3);
        let q = quotient(3, &Subspace::full(3)).unwrap();
        assert_eq!(q.dim, 0);
        assert_eq!(q.proj.rows(), 0);
    }

    #[test]
    fn quotient_mismatch_is_an_error() {
        assert!(matches!(
            quotient(4, &Subspace::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn intersect_coordinate_planes() {
        let a = Subspace::span(3, &[vi(&[1, 0, 0]), vi(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, &[vi(&[0, 1, 0]), vi(&[0, 0, 1])]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::span(3, &[vi(&[0, 1, 0])]).unwrap());
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn intersect_skew_lines() {
        let a = Subspace::span(3, &[vi(&[1, 1, 0]), vi(&[0, 0, 1])]).unwrap();
        let b = Subspace::span(3, &[vi(&[1, 1, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), b);
        let c = Subspace::span(3, &[vi(&[1, 0, 0])]).unwrap();
        assert!(a.intersect(&c).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch_errors() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&vi(&[1, 2, 3])).is_err());
        assert!(RatMatrix::identity(2).mul(&RatMatrix::identity(3)).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("-4"), Some(rat(-4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(7)), "7");
    }
}
