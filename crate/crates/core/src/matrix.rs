//! Exact rational scalars and sparse matrices.
//!
//! Scalars are `Ratio<i64>` with every operation overflow-checked: a model
//! that outgrows 64-bit numerators aborts loudly instead of wrapping.

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Q(pub Ratio<i64>);

impl Q {
    pub const fn int(n: i64) -> Q {
        Q(Ratio::new_raw(n, 1))
    }

    pub fn new(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        Q(Ratio::new(num, den))
    }

    pub fn zero() -> Q {
        Q::int(0)
    }

    pub fn one() -> Q {
        Q::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn recip(&self) -> Q {
        assert!(!self.is_zero(), "reciprocal of zero");
        Q(self.0.recip())
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    pub fn powi(&self, k: i64) -> Q {
        let base = if k < 0 { self.recip() } else { *self };
        let mut acc = Q::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc * base;
        }
        acc
    }

    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, o: Q) -> Q {
        Q(self.0.checked_add(&o.0).expect("rational overflow in add"))
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, o: Q) -> Q {
        Q(self.0.checked_sub(&o.0).expect("rational overflow in sub"))
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, o: Q) -> Q {
        Q(self.0.checked_mul(&o.0).expect("rational overflow in mul"))
    }
}

impl Div for Q {
    type Output = Q;
    fn div(self, o: Q) -> Q {
        Q(self.0.checked_div(&o.0).expect("rational division by zero or overflow"))
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Q {
    type Err = String;
    fn from_str(s: &str) -> Result<Q, String> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad rational `{s}`: {e}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d == 0 {
                    return Err(format!("bad rational `{s}`: zero denominator"));
                }
                Ok(Q::new(parse(n)?, d))
            }
            None => Ok(Q::int(parse(s)?)),
        }
    }
}

/// Sparse matrix over `Q`: each row holds its nonzero entries sorted by
/// column, so equal matrices have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Q)>>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> QMat {
        QMat { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> QMat {
        QMat::scalar(n, Q::one())
    }

    pub fn scalar(n: usize, c: Q) -> QMat {
        if c.is_zero() {
            return QMat::zeros(n, n);
        }
        QMat { rows: n, cols: n, data: (0..n).map(|i| vec![(i, c)]).collect() }
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> QMat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, *v)).collect())
            .collect();
        QMat { rows: r, cols: c, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> QMat {
        let rows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| Q::int(x)).collect()).collect();
        QMat::from_rows(&rows)
    }

    /// Elementary matrix with a single 1 at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> QMat {
        let mut m = QMat::zeros(rows, cols);
        m.set(i, j, Q::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        let row = &self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => row[k].1,
            Err(_) => Q::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        let row = &mut self.data[i];
        match (row.binary_search_by_key(&j, |e| e.0), v.is_zero()) {
            (Ok(k), true) => {
                row.remove(k);
            }
            (Ok(k), false) => row[k].1 = v,
            (Err(_), true) => {}
            (Err(k), false) => row.insert(k, (j, v)),
        }
    }

    /// The nonzero entries of row `i`, by increasing column.
    pub fn row(&self, i: usize) -> &[(usize, Q)] {
        &self.data[i]
    }

    /// All entries in row-major order, zeros included.
    pub fn to_dense(&self) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rows * self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                out[i * self.cols + j] = v;
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && self.data.iter().enumerate().all(|(i, row)| row.len() == 1 && row[0].0 == i && row[0].1.is_one())
    }

    /// Matrix product `self * o`.
    pub fn mul(&self, o: &QMat) -> QMat {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch in product");
        let mut acc = vec![Q::zero(); o.cols];
        let mut touched: Vec<usize> = Vec::new();
        let data = self
            .data
            .iter()
            .map(|row| {
                for &(k, a) in row {
                    for &(j, b) in &o.data[k] {
                        if acc[j].is_zero() {
                            touched.push(j);
                        }
                        acc[j] = acc[j] + a * b;
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let out: Vec<(usize, Q)> = touched.iter().map(|&j| (j, acc[j])).filter(|(_, v)| !v.is_zero()).collect();
                for &j in &touched {
                    acc[j] = Q::zero();
                }
                touched.clear();
                out
            })
            .collect();
        QMat { rows: self.rows, cols: o.cols, data }
    }

    /// Kronecker product, row-major over the left factor:
    /// `(A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]` with pair `(i,k)` at `i * rows(B) + k`.
    pub fn kron(&self, o: &QMat) -> QMat {
        let mut data = Vec::with_capacity(self.rows * o.rows);
        for ra in &self.data {
            for rb in &o.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for &(j, a) in ra {
                    for &(l, b) in rb {
                        row.push((j * o.cols + l, a * b));
                    }
                }
                data.push(row);
            }
        }
        QMat { rows: self.rows * o.rows, cols: self.cols * o.cols, data }
    }

    pub fn transpose(&self) -> QMat {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                data[j].push((i, v));
            }
        }
        QMat { rows: self.cols, cols: self.rows, data }
    }

    pub fn add(&self, o: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch in sum");
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| {
                let (mut x, mut y) = (0, 0);
                let mut out = Vec::with_capacity(a.len() + b.len());
                while x < a.len() || y < b.len() {
                    let next = match (a.get(x), b.get(y)) {
                        (Some(&(i, u)), Some(&(j, v))) if i == j => {
                            x += 1;
                            y += 1;
                            (i, u + v)
                        }
                        (Some(&(i, u)), Some(&(j, _))) if i < j => {
                            x += 1;
                            (i, u)
                        }
                        (Some(&(i, u)), None) => {
                            x += 1;
                            (i, u)
                        }
                        (_, Some(&(j, v))) => {
                            y += 1;
                            (j, v)
                        }
                        (None, None) => unreachable!(),
                    };
                    if !next.1.is_zero() {
                        out.push(next);
                    }
                }
                out
            })
            .collect();
        QMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &QMat) -> QMat {
        self.add(&o.scale(-Q::one()))
    }

    pub fn scale(&self, c: Q) -> QMat {
        if c.is_zero() {
            return QMat::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|row| row.iter().map(|&(j, v)| (j, v * c)).collect()).collect();
        QMat { rows: self.rows, cols: self.cols, data }
    }

    /// True when every row and column has exactly one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut col_hit = vec![false; self.cols];
        for row in &self.data {
            if row.len() != 1 || col_hit[row[0].0] {
                return false;
            }
            col_hit[row[0].0] = true;
        }
        true
    }

    /// True when every row and column has exactly one nonzero entry, equal to 1.
    pub fn is_permutation(&self) -> bool {
        self.is_monomial() && self.data.iter().all(|row| row[0].1.is_one())
    }

    /// Reduced row echelon form of a dense copy; returns it with the pivot columns.
    fn rref(&self) -> (Vec<Vec<Q>>, Vec<usize>) {
        let mut a: Vec<Vec<Q>> = (0..self.rows)
            .map(|i| {
                let mut row = vec![Q::zero(); self.cols];
                for &(j, v) in &self.data[i] {
                    row[j] = v;
                }
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let inv = a[r][c].recip();
            for v in a[r].iter_mut() {
                *v = *v * inv;
            }
            for i in 0..self.rows {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c];
                let pivot_row = a[r].clone();
                for (x, &y) in a[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = *x - f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact inverse; monomial matrices directly, otherwise by Gauss-Jordan
    /// elimination. `None` if singular or non-square.
    pub fn inverse(&self) -> Option<QMat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if self.is_monomial() {
            let mut data = vec![Vec::new(); n];
            for (i, row) in self.data.iter().enumerate() {
                let (j, v) = row[0];
                data[j].push((i, v.recip()));
            }
            return Some(QMat { rows: n, cols: n, data });
        }
        let mut aug = QMat::zeros(n, 2 * n);
        for (i, row) in self.data.iter().enumerate() {
            aug.data[i] = row.clone();
            aug.data[i].push((n + i, Q::one()));
        }
        let (a, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let rows: Vec<Vec<Q>> = a.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(QMat::from_rows(&rows))
    }

    /// Basis of the right nullspace `{x : self * x = 0}` as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (a, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[r][f];
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = QMat::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = QMat::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(a.inverse().is_none());
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn kron_layout_is_row_major_over_left() {
        let a = QMat::from_ints(&[&[1, 2], &[3, 4]]);
        let b = QMat::from_ints(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        // entry ((i,k),(j,l)) = a[i][j] * b[k][l]
        // (i,k) = (1,0), (j,l) = (0,1)
        assert_eq!(k.get(2, 1), Q::int(3 * 5));
        // (i,k) = (0,1), (j,l) = (1,1)
        assert_eq!(k.get(1, 3), Q::int(2 * 7));
        // mixed product law
        let c = QMat::from_ints(&[&[1, 0], &[1, 1]]);
        let d = QMat::from_ints(&[&[2, 1], &[0, 1]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let a = QMat::from_ints(&[&[1, 1, 0, 0], &[0, 0, 1, -1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = QMat::from_rows(&v.iter().map(|x| vec![*x]).collect::<Vec<_>>());
            assert!(a.mul(&col).is_zero());
        }
    }

    #[test]
    fn rational_parse_and_power() {
        let h: Q = "1/2".parse().unwrap();
        assert_eq!(h.powi(-2), Q::int(4));
        assert_eq!("-3".parse::<Q>().unwrap(), Q::int(-3));
        assert!("1/0".parse::<Q>().is_err());
    }

    #[test]
    #[should_panic(expected = "rational overflow")]
    fn overflow_is_loud() {
        let big = Q::int(i64::MAX / 2);
        let _ = big * big;
    }
}
