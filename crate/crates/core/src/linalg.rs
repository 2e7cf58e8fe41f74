//! Exact rational linear algebra: reduced row echelon subspaces, kernels and
//! intersections over `BigRational`.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, k: usize) -> Vec<Q> {
    let mut v = zero_vec(n);
    v[k] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn scale(v: &[Q], c: &Q) -> Vec<Q> {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Largest absolute numerator among the entries; 0 for the zero vector.
pub fn max_abs_numerator(v: &[Q]) -> BigInt {
    v.iter()
        .map(|x| x.numer().abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// A subspace of `Q^n` kept in reduced row echelon form.
///
/// Rows are sorted by pivot column and each pivot entry is 1 with zeros above
/// and below it, so membership is a single reduction pass.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<'a, I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<Q>>,
    {
        let mut s = Subspace::new(ambient);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn full(ambient: usize) -> Self {
        let units: Vec<Vec<Q>> = (0..ambient).map(|k| unit_vec(ambient, k)).collect();
        Subspace::spanned_by(ambient, &units)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every pivot; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Coordinates of `v` with respect to the echelon rows, if `v` is in the span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        // RREF is canonical.
        self.pivots == other.pivots && self.rows == other.rows
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x = sum c_l w_l lies in self iff sum c_l reduce(w_l) = 0.
        let residuals: Vec<Vec<Q>> = other.rows.iter().map(|w| self.reduce(w)).collect();
        let mut out = Subspace::new(self.ambient);
        for c in linear_relations(&residuals, self.ambient) {
            let mut x = zero_vec(self.ambient);
            for (cl, w) in c.iter().zip(&other.rows) {
                axpy(&mut x, cl, w);
            }
            out.insert(x);
        }
        out
    }
}

/// Reduced row echelon form of a row list; returns the nonzero rows and pivots.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut s = Subspace::new(ncols);
    for r in rows {
        s.insert(r.clone());
    }
    (s.rows, s.pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows, ncols).0.len()
}

/// Basis of `{ x : A x = 0 }` for `A` given by its rows (each of length `ncols`).
pub fn kernel(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (rows, pivots) = rref(a, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = zero_vec(ncols);
        x[free] = Q::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = -row[free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Basis of the coefficient vectors `c` with `sum_k c_k v_k = 0`.
pub fn linear_relations(vectors: &[Vec<Q>], ambient: usize) -> Vec<Vec<Q>> {
    let k = vectors.len();
    let a: Vec<Vec<Q>> = (0..ambient)
        .map(|i| vectors.iter().map(|v| v[i].clone()).collect())
        .collect();
    kernel(&a, k)
}

/// Dense square matrix product `a * b`.
pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![zero_vec(m); n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            axpy(&mut out[i], aik, &b[k]);
        }
    }
    out
}

/// Solves `A x = b` for square invertible `A`.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let augmented: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (rows, pivots) = rref(&augmented, n + 1);
    if pivots.len() != n || pivots.iter().any(|&p| p == n) {
        return None;
    }
    Some(rows.iter().map(|r| r[n].clone()).collect())
}
