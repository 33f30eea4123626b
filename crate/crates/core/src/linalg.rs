//! Exact row-vector linear algebra over a [`Field`]. Matrices act on the
//! right of row vectors, matching the right action of a semigroup on its
//! regular module.

use crate::arith::Field;

pub type Mat<E> = Vec<Vec<E>>;

pub fn zero_matrix<F: Field>(f: &F, rows: usize, cols: usize) -> Mat<F::Elem> {
    vec![vec![f.zero(); cols]; rows]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    let mut m = zero_matrix(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn mat_mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    a.iter().map(|row| vec_mat(f, row, b)).collect()
}

/// `v·m` for a row vector `v`.
pub fn vec_mat<F: Field>(f: &F, v: &[F::Elem], m: &Mat<F::Elem>) -> Vec<F::Elem> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![f.zero(); cols];
    for (x, row) in v.iter().zip(m) {
        if f.is_zero(x) {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !f.is_zero(y) {
                *o = f.add(o, &f.mul(x, y));
            }
        }
    }
    out
}

pub fn mat_add<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| f.add(x, y)).collect())
        .collect()
}

pub fn mat_sub<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| f.sub(x, y)).collect())
        .collect()
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &Mat<F::Elem>) -> Mat<F::Elem> {
    a.iter()
        .map(|r| r.iter().map(|x| f.mul(c, x)).collect())
        .collect()
}

pub fn transpose<E: Clone>(a: &Mat<E>) -> Mat<E> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn is_zero_matrix<F: Field>(f: &F, a: &Mat<F::Elem>) -> bool {
    a.iter().all(|r| r.iter().all(|x| f.is_zero(x)))
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

/// `p(a)` for a polynomial given by its coefficients, lowest degree first.
pub fn poly_eval<F: Field>(f: &F, coeffs: &[F::Elem], a: &Mat<F::Elem>) -> Mat<F::Elem> {
    let n = a.len();
    let mut acc = zero_matrix(f, n, n);
    for c in coeffs.iter().rev() {
        acc = mat_mul(f, &acc, a);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] = f.add(&row[i], c);
        }
    }
    acc
}

pub fn inverse<F: Field>(f: &F, a: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    let n = a.len();
    let mut m: Mat<F::Elem> = a
        .iter()
        .zip(identity(f, n))
        .map(|(r, i)| r.iter().cloned().chain(i).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !f.is_zero(&m[r][col]))?;
        m.swap(col, pivot);
        let inv = f.inv(&m[col][col]);
        m[col] = m[col].iter().map(|x| f.mul(&inv, x)).collect();
        for r in 0..n {
            if r != col && !f.is_zero(&m[r][col]) {
                let c = m[r][col].clone();
                let (pr, rr) = pick_two(&mut m, col, r);
                for (x, y) in rr.iter_mut().zip(pr.iter()) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn pick_two<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// A subspace of `K^n` kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Echelon basis, ordered by pivot column.
    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug + Eq + std::hash::Hash> Subspace<E> {
    pub fn whole<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: identity(f, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: &[Vec<E>]) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(f, v);
        }
        s
    }

    /// The residue of `v` after clearing every pivot column.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !f.is_zero(&w[p]) {
                let c = w[p].clone();
                for (x, y) in w.iter_mut().zip(b) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&c, y));
                    }
                }
            }
        }
        w
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        is_zero_vec(f, &self.reduce(f, v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, f: &F, v: &[E]) -> bool {
        let mut w = self.reduce(f, v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]);
        w = w.iter().map(|x| f.mul(&inv, x)).collect();
        for b in &mut self.basis {
            if !f.is_zero(&b[p]) {
                let c = b[p].clone();
                for (x, y) in b.iter_mut().zip(&w) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, w);
        true
    }

    /// Coordinates of a member in the echelon basis: its pivot entries.
    pub fn coordinates(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// The vector with the given coordinates.
    pub fn combine<F: Field<Elem = E>>(&self, f: &F, coords: &[E]) -> Vec<E> {
        let mut out = vec![f.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
        out
    }

    pub fn contains_space<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(f, v))
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(f, v);
        }
        s
    }

    /// Invariant under right multiplication by every matrix in `mats`.
    pub fn is_invariant<F: Field<Elem = E>>(&self, f: &F, mats: &[Mat<E>]) -> bool {
        mats.iter()
            .all(|m| self.basis.iter().all(|b| self.contains(f, &vec_mat(f, b, m))))
    }

    /// Matrices of the action of `mats` on this (invariant) subspace, in
    /// echelon coordinates.
    pub fn restrict<F: Field<Elem = E>>(&self, f: &F, mats: &[Mat<E>]) -> Vec<Mat<E>> {
        mats.iter()
            .map(|m| {
                self.basis
                    .iter()
                    .map(|b| self.coordinates(&vec_mat(f, b, m)))
                    .collect()
            })
            .collect()
    }

    /// Columns outside the pivot set: the standard complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect()
    }

    /// Matrices of the action induced on `K^n / self` in the coordinates
    /// of the standard complement.
    pub fn quotient_action<F: Field<Elem = E>>(&self, f: &F, mats: &[Mat<E>]) -> Vec<Mat<E>> {
        let free = self.free_columns();
        mats.iter()
            .map(|m| {
                free.iter()
                    .map(|&c| {
                        let r = self.reduce(f, &m[c]);
                        free.iter().map(|&d| r[d].clone()).collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Lifts a vector in quotient coordinates to the standard complement.
    pub fn lift<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut out = vec![f.zero(); self.ambient];
        for (c, x) in self.free_columns().into_iter().zip(v) {
            out[c] = x.clone();
        }
        out
    }
}

/// The smallest subspace containing `seeds` and invariant under `mats`.
pub fn spin<F: Field>(
    f: &F,
    ambient: usize,
    seeds: &[Vec<F::Elem>],
    mats: &[Mat<F::Elem>],
) -> Subspace<F::Elem> {
    let mut space = Subspace::zero(ambient);
    let mut queue: Vec<Vec<F::Elem>> = Vec::new();
    for v in seeds {
        if space.insert(f, v) {
            queue.push(v.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() && space.dim() < ambient {
        for m in mats {
            let w = vec_mat(f, &queue[i], m);
            if space.insert(f, &w) {
                queue.push(w);
            }
        }
        i += 1;
    }
    space
}

/// Basis of `{x : a·x = 0}` as column vectors.
pub fn right_kernel<F: Field>(f: &F, a: &Mat<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let echelon = Subspace::span(f, cols, a);
    echelon
        .free_columns()
        .into_iter()
        .map(|j| {
            let mut x = vec![f.zero(); cols];
            x[j] = f.one();
            for (row, &p) in echelon.basis().iter().zip(echelon.pivots()) {
                x[p] = f.neg(&row[j]);
            }
            x
        })
        .collect()
}

/// Basis of `{v : v·a = 0}`.
pub fn left_kernel<F: Field>(f: &F, a: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    right_kernel(f, &transpose(a), a.len())
}

/// Vectors of `space` killed by every matrix in `mats`.
pub fn annihilated<F: Field>(
    f: &F,
    space: &Subspace<F::Elem>,
    mats: &[&Mat<F::Elem>],
) -> Subspace<F::Elem> {
    let n = space.ambient();
    if mats.is_empty() {
        return space.clone();
    }
    // Row i of the stacked matrix is [b_i·m_1 | b_i·m_2 | ...].
    let stacked: Mat<F::Elem> = space
        .basis()
        .iter()
        .map(|b| mats.iter().flat_map(|m| vec_mat(f, b, m)).collect())
        .collect();
    let coords = left_kernel(f, &stacked);
    let vectors: Vec<Vec<F::Elem>> = coords.iter().map(|c| space.combine(f, c)).collect();
    Subspace::span(f, n, &vectors)
}
