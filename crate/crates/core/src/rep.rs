//! Matrix representations of finite semigroups: the regular representation,
//! composition flags, block triangular forms, constructive triangularization
//! and nilpotency of ideals of the enveloping algebra.
//!
//! A simple submodule of a module `U` is found by descending through the
//! J-order. Let `J` be a lowest J-class that does not annihilate `U`. If `J`
//! is null, `U·J` is a smaller nonzero submodule killed by `J`. If `J` is
//! regular with idempotent `e`, a simple `K[G_e]`-submodule `N` of `U·e`
//! spins up to a module `W` whose vectors killed by `J` form its unique
//! maximal submodule; either that is zero and `W` is simple, or the search
//! continues inside it. The group step uses common eigenvectors, then
//! exhaustive spinning over finite fields or Norton's irreducibility test
//! over the rationals.

use serde::Serialize;

use crate::arith::{cyclotomic_polynomial, CyclotomicField, ExactScalar, Field, GaloisField, Rationals};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::greens::{greens, GreensStructure};
use crate::group::{prime_power, SubgroupTable};
use crate::linalg::{
    annihilated, identity, inverse, is_zero_vec, left_kernel, mat_mul, mat_sub, poly_eval,
    right_kernel, spin, transpose, vec_mat, Mat, Subspace,
};
use crate::semigroup::FiniteSemigroup;
use crate::variety::classify_representability;
use crate::witness::Witness;

/// Projective points scanned when splitting a group module over a finite field.
pub const EXHAUSTIVE_SCAN_CAP: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct MatrixRep<F: Field> {
    field: F,
    semigroup: FiniteSemigroup,
    dim: usize,
    images: Vec<Mat<F::Elem>>,
    basis_labels: Vec<String>,
}

impl<F: Field> MatrixRep<F> {
    /// Validates sizes and multiplicativity over every pair of elements.
    pub fn new(
        field: F,
        semigroup: FiniteSemigroup,
        images: Vec<Mat<F::Elem>>,
        basis_labels: Vec<String>,
    ) -> Result<Self> {
        let rep = Self::new_unchecked(field, semigroup, images, basis_labels)?;
        rep.check_multiplicative()?;
        Ok(rep)
    }

    /// Validates sizes only; for images built from a known action.
    pub fn new_unchecked(
        field: F,
        semigroup: FiniteSemigroup,
        images: Vec<Mat<F::Elem>>,
        basis_labels: Vec<String>,
    ) -> Result<Self> {
        if images.len() != semigroup.order() {
            return Err(Error::DimensionMismatch {
                expected: semigroup.order(),
                found: images.len(),
            });
        }
        let dim = basis_labels.len();
        for m in &images {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.len(),
                });
            }
        }
        Ok(MatrixRep {
            field,
            semigroup,
            dim,
            images,
            basis_labels,
        })
    }

    pub fn check_multiplicative(&self) -> Result<()> {
        let s = &self.semigroup;
        for a in s.elements() {
            for b in s.elements() {
                let prod = mat_mul(&self.field, &self.images[a], &self.images[b]);
                if prod != self.images[s.mul(a, b)] {
                    return Err(Error::NotMorphism(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, s: usize) -> &Mat<F::Elem> {
        &self.images[s]
    }

    pub fn images(&self) -> &[Mat<F::Elem>] {
        &self.images
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    fn generator_images(&self) -> Vec<Mat<F::Elem>> {
        self.semigroup
            .generators()
            .iter()
            .map(|&g| self.images[g].clone())
            .collect()
    }

    pub fn report(&self) -> RepReportJson {
        RepReportJson {
            field: self.field.name(),
            dimension: self.dim,
            basis_labels: self.basis_labels.clone(),
            images: self
                .images
                .iter()
                .map(|m| scalar_matrix(&self.field, m))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepReportJson {
    pub field: String,
    pub dimension: usize,
    pub basis_labels: Vec<String>,
    pub images: Vec<Vec<Vec<ExactScalar>>>,
}

pub fn scalar_matrix<F: Field>(f: &F, m: &Mat<F::Elem>) -> Vec<Vec<ExactScalar>> {
    m.iter()
        .map(|r| r.iter().map(|x| f.to_scalar(x)).collect())
        .collect()
}

fn element_label(s: &FiniteSemigroup, x: usize) -> String {
    match s.gen_words() {
        Some(w) if !w.words[x].is_empty() => w.spell(x),
        _ => format!("s{x}"),
    }
}

/// Right multiplication on the vector space with basis `S^1`; a new
/// identity is appended last when `S` has none.
pub fn regular_representation<F: Field>(s: &FiniteSemigroup, field: &F) -> MatrixRep<F> {
    let n = s.order();
    let extra = s.identity().is_none();
    let d = n + usize::from(extra);
    let mut labels: Vec<String> = s.elements().map(|x| element_label(s, x)).collect();
    if let Some(e) = s.identity() {
        labels[e] = "1".into();
    } else {
        labels.push("1".into());
    }
    let images = s
        .elements()
        .map(|t| {
            let mut m = vec![vec![field.zero(); d]; d];
            for x in s.elements() {
                m[x][s.mul(x, t)] = field.one();
            }
            if extra {
                m[n][t] = field.one();
            }
            m
        })
        .collect();
    MatrixRep::new_unchecked(field.clone(), s.clone(), images, labels).expect("square images")
}

/// A chain `0 = V_0 < V_1 < ... < V_k = V` of invariant subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag<E> {
    /// `V_1, ..., V_k`.
    pub subspaces: Vec<Subspace<E>>,
    /// `dim V_i - dim V_(i-1)`.
    pub block_sizes: Vec<usize>,
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash + std::fmt::Debug> Flag<E> {
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    /// Every subspace is invariant under every matrix.
    pub fn is_invariant<F: Field<Elem = E>>(&self, f: &F, mats: &[Mat<E>]) -> bool {
        self.subspaces.iter().all(|v| v.is_invariant(f, mats))
    }

    /// The flag with the single step `0 < V`.
    pub fn trivial<F: Field<Elem = E>>(f: &F, dim: usize) -> Self {
        Flag {
            subspaces: vec![Subspace::whole(f, dim)],
            block_sizes: vec![dim],
        }
    }

    fn from_chain(subspaces: Vec<Subspace<E>>) -> Self {
        let mut prev = 0;
        let block_sizes = subspaces
            .iter()
            .map(|v| {
                let b = v.dim() - prev;
                prev = v.dim();
                b
            })
            .collect();
        Flag {
            subspaces,
            block_sizes,
        }
    }
}

/// J-class ids ordered so that every class comes after those strictly below it.
fn bottom_up_j_order(g: &GreensStructure) -> Vec<usize> {
    let k = g.j_count();
    let below: Vec<usize> = (0..k)
        .map(|b| (0..k).filter(|&a| g.j_le(a, b)).count())
        .collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&j| (below[j], j));
    order
}

struct ModuleSearch<'a, F: Field> {
    f: &'a F,
    s: &'a FiniteSemigroup,
    g: &'a GreensStructure,
    j_order: &'a [usize],
    /// Images of every element on the current module `K^m`.
    mats: Vec<Mat<F::Elem>>,
    gen_mats: Vec<Mat<F::Elem>>,
    m: usize,
}

impl<F: Field> ModuleSearch<'_, F> {
    fn kills(&self, u: &Subspace<F::Elem>, x: usize) -> bool {
        u.basis()
            .iter()
            .all(|b| is_zero_vec(self.f, &vec_mat(self.f, b, &self.mats[x])))
    }

    fn image_under(&self, u: &Subspace<F::Elem>, elems: &[usize]) -> Subspace<F::Elem> {
        let vectors: Vec<Vec<F::Elem>> = elems
            .iter()
            .flat_map(|&x| u.basis().iter().map(move |b| vec_mat(self.f, b, &self.mats[x])))
            .collect();
        Subspace::span(self.f, self.m, &vectors)
    }

    /// A simple submodule of the nonzero submodule `u`.
    fn simple_submodule(&self, mut u: Subspace<F::Elem>) -> Result<Subspace<F::Elem>> {
        loop {
            let lowest = self
                .j_order
                .iter()
                .copied()
                .find(|&j| self.g.j_classes[j].iter().any(|&x| !self.kills(&u, x)));
            let Some(j) = lowest else {
                // The semigroup acts as zero: every line is a submodule.
                return Ok(Subspace::span(self.f, self.m, &u.basis()[..1]));
            };
            let class = &self.g.j_classes[j];
            if !self.g.regular[j] {
                u = self.image_under(&u, class);
                continue;
            }
            let e = class
                .iter()
                .copied()
                .find(|&x| self.s.is_idempotent(x) && !self.kills(&u, x))
                .expect("a non-annihilating regular class has such an idempotent");
            let n = self.image_under(&u, &[e]);
            let h = &self.g.h_classes[self.g.h_of[e]];
            let group_mats: Vec<Mat<F::Elem>> = h.iter().map(|&x| self.mats[x].clone()).collect();
            let simple_n = simple_group_submodule(self.f, &n, &group_mats)?;
            let w = spin(self.f, self.m, simple_n.basis(), &self.gen_mats);
            let class_mats: Vec<&Mat<F::Elem>> = class.iter().map(|&x| &self.mats[x]).collect();
            let radical = annihilated(self.f, &w, &class_mats);
            if radical.is_zero() {
                return Ok(w);
            }
            u = radical;
        }
    }
}

/// A simple submodule of the invariant subspace `n` for matrices coming
/// from a group.
fn simple_group_submodule<F: Field>(
    f: &F,
    n: &Subspace<F::Elem>,
    group_mats: &[Mat<F::Elem>],
) -> Result<Subspace<F::Elem>> {
    let local = n.restrict(f, group_mats);
    let inner = simple_in(f, n.dim(), &local)?;
    let vectors: Vec<Vec<F::Elem>> = inner.basis().iter().map(|c| n.combine(f, c)).collect();
    Ok(Subspace::span(f, n.ambient(), &vectors))
}

/// Restricts to the submodule `x` of `K^r` and continues the search there.
fn descend<F: Field>(f: &F, x: &Subspace<F::Elem>, mats: &[Mat<F::Elem>]) -> Result<Subspace<F::Elem>> {
    let local = x.restrict(f, mats);
    let inner = simple_in(f, x.dim(), &local)?;
    let vectors: Vec<Vec<F::Elem>> = inner.basis().iter().map(|c| x.combine(f, c)).collect();
    Ok(Subspace::span(f, x.ambient(), &vectors))
}

fn simple_in<F: Field>(f: &F, r: usize, mats: &[Mat<F::Elem>]) -> Result<Subspace<F::Elem>> {
    if r <= 1 {
        return Ok(Subspace::whole(f, r));
    }
    if let Some(v) = common_eigenvector(f, r, mats) {
        return Ok(Subspace::span(f, r, &[v]));
    }
    if let Some(q) = f.size() {
        let points = (q.pow(r as u32) - 1) / (q - 1);
        if q.checked_pow(r as u32).is_some() && points <= EXHAUSTIVE_SCAN_CAP {
            for v in projective_points(f, q, r) {
                let x = spin(f, r, &[v], mats);
                if x.dim() < r {
                    return descend(f, &x, mats);
                }
            }
            return Ok(Subspace::whole(f, r));
        }
    }
    match norton(f, r, mats) {
        Some(x) if x.dim() == r => Ok(x),
        Some(x) => descend(f, &x, mats),
        None if f.characteristic() == 0 => commutant_split(f, r, mats),
        None => Err(Error::Undecided(r)),
    }
}

/// Nonzero vectors of `F_q^r` whose first nonzero entry is one.
fn projective_points<F: Field>(f: &F, q: u64, r: usize) -> impl Iterator<Item = Vec<F::Elem>> + '_ {
    (0..r).rev().flat_map(move |lead| {
        let tail = r - lead - 1;
        (0..q.pow(tail as u32)).map(move |mut code| {
            let mut v = vec![f.zero(); r];
            v[lead] = f.one();
            for x in v.iter_mut().skip(lead + 1) {
                *x = f.element(code % q);
                code /= q;
            }
            v
        })
    })
}

/// A vector that every matrix maps to a multiple of itself.
pub fn common_eigenvector<F: Field>(f: &F, r: usize, mats: &[Mat<F::Elem>]) -> Option<Vec<F::Elem>> {
    let id = identity(f, r);
    let mut distinct: Vec<&Mat<F::Elem>> = Vec::new();
    for m in mats {
        if *m != id && !distinct.contains(&m) {
            distinct.push(m);
        }
    }
    let candidates = f.eigenvalue_candidates();
    fn dfs<F: Field>(
        f: &F,
        space: Subspace<F::Elem>,
        mats: &[&Mat<F::Elem>],
        candidates: &[F::Elem],
    ) -> Option<Vec<F::Elem>> {
        let Some((m, rest)) = mats.split_first() else {
            return space.basis().first().cloned();
        };
        for lambda in candidates {
            let shifted: Mat<F::Elem> = space
                .basis()
                .iter()
                .map(|b| {
                    vec_mat(f, b, m)
                        .iter()
                        .zip(b)
                        .map(|(x, y)| f.sub(x, &f.mul(lambda, y)))
                        .collect()
                })
                .collect();
            let kernel = left_kernel(f, &shifted);
            if kernel.is_empty() {
                continue;
            }
            let vectors: Vec<Vec<F::Elem>> = kernel.iter().map(|c| space.combine(f, c)).collect();
            let eigenspace = Subspace::span(f, space.ambient(), &vectors);
            if let Some(v) = dfs(f, eigenspace, rest, candidates) {
                return Some(v);
            }
        }
        None
    }
    dfs(f, Subspace::whole(f, r), &distinct, &candidates)
}

fn matrix_order<F: Field>(f: &F, m: &Mat<F::Elem>) -> Option<usize> {
    let id = identity(f, m.len());
    let mut p = m.clone();
    for k in 1..=720 {
        if p == id {
            return Some(k);
        }
        p = mat_mul(f, &p, m);
    }
    None
}

/// Norton's test on group matrices. Returns a proper nonzero submodule, the
/// whole space when irreducibility is certified, or `None`.
fn norton<F: Field>(f: &F, r: usize, mats: &[Mat<F::Elem>]) -> Option<Subspace<F::Elem>> {
    let transposed: Vec<Mat<F::Elem>> = mats.iter().map(transpose).collect();
    for m in mats {
        let Some(order) = matrix_order(f, m) else { continue };
        let mut polys: Vec<Vec<F::Elem>> = f
            .eigenvalue_candidates()
            .into_iter()
            .filter(|l| !f.is_zero(l))
            .map(|l| vec![f.neg(&l), f.one()])
            .collect();
        if f.characteristic() == 0 && f.size().is_none() && f.is_rational() {
            for d in (3..=order).filter(|d| order % d == 0) {
                polys.push(
                    cyclotomic_polynomial(d as u64)
                        .into_iter()
                        .map(|c| f.from_int(c))
                        .collect(),
                );
            }
        }
        for p in polys {
            let pm = poly_eval(f, &p, m);
            let kernel = left_kernel(f, &pm);
            if kernel.is_empty() {
                continue;
            }
            let x = spin(f, r, &kernel[..1], mats);
            if x.dim() < r {
                return Some(x);
            }
            let dual = right_kernel(f, &pm, r);
            let y = spin(f, r, &dual[..1], &transposed);
            if y.dim() < r {
                let perp = left_kernel(f, &transpose(&y.basis().to_vec()));
                return Some(Subspace::span(f, r, &perp));
            }
            if kernel.len() == p.len() - 1 {
                return Some(Subspace::whole(f, r));
            }
        }
    }
    None
}

/// In characteristic zero the module is simple exactly when its
/// endomorphism algebra is a division algebra; a singular nonzero basis
/// endomorphism has a proper image.
fn commutant_split<F: Field>(f: &F, r: usize, mats: &[Mat<F::Elem>]) -> Result<Subspace<F::Elem>> {
    let var = |i: usize, k: usize| i * r + k;
    let mut equations: Mat<F::Elem> = Vec::new();
    for a in mats {
        for i in 0..r {
            for j in 0..r {
                // (X a - a X)_{ij} = sum_k X_ik a_kj - a_ik X_kj.
                let mut row = vec![f.zero(); r * r];
                for k in 0..r {
                    row[var(i, k)] = f.add(&row[var(i, k)], &a[k][j]);
                    row[var(k, j)] = f.sub(&row[var(k, j)], &a[i][k]);
                }
                equations.push(row);
            }
        }
    }
    let solutions = right_kernel(f, &equations, r * r);
    if solutions.len() == 1 {
        return Ok(Subspace::whole(f, r));
    }
    for x in &solutions {
        let e: Mat<F::Elem> = x.chunks(r).map(<[F::Elem]>::to_vec).collect();
        if inverse(f, &e).is_none() {
            let image = Subspace::span(f, r, &e);
            return descend(f, &image, mats);
        }
    }
    Err(Error::Undecided(r))
}

/// Composition flag of the module: every quotient `V_i / V_(i-1)` is simple.
pub fn composition_flag<F: Field>(rep: &MatrixRep<F>) -> Result<Flag<F::Elem>> {
    let f = &rep.field;
    let s = &rep.semigroup;
    let g = greens(s);
    let j_order = bottom_up_j_order(&g);
    let d = rep.dim;
    let mut current = Subspace::zero(d);
    let mut chain = Vec::new();
    while current.dim() < d {
        let mats = current.quotient_action(f, &rep.images);
        let gen_mats = s.generators().iter().map(|&x| mats[x].clone()).collect();
        let m = d - current.dim();
        let search = ModuleSearch {
            f,
            s,
            g: &g,
            j_order: &j_order,
            mats,
            gen_mats,
            m,
        };
        let simple = search.simple_submodule(Subspace::whole(f, m))?;
        let lifted: Vec<Vec<F::Elem>> = simple.basis().iter().map(|v| current.lift(f, v)).collect();
        for v in &lifted {
            current.insert(f, v);
        }
        chain.push(current.clone());
    }
    Ok(Flag::from_chain(chain))
}

/// Flag built from common eigenvectors of successive quotients, so every
/// block is one-dimensional. `None` when some quotient has no eigenvector.
pub fn eigenvector_flag<F: Field>(rep: &MatrixRep<F>) -> Option<Flag<F::Elem>> {
    let f = &rep.field;
    let gens = rep.generator_images();
    let d = rep.dim;
    let mut current = Subspace::zero(d);
    let mut chain = Vec::new();
    while current.dim() < d {
        let mats = current.quotient_action(f, &gens);
        let v = common_eigenvector(f, d - current.dim(), &mats)?;
        current.insert(f, &current.lift(f, &v));
        chain.push(current.clone());
    }
    Some(Flag::from_chain(chain))
}

/// One diagonal block of a block triangular form.
#[derive(Clone, Debug)]
pub struct DiagonalBlock {
    pub offset: usize,
    pub size: usize,
    /// The semigroup of distinct block images.
    pub monoid: FiniteSemigroup,
    /// Element of `S` to its block image.
    pub morphism: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct BlockForm<E> {
    /// Rows are the new basis vectors in old coordinates.
    pub basis_change: Mat<E>,
    /// `P·image(s)·P^-1` for every element.
    pub conjugated: Vec<Mat<E>>,
    /// Diagonal blocks from the top-left corner down.
    pub blocks: Vec<DiagonalBlock>,
}

/// Orders a basis adapted to the flag so that conjugated images are block
/// upper triangular: the vectors spanning `V_1` come last.
fn adapted_basis<F: Field>(f: &F, flag: &Flag<F::Elem>) -> Mat<F::Elem> {
    let d = flag.subspaces.last().map_or(0, Subspace::ambient);
    let mut layers: Vec<Vec<Vec<F::Elem>>> = Vec::new();
    let mut below = Subspace::zero(d);
    for v in &flag.subspaces {
        let mut layer = Vec::new();
        for b in v.basis() {
            if below.insert(f, b) {
                layer.push(b.clone());
            }
        }
        layers.push(layer);
    }
    layers.into_iter().rev().flatten().collect()
}

pub fn block_form<F: Field>(rep: &MatrixRep<F>, flag: &Flag<F::Elem>) -> Result<BlockForm<F::Elem>> {
    let f = &rep.field;
    if !flag.is_invariant(f, &rep.images) {
        return Err(Error::InvalidCoordinates("flag is not invariant".into()));
    }
    let p = adapted_basis(f, flag);
    let p_inv = inverse(f, &p).ok_or_else(|| Error::InvalidCoordinates("flag does not span".into()))?;
    let conjugated: Vec<Mat<F::Elem>> = rep
        .images
        .iter()
        .map(|m| mat_mul(f, &mat_mul(f, &p, m), &p_inv))
        .collect();
    let mut blocks = Vec::new();
    let mut offset = 0;
    for &size in flag.block_sizes.iter().rev() {
        let cut = |m: &Mat<F::Elem>| -> Mat<F::Elem> {
            m[offset..offset + size]
                .iter()
                .map(|r| r[offset..offset + size].to_vec())
                .collect()
        };
        let mut distinct: Vec<Mat<F::Elem>> = Vec::new();
        let morphism: Vec<usize> = conjugated
            .iter()
            .map(|m| {
                let b = cut(m);
                match distinct.iter().position(|x| *x == b) {
                    Some(i) => i,
                    None => {
                        distinct.push(b);
                        distinct.len() - 1
                    }
                }
            })
            .collect();
        let table: Vec<Vec<usize>> = distinct
            .iter()
            .map(|a| {
                distinct
                    .iter()
                    .map(|b| {
                        let c = mat_mul(f, a, b);
                        distinct.iter().position(|x| *x == c).ok_or_else(|| {
                            Error::InvalidCoordinates("block images are not closed".into())
                        })
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        let monoid = FiniteSemigroup::from_cayley_table(distinct.len(), &table, None)?;
        blocks.push(DiagonalBlock {
            offset,
            size,
            monoid,
            morphism,
        });
        offset += size;
    }
    Ok(BlockForm {
        basis_change: p,
        conjugated,
        blocks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangularMode {
    Triangular,
    Unitriangular,
}

#[derive(Clone, Debug, Serialize)]
pub struct Triangularization {
    /// Field the arithmetic was carried out in.
    pub field: String,
    pub mode: TriangularMode,
    pub basis_labels: Vec<String>,
    /// Rows are the new basis vectors in the coordinates of `S^1`.
    pub basis_change: Vec<Vec<ExactScalar>>,
    /// Conjugated image of every element, upper triangular.
    pub images: Vec<Vec<Vec<ExactScalar>>>,
}

/// Exponent `e` such that every eigenvalue of every element is zero or an
/// `e`-th root of unity, in the given characteristic.
fn eigenvalue_exponent(s: &FiniteSemigroup, field: &FieldSpec) -> u64 {
    let g = greens(s);
    g.idempotents.iter().fold(1u64, |acc, &e| {
        let h = SubgroupTable::from_subset(s, &g.h_classes[g.h_of[e]]).expect("H_e is a group");
        let n = match field.characteristic() {
            0 => vec![h.local_identity()],
            p => h.largest_normal_p_subgroup(p),
        };
        num_integer::lcm(acc, h.quotient_exponent(&n) as u64)
    })
}

fn multiplicative_order(p: u64, e: u64) -> u32 {
    let mut k = 1;
    let mut x = p % e;
    while x != 1 % e {
        x = x * p % e;
        k += 1;
    }
    k
}

/// Conjugates the regular representation of `s` to upper triangular form,
/// refusing exactly when the classification denies the flag.
pub fn triangularize(
    s: &FiniteSemigroup,
    field: &FieldSpec,
    mode: TriangularMode,
) -> Result<Triangularization> {
    let report = classify_representability(s, field);
    let (granted, flag_name) = match mode {
        TriangularMode::Triangular => (report.triangularizable, "triangularizable"),
        TriangularMode::Unitriangular => (report.unitriangularizable, "unitriangularizable"),
    };
    if !granted {
        let w = report
            .witnesses
            .iter()
            .find(|(k, _)| k == flag_name)
            .map(|(_, w)| w.clone())
            .unwrap_or(Witness::Element {
                element: 0,
                reason: "flag not granted",
            });
        return Err(Error::Refusal(w));
    }
    let p = field.characteristic();
    if mode == TriangularMode::Unitriangular {
        return if p == 0 {
            triangularize_over(s, &Rationals, mode)
        } else {
            triangularize_over(s, &GaloisField::new(p).expect("prime"), mode)
        };
    }
    let e = eigenvalue_exponent(s, field);
    if !field.splits(e) {
        return Err(Error::Refusal(Witness::Splitting { exponent: e }));
    }
    match field {
        _ if p == 0 && e <= 2 => triangularize_over(s, &Rationals, mode),
        _ if p == 0 => triangularize_over(s, &CyclotomicField::new(e), mode),
        FieldSpec::Fq(q) => triangularize_over(s, &GaloisField::new(*q).ok_or_else(unsupported(field))?, mode),
        _ => {
            let k = multiplicative_order(p, e);
            let q = p
                .checked_pow(k)
                .filter(|q| prime_power(*q).is_some())
                .ok_or_else(unsupported(field))?;
            triangularize_over(s, &GaloisField::new(q).ok_or_else(unsupported(field))?, mode)
        }
    }
}

fn unsupported(field: &FieldSpec) -> impl FnOnce() -> Error + '_ {
    move || Error::UnsupportedField(field.to_string())
}

fn triangularize_over<F: Field>(
    s: &FiniteSemigroup,
    f: &F,
    mode: TriangularMode,
) -> Result<Triangularization> {
    let rep = regular_representation(s, f);
    let flag = eigenvector_flag(&rep).ok_or(Error::Undecided(rep.dim))?;
    let form = block_form(&rep, &flag)?;
    for m in &form.conjugated {
        if !is_upper_triangular(f, m, mode) {
            return Err(Error::Undecided(rep.dim));
        }
    }
    Ok(Triangularization {
        field: f.name(),
        mode,
        basis_labels: rep.basis_labels.clone(),
        basis_change: scalar_matrix(f, &form.basis_change),
        images: form.conjugated.iter().map(|m| scalar_matrix(f, m)).collect(),
    })
}

/// Entries below the diagonal vanish; in unitriangular mode the diagonal
/// entries are zero or one.
pub fn is_upper_triangular<F: Field>(f: &F, m: &Mat<F::Elem>, mode: TriangularMode) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row[..i].iter().all(|x| f.is_zero(x))
            && (mode == TriangularMode::Triangular || f.is_zero(&row[i]) || f.is_one(&row[i]))
    })
}

/// Independent check of a triangularization of `s`: the basis change is
/// invertible, conjugates every image of the regular representation to the
/// reported matrix, and every reported matrix has the promised shape.
pub fn verify_triangularization(s: &FiniteSemigroup, t: &Triangularization) -> Result<bool> {
    let name = t.field.as_str();
    if name == "Q" {
        return Ok(verify_over(s, t, &Rationals));
    }
    if let Some(e) = name.strip_prefix("Q(z").and_then(|r| r.strip_suffix(')')) {
        let e: u64 = e.parse().map_err(|_| Error::UnsupportedField(name.into()))?;
        return Ok(verify_over(s, t, &CyclotomicField::new(e)));
    }
    if let Some(q) = name.strip_prefix('F').and_then(|q| q.parse::<u64>().ok()) {
        let f = GaloisField::new(q).ok_or_else(|| Error::UnsupportedField(name.into()))?;
        return Ok(verify_over(s, t, &f));
    }
    Err(Error::UnsupportedField(name.into()))
}

fn verify_over<F: Field>(s: &FiniteSemigroup, t: &Triangularization, f: &F) -> bool {
    let lift = |m: &Vec<Vec<ExactScalar>>| -> Option<Mat<F::Elem>> {
        m.iter().map(|row| row.iter().map(|x| f.from_scalar(x)).collect()).collect()
    };
    let rep = regular_representation(s, f);
    let Some(p) = lift(&t.basis_change) else { return false };
    if p.len() != rep.dim || inverse(f, &p).is_none() || t.images.len() != s.order() {
        return false;
    }
    t.images.iter().zip(&rep.images).all(|(img, orig)| {
        lift(img).is_some_and(|m| {
            is_upper_triangular(f, &m, t.mode) && mat_mul(f, &p, orig) == mat_mul(f, &m, &p)
        })
    })
}

/// Nilpotency of the two-sided ideal generated by `spanning` in the
/// algebra spanned by the images, with its index when nilpotent.
pub fn span_ideal_nilpotent<F: Field>(
    rep: &MatrixRep<F>,
    spanning: &[Mat<F::Elem>],
) -> (bool, Option<usize>) {
    let f = &rep.field;
    let d = rep.dim;
    let flat = |m: &Mat<F::Elem>| -> Vec<F::Elem> { m.iter().flatten().cloned().collect() };
    let unflat = |v: &[F::Elem]| -> Mat<F::Elem> { v.chunks(d.max(1)).map(<[F::Elem]>::to_vec).collect() };
    let gens = rep.generator_images();
    let mut ideal = Subspace::zero(d * d);
    let mut queue: Vec<Mat<F::Elem>> = Vec::new();
    for m in spanning {
        if ideal.insert(f, &flat(m)) {
            queue.push(m.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() {
        for g in &gens {
            for prod in [mat_mul(f, &queue[i], g), mat_mul(f, g, &queue[i])] {
                if ideal.insert(f, &flat(&prod)) {
                    queue.push(prod);
                }
            }
        }
        i += 1;
    }
    let base: Vec<Mat<F::Elem>> = ideal.basis().iter().map(|v| unflat(v)).collect();
    let mut power = ideal.clone();
    let mut index = 1;
    loop {
        if power.is_zero() {
            return (true, Some(index));
        }
        if index > d {
            return (false, None);
        }
        let mut next = Subspace::zero(d * d);
        for a in power.basis() {
            let a = unflat(a);
            for b in &base {
                next.insert(f, &flat(&mat_mul(f, &a, b)));
            }
        }
        if next.dim() == power.dim() {
            return (false, None);
        }
        power = next;
        index += 1;
    }
}

/// Differences `image(s) - image(t)` over the pairs identified by `map`.
pub fn kernel_differences<F: Field>(rep: &MatrixRep<F>, map: &[usize]) -> Vec<Mat<F::Elem>> {
    let f = &rep.field;
    let mut out = Vec::new();
    for s in rep.semigroup.elements() {
        if let Some(t) = (0..s).find(|&t| map[t] == map[s]) {
            out.push(mat_sub(f, &rep.images[s], &rep.images[t]));
        }
    }
    out
}

/// Nilpotency of the image of the augmentation ideal of `KS` in the
/// regular representation over the prime field of `field`.
pub fn augmentation_ideal_nilpotent(s: &FiniteSemigroup, field: &FieldSpec) -> (bool, Option<usize>) {
    let collapse = vec![0; s.order()];
    morphism_ideal_nilpotent(s, &collapse, field)
}

/// Nilpotency of the ideal spanned by `s - t` over pairs with equal image
/// under `map`, computed over the prime field of `field`.
pub fn morphism_ideal_nilpotent(
    s: &FiniteSemigroup,
    map: &[usize],
    field: &FieldSpec,
) -> (bool, Option<usize>) {
    fn run<F: Field>(s: &FiniteSemigroup, map: &[usize], f: &F) -> (bool, Option<usize>) {
        let rep = regular_representation(s, f);
        let diffs = kernel_differences(&rep, map);
        span_ideal_nilpotent(&rep, &diffs)
    }
    match field.characteristic() {
        0 => run(s, map, &Rationals),
        p => run(s, map, &GaloisField::new(p).expect("prime")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn fq(q: u64) -> GaloisField {
        GaloisField::new(q).unwrap()
    }

    #[test]
    fn regular_representation_examples() {
        let q = Rationals;
        let t = regular_representation(&corpus::trivial(), &q);
        assert_eq!(t.images(), &[identity(&q, 1)]);
        let z2 = regular_representation(&corpus::cyclic(2), &q);
        assert_eq!(z2.image(0), &identity(&q, 2));
        assert_eq!(z2.image(1), &vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]]);
        let u1 = regular_representation(&corpus::u1(), &q);
        // Basis {e, f}; e absorbs everything.
        assert_eq!(u1.image(0), &vec![vec![q.one(), q.zero()], vec![q.one(), q.zero()]]);
        for s in corpus::curated().iter().map(|(_, s)| s) {
            regular_representation(s, &q).check_multiplicative().unwrap();
            regular_representation(s, &fq(3)).check_multiplicative().unwrap();
        }
        let b2 = regular_representation(&corpus::b2(), &q);
        assert_eq!(b2.dim(), 6);
    }

    fn blocks_of<F: Field>(rep: &MatrixRep<F>) -> Vec<usize> {
        let flag = composition_flag(rep).unwrap();
        assert!(flag.is_invariant(rep.field(), rep.images()));
        assert_eq!(flag.subspaces.last().unwrap().dim(), rep.dim());
        flag.block_sizes
    }

    #[test]
    fn composition_flag_examples() {
        let q = Rationals;
        assert_eq!(blocks_of(&regular_representation(&corpus::cyclic(2), &q)), vec![1, 1]);
        assert_eq!(blocks_of(&regular_representation(&corpus::u1(), &q)), vec![1, 1]);
        let b2 = blocks_of(&regular_representation(&corpus::b2(), &q));
        assert!(b2.iter().any(|&b| b >= 2));
        let mut s3 = blocks_of(&regular_representation(&corpus::s3(), &q));
        s3.sort();
        assert_eq!(s3, vec![1, 1, 2, 2]);
        let mut z3 = blocks_of(&regular_representation(&corpus::cyclic(3), &q));
        z3.sort();
        assert_eq!(z3, vec![1, 2]);
        assert_eq!(blocks_of(&regular_representation(&corpus::cyclic(3), &fq(4))), vec![1, 1, 1]);
        let mut s3f2 = blocks_of(&regular_representation(&corpus::s3(), &fq(2)));
        s3f2.sort();
        assert_eq!(s3f2, vec![1, 1, 2, 2]);
    }

    #[test]
    fn block_form_examples() {
        let q = Rationals;
        let z2 = regular_representation(&corpus::cyclic(2), &q);
        let single = block_form(&z2, &Flag::trivial(&q, 2)).unwrap();
        assert_eq!(single.basis_change, identity(&q, 2));
        let form = block_form(&z2, &composition_flag(&z2).unwrap()).unwrap();
        let diag = |m: &Mat<num_rational::BigRational>| vec![m[0][0].clone(), m[1][1].clone()];
        assert_eq!(diag(&form.conjugated[0]), vec![q.one(), q.one()]);
        let mut sigma = diag(&form.conjugated[1]);
        sigma.sort();
        assert_eq!(sigma, vec![q.from_int(-1), q.one()]);
        // The two-element group over Q is diagonalizable, so T2 has only
        // one-dimensional blocks.
        let t2 = regular_representation(&corpus::t2(), &q);
        let form = block_form(&t2, &composition_flag(&t2).unwrap()).unwrap();
        assert!(form.blocks.iter().all(|b| b.size == 1));
        for b in &form.blocks {
            corpus::t2().check_morphism(&b.monoid, &b.morphism).unwrap();
        }
        for m in &form.conjugated {
            assert!(is_upper_triangular(&q, m, TriangularMode::Triangular));
        }
    }

    #[test]
    fn triangularize_examples() {
        let f = |s: &str| -> FieldSpec { s.parse().unwrap() };
        for k in ["Q", "F2", "F3", "C"] {
            let t = triangularize(&corpus::u1(), &f(k), TriangularMode::Unitriangular).unwrap();
            assert_eq!(t.images.len(), 2);
        }
        let z2 = triangularize(&corpus::cyclic(2), &f("F2"), TriangularMode::Unitriangular).unwrap();
        let one = ExactScalar::Residue(1);
        let zero = ExactScalar::Residue(0);
        assert_eq!(z2.images[1], vec![vec![one.clone(), one.clone()], vec![zero, one]]);
        assert!(matches!(
            triangularize(&corpus::b2(), &f("Q"), TriangularMode::Triangular),
            Err(Error::Refusal(Witness::Quotient { .. }))
        ));
        assert!(matches!(
            triangularize(&corpus::cyclic(3), &f("Q"), TriangularMode::Triangular),
            Err(Error::Refusal(_))
        ));
        let c3 = triangularize(&corpus::cyclic(3), &f("C"), TriangularMode::Triangular).unwrap();
        assert_eq!(c3.field, "Q(z3)");
        let c3f4 = triangularize(&corpus::cyclic(3), &f("Fbar2"), TriangularMode::Triangular).unwrap();
        assert_eq!(c3f4.field, "F4");
    }

    #[test]
    fn nilpotency_examples() {
        let f2 = fq(2);
        let z2 = regular_representation(&corpus::cyclic(2), &f2);
        assert_eq!(span_ideal_nilpotent(&z2, &[]), (true, Some(1)));
        let d = mat_sub(&f2, z2.image(1), z2.image(0));
        assert_eq!(span_ideal_nilpotent(&z2, &[d]), (true, Some(2)));
        let q = Rationals;
        let u1 = regular_representation(&corpus::u1(), &q);
        let d = mat_sub(&q, u1.image(1), u1.image(0));
        assert_eq!(span_ideal_nilpotent(&u1, &[d]), (false, None));
        // (s - t)(u - v) survives when rows and columns both differ; every
        // triple product cancels.
        let band = augmentation_ideal_nilpotent(&corpus::rectangular_band(2, 2), &FieldSpec::Q);
        assert_eq!(band, (true, Some(3)));
        assert_eq!(augmentation_ideal_nilpotent(&corpus::right_zero(2), &FieldSpec::Q), (true, Some(2)));
        assert!(augmentation_ideal_nilpotent(&corpus::cyclic(4), &"F2".parse().unwrap()).0);
        assert!(!augmentation_ideal_nilpotent(&corpus::cyclic(2), &FieldSpec::Q).0);
    }
}
