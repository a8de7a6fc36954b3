//! Classical groups, their Lie algebras as matrices, generic matrices and
//! the commuting ideal.
//!
//! A [`Realization`] fixes a frame for `g`: either the defining one (the
//! orthogonal algebra is `A + A^t = 0`, the symplectic one `A^t J + J A = 0`
//! with `J = [[0, I], [-I, 0]]`), or a *split* frame `P^-1 g P` in which the
//! maximal torus is diagonal. The two frames differ only for `so_n`, where
//! the split frame needs a square root of `-1`.
//!
//! Coordinates on `g` are read off a reduced echelon basis: the coordinate of
//! a basis vector is the matrix entry at its pivot.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::{kernel_basis, LinSpace, SparseRow};
use crate::poly::{ideal_degree_component, Poly, SliceBasis};

pub type Matrix<E> = Vec<Vec<E>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    GL,
    O,
    SO,
    Sp,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::GL => "gl",
            GroupKind::O => "o",
            GroupKind::SO => "so",
            GroupKind::Sp => "sp",
        }
    }

    /// Orthogonal groups share `so_n`.
    pub fn is_orthogonal(self) -> bool {
        matches!(self, GroupKind::O | GroupKind::SO)
    }

    /// Whether `G` is connected.
    pub fn is_connected(self) -> bool {
        self != GroupKind::O
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::GL => "GL",
            GroupKind::O => "O",
            GroupKind::SO => "SO",
            GroupKind::Sp => "Sp",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(GroupKind::GL),
            "o" => Ok(GroupKind::O),
            "so" => Ok(GroupKind::SO),
            "sp" => Ok(GroupKind::Sp),
            other => Err(Error::Unsupported(format!("unknown group {other:?}"))),
        }
    }
}

/// A classical group in its defining realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: usize,
    pub lie_dim: usize,
    /// `J` for `Sp`, the identity for `O`/`SO`, none for `GL`.
    pub form: Option<Matrix<i64>>,
    /// Reduced echelon basis of `g`, as integer matrices.
    pub lie_basis: Vec<Matrix<i64>>,
    /// Pivot `(i, j)` of each basis matrix; the coordinate is that entry.
    pub pivots: Vec<(usize, usize)>,
}

pub fn group_spec(kind: GroupKind, n: usize) -> Result<GroupSpec> {
    if n < 2 {
        return Err(Error::SmallRank(n));
    }
    if kind == GroupKind::Sp && n % 2 == 1 {
        return Err(Error::OddSymplectic(n));
    }
    let q = Rationals;
    let form = form_matrix(kind, n);
    let omega = form.as_ref().map(|m| to_field(&q, m));
    let lie = solve_lie_algebra(&q, n, omega.as_ref());
    let lie_basis = lie
        .basis_dense()
        .iter()
        .map(|row| {
            (0..n)
                .map(|i| (0..n).map(|j| row[i * n + j].to_integer().to_i64().expect("small entry")).collect())
                .collect()
        })
        .collect();
    let pivots = lie.pivots().iter().map(|&c| (c / n, c % n)).collect();
    Ok(GroupSpec { kind, n, lie_dim: lie.dim(), form, lie_basis, pivots })
}

impl GroupSpec {
    /// Torus rank.
    pub fn rank(&self) -> usize {
        match self.kind {
            GroupKind::GL => self.n,
            _ => self.n / 2,
        }
    }

    /// Names `x(k)_ij` of the coordinates on `g^d`, copy-major.
    pub fn coordinate_names(&self, d: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(d * self.lie_dim);
        for k in 1..=d {
            for &(i, j) in &self.pivots {
                out.push(format!("x({k})_{}{}", i + 1, j + 1));
            }
        }
        out
    }

    pub fn label(&self) -> String {
        format!("{}_{}", self.kind, self.n)
    }
}

fn form_matrix(kind: GroupKind, n: usize) -> Option<Matrix<i64>> {
    match kind {
        GroupKind::GL => None,
        GroupKind::O | GroupKind::SO => Some(identity_i64(n)),
        GroupKind::Sp => {
            let r = n / 2;
            let mut j = vec![vec![0; n]; n];
            for i in 0..r {
                j[i][r + i] = 1;
                j[r + i][i] = -1;
            }
            Some(j)
        }
    }
}

fn identity_i64(n: usize) -> Matrix<i64> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn to_field<F: Field>(f: &F, m: &Matrix<i64>) -> Matrix<F::Elem> {
    m.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect()
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    (0..n).map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![f.zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if f.is_zero(&a[i][k]) {
                continue;
            }
            for j in 0..m {
                f.add_mul(&mut out[i][j], &a[i][k], &bk[j]);
            }
        }
    }
    out
}

pub fn mat_transpose<E: Clone>(a: &Matrix<E>) -> Matrix<E> {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// Gauss-Jordan inverse of a square matrix.
pub fn mat_inverse<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.len();
    let mut m: Vec<Vec<F::Elem>> =
        a.iter().zip(identity(f, n)).map(|(r, e)| r.iter().cloned().chain(e).collect()).collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !f.is_zero(&m[r][c]))?;
        m.swap(c, piv);
        let inv = f.inv(&m[c][c])?;
        for v in m[c].iter_mut() {
            *v = f.mul(v, &inv);
        }
        for r in 0..n {
            if r != c && !f.is_zero(&m[r][c]) {
                let s = f.neg(&m[r][c]);
                let pivot_row = m[c].clone();
                for (v, pv) in m[r].iter_mut().zip(&pivot_row) {
                    f.add_mul(v, &s, pv);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `{ Y : Y^t W + W Y = 0 }` as a reduced echelon subspace of `F^{n*n}`
/// (row-major entries); all of `M_n` when `omega` is `None`.
fn solve_lie_algebra<F: Field>(f: &F, n: usize, omega: Option<&Matrix<F::Elem>>) -> LinSpace<F> {
    let Some(w) = omega else {
        return LinSpace::full(f.clone(), n * n);
    };
    let mut rows: Vec<SparseRow<F::Elem>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // (Y^t W)_{ij} = sum_k Y_{ki} W_{kj};  (W Y)_{ij} = sum_k W_{ik} Y_{kj}
            let mut dense = vec![f.zero(); n * n];
            for k in 0..n {
                let a = &mut dense[k * n + i];
                *a = f.add(a, &w[k][j]);
                let b = &mut dense[k * n + j];
                *b = f.add(b, &w[i][k]);
            }
            rows.push(crate::linalg::sparse_from_dense(f, &dense));
        }
    }
    kernel_basis(f, &rows, n * n)
}

/// Which frame a [`Realization`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    Defining,
    Split,
}

/// A subspace of `M_n` with a coordinate basis: each basis matrix has a
/// pivot entry, and the coordinate of `Y` along it is `Y[pivot]`.
#[derive(Debug, Clone)]
pub struct MatrixSpace<E> {
    pub n: usize,
    pub basis: Vec<Matrix<E>>,
    pub pivots: Vec<(usize, usize)>,
}

impl<E: Clone> MatrixSpace<E> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, y: &Matrix<E>) -> Vec<E> {
        self.pivots.iter().map(|&(i, j)| y[i][j].clone()).collect()
    }
}

/// One entry of a Cartan parameterization: `Y[row][col] += coeff * s_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanEntry {
    pub row: usize,
    pub col: usize,
    pub var: usize,
    pub coeff: i64,
}

/// `g` in a fixed frame over a concrete field.
#[derive(Debug, Clone)]
pub struct Realization<F: Field> {
    pub field: F,
    pub spec: GroupSpec,
    pub frame: Frame,
    /// Columns are the frame vectors; `Y = P^-1 X P`.
    pub p: Matrix<F::Elem>,
    pub p_inv: Matrix<F::Elem>,
    pub lie: MatrixSpace<F::Elem>,
    pub ambient: MatrixSpace<F::Elem>,
    /// Torus weight of each frame vector; `None` when the torus is not
    /// diagonal in this frame.
    pub vector_weights: Option<Vec<Vec<i64>>>,
    pub cartan: Vec<CartanEntry>,
}

impl<F: Field> Realization<F> {
    pub fn new(field: F, spec: &GroupSpec, frame: Frame) -> Result<Self> {
        let f = &field;
        let n = spec.n;
        let r = spec.rank();
        let split_so = frame == Frame::Split && spec.kind.is_orthogonal();
        let p = if split_so {
            let i = f.sqrt_neg_one().ok_or_else(|| Error::NoSqrtMinusOne { field: f.name() })?;
            let mut p = vec![vec![f.zero(); n]; n];
            for k in 0..r {
                p[2 * k][k] = f.one();
                p[2 * k + 1][k] = i.clone();
                p[2 * k][r + k] = f.one();
                p[2 * k + 1][r + k] = f.neg(&i);
            }
            if n % 2 == 1 {
                p[n - 1][n - 1] = f.one();
            }
            p
        } else {
            identity(f, n)
        };
        let p_inv = mat_inverse(f, &p).ok_or_else(|| Error::Inconsistent(String::from("singular frame")))?;
        let omega = spec.form.as_ref().map(|w| {
            let w = to_field(f, w);
            mat_mul(f, &mat_mul(f, &mat_transpose(&p), &w), &p)
        });
        let space = solve_lie_algebra(f, n, omega.as_ref());
        if space.dim() != spec.lie_dim {
            return Err(Error::Inconsistent(format!(
                "lie algebra has dimension {} in this frame, expected {}",
                space.dim(),
                spec.lie_dim
            )));
        }
        let lie = matrix_space(f, n, &space);
        let ambient = matrix_space(f, n, &LinSpace::full(f.clone(), n * n));

        let diagonal_torus = matches!(spec.kind, GroupKind::GL | GroupKind::Sp) || split_so;
        let vector_weights = diagonal_torus.then(|| {
            (0..n)
                .map(|i| {
                    let mut w = vec![0i64; r];
                    match spec.kind {
                        GroupKind::GL => w[i] = 1,
                        _ if i < r => w[i] = 1,
                        _ if i < 2 * r => w[i - r] = -1,
                        _ => {}
                    }
                    w
                })
                .collect()
        });

        let mut cartan = Vec::new();
        match (spec.kind, split_so) {
            (GroupKind::GL, _) => {
                for k in 0..n {
                    cartan.push(CartanEntry { row: k, col: k, var: k, coeff: 1 });
                }
            }
            (GroupKind::Sp, _) | (_, true) => {
                for k in 0..r {
                    cartan.push(CartanEntry { row: k, col: k, var: k, coeff: 1 });
                    cartan.push(CartanEntry { row: r + k, col: r + k, var: k, coeff: -1 });
                }
            }
            _ => {
                for k in 0..r {
                    cartan.push(CartanEntry { row: 2 * k, col: 2 * k + 1, var: k, coeff: 1 });
                    cartan.push(CartanEntry { row: 2 * k + 1, col: 2 * k, var: k, coeff: -1 });
                }
            }
        }

        let real = Self { field, spec: spec.clone(), frame, p, p_inv, lie, ambient, vector_weights, cartan };
        if let Some(w) = &real.vector_weights {
            for (b, m) in real.lie.basis.iter().enumerate() {
                let (pi, pj) = real.lie.pivots[b];
                let target = sub_weights(&w[pi], &w[pj]);
                for i in 0..n {
                    for j in 0..n {
                        if !real.field.is_zero(&m[i][j]) && sub_weights(&w[i], &w[j]) != target {
                            return Err(Error::Inconsistent(String::from("lie basis is not weight-homogeneous")));
                        }
                    }
                }
            }
        }
        Ok(real)
    }

    /// The defining frame.
    pub fn defining(field: F, spec: &GroupSpec) -> Result<Self> {
        Self::new(field, spec, Frame::Defining)
    }

    /// The frame in which the torus is diagonal.
    pub fn split(field: F, spec: &GroupSpec) -> Result<Self> {
        Self::new(field, spec, Frame::Split)
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn lie_dim(&self) -> usize {
        self.lie.dim()
    }

    /// Weight of a basis vector of `space`, from its pivot.
    pub fn basis_weight(&self, space: &MatrixSpace<F::Elem>, b: usize) -> Option<Vec<i64>> {
        let w = self.vector_weights.as_ref()?;
        let (i, j) = space.pivots[b];
        Some(sub_weights(&w[i], &w[j]))
    }

    /// Torus weights of the coordinate functions of `space` (the negated
    /// weights of the basis vectors).
    pub fn coordinate_weights(&self, space: &MatrixSpace<F::Elem>) -> Result<Vec<Vec<i64>>> {
        (0..space.dim())
            .map(|b| {
                self.basis_weight(space, b)
                    .map(|w| w.iter().map(|x| -x).collect())
                    .ok_or_else(|| Error::NoSqrtMinusOne { field: self.field.name() })
            })
            .collect()
    }

    /// Nonzero-weight basis vectors of `g`, paired with their weights.
    pub fn root_vectors(&self) -> Result<Vec<(Vec<i64>, Matrix<F::Elem>)>> {
        let mut out = Vec::new();
        for b in 0..self.lie.dim() {
            let w =
                self.basis_weight(&self.lie, b).ok_or_else(|| Error::NoSqrtMinusOne { field: self.field.name() })?;
            if w.iter().any(|&x| x != 0) {
                let e = self.lie.basis[b].clone();
                let e3 = mat_mul(&self.field, &mat_mul(&self.field, &e, &e), &e);
                if e3.iter().flatten().any(|v| !self.field.is_zero(v)) {
                    return Err(Error::Inconsistent(String::from("root vector with e^3 != 0")));
                }
                out.push((w, e));
            }
        }
        Ok(out)
    }

    /// Generic matrices over `g` (intrinsic) or `M_n` (ambient), `d` copies.
    pub fn generic_matrices(&self, d: usize, ambient: bool) -> GenericMatrices<F::Elem> {
        let space = if ambient { &self.ambient } else { &self.lie };
        generic_over(&self.field, space, d)
    }

    /// The Cartan subalgebra of `g` as a `rank`-parameter matrix, entries
    /// given in `s_0..s_{rank-1}`.
    pub fn cartan_matrix(&self, nvars: usize, offset: usize) -> Matrix<Poly<F::Elem>> {
        let f = &self.field;
        let n = self.n();
        let mut m = vec![vec![Poly::zero(nvars); n]; n];
        for e in &self.cartan {
            let term = Poly::var(f, nvars, offset + e.var).scale(f, &f.from_i64(e.coeff));
            m[e.row][e.col] = m[e.row][e.col].add(f, &term);
        }
        m
    }

    /// Substitution `g^d -> t^d`: a polynomial in the `d * lie_dim`
    /// coordinates becomes a polynomial in `d * rank` Cartan coordinates.
    pub fn restrict_to_cartan(&self, poly: &Poly<F::Elem>, d: usize) -> Result<Poly<F::Elem>> {
        let assignment = self.cartan_assignment(d);
        poly.substitute(&self.field, &assignment)
    }

    /// Image of each `g^d` coordinate under restriction to `t^d`.
    pub fn cartan_assignment(&self, d: usize) -> Vec<Poly<F::Elem>> {
        let r = self.rank();
        let mut out = Vec::with_capacity(d * self.lie_dim());
        for l in 0..d {
            let c = self.cartan_matrix(d * r, l * r);
            for &(i, j) in &self.lie.pivots {
                out.push(c[i][j].clone());
            }
        }
        out
    }

    /// `x(t) = I + t e + t^2 e^2 / 2`, as coefficient matrices of `1, t, t^2`.
    pub fn root_subgroup(&self, e: &Matrix<F::Elem>) -> [Matrix<F::Elem>; 3] {
        let f = &self.field;
        let half = f.inv(&f.from_i64(2)).expect("odd characteristic");
        let e2 = mat_mul(f, e, e);
        let e2h = e2.iter().map(|r| r.iter().map(|v| f.mul(v, &half)).collect()).collect();
        [identity(f, self.n()), e.clone(), e2h]
    }

    /// The reflection `diag(-1, 1, ..., 1)` of `O_n`, in this frame.
    pub fn reflection(&self) -> Matrix<F::Elem> {
        let f = &self.field;
        let mut d = identity(f, self.n());
        d[0][0] = f.neg(&f.one());
        mat_mul(f, &mat_mul(f, &self.p_inv, &d), &self.p)
    }

    /// Move a defining-frame matrix into this frame.
    pub fn to_frame(&self, x: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let f = &self.field;
        mat_mul(f, &mat_mul(f, &self.p_inv, x), &self.p)
    }
}

fn sub_weights(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn matrix_space<F: Field>(f: &F, n: usize, space: &LinSpace<F>) -> MatrixSpace<F::Elem> {
    let basis =
        space.basis_dense().into_iter().map(|row| (0..n).map(|i| row[i * n..(i + 1) * n].to_vec()).collect()).collect();
    let _ = f;
    let pivots = space.pivots().iter().map(|&c| (c / n, c % n)).collect();
    MatrixSpace { n, basis, pivots }
}

/// `d` generic matrices: entry `(i, j)` of copy `k` is a linear form in the
/// coordinates of copy `k`.
#[derive(Debug, Clone)]
pub struct GenericMatrices<E> {
    pub n: usize,
    pub d: usize,
    pub nvars: usize,
    pub matrices: Vec<Matrix<Poly<E>>>,
}

fn generic_over<F: Field>(f: &F, space: &MatrixSpace<F::Elem>, d: usize) -> GenericMatrices<F::Elem> {
    let n = space.n;
    let dim = space.dim();
    let nvars = d * dim;
    let mut matrices = Vec::with_capacity(d);
    for l in 0..d {
        let mut m = vec![vec![Poly::zero(nvars); n]; n];
        for (b, basis) in space.basis.iter().enumerate() {
            let v = l * dim + b;
            for i in 0..n {
                for j in 0..n {
                    if !f.is_zero(&basis[i][j]) {
                        let term = Poly::var(f, nvars, v).scale(f, &basis[i][j]);
                        m[i][j] = m[i][j].add(f, &term);
                    }
                }
            }
        }
        matrices.push(m);
    }
    GenericMatrices { n, d, nvars, matrices }
}

/// Generic matrices for `spec` in the defining frame.
pub fn generic_matrices<F: Field>(
    field: F,
    spec: &GroupSpec,
    d: usize,
    ambient: bool,
) -> Result<GenericMatrices<F::Elem>> {
    Ok(Realization::defining(field, spec)?.generic_matrices(d, ambient))
}

fn poly_mat_mul<F: Field>(
    f: &F,
    a: &Matrix<Poly<F::Elem>>,
    b: &Matrix<Poly<F::Elem>>,
    nvars: usize,
) -> Matrix<Poly<F::Elem>> {
    let n = a.len();
    let mut out = vec![vec![Poly::zero(nvars); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Poly::zero(nvars);
            for k in 0..n {
                if a[i][k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                acc = acc.add(f, &a[i][k].mul(f, &b[k][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

/// All entries of `[X_k, X_l]` for `k < l`, unreduced (`n^2` per pair).
pub fn commutator_generators<F: Field>(f: &F, mats: &GenericMatrices<F::Elem>) -> Vec<Poly<F::Elem>> {
    let mut out = Vec::new();
    for k in 0..mats.d {
        for l in k + 1..mats.d {
            let ab = poly_mat_mul(f, &mats.matrices[k], &mats.matrices[l], mats.nvars);
            let ba = poly_mat_mul(f, &mats.matrices[l], &mats.matrices[k], mats.nvars);
            for i in 0..mats.n {
                for j in 0..mats.n {
                    out.push(ab[i][j].sub(f, &ba[i][j]));
                }
            }
        }
    }
    out
}

/// Linear generators of `I'` in the ambient coordinates `x(k)_ij`.
pub fn lie_constraints<F: Field>(f: &F, spec: &GroupSpec, d: usize) -> Vec<Poly<F::Elem>> {
    let n = spec.n;
    let Some(form) = &spec.form else {
        return Vec::new();
    };
    let w = to_field(f, form);
    let nvars = d * n * n;
    let mut out = Vec::new();
    for l in 0..d {
        let x = |i: usize, j: usize| Poly::var(f, nvars, l * n * n + i * n + j);
        for i in 0..n {
            for j in 0..n {
                let mut p = Poly::zero(nvars);
                for k in 0..n {
                    p = p.add(f, &x(k, i).scale(f, &w[k][j]));
                    p = p.add(f, &x(k, j).scale(f, &w[i][k]));
                }
                out.push(p);
            }
        }
    }
    out
}

/// Degree-`m` slice of `Ibar` inside `Rbar_m`, in the given realization.
pub fn ibar_in<F: Field>(real: &Realization<F>, d: usize, m: u32) -> Result<(SliceBasis, LinSpace<F>)> {
    let mats = real.generic_matrices(d, false);
    let gens = commutator_generators(&real.field, &mats);
    ideal_degree_component(&real.field, &gens, m, mats.nvars)
}

/// Degree-`m` slice of `Ibar` in the defining frame.
pub fn ibar_component<F: Field>(field: F, spec: &GroupSpec, d: usize, m: u32) -> Result<LinSpace<F>> {
    let real = Realization::defining(field, spec)?;
    Ok(ibar_in(&real, d, m)?.1)
}

/// `dim K[c^d_g]_m = dim Rbar_m - dim Ibar_m`.
pub fn commuting_hilbert<F: Field>(field: F, spec: &GroupSpec, d: usize, m: u32) -> Result<usize> {
    let real = Realization::defining(field, spec)?;
    let (slice, ibar) = ibar_in(&real, d, m)?;
    Ok(slice.len() - ibar.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, QuadraticField};
    use crate::linalg::rank;

    fn span_dim<F: Field>(f: &F, polys: &[Poly<F::Elem>], nvars: usize, m: u32) -> usize {
        let slice = SliceBasis::new(nvars, m);
        let rows: Vec<_> = polys.iter().map(|p| slice.coords(p).unwrap()).collect();
        rank(f, &rows, slice.len())
    }

    #[test]
    fn lie_dimensions() {
        assert_eq!(group_spec(GroupKind::GL, 2).unwrap().lie_dim, 4);
        assert_eq!(group_spec(GroupKind::SO, 3).unwrap().lie_dim, 3);
        assert_eq!(group_spec(GroupKind::Sp, 4).unwrap().lie_dim, 10);
        assert_eq!(group_spec(GroupKind::Sp, 3), Err(Error::OddSymplectic(3)));
        for n in 2..6 {
            assert_eq!(group_spec(GroupKind::O, n).unwrap().lie_dim, n * (n - 1) / 2);
        }
    }

    #[test]
    fn lie_basis_satisfies_constraints() {
        for (kind, n) in [(GroupKind::SO, 3), (GroupKind::SO, 4), (GroupKind::Sp, 4), (GroupKind::Sp, 2)] {
            let spec = group_spec(kind, n).unwrap();
            let w = spec.form.clone().unwrap();
            for b in &spec.lie_basis {
                for i in 0..n {
                    for j in 0..n {
                        let s: i64 = (0..n).map(|k| b[k][i] * w[k][j] + w[i][k] * b[k][j]).sum();
                        assert_eq!(s, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn so2_intrinsic_matrix_is_antisymmetric() {
        let f = PrimeField::new(7).unwrap();
        let spec = group_spec(GroupKind::SO, 2).unwrap();
        let g = generic_matrices(f, &spec, 1, false).unwrap();
        assert_eq!(g.nvars, 1);
        let a = Poly::var(&f, 1, 0);
        assert!(g.matrices[0][0][0].is_zero());
        assert_eq!(g.matrices[0][0][1], a);
        assert_eq!(g.matrices[0][1][0], a.neg(&f));
        assert_eq!(generic_matrices(f, &spec, 2, true).unwrap().nvars, 8);
    }

    #[test]
    fn commutator_span_dimensions() {
        let f = PrimeField::new(7).unwrap();
        let spec = group_spec(GroupKind::GL, 2).unwrap();
        let g1 = generic_matrices(f, &spec, 1, true).unwrap();
        assert!(commutator_generators(&f, &g1).is_empty());
        let g2 = generic_matrices(f, &spec, 2, true).unwrap();
        let e2 = commutator_generators(&f, &g2);
        assert_eq!(e2.len(), 4);
        assert_eq!(span_dim(&f, &e2, 8, 2), 3);
        let g3 = generic_matrices(f, &spec, 3, true).unwrap();
        let e3 = commutator_generators(&f, &g3);
        assert_eq!(e3.len(), 12);
        assert_eq!(span_dim(&f, &e3, 12, 2), 9);
    }

    #[test]
    fn constraint_spans() {
        let f = PrimeField::new(7).unwrap();
        let so2 = group_spec(GroupKind::SO, 2).unwrap();
        assert_eq!(span_dim(&f, &lie_constraints(&f, &so2, 1), 4, 1), 3);
        let sp2 = group_spec(GroupKind::Sp, 2).unwrap();
        assert_eq!(span_dim(&f, &lie_constraints(&f, &sp2, 1), 4, 1), 1);
        let gl = group_spec(GroupKind::GL, 3).unwrap();
        assert!(lie_constraints(&f, &gl, 2).is_empty());
    }

    #[test]
    fn hilbert_examples() {
        let f = PrimeField::new(7).unwrap();
        let gl2 = group_spec(GroupKind::GL, 2).unwrap();
        assert_eq!(ibar_component(f, &gl2, 2, 1).unwrap().dim(), 0);
        assert_eq!(ibar_component(f, &gl2, 2, 2).unwrap().dim(), 3);
        assert_eq!(ibar_component(f, &gl2, 1, 3).unwrap().dim(), 0);
        assert_eq!(commuting_hilbert(f, &gl2, 2, 0).unwrap(), 1);
        assert_eq!(commuting_hilbert(f, &gl2, 2, 1).unwrap(), 8);
        assert_eq!(commuting_hilbert(f, &gl2, 2, 2).unwrap(), 33);
    }

    #[test]
    fn split_frame_diagonalizes_the_orthogonal_torus() {
        let f = QuadraticField::new(7).unwrap();
        for n in [2, 3, 4, 5] {
            let spec = group_spec(GroupKind::SO, n).unwrap();
            let real = Realization::split(f, &spec).unwrap();
            let roots = real.root_vectors().unwrap();
            let r = n / 2;
            let expected = if n % 2 == 0 { 2 * r * (r - 1) } else { 2 * r * r };
            assert_eq!(roots.len(), expected, "n={n}");
        }
        let p7 = PrimeField::new(7).unwrap();
        let spec = group_spec(GroupKind::SO, 3).unwrap();
        assert!(matches!(Realization::split(p7, &spec), Err(Error::NoSqrtMinusOne { .. })));
    }

    #[test]
    fn hilbert_is_frame_independent() {
        let f = PrimeField::new(13).unwrap();
        for n in [3, 4] {
            let spec = group_spec(GroupKind::SO, n).unwrap();
            let a = Realization::defining(f, &spec).unwrap();
            let b = Realization::split(f, &spec).unwrap();
            for m in 0..4 {
                assert_eq!(ibar_in(&a, 2, m).unwrap().1.dim(), ibar_in(&b, 2, m).unwrap().1.dim());
            }
        }
    }

    #[test]
    fn cartan_restriction_examples() {
        let f = PrimeField::new(13).unwrap();
        let trace_sq = |real: &Realization<PrimeField>| {
            let g = real.generic_matrices(1, false);
            let x2 = poly_mat_mul(&f, &g.matrices[0], &g.matrices[0], g.nvars);
            let mut t = Poly::zero(g.nvars);
            for i in 0..real.n() {
                t = t.add(&f, &x2[i][i]);
            }
            real.restrict_to_cartan(&t, 1).unwrap()
        };
        let sp2 = Realization::defining(f, &group_spec(GroupKind::Sp, 2).unwrap()).unwrap();
        let a = Poly::var(&f, 1, 0);
        assert_eq!(trace_sq(&sp2), a.mul(&f, &a).scale(&f, &2));
        let so3 = Realization::defining(f, &group_spec(GroupKind::SO, 3).unwrap()).unwrap();
        assert_eq!(trace_sq(&so3), a.mul(&f, &a).scale(&f, &f.from_i64(-2)));
        let gl2 = Realization::defining(f, &group_spec(GroupKind::GL, 2).unwrap()).unwrap();
        let s0 = Poly::var(&f, 2, 0);
        let s1 = Poly::var(&f, 2, 1);
        assert_eq!(trace_sq(&gl2), s0.mul(&f, &s0).add(&f, &s1.mul(&f, &s1)));
    }
}
