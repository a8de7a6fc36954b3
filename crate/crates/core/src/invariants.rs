//! Invariants of the classical groups and of their Weyl groups.
//!
//! Torus invariance is weight zero. Invariance under a root subgroup
//! `x(t) = I + t e + t^2 e^2 / 2` is an identity in the formal parameter `t`,
//! so every coefficient of `t^k` gives exact linear conditions. Since `G` is
//! generated by its torus and root subgroups (plus one reflection for `O_n`),
//! the joint kernel is `M^G`. All of this runs in the split frame, where the
//! torus is diagonal and coordinates are weight vectors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{combine, left_kernel, LinSpace, SparseRow};
use crate::poly::{Monomial, Poly, SliceBasis};
use crate::scheme::{mat_inverse, mat_mul, GroupKind, GroupSpec, Matrix, MatrixSpace, Realization};

/// Which graded slice the group acts on.
#[derive(Debug)]
pub enum ModuleSlice<'a, F: Field> {
    /// `Rbar_m = K[g^d]_m`.
    Free,
    /// `Rbar_m / Ibar_m`, with `Ibar_m` given in the same frame and slice.
    Quotient(&'a LinSpace<F>),
    /// `R_m = K[M_n^d]_m`.
    Ambient,
}

impl<F: Field> Clone for ModuleSlice<'_, F> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<F: Field> Copy for ModuleSlice<'_, F> {}

impl<F: Field> ModuleSlice<'_, F> {
    fn ambient(&self) -> bool {
        matches!(self, ModuleSlice::Ambient)
    }

    fn ibar(&self) -> Option<&LinSpace<F>> {
        match self {
            ModuleSlice::Quotient(i) => Some(i),
            _ => None,
        }
    }
}

/// A finite group acting linearly on `t`, given by integer generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylAction {
    pub rank: usize,
    pub generators: Vec<Matrix<i64>>,
    pub order: usize,
}

fn permutation_matrix(r: usize, a: usize, b: usize) -> Matrix<i64> {
    let mut m: Matrix<i64> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    m.swap(a, b);
    m
}

/// `s_k -> -s_k` for every `k` in `which`.
pub fn sign_change(r: usize, which: &[usize]) -> Matrix<i64> {
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i != j {
                        0
                    } else if which.contains(&i) {
                        -1
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul_i64(a: &Matrix<i64>, b: &Matrix<i64>) -> Matrix<i64> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Order of the group generated by `gens`, by breadth-first closure.
pub fn closure_order(r: usize, gens: &[Matrix<i64>]) -> usize {
    let id = sign_change(r, &[]);
    let mut seen: BTreeSet<Matrix<i64>> = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh = mat_mul_i64(&g, h);
            if seen.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    seen.len()
}

impl WeylAction {
    pub fn new(rank: usize, generators: Vec<Matrix<i64>>) -> Self {
        let order = closure_order(rank, &generators);
        Self { rank, generators, order }
    }
}

/// Weyl group of `spec` acting on the Cartan coordinates.
pub fn weyl_generators(spec: &GroupSpec) -> WeylAction {
    let r = spec.rank();
    let mut gens: Vec<Matrix<i64>> = (0..r.saturating_sub(1)).map(|i| permutation_matrix(r, i, i + 1)).collect();
    match spec.kind {
        GroupKind::GL => {}
        GroupKind::Sp | GroupKind::O => gens.push(sign_change(r, &[r - 1])),
        GroupKind::SO if spec.n % 2 == 1 => gens.push(sign_change(r, &[r - 1])),
        GroupKind::SO => {
            if r >= 2 {
                gens.push(sign_change(r, &[r - 2, r - 1]));
            }
        }
    }
    WeylAction::new(r, gens)
}

/// Image of each variable of `K[t^d]` under `g`, acting on every copy.
fn weyl_assignment<F: Field>(f: &F, g: &Matrix<i64>, d: usize) -> Vec<Poly<F::Elem>> {
    let r = g.len();
    let nvars = d * r;
    let mut out = Vec::with_capacity(nvars);
    for l in 0..d {
        for row in g {
            let mut p = Poly::zero(nvars);
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    p = p.add(f, &Poly::var(f, nvars, l * r + j).scale(f, &f.from_i64(c)));
                }
            }
            out.push(p);
        }
    }
    out
}

/// Apply a linear substitution to a vector of the degree-`m` slice.
pub fn substitute_row<F: Field>(
    f: &F,
    slice: &SliceBasis,
    row: &[(usize, F::Elem)],
    assignment: &[Poly<F::Elem>],
) -> Result<SparseRow<F::Elem>> {
    let p = slice.poly(f, row);
    slice.coords(&p.substitute(f, assignment)?)
}

/// Fixed vectors of a finite group in `K[t^d]_m`: the kernel of the stacked
/// `g - id`.
pub fn finite_invariants<F: Field>(f: &F, action: &WeylAction, d: usize, m: u32) -> Result<LinSpace<F>> {
    let slice = SliceBasis::new(d * action.rank, m);
    let mut cands = LinSpace::full(f.clone(), slice.len());
    for g in &action.generators {
        let assignment = weyl_assignment(f, g, d);
        let rows: Vec<SparseRow<F::Elem>> = cands
            .basis()
            .iter()
            .map(|v| {
                let img = substitute_row(f, &slice, v, &assignment)?;
                let neg: SparseRow<F::Elem> = v.iter().map(|(c, x)| (*c, f.neg(x))).collect();
                Ok(crate::linalg::add_scaled(f, &img, &f.one(), &neg))
            })
            .collect::<Result<_>>()?;
        cands = restrict_to_kernel(f, &cands, &rows, slice.len());
    }
    Ok(cands)
}

/// Image of a subspace under a Weyl element, on `K[t^d]_m`.
pub fn weyl_apply<F: Field>(
    f: &F,
    g: &Matrix<i64>,
    d: usize,
    m: u32,
    row: &[(usize, F::Elem)],
) -> Result<SparseRow<F::Elem>> {
    let slice = SliceBasis::new(d * g.len(), m);
    substitute_row(f, &slice, row, &weyl_assignment(f, g, d))
}

/// `{ sum c_i v_i : sum c_i cond_i = 0 }` for the basis `v_i` of `space`.
fn restrict_to_kernel<F: Field>(
    f: &F,
    space: &LinSpace<F>,
    conditions: &[SparseRow<F::Elem>],
    ncols: usize,
) -> LinSpace<F> {
    let combos = left_kernel(f, conditions, ncols);
    let rows: Vec<SparseRow<F::Elem>> = combos.iter().map(|c| combine(f, c, space.basis(), space.ambient())).collect();
    LinSpace::from_rows(f.clone(), space.ambient(), rows.iter())
}

fn check_characteristic<F: Field>(real: &Realization<F>) -> Result<()> {
    let p = real.field.characteristic();
    if p != 0 && p <= real.n() as u64 {
        return Err(Error::CharacteristicTooSmall { p, n: real.n() });
    }
    Ok(())
}

fn weight_space<F: Field>(real: &Realization<F>, ambient: bool) -> &MatrixSpace<F::Elem> {
    if ambient {
        &real.ambient
    } else {
        &real.lie
    }
}

/// Torus weight of every variable of the `d`-fold coordinate ring.
pub fn variable_weights<F: Field>(real: &Realization<F>, d: usize, ambient: bool) -> Result<Vec<Vec<i64>>> {
    let w = real.coordinate_weights(weight_space(real, ambient))?;
    Ok((0..d).flat_map(|_| w.iter().cloned()).collect())
}

pub fn monomial_weight(weights: &[Vec<i64>], m: &Monomial) -> Vec<i64> {
    let r = weights.first().map_or(0, |w| w.len());
    let mut out = vec![0i64; r];
    for (v, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            for (o, w) in out.iter_mut().zip(&weights[v]) {
                *o += w * e as i64;
            }
        }
    }
    out
}

/// Columns of the slice that span the module: all monomials, or the
/// standard monomials modulo `Ibar_m`.
fn module_columns<F: Field>(slice: &SliceBasis, module: &ModuleSlice<'_, F>) -> Vec<usize> {
    match module.ibar() {
        Some(ibar) => ibar.standard_columns(),
        None => (0..slice.len()).collect(),
    }
}

/// Weight-zero part of the module slice, as unit vectors.
pub fn torus_weight_zero<F: Field>(
    real: &Realization<F>,
    d: usize,
    m: u32,
    module: ModuleSlice<'_, F>,
) -> Result<LinSpace<F>> {
    let weights = variable_weights(real, d, module.ambient())?;
    let slice = SliceBasis::new(weights.len(), m);
    let axes: Vec<usize> = module_columns(&slice, &module)
        .into_iter()
        .filter(|&c| monomial_weight(&weights, slice.monomial(c)).iter().all(|&x| x == 0))
        .collect();
    Ok(LinSpace::from_axes(real.field.clone(), slice.len(), &axes))
}

/// The diagonal action `Y -> A(t) Y B(t)` on coordinates, where `A` and `B`
/// are polynomials in `t` with matrix coefficients.
#[derive(Debug, Clone)]
pub struct CoordAction<E> {
    nvars: usize,
    /// `images[v]` is a polynomial in the `nvars` coordinates and `t`
    /// (the last variable).
    images: Vec<Poly<E>>,
}

impl<E: Clone + PartialEq> CoordAction<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, space: &MatrixSpace<E>, d: usize, a: &[Matrix<E>], b: &[Matrix<E>]) -> Self {
        let dim = space.dim();
        let nvars = d * dim;
        let tv = nvars;
        // coefficient of t^k y_b in the coordinate a of A(t) Y B(t)
        let mut table: Vec<Vec<(u16, usize, E)>> = vec![Vec::new(); dim];
        for (bi, basis) in space.basis.iter().enumerate() {
            for (k1, ak) in a.iter().enumerate() {
                let left = mat_mul(f, ak, basis);
                for (k2, bk) in b.iter().enumerate() {
                    let full = mat_mul(f, &left, bk);
                    for (ai, &(pi, pj)) in space.pivots.iter().enumerate() {
                        if !f.is_zero(&full[pi][pj]) {
                            table[ai].push(((k1 + k2) as u16, bi, full[pi][pj].clone()));
                        }
                    }
                }
            }
        }
        let mut images = Vec::with_capacity(nvars);
        for l in 0..d {
            for entries in &table {
                let mut p = Poly::zero(nvars + 1);
                for (k, bi, c) in entries {
                    let mut exps = vec![0u16; nvars + 1];
                    exps[l * dim + bi] = 1;
                    exps[tv] = *k;
                    p.add_term(f, Monomial::from_exponents(exps), c);
                }
                images.push(p);
            }
        }
        Self { nvars, images }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

/// Memoized images of monomials under a [`CoordAction`].
struct ImageCache<'a, F: Field> {
    f: &'a F,
    action: &'a CoordAction<F::Elem>,
    memo: BTreeMap<Monomial, Poly<F::Elem>>,
}

impl<'a, F: Field> ImageCache<'a, F> {
    fn new(f: &'a F, action: &'a CoordAction<F::Elem>) -> Self {
        Self { f, action, memo: BTreeMap::new() }
    }

    fn image(&mut self, m: &Monomial) -> Poly<F::Elem> {
        if let Some(p) = self.memo.get(m) {
            return p.clone();
        }
        let img = match m.last_var() {
            None => Poly::constant(self.f, self.action.nvars + 1, self.f.one()),
            Some(v) => {
                let rest = m.div_var(v).expect("divides");
                let base = self.image(&rest);
                base.mul(self.f, &self.action.images[v])
            }
        };
        self.memo.insert(m.clone(), img.clone());
        img
    }

    /// `f(A Y B)` split by powers of `t`: `t^k -> coordinates in the slice`.
    fn apply(&mut self, slice: &SliceBasis, row: &[(usize, F::Elem)]) -> BTreeMap<u16, BTreeMap<usize, F::Elem>> {
        let f = self.f;
        let nv = self.action.nvars;
        let mut out: BTreeMap<u16, BTreeMap<usize, F::Elem>> = BTreeMap::new();
        for (c, coef) in row {
            let img = self.image(slice.monomial(*c));
            for (mono, v) in img.terms() {
                let exps = mono.exponents();
                let k = exps[nv];
                let base = Monomial::from_exponents(exps[..nv].to_vec());
                let idx = slice.index_of(&base).expect("image stays in the slice");
                let slot = out.entry(k).or_default().entry(idx).or_insert_with(|| f.zero());
                f.add_mul(slot, coef, v);
            }
        }
        out
    }
}

fn sparse_of<F: Field>(f: &F, m: BTreeMap<usize, F::Elem>) -> SparseRow<F::Elem> {
    m.into_iter().filter(|(_, v)| !f.is_zero(v)).collect()
}

/// Shrink `cands` to the vectors fixed by `action` on the module slice.
fn impose<F: Field>(
    f: &F,
    slice: &SliceBasis,
    cands: &LinSpace<F>,
    action: &CoordAction<F::Elem>,
    ibar: Option<&LinSpace<F>>,
) -> LinSpace<F> {
    if cands.dim() == 0 {
        return cands.clone();
    }
    let mut cache = ImageCache::new(f, action);
    let mut columns: BTreeMap<(u16, usize), usize> = BTreeMap::new();
    let mut raw: Vec<Vec<((u16, usize), F::Elem)>> = Vec::with_capacity(cands.dim());
    for v in cands.basis() {
        let mut parts = cache.apply(slice, v);
        let zero = parts.entry(0).or_default();
        for (c, x) in v {
            let slot = zero.entry(*c).or_insert_with(|| f.zero());
            *slot = f.sub(slot, x);
        }
        let mut cond = Vec::new();
        for (k, coeffs) in parts {
            let mut part = sparse_of(f, coeffs);
            if let Some(i) = ibar {
                part = i.reduce(&part);
            }
            for (c, x) in part {
                cond.push(((k, c), x));
            }
        }
        for (key, _) in &cond {
            let next = columns.len();
            columns.entry(*key).or_insert(next);
        }
        raw.push(cond);
    }
    let rows: Vec<SparseRow<F::Elem>> = raw
        .into_iter()
        .map(|cond| {
            let mut r: SparseRow<F::Elem> = cond.into_iter().map(|(key, x)| (columns[&key], x)).collect();
            r.sort_by_key(|(c, _)| *c);
            r
        })
        .collect();
    restrict_to_kernel(f, cands, &rows, columns.len())
}

/// The actions that generate `G` together with the torus.
pub fn generating_actions<F: Field>(
    real: &Realization<F>,
    d: usize,
    ambient: bool,
) -> Result<Vec<CoordAction<F::Elem>>> {
    let f = &real.field;
    let space = weight_space(real, ambient);
    let mut out = Vec::new();
    for (_, e) in real.root_vectors()? {
        let fwd = real.root_subgroup(&e);
        let neg_e: Matrix<F::Elem> = e.iter().map(|r| r.iter().map(|v| f.neg(v)).collect()).collect();
        let back = real.root_subgroup(&neg_e);
        out.push(CoordAction::new(f, space, d, &fwd, &back));
    }
    if real.spec.kind == GroupKind::O {
        out.push(reflection_action(real, d, ambient)?);
    }
    Ok(out)
}

/// Conjugation by the reflection of `O_n` on coordinates.
pub fn reflection_action<F: Field>(real: &Realization<F>, d: usize, ambient: bool) -> Result<CoordAction<F::Elem>> {
    let g = real.reflection();
    let gi = mat_inverse(&real.field, &g).ok_or_else(|| Error::Inconsistent(String::from("singular reflection")))?;
    Ok(CoordAction::new(&real.field, weight_space(real, ambient), d, &[g], &[gi]))
}

/// Image of a module vector under a `t`-free action, in normal form.
pub fn apply_constant<F: Field>(
    f: &F,
    slice: &SliceBasis,
    action: &CoordAction<F::Elem>,
    row: &[(usize, F::Elem)],
    ibar: Option<&LinSpace<F>>,
) -> Result<SparseRow<F::Elem>> {
    let mut cache = ImageCache::new(f, action);
    let mut parts = cache.apply(slice, row);
    if parts.keys().any(|&k| k != 0) {
        return Err(Error::Inconsistent(String::from("action depends on t")));
    }
    let part = sparse_of(f, parts.remove(&0).unwrap_or_default());
    Ok(match ibar {
        Some(i) => i.reduce(&part),
        None => part,
    })
}

/// `M^G` for the module slice of degree `m`, as a subspace of the monomial
/// slice (supported on standard monomials in the quotient case).
pub fn group_invariants<F: Field>(
    real: &Realization<F>,
    d: usize,
    m: u32,
    module: ModuleSlice<'_, F>,
) -> Result<LinSpace<F>> {
    check_characteristic(real)?;
    let f = &real.field;
    let mut cands = torus_weight_zero(real, d, m, module)?;
    let nvars = d * weight_space(real, module.ambient()).dim();
    let slice = SliceBasis::new(nvars, m);
    for action in generating_actions(real, d, module.ambient())? {
        cands = impose(f, &slice, &cands, &action, module.ibar());
        if cands.dim() == 0 {
            break;
        }
    }
    Ok(cands)
}

/// Invariants of the connected group `SO_n` even when `real` describes
/// `O_n`.
pub fn connected_invariants<F: Field>(
    real: &Realization<F>,
    d: usize,
    m: u32,
    module: ModuleSlice<'_, F>,
) -> Result<LinSpace<F>> {
    if real.spec.kind != GroupKind::O {
        return group_invariants(real, d, m, module);
    }
    let mut so = real.clone();
    so.spec.kind = GroupKind::SO;
    group_invariants(&so, d, m, module)
}

/// The `+1` and `-1` eigenspaces of an involution on `space`.
pub fn eigen_split<F, G>(space: &LinSpace<F>, mut sigma: G) -> Result<(LinSpace<F>, LinSpace<F>)>
where
    F: Field,
    G: FnMut(&SparseRow<F::Elem>) -> Result<SparseRow<F::Elem>>,
{
    let f = space.field();
    if f.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let one = f.one();
    let minus = f.neg(&one);
    let mut plus_rows = Vec::with_capacity(space.dim());
    let mut minus_rows = Vec::with_capacity(space.dim());
    for v in space.basis() {
        let s = sigma(v)?;
        if !space.contains(&s) || sigma(&s)? != *v {
            return Err(Error::NotInvolution);
        }
        plus_rows.push(crate::linalg::add_scaled(f, v, &one, &s));
        minus_rows.push(crate::linalg::add_scaled(f, v, &minus, &s));
    }
    let plus = LinSpace::from_rows(f.clone(), space.ambient(), plus_rows.iter());
    let minus = LinSpace::from_rows(f.clone(), space.ambient(), minus_rows.iter());
    if plus.dim() + minus.dim() != space.dim() {
        return Err(Error::Inconsistent(format!(
            "eigenspaces of dims {} + {} do not fill {}",
            plus.dim(),
            minus.dim(),
            space.dim()
        )));
    }
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, QuadraticField};
    use crate::scheme::{group_spec, ibar_in};

    fn split(kind: GroupKind, n: usize, p: u64) -> Realization<QuadraticField> {
        Realization::split(QuadraticField::new(p).unwrap(), &group_spec(kind, n).unwrap()).unwrap()
    }

    #[test]
    fn weyl_orders() {
        let order = |k, n| weyl_generators(&group_spec(k, n).unwrap()).order;
        assert_eq!(order(GroupKind::GL, 2), 2);
        assert_eq!(order(GroupKind::GL, 3), 6);
        assert_eq!(order(GroupKind::Sp, 4), 8);
        assert_eq!(order(GroupKind::SO, 4), 4);
        assert_eq!(order(GroupKind::SO, 2), 1);
        assert_eq!(order(GroupKind::O, 2), 2);
        assert_eq!(order(GroupKind::SO, 5), 8);
        assert_eq!(order(GroupKind::SO, 6), 24);
        assert_eq!(order(GroupKind::Sp, 6), 48);
    }

    #[test]
    fn symmetric_polynomials() {
        let f = PrimeField::new(7).unwrap();
        let s2 = weyl_generators(&group_spec(GroupKind::GL, 2).unwrap());
        let dims: Vec<usize> = (0..5).map(|m| finite_invariants(&f, &s2, 1, m).unwrap().dim()).collect();
        assert_eq!(dims, [1, 1, 2, 2, 3]);
        let b1 = WeylAction::new(1, vec![sign_change(1, &[0])]);
        assert_eq!(finite_invariants(&f, &b1, 1, 1).unwrap().dim(), 0);
    }

    #[test]
    fn weight_zero_counts() {
        let f = PrimeField::new(7).unwrap();
        let real = Realization::split(f, &group_spec(GroupKind::GL, 2).unwrap()).unwrap();
        assert_eq!(torus_weight_zero(&real, 1, 1, ModuleSlice::Free).unwrap().dim(), 2);
        assert_eq!(torus_weight_zero(&real, 1, 0, ModuleSlice::Free).unwrap().dim(), 1);
        assert_eq!(torus_weight_zero(&real, 1, 2, ModuleSlice::Free).unwrap().dim(), 4);
    }

    #[test]
    fn classical_gl2_invariants() {
        let f = PrimeField::new(7).unwrap();
        let real = Realization::split(f, &group_spec(GroupKind::GL, 2).unwrap()).unwrap();
        let dims: Vec<usize> =
            (0..4).map(|m| group_invariants(&real, 1, m, ModuleSlice::Free).unwrap().dim()).collect();
        assert_eq!(dims, [1, 1, 2, 2]);
        let amb: Vec<usize> =
            (0..3).map(|m| group_invariants(&real, 1, m, ModuleSlice::Ambient).unwrap().dim()).collect();
        assert_eq!(amb, [1, 1, 2]);
    }

    #[test]
    fn orthogonal_invariants_of_vectors() {
        // so_3 adjoint is the vector rep: invariants are powers of the norm
        let real = split(GroupKind::SO, 3, 7);
        let dims: Vec<usize> =
            (0..5).map(|m| group_invariants(&real, 1, m, ModuleSlice::Free).unwrap().dim()).collect();
        assert_eq!(dims, [1, 0, 1, 0, 1]);
        // so_2 is abelian: every function is SO_2-invariant, only even ones O_2-invariant
        let so2 = split(GroupKind::SO, 2, 7);
        let o2 = split(GroupKind::O, 2, 7);
        assert_eq!(group_invariants(&so2, 1, 1, ModuleSlice::Free).unwrap().dim(), 1);
        assert_eq!(group_invariants(&o2, 1, 1, ModuleSlice::Free).unwrap().dim(), 0);
        assert_eq!(group_invariants(&o2, 1, 2, ModuleSlice::Free).unwrap().dim(), 1);
    }

    #[test]
    fn quotient_invariants_use_normal_forms() {
        let f = PrimeField::new(101).unwrap();
        let real = Realization::split(f, &group_spec(GroupKind::GL, 2).unwrap()).unwrap();
        let (_, ibar) = ibar_in(&real, 2, 2).unwrap();
        let q = group_invariants(&real, 2, 2, ModuleSlice::Quotient(&ibar)).unwrap();
        let free = group_invariants(&real, 2, 2, ModuleSlice::Free).unwrap();
        // tr(X)^2, tr(Y)^2, tr X tr Y, tr X^2, tr Y^2, tr XY; Ibar_2 has no invariants
        assert_eq!(free.dim(), 6);
        assert_eq!(q.dim(), 6);
    }

    #[test]
    fn small_characteristic_is_refused() {
        let f = PrimeField::new(3).unwrap();
        let real = Realization::split(f, &group_spec(GroupKind::GL, 3).unwrap()).unwrap();
        assert_eq!(
            group_invariants(&real, 1, 1, ModuleSlice::Free).unwrap_err(),
            Error::CharacteristicTooSmall { p: 3, n: 3 }
        );
    }

    #[test]
    fn eigen_split_examples() {
        let f = PrimeField::new(7).unwrap();
        let full = LinSpace::full(f, 2);
        let (p, m) = eigen_split(&full, |v| Ok(v.clone())).unwrap();
        assert_eq!((p.dim(), m.dim()), (2, 0));
        let swap = |v: &SparseRow<u64>| {
            let mut w: SparseRow<u64> = v.iter().map(|(c, x)| (1 - c, *x)).collect();
            w.sort_by_key(|(c, _)| *c);
            Ok(w)
        };
        let (p, m) = eigen_split(&full, swap).unwrap();
        assert_eq!((p.dim(), m.dim()), (1, 1));
        let bad = |v: &SparseRow<u64>| Ok(v.iter().map(|(c, x)| (*c, f.mul(x, &2))).collect());
        assert_eq!(eigen_split(&full, bad).unwrap_err(), Error::NotInvolution);
        // sign change on K[t]_1
        let t = LinSpace::full(f, 1);
        let w0 = sign_change(1, &[0]);
        let (p, m) = eigen_split(&t, |v| weyl_apply(&f, &w0, 1, 1, v)).unwrap();
        assert_eq!((p.dim(), m.dim()), (0, 1));
    }
}
