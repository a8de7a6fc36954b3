//! Exact elimination over a [`Field`]: rank, kernels, and canonical
//! row-reduced subspaces.
//!
//! Rows are stored sparsely as `(column, value)` pairs sorted by column with
//! no explicit zeros. Graded slices of polynomial rings are mostly zero, and
//! reduction against an echelon basis is done through a dense scratch row.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldTag, PrimeField, QuadraticField, Rationals};

pub type SparseRow<E> = Vec<(usize, E)>;

pub fn sparse_from_dense<F: Field>(f: &F, dense: &[F::Elem]) -> SparseRow<F::Elem> {
    dense.iter().enumerate().filter(|(_, v)| !f.is_zero(v)).map(|(c, v)| (c, v.clone())).collect()
}

pub fn dense_from_sparse<F: Field>(f: &F, row: &[(usize, F::Elem)], ncols: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); ncols];
    for (c, v) in row {
        out[*c] = v.clone();
    }
    out
}

pub fn scale_row<F: Field>(f: &F, row: &[(usize, F::Elem)], s: &F::Elem) -> SparseRow<F::Elem> {
    if f.is_zero(s) {
        return Vec::new();
    }
    row.iter().map(|(c, v)| (*c, f.mul(v, s))).collect()
}

/// `a + s*b`
pub fn add_scaled<F: Field>(f: &F, a: &[(usize, F::Elem)], s: &F::Elem, b: &[(usize, F::Elem)]) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f.mul(s, &b[j].1);
            if !f.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            f.add_mul(&mut v, s, &b[j].1);
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rows of `m` (sparse, `ncols` wide) as columns.
pub fn transpose<E: Clone>(rows: &[SparseRow<E>], ncols: usize) -> Vec<SparseRow<E>> {
    let mut out: Vec<SparseRow<E>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            out[*c].push((r, v.clone()));
        }
    }
    out
}

/// Incremental row echelon form. Rows are normalized to a leading 1 but not
/// back-substituted until [`Echelon::into_space`].
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseRow<F::Elem>>,
    pivots: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Self { field, ncols, rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn reduce_dense(&self, dense: &mut [F::Elem], start: usize) {
        let f = &self.field;
        for (&c, &r) in self.pivots.range(start..) {
            if f.is_zero(&dense[c]) {
                continue;
            }
            let coef = f.neg(&dense[c]);
            for (cc, v) in &self.rows[r] {
                f.add_mul(&mut dense[*cc], &coef, v);
            }
        }
    }

    /// The unique vector in `row + span` vanishing on every pivot column.
    pub fn reduce(&self, row: &[(usize, F::Elem)]) -> SparseRow<F::Elem> {
        let Some(start) = row.first().map(|(c, _)| *c) else {
            return Vec::new();
        };
        if self.pivots.is_empty() {
            return row.to_vec();
        }
        let mut dense = dense_from_sparse(&self.field, row, self.ncols);
        self.reduce_dense(&mut dense, start);
        sparse_from_dense(&self.field, &dense)
    }

    /// Adds `row`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: &[(usize, F::Elem)]) -> bool {
        let reduced = self.reduce(row);
        let Some((lead, lv)) = reduced.first() else {
            return false;
        };
        let lead = *lead;
        let inv = self.field.inv(lv).expect("nonzero leading entry");
        let normalized = scale_row(&self.field, &reduced, &inv);
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(normalized);
        true
    }

    pub fn into_space(self) -> LinSpace<F> {
        let f = self.field.clone();
        let ncols = self.ncols;
        // back-substitute from the last pivot down so each row is reduced
        // against rows that are already in final form
        let order: Vec<(usize, usize)> = self.pivots.iter().map(|(c, r)| (*c, *r)).collect();
        let mut done: Echelon<F> = Echelon::new(f.clone(), ncols);
        let mut finished: Vec<(usize, SparseRow<F::Elem>)> = Vec::with_capacity(order.len());
        for &(c, r) in order.iter().rev() {
            let row = &self.rows[r];
            let tail: SparseRow<F::Elem> = row.iter().skip(1).cloned().collect();
            let mut red = done.reduce(&tail);
            red.insert(0, (c, f.one()));
            done.pivots.insert(c, done.rows.len());
            done.rows.push(red.clone());
            finished.push((c, red));
        }
        finished.sort_by_key(|(c, _)| *c);
        let pivots = finished.iter().map(|(c, _)| *c).collect();
        let rows = finished.into_iter().map(|(_, r)| r).collect();
        LinSpace { field: f, ambient: ncols, rows, pivots }
    }
}

/// A subspace of `F^ambient` in reduced row echelon form. Equal subspaces
/// have identical representations.
#[derive(Debug, Clone, PartialEq)]
pub struct LinSpace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<SparseRow<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> LinSpace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Self { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let one = field.one();
        let rows = (0..ambient).map(|c| vec![(c, one.clone())]).collect();
        Self { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_rows<'a, I>(field: F, ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseRow<F::Elem>>,
        F::Elem: 'a,
    {
        let mut ech = Echelon::new(field, ambient);
        for r in rows {
            if ech.rank() == ambient {
                break;
            }
            ech.insert(r);
        }
        ech.into_space()
    }

    pub fn from_dense(field: F, ambient: usize, rows: &[Vec<F::Elem>]) -> Self {
        let sparse: Vec<_> = rows.iter().map(|r| sparse_from_dense(&field, r)).collect();
        Self::from_rows(field, ambient, sparse.iter())
    }

    /// Span of the given coordinate axes.
    pub fn from_axes(field: F, ambient: usize, axes: &[usize]) -> Self {
        let one = field.one();
        let rows: Vec<SparseRow<F::Elem>> = axes.iter().map(|&c| vec![(c, one.clone())]).collect();
        Self::from_rows(field, ambient, rows.iter())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseRow<F::Elem>] {
        &self.rows
    }

    pub fn basis_dense(&self) -> Vec<Vec<F::Elem>> {
        self.rows.iter().map(|r| dense_from_sparse(&self.field, r, self.ambient)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots: their unit vectors give a basis of the
    /// quotient `F^ambient / self`.
    pub fn standard_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut it = self.pivots.iter().peekable();
        for c in 0..self.ambient {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    fn echelon(&self) -> Echelon<F> {
        Echelon {
            field: self.field.clone(),
            ncols: self.ambient,
            rows: self.rows.clone(),
            pivots: self.pivots.iter().enumerate().map(|(r, c)| (*c, r)).collect(),
        }
    }

    /// Normal form of `row` modulo this subspace.
    pub fn reduce(&self, row: &[(usize, F::Elem)]) -> SparseRow<F::Elem> {
        if self.rows.is_empty() {
            return row.to_vec();
        }
        let Some(start) = row.first().map(|(c, _)| *c) else {
            return Vec::new();
        };
        let f = &self.field;
        let mut dense = dense_from_sparse(f, row, self.ambient);
        let first = self.pivots.partition_point(|&p| p < start);
        for (k, &c) in self.pivots.iter().enumerate().skip(first) {
            if f.is_zero(&dense[c]) {
                continue;
            }
            let coef = f.neg(&dense[c]);
            for (cc, v) in &self.rows[k] {
                f.add_mul(&mut dense[*cc], &coef, v);
            }
        }
        sparse_from_dense(f, &dense)
    }

    pub fn contains(&self, row: &[(usize, F::Elem)]) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn contains_space(&self, other: &LinSpace<F>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `row` in the row basis, or `None` if `row` is outside.
    pub fn coordinates(&self, row: &[(usize, F::Elem)]) -> Option<Vec<F::Elem>> {
        if !self.contains(row) {
            return None;
        }
        let dense = dense_from_sparse(&self.field, row, self.ambient);
        Some(self.pivots.iter().map(|&c| dense[c].clone()).collect())
    }

    pub fn sum(&self, other: &LinSpace<F>) -> LinSpace<F> {
        let mut ech = self.echelon();
        for r in &other.rows {
            ech.insert(r);
        }
        ech.into_space()
    }

    pub fn intersection(&self, other: &LinSpace<F>) -> LinSpace<F> {
        // x = sum c_i u_i lies in `other` iff sum c_i reduce(u_i) = 0
        let reduced: Vec<_> = self.rows.iter().map(|u| other.reduce(u)).collect();
        let combos = left_kernel(&self.field, &reduced, self.ambient);
        let rows: Vec<SparseRow<F::Elem>> =
            combos.iter().map(|c| combine(&self.field, c, &self.rows, self.ambient)).collect();
        LinSpace::from_rows(self.field.clone(), self.ambient, rows.iter())
    }

    /// Image of each basis vector under a linear map, spanned again.
    pub fn map<G>(&self, target_dim: usize, mut g: G) -> LinSpace<F>
    where
        G: FnMut(&SparseRow<F::Elem>) -> SparseRow<F::Elem>,
    {
        let imgs: Vec<_> = self.rows.iter().map(&mut g).collect();
        LinSpace::from_rows(self.field.clone(), target_dim, imgs.iter())
    }
}

/// `sum_k coeffs[k] * rows[k]`, with `coeffs` sparse.
pub fn combine<F: Field>(
    f: &F,
    coeffs: &[(usize, F::Elem)],
    rows: &[SparseRow<F::Elem>],
    ncols: usize,
) -> SparseRow<F::Elem> {
    let mut dense = vec![f.zero(); ncols];
    for (k, c) in coeffs {
        for (col, v) in &rows[*k] {
            f.add_mul(&mut dense[*col], c, v);
        }
    }
    sparse_from_dense(f, &dense)
}

pub fn rank<F: Field>(field: &F, rows: &[SparseRow<F::Elem>], ncols: usize) -> usize {
    let mut ech = Echelon::new(field.clone(), ncols);
    for r in rows {
        if ech.rank() == ncols {
            break;
        }
        ech.insert(r);
    }
    ech.rank()
}

pub fn rank_dense<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> Result<usize> {
    let ncols = check_rect(rows)?;
    let sparse: Vec<_> = rows.iter().map(|r| sparse_from_dense(field, r)).collect();
    Ok(rank(field, &sparse, ncols))
}

/// Canonical basis of the right kernel `{ x : M x = 0 }`.
pub fn kernel_basis<F: Field>(field: &F, rows: &[SparseRow<F::Elem>], ncols: usize) -> LinSpace<F> {
    let rref = LinSpace::from_rows(field.clone(), ncols, rows.iter());
    let one = field.one();
    let piv_set: BTreeMap<usize, usize> = rref.pivots.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut kernel_rows: Vec<SparseRow<F::Elem>> = Vec::new();
    for free in 0..ncols {
        if piv_set.contains_key(&free) {
            continue;
        }
        let mut v: SparseRow<F::Elem> = Vec::new();
        for (k, &pc) in rref.pivots.iter().enumerate() {
            if let Ok(pos) = rref.rows[k].binary_search_by_key(&free, |(c, _)| *c) {
                v.push((pc, field.neg(&rref.rows[k][pos].1)));
            }
        }
        v.push((free, one.clone()));
        v.sort_by_key(|(c, _)| *c);
        kernel_rows.push(v);
    }
    LinSpace::from_rows(field.clone(), ncols, kernel_rows.iter())
}

pub fn kernel_basis_dense<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> Result<LinSpace<F>> {
    let ncols = check_rect(rows)?;
    let sparse: Vec<_> = rows.iter().map(|r| sparse_from_dense(field, r)).collect();
    Ok(kernel_basis(field, &sparse, ncols))
}

/// Canonical basis of `{ c : sum_i c_i rows[i] = 0 }`.
pub fn left_kernel<F: Field>(field: &F, rows: &[SparseRow<F::Elem>], ncols: usize) -> Vec<SparseRow<F::Elem>> {
    let t = transpose(rows, ncols);
    kernel_basis(field, &t, rows.len()).rows
}

fn check_rect<E>(rows: &[Vec<E>]) -> Result<usize> {
    let expected = rows.first().map_or(0, |r| r.len());
    for (row, r) in rows.iter().enumerate() {
        if r.len() != expected {
            return Err(Error::RaggedMatrix { row, len: r.len(), expected });
        }
    }
    Ok(expected)
}

fn common_tag(rows: &[Vec<FieldElement>]) -> Result<Option<FieldTag>> {
    let mut tag = None;
    for e in rows.iter().flatten() {
        match tag {
            None => tag = Some(e.tag()),
            Some(t) if t != e.tag() => return Err(Error::FieldMismatch),
            _ => {}
        }
    }
    Ok(tag)
}

/// Rank of a matrix of self-describing scalars; all entries must share a field.
pub fn rank_dyn(rows: &[Vec<FieldElement>]) -> Result<usize> {
    check_rect(rows)?;
    match common_tag(rows)? {
        None => Ok(0),
        Some(FieldTag::Prime(p)) => {
            let f = PrimeField::new(p)?;
            rank_dense(&f, &unwrap_prime(rows))
        }
        Some(FieldTag::Quadratic(p)) => {
            let f = QuadraticField::new(p)?;
            rank_dense(&f, &unwrap_quadratic(rows))
        }
        Some(FieldTag::Rational) => rank_dense(&Rationals, &unwrap_rational(rows)),
    }
}

/// Canonical right-kernel basis of a matrix of self-describing scalars.
pub fn kernel_dyn(rows: &[Vec<FieldElement>]) -> Result<Vec<Vec<FieldElement>>> {
    let ncols = check_rect(rows)?;
    match common_tag(rows)? {
        None => Ok((0..ncols)
            .map(|c| {
                let mut v = vec![FieldElement::rational(0, 1); ncols];
                v[c] = FieldElement::rational(1, 1);
                v
            })
            .collect()),
        Some(FieldTag::Prime(p)) => {
            let f = PrimeField::new(p)?;
            let k = kernel_basis_dense(&f, &unwrap_prime(rows))?;
            Ok(k.basis_dense()
                .into_iter()
                .map(|r| r.into_iter().map(|value| FieldElement::Prime { p, value }).collect())
                .collect())
        }
        Some(FieldTag::Quadratic(p)) => {
            let f = QuadraticField::new(p)?;
            let k = kernel_basis_dense(&f, &unwrap_quadratic(rows))?;
            Ok(k.basis_dense()
                .into_iter()
                .map(|r| r.into_iter().map(|value| FieldElement::Quadratic { p, value }).collect())
                .collect())
        }
        Some(FieldTag::Rational) => {
            let k = kernel_basis_dense(&Rationals, &unwrap_rational(rows))?;
            Ok(k.basis_dense().into_iter().map(|r| r.into_iter().map(FieldElement::Rational).collect()).collect())
        }
    }
}

fn unwrap_prime(rows: &[Vec<FieldElement>]) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    FieldElement::Prime { value, .. } => *value,
                    _ => unreachable!("tags checked"),
                })
                .collect()
        })
        .collect()
}

fn unwrap_quadratic(rows: &[Vec<FieldElement>]) -> Vec<Vec<[u64; 2]>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    FieldElement::Quadratic { value, .. } => *value,
                    _ => unreachable!("tags checked"),
                })
                .collect()
        })
        .collect()
}

fn unwrap_rational(rows: &[Vec<FieldElement>]) -> Vec<Vec<num_rational::BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    FieldElement::Rational(q) => q.clone(),
                    _ => unreachable!("tags checked"),
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, rows: &[&[i64]]) -> Vec<Vec<FieldElement>> {
        rows.iter().map(|r| r.iter().map(|&v| FieldElement::prime(p, v).unwrap()).collect()).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_dyn(&fp(7, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap(), 3);
        assert_eq!(rank_dyn(&fp(7, &[&[0, 0, 0], &[0, 0, 0]])).unwrap(), 0);
        assert_eq!(rank_dyn(&fp(5, &[&[1, 2], &[2, 4]])).unwrap(), 1);
    }

    #[test]
    fn mixed_tags_are_rejected() {
        let m = vec![vec![FieldElement::prime(5, 1).unwrap(), FieldElement::prime(7, 1).unwrap()]];
        assert_eq!(rank_dyn(&m), Err(Error::FieldMismatch));
        let m = vec![vec![FieldElement::prime(5, 1).unwrap(), FieldElement::rational(1, 2)]];
        assert_eq!(kernel_dyn(&m), Err(Error::FieldMismatch));
    }

    #[test]
    fn ragged_is_rejected() {
        let m = fp(5, &[&[1, 2], &[1]]);
        assert!(matches!(rank_dyn(&m), Err(Error::RaggedMatrix { row: 1, .. })));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_dyn(&fp(3, &[&[1, 1]])).unwrap().len(), 1);
        assert_eq!(kernel_dyn(&fp(7, &[&[1, 0], &[0, 1]])).unwrap().len(), 0);
        // [[1,2],[2,4]] over F_5: x + 2y = 0, kernel spanned by (-2, 1) = (3, 1)
        let k = kernel_dyn(&fp(5, &[&[1, 2], &[2, 4]])).unwrap();
        // x + 2y = 0 is spanned by (3, 1); the canonical form has a leading 1
        assert_eq!(k, fp(5, &[&[1, 2]]));
    }

    #[test]
    fn rational_kernel() {
        let m = vec![vec![FieldElement::rational(1, 2), FieldElement::rational(1, 3)]];
        let k = kernel_dyn(&m).unwrap();
        assert_eq!(k.len(), 1);
        // canonical: leading 1, (1, -3/2)
        assert_eq!(k[0], vec![FieldElement::rational(1, 1), FieldElement::rational(-3, 2)]);
    }

    #[test]
    fn rref_is_canonical_and_reduce_works() {
        let f = PrimeField::new(11).unwrap();
        let a = LinSpace::from_dense(f, 3, &[vec![1, 2, 3], vec![0, 1, 4]]);
        let b = LinSpace::from_dense(f, 3, &[vec![1, 3, 7], vec![2, 4, 6], vec![0, 0, 0]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&sparse_from_dense(&f, &[3, 7, 2])));
        assert_eq!(a.standard_columns().len(), 1);
    }

    #[test]
    fn intersection_and_sum() {
        let f = PrimeField::new(7).unwrap();
        let xy = LinSpace::from_axes(f, 3, &[0, 1]);
        let yz = LinSpace::from_axes(f, 3, &[1, 2]);
        assert_eq!(xy.intersection(&yz), LinSpace::from_axes(f, 3, &[1]));
        assert_eq!(xy.sum(&yz).dim(), 3);
    }

    #[test]
    fn left_kernel_finds_relations() {
        let f = PrimeField::new(13).unwrap();
        let rows = vec![
            sparse_from_dense(&f, &[1, 2, 0]),
            sparse_from_dense(&f, &[0, 1, 1]),
            sparse_from_dense(&f, &[1, 3, 1]),
        ];
        let lk = left_kernel(&f, &rows, 3);
        assert_eq!(lk.len(), 1);
        let combo = combine(&f, &lk[0], &rows, 3);
        assert!(combo.is_empty());
    }
}
