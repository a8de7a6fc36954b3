//! Graded Betti numbers through the Koszul complex, windowed regularity and
//! Chardin's bound.
//!
//! `beta_ij(M)` is the homology at `M_{j-i} (x) wedge^i K^r` of
//!
//! ```text
//! 0 -> M_{j-r} (x) wedge^r -> ... -> M_{j-1} (x) wedge^1 -> M_j -> 0
//! ```
//!
//! with `m (x) e_S -> sum_k (-1)^k x_{s_k} m (x) e_{S \ s_k}` where
//! `s_0 < s_1 < ...` are the elements of `S`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{add_scaled, rank, LinSpace, SparseRow};
use crate::poly::{ideal_degree_component, Poly, SliceBasis};

/// A graded module over `K[x_0..x_{r-1}]`, given by the dimensions of its
/// components in degrees `lo..=hi` (zero below `lo`) and the action of each
/// variable as matrices between consecutive components.
#[derive(Debug, Clone)]
pub struct GradedModuleSlices<F: Field> {
    field: F,
    r: usize,
    lo: i64,
    dims: Vec<usize>,
    /// `mult[m - lo][s][b]`: coordinates of `x_s * b_b` in degree `m + 1`.
    mult: Vec<Vec<Vec<SparseRow<F::Elem>>>>,
}

impl<F: Field> GradedModuleSlices<F> {
    /// `dims[k]` is the dimension in degree `lo + k`; `mult` has one entry
    /// fewer than `dims`.
    pub fn from_parts(
        field: F,
        r: usize,
        lo: i64,
        dims: Vec<usize>,
        mult: Vec<Vec<Vec<SparseRow<F::Elem>>>>,
    ) -> Result<Self> {
        if mult.len() + 1 != dims.len().max(1) {
            return Err(Error::Inconsistent(alloc::format!(
                "{} multiplication layers for {} components",
                mult.len(),
                dims.len()
            )));
        }
        for (k, layer) in mult.iter().enumerate() {
            if layer.len() != r || layer.iter().any(|imgs| imgs.len() != dims[k]) {
                return Err(Error::Inconsistent(alloc::format!(
                    "malformed multiplication in degree {}",
                    lo + k as i64
                )));
            }
        }
        Ok(Self { field, r, lo, dims, mult })
    }

    /// The zero module.
    pub fn zero(field: F, r: usize) -> Self {
        Self { field, r, lo: 0, dims: Vec::new(), mult: Vec::new() }
    }

    /// `S = K[x_0..x_{r-1}]` itself, up to degree `hi`.
    pub fn free(field: F, r: usize, hi: u32) -> Self {
        let slices: Vec<SliceBasis> = (0..=hi).map(|m| SliceBasis::new(r, m)).collect();
        let one = field.one();
        let mult = (0..hi as usize)
            .map(|m| {
                (0..r)
                    .map(|s| {
                        slices[m]
                            .monomials()
                            .iter()
                            .map(|mono| {
                                vec![(slices[m + 1].index_of(&mono.mul_var(s)).expect("in slice"), one.clone())]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let dims = slices.iter().map(|s| s.len()).collect();
        Self { field, r, lo: 0, dims, mult }
    }

    /// The ideal generated by homogeneous `gens`, up to degree `hi`. The
    /// basis of each component is its reduced echelon basis.
    pub fn ideal(field: F, gens: &[Poly<F::Elem>], r: usize, hi: u32) -> Result<Self> {
        let comps: Vec<(SliceBasis, LinSpace<F>)> =
            (0..=hi).map(|m| ideal_degree_component(&field, gens, m, r)).collect::<Result<_>>()?;
        let mut mult = Vec::with_capacity(hi as usize);
        for m in 0..hi as usize {
            let (slice, space) = &comps[m];
            let (next_slice, next) = &comps[m + 1];
            let layer = (0..r)
                .map(|s| {
                    space
                        .basis()
                        .iter()
                        .map(|row| {
                            let prod = shift_row(slice, next_slice, row, s);
                            coordinates_at_pivots(next, &prod)
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            mult.push(layer);
        }
        let dims = comps.iter().map(|(_, s)| s.dim()).collect();
        Ok(Self { field, r, lo: 0, dims, mult })
    }

    /// `S / I` for the ideal generated by `gens`, with standard monomials as
    /// basis.
    pub fn quotient(field: F, gens: &[Poly<F::Elem>], r: usize, hi: u32) -> Result<Self> {
        let comps: Vec<(SliceBasis, LinSpace<F>)> =
            (0..=hi).map(|m| ideal_degree_component(&field, gens, m, r)).collect::<Result<_>>()?;
        let std: Vec<Vec<usize>> = comps.iter().map(|(_, s)| s.standard_columns()).collect();
        let mut mult = Vec::with_capacity(hi as usize);
        for m in 0..hi as usize {
            let (slice, _) = &comps[m];
            let (next_slice, next) = &comps[m + 1];
            let pos: BTreeMap<usize, usize> = std[m + 1].iter().enumerate().map(|(k, c)| (*c, k)).collect();
            let one = field.one();
            let layer = (0..r)
                .map(|s| {
                    std[m]
                        .iter()
                        .map(|&c| {
                            let prod = shift_row(slice, next_slice, &[(c, one.clone())], s);
                            next.reduce(&prod).into_iter().map(|(c, v)| (pos[&c], v)).collect()
                        })
                        .collect()
                })
                .collect();
            mult.push(layer);
        }
        let dims = std.iter().map(|s| s.len()).collect();
        Ok(Self { field, r, lo: 0, dims, mult })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn lowest_degree(&self) -> i64 {
        self.lo
    }

    /// Highest degree with a known component, if any.
    pub fn highest_degree(&self) -> Option<i64> {
        (!self.dims.is_empty()).then(|| self.lo + self.dims.len() as i64 - 1)
    }

    pub fn is_zero_module(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, m: i64) -> Result<usize> {
        if self.dims.is_empty() || m < self.lo {
            return Ok(0);
        }
        self.dims.get((m - self.lo) as usize).copied().ok_or(Error::MissingSlice(m))
    }

    /// Multiplication by `x_s` from degree `m`, basis vector `b`.
    pub fn multiply(&self, m: i64, s: usize, b: usize) -> Result<&SparseRow<F::Elem>> {
        if m < self.lo || self.dims.is_empty() {
            return Err(Error::MissingSlice(m));
        }
        self.mult.get((m - self.lo) as usize).map(|layer| &layer[s][b]).ok_or(Error::MissingSlice(m + 1))
    }

    /// Change of basis in one degree: the new basis is `new[k] = sum_b
    /// change[k][b] old_b`, and `inverse` expresses old vectors in the new basis.
    pub fn change_basis(
        &mut self,
        m: i64,
        change: &[SparseRow<F::Elem>],
        inverse: &[SparseRow<F::Elem>],
    ) -> Result<()> {
        let k = (m - self.lo) as usize;
        let dim = self.dim(m)?;
        let f = self.field.clone();
        let express = |row: &SparseRow<F::Elem>| -> SparseRow<F::Elem> {
            let mut acc: SparseRow<F::Elem> = Vec::new();
            for (b, v) in row {
                acc = add_scaled(&f, &acc, v, &inverse[*b]);
            }
            acc
        };
        if k < self.mult.len() {
            for s in 0..self.r {
                let old = self.mult[k][s].clone();
                self.mult[k][s] = change
                    .iter()
                    .map(|c| {
                        let mut acc: SparseRow<F::Elem> = Vec::new();
                        for (b, v) in c {
                            acc = add_scaled(&f, &acc, v, &old[*b]);
                        }
                        acc
                    })
                    .collect();
            }
        }
        if k >= 1 && k - 1 < self.mult.len() {
            for s in 0..self.r {
                self.mult[k - 1][s] = self.mult[k - 1][s].iter().map(&express).collect();
            }
        }
        debug_assert_eq!(change.len(), dim);
        Ok(())
    }
}

fn shift_row<E: Clone>(slice: &SliceBasis, next: &SliceBasis, row: &[(usize, E)], s: usize) -> SparseRow<E> {
    let mut out: SparseRow<E> = row
        .iter()
        .map(|(c, v)| (next.index_of(&slice.monomial(*c).mul_var(s)).expect("in slice"), v.clone()))
        .collect();
    out.sort_by_key(|(c, _)| *c);
    out
}

fn coordinates_at_pivots<F: Field>(space: &LinSpace<F>, row: &[(usize, F::Elem)]) -> Result<SparseRow<F::Elem>> {
    let coords = space
        .coordinates(row)
        .ok_or_else(|| Error::Inconsistent(alloc::string::String::from("product left the ideal")))?;
    Ok(coords.into_iter().enumerate().filter(|(_, v)| !space.field().is_zero(v)).collect())
}

/// Subsets of `0..r` of size `k` as bitmasks, in increasing order.
fn subsets(r: usize, k: usize) -> Vec<u32> {
    (0u32..(1u32 << r)).filter(|m| m.count_ones() as usize == k).collect()
}

/// Rank of `M_{deg} (x) wedge^k -> M_{deg+1} (x) wedge^{k-1}`.
fn koszul_rank<F: Field>(module: &GradedModuleSlices<F>, deg: i64, k: usize) -> Result<usize> {
    let r = module.r;
    if k == 0 || k > r {
        return Ok(0);
    }
    let src_dim = module.dim(deg)?;
    if src_dim == 0 {
        return Ok(0);
    }
    let tgt_dim = module.dim(deg + 1)?;
    if tgt_dim == 0 {
        return Ok(0);
    }
    let f = &module.field;
    let lower = subsets(r, k - 1);
    let lower_idx: BTreeMap<u32, usize> = lower.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let ncols = tgt_dim * lower.len();
    let mut rows = Vec::with_capacity(src_dim * subsets(r, k).len());
    for set in subsets(r, k) {
        let members: Vec<usize> = (0..r).filter(|&s| set & (1 << s) != 0).collect();
        for b in 0..src_dim {
            let mut row: SparseRow<F::Elem> = Vec::new();
            for (pos, &s) in members.iter().enumerate() {
                let col0 = lower_idx[&(set & !(1 << s))] * tgt_dim;
                let img = module.multiply(deg, s, b)?;
                let sign = if pos % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                let shifted: SparseRow<F::Elem> = img.iter().map(|(c, v)| (col0 + c, v.clone())).collect();
                row = add_scaled(f, &row, &sign, &shifted);
            }
            rows.push(row);
        }
    }
    Ok(rank(f, &rows, ncols))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `beta_ij` from the homology of the Koszul complex.
pub fn betti_number<F: Field>(module: &GradedModuleSlices<F>, i: usize, j: i64) -> Result<usize> {
    let r = module.r;
    if i > r {
        return Ok(0);
    }
    let deg = j - i as i64;
    if let Some(hi) = module.highest_degree() {
        if j > hi {
            return Err(Error::MissingSlice(j));
        }
    }
    let c_i = module.dim(deg)? * binomial(r, i);
    if c_i == 0 {
        return Ok(0);
    }
    let out = koszul_rank(module, deg, i)?;
    let incoming = koszul_rank(module, deg - 1, i + 1)?;
    Ok(c_i - out - incoming)
}

/// Nonzero Betti numbers with `j <= window`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
    pub window: i64,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max (j - i)` over the nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }
}

pub fn betti_table<F: Field>(module: &GradedModuleSlices<F>, window: i64) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    if !module.is_zero_module() {
        for i in 0..=module.r {
            for j in module.lo + i as i64..=window {
                let b = betti_number(module, i, j)?;
                if b != 0 {
                    entries.insert((i, j), b);
                }
            }
        }
    }
    Ok(BettiTable { entries, window })
}

/// Regularity observed in the window, and whether the window reaches at
/// least `r + 1` diagonals past it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowedRegularity {
    pub observed: Option<i64>,
    pub complete: bool,
}

pub fn regularity_windowed<F: Field>(module: &GradedModuleSlices<F>, window: i64) -> Result<WindowedRegularity> {
    let table = betti_table(module, window)?;
    let observed = table.regularity();
    let complete = match observed {
        Some(reg) => window > reg + module.r as i64,
        None => module.is_zero_module(),
    };
    Ok(WindowedRegularity { observed, complete })
}

/// Largest exponent `k` for which `x^(2^k)` is evaluated exactly.
pub const MAX_DOUBLING_EXPONENT: u64 = 20;

/// Bound on `reg(I)` for an ideal generated in degree at most `kappa` in
/// `dvars` variables.
pub fn chardin_bound(kappa: u64, dvars: u64) -> Result<BigUint> {
    if kappa == 0 || dvars == 0 {
        return Err(Error::OutOfDomain(alloc::format!("kappa = {kappa}, d = {dvars}")));
    }
    if dvars <= 3 {
        return Ok(BigUint::from(dvars * (kappa - 1) + 1));
    }
    let e = dvars - 4;
    if e > MAX_DOUBLING_EXPONENT {
        return Err(Error::TooLarge(e));
    }
    let base = BigUint::from(3u64) * BigUint::from(kappa) * BigUint::from(kappa) * BigUint::from(kappa - 1);
    Ok(base.pow(1u32 << e) + BigUint::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn maximal_ideal_in_two_variables() {
        let f = f();
        let x = Poly::var(&f, 2, 0);
        let y = Poly::var(&f, 2, 1);
        let m = GradedModuleSlices::ideal(f, &[x, y], 2, 4).unwrap();
        assert_eq!(betti_number(&m, 0, 1).unwrap(), 2);
        assert_eq!(betti_number(&m, 1, 2).unwrap(), 1);
        let t = betti_table(&m, 3).unwrap();
        assert_eq!(t.entries.len(), 2);
        let reg = regularity_windowed(&m, 4).unwrap();
        assert_eq!(reg, WindowedRegularity { observed: Some(1), complete: true });
    }

    #[test]
    fn two_monomials_with_one_syzygy() {
        let f = f();
        let x = Poly::var(&f, 3, 0);
        let y = Poly::var(&f, 3, 1);
        let z = Poly::var(&f, 3, 2);
        let m = GradedModuleSlices::ideal(f, &[x.mul(&f, &y), x.mul(&f, &z)], 3, 6).unwrap();
        let t = betti_table(&m, 4).unwrap();
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.entries.len(), 2);
        let reg = regularity_windowed(&m, 6).unwrap();
        assert_eq!(reg, WindowedRegularity { observed: Some(2), complete: true });
    }

    #[test]
    fn free_and_zero_modules() {
        let f = f();
        for r in 1..4 {
            let s = GradedModuleSlices::free(f, r, 5);
            let t = betti_table(&s, 5).unwrap();
            assert_eq!(t.entries.into_iter().collect::<Vec<_>>(), [((0, 0), 1)]);
        }
        let z = GradedModuleSlices::zero(f, 3);
        assert!(betti_table(&z, 5).unwrap().is_empty());
    }

    #[test]
    fn missing_slice_names_the_degree() {
        let f = f();
        let s = GradedModuleSlices::free(f, 2, 2);
        assert_eq!(betti_number(&s, 1, 3).unwrap_err(), Error::MissingSlice(3));
    }

    #[test]
    fn residue_field_resolution() {
        // S/(x, y, z) = K has the Koszul resolution: beta_{i,i} = C(3, i)
        let f = f();
        let vars: Vec<_> = (0..3).map(|i| Poly::var(&f, 3, i)).collect();
        let k = GradedModuleSlices::quotient(f, &vars, 3, 4).unwrap();
        let t = betti_table(&k, 4).unwrap();
        for i in 0..=3 {
            assert_eq!(t.get(i, i as i64), binomial(3, i));
        }
        assert_eq!(t.entries.len(), 4);
    }

    #[test]
    fn chardin_values() {
        assert_eq!(chardin_bound(2, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(chardin_bound(2, 4).unwrap(), BigUint::from(13u32));
        assert_eq!(chardin_bound(2, 5).unwrap(), BigUint::from(145u32));
        assert_eq!(chardin_bound(3, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(chardin_bound(2, 40).unwrap_err(), Error::TooLarge(36));
    }
}
