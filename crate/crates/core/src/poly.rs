//! Sparse multivariate polynomials and graded slices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{LinSpace, SparseRow};

/// Exponent vector over variables `0..v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self { exps, degree: 1 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps, degree }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self / x_i`, if `x_i` divides.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps, degree: self.degree - 1 })
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps, degree: self.degree + 1 }
    }

    /// Last variable with a positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the larger exponent of
    /// the earliest differing variable wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `m` in `v` variables, largest first in grlex.
pub fn monomials_of_degree(v: usize, m: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; v];
    fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let v = exps.len();
        if i + 1 == v {
            exps[i] = left as u16;
            out.push(Monomial::from_exponents(exps.clone()));
            exps[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e as u16;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if v == 0 {
        if m == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, m, &mut exps, &mut out);
    out
}

/// A polynomial in `nvars` variables: monomial -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<E> {
    nvars: usize,
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    /// Degree of the highest term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn constant<F: Field<Elem = E>>(f: &F, nvars: usize, c: E) -> Self {
        let mut p = Self::zero(nvars);
        if !f.is_zero(&c) {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var<F: Field<Elem = E>>(f: &F, nvars: usize, i: usize) -> Self {
        Self::monomial(f, Monomial::var(nvars, i), f.one())
    }

    pub fn monomial<F: Field<Elem = E>>(f: &F, m: Monomial, c: E) -> Self {
        let mut p = Self::zero(m.nvars());
        if !f.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<F, I>(f: &F, nvars: usize, terms: I) -> Self
    where
        F: Field<Elem = E>,
        I: IntoIterator<Item = (Monomial, E)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(f, m, &c);
        }
        p
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, f: &F, m: Monomial, c: &E) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if f.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = f.add(v, c);
                if f.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(f, m.clone(), c);
        }
        out
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(f, m.clone(), &f.neg(c));
        }
        out
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        if f.is_zero(s) {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), f.mul(c, s))).collect() }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(f, ma.mul(mb), &f.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_monomial<F: Field<Elem = E>>(&self, f: &F, m: &Monomial, c: &E) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            out.add_term(f, ma.mul(m), &f.mul(ca, c));
        }
        out
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, e: u32) -> Self {
        let mut acc = Self::constant(f, self.nvars, f.one());
        for _ in 0..e {
            acc = acc.mul(f, self);
        }
        acc
    }

    /// Evaluate at a point of the field.
    pub fn eval<F: Field<Elem = E>>(&self, f: &F, point: &[E]) -> E {
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = f.mul(&t, &f.pow(&point[i], e as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Replace every variable `x_i` by `assignment[i]` (a polynomial in a
    /// possibly different variable set).
    pub fn substitute<F: Field<Elem = E>>(&self, f: &F, assignment: &[Poly<E>]) -> Result<Self> {
        if assignment.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, got: assignment.len() });
        }
        let target = assignment.first().map_or(0, |p| p.nvars);
        if assignment.iter().any(|p| p.nvars != target) {
            return Err(Error::Inconsistent(String::from("substitution targets differ in arity")));
        }
        let mut powers: Vec<Vec<Poly<E>>> =
            assignment.iter().map(|p| vec![Poly::constant(f, target, f.one()), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(f, target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(f, &assignment[i]);
                    powers[i].push(next);
                }
                t = t.mul(f, &powers[i][e as usize]);
                if t.is_zero() {
                    break;
                }
            }
            out = out.add(f, &t);
        }
        Ok(out)
    }

    pub fn display<F: Field<Elem = E>>(&self, f: &F, names: &[String]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut s = f.format(c);
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => s = format!("{}*{}", s, names[i]),
                    _ => s = format!("{}*{}^{}", s, names[i], e),
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

/// Monomial basis of one graded slice, with a reverse index.
#[derive(Debug, Clone)]
pub struct SliceBasis {
    nvars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl SliceBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let monomials = monomials_of_degree(nvars, degree);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Self { nvars, degree, monomials, index }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn coords<E: Clone + PartialEq>(&self, p: &Poly<E>) -> Result<SparseRow<E>> {
        let mut row = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let i = self.index_of(m).ok_or(Error::NonHomogeneous(0))?;
            row.push((i, c.clone()));
        }
        row.sort_by_key(|(c, _)| *c);
        Ok(row)
    }

    pub fn poly<F: Field>(&self, f: &F, row: &[(usize, F::Elem)]) -> Poly<F::Elem> {
        Poly::from_terms(f, self.nvars, row.iter().map(|(i, c)| (self.monomials[*i].clone(), c.clone())))
    }
}

/// Degree-`m` slice of the ideal generated by homogeneous `generators`:
/// the span of `u * g` over generators `g` and monomials `u` of degree
/// `m - deg g`.
pub fn ideal_degree_component<F: Field>(
    f: &F,
    generators: &[Poly<F::Elem>],
    m: u32,
    nvars: usize,
) -> Result<(SliceBasis, LinSpace<F>)> {
    for (i, g) in generators.iter().enumerate() {
        if !g.is_homogeneous() || g.nvars() != nvars {
            return Err(Error::NonHomogeneous(i));
        }
    }
    let slice = SliceBasis::new(nvars, m);
    let mut rows = Vec::new();
    let mut multipliers: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for g in generators {
        let Some(dg) = g.degree() else { continue };
        if dg > m {
            continue;
        }
        let us = multipliers.entry(m - dg).or_insert_with(|| monomials_of_degree(nvars, m - dg));
        for u in us.iter() {
            let prod = g.mul_monomial(f, u, &f.one());
            rows.push(slice.coords(&prod)?);
        }
    }
    let space = LinSpace::from_rows(f.clone(), slice.len(), rows.iter());
    Ok((slice, space))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn slice_sizes() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        assert_eq!(monomials_of_degree(8, 2).len(), 36);
        for v in 1..6 {
            for m in 0..6 {
                assert_eq!(monomials_of_degree(v, m).len(), binom(v + m as usize - 1, m as usize));
            }
        }
    }

    #[test]
    fn slice_is_strictly_decreasing_grlex() {
        let ms = monomials_of_degree(3, 3);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(ms[0].exponents(), &[3, 0, 0]);
    }

    #[test]
    fn substitution_examples() {
        let f = PrimeField::new(3).unwrap();
        let x1 = Poly::var(&f, 2, 0);
        let x2 = Poly::var(&f, 2, 1);
        let t = Poly::var(&f, 1, 0);
        let prod = x1.mul(&f, &x2);
        assert_eq!(prod.substitute(&f, &[t.clone(), t.clone()]).unwrap(), t.mul(&f, &t));

        let sum = x1.add(&f, &x2);
        let cancel = sum.substitute(&f, &[x1.clone(), x1.neg(&f)]).unwrap();
        assert!(cancel.is_zero());

        // (x1 + x2)^2 with x2 -> x1 is 4 x1^2 = x1^2 over F_3
        let sq = sum.pow(&f, 2).substitute(&f, &[x1.clone(), x1.clone()]).unwrap();
        assert_eq!(sq, x1.mul(&f, &x1));
    }

    #[test]
    fn ideal_slice_examples() {
        let f = PrimeField::new(7).unwrap();
        let x = Poly::var(&f, 2, 0);
        let y = Poly::var(&f, 2, 1);
        let (_, s) = ideal_degree_component(&f, &[x.clone(), y.clone()], 2, 2).unwrap();
        assert_eq!(s.dim(), 3);
        let (_, s) = ideal_degree_component(&f, &[x.mul(&f, &y)], 2, 2).unwrap();
        assert_eq!(s.dim(), 1);

        let x = Poly::var(&f, 3, 0);
        let y = Poly::var(&f, 3, 1);
        let z = Poly::var(&f, 3, 2);
        let (_, s) = ideal_degree_component(&f, &[x.mul(&f, &y), x.mul(&f, &z)], 3, 3).unwrap();
        assert_eq!(s.dim(), 5);
    }

    #[test]
    fn non_homogeneous_generator_is_rejected() {
        let f = PrimeField::new(7).unwrap();
        let x = Poly::var(&f, 2, 0);
        let bad = x.add(&f, &x.mul(&f, &x));
        assert_eq!(ideal_degree_component(&f, &[bad], 2, 2).unwrap_err(), Error::NonHomogeneous(0));
    }
}
