//! Torus characters, Weyl characters and decomposition into them.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::invariants::{monomial_weight, variable_weights, weyl_generators, ModuleSlice};
use crate::linalg::LinSpace;
use crate::poly::SliceBasis;
use crate::scheme::{GroupKind, GroupSpec, Matrix, Realization};

/// A Laurent polynomial in the torus variables with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Character {
    pub rank: usize,
    pub terms: BTreeMap<Vec<i64>, i64>,
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], 1)
    }

    pub fn monomial(weight: Vec<i64>, coeff: i64) -> Self {
        let mut c = Self::zero(weight.len());
        c.add_term(weight, coeff);
        c
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Vec<i64>, i64)>) -> Self {
        let mut c = Self::zero(rank);
        for (w, k) in terms {
            c.add_term(w, k);
        }
        c
    }

    pub fn add_term(&mut self, weight: Vec<i64>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(weight) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Character {
        Character::from_terms(self.rank, self.terms.iter().map(|(w, c)| (w.clone(), c * k)))
    }

    pub fn sub(&self, other: &Character) -> Character {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), ca * cb);
            }
        }
        out
    }

    /// Value at `z = (1, ..., 1)`.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Substitute `z -> z^g` for an integer matrix acting on weights.
    pub fn act(&self, g: &Matrix<i64>) -> Character {
        Character::from_terms(self.rank, self.terms.iter().map(|(w, c)| (apply(g, w), *c)))
    }

    pub fn is_invariant(&self, gens: &[Matrix<i64>]) -> bool {
        gens.iter().all(|g| self.act(g) == *self)
    }

    fn leading(&self) -> Option<(&Vec<i64>, &i64)> {
        self.terms.iter().next_back()
    }
}

fn apply(g: &Matrix<i64>, w: &[i64]) -> Vec<i64> {
    g.iter().map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum()).collect()
}

/// Root system type of a connected classical group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

pub fn root_type(spec: &GroupSpec) -> Result<RootType> {
    match spec.kind {
        GroupKind::GL => Ok(RootType::A),
        GroupKind::Sp => Ok(RootType::C),
        GroupKind::SO if spec.n % 2 == 1 => Ok(RootType::B),
        GroupKind::SO => Ok(RootType::D),
        GroupKind::O => Err(Error::Unsupported(String::from(
            "O_n is disconnected; Weyl characters and the certificate are offered for GL, SO and Sp only",
        ))),
    }
}

/// `2 rho`, which is integral in every type.
fn doubled_rho(t: RootType, r: usize) -> Vec<i64> {
    (0..r)
        .map(|i| {
            let k = (r - 1 - i) as i64;
            match t {
                RootType::A | RootType::D => 2 * k,
                RootType::C => 2 * (k + 1),
                RootType::B => 2 * k + 1,
            }
        })
        .collect()
}

pub fn is_dominant(t: RootType, lambda: &[i64]) -> bool {
    let r = lambda.len();
    let decreasing = lambda.windows(2).all(|w| w[0] >= w[1]);
    match t {
        RootType::A => decreasing,
        RootType::B | RootType::C => decreasing && lambda.last().is_none_or(|&x| x >= 0),
        RootType::D => {
            r < 2 || (lambda[..r - 1].windows(2).all(|w| w[0] >= w[1]) && lambda[r - 2] >= lambda[r - 1].abs())
        }
    }
}

/// All elements of the Weyl group of `spec` with their determinants.
fn weyl_elements(spec: &GroupSpec) -> Vec<(Matrix<i64>, i64)> {
    let action = weyl_generators(spec);
    let r = action.rank;
    let id: Matrix<i64> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen: BTreeMap<Matrix<i64>, i64> = BTreeMap::new();
    seen.insert(id.clone(), 1);
    let mut frontier = vec![(id, 1i64)];
    let dets: Vec<i64> = action.generators.iter().map(signed_perm_det).collect();
    while let Some((g, dg)) = frontier.pop() {
        for (h, dh) in action.generators.iter().zip(&dets) {
            let gh: Matrix<i64> =
                (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| g[i][k] * h[k][j]).sum()).collect()).collect();
            if !seen.contains_key(&gh) {
                seen.insert(gh.clone(), dg * dh);
                frontier.push((gh, dg * dh));
            }
        }
    }
    seen.into_iter().collect()
}

/// Determinant of a signed permutation matrix.
fn signed_perm_det(g: &Matrix<i64>) -> i64 {
    let r = g.len();
    let perm: Vec<usize> = (0..r).map(|i| g[i].iter().position(|&x| x != 0).expect("signed permutation")).collect();
    let signs: i64 = (0..r).map(|i| g[i][perm[i]]).product();
    let mut inversions = 0;
    for i in 0..r {
        for j in i + 1..r {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    signs * if inversions % 2 == 0 { 1 } else { -1 }
}

fn alternant(elements: &[(Matrix<i64>, i64)], mu: &[i64]) -> Character {
    Character::from_terms(mu.len(), elements.iter().map(|(g, det)| (apply(g, mu), *det)))
}

/// Exact quotient of Laurent polynomials, by repeated division of
/// lexicographically leading terms.
pub fn exact_divide(num: &Character, den: &Character) -> Result<Character> {
    let (dlead, dc) = den.leading().ok_or_else(|| Error::Inconsistent(String::from("division by zero")))?;
    let (dlead, dc) = (dlead.clone(), *dc);
    let dlow = den.terms.keys().next().cloned().unwrap_or_default();
    let floor: Option<Vec<i64>> = num.terms.keys().next().map(|n| n.iter().zip(&dlow).map(|(a, b)| a - b).collect());
    let mut rem = num.clone();
    let mut quot = Character::zero(num.rank);
    while let Some((nlead, nc)) = rem.leading() {
        let below: Vec<i64> = nlead.iter().zip(&dlead).map(|(a, b)| a - b).collect();
        if nc % dc != 0 || floor.as_ref().is_some_and(|f| below < *f) {
            return Err(Error::Inconsistent(String::from("inexact character division")));
        }
        let shift: Vec<i64> = nlead.iter().zip(&dlead).map(|(a, b)| a - b).collect();
        let q = Character::monomial(shift, nc / dc);
        rem = rem.sub(&q.mul(den));
        quot = quot.add(&q);
    }
    Ok(quot)
}

/// Character of the induced module with highest weight `lambda`, by Weyl's
/// formula `A_{lambda + rho} / A_rho`.
pub fn weyl_character(lambda: &[i64], spec: &GroupSpec) -> Result<Character> {
    let t = root_type(spec)?;
    let r = spec.rank();
    if lambda.len() != r {
        return Err(Error::Arity { expected: r, got: lambda.len() });
    }
    if !is_dominant(t, lambda) {
        return Err(Error::NotDominant(format!("{lambda:?}")));
    }
    let elements = weyl_elements(spec);
    let rho2 = doubled_rho(t, r);
    let shifted: Vec<i64> = lambda.iter().zip(&rho2).map(|(l, p)| 2 * l + p).collect();
    let q = exact_divide(&alternant(&elements, &shifted), &alternant(&elements, &rho2))?;
    let mut out = Character::zero(r);
    for (w, c) in q.terms {
        if w.iter().any(|x| x % 2 != 0) {
            return Err(Error::Inconsistent(String::from("odd weight in an integral character")));
        }
        out.add_term(w.iter().map(|x| x / 2).collect(), c);
    }
    Ok(out)
}

/// `c = sum_lambda coeff_lambda chi(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylDecomposition {
    pub coefficients: BTreeMap<Vec<i64>, i64>,
}

impl WeylDecomposition {
    /// The first negative coefficient, if any.
    pub fn negative_witness(&self) -> Option<(Vec<i64>, i64)> {
        self.coefficients.iter().find(|(_, c)| **c < 0).map(|(w, c)| (w.clone(), *c))
    }

    pub fn reconstruct(&self, spec: &GroupSpec) -> Result<Character> {
        let mut out = Character::zero(spec.rank());
        for (w, c) in &self.coefficients {
            out = out.add(&weyl_character(w, spec)?.scale(*c));
        }
        Ok(out)
    }
}

pub fn decompose_into_weyl(c: &Character, spec: &GroupSpec) -> Result<WeylDecomposition> {
    let t = root_type(spec)?;
    let gens = weyl_generators(spec).generators;
    if !c.is_invariant(&gens) {
        return Err(Error::NotWeylInvariant);
    }
    let mut rem = c.clone();
    let mut coefficients = BTreeMap::new();
    while let Some((w, k)) = rem.leading() {
        let (w, k) = (w.clone(), *k);
        if !is_dominant(t, &w) {
            return Err(Error::NotDominant(format!("{w:?}")));
        }
        rem = rem.sub(&weyl_character(&w, spec)?.scale(k));
        coefficients.insert(w, k);
    }
    Ok(WeylDecomposition { coefficients })
}

/// Sum of the weights of the monomial basis of a module slice.
pub fn slice_character<F: Field>(
    real: &Realization<F>,
    d: usize,
    m: u32,
    module: ModuleSlice<'_, F>,
) -> Result<Character> {
    let ambient = matches!(module, ModuleSlice::Ambient);
    let weights = variable_weights(real, d, ambient)?;
    let slice = SliceBasis::new(weights.len(), m);
    let cols: Vec<usize> = match module {
        ModuleSlice::Quotient(ibar) => ibar.standard_columns(),
        _ => (0..slice.len()).collect(),
    };
    Ok(Character::from_terms(real.rank(), cols.into_iter().map(|c| (monomial_weight(&weights, slice.monomial(c)), 1))))
}

/// Character of a torus-stable subspace of `Rbar_m`: its echelon rows are
/// weight vectors, each of the weight of its pivot monomial.
pub fn subspace_character<F: Field>(real: &Realization<F>, d: usize, m: u32, space: &LinSpace<F>) -> Result<Character> {
    let weights = variable_weights(real, d, false)?;
    let slice = SliceBasis::new(weights.len(), m);
    for row in space.basis() {
        let w: BTreeSet<Vec<i64>> = row.iter().map(|(c, _)| monomial_weight(&weights, slice.monomial(*c))).collect();
        if w.len() > 1 {
            return Err(Error::Inconsistent(String::from("subspace is not torus-stable")));
        }
    }
    Ok(Character::from_terms(
        real.rank(),
        space.pivots().iter().map(|&c| (monomial_weight(&weights, slice.monomial(c)), 1)),
    ))
}

/// Verdict for one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub degree: u32,
    pub decomposition: WeylDecomposition,
    /// Negative Weyl coefficient, if any.
    pub witness: Option<(Vec<i64>, i64)>,
}

impl DegreeCertificate {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Decompose each graded character; a degree passes when every Weyl
/// coefficient is nonnegative. This is a necessary condition only.
pub fn goodfil_certificate(spec: &GroupSpec, characters: &[(u32, Character)]) -> Result<Vec<DegreeCertificate>> {
    root_type(spec)?;
    characters
        .iter()
        .map(|(m, c)| {
            let decomposition = decompose_into_weyl(c, spec)?;
            let witness = decomposition.negative_witness();
            Ok(DegreeCertificate { degree: *m, decomposition, witness })
        })
        .collect()
}
