//! Restriction of invariants to the Cartan subalgebra, degree by degree.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldPolicy, PrimeField, QuadraticField, Rationals};
use crate::invariants::{
    apply_constant, connected_invariants, eigen_split, finite_invariants, group_invariants, reflection_action,
    sign_change, weyl_apply, weyl_generators, ModuleSlice,
};
use crate::linalg::{LinSpace, SparseRow};
use crate::poly::{Poly, SliceBasis};
use crate::scheme::{ibar_in, GroupKind, GroupSpec, Realization};

/// Ranks of `Phi` in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub group: GroupKind,
    pub n: usize,
    pub d: usize,
    pub p: u64,
    pub field: String,
    pub degree: u32,
    pub dim_source: usize,
    pub dim_target: usize,
    pub dim_image: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl DegreeReport {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }

    /// The rank relations every report must satisfy.
    pub fn is_consistent(&self) -> bool {
        self.dim_image <= self.dim_source.min(self.dim_target)
            && self.injective == (self.dim_image == self.dim_source)
            && self.surjective == (self.dim_image == self.dim_target)
    }
}

/// Restrict a vector of `Rbar_m` to `K[t^d]_m`.
pub fn restrict_row<F: Field>(
    real: &Realization<F>,
    assignment: &[Poly<F::Elem>],
    source: &SliceBasis,
    target: &SliceBasis,
    row: &[(usize, F::Elem)],
) -> Result<SparseRow<F::Elem>> {
    let f = &real.field;
    let p = source.poly(f, row).substitute(f, assignment)?;
    target.coords(&p)
}

/// Image of a subspace of `Rbar_m` in `K[t^d]_m`.
pub fn restrict_space<F: Field>(real: &Realization<F>, d: usize, m: u32, space: &LinSpace<F>) -> Result<LinSpace<F>> {
    let assignment = real.cartan_assignment(d);
    let source = SliceBasis::new(d * real.lie_dim(), m);
    let target = SliceBasis::new(d * real.rank(), m);
    let rows = space
        .basis()
        .iter()
        .map(|v| restrict_row(real, &assignment, &source, &target, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(LinSpace::from_rows(real.field.clone(), target.len(), rows.iter()))
}

/// `K[t^d]^W_m`.
pub fn weyl_target<F: Field>(real: &Realization<F>, d: usize, m: u32) -> Result<LinSpace<F>> {
    finite_invariants(&real.field, &weyl_generators(&real.spec), d, m)
}

/// `Phi: K[c^d_g]^G_m -> K[t^d]^W_m` in degree `m`.
pub fn phi_degree_check<F: Field>(real: &Realization<F>, d: usize, m: u32) -> Result<DegreeReport> {
    let (_, ibar) = ibar_in(real, d, m)?;
    let source = group_invariants(real, d, m, ModuleSlice::Quotient(&ibar))?;
    let target = weyl_target(real, d, m)?;
    let image = restrict_space(real, d, m, &source)?;
    if !target.contains_space(&image) {
        return Err(Error::Inconsistent(String::from("restricted invariant is not Weyl-invariant")));
    }
    Ok(DegreeReport {
        group: real.spec.kind,
        n: real.n(),
        d,
        p: real.field.characteristic(),
        field: real.field.name(),
        degree: m,
        dim_source: source.dim(),
        dim_target: target.dim(),
        dim_image: image.dim(),
        injective: image.dim() == source.dim(),
        surjective: image.dim() == target.dim(),
    })
}

/// `phi: K[M_n^d]^G_m -> K[c^d_g]^G_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientReport {
    pub degree: u32,
    pub dim_ambient: usize,
    pub dim_image: usize,
    pub dim_target: usize,
    pub surjective: bool,
}

pub fn phi_from_ambient<F: Field>(real: &Realization<F>, d: usize, m: u32) -> Result<AmbientReport> {
    let f = &real.field;
    let ambient = group_invariants(real, d, m, ModuleSlice::Ambient)?;
    let (slice, ibar) = ibar_in(real, d, m)?;
    let target = group_invariants(real, d, m, ModuleSlice::Quotient(&ibar))?;
    let mats = real.generic_matrices(d, false);
    let n = real.n();
    let assignment: Vec<Poly<F::Elem>> =
        mats.matrices.iter().flat_map(|x| (0..n).flat_map(move |i| (0..n).map(move |j| x[i][j].clone()))).collect();
    let amb_slice = SliceBasis::new(d * n * n, m);
    let rows = ambient
        .basis()
        .iter()
        .map(|v| {
            let p = amb_slice.poly(f, v).substitute(f, &assignment)?;
            Ok(ibar.reduce(&slice.coords(&p)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let image = LinSpace::from_rows(f.clone(), slice.len(), rows.iter());
    if !target.contains_space(&image) {
        return Err(Error::Inconsistent(String::from("restricted ambient invariant is not invariant")));
    }
    Ok(AmbientReport {
        degree: m,
        dim_ambient: ambient.dim(),
        dim_image: image.dim(),
        dim_target: target.dim(),
        surjective: image.dim() == target.dim(),
    })
}

/// Behaviour of `Phi` on the eigenparts of the `O_n / SO_n` involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    pub degree: u32,
    pub source: [usize; 2],
    pub target: [usize; 2],
    pub image: [usize; 2],
    /// `Phi` maps the `(i)`-part of the source into the `(i)`-part of the
    /// target.
    pub preserved: [bool; 2],
}

impl SplitReport {
    pub fn holds(&self) -> bool {
        self.preserved[0] && self.preserved[1]
    }
}

/// Split both sides of `Phi` for `SO_n`, `n` even, by the reflection `g0` of
/// `O_n` and the sign change `w0`, and check that each part maps into the
/// matching part.
pub fn so_even_split_check<F: Field>(real: &Realization<F>, d: usize, m: u32) -> Result<SplitReport> {
    let spec = &real.spec;
    if !spec.kind.is_orthogonal() || spec.n % 2 == 1 {
        return Err(Error::Unsupported(String::from("the eigen-split check needs an even orthogonal group")));
    }
    let f = &real.field;
    let (slice, ibar) = ibar_in(real, d, m)?;
    let source = connected_invariants(real, d, m, ModuleSlice::Quotient(&ibar))?;
    let g0 = reflection_action(real, d, false)?;
    let (s_plus, s_minus) = eigen_split(&source, |v| apply_constant(f, &slice, &g0, v, Some(&ibar)))?;

    let mut so = spec.clone();
    so.kind = GroupKind::SO;
    let target = finite_invariants(f, &weyl_generators(&so), d, m)?;
    let w0 = sign_change(real.rank(), &[0]);
    let (t_plus, t_minus) = eigen_split(&target, |v| weyl_apply(f, &w0, d, m, v))?;

    let i_plus = restrict_space(real, d, m, &s_plus)?;
    let i_minus = restrict_space(real, d, m, &s_minus)?;
    Ok(SplitReport {
        degree: m,
        source: [s_plus.dim(), s_minus.dim()],
        target: [t_plus.dim(), t_minus.dim()],
        image: [i_plus.dim(), i_minus.dim()],
        preserved: [t_plus.contains_space(&i_plus), t_minus.contains_space(&i_minus)],
    })
}

/// Build the split realization over the field `policy` selects for
/// characteristic `p` (`p = 0` means the rationals) and run `job`.
pub fn with_split_field<T>(spec: &GroupSpec, p: u64, policy: FieldPolicy, job: impl SplitJob<T>) -> Result<T> {
    let needs_sqrt = spec.kind.is_orthogonal();
    match policy {
        FieldPolicy::Rational => job.run(&Realization::split(Rationals, spec)?),
        _ if p == 0 => job.run(&Realization::split(Rationals, spec)?),
        FieldPolicy::Quadratic => job.run(&Realization::split(QuadraticField::new(p)?, spec)?),
        FieldPolicy::Prime => job.run(&Realization::split(PrimeField::new(p)?, spec)?),
        FieldPolicy::Auto => {
            let fp = PrimeField::new(p)?;
            if needs_sqrt && fp.sqrt_neg_one().is_none() {
                job.run(&Realization::split(QuadraticField::new(p)?, spec)?)
            } else {
                job.run(&Realization::split(fp, spec)?)
            }
        }
    }
}

/// A computation generic over the ground field.
pub trait SplitJob<T> {
    fn run<F: Field>(&self, real: &Realization<F>) -> Result<T>;
}

/// [`phi_degree_check`] for one degree.
pub struct PhiJob {
    pub d: usize,
    pub degree: u32,
}

impl SplitJob<DegreeReport> for PhiJob {
    fn run<F: Field>(&self, real: &Realization<F>) -> Result<DegreeReport> {
        phi_degree_check(real, self.d, self.degree)
    }
}

/// [`phi_from_ambient`] for one degree.
pub struct AmbientJob {
    pub d: usize,
    pub degree: u32,
}

impl SplitJob<AmbientReport> for AmbientJob {
    fn run<F: Field>(&self, real: &Realization<F>) -> Result<AmbientReport> {
        phi_from_ambient(real, self.d, self.degree)
    }
}

/// [`so_even_split_check`] for one degree.
pub struct SplitCheckJob {
    pub d: usize,
    pub degree: u32,
}

impl SplitJob<SplitReport> for SplitCheckJob {
    fn run<F: Field>(&self, real: &Realization<F>) -> Result<SplitReport> {
        so_even_split_check(real, self.d, self.degree)
    }
}
