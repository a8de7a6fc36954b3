use commscheme_core::betti::{betti_table, GradedModuleSlices};
use commscheme_core::linalg::{kernel_basis, rank, sparse_from_dense, SparseRow};
use commscheme_core::poly::ideal_degree_component;
use commscheme_core::{Field, LinSpace, Monomial, Poly, PrimeField};
use proptest::prelude::*;

const P: u64 = 7;

fn f() -> PrimeField {
    PrimeField::new(P).unwrap()
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..P, cols), rows)
}

fn sparse(rows: &[Vec<u64>]) -> Vec<SparseRow<u64>> {
    let f = f();
    rows.iter().map(|r| sparse_from_dense(&f, r)).collect()
}

fn dot(f: &PrimeField, row: &[u64], v: &SparseRow<u64>) -> u64 {
    let mut acc = 0;
    for (c, x) in v {
        f.add_mul(&mut acc, &row[*c], x);
    }
    acc
}

fn poly(nvars: usize, deg: u32) -> impl Strategy<Value = Poly<u64>> {
    prop::collection::vec((prop::collection::vec(0u16..=deg as u16, nvars), 1..P), 0..5).prop_map(move |terms| {
        let f = f();
        Poly::from_terms(&f, nvars, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(rows in matrix(5, 6)) {
        let f = f();
        let s = sparse(&rows);
        let r = rank(&f, &s, 6);
        let ker = kernel_basis(&f, &s, 6);
        prop_assert_eq!(r + ker.dim(), 6);
        for v in ker.basis() {
            for row in &rows {
                prop_assert_eq!(dot(&f, row, v), 0);
            }
        }
    }

    #[test]
    fn echelon_form_is_canonical(rows in matrix(4, 6), perm_seed in any::<u64>(), scale in 1..P, mix in 0..P) {
        let f = f();
        let s = sparse(&rows);
        let a = LinSpace::from_rows(f, 6, s.iter());
        let mut shuffled = s.clone();
        let len = shuffled.len();
        shuffled.rotate_left((perm_seed as usize) % len);
        shuffled.reverse();
        let scaled: Vec<SparseRow<u64>> = shuffled
            .iter()
            .map(|r| r.iter().map(|(c, x)| (*c, f.mul(x, &scale))).collect())
            .collect();
        let mut combos = scaled.clone();
        let extra = commscheme_core::linalg::add_scaled(&f, &scaled[0], &mix, &scaled[1]);
        combos.push(extra);
        let b = LinSpace::from_rows(f, 6, combos.iter());
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert_eq!(a.pivots(), b.pivots());
    }

    #[test]
    fn polynomial_ring_axioms(a in poly(3, 2), b in poly(3, 2), c in poly(3, 2)) {
        let f = f();
        prop_assert_eq!(a.mul(&f, &b), b.mul(&f, &a));
        prop_assert_eq!(a.mul(&f, &b).mul(&f, &c), a.mul(&f, &b.mul(&f, &c)));
        prop_assert_eq!(a.mul(&f, &b.add(&f, &c)), a.mul(&f, &b).add(&f, &a.mul(&f, &c)));
        prop_assert_eq!(a.add(&f, &b).add(&f, &c), a.add(&f, &b.add(&f, &c)));
        prop_assert!(a.sub(&f, &a).is_zero());
        let one = Poly::constant(&f, 3, f.one());
        prop_assert_eq!(a.mul(&f, &one), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(3, 2), b in poly(3, 2), pt in prop::collection::vec(0..P, 3)) {
        let f = f();
        prop_assert_eq!(a.mul(&f, &b).eval(&f, &pt), f.mul(&a.eval(&f, &pt), &b.eval(&f, &pt)));
        prop_assert_eq!(a.add(&f, &b).eval(&f, &pt), f.add(&a.eval(&f, &pt), &b.eval(&f, &pt)));
    }

    #[test]
    fn ideal_components_grow(c1 in prop::collection::vec(0..P, 3), c2 in prop::collection::vec(0..P, 3)) {
        let f = f();
        let lin = |c: &[u64]| Poly::from_terms(&f, 3, (0..3).map(|i| (Monomial::var(3, i), c[i])));
        let q1 = lin(&c1).mul(&f, &lin(&c2));
        let q2 = Poly::var(&f, 3, 0).mul(&f, &Poly::var(&f, 3, 2));
        let gens1 = vec![q1.clone()];
        let gens2 = vec![q1, q2];
        let mut prev = 0;
        for m in 0..5 {
            let (_, i1) = ideal_degree_component(&f, &gens1, m, 3).unwrap();
            let (_, i2) = ideal_degree_component(&f, &gens2, m, 3).unwrap();
            prop_assert!(i1.dim() >= prev);
            prop_assert!(i2.contains_space(&i1));
            prev = i1.dim();
        }
    }

    #[test]
    fn betti_numbers_ignore_the_basis(a in 1..P, b in 0..P, deg in 2i64..4) {
        let f = f();
        let x = Poly::var(&f, 3, 0);
        let y = Poly::var(&f, 3, 1);
        let z = Poly::var(&f, 3, 2);
        let gens = vec![x.mul(&f, &y), x.mul(&f, &z), y.mul(&f, &z)];
        let module = GradedModuleSlices::ideal(f, &gens, 3, 5).unwrap();
        let before = betti_table(&module, 5).unwrap();
        let mut changed = module.clone();
        let dim = changed.dim(deg).unwrap();
        prop_assume!(dim >= 2);
        // new_0 = a old_0 + b old_1, new_k = old_k otherwise.
        let mut change: Vec<SparseRow<u64>> = (0..dim).map(|k| vec![(k, 1)]).collect();
        change[0] = if b == 0 { vec![(0, a)] } else { vec![(0, a), (1, b)] };
        let ainv = f.inv(&a).unwrap();
        let mut inverse: Vec<SparseRow<u64>> = (0..dim).map(|k| vec![(k, 1)]).collect();
        let nb = f.neg(&f.mul(&b, &ainv));
        inverse[0] = if nb == 0 { vec![(0, ainv)] } else { vec![(0, ainv), (1, nb)] };
        changed.change_basis(deg, &change, &inverse).unwrap();
        prop_assert_eq!(betti_table(&changed, 5).unwrap(), before);
    }
}

#[test]
fn three_coordinate_lines() {
    let f = f();
    let x = Poly::var(&f, 3, 0);
    let y = Poly::var(&f, 3, 1);
    let z = Poly::var(&f, 3, 2);
    let gens = vec![x.mul(&f, &y), x.mul(&f, &z), y.mul(&f, &z)];
    let module = GradedModuleSlices::ideal(f, &gens, 3, 6).unwrap();
    let t = betti_table(&module, 6).unwrap();
    assert_eq!(t.get(0, 2), 3);
    assert_eq!(t.get(1, 3), 2);
    assert_eq!(t.entries.len(), 2);
    assert_eq!(t.regularity(), Some(2));
}
