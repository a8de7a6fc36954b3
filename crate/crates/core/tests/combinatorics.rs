use std::collections::BTreeMap;

use commscheme_core::characters::{decompose_into_weyl, weyl_character, WeylDecomposition};
use commscheme_core::combinat::{
    binomial, cauchy_check, eval_f, h_beta, h_reduction_check, in_v, increasing_tuples, lemma_max_bruteforce,
    lemma_max_closed, partitions, schur_dim, Partition,
};
use commscheme_core::invariants::weyl_generators;
use commscheme_core::scheme::group_spec;
use commscheme_core::{GroupKind, GroupSpec};
use num_bigint::BigUint;
use proptest::prelude::*;

/// `prod (n + content) / hook` over the boxes of `lambda`.
fn hook_content(lambda: &Partition, n: u32) -> u64 {
    let conj = lambda.conjugate();
    let (mut num, mut den) = (BigUint::from(1u32), BigUint::from(1u32));
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            let factor = n as i64 + content;
            if factor <= 0 {
                return 0;
            }
            num *= factor as u64;
            let hook = (row as usize - j - 1) + (conj.parts()[j] as usize - i - 1) + 1;
            den *= hook as u64;
        }
    }
    u64::try_from(num / den).unwrap()
}

#[test]
fn schur_dimensions_match_hook_content() {
    for k in 0..=7 {
        for lambda in partitions(k) {
            for n in 0..=5 {
                assert_eq!(schur_dim(&lambda, n), hook_content(&lambda, n), "{:?} n={n}", lambda.parts());
            }
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|k| partitions(k).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn cauchy_identity_in_small_dimensions() {
    for k in 0..=8 {
        for a in 1..=4 {
            for b in 1..=4 {
                let c = cauchy_check(k, a, b);
                assert!(c.equal, "k={k} dimF={a} dimG={b}");
                assert_eq!(c.lhs, binomial((a * b) as u64, k as u64));
            }
        }
    }
}

/// Exhaustive search that does not share the tuple enumeration of the
/// library: every point of `{0..=n}^{2m}` filtered by the definition of `V_m`.
fn naive_max(n: i64) -> i64 {
    let mut best = i64::MIN;
    for m in 1..=n as usize {
        let len = 2 * m;
        let total = (n as usize + 1).pow(len as u32);
        for code in 0..total {
            let mut c = code;
            let point: Vec<i64> = (0..len)
                .map(|_| {
                    let v = (c % (n as usize + 1)) as i64;
                    c /= n as usize + 1;
                    v
                })
                .collect();
            let head_ok = point[0] > 0 && point[..m].windows(2).all(|w| w[0] < w[1]) && point[m - 1] <= n;
            let tail_ok = point[m] <= n && point[m..].windows(2).all(|w| w[0] > w[1]) && point[len - 1] > 0;
            if head_ok && tail_ok {
                assert!(in_v(n, m, &point));
                best = best.max(eval_f(n, m, &point).unwrap());
            }
        }
    }
    best
}

#[test]
fn lemma_maximum_by_independent_search() {
    for n in 2..=4 {
        assert_eq!(naive_max(n), lemma_max_closed(n), "n={n}");
    }
    for n in 2..=6 {
        assert_eq!(lemma_max_bruteforce(n).unwrap(), lemma_max_closed(n), "n={n}");
    }
}

#[test]
fn h_beta_matches_the_reduction() {
    for n in 1..=6 {
        for m in 1..=n {
            let beta: Vec<i64> = (1..=m).collect();
            let r = h_reduction_check(n, &beta).unwrap();
            assert!(r.matches, "n={n} m={m}");
            assert_eq!(r.h, h_beta(n, m));
        }
    }
    assert_eq!(increasing_tuples(4, 2).len(), 6);
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(k in 0u32..12, pick in any::<prop::sample::Index>()) {
        let all = partitions(k);
        let lambda = &all[pick.index(all.len())];
        prop_assert_eq!(&lambda.conjugate().conjugate(), lambda);
        prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
    }
}

/// Weyl's dimension formula over the positive roots.
fn weyl_dimension(spec: &GroupSpec, lambda: &[i64]) -> i64 {
    let r = lambda.len();
    let e = |i: usize| -> Vec<i64> { (0..r).map(|k| i64::from(k == i)).collect() };
    let add = |a: &[i64], b: &[i64], s: i64| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + s * y).collect() };
    let mut roots: Vec<Vec<i64>> = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            roots.push(add(&e(i), &e(j), -1));
            if spec.kind != GroupKind::GL {
                roots.push(add(&e(i), &e(j), 1));
            }
        }
        match spec.kind {
            GroupKind::Sp => roots.push(add(&e(i), &e(i), 1)),
            GroupKind::SO if spec.n % 2 == 1 => roots.push(e(i)),
            _ => {}
        }
    }
    // Doubled rho keeps type B integral.
    let rho2: Vec<i64> = (0..r)
        .map(|i| {
            let k = (r - 1 - i) as i64;
            match spec.kind {
                GroupKind::GL => 2 * k,
                GroupKind::Sp => 2 * (k + 1),
                _ if spec.n % 2 == 1 => 2 * k + 1,
                _ => 2 * k,
            }
        })
        .collect();
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let (mut num, mut den) = (1i128, 1i128);
    for a in &roots {
        let shifted: Vec<i64> = lambda.iter().zip(&rho2).map(|(l, p)| 2 * l + p).collect();
        num *= dot(&shifted, a) as i128;
        den *= dot(&rho2, a) as i128;
    }
    assert_eq!(num % den, 0);
    (num / den) as i64
}

fn dominant_weights(spec: &GroupSpec, bound: i64) -> Vec<Vec<i64>> {
    let r = spec.rank();
    let mut out = Vec::new();
    let total = (2 * bound + 1).pow(r as u32);
    for code in 0..total {
        let mut c = code;
        let w: Vec<i64> = (0..r)
            .map(|_| {
                let v = c % (2 * bound + 1) - bound;
                c /= 2 * bound + 1;
                v
            })
            .collect();
        if weyl_character(&w, spec).is_ok() {
            out.push(w);
        }
    }
    out
}

#[test]
fn weyl_characters_have_weyl_dimensions_and_symmetry() {
    for (kind, n) in [
        (GroupKind::GL, 2),
        (GroupKind::GL, 3),
        (GroupKind::Sp, 4),
        (GroupKind::SO, 3),
        (GroupKind::SO, 5),
        (GroupKind::SO, 4),
        (GroupKind::SO, 6),
    ] {
        let spec = group_spec(kind, n).unwrap();
        let gens = weyl_generators(&spec).generators;
        let ws = dominant_weights(&spec, 2);
        assert!(!ws.is_empty());
        for w in ws {
            let ch = weyl_character(&w, &spec).unwrap();
            assert_eq!(ch.dimension(), weyl_dimension(&spec, &w), "{kind}{n} {w:?}");
            assert!(ch.is_invariant(&gens));
            assert_eq!(ch.terms.get(&w), Some(&1));
            assert_eq!(ch.terms.keys().next_back(), Some(&w));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn decomposition_inverts_reconstruction(
        pick in prop::sample::select(vec![(GroupKind::GL, 2), (GroupKind::Sp, 4), (GroupKind::SO, 4), (GroupKind::SO, 5)]),
        coeffs in prop::collection::vec(-3i64..4, 6),
    ) {
        let spec = group_spec(pick.0, pick.1).unwrap();
        let ws = dominant_weights(&spec, 2);
        let coefficients: BTreeMap<Vec<i64>, i64> = ws
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| *c != 0)
            .collect();
        let dec = WeylDecomposition { coefficients };
        let ch = dec.reconstruct(&spec).unwrap();
        prop_assert_eq!(decompose_into_weyl(&ch, &spec).unwrap(), dec);
    }
}
