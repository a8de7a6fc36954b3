//! The cubic lattice maximization, partitions and Schur dimensions, and the
//! explicit characteristic bounds.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::betti::MAX_DOUBLING_EXPONENT;
use crate::error::{Error, Result};

/// Largest `n` accepted by the exhaustive search.
pub const BRUTE_FORCE_MAX_N: i64 = 8;

/// `F_m(x) = sum_i (x_i - x_{i-1}) x_{m+i} (n - x_{m+i}) + (x_{m+i} - x_{m+i+1}) x_i (n - x_i)`
/// with `x_0 = x_{2m+1} = 0`.
pub fn eval_f(n: i64, m: usize, point: &[i64]) -> Result<i64> {
    if point.len() != 2 * m {
        return Err(Error::Arity { expected: 2 * m, got: point.len() });
    }
    if m == 0 || m as i64 > n {
        return Err(Error::OutOfDomain(format!("m = {m} must lie in 1..={n}")));
    }
    let x = |i: usize| if i == 0 || i == 2 * m + 1 { 0 } else { point[i - 1] };
    Ok((1..=m)
        .map(|i| (x(i) - x(i - 1)) * x(m + i) * (n - x(m + i)) + (x(m + i) - x(m + i + 1)) * x(i) * (n - x(i)))
        .sum())
}

/// Increasing `m`-tuples `0 < a_1 < ... < a_m <= n`.
pub fn increasing_tuples(n: i64, m: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: i64, n: i64, m: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let left = (m - cur.len()) as i64;
        for a in start..=n - left + 1 {
            cur.push(a);
            rec(a + 1, n, m, cur, out);
            cur.pop();
        }
    }
    rec(1, n, m, &mut cur, &mut out);
    out
}

/// Whether `point` lies in `V_m`.
pub fn in_v(n: i64, m: usize, point: &[i64]) -> bool {
    point.len() == 2 * m
        && point[0] > 0
        && point[..m].windows(2).all(|w| w[0] < w[1])
        && point[m - 1] <= n
        && point[m] <= n
        && point[m..].windows(2).all(|w| w[0] > w[1])
        && point[2 * m - 1] > 0
}

/// Exhaustive maximum of `F_m` over all `m` and all of `V_m`.
pub fn lemma_max_bruteforce(n: i64) -> Result<i64> {
    if !(2..=BRUTE_FORCE_MAX_N).contains(&n) {
        return Err(Error::OutOfDomain(format!("exhaustive search needs 2 <= n <= {BRUTE_FORCE_MAX_N}, got {n}")));
    }
    let mut best = i64::MIN;
    for m in 1..=n as usize {
        let tuples = increasing_tuples(n, m);
        for head in &tuples {
            for tail in &tuples {
                let point: Vec<i64> = head.iter().copied().chain(tail.iter().rev().copied()).collect();
                best = best.max(eval_f(n, m, &point)?);
            }
        }
    }
    Ok(best)
}

pub fn lemma_max_closed(n: i64) -> i64 {
    (n * n * n - n) / 3
}

/// `H_m` at `beta = (1, ..., m)`: `(n^3 - (n - m)^3 - m) / 3`.
pub fn h_beta(n: i64, m: i64) -> i64 {
    (n * n * n - (n - m).pow(3) - m) / 3
}

/// Outcome of evaluating `H_m` through the reduction functions `f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub f: Vec<i64>,
    pub h: i64,
    /// All `f_i` are integers with `n >= f_1 > ... > f_m > 0`.
    pub matches: bool,
}

/// `f_i = (2n - x_i - x_{i-1}) / 2 + (1 - (-1)^{x_i + x_{i-1}}) / 4`, then
/// `H_m(x) = F_m(x, f(x))`.
pub fn h_reduction_check(n: i64, point: &[i64]) -> Result<Reduction> {
    let m = point.len();
    let in_w = m >= 1 && point[0] > 0 && point.windows(2).all(|w| w[0] < w[1]) && point[m - 1] <= n;
    if !in_w {
        return Err(Error::OutOfDomain(format!("{point:?} is not in W_{m} for n = {n}")));
    }
    let mut integral = true;
    let mut f = Vec::with_capacity(m);
    for i in 0..m {
        let prev = if i == 0 { 0 } else { point[i - 1] };
        let s = point[i] + prev;
        let parity = if s % 2 == 0 { 0 } else { 2 };
        let four_f = 2 * (2 * n - s) + parity;
        integral &= four_f % 4 == 0;
        f.push(four_f.div_euclid(4));
    }
    let full: Vec<i64> = point.iter().copied().chain(f.iter().copied()).collect();
    let h = eval_f(n, m, &full)?;
    let ordered = f[0] <= n && f.windows(2).all(|w| w[0] > w[1]) && f[m - 1] > 0;
    Ok(Reduction { f, h, matches: integral && ordered })
}

/// Maximum of `H_m` over `1 <= m <= n` and `W_m`.
pub fn reduced_max(n: i64) -> Result<i64> {
    let mut best = i64::MIN;
    for m in 1..=n as usize {
        for w in increasing_tuples(n, m) {
            best = best.max(h_reduction_check(n, &w)?.h);
        }
    }
    Ok(best)
}

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfDomain(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `conj_j = #{ i : lambda_i >= j }`.
    pub fn conjugate(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=top).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition { parts }
    }
}

/// All partitions of `k`, in decreasing lexicographic order.
pub fn partitions(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    rec(k, k, &mut cur, &mut out);
    out
}

/// Number of semistandard tableaux of shape `lambda` with entries in `1..=n`.
pub fn schur_dim(lambda: &Partition, n: u32) -> u64 {
    if lambda.len() > n as usize {
        return 0;
    }
    let cells: Vec<(usize, usize)> =
        lambda.parts.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts.iter().map(|&len| vec![0; len as usize]).collect();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, n: u32) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..=n {
            grid[r][c] = v;
            total += fill(k + 1, cells, grid, n);
        }
        grid[r][c] = 0;
        total
    }
    fill(0, &cells, &mut grid, n)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Both sides of `dim wedge^k (F (x) G) = sum_{|lambda| = k} s_lambda(F) s_conj(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyCheck {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub equal: bool,
}

pub fn cauchy_check(k: u32, dim_f: u32, dim_g: u32) -> CauchyCheck {
    let lhs = binomial(dim_f as u64 * dim_g as u64, k as u64);
    let rhs: BigUint = partitions(k)
        .iter()
        .map(|l| BigUint::from(schur_dim(l, dim_f)) * BigUint::from(schur_dim(&l.conjugate(), dim_g)))
        .sum();
    let equal = lhs == rhs;
    CauchyCheck { lhs, rhs, equal }
}

/// `sum_j i_j (dim_j - i_j) < p`.
pub fn semisimple_bound_check(dims: &[u64], exts: &[u64], p: u64) -> Result<bool> {
    if dims.len() != exts.len() {
        return Err(Error::Arity { expected: dims.len(), got: exts.len() });
    }
    let mut sum = BigUint::zero();
    for (&d, &i) in dims.iter().zip(exts) {
        if i > d {
            return Err(Error::OutOfDomain(format!("exterior degree {i} exceeds dimension {d}")));
        }
        sum += BigUint::from(i) * BigUint::from(d - i);
    }
    Ok(sum < BigUint::from(p))
}

fn cubic_term(n: u64, d: u64) -> BigInt {
    let n = BigInt::from(n);
    BigInt::from(d) * (&n * &n * &n - &n) / BigInt::from(3)
}

/// `2 (reg - 1)(n - 1) + d (n^3 - n) / 3`.
pub fn thm_bound_goodfil(n: u64, d: u64, reg: i64) -> BigInt {
    BigInt::from(2) * BigInt::from(reg - 1) * BigInt::from(n as i64 - 1) + cubic_term(n, d)
}

/// `2 alpha (n - 1) + m (n^3 - n) / 3`.
pub fn lemma31_bound(n: u64, m: u64, alpha: i64) -> BigInt {
    BigInt::from(2) * BigInt::from(alpha) * BigInt::from(n as i64 - 1) + cubic_term(n, m)
}

/// `12^{2^{d dim g - 4}} (2n - 2) + d (n^3 - n) / 3`.
pub fn thm_bound_iso(n: u64, d: u64, lie_dim: u64) -> Result<BigUint> {
    let total = d * lie_dim;
    if total < 4 {
        return Err(Error::BoundUndefined(total as usize));
    }
    let e = total - 4;
    if e > MAX_DOUBLING_EXPONENT {
        return Err(Error::TooLarge(e));
    }
    let head = BigUint::from(12u32).pow(1u32 << e) * BigUint::from(2 * n - 2);
    let tail = cubic_term(n, d).to_biguint().expect("nonnegative");
    Ok(head + tail)
}

/// Whether `p` lies below the isomorphism bound (always true when the
/// bound is too large to write down).
pub fn below_iso_bound(p: u64, n: u64, d: u64, lie_dim: u64) -> Result<bool> {
    match thm_bound_iso(n, d, lie_dim) {
        Ok(b) => Ok(BigUint::from(p) <= b),
        Err(Error::TooLarge(_)) => Ok(true),
        Err(e) => Err(e),
    }
}

const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller-Rabin with the first 13 prime bases; exact below `3.3 * 10^24`.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &w in &WITNESSES {
        let w = BigUint::from(w);
        if *n == w {
            return true;
        }
        if (n % &w).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &w in &WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Whether [`is_probable_prime`] is a proof for numbers of this size.
pub fn primality_is_exact(n: &BigUint) -> bool {
    n.to_f64().is_some_and(|v| v < 3.3e24)
}

/// Smallest (probable) prime strictly greater than `n`.
pub fn next_prime(n: &BigUint) -> BigUint {
    let mut c = n + BigUint::one();
    while !is_probable_prime(&c) {
        c += BigUint::one();
    }
    c
}
