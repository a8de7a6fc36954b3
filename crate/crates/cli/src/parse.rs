//! Parsers for polynomial and character arguments.

use anyhow::{anyhow, bail, Context, Result};
use commscheme_core::characters::Character;
use commscheme_core::{Field, Monomial, Poly};

/// Parse a polynomial such as `x*y - 3*z^2` in the named variables.
pub fn parse_poly<F: Field>(f: &F, names: &[String], src: &str) -> Result<Poly<F::Elem>> {
    let nvars = names.len();
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        bail!("empty polynomial");
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (i, c) in compact.chars().enumerate() {
        if (c == '+' || c == '-') && !(i > 0 && current.ends_with('^')) {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if i > 0 {
                bail!("dangling sign in {src:?}");
            }
            negative = c == '-';
        } else {
            current.push(c);
        }
    }
    if current.is_empty() {
        bail!("polynomial {src:?} ends with a sign");
    }
    terms.push((negative, current));

    let mut poly = Poly::zero(nvars);
    for (negative, term) in terms {
        let mut coeff: i64 = if negative { -1 } else { 1 };
        let mut exps = vec![0u16; nvars];
        for factor in term.split('*') {
            if factor.is_empty() {
                bail!("empty factor in {term:?}");
            }
            if let Ok(c) = factor.parse::<i64>() {
                coeff = coeff.checked_mul(c).ok_or_else(|| anyhow!("coefficient overflow in {term:?}"))?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u16>().with_context(|| format!("bad exponent in {factor:?}"))?),
                None => (factor, 1),
            };
            let idx = names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| anyhow!("unknown variable {name:?} (known: {})", names.join(",")))?;
            exps[idx] = exps[idx].checked_add(exp).ok_or_else(|| anyhow!("exponent overflow in {term:?}"))?;
        }
        poly.add_term(f, Monomial::from_exponents(exps), &f.from_i64(coeff));
    }
    Ok(poly)
}

pub fn parse_names(src: &str) -> Result<Vec<String>> {
    let names: Vec<String> = src.split(',').map(|s| s.trim().to_owned()).collect();
    if names.iter().any(|n| n.is_empty() || n.parse::<i64>().is_ok()) {
        bail!("variable names must be non-empty and non-numeric: {src:?}");
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            bail!("duplicate variable {n:?}");
        }
    }
    Ok(names)
}

/// Parse `w1,w2,...:c; ...`, e.g. `2,0:1;0,2:1` for `z1^2 + z2^2`.
pub fn parse_character(src: &str) -> Result<Character> {
    let mut rank = None;
    let mut out = Vec::new();
    for part in src.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (w, c) = part.split_once(':').ok_or_else(|| anyhow!("expected weight:coefficient, got {part:?}"))?;
        let weight = w
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .with_context(|| format!("bad weight {w:?}"))?;
        let coeff: i64 = c.trim().parse().with_context(|| format!("bad coefficient {c:?}"))?;
        match rank {
            None => rank = Some(weight.len()),
            Some(r) if r != weight.len() => bail!("weights of different lengths in {src:?}"),
            _ => {}
        }
        out.push((weight, coeff));
    }
    let rank = rank.ok_or_else(|| anyhow!("empty character"))?;
    Ok(Character::from_terms(rank, out))
}
