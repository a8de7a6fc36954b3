//! Dispatch of subcommands to the algebra crate.

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use commscheme_core::betti::{betti_table, chardin_bound, regularity_windowed, GradedModuleSlices};
use commscheme_core::characters::{
    goodfil_certificate, slice_character, subspace_character, Character, DegreeCertificate,
};
use commscheme_core::chevalley::{phi_degree_check, with_split_field, DegreeReport, SplitJob};
use commscheme_core::combinat::{
    below_iso_bound, cauchy_check, lemma31_bound, lemma_max_bruteforce, lemma_max_closed, next_prime,
    primality_is_exact, reduced_max, thm_bound_goodfil, thm_bound_iso,
};
use commscheme_core::invariants::{group_invariants, ModuleSlice};
use commscheme_core::scheme::{group_spec, ibar_in, Realization};
use commscheme_core::{Error, Field, GroupKind, GroupSpec, PrimeField, Rationals};

use crate::args::{BettiModule, BoundCommand, CertificateModule, Cli, Command, FieldArg, GroupOpts, InvariantModule};
use crate::cache::{Cache, Lookup};
use crate::parse::{parse_character, parse_names, parse_poly};
use crate::report::{csv_table, int, ints, text_table, Report};

/// Next primes are only searched for bounds up to this many bits.
const NEXT_PRIME_MAX_BITS: u64 = 512;

/// Bounds with more digits are summarized by their digit count in reports.
const INLINE_DIGITS: usize = 100;

struct Ctx {
    cache: Option<Cache>,
    field: FieldArg,
}

/// Run the parsed command line on a pool of the requested size.
pub fn run(cli: &Cli) -> Result<Report> {
    let cache = match &cli.global.cache_dir {
        Some(dir) => Some(Cache::open(dir).with_context(|| format!("cache directory {}", dir.display()))?),
        None => None,
    };
    let ctx = Ctx { cache, field: cli.global.field };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.global.threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        builder = builder.num_threads(t);
    }
    let pool = builder.build()?;
    pool.install(|| dispatch(&ctx, &cli.command))
}

fn dispatch(ctx: &Ctx, command: &Command) -> Result<Report> {
    match command {
        Command::LemmaMax { n } => lemma_max(*n),
        Command::Betti { vars, gens, window, p, module } => {
            if *p == 0 {
                betti(Rationals, vars, gens, *window, *module)
            } else {
                betti(PrimeField::new(*p)?, vars, gens, *window, *module)
            }
        }
        Command::Hilbert { group, degrees } => hilbert(ctx, group, &degrees.degrees()),
        Command::Invariants { group, degrees, module } => invariants(ctx, group, &degrees.degrees(), *module),
        Command::PhiCheck { group, degrees } => phi_check(ctx, group, &degrees.degrees()),
        Command::Cauchy { k, dim_f, dim_g, max_k, max_dim } => cauchy(*k, *dim_f, *dim_g, *max_k, *max_dim),
        Command::Certificate { group, n, d, p, degrees, module, character } => {
            let spec = group_spec((*group).into(), *n)?;
            match character {
                Some(src) => certificate_literal(&spec, src),
                None => {
                    let p = p.ok_or_else(|| anyhow!("--p is required unless --character is given"))?;
                    let opts = GroupOpts { group: *group, n: *n, d: *d, p };
                    certificate(ctx, &opts, &degrees.degrees(), *module)
                }
            }
        }
        Command::Bound(b) => bound(b),
    }
}

fn group_label(spec: &GroupSpec) -> Value {
    Value::String(spec.kind.name().to_owned())
}

fn spec_of(opts: &GroupOpts) -> Result<GroupSpec> {
    Ok(group_spec(opts.group.into(), opts.n)?)
}

/// Compute one JSON record per degree, in parallel, through the cache.
fn per_degree<C>(
    ctx: &Ctx,
    command: &str,
    opts: &GroupOpts,
    extra: Value,
    degrees: &[u32],
    compute: C,
) -> Result<Vec<Value>>
where
    C: Fn(u32) -> Result<Value> + Sync,
{
    let spec = spec_of(opts)?;
    let base = json!({
        "command": command,
        "group": group_label(&spec),
        "n": int(opts.n),
        "d": int(opts.d),
        "p": int(opts.p),
        "field": ctx.field.name(),
        "extra": extra,
    });
    degrees
        .par_iter()
        .map(|&m| {
            let key = json!({"base": base, "degree": int(m)}).to_string();
            if let Some(cache) = &ctx.cache {
                if let Lookup::Hit(v) = cache.get(&key) {
                    match serde_json::from_str(&v) {
                        Ok(val) => {
                            log::debug!("cache hit for {command} degree {m}");
                            return Ok(val);
                        }
                        Err(e) => log::warn!("ignoring undecodable cache value: {e}"),
                    }
                }
            }
            let val = compute(m)?;
            if let Some(cache) = &ctx.cache {
                if let Err(e) = cache.put(&key, &val.to_string()) {
                    log::warn!("could not write cache entry: {e}");
                }
            }
            Ok(val)
        })
        .collect()
}

fn split_run<J: SplitJob<Value>>(ctx: &Ctx, spec: &GroupSpec, p: u64, job: J) -> Result<Value> {
    Ok(with_split_field(spec, p, ctx.field.policy(), job)?)
}

fn get_str(v: &Value, key: &str) -> String {
    match &v[key] {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn get_bool(v: &Value, key: &str) -> bool {
    v[key].as_bool().unwrap_or(false)
}

fn lemma_max(n: i64) -> Result<Report> {
    let brute = lemma_max_bruteforce(n)?;
    let closed = lemma_max_closed(n);
    let reduced = reduced_max(n)?;
    let matches = brute == closed;
    let json = json!({
        "command": "lemma-max",
        "n": int(n),
        "max": int(brute),
        "closed_form": int(closed),
        "reduced_max": int(reduced),
        "matches_closed_form": matches,
        "reduction_matches": reduced == closed,
    });
    let text = format!(
        "{brute}\nclosed form (n^3-n)/3: {closed}\nmax over the reduced set: {reduced}\nmatches closed form: {matches}\n"
    );
    Ok(Report { json, text, csv: None, verified: matches && reduced == closed })
}

fn betti<F: Field>(f: F, vars: &str, gens: &str, window: u32, module: BettiModule) -> Result<Report> {
    let names = parse_names(vars)?;
    let polys = gens.split(',').map(|g| parse_poly(&f, &names, g)).collect::<Result<Vec<_>>>()?;
    let r = names.len();
    let field_name = f.name();
    let m = match module {
        BettiModule::Ideal => GradedModuleSlices::ideal(f, &polys, r, window)?,
        BettiModule::Quotient => GradedModuleSlices::quotient(f, &polys, r, window)?,
    };
    let table = betti_table(&m, window as i64)?;
    let reg = regularity_windowed(&m, window as i64)?;
    let triples: Vec<Value> =
        table.entries.iter().map(|(&(i, j), &b)| json!({"i": int(i), "j": int(j), "beta": int(b)})).collect();
    let json = json!({
        "command": "betti",
        "module": match module { BettiModule::Ideal => "ideal", BettiModule::Quotient => "quotient" },
        "vars": names,
        "field": field_name,
        "window": int(window),
        "betti": triples,
        "regularity": reg.observed.map(int).unwrap_or(Value::Null),
        "window_complete": reg.complete,
    });
    let top = table.regularity().unwrap_or(0).max(0);
    let cols: Vec<i64> = (0..=top).collect();
    let rows: Vec<Vec<String>> = (0..=r)
        .map(|i| {
            core::iter::once(i.to_string())
                .chain(cols.iter().map(|&s| table.get(i, s + i as i64).to_string()))
                .collect()
        })
        .collect();
    let mut header = vec![String::from("i")];
    header.extend(cols.iter().map(|s| s.to_string()));
    let header_ref: Vec<&str> = header.iter().map(String::as_str).collect();
    let csv = csv_table(&header_ref, &rows);
    let mut text = String::from("rows: homological degree i; columns: j - i\n");
    text.push_str(&text_table(&header, &rows));
    match reg.observed {
        Some(g) => text.push_str(&format!("regularity {g} (window {window}, complete: {})\n", reg.complete)),
        None => text.push_str(&format!("no nonzero Betti numbers up to degree {window}\n")),
    }
    Ok(Report { json, text, csv: Some(csv), verified: true })
}

struct HilbertJob {
    d: usize,
    m: u32,
}

impl SplitJob<Value> for HilbertJob {
    fn run<F: Field>(&self, real: &Realization<F>) -> commscheme_core::Result<Value> {
        let (slice, ibar) = ibar_in(real, self.d, self.m)?;
        Ok(json!({
            "degree": int(self.m),
            "ambient": int(slice.len()),
            "ibar": int(ibar.dim()),
            "quotient": int(slice.len() - ibar.dim()),
        }))
    }
}

fn dimension_report(
    command: &str,
    spec: &GroupSpec,
    opts: &GroupOpts,
    records: Vec<Value>,
    columns: &[(&str, &str)],
    extra: Value,
) -> Report {
    let header: Vec<String> = columns.iter().map(|(_, h)| h.to_string()).collect();
    let rows: Vec<Vec<String>> = records.iter().map(|r| columns.iter().map(|(k, _)| get_str(r, k)).collect()).collect();
    let header_ref: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut json = json!({
        "command": command,
        "group": group_label(spec),
        "n": int(opts.n),
        "d": int(opts.d),
        "p": int(opts.p),
        "degrees": records,
    });
    if let (Value::Object(o), Value::Object(e)) = (&mut json, extra) {
        o.extend(e);
    }
    let text = format!("{} n={} d={} p={}\n{}", spec.kind, opts.n, opts.d, opts.p, text_table(&header, &rows));
    Report { json, text, csv: Some(csv_table(&header_ref, &rows)), verified: true }
}

fn hilbert(ctx: &Ctx, opts: &GroupOpts, degrees: &[u32]) -> Result<Report> {
    let spec = spec_of(opts)?;
    let records = per_degree(ctx, "hilbert", opts, Value::Null, degrees, |m| {
        split_run(ctx, &spec, opts.p, HilbertJob { d: opts.d, m })
    })?;
    let cols = [("degree", "degree"), ("ambient", "ambient"), ("ibar", "ibar"), ("quotient", "quotient")];
    Ok(dimension_report("hilbert", &spec, opts, records, &cols, json!({})))
}

struct InvariantJob {
    d: usize,
    m: u32,
    module: InvariantModule,
}

impl SplitJob<Value> for InvariantJob {
    fn run<F: Field>(&self, real: &Realization<F>) -> commscheme_core::Result<Value> {
        let (slice, ibar) = ibar_in(real, self.d, self.m)?;
        let (module, dim_slice) = match self.module {
            InvariantModule::Quotient => (ModuleSlice::Quotient(&ibar), slice.len() - ibar.dim()),
            InvariantModule::Free => (ModuleSlice::Free, slice.len()),
            InvariantModule::Ambient => {
                let n = real.n();
                let v = self.d * n * n;
                (ModuleSlice::Ambient, commscheme_core::poly::SliceBasis::new(v, self.m).len())
            }
        };
        let inv = group_invariants(real, self.d, self.m, module)?;
        Ok(json!({
            "degree": int(self.m),
            "dim_slice": int(dim_slice),
            "dim_invariants": int(inv.dim()),
        }))
    }
}

fn module_name(m: InvariantModule) -> &'static str {
    match m {
        InvariantModule::Quotient => "quotient",
        InvariantModule::Free => "free",
        InvariantModule::Ambient => "ambient",
    }
}

fn invariants(ctx: &Ctx, opts: &GroupOpts, degrees: &[u32], module: InvariantModule) -> Result<Report> {
    let spec = spec_of(opts)?;
    let records = per_degree(ctx, "invariants", opts, json!(module_name(module)), degrees, |m| {
        split_run(ctx, &spec, opts.p, InvariantJob { d: opts.d, m, module })
    })?;
    let cols = [("degree", "degree"), ("dim_slice", "slice"), ("dim_invariants", "invariants")];
    Ok(dimension_report("invariants", &spec, opts, records, &cols, json!({"module": module_name(module)})))
}

struct PhiJobJson {
    d: usize,
    m: u32,
}

fn degree_report_json(r: &DegreeReport) -> Value {
    json!({
        "group": r.group.name(),
        "n": int(r.n),
        "d": int(r.d),
        "p": int(r.p),
        "field": r.field,
        "degree": int(r.degree),
        "dim_source": int(r.dim_source),
        "dim_target": int(r.dim_target),
        "dim_image": int(r.dim_image),
        "injective": r.injective,
        "surjective": r.surjective,
        "bijective": r.bijective(),
    })
}

impl SplitJob<Value> for PhiJobJson {
    fn run<F: Field>(&self, real: &Realization<F>) -> commscheme_core::Result<Value> {
        Ok(degree_report_json(&phi_degree_check(real, self.d, self.m)?))
    }
}

/// Where `p` sits relative to the isomorphism bound.
fn iso_bound_summary(spec: &GroupSpec, d: usize, p: u64) -> Result<(Value, String)> {
    let (n, lie) = (spec.n as u64, spec.lie_dim as u64);
    match thm_bound_iso(n, d as u64, lie) {
        Ok(b) => {
            let digits = b.to_string();
            let below = below_iso_bound(p, n, d as u64, lie)?;
            let shown =
                if digits.len() <= INLINE_DIGITS { digits.clone() } else { format!("<{} digits>", digits.len()) };
            let note = if below {
                format!("p = {p} is below the isomorphism bound {shown}: the results are observations, not instances of the bound's hypothesis")
            } else {
                format!("p = {p} exceeds the isomorphism bound {shown}")
            };
            let mut v = json!({"status": "defined", "digits": int(digits.len()), "p_below_bound": below});
            if digits.len() <= INLINE_DIGITS {
                v["value"] = Value::String(digits);
            }
            Ok((v, note))
        }
        Err(Error::TooLarge(e)) => Ok((
            json!({"status": "too-large", "exponent": int(e), "p_below_bound": true}),
            format!("p = {p} is below the isomorphism bound (12^(2^{e}) scale): the results are observations only"),
        )),
        Err(Error::BoundUndefined(t)) => Ok((
            json!({"status": "undefined", "d_times_dim": int(t)}),
            format!("the isomorphism bound is undefined since d * dim g = {t} < 4"),
        )),
        Err(e) => Err(e.into()),
    }
}

fn phi_check(ctx: &Ctx, opts: &GroupOpts, degrees: &[u32]) -> Result<Report> {
    let spec = spec_of(opts)?;
    let records = per_degree(ctx, "phi-check", opts, Value::Null, degrees, |m| {
        split_run(ctx, &spec, opts.p, PhiJobJson { d: opts.d, m })
    })?;
    let all = records.iter().all(|r| get_bool(r, "bijective"));
    let (bound, note) = iso_bound_summary(&spec, opts.d, opts.p)?;
    let cols = [
        ("degree", "degree"),
        ("dim_source", "source"),
        ("dim_target", "target"),
        ("dim_image", "image"),
        ("injective", "injective"),
        ("surjective", "surjective"),
    ];
    let mut report = dimension_report(
        "phi-check",
        &spec,
        opts,
        records,
        &cols,
        json!({"all_bijective": all, "iso_bound": bound, "note": note}),
    );
    report.text.push_str(&format!("all bijective: {all}\n{note}\n"));
    report.verified = all;
    Ok(report)
}

fn cauchy(k: Option<u32>, dim_f: Option<u32>, dim_g: Option<u32>, max_k: u32, max_dim: u32) -> Result<Report> {
    let ks: Vec<u32> = k.map(|k| vec![k]).unwrap_or_else(|| (0..=max_k).collect());
    let fs: Vec<u32> = dim_f.map(|x| vec![x]).unwrap_or_else(|| (1..=max_dim).collect());
    let gs: Vec<u32> = dim_g.map(|x| vec![x]).unwrap_or_else(|| (1..=max_dim).collect());
    let mut records = Vec::new();
    let mut rows = Vec::new();
    let mut all = true;
    for &k in &ks {
        for &a in &fs {
            for &b in &gs {
                let c = cauchy_check(k, a, b);
                all &= c.equal;
                rows.push(vec![
                    k.to_string(),
                    a.to_string(),
                    b.to_string(),
                    c.lhs.to_string(),
                    c.rhs.to_string(),
                    c.equal.to_string(),
                ]);
                records.push(json!({
                    "k": int(k), "dim_f": int(a), "dim_g": int(b),
                    "lhs": int(&c.lhs), "rhs": int(&c.rhs), "equal": c.equal,
                }));
            }
        }
    }
    let header = ["k", "dim_f", "dim_g", "lhs", "rhs", "equal"];
    let h: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    let json = json!({"command": "cauchy", "checks": records, "all_equal": all});
    let text = format!("{}all equal: {all}\n", text_table(&h, &rows));
    Ok(Report { json, text, csv: Some(csv_table(&header, &rows)), verified: all })
}

struct CertificateJob {
    d: usize,
    m: u32,
    module: CertificateModule,
}

impl SplitJob<Character> for CertificateJob {
    fn run<F: Field>(&self, real: &Realization<F>) -> commscheme_core::Result<Character> {
        match self.module {
            CertificateModule::Free => slice_character(real, self.d, self.m, ModuleSlice::Free),
            CertificateModule::Ibar => {
                let (_, ibar) = ibar_in(real, self.d, self.m)?;
                subspace_character(real, self.d, self.m, &ibar)
            }
            CertificateModule::Quotient => {
                let (_, ibar) = ibar_in(real, self.d, self.m)?;
                slice_character(real, self.d, self.m, ModuleSlice::Quotient(&ibar))
            }
        }
    }
}

fn cert_json(c: &DegreeCertificate, with_degree: bool) -> Value {
    let decomposition: Vec<Value> =
        c.decomposition.coefficients.iter().map(|(w, k)| json!({"weight": ints(w), "coefficient": int(k)})).collect();
    let mut v = json!({"status": c.status(), "decomposition": decomposition});
    if with_degree {
        v["degree"] = int(c.degree);
    }
    if let Some((w, k)) = &c.witness {
        v["witness"] = json!({"weight": ints(w), "coefficient": int(k)});
    }
    v
}

fn cert_text(c: &DegreeCertificate, label: &str) -> String {
    let terms: Vec<String> = c.decomposition.coefficients.iter().map(|(w, k)| format!("{k}*chi{w:?}")).collect();
    let sum = if terms.is_empty() { String::from("0") } else { terms.join(" + ") };
    let mut line = format!("{label}: certificate {} ({sum})", c.status());
    if let Some((w, k)) = &c.witness {
        line.push_str(&format!("; witness chi{w:?} with coefficient {k}"));
    }
    line.push('\n');
    line
}

fn certificate(ctx: &Ctx, opts: &GroupOpts, degrees: &[u32], module: CertificateModule) -> Result<Report> {
    let spec = spec_of(opts)?;
    if spec.kind == GroupKind::O {
        bail!(Error::Unsupported(String::from(
            "the certificate needs a connected group; O_n is disconnected, use SO_n instead"
        )));
    }
    let module_name = match module {
        CertificateModule::Ibar => "ibar",
        CertificateModule::Free => "free",
        CertificateModule::Quotient => "quotient",
    };
    let records = per_degree(ctx, "certificate", opts, json!(module_name), degrees, |m| {
        let ch = with_split_field(&spec, opts.p, ctx.field.policy(), CertificateJob { d: opts.d, m, module })?;
        let cert = goodfil_certificate(&spec, &[(m, ch)])?;
        Ok(cert_json(&cert[0], true))
    })?;
    let all = records.iter().all(|r| r["status"] == "PASS");
    let mut text = format!("{} n={} d={} p={} module {module_name}\n", spec.kind, opts.n, opts.d, opts.p);
    for r in &records {
        text.push_str(&format!("degree {}: certificate {}", get_str(r, "degree"), get_str(r, "status")));
        if let Some(w) = r.get("witness") {
            text.push_str(&format!("; witness {} coefficient {}", w["weight"], get_str(w, "coefficient")));
        }
        text.push('\n');
    }
    let json = json!({
        "command": "certificate",
        "group": group_label(&spec),
        "n": int(opts.n),
        "d": int(opts.d),
        "p": int(opts.p),
        "module": module_name,
        "degrees": records,
        "all_pass": all,
    });
    Ok(Report { json, text, csv: None, verified: all })
}

fn certificate_literal(spec: &GroupSpec, src: &str) -> Result<Report> {
    let ch = parse_character(src)?;
    if ch.rank != spec.rank() {
        bail!("character has {} torus coordinates, {} needs {}", ch.rank, spec.label(), spec.rank());
    }
    let cert = goodfil_certificate(spec, &[(0, ch)])?;
    let c = &cert[0];
    let json = json!({
        "command": "certificate",
        "group": group_label(spec),
        "n": int(spec.n),
        "character": src,
        "result": cert_json(c, false),
    });
    Ok(Report { json, text: cert_text(c, "character"), csv: None, verified: c.passed() })
}

fn bound(b: &BoundCommand) -> Result<Report> {
    match b {
        BoundCommand::Iso { group, n, d } => {
            let spec = group_spec((*group).into(), *n)?;
            let value = thm_bound_iso(*n as u64, *d, spec.lie_dim as u64)?;
            let mut json = json!({
                "command": "bound iso",
                "group": group_label(&spec),
                "n": int(n),
                "d": int(d),
                "d_times_dim": int(*d * spec.lie_dim as u64),
                "value": int(&value),
            });
            let mut text = format!("{value}\n");
            if value.bits() <= NEXT_PRIME_MAX_BITS {
                let q = next_prime(&value);
                let exact = primality_is_exact(&q);
                json["next_prime"] = int(&q);
                json["next_prime_exact"] = Value::Bool(exact);
                text.push_str(&format!("next prime above: {q} ({})\n", if exact { "proven" } else { "probable" }));
            }
            Ok(Report { json, text, csv: None, verified: true })
        }
        BoundCommand::Goodfil { n, d, reg } => {
            let v = thm_bound_goodfil(*n, *d, *reg);
            let json = json!({"command": "bound goodfil", "n": int(n), "d": int(d), "reg": int(reg), "value": int(&v)});
            Ok(Report { json, text: format!("{v}\n"), csv: None, verified: true })
        }
        BoundCommand::Slice { n, m, alpha } => {
            let v = lemma31_bound(*n, *m, *alpha);
            let json =
                json!({"command": "bound slice", "n": int(n), "m": int(m), "alpha": int(alpha), "value": int(&v)});
            Ok(Report { json, text: format!("{v}\n"), csv: None, verified: true })
        }
        BoundCommand::Chardin { kappa, dvars } => {
            let v = chardin_bound(*kappa, *dvars)?;
            let json = json!({"command": "bound chardin", "kappa": int(kappa), "dvars": int(dvars), "value": int(&v)});
            Ok(Report { json, text: format!("{v}\n"), csv: None, verified: true })
        }
    }
}
