use std::fs;
use std::path::Path;

use arith_bounds::{charge_order_bound, charge_verdict, exponent_is_attained, prime_power_sixteen_check, twist_order_bound, ChargeVerdict, FactoredInteger};
use cyclotomic::{to_float, BigRational, CycElem, SubfieldHandle};
use fusion_ring::analysis::{adjoint_subring, check_main_lemma, pointed_subring};
use fusion_ring::{attach_cyclotomic_embedding, dimensional_grading, io, universal_grading, ConductorChoice, Dimensions, FusionRing};
use quantum_group::figa::field_key;
use quantum_group::sweep::lambda_fields;
use quantum_group::{central_charge_formula, expected_fields, grothendieck_ring, verlinde_field_prediction, CategoryHandle, LieType, ModularData, RootOfUnity};
use serde_json::{json, Value};

use crate::cli::{Command, RunConfig, Table};
use crate::report::{CliError, Outcome};
use crate::tables;

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Validate { path } => validate(path),
        Command::Analyze { path } => analyze(path, cfg),
        Command::Quantum { lie_type, rank, level, modular, write_ring } => {
            quantum(&category(lie_type, *rank, *level)?, *modular || write_ring.is_some(), write_ring.as_deref(), cfg)
        }
        Command::Tables { which, max_alcove, max_rank } => match which {
            Table::FigK => tables::fig_k(),
            Table::FigA => Ok(tables::fig_a()),
            Table::FigB => tables::fig_b(*max_alcove, *max_rank),
        },
        Command::Bound { exponent, ring, quantum } => bound(*exponent, ring.as_deref(), quantum, cfg),
    }
}

pub fn category(lie_type: &str, rank: usize, level: i64) -> Result<CategoryHandle, CliError> {
    Ok(CategoryHandle::new(LieType::parse(lie_type)?, rank, level)?)
}

pub fn read_ring(path: &Path) -> Result<FusionRing, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Ok(io::from_json(&text)?)
}

fn labels_of(ring: &FusionRing, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| ring.label(i).to_string()).collect()
}

/// The table name of a field, with the quadratic form where that differs.
fn field_label(f: &SubfieldHandle) -> String {
    let key = field_key(f);
    let name = f.name();
    if key.starts_with("Q_") && name.starts_with("Q(sqrt") {
        format!("{key} = {name}")
    } else {
        key
    }
}

fn digits(precision: u32) -> usize {
    // about log10(2) digits per bit, keeping a margin for the error bound
    (precision as usize * 3 / 10).saturating_sub(4).max(12)
}

fn decimal(x: &CycElem, precision: u32) -> String {
    if let Some(r) = x.to_rational() {
        return r.to_string();
    }
    let f = to_float(x, precision);
    let re = f.re_decimal(digits(precision));
    if x.is_real() {
        re
    } else {
        format!("{re} + {}i", f.im_decimal(digits(precision)))
    }
}

pub fn validate(path: &Path) -> Result<Outcome, CliError> {
    let ring = read_ring(path)?;
    let violations = ring.validate();
    let mut out = Outcome::new("validate");
    for v in &violations {
        out.line(v.to_string());
    }
    if violations.is_empty() {
        out.line(format!("valid fusion ring of rank {}", ring.rank()));
    } else {
        out.line(format!("{} violations", violations.len()));
        out.fail();
    }
    out.set("rank", json!(ring.rank()));
    out.set("violations", json!(violations.iter().map(ToString::to_string).collect::<Vec<_>>()));
    Ok(out)
}

/// Pairs of scaled basis elements checked against the main lemma:
/// (checked, failures).
fn main_lemma_spot_check(dims: &Dimensions, rank: usize) -> Result<(usize, Vec<String>), CliError> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for i in 0..rank {
        for j in i..rank {
            for (a, b) in [(1, 1), (1, 2), (2, 1)] {
                let mut x1 = vec![BigRational::from_integer(0.into()); rank];
                let mut x2 = x1.clone();
                x1[i] = BigRational::from_integer(a.into());
                x2[j] = BigRational::from_integer(b.into());
                checked += 1;
                if !check_main_lemma(dims, &x1, &x2)? {
                    failures.push(format!("{a} b_{i} + {b} b_{j}"));
                }
            }
        }
    }
    Ok((checked, failures))
}

pub fn analyze(path: &Path, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ring = read_ring(path)?;
    let mut out = Outcome::new("analyze");
    let violations = ring.validate();
    if !violations.is_empty() {
        for v in &violations {
            out.line(v.to_string());
        }
        out.line("not a fusion ring; nothing to analyze");
        out.set("violations", json!(violations.iter().map(ToString::to_string).collect::<Vec<_>>()));
        out.fail();
        return Ok(out);
    }
    let r = ring.rank();
    out.line(format!("rank: {r}"));
    out.set("rank", json!(r));
    let dims = attach_cyclotomic_embedding(&ring, ConductorChoice::SearchUpTo(cfg.conductor_bound));
    out.line("dimensions:");
    let mut dim_data = Vec::new();
    for i in 0..r {
        let alg = &dims.algebraic()[i];
        let (shown, exact) = match dims.exact_at(i) {
            Some(e) => (format!("{} = {e}", decimal(e, cfg.precision)), Some(e.to_string())),
            None => (alg.to_string(), None),
        };
        out.line(format!("  {}: {shown}", ring.label(i)));
        dim_data.push(json!({
            "label": ring.label(i),
            "approx": alg.to_f64(),
            "minpoly": alg.minpoly().to_string(),
            "exact": exact,
        }));
    }
    out.set("dimensions", Value::Array(dim_data));

    if dims.is_exact() {
        let k0 = dims.k0()?;
        let k1 = dims.k1()?;
        out.line(format!("K0 = {}", field_label(&k0)));
        out.line(format!("K1 = {}", field_label(&k1)));
        out.set("k0", json!(field_key(&k0)));
        out.set("k1", json!(field_key(&k1)));
        // the fields K_x with the basis elements generating each
        let mut tower: Vec<(SubfieldHandle, Vec<usize>)> = Vec::new();
        for i in 0..r {
            let f = dims.field_of(i)?;
            match tower.iter_mut().find(|(g, _)| *g == f) {
                Some((_, v)) => v.push(i),
                None => tower.push((f, vec![i])),
            }
        }
        tower.sort_by_key(|(f, _)| (f.degree(), f.conductor()));
        out.line("basis fields:");
        let mut tower_data = Vec::new();
        for (f, idx) in &tower {
            let inside: Vec<String> = tower.iter().filter(|(g, _)| g != f && g.is_subfield_of(f)).map(|(g, _)| field_key(g)).collect();
            let mut line = format!("  {} [degree {}]: {}", field_label(f), f.degree(), labels_of(&ring, idx).join(", "));
            if !inside.is_empty() {
                line.push_str(&format!("; contains {}", inside.join(", ")));
            }
            out.line(line);
            tower_data.push(json!({"field": field_key(f), "degree": f.degree(), "elements": labels_of(&ring, idx), "contains": inside}));
        }
        out.set("basis_fields", Value::Array(tower_data));
    } else {
        let failed = labels_of(&ring, &dims.failures());
        out.line(format!("no cyclotomic form found within conductor {} for: {}", cfg.conductor_bound, failed.join(", ")));
        out.line("dimension fields unavailable");
        out.set("embedding_failures", json!(failed));
    }

    let pt = labels_of(&ring, &pointed_subring(&ring));
    let ad = labels_of(&ring, &adjoint_subring(&ring));
    out.line(format!("pointed subring: {}", pt.join(", ")));
    out.line(format!("adjoint subring: {}", ad.join(", ")));
    out.set("pointed_subring", json!(pt));
    out.set("adjoint_subring", json!(ad));

    let u = universal_grading(&ring)?;
    let comps: Vec<Vec<String>> = u.components().iter().map(|c| labels_of(&ring, c)).collect();
    out.line(format!("universal grading group: {}", u.group_name()));
    for (g, c) in comps.iter().enumerate() {
        out.line(format!("  component {}: {}", u.labels[g], c.join(", ")));
    }
    out.set("universal_grading", json!({"group": u.group_name(), "components": comps}));

    if dims.is_exact() {
        let dg = dimensional_grading(&ring, &dims)?;
        let comps: Vec<Vec<String>> = dg.partition.components().iter().map(|c| labels_of(&ring, c)).collect();
        out.line(format!("dimensional grading group: {} (rank {} elementary abelian 2-group)", dg.partition.group_name(), dg.rank()));
        for c in &comps {
            out.line(format!("  component: {}", c.join(", ")));
        }
        out.set("dimensional_grading", json!({"group": dg.partition.group_name(), "rank": dg.rank(), "components": comps}));
        let (checked, failures) = main_lemma_spot_check(&dims, r)?;
        out.line(format!("main lemma: {checked} decompositions checked, {} failures", failures.len()));
        for f in &failures {
            out.line(format!("  fails for {f}"));
        }
        if !failures.is_empty() {
            out.fail();
        }
        out.set("main_lemma", json!({"checked": checked, "failures": failures}));
    }
    Ok(out)
}

fn verdict_line(v: &ChargeVerdict) -> String {
    let bound = if v.doubled {
        format!("2 * {} = {} (doubled since K1 != K0)", v.bound / 2, v.bound)
    } else {
        v.bound.to_string()
    };
    let rel = if v.attains {
        "attains"
    } else if v.divides {
        "divides"
    } else {
        "does not divide"
    };
    format!("charge order {} {rel} the bound {bound} for Galois exponent {}", v.order, v.exponent)
}

fn verdict_json(v: &ChargeVerdict) -> Value {
    json!({
        "order": v.order,
        "exponent": v.exponent,
        "doubled": v.doubled,
        "bound": v.bound as u64,
        "divides": v.divides,
        "attains": v.attains,
    })
}

fn unity_json(x: &RootOfUnity) -> Value {
    json!({"numerator": x.numerator(), "denominator": x.denominator()})
}

pub fn quantum(c: &CategoryHandle, modular: bool, write_ring: Option<&Path>, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut out = Outcome::new("quantum");
    let a = &c.algebra;
    out.line(format!("{}: kappa = {}, dual Coxeter number {}, dimension {}", c.name(), c.kappa, a.h_dual, a.dim_g));
    let weights = c.weyl_alcove();
    out.line(format!("alcove: {} weights", weights.len()));
    let mut wdata = Vec::new();
    for w in &weights {
        let d = c.qdim(w)?;
        out.line(format!("  {w:?}: {} = {d}", decimal(&d, cfg.precision)));
        wdata.push(json!({"weight": w, "qdim": d.to_string(), "approx": c.qdim_f64(w)}));
    }
    out.set("category", json!(c.name()));
    out.set("kappa", json!(c.kappa));
    out.set("alcove", Value::Array(wdata));

    let (k0, k1) = (c.k0_field(), c.k1_field());
    out.line(format!("K0 = {}", field_label(&k0)));
    out.line(format!("K1 = {}", field_label(&k1)));
    let expected = expected_fields(c);
    let (e0, e1) = expected.fields();
    let source = if expected.is_exception() { "exception table" } else { "closed form" };
    let agrees = e0 == &k0 && e1 == &k1;
    if agrees {
        out.line(format!("table ({source}): agrees"));
    } else {
        out.line(format!("table ({source}): gives K0 = {}, K1 = {}; disagrees", field_label(e0), field_label(e1)));
        out.fail();
    }
    let mut lf = lambda_fields(c)?;
    lf.fields.sort_by_key(|f| (f.degree(), f.conductor()));
    let names: Vec<String> = lf.fields.iter().map(field_key).collect();
    out.line(format!("fields of single dimensions: {}", lf.fields.iter().map(field_label).collect::<Vec<_>>().join(", ")));
    out.set(
        "fields",
        json!({"k0": field_key(&k0), "k1": field_key(&k1), "table": [field_key(e0), field_key(e1)], "table_source": source, "agrees": agrees, "single_object_fields": names}),
    );

    let xi = central_charge_formula(c);
    let v = charge_verdict(xi.order(), k0.galois_exponent(), k1 != k0)?;
    out.line(format!("central charge: {xi}, order {}", xi.order()));
    out.line(verdict_line(&v));
    if !v.divides {
        out.fail();
    }
    out.set("central_charge", unity_json(&xi));
    out.set("charge_bound", verdict_json(&v));

    if modular {
        modular_section(c, write_ring, cfg, &mut out)?;
    }
    Ok(out)
}

fn modular_section(c: &CategoryHandle, write_ring: Option<&Path>, cfg: &RunConfig, out: &mut Outcome) -> Result<(), CliError> {
    let md = ModularData::compute(c, cfg.weyl_cap)?;
    out.line("S matrix:");
    let mut s_data = Vec::new();
    for row in &md.s {
        let cells: Vec<String> = row.iter().map(|x| decimal(x, cfg.precision)).collect();
        out.line(format!("  {}", cells.join("  ")));
        s_data.push(json!(row.iter().map(ToString::to_string).collect::<Vec<_>>()));
    }
    out.line("T matrix (diagonal):");
    for (w, t) in md.weights.iter().zip(&md.t_diag) {
        out.line(format!("  {w:?}: {t}"));
    }
    let checks = [
        ("S symmetric", md.is_symmetric()),
        ("S unitary", md.is_unitary()),
        ("Gauss sum identity (exact)", md.gauss_identity_exact()),
    ];
    for (name, ok) in checks {
        out.line(format!("{name}: {}", if ok { "yes" } else { "no" }));
        if !ok {
            out.fail();
        }
    }
    let ratio = md.gauss_ratio_error();
    let modulus = md.gauss_modulus_error();
    let sl2 = md.sl2_relation_error();
    out.line(format!("Gauss sum ratio error: {ratio:.3e}"));
    out.line(format!("Gauss sum modulus error: {modulus:.3e}"));
    out.line(format!("SL2(Z) relation error: {sl2:.3e}"));
    out.line(format!("T order: {}", md.t_order()));
    if ratio > 1e-9 || modulus > 1e-9 || sl2 > 1e-9 {
        out.fail();
    }
    let l = md.verlinde_field()?;
    out.line(format!("Verlinde field: {}", l.name()));
    let prediction = verlinde_field_prediction(c).map(|(p, note)| {
        let line = format!("predicted Verlinde field: {}{}", p.name(), if p == l { " (agrees)" } else { " (differs)" });
        (p.name(), p == l, line, note)
    });
    if let Some((_, _, line, note)) = &prediction {
        out.line(line.clone());
        if let Some(n) = note {
            out.line(format!("  note: {n}"));
        }
    }
    let ring = grothendieck_ring(c, &md)?;
    let ring_json = io::to_json(&ring);
    if let Some(p) = write_ring {
        fs::write(p, io::to_json_pretty(&ring) + "\n").map_err(|source| CliError::Write { path: p.to_path_buf(), source })?;
        out.line(format!("fusion ring written to {}", p.display()));
    }
    out.line(format!("fusion ring: {ring_json}"));
    out.set(
        "modular",
        json!({
            "s": s_data,
            "t": md.t_diag.iter().map(unity_json).collect::<Vec<_>>(),
            "symmetric": md.is_symmetric(),
            "unitary": md.is_unitary(),
            "gauss_identity_exact": md.gauss_identity_exact(),
            "gauss_ratio_error": ratio,
            "gauss_modulus_error": modulus,
            "sl2_relation_error": sl2,
            "t_order": md.t_order(),
            "verlinde_field": l.name(),
            "verlinde_prediction": prediction.as_ref().map(|(n, agrees, _, _)| json!({"field": n, "agrees": agrees})),
            "ring": serde_json::from_str::<Value>(&ring_json).expect("ring json parses"),
        }),
    );
    Ok(())
}

fn exponent_section(n: u64, out: &mut Outcome) -> Result<Value, CliError> {
    if n == 0 {
        return Err(CliError::Usage("the exponent must be positive".into()));
    }
    let f = twist_order_bound(n)?;
    let b = charge_order_bound(n)?;
    let eligible = prime_power_sixteen_check(&FactoredInteger::new(n)?);
    let attained = exponent_is_attained(2 * n)?;
    out.line(format!("exponent {n}: f({}) = {f}, charge bound f/3 = {b}", 2 * n));
    if !attained {
        out.line(format!("  no modulus has unit group exponent exactly {}", 2 * n));
    }
    if eligible {
        out.line("  prime power criterion applies: xi^16 = 1, and xi^8 = 1 when K0 = K1");
    } else {
        out.line("  prime power criterion does not apply");
    }
    Ok(json!({"exponent": n, "f": f as u64, "charge_bound": b as u64, "exact_exponent_attained": attained, "prime_power_criterion": eligible}))
}

pub fn bound(exponent: Option<u64>, ring: Option<&Path>, factors: &[String], cfg: &RunConfig) -> Result<Outcome, CliError> {
    if exponent.is_none() && ring.is_none() && factors.is_empty() {
        return Err(CliError::Usage("give --exponent, --ring or --quantum".into()));
    }
    let mut out = Outcome::new("bound");
    if let Some(n) = exponent {
        let v = exponent_section(n, &mut out)?;
        out.set("exponent", v);
    }
    if let Some(path) = ring {
        let r = read_ring(path)?;
        let violations = r.validate();
        if !violations.is_empty() {
            return Err(CliError::Usage(format!("{} is not a fusion ring: {}", path.display(), violations[0])));
        }
        let dims = attach_cyclotomic_embedding(&r, ConductorChoice::SearchUpTo(cfg.conductor_bound));
        let (k0, k1) = (dims.k0()?, dims.k1()?);
        let n = k0.galois_exponent();
        out.line(format!("ring {}: K0 = {}, K1 = {}", path.display(), field_label(&k0), field_label(&k1)));
        let mut v = exponent_section(n, &mut out)?;
        let base = charge_order_bound(n)?;
        let bound = if k1 != k0 { 2 * base } else { base };
        out.line(format!("  charge order of any pseudounitary modular category with these fusion rules divides {bound}"));
        v["k0"] = json!(field_key(&k0));
        v["k1"] = json!(field_key(&k1));
        v["bound"] = json!(bound as u64);
        out.set("ring", v);
    }
    if !factors.is_empty() {
        let mut cats = Vec::new();
        for f in factors.chunks(3) {
            let rank = f[1].parse().map_err(|_| CliError::Usage(format!("bad rank {:?}", f[1])))?;
            let level = f[2].parse().map_err(|_| CliError::Usage(format!("bad level {:?}", f[2])))?;
            cats.push(category(&f[0], rank, level)?);
        }
        let names: Vec<String> = cats.iter().map(CategoryHandle::name).collect();
        let xi = cats.iter().map(central_charge_formula).fold(RootOfUnity::one(), |a, b| a * b);
        let total = cats.iter().map(CategoryHandle::fpdim_total_category).fold(CycElem::one(), |a, b| a.mul_ref(&b));
        let k0 = SubfieldHandle::generated_by(&total);
        let k1 = cats.iter().fold(SubfieldHandle::rationals(), |a, c| a.join(&c.k1_field()));
        let v = charge_verdict(xi.order(), k0.galois_exponent(), k1 != k0)?;
        out.line(format!("product {}: K0 = {}, K1 = {}", names.join(" x "), field_label(&k0), field_label(&k1)));
        out.line(format!("  central charge {xi}"));
        out.line(format!("  {}", verdict_line(&v)));
        if !v.divides {
            out.fail();
        }
        out.set(
            "quantum",
            json!({"factors": names, "k0": field_key(&k0), "k1": field_key(&k1), "central_charge": unity_json(&xi), "verdict": verdict_json(&v)}),
        );
    }
    Ok(out)
}
