use std::collections::BTreeSet;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use symperiod_core::betti::{betti_vector, BettiVector};
use symperiod_core::catalog::{
    group_spheres, sphere_table, table_rows, GroupDescriptor, IrreducibleSpace, SpaceKind,
};
use symperiod_core::codes::{
    alg_lemma_sweep, find_sigma, find_tau, griesmer_min_length, verify_griesmer_exhaustive,
    InvolutionCertificate, LinearEmbedding,
};
use symperiod_core::periodicity::{
    check_4periodic, classify_irreducibles, obstruction_string, shape_verdict, Branch, Obstruction,
    PeriodicityReport, Verdict,
};
use symperiod_core::symrank::{hypothesis_report, ThresholdCheck, ThresholdQuery};

use crate::expr::SpaceExpression;
use crate::table::{json_string, Format, Table};
use crate::CliError;

/// Rendered output plus the process exit status.
pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn render(table: &Table, format: Format, trailer: &str) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => format!("{}{trailer}", table.to_text()),
        Format::Csv => table.to_csv()?,
        Format::Json => json_string(&table.to_json()),
    })
}

fn data_err(e: impl std::fmt::Display) -> CliError {
    CliError::Data(e.to_string())
}

fn verdict_status(v: Verdict) -> u8 {
    match v {
        Verdict::Periodic => 0,
        Verdict::Fails => 1,
        Verdict::Undetermined => 2,
    }
}

fn branch_name(b: Option<Branch>) -> &'static str {
    match b {
        Some(Branch::Connected) => "connected",
        Some(Branch::Periodic) => "periodic",
        None => "-",
    }
}

fn obstruction_text(r: &PeriodicityReport) -> String {
    obstruction_string(r).unwrap_or_else(|_| "-".into())
}

// ------------------------------------------------------------------ tables

pub fn tables(id: u8, format: Format) -> Result<Output, CliError> {
    let table = match id {
        1 => sphere_dimensions()?,
        2 | 3 => obstruction_table(id)?,
        _ => return Err(CliError::Parse(format!("no table {id}; expected 1, 2 or 3"))),
    };
    Ok(Output::ok(render(&table, format, "")?))
}

fn sphere_dimensions() -> Result<Table, CliError> {
    let mut t = Table::new(vec!["group", "spheres"]);
    for (label, formula) in sphere_table() {
        // Exceptional rows have no parameter and list their spheres outright.
        let spheres = match label.parse::<GroupDescriptor>() {
            Ok(g) => group_spheres(&g).map_err(data_err)?.to_string(),
            Err(_) => formula,
        };
        t.push(vec![label, spheres]);
    }
    Ok(t)
}

fn obstruction_table(id: u8) -> Result<Table, CliError> {
    let mut t = Table::new(vec!["space", "instance", "leading_terms", "obstruction", "cited", "cited_holds", "source"]);
    for row in table_rows(id) {
        let s = IrreducibleSpace::new(row.space).map_err(data_err)?;
        let b = betti_vector(&s, 16).map_err(data_err)?;
        let report = check_4periodic(&b, 16).map_err(data_err)?;
        let leading = if s.equal_rank() {
            b.to_poly().map_err(data_err)?.render_terms(1, 16)
        } else {
            "-".into()
        };
        let holds = Obstruction::parse(&row.cited).is_some_and(|o| o.violated_by(&b));
        let source = match &row.reference {
            Some(r) => format!("cited: {r}"),
            None => "computed".into(),
        };
        t.push(vec![
            row.label.clone(),
            s.kind().to_string(),
            leading,
            obstruction_text(&report),
            row.cited.clone(),
            if holds { "yes" } else { "no" }.into(),
            source,
        ]);
    }
    Ok(t)
}

// ------------------------------------------------------------------- check

fn betti_json(b: &BettiVector, d: usize) -> Value {
    Value::Array(
        (0..=d)
            .map(|i| match b.exact(i) {
                Ok(v) => json!(v),
                Err(_) => json!(b.get(i).to_string()),
            })
            .collect(),
    )
}

pub fn check(expr: &str, c: usize, format: Format) -> Result<Output, CliError> {
    let e: SpaceExpression = expr.parse()?;
    if c < 8 {
        return Err(CliError::Parse(format!("--c must be at least 8, got {c}")));
    }
    let b = e.betti(c)?;
    let r = check_4periodic(&b, c).map_err(data_err)?;
    let shape = match &e {
        SpaceExpression::Product(p) if c >= 16 => {
            let v = shape_verdict(p, c as u32);
            Some(format!("{:?} ({})", v.shape, if v.allowed { "allowed" } else { "not listed" }))
        }
        _ => None,
    };
    let betti: Vec<String> = (0..=c).map(|i| b.get(i).to_string()).collect();
    let text = match format {
        Format::Json => json_string(&json!({
            "space": e.to_string(),
            "dimension": e.dim(),
            "c": c,
            "betti": betti_json(&b, c),
            "verdict": r.verdict.to_string(),
            "branch": branch_name(r.branch),
            "obstruction": obstruction_string(&r).ok(),
            "shape": shape,
        })),
        Format::Text | Format::Csv => {
            let mut s = format!(
                "space: {e}\ndimension: {}\nc: {c}\nbetti: {}\nverdict: {}\nbranch: {}\nobstruction: {}\n",
                e.dim(),
                betti.join(" "),
                r.verdict,
                branch_name(r.branch),
                obstruction_text(&r),
            );
            if let Some(shape) = shape {
                s.push_str(&format!("shape: {shape}\n"));
            }
            s
        }
    };
    Ok(Output { text, status: verdict_status(r.verdict) })
}

// ---------------------------------------------------------------- classify

fn family(kind: &SpaceKind) -> String {
    match kind {
        SpaceKind::Sphere(_) => "S^n".into(),
        SpaceKind::CP(_) => "CP^n".into(),
        SpaceKind::HP(_) => "HP^n".into(),
        SpaceKind::RealGr(p, _) => format!("GrR({p},q)"),
        other => other.tag().into(),
    }
}

pub fn classify(c: usize, max_dim: u32, max_param: u32, format: Format) -> Result<Output, CliError> {
    if c < 16 {
        return Err(CliError::Parse(format!("classification needs --c >= 16, got {c}")));
    }
    let results = classify_irreducibles(c, max_dim, max_param).map_err(data_err)?;
    let mut t = Table::new(vec!["space", "dimension", "verdict", "obstruction"]);
    let mut families = BTreeSet::new();
    for (s, r) in &results {
        if r.verdict == Verdict::Periodic {
            families.insert(family(&s.kind()));
        }
        t.push(vec![s.kind().to_string(), s.dim().to_string(), r.verdict.to_string(), obstruction_text(r)]);
    }
    let families: Vec<String> = families.into_iter().collect();
    let text = match format {
        Format::Json => json_string(&json!({
            "c": c,
            "max_dim": max_dim,
            "max_param": max_param,
            "spaces": t.to_json(),
            "periodic_families": families,
        })),
        _ => render(&t, format, &format!("periodic families: {}\n", families.join(", ")))?,
    };
    Ok(Output::ok(text))
}

// ------------------------------------------------------------------- codes

pub fn griesmer(r: u32, w: u64, format: Format) -> Result<Output, CliError> {
    if r == 0 || w == 0 {
        return Err(CliError::Parse("--r and --w must be positive".into()));
    }
    let m = griesmer_min_length(r, w);
    Ok(Output::ok(match format {
        Format::Json => json_string(&json!({ "r": r, "w": w, "min_length": m })),
        _ => format!("{m}\n"),
    }))
}

pub fn alg_lemma(n_max: u64, format: Format) -> Result<Output, CliError> {
    if n_max < 2 {
        return Err(CliError::Parse("--n-max must be at least 2".into()));
    }
    let sweep = alg_lemma_sweep(n_max);
    let status = u8::from(!sweep.violations.is_empty());
    let text = match format {
        Format::Json => json_string(&json!({
            "n_max": n_max,
            "cases": sweep.cases,
            "violations": sweep.violations.iter().map(|&(n, c, r)| json!({"n": n, "c": c, "r": r})).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = format!("{} violations / {} cases\n", sweep.violations.len(), sweep.cases);
            for (n, c, r) in &sweep.violations {
                s.push_str(&format!("  n={n} c={c} r={r}\n"));
            }
            s
        }
    };
    Ok(Output { text, status })
}

pub fn verify(r_max: usize, m_max: usize, format: Format) -> Result<Output, CliError> {
    let report = verify_griesmer_exhaustive(r_max, m_max).map_err(|e| CliError::Parse(e.to_string()))?;
    let simplex: Vec<String> = report
        .equality
        .iter()
        .filter(|w| w.is_simplex())
        .map(|w| format!("simplex [{},{},{}]", w.m, w.r, w.w))
        .collect();
    let status = u8::from(!report.holds());
    let text = match format {
        Format::Json => json_string(&json!({
            "r_max": r_max,
            "m_max": m_max,
            "codes_checked": report.codes_checked,
            "violations": report.violations.iter().map(LinearEmbedding::to_text).collect::<Vec<_>>(),
            "equality": report.equality.iter().map(|w| json!({
                "m": w.m, "r": w.r, "w": w.w, "count": w.count, "simplex": w.is_simplex(),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let head = if report.holds() {
                "bound holds".to_string()
            } else {
                format!("bound FAILS for {} codes", report.violations.len())
            };
            let mut s = format!("{head}; equality witnesses: {}\n", simplex.join(", "));
            s.push_str(&format!("codes checked: {}\n", report.codes_checked));
            s.push_str(&format!("equality parameter sets: {}\n", report.equality.len()));
            for w in &report.equality {
                s.push_str(&format!("  {w}\n"));
            }
            for v in &report.violations {
                s.push_str(&format!("violation:\n{}", v.to_text()));
            }
            s
        }
    };
    Ok(Output { text, status })
}

/// Where the embeddings for `codes sigma|tau` come from.
pub struct EmbeddingSource<'a> {
    pub matrix: Option<&'a Path>,
    pub r: usize,
    pub m: usize,
    pub seed: u64,
    pub trials: u64,
}

fn certificate_json(c: &InvolutionCertificate) -> Value {
    json!({
        "element": c.element,
        "image": c.image.to_string(),
        "weight": c.weight,
        "codim": c.codim,
        "even_weight": c.even_weight,
        "within_bound": c.within_bound,
        "not_contained": c.not_contained,
        "even_outside_support": c.even_outside_support,
    })
}

fn certificate_text(name: &str, c: &InvolutionCertificate) -> String {
    let mut s = format!(
        "{name}: element {:#b}\n  image {}\n  weight {}  codim {}\n  even weight: {}\n  within bound: {}\n",
        c.element, c.image, c.weight, c.codim, c.even_weight, c.within_bound
    );
    if let Some(v) = c.not_contained {
        s.push_str(&format!("  vanishes where sigma does not: {v}\n"));
    }
    if let Some(v) = c.even_outside_support {
        s.push_str(&format!("  even weight outside supp sigma: {v}\n"));
    }
    s
}

fn all_flags(c: &InvolutionCertificate) -> bool {
    c.even_weight && c.within_bound && c.not_contained != Some(false) && c.even_outside_support != Some(false)
}

/// Runs `find_sigma`, and `find_tau` after it when `with_tau` is set.
pub fn involutions(
    src: EmbeddingSource<'_>,
    n: u64,
    c: u64,
    with_tau: bool,
    format: Format,
) -> Result<Output, CliError> {
    let run = |e: &LinearEmbedding| -> Result<Vec<(&'static str, InvolutionCertificate)>, CliError> {
        let sigma = find_sigma(e, n, c).map_err(data_err)?;
        let mut out = vec![("sigma", sigma.clone())];
        if with_tau {
            out.push(("tau", find_tau(e, &sigma, n, c).map_err(data_err)?));
        }
        Ok(out)
    };

    if let Some(path) = src.matrix {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let e = LinearEmbedding::parse(&text).map_err(|e| CliError::Parse(e.to_string()))?;
        let certs = run(&e)?;
        let status = u8::from(!certs.iter().all(|(_, c)| all_flags(c)));
        let text = match format {
            Format::Json => {
                let obj: serde_json::Map<String, Value> =
                    certs.iter().map(|(k, c)| (k.to_string(), certificate_json(c))).collect();
                json_string(&Value::Object(obj))
            }
            _ => certs.iter().map(|(k, c)| certificate_text(k, c)).collect(),
        };
        return Ok(Output { text, status });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(src.seed);
    let mut failures = Vec::new();
    for trial in 0..src.trials {
        let e = LinearEmbedding::random(src.r, src.m, &mut rng).map_err(|e| CliError::Parse(e.to_string()))?;
        match run(&e) {
            Ok(certs) if certs.iter().all(|(_, c)| all_flags(c)) => {}
            Ok(_) => failures.push(trial),
            Err(CliError::Data(_)) => failures.push(trial),
            Err(other) => return Err(other),
        }
    }
    let status = u8::from(!failures.is_empty());
    let text = match format {
        Format::Json => json_string(&json!({
            "r": src.r, "m": src.m, "n": n, "c": c, "seed": src.seed,
            "trials": src.trials, "failures": failures,
        })),
        _ => {
            let which = if with_tau { "sigma and tau" } else { "sigma" };
            let mut s = format!(
                "{} trials (r={}, m={}, n={n}, c={c}, seed={}): {} failures\n",
                src.trials,
                src.r,
                src.m,
                src.seed,
                failures.len()
            );
            if failures.is_empty() {
                s.push_str(&format!("every {which} certificate satisfied all flags\n"));
            } else {
                s.push_str(&format!("failing trials: {failures:?}\n"));
            }
            s
        }
    };
    Ok(Output { text, status })
}

// -------------------------------------------------------------- thresholds

pub fn thresholds(n: u64, c: u64, rank: u64, format: Format) -> Result<Output, CliError> {
    let r = hypothesis_report(ThresholdQuery { n, c, rank }).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut rows: Vec<(&str, String, ThresholdCheck)> = vec![
        ("theorem_bc", "2log2(n) + c/2 - 1".into(), r.theorem_bc),
        ("theorem_a", "2log2(n) + 7".into(), r.theorem_a),
        ("involution_single", "f_c(n)".into(), r.involution_single),
        ("involution_pair", "log2(n) + c/2 + 1 + log2(3) - delta".into(), r.involution_pair),
        ("connected_sum", "2log2(4n)".into(), r.connected_sum),
    ];
    if let Some(fg) = r.fundamental_group {
        rows.push(("fundamental_group", "2log2(n)".into(), fg));
    }
    let text = match format {
        Format::Json => {
            let checks: serde_json::Map<String, Value> = rows
                .iter()
                .map(|(k, f, t)| {
                    (k.to_string(), json!({"formula": f, "value": t.value, "min_rank": t.min_rank, "met": t.met}))
                })
                .collect();
            json_string(&json!({
                "n": n, "c": c, "rank": rank,
                "delta": r.delta,
                "max_symrank": r.max_symrank,
                "thresholds": checks,
                "reduced_rank": r.reduced_rank,
                "reduced_meets_f_c": r.reduced_meets_f_c,
                "linear_bound": r.linear_bound,
                "vacuous": r.vacuous,
            }))
        }
        _ => {
            let mut t = Table::new(vec!["threshold", "formula", "value", "min_rank", "met"]);
            for (k, f, chk) in &rows {
                t.push(vec![
                    k.to_string(),
                    f.clone(),
                    format!("{:.3}", chk.value),
                    chk.min_rank.to_string(),
                    if chk.met { "yes" } else { "no" }.into(),
                ]);
            }
            let mut s = format!(
                "n = {n}, c = {c}, rank = {rank}, delta = {}, max symmetry rank = {}\n",
                r.delta, r.max_symrank
            );
            s.push_str(&t.to_text());
            s.push_str(&format!(
                "reduced rank (rank - delta) = {}: {} f_c(n) = {:.3}\n",
                r.reduced_rank,
                if r.reduced_meets_f_c { "meets" } else { "below" },
                r.involution_single.value
            ));
            if let Some(lin) = r.linear_bound {
                s.push_str(&format!("linear bound rank >= n/6 + 1: {}\n", if lin { "met" } else { "not met" }));
            }
            if r.vacuous {
                s.push_str("vacuous: the main thresholds exceed the maximal symmetry rank in this dimension\n");
            }
            s
        }
    };
    Ok(Output::ok(text))
}
