use std::fmt::Write as _;

use serde_json::{json, Value};

use hopfinv::catalog::{build, enumerate, validate_bundle, AlgebraBundle, BraidSide, CatalogError, Family, HwtModules};
use hopfinv::exec::Execution;
use hopfinv::invariants::{
    closed_invariant, compare as compare_results, invariant_for_module, invariants as compute_invariants, table_rows,
    InvariantError, Path,
};
use hopfinv::poly::{expand, factor_cyclotomic, invariant_json, render_roots, RenderStyle, RootMultiset};
use hopfinv::reprings::{
    check_presentation, check_tensor_rules, fusion_ring, gram_report, hwt_fusion_ring, self_duality_report, ReprError,
    GRAM_LIMIT,
};

use crate::{CliError, Format};

/// Largest algebra the CLI accepts.
pub const DIM_LIMIT: usize = 200;

fn catalog_error(e: CatalogError) -> CliError {
    match e {
        CatalogError::TooLarge { dim, limit } => CliError::Usage(format!(
            "refused: dimension {dim} exceeds the limit {limit}; dense structure tensors need about dim^3 exact entries"
        )),
        other => CliError::Usage(other.to_string()),
    }
}

fn invariant_error(e: InvariantError) -> CliError {
    match e {
        InvariantError::Catalog(c) => catalog_error(c),
        InvariantError::Unsupported(m) => CliError::Usage(m),
        other => CliError::Computation(other.to_string()),
    }
}

fn repr_error(e: ReprError) -> CliError {
    match e {
        ReprError::Catalog(c) => catalog_error(c),
        other => CliError::Computation(other.to_string()),
    }
}

fn family(name: &str) -> Result<Family, CliError> {
    let f = Family::parse(name).map_err(catalog_error)?;
    if f.dim() > DIM_LIMIT {
        return Err(catalog_error(CatalogError::TooLarge { dim: f.dim(), limit: DIM_LIMIT }));
    }
    Ok(f)
}

fn bundle(name: &str) -> Result<AlgebraBundle, CliError> {
    build(family(name)?, DIM_LIMIT).map_err(catalog_error)
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn list(max_dim: usize) -> Result<String, CliError> {
    if max_dim > DIM_LIMIT {
        return Err(catalog_error(CatalogError::TooLarge { dim: max_dim, limit: DIM_LIMIT }));
    }
    let mut out = String::new();
    for f in enumerate(max_dim) {
        writeln!(out, "{f} {}", f.dim()).unwrap();
    }
    Ok(out)
}

pub fn describe(name: &str, as_json: bool) -> Result<String, CliError> {
    let b = bundle(name)?;
    let side = match b.side {
        BraidSide::Modules { .. } => "modules",
        BraidSide::Comodules { .. } => "comodules",
    };
    let simples = b.simple_dims();
    let braidings: Vec<String> = b.params.iter().map(|p| p.to_string()).collect();
    let closed = b.closed_form.map(|c| format!("{c:?}"));
    if as_json {
        return Ok(json_text(json!({
            "algebra": b.id(),
            "dim": b.family.dim(),
            "conductor": b.conductor(),
            "side": side,
            "braidings": braidings,
            "simples": simples.iter().map(|(l, d)| json!({"label": l, "dim": d})).collect::<Vec<_>>(),
            "closed_form": closed,
        })));
    }
    let mut out = String::new();
    writeln!(out, "algebra: {}", b.id()).unwrap();
    writeln!(out, "dimension: {}", b.family.dim()).unwrap();
    writeln!(out, "conductor: {}", b.conductor()).unwrap();
    writeln!(out, "invariants use: simple {side}").unwrap();
    writeln!(out, "closed form: {}", closed.as_deref().unwrap_or("none")).unwrap();
    writeln!(out, "braidings ({}): {}", braidings.len(), braidings.join(", ")).unwrap();
    let listed: Vec<String> = simples.iter().map(|(l, d)| format!("{l} (dim {d})")).collect();
    writeln!(out, "simples ({}): {}", simples.len(), listed.join(", ")).unwrap();
    Ok(out)
}

fn render(roots: &RootMultiset, format: Format, meta: Value) -> Result<String, CliError> {
    Ok(match format {
        Format::Phi => {
            let f = factor_cyclotomic(roots).map_err(|e| CliError::Computation(format!("not a product of cyclotomic polynomials: {e}")))?;
            format!("{}\n", f.render(RenderStyle::Phi))
        }
        Format::Coeffs => format!("{}\n", expand(roots).render()),
        Format::Roots => format!("{}\n", render_roots(roots)),
        Format::Json => {
            let mut v = invariant_json(roots);
            if let (Value::Object(target), Value::Object(extra)) = (&mut v, meta) {
                target.extend(extra);
            }
            json_text(v)
        }
    })
}

pub fn invariant(
    name: &str,
    degree: Option<usize>,
    module: Option<&str>,
    format: Format,
    path: Path,
    exec: Execution,
) -> Result<String, CliError> {
    let fam = family(name)?;
    if let Some(label) = module {
        if path != Path::Generic {
            return Err(CliError::Usage("closed forms are given per degree; use --degree with --path closed or both".into()));
        }
        let b = build(fam, DIM_LIMIT).map_err(catalog_error)?;
        let simples = b.simple_dims();
        let index = simples.iter().position(|(l, _)| l == label).ok_or_else(|| {
            let known: Vec<&str> = simples.iter().map(|(l, _)| l.as_str()).collect();
            CliError::Usage(format!("{name} has no simple {label:?}; simples are {}", known.join(", ")))
        })?;
        let roots = invariant_for_module(&b, index, exec).map_err(invariant_error)?;
        return render(&roots, format, json!({"algebra": b.id(), "module": label, "path": "generic"}));
    }
    let d = degree.unwrap_or(1);
    if d == 0 {
        return Err(CliError::Usage("degree must be positive".into()));
    }
    let result = if path == Path::ClosedForm {
        closed_invariant(&fam, d)
    } else {
        let b = build(fam, DIM_LIMIT).map_err(catalog_error)?;
        compute_invariants(&b, &[d], path, exec).map(|mut v| v.remove(0))
    }
    .map_err(invariant_error)?;
    if format == Format::Json {
        return Ok(json_text(result.to_json()));
    }
    render(&result.roots, format, Value::Null)
}

pub fn compare(left: &str, right: &str, degrees: &[usize], path: Path, as_json: bool, exec: Execution) -> Result<String, CliError> {
    if degrees.contains(&0) {
        return Err(CliError::Usage("degree must be positive".into()));
    }
    let side = |name: &str| -> Result<_, CliError> {
        let fam = family(name)?;
        if path == Path::ClosedForm {
            degrees.iter().map(|&d| closed_invariant(&fam, d)).collect::<Result<Vec<_>, _>>().map_err(invariant_error)
        } else {
            let b = build(fam, DIM_LIMIT).map_err(catalog_error)?;
            compute_invariants(&b, degrees, path, exec).map_err(invariant_error)
        }
    };
    let cmp = compare_results(&side(left)?, &side(right)?);
    if as_json {
        return Ok(json_text(cmp.to_json()));
    }
    if degrees.len() == 1 {
        return Ok(format!("{}\n", cmp.verdict()));
    }
    Ok(format!("{cmp}\n"))
}

pub fn validate(name: &str, exec: Execution) -> Result<String, CliError> {
    let b = bundle(name)?;
    let reports = validate_bundle(&b, exec);
    let mut out = String::new();
    let mut failed = 0;
    for (what, report) in &reports {
        match report {
            Ok(()) => writeln!(out, "ok   {what}").unwrap(),
            Err(v) => {
                failed += 1;
                writeln!(out, "FAIL {what}: {v}").unwrap();
            }
        }
    }
    writeln!(out, "{}: {} checks, {failed} failed", b.id(), reports.len()).unwrap();
    if failed > 0 {
        return Err(CliError::Validation(out));
    }
    Ok(out)
}

pub fn table(as_json: bool, exec: Execution) -> Result<String, CliError> {
    let rows = table_rows(exec).map_err(invariant_error)?;
    if as_json {
        return Ok(json_text(Value::Array(
            rows.iter()
                .map(|r| json!({"algebra": r.family.to_string(), "P1": r.p1.to_json(), "P2": r.p2.to_json()}))
                .collect(),
        )));
    }
    Ok(rows.iter().map(|r| format!("{}\n", r.render())).collect())
}

pub fn repring(name: &str, as_json: bool, exec: Execution) -> Result<String, CliError> {
    let fam = family(name)?;
    let (ring, checks) = match fam {
        Family::GroupGnn { big_n, n } | Family::Suzuki(hopfinv::catalog::SuzukiParams { big_n, n, .. })
            if HwtModules::new(fam).is_ok() =>
        {
            let modules = HwtModules::new(fam).map_err(catalog_error)?;
            let ring = hwt_fusion_ring(&modules, exec).map_err(repr_error)?;
            let checks = vec![("tensor rules", check_tensor_rules(&modules, &ring)), ("presentation", check_presentation(big_n, n, &ring))];
            (ring, checks)
        }
        _ => {
            let b = build(fam, DIM_LIMIT).map_err(catalog_error)?;
            if b.modules.is_empty() {
                return Err(CliError::Usage(format!("simple modules of {name} are not catalogued")));
            }
            (fusion_ring(&b.algebra, &b.modules, exec).map_err(repr_error)?, Vec::new())
        }
    };
    let axioms = ring.axiom_failures();
    let ok = axioms.is_empty() && checks.iter().all(|(_, r)| r.holds());
    let out = if as_json {
        let mut v = json!({
            "algebra": fam.to_string(),
            "ring": ring.to_json(),
            "commutative": ring.is_commutative(),
            "axiom_failures": axioms,
        });
        for (what, r) in &checks {
            v[what.replace(' ', "_")] = r.to_json();
        }
        json_text(v)
    } else {
        let mut out = format!("Rep({fam}): rank {}, {}\n", ring.rank(), if ring.is_commutative() { "commutative" } else { "noncommutative" });
        out.push_str(&ring.to_string());
        match axioms.as_slice() {
            [] => out.push_str("ring axioms: ok\n"),
            failures => writeln!(out, "ring axioms: FAILED {}", failures.join("; ")).unwrap(),
        }
        for (what, r) in &checks {
            writeln!(out, "{what}: {r}").unwrap();
        }
        out
    };
    if ok {
        Ok(out)
    } else {
        Err(CliError::Validation(out))
    }
}

pub fn selfdual(name: &str, as_json: bool, exec: Execution) -> Result<String, CliError> {
    let p = match family(name)? {
        Family::Suzuki(p) => p,
        other => return Err(CliError::Usage(format!("selfdual applies to A_N_n_+ and A_N_n_-, not {other}"))),
    };
    let report = self_duality_report(p).map_err(repr_error)?;
    let gram = if 4 * (p.n * p.big_n) as usize <= GRAM_LIMIT { Some(gram_report(p, exec).map_err(repr_error)?) } else { None };
    let disagreements = gram.as_ref().map_or(0, |rows| rows.iter().filter(|r| r.nondegenerate != r.criterion).count());
    let out = if as_json {
        let mut v = report.to_json();
        v["algebra"] = json!(name);
        v["gram"] = match &gram {
            Some(rows) => Value::Array(
                rows.iter()
                    .map(|r| {
                        json!({
                            "alpha": r.alpha.to_string(),
                            "beta": r.beta.to_string(),
                            "nondegenerate": r.nondegenerate,
                            "criterion": r.criterion,
                        })
                    })
                    .collect(),
            ),
            None => Value::Null,
        };
        json_text(v)
    } else {
        let mut out = format!("{name}: {report}\n");
        match &gram {
            Some(rows) => {
                let nondeg = rows.iter().filter(|r| r.nondegenerate).count();
                writeln!(out, "gram: {nondeg} of {} braidings non-degenerate; {disagreements} disagree with the criterion", rows.len())
                    .unwrap();
            }
            None => writeln!(out, "gram: skipped above dimension {GRAM_LIMIT}").unwrap(),
        }
        out
    };
    if disagreements > 0 {
        return Err(CliError::Validation(out));
    }
    Ok(out)
}
