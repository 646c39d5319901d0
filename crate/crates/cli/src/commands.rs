use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use polar_core::analysis::{
    annotate_hits, search_coincidences, special_case_tables, verify_propositions, Grid,
};
use polar_core::degrees::{degree_kappa, degree_lambda, rank_degrees};
use polar_core::params::top_order;
use polar_core::{census, count_rank, validate_params, Error, GraphKind, PolarParams};
use polar_oracle::export::write_layer;
use polar_oracle::{
    build_space, enumerate_layers, measure_degrees, Comparison, CrossCheckReport, FormKind,
    OracleError, Quantity,
};
use serde_json::{json, Map, Value};

use crate::output::{strings, Emitter, Record};
use crate::{GridArgs, InputError, Outcome, ParamArgs};

fn params(a: &ParamArgs) -> Result<PolarParams, InputError> {
    Ok(validate_params(a.n, a.s, a.t)?)
}

fn rank(p: &PolarParams, i: i64) -> Result<u32, InputError> {
    let i = u32::try_from(i).map_err(|_| Error::IndexOutOfRange {
        index: i,
        max: p.n() as i64 - 1,
    })?;
    p.check_rank(i)?;
    Ok(i)
}

fn grid(n_max: u32, s: Vec<u64>) -> Grid {
    Grid::up_to(n_max).with_s(s)
}

pub fn census<W: Write>(em: &mut Emitter<W>, a: &ParamArgs, i: Option<i64>) -> Outcome {
    let p = params(a)?;
    let mut r = Record::new("census", Some(p));
    match i {
        Some(i) => {
            let i = rank(&p, i)?;
            r.set("i", i).set("count", count_rank(&p, i)?.to_string());
            r.set("i_max", census::i_max(&p));
        }
        None => {
            let prof = census::profile(&p);
            r.set("counts", strings(&prof.counts));
            r.set("i_max", census::i_max(&p));
            r.set("argmax", prof.argmax.clone());
            r.set("pattern", strings(prof.pattern.iter().map(|s| s.symbol())));
            r.set("unimodal", prof.is_unimodal());
        }
    }
    em.emit(&r)?;
    Ok(true)
}

pub fn degrees<W: Write>(
    em: &mut Emitter<W>,
    a: &ParamArgs,
    i: i64,
    kind: &str,
    decompose: bool,
) -> Outcome {
    let p = params(a)?;
    let i = rank(&p, i)?;
    let d = rank_degrees(&p, i)?;
    let mut r = Record::new("degrees", Some(p));
    r.set("i", i);
    match kind {
        "all" => {
            for g in GraphKind::ALL {
                r.set(g.degree_name(), d.get(g).to_string());
            }
            r.set("lambda", d.lambda.to_string());
        }
        "lambda" => {
            r.set("lambda", degree_lambda(&p, i)?.to_string());
        }
        other => {
            let g: GraphKind = other
                .parse()
                .map_err(|_| InputError(format!("BadKind: {other:?}")))?;
            r.set(g.degree_name(), d.get(g).to_string());
        }
    }
    if decompose {
        let parts: Map<String, Value> = degree_kappa(&p, i)?
            .terms
            .into_iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect();
        r.set("kappa_components", parts);
    }
    em.emit(&r)?;
    Ok(true)
}

pub fn verify<W: Write>(em: &mut Emitter<W>, a: &GridArgs) -> Outcome {
    let g = grid(a.n_max, a.grid_s.clone());
    let points = g.points();
    if points.is_empty() {
        eprintln!("warning: the grid has no admissible parameters; nothing to check");
    }
    let reports: Vec<_> = points.iter().map(verify_propositions).collect();
    let mut all_ok = true;
    if let Some(first) = reports.first() {
        for (k, check) in first.checks.iter().enumerate() {
            let instances: usize = reports.iter().map(|r| r.checks[k].instances).sum();
            let failures: Vec<&String> = reports
                .iter()
                .flat_map(|r| r.checks[k].counterexamples.iter())
                .collect();
            all_ok &= failures.is_empty();
            let mut r = Record::new("verify", None);
            r.set("check", check.name).set("claim", check.claim);
            r.set("instances", instances)
                .set("failures", failures.len());
            r.set("passed", failures.is_empty());
            if let Some(first) = failures.first() {
                r.set("first_failure", first.as_str());
            }
            em.emit(&r)?;
        }
    }
    let covers_all_e = (0..=4u8).all(|e| a.grid_s.iter().any(|&s| top_order(s, e).is_some()));
    if covers_all_e && !points.is_empty() {
        let (even, odd) = special_case_tables(&a.grid_s)?;
        for t in [even, odd] {
            let dependent = t.s_dependent_cells();
            all_ok &= dependent.is_empty();
            let mut r = Record::new("verify", None);
            r.set("check", format!("sign_table_{}", t.parity.name()));
            r.set("rows", t.render());
            r.set(
                "s_dependent_cells",
                strings(dependent.iter().map(|(m, e)| format!("m={m},e={e}"))),
            );
            r.set("passed", dependent.is_empty());
            em.emit(&r)?;
        }
    }
    let mut r = Record::new("verify", None);
    r.set("check", "summary")
        .set("points", points.len())
        .set("passed", all_ok);
    em.emit(&r)?;
    Ok(all_ok)
}

const CONJECTURE_KINDS: [GraphKind; 3] = [
    GraphKind::Collinearity,
    GraphKind::Union,
    GraphKind::PerpMax,
];

pub fn search<W: Write>(
    em: &mut Emitter<W>,
    n_max: u32,
    grid_s: Vec<u64>,
    conjecture: bool,
    prune: bool,
) -> Outcome {
    let g = grid(n_max, grid_s.clone());
    let mut hits = search_coincidences(&g, prune);
    if conjecture {
        annotate_hits(&mut hits, &CONJECTURE_KINDS);
    }
    let mut violations = 0;
    for h in &hits {
        let mut r = Record::new("search", Some(h.params));
        r.set("i", h.i)
            .set("j", h.j)
            .set("count", h.value.to_string());
        for (kind, eq) in &h.degree_equal {
            r.set(format!("{}_equal", kind.degree_name()), *eq);
            violations += *eq as usize;
        }
        em.emit(&r)?;
    }
    let mut r = Record::new("search", None);
    r.set("n_max", n_max)
        .set("grid_s", grid_s)
        .set("pruned", prune);
    r.set("points", g.points().len()).set("hits", hits.len());
    if conjecture {
        r.set("violations", violations);
    }
    em.emit(&r)?;
    Ok(violations == 0)
}

fn oracle_error(e: OracleError) -> Result<bool, InputError> {
    match e {
        OracleError::NotRegular(_) => {
            eprintln!("error: {e}");
            Ok(false)
        }
        e => Err(InputError(e.to_string())),
    }
}

pub fn oracle<W: Write>(
    em: &mut Emitter<W>,
    kind: &str,
    q: u32,
    rank: u32,
    cross_check: bool,
    sample: usize,
    export: Option<(u32, PathBuf)>,
) -> Outcome {
    let kind: FormKind = kind
        .parse()
        .map_err(|e: String| InputError(format!("BadKind: {e}")))?;
    let space = match build_space(kind, q, rank) {
        Ok(s) => s,
        Err(e) => return oracle_error(e),
    };
    let p = space.params();
    let layers = match enumerate_layers(&space, rank - 1) {
        Ok(l) => l,
        Err(e) => return oracle_error(e),
    };
    if let Some((i, path)) = export {
        let layer = layers.get(i as usize).ok_or_else(|| {
            InputError(
                Error::IndexOutOfRange {
                    index: i as i64,
                    max: rank as i64 - 1,
                }
                .to_string(),
            )
        })?;
        let mut f = BufWriter::new(File::create(&path)?);
        write_layer(&space, layer, &mut f)?;
        f.flush()?;
    }
    let mut measured = Vec::new();
    for layer in &layers {
        match measure_degrees(&space, layer, sample) {
            Ok(m) => measured.push(m),
            Err(e) => return oracle_error(e),
        }
    }
    let mut r = Record::new("oracle", Some(p));
    r.set("kind", kind.name())
        .set("q", q)
        .set("dim", space.dim());
    r.set("field_order", space.field().order());
    r.set("counts", strings(layers.iter().map(Vec::len)));
    for g in GraphKind::ALL {
        r.set(g.degree_name(), strings(measured.iter().map(|m| m.get(g))));
    }
    r.set("lambda", strings(measured.iter().map(|m| m.lambda)));
    let mut ok = true;
    if cross_check {
        let report = compare(&p, &layers, &measured)?;
        let bad: Vec<String> = report
            .mismatches()
            .iter()
            .map(|c| {
                format!(
                    "i={} {} formula={} measured={}",
                    c.i,
                    c.quantity.name(),
                    c.formula,
                    c.measured
                )
            })
            .collect();
        ok = bad.is_empty();
        r.set("comparisons", report.comparisons.len());
        r.set("all_match", ok);
        r.set("mismatches", json!(bad));
    }
    em.emit(&r)?;
    Ok(ok)
}

fn compare(
    p: &PolarParams,
    layers: &[Vec<polar_oracle::SubspaceRep>],
    measured: &[polar_oracle::NeighbourCounts],
) -> Result<CrossCheckReport, InputError> {
    let mut comparisons = Vec::new();
    for (i, (layer, m)) in layers.iter().zip(measured).enumerate() {
        let i = i as u32;
        let d = rank_degrees(p, i)?;
        comparisons.push(Comparison {
            i,
            quantity: Quantity::Count,
            formula: d.count.clone(),
            measured: (layer.len() as u64).into(),
        });
        for g in GraphKind::ALL {
            comparisons.push(Comparison {
                i,
                quantity: Quantity::Degree(g),
                formula: d.get(g).clone(),
                measured: m.get(g).into(),
            });
        }
        comparisons.push(Comparison {
            i,
            quantity: Quantity::Lambda,
            formula: d.lambda.clone(),
            measured: m.lambda.into(),
        });
    }
    Ok(CrossCheckReport {
        params: *p,
        comparisons,
    })
}
