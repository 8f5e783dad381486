use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde_json::Value;

use sdw_core::bridge::{
    census_from_cosets, from_doubly_even, to_doubly_even, BridgeReport, Direction, Verified, Verify,
};
use sdw_core::catalog::{parse_vector, read_code, render_code, write_code, CodeFormat};
use sdw_core::code::{
    is_self_dual, macwilliams, min_weight, parity_class, rains_bound, weight_enumerator,
};
use sdw_core::coset::{
    build_syndrome_table, covering_radius, delsarte_bound, sphere_covering_bound,
};
use sdw_core::gleason::{
    extremal_doubly_even_enumerator, first_negative_weight, integer_map, min_coefficient,
    rational_pairs, scan_family, scan_to_csv, solve_s_extremal, theorem1_coset_we, Family,
    MinSign, ScanOutcome,
};
use sdw_core::shadow::s_extremal_check;
use sdw_core::{Budget, Error, LinearCode, ParityClass, WeightEnum};

use crate::report::{enumerator, Report};
use crate::{BridgeArgs, FamilyArg, GleasonArgs, GlobalOpts};

/// Malformed command-line values that clap cannot check.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn load(path: &Path) -> Result<LinearCode> {
    read_code(path)
        .map_err(anyhow::Error::from)
        .with_context(|| format!("reading {}", path.display()))
}

/// Budget overruns and oversize lengths degrade to "unknown".
fn within_budget<T>(r: sdw_core::Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. } | Error::LengthTooLarge(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn we_value(we: &WeightEnum) -> Value {
    enumerator(we.pairs())
}

struct Enumerators {
    code: Option<WeightEnum>,
    dual: Option<WeightEnum>,
    source: &'static str,
}

/// The code and dual enumerators, falling back to the unique extremal
/// doubly even enumerator when enumeration is over budget.
fn enumerators(c: &LinearCode, budget: &Budget, extremal_doubly_even: bool) -> Result<Enumerators> {
    let (code, source) = match within_budget(weight_enumerator(c, budget))? {
        Some(we) => (Some(we), "enumeration"),
        None if extremal_doubly_even => (
            Some(extremal_doubly_even_enumerator(c.n())?),
            "Gleason (unique for extremal doubly even)",
        ),
        None => (None, "unavailable (budget)"),
    };
    let dual = match &code {
        Some(we) if is_self_dual(c) => Some(we.clone()),
        Some(we) => Some(macwilliams(we, c.k())?),
        None => None,
    };
    Ok(Enumerators { code, dual, source })
}

pub fn analyze(g: &GlobalOpts, path: &Path) -> Result<Report> {
    let budget = g.budget();
    let c = load(path)?;
    let mut r = Report::new("analyze");
    r.set("file", path.display().to_string());
    r.set("n", c.n());
    r.set("k", c.k());
    let self_dual = is_self_dual(&c);
    r.set("self_dual", self_dual);
    let parity = parity_class(&c).ok();
    r.set("parity_class", parity.map(|p| p.to_string()));

    let (d, method) = min_weight(&c, &budget)?;
    r.set("min_weight", d);
    r.set("min_weight_method", method.to_string());
    let extremal = if self_dual && c.n() % 2 == 0 {
        let bound = rains_bound(c.n())?;
        r.set("rains_bound", bound);
        Some(d == bound)
    } else {
        r.set("rains_bound", Value::Null);
        None
    };
    r.set("extremal", extremal);

    let mut summary = vec![match (self_dual, parity) {
        (true, Some(p)) => format!("self-dual {p}"),
        (false, Some(p)) => format!("[{}, {}] {p}", c.n(), c.k()),
        _ => format!("[{}, {}]", c.n(), c.k()),
    }];
    summary.push(format!("d={d}"));
    if extremal == Some(true) {
        summary.push("extremal".into());
    }

    if self_dual && parity == Some(ParityClass::SinglyEven) {
        match within_budget(s_extremal_check(&c, &budget))? {
            Some(chk) => {
                r.set("shadow_min_weight", chk.d_shadow);
                r.set("s_extremal", chk.is_s_extremal);
                if chk.is_s_extremal {
                    summary.push(format!("s-extremal, d(S)={}", chk.d_shadow));
                }
            }
            None => {
                r.set("shadow_min_weight", Value::Null);
                r.set("s_extremal", Value::Null);
            }
        }
    }

    let doubly_even_extremal = extremal == Some(true) && parity == Some(ParityClass::DoublyEven);
    let e = enumerators(&c, &budget, doubly_even_extremal)?;
    match within_budget(build_syndrome_table(&c, &budget))? {
        Some(t) => {
            let radius = covering_radius(&t);
            r.set("covering_radius", radius);
            summary.push(format!("covering radius {radius}"));
        }
        None => r.set("covering_radius", Value::Null),
    }
    let delsarte = e.dual.as_ref().map(delsarte_bound);
    r.set("delsarte_bound", delsarte);
    if let Some(b) = delsarte {
        summary.push(format!("Delsarte bound {b}"));
    }
    r.set("weight_enumerator", e.code.as_ref().map_or(Value::Null, we_value));
    r.set("weight_enumerator_source", e.source);
    r.summary(summary.join(", "));
    Ok(r)
}

pub fn covering(g: &GlobalOpts, path: &Path, dump: Option<&Path>) -> Result<Report> {
    let budget = g.budget();
    let c = load(path)?;
    let mut r = Report::new("covering");
    r.set("file", path.display().to_string());
    r.set("n", c.n());
    r.set("k", c.k());
    let redundancy = c.n() - c.k();
    match within_budget(build_syndrome_table(&c, &budget))? {
        Some(t) => {
            let radius = covering_radius(&t);
            r.set("status", "exact");
            r.set("covering_radius", radius);
            let mut counts = vec![0u64; radius + 1];
            for &w in t.leader_weights() {
                counts[w as usize] += 1;
            }
            r.set(
                "coset_leader_weights",
                enumerator(counts.iter().enumerate().filter(|(_, &n)| n > 0).map(|(w, n)| (w, n.to_string()))),
            );
            if let Some(p) = dump {
                let file = std::fs::File::create(p)
                    .with_context(|| format!("creating {}", p.display()))?;
                t.write_dump(std::io::BufWriter::new(file))?;
                r.set("dump", p.display().to_string());
            }
            r.summary(format!("covering radius {radius}"));
        }
        None => {
            let lower = sphere_covering_bound(c.n(), redundancy);
            let extremal_de = is_self_dual(&c)
                && parity_class(&c).ok() == Some(ParityClass::DoublyEven)
                && sdw_core::code::is_extremal(&c, &budget)?;
            let upper = enumerators(&c, &budget, extremal_de)?.dual.as_ref().map(delsarte_bound);
            r.set("status", "bounds only");
            r.set("covering_radius", Value::Null);
            r.set("lower_bound", lower);
            r.set("lower_bound_method", "sphere covering");
            r.set("upper_bound", upper);
            r.set("upper_bound_method", upper.map(|_| "Delsarte"));
            r.set(
                "reason",
                format!("2^{redundancy} syndromes exceed the table budget of {}", budget.syndrome_entries),
            );
            let upper_text = upper.map_or("unknown".to_string(), |u| u.to_string());
            r.summary(format!("bounds only: {lower} <= R <= {upper_text}"));
        }
    }
    Ok(r)
}

pub fn parse(g: &GlobalOpts, path: &Path) -> Result<Report> {
    let c = load(path)?;
    let mut r = Report::new("parse");
    r.set("file", path.display().to_string());
    r.set("n", c.n());
    r.set("k", c.k());
    let rows: Vec<Value> = c
        .generator()
        .rows()
        .iter()
        .map(|x| Value::String(x.to_binary_string()))
        .collect();
    r.set("rows", rows);
    if let Some(dir) = &g.out_dir {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("code");
        let out = write_into(dir, &format!("{stem}.gen"), &c)?;
        r.set("written", out.display().to_string());
    }
    r.summary(format!("[{}, {}] code", c.n(), c.k()));
    r.table(render_code(&c, CodeFormat::Generator)?);
    Ok(r)
}

fn write_into(dir: &Path, name: &str, c: &LinearCode) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let p = dir.join(name);
    write_code(c, &p).with_context(|| format!("writing {}", p.display()))?;
    Ok(p)
}

fn parse_k(spec: &str) -> Result<(usize, usize)> {
    let bad = || UsageError(format!("--k expects N or A..B, got {spec:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (a, b) = match spec.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let k = num(spec)?;
            (k, k)
        }
    };
    if a == 0 || a > b {
        return Err(bad().into());
    }
    Ok((a, b))
}

pub fn gleason(args: &GleasonArgs) -> Result<Report> {
    let family = match args.family {
        FamilyArg::Eight => Family::F8,
        FamilyArg::Sixteen => Family::F16,
    };
    let (from, to) = parse_k(&args.k)?;
    let mut r = Report::new("gleason");
    r.set("family", family.to_string());
    if from == to && !args.timing {
        let gs = solve_s_extremal(family, from)?;
        let (code_min, shadow_min) = min_coefficient(&gs);
        let sign = |q| match MinSign::of(q) {
            MinSign::Negative => "negative",
            MinSign::NonNegative => "nonnegative",
        };
        r.set("k", gs.k);
        r.set("n", gs.n);
        r.set("unique", gs.unique);
        r.set("integral", gs.is_integral());
        r.set("code_min_sign", sign(&code_min));
        r.set("shadow_min_sign", sign(&shadow_min));
        r.set("first_negative_weight", first_negative_weight(&gs));
        r.set("code_we", enumerator(rational_pairs(&gs.code_we)));
        r.set("shadow_we", enumerator(rational_pairs(&gs.shadow_we)));
        if family == Family::F8 {
            let coset = match theorem1_coset_we(&gs) {
                Ok(v) => enumerator(integer_map(&v)),
                Err(Error::NonIntegral(_)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            r.set("coset_we", coset);
        }
        r.summary(format!(
            "{family} k={} n={}: code side {}, shadow side {}",
            gs.k,
            gs.n,
            sign(&code_min),
            sign(&shadow_min)
        ));
        return Ok(r);
    }

    let rows = scan_family(family, from, to)?;
    let first_k = |pick: fn(&ScanOutcome) -> bool| rows.iter().find(|x| pick(&x.outcome)).map(|x| x.k);
    let code_flip = first_k(|o| matches!(o, ScanOutcome::Solved { code_min: MinSign::Negative, .. }));
    let shadow_flip = first_k(|o| matches!(o, ScanOutcome::Solved { shadow_min: MinSign::Negative, .. }));
    r.set("k_range", format!("{from}..{to}"));
    r.set("first_k_code_negative", code_flip);
    r.set("first_k_shadow_negative", shadow_flip);
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|x| {
            let mut o = serde_json::Map::new();
            o.insert("k".into(), x.k.into());
            o.insert("n".into(), x.n.into());
            match &x.outcome {
                ScanOutcome::Solved { unique, code_min, shadow_min, first_negative_weight, integral } => {
                    o.insert("status".into(), "solved".into());
                    o.insert("unique".into(), (*unique).into());
                    o.insert("code_min_sign".into(), code_min.symbol().into());
                    o.insert("shadow_min_sign".into(), shadow_min.symbol().into());
                    o.insert("first_negative_weight".into(), (*first_negative_weight).into());
                    o.insert("integral".into(), (*integral).into());
                }
                ScanOutcome::Inconsistent => {
                    o.insert("status".into(), "inconsistent".into());
                }
            }
            if args.timing {
                o.insert("wall_time_s".into(), x.wall_time.as_secs_f64().into());
            }
            Value::Object(o)
        })
        .collect();
    r.set("rows", json_rows);
    let flip = |k: Option<usize>| k.map_or("none".to_string(), |k| format!("k={k}"));
    r.summary(format!(
        "{family} k={from}..{to}: first negative code coefficient at {}, first negative shadow coefficient at {}",
        flip(code_flip),
        flip(shadow_flip)
    ));
    r.table(scan_to_csv(&rows, args.timing));
    Ok(r)
}

fn verified_if(ok: bool, value: String) -> Verified {
    if ok {
        Verified::Verified(value)
    } else {
        Verified::Failed(value)
    }
}

/// s-extremality with the expected `(d, d(S))` and the Gleason enumerator.
fn check_s_extremal(
    c: &LinearCode,
    k: usize,
    expected: &WeightEnum,
    budget: &Budget,
) -> Result<(Verified, Verified)> {
    let shape = match within_budget(s_extremal_check(c, budget))? {
        Some(chk) => verified_if(
            chk.is_s_extremal && chk.d_code == 4 * k + 2 && chk.d_shadow == 4 * k + 4,
            format!("d={}, d(S)={}", chk.d_code, chk.d_shadow),
        ),
        None => Verified::Unverified,
    };
    let we = match within_budget(weight_enumerator(c, budget))? {
        Some(we) => verified_if(&we == expected, "equal".into()),
        None => Verified::Unverified,
    };
    Ok((shape, we))
}

fn family_index(n: usize) -> Result<usize> {
    if n % 24 != 8 || n < 32 {
        return Err(Error::PreconditionFailed(format!(
            "length {n} is not of the form 24k + 8 with k >= 1"
        ))
        .into());
    }
    Ok((n - 8) / 24)
}

pub fn bridge(g: &GlobalOpts, args: &BridgeArgs) -> Result<Report> {
    let budget = g.budget();
    let c = load(&args.path)?;
    let input = args.path.display().to_string();
    let br = if args.reverse {
        bridge_reverse(g, &c, input, &budget)?
    } else if let Some(spec) = &args.v {
        bridge_single(g, &c, input, spec, &budget)?
    } else {
        bridge_census(g, &c, input, &budget)?
    };
    let mut r = Report::new("bridge");
    r.ok = br.all_passed();
    r.set("input", br.input.clone());
    r.set(
        "direction",
        match br.direction {
            Direction::ToDoublyEven => "to-doubly-even",
            Direction::FromDoublyEven => "from-doubly-even",
        },
    );
    r.set("produced_count", br.produced.len());
    let props: serde_json::Map<String, Value> =
        br.properties.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect();
    let mut summary: Vec<String> = br.properties.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    summary.insert(0, if r.ok { "bridge verified".into() } else { "bridge FAILED".into() });
    r.set("properties", Value::Object(props));
    if g.out_dir.is_some() {
        r.set("produced", br.produced.iter().cloned().map(Value::String).collect::<Vec<_>>());
    }
    r.summary(summary.join("; "));
    Ok(r)
}

fn gleason_enum(k: usize) -> Result<WeightEnum> {
    Ok(solve_s_extremal(Family::F8, k)?.code_enum()?)
}

fn bridge_single(g: &GlobalOpts, d: &LinearCode, input: String, spec: &str, budget: &Budget) -> Result<BridgeReport> {
    let k = family_index(d.n())?;
    let text = if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?
    } else {
        spec.to_string()
    };
    let v = parse_vector(&text, d.n())?;
    let c = from_doubly_even(d, &v, Verify::Full, budget)?;
    let mut br = BridgeReport::new(input, Direction::FromDoublyEven);
    br.record("coset minimum weight", Verified::Verified((4 * k + 2).to_string()));
    let (shape, we) = check_s_extremal(&c, k, &gleason_enum(k)?, budget)?;
    br.record("s-extremal", shape);
    br.record("enumerator matches Gleason", we);
    br.produced.push(match &g.out_dir {
        Some(dir) => write_into(dir, "neighbor.gen", &c)?.display().to_string(),
        None => "neighbor".into(),
    });
    Ok(br)
}

fn bridge_census(g: &GlobalOpts, d: &LinearCode, input: String, budget: &Budget) -> Result<BridgeReport> {
    let k = family_index(d.n())?;
    let codes = census_from_cosets(d, budget)?;
    let expected = gleason_enum(k)?;
    let checks: Vec<(Verified, Verified)> = codes
        .par_iter()
        .map(|c| check_s_extremal(c, k, &expected, budget))
        .collect::<Result<_>>()?;
    let mut br = BridgeReport::new(input, Direction::FromDoublyEven);
    br.record(format!("cosets of weight {}", 4 * k + 2), Verified::Verified(codes.len().to_string()));
    let tally = |pick: fn(&(Verified, Verified)) -> &Verified| -> Verified {
        if checks.iter().any(|x| *pick(x) == Verified::Unverified) {
            return Verified::Unverified;
        }
        let good = checks.iter().filter(|x| matches!(pick(x), Verified::Verified(_))).count();
        verified_if(good == checks.len(), format!("{good}/{}", checks.len()))
    };
    br.record("s-extremal", tally(|x| &x.0));
    br.record("enumerator matches Gleason", tally(|x| &x.1));
    for (i, c) in codes.iter().enumerate() {
        br.produced.push(match &g.out_dir {
            Some(dir) => write_into(dir, &format!("census_{i:05}.gen"), c)?.display().to_string(),
            None => format!("census {i}"),
        });
    }
    Ok(br)
}

fn bridge_reverse(g: &GlobalOpts, c: &LinearCode, input: String, budget: &Budget) -> Result<BridgeReport> {
    let k = family_index(c.n())?;
    let pair = to_doubly_even(c, budget)?;
    let mut br = BridgeReport::new(input, Direction::ToDoublyEven);
    br.record("input s-extremal", Verified::Verified(format!("d={}, d(S)={}", 4 * k + 2, 4 * k + 4)));
    br.record("neighbors extremal doubly even", Verified::Verified(format!("d={}", 4 * k + 4)));
    let (w1, w2) = pair.coset_leader_weights;
    br.record(
        "coset minimum weights",
        verified_if(w1 == 4 * k + 2 && w2 == 4 * k + 2, format!("{w1}, {w2}")),
    );
    br.record(
        "covering radii",
        match pair.covering_radii {
            Some((a, b)) => Verified::Verified(format!("{a}, {b}")),
            None => Verified::Unverified,
        },
    );
    for (i, code) in [&pair.first, &pair.second].into_iter().enumerate() {
        br.produced.push(match &g.out_dir {
            Some(dir) => write_into(dir, &format!("neighbor_{}.gen", i + 1), code)?.display().to_string(),
            None => format!("neighbor {}", i + 1),
        });
    }
    Ok(br)
}
