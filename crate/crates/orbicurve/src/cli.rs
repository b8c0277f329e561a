//! Command-line front door: parse JSON documents, dispatch computations,
//! emit human or JSON reports with stable exit codes.
//!
//! Exit codes: 0 = computed and all residual-type checks passed; 1 = a
//! residual check failed; 2 = invalid input. Verdict-type outputs (a
//! NotGeometric answer, an invalid cocycle) are results, not failures, and
//! exit 0. Reports never contain floating point: every non-integer value is
//! an exact rational string "a/b".

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::bundles::{
    cocycle_validate, projection_formula_residual, pushforward_invariants, LedgerBundle,
};
use crate::covers::{
    etale_identity_residual, random_cover_spec, CoverAnalysis, CoverFamily, CoverSpec,
    RandomBounds,
};
use crate::doc;
use crate::genus::{
    classical_rh_residual, hilbert_rh_residual, orbifold_genus, orbifold_hilbert_rh_residual,
    ramification_divisor, rh_residual,
};
use crate::geometric::{geometric_verdict, VerdictStatus};
use crate::localfield::RamificationProfile;
use crate::orbifold::BranchData;
use crate::rat::{rat_string, Rat};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
struct Options {
    format: Format,
    seed: u64,
    trials: u64,
    q: Option<u64>,
    family: Option<CoverFamily>,
    input_path: Option<String>,
    inline: Option<String>,
}

const USAGE: &str = "usage: orbicurve <verb> [input.json] [flags]
verbs:
  degram        profile document: different, filtration, Herbrand data
  genus         orbifold document: exact orbifold genus
  rh-check      morphism document: validity, divisor, Riemann-Hurwitz residual
  geometric     orbifold document: geometricity verdict with certificate
  oracle        cover document, or --family kummer|artin_schreier sweep
  bundle-check  ledger/equivariant document, or randomized ledger sweep
flags:
  --format text|json   report format (default text)
  --seed <u64>         sweep seed (default 0)
  --trials <n>         sweep size (default 100)
  --q <prime power>    finite field order for sweeps
  --family <name>      cover family for oracle sweeps
  --inline <json>      pass the document inline instead of a path";

/// Run the CLI on argv (without the program name); returns the report and
/// the exit code. The report goes to stdout for codes 0 and 1, stderr for 2.
pub fn run(args: &[String]) -> (String, i32) {
    match run_inner(args) {
        Ok((report, code)) => (report, code),
        Err(e) => (format!("error: {e}"), 2),
    }
}

fn run_inner(args: &[String]) -> Result<(String, i32), doc::DocError> {
    let Some(verb) = args.first() else {
        return Ok((USAGE.to_string(), 2));
    };
    let opts = parse_options(&args[1..])?;
    match verb.as_str() {
        "degram" => degram_verb(&opts),
        "genus" => genus_verb(&opts),
        "rh-check" => rh_check_verb(&opts),
        "geometric" => geometric_verb(&opts),
        "oracle" => oracle_verb(&opts),
        "bundle-check" => bundle_check_verb(&opts),
        other => Err(doc::DocError::semantic(format!(
            "unknown verb '{other}'\n{USAGE}"
        ))),
    }
}

fn parse_options(args: &[String]) -> Result<Options, doc::DocError> {
    let mut opts = Options {
        format: Format::Text,
        seed: 0,
        trials: 100,
        q: None,
        family: None,
        input_path: None,
        inline: None,
    };
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let mut take_value = |name: &str| -> Result<String, doc::DocError> {
            i += 1;
            args.get(i)
                .cloned()
                .ok_or_else(|| doc::DocError::semantic(format!("{name} needs a value")))
        };
        match arg.as_str() {
            "--format" => {
                opts.format = match take_value("--format")?.as_str() {
                    "text" => Format::Text,
                    "json" => Format::Json,
                    other => {
                        return Err(doc::DocError::semantic(format!(
                            "unknown format '{other}'"
                        )))
                    }
                };
            }
            "--seed" => {
                opts.seed = take_value("--seed")?
                    .parse()
                    .map_err(|_| doc::DocError::semantic("--seed must be a u64"))?;
            }
            "--trials" => {
                opts.trials = take_value("--trials")?
                    .parse()
                    .map_err(|_| doc::DocError::semantic("--trials must be a u64"))?;
            }
            "--q" => {
                opts.q = Some(
                    take_value("--q")?
                        .parse()
                        .map_err(|_| doc::DocError::semantic("--q must be a prime power"))?,
                );
            }
            "--family" => {
                let name = take_value("--family")?;
                opts.family = Some(CoverFamily::parse(&name).ok_or_else(|| {
                    doc::DocError::semantic(format!(
                        "unknown family '{name}' (kummer or artin_schreier)"
                    ))
                })?);
            }
            "--inline" => {
                opts.inline = Some(take_value("--inline")?);
            }
            other if other.starts_with("--") => {
                return Err(doc::DocError::semantic(format!("unknown flag '{other}'")));
            }
            path => {
                if opts.input_path.is_some() {
                    return Err(doc::DocError::semantic("more than one input path given"));
                }
                opts.input_path = Some(path.to_string());
            }
        }
        i += 1;
    }
    Ok(opts)
}

fn read_input(opts: &Options) -> Result<String, doc::DocError> {
    if let Some(inline) = &opts.inline {
        return Ok(inline.clone());
    }
    let Some(path) = &opts.input_path else {
        return Err(doc::DocError::semantic(
            "this verb needs an input document (path or --inline)",
        ));
    };
    std::fs::read_to_string(path)
        .map_err(|e| doc::DocError::semantic(format!("cannot read {path}: {e}")))
}

fn render_profile(prof: &RamificationProfile) -> String {
    if prof.is_trivial() {
        return "trivial".into();
    }
    let mut parts = vec![];
    if prof.tame_order() > 1 {
        parts.push(format!("tame {}", prof.tame_order()));
    }
    if prof.wild_rank() > 0 {
        let comps: Vec<String> = prof
            .wild()
            .iter()
            .map(|c| format!("{}:{}", c.label, c.jump))
            .collect();
        parts.push(format!("wild{{{}}}", comps.join(",")));
    }
    parts.join(" * ")
}

fn profile_json(prof: &RamificationProfile) -> Value {
    json!({
        "p": prof.residue_char(),
        "tame": prof.tame_order(),
        "wild": prof.wild().iter()
            .map(|c| json!({"label": c.label, "jump": c.jump}))
            .collect::<Vec<_>>(),
    })
}

fn branch_data_json(bd: &BranchData) -> Value {
    let map: BTreeMap<String, Value> = bd
        .entries()
        .map(|(pt, prof)| (pt.to_string(), profile_json(prof)))
        .collect();
    json!(map)
}

fn emit(opts: &Options, report: Value, text: String, code: i32) -> (String, i32) {
    match opts.format {
        Format::Json => (
            serde_json::to_string_pretty(&report).expect("report serializes"),
            code,
        ),
        Format::Text => (text, code),
    }
}

// --- degram ------------------------------------------------------------------

fn degram_verb(opts: &Options) -> Result<(String, i32), doc::DocError> {
    let profile = doc::profile_from_str(&read_input(opts)?)?;
    let degram = profile.degram();
    let hilbert = profile.hilbert_sum();
    let filtration = profile.lower_filtration();
    let consistent = degram == hilbert;
    let report = json!({
        "v": 1,
        "verb": "degram",
        "profile": profile_json(&profile),
        "degree": profile.degree(),
        "degram": degram,
        "hilbert_sum": hilbert,
        "lower_filtration": filtration
            .iter()
            .map(|(b, o)| json!({"break": b, "order": o}))
            .collect::<Vec<_>>(),
        "dual_path_consistent": consistent,
    });
    let mut text = String::new();
    text.push_str(&format!("profile: {}\n", render_profile(&profile)));
    text.push_str(&format!("degree: {}\n", profile.degree()));
    text.push_str(&format!("degram (character sum): {degram}\n"));
    text.push_str(&format!("degram (Hilbert sum):   {hilbert}\n"));
    text.push_str("lower filtration (break, order):");
    for (b, o) in &filtration {
        text.push_str(&format!(" ({b}, {o})"));
    }
    text.push('\n');
    text.push_str(&format!("dual-path consistent: {consistent}"));
    Ok(emit(opts, report, text, if consistent { 0 } else { 1 }))
}

// --- genus ---------------------------------------------------------------------

fn genus_verb(opts: &Options) -> Result<(String, i32), doc::DocError> {
    let orb = doc::orbifold_from_str(&read_input(opts)?)?;
    let g = orbifold_genus(&orb);
    let report = json!({
        "v": 1,
        "verb": "genus",
        "curve": {"id": orb.curve.id, "genus": orb.curve.genus},
        "branch": branch_data_json(&orb.branch),
        "orbifold_genus": rat_string(&g),
    });
    let text = format!(
        "curve {} (genus {})\norbifold genus: {}",
        orb.curve.id,
        orb.curve.genus,
        crate::rat::rat_display(&g)
    );
    Ok(emit(opts, report, text, 0))
}

// --- rh-check -----------------------------------------------------------------

fn rh_check_verb(opts: &Options) -> Result<(String, i32), doc::DocError> {
    let m = doc::morphism_from_str(&read_input(opts)?)?;
    let validation = m
        .validate()
        .map_err(|e| doc::DocError::semantic(e.to_string()))?;
    let (residual, classical, divisor, gy, gx) = if validation.valid {
        let div = ramification_divisor(&m).map_err(|e| doc::DocError::semantic(e.to_string()))?;
        (
            Some(rh_residual(&m).map_err(|e| doc::DocError::semantic(e.to_string()))?),
            classical_rh_residual(&m),
            Some(div),
            orbifold_genus(&m.source),
            orbifold_genus(&m.target),
        )
    } else {
        (
            None,
            classical_rh_residual(&m),
            None,
            orbifold_genus(&m.source),
            orbifold_genus(&m.target),
        )
    };
    let passed = validation.valid && residual.as_ref().map(|r| r.is_zero()).unwrap_or(false);
    let divisor_json: Value = match &divisor {
        Some(d) => {
            let map: BTreeMap<String, String> = d
                .coefficients
                .iter()
                .map(|(pt, c)| (pt.to_string(), rat_string(c)))
                .collect();
            json!(map)
        }
        None => Value::Null,
    };
    let report = json!({
        "v": 1,
        "verb": "rh-check",
        "identity": "2g(Y,Q)-2 = d(2g(X,P)-2) + deg(D)",
        "valid_morphism": validation.valid,
        "violations": validation.violations.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "etale_points": validation.etale.iter()
            .map(|(pt, &b)| (pt.to_string(), b))
            .collect::<BTreeMap<String, bool>>(),
        "genus_source": rat_string(&gy),
        "genus_target": rat_string(&gx),
        "ramification_divisor": divisor_json,
        "divisor_degree": divisor.as_ref().map(|d| rat_string(&d.degree())),
        "rh_residual": residual.as_ref().map(rat_string),
        "classical_rh_residual": rat_string(&classical),
        "passed": passed,
    });
    let mut text = String::new();
    text.push_str(&format!("valid morphism: {}\n", validation.valid));
    text.push_str(&format!(
        "genus source: {}   genus target: {}\n",
        crate::rat::rat_display(&gy),
        crate::rat::rat_display(&gx)
    ));
    if let Some(d) = &divisor {
        text.push_str(&format!(
            "ramification divisor degree: {}\n",
            crate::rat::rat_display(&d.degree())
        ));
    }
    if let Some(r) = &residual {
        text.push_str(&format!(
            "rh residual (2g(Y,Q)-2 = d(2g(X,P)-2) + deg D): {}\n",
            crate::rat::rat_display(r)
        ));
    }
    text.push_str(&format!("passed: {passed}"));
    Ok(emit(opts, report, text, if passed { 0 } else { 1 }))
}

// --- geometric ----------------------------------------------------------------

fn geometric_verb(opts: &Options) -> Result<(String, i32), doc::DocError> {
    let orb = doc::orbifold_from_str(&read_input(opts)?)?;
    let verdict = geometric_verdict(&orb);
    let witness_json: Value = match &verdict.witness {
        Some(factors) => json!(factors.iter().map(branch_data_json).collect::<Vec<_>>()),
        None => Value::Null,
    };
    let report = json!({
        "v": 1,
        "verb": "geometric",
        "status": verdict.status.name(),
        "rule": verdict.rule.map(|r| r.name()),
        "citation": verdict.citation,
        "witness": witness_json,
    });
    let mut text = format!("status: {}\n", verdict.status.name());
    if let Some(rule) = verdict.rule {
        text.push_str(&format!("rule: {}\n", rule.name()));
    }
    text.push_str(&format!("citation: {}", verdict.citation));
    if let Some(factors) = &verdict.witness {
        text.push_str("\nwitness factors:");
        for (i, f) in factors.iter().enumerate() {
            let parts: Vec<String> = f
                .entries()
                .map(|(pt, prof)| format!("{pt} -> {}", render_profile(prof)))
                .collect();
            text.push_str(&format!("\n  [{i}] {}", parts.join("; ")));
        }
    }
    // verdicts are results, not failures
    Ok(emit(opts, report, text, 0))
}

// --- oracle -------------------------------------------------------------------

struct TrialOutcome {
    spec: String,
    degree: u64,
    genus: u64,
    checks: BTreeMap<&'static str, bool>,
}

impl TrialOutcome {
    fn passed(&self) -> bool {
        self.checks.values().all(|&b| b)
    }
}

fn run_cover_checks(analysis: &CoverAnalysis, spec: &CoverSpec) -> TrialOutcome {
    let mut checks = BTreeMap::new();
    let zero = Rat::zero();

    let etale_resid = etale_identity_residual(analysis).ok();
    checks.insert("etale_identity_zero", etale_resid.as_ref() == Some(&zero));

    let trivial = analysis.trivial_descriptor().ok();
    let trivial_ok = trivial.as_ref().map(|m| {
        m.validate().map(|r| r.valid).unwrap_or(false)
            && rh_residual(m).map(|r| r.is_zero()).unwrap_or(false)
            && rh_residual(m).map(|r| r == classical_rh_residual(m)).unwrap_or(false)
    });
    checks.insert("rh_trivial_zero", trivial_ok == Some(true));

    let bf = analysis.bf_descriptor().ok();
    let bf_ok = bf.as_ref().map(|m| {
        m.validate()
            .map(|r| r.valid && r.etale.values().all(|&b| b))
            .unwrap_or(false)
            && rh_residual(m).map(|r| r.is_zero()).unwrap_or(false)
    });
    checks.insert("rh_bf_zero_and_etale", bf_ok == Some(true));

    let rec = analysis.classical_record();
    checks.insert("hilbert_zero", hilbert_rh_residual(&rec).is_zero());
    checks.insert(
        "orbifold_hilbert_zero",
        orbifold_hilbert_rh_residual(&rec).is_zero(),
    );
    let orec = analysis.etale_orbifold_record();
    checks.insert(
        "orbifold_hilbert_etale_zero",
        orbifold_hilbert_rh_residual(&orec).is_zero(),
    );

    let bd_support_ok = analysis
        .branch_data()
        .map(|bd| bd.support().count() == analysis.branch.len())
        .unwrap_or(false);
    checks.insert("branch_support_matches", bd_support_ok);

    let verdict_ok = analysis
        .base_orbifold()
        .map(|orb| geometric_verdict(&orb).status != VerdictStatus::NotGeometric)
        .unwrap_or(false);
    checks.insert("bf_never_not_geometric", verdict_ok);

    TrialOutcome {
        spec: spec.render(),
        degree: analysis.degree,
        genus: analysis.genus_cover,
        checks,
    }
}

fn oracle_verb(opts: &Options) -> Result<(String, i32), doc::DocError> {
    let mut outcomes = vec![];
    let mut detail: Option<Value> = None;
    let (family_name, q, trials) = if opts.input_path.is_some() || opts.inline.is_some() {
        // single-document mode: also report the full analysis
        let spec = doc::cover_from_str(&read_input(opts)?)?;
        let analysis = spec
            .analyze()
            .map_err(|e| doc::DocError::semantic(e.to_string()))?;
        let family = match &spec {
            CoverSpec::Kummer(_) => "kummer",
            CoverSpec::ArtinSchreier(_) => "artin_schreier",
        };
        let q = spec.field().order() as u64;
        let branch: BTreeMap<String, Value> = analysis
            .branch
            .iter()
            .map(|(place, (e, prof))| {
                (
                    place.render(&analysis.field),
                    json!({"e": e, "profile": profile_json(prof)}),
                )
            })
            .collect();
        let base_orb = analysis
            .base_orbifold()
            .map_err(|e| doc::DocError::semantic(e.to_string()))?;
        detail = Some(json!({
            "branch": branch,
            "genus_cover": analysis.genus_cover,
            "base_orbifold_genus": rat_string(&orbifold_genus(&base_orb)),
            "galois_order": analysis.galois_order,
        }));
        outcomes.push(run_cover_checks(&analysis, &spec));
        (family.to_string(), q, 1)
    } else {
        let family = opts.family.ok_or_else(|| {
            doc::DocError::semantic("oracle needs an input document or --family")
        })?;
        let q = opts.q.unwrap_or(match family {
            CoverFamily::Kummer => 13,
            CoverFamily::ArtinSchreier => 8,
        });
        let field = crate::algebra::Fq::from_order(q)
            .map_err(|e| doc::DocError::semantic(e.to_string()))?;
        let bounds = RandomBounds::default();
        for i in 0..opts.trials {
            let spec = random_cover_spec(family, opts.seed.wrapping_add(i), &field, &bounds)
                .map_err(|e| doc::DocError::semantic(e.to_string()))?;
            let analysis = spec
                .analyze()
                .map_err(|e| doc::DocError::semantic(e.to_string()))?;
            outcomes.push(run_cover_checks(&analysis, &spec));
        }
        (family.name().to_string(), q, opts.trials)
    };

    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let all_passed = passed == outcomes.len();
    let report = json!({
        "v": 1,
        "verb": "oracle",
        "family": family_name,
        "q": q,
        "seed": opts.seed,
        "trials": trials,
        "passed": passed,
        "all_passed": all_passed,
        "detail": detail,
        "results": outcomes.iter().enumerate().map(|(i, o)| json!({
            "trial": i,
            "spec": o.spec,
            "degree": o.degree,
            "genus": o.genus,
            "checks": o.checks,
            "passed": o.passed(),
        })).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    if let Some(d) = &detail {
        text.push_str(&format!(
            "genus of the cover: {}\ng(P1, B_f): {}\nbranch locus: {}\n",
            d["genus_cover"],
            d["base_orbifold_genus"].as_str().unwrap_or("-"),
            d["branch"].as_object().map(|m| m.len()).unwrap_or(0)
        ));
    }
    for (i, o) in outcomes.iter().enumerate() {
        text.push_str(&format!(
            "trial {i}: {} | degree {} genus {} | {}\n",
            o.spec,
            o.degree,
            o.genus,
            if o.passed() { "ok" } else { "FAILED" }
        ));
        if !o.passed() {
            for (name, ok) in &o.checks {
                if !ok {
                    text.push_str(&format!("  failed: {name}\n"));
                }
            }
        }
    }
    text.push_str(&format!("{passed}/{} residual checks passed", outcomes.len()));
    Ok(emit(opts, report, text, if all_passed { 0 } else { 1 }))
}

// --- bundle-check -------------------------------------------------------------

fn bundle_check_verb(opts: &Options) -> Result<(String, i32), doc::DocError> {
    if opts.input_path.is_some() || opts.inline.is_some() {
        let value = doc::parse_value(&read_input(opts)?)?;
        match doc::classify_bundle_doc(&value)? {
            "ledger" => {
                let ledger = doc::ledger_from_value(value)?;
                let report = json!({
                    "v": 1,
                    "verb": "bundle-check",
                    "kind": "ledger",
                    "gamma": ledger.gamma,
                    "rank": ledger.rank,
                    "degree": ledger.degree,
                    "orb_degree": rat_string(&ledger.orb_degree()),
                    "orb_slope": rat_string(&ledger.orb_slope()),
                });
                let text = format!(
                    "ledger bundle: |Gamma| = {}, rank {}, degree {}\norbifold degree: {}\norbifold slope: {}",
                    ledger.gamma,
                    ledger.rank,
                    ledger.degree,
                    crate::rat::rat_display(&ledger.orb_degree()),
                    crate::rat::rat_display(&ledger.orb_slope())
                );
                Ok(emit(opts, report, text, 0))
            }
            _ => {
                let (cover, bundle) = doc::equivariant_from_value(value)?;
                let valid = cocycle_validate(&cover, &bundle);
                let ranks: Option<Vec<usize>> = if valid {
                    pushforward_invariants(&cover, &bundle).ok().map(|inv| inv.ranks)
                } else {
                    None
                };
                let report = json!({
                    "v": 1,
                    "verb": "bundle-check",
                    "kind": "equivariant",
                    "group_order": cover.group().order(),
                    "total_points": cover.total_size(),
                    "base_points": cover.base_size(),
                    "rank": bundle.rank(),
                    "cocycle_valid": valid,
                    "invariant_ranks": ranks.clone(),
                });
                let mut text = format!(
                    "equivariant bundle: |Gamma| = {}, |E| = {}, rank {}\ncocycle valid: {valid}",
                    cover.group().order(),
                    cover.total_size(),
                    bundle.rank()
                );
                if let Some(r) = &ranks {
                    text.push_str(&format!("\ninvariant ranks per base point: {r:?}"));
                }
                // an invalid cocycle is a verdict about the input, not a failure
                Ok(emit(opts, report, text, 0))
            }
        }
    } else {
        // randomized ledger sweep: projection formula and refine invariance
        let mut rng = SplitMix64::new(opts.seed);
        let gammas = [1u64, 2, 3, 4, 6, 8];
        let mut projection_failures = 0u64;
        let mut refine_failures = 0u64;
        for _ in 0..opts.trials {
            let gamma = *rng.pick(&gammas);
            let v = LedgerBundle::new(gamma, rng.range(1, 4), rng.range(0, 18) as i64 - 9)
                .expect("valid ledger");
            let f = LedgerBundle::new(gamma, rng.range(1, 4), rng.range(0, 18) as i64 - 9)
                .expect("valid ledger");
            let dcov = rng.range(1, 4);
            match projection_formula_residual(&v, &f, dcov) {
                Ok((0, 0)) => {}
                _ => projection_failures += 1,
            }
            let k = rng.range(1, 5);
            let r = v.refine(k);
            if r.orb_degree() != v.orb_degree() || r.orb_slope() != v.orb_slope() {
                refine_failures += 1;
            }
        }
        let all_passed = projection_failures == 0 && refine_failures == 0;
        let report = json!({
            "v": 1,
            "verb": "bundle-check",
            "kind": "sweep",
            "seed": opts.seed,
            "trials": opts.trials,
            "projection_failures": projection_failures,
            "refine_failures": refine_failures,
            "all_passed": all_passed,
        });
        let text = format!(
            "ledger sweep: {} trials\nprojection formula failures: {projection_failures}\nrefine invariance failures: {refine_failures}\nall passed: {all_passed}",
            opts.trials
        );
        Ok(emit(opts, report, text, if all_passed { 0 } else { 1 }))
    }
}
