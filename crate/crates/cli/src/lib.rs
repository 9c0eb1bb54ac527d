//! Verb dispatch for the `ringext` command line.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ringext::algebra::{validate_bimodule, validate_ring};
use ringext::ann::{
    check_ann_functor, check_ann_structure, cohomologous_structures, is_regular, structure_to_shukla_cocycle,
    AnnStructure,
};
use ringext::cochain3::{delta2, CoboundaryPair, Family3};
use ringext::factor_sets::{
    build_singular_extension, check_factor_set_with, extract_factor_set, h2_classes, Normalization,
    SingularExtension,
};
use ringext::io::{self, CochainFile, ExtensionFile, FamilyFile, FunctorFile, PreExtensionFile, RingFile};
use ringext::obstruction::{
    are_cohomologous, choose_fg, classify_extensions, compute_obstruction, divergent_readings, gamma_form,
    is_three_cocycle, ka_bimodule, vanish_and_build, validate_pre_extension,
};
use ringext::report::Report;
use ringext::shukla::{build_resolution, comparison_report, cocycle3_check, h3_by_enumeration, h3_small, Agreement, Chain, Products};
use ringext::{Error, Guards};

pub const SCHEMA: &str = "v1";

/// Each verb and the library operation it exposes.
pub const VERBS: &[(&str, &str)] = &[
    ("ring-check", "algebra::validate_ring"),
    ("bimodule-check", "algebra::validate_bimodule"),
    ("factorset-check", "factor_sets::check_factor_set_with"),
    ("ext-build", "factor_sets::build_singular_extension"),
    ("ext-extract", "factor_sets::extract_factor_set"),
    ("h2", "factor_sets::h2_classes"),
    ("pre-check", "obstruction::validate_pre_extension"),
    ("obstruction", "obstruction::compute_obstruction"),
    ("cocycle-check", "obstruction::is_three_cocycle"),
    ("cohomologous", "obstruction::are_cohomologous"),
    ("vanish-build", "obstruction::vanish_and_build"),
    ("classify", "obstruction::classify_extensions"),
    ("resolution-verify", "shukla::build_resolution"),
    ("product-report", "shukla::comparison_report"),
    ("h3", "shukla::h3_small"),
    ("ann-check", "ann::check_ann_structure"),
    ("ann-functor", "ann::check_ann_functor"),
];

#[derive(Debug, Parser)]
#[command(name = "ringext", version, about = "Finite ring extensions, factor sets, obstructions and Ann-categories")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Bound on the number of candidates any exhaustive search may visit.
    #[arg(long, global = true, env = "WORKBENCH_GUARD")]
    pub guard: Option<u64>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the ring axioms of a ring file.
    RingCheck { file: PathBuf },
    /// Check the bimodule axioms of a bimodule file.
    BimoduleCheck { file: PathBuf },
    /// Check relations (1)-(4) for a factor set.
    FactorsetCheck {
        file: PathBuf,
        /// Only require u(0)=0 normalization.
        #[arg(long)]
        relaxed: bool,
    },
    /// Build the singular extension of a factor set.
    ExtBuild { file: PathBuf },
    /// Read off the factor set of a singular extension and section.
    ExtExtract {
        file: PathBuf,
        #[arg(long)]
        relaxed: bool,
    },
    /// Classes of factor sets up to coboundaries.
    H2 { file: PathBuf },
    /// Validate a pre-extension and report K_A and the chosen f, g.
    PreCheck { file: PathBuf },
    /// The obstruction family of a pre-extension.
    Obstruction {
        file: PathBuf,
        /// Also report the Γ-form (α, λ, ρ, Γ).
        #[arg(long)]
        gamma: bool,
    },
    /// Evaluate the eighteen relations on a family.
    CocycleCheck {
        file: PathBuf,
        /// Read the family as a Shukla cocycle (λ negated).
        #[arg(long)]
        shukla: bool,
    },
    /// Search for (ν, μ) with k2 − k1 = δ²(ν, μ).
    Cohomologous { first: PathBuf, second: PathBuf },
    /// Build an extension realizing a pre-extension if its obstruction vanishes.
    VanishBuild { file: PathBuf },
    /// All extensions realizing a pre-extension, up to equivalence.
    Classify { file: PathBuf },
    /// Verify the free resolution of a ring in degrees 0 to 4.
    ResolutionVerify {
        file: PathBuf,
        /// Include generators, differentials and the U4 basis.
        #[arg(long)]
        dump: bool,
    },
    /// Leibniz checks and the U1·U1 comparison table.
    ProductReport { file: PathBuf },
    /// Third cohomology of the tuple complex.
    H3 {
        file: PathBuf,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        enumerate: bool,
        /// Random coboundaries to test against the relations.
        #[arg(long, default_value_t = 32)]
        sweep: usize,
    },
    /// Check an Ann-category structure.
    AnnCheck { file: PathBuf },
    /// Check functor data between two structures, or find it with --find.
    AnnFunctor {
        /// Functor file; omitted with --find.
        #[arg(long)]
        functor: Option<PathBuf>,
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        find: bool,
    },
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::RingCheck { .. } => "ring-check",
            Command::BimoduleCheck { .. } => "bimodule-check",
            Command::FactorsetCheck { .. } => "factorset-check",
            Command::ExtBuild { .. } => "ext-build",
            Command::ExtExtract { .. } => "ext-extract",
            Command::H2 { .. } => "h2",
            Command::PreCheck { .. } => "pre-check",
            Command::Obstruction { .. } => "obstruction",
            Command::CocycleCheck { .. } => "cocycle-check",
            Command::Cohomologous { .. } => "cohomologous",
            Command::VanishBuild { .. } => "vanish-build",
            Command::Classify { .. } => "classify",
            Command::ResolutionVerify { .. } => "resolution-verify",
            Command::ProductReport { .. } => "product-report",
            Command::H3 { .. } => "h3",
            Command::AnnCheck { .. } => "ann-check",
            Command::AnnFunctor { .. } => "ann-functor",
        }
    }
}

/// What a verb produced: pass/fail, JSON fields and text lines.
pub struct Outcome {
    pub ok: bool,
    pub fields: Value,
    pub text: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, fields: Value, text: Vec<String>) -> Self {
        Outcome { ok, fields, text }
    }

    fn from_report(report: &Report, mut fields: Value, mut text: Vec<String>) -> Self {
        fields["violations"] = json!(report.violations);
        text.extend(report_lines(report));
        Outcome { ok: report.is_empty(), fields, text }
    }
}

fn report_lines(report: &Report) -> Vec<String> {
    if report.is_empty() {
        return vec!["no violations".into()];
    }
    let mut out = vec![format!("violations: {}", report.len())];
    for v in &report.violations {
        let mut line = format!("  {} at {:?}", v.rule, v.witness);
        if let Some(d) = &v.detail {
            line.push_str(&format!(" ({d})"));
        }
        out.push(line);
    }
    out
}

/// Exit status and the rendered report.
pub fn run(cli: &Cli) -> (i32, String) {
    let guards = cli.global.guard.map(Guards::with_candidates).unwrap_or_default();
    let verb = cli.command.verb();
    let result = execute(&cli.command, &guards, cli.global.seed);
    let (code, status, body) = match result {
        Ok(o) => {
            let code = if o.ok { 0 } else { 1 };
            (code, if o.ok { "pass" } else { "fail" }, Ok(o))
        }
        Err(e) => {
            let code = exit_code(&e);
            (code, if code == 1 { "fail" } else { "error" }, Err(e))
        }
    };
    let rendered = if cli.global.json {
        let mut v = match &body {
            Ok(o) => o.fields.clone(),
            Err(e) => error_fields(e),
        };
        if !v.is_object() {
            v = json!({ "result": v });
        }
        v["schema"] = json!(SCHEMA);
        v["verb"] = json!(verb);
        v["status"] = json!(status);
        let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        let mut lines = vec![format!("{verb}: {status}")];
        match &body {
            Ok(o) => lines.extend(o.text.iter().cloned()),
            Err(Error::Invalid { context, report }) => {
                lines.push(context.clone());
                lines.extend(report_lines(report));
            }
            Err(e) => lines.push(e.to_string()),
        }
        lines.join("\n") + "\n"
    };
    (code, rendered)
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invalid { .. } | Error::Incoherent { .. } | Error::OutsideBicenter { .. } | Error::Precondition(_) => 1,
        Error::Malformed(_) | Error::Guard { .. } | Error::Unsupported(_) | Error::Json(_) | Error::Io(_) => 2,
    }
}

fn error_fields(e: &Error) -> Value {
    match e {
        Error::Invalid { context, report } => json!({ "error": context, "violations": report.violations }),
        _ => json!({ "error": e.to_string() }),
    }
}

fn table(v: &[usize], n: usize) -> Vec<Vec<usize>> {
    v.chunks(n.max(1)).map(<[usize]>::to_vec).collect()
}

fn family_json(k: &Family3, kind: Option<&str>) -> Value {
    json!(io::family_to_file(k, kind))
}

fn pair_json(c: &CoboundaryPair) -> Value {
    let n = c.module.ring().order();
    json!({ "nu": table(&c.nu, n), "mu": table(&c.mu, n) })
}

fn execute(cmd: &Command, guards: &Guards, seed: u64) -> ringext::Result<Outcome> {
    match cmd {
        Command::RingCheck { file } => {
            let (f, l) = io::load::<RingFile>(file)?;
            let r = l.ring(&io::Ref::Inline(f))?;
            let rep = validate_ring(&r);
            let text = vec![format!("ring {} of order {}", r.name(), r.order())];
            Ok(Outcome::from_report(&rep, json!({ "order": r.order(), "unital": r.one().is_some() }), text))
        }
        Command::BimoduleCheck { file } => {
            let (f, l) = io::load(file)?;
            let m = l.bimodule_file(&f)?;
            let rep = validate_bimodule(&m);
            let text = vec![format!("bimodule over {} on a group of order {}", m.ring().name(), m.group().order())];
            Ok(Outcome::from_report(&rep, json!({ "ring_order": m.ring().order(), "group_order": m.group().order() }), text))
        }
        Command::FactorsetCheck { file, relaxed } => {
            let (f, l) = io::load::<CochainFile>(file)?;
            let c = l.cochain(&f)?;
            let rep = check_factor_set_with(&c, mode(*relaxed));
            Ok(Outcome::from_report(&rep, json!({ "relaxed": relaxed }), vec![]))
        }
        Command::ExtBuild { file } => {
            let (f, l) = io::load::<CochainFile>(file)?;
            let c = l.cochain(&f)?;
            let se = build_singular_extension(&c)?;
            let text = vec![format!("built {} of order {}", se.ext.s.name(), se.ext.s.order())];
            Ok(Outcome::new(true, json!({ "extension": io::extension_to_file(&se.ext, Some(&se.u)) }), text))
        }
        Command::ExtExtract { file, relaxed } => {
            let (f, l) = io::load::<ExtensionFile>(file)?;
            let (ext, u) = l.extension(&f)?;
            let u = u.unwrap_or_else(|| ext.canonical_section());
            let se = SingularExtension::from_extension(ext, u.clone())?;
            let c = extract_factor_set(&se, &u, mode(*relaxed))?;
            let n = c.bimodule.ring().order();
            let text = vec![format!("f = {:?}", table(&c.f, n)), format!("g = {:?}", table(&c.g, n))];
            Ok(Outcome::new(true, json!({ "cochain": io::cochain_to_file(&c), "section": u }), text))
        }
        Command::H2 { file } => {
            let (f, l) = io::load(file)?;
            let m = l.bimodule_file(&f)?;
            let h = h2_classes(&m, guards)?;
            let reps: Vec<Value> = h.representatives.iter().map(|c| json!({ "f": c.f_rows(), "g": c.g_rows() })).collect();
            let mut text = vec![format!("classes: {}", h.count()), format!("cocycles: {}, coboundaries: {}", h.cocycles, h.coboundaries)];
            for (i, c) in h.representatives.iter().enumerate() {
                text.push(format!("  [{i}] f = {:?}, g = {:?}", c.f_rows(), c.g_rows()));
            }
            let fields = json!({ "classes": h.count(), "cocycles": h.cocycles, "coboundaries": h.coboundaries, "representatives": reps });
            Ok(Outcome::new(true, fields, text))
        }
        Command::PreCheck { file } => {
            let (f, l) = io::load::<PreExtensionFile>(file)?;
            let p = l.pre_extension(&f)?;
            let rep = validate_pre_extension(&p);
            if !rep.is_empty() {
                return Ok(Outcome::from_report(&rep, json!({}), vec![]));
            }
            let ka = ka_bimodule(&p)?;
            let (fv, gv) = choose_fg(&p)?;
            let n = p.r.order();
            let divergent: Vec<Value> =
                divergent_readings(&p).into_iter().map(|(x, y, w)| json!({ "args": [x, y], "table": w })).collect();
            let text = vec![
                format!("K_A = {:?}", ka.sub.embed),
                format!("f = {:?}", table(&fv, n)),
                format!("g = {:?}", table(&gv, n)),
                format!("one-sided readings differ at {} place(s)", divergent.len()),
            ];
            let fields = json!({ "ka": ka.sub.embed, "f": table(&fv, n), "g": table(&gv, n), "divergent_readings": divergent });
            Ok(Outcome::from_report(&rep, fields, text))
        }
        Command::Obstruction { file, gamma } => {
            let (f, l) = io::load::<PreExtensionFile>(file)?;
            let p = l.pre_extension(&f)?;
            let rep = validate_pre_extension(&p);
            if !rep.is_empty() {
                return Err(Error::invalid("not a pre-extension", rep));
            }
            let (fv, gv) = choose_fg(&p)?;
            let k = compute_obstruction(&p, &fv, &gv)?;
            let check = is_three_cocycle(&k);
            let n = p.r.order();
            let mut fields = json!({
                "f": table(&fv, n),
                "g": table(&gv, n),
                "obstruction": family_json(&k, None),
                "relations_hold": check.is_empty(),
            });
            if *gamma {
                let gf = gamma_form(&p, &fv, &gv)?;
                fields["gamma_form"] = json!({ "alpha": gf.alpha, "lambda": gf.lambda, "rho": gf.rho, "gamma": gf.gamma });
            }
            let mut text = vec![format!("obstruction is zero: {}", k.is_zero()), "eighteen relations:".into()];
            text.extend(report_lines(&check.combined()));
            Ok(Outcome::new(check.is_empty(), fields, text))
        }
        Command::CocycleCheck { file, shukla } => {
            let (f, l) = io::load::<FamilyFile>(file)?;
            let k = l.family(&f)?;
            let rep = if *shukla { cocycle3_check(&k) } else { is_three_cocycle(&k).combined() };
            let convention = if *shukla { "shukla" } else { "obstruction" };
            Ok(Outcome::from_report(&rep, json!({ "convention": convention }), vec![format!("convention: {convention}")]))
        }
        Command::Cohomologous { first, second } => {
            let k1 = load_family(first)?;
            let k2 = load_family(second)?;
            match are_cohomologous(&k1, &k2, guards)? {
                Some(c) => Ok(Outcome::new(
                    true,
                    json!({ "cohomologous": true, "witness": pair_json(&c) }),
                    vec!["cohomologous: yes".into(), format!("nu = {:?}", c.nu), format!("mu = {:?}", c.mu)],
                )),
                None => Ok(Outcome::new(false, json!({ "cohomologous": false }), vec!["cohomologous: no".into()])),
            }
        }
        Command::VanishBuild { file } => {
            let (f, l) = io::load::<PreExtensionFile>(file)?;
            let p = l.pre_extension(&f)?;
            match vanish_and_build(&p, guards)? {
                Some(v) => {
                    let n = p.r.order();
                    let fields = json!({
                        "vanishes": true,
                        "obstruction": family_json(&v.obstruction, None),
                        "witness": pair_json(&v.witness),
                        "f": table(&v.f, n),
                        "g": table(&v.g, n),
                        "extension": io::extension_to_file(&v.extension, None),
                    });
                    let text = vec![
                        "obstruction vanishes: yes".into(),
                        format!("f = {:?}", table(&v.f, n)),
                        format!("g = {:?}", table(&v.g, n)),
                    ];
                    Ok(Outcome::new(true, fields, text))
                }
                None => Ok(Outcome::new(false, json!({ "vanishes": false }), vec!["obstruction vanishes: no".into()])),
            }
        }
        Command::Classify { file } => {
            let (f, l) = io::load::<PreExtensionFile>(file)?;
            let p = l.pre_extension(&f)?;
            let exts = classify_extensions(&p, guards)?;
            let list: Vec<Value> = exts.iter().map(|e| json!(io::extension_to_file(e, None))).collect();
            let mut text = vec![format!("classes: {}", exts.len())];
            for (i, e) in exts.iter().enumerate() {
                text.push(format!("  [{i}] sigma = {:?}, mul = {:?}", e.sigma, e.s.mul_rows()));
            }
            Ok(Outcome::new(true, json!({ "classes": exts.len(), "extensions": list }), text))
        }
        Command::ResolutionVerify { file, dump } => {
            let r = load_ring(file)?;
            let res = build_resolution(&r)?;
            let complex = res.check_complex();
            let junctions = res.check_exactness();
            let exact = junctions.iter().all(|j| j.exact);
            let ranks: Vec<usize> = res.bases.iter().map(|b| b.len()).collect();
            let mut fields = json!({ "ranks": ranks, "u4_rank": res.u4_basis.len(), "exactness": junctions });
            let mut text = vec![format!("ranks U0..U3: {ranks:?}, U4 rank {}", res.u4_basis.len())];
            for j in &junctions {
                text.push(format!("  exact at {}: {}", j.at, j.exact));
            }
            if *dump {
                let gens: Vec<Vec<String>> =
                    res.bases.iter().map(|b| b.generators().iter().map(|g| g.to_string()).collect()).collect();
                let mats: Vec<Vec<Vec<String>>> = res
                    .d
                    .iter()
                    .map(|m| m.to_nested().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect())
                    .collect();
                let u3 = res.bases[3].len();
                let u4: Vec<Vec<String>> =
                    res.u4_basis.iter().map(|v| v.to_vec(u3).iter().map(|x| x.to_string()).collect()).collect();
                fields["generators"] = json!(gens);
                fields["differentials"] = json!(mats);
                fields["u4_basis"] = json!(u4);
            }
            let mut o = Outcome::from_report(&complex, fields, text);
            o.ok &= exact;
            Ok(o)
        }
        Command::ProductReport { file } => {
            let r = load_ring(file)?;
            let res = build_resolution(&r)?;
            let products = Products::new(&res);
            let mut failures = Vec::new();
            let mut checked = 0usize;
            for (i, j) in [(1, 1), (1, 2), (2, 1)] {
                for a in res.bases[i].generators() {
                    for b in res.bases[j].generators() {
                        let (ca, cb) = (Chain::generator(a.clone()), Chain::generator(b.clone()));
                        checked += 1;
                        if !products.leibniz_holds(&ca, &cb)? {
                            failures.push(format!("{a}·{b}"));
                        }
                    }
                }
            }
            let rows = comparison_report(&products)?;
            let count = |f: &dyn Fn(&ringext::shukla::ComparisonRow) -> bool| rows.iter().filter(|r| f(r)).count();
            let printed_match = count(&|r| r.printed == Agreement::Match);
            let relation_match = count(&|r| r.relation_pattern == Agreement::Match);
            let text = vec![
                format!("Leibniz checks: {checked}, failures: {}", failures.len()),
                format!("printed product formula matches at {printed_match} of {} tuples", rows.len()),
                format!("relation pattern matches at {relation_match} of {} tuples", rows.len()),
            ];
            let fields = json!({
                "leibniz_checked": checked,
                "leibniz_failures": failures,
                "comparison": rows,
                "printed_matches": printed_match,
                "relation_matches": relation_match,
            });
            Ok(Outcome::new(failures.is_empty(), fields, text))
        }
        Command::H3 { file, enumerate, sweep } => {
            let (f, l) = io::load(file)?;
            let m = l.bimodule_file(&f)?;
            let h = h3_small(&m, guards)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mo = m.group().order();
            let mut sweep_failures = 0usize;
            for _ in 0..*sweep {
                let mut c = CoboundaryPair::zero(&m);
                for slot in CoboundaryPair::free_slots(&m) {
                    c.set(slot, rng.gen_range(0..mo));
                }
                if !is_three_cocycle(&delta2(&c)).is_empty() {
                    sweep_failures += 1;
                }
            }
            let reps: Vec<Value> = h.representatives.iter().map(|k| family_json(k, None)).collect();
            let mut fields = json!({
                "order": h.order.to_string(),
                "cocycles": h.cocycles.to_string(),
                "coboundaries": h.coboundaries.to_string(),
                "representatives": reps,
                "lex_least": h.lex_least,
                "coboundary_sweep": { "samples": sweep, "failures": sweep_failures },
            });
            let mut text = vec![
                format!("|H3| = {}", h.order),
                format!("cocycles: {}, coboundaries: {}", h.cocycles, h.coboundaries),
                format!("random coboundaries failing the relations: {sweep_failures} of {sweep}"),
            ];
            let mut ok = sweep_failures == 0;
            if *enumerate {
                let slow = h3_by_enumeration(&m, guards)?;
                let agree = slow.order == h.order && slow.representatives == h.representatives;
                fields["enumeration_agrees"] = json!(agree);
                text.push(format!("brute-force enumeration agrees: {agree}"));
                ok &= agree;
            }
            Ok(Outcome::new(ok, fields, text))
        }
        Command::AnnCheck { file } => {
            let s = load_structure(file)?;
            let rep = check_ann_structure(&s);
            let regular = is_regular(&s);
            let mut fields = json!({ "regular": regular });
            if rep.is_empty() && regular {
                fields["shukla_cocycle"] = family_json(&structure_to_shukla_cocycle(&s)?, None);
            }
            Ok(Outcome::from_report(&rep, fields, vec![format!("regular: {regular}")]))
        }
        Command::AnnFunctor { functor, source, target, find } => {
            let s = load_structure(source)?;
            let s2 = load_structure(target)?;
            if *find {
                return match cohomologous_structures(&s, &s2, guards)? {
                    Some(d) => Ok(Outcome::new(
                        true,
                        json!({ "functor": io::functor_to_file(&d) }),
                        vec![format!("F_plus = {:?}", d.f_plus), format!("F_times = {:?}", d.f_times)],
                    )),
                    None => Ok(Outcome::new(false, json!({ "functor": null }), vec!["no functor of this form".into()])),
                };
            }
            let Some(path) = functor else {
                return Err(Error::malformed("ann-functor needs --functor FILE or --find"));
            };
            let (f, l) = io::load::<FunctorFile>(path)?;
            let d = l.functor(&f)?;
            let rep = check_ann_functor(&d, &s, &s2)?;
            Ok(Outcome::from_report(&rep, json!({}), vec![]))
        }
    }
}

fn mode(relaxed: bool) -> Normalization {
    if relaxed {
        Normalization::Relaxed
    } else {
        Normalization::Strict
    }
}

fn load_ring(path: &Path) -> ringext::Result<ringext::algebra::FinRing> {
    let (f, l) = io::load::<RingFile>(path)?;
    l.ring(&io::Ref::Inline(f))
}

fn load_family(path: &Path) -> ringext::Result<Family3> {
    let (f, l) = io::load::<FamilyFile>(path)?;
    l.family(&f)
}

fn load_structure(path: &Path) -> ringext::Result<AnnStructure> {
    let (f, l) = io::load::<FamilyFile>(path)?;
    l.structure(&f)
}
